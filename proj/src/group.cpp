#include "bisetcalc/group.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "bisetcalc/limits.hpp"

namespace bisetcalc {

namespace {

std::atomic<int> g_closure_cap{5000};
std::atomic<int> g_enumeration_cap{200};

uint64_t fnv1a(const std::vector<uint16_t>& data, uint64_t seed) {
  uint64_t h = 14695981039346656037ull ^ seed;
  for (uint16_t v : data) {
    h ^= static_cast<uint64_t>(v & 0xff);
    h *= 1099511628211ull;
    h ^= static_cast<uint64_t>(v >> 8);
    h *= 1099511628211ull;
  }
  return h;
}

struct VecHash {
  size_t operator()(const std::vector<int>& v) const {
    uint64_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<uint64_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<size_t>(h);
  }
};

}  // namespace

int Limits::closure_cap() { return g_closure_cap.load(); }
int Limits::enumeration_cap() { return g_enumeration_cap.load(); }
void Limits::set_closure_cap(int n) { g_closure_cap.store(n); }
void Limits::set_enumeration_cap(int n) { g_enumeration_cap.store(n); }

GroupPtr FiniteGroup::from_table(const std::vector<std::vector<int>>& mul,
                                 std::string label) {
  const int n = static_cast<int>(mul.size());
  if (n == 0) throw std::invalid_argument("empty multiplication table");
  if (n > 65535) throw std::invalid_argument("group too large");
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->order_ = n;
  g->label_ = std::move(label);
  g->mul_.resize(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(mul[a].size()) != n)
      throw std::invalid_argument("ragged multiplication table");
    for (int b = 0; b < n; ++b) {
      int v = mul[a][b];
      if (v < 0 || v >= n) throw std::invalid_argument("table entry out of range");
      g->mul_[static_cast<size_t>(a) * n + b] = static_cast<uint16_t>(v);
    }
  }

  // latin square property
  for (int a = 0; a < n; ++a) {
    std::vector<char> seen_row(n, 0), seen_col(n, 0);
    for (int b = 0; b < n; ++b) {
      int r = g->mul(a, b), c = g->mul(b, a);
      if (seen_row[r]++ || seen_col[c]++)
        throw std::invalid_argument("multiplication table is not a latin square");
    }
  }

  // identity
  int id = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = g->mul(e, x) == x && g->mul(x, e) == x;
    if (ok) { id = e; break; }
  }
  if (id < 0) throw std::invalid_argument("no two-sided identity");
  g->identity_ = id;

  // inverses
  g->inverse_.resize(n);
  for (int x = 0; x < n; ++x) {
    int inv = -1;
    for (int y = 0; y < n; ++y)
      if (g->mul(x, y) == id && g->mul(y, x) == id) { inv = y; break; }
    if (inv < 0) throw std::invalid_argument("element without two-sided inverse");
    g->inverse_[x] = static_cast<uint16_t>(inv);
  }

  // exhaustive associativity at desk scale
  if (n <= 200) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const int ab = g->mul(a, b);
        for (int c = 0; c < n; ++c)
          if (g->mul(ab, c) != g->mul(a, g->mul(b, c)))
            throw std::invalid_argument("multiplication table is not associative");
      }
  }

  // element orders, exponent, abelian flag
  g->elt_order_.resize(n);
  long long expo = 1;
  int max_order = 1;
  for (int x = 0; x < n; ++x) {
    int k = 1, y = x;
    while (y != id) { y = g->mul(y, x); ++k; }
    g->elt_order_[x] = static_cast<uint16_t>(k);
    expo = std::lcm(expo, static_cast<long long>(k));
    max_order = std::max(max_order, k);
  }
  g->exponent_ = static_cast<int>(expo);
  g->max_element_order_ = max_order;
  g->abelian_ = true;
  for (int a = 0; a < n && g->abelian_; ++a)
    for (int b = a + 1; b < n; ++b)
      if (g->mul(a, b) != g->mul(b, a)) { g->abelian_ = false; break; }

  g->hash_ = fnv1a(g->mul_, static_cast<uint64_t>(n));
  return g;
}

int FiniteGroup::power(int x, long long k) const {
  const int m = element_order(x);
  long long r = k % m;
  if (r < 0) r += m;
  int acc = identity_;
  for (long long i = 0; i < r; ++i) acc = mul(acc, x);
  return acc;
}

bool GroupHom::is_valid() const {
  const auto& s = *source;
  const auto& t = *target;
  if (static_cast<int>(image.size()) != s.order()) return false;
  for (int v : image)
    if (v < 0 || v >= t.order()) return false;
  if (image[s.identity()] != t.identity()) return false;
  for (int a = 0; a < s.order(); ++a)
    for (int b = 0; b < s.order(); ++b)
      if (image[s.mul(a, b)] != t.mul(image[a], image[b])) return false;
  return true;
}

bool GroupHom::is_bijective() const {
  if (source->order() != target->order()) return false;
  std::vector<char> seen(target->order(), 0);
  for (int v : image)
    if (seen[v]++) return false;
  return true;
}

GroupHom GroupHom::inverted() const {
  GroupHom r;
  r.source = target;
  r.target = source;
  r.image.assign(target->order(), -1);
  for (int x = 0; x < source->order(); ++x) r.image[image[x]] = x;
  for (int v : r.image)
    if (v < 0) throw std::invalid_argument("homomorphism is not bijective");
  return r;
}

GroupHom GroupHom::compose(const GroupHom& f, const GroupHom& g) {
  GroupHom r;
  r.source = g.source;
  r.target = f.target;
  r.image.resize(g.image.size());
  for (size_t i = 0; i < g.image.size(); ++i) r.image[i] = f.image[g.image[i]];
  return r;
}

bool Subgroup::contains(int x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

int OutGroup::aut_index(const std::vector<int>& image) const {
  for (size_t i = 0; i < aut_maps.size(); ++i)
    if (aut_maps[i].image == image) return static_cast<int>(i);
  return -1;
}

GroupPtr group_from_generators(int degree,
                               const std::vector<std::vector<int>>& generators,
                               std::string label) {
  if (degree <= 0) throw std::invalid_argument("degree must be positive");
  for (const auto& p : generators) {
    if (static_cast<int>(p.size()) != degree)
      throw std::invalid_argument("generator degree mismatch");
    std::vector<char> seen(degree, 0);
    for (int v : p) {
      if (v < 0 || v >= degree || seen[v]++)
        throw std::invalid_argument("generator is not a permutation");
    }
  }

  std::vector<int> ident(degree);
  for (int i = 0; i < degree; ++i) ident[i] = i;

  const int cap = Limits::closure_cap();
  std::vector<std::vector<int>> elements;
  std::unordered_map<std::vector<int>, int, VecHash> index;
  elements.push_back(ident);
  index.emplace(ident, 0);
  // breadth-first from the identity, generators in input order
  for (size_t head = 0; head < elements.size(); ++head) {
    const std::vector<int> cur = elements[head];
    for (const auto& gen : generators) {
      std::vector<int> prod(degree);
      for (int i = 0; i < degree; ++i) prod[i] = cur[gen[i]];
      if (index.emplace(prod, static_cast<int>(elements.size())).second) {
        elements.push_back(std::move(prod));
        if (static_cast<int>(elements.size()) > cap)
          throw std::invalid_argument("group too large");
      }
    }
  }

  const int n = static_cast<int>(elements.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> prod(degree);
      for (int i = 0; i < degree; ++i) prod[i] = elements[a][elements[b][i]];
      table[a][b] = index.at(prod);
    }
  return FiniteGroup::from_table(table, std::move(label));
}

Subgroup subgroup_closure(const GroupPtr& G, std::vector<int> elements) {
  const auto& g = *G;
  std::vector<char> in(g.order(), 0);
  std::vector<int> list;
  auto add = [&](int x) {
    if (!in[x]) { in[x] = 1; list.push_back(x); }
  };
  add(g.identity());
  for (int x : elements) {
    if (x < 0 || x >= g.order()) throw std::invalid_argument("element out of range");
    add(x);
  }
  for (size_t i = 0; i < list.size(); ++i) {
    for (size_t j = 0; j < list.size(); ++j) {
      add(g.mul(list[i], list[j]));
      add(g.mul(list[j], list[i]));
    }
    add(g.inverse(list[i]));
  }
  std::sort(list.begin(), list.end());
  return Subgroup{G, std::move(list)};
}

std::vector<Subgroup> subgroups(const GroupPtr& G) {
  const auto& g = *G;
  if (g.order() > Limits::enumeration_cap())
    throw std::invalid_argument("order cap exceeded for subgroup enumeration");

  std::map<std::vector<int>, Subgroup> known;
  auto remember = [&](Subgroup s) -> bool {
    auto key = s.elements;
    return known.emplace(std::move(key), std::move(s)).second;
  };

  // cyclic bottom layer
  for (int x = 0; x < g.order(); ++x) remember(subgroup_closure(G, {x}));

  // extend each known subgroup by one outside coset representative
  std::vector<std::vector<int>> work;
  for (const auto& [k, s] : known) work.push_back(k);
  for (size_t head = 0; head < work.size(); ++head) {
    const std::vector<int> elems = work[head];
    std::vector<char> in(g.order(), 0);
    for (int x : elems) in[x] = 1;
    for (int x = 0; x < g.order(); ++x) {
      if (in[x]) continue;
      // only minimal representatives of right cosets S·x
      bool minimal = true;
      for (int s : elems)
        if (g.mul(s, x) < x) { minimal = false; break; }
      if (!minimal) continue;
      auto ext = elems;
      ext.push_back(x);
      Subgroup t = subgroup_closure(G, ext);
      auto key = t.elements;
      if (remember(std::move(t))) work.push_back(std::move(key));
    }
  }

  std::vector<Subgroup> result;
  result.reserve(known.size());
  for (auto& [k, s] : known) result.push_back(s);
  std::sort(result.begin(), result.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements < b.elements;
  });
  return result;
}

bool is_subgroup_normal(const Subgroup& N, const Subgroup& H) {
  for (int h : H.elements)
    for (int n : N.elements)
      if (!N.contains(H.parent->conj(h, n))) return false;
  return true;
}

bool is_normal_in_group(const GroupPtr& G, const Subgroup& N) {
  for (int h = 0; h < G->order(); ++h)
    for (int n : N.elements)
      if (!N.contains(G->conj(h, n))) return false;
  return true;
}

std::pair<GroupPtr, GroupHom> quotient(const GroupPtr& H, const Subgroup& N) {
  if (N.parent.get() != H.get())
    throw std::invalid_argument("subgroup does not belong to the given group");
  if (!is_normal_in_group(H, N))
    throw std::invalid_argument("not a normal subgroup");

  const auto& g = *H;
  std::vector<int> coset_of(g.order(), -1);
  std::vector<int> coset_min;
  for (int x = 0; x < g.order(); ++x) {
    if (coset_of[x] >= 0) continue;
    int idx = static_cast<int>(coset_min.size());
    int mn = x;
    for (int n : N.elements) {
      int y = g.mul(x, n);
      coset_of[y] = idx;
      mn = std::min(mn, y);
    }
    coset_min.push_back(mn);
  }
  // order cosets by minimal member
  const int q = static_cast<int>(coset_min.size());
  std::vector<int> perm(q);
  for (int i = 0; i < q; ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(),
            [&](int a, int b) { return coset_min[a] < coset_min[b]; });
  std::vector<int> rank(q);
  for (int i = 0; i < q; ++i) rank[perm[i]] = i;
  std::vector<int> rep(q);
  for (int x = 0; x < g.order(); ++x) coset_of[x] = rank[coset_of[x]];
  for (int i = 0; i < q; ++i) rep[rank[i]] = coset_min[i];

  std::vector<std::vector<int>> table(q, std::vector<int>(q));
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) table[a][b] = coset_of[g.mul(rep[a], rep[b])];

  GroupPtr Q = FiniteGroup::from_table(table);
  GroupHom proj{H, Q, std::vector<int>(coset_of.begin(), coset_of.end())};
  return {Q, std::move(proj)};
}

std::vector<int> minimal_generating_sequence(const FiniteGroup& G) {
  std::vector<int> gens;
  std::vector<char> in(G.order(), 0);
  in[G.identity()] = 1;
  int covered = 1;
  std::vector<int> list{G.identity()};
  while (covered < G.order()) {
    int best = -1, best_order = -1;
    for (int x = 0; x < G.order(); ++x)
      if (!in[x] && G.element_order(x) > best_order) {
        best = x;
        best_order = G.element_order(x);
      }
    gens.push_back(best);
    // close
    list.push_back(best);
    in[best] = 1;
    for (size_t i = 0; i < list.size(); ++i)
      for (size_t j = 0; j < list.size(); ++j) {
        int y = G.mul(list[i], list[j]);
        if (!in[y]) { in[y] = 1; list.push_back(y); }
      }
    covered = static_cast<int>(list.size());
  }
  return gens;
}

std::vector<GroupHom> isomorphisms(const GroupPtr& A, const GroupPtr& B) {
  std::vector<GroupHom> result;
  const auto& a = *A;
  const auto& b = *B;
  if (a.order() != b.order()) return result;
  {
    std::vector<int> pa(a.order()), pb(b.order());
    for (int i = 0; i < a.order(); ++i) pa[i] = a.element_order(i);
    for (int i = 0; i < b.order(); ++i) pb[i] = b.element_order(i);
    std::sort(pa.begin(), pa.end());
    std::sort(pb.begin(), pb.end());
    if (pa != pb) return result;
  }
  if (a.order() == 1) {
    result.push_back(GroupHom{A, B, {b.identity()}});
    return result;
  }

  const std::vector<int> gens = minimal_generating_sequence(a);
  const int k = static_cast<int>(gens.size());

  // candidates per level, filtered by element order
  std::vector<std::vector<int>> candidates(k);
  for (int lvl = 0; lvl < k; ++lvl)
    for (int y = 0; y < b.order(); ++y)
      if (b.element_order(y) == a.element_order(gens[lvl]))
        candidates[lvl].push_back(y);

  std::vector<int> images(k, -1);

  // Fill the image array on <gens[0..lvl]> by breadth-first closure, checking
  // consistency on every (element, generator) product. A conflict-free fill
  // is a homomorphism on the generated subgroup.
  auto try_fill = [&](int lvl, std::vector<int>& img) -> bool {
    img.assign(a.order(), -1);
    std::vector<char> used(b.order(), 0);
    img[a.identity()] = b.identity();
    used[b.identity()] = 1;
    std::vector<int> list{a.identity()};
    for (int t = 0; t <= lvl; ++t) {
      int x = gens[t], y = images[t];
      if (img[x] == -1) {
        if (used[y]) return false;
        img[x] = y;
        used[y] = 1;
        list.push_back(x);
      } else if (img[x] != y) {
        return false;
      }
    }
    for (size_t i = 0; i < list.size(); ++i) {
      for (int t = 0; t <= lvl; ++t) {
        int z = a.mul(list[i], gens[t]);
        int w = b.mul(img[list[i]], images[t]);
        if (img[z] == -1) {
          if (used[w]) return false;
          img[z] = w;
          used[w] = 1;
          list.push_back(z);
        } else if (img[z] != w) {
          return false;
        }
      }
    }
    return true;
  };

  std::vector<int> scratch;
  auto dfs = [&](auto&& self, int lvl) -> void {
    if (lvl == k) {
      std::vector<int> img;
      if (try_fill(k - 1, img)) {
        for (int v : img)
          if (v < 0) return;  // generators failed to span; cannot happen
        result.push_back(GroupHom{A, B, std::move(img)});
      }
      return;
    }
    for (int y : candidates[lvl]) {
      images[lvl] = y;
      if (!try_fill(lvl, scratch)) continue;
      self(self, lvl + 1);
    }
    images[lvl] = -1;
  };
  dfs(dfs, 0);
  return result;
}

OutGroup out_group(const GroupPtr& H) {
  if (H->order() > Limits::enumeration_cap())
    throw std::invalid_argument("order cap exceeded for automorphism enumeration");
  OutGroup og;
  og.base = H;
  og.aut_maps = isomorphisms(H, H);
  const int n = static_cast<int>(og.aut_maps.size());

  std::unordered_map<std::vector<int>, int, VecHash> index;
  for (int i = 0; i < n; ++i) index.emplace(og.aut_maps[i].image, i);

  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<int> comp(H->order());
      for (int x = 0; x < H->order(); ++x)
        comp[x] = og.aut_maps[i].image[og.aut_maps[j].image[x]];
      auto it = index.find(comp);
      if (it == index.end())
        throw std::logic_error("automorphism set not closed under composition");
      table[i][j] = it->second;
    }
  og.aut = FiniteGroup::from_table(table);

  std::vector<int> inn_elements;
  {
    std::vector<char> seen(n, 0);
    for (int h = 0; h < H->order(); ++h) {
      std::vector<int> c(H->order());
      for (int x = 0; x < H->order(); ++x) c[x] = H->conj(h, x);
      int idx = index.at(c);
      if (!seen[idx]) { seen[idx] = 1; inn_elements.push_back(idx); }
    }
    std::sort(inn_elements.begin(), inn_elements.end());
  }
  og.inn = Subgroup{og.aut, std::move(inn_elements)};

  auto [out, proj] = quotient(og.aut, og.inn);
  og.out = out;
  og.proj = std::move(proj);
  og.section.assign(out->order(), -1);
  for (int i = 0; i < n; ++i) {
    int o = og.proj.image[i];
    if (og.section[o] < 0) og.section[o] = i;  // minimal aut index per coset
  }
  return og;
}

RealizedSubgroup realize_subgroup(const Subgroup& S) {
  const auto& g = *S.parent;
  const int m = S.order();
  std::vector<int> index_in(g.order(), -1);
  for (int i = 0; i < m; ++i) index_in[S.elements[i]] = i;
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int p = g.mul(S.elements[i], S.elements[j]);
      int q = index_in[p];
      if (q < 0) throw std::invalid_argument("element set is not closed");
      table[i][j] = q;
    }
  RealizedSubgroup r;
  r.group = FiniteGroup::from_table(table);
  r.embed = GroupHom{r.group, S.parent, S.elements};
  r.index_in = std::move(index_in);
  return r;
}

namespace {
std::mutex g_memo_mutex;
std::map<uint64_t, std::shared_ptr<const std::vector<std::vector<int>>>>
    g_subgroup_memo;
std::map<uint64_t, std::shared_ptr<const OutGroup>> g_out_memo;
}  // namespace

std::vector<Subgroup> subgroups_cached(const GroupPtr& G) {
  std::shared_ptr<const std::vector<std::vector<int>>> sets;
  {
    std::lock_guard<std::mutex> lock(g_memo_mutex);
    auto it = g_subgroup_memo.find(G->table_hash());
    if (it != g_subgroup_memo.end()) sets = it->second;
  }
  if (!sets) {
    auto fresh = std::make_shared<std::vector<std::vector<int>>>();
    for (auto& s : subgroups(G)) fresh->push_back(std::move(s.elements));
    std::lock_guard<std::mutex> lock(g_memo_mutex);
    auto [it, inserted] = g_subgroup_memo.emplace(G->table_hash(), fresh);
    sets = it->second;
  }
  std::vector<Subgroup> result;
  result.reserve(sets->size());
  for (const auto& els : *sets) result.push_back(Subgroup{G, els});
  return result;
}

std::shared_ptr<const OutGroup> out_group_cached(const GroupPtr& H) {
  {
    std::lock_guard<std::mutex> lock(g_memo_mutex);
    auto it = g_out_memo.find(H->table_hash());
    if (it != g_out_memo.end()) return it->second;
  }
  auto computed = std::make_shared<const OutGroup>(out_group(H));
  std::lock_guard<std::mutex> lock(g_memo_mutex);
  auto [it, inserted] = g_out_memo.emplace(H->table_hash(), computed);
  return it->second;
}

}  // namespace bisetcalc
