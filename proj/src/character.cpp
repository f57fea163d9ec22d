#include "bisetcalc/character.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <stdexcept>

#include "bisetcalc/cache.hpp"
#include "bisetcalc/exact_linalg.hpp"

namespace bisetcalc {

std::shared_ptr<const ClassIndex> conjugacy_classes(const GroupPtr& G) {
  const auto& g = *G;
  auto idx = std::make_shared<ClassIndex>();
  idx->group = G;
  idx->class_of.assign(g.order(), -1);

  std::vector<std::vector<int>> raw;
  for (int x = 0; x < g.order(); ++x) {
    if (idx->class_of[x] >= 0) continue;
    std::vector<int> orbit;
    std::vector<char> seen(g.order(), 0);
    for (int h = 0; h < g.order(); ++h) {
      int y = g.conj(h, x);
      if (!seen[y]) { seen[y] = 1; orbit.push_back(y); }
    }
    std::sort(orbit.begin(), orbit.end());
    int tmp = static_cast<int>(raw.size());
    for (int y : orbit) idx->class_of[y] = tmp;
    raw.push_back(std::move(orbit));
  }

  // canonical order: (element order, class size, minimal member)
  std::vector<int> perm(raw.size());
  for (size_t i = 0; i < raw.size(); ++i) perm[i] = static_cast<int>(i);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    int oa = g.element_order(raw[a][0]), ob = g.element_order(raw[b][0]);
    if (oa != ob) return oa < ob;
    if (raw[a].size() != raw[b].size()) return raw[a].size() < raw[b].size();
    return raw[a][0] < raw[b][0];
  });
  std::vector<int> rank(raw.size());
  for (size_t i = 0; i < raw.size(); ++i) rank[perm[i]] = static_cast<int>(i);

  idx->members.resize(raw.size());
  idx->rep.resize(raw.size());
  idx->size.resize(raw.size());
  for (size_t i = 0; i < raw.size(); ++i) {
    idx->members[rank[i]] = raw[i];
    idx->rep[rank[i]] = raw[i][0];
    idx->size[rank[i]] = static_cast<int>(raw[i].size());
  }
  for (int x = 0; x < g.order(); ++x) idx->class_of[x] = rank[idx->class_of[x]];

  idx->inverse_class.resize(raw.size());
  for (int c = 0; c < idx->num_classes(); ++c)
    idx->inverse_class[c] = idx->class_of[g.inverse(idx->rep[c])];
  return idx;
}

bool Character::is_trivial() const {
  for (const auto& v : values)
    if (!v.is_rational() || v.as_rational() != 1) return false;
  return true;
}

Character trivial_character(const GroupPtr& G) {
  Character chi;
  chi.group = G;
  chi.classes = conjugacy_classes(G);
  chi.values.assign(chi.classes->num_classes(), Cyclotomic(Rational(1)));
  return chi;
}

Cyclotomic inner_product(const Character& chi, const Character& psi) {
  if (chi.group->table_hash() != psi.group->table_hash() ||
      chi.group->order() != psi.group->order())
    throw std::invalid_argument("inner product needs characters of one group");
  const auto& cls = *chi.classes;
  Cyclotomic acc;
  for (int c = 0; c < cls.num_classes(); ++c) {
    Cyclotomic term = chi.values[c] * psi.values[c].conjugated();
    acc += term.scaled(Rational(cls.size[c]));
  }
  return acc.scaled(Rational(1, chi.group->order()));
}

long long multiplicity(const Character& chi, const Character& irreducible) {
  Cyclotomic m = inner_product(chi, irreducible);
  if (!m.is_rational())
    throw std::logic_error("multiplicity is not rational");
  Rational r = m.as_rational();
  r.canonicalize();
  if (r.get_den() != 1 || r < 0)
    throw std::logic_error("multiplicity is not a non-negative integer");
  return static_cast<long long>(r.get_num().get_si());
}

Character transport_character(const Character& chi, const GroupHom& iso) {
  GroupHom inv = iso.inverted();
  Character out;
  out.group = iso.target;
  out.classes = conjugacy_classes(iso.target);
  out.values.reserve(out.classes->num_classes());
  for (int c = 0; c < out.classes->num_classes(); ++c) {
    int pre = inv.apply(out.classes->rep[c]);
    out.values.push_back(chi.at_element(pre));
  }
  return out;
}

Character tensor(const Character& a, const Character& b) {
  Character out = a;
  for (int c = 0; c < out.classes->num_classes(); ++c)
    out.values[c] = a.values[c] * b.values[c];
  return out;
}

Character induce_character(const Character& chi, const RealizedSubgroup& sub) {
  const GroupPtr& H = sub.embed.target;
  const auto& h = *H;
  Character out;
  out.group = H;
  out.classes = conjugacy_classes(H);
  const int Lorder = sub.group->order();
  for (int c = 0; c < out.classes->num_classes(); ++c) {
    int rep = out.classes->rep[c];
    Cyclotomic acc;
    for (int x = 0; x < h.order(); ++x) {
      int y = h.mul(h.mul(h.inverse(x), rep), x);  // x^-1 rep x
      int local = sub.index_in[y];
      if (local < 0) continue;
      acc += chi.at_element(local);
    }
    out.values.push_back(acc.scaled(Rational(1, Lorder)));
  }
  return out;
}

Character restrict_character(const Character& chi, const RealizedSubgroup& sub) {
  Character out;
  out.group = sub.group;
  out.classes = conjugacy_classes(sub.group);
  for (int c = 0; c < out.classes->num_classes(); ++c)
    out.values.push_back(chi.at_element(sub.embed.apply(out.classes->rep[c])));
  return out;
}

// ---------------------------------------------------------------------------
// Dixon's method: diagonalize the commuting class-multiplication matrices
// over a prime field F_p with p = 1 (mod exponent) and p > 2 sqrt(|G|) |G|,
// then lift eigenvalue multiplicities to exact cyclotomic values.
// ---------------------------------------------------------------------------

namespace {

using u64 = unsigned long long;

long long mod_pow(long long b, long long e, long long p) {
  long long r = 1;
  b %= p;
  while (e > 0) {
    if (e & 1) r = static_cast<long long>(static_cast<__int128>(r) * b % p);
    b = static_cast<long long>(static_cast<__int128>(b) * b % p);
    e >>= 1;
  }
  return r;
}

long long mod_inv(long long a, long long p) { return mod_pow(a, p - 2, p); }

bool is_prime_ll(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

long long dixon_prime(int exponent, long long lower_bound) {
  long long p = exponent + 1;
  while (p <= lower_bound || !is_prime_ll(p)) p += exponent;
  return p;
}

long long primitive_root(long long p) {
  // factor p-1 by trial division
  std::vector<long long> primes;
  long long m = p - 1;
  for (long long d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      primes.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) primes.push_back(m);
  for (long long g = 2; g < p; ++g) {
    bool ok = true;
    for (long long q : primes)
      if (mod_pow(g, (p - 1) / q, p) == 1) { ok = false; break; }
    if (ok) return g;
  }
  throw std::logic_error("no primitive root found");
}

using ModMatrix = std::vector<std::vector<long long>>;

// characteristic polynomial mod p via Hessenberg reduction
std::vector<long long> char_poly_mod(ModMatrix m, long long p) {
  const size_t n = m.size();
  // reduce to upper Hessenberg by similarity transformations
  for (size_t k = 1; k + 1 < n; ++k) {
    size_t piv = SIZE_MAX;
    for (size_t i = k; i < n; ++i)
      if (m[i][k - 1] != 0) { piv = i; break; }
    if (piv == SIZE_MAX) continue;
    if (piv != k) {
      std::swap(m[piv], m[k]);
      for (size_t i = 0; i < n; ++i) std::swap(m[i][piv], m[i][k]);
    }
    long long inv = mod_inv(m[k][k - 1], p);
    for (size_t i = k + 1; i < n; ++i) {
      if (m[i][k - 1] == 0) continue;
      long long f = static_cast<long long>(static_cast<__int128>(m[i][k - 1]) * inv % p);
      // row_i -= f * row_k ; col_k += f * col_i
      for (size_t j = 0; j < n; ++j)
        m[i][j] = ((m[i][j] - static_cast<__int128>(f) * m[k][j]) % p + p) % p;
      for (size_t j = 0; j < n; ++j)
        m[j][k] = static_cast<long long>((m[j][k] + static_cast<__int128>(f) * m[j][i]) % p);
    }
  }
  // p_i(x) over the leading principal Hessenberg minors
  std::vector<std::vector<long long>> polys(n + 1);
  polys[0] = {1};
  for (size_t i = 1; i <= n; ++i) {
    // (x - m[i-1][i-1]) * p_{i-1}
    const auto& prev = polys[i - 1];
    std::vector<long long> cur(i + 1, 0);
    for (size_t j = 0; j < prev.size(); ++j) {
      cur[j + 1] = (cur[j + 1] + prev[j]) % p;
      cur[j] = ((cur[j] - static_cast<__int128>(m[i - 1][i - 1]) * prev[j]) % p + p) % p;
    }
    long long run = 1;
    for (size_t t = 2; t <= i; ++t) {
      run = static_cast<long long>(static_cast<__int128>(run) * m[i - t + 1][i - t] % p);
      if (m[i - t][i - 1] == 0 || run == 0) {
        if (run == 0) break;
        continue;
      }
      long long coef = static_cast<long long>(static_cast<__int128>(run) * m[i - t][i - 1] % p);
      const auto& lower = polys[i - t];
      for (size_t j = 0; j < lower.size(); ++j)
        cur[j] = ((cur[j] - static_cast<__int128>(coef) * lower[j]) % p + p) % p;
    }
    polys[i] = std::move(cur);
  }
  return polys[n];
}

std::vector<long long> nullspace_vector_mod(ModMatrix m, long long p) {
  // returns one nonzero kernel vector, empty when none or kernel dim > 1
  const size_t n = m.size();
  std::vector<size_t> pivot_col;
  size_t row = 0;
  for (size_t col = 0; col < n && row < n; ++col) {
    size_t pr = SIZE_MAX;
    for (size_t r = row; r < n; ++r)
      if (m[r][col] != 0) { pr = r; break; }
    if (pr == SIZE_MAX) continue;
    std::swap(m[row], m[pr]);
    long long inv = mod_inv(m[row][col], p);
    for (size_t c = 0; c < n; ++c)
      m[row][c] = static_cast<long long>(static_cast<__int128>(m[row][c]) * inv % p);
    for (size_t r = 0; r < n; ++r) {
      if (r == row || m[r][col] == 0) continue;
      long long f = m[r][col];
      for (size_t c = 0; c < n; ++c)
        m[r][c] = ((m[r][c] - static_cast<__int128>(f) * m[row][c]) % p + p) % p;
    }
    pivot_col.push_back(col);
    ++row;
  }
  if (pivot_col.size() != n - 1) return {};
  std::vector<char> is_pivot(n, 0);
  for (size_t c : pivot_col) is_pivot[c] = 1;
  size_t free_col = 0;
  while (is_pivot[free_col]) ++free_col;
  std::vector<long long> v(n, 0);
  v[free_col] = 1;
  for (size_t r = 0; r < pivot_col.size(); ++r)
    v[pivot_col[r]] = (p - m[r][free_col]) % p;
  return v;
}

struct DixonContext {
  long long p = 0;
  long long root = 0;  // primitive e-th root of unity mod p
  int exponent = 1;
};

}  // namespace

namespace {

CharacterTable compute_character_table(const GroupPtr& G) {
  const auto& g = *G;
  auto classes = conjugacy_classes(G);
  const int r = classes->num_classes();
  const int e = g.exponent();

  CharacterTable table;
  table.group = G;
  table.classes = classes;
  table.conductor = e;

  if (g.order() == 1) {
    table.irreducibles.push_back(trivial_character(G));
    return table;
  }

  DixonContext ctx;
  ctx.exponent = e;
  {
    long long bound = 1;
    while (bound * bound < 4ll * g.order() * g.order() * g.order()) ++bound;
    // p > 2 sqrt(|G|) |G|
    ctx.p = dixon_prime(e, bound);
  }
  const long long p = ctx.p;
  ctx.root = mod_pow(primitive_root(p), (p - 1) / e, p);

  // class multiplication coefficients: a[i][j][k] with
  // C_i C_j = sum_k a_{ijk} C_k; eigenvector rows are the central characters.
  std::vector<ModMatrix> M(r, ModMatrix(r, std::vector<long long>(r, 0)));
  for (int k = 0; k < r; ++k) {
    int z = classes->rep[k];
    for (int i = 0; i < r; ++i)
      for (int x : classes->members[i]) {
        int y = g.mul(g.inverse(x), z);
        ++M[i][classes->class_of[y]][k];
      }
  }

  const int id_class = classes->class_of[g.identity()];

  std::vector<std::vector<long long>> omegas;
  std::mt19937_64 rng(0x5eedc0de);
  bool ok = false;
  for (int attempt = 0; attempt < 32 && !ok; ++attempt) {
    ModMatrix mix(r, std::vector<long long>(r, 0));
    for (int i = 0; i < r; ++i) {
      long long t = static_cast<long long>(rng() % static_cast<u64>(p));
      for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
          mix[a][b] = static_cast<long long>(
              (mix[a][b] + static_cast<__int128>(t) * M[i][a][b]) % p);
    }
    auto poly = char_poly_mod(mix, p);
    // distinct roots by scanning F_p with Horner
    std::vector<long long> roots;
    for (long long lam = 0; lam < p; ++lam) {
      __int128 acc = 0;
      for (size_t j = poly.size(); j-- > 0;) acc = (acc * lam + poly[j]) % p;
      if (acc == 0) roots.push_back(lam);
      if (static_cast<int>(roots.size()) > r) break;
    }
    if (static_cast<int>(roots.size()) != r) continue;
    omegas.clear();
    ok = true;
    for (long long lam : roots) {
      ModMatrix shifted = mix;
      for (int i = 0; i < r; ++i) shifted[i][i] = (shifted[i][i] - lam % p + p) % p;
      auto v = nullspace_vector_mod(shifted, p);
      if (v.empty() || v[id_class] == 0) { ok = false; break; }
      long long scale = mod_inv(v[id_class], p);
      for (auto& x : v) x = static_cast<long long>(static_cast<__int128>(x) * scale % p);
      omegas.push_back(std::move(v));
    }
  }
  if (!ok) throw std::logic_error("class-sum eigenvector search failed");

  // degrees and value tables mod p
  std::vector<long long> class_size_inv(r);
  for (int c = 0; c < r; ++c) class_size_inv[c] = mod_inv(classes->size[c], p);

  // power map per class
  std::vector<std::vector<int>> power_class(r);
  for (int c = 0; c < r; ++c) {
    int m = g.element_order(classes->rep[c]);
    power_class[c].resize(m);
    int y = g.identity();
    for (int l = 0; l < m; ++l) {
      power_class[c][l] = classes->class_of[y];
      y = g.mul(y, classes->rep[c]);
    }
  }

  std::vector<Character> chars;
  long long degree_check = 0;
  for (const auto& omega : omegas) {
    long long s = 0;
    for (int c = 0; c < r; ++c) {
      s = static_cast<long long>(
          (s + static_cast<__int128>(omega[c]) * omega[classes->inverse_class[c]] % p *
                   class_size_inv[c]) %
          p);
    }
    long long d2 = static_cast<long long>(static_cast<__int128>(g.order()) % p * mod_inv(s, p) % p);
    long long d = -1;
    for (long long cand = 1; cand * cand <= g.order(); ++cand)
      if (static_cast<long long>(static_cast<__int128>(cand) * cand % p) == d2) {
        d = cand;
        break;
      }
    if (d < 0) throw std::logic_error("degree reconstruction failed");
    degree_check += d * d;

    std::vector<long long> x(r);
    for (int c = 0; c < r; ++c)
      x[c] = static_cast<long long>(static_cast<__int128>(d) * omega[c] % p *
                                    class_size_inv[c] % p);

    Character chi;
    chi.group = G;
    chi.classes = classes;
    chi.values.resize(r);
    for (int c = 0; c < r; ++c) {
      const int m = g.element_order(classes->rep[c]);
      const long long zm = mod_pow(ctx.root, e / m, p);
      const long long zm_inv = mod_inv(zm, p);
      const long long m_inv = mod_inv(m, p);
      Cyclotomic value = Cyclotomic::zero_at(e);
      for (int j = 0; j < m; ++j) {
        __int128 acc = 0;
        long long w = 1;  // zm^{-j*l}
        const long long step = mod_pow(zm_inv, j, p);
        for (int l = 0; l < m; ++l) {
          acc = (acc + static_cast<__int128>(x[power_class[c][l]]) * w) % p;
          w = static_cast<long long>(static_cast<__int128>(w) * step % p);
        }
        long long mult = static_cast<long long>(static_cast<__int128>(acc % p) * m_inv % p);
        if (mult > d)
          throw std::logic_error("eigenvalue multiplicity lift out of range");
        if (mult != 0)
          value += Cyclotomic::root_of_unity(e, static_cast<long long>(j) * (e / m))
                       .scaled(Rational(static_cast<long>(mult)));
      }
      chi.values[c] = std::move(value);
    }
    if (!chi.values[id_class].is_rational() ||
        chi.values[id_class].as_rational() != Rational(static_cast<long>(d)))
      throw std::logic_error("lifted degree mismatch");
    chars.push_back(std::move(chi));
  }
  if (degree_check != g.order())
    throw std::logic_error("degree sum check failed");

  // canonical order: degree ascending, then descending lexicographic values
  std::sort(chars.begin(), chars.end(), [&](const Character& a, const Character& b) {
    Rational da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    for (int c = 0; c < r; ++c) {
      int cmp = Cyclotomic::compare_at(a.values[c], b.values[c], e);
      if (cmp != 0) return cmp > 0;
    }
    return false;
  });
  table.irreducibles = std::move(chars);
  return table;
}

void verify_table(const CharacterTable& table) {
  const int r = table.classes->num_classes();
  if (static_cast<int>(table.irreducibles.size()) != r)
    throw std::logic_error("character table verification failed: table size");
  const auto& g = *table.group;
  Rational degree_sum(0);
  for (const auto& chi : table.irreducibles) degree_sum += chi.degree() * chi.degree();
  if (degree_sum != Rational(g.order()))
    throw std::logic_error("character table verification failed: degree sum");
  // row orthogonality
  for (int i = 0; i < r; ++i)
    for (int j = i; j < r; ++j) {
      Cyclotomic ip = inner_product(table.irreducibles[i], table.irreducibles[j]);
      if (!ip.is_rational() || ip.as_rational() != Rational(i == j ? 1 : 0))
        throw std::logic_error("character table verification failed: row orthogonality");
    }
  // column orthogonality
  for (int c = 0; c < r; ++c)
    for (int d = c; d < r; ++d) {
      Cyclotomic acc;
      for (const auto& chi : table.irreducibles)
        acc += chi.values[c] * chi.values[d].conjugated();
      Rational expect =
          c == d ? Rational(g.order(), table.classes->size[c]) : Rational(0);
      expect.canonicalize();
      if (!acc.is_rational() || acc.as_rational() != expect)
        throw std::logic_error("character table verification failed: column orthogonality");
    }
}

std::mutex g_table_mutex;
std::map<uint64_t, std::shared_ptr<const CharacterTable>> g_table_memo;
std::vector<GroupPtr> g_table_registry;

}  // namespace

std::shared_ptr<const CharacterTable> character_table(const GroupPtr& G) {
  {
    std::lock_guard<std::mutex> lock(g_table_mutex);
    auto it = g_table_memo.find(G->table_hash());
    if (it != g_table_memo.end()) return it->second;
  }
  std::shared_ptr<const CharacterTable> result;
  if (auto cached = TableCache::load(G)) {
    auto table = std::make_shared<CharacterTable>(std::move(*cached));
    try {
      verify_table(*table);
      result = table;
    } catch (...) {
      result.reset();  // stale or corrupt cache entry: recompute
    }
  }
  if (!result) {
    auto table = std::make_shared<CharacterTable>(compute_character_table(G));
    verify_table(*table);
    TableCache::store(*table);
    result = table;
  }
  std::lock_guard<std::mutex> lock(g_table_mutex);
  auto [it, inserted] = g_table_memo.emplace(G->table_hash(), result);
  if (inserted) g_table_registry.push_back(G);
  return it->second;
}

std::vector<GroupPtr> character_table_registry() {
  std::lock_guard<std::mutex> lock(g_table_mutex);
  return g_table_registry;
}

RationalBasis rational_character_basis(const GroupPtr& H) {
  RationalBasis basis;
  basis.table = character_table(H);
  const auto& irr = basis.table->irreducibles;
  const int r = static_cast<int>(irr.size());
  const int e = basis.table->conductor;

  std::vector<int> orbit_of(r, -1);
  for (int i = 0; i < r; ++i) {
    if (orbit_of[i] >= 0) continue;
    int orbit = static_cast<int>(basis.sums.size());
    Character sum = irr[i];
    orbit_of[i] = orbit;
    for (int a = 2; a < e || (e == 1 && a < 2); ++a) {
      if (std::gcd(a, e) != 1) continue;
      // sigma_a applied to the values
      std::vector<Cyclotomic> conj_values;
      conj_values.reserve(irr[i].values.size());
      for (const auto& v : irr[i].values) conj_values.push_back(v.galois(a));
      int match = -1;
      for (int j = 0; j < r; ++j) {
        if (irr[j].values == conj_values) { match = j; break; }
      }
      if (match < 0) throw std::logic_error("galois conjugate missing from table");
      if (orbit_of[match] < 0) {
        orbit_of[match] = orbit;
        for (size_t c = 0; c < sum.values.size(); ++c)
          sum.values[c] += irr[match].values[c];
      }
    }
    basis.sums.push_back(std::move(sum));
    basis.rep_char.push_back(i);
  }
  // rationality check
  for (const auto& s : basis.sums)
    for (const auto& v : s.values) {
      if (!v.is_rational())
        throw std::logic_error("galois orbit sum is not rational");
      Rational r2 = v.as_rational();
      r2.canonicalize();
      if (r2.get_den() != 1)
        throw std::logic_error("galois orbit sum is not integral");
    }
  return basis;
}

std::vector<Character> rational_irreducibles(const GroupPtr& H) {
  return rational_character_basis(H).sums;
}

namespace {

// coordinates of a rational character in the orbit-sum basis
RatVector rational_coordinates(const Character& chi, const RationalBasis& basis) {
  RatVector v;
  v.reserve(basis.sums.size());
  for (size_t i = 0; i < basis.sums.size(); ++i) {
    Cyclotomic m = inner_product(chi, basis.table->irreducibles[basis.rep_char[i]]);
    if (!m.is_rational())
      throw std::logic_error("rational character has irrational coordinate");
    v.push_back(m.as_rational());
  }
  return v;
}

}  // namespace

ArtinQuotient artin_quotient_dim(const GroupPtr& H) {
  RationalBasis basis = rational_character_basis(H);
  const int t = static_cast<int>(basis.sums.size());

  RatSpan image;
  for (const auto& L : subgroups_cached(H)) {
    if (L.is_whole_group()) continue;
    auto rl = realize_subgroup(L);
    for (const auto& psi : rational_irreducibles(rl.group)) {
      Character ind = induce_character(psi, rl);
      image.add(rational_coordinates(ind, basis));
      if (image.rank() == t) break;
    }
    if (image.rank() == t) break;
  }

  ArtinQuotient q;
  q.dimension = t - image.rank();
  q.out_action_trivial = true;
  if (q.dimension > 0) {
    auto og = out_group_cached(H);
    for (int o = 0; o < og->out->order() && q.out_action_trivial; ++o) {
      const GroupHom& alpha = og->section_map(o);
      GroupHom inv = alpha.inverted();
      for (int i = 0; i < t && q.out_action_trivial; ++i) {
        // (alpha - id) applied to the i-th basis sum must land in the image
        const Character& s = basis.sums[i];
        Character moved = s;
        for (int c = 0; c < s.classes->num_classes(); ++c)
          moved.values[c] = s.at_element(inv.apply(s.classes->rep[c]));
        RatVector delta = rational_coordinates(moved, basis);
        RatVector orig = rational_coordinates(s, basis);
        for (int j = 0; j < t; ++j) delta[j] -= orig[j];
        bool zero = true;
        for (const auto& x : delta) zero = zero && x == 0;
        if (!zero && !image.contains(delta)) q.out_action_trivial = false;
      }
    }
  }
  return q;
}

int codef_krq_dim(const GroupPtr& H) {
  RationalBasis basis = rational_character_basis(H);
  const auto classes = basis.table->classes;
  const int t = static_cast<int>(basis.sums.size());

  // columns: classes whose representative generates a proper subgroup
  std::vector<int> cols;
  for (int c = 0; c < classes->num_classes(); ++c)
    if (H->element_order(classes->rep[c]) != H->order()) cols.push_back(c);
  if (cols.empty()) return t;  // trivial group: no vanishing constraints

  RatMatrix m(t, RatVector(cols.size(), Rational(0)));
  for (int i = 0; i < t; ++i)
    for (size_t j = 0; j < cols.size(); ++j)
      m[i][j] = basis.sums[i].values[cols[j]].as_rational();
  // left kernel of the restriction-to-columns map
  RatMatrix mt(cols.size(), RatVector(t, Rational(0)));
  for (int i = 0; i < t; ++i)
    for (size_t j = 0; j < cols.size(); ++j) mt[j][i] = m[i][j];
  return rat_nullspace_dim(mt);
}

int PairIndex::pair_of(int class_index, int char_index) const {
  for (int i = 0; i < num_pairs(); ++i)
    if (pairs[i].class_index == class_index && pairs[i].char_index == char_index)
      return i;
  return -1;
}

PairIndex build_pair_index(const GroupPtr& G) {
  PairIndex idx;
  idx.G = G;
  idx.classes = iso_class_index(G);
  const int n = idx.classes.num_classes();
  idx.outs.reserve(n);
  idx.out_tables.reserve(n);
  for (int i = 0; i < n; ++i) {
    idx.outs.push_back(out_group_cached(idx.classes.reps[i]));
    idx.out_tables.push_back(character_table(idx.outs.back()->out));
    const int chars = static_cast<int>(idx.out_tables.back()->irreducibles.size());
    for (int c = 0; c < chars; ++c) idx.pairs.push_back(SimplePair{i, c});
  }
  return idx;
}

std::vector<SimplePair> simple_pairs(const GroupPtr& G) {
  return build_pair_index(G).pairs;
}

}  // namespace bisetcalc
