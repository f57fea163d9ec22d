#include "bisetcalc/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "bisetcalc/biset.hpp"
#include "bisetcalc/exact_linalg.hpp"

namespace bisetcalc::oracle {

namespace {

bool closed_subset(const FiniteGroup& g, const std::vector<int>& set,
                   const std::vector<char>& in) {
  for (int a : set)
    for (int b : set)
      if (!in[g.mul(a, b)]) return false;
  return true;
}

}  // namespace

std::vector<std::vector<int>> powerset_subgroups(const GroupPtr& G) {
  const auto& g = *G;
  const int n = g.order();
  if (n > 24) throw std::invalid_argument("powerset oracle capped at order 24");

  std::vector<int> others;
  for (int x = 0; x < n; ++x)
    if (x != g.identity()) others.push_back(x);

  std::vector<std::vector<int>> found;
  std::vector<int> pick;
  std::vector<char> in(n, 0);
  in[g.identity()] = 1;

  // choose k-1 non-identity elements for every divisor k of n
  auto scan = [&](auto&& self, size_t start, int remaining) -> void {
    if (remaining == 0) {
      std::vector<int> set{g.identity()};
      set.insert(set.end(), pick.begin(), pick.end());
      std::sort(set.begin(), set.end());
      if (closed_subset(g, set, in)) found.push_back(std::move(set));
      return;
    }
    for (size_t i = start; i + remaining <= others.size() + 1 && i < others.size(); ++i) {
      pick.push_back(others[i]);
      in[others[i]] = 1;
      self(self, i + 1, remaining - 1);
      in[others[i]] = 0;
      pick.pop_back();
    }
  };

  for (int k = 1; k <= n; ++k) {
    if (n % k != 0) continue;
    scan(scan, 0, k - 1);
  }

  std::sort(found.begin(), found.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  return found;
}

namespace {

// Dual group of an abelian group: homomorphisms into roots of unity, found by
// assigning exponents (mod the group exponent) to a generating sequence and
// filling by closure.
std::vector<std::vector<int>> abelian_dual_exponents(const FiniteGroup& g) {
  const int e = g.exponent();
  if (g.order() == 1) return {std::vector<int>{0}};
  auto gens = minimal_generating_sequence(g);
  std::vector<std::vector<int>> homs;
  std::vector<int> choice(gens.size(), 0);

  auto fill = [&](std::vector<int>& expo) -> bool {
    expo.assign(g.order(), -1);
    expo[g.identity()] = 0;
    std::vector<int> list{g.identity()};
    for (size_t t = 0; t < gens.size(); ++t) {
      if (expo[gens[t]] == -1) {
        expo[gens[t]] = choice[t];
        list.push_back(gens[t]);
      } else if (expo[gens[t]] != choice[t]) {
        return false;
      }
    }
    for (size_t i = 0; i < list.size(); ++i)
      for (size_t t = 0; t < gens.size(); ++t) {
        int z = g.mul(list[i], gens[t]);
        int w = (expo[list[i]] + choice[t]) % e;
        if (expo[z] == -1) {
          expo[z] = w;
          list.push_back(z);
        } else if (expo[z] != w) {
          return false;
        }
      }
    return true;
  };

  auto dfs = [&](auto&& self, size_t lvl) -> void {
    if (lvl == gens.size()) {
      std::vector<int> expo;
      if (fill(expo)) homs.push_back(std::move(expo));
      return;
    }
    const int m = g.element_order(gens[lvl]);
    for (int t = 0; t < m; ++t) {
      choice[lvl] = (e / m) * t;  // an m-th root of unity as exponent mod e
      std::vector<int> scratch;
      if (!fill(scratch)) continue;
      self(self, lvl + 1);
    }
  };
  dfs(dfs, 0);
  return homs;
}

Character character_from_values(const GroupPtr& G,
                                std::shared_ptr<const ClassIndex> classes,
                                std::vector<Cyclotomic> values) {
  Character c;
  c.group = G;
  c.classes = std::move(classes);
  c.values = std::move(values);
  return c;
}

}  // namespace

std::vector<Character> linear_characters(const GroupPtr& G) {
  // commutator subgroup
  std::vector<int> comms;
  for (int a = 0; a < G->order(); ++a)
    for (int b = 0; b < G->order(); ++b)
      comms.push_back(G->mul(G->mul(a, b), G->mul(G->inverse(a), G->inverse(b))));
  Subgroup derived = subgroup_closure(G, comms);
  auto [ab, proj] = quotient(G, derived);

  auto classes = conjugacy_classes(G);
  const int e = ab->exponent();
  std::vector<Character> result;
  for (const auto& expo : abelian_dual_exponents(*ab)) {
    std::vector<Cyclotomic> values;
    values.reserve(classes->num_classes());
    for (int c = 0; c < classes->num_classes(); ++c)
      values.push_back(Cyclotomic::root_of_unity(e, expo[proj.apply(classes->rep[c])]));
    result.push_back(character_from_values(G, classes, std::move(values)));
  }
  return result;
}

std::vector<Character> brute_force_character_table(const GroupPtr& G) {
  if (G->order() > 24)
    throw std::invalid_argument("brute-force table oracle capped at order 24");
  const auto& g = *G;
  auto classes = conjugacy_classes(G);
  const int r = classes->num_classes();
  const int e = g.exponent();

  std::vector<Character> pool = linear_characters(G);

  auto subs = subgroups_cached(G);
  // coset permutation characters
  for (const auto& H : subs) {
    std::vector<Cyclotomic> values;
    for (int c = 0; c < r; ++c) {
      int rep = classes->rep[c];
      // fixed cosets xH with rep*x*H = x*H, counted over coset representatives
      std::vector<char> seen(g.order(), 0);
      long fixed = 0;
      for (int x = 0; x < g.order(); ++x) {
        if (seen[x]) continue;
        for (int h : H.elements) seen[g.mul(x, h)] = 1;
        int y = g.mul(rep, x);  // rep * x
        // is y in xH?
        int q = g.mul(g.inverse(x), y);
        if (H.contains(q)) ++fixed;
      }
      values.push_back(Cyclotomic(Rational(fixed)));
    }
    pool.push_back(character_from_values(G, classes, std::move(values)));
  }
  // monomial characters induced from cyclic subgroups
  for (const auto& H : subs) {
    if (H.is_whole_group()) continue;
    auto rl = realize_subgroup(H);
    if (!rl.group->is_cyclic()) continue;
    for (const auto& lambda : linear_characters(rl.group))
      pool.push_back(induce_character(lambda, rl));
  }

  std::vector<Character> found;
  auto norm = [](const Character& c) -> Rational {
    Cyclotomic n = inner_product(c, c);
    return n.as_rational();
  };
  auto reduce = [&](Character c) -> Character {
    for (const auto& chi : found) {
      Cyclotomic m = inner_product(c, chi);
      Rational mr = m.as_rational();
      if (mr == 0) continue;
      for (int i = 0; i < r; ++i) c.values[i] -= chi.values[i].scaled(mr);
    }
    return c;
  };
  auto value_key = [&](const Character& c) {
    std::string key;
    for (const auto& v : c.values) key += v.promoted(std::lcm(v.conductor(), e)).str() + "|";
    return key;
  };

  std::set<std::string> seen_chars;
  std::vector<Character> remainders;
  std::vector<Character> queue = pool;
  int rounds = 0;
  while (static_cast<int>(found.size()) < r) {
    if (++rounds > 12)
      throw std::logic_error("brute-force table oracle failed to split");
    std::vector<Character> next_queue;
    for (auto& psi : queue) {
      Character rem = reduce(std::move(psi));
      if (rem.values.empty()) continue;
      bool zero = true;
      for (const auto& v : rem.values) zero = zero && v.is_zero();
      if (zero) continue;
      Rational n = norm(rem);
      if (n == 1) {
        std::string key = value_key(rem);
        if (seen_chars.insert(key).second) found.push_back(rem);
      } else {
        std::string key = value_key(rem);
        if (seen_chars.insert(key).second) {
          remainders.push_back(rem);
          next_queue.push_back(rem);
        }
      }
      if (static_cast<int>(found.size()) == r) break;
    }
    if (static_cast<int>(found.size()) == r) break;
    // enrich with tensor products
    std::vector<Character> enrich;
    auto add_products = [&](const std::vector<Character>& a,
                            const std::vector<Character>& b) {
      for (const auto& x : a)
        for (const auto& y : b) enrich.push_back(tensor(x, y));
    };
    add_products(remainders, remainders);
    add_products(remainders, found);
    add_products(remainders, pool);
    queue = std::move(next_queue);
    queue.insert(queue.end(), enrich.begin(), enrich.end());
    if (queue.empty())
      throw std::logic_error("brute-force table oracle stalled");
  }

  // canonical order: degree ascending, then descending lexicographic values
  std::sort(found.begin(), found.end(), [&](const Character& a, const Character& b) {
    Rational da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    for (int c = 0; c < r; ++c) {
      int cmp = Cyclotomic::compare_at(a.values[c], b.values[c],
                                       std::lcm(std::lcm(a.values[c].conductor(),
                                                         b.values[c].conductor()),
                                                e));
      if (cmp != 0) return cmp > 0;
    }
    return false;
  });
  return found;
}

namespace {

using CycVector = std::vector<Cyclotomic>;
using CycMatrix = std::vector<CycVector>;

CycVector mat_apply(const CycMatrix& m, const CycVector& v) {
  CycVector out(m.size());
  for (size_t i = 0; i < m.size(); ++i) {
    Cyclotomic acc;
    for (size_t j = 0; j < v.size(); ++j)
      if (!m[i][j].is_zero() && !v[j].is_zero()) acc += m[i][j] * v[j];
    out[i] = std::move(acc);
  }
  return out;
}

// explicit d x d cyclotomic matrices of an irreducible character, cut out of
// the regular representation through a multiplicity-one weight vector
struct MatrixModel {
  int dim = 0;
  std::vector<CycMatrix> rho;  // per element of the group
};

MatrixModel irreducible_model(const GroupPtr& B, const Character& chi) {
  MatrixModel model;
  const long d = chi.degree().get_num().get_si();
  model.dim = static_cast<int>(d);
  const int n = B->order();
  if (d == 1) {
    model.rho.resize(n);
    for (int b = 0; b < n; ++b)
      model.rho[b] = CycMatrix{{chi.at_element(b)}};
    return model;
  }

  // regular representation: L_b e_g = e_{bg}
  auto left_mul = [&](int b, const CycVector& v) {
    CycVector out(n);
    for (int g = 0; g < n; ++g) out[B->mul(b, g)] = v[g];
    return out;
  };

  // isotypic projector column applied to e_id: E e_g0 has coordinates
  // (d/|B|) conj(chi(b)) at position b*g0
  auto isotypic_column = [&](int g0) {
    CycVector col(n);
    for (int b = 0; b < n; ++b)
      col[B->mul(b, g0)] =
          chi.at_element(b).conjugated().scaled(Rational(d, n));
    return col;
  };

  // multiplicity-one weight (cyclic C, linear mu) in the restriction of chi
  Subgroup weight_c;
  Character weight_mu;
  bool found_weight = false;
  for (const auto& C : subgroups_cached(B)) {
    auto rc = realize_subgroup(C);
    if (!rc.group->is_cyclic()) continue;
    Character res = restrict_character(chi, rc);
    for (const auto& mu : linear_characters(rc.group)) {
      if (inner_product(res, mu) == Cyclotomic(Rational(1))) {
        weight_c = C;
        weight_mu = mu;
        found_weight = true;
        break;
      }
    }
    if (found_weight) break;
  }
  if (!found_weight)
    throw std::logic_error("no multiplicity-one weight for the matrix model");

  // weight projector composed with the isotypic projector, applied to e_g0
  auto rcw = realize_subgroup(weight_c);
  CycVector u;
  for (int g0 = 0; g0 < n && u.empty(); ++g0) {
    CycVector base = isotypic_column(g0);
    CycVector acc(n);
    for (int ci = 0; ci < rcw.group->order(); ++ci) {
      int c = rcw.embed.apply(ci);
      CycVector moved = left_mul(c, base);
      Cyclotomic coef = weight_mu.at_element(ci).conjugated()
                            .scaled(Rational(1, rcw.group->order()));
      for (int i = 0; i < n; ++i)
        if (!moved[i].is_zero()) acc[i] += coef * moved[i];
    }
    bool zero = true;
    for (const auto& x : acc) zero = zero && x.is_zero();
    if (!zero) u = std::move(acc);
  }
  if (u.empty()) throw std::logic_error("weight vector vanished");

  // span closure of the cyclic module kB.u
  std::vector<CycVector> basis{u};
  FieldSpan<Cyclotomic> span;
  span.add(u);
  auto gens = minimal_generating_sequence(*B);
  for (size_t head = 0; head < basis.size(); ++head) {
    CycVector cur = basis[head];
    for (int g : gens) {
      CycVector moved = left_mul(g, cur);
      if (span.add(moved)) basis.push_back(std::move(moved));
    }
  }
  if (static_cast<long>(basis.size()) != d)
    throw std::logic_error("cyclic module has unexpected dimension");

  // pick d coordinate rows making the basis matrix invertible, then express
  // L_b basis columns in the basis
  std::vector<size_t> rows;
  {
    FieldSpan<Cyclotomic> row_span;
    for (int i = 0; i < n && static_cast<long>(rows.size()) < d; ++i) {
      CycVector row(d);
      for (long j = 0; j < d; ++j) row[j] = basis[j][i];
      if (row_span.add(row)) rows.push_back(i);
    }
  }
  if (static_cast<long>(rows.size()) != d)
    throw std::logic_error("basis matrix is singular");

  // invert the d x d submatrix A with A[i][j] = basis[j][rows[i]]
  CycMatrix aug(d, CycVector(2 * d));
  for (long i = 0; i < d; ++i) {
    for (long j = 0; j < d; ++j) aug[i][j] = basis[j][rows[i]];
    aug[i][d + i] = Cyclotomic(Rational(1));
  }
  for (long col = 0, row = 0; col < d; ++col, ++row) {
    long pr = -1;
    for (long r2 = row; r2 < d; ++r2)
      if (!aug[r2][col].is_zero()) { pr = r2; break; }
    if (pr < 0) throw std::logic_error("model inversion failed");
    std::swap(aug[row], aug[pr]);
    Cyclotomic inv = aug[row][col].inverse();
    for (auto& x : aug[row]) x = x * inv;
    for (long r2 = 0; r2 < d; ++r2) {
      if (r2 == row || aug[r2][col].is_zero()) continue;
      Cyclotomic f = aug[r2][col];
      for (long c2 = 0; c2 < 2 * d; ++c2) aug[r2][c2] -= f * aug[row][c2];
    }
  }
  CycMatrix ainv(d, CycVector(d));
  for (long i = 0; i < d; ++i)
    for (long j = 0; j < d; ++j) ainv[i][j] = aug[i][d + j];

  model.rho.resize(n);
  for (int b = 0; b < n; ++b) {
    CycMatrix rb(d, CycVector(d));
    for (long j = 0; j < d; ++j) {
      CycVector moved = left_mul(b, basis[j]);
      CycVector picked(d);
      for (long i = 0; i < d; ++i) picked[i] = moved[rows[i]];
      CycVector coords = mat_apply(ainv, picked);
      for (long i = 0; i < d; ++i) rb[i][j] = coords[i];
    }
    // trace check against the character
    Cyclotomic tr;
    for (long i = 0; i < d; ++i) tr += rb[i][i];
    if (tr != chi.at_element(b))
      throw std::logic_error("matrix model trace mismatch");
    model.rho[b] = std::move(rb);
  }
  return model;
}

Character quotient_trace_character(const BisetX& X, const MatrixModel& model) {
  const GroupPtr& outK = X.outK->out;
  const GroupPtr& B = X.outR->out;
  const int d = model.dim;
  const int D = X.size() * d;

  Character result;
  result.group = outK;
  result.classes = conjugacy_classes(outK);

  if (D == 0) {
    result.values.assign(result.classes->num_classes(), Cyclotomic());
    return result;
  }

  // relations x.w (x) v_i - x (x) rho(w) v_i for generators w
  FieldSpan<Cyclotomic> relations;
  std::vector<int> gens = minimal_generating_sequence(*B);
  for (int w : gens) {
    for (int x = 0; x < X.size(); ++x) {
      int xw = X.right_action[x][w];
      for (int i = 0; i < d; ++i) {
        CycVector r(D);
        r[xw * d + i] += Cyclotomic(Rational(1));
        for (int j = 0; j < d; ++j) {
          if (model.rho[w][j][i].is_zero()) continue;
          r[x * d + j] -= model.rho[w][j][i];
        }
        relations.add(std::move(r));
      }
    }
  }

  std::vector<char> is_pivot(D, 0);
  for (size_t p : relations.pivots()) is_pivot[p] = 1;

  // image of each basis vector in the quotient, computed once
  std::vector<CycVector> reduced(D);
  std::vector<char> have(D, 0);
  auto reduced_unit = [&](int col) -> const CycVector& {
    if (!have[col]) {
      CycVector v(D);
      v[col] = Cyclotomic(Rational(1));
      relations.reduce_inplace(v);
      reduced[col] = std::move(v);
      have[col] = 1;
    }
    return reduced[col];
  };

  for (int c = 0; c < result.classes->num_classes(); ++c) {
    int u = result.classes->rep[c];
    Cyclotomic trace;
    for (int x = 0; x < X.size(); ++x) {
      int ux = X.left_action[u][x];
      for (int i = 0; i < d; ++i) {
        int col = x * d + i;
        if (is_pivot[col]) continue;  // not a quotient basis vector
        trace += reduced_unit(ux * d + i)[col];
      }
    }
    result.values.push_back(std::move(trace));
  }
  return result;
}

}  // namespace

Character tensor_module_character(const BisetX& X, const Character& V) {
  const GroupPtr& B = X.outR->out;
  auto table = character_table(B);

  Character total;
  total.group = X.outK->out;
  total.classes = conjugacy_classes(X.outK->out);
  total.values.assign(total.classes->num_classes(), Cyclotomic());

  for (const auto& chi : table->irreducibles) {
    long long mult = multiplicity(V, chi);
    if (mult == 0) continue;
    MatrixModel model = irreducible_model(B, chi);
    Character part = quotient_trace_character(X, model);
    for (size_t c = 0; c < total.values.size(); ++c)
      total.values[c] += part.values[c].scaled(Rational(static_cast<long>(mult)));
  }
  return total;
}

}  // namespace bisetcalc::oracle
