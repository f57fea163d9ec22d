#include "bisetcalc/decomposition.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "bisetcalc/catalog.hpp"

namespace bisetcalc {

const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::diagonal_one: return "diagonal_one";
    case Provenance::not_a_quotient: return "not_a_quotient";
    case Provenance::cyclic_theorem: return "cyclic_theorem";
    case Provenance::burnside_lemma: return "burnside_lemma";
    case Provenance::simple_group_theorem: return "simple_group_theorem";
    case Provenance::trivial_group: return "trivial_group";
    case Provenance::e2_computation: return "e2_computation";
    case Provenance::nabla_bound: return "nabla_bound";
  }
  return "?";
}

namespace {

bool is_simple_group(const GroupPtr& H) {
  if (H->order() == 1) return false;
  for (const auto& N : subgroups_cached(H)) {
    if (N.order() == 1 || N.is_whole_group()) continue;
    if (is_normal_in_group(H, N)) return false;
  }
  return true;
}

bool is_p_group(const GroupPtr& H, int* prime = nullptr) {
  int n = H->order();
  if (n == 1) return false;
  int p = 2;
  while (n % p != 0) ++p;
  while (n % p == 0) n /= p;
  if (prime) *prime = p;
  return n == 1;
}

bool is_elementary_rank2(const GroupPtr& H, int* prime) {
  int p = 0;
  if (!is_p_group(H, &p)) return false;
  if (H->order() != p * p || !H->is_abelian() || H->is_cyclic()) return false;
  if (prime) *prime = p;
  return true;
}

long long exact_multiplicity(const Character& chi, const Character& irr) {
  return multiplicity(chi, irr);
}

// Per-ambient-G computation state shared across rows.
class MatrixBuilder {
 public:
  explicit MatrixBuilder(const PairIndex& index) : index_(index) {}

  std::vector<DecompEntry> row(int pair) {
    const int cls = index_.pairs[pair].class_index;
    const GroupPtr& H = index_.classes.reps[cls];
    if (H->order() == 1) return trivial_row(pair);
    if (H->is_cyclic()) return cyclic_row(index_, cls, index_.pairs[pair].char_index);
    if (is_simple_group(H))
      return simple_group_row(index_, cls, index_.pairs[pair].char_index);
    return general_row(pair);
  }

  std::string annotation(int pair) const {
    const int cls = index_.pairs[pair].class_index;
    const GroupPtr& H = index_.classes.reps[cls];
    const Character& V = index_.pair_character(pair);
    if (is_p_group(H) && V.is_trivial())
      return "p-group row with trivial module: at least two entries are "
             "nonzero (second summand not computed here)";
    return {};
  }

  bool quotient_supported(int row_cls, int col_cls) {
    auto key = std::make_pair(row_cls, col_cls);
    auto it = support_.find(key);
    if (it != support_.end()) return it->second;
    bool ok = !quotients_iso_to(index_.classes.reps[row_cls],
                                index_.classes.reps[col_cls])
                   .empty();
    support_.emplace(key, ok);
    return ok;
  }

  const Character& induced_at(int pair, int col_cls) {
    auto key = std::make_pair(pair, col_cls);
    auto it = induced_.find(key);
    if (it != induced_.end()) return it->second;
    AtomicModule atom{index_.pairs[pair].class_index, index_.pair_character(pair)};
    Character val = ind_rho_nabla(index_, atom, col_cls);
    return induced_.emplace(key, std::move(val)).first->second;
  }

 private:
  std::vector<DecompEntry> trivial_row(int pair) {
    std::vector<DecompEntry> row(index_.num_pairs(),
                                 DecompEntry{0, EntryStatus::exact,
                                             Provenance::not_a_quotient});
    row[pair] = DecompEntry{1, EntryStatus::exact, Provenance::trivial_group};
    return row;
  }

  std::vector<DecompEntry> general_row(int pair) {
    const int row_cls = index_.pairs[pair].class_index;
    const GroupPtr& H = index_.classes.reps[row_cls];
    const Character& V = index_.pair_character(pair);

    std::vector<DecompEntry> row(index_.num_pairs());
    int e2_prime = 0;
    const bool e2_case = is_elementary_rank2(H, &e2_prime) && V.is_trivial();

    for (int col = 0; col < index_.num_pairs(); ++col) {
      const int col_cls = index_.pairs[col].class_index;
      const Character& W = index_.pair_character(col);
      if (col_cls == row_cls) {
        row[col] = DecompEntry{index_.pairs[col].char_index ==
                                       index_.pairs[pair].char_index
                                   ? 1ll
                                   : 0ll,
                               EntryStatus::exact, Provenance::diagonal_one};
        continue;
      }
      if (!quotient_supported(row_cls, col_cls)) {
        row[col] = DecompEntry{0, EntryStatus::exact, Provenance::not_a_quotient};
        continue;
      }
      if (index_.classes.reps[col_cls]->order() == 1) {
        row[col] = burnside_multiplicity(H, V);
        continue;
      }
      if (e2_case && index_.classes.reps[col_cls]->order() == e2_prime &&
          W.is_trivial()) {
        const E2Report report = e2(e2_prime);
        row[col] = DecompEntry{report.n_Cp1, EntryStatus::exact,
                               Provenance::e2_computation};
        continue;
      }
      long long bound = exact_multiplicity(induced_at(pair, col_cls), W);
      row[col] = DecompEntry{bound, EntryStatus::upper_bound,
                             Provenance::nabla_bound};
    }
    return row;
  }

  const E2Report& e2(int p) {
    auto it = e2_.find(p);
    if (it != e2_.end()) return it->second;
    return e2_.emplace(p, e2_report(p)).first->second;
  }

  const PairIndex& index_;
  std::map<std::pair<int, int>, bool> support_;
  std::map<std::pair<int, int>, Character> induced_;
  std::map<int, E2Report> e2_;
};

}  // namespace

DecompEntry bound_entry(const PairIndex& index, int row_pair, int col_pair) {
  if (row_pair < 0 || row_pair >= index.num_pairs() || col_pair < 0 ||
      col_pair >= index.num_pairs())
    throw std::invalid_argument("pair index out of range");
  const int row_cls = index.pairs[row_pair].class_index;
  const int col_cls = index.pairs[col_pair].class_index;
  if (row_cls == col_cls)
    return DecompEntry{index.pairs[row_pair].char_index ==
                               index.pairs[col_pair].char_index
                           ? 1ll
                           : 0ll,
                       EntryStatus::exact, Provenance::diagonal_one};
  if (quotients_iso_to(index.classes.reps[row_cls], index.classes.reps[col_cls])
          .empty())
    return DecompEntry{0, EntryStatus::exact, Provenance::not_a_quotient};
  AtomicModule atom{row_cls, index.pair_character(row_pair)};
  Character induced = ind_rho_nabla(index, atom, col_cls);
  long long value = exact_multiplicity(induced, index.pair_character(col_pair));
  return DecompEntry{value, EntryStatus::upper_bound, Provenance::nabla_bound};
}

DecompEntry burnside_multiplicity(const GroupPtr& H, const Character& V) {
  if (!(inner_product(V, V) == Cyclotomic(Rational(1))))
    throw std::invalid_argument("module must be irreducible over Out(H)");
  const bool expected = H->is_cyclic() && V.is_trivial();
  // the lemma's proof route: the invariant space of the Artin quotient
  ArtinQuotient q = artin_quotient_dim(H);
  if (H->is_cyclic()) {
    if (q.dimension != 1 || !q.out_action_trivial)
      throw std::logic_error("artin quotient disagrees with the burnside rule");
  } else if (q.dimension != 0) {
    throw std::logic_error("artin quotient nonzero for a non-cyclic group");
  }
  return DecompEntry{expected ? 1ll : 0ll, EntryStatus::exact,
                     Provenance::burnside_lemma};
}

namespace {

// match a foreign class representative against the index's classes
int matching_class(const PairIndex& index, const GroupPtr& rep) {
  for (int j = 0; j < index.classes.num_classes(); ++j) {
    if (index.classes.reps[j]->order() != rep->order()) continue;
    if (!isomorphisms(rep, index.classes.reps[j]).empty()) return j;
  }
  return -1;
}

// index of a character among the irreducibles of an out table
int matching_char(const CharacterTable& table, const Character& chi) {
  for (size_t i = 0; i < table.irreducibles.size(); ++i) {
    const auto& cand = table.irreducibles[i];
    if (cand.values.size() != chi.values.size()) continue;
    bool same = true;
    for (size_t c = 0; c < cand.values.size() && same; ++c)
      same = cand.values[c] == chi.values[c];
    if (same) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace

std::vector<DecompEntry> cyclic_row(const PairIndex& index, int class_C,
                                    int char_V) {
  const GroupPtr& C = index.classes.reps[class_C];
  if (!C->is_cyclic()) throw std::invalid_argument("class is not cyclic");

  // the restriction lemma allows computing inside the ambient C itself
  PairIndex local = build_pair_index(C);
  const int top = local.classes.num_classes() - 1;
  if (local.classes.reps[top]->table_hash() != C->table_hash())
    throw std::logic_error("ambient top class is not the group itself");
  const Character& V = index.out_tables[class_C]->irreducibles[char_V];
  AtomicModule atom{top, V};

  std::vector<DecompEntry> row(index.num_pairs(),
                               DecompEntry{0, EntryStatus::exact,
                                           Provenance::not_a_quotient});
  for (int lcls = 0; lcls < local.classes.num_classes(); ++lcls) {
    Character induced = ind_rho_nabla(local, atom, lcls);
    const int gcls = matching_class(index, local.classes.reps[lcls]);
    if (gcls < 0) throw std::logic_error("quotient class missing from the index");
    auto isos = isomorphisms(index.classes.reps[gcls], local.classes.reps[lcls]);
    const auto& ltable = local.out_tables[lcls];
    for (size_t w = 0; w < ltable->irreducibles.size(); ++w) {
      long long value = multiplicity(induced, ltable->irreducibles[w]);
      // transport W onto the enclosing index's out group
      Character moved = transport_out_character(
          ltable->irreducibles[w], isos.front(), *index.outs[gcls],
          *local.outs[lcls]);
      int gw = matching_char(*index.out_tables[gcls], moved);
      if (gw < 0) throw std::logic_error("transported module missing from table");
      row[index.pair_of(gcls, gw)] =
          DecompEntry{value, EntryStatus::exact, Provenance::cyclic_theorem};
    }
  }
  return row;
}

std::vector<DecompEntry> simple_group_row(const PairIndex& index, int class_H,
                                          int char_V) {
  const GroupPtr& H = index.classes.reps[class_H];
  if (!is_simple_group(H)) throw std::invalid_argument("class is not simple");
  const Character& V = index.out_tables[class_H]->irreducibles[char_V];

  std::vector<DecompEntry> row(index.num_pairs(),
                               DecompEntry{0, EntryStatus::exact,
                                           Provenance::not_a_quotient});
  for (int col = 0; col < index.num_pairs(); ++col) {
    if (index.pairs[col].class_index != class_H) continue;
    row[col] = DecompEntry{index.pairs[col].char_index == char_V ? 1ll : 0ll,
                           EntryStatus::exact, Provenance::simple_group_theorem};
  }
  row[index.pair_of(0, 0)] = burnside_multiplicity(H, V);
  return row;
}

E2Report e2_report(int p) {
  {
    bool prime = p >= 2;
    for (int d = 2; d * d <= p; ++d)
      if (p % d == 0) prime = false;
    if (!prime || p > 13)
      throw std::invalid_argument("e2_report requires a prime p <= 13");
  }
  E2Report report;
  report.p = p;
  GroupPtr E2 = elementary_abelian_rank2(p);

  // A_0..A_p: the order-p subgroups in canonical order
  std::vector<Subgroup> lines;
  for (const auto& s : subgroups_cached(E2))
    if (s.order() == p) lines.push_back(s);
  const int n = p + 1;
  if (static_cast<int>(lines.size()) != n)
    throw std::logic_error("unexpected subgroup count for E2");

  for (int i = 0; i < n; ++i)
    report.basis_labels.push_back("Tin_{A" + std::to_string(i) + "}(x)1");
  for (int j = 0; j < n; ++j)
    report.basis_labels.push_back("Tin_{Q" + std::to_string(j) + "}(x)1");

  // the four case formulas:
  //   Res_{A_k} Tin_{A_j} = p [k=j],    Res_{A_k} Tin_{Q_j} = [k != j],
  //   Def_{Q_k} Tin_{A_j} = [k != j],   Def_{Q_k} Tin_{Q_j} = [k=j].
  report.C.assign(2 * n, std::vector<long long>(2 * n, 0));
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < n; ++j) {
      report.C[k][j] = (k == j) ? p : 0;
      report.C[k][n + j] = (k != j) ? 1 : 0;
      report.C[n + k][j] = (k != j) ? 1 : 0;
      report.C[n + k][n + j] = (k == j) ? 1 : 0;
    }
  }
  // block shape [[pI, A],[A, I]] with A = J - I
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (report.C[a][b] != (a == b ? p : 0) ||
          report.C[a][n + b] != (a == b ? 0 : 1) ||
          report.C[n + a][b] != (a == b ? 0 : 1) ||
          report.C[n + a][n + b] != (a == b ? 1 : 0))
        throw std::logic_error("coefficient matrix is out of shape");
    }

  RatMatrix cmat(2 * n, RatVector(2 * n));
  for (int a = 0; a < 2 * n; ++a)
    for (int b = 0; b < 2 * n; ++b) cmat[a][b] = Rational(report.C[a][b]);
  report.detC = det_bareiss(cmat);

  {
    Rational closed(p);
    if (p % 2 == 1) closed = -closed;
    Rational base(1 - p);
    for (int i = 0; i < p + 1; ++i) closed *= base;
    closed.canonicalize();
    report.detC_closed_form = closed;
  }

  // joint kernel of the restriction functionals only
  RatMatrix res_rows(n, RatVector(2 * n));
  for (int k = 0; k < n; ++k)
    for (int b = 0; b < 2 * n; ++b) res_rows[k][b] = Rational(report.C[k][b]);
  report.kernel_dim = rat_nullspace_dim(res_rows);

  // the full automorphism group permutes the lines; the matrix [[a,b],[c,d]]
  // sends e1^i e2^j to e1^(ai+cj) e2^(bi+dj)
  std::vector<int> line_of(E2->order(), -1);
  for (int i = 0; i < n; ++i)
    for (int x : lines[i].elements)
      if (x != E2->identity()) line_of[x] = i;

  // orbit structure of the coordinate permutations sigma + sigma
  std::vector<int> parent(2 * n);
  for (int i = 0; i < 2 * n; ++i) parent[i] = i;
  auto find = [&](auto&& self, int x) -> int {
    return parent[x] == x ? x : parent[x] = self(self, parent[x]);
  };
  auto unite = [&](int a, int b) {
    a = find(find, a);
    b = find(find, b);
    if (a != b) parent[a] = b;
  };

  bool verified_sample = false;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c)
        for (int d = 0; d < p; ++d) {
          if ((a * d - b * c) % p == 0) continue;
          std::vector<int> image(E2->order());
          for (int i = 0; i < p; ++i)
            for (int j = 0; j < p; ++j)
              image[i * p + j] = ((a * i + c * j) % p) * p + (b * i + d * j) % p;
          if (!verified_sample) {
            GroupHom hom{E2, E2, image};
            if (!hom.is_valid() || !hom.is_bijective())
              throw std::logic_error("structural automorphism is invalid");
            verified_sample = true;
          }
          for (int i = 0; i < n; ++i) {
            int x = lines[i].elements[0] == E2->identity()
                        ? lines[i].elements[1]
                        : lines[i].elements[0];
            int si = line_of[image[x]];
            unite(i, si);
            unite(n + i, n + si);
          }
        }

  std::vector<int> orbit_id(2 * n, -1);
  int orbit_count = 0;
  for (int i = 0; i < 2 * n; ++i) {
    int r = find(find, i);
    if (orbit_id[r] < 0) orbit_id[r] = orbit_count++;
    orbit_id[i] = orbit_id[r];
  }
  // invariants of the kernel = kernel constraints applied to orbit sums
  RatMatrix constrained(n, RatVector(orbit_count, Rational(0)));
  for (int k = 0; k < n; ++k)
    for (int b = 0; b < 2 * n; ++b)
      constrained[k][orbit_id[b]] += res_rows[k][b];
  report.invariant_dim = rat_nullspace_dim(constrained);
  report.n_Cp1 = report.invariant_dim;
  return report;
}

std::vector<KrqEntry> krq_decomposition(const GroupPtr& G) {
  auto idx = iso_class_index(G);
  std::vector<KrqEntry> result;
  for (int i = 0; i < idx.num_classes(); ++i) {
    ArtinQuotient q = artin_quotient_dim(idx.reps[i]);
    if (idx.reps[i]->is_cyclic()) {
      if (q.dimension != 1 || !q.out_action_trivial)
        throw std::logic_error("cyclic class has unexpected artin evidence");
      result.push_back(KrqEntry{i, q});
    } else if (q.dimension != 0) {
      throw std::logic_error("non-cyclic class has nonzero artin quotient");
    }
  }
  return result;
}

DecompositionMatrix n_matrix(const GroupPtr& G) {
  DecompositionMatrix m;
  m.index = build_pair_index(G);
  MatrixBuilder builder(m.index);
  const int n = m.index.num_pairs();
  m.entries.reserve(n);
  m.row_annotations.reserve(n);
  for (int pair = 0; pair < n; ++pair) {
    m.entries.push_back(builder.row(pair));
    m.row_annotations.push_back(builder.annotation(pair));
  }
  // structural invariants
  for (int row = 0; row < n; ++row) {
    const int row_cls = m.index.pairs[row].class_index;
    for (int col = 0; col < n; ++col) {
      const auto& e = m.entries[row][col];
      if (row == col) {
        if (e.value != 1 || e.status != EntryStatus::exact)
          throw std::logic_error("diagonal entry is not an exact one");
      } else if (m.index.pairs[col].class_index > row_cls ||
                 (m.index.pairs[col].class_index == row_cls && col != row)) {
        if (e.value != 0)
          throw std::logic_error("matrix is not lower triangular");
      }
      if (e.provenance == Provenance::not_a_quotient && e.value != 0)
        throw std::logic_error("unsupported entry must vanish");
      if (e.status == EntryStatus::exact &&
          e.provenance == Provenance::nabla_bound)
        throw std::logic_error("bound provenance cannot be exact");
    }
  }
  return m;
}

std::string char_display_name(const PairIndex& index, int pair) {
  if (index.pair_character(pair).is_trivial()) return "triv";
  return "chi" + std::to_string(index.pairs[pair].char_index);
}

InducedDecomposition decompose_induced(const PairIndex& index, int pair) {
  if (pair < 0 || pair >= index.num_pairs())
    throw std::invalid_argument("pair index out of range");
  MatrixBuilder builder(index);
  InducedDecomposition record;
  record.pair = pair;
  record.row = builder.row(pair);
  record.fully_determined = true;
  for (int col = 0; col < index.num_pairs(); ++col) {
    const auto& e = record.row[col];
    if (e.status != EntryStatus::exact) record.fully_determined = false;
    if (e.value != 0) record.terms.push_back(InducedTerm{col, e});
  }
  std::string text;
  for (const auto& term : record.terms) {
    if (!text.empty()) text += " + ";
    std::string name =
        "P_{" + describe_group(index.classes.reps[index.pairs[term.pair].class_index]) +
        "," + char_display_name(index, term.pair) + "}";
    std::string mult =
        term.entry.value == 1 ? "" : std::to_string(term.entry.value) + "*";
    if (term.entry.status == EntryStatus::exact)
      text += mult + name;
    else
      text += "(<= " + std::to_string(term.entry.value) + ")*" + name;
  }
  if (text.empty()) text = "0";
  record.text = text;
  return record;
}

}  // namespace bisetcalc
