#pragma once

#include <string>
#include <vector>

#include "bisetcalc/biset.hpp"
#include "bisetcalc/character.hpp"
#include "bisetcalc/exact_linalg.hpp"

namespace bisetcalc {

enum class EntryStatus { exact, upper_bound };

enum class Provenance {
  diagonal_one,
  not_a_quotient,
  cyclic_theorem,
  burnside_lemma,
  simple_group_theorem,
  trivial_group,
  e2_computation,
  nabla_bound,
};

const char* provenance_name(Provenance p);

struct DecompEntry {
  long long value = 0;
  EntryStatus status = EntryStatus::exact;
  Provenance provenance = Provenance::not_a_quotient;
};

// The multiplicity matrix N_G over the size-ordered pair index. Rows index
// the induced pair (H,V), columns the projective summand (K,W). Lower
// triangular with exact unit diagonal.
struct DecompositionMatrix {
  PairIndex index;
  std::vector<std::vector<DecompEntry>> entries;  // [row][col]
  std::vector<std::string> row_annotations;       // empty when none
};

// The explicit rank-2 elementary abelian computation: basis
// Tin_{A_i} (x) 1, Tin_{Q_j} (x) 1, the restriction/deflation case formulas,
// the coefficient matrix C, its determinant, the joint restriction kernel
// and its invariant line.
struct E2Report {
  int p = 0;
  std::vector<std::string> basis_labels;              // 2p+2 entries
  std::vector<std::vector<long long>> C;              // (2p+2) x (2p+2)
  Rational detC;
  Rational detC_closed_form;                          // (-1)^p p (1-p)^(p+1)
  int kernel_dim = 0;
  int invariant_dim = 0;
  int n_Cp1 = 0;
};

struct KrqEntry {
  int class_index = 0;
  ArtinQuotient evidence;
};

struct InducedTerm {
  int pair = 0;
  DecompEntry entry;
};

struct InducedDecomposition {
  int pair = 0;  // the induced (H,V)
  std::vector<DecompEntry> row;
  std::vector<InducedTerm> terms;  // nonzero entries in column order
  bool fully_determined = false;
  std::string text;
};

// Upper bound (or promoted exact value) for one entry.
DecompEntry bound_entry(const PairIndex& index, int row_pair, int col_pair);

// Multiplicity of the Burnside summand, verified against the Artin quotient.
DecompEntry burnside_multiplicity(const GroupPtr& H, const Character& V);

// Exact row for a cyclic class, computed inside the ambient representative
// and mapped onto the pair columns of the enclosing index.
std::vector<DecompEntry> cyclic_row(const PairIndex& index, int class_C,
                                    int char_V);

// Exact row for a simple class: the diagonal plus a possible Burnside term.
std::vector<DecompEntry> simple_group_row(const PairIndex& index, int class_H,
                                          int char_V);

E2Report e2_report(int p);

// Cyclic classes of G with their Artin-quotient evidence; non-cyclic classes
// are verified to contribute nothing.
std::vector<KrqEntry> krq_decomposition(const GroupPtr& G);

DecompositionMatrix n_matrix(const GroupPtr& G);

InducedDecomposition decompose_induced(const PairIndex& index, int pair);

// Display name of a pair character: "triv" or "chi<k>".
std::string char_display_name(const PairIndex& index, int pair);

}  // namespace bisetcalc
