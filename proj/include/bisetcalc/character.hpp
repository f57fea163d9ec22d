#pragma once

#include <memory>
#include <vector>

#include "bisetcalc/cyclotomic.hpp"
#include "bisetcalc/group.hpp"
#include "bisetcalc/subquotient.hpp"

namespace bisetcalc {

// Conjugacy classes in canonical order: (element order, class size, minimal
// member).
struct ClassIndex {
  GroupPtr group;
  std::vector<std::vector<int>> members;  // sorted per class
  std::vector<int> rep;                   // minimal member
  std::vector<int> size;
  std::vector<int> class_of;              // per element
  std::vector<int> inverse_class;

  int num_classes() const { return static_cast<int>(rep.size()); }
};

std::shared_ptr<const ClassIndex> conjugacy_classes(const GroupPtr& G);

// An exact class function; for characters the values are algebraic integers.
struct Character {
  GroupPtr group;
  std::shared_ptr<const ClassIndex> classes;
  std::vector<Cyclotomic> values;  // one per class

  const Cyclotomic& at_element(int g) const { return values[classes->class_of[g]]; }
  Rational degree() const { return values[0].as_rational(); }
  bool is_trivial() const;
};

struct CharacterTable {
  GroupPtr group;
  std::shared_ptr<const ClassIndex> classes;
  int conductor = 1;  // the group exponent
  std::vector<Character> irreducibles;  // by (degree, descending value lex)
};

// Exact table via the modular class-sum eigenvector method with cyclotomic
// lift; orthogonality is verified before the table is returned. Memoised by
// the literal multiplication table and optionally persisted to the disk
// cache (see cache.hpp).
std::shared_ptr<const CharacterTable> character_table(const GroupPtr& G);

// Groups whose table was computed or loaded during this process.
std::vector<GroupPtr> character_table_registry();

// (1/|G|) sum over g of chi(g) * conj(psi(g)), exact.
Cyclotomic inner_product(const Character& chi, const Character& psi);
// Same, when the result must be a rational integer (multiplicity).
long long multiplicity(const Character& chi, const Character& irreducible);

Character trivial_character(const GroupPtr& G);

// chi composed with the inverse of an isomorphism iso: A -> B, yielding a
// character of B.
Character transport_character(const Character& chi, const GroupHom& iso);

// Pointwise product.
Character tensor(const Character& a, const Character& b);

// Induction along a realized subgroup embedding.
Character induce_character(const Character& chi, const RealizedSubgroup& sub);
Character restrict_character(const Character& chi, const RealizedSubgroup& sub);

// Galois-orbit sums of the irreducibles; they span the rational character
// lattice.
std::vector<Character> rational_irreducibles(const GroupPtr& H);

// Orbit sums together with one representative irreducible index per orbit.
struct RationalBasis {
  std::shared_ptr<const CharacterTable> table;
  std::vector<Character> sums;
  std::vector<int> rep_char;  // index into table->irreducibles
};
RationalBasis rational_character_basis(const GroupPtr& H);

struct ArtinQuotient {
  int dimension = 0;
  bool out_action_trivial = true;
};

// Cokernel of all properly-induced rational characters inside the rational
// character space, with the induced Out(H)-action triviality flag.
ArtinQuotient artin_quotient_dim(const GroupPtr& H);

// Dimension of the space of rational virtual characters vanishing on every
// proper subgroup.
int codef_krq_dim(const GroupPtr& H);

// The pair (H_i, V_ij) catalogue of G: class representatives, their Out
// groups and character tables, and the flattened pair list.
struct SimplePair {
  int class_index = 0;
  int char_index = 0;
};

struct PairIndex {
  GroupPtr G;
  IsoClassIndex classes;
  std::vector<std::shared_ptr<const OutGroup>> outs;              // per class
  std::vector<std::shared_ptr<const CharacterTable>> out_tables;  // per class
  std::vector<SimplePair> pairs;

  int num_pairs() const { return static_cast<int>(pairs.size()); }
  int pair_of(int class_index, int char_index) const;
  const Character& pair_character(int pair) const {
    return out_tables[pairs[pair].class_index]->irreducibles[pairs[pair].char_index];
  }
};

PairIndex build_pair_index(const GroupPtr& G);

std::vector<SimplePair> simple_pairs(const GroupPtr& G);

}  // namespace bisetcalc
