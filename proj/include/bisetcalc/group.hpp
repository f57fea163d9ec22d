#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace bisetcalc {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

// A finite group as an explicit multiplication table over element indices
// 0..order-1. Immutable after construction; construction validates the
// axioms (associativity exhaustively for order <= 200, identity/inverse and
// the latin-square property always).
class FiniteGroup {
 public:
  static GroupPtr from_table(const std::vector<std::vector<int>>& mul,
                             std::string label = {});

  int order() const noexcept { return order_; }
  int mul(int a, int b) const {
    return mul_[static_cast<size_t>(a) * order_ + b];
  }
  int identity() const noexcept { return identity_; }
  int inverse(int x) const { return inverse_[x]; }
  int element_order(int x) const { return elt_order_[x]; }
  int exponent() const noexcept { return exponent_; }
  bool is_abelian() const noexcept { return abelian_; }
  bool is_cyclic() const noexcept { return max_element_order_ == order_; }

  // g x g^-1
  int conj(int g, int x) const { return mul(mul(g, x), inverse(g)); }
  int power(int x, long long k) const;

  const std::string& label() const noexcept { return label_; }

  // FNV-1a over the literal table; identifies literally identical tables
  // (cache key), never isomorphism classes.
  uint64_t table_hash() const noexcept { return hash_; }

 private:
  FiniteGroup() = default;

  int order_ = 0;
  int identity_ = 0;
  int exponent_ = 1;
  int max_element_order_ = 1;
  bool abelian_ = true;
  uint64_t hash_ = 0;
  std::string label_;
  std::vector<uint16_t> mul_;
  std::vector<uint16_t> inverse_;
  std::vector<uint16_t> elt_order_;
};

// A homomorphism stored as the full image table.
struct GroupHom {
  GroupPtr source;
  GroupPtr target;
  std::vector<int> image;

  int apply(int x) const { return image[x]; }
  bool is_valid() const;       // image respects mul and identity
  bool is_bijective() const;
  GroupHom inverted() const;   // requires bijectivity
  static GroupHom compose(const GroupHom& f, const GroupHom& g);  // f after g
};

// A subgroup given by its sorted element set inside a parent group.
struct Subgroup {
  GroupPtr parent;
  std::vector<int> elements;  // sorted

  int order() const noexcept { return static_cast<int>(elements.size()); }
  bool contains(int x) const;
  bool is_whole_group() const { return order() == parent->order(); }
};

// A subgroup re-indexed as a standalone group together with its embedding.
struct RealizedSubgroup {
  GroupPtr group;            // the subgroup as a FiniteGroup on 0..|H|-1
  GroupHom embed;            // group -> parent
  std::vector<int> index_in; // parent element -> local index, -1 outside
};

// Aut(H), Inn(H) and Out(H) = Aut/Inn with a chosen section.
struct OutGroup {
  GroupPtr base;
  GroupPtr aut;                     // abstract Aut(H)
  std::vector<GroupHom> aut_maps;   // aut element -> automorphism of base
  Subgroup inn;                     // subgroup of aut
  GroupPtr out;                     // aut / inn
  GroupHom proj;                    // aut -> out
  std::vector<int> section;         // out element -> representative aut index

  const GroupHom& section_map(int out_elt) const {
    return aut_maps[section[out_elt]];
  }
  // Index of an automorphism (given by its image table) in aut, -1 if absent.
  int aut_index(const std::vector<int>& image) const;
};

// Closure of generator permutations of {0..degree-1} under composition,
// converted to an abstract multiplication table. Breadth-first from the
// identity, generators in input order; identity gets index 0.
GroupPtr group_from_generators(int degree,
                               const std::vector<std::vector<int>>& generators,
                               std::string label = {});

// All subgroups, each exactly once, sorted by (order, element set).
std::vector<Subgroup> subgroups(const GroupPtr& G);

// Closure of a subset (must include products; identity added automatically).
Subgroup subgroup_closure(const GroupPtr& G, std::vector<int> elements);

bool is_subgroup_normal(const Subgroup& N, const Subgroup& H);
bool is_normal_in_group(const GroupPtr& G, const Subgroup& N);

// Coset group H/N with the canonical projection. Cosets ordered by minimal
// member index. N.parent must be H itself.
std::pair<GroupPtr, GroupHom> quotient(const GroupPtr& H, const Subgroup& N);

// The complete list of isomorphisms A -> B in a deterministic order.
std::vector<GroupHom> isomorphisms(const GroupPtr& A, const GroupPtr& B);

OutGroup out_group(const GroupPtr& H);

RealizedSubgroup realize_subgroup(const Subgroup& S);

// Greedy minimal generating sequence: largest element order first,
// ties broken by smallest index.
std::vector<int> minimal_generating_sequence(const FiniteGroup& G);

// Memoised variants keyed by the literal multiplication table. The subgroup
// list is rebased onto the group object passed in.
std::vector<Subgroup> subgroups_cached(const GroupPtr& G);
std::shared_ptr<const OutGroup> out_group_cached(const GroupPtr& H);

}  // namespace bisetcalc
