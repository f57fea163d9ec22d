#pragma once

#include <compare>
#include <vector>

#include "bisetcalc/group.hpp"

namespace bisetcalc {

// One pair (H, N normal in H) of Sq(G) with its realized quotient group.
struct Subquotient {
  GroupPtr parent;     // G
  Subgroup sub;        // H as a subgroup of G
  Subgroup ker;        // N as a subgroup of G, subset of sub
  GroupPtr sub_group;  // H re-indexed as a group
  GroupHom embed;      // sub_group -> G
  GroupPtr group;      // H/N
  GroupHom proj;       // sub_group -> group
};

// Isomorphism-invariant bucket key used before full isomorphism tests.
struct GroupFingerprint {
  int order = 0;
  bool abelian = false;
  std::vector<std::pair<int, int>> order_profile;  // (element order, count)
  std::vector<std::pair<int, int>> class_sizes;    // (class size, count)
  auto operator<=>(const GroupFingerprint&) const = default;
};
GroupFingerprint fingerprint(const FiniteGroup& g);

// Representatives H_0,...,H_n of the isomorphism classes of Sq(G), ordered by
// size (ties by fingerprint, then first occurrence), with the class of each
// subquotient and one fixed transport isomorphism onto its representative.
struct IsoClassIndex {
  GroupPtr parent;
  std::vector<Subquotient> sqs;      // canonical order
  std::vector<GroupPtr> reps;
  std::vector<int> class_of;         // per subquotient
  std::vector<GroupHom> chosen_iso;  // sq.group -> reps[class_of[sq]]

  int num_classes() const { return static_cast<int>(reps.size()); }
  std::vector<int> class_members(int cls) const;
};

// All pairs (H, N normal in H), each once, ordered by
// (|H|, H's element set, N's element set).
std::vector<Subquotient> subquotients(const GroupPtr& G);

IsoClassIndex iso_class_index(const GroupPtr& G);

// All normal subgroups N of R with R/N isomorphic to K, by element set.
std::vector<Subgroup> quotients_iso_to(const GroupPtr& R, const GroupPtr& K);

}  // namespace bisetcalc
