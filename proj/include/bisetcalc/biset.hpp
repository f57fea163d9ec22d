#pragma once

#include <memory>
#include <vector>

#include "bisetcalc/character.hpp"
#include "bisetcalc/group.hpp"
#include "bisetcalc/subquotient.hpp"

namespace bisetcalc {

// One double-coset representative of X(K,R): a normal subgroup N of R with
// R/N isomorphic to K together with an isomorphism R/N -> K, stored as the
// image table on the quotient group elements.
struct BisetPoint {
  int kernel = 0;              // index into BisetX::kernels
  std::vector<int> iso_image;  // quotient element -> K element
};

// The (Out(K), Out(R))-biset of isomorphisms from quotients of R onto K, up
// to post-composition with inner automorphisms of K and pre-composition with
// the automorphisms of R/N induced by conjugation in R.
struct BisetX {
  GroupPtr K, R;
  std::shared_ptr<const OutGroup> outK, outR;
  std::vector<Subgroup> kernels;                        // the N's
  std::vector<std::pair<GroupPtr, GroupHom>> quotients; // per N: (R/N, proj)
  std::vector<BisetPoint> points;
  std::vector<std::vector<int>> left_action;   // [|Out(K)|][points]
  std::vector<std::vector<int>> right_action;  // [points][|Out(R)|]

  int size() const { return static_cast<int>(points.size()); }
};

BisetX build_X(const GroupPtr& K, const GroupPtr& R);

// Character of Out(K) of the module kX tensor_{kOut(R)} V, by the fixed-point
// formula chi(u) = (1/|Out(R)|) sum_w #{x : u.x = x.w} chi_V(w).
Character tensor_character(const BisetX& X, const Character& V);

// An Out(H)-module placed at one isomorphism class of subquotients.
struct AtomicModule {
  int class_index = 0;  // into an IsoClassIndex
  Character V;          // character of Out(reps[class_index]).out
};

// Evaluation of the induced module at the class representative K: sum over
// all subquotients R of G in the class of H of kX(K,R) tensor V(R), as an
// exact character of Out(K).
Character ind_rho_nabla(const PairIndex& index, const AtomicModule& atom,
                        int class_K);

// Variant for property tests: transports V along the supplied isomorphism
// choice per subquotient instead of the index's chosen_iso (vector indexed
// like index.classes.sqs; entries for other classes are ignored).
Character ind_rho_nabla_with_transport(const PairIndex& index,
                                       const AtomicModule& atom, int class_K,
                                       const std::vector<GroupHom>& transport);

// Character of Out(R')-side transported from a character on Out(H): w maps to
// chi_V(image of w under conjugation by iso: R' -> H).
Character transport_out_character(const Character& V, const GroupHom& iso,
                                  const OutGroup& outR, const OutGroup& outH);

}  // namespace bisetcalc
