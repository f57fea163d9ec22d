#pragma once

#include <vector>

#include "bisetcalc/character.hpp"
#include "bisetcalc/group.hpp"

namespace bisetcalc {
struct BisetX;
}

namespace bisetcalc::oracle {

// Test-only oracle: enumerate subgroups by scanning identity-containing
// subsets whose size divides |G| and keeping the closed ones. Returns sorted
// element sets in the same canonical order as subgroups().
std::vector<std::vector<int>> powerset_subgroups(const GroupPtr& G);

// Test-only oracle for |G| <= 24: saturate the span of linear characters,
// coset permutation characters and monomial characters induced from cyclic
// subgroups, split by peeling off norm-1 remainders and tensoring, and return
// the full irreducible table in the same canonical order as character_table.
// Deliberately avoids the modular class-sum path.
std::vector<Character> brute_force_character_table(const GroupPtr& G);

// All degree-1 characters of G (pulled back from the abelianization).
std::vector<Character> linear_characters(const GroupPtr& G);

// Test-only oracle for the tensor module kX tensor_{kOut(R)} V: builds an
// explicit cyclotomic matrix model of V from the regular representation of
// Out(R), forms the free space on X tensor V, quotients by the relations
// x.w (x) v - x (x) w.v, and takes traces of the residual Out(K)-action.
// Reducible V is handled constituent by constituent.
Character tensor_module_character(const BisetX& X, const Character& V);

}  // namespace bisetcalc::oracle
