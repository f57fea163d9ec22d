#pragma once

namespace bisetcalc {

// Process-wide size caps. Closure bounds group_from_generators; the
// enumeration cap bounds subgroup and automorphism enumeration.
struct Limits {
  static int closure_cap();
  static int enumeration_cap();
  static void set_closure_cap(int n);
  static void set_enumeration_cap(int n);
};

}  // namespace bisetcalc
