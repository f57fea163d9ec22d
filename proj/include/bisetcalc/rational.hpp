#pragma once

#include <gmpxx.h>

#include <string>

namespace bisetcalc {

using Rational = mpq_class;
using Integer = mpz_class;

inline std::string rational_str(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_str();
}

}  // namespace bisetcalc
