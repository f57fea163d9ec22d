#pragma once

#include <string>
#include <vector>

#include "bisetcalc/rational.hpp"

namespace bisetcalc {

int euler_phi(int n);
std::vector<int> divisors(int n);

// Coefficients of the e-th cyclotomic polynomial (monic, integer), constant
// term first.
const std::vector<Integer>& cyclotomic_polynomial(int e);

// An element of the e-th cyclotomic field over the power basis
// 1, z, ..., z^(phi(e)-1), reduced by the e-th cyclotomic polynomial. The
// representation is canonical for a fixed conductor; binary operations
// promote both sides to the lcm conductor.
class Cyclotomic {
 public:
  Cyclotomic() : cond_(1), c_(1, Rational(0)) {}
  explicit Cyclotomic(const Rational& r) : cond_(1), c_(1, r) { canon(); }
  explicit Cyclotomic(long v) : cond_(1), c_(1, Rational(v)) {}

  static Cyclotomic root_of_unity(int e, long long k);
  static Cyclotomic zero_at(int conductor);

  int conductor() const noexcept { return cond_; }
  const std::vector<Rational>& coeffs() const noexcept { return c_; }

  Cyclotomic promoted(int conductor) const;  // cond_ must divide conductor

  bool is_zero() const;
  bool is_rational() const;
  Rational as_rational() const;  // throws when not rational

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  Cyclotomic scaled(const Rational& r) const;
  Cyclotomic conjugated() const;          // z -> z^-1
  Cyclotomic galois(long long a) const;   // z -> z^a, gcd(a, conductor) = 1
  Cyclotomic inverse() const;             // throws on zero

  // Lexicographic comparison of coefficient vectors after promotion to a
  // common conductor supplied by the caller (three-way: -1, 0, 1).
  static int compare_at(const Cyclotomic& a, const Cyclotomic& b, int conductor);

  std::string str() const;  // "a/b" when rational, "[c0,...]@e" otherwise

 private:
  void canon();

  int cond_;
  std::vector<Rational> c_;  // size phi(cond_)
};

}  // namespace bisetcalc
