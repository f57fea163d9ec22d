#include "bisetcalc/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace bisetcalc {

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<int> divisors(int n) {
  std::vector<int> small, large;
  for (int d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

namespace {

// exact division of integer polynomials, constant term first, monic divisor
std::vector<Integer> poly_divide_exact(const std::vector<Integer>& num,
                                       const std::vector<Integer>& den) {
  std::vector<Integer> rem = num;
  const size_t dn = den.size() - 1;
  if (rem.size() < den.size()) throw std::logic_error("bad polynomial division");
  std::vector<Integer> quot(rem.size() - dn, 0);
  for (size_t i = rem.size(); i-- > den.size() - 1;) {
    size_t qi = i - dn;
    if (qi >= quot.size()) continue;
    Integer c = rem[i];  // den is monic
    quot[qi] = c;
    if (c == 0) continue;
    for (size_t j = 0; j < den.size(); ++j) rem[qi + j] -= c * den[j];
  }
  for (const auto& r : rem)
    if (r != 0) throw std::logic_error("inexact polynomial division");
  return quot;
}

std::mutex g_phi_mutex;
std::map<int, std::vector<Integer>> g_phi_cache;

}  // namespace

const std::vector<Integer>& cyclotomic_polynomial(int e) {
  std::lock_guard<std::mutex> lock(g_phi_mutex);
  auto it = g_phi_cache.find(e);
  if (it != g_phi_cache.end()) return it->second;

  // compute recursively without re-locking
  auto compute = [&](auto&& self, int m) -> const std::vector<Integer>& {
    auto found = g_phi_cache.find(m);
    if (found != g_phi_cache.end()) return found->second;
    std::vector<Integer> poly(m + 1, 0);  // x^m - 1
    poly[0] = -1;
    poly[m] = 1;
    for (int d : divisors(m)) {
      if (d == m) continue;
      poly = poly_divide_exact(poly, self(self, d));
    }
    return g_phi_cache.emplace(m, std::move(poly)).first->second;
  };
  return compute(compute, e);
}

void Cyclotomic::canon() {
  c_.resize(euler_phi(cond_), Rational(0));
  for (auto& x : c_) x.canonicalize();
}

Cyclotomic Cyclotomic::zero_at(int conductor) {
  Cyclotomic z;
  z.cond_ = conductor;
  z.c_.assign(euler_phi(conductor), Rational(0));
  return z;
}

namespace {

// reduce a polynomial in z_e (any degree) to the power basis mod Phi_e
std::vector<Rational> reduce_mod_phi(std::vector<Rational> poly, int e) {
  const auto& phi = cyclotomic_polynomial(e);
  const size_t deg = phi.size() - 1;  // phi(e)
  if (poly.size() < deg) poly.resize(deg, Rational(0));
  for (size_t i = poly.size(); i-- > deg;) {
    Rational c = poly[i];
    if (c == 0) continue;
    poly[i] = 0;
    // x^i = x^(i-deg) * (x^deg - Phi_e) since Phi_e is monic
    for (size_t j = 0; j < deg; ++j) {
      Rational t = c * Rational(phi[j]);
      poly[i - deg + j] -= t;
    }
  }
  poly.resize(deg);
  for (auto& x : poly) x.canonicalize();
  return poly;
}

}  // namespace

Cyclotomic Cyclotomic::root_of_unity(int e, long long k) {
  if (e <= 0) throw std::invalid_argument("conductor must be positive");
  long long r = k % e;
  if (r < 0) r += e;
  std::vector<Rational> poly(static_cast<size_t>(e), Rational(0));
  poly[static_cast<size_t>(r)] = 1;
  Cyclotomic z;
  z.cond_ = e;
  z.c_ = reduce_mod_phi(std::move(poly), e);
  return z;
}

Cyclotomic Cyclotomic::promoted(int conductor) const {
  if (conductor == cond_) return *this;
  if (conductor % cond_ != 0)
    throw std::invalid_argument("promotion target must be a multiple conductor");
  const int step = conductor / cond_;
  std::vector<Rational> poly(static_cast<size_t>(conductor), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) poly[i * step] = c_[i];
  Cyclotomic z;
  z.cond_ = conductor;
  z.c_ = reduce_mod_phi(std::move(poly), conductor);
  return z;
}

bool Cyclotomic::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rational Cyclotomic::as_rational() const {
  if (!is_rational()) throw std::invalid_argument("value is not rational");
  return c_[0];
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  const int l = std::lcm(cond_, o.cond_);
  Cyclotomic a = promoted(l), b = o.promoted(l);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    a.c_[i] += b.c_[i];
    a.c_[i].canonicalize();
  }
  return a;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
  const int l = std::lcm(cond_, o.cond_);
  Cyclotomic a = promoted(l), b = o.promoted(l);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    a.c_[i] -= b.c_[i];
    a.c_[i].canonicalize();
  }
  return a;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic a = *this;
  for (auto& x : a.c_) x = -x;
  return a;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  // fast path for rational factors
  if (is_rational()) return o.scaled(c_[0]);
  if (o.is_rational()) return scaled(o.c_[0]);
  const int l = std::lcm(cond_, o.cond_);
  Cyclotomic a = promoted(l), b = o.promoted(l);
  std::vector<Rational> prod(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      prod[i + j] += a.c_[i] * b.c_[j];
    }
  }
  Cyclotomic z;
  z.cond_ = l;
  z.c_ = reduce_mod_phi(std::move(prod), l);
  return z;
}

Cyclotomic Cyclotomic::scaled(const Rational& r) const {
  Cyclotomic a = *this;
  for (auto& x : a.c_) {
    x *= r;
    x.canonicalize();
  }
  return a;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  if (cond_ == o.cond_) return c_ == o.c_;
  const int l = std::lcm(cond_, o.cond_);
  return promoted(l).c_ == o.promoted(l).c_;
}

Cyclotomic Cyclotomic::galois(long long a) const {
  long long r = a % cond_;
  if (r < 0) r += cond_;
  if (std::gcd(static_cast<long long>(cond_), r) != 1)
    throw std::invalid_argument("galois exponent must be coprime to conductor");
  std::vector<Rational> poly(static_cast<size_t>(cond_), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i)
    poly[static_cast<size_t>(i * r % cond_)] += c_[i];
  Cyclotomic z;
  z.cond_ = cond_;
  z.c_ = reduce_mod_phi(std::move(poly), cond_);
  return z;
}

Cyclotomic Cyclotomic::conjugated() const {
  if (cond_ <= 2) return *this;
  return galois(cond_ - 1);
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::invalid_argument("division by zero");
  if (is_rational()) {
    Cyclotomic r;
    r.cond_ = cond_;
    r.c_.assign(c_.size(), Rational(0));
    r.c_[0] = 1 / c_[0];
    r.c_[0].canonicalize();
    return r;
  }
  // solve (this) * y = 1 over the power basis
  const size_t d = c_.size();
  // columns: this * z^j reduced
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d + 1, Rational(0)));
  for (size_t j = 0; j < d; ++j) {
    std::vector<Rational> poly(d + j, Rational(0));
    for (size_t i = 0; i < d; ++i) poly[i + j] = c_[i];
    auto col = reduce_mod_phi(std::move(poly), cond_);
    for (size_t i = 0; i < d; ++i) m[i][j] = col[i];
  }
  m[0][d] = 1;
  // gaussian elimination
  size_t row = 0;
  std::vector<size_t> pivot_col(d, SIZE_MAX);
  for (size_t col = 0; col < d && row < d; ++col) {
    size_t pr = SIZE_MAX;
    for (size_t r2 = row; r2 < d; ++r2)
      if (m[r2][col] != 0) { pr = r2; break; }
    if (pr == SIZE_MAX) continue;
    std::swap(m[row], m[pr]);
    Rational inv = 1 / m[row][col];
    for (auto& x : m[row]) { x *= inv; x.canonicalize(); }
    for (size_t r2 = 0; r2 < d; ++r2) {
      if (r2 == row || m[r2][col] == 0) continue;
      Rational f = m[r2][col];
      for (size_t c2 = 0; c2 <= d; ++c2) {
        m[r2][c2] -= f * m[row][c2];
        m[r2][c2].canonicalize();
      }
    }
    pivot_col[row] = col;
    ++row;
  }
  if (row < d) throw std::logic_error("multiplication map is singular");
  Cyclotomic y;
  y.cond_ = cond_;
  y.c_.assign(d, Rational(0));
  for (size_t r2 = 0; r2 < d; ++r2) y.c_[pivot_col[r2]] = m[r2][d];
  return y;
}

int Cyclotomic::compare_at(const Cyclotomic& a, const Cyclotomic& b, int conductor) {
  Cyclotomic pa = a.promoted(conductor), pb = b.promoted(conductor);
  for (size_t i = 0; i < pa.c_.size(); ++i) {
    if (pa.c_[i] < pb.c_[i]) return -1;
    if (pa.c_[i] > pb.c_[i]) return 1;
  }
  return 0;
}

std::string Cyclotomic::str() const {
  if (is_rational()) return rational_str(c_[0]);
  std::string s = "[";
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ",";
    s += rational_str(c_[i]);
  }
  s += "]@" + std::to_string(cond_);
  return s;
}

}  // namespace bisetcalc
