#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace lsiso {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact element of Q(zeta_N), kept as sum_k c_k zeta^k, k mod N.
/// Comparisons reduce modulo the N-th cyclotomic polynomial.
class Cyclotomic {
 public:
  Cyclotomic() : coeffs_(1) {}
  explicit Cyclotomic(Rational r, int N = 1);
  static Cyclotomic root(int k, int N, Rational c = 1);  // c * zeta_N^k

  int conductor() const { return static_cast<int>(coeffs_.size()); }
  Cyclotomic lifted(int M) const;  // same value over Q(zeta_M), N | M
  Cyclotomic reduced() const;      // canonical: reduced mod Phi_N
  bool is_rational() const;
  Rational rational_value() const;  // requires is_rational()
  bool is_zero() const;
  Cyclotomic conj() const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Rational& r);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& r) { return a *= r; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  std::string str() const;

 private:
  std::vector<Rational> coeffs_;
};

// Integer coefficients of Phi_N, lowest degree first.
std::vector<BigInt> cyclotomic_polynomial(int N);

}  // namespace lsiso
