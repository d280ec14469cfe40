#include "lsiso/cyclotomic.hpp"

#include <map>
#include <numeric>

#include "lsiso/errors.hpp"

namespace lsiso {

std::vector<BigInt> cyclotomic_polynomial(int N) {
  static std::map<int, std::vector<BigInt>> cache;
  if (N < 1) throw DomainError("cyclotomic order must be positive");
  if (auto it = cache.find(N); it != cache.end()) return it->second;
  std::vector<BigInt> p(N + 1, 0);  // x^N - 1
  p[0] = -1;
  p[N] = 1;
  for (int d = 1; d < N; ++d) {
    if (N % d) continue;
    auto q = cyclotomic_polynomial(d);  // monic; exact division
    const int dq = static_cast<int>(q.size()) - 1;
    const int dp = static_cast<int>(p.size()) - 1;
    std::vector<BigInt> quot(dp - dq + 1, 0);
    for (int k = dp; k >= dq; --k) {
      BigInt c = p[k];
      quot[k - dq] = c;
      if (c != 0)
        for (int t = 0; t <= dq; ++t) p[k - dq + t] -= c * q[t];
    }
    p = std::move(quot);
  }
  cache[N] = p;
  return p;
}

Cyclotomic::Cyclotomic(Rational r, int N) : coeffs_(N) {
  if (N < 1) throw DomainError("cyclotomic order must be positive");
  coeffs_[0] = std::move(r);
}

Cyclotomic Cyclotomic::root(int k, int N, Rational c) {
  Cyclotomic z(0, N);
  z.coeffs_[((k % N) + N) % N] = std::move(c);
  return z;
}

Cyclotomic Cyclotomic::lifted(int M) const {
  const int N = conductor();
  if (M % N) throw DomainError("lift target is not a multiple of the conductor");
  Cyclotomic out(0, M);
  for (int k = 0; k < N; ++k) out.coeffs_[k * (M / N)] = coeffs_[k];
  return out;
}

Cyclotomic Cyclotomic::reduced() const {
  const int N = conductor();
  auto phi = cyclotomic_polynomial(N);
  const int deg = static_cast<int>(phi.size()) - 1;
  std::vector<Rational> r = coeffs_;
  for (int k = N - 1; k >= deg; --k) {
    if (r[k] == 0) continue;
    Rational c = r[k];
    for (int t = 0; t <= deg; ++t) r[k - deg + t] -= c * Rational(phi[t]);
  }
  Cyclotomic out(0, N);
  out.coeffs_ = std::move(r);
  return out;
}

bool Cyclotomic::is_zero() const {
  auto r = reduced();
  for (auto& c : r.coeffs_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  auto r = reduced();
  for (std::size_t k = 1; k < r.coeffs_.size(); ++k)
    if (r.coeffs_[k] != 0) return false;
  return true;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) throw IntegralityError("value is not rational: " + str());
  return reduced().coeffs_[0];
}

Cyclotomic Cyclotomic::conj() const {
  const int N = conductor();
  Cyclotomic out(0, N);
  for (int k = 0; k < N; ++k) out.coeffs_[(N - k) % N] = coeffs_[k];
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  const int M = std::lcm(conductor(), o.conductor());
  if (M != conductor()) *this = lifted(M);
  const Cyclotomic b = o.conductor() == M ? o : o.lifted(M);
  for (int k = 0; k < M; ++k) coeffs_[k] += b.coeffs_[k];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& r) {
  for (auto& c : coeffs_) c *= r;
  return *this;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  const int M = std::lcm(a.conductor(), b.conductor());
  const Cyclotomic x = a.lifted(M), y = b.lifted(M);
  Cyclotomic out(0, M);
  for (int i = 0; i < M; ++i) {
    if (x.coeffs_[i] == 0) continue;
    for (int j = 0; j < M; ++j)
      if (y.coeffs_[j] != 0) out.coeffs_[(i + j) % M] += x.coeffs_[i] * y.coeffs_[j];
  }
  return out;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  Cyclotomic diff = a;
  diff += b * Rational(-1);
  return diff.is_zero();
}

std::string Cyclotomic::str() const {
  auto r = reduced();
  std::string out;
  for (int k = 0; k < r.conductor(); ++k) {
    if (r.coeffs_[k] == 0) continue;
    if (!out.empty()) out += " + ";
    out += r.coeffs_[k].str();
    if (k) out += "*z" + std::to_string(r.conductor()) + "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

}  // namespace lsiso
