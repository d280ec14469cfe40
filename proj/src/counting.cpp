#include "lsiso/counting.hpp"

#include <algorithm>
#include <functional>

#include "lsiso/dissection.hpp"
#include "lsiso/errors.hpp"
#include "lsiso/orbit.hpp"

namespace lsiso {

Cyclotomic PowerSumPoly::coeff(const Partition& alpha) const {
  auto it = coeffs.find(alpha);
  return it == coeffs.end() ? Cyclotomic() : it->second;
}

void PowerSumPoly::add(const Partition& alpha, const Cyclotomic& c) {
  auto [it, fresh] = coeffs.emplace(alpha, c);
  if (!fresh) it->second += c;
  if (it->second.is_zero()) coeffs.erase(it);
}

static Partition union_of(const Partition& a, const Partition& b) {
  auto p = a.nonzero();
  auto q = b.nonzero();
  p.insert(p.end(), q.begin(), q.end());
  std::sort(p.rbegin(), p.rend());
  return Partition(p, a.d() + b.d());
}

PowerSumPoly cycle_index(const PermGroup& W, const OneDimCharacter& chi) {
  if (!chi.group().same_as(W) && (chi.group().order() != W.order() || !is_subgroup(W, chi.group())))
    throw DomainError("character is not defined on W");
  PowerSumPoly Z;
  Z.d = W.degree();
  const Rational w(1, static_cast<long long>(W.order()));
  for (const auto& c : W.classes())
    for (const auto& s : c.members) Z.add(c.cycle_type.partition, Cyclotomic::root(chi.exponent(s), chi.order(), w));
  return Z;
}

PowerSumPoly multiply(const PowerSumPoly& f, const PowerSumPoly& g) {
  PowerSumPoly out;
  out.d = f.d + g.d;
  for (auto& [a, ca] : f.coeffs)
    for (auto& [b, cb] : g.coeffs) out.add(union_of(a, b), ca * cb);
  return out;
}

// h_n (sign=false) or e_n (sign=true) in the power-sum basis.
static PowerSumPoly elementary_block(int n, bool sign) {
  PowerSumPoly out;
  out.d = n;
  for (auto& a : all_partitions(n)) {
    Rational c(1, static_cast<long long>(z(a)));
    if (sign && (n - a.length()) % 2) c = -c;
    out.add(a, Cyclotomic(c));
  }
  return out;
}

PowerSumPoly theta_poly(const Partition& lambda, const std::vector<bool>& mask) {
  const auto parts = lambda.nonzero();
  if (!mask.empty() && mask.size() != parts.size()) throw DomainError("theta mask length mismatch");
  PowerSumPoly out;
  out.d = 0;
  bool first = true;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    auto block = elementary_block(parts[k], !mask.empty() && mask[k]);
    out = first ? block : multiply(out, block);
    first = false;
  }
  return out;
}

PowerSumPoly h_poly(const Partition& lambda) { return theta_poly(lambda, {}); }

Cyclotomic scalar(const PowerSumPoly& f, const PowerSumPoly& g) {
  if (f.d != g.d) throw DomainError("degree mismatch in scalar product");
  Cyclotomic out;
  for (auto& [a, ca] : f.coeffs) {
    auto it = g.coeffs.find(a);
    if (it == g.coeffs.end()) continue;
    out += ca * it->second.conj() * Rational(static_cast<long long>(z(a)));
  }
  return out;
}

static std::uint64_t as_count(const Cyclotomic& v, const char* what) {
  if (!v.is_rational()) throw IntegralityError(std::string(what) + ": non-real count " + v.str());
  Rational r = v.rational_value();
  if (denominator(r) != 1 || r < 0)
    throw IntegralityError(std::string(what) + ": count is not a nonnegative integer: " + r.str());
  return static_cast<std::uint64_t>(numerator(r));
}

static std::uint64_t as_count(const Rational& r, const char* what) { return as_count(Cyclotomic(r), what); }

std::uint64_t count_via_scalar(const PermGroup& W, const OneDimCharacter& chi, const Partition& lambda,
                               const std::vector<bool>& theta) {
  if (W.degree() != lambda.d()) throw DomainError("degree mismatch");
  return as_count(scalar(cycle_index(W, chi), theta_poly(lambda, theta)), "scalar");
}

std::vector<std::vector<Partition>> block_splittings(const Partition& alpha, const Partition& lambda) {
  const auto parts = lambda.nonzero();
  std::vector<int> left = alpha.multiplicities();  // by cycle length
  std::vector<std::vector<Partition>> out;
  std::vector<Partition> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == parts.size()) {
      if (std::all_of(left.begin(), left.end(), [](int v) { return v == 0; })) out.push_back(cur);
      return;
    }
    for (auto& beta : all_partitions(parts[k])) {
      auto m = beta.multiplicities();
      bool fits = true;
      for (std::size_t len = 0; len < m.size() && fits; ++len)
        fits = len < left.size() && m[len] <= left[len];
      if (!fits) continue;
      for (std::size_t len = 0; len < m.size(); ++len) left[len] -= m[len];
      cur.push_back(beta);
      rec(k + 1);
      cur.pop_back();
      for (std::size_t len = 0; len < m.size(); ++len) left[len] += m[len];
    }
  };
  rec(0);
  return out;
}

static bool is_identity_type(const Partition& a) { return a.length() == a.d(); }

static Rational leading_term(const PermGroup& W, const Partition& lambda) {
  BigInt den = W.order();
  for (int p : lambda.nonzero()) den *= factorial(p);
  return Rational(BigInt(factorial(lambda.d())), den);
}

std::uint64_t count_527(const PermGroup& W, const OneDimCharacter& chi, const Partition& lambda,
                        const std::vector<bool>& theta) {
  if (W.degree() != lambda.d()) throw DomainError("degree mismatch");
  const auto parts = lambda.nonzero();
  const std::vector<bool> mask = theta.empty() ? std::vector<bool>(parts.size(), false) : theta;
  if (mask.size() != parts.size()) throw DomainError("theta mask length mismatch");
  if (!chi.group().same_as(W) && (chi.group().order() != W.order() || !is_subgroup(W, chi.group())))
    throw DomainError("character is not defined on W");

  // class sums sum_{C in W_alpha} |C| chi(C)
  std::map<Partition, Cyclotomic> chisum;
  for (const auto& c : W.classes()) {
    Cyclotomic v = Cyclotomic::root(chi.exponent(c.representative), chi.order(),
                                    Rational(static_cast<long long>(c.members.size())));
    chisum[c.cycle_type.partition] += v;
  }
  Cyclotomic total(leading_term(W, lambda));
  const Rational inv_w(1, static_cast<long long>(W.order()));
  for (auto& [alpha, cs] : chisum) {
    if (is_identity_type(alpha)) continue;
    Rational inner = 0;
    for (auto& tuple : block_splittings(alpha, lambda)) {
      Rational t(static_cast<long long>(z(alpha)));
      for (std::size_t k = 0; k < tuple.size(); ++k) {
        t /= static_cast<long long>(z(tuple[k]));
        if (mask[k] && (parts[k] - tuple[k].length()) % 2) t = -t;
      }
      inner += t;
    }
    if (inner != 0) total += cs * (inv_w * inner);
  }
  return as_count(total, "count_527");
}

std::uint64_t count_529(const PermGroup& W, const Partition& lambda) {
  if (W.degree() != lambda.d()) throw DomainError("degree mismatch");
  auto census = cycle_type_census(W);
  Rational total = leading_term(W, lambda);
  for (auto& [alpha, n] : census) {
    if (is_identity_type(alpha)) continue;
    Rational inner = 0;
    for (auto& tuple : block_splittings(alpha, lambda)) {
      Rational t(static_cast<long long>(z(alpha)));
      for (auto& b : tuple) t /= static_cast<long long>(z(b));
      inner += t;
    }
    total += Rational(static_cast<long long>(n), static_cast<long long>(W.order())) * inner;
  }
  return as_count(total, "count_529");
}

// |(S_lambda)_alpha| for every alpha, by convolving the blocks' class sizes.
static std::map<Partition, BigInt> young_type_census(const Partition& lambda) {
  std::map<Partition, BigInt> acc;
  bool first = true;
  for (int p : lambda.nonzero()) {
    std::map<Partition, BigInt> block;
    for (auto& b : all_partitions(p)) block[b] = BigInt(factorial(p) / z(b));
    if (first) {
      acc = block;
      first = false;
      continue;
    }
    std::map<Partition, BigInt> next;
    for (auto& [a, ca] : acc)
      for (auto& [b, cb] : block) next[union_of(a, b)] += ca * cb;
    acc = std::move(next);
  }
  return acc;
}

std::uint64_t count_ruch(const PermGroup& W, const Partition& lambda) {
  if (W.degree() != lambda.d()) throw DomainError("degree mismatch");
  const int d = lambda.d();
  auto wc = cycle_type_census(W);
  auto sc = young_type_census(lambda);
  BigInt s_order = 1;
  for (int p : lambda.nonzero()) s_order *= factorial(p);
  Rational sum = 0;
  for (auto& [alpha, n] : wc) {
    auto it = sc.find(alpha);
    if (it == sc.end()) continue;
    BigInt K = BigInt(factorial(d)) / BigInt(z(alpha));
    sum += Rational(BigInt(n) * it->second, K);
  }
  Rational total = Rational(BigInt(factorial(d)), BigInt(W.order()) * s_order) * sum;
  return as_count(total, "count_ruch");
}

std::uint64_t brute_force_count(const PermGroup& W, const Partition& lambda, const OneDimCharacter* chi,
                                const std::vector<bool>& theta) {
  if (lambda.d() > kBruteMaxDegree) throw CapExceeded("brute force limited to degree " + std::to_string(kBruteMaxDegree));
  auto space = orbits(W, lambda);
  if (!chi && theta.empty()) return space.orbits.size();
  const OneDimCharacter c = chi ? *chi : unit_character(W);
  std::uint64_t n = 0;
  for (auto& o : space.orbits) n += is_chi_theta_orbit(o, c, theta);
  return n;
}

std::map<Partition, std::size_t> cycle_type_census(const PermGroup& W) {
  std::map<Partition, std::size_t> out;
  for (auto& c : W.classes()) out[c.cycle_type.partition] += c.members.size();
  return out;
}

bool combinatorially_equivalent(const PermGroup& W, const PermGroup& Wprime) {
  if (W.degree() != Wprime.degree()) throw DomainError("degree mismatch");
  return cycle_type_census(W) == cycle_type_census(Wprime);
}

std::vector<MonotonicityViolation> monotonicity_check(const PermGroup& W, const OneDimCharacter& chi) {
  const auto shapes = all_partitions(W.degree());
  std::vector<std::uint64_t> n;
  for (auto& l : shapes) n.push_back(count_527(W, chi, l));
  std::vector<MonotonicityViolation> out;
  for (std::size_t a = 0; a < shapes.size(); ++a)
    for (std::size_t b = 0; b < shapes.size(); ++b)
      if (a != b && dominance_leq(shapes[a], shapes[b]) && n[a] < n[b])
        out.push_back({shapes[a], shapes[b], n[a], n[b]});
  return out;
}

std::string mask_name(const std::vector<bool>& mask) {
  if (std::none_of(mask.begin(), mask.end(), [](bool b) { return b; })) return "1";
  std::string out;
  for (std::size_t k = 0; k < mask.size(); ++k) {
    if (k) out += '*';
    out += mask[k] ? "sgn" : "1";
  }
  return out;
}

CountReport count_report(const PermGroup& W, const OneDimCharacter& chi, const Partition& lambda,
                         const std::vector<bool>& theta, int brute_max, std::string chi_name) {
  CountReport r;
  r.shape = lambda;
  r.chi = std::move(chi_name);
  r.theta = mask_name(theta);
  r.scalar = count_via_scalar(W, chi, lambda, theta);
  r.t527 = count_527(W, chi, lambda, theta);
  const bool plain = chi.is_unit() && r.theta == "1";
  if (plain) {
    r.t529 = count_529(W, lambda);
    r.ruch = count_ruch(W, lambda);
  }
  if (lambda.d() <= brute_max) r.brute = brute_force_count(W, lambda, &chi, theta);
  r.agree = r.scalar == r.t527;
  for (auto& v : {r.t529, r.ruch, r.brute})
    if (v) r.agree = r.agree && *v == r.scalar;
  return r;
}

}  // namespace lsiso
