#include "lsiso/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "lsiso/errors.hpp"

namespace lsiso {

bool IntComposition::in_M() const {
  return std::all_of(parts.begin(), parts.end(), [](int v) { return v >= 0; });
}

bool IntComposition::is_partition() const {
  if (!in_M()) return false;
  for (std::size_t i = 1; i < parts.size(); ++i)
    if (parts[i] > parts[i - 1]) return false;
  return std::accumulate(parts.begin(), parts.end(), 0) == d();
}

std::string IntComposition::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts[i]);
  }
  return out + ")";
}

Partition::Partition(std::vector<int> p) {
  int n = std::accumulate(p.begin(), p.end(), 0);
  while (!p.empty() && p.back() == 0) p.pop_back();
  *this = Partition(std::move(p), n);
}

Partition::Partition(std::vector<int> p, int d) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  if (static_cast<int>(p.size()) > d) throw DomainError("partition has more parts than its degree");
  p.resize(d, 0);
  parts = std::move(p);
  if (!is_partition()) throw DomainError("not a partition of " + std::to_string(d) + ": " + str());
}

Partition Partition::from(const IntComposition& c) { return Partition(c.parts, c.d()); }

int Partition::length() const {
  return static_cast<int>(std::count_if(parts.begin(), parts.end(), [](int v) { return v > 0; }));
}

std::vector<int> Partition::nonzero() const {
  return std::vector<int>(parts.begin(), parts.begin() + length());
}

std::vector<int> Partition::multiplicities() const {
  std::vector<int> m(d(), 0);
  for (int v : parts)
    if (v > 0) ++m[v - 1];
  return m;
}

std::string Partition::str() const {
  auto nz = nonzero();
  std::string out;
  for (std::size_t i = 0; i < nz.size();) {
    std::size_t j = i;
    while (j < nz.size() && nz[j] == nz[i]) ++j;
    if (!out.empty()) out += ',';
    out += std::to_string(nz[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

static void check_degree(const IntComposition& l, const IntComposition& m) {
  if (l.d() != m.d()) throw DomainError("degree mismatch");
}

Dominance compare_dominance(const IntComposition& l, const IntComposition& m) {
  check_degree(l, m);
  bool le = true, ge = true;
  int sl = 0, sm = 0;
  for (int i = 0; i < l.d(); ++i) {
    sl += l.parts[i];
    sm += m.parts[i];
    if (sl > sm) le = false;
    if (sl < sm) ge = false;
  }
  if (le && ge) return Dominance::equal;
  if (le) return Dominance::less;
  if (ge) return Dominance::greater;
  return Dominance::incomparable;
}

bool dominance_leq(const IntComposition& l, const IntComposition& m) {
  auto c = compare_dominance(l, m);
  return c == Dominance::less || c == Dominance::equal;
}

IntComposition rho(int i, int j, const IntComposition& l) {
  if (i < 1 || j < 1 || i > l.d() || j > l.d()) throw DomainError("raising operator index out of range");
  IntComposition out = l;
  if (i < j) {
    ++out.parts[i - 1];
    --out.parts[j - 1];
  }
  return out;
}

RStats r_stats(const IntComposition& l, const IntComposition& m) {
  check_degree(l, m);
  RStats s;
  int acc = 0;
  for (int k = 0; k + 1 < l.d(); ++k) {
    acc += m.parts[k] - l.parts[k];
    s.r.push_back(acc);
    s.total += acc;
  }
  return s;
}

int q_stat(const IntComposition& l, const IntComposition& m) {
  check_degree(l, m);
  int q = 0;
  while (q < l.d() && l.parts[q] == m.parts[q]) ++q;
  return q;
}

std::vector<int> raising_chain(const IntComposition& l0, const IntComposition& m) {
  check_degree(l0, m);
  if (!l0.in_M() || !m.in_M()) throw DomainError("raising_chain needs compositions in M_d");
  if (!dominance_leq(l0, m)) throw DomainError("raising_chain needs l <= m");
  const int d = l0.d();
  IntComposition l = l0;
  std::vector<int> chain;
  while (l != m) {
    const int q = q_stat(l, m);
    const int i = q + 1;
    // r_k for k = 1..d (r_d = 0)
    std::vector<int> r(d + 1, 0);
    for (int k = 1; k <= d; ++k) r[k] = r[k - 1] + m[k] - l[k];
    int kappa = 2;
    while (r[q + kappa] != 0) ++kappa;
    int j = q + 2;
    while (l[j] < 1) ++j;
    if (j > q + kappa) throw DomainError("raising_chain: no admissible j (internal)");
    for (int k = j - 1; k >= i; --k) {
      chain.push_back(k);
      l = rho(k, k + 1, l);
    }
  }
  return chain;
}

bool is_adjacent(const IntComposition& l, const IntComposition& m) {
  check_degree(l, m);
  int up = -1, down = -1, nz = 0;
  for (int k = 0; k < l.d(); ++k) {
    int diff = m.parts[k] - l.parts[k];
    if (diff == 0) continue;
    ++nz;
    if (diff == 1) up = k;
    else if (diff == -1) down = k;
    else return false;
  }
  return nz == 2 && up >= 0 && down >= 0 && up < down;
}

bool is_neighbor_M(const IntComposition& l, const IntComposition& m) {
  check_degree(l, m);
  for (int i = 1; i < l.d(); ++i)
    if (rho(i, i + 1, l) == m) return true;
  return false;
}

bool is_neighbor_P(const Partition& lambda, const Partition& mu) {
  check_degree(lambda, mu);
  const int d = lambda.d();
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j)
      if (rho(i, j, lambda) == mu && (j == i + 1 || lambda[i] == lambda[j])) return true;
  return false;
}

static void partitions_rec(int left, int maxpart, std::vector<int>& cur, int d,
                           std::vector<Partition>& out) {
  if (left == 0) {
    out.emplace_back(cur, d);
    return;
  }
  for (int p = std::min(left, maxpart); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(left - p, p, cur, d, out);
    cur.pop_back();
  }
}

std::vector<Partition> all_partitions(int d) {
  if (d < 1) throw DomainError("degree must be positive");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(d, d, cur, d, out);
  return out;
}

std::vector<Partition> covers_above(const Partition& lambda) {
  std::vector<Partition> out;
  const int d = lambda.d();
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j) {
      auto m = rho(i, j, lambda);
      if (!m.is_partition()) continue;
      Partition mu = Partition::from(m);
      if (is_neighbor_P(lambda, mu) && std::find(out.begin(), out.end(), mu) == out.end())
        out.push_back(mu);
    }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

std::uint64_t z(const Partition& lambda) {
  auto m = lambda.multiplicities();
  std::uint64_t out = 1;
  for (int k = 1; k <= lambda.d(); ++k)
    for (int c = 1; c <= m[k - 1]; ++c) out *= static_cast<std::uint64_t>(k) * c;
  return out;
}

Partition parse_partition(const std::string& text, int d) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')') s += c;
  if (s.empty()) throw ParseError("empty partition");
  std::vector<int> parts;
  std::size_t pos = 0;
  auto number = [&](std::size_t& p) {
    std::size_t start = p;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
    if (p == start || p - start > 4) throw ParseError("bad partition syntax: " + text);
    return std::stoi(s.substr(start, p - start));
  };
  while (pos < s.size()) {
    int part = number(pos);
    int mult = 1;
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      mult = number(pos);
    }
    if (part < 1 || mult < 1) throw ParseError("partition parts must be positive: " + text);
    for (int k = 0; k < mult; ++k) parts.push_back(part);
    if (pos < s.size()) {
      if (s[pos] != ',') throw ParseError("bad partition syntax: " + text);
      ++pos;
      if (pos == s.size()) throw ParseError("trailing comma in partition: " + text);
    }
  }
  if (!std::is_sorted(parts.rbegin(), parts.rend())) throw ParseError("parts must be weakly decreasing: " + text);
  int n = std::accumulate(parts.begin(), parts.end(), 0);
  if (d > 0 && n != d) throw ParseError("partition " + text + " is not of " + std::to_string(d));
  return Partition(parts, n);
}

}  // namespace lsiso
