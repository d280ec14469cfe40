#include "lsiso/dissection.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "lsiso/errors.hpp"

namespace lsiso {

OrderedDissection OrderedDissection::from_epsilon(const std::vector<int>& eps) {
  const int d = static_cast<int>(eps.size());
  if (d < 1 || d > kMaxDegree) throw DomainError("degree out of range");
  OrderedDissection A;
  A.eps_.resize(d);
  for (int s = 0; s < d; ++s) {
    if (eps[s] < 1 || eps[s] > d) throw DomainError("component index out of range");
    A.eps_[s] = static_cast<std::uint8_t>(eps[s] - 1);
  }
  return A;
}

OrderedDissection OrderedDissection::from_components(const std::vector<std::vector<int>>& comps, int d) {
  if (static_cast<int>(comps.size()) > d) throw DomainError("more components than points");
  std::vector<int> eps(d, 0);
  for (std::size_t k = 0; k < comps.size(); ++k)
    for (int s : comps[k]) {
      if (s < 1 || s > d) throw DomainError("point out of range: " + std::to_string(s));
      if (eps[s - 1]) throw DomainError("components are not disjoint at " + std::to_string(s));
      eps[s - 1] = static_cast<int>(k) + 1;
    }
  for (int s = 0; s < d; ++s)
    if (!eps[s]) throw DomainError("point " + std::to_string(s + 1) + " missing from every component");
  return from_epsilon(eps);
}

OrderedDissection OrderedDissection::from_key(std::uint64_t key, int d) {
  OrderedDissection A;
  A.eps_.resize(d);
  for (int s = d - 1; s >= 0; --s, key >>= 4) A.eps_[s] = static_cast<std::uint8_t>(key & 15u);
  return A;
}

std::vector<std::vector<int>> OrderedDissection::components() const {
  std::vector<std::vector<int>> out(eps_.size());
  for (std::size_t s = 0; s < eps_.size(); ++s) out[eps_[s]].push_back(static_cast<int>(s) + 1);
  return out;
}

IntComposition OrderedDissection::shape() const {
  std::vector<int> l(eps_.size(), 0);
  for (auto e : eps_) ++l[e];
  return IntComposition(std::move(l));
}

bool OrderedDissection::is_tabloid() const { return shape().is_partition(); }

std::uint64_t OrderedDissection::key() const {
  std::uint64_t k = 0;
  for (auto e : eps_) k = (k << 4) | e;
  return k;
}

std::string OrderedDissection::str() const {
  std::string out;
  for (auto& c : components()) {
    out += '{';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(c[i]);
    }
    out += '}';
  }
  return out;
}

std::strong_ordering operator<=>(const OrderedDissection& a, const OrderedDissection& b) {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  if (a.eps_ == b.eps_) return std::strong_ordering::equal;
  return a.components() <=> b.components();
}

OrderedDissection parse_dissection(const std::string& text, int d) {
  std::vector<std::vector<int>> comps;
  std::size_t pos = 0;
  auto ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  ws();
  if (pos < text.size() && text[pos] == '(') {
    // also accept the tuple form ({1,2},{3,4},{},{})
    std::string inner;
    for (char c : text)
      if (c != '(' && c != ')') inner += c;
    std::string flat;
    int depth = 0;
    for (char c : inner) {
      if (c == '{') ++depth;
      if (c == '}') --depth;
      if (c == ',' && depth == 0) continue;
      flat += c;
    }
    return parse_dissection(flat, d);
  }
  while (true) {
    ws();
    if (pos == text.size()) break;
    if (text[pos] != '{') throw ParseError("expected '{' in tabloid: " + text);
    std::size_t close = text.find('}', ++pos);
    if (close == std::string::npos) throw ParseError("unbalanced braces: " + text);
    std::string body = text.substr(pos, close - pos);
    pos = close + 1;
    std::vector<int> comp;
    std::string tok;
    auto flush = [&] {
      if (tok.empty()) return;
      for (char c : tok)
        if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad tabloid entry: " + tok);
      comp.push_back(std::stoi(tok));
      tok.clear();
    };
    for (char c : body) {
      if (c == ',' || std::isspace(static_cast<unsigned char>(c))) flush();
      else tok += c;
    }
    flush();
    std::sort(comp.begin(), comp.end());
    comps.push_back(comp);
  }
  if (static_cast<int>(comps.size()) > d) throw ParseError("more components than points: " + text);
  try {
    return OrderedDissection::from_components(comps, d);
  } catch (const DomainError& e) {
    throw ParseError(std::string(e.what()) + ": " + text);
  }
}

OrderedDissection act(const Permutation& z, const OrderedDissection& A) {
  if (z.degree() != A.degree()) throw DomainError("degree mismatch");
  std::vector<int> eps(A.degree());
  for (int s = 1; s <= A.degree(); ++s) eps[z(s) - 1] = A.epsilon(s);
  return OrderedDissection::from_epsilon(eps);
}

IntComposition shape(const OrderedDissection& A) { return A.shape(); }
int epsilon(const OrderedDissection& A, int s) { return A.epsilon(s); }

bool leq_dissection(const OrderedDissection& A, const OrderedDissection& B) {
  if (A.degree() != B.degree()) throw DomainError("degree mismatch");
  for (int s = 0; s < A.degree(); ++s)
    if (B.raw()[s] > A.raw()[s]) return false;
  return true;
}

OrderedDissection raise(int i, int s, const OrderedDissection& A) {
  const int d = A.degree();
  if (i < 1 || i > d || s < 1 || s > d) throw DomainError("raising operator index out of range");
  if (A.epsilon(s) <= i) return A;
  std::vector<int> eps(d);
  for (int t = 1; t <= d; ++t) eps[t - 1] = A.epsilon(t);
  eps[s - 1] = i;
  return OrderedDissection::from_epsilon(eps);
}

OrderedDissection raise_set(int i, const std::vector<int>& X, const OrderedDissection& A) {
  OrderedDissection out = A;
  for (int x : X) out = raise(i, x, out);
  return out;
}

OrderedDissection apply_moves(const std::vector<Move>& moves, const OrderedDissection& A) {
  OrderedDissection out = A;
  for (auto [i, s] : moves) out = raise(i, s, out);
  return out;
}

std::optional<std::vector<Move>> find_raising(const OrderedDissection& A, const OrderedDissection& B) {
  if (!leq_dissection(A, B)) return std::nullopt;
  std::vector<Move> moves;
  for (int s = 1; s <= A.degree(); ++s)
    if (B.epsilon(s) < A.epsilon(s)) moves.emplace_back(B.epsilon(s), s);
  std::sort(moves.begin(), moves.end());  // R_{q+1,X_{q+1}} is applied first
  return moves;
}

OrderedDissection lift_composition(const OrderedDissection& A0, const OrderedDissection& B,
                                   const IntComposition& n) {
  const int d = A0.degree();
  if (n.d() != d || B.degree() != d) throw DomainError("degree mismatch");
  if (!n.in_M()) throw DomainError("target composition has negative entries");
  if (!leq_dissection(A0, B)) throw DomainError("lift_composition needs A <= B");
  if (!dominance_leq(A0.shape(), n) || !dominance_leq(n, B.shape()))
    throw DomainError("target composition outside [shape(A), shape(B)]");
  std::vector<int> eps(d);
  for (int s = 1; s <= d; ++s) eps[s - 1] = A0.epsilon(s);
  while (true) {
    auto A = OrderedDissection::from_epsilon(eps);
    const auto l = A.shape();
    const int q = q_stat(l, n);
    if (q == d) return A;
    const int i = q + 1;
    const int c = n[i] - l[i];
    if (c < 0) throw DomainError("no lift: shape overshoots the target");
    std::vector<int> cand;  // in B's i-th prefix union but not in A's
    for (int s = 1; s <= d; ++s)
      if (B.epsilon(s) <= i && eps[s - 1] > i) cand.push_back(s);
    if (static_cast<int>(cand.size()) < c) throw DomainError("no lift exists for this target");
    // lexicographically smallest c-subset keeping the shape below n
    std::vector<int> idx(c);
    std::iota(idx.begin(), idx.end(), 0);
    bool found = false;
    while (true) {
      auto trial = eps;
      for (int k : idx) trial[cand[k] - 1] = i;
      if (dominance_leq(OrderedDissection::from_epsilon(trial).shape(), n)) {
        eps = trial;
        found = true;
        break;
      }
      int k = c - 1;
      while (k >= 0 && idx[k] == static_cast<int>(cand.size()) - c + k) --k;
      if (k < 0) break;
      ++idx[k];
      for (int t = k + 1; t < c; ++t) idx[t] = idx[t - 1] + 1;
    }
    if (!found) throw DomainError("no lift exists for this target");
  }
}

// Odometer over the box eps_B <= eps_X <= eps_A.
template <class F>
static void for_each_in_box(const OrderedDissection& A, const OrderedDissection& B, F&& f) {
  const int d = A.degree();
  std::vector<int> lo(d), hi(d), cur(d);
  for (int s = 0; s < d; ++s) {
    lo[s] = B.raw()[s];
    hi[s] = A.raw()[s];
    cur[s] = lo[s];
  }
  while (true) {
    if (!f(cur)) return;
    int s = d - 1;
    while (s >= 0 && cur[s] == hi[s]) cur[s] = lo[s], --s;
    if (s < 0) return;
    ++cur[s];
  }
}

static OrderedDissection from_raw(const std::vector<int>& raw) {
  std::vector<int> eps(raw.size());
  for (std::size_t s = 0; s < raw.size(); ++s) eps[s] = raw[s] + 1;
  return OrderedDissection::from_epsilon(eps);
}

static std::vector<int> raw_shape(const std::vector<int>& raw) {
  std::vector<int> l(raw.size(), 0);
  for (int e : raw) ++l[e];
  return l;
}

std::vector<OrderedDissection> dissection_interval(const OrderedDissection& A, const OrderedDissection& B,
                                                   bool tabloids_only) {
  if (!leq_dissection(A, B)) throw DomainError("interval needs A <= B");
  std::vector<OrderedDissection> out;
  for_each_in_box(A, B, [&](const std::vector<int>& cur) {
    if (!tabloids_only || IntComposition(raw_shape(cur)).is_partition()) out.push_back(from_raw(cur));
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IntComposition> interval_image(const OrderedDissection& A, const OrderedDissection& B) {
  if (!leq_dissection(A, B)) throw DomainError("interval_image needs A <= B");
  std::vector<IntComposition> out;
  for_each_in_box(A, B, [&](const std::vector<int>& cur) {
    out.emplace_back(raw_shape(cur));
    return true;
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Moved points ordered by target; a chain when each source is the next target.
static std::optional<NeighborWitness> chain_of(const OrderedDissection& A, const OrderedDissection& B) {
  std::vector<std::pair<int, int>> moved;  // (eps_B(s), s)
  for (int s = 1; s <= A.degree(); ++s)
    if (A.epsilon(s) != B.epsilon(s)) moved.emplace_back(B.epsilon(s), s);
  if (moved.empty()) return std::nullopt;
  std::sort(moved.begin(), moved.end());
  NeighborWitness w;
  for (std::size_t k = 0; k < moved.size(); ++k) {
    auto [target, s] = moved[k];
    if (k + 1 < moved.size() && A.epsilon(s) != moved[k + 1].first) return std::nullopt;
    if (target >= A.epsilon(s)) return std::nullopt;
    w.indices.push_back(target);
    w.points.push_back(s);
  }
  w.indices.push_back(A.epsilon(moved.back().second));
  w.i = w.indices.front();
  w.j = w.indices.back();
  return w;
}

std::vector<Move> adjacent_decomposition(const OrderedDissection& A, const OrderedDissection& B) {
  if (A == B || !leq_dissection(A, B)) throw DomainError("adjacent_decomposition needs A < B");
  if (!is_adjacent(A.shape(), B.shape())) throw DomainError("pair is not adjacent");
  auto w = chain_of(A, B);
  if (!w) throw DomainError("adjacent pair without a substitution chain");
  std::vector<Move> out;
  for (std::size_t k = 0; k < w->points.size(); ++k) out.emplace_back(w->indices[k], w->points[k]);
  return out;
}

bool is_neighbor_Delta(const OrderedDissection& A, const OrderedDissection& B) {
  if (A.degree() != B.degree()) throw DomainError("degree mismatch");
  int diff = 0;
  bool ok = true;
  for (int s = 1; s <= A.degree(); ++s) {
    if (A.epsilon(s) == B.epsilon(s)) continue;
    ++diff;
    ok = ok && A.epsilon(s) == B.epsilon(s) + 1;
  }
  return diff == 1 && ok;
}

std::optional<NeighborWitness> neighbor_witness(const Tabloid& A, const Tabloid& B) {
  if (A == B || !leq_dissection(A, B)) return std::nullopt;
  auto w = chain_of(A, B);
  if (!w) return std::nullopt;
  const auto la = A.shape();
  if (w->j == w->i + 1 || la[w->i] == la[w->j]) return w;
  return std::nullopt;
}

bool is_neighbor_T(const Tabloid& A, const Tabloid& B) {
  if (A == B || !leq_dissection(A, B)) return false;
  if (neighbor_witness(A, B)) return true;
  bool between = false;
  const auto ka = A.raw(), kb = B.raw();
  for_each_in_box(A, B, [&](const std::vector<int>& cur) {
    bool endpoint_a = true, endpoint_b = true;
    for (std::size_t s = 0; s < cur.size(); ++s) {
      endpoint_a = endpoint_a && cur[s] == ka[s];
      endpoint_b = endpoint_b && cur[s] == kb[s];
    }
    if (!endpoint_a && !endpoint_b && IntComposition(raw_shape(cur)).is_partition()) between = true;
    return !between;
  });
  return !between;
}

static void tabloids_rec(const std::vector<int>& parts, std::size_t k, std::vector<int>& eps,
                         std::vector<Tabloid>& out) {
  const int d = static_cast<int>(eps.size());
  if (k == parts.size()) {
    out.push_back(OrderedDissection::from_epsilon(eps));
    return;
  }
  std::vector<int> free;
  for (int s = 0; s < d; ++s)
    if (!eps[s]) free.push_back(s);
  const int c = parts[k];
  std::vector<int> idx(c);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    for (int t : idx) eps[free[t]] = static_cast<int>(k) + 1;
    tabloids_rec(parts, k + 1, eps, out);
    for (int t : idx) eps[free[t]] = 0;
    int i = c - 1;
    while (i >= 0 && idx[i] == static_cast<int>(free.size()) - c + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int t = i + 1; t < c; ++t) idx[t] = idx[t - 1] + 1;
  }
}

std::vector<Tabloid> all_tabloids(const Partition& lambda) {
  std::vector<int> eps(lambda.d(), 0);
  std::vector<Tabloid> out;
  tabloids_rec(lambda.nonzero(), 0, eps, out);
  return out;
}

Tabloid identity_tabloid(const Partition& lambda) {
  std::vector<int> eps;
  int k = 1;
  for (int p : lambda.nonzero()) {
    for (int t = 0; t < p; ++t) eps.push_back(k);
    ++k;
  }
  return OrderedDissection::from_epsilon(eps);
}

}  // namespace lsiso
