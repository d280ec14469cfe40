#include "oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace lsiso::oracle {

static void compositions_rec(int left, int slots, std::vector<int>& cur, std::vector<IntComposition>& out) {
  if (slots == 0) {
    if (left == 0) out.emplace_back(cur);
    return;
  }
  for (int v = left; v >= 0; --v) {
    cur.push_back(v);
    compositions_rec(left - v, slots - 1, cur, out);
    cur.pop_back();
  }
}

std::vector<IntComposition> all_compositions(int d) {
  std::vector<IntComposition> out;
  std::vector<int> cur;
  compositions_rec(d, d, cur, out);
  return out;
}

std::vector<OrderedDissection> all_dissections(int d) {
  std::vector<OrderedDissection> out;
  std::vector<int> eps(d, 1);
  while (true) {
    out.push_back(OrderedDissection::from_epsilon(eps));
    int s = d - 1;
    while (s >= 0 && eps[s] == d) eps[s--] = 1;
    if (s < 0) break;
    ++eps[s];
  }
  return out;
}

std::vector<Tabloid> all_tabloids_of_degree(int d) {
  std::vector<Tabloid> out;
  for (auto& A : all_dissections(d)) {
    auto comps = A.components();
    bool dec = true;
    for (std::size_t k = 1; k < comps.size(); ++k) dec = dec && comps[k].size() <= comps[k - 1].size();
    if (dec) out.push_back(A);
  }
  return out;
}

bool dominance(const IntComposition& l, const IntComposition& m) {
  for (int i = 1; i <= l.d(); ++i) {
    int a = 0, b = 0;
    for (int k = 1; k <= i; ++k) a += l[k], b += m[k];
    if (a > b) return false;
  }
  return true;
}

bool dissection_leq(const OrderedDissection& A, const OrderedDissection& B) {
  auto ca = A.components(), cb = B.components();
  std::set<int> ua, ub;
  for (std::size_t i = 0; i < ca.size(); ++i) {
    ua.insert(ca[i].begin(), ca[i].end());
    ub.insert(cb[i].begin(), cb[i].end());
    if (!std::includes(ub.begin(), ub.end(), ua.begin(), ua.end())) return false;
  }
  return true;
}

bool delta_cover_box(const OrderedDissection& A, const OrderedDissection& B) {
  if (A == B || !dissection_leq(A, B)) return false;
  const int d = A.degree();
  std::vector<int> cur(d);
  for (int s = 1; s <= d; ++s) cur[s - 1] = B.epsilon(s);
  while (true) {
    auto C = OrderedDissection::from_epsilon(cur);
    if (!(C == A) && !(C == B)) return false;
    int s = d - 1;
    while (s >= 0 && cur[s] == A.epsilon(s + 1)) cur[s] = B.epsilon(s + 1), --s;
    if (s < 0) return true;
    ++cur[s];
  }
}

bool member_orbit_leq(const Orbit& a, const Orbit& b) {
  for (auto& A : a.members)
    for (auto& B : b.members)
      if (dissection_leq(A, B)) return true;
  return false;
}

static bool same_orbit(const Orbit& a, const Orbit& b) {
  return a.shape == b.shape && a.representative == b.representative;
}

bool orbit_cover(const Orbit& a, const Orbit& b, const std::vector<const Orbit*>& all) {
  if (same_orbit(a, b) || !member_orbit_leq(a, b)) return false;
  for (auto* c : all) {
    if (same_orbit(*c, a) || same_orbit(*c, b)) continue;
    if (!dominance(a.shape, c->shape) || !dominance(c->shape, b.shape)) continue;
    if (member_orbit_leq(a, *c) && member_orbit_leq(*c, b)) return false;
  }
  return true;
}

std::set<std::pair<std::size_t, std::size_t>> orbit_hasse(const std::vector<const Orbit*>& all) {
  std::vector<std::size_t> idx(all.size());
  for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
  std::vector<std::vector<char>> le(all.size(), std::vector<char>(all.size(), 0));
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = 0; b < all.size(); ++b)
      le[a][b] = dominance(all[a]->shape, all[b]->shape) && member_orbit_leq(*all[a], *all[b]);
  auto edges = hasse(idx, [&](std::size_t a, std::size_t b) { return le[a][b] != 0; });
  return {edges.begin(), edges.end()};
}

std::uint64_t burnside_count(const PermGroup& W, const Partition& lambda) {
  std::vector<std::vector<std::uint8_t>> eps;
  for (auto& A : all_tabloids(lambda)) eps.push_back(A.raw());
  const int d = W.degree();
  std::uint64_t fixed = 0;
  for (auto& s : W.elements())
    for (auto& e : eps) {
      bool f = true;
      for (int p = 1; p <= d && f; ++p) f = e[s(p) - 1] == e[p - 1];
      fixed += f;
    }
  return fixed / W.order();
}

PermGroup commutator_subgroup(const PermGroup& W) {
  std::vector<Permutation> comms;
  std::set<Permutation> seen;
  for (auto& a : W.elements())
    for (auto& b : W.elements()) {
      auto c = compose(compose(inverse(a), inverse(b)), compose(a, b));
      if (seen.insert(c).second) comms.push_back(c);
    }
  return generate(comms, W.degree());
}

std::vector<IntComposition> interval_shapes(const OrderedDissection& A, const OrderedDissection& B) {
  std::set<IntComposition> out;
  for (auto& X : all_dissections(A.degree()))
    if (dissection_leq(A, X) && dissection_leq(X, B)) out.insert(X.shape());
  return {out.begin(), out.end()};
}

std::vector<OrbitSpace> all_orbit_spaces(const PermGroup& W) {
  std::vector<OrbitSpace> out;
  for (auto& l : all_partitions(W.degree())) out.push_back(orbits(W, l));
  return out;
}

Permutation random_permutation(std::mt19937& rng, int d) {
  std::vector<int> img(d);
  std::iota(img.begin(), img.end(), 1);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation::from_images(img);
}

PermGroup random_subgroup(std::mt19937& rng, int d) {
  std::uniform_int_distribution<int> ngen(1, 3);
  std::vector<Permutation> gens;
  int k = ngen(rng);
  for (int i = 0; i < k; ++i) {
    auto p = random_permutation(rng, d);
    // bias towards small groups: often replace by a power
    std::uniform_int_distribution<int> pw(1, 3);
    auto q = p;
    for (int t = 1, e = pw(rng); t < e; ++t) q = compose(q, p);
    gens.push_back(q);
  }
  return generate(gens, d);
}

Tabloid random_tabloid(std::mt19937& rng, const Partition& lambda) {
  return act(random_permutation(rng, lambda.d()), identity_tabloid(lambda));
}

Partition random_partition(std::mt19937& rng, int d) {
  auto all = all_partitions(d);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  return all[pick(rng)];
}

}  // namespace lsiso::oracle
