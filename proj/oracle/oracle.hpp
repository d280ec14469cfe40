#pragma once

#include <set>

#include <functional>
#include <random>
#include <vector>

#include "lsiso/counting.hpp"
#include "lsiso/dissection.hpp"
#include "lsiso/orbit.hpp"
#include "lsiso/partition.hpp"
#include "lsiso/perm.hpp"

// Slow, definition-level reference implementations. Nothing here uses the
// criteria or formulas it is meant to check.
namespace lsiso::oracle {

std::vector<IntComposition> all_compositions(int d);   // M_d
std::vector<OrderedDissection> all_dissections(int d); // Delta_d
std::vector<Tabloid> all_tabloids_of_degree(int d);    // T_d

// x < y with nothing strictly between, scanning the whole carrier.
template <class T, class Leq>
bool is_cover(const T& x, const T& y, const std::vector<T>& carrier, Leq leq) {
  if (x == y || !leq(x, y)) return false;
  for (const auto& c : carrier)
    if (!(c == x) && !(c == y) && leq(x, c) && leq(c, y)) return false;
  return true;
}

template <class T, class Leq>
std::vector<std::pair<std::size_t, std::size_t>> hasse(const std::vector<T>& carrier, Leq leq) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = carrier.size();
  std::vector<std::vector<char>> lt(n, std::vector<char>(n, 0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) lt[a][b] = a != b && leq(carrier[a], carrier[b]);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!lt[a][b]) continue;
      bool cover = true;
      for (std::size_t c = 0; c < n && cover; ++c) cover = !(lt[a][c] && lt[c][b]);
      if (cover) out.emplace_back(a, b);
    }
  return out;
}

// Prefix-sum dominance, written independently of the library.
bool dominance(const IntComposition& l, const IntComposition& m);
// Prefix-union containment, from the components.
bool dissection_leq(const OrderedDissection& A, const OrderedDissection& B);
// Cover in Delta_d by enumerating the box between ε_B and ε_A.
bool delta_cover_box(const OrderedDissection& A, const OrderedDissection& B);

// Orbits compared through all members.
bool member_orbit_leq(const Orbit& a, const Orbit& b);
// a < b with no orbit strictly between, among all orbits in `all`.
bool orbit_cover(const Orbit& a, const Orbit& b, const std::vector<const Orbit*>& all);

// All covers among `all` as index pairs (lower, upper), from a member-wise
// order matrix.
std::set<std::pair<std::size_t, std::size_t>> orbit_hasse(const std::vector<const Orbit*>& all);

// Burnside: average number of fixed tabloids.
std::uint64_t burnside_count(const PermGroup& W, const Partition& lambda);
PermGroup commutator_subgroup(const PermGroup& W);
std::vector<IntComposition> interval_shapes(const OrderedDissection& A, const OrderedDissection& B);

// Orbit spaces of every shape of degree W.degree().
std::vector<OrbitSpace> all_orbit_spaces(const PermGroup& W);

// Subgroup of S_d generated by 1-3 random permutations.
PermGroup random_subgroup(std::mt19937& rng, int d);
Permutation random_permutation(std::mt19937& rng, int d);
Tabloid random_tabloid(std::mt19937& rng, const Partition& lambda);
Partition random_partition(std::mt19937& rng, int d);

}  // namespace lsiso::oracle
