#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lsiso/partition.hpp"
#include "lsiso/perm.hpp"

namespace lsiso {

/// Ordered dissection (A_1,...,A_d) of [1,d], stored through eps:
/// point s lies in component eps(s). A tabloid has decreasing sizes.
class OrderedDissection {
 public:
  OrderedDissection() = default;
  static OrderedDissection from_components(const std::vector<std::vector<int>>& comps, int d);
  static OrderedDissection from_epsilon(const std::vector<int>& eps);  // 1-based values
  static OrderedDissection from_key(std::uint64_t key, int d);

  int degree() const { return static_cast<int>(eps_.size()); }
  int epsilon(int s) const { return eps_[s - 1] + 1; }
  const std::vector<std::uint8_t>& raw() const { return eps_; }  // 0-based
  std::vector<std::vector<int>> components() const;
  IntComposition shape() const;
  bool is_tabloid() const;
  std::uint64_t key() const;
  std::string str() const;  // {2,3,5,6}{1,4}{}{}{}{}

  friend bool operator==(const OrderedDissection&, const OrderedDissection&) = default;
  // Canonical order: component lists compared lexicographically in turn.
  friend std::strong_ordering operator<=>(const OrderedDissection& a,
                                          const OrderedDissection& b);

 private:
  std::vector<std::uint8_t> eps_;
};

using Tabloid = OrderedDissection;

OrderedDissection parse_dissection(const std::string& text, int d);
OrderedDissection act(const Permutation& z, const OrderedDissection& A);
IntComposition shape(const OrderedDissection& A);
int epsilon(const OrderedDissection& A, int s);

bool leq_dissection(const OrderedDissection& A, const OrderedDissection& B);
OrderedDissection raise(int i, int s, const OrderedDissection& A);
OrderedDissection raise_set(int i, const std::vector<int>& X, const OrderedDissection& A);

using Move = std::pair<int, int>;  // (i, s): apply R_{i,s}
OrderedDissection apply_moves(const std::vector<Move>& moves, const OrderedDissection& A);

std::optional<std::vector<Move>> find_raising(const OrderedDissection& A,
                                              const OrderedDissection& B);
OrderedDissection lift_composition(const OrderedDissection& A, const OrderedDissection& B,
                                   const IntComposition& n);
std::vector<IntComposition> interval_image(const OrderedDissection& A,
                                           const OrderedDissection& B);
// All X with A <= X <= B.
std::vector<OrderedDissection> dissection_interval(const OrderedDissection& A,
                                                   const OrderedDissection& B,
                                                   bool tabloids_only = false);

// Chain of moves with B = R_{i_1,s_1}...R_{i_r,s_r} A, listed in application
// order (s_r first). Throws when the pair is not adjacent.
std::vector<Move> adjacent_decomposition(const OrderedDissection& A, const OrderedDissection& B);

bool is_neighbor_Delta(const OrderedDissection& A, const OrderedDissection& B);

struct NeighborWitness {
  int i = 0, j = 0;
  std::vector<int> indices;  // i = i_1 < ... < i_{r+1} = j
  std::vector<int> points;   // s_1..s_r
};
// (i,j) with j=i+1 or |A_i|=|A_j| and the chain conditions; sufficient for
// a cover in T_d.
std::optional<NeighborWitness> neighbor_witness(const Tabloid& A, const Tabloid& B);
// Cover relation in T_d.
bool is_neighbor_T(const Tabloid& A, const Tabloid& B);

std::vector<Tabloid> all_tabloids(const Partition& lambda);
Tabloid identity_tabloid(const Partition& lambda);

}  // namespace lsiso
