#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lsiso {

/// Integer d-tuple summing to d. Entries may go negative transiently
/// (the raising operators are defined on all integer tuples).
struct IntComposition {
  std::vector<int> parts;

  IntComposition() = default;
  explicit IntComposition(std::vector<int> p) : parts(std::move(p)) {}

  int d() const { return static_cast<int>(parts.size()); }
  int operator[](int i) const { return parts[i - 1]; }  // 1-based
  bool in_M() const;
  bool is_partition() const;
  std::string str() const;

  friend bool operator==(const IntComposition&, const IntComposition&) = default;
  friend auto operator<=>(const IntComposition&, const IntComposition&) = default;
};

/// Zero-padded weakly decreasing composition.
struct Partition : IntComposition {
  Partition() = default;
  explicit Partition(std::vector<int> p);           // pads to sum, validates
  Partition(std::vector<int> p, int d);             // pads to length d
  static Partition from(const IntComposition& c);   // validates

  int length() const;                    // number of nonzero parts
  std::vector<int> nonzero() const;
  std::vector<int> multiplicities() const;  // m_1..m_d
  std::string str() const;               // "2^2,1^2"
};

enum class Dominance { less, equal, greater, incomparable };

Dominance compare_dominance(const IntComposition& l, const IntComposition& m);
bool dominance_leq(const IntComposition& l, const IntComposition& m);
IntComposition rho(int i, int j, const IntComposition& l);
std::vector<int> raising_chain(const IntComposition& l, const IntComposition& m);

struct RStats {
  std::vector<int> r;  // r_1..r_{d-1}
  int total = 0;
};
RStats r_stats(const IntComposition& l, const IntComposition& m);
int q_stat(const IntComposition& l, const IntComposition& m);

bool is_neighbor_M(const IntComposition& l, const IntComposition& m);
bool is_neighbor_P(const Partition& lambda, const Partition& mu);
// True iff mu = rho_{i,j}(lambda) for some i<j.
bool is_adjacent(const IntComposition& l, const IntComposition& m);

std::vector<Partition> all_partitions(int d);
std::vector<Partition> covers_above(const Partition& lambda);

std::uint64_t z(const Partition& lambda);
std::uint64_t factorial(int n);

// "4,2", "2^2,1^2", "(3,3)", "3^2". Pads to the sum unless d > 0 is given.
Partition parse_partition(const std::string& text, int d = 0);

}  // namespace lsiso
