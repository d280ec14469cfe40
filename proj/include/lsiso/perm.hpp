#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "lsiso/partition.hpp"

namespace lsiso {

constexpr int kMaxDegree = 16;

/// Permutation of [1,d]. Points are 1-based in the interface.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int d);  // identity
  static Permutation from_images(const std::vector<int>& images);  // 1-based

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int point) const { return img_[point - 1] + 1; }
  std::vector<int> images() const;
  const std::vector<std::uint8_t>& raw() const { return img_; }  // 0-based
  bool is_identity() const;
  std::uint64_t key() const;
  std::string str() const;  // cycle notation, "(1)" for identity

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint8_t> img_;
};

Permutation parse_cycles(const std::string& text, int d);
Permutation compose(const Permutation& a, const Permutation& b);  // i -> a(b(i))
Permutation inverse(const Permutation& a);
int apply(const Permutation& a, int point);
int order(const Permutation& a);
int sign_exponent(const Permutation& a);  // 0 even, 1 odd

struct CycleType {
  Partition partition;
  std::vector<int> counts;  // counts[k-1] = number of k-cycles
};

CycleType cycle_type(const Permutation& s);

struct ConjugacyClass {
  Permutation representative;
  std::vector<Permutation> members;
  CycleType cycle_type;
};

/// Finite permutation group with its full, sorted element list.
/// Copies share the underlying data.
class PermGroup {
 public:
  PermGroup() = default;

  int degree() const;
  std::size_t order() const;
  const std::vector<Permutation>& generators() const;
  const std::vector<Permutation>& elements() const;
  const std::vector<ConjugacyClass>& classes() const;

  bool contains(const Permutation& p) const;
  // Position of p in elements(), or -1.
  long index_of(const Permutation& p) const;
  bool same_as(const PermGroup& o) const { return data_ == o.data_; }
  bool valid() const { return static_cast<bool>(data_); }

  friend PermGroup generate(const std::vector<Permutation>&, int, std::size_t);

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

constexpr std::size_t kDefaultCap = 100000;

PermGroup generate(const std::vector<Permutation>& generators, int d,
                   std::size_t cap = kDefaultCap);
PermGroup symmetric_group(int d);
PermGroup trivial_group(int d);
const std::vector<ConjugacyClass>& conjugacy_classes(const PermGroup& W);
std::vector<Permutation> elements_of_cycle_type(const PermGroup& W, const Partition& alpha);
PermGroup young_subgroup(const Partition& lambda, int d);
bool is_subgroup(const PermGroup& H, const PermGroup& W);
PermGroup conjugate(const PermGroup& W, const Permutation& s);  // s W s^-1

/// Homomorphism W -> roots of unity, chi(s) = exp(2 pi i e(s)/n).
class OneDimCharacter {
 public:
  OneDimCharacter() = default;
  OneDimCharacter(PermGroup group, int n, std::vector<int> exponents);

  const PermGroup& group() const { return group_; }
  int order() const { return n_; }
  // Exponent of s (mod order()); throws if s is not in the group.
  int exponent(const Permutation& s) const;
  const std::vector<int>& exponents() const { return exps_; }  // by element index
  bool is_unit() const { return n_ == 1; }
  std::vector<Permutation> kernel() const;

  friend bool operator==(const OneDimCharacter& a, const OneDimCharacter& b) {
    return a.n_ == b.n_ && a.exps_ == b.exps_;
  }

 private:
  PermGroup group_;
  int n_ = 1;
  std::vector<int> exps_;
};

OneDimCharacter unit_character(const PermGroup& W);
std::vector<OneDimCharacter> one_dim_characters(const PermGroup& W);
OneDimCharacter sign_product_character(const Partition& lambda, const std::vector<bool>& mask);
// The same character, evaluated without building S_lambda.
int sign_product_exponent(const Partition& lambda, const std::vector<bool>& mask,
                          const Permutation& eta);
OneDimCharacter chi_e(const PermGroup& Gprime, const PermGroup& G);

}  // namespace lsiso
