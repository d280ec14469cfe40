#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lsiso/cyclotomic.hpp"
#include "lsiso/partition.hpp"
#include "lsiso/perm.hpp"

namespace lsiso {

/// Sparse polynomial in the power sums p_alpha, alpha a partition of d.
struct PowerSumPoly {
  int d = 0;
  std::map<Partition, Cyclotomic> coeffs;  // no zero entries

  Cyclotomic coeff(const Partition& alpha) const;
  void add(const Partition& alpha, const Cyclotomic& c);
};

PowerSumPoly cycle_index(const PermGroup& W, const OneDimCharacter& chi);
PowerSumPoly h_poly(const Partition& lambda);
// prod_k (e if mask_k else h)_{lambda_k}; mask empty means all h.
PowerSumPoly theta_poly(const Partition& lambda, const std::vector<bool>& mask);
PowerSumPoly multiply(const PowerSumPoly& f, const PowerSumPoly& g);
Cyclotomic scalar(const PowerSumPoly& f, const PowerSumPoly& g);

std::uint64_t count_via_scalar(const PermGroup& W, const OneDimCharacter& chi,
                               const Partition& lambda, const std::vector<bool>& theta = {});
std::uint64_t count_527(const PermGroup& W, const OneDimCharacter& chi, const Partition& lambda,
                        const std::vector<bool>& theta = {});
std::uint64_t count_529(const PermGroup& W, const Partition& lambda);
std::uint64_t count_ruch(const PermGroup& W, const Partition& lambda);

constexpr int kBruteMaxDegree = 10;
std::uint64_t brute_force_count(const PermGroup& W, const Partition& lambda,
                                const OneDimCharacter* chi = nullptr,
                                const std::vector<bool>& theta = {});

// Ordered tuples (alpha^(1),...,alpha^(t)), alpha^(k) a partition of
// lambda_k, whose union is alpha. The all-(1^{lambda_k}) tuple is included.
std::vector<std::vector<Partition>> block_splittings(const Partition& alpha,
                                                     const Partition& lambda);

bool combinatorially_equivalent(const PermGroup& W, const PermGroup& Wprime);
std::map<Partition, std::size_t> cycle_type_census(const PermGroup& W);

struct MonotonicityViolation {
  Partition lambda, mu;
  std::uint64_t n_lambda, n_mu;
};
std::vector<MonotonicityViolation> monotonicity_check(const PermGroup& W,
                                                      const OneDimCharacter& chi);

struct CountReport {
  Partition shape;
  std::string chi = "1";
  std::string theta = "1";
  std::uint64_t scalar = 0;
  std::uint64_t t527 = 0;
  std::optional<std::uint64_t> t529, ruch, brute;
  bool agree = false;
};

// All applicable methods; brute force only when d <= brute_max.
CountReport count_report(const PermGroup& W, const OneDimCharacter& chi, const Partition& lambda,
                         const std::vector<bool>& theta = {}, int brute_max = kBruteMaxDegree,
                         std::string chi_name = "1");
std::string mask_name(const std::vector<bool>& mask);

}  // namespace lsiso
