#pragma once

#include <ostream>
#include <string>

#include "lsiso/catalog.hpp"

namespace lsiso::oracle {

struct SuiteResult {
  std::size_t checks = 0;
  std::size_t failures = 0;
  bool ok() const { return failures == 0; }
};

// Five-way counts for every shape and, for all real characters and sign
// masks, count_527 / scalar against the filtered brute force.
SuiteResult check_counts(const PermGroup& W, std::ostream& log, bool with_characters = true);
SuiteResult check_monotonicity(const PermGroup& W, std::ostream& log);
// orbit_neighbors against the orbit Hasse oracle, all shapes.
SuiteResult check_orbit_neighbors(const PermGroup& W, std::ostream& log);
// Orbit splitting for H <= W: equal H-orbit sizes inside a W-orbit, their
// number dividing |W:H|.
SuiteResult check_splitting(const PermGroup& W, const PermGroup& H, std::ostream& log);
// For every character chi of W with kernel H: chi-orbit iff the W-orbit
// holds |W:H| H-orbits.
SuiteResult check_character_splitting(const PermGroup& W, std::ostream& log);

SuiteResult verify_skeleton(const SkeletonSpec& spec, std::ostream& log);

}  // namespace lsiso::oracle
