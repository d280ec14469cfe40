#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lsiso/dissection.hpp"
#include "lsiso/perm.hpp"

namespace lsiso {

struct Orbit {
  PermGroup group;
  Partition shape;
  Tabloid representative;        // minimum member
  std::vector<Tabloid> members;  // sorted
  std::size_t size() const { return members.size(); }
  bool contains(const Tabloid& A) const;
};

struct OrbitSpace {
  PermGroup group;
  Partition shape;
  std::vector<Orbit> orbits;  // sorted by representative
  // (tabloid key, orbit index) sorted by key; filled by orbits().
  std::vector<std::pair<std::uint64_t, std::size_t>> index;
  // Index of the orbit containing A, or -1.
  long find(const Tabloid& A) const;
};

OrbitSpace orbits(const PermGroup& W, const Partition& lambda);
Orbit orbit_of(const PermGroup& W, const Tabloid& A);
PermGroup stabilizer(const PermGroup& W, const Tabloid& A);
Permutation coset_witness(const Tabloid& A);

bool orbit_leq(const Orbit& a, const Orbit& b);
bool orbit_less(const Orbit& a, const Orbit& b);
bool orbit_adjacent(const Orbit& a, const Orbit& b);
bool orbit_neighbors(const Orbit& a, const Orbit& b);

// Orbits c with a <= c <= b, taken from the given spaces.
std::vector<Orbit> orbit_interval(const Orbit& a, const Orbit& b,
                                  const std::vector<OrbitSpace>& spaces);

using OrbitPair = std::pair<std::size_t, std::size_t>;  // indices into the two spaces
std::vector<OrbitPair> reaction_pairs(const PermGroup& W, const Partition& lambda,
                                      const Partition& mu);

bool is_chi_theta_orbit(const Orbit& a, const OneDimCharacter& chi,
                        const std::vector<bool>& theta_mask);
bool is_chi_theta_orbit(const Orbit& a, const OneDimCharacter& chi,
                        const OneDimCharacter& theta);

struct ChiralEntry {
  std::size_t coarse;               // G'-orbit index
  std::vector<std::size_t> fine;    // one (Single) or two (Pair) G-orbit indices
  bool chi_e_orbit = false;
  bool is_pair() const { return fine.size() == 2; }
};

struct ChiralReport {
  Partition shape;
  OrbitSpace fine;    // G-orbits
  OrbitSpace coarse;  // G'-orbits
  std::vector<ChiralEntry> entries;
};

ChiralReport classify_chiral(const PermGroup& G, const PermGroup& Gprime, const Partition& lambda);

// refine()[k] = indices of fine orbits inside coarse orbit k.
std::vector<std::vector<std::size_t>> refine(const OrbitSpace& coarse, const OrbitSpace& fine);

// Letters a,b,c,e,f,h,i,... (d and g skipped).
std::string orbit_letter(std::size_t k);
std::string coarse_letter(std::size_t k);  // u,v,w,x,y,z,...
std::string orbit_name(const std::string& letter, const Partition& shape);

}  // namespace lsiso
