#include "lsiso/orbit.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "lsiso/errors.hpp"

namespace lsiso {

bool Orbit::contains(const Tabloid& A) const {
  return std::binary_search(members.begin(), members.end(), A);
}

long OrbitSpace::find(const Tabloid& A) const {
  if (!index.empty()) {
    auto it = std::lower_bound(index.begin(), index.end(), std::pair{A.key(), std::size_t{0}});
    if (it != index.end() && it->first == A.key() && A.degree() == shape.d()) return static_cast<long>(it->second);
    return -1;
  }
  for (std::size_t k = 0; k < orbits.size(); ++k)
    if (orbits[k].contains(A)) return static_cast<long>(k);
  return -1;
}

// Tabloid keys pack eps in 4-bit fields, point 1 in the top field.
static std::uint64_t act_key(const Permutation& z, std::uint64_t key, int d) {
  std::uint64_t out = 0;
  const auto& img = z.raw();
  for (int s = d - 1; s >= 0; --s, key >>= 4)
    out |= (key & 15u) << (4 * (d - 1 - img[s]));
  return out;
}

static std::vector<Tabloid> orbit_members(const PermGroup& W, const Tabloid& A) {
  const int d = A.degree();
  std::vector<std::uint64_t> keys{A.key()};
  std::unordered_set<std::uint64_t> seen{A.key()};
  for (std::size_t k = 0; k < keys.size(); ++k)
    for (auto& g : W.generators()) {
      auto y = act_key(g, keys[k], d);
      if (seen.insert(y).second) keys.push_back(y);
    }
  std::vector<Tabloid> out;
  out.reserve(keys.size());
  for (auto key : keys) out.push_back(OrderedDissection::from_key(key, d));
  std::sort(out.begin(), out.end());
  return out;
}

static void check_group(const PermGroup& W, int d) {
  if (W.degree() != d) throw DomainError("group degree does not match the tabloid degree");
}

Orbit orbit_of(const PermGroup& W, const Tabloid& A) {
  check_group(W, A.degree());
  Orbit o;
  o.group = W;
  o.shape = Partition::from(A.shape());
  o.members = orbit_members(W, A);
  o.representative = o.members.front();
  return o;
}

OrbitSpace orbits(const PermGroup& W, const Partition& lambda) {
  check_group(W, lambda.d());
  const int d = lambda.d();
  OrbitSpace space;
  space.group = W;
  space.shape = lambda;
  std::unordered_set<std::uint64_t> done;
  for (const auto& A : all_tabloids(lambda)) {  // canonical order
    if (done.count(A.key())) continue;
    std::vector<std::uint64_t> keys{A.key()};
    done.insert(A.key());
    for (std::size_t k = 0; k < keys.size(); ++k)
      for (auto& g : W.generators()) {
        auto y = act_key(g, keys[k], d);
        if (done.insert(y).second) keys.push_back(y);
      }
    Orbit o;
    o.group = W;
    o.shape = lambda;
    for (auto key : keys) o.members.push_back(OrderedDissection::from_key(key, d));
    std::sort(o.members.begin(), o.members.end());
    o.representative = o.members.front();
    for (auto key : keys) space.index.emplace_back(key, space.orbits.size());
    space.orbits.push_back(std::move(o));
  }
  std::sort(space.index.begin(), space.index.end());
  return space;
}

// Smallest generating set found greedily; avoids closing over every element.
static PermGroup subgroup_from_elements(const std::vector<Permutation>& elems, int d) {
  std::vector<Permutation> gens;
  PermGroup H = generate({}, d);
  for (auto& x : elems) {
    if (H.contains(x)) continue;
    gens.push_back(x);
    H = generate(gens, d);
  }
  return H;
}

PermGroup stabilizer(const PermGroup& W, const Tabloid& A) {
  check_group(W, A.degree());
  std::vector<Permutation> st;
  const auto key = A.key();
  for (auto& s : W.elements())
    if (act_key(s, key, A.degree()) == key) st.push_back(s);
  return subgroup_from_elements(st, A.degree());
}

Permutation coset_witness(const Tabloid& A) {
  if (!A.is_tabloid()) throw DomainError("coset_witness needs a tabloid");
  const int d = A.degree();
  std::vector<int> img(d);
  int start = 0;
  for (auto& comp : A.components()) {
    for (std::size_t t = 0; t < comp.size(); ++t) img[start + t] = comp[t];
    start += static_cast<int>(comp.size());
  }
  return Permutation::from_images(img);
}

static void check_same_group(const Orbit& a, const Orbit& b) {
  if (!a.group.same_as(b.group)) {
    if (a.group.degree() != b.group.degree() || a.group.order() != b.group.order() ||
        !is_subgroup(a.group, b.group))
      throw DomainError("orbits belong to different groups");
  }
}

bool orbit_leq(const Orbit& a, const Orbit& b) {
  check_same_group(a, b);
  if (!dominance_leq(a.shape, b.shape)) return false;
  const auto& A = a.representative;
  const auto& B = b.representative;
  for (auto& s : a.group.elements())
    if (leq_dissection(act(s, A), B)) return true;
  return false;
}

bool orbit_less(const Orbit& a, const Orbit& b) {
  return !(a.shape == b.shape && a.representative == b.representative) && orbit_leq(a, b);
}

bool orbit_adjacent(const Orbit& a, const Orbit& b) {
  return is_adjacent(a.shape, b.shape) && orbit_less(a, b);
}

bool orbit_neighbors(const Orbit& a, const Orbit& b) {
  if (!orbit_less(a, b)) return false;
  const auto& B = b.representative;
  for (const auto& A : a.members)
    if (leq_dissection(A, B) && !is_neighbor_T(A, B)) return false;
  return true;
}

std::vector<Orbit> orbit_interval(const Orbit& a, const Orbit& b, const std::vector<OrbitSpace>& spaces) {
  if (!orbit_leq(a, b)) throw DomainError("orbit_interval needs a <= b");
  std::vector<Orbit> out;
  for (auto& sp : spaces) {
    if (!dominance_leq(a.shape, sp.shape) || !dominance_leq(sp.shape, b.shape)) continue;
    for (auto& c : sp.orbits)
      if (orbit_leq(a, c) && orbit_leq(c, b)) out.push_back(c);
  }
  return out;
}

std::vector<OrbitPair> reaction_pairs(const PermGroup& W, const Partition& lambda, const Partition& mu) {
  if (!is_adjacent(lambda, mu)) throw DomainError("shapes are not adjacent");
  auto lo = orbits(W, lambda), hi = orbits(W, mu);
  std::vector<OrbitPair> out;
  for (std::size_t i = 0; i < lo.orbits.size(); ++i)
    for (std::size_t j = 0; j < hi.orbits.size(); ++j)
      if (orbit_less(lo.orbits[i], hi.orbits[j])) out.emplace_back(i, j);
  return out;
}

static void check_character_domain(const Orbit& a, const OneDimCharacter& chi) {
  const auto& G = chi.group();
  if (!G.same_as(a.group) &&
      (G.degree() != a.group.degree() || G.order() != a.group.order() || !is_subgroup(a.group, G)))
    throw DomainError("character is not defined on the orbit's group");
}

bool is_chi_theta_orbit(const Orbit& a, const OneDimCharacter& chi, const std::vector<bool>& mask) {
  check_character_domain(a, chi);
  const std::vector<bool> m = mask.empty() ? std::vector<bool>(a.shape.length(), false) : mask;
  if (static_cast<int>(m.size()) != a.shape.length()) throw DomainError("theta mask length mismatch");
  const auto& A = a.representative;
  const Permutation u = coset_witness(A);
  const Permutation ui = inverse(u);
  const int n = chi.order();
  const auto key = A.key();
  const auto& elems = a.group.elements();
  for (std::size_t k = 0; k < elems.size(); ++k) {
    if (act_key(elems[k], key, A.degree()) != key) continue;
    const int e = chi.exponents()[k];
    const int t = sign_product_exponent(a.shape, m, compose(compose(ui, elems[k]), u));
    if ((2 * e + n * t) % (2 * n) != 0) return false;
  }
  return true;
}

bool is_chi_theta_orbit(const Orbit& a, const OneDimCharacter& chi, const OneDimCharacter& theta) {
  check_character_domain(a, chi);
  const auto S = young_subgroup(a.shape, a.shape.d());
  if (theta.group().order() != S.order() || !is_subgroup(S, theta.group()))
    throw DomainError("theta is not a character of the Young subgroup of the orbit's shape");
  const auto& A = a.representative;
  const Permutation u = coset_witness(A);
  const Permutation ui = inverse(u);
  const long n = chi.order(), m = theta.order();
  const auto key = A.key();
  const auto& elems = a.group.elements();
  for (std::size_t k = 0; k < elems.size(); ++k) {
    if (act_key(elems[k], key, A.degree()) != key) continue;
    const long e = chi.exponents()[k];
    const long f = theta.exponent(compose(compose(ui, elems[k]), u));
    if ((e * m + f * n) % (n * m) != 0) return false;
  }
  return true;
}

std::vector<std::vector<std::size_t>> refine(const OrbitSpace& coarse, const OrbitSpace& fine) {
  if (!(coarse.shape == fine.shape)) throw DomainError("refine needs equal shapes");
  if (!is_subgroup(fine.group, coarse.group)) throw DomainError("fine group is not a subgroup of the coarse group");
  std::vector<std::vector<std::size_t>> out(coarse.orbits.size());
  for (std::size_t k = 0; k < fine.orbits.size(); ++k) {
    long c = coarse.find(fine.orbits[k].representative);
    if (c < 0) throw DomainError("fine orbit not covered by the coarse space");
    out[c].push_back(k);
  }
  return out;
}

ChiralReport classify_chiral(const PermGroup& G, const PermGroup& Gprime, const Partition& lambda) {
  if (!is_subgroup(G, Gprime)) throw DomainError("G is not a subgroup of G'");
  const std::size_t index = Gprime.order() / G.order();
  if (index != 1 && index != 2) throw DomainError("index of G in G' must be 1 or 2");
  ChiralReport rep;
  rep.shape = lambda;
  rep.fine = orbits(G, lambda);
  rep.coarse = index == 1 ? rep.fine : orbits(Gprime, lambda);
  auto parts = index == 1 ? std::vector<std::vector<std::size_t>>{} : refine(rep.coarse, rep.fine);
  std::optional<OneDimCharacter> ce;
  if (index == 2) ce = chi_e(Gprime, G);
  for (std::size_t k = 0; k < rep.coarse.orbits.size(); ++k) {
    ChiralEntry e;
    e.coarse = k;
    if (index == 1) {
      e.fine = {k};
    } else {
      e.fine = parts[k];
      e.chi_e_orbit = is_chi_theta_orbit(rep.coarse.orbits[k], *ce, std::vector<bool>{});
    }
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

std::string orbit_letter(std::size_t k) {
  static const std::string letters = "abcefhijklmnopqrstuvwxyz";
  if (k < letters.size()) return std::string(1, letters[k]);
  return "o" + std::to_string(k);
}

std::string coarse_letter(std::size_t k) {
  static const std::string letters = "uvwxyz";
  if (k < letters.size()) return std::string(1, letters[k]);
  return "u" + std::to_string(k);
}

std::string orbit_name(const std::string& letter, const Partition& shape) {
  return letter + "_(" + shape.str() + ")";
}

}  // namespace lsiso
