#include "suite.hpp"

#include <algorithm>

#include "oracle.hpp"

namespace lsiso::oracle {

namespace {

std::vector<std::vector<bool>> all_masks(int t) {
  std::vector<std::vector<bool>> out;
  for (unsigned bits = 0; bits < (1u << t); ++bits) {
    std::vector<bool> m(t);
    for (int k = 0; k < t; ++k) m[k] = (bits >> k) & 1u;
    out.push_back(m);
  }
  return out;
}

bool is_real(const OneDimCharacter& c) { return c.order() <= 2; }

void fail(SuiteResult& r, std::ostream& log, const std::string& msg) {
  ++r.failures;
  log << "  FAIL " << msg << "\n";
}

}  // namespace

SuiteResult check_counts(const PermGroup& W, std::ostream& log, bool with_characters) {
  SuiteResult r;
  const auto unit = unit_character(W);
  const auto chars = with_characters ? one_dim_characters(W) : std::vector<OneDimCharacter>{unit};
  for (auto& lambda : all_partitions(W.degree())) {
    auto rep = count_report(W, unit, lambda);
    ++r.checks;
    if (!rep.agree || rep.scalar != rep.brute.value_or(rep.scalar))
      fail(r, log, "counts disagree at " + lambda.str());
    if (W.degree() <= 8 && burnside_count(W, lambda) != rep.scalar)
      fail(r, log, "Burnside count differs at " + lambda.str());
    if (!with_characters) continue;
    // Per orbit: the stabilizer of the representative, each element with
    // its signs on the components of the representative.
    struct Fixer {
      std::size_t index;
      std::vector<int> block_sign;
    };
    std::vector<std::vector<Fixer>> fixers;
    for (auto& o : orbits(W, lambda).orbits) {
      auto& A = o.representative;
      auto comps = A.components();
      std::vector<Fixer> f;
      for (std::size_t k = 0; k < W.elements().size(); ++k) {
        auto& s = W.elements()[k];
        if (!(act(s, A) == A)) continue;
        Fixer x{k, {}};
        for (int b = 0; b < lambda.length(); ++b) {
          // sign of s on component b, by counting inversions
          auto& C = comps[b];
          int inv = 0;
          for (std::size_t i = 0; i < C.size(); ++i)
            for (std::size_t j = i + 1; j < C.size(); ++j) inv += s(C[i]) > s(C[j]);
          x.block_sign.push_back(inv % 2 ? -1 : 1);
        }
        f.push_back(std::move(x));
      }
      fixers.push_back(std::move(f));
    }
    for (std::size_t c = 0; c < chars.size(); ++c) {
      if (!is_real(chars[c])) continue;
      for (auto& mask : all_masks(lambda.length())) {
        ++r.checks;
        auto a = count_527(W, chars[c], lambda, mask);
        auto b = count_via_scalar(W, chars[c], lambda, mask);
        std::uint64_t e = 0;
        for (auto& f : fixers)
          e += std::all_of(f.begin(), f.end(), [&](const Fixer& x) {
            int v = chars[c].exponents()[x.index] == 0 ? 1 : -1;
            for (std::size_t k = 0; k < mask.size(); ++k)
              if (mask[k]) v *= x.block_sign[k];
            return v == 1;
          });
        if (a != e || b != e)
          fail(r, log, "character " + std::to_string(c) + " mask " + mask_name(mask) + " at " + lambda.str());
      }
    }
  }
  return r;
}

SuiteResult check_monotonicity(const PermGroup& W, std::ostream& log) {
  SuiteResult r;
  for (auto& chi : one_dim_characters(W)) {
    ++r.checks;
    for (auto& v : monotonicity_check(W, chi))
      fail(r, log, "monotonicity " + v.lambda.str() + " <= " + v.mu.str());
  }
  return r;
}

SuiteResult check_orbit_neighbors(const PermGroup& W, std::ostream& log) {
  SuiteResult r;
  auto spaces = all_orbit_spaces(W);
  std::vector<const Orbit*> all;
  for (auto& sp : spaces)
    for (auto& o : sp.orbits) all.push_back(&o);
  auto covers = orbit_hasse(all);
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < all.size(); ++j) {
      auto *a = all[i], *b = all[j];
      if (compare_dominance(a->shape, b->shape) != Dominance::less) continue;
      ++r.checks;
      if (orbit_neighbors(*a, *b) != (covers.count({i, j}) > 0))
        fail(r, log, "orbit_neighbors " + a->representative.str() + " " + b->representative.str());
      if (lsiso::orbit_leq(*a, *b) != oracle::member_orbit_leq(*a, *b))
        fail(r, log, "orbit_leq " + a->representative.str() + " " + b->representative.str());
    }
  return r;
}

SuiteResult check_splitting(const PermGroup& W, const PermGroup& H, std::ostream& log) {
  SuiteResult r;
  const std::size_t index = W.order() / H.order();
  for (auto& lambda : all_partitions(W.degree())) {
    auto coarse = orbits(W, lambda);
    auto fine = orbits(H, lambda);
    auto parts = refine(coarse, fine);
    for (auto& p : parts) {
      ++r.checks;
      bool equal = std::all_of(p.begin(), p.end(),
                               [&](std::size_t k) { return fine.orbits[k].size() == fine.orbits[p[0]].size(); });
      if (!equal || index % p.size()) fail(r, log, "splitting at " + lambda.str());
    }
  }
  return r;
}

SuiteResult check_character_splitting(const PermGroup& W, std::ostream& log) {
  SuiteResult r;
  for (auto& chi : one_dim_characters(W)) {
    auto kernel = chi.kernel();
    PermGroup H = generate(kernel, W.degree());
    auto sub = check_splitting(W, H, log);
    r.checks += sub.checks;
    r.failures += sub.failures;
    const std::size_t index = W.order() / H.order();
    for (auto& lambda : all_partitions(W.degree())) {
      auto coarse = orbits(W, lambda);
      auto fine = orbits(H, lambda);
      auto parts = refine(coarse, fine);
      for (std::size_t k = 0; k < parts.size(); ++k) {
        ++r.checks;
        bool is_chi = is_chi_theta_orbit(coarse.orbits[k], chi, std::vector<bool>{});
        if (is_chi != (parts[k].size() == index))
          fail(r, log, "character orbit test at " + lambda.str() + " orbit " + std::to_string(k));
      }
    }
  }
  return r;
}

SuiteResult verify_skeleton(const SkeletonSpec& spec, std::ostream& log) {
  SuiteResult total;
  auto add = [&](const char* name, SuiteResult s) {
    log << name << ": " << s.checks << " checks, " << s.failures << " failures\n";
    total.checks += s.checks;
    total.failures += s.failures;
  };
  std::vector<std::pair<std::string, PermGroup>> groups{{"G", spec.G}};
  if (spec.Gprime && !spec.Gprime->same_as(spec.G)) groups.emplace_back("G'", *spec.Gprime);
  if (spec.Gdoubleprime) groups.emplace_back("G''", *spec.Gdoubleprime);
  for (auto& [name, W] : groups) {
    log << "[" << spec.name << " " << name << ", order " << W.order() << "]\n";
    add("counts", check_counts(W, log));
    add("monotonicity", check_monotonicity(W, log));
    add("character splitting", check_character_splitting(W, log));
    if (W.degree() <= 6) add("orbit neighbours", check_orbit_neighbors(W, log));
  }
  if (spec.Gdoubleprime) add("G in G'' splitting", check_splitting(*spec.Gdoubleprime, spec.G, log));
  if (spec.Gprime && spec.Gprime->order() == 2 * spec.G.order())
    add("G in G' splitting", check_splitting(*spec.Gprime, spec.G, log));
  return total;
}

}  // namespace lsiso::oracle
