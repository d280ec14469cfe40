#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lsiso/catalog.hpp"
#include "lsiso/errors.hpp"
#include "suite.hpp"

using namespace lsiso;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kVerify = 1, kUsage = 2, kCap = 3 };

struct RunConfig {
  std::string builtin;
  std::string group_file;
  std::string gprime_file;
  std::string gdprime_file;
  std::vector<std::string> shapes;
  bool all_shapes = false;
  std::string chi = "1";
  std::string theta;
  std::string format = "text";
  std::string out;
  std::size_t cap = kDefaultCap;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SkeletonSpec load_skeleton(const RunConfig& c) {
  if (c.builtin.empty() == c.group_file.empty())
    throw DomainError("give exactly one of --builtin or --group-file");
  SkeletonSpec s = c.builtin.empty() ? parse_group_spec(slurp(c.group_file), c.group_file, c.cap) : builtin(c.builtin);
  if (!c.gprime_file.empty()) s.Gprime = parse_group_text(slurp(c.gprime_file), c.cap);
  if (!c.gdprime_file.empty()) s.Gdoubleprime = parse_group_text(slurp(c.gdprime_file), c.cap);
  for (auto* g : {&s.Gprime, &s.Gdoubleprime})
    if (*g && (*g)->degree() != s.d) throw DomainError("supergroup degree differs from G");
  if (s.Gprime && !is_subgroup(s.G, *s.Gprime)) throw DomainError("G is not a subgroup of G'");
  if (s.Gdoubleprime && !is_subgroup(s.G, *s.Gdoubleprime)) throw DomainError("G is not a subgroup of G''");
  return s;
}

std::vector<Partition> select_shapes(const RunConfig& c, int d) {
  if (c.all_shapes || c.shapes.empty()) return all_partitions(d);
  std::vector<Partition> out;
  for (auto& s : c.shapes) out.push_back(parse_partition(s, d));
  return out;
}

std::vector<bool> parse_theta(const std::string& text, const Partition& lambda) {
  std::vector<bool> mask;
  if (text.empty() || text == "1") return std::vector<bool>(lambda.length(), false);
  if (text.find_first_not_of("01") == std::string::npos) {
    for (char ch : text) mask.push_back(ch == '1');
  } else {
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, '*')) {
      if (tok == "sgn") mask.push_back(true);
      else if (tok == "1") mask.push_back(false);
      else throw ParseError("bad theta factor: " + tok);
    }
  }
  if (static_cast<int>(mask.size()) != lambda.length())
    throw DomainError("theta needs one factor per part of " + lambda.str());
  return mask;
}

// Group and character selected by --chi. "e" switches to G' with chi_e.
std::pair<PermGroup, OneDimCharacter> select_character(const RunConfig& c, const SkeletonSpec& s, std::string& name) {
  name = c.chi;
  if (c.chi == "1") return {s.G, unit_character(s.G)};
  if (c.chi == "e") {
    if (!s.Gprime) throw DomainError("--chi e needs a G' (builtin or --gprime-file)");
    return {*s.Gprime, chi_e(*s.Gprime, s.G)};
  }
  auto chars = one_dim_characters(s.G);
  if (c.chi.rfind("ker:", 0) == 0) {
    std::vector<Permutation> gens;
    std::stringstream ss(c.chi.substr(4));
    std::string tok;
    while (std::getline(ss, tok, ';')) gens.push_back(parse_cycles(tok, s.d));
    auto K = generate(gens, s.d);
    for (auto& ch : chars) {
      auto ker = ch.kernel();
      if (ker.size() == K.order() && std::all_of(ker.begin(), ker.end(), [&](auto& p) { return K.contains(p); }))
        return {s.G, ch};
    }
    throw DomainError("no one-dimensional character has kernel " + c.chi.substr(4));
  }
  std::size_t k = 0;
  try {
    k = std::stoul(c.chi);
  } catch (...) {
    throw ParseError("--chi expects 1, e, an index, or ker:<cycles>");
  }
  if (k >= chars.size()) throw DomainError("character index out of range (have " + std::to_string(chars.size()) + ")");
  name = "chi" + std::to_string(k);
  return {s.G, chars[k]};
}

void emit(const RunConfig& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw ParseError("cannot write " + c.out);
  f << text;
}

std::string opt_str(const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : "-"; }

int cmd_count(const RunConfig& c) {
  auto s = load_skeleton(c);
  std::string chi_name;
  auto [W, chi] = select_character(c, s, chi_name);
  std::ostringstream out;
  json arr = json::array();
  bool all_agree = true;
  for (auto& lambda : select_shapes(c, s.d)) {
    auto r = count_report(W, chi, lambda, parse_theta(c.theta, lambda), kBruteMaxDegree, chi_name);
    all_agree = all_agree && r.agree;
    arr.push_back(to_json(r));
    out << "shape " << r.shape.str() << "  chi " << r.chi << "  theta " << r.theta << "  n=" << r.scalar
        << "  scalar " << r.scalar << "  t527 " << r.t527 << "  t529 " << opt_str(r.t529) << "  ruch "
        << opt_str(r.ruch) << "  brute " << opt_str(r.brute) << "  agree " << (r.agree ? "yes" : "NO") << "\n";
  }
  emit(c, c.format == "json" ? arr.dump(2) + "\n" : out.str());
  return all_agree ? kOk : kVerify;
}

int cmd_orbits(const RunConfig& c) {
  auto s = load_skeleton(c);
  std::ostringstream out;
  json arr = json::array();
  for (auto& lambda : select_shapes(c, s.d)) {
    auto sp = orbits(s.G, lambda);
    auto names = orbit_letters(sp, s.pins);
    out << "shape " << lambda.str() << ": " << sp.orbits.size() << " orbits\n";
    for (std::size_t k = 0; k < sp.orbits.size(); ++k) {
      auto& o = sp.orbits[k];
      auto st = stabilizer(s.G, o.representative);
      out << "  " << orbit_name(names[k], lambda) << "  size " << o.size() << "  rep " << o.representative.str()
          << "  stabilizer order " << st.order() << "\n";
      json members = json::array();
      for (auto& m : o.members) members.push_back(m.str());
      arr.push_back({{"name", orbit_name(names[k], lambda)},
                     {"shape", lambda.str()},
                     {"size", o.size()},
                     {"representative", o.representative.str()},
                     {"stabilizer_order", st.order()},
                     {"members", members}});
    }
  }
  emit(c, c.format == "json" ? arr.dump(2) + "\n" : out.str());
  return kOk;
}

int cmd_poset(const RunConfig& c) {
  auto s = load_skeleton(c);
  std::vector<OrbitSpace> spaces;
  std::vector<std::string> names;
  std::vector<const Orbit*> all;
  auto shapes = select_shapes(c, s.d);
  for (auto& lambda : shapes) spaces.push_back(orbits(s.G, lambda));
  for (auto& sp : spaces) {
    auto l = orbit_letters(sp, s.pins);
    for (std::size_t k = 0; k < sp.orbits.size(); ++k) {
      names.push_back(orbit_name(l[k], sp.shape));
      all.push_back(&sp.orbits[k]);
    }
  }
  std::ostringstream out;
  json rel = json::array(), hasse = json::array();
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = 0; b < all.size(); ++b) {
      if (compare_dominance(all[a]->shape, all[b]->shape) != Dominance::less) continue;
      if (!orbit_less(*all[a], *all[b])) continue;
      out << names[a] << " < " << names[b] << "\n";
      rel.push_back({names[a], names[b]});
    }
  out << "neighbours:\n";
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = 0; b < all.size(); ++b) {
      if (compare_dominance(all[a]->shape, all[b]->shape) != Dominance::less) continue;
      if (!orbit_neighbors(*all[a], *all[b])) continue;
      out << "  " << names[b] << " -> " << names[a] << "\n";
      hasse.push_back({names[a], names[b]});
    }
  emit(c, c.format == "json" ? json{{"relations", rel}, {"neighbours", hasse}}.dump(2) + "\n" : out.str());
  return kOk;
}

int cmd_diagram(const RunConfig& c) {
  auto s = load_skeleton(c);
  std::vector<Partition> shapes;
  if (!c.all_shapes)
    for (auto& t : c.shapes) shapes.push_back(parse_partition(t, s.d));
  auto g = genetic_diagram(s, shapes);
  if (c.format == "json") {
    emit(c, to_json(g).dump(2) + "\n");
  } else if (c.format == "dot") {
    emit(c, emit_dot(g));
  } else {
    std::ostringstream out;
    for (auto& n : g.nodes) {
      out << n.name << "  size " << n.size << "  rep " << n.representative;
      if (n.structural) out << "  class " << *n.structural;
      if (n.chiral) out << "  chiral " << (*n.chiral ? "yes" : "no");
      out << "\n";
    }
    for (auto [lo, hi] : g.edges) out << g.nodes[hi].name << " -> " << g.nodes[lo].name << "\n";
    for (auto [lo, hi] : g.extra_relations) out << g.nodes[hi].name << " .> " << g.nodes[lo].name << "  (not neighbours)\n";
    for (auto [a, b] : g.diastereomers)
      out << g.nodes[a].name << " <-> " << g.nodes[b].name << "  (" << *g.nodes[a].structural << ")\n";
    emit(c, out.str());
  }
  return kOk;
}

int cmd_chiral(const RunConfig& c) {
  auto s = load_skeleton(c);
  if (!s.Gprime) throw DomainError("chiral needs a G' (builtin or --gprime-file)");
  std::ostringstream out;
  json arr = json::array();
  for (auto& lambda : select_shapes(c, s.d)) {
    auto rep = classify_chiral(s.G, *s.Gprime, lambda);
    auto fnames = orbit_letters(rep.fine, s.pins);
    auto cnames = orbit_letters(rep.coarse, {}, "pqrstuvwxyz");
    out << "shape " << lambda.str() << "\n";
    for (auto& e : rep.entries) {
      std::string cname = orbit_name(cnames[e.coarse], lambda);
      json fine = json::array();
      out << "  " << cname << ": " << (e.is_pair() ? "pair" : "single");
      for (auto k : e.fine) {
        out << " " << orbit_name(fnames[k], lambda);
        fine.push_back(orbit_name(fnames[k], lambda));
      }
      out << "  chi_e-orbit " << (e.chi_e_orbit ? "yes" : "no") << "\n";
      arr.push_back({{"shape", lambda.str()},
                     {"coarse", cname},
                     {"kind", e.is_pair() ? "pair" : "single"},
                     {"fine", fine},
                     {"chi_e_orbit", e.chi_e_orbit}});
    }
  }
  emit(c, c.format == "json" ? arr.dump(2) + "\n" : out.str());
  return kOk;
}

int cmd_verify(const RunConfig& c) {
  auto s = load_skeleton(c);
  std::ostringstream log;
  auto r = oracle::verify_skeleton(s, log);
  log << (r.ok() ? "verify: OK" : "verify: FAILED") << " (" << r.checks << " checks, " << r.failures << " failures)\n";
  emit(c, log.str());
  return r.ok() ? kOk : kVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Isomer enumeration and substitution-reaction order"};
  app.require_subcommand(1);
  RunConfig cfg;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--builtin", cfg.builtin, "builtin skeleton: benzene, ethene, naphthalene");
    sub->add_option("--group-file", cfg.group_file, "group-spec file: 'degree <d>' then one generator per line");
    sub->add_option("--gprime-file", cfg.gprime_file, "group-spec file for G'");
    sub->add_option("--gdprime-file", cfg.gdprime_file, "group-spec file for G''");
    sub->add_option("--shape", cfg.shapes, "partition, e.g. 4,2 or 2^2,1^2 (repeatable)");
    sub->add_flag("--all-shapes", cfg.all_shapes, "every partition of d");
    sub->add_option("--chi", cfg.chi, "character: 1, e, an index, or ker:<cycles>;<cycles>");
    sub->add_option("--theta", cfg.theta, "sign mask per part, e.g. 10 or sgn*1");
    sub->add_option("--format", cfg.format, "text, json or dot")->check(CLI::IsMember({"text", "json", "dot"}));
    sub->add_option("--out", cfg.out, "write output to this file");
    sub->add_option("--cap", cfg.cap, "group closure cap")->check(CLI::PositiveNumber);
  };
  std::vector<std::pair<CLI::App*, int (*)(const RunConfig&)>> cmds;
  cmds.emplace_back(app.add_subcommand("count", "orbit counts by every method"), cmd_count);
  cmds.emplace_back(app.add_subcommand("orbits", "orbit representatives and sizes"), cmd_orbits);
  cmds.emplace_back(app.add_subcommand("poset", "comparabilities and neighbour pairs"), cmd_poset);
  cmds.emplace_back(app.add_subcommand("diagram", "genetic diagram as text, DOT or JSON"), cmd_diagram);
  cmds.emplace_back(app.add_subcommand("chiral", "chiral-pair classification against G'"), cmd_chiral);
  cmds.emplace_back(app.add_subcommand("verify", "cross-check every count and order relation"), cmd_verify);
  for (auto& [sub, fn] : cmds) add_common(sub);
  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error[usage]: " << e.what() << "\n";
    return kUsage;
  }
  try {
    for (auto& [sub, fn] : cmds)
      if (sub->parsed()) return fn(cfg);
  } catch (const ParseError& e) {
    std::cerr << "error[parse]: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "error[domain]: " << e.what() << "\n";
    return kUsage;
  } catch (const CapExceeded& e) {
    std::cerr << "error[cap]: " << e.what() << "\n";
    return kCap;
  } catch (const IntegralityError& e) {
    std::cerr << "error[integrality]: " << e.what() << "\n";
    return kVerify;
  }
  return kUsage;
}
