#include "lsiso/catalog.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "lsiso/errors.hpp"

namespace lsiso {

namespace {

PermGroup group_of(const std::vector<std::string>& gens, int d) {
  std::vector<Permutation> g;
  for (auto& s : gens) g.push_back(parse_cycles(s, d));
  return generate(g, d);
}

SkeletonSpec benzene() {
  SkeletonSpec s;
  s.name = "benzene";
  s.d = 6;
  s.G = group_of({"(123456)", "(13)(46)"}, 6);
  s.pins = {
      {"4,2", "a", "{2,3,5,6}{1,4}"}, {"4,2", "b", "{1,2,3,4}{5,6}"}, {"4,2", "c", "{2,4,5,6}{1,3}"},
      {"3,3", "a", "{1,2,4}{3,5,6}"}, {"3,3", "b", "{1,2,3}{4,5,6}"}, {"3,3", "c", "{1,3,5}{2,4,6}"},
  };
  s.notes = "dihedral group D_6 on the six ring positions";
  return s;
}

SkeletonSpec ethene() {
  SkeletonSpec s;
  s.name = "ethene";
  s.d = 4;
  s.G = group_of({"(12)(34)", "(13)(24)"}, 4);
  s.Gprime = s.G;
  s.Gdoubleprime = group_of({"(1234)", "(13)"}, 4);
  s.pins = {
      {"4", "a", "{1,2,3,4}"},
      {"3,1", "a", "{1,2,3}{4}"},
      {"2,2", "a", "{1,2}{3,4}"},     {"2,2", "b", "{1,4}{2,3}"},     {"2,2", "c", "{1,3}{2,4}"},
      {"2,1,1", "a", "{1,2}{3}{4}"},  {"2,1,1", "b", "{1,4}{2}{3}"},  {"2,1,1", "c", "{1,3}{2}{4}"},
      {"1^4", "a", "{1}{2}{3}{4}"},   {"1^4", "b", "{1}{2}{4}{3}"},   {"1^4", "c", "{1}{4}{2}{3}"},
      {"1^4", "e", "{1}{3}{2}{4}"},   {"1^4", "f", "{3}{1}{2}{4}"},   {"1^4", "h", "{3}{2}{1}{4}"},
  };
  s.coarse_pins = {
      {"4", "a", "{1,2,3,4}"},        {"3,1", "a", "{1,2,3}{4}"},
      {"2,2", "u", "{1,2}{3,4}"},     {"2,2", "v", "{1,3}{2,4}"},
      {"2,1,1", "u", "{1,2}{3}{4}"},  {"2,1,1", "v", "{1,3}{2}{4}"},
      {"1^4", "u", "{1}{2}{3}{4}"},   {"1^4", "v", "{1}{2}{4}{3}"},   {"1^4", "w", "{1}{3}{2}{4}"},
  };
  s.notes = "G = G' is the Klein four-group, G'' = D_4";
  return s;
}

SkeletonSpec naphthalene() {
  SkeletonSpec s;
  s.name = "naphthalene";
  s.d = 8;
  s.G = group_of({"(12)(34)(56)(78)", "(13)(24)(57)(68)"}, 8);
  s.notes = "Klein four-group acting on the eight peripheral positions";
  return s;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<std::string> builtin_names() { return {"benzene", "ethene", "naphthalene"}; }

SkeletonSpec builtin(const std::string& name) {
  if (name == "benzene") return benzene();
  if (name == "ethene") return ethene();
  if (name == "naphthalene") return naphthalene();
  throw DomainError("unknown builtin skeleton: " + name);
}

PermGroup parse_group_text(const std::string& text, std::size_t cap) {
  std::istringstream in(text);
  std::string line;
  int d = 0;
  std::vector<Permutation> gens;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line = line.substr(0, h);
    line = trim(line);
    if (line.empty()) continue;
    if (d == 0) {
      std::istringstream ls(line);
      std::string word;
      ls >> word >> d;
      std::string rest;
      if (word != "degree" || !ls || d < 1 || (ls >> rest))
        throw ParseError("line " + std::to_string(lineno) + ": expected 'degree <d>'");
      if (d > kMaxDegree) throw ParseError("degree above " + std::to_string(kMaxDegree) + " is not supported");
      continue;
    }
    try {
      gens.push_back(parse_cycles(line, d));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (d == 0) throw ParseError("group spec has no 'degree' line");
  return generate(gens, d, cap);
}

SkeletonSpec parse_group_spec(const std::string& text, const std::string& name, std::size_t cap) {
  SkeletonSpec s;
  s.name = name;
  s.G = parse_group_text(text, cap);
  s.d = s.G.degree();
  return s;
}

std::vector<std::string> orbit_letters(const OrbitSpace& space, const std::vector<PinnedOrbit>& pins,
                                       const std::string& fallback) {
  std::vector<std::string> names(space.orbits.size());
  std::set<std::string> used;
  for (auto& p : pins) {
    if (!(parse_partition(p.shape, space.shape.d()) == space.shape)) continue;
    long k = space.find(parse_dissection(p.tabloid, space.shape.d()));
    if (k < 0) throw DomainError("pinned tabloid not found: " + p.tabloid);
    if (!names[k].empty()) throw DomainError("two pins name the same orbit: " + p.tabloid);
    names[k] = p.letter;
    used.insert(p.letter);
  }
  std::size_t next = 0;
  for (auto& n : names) {
    if (!n.empty()) continue;
    while (true) {
      std::string cand = next < fallback.size() ? std::string(1, fallback[next]) : "o" + std::to_string(next);
      ++next;
      if (!used.count(cand)) {
        n = cand;
        used.insert(cand);
        break;
      }
    }
  }
  return names;
}

std::uint64_t kauffmann_count(const Partition& lambda) {
  if (lambda.d() != 8) throw DomainError("the closed form is for partitions of 8");
  auto parts = lambda.nonzero();
  std::uint64_t den = 1;
  for (int p : parts) den *= factorial(p);
  // 4 * n = 8!/prod lambda_k! + [all even] 3 * 4!/prod (lambda_k/2)!
  std::uint64_t four_n = factorial(8) / den;
  if (std::all_of(parts.begin(), parts.end(), [](int p) { return p % 2 == 0; })) {
    std::uint64_t h = 1;
    for (int p : parts) h *= factorial(p / 2);
    four_n += 3 * (factorial(4) / h);
  }
  if (four_n % 4) throw IntegralityError("closed form is not integral");
  return four_n / 4;
}

std::vector<NamedRelation> korner_relations() {
  auto spec = benzene();
  auto lo = orbits(spec.G, parse_partition("3,3"));
  auto hi = orbits(spec.G, parse_partition("4,2"));
  auto lo_names = orbit_letters(lo, spec.pins), hi_names = orbit_letters(hi, spec.pins);
  std::vector<NamedRelation> out;
  for (std::size_t i = 0; i < lo.orbits.size(); ++i)
    for (std::size_t j = 0; j < hi.orbits.size(); ++j)
      if (orbit_less(lo.orbits[i], hi.orbits[j]))
        out.push_back({orbit_name(lo_names[i], lo.shape), orbit_name(hi_names[j], hi.shape)});
  std::sort(out.begin(), out.end());
  return out;
}

long GeneticDiagram::find(const std::string& name) const {
  for (std::size_t k = 0; k < nodes.size(); ++k)
    if (nodes[k].name == name) return static_cast<long>(k);
  return -1;
}

constexpr std::size_t kDiagramMaxNodes = 4000;

GeneticDiagram genetic_diagram(const SkeletonSpec& spec, const std::vector<Partition>& shapes_in) {
  if (spec.d > kDiagramMaxDegree) throw CapExceeded("diagram limited to degree " + std::to_string(kDiagramMaxDegree));
  auto shapes = shapes_in.empty() ? all_partitions(spec.d) : shapes_in;
  GeneticDiagram g;
  g.skeleton = spec.name;
  std::vector<OrbitSpace> spaces;
  std::vector<const Orbit*> orbit_ptr;
  for (auto& lambda : shapes) spaces.push_back(orbits(spec.G, lambda));
  std::size_t total = 0;
  for (auto& sp : spaces) total += sp.orbits.size();
  if (total > kDiagramMaxNodes) throw CapExceeded("diagram would have " + std::to_string(total) + " nodes");

  const bool chiral = spec.Gprime && spec.Gprime->order() == 2 * spec.G.order();
  const bool have_gp = spec.Gprime.has_value();
  for (std::size_t si = 0; si < spaces.size(); ++si) {
    auto& sp = spaces[si];
    auto names = orbit_letters(sp, spec.pins);
    std::vector<std::optional<std::string>> structural(sp.orbits.size());
    if (spec.Gdoubleprime) {
      auto coarse = orbits(*spec.Gdoubleprime, sp.shape);
      auto cnames = orbit_letters(coarse, spec.coarse_pins, "uvwxyz");
      auto parts = refine(coarse, sp);
      for (std::size_t c = 0; c < parts.size(); ++c)
        for (auto k : parts[c]) structural[k] = orbit_name(cnames[c], sp.shape);
    }
    std::vector<std::optional<bool>> chi_flag(sp.orbits.size());
    if (have_gp) {
      for (auto& f : chi_flag) f = false;
      if (chiral) {
        auto rep = classify_chiral(spec.G, *spec.Gprime, sp.shape);
        for (auto& e : rep.entries)
          for (auto k : e.fine) chi_flag[k] = e.is_pair();
      }
    }
    for (std::size_t k = 0; k < sp.orbits.size(); ++k) {
      DiagramNode n;
      n.name = orbit_name(names[k], sp.shape);
      n.shape = sp.shape;
      n.orbit = k;
      n.size = sp.orbits[k].size();
      n.representative = sp.orbits[k].representative.str();
      n.structural = structural[k];
      n.chiral = chi_flag[k];
      g.nodes.push_back(std::move(n));
      orbit_ptr.push_back(&sp.orbits[k]);
    }
  }
  for (std::size_t a = 0; a < g.nodes.size(); ++a)
    for (std::size_t b = 0; b < g.nodes.size(); ++b) {
      if (compare_dominance(g.nodes[a].shape, g.nodes[b].shape) != Dominance::less) continue;
      const Orbit& oa = *orbit_ptr[a];
      const Orbit& ob = *orbit_ptr[b];
      if (!orbit_less(oa, ob)) continue;
      if (orbit_neighbors(oa, ob)) g.edges.emplace_back(a, b);
      else if (is_adjacent(oa.shape, ob.shape)) g.extra_relations.emplace_back(a, b);
    }
  for (std::size_t a = 0; a < g.nodes.size(); ++a)
    for (std::size_t b = a + 1; b < g.nodes.size(); ++b)
      if (g.nodes[a].structural && g.nodes[a].structural == g.nodes[b].structural)
        g.diastereomers.emplace_back(a, b);
  return g;
}

std::string emit_dot(const GeneticDiagram& g) {
  std::ostringstream out;
  auto q = [](const std::string& s) { return "\"" + s + "\""; };
  out << "digraph " << q(g.skeleton.empty() ? "diagram" : g.skeleton) << " {\n";
  out << "  rankdir=TB;\n";
  std::vector<Partition> shapes;
  for (auto& n : g.nodes)
    if (std::find(shapes.begin(), shapes.end(), n.shape) == shapes.end()) shapes.push_back(n.shape);
  for (std::size_t c = 0; c < shapes.size(); ++c) {
    out << "  subgraph " << q("cluster_" + shapes[c].str()) << " {\n";
    out << "    label=" << q("(" + shapes[c].str() + ")") << ";\n";
    for (auto& n : g.nodes)
      if (n.shape == shapes[c]) out << "    " << q(n.name) << " [label=" << q(n.name) << "];\n";
    out << "  }\n";
  }
  // arrows point from the higher isomer to the lower one
  for (auto [lo, hi] : g.edges) out << "  " << q(g.nodes[hi].name) << " -> " << q(g.nodes[lo].name) << " [style=solid];\n";
  for (auto [lo, hi] : g.extra_relations)
    out << "  " << q(g.nodes[hi].name) << " -> " << q(g.nodes[lo].name) << " [style=dashed];\n";
  for (auto [a, b] : g.diastereomers)
    out << "  " << q(g.nodes[a].name) << " -> " << q(g.nodes[b].name) << " [dir=both, style=bold, constraint=false, xlabel="
        << q(*g.nodes[a].structural) << "];\n";
  out << "}\n";
  return out.str();
}

nlohmann::json to_json(const GeneticDiagram& g) {
  nlohmann::json j;
  j["skeleton"] = g.skeleton;
  j["nodes"] = nlohmann::json::array();
  for (auto& n : g.nodes) {
    nlohmann::json x{{"name", n.name}, {"shape", n.shape.str()}, {"size", n.size}, {"representative", n.representative}};
    x["structural"] = n.structural ? nlohmann::json(*n.structural) : nlohmann::json(nullptr);
    x["chiral"] = n.chiral ? nlohmann::json(*n.chiral) : nlohmann::json(nullptr);
    j["nodes"].push_back(x);
  }
  auto pairs = [&](const std::vector<std::pair<std::size_t, std::size_t>>& v) {
    auto a = nlohmann::json::array();
    for (auto [x, y] : v) a.push_back({g.nodes[x].name, g.nodes[y].name});
    return a;
  };
  j["edges"] = pairs(g.edges);
  j["extra_relations"] = pairs(g.extra_relations);
  j["diastereomers"] = pairs(g.diastereomers);
  return j;
}

nlohmann::json to_json(const CountReport& r) {
  auto opt = [](const std::optional<std::uint64_t>& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); };
  return nlohmann::json{{"shape", r.shape.str()}, {"chi", r.chi},     {"theta", r.theta},
                        {"scalar", r.scalar},     {"t527", r.t527},   {"t529", opt(r.t529)},
                        {"ruch", opt(r.ruch)},    {"brute", opt(r.brute)}, {"agree", r.agree}};
}

}  // namespace lsiso
