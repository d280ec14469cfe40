#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lsiso/counting.hpp"
#include "lsiso/orbit.hpp"

namespace lsiso {

struct PinnedOrbit {
  std::string shape;  // partition text
  std::string letter;
  std::string tabloid;
};

struct SkeletonSpec {
  std::string name;
  int d = 0;
  PermGroup G;
  std::optional<PermGroup> Gprime;
  std::optional<PermGroup> Gdoubleprime;
  std::vector<PinnedOrbit> pins;         // names for G-orbits
  std::vector<PinnedOrbit> coarse_pins;  // names for G''-orbits
  std::string notes;
};

SkeletonSpec builtin(const std::string& name);
std::vector<std::string> builtin_names();
// Group-spec text: "degree <d>" then one generator per line.
SkeletonSpec parse_group_spec(const std::string& text, const std::string& name = "custom",
                              std::size_t cap = kDefaultCap);
PermGroup parse_group_text(const std::string& text, std::size_t cap = kDefaultCap);

/// Letters for G-orbits of one shape: pinned names first, the rest in
/// canonical order from the unused letters.
std::vector<std::string> orbit_letters(const OrbitSpace& space,
                                       const std::vector<PinnedOrbit>& pins,
                                       const std::string& fallback = "abcefhijklmnopqrstuvwxyz");

std::uint64_t kauffmann_count(const Partition& lambda);

struct NamedRelation {
  std::string lower, upper;
  friend bool operator==(const NamedRelation&, const NamedRelation&) = default;
  friend auto operator<=>(const NamedRelation&, const NamedRelation&) = default;
};
std::vector<NamedRelation> korner_relations();

struct DiagramNode {
  std::string name;    // a_(2,1^2)
  Partition shape;
  std::size_t orbit = 0;  // index within its shape's OrbitSpace
  std::size_t size = 0;
  std::string representative;
  std::optional<std::string> structural;  // G''-class name
  std::optional<bool> chiral;             // part of a G'-pair
};

struct GeneticDiagram {
  std::string skeleton;
  std::vector<DiagramNode> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> edges;            // (lower, upper), neighbours
  std::vector<std::pair<std::size_t, std::size_t>> extra_relations;  // comparable, adjacent shapes
  std::vector<std::pair<std::size_t, std::size_t>> diastereomers;    // same G''-class, distinct
  long find(const std::string& name) const;
};

constexpr int kDiagramMaxDegree = 10;
GeneticDiagram genetic_diagram(const SkeletonSpec& spec,
                               const std::vector<Partition>& shapes = {});
std::string emit_dot(const GeneticDiagram& g);
nlohmann::json to_json(const GeneticDiagram& g);
nlohmann::json to_json(const CountReport& r);

}  // namespace lsiso
