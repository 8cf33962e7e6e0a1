#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dcolor/types.hpp"

namespace dcolor {

// A planted dense block and the role it is built to play.
struct PlantedBlock {
  std::vector<Vertex> members;  // ascending
  std::string kind;             // e.g. "critical", "lonely-small", "friendly-small", "holey-critical", "large"
  std::optional<Vertex> friend_vertex;
};

struct GeneratedInstance {
  std::string family;
  std::size_t n = 0;
  std::uint32_t delta = 0;
  std::vector<Edge> edges;  // sorted, u < v
  std::vector<PlantedBlock> blocks;
};

// "family:key=val,..." with keys delta|Δ|d, count|pairs|blocks|k, seed, n,
// holes|t, avg.
struct GeneratorSpec {
  std::string family;
  std::map<std::string, std::string> values;

  static GeneratorSpec parse(const std::string& text);

  std::optional<std::uint64_t> get(std::initializer_list<const char*> keys) const;
  std::optional<double> get_real(std::initializer_list<const char*> keys) const;
};

GeneratedInstance generate_instance(const GeneratorSpec& spec);

struct FamilyArgs {
  std::string family;
  std::uint32_t delta = 0;
  std::uint32_t count = 1;
  std::uint64_t seed = 0;
  std::size_t n = 0;       // random-regular, erdos-renyi
  std::uint32_t holes = 0;  // holey-clique
  double avg = 0;           // erdos-renyi mean degree; 0 means delta/2
};

GeneratedInstance generate_instance(const FamilyArgs& args);

}  // namespace dcolor
