#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dcolor {

using Vertex = std::uint32_t;
using Color = std::uint32_t;

// Colors are 1..delta; 0 marks an uncolored vertex.
inline constexpr Color kNoColor = 0;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace dcolor
