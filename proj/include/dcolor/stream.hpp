#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dcolor/graph.hpp"
#include "dcolor/types.hpp"

namespace dcolor {

class StreamError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public StreamError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : StreamError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct StreamMeta {
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint32_t delta = 0;
  std::uint64_t seed = 0;
};

class EdgeSource;

// One pass over a source. next() yields each edge once, then nullopt once;
// any further pull throws.
class EdgeStream {
 public:
  std::optional<Edge> next();
  std::size_t delivered() const { return cursor_; }
  std::size_t n() const;

 private:
  friend class EdgeSource;
  struct Shared;
  explicit EdgeStream(std::shared_ptr<const Shared> data) : data_(std::move(data)) {}

  std::shared_ptr<const Shared> data_;
  std::size_t cursor_ = 0;
  bool exhausted_ = false;
};

// Owns the input edge sequence after parsing and hands out passes over it in
// a seed-determined arrival order. passes() counts every open().
class EdgeSource {
 public:
  static EdgeSource from_text(const std::string& text, std::uint64_t shuffle_seed);
  static EdgeSource from_file(const std::string& path, std::uint64_t shuffle_seed);
  static EdgeSource from_edges(std::size_t n, std::vector<Edge> edges, std::uint64_t shuffle_seed);

  EdgeStream open();

  std::size_t n() const;
  std::size_t passes() const { return passes_; }

  // Max degree declared by a generator, if any.
  std::optional<std::uint32_t> declared_delta;

 private:
  explicit EdgeSource(std::shared_ptr<const EdgeStream::Shared> data) : data_(std::move(data)) {}

  std::shared_ptr<const EdgeStream::Shared> data_;
  std::size_t passes_ = 0;
};

struct ParsedEdgeList {
  std::size_t n = 0;
  std::vector<Edge> edges;
};

ParsedEdgeList parse_edge_list(const std::string& text);
std::string format_edge_list(std::size_t n, const std::vector<Edge>& edges);

// ---- census ----

using DegreeTable = std::vector<std::uint32_t>;

struct ComponentStats {
  std::vector<Vertex> members;  // ascending
  std::size_t ecount = 0;
  std::uint32_t max_degree = 0;
  std::uint32_t min_degree = 0;
};

struct ComponentCensus {
  std::vector<ComponentStats> components;  // ordered by smallest member
  std::vector<std::uint32_t> component_of;
};

struct Census {
  StreamMeta meta;
  DegreeTable degree;
  ComponentCensus components;
};

// One full pass computing degrees and union-find components. If shadow is
// non-null, the full adjacency is recorded there too.
Census run_census(EdgeStream& stream, std::uint64_t seed = 0, Graph* shadow = nullptr);

std::pair<DegreeTable, StreamMeta> degree_census(EdgeStream& stream);

Graph shadow_copy(EdgeStream& stream);

enum class Colorability { kColorable, kCliqueComponent, kOddCycleComponent };

struct ComponentVerdict {
  std::size_t component = 0;
  Colorability verdict = Colorability::kColorable;
};

std::vector<ComponentVerdict> check_colorability(const Census& census, std::uint32_t delta);

// Human-readable reason for the first non-colorable component, or nullopt.
std::optional<std::string> colorability_failure(const Census& census, std::uint32_t delta);

}  // namespace dcolor
