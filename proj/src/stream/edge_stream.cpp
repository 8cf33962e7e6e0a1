#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "dcolor/rng.hpp"
#include "dcolor/stream.hpp"

namespace dcolor {

struct EdgeStream::Shared {
  std::size_t n = 0;
  std::vector<Edge> edges;
  std::vector<std::uint32_t> order;
};

std::size_t EdgeStream::n() const { return data_->n; }

std::optional<Edge> EdgeStream::next() {
  if (exhausted_) throw StreamError("stream already exhausted; re-open the source for another pass");
  if (cursor_ == data_->order.size()) {
    exhausted_ = true;
    return std::nullopt;
  }
  return data_->edges[data_->order[cursor_++]];
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

bool parse_uint(std::string_view& s, std::uint64_t& out) {
  s = trim(s);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc() || ptr == s.data()) return false;
  s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
  return true;
}

}  // namespace

ParsedEdgeList parse_edge_list(const std::string& text) {
  ParsedEdgeList out;
  bool have_header = false;
  std::unordered_set<std::uint64_t> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    std::string_view line(text.data() + pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (!have_header) {
      std::uint64_t n = 0;
      if (!parse_uint(line, n) || !trim(line).empty()) throw ParseError(line_no, "expected vertex count header");
      if (n == 0) throw ParseError(line_no, "vertex count must be at least 1");
      if (n > 0x7FFFFFFFULL) throw ParseError(line_no, "vertex count too large");
      out.n = n;
      have_header = true;
      continue;
    }
    std::uint64_t u = 0, v = 0;
    if (!parse_uint(line, u) || !parse_uint(line, v) || !trim(line).empty()) {
      throw ParseError(line_no, "expected \"u v\"");
    }
    if (u >= out.n || v >= out.n) throw ParseError(line_no, "vertex id out of range");
    if (u == v) throw ParseError(line_no, "self-loop");
    std::uint64_t key = std::min(u, v) << 32 | std::max(u, v);
    if (!seen.insert(key).second) throw ParseError(line_no, "duplicate edge");
    out.edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    if (end == text.size()) break;
  }
  if (!have_header) throw ParseError(line_no == 0 ? 1 : line_no, "missing vertex count header");
  return out;
}

std::string format_edge_list(std::size_t n, const std::vector<Edge>& edges) {
  std::ostringstream os;
  os << n << '\n';
  for (const Edge& e : edges) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

EdgeSource EdgeSource::from_edges(std::size_t n, std::vector<Edge> edges, std::uint64_t shuffle_seed) {
  if (n == 0) throw StreamError("vertex count must be at least 1");
  auto data = std::make_shared<EdgeStream::Shared>();
  data->n = n;
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) throw StreamError("vertex id out of range");
    if (e.u == e.v) throw StreamError("self-loop");
  }
  data->edges = std::move(edges);
  data->order.resize(data->edges.size());
  std::iota(data->order.begin(), data->order.end(), 0U);
  Rng rng(derive_seed(shuffle_seed, SeedTag::kShuffle));
  rng.shuffle(data->order.begin(), data->order.end());
  return EdgeSource(std::move(data));
}

EdgeSource EdgeSource::from_text(const std::string& text, std::uint64_t shuffle_seed) {
  ParsedEdgeList parsed = parse_edge_list(text);
  return from_edges(parsed.n, std::move(parsed.edges), shuffle_seed);
}

EdgeSource EdgeSource::from_file(const std::string& path, std::uint64_t shuffle_seed) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StreamError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_text(buf.str(), shuffle_seed);
}

EdgeStream EdgeSource::open() {
  ++passes_;
  return EdgeStream(data_);
}

std::size_t EdgeSource::n() const { return data_->n; }

}  // namespace dcolor
