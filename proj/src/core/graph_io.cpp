#include "core/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "core/error.hpp"

namespace qx {

namespace {

constexpr int kG6Offset = 63;
constexpr std::string_view kG6Header = ">>graph6<<";

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view token, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    fail(ErrorCode::parse,
         std::string("cannot parse ") + what + ": '" + std::string(token) + "'");
  return value;
}

}  // namespace

std::string to_edge_list_text(const Graph& g) {
  std::ostringstream out;
  out << "n=" << g.vertex_count() << "\n";
  for (const Edge& e : g.edges()) out << e.u << " " << e.v << "\n";
  return out.str();
}

Graph from_edge_list_text(std::string_view text) {
  std::vector<std::pair<int, int>> edges;
  int n = -1;
  bool saw_content = false;

  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    std::string_view line =
        end == std::string_view::npos ? text.substr(start)
                                      : text.substr(start, end - start);
    start = end == std::string_view::npos ? text.size() + 1 : end + 1;

    line = trim(line);
    if (line.empty() || line.front() == '#') continue;

    if (!saw_content && line.substr(0, 2) == "n=") {
      n = parse_int(trim(line.substr(2)), "vertex count header");
      if (n < 0) fail(ErrorCode::parse, "negative vertex count header");
      saw_content = true;
      continue;
    }
    saw_content = true;

    std::istringstream fields{std::string(line)};
    std::string a, b, extra;
    if (!(fields >> a >> b) || (fields >> extra))
      fail(ErrorCode::parse, "expected 'u v' line, got '" + std::string(line) + "'");
    edges.emplace_back(parse_int(a, "vertex index"), parse_int(b, "vertex index"));
  }
  return Graph::from_edge_list(edges, n);
}

std::string graph6_from_bitstream(int n, const std::function<int(int)>& bit) {
  if (n < 0) fail(ErrorCode::invalid_argument, "negative vertex count");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kG6Offset));
  } else if (n <= 258047) {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kG6Offset));
    out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kG6Offset));
    out.push_back(static_cast<char>((n & 0x3f) + kG6Offset));
  } else {
    fail(ErrorCode::limit, "graph6 writer supports n <= 258047");
  }

  const int total = n * (n - 1) / 2;
  int group = 0;
  int filled = 0;
  for (int i = 0; i < total; ++i) {
    group = (group << 1) | (bit(i) ? 1 : 0);
    if (++filled == 6) {
      out.push_back(static_cast<char>(group + kG6Offset));
      group = 0;
      filled = 0;
    }
  }
  if (filled > 0) {
    group <<= (6 - filled);
    out.push_back(static_cast<char>(group + kG6Offset));
  }
  return out;
}

std::string to_graph6(const Graph& g) {
  const int n = g.vertex_count();
  // Bit index i corresponds to the pair (row, col) in column-major order.
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(n * (n - 1) / 2);
  for (int col = 1; col < n; ++col)
    for (int row = 0; row < col; ++row) pairs.emplace_back(row, col);
  return graph6_from_bitstream(
      n, [&](int i) { return g.has_edge(pairs[i].first, pairs[i].second) ? 1 : 0; });
}

Graph from_graph6(std::string_view line) {
  line = trim(line);
  if (line.substr(0, kG6Header.size()) == kG6Header)
    line = trim(line.substr(kG6Header.size()));
  if (line.empty()) fail(ErrorCode::parse, "empty graph6 line");

  std::size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= line.size()) fail(ErrorCode::parse, "truncated graph6 line");
    int c = static_cast<unsigned char>(line[pos++]);
    if (c < kG6Offset || c > 126)
      fail(ErrorCode::parse, "invalid graph6 character");
    return c - kG6Offset;
  };

  long n = 0;
  int first = next();
  if (first < 63) {
    n = first;
  } else {
    // 126 - 63: extended size; a second 126 would mean the 8-byte form.
    if (pos < line.size() && static_cast<unsigned char>(line[pos]) == 126)
      fail(ErrorCode::limit, "graph6 reader supports n <= 258047");
    n = (static_cast<long>(next()) << 12) | (next() << 6) | next();
  }

  const long total = n * (n - 1) / 2;
  const std::size_t expect = pos + static_cast<std::size_t>((total + 5) / 6);
  if (line.size() != expect)
    fail(ErrorCode::parse, "graph6 line length mismatch");

  std::vector<std::pair<int, int>> edges;
  int group = 0;
  int remaining = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      if (remaining == 0) {
        group = next();
        remaining = 6;
      }
      if (group & (1 << (remaining - 1))) edges.emplace_back(row, col);
      --remaining;
    }
  }
  return Graph::from_edge_list(edges, static_cast<int>(n));
}

Graph parse_graph_text(std::string_view text) {
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    std::string_view line =
        end == std::string_view::npos ? text.substr(start)
                                      : text.substr(start, end - start);
    start = end == std::string_view::npos ? text.size() : end + 1;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;

    if (line.substr(0, kG6Header.size()) == kG6Header ||
        (line.find_first_of(" \t") == std::string_view::npos &&
         line.substr(0, 2) != "n="))
      return from_graph6(line);
    return from_edge_list_text(text);
  }
  return from_edge_list_text(text);  // blank input -> empty graph
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::io, "cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph_text(buffer.str());
}

}  // namespace qx
