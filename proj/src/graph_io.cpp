#include "expdom/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "expdom/error.hpp"

namespace expdom {

namespace {

std::vector<std::string_view> split_whitespace(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const auto start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

bool parse_unsigned(std::string_view token, std::uint64_t& out) {
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

Graph parse_edge_format(std::string_view text) {
  std::vector<std::vector<std::string_view>> data_lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(pos, end - pos);
    pos = end + 1;
    auto tokens = split_whitespace(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    data_lines.push_back(std::move(tokens));
  }
  if (data_lines.empty()) {
    throw Error(ErrorKind::MalformedHeader, "missing \"n m\" header line");
  }
  const auto& header = data_lines.front();
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  if (header.size() != 2 || !parse_unsigned(header[0], n) || !parse_unsigned(header[1], m)) {
    throw Error(ErrorKind::MalformedHeader, "header must be two non-negative integers \"n m\"");
  }
  if (data_lines.size() - 1 != m) {
    throw Error(ErrorKind::MalformedEdge, "header announces " + std::to_string(m) +
                                              " edges but " +
                                              std::to_string(data_lines.size() - 1) + " found");
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 1; i < data_lines.size(); ++i) {
    const auto& tokens = data_lines[i];
    std::uint64_t u = 0;
    std::uint64_t v = 0;
    if (tokens.size() != 2 || !parse_unsigned(tokens[0], u) || !parse_unsigned(tokens[1], v)) {
      throw Error(ErrorKind::MalformedEdge, "edge line " + std::to_string(i) +
                                                " must be two non-negative integers");
    }
    if (u >= n || v >= n) {
      throw Error(ErrorKind::VertexOutOfRange, "edge line " + std::to_string(i) +
                                                   ": vertex out of range for n = " +
                                                   std::to_string(n));
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return Graph(n, edges);
}

Graph parse_graph6(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  constexpr std::string_view kPrefix = ">>graph6<<";
  if (text.substr(0, kPrefix.size()) == kPrefix) text.remove_prefix(kPrefix.size());
  for (char c : text) {
    if (c < 63 || c > 126) throw Error(ErrorKind::MalformedGraph6, "graph6 byte out of range");
  }
  if (text.empty()) throw Error(ErrorKind::MalformedGraph6, "empty graph6 string");

  std::size_t pos = 0;
  std::uint64_t n = 0;
  auto take = [&](std::size_t count) {
    if (pos + count > text.size()) {
      throw Error(ErrorKind::MalformedGraph6, "truncated graph6 order field");
    }
    std::uint64_t value = 0;
    for (std::size_t i = 0; i < count; ++i) value = (value << 6) | (text[pos++] - 63);
    return value;
  };
  if (text[0] != 126) {
    n = take(1);
  } else if (text.size() > 1 && text[1] != 126) {
    ++pos;
    n = take(3);
  } else {
    pos += 2;
    n = take(6);
  }
  const std::uint64_t bits = n * (n == 0 ? 0 : n - 1) / 2;
  const std::uint64_t expected_bytes = (bits + 5) / 6;
  if (text.size() - pos != expected_bytes) {
    throw Error(ErrorKind::MalformedGraph6, "graph6 body has wrong length");
  }
  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (std::uint64_t j = 1; j < n; ++j) {
    for (std::uint64_t i = 0; i < j; ++i, ++k) {
      const int byte = text[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  // padding bits must be zero
  for (; k < expected_bytes * 6; ++k) {
    const int byte = text[pos + k / 6] - 63;
    if ((byte >> (5 - k % 6)) & 1) {
      throw Error(ErrorKind::MalformedGraph6, "nonzero graph6 padding");
    }
  }
  return Graph(n, edges);
}

std::string emit_graph6(const Graph& g) {
  std::string out;
  const std::uint64_t n = g.order();
  auto put = [&](std::uint64_t value, int groups) {
    for (int i = groups - 1; i >= 0; --i) out.push_back(static_cast<char>(((value >> (6 * i)) & 63) + 63));
  };
  if (n <= 62) {
    put(n, 1);
  } else if (n <= 258047) {
    out.push_back(126);
    put(n, 3);
  } else {
    out.push_back(126);
    out.push_back(126);
    put(n, 6);
  }
  int acc = 0;
  int filled = 0;
  for (std::uint64_t j = 1; j < n; ++j) {
    for (std::uint64_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

}  // namespace

Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::Edge ? parse_edge_format(text) : parse_graph6(text);
}

std::string emit_graph(const Graph& g, GraphFormat format) {
  if (format == GraphFormat::Graph6) return emit_graph6(g);
  std::ostringstream os;
  os << g.order() << ' ' << g.size();
  for (const auto& [u, v] : g.edges()) os << '\n' << u << ' ' << v;
  return os.str();
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const bool g6 = path.ends_with(".g6") || path.ends_with(".graph6");
  return parse_graph(buffer.str(), g6 ? GraphFormat::Graph6 : GraphFormat::Edge);
}

VertexSet parse_vertex_set(std::string_view text, std::size_t n) {
  std::vector<Vertex> out;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  if (text.empty()) return {};
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    auto token = text.substr(pos, end - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    std::uint64_t v = 0;
    if (!parse_unsigned(token, v)) {
      throw Error(ErrorKind::MalformedSet, "malformed vertex id \"" + std::string(token) + "\"");
    }
    if (v >= n) {
      throw Error(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(v) + " out of range");
    }
    out.push_back(static_cast<Vertex>(v));
    pos = end + 1;
  }
  const auto set = make_vertex_set(out);
  if (set.size() != out.size()) throw Error(ErrorKind::MalformedSet, "duplicate vertex in set");
  return set;
}

std::string format_vertex_set(const VertexSet& set) {
  std::string out;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(set[i]);
  }
  return out;
}

}  // namespace expdom
