#ifndef SPECTRAL_IO_HPP
#define SPECTRAL_IO_HPP

// graph6 and edge-list text formats.
//
// graph6: N(n) followed by the upper triangle of the adjacency matrix in
// column order (x(0,1), x(0,2), x(1,2), x(0,3), ...), six bits per byte,
// most significant first, each byte offset by 63. N(n) is one byte n+63 for
// n <= 62, or 126 followed by three 6-bit bytes for n <= 258047.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <iterator>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spectral/errors.hpp"
#include "spectral/graph.hpp"

namespace spectral {

inline constexpr std::size_t kGraph6MaxOrder = 258047;
inline constexpr std::string_view kGraph6Header = ">>graph6<<";

/// Decodes one graph6 record. Trailing CR/LF and a leading ">>graph6<<"
/// header are ignored.
inline Graph parse_graph6(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  std::size_t pos = 0;
  if (line.starts_with(kGraph6Header)) pos = kGraph6Header.size();
  const std::size_t base = pos;
  auto byte = [&](std::size_t i) -> std::uint32_t {
    if (i >= line.size()) throw ParseError("truncated graph6 record", i);
    const auto c = static_cast<unsigned char>(line[i]);
    if (c < 63 || c > 126) throw ParseError("byte " + std::to_string(c) + " outside the graph6 range 63..126", i);
    return c - 63u;
  };
  if (pos >= line.size()) throw ParseError("empty graph6 record", pos);
  std::size_t n = 0;
  if (byte(pos) < 63) {
    n = byte(pos);
    pos += 1;
  } else if (pos + 1 < line.size() && static_cast<unsigned char>(line[pos + 1]) == 126) {
    throw CapacityError("graph6 order above " + std::to_string(kGraph6MaxOrder) + " is not supported");
  } else {
    n = (byte(pos + 1) << 12) | (byte(pos + 2) << 6) | byte(pos + 3);
    if (n <= 62) throw ParseError("non-canonical graph6 order encoding", base);
    pos += 4;
  }
  if (n == 0) throw ParseError("graph6 record of order 0 is not supported", base);
  const std::size_t bits = n * (n - 1) / 2;
  const std::size_t payload = (bits + 5) / 6;
  if (line.size() < pos + payload) {
    for (std::size_t i = pos; i < line.size(); ++i) byte(i);
    throw ParseError("truncated graph6 record: " + std::to_string(n) + " vertices need " + std::to_string(payload) +
                         " payload bytes, found " + std::to_string(line.size() - pos),
                     line.size());
  }
  if (line.size() > pos + payload) {
    byte(pos + payload);
    throw ParseError("trailing bytes after graph6 record", pos + payload);
  }
  for (std::size_t i = pos; i < pos + payload; ++i) byte(i);
  if (n > kMaxOrder) throw CapacityError("graph order " + std::to_string(n) + " exceeds the supported maximum " + std::to_string(kMaxOrder));
  GraphBuilder b(n);
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i, ++k)
      if ((byte(pos + k / 6) >> (5 - k % 6)) & 1u) b.add_edge(i, j);
  if (bits % 6 != 0 && (byte(pos + payload - 1) & ((1u << (6 - bits % 6)) - 1)) != 0)
    throw ParseError("nonzero padding bits in graph6 record", pos + payload - 1);
  return b.build();
}

/// Encodes `g` as graph6 (no header, no newline).
inline std::string write_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0 || n > kGraph6MaxOrder) throw CapacityError("graph order " + std::to_string(n) + " cannot be encoded as graph6");
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else {
    out += static_cast<char>(126);
    out += static_cast<char>(((n >> 12) & 63) + 63);
    out += static_cast<char>(((n >> 6) & 63) + 63);
    out += static_cast<char>((n & 63) + 63);
  }
  unsigned acc = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1u : 0u);
      if (++filled == 6) {
        out += static_cast<char>(acc + 63);
        acc = 0;
        filled = 0;
      }
    }
  if (filled > 0) out += static_cast<char>((acc << (6 - filled)) + 63);
  return out;
}

/// Parses "u v" lines (0-based vertices). Blank lines and '#' comments are
/// skipped. A first line holding a single integer fixes the order; otherwise
/// the order is one more than the largest vertex mentioned.
inline Graph parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  std::optional<std::size_t> order;
  bool first_data_line = true;
  std::size_t offset = 0;
  while (offset <= text.size()) {
    std::size_t end = text.find('\n', offset);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(offset, end - offset);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<std::pair<std::size_t, std::size_t>> numbers;  // (value, offset)
    for (std::size_t i = 0; i < line.size();) {
      const char c = line[i];
      if (c == ' ' || c == '\t' || c == '\r' || c == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("unexpected character in edge list", offset + i);
      const std::size_t start = i;
      std::size_t v = 0;
      while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) {
        v = v * 10 + static_cast<std::size_t>(line[i] - '0');
        if (v > kMaxOrder) throw CapacityError("vertex number in edge list exceeds the supported maximum order");
        ++i;
      }
      numbers.emplace_back(v, offset + start);
    }
    if (!numbers.empty()) {
      if (first_data_line && numbers.size() == 1) {
        if (numbers[0].first == 0) throw ParseError("edge list order must be positive", numbers[0].second);
        order = numbers[0].first;
      } else if (numbers.size() == 2) {
        const auto [u, pu] = numbers[0];
        const auto [v, pv] = numbers[1];
        if (u == v) throw ParseError("self-loop " + std::to_string(u) + " " + std::to_string(v), pu);
        if (order && u >= *order) throw ParseError("vertex " + std::to_string(u) + " out of range", pu);
        if (order && v >= *order) throw ParseError("vertex " + std::to_string(v) + " out of range", pv);
        edges.push_back({u, v});
      } else {
        throw ParseError("edge list line must hold exactly two vertices", numbers[0].second);
      }
      first_data_line = false;
    }
    offset = end + 1;
  }
  std::size_t n = order.value_or(0);
  if (!order)
    for (const auto& e : edges) n = std::max({n, e.u + 1, e.v + 1});
  if (n == 0) throw ParseError("edge list defines no vertices", 0);
  GraphBuilder b(n);
  for (const auto& e : edges) b.add_edge(e.u, e.v);
  return b.build();
}

/// Order on the first line, then one "u v" line per edge.
inline std::string write_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (const auto& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

/// Reads graphs from text: an edge list when the first meaningful line starts
/// with a digit (digits never occur in graph6), otherwise one graph6 record
/// per non-empty line.
inline std::vector<Graph> read_graphs(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    } else if (text[i] == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else {
      break;
    }
  }
  if (i == text.size()) throw ParseError("no graph in input", i);
  if (std::isdigit(static_cast<unsigned char>(text[i]))) return {parse_edge_list(text)};
  std::vector<Graph> out;
  std::size_t offset = 0;
  std::size_t line_no = 0;
  while (offset < text.size()) {
    ++line_no;
    std::size_t end = text.find('\n', offset);
    if (end == std::string::npos) end = text.size();
    std::string_view line(text.data() + offset, end - offset);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line == kGraph6Header) line = {};
    if (!line.empty() && line.front() != '#') {
      try {
        out.push_back(parse_graph6(line));
      } catch (const ParseError& e) {
        throw ParseError("graph6 line " + std::to_string(line_no) + ": " + e.message(), offset + e.position());
      }
    }
    offset = end + 1;
  }
  return out;
}

}  // namespace spectral

#endif  // SPECTRAL_IO_HPP
