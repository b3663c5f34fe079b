#include "posiso/formats.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

namespace posiso {

namespace {

constexpr int kG6Lo = 63;   // '?'
constexpr int kG6Hi = 126;  // '~'

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int g6_value(char c) {
  const int v = static_cast<unsigned char>(c);
  if (v < kG6Lo || v > kG6Hi)
    throw ParseError("graph6: character out of range (byte " + std::to_string(v) + ")");
  return v - kG6Lo;
}

std::size_t bit_bytes(long long n) {
  const long long bits = n * (n - 1) / 2;
  return static_cast<std::size_t>((bits + 5) / 6);
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw ParseError("graph6: empty input");

  std::size_t pos = 0;
  long long n;
  if (s[0] != '~') {
    n = g6_value(s[pos++]);
  } else {
    if (s.size() >= 2 && s[1] == '~')
      throw ParseError("graph6: length header beyond supported size");
    if (s.size() < 4) throw ParseError("graph6: malformed length header");
    n = 0;
    ++pos;
    for (int k = 0; k < 3; ++k) n = (n << 6) | g6_value(s[pos++]);
    if (n < 63) throw ParseError("graph6: non-minimal length header");
  }

  const std::size_t expected = bit_bytes(n);
  if (s.size() - pos < expected) throw ParseError("graph6: truncated edge bits");
  if (s.size() - pos > expected) throw ParseError("graph6: trailing characters");

  std::vector<Edge> edges;
  int bits_left = 0, current = 0;
  for (VertexId j = 1; j < n; ++j) {
    for (VertexId i = 0; i < j; ++i) {
      if (bits_left == 0) {
        current = g6_value(s[pos++]);
        bits_left = 6;
      }
      if (current & (1 << (bits_left - 1))) edges.emplace_back(i, j);
      --bits_left;
    }
  }
  if (bits_left > 0 && (current & ((1 << bits_left) - 1)) != 0)
    throw ParseError("graph6: nonzero trailing bits");
  return build_graph(static_cast<int>(n), edges);
}

std::string emit_graph6(const Graph& g) {
  const auto ids = g.vertex_ids();
  const long long n = static_cast<long long>(ids.size());
  if (n > 258047)
    throw std::invalid_argument("emit_graph6: graph too large for supported encodings");

  std::vector<VertexId> position(g.capacity(), -1);
  for (std::size_t i = 0; i < ids.size(); ++i) position[ids[i]] = static_cast<VertexId>(i);

  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(kG6Lo + n));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(kG6Lo + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(kG6Lo + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(kG6Lo + (n & 63)));
  }

  int bits_used = 0, current = 0;
  for (VertexId j = 1; j < n; ++j) {
    for (VertexId i = 0; i < j; ++i) {
      current <<= 1;
      if (g.has_edge(ids[i], ids[j])) current |= 1;
      if (++bits_used == 6) {
        out.push_back(static_cast<char>(kG6Lo + current));
        bits_used = 0;
        current = 0;
      }
    }
  }
  if (bits_used > 0)
    out.push_back(static_cast<char>(kG6Lo + (current << (6 - bits_used))));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  auto next_line = [&](bool required) -> bool {
    while (std::getline(in, line)) {
      if (!trim(line).empty()) return true;
    }
    if (required) throw ParseError("edge list: unexpected end of input");
    return false;
  };

  if (!next_line(false)) throw ParseError("edge list: empty input");
  std::istringstream header{line};
  long long n = -1, m = -1;
  std::string extra;
  if (!(header >> n >> m) || (header >> extra) || n < 0 || m < 0)
    throw ParseError("edge list: malformed header line '" + line + "'");

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long k = 0; k < m; ++k) {
    next_line(true);
    std::istringstream row{line};
    long long u = -1, v = -1;
    if (!(row >> u >> v) || (row >> extra))
      throw ParseError("edge list: malformed edge line '" + line + "'");
    edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
  }
  if (next_line(false)) throw ParseError("edge list: more lines than the declared edge count");
  try {
    return build_graph(static_cast<int>(n), edges);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("edge list: ") + e.what());
  }
}

std::string emit_edge_list(const Graph& g) {
  const auto ids = g.vertex_ids();
  std::vector<VertexId> position(g.capacity(), -1);
  for (std::size_t i = 0; i < ids.size(); ++i) position[ids[i]] = static_cast<VertexId>(i);

  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << position[u] << ' ' << position[v] << '\n';
  return out.str();
}

FileFormat format_from_path(const std::filesystem::path& path) {
  const std::string ext = path.extension().string();
  if (ext == ".g6") return FileFormat::Graph6;
  if (ext == ".edges" || ext == ".txt") return FileFormat::EdgeList;
  throw ParseError("cannot infer graph format from '" + path.string() +
                   "'; pass --format");
}

FileFormat format_from_flag(const std::string& flag, const std::filesystem::path& path) {
  if (flag == "g6") return FileFormat::Graph6;
  if (flag == "edges") return FileFormat::EdgeList;
  if (flag.empty() || flag == "auto") return format_from_path(path);
  throw ParseError("unknown format '" + flag + "' (expected g6 or edges)");
}

Graph read_graph_file(const std::filesystem::path& path, FileFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  return format == FileFormat::Graph6 ? parse_graph6(text) : parse_edge_list(text);
}

void write_graph_file(const std::filesystem::path& path, const Graph& g, FileFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << (format == FileFormat::Graph6 ? emit_graph6(g) : emit_edge_list(g)) << '\n';
}

}  // namespace posiso
