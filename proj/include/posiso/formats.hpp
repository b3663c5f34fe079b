#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "posiso/graph.hpp"

namespace posiso {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Decodes a header-less graph6 string (surrounding whitespace tolerated).
Graph parse_graph6(std::string_view text);

/// Standard minimal graph6 encoding. Vertices are encoded in ascending id
/// order, so graphs with ids 0..n-1 round-trip exactly.
std::string emit_graph6(const Graph& g);

/// First line "n m", then m lines "u v".
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

enum class FileFormat { Graph6, EdgeList };

/// By extension: .g6 -> graph6, .edges/.txt -> edge list.
FileFormat format_from_path(const std::filesystem::path& path);
FileFormat format_from_flag(const std::string& flag, const std::filesystem::path& path);

Graph read_graph_file(const std::filesystem::path& path, FileFormat format);
void write_graph_file(const std::filesystem::path& path, const Graph& g, FileFormat format);

}  // namespace posiso
