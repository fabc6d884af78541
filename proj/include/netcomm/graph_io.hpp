#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>

#include "netcomm/graph.hpp"

namespace netcomm {

enum class IndexBase : int { zero = 0, one = 1 };

/// Reads a Matrix Market coordinate file ("pattern", "real" or "integer";
/// "symmetric" or "general"). Values are discarded, the pattern is
/// symmetrized and deduplicated. A general file must already have a
/// symmetric pattern. Throws InputError naming the offending line.
Graph load_matrix_market(std::istream& in);

/// Reads whitespace separated "u v" pairs, one per line. Blank lines and
/// lines starting with '#' or '%' are skipped. Without `num_nodes` the node
/// count is one past the largest id seen.
Graph load_edge_list(std::istream& in, IndexBase base,
                     std::optional<std::size_t> num_nodes = std::nullopt);

/// Canonical dump: one "u v" line per edge, 0-based, u <= v, sorted.
void write_edge_list(std::ostream& out, const Graph& g);

struct LoadedGraph {
  Graph graph;
  /// Base used by the source file; output node ids are converted back to it.
  IndexBase base = IndexBase::zero;
};

/// Opens `path` and dispatches on content: a "%%MatrixMarket" banner selects
/// the Matrix Market reader (1-based), anything else the edge-list reader.
LoadedGraph load_graph_file(const std::filesystem::path& path,
                            IndexBase edge_list_base = IndexBase::zero);

}  // namespace netcomm
