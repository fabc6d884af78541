#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace netcomm {

using NodeId = std::uint32_t;

struct Edge {
  NodeId u;
  NodeId v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable undirected, unweighted graph stored as a symmetric binary CSR
/// pattern. Column indices are sorted within each row; a self-loop (i,i) is
/// stored once as a diagonal entry.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an arbitrary edge multiset. Each pair is
  /// symmetrized and duplicates collapse to a single entry. Endpoints must be
  /// below `num_nodes`.
  static Graph from_edges(std::size_t num_nodes, std::span<const Edge> edges);

  std::size_t num_nodes() const { return row_offsets_.empty() ? 0 : row_offsets_.size() - 1; }
  /// Undirected edge count: off-diagonal entries / 2 plus loops.
  std::size_t num_edges() const { return num_edges_; }
  /// Stored entries of the adjacency matrix (the "nnz" of a symmetric file).
  std::size_t nnz() const { return col_indices_.size(); }
  std::size_t num_loops() const { return num_loops_; }
  bool has_loops() const { return num_loops_ > 0; }

  std::span<const NodeId> neighbors(NodeId i) const {
    return {col_indices_.data() + row_offsets_[i],
            col_indices_.data() + row_offsets_[i + 1]};
  }
  std::size_t row_length(NodeId i) const {
    return row_offsets_[i + 1] - row_offsets_[i];
  }
  bool has_edge(NodeId u, NodeId v) const;

  std::span<const std::size_t> row_offsets() const { return row_offsets_; }
  std::span<const NodeId> col_indices() const { return col_indices_; }

  /// Sorted (u <= v) edge list; loops appear as (u, u).
  std::vector<Edge> canonical_edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> row_offsets_{0};
  std::vector<NodeId> col_indices_;
  std::size_t num_edges_ = 0;
  std::size_t num_loops_ = 0;
};

struct DegreeSequence {
  std::vector<std::size_t> degrees;

  std::size_t min() const;
  std::size_t max() const;
  /// Node attaining the maximum degree (smallest id on ties).
  NodeId argmax() const;
  std::size_t sum() const;
  /// histogram[k] = number of nodes of degree k.
  std::vector<std::size_t> histogram() const;
};

/// Per-node degree; a loop counts once.
DegreeSequence degrees(const Graph& g);

}  // namespace netcomm
