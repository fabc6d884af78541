#include "netcomm/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "netcomm/errors.hpp"

namespace netcomm {

Graph Graph::from_edges(std::size_t num_nodes, std::span<const Edge> edges) {
  std::vector<std::size_t> counts(num_nodes + 1, 0);
  for (const Edge& e : edges) {
    if (e.u >= num_nodes || e.v >= num_nodes) {
      throw InputError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                       ") references a node outside [0, " + std::to_string(num_nodes) + ")");
    }
    ++counts[e.u + 1];
    if (e.u != e.v) ++counts[e.v + 1];
  }
  std::partial_sum(counts.begin(), counts.end(), counts.begin());

  std::vector<NodeId> cols(counts.back());
  std::vector<std::size_t> fill(counts.begin(), counts.end() - 1);
  for (const Edge& e : edges) {
    cols[fill[e.u]++] = e.v;
    if (e.u != e.v) cols[fill[e.v]++] = e.u;
  }

  Graph g;
  g.row_offsets_.assign(num_nodes + 1, 0);
  g.col_indices_.reserve(cols.size());
  for (std::size_t i = 0; i < num_nodes; ++i) {
    auto first = cols.begin() + static_cast<std::ptrdiff_t>(counts[i]);
    auto last = cols.begin() + static_cast<std::ptrdiff_t>(counts[i + 1]);
    std::sort(first, last);
    last = std::unique(first, last);
    for (auto it = first; it != last; ++it) {
      if (*it == i) ++g.num_loops_;
      g.col_indices_.push_back(*it);
    }
    g.row_offsets_[i + 1] = g.col_indices_.size();
  }
  g.num_edges_ = (g.col_indices_.size() - g.num_loops_) / 2 + g.num_loops_;
  return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  auto row = neighbors(u);
  return std::binary_search(row.begin(), row.end(), v);
}

std::vector<Edge> Graph::canonical_edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (NodeId u = 0; u < num_nodes(); ++u) {
    for (NodeId v : neighbors(u)) {
      if (u <= v) out.push_back({u, v});
    }
  }
  return out;
}

std::size_t DegreeSequence::min() const {
  if (degrees.empty()) return 0;
  return *std::min_element(degrees.begin(), degrees.end());
}

std::size_t DegreeSequence::max() const {
  if (degrees.empty()) return 0;
  return *std::max_element(degrees.begin(), degrees.end());
}

NodeId DegreeSequence::argmax() const {
  if (degrees.empty()) throw std::logic_error("argmax of an empty degree sequence");
  return static_cast<NodeId>(std::max_element(degrees.begin(), degrees.end()) -
                             degrees.begin());
}

std::size_t DegreeSequence::sum() const {
  return std::accumulate(degrees.begin(), degrees.end(), std::size_t{0});
}

std::vector<std::size_t> DegreeSequence::histogram() const {
  std::vector<std::size_t> h(max() + 1, 0);
  for (std::size_t d : degrees) ++h[d];
  return h;
}

DegreeSequence degrees(const Graph& g) {
  DegreeSequence ds;
  ds.degrees.resize(g.num_nodes());
  for (NodeId i = 0; i < g.num_nodes(); ++i) ds.degrees[i] = g.row_length(i);
  return ds;
}

}  // namespace netcomm
