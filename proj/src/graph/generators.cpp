#include "netcomm/generators.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "netcomm/random.hpp"

namespace netcomm {

Graph generate_pref(std::size_t n, std::size_t d, std::uint64_t seed) {
  if (d < 1) throw std::invalid_argument("pref: d must be at least 1");
  if (n <= d) {
    throw std::invalid_argument("pref: need n > d (got n=" + std::to_string(n) +
                                ", d=" + std::to_string(d) + ")");
  }
  Rng rng(seed);
  std::vector<Edge> edges;
  edges.reserve(d * (d + 1) / 2 + (n - d - 1) * d);
  // Each node id appears once per incident edge end, so a uniform pick from
  // this list is a degree-proportional pick of a node.
  std::vector<NodeId> endpoints;
  endpoints.reserve(2 * edges.capacity());

  for (NodeId i = 0; i <= d; ++i) {
    for (NodeId j = i + 1; j <= d; ++j) {
      edges.push_back({i, j});
      endpoints.push_back(i);
      endpoints.push_back(j);
    }
  }

  std::vector<NodeId> targets;
  targets.reserve(d);
  for (NodeId v = static_cast<NodeId>(d + 1); v < n; ++v) {
    // Degrees are frozen at the start of the insertion; targets are distinct.
    const std::size_t pool = endpoints.size();
    targets.clear();
    while (targets.size() < d) {
      const NodeId t = endpoints[rng.uniform_index(pool)];
      if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
    }
    for (NodeId t : targets) {
      edges.push_back({t, v});
      endpoints.push_back(t);
      endpoints.push_back(v);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph generate_smallw(std::size_t n, std::size_t d, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("smallw: p must lie in [0, 1] (got " + std::to_string(p) + ")");
  }
  if (d < 1) throw std::invalid_argument("smallw: d must be at least 1");
  if (n <= 2 * d) {
    throw std::invalid_argument("smallw: need n > 2d (got n=" + std::to_string(n) +
                                ", d=" + std::to_string(d) + ")");
  }
  Rng rng(seed);
  std::vector<Edge> edges;
  edges.reserve(n * d + static_cast<std::size_t>(p * static_cast<double>(n)) + 16);
  for (NodeId i = 0; i < n; ++i) {
    for (std::size_t k = 1; k <= d; ++k) {
      edges.push_back({i, static_cast<NodeId>((i + k) % n)});
    }
  }
  for (NodeId i = 0; i < n; ++i) {
    if (rng.uniform01() < p) {
      const auto j = static_cast<NodeId>(rng.uniform_index(n));
      if (j != i) edges.push_back({i, j});
    }
  }
  return Graph::from_edges(n, edges);
}

std::optional<ReferenceKind> parse_reference_kind(std::string_view name) {
  if (name == "complete") return ReferenceKind::complete;
  if (name == "star") return ReferenceKind::star;
  if (name == "path") return ReferenceKind::path;
  if (name == "cycle") return ReferenceKind::cycle;
  if (name == "ring" || name == "ring_lattice") return ReferenceKind::ring_lattice;
  if (name == "empty") return ReferenceKind::empty;
  return std::nullopt;
}

Graph generate_reference(ReferenceKind kind, std::size_t n, std::optional<std::size_t> radius) {
  std::vector<Edge> edges;
  const auto require = [&](bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what + " (got n=" + std::to_string(n) + ")");
  };
  switch (kind) {
    case ReferenceKind::empty:
      require(n >= 1, "empty graph needs n >= 1");
      break;
    case ReferenceKind::complete:
      require(n >= 2, "complete graph needs n >= 2");
      for (NodeId i = 0; i < n; ++i)
        for (NodeId j = i + 1; j < n; ++j) edges.push_back({i, j});
      break;
    case ReferenceKind::star:
      require(n >= 2, "star graph needs n >= 2");
      for (NodeId i = 1; i < n; ++i) edges.push_back({0, i});
      break;
    case ReferenceKind::path:
      require(n >= 2, "path graph needs n >= 2");
      for (NodeId i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
      break;
    case ReferenceKind::cycle:
      require(n >= 3, "cycle needs n >= 3");
      for (NodeId i = 0; i < n; ++i) edges.push_back({i, static_cast<NodeId>((i + 1) % n)});
      break;
    case ReferenceKind::ring_lattice: {
      const std::size_t d = radius.value_or(1);
      if (d < 1) throw std::invalid_argument("ring lattice radius must be at least 1");
      require(n > 2 * d, "ring lattice of radius " + std::to_string(d) + " needs n > " +
                             std::to_string(2 * d));
      for (NodeId i = 0; i < n; ++i)
        for (std::size_t k = 1; k <= d; ++k) edges.push_back({i, static_cast<NodeId>((i + k) % n)});
      break;
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace netcomm
