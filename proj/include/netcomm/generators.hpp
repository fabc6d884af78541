#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "netcomm/graph.hpp"

namespace netcomm {

/// Preferential attachment growth. Nodes 0..d form a clique; every later
/// node attaches to d distinct existing nodes chosen with probability
/// proportional to their current degree. Requires n > d >= 1.
Graph generate_pref(std::size_t n, std::size_t d, std::uint64_t seed);

/// Small-world ring: a ring lattice where every node links to its d nearest
/// neighbours on each side, then each node independently receives, with
/// probability p, one extra edge to a uniformly chosen node. Loops and
/// repeated edges are dropped. Requires n > 2d, d >= 1 and p in [0, 1].
Graph generate_smallw(std::size_t n, std::size_t d, double p,
                      std::uint64_t seed);

enum class ReferenceKind { complete, star, path, cycle, ring_lattice, empty };

std::optional<ReferenceKind> parse_reference_kind(std::string_view name);

/// Deterministic textbook graphs. The star's hub is node 0. `radius` is only
/// read for ring_lattice (default 1).
Graph generate_reference(ReferenceKind kind, std::size_t n,
                         std::optional<std::size_t> radius = std::nullopt);

}  // namespace netcomm
