#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "netcomm/graph.hpp"

namespace netcomm::cli {

/// "kind:key=value,..." as accepted by --generate, e.g. "pref:n=1000,d=2",
/// "smallw:n=5000,d=1,p=0.1", "ring:n=5000", "star:n=100".
struct GraphSpec {
  std::string kind;
  std::map<std::string, std::string> params;
  std::string text;

  static GraphSpec parse(const std::string& text);

  /// True for pref and smallw; the seed is ignored otherwise.
  bool is_random() const;
  Graph build(std::uint64_t seed) const;
};

}  // namespace netcomm::cli
