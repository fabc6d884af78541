#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "netcomm/centrality.hpp"

namespace netcomm {

/// isim_k(x, y) = (1/k) sum_{i<=k} |X_i symdiff Y_i| / (2i) over the top-i
/// prefix sets. 0 for identical rankings, 1 for disjoint prefixes.
double intersection_distance(const Ranking& x, const Ranking& y, std::size_t k);

/// isim_k for every k = 1..n in one pass.
std::vector<double> intersection_curve(const Ranking& x, const Ranking& y);

/// Pearson correlation of the two node lists taken in rank order (entry j is
/// the id of the node ranked j-th).
double rank_correlation(const Ranking& x, const Ranking& y);

/// Correlation restricted to the top k nodes. Empty when the two top-k node
/// sets differ (no common list to correlate). k = 1 with a shared top node
/// gives 1.
std::optional<double> top_k_correlation(const Ranking& x, const Ranking& y,
                                        std::size_t k);

/// Number of nodes in the "top p percent": floor(p n / 100), at least 1.
std::size_t top_count(std::size_t n, double percent);

std::optional<double> top_percent_correlation(const Ranking& x,
                                              const Ranking& y, double percent);

struct RankComparison {
  std::size_t n = 0;
  double cc_full = 0.0;
  double isim_full = 0.0;
  /// Keyed by percent.
  std::map<double, std::optional<double>> cc_top;
  std::map<double, double> isim_top;
  /// Keyed by explicit cutoff k.
  std::map<std::size_t, std::optional<double>> cc_at_k;
  std::map<std::size_t, double> isim_at_k;
  /// isim_k for k = 1..n when requested.
  std::vector<double> isim_curve;
};

struct CompareOptions {
  std::vector<double> percents{10.0, 1.0};
  std::vector<std::size_t> explicit_k;
  bool with_curve = false;
};

RankComparison compare_rankings(const Ranking& x, const Ranking& y,
                                const CompareOptions& opts = {});

}  // namespace netcomm
