#include "netcomm/compare.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace netcomm {
namespace {

void require_same_nodes(const Ranking& x, const Ranking& y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("rankings cover different node sets (" + std::to_string(x.size()) +
                                " vs " + std::to_string(y.size()) + " nodes)");
  }
  std::vector<bool> seen_x(x.size(), false), seen_y(y.size(), false);
  for (std::size_t j = 0; j < x.size(); ++j) {
    const NodeId a = x.order[j], b = y.order[j];
    if (a >= x.size() || b >= y.size() || seen_x[a] || seen_y[b]) {
      throw std::invalid_argument("ranking is not a permutation of the node set");
    }
    seen_x[a] = seen_y[b] = true;
  }
}

double pearson(std::span<const NodeId> a, std::span<const NodeId> b) {
  const std::size_t k = a.size();
  double mean_a = 0.0, mean_b = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    mean_a += a[i];
    mean_b += b[i];
  }
  mean_a /= static_cast<double>(k);
  mean_b /= static_cast<double>(k);
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    const double da = a[i] - mean_a, db = b[i] - mean_b;
    sab += da * db;
    saa += da * da;
    sbb += db * db;
  }
  return sab / std::sqrt(saa * sbb);
}

// isim_1 .. isim_k. Both orders are permutations, so each step adds one node
// to each prefix and |X_i symdiff Y_i| = 2 (i - |X_i intersect Y_i|).
std::vector<double> isim_prefix(const Ranking& x, const Ranking& y, std::size_t k) {
  std::vector<char> in_x(x.size(), 0), in_y(y.size(), 0);
  std::vector<double> out(k);
  std::size_t common = 0;
  double running = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    const NodeId a = x.order[i], b = y.order[i];
    in_x[a] = 1;
    in_y[b] = 1;
    if (a == b) {
      ++common;
    } else {
      common += static_cast<std::size_t>(in_y[a]) + static_cast<std::size_t>(in_x[b]);
    }
    const double prefix = static_cast<double>(i + 1);
    running += (prefix - static_cast<double>(common)) / prefix;
    out[i] = running / prefix;
  }
  return out;
}

}  // namespace

std::vector<double> intersection_curve(const Ranking& x, const Ranking& y) {
  require_same_nodes(x, y);
  return isim_prefix(x, y, x.size());
}

double intersection_distance(const Ranking& x, const Ranking& y, std::size_t k) {
  require_same_nodes(x, y);
  if (k < 1 || k > x.size()) {
    throw std::invalid_argument("isim cutoff k=" + std::to_string(k) + " outside [1, " +
                                std::to_string(x.size()) + "]");
  }
  return isim_prefix(x, y, k).back();
}

double rank_correlation(const Ranking& x, const Ranking& y) {
  require_same_nodes(x, y);
  if (x.size() < 2) throw std::invalid_argument("rank correlation needs at least 2 nodes");
  return pearson(x.order, y.order);
}

std::optional<double> top_k_correlation(const Ranking& x, const Ranking& y, std::size_t k) {
  require_same_nodes(x, y);
  if (k < 1 || k > x.size()) {
    throw std::invalid_argument("top-k cutoff k=" + std::to_string(k) + " outside [1, " +
                                std::to_string(x.size()) + "]");
  }
  std::vector<NodeId> a(x.order.begin(), x.order.begin() + static_cast<std::ptrdiff_t>(k));
  std::vector<NodeId> b(y.order.begin(), y.order.begin() + static_cast<std::ptrdiff_t>(k));
  std::vector<NodeId> sa = a, sb = b;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return std::nullopt;
  if (k == 1) return 1.0;
  return pearson(a, b);
}

std::size_t top_count(std::size_t n, double percent) {
  if (!(percent > 0.0 && percent <= 100.0)) {
    throw std::invalid_argument("top percentage must lie in (0, 100]");
  }
  const auto k = static_cast<std::size_t>(std::floor(percent * static_cast<double>(n) / 100.0 + 1e-9));
  return std::clamp<std::size_t>(k, 1, std::max<std::size_t>(n, 1));
}

std::optional<double> top_percent_correlation(const Ranking& x, const Ranking& y, double percent) {
  return top_k_correlation(x, y, top_count(x.size(), percent));
}

RankComparison compare_rankings(const Ranking& x, const Ranking& y, const CompareOptions& opts) {
  require_same_nodes(x, y);
  RankComparison out;
  out.n = x.size();
  const std::vector<double> curve = intersection_curve(x, y);
  out.cc_full = rank_correlation(x, y);
  out.isim_full = curve.back();
  for (double p : opts.percents) {
    const std::size_t k = top_count(out.n, p);
    out.cc_top[p] = top_k_correlation(x, y, k);
    out.isim_top[p] = curve[k - 1];
  }
  for (std::size_t k : opts.explicit_k) {
    out.cc_at_k[k] = top_k_correlation(x, y, k);
    out.isim_at_k[k] = intersection_distance(x, y, k);
  }
  if (opts.with_curve) out.isim_curve = curve;
  return out;
}

}  // namespace netcomm
