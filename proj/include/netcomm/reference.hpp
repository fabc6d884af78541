#pragma once

// Brute-force oracles for tests. Deliberately naive: exact walk counting and
// truncated power series, no Krylov or eigen machinery.

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <Eigen/Core>

#include "netcomm/graph.hpp"

namespace netcomm::reference {

inline constexpr std::size_t kMaxNodes = 200;

using BigInt = boost::multiprecision::cpp_int;

/// counts[k][i][j] = number of walks of length k from i to j, i.e. (A^k)_ij.
struct WalkTable {
  std::size_t k_max = 0;
  std::vector<std::vector<std::vector<BigInt>>> counts;
};

WalkTable walk_table(const Graph& g, std::size_t k_max);

/// sum_{k=0}^{k_max} A^k / k!
Eigen::MatrixXd truncated_exp_series(const Graph& g, std::size_t k_max);

/// sum_{k=0}^{k_max} alpha^k A^k. Requires alpha * lambda1 < 1.
Eigen::MatrixXd truncated_resolvent_series(const Graph& g, double alpha,
                                           std::size_t k_max);

}  // namespace netcomm::reference
