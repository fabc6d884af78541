#pragma once

#include <Eigen/Core>

#include "netcomm/graph.hpp"
#include "netcomm/krylov.hpp"

namespace netcomm::detail {

/// beta below this counts as a breakdown of the Lanczos recurrence. Scaled
/// by the largest row length, an upper bound on ||A||_2.
double breakdown_threshold(const Graph& g);

/// Two passes of classical Gram-Schmidt against the columns of `basis`.
void orthogonalize(Vector& w, const Eigen::Ref<const Eigen::MatrixXd>& basis);

}  // namespace netcomm::detail
