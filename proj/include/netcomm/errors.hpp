#pragma once

#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace netcomm {

/// Malformed or inconsistent input data (files, generator specs, node ids).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An iterative kernel stopped before meeting its tolerance. Carries the last
/// iterate so callers can still inspect or report it.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, Eigen::VectorXd last_iterate,
                   double achieved)
      : std::runtime_error(what),
        last_iterate_(std::move(last_iterate)),
        achieved_(achieved) {}

  const Eigen::VectorXd& last_iterate() const { return last_iterate_; }
  double achieved() const { return achieved_; }

 private:
  Eigen::VectorXd last_iterate_;
  double achieved_;
};

}  // namespace netcomm
