#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace netcomm {

/// Seedable generator with a fixed, platform-independent output stream.
/// The engine is std::mt19937_64 (whose sequence the standard pins down);
/// integer and real draws are derived from the raw 64-bit words here instead
/// of through std:: distributions, whose algorithms are implementation
/// defined.
class Rng {
 public:
  static constexpr std::string_view kAlgorithm = "mt19937_64";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound). `bound` must be positive.
  std::uint64_t uniform_index(std::uint64_t bound);

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace netcomm
