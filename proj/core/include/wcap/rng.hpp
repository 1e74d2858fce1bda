#pragma once

#include <cstdint>
#include <random>

namespace wcap {

/// Independent streams derived from one user seed.
enum class RngStream : std::uint64_t { Structure = 1, Costs = 2, Expansion = 3 };

std::uint64_t splitmix64(std::uint64_t& state) noexcept;

/// mt19937_64 with hand-rolled distributions, so sequences are identical
/// across standard libraries.
class Rng {
 public:
  Rng(std::uint64_t seed, RngStream stream);

  std::uint64_t next() { return engine_(); }
  /// Uniform in [lo, hi], unbiased.
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);
  /// Uniform in [0, 1) with 53 random bits.
  double unit();
  bool bernoulli(double p) { return unit() < p; }
  /// Knuth's multiplication method; fine for the small means used here.
  int poisson(double mean);

 private:
  std::mt19937_64 engine_;
};

}  // namespace wcap
