#pragma once

#include "corner/charts.hpp"
#include "corner/compactify.hpp"
#include "corner/subspace.hpp"

#include <cstdint>
#include <random>

namespace corner {

/// Seeded generator with hand-rolled value mappings so the same seed yields
/// the same stream on every platform and standard library.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [lo, hi], inclusive.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  /// Uniform in [0, 1).
  double uniform();

  /// Standard normal via Box-Muller.
  double gaussian();

  Rat rational(int max_abs_num = 9, int max_den = 9);
  RatVec rational_vec(int n, int max_abs_num = 9, int max_den = 9);
  RatVec nonzero_rational_vec(int n, int max_abs_num = 9, int max_den = 9);

  /// Random subspace of the given dimension, canonicalized.
  Subspace subspace(int ambient, int dim);

  std::vector<double> unit_vector(int n);
  OctantPoint octant_point(int n, int k);
  MixedOctantPoint mixed_octant_point(int n, int k, int n_prime, int k_prime);

  /// Random polynomial path of the exact degree given (top coefficient
  /// forced nonzero when degree >= 1).
  PolyCurve curve(int ambient, int degree, int max_abs_num = 9, int max_den = 9);

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace corner
