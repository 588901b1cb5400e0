#include "corner/sampling.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace corner {

std::int64_t Sampler::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("empty integer range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(next_u64() % span);
}

double Sampler::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Sampler::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  have_spare_ = true;
  return radius * std::cos(angle);
}

Rat Sampler::rational(int max_abs_num, int max_den) {
  const std::int64_t num = uniform_int(-max_abs_num, max_abs_num);
  const std::int64_t den = uniform_int(1, max_den);
  return Rat(num, den);
}

RatVec Sampler::rational_vec(int n, int max_abs_num, int max_den) {
  RatVec v(n);
  for (int i = 0; i < n; ++i) v[i] = rational(max_abs_num, max_den);
  return v;
}

RatVec Sampler::nonzero_rational_vec(int n, int max_abs_num, int max_den) {
  for (;;) {
    RatVec v = rational_vec(n, max_abs_num, max_den);
    if (!is_zero_vec(v)) return v;
  }
}

Subspace Sampler::subspace(int ambient, int dim) {
  if (dim < 0 || dim > ambient) throw std::invalid_argument("subspace dimension out of range");
  for (;;) {
    RatMat rows;
    for (int i = 0; i < dim; ++i) rows.push_back(rational_vec(ambient));
    Subspace s = Subspace::from_span(ambient, rows);
    if (s.dim() == dim) return s;
  }
}

std::vector<double> Sampler::unit_vector(int n) {
  for (;;) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = gaussian();
    if (norm2(v) > 1e-6) return normalized(v);
  }
}

OctantPoint Sampler::octant_point(int n, int k) {
  std::vector<double> v = unit_vector(n);
  for (int i = 0; i < k; ++i) v[i] = std::abs(v[i]);
  return OctantPoint(k, std::move(v));
}

MixedOctantPoint Sampler::mixed_octant_point(int n, int k, int n_prime, int k_prime) {
  std::vector<double> v = unit_vector(n + n_prime + 1);
  for (int i = 0; i < k; ++i) v[i] = std::abs(v[i]);
  for (int i = n; i < n + k_prime; ++i) v[i] = std::abs(v[i]);
  return MixedOctantPoint(n, k, n_prime, k_prime, std::move(v));
}

PolyCurve Sampler::curve(int ambient, int degree, int max_abs_num, int max_den) {
  if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
  RatMat coeffs;
  for (int i = 0; i < degree; ++i) coeffs.push_back(rational_vec(ambient, max_abs_num, max_den));
  if (degree == 0)
    coeffs.push_back(rational_vec(ambient, max_abs_num, max_den));
  else
    coeffs.push_back(nonzero_rational_vec(ambient, max_abs_num, max_den));
  return PolyCurve(std::move(coeffs));
}

}  // namespace corner
