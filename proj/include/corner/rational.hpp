#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace corner {

/// Exact rational scalar used throughout the combinatorial layer.
using Rat = boost::multiprecision::cpp_rational;
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

/// Canonical "p/q" form ("p" when the denominator is 1).
std::string rat_to_string(const Rat& r);

/// Accepts "p", "p/q" and plain decimal strings like "-0.25" (converted exactly).
/// Throws std::invalid_argument on anything else.
Rat rat_from_string(const std::string& s);

double rat_to_double(const Rat& r);

std::vector<double> to_doubles(const RatVec& v);

RatVec rat_mat_apply(const RatMat& m, const RatVec& v);

RatMat rat_mat_mul(const RatMat& a, const RatMat& b);

RatMat rat_identity(int n);

bool is_zero_vec(const RatVec& v);

/// Canonical rational representative of the ray through v: v scaled so the
/// largest absolute entry is 1. Requires v != 0.
RatVec ray_canonical(const RatVec& v);

}  // namespace corner
