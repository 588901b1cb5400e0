#pragma once

#include "corner/charts.hpp"
#include "corner/rational.hpp"
#include "corner/subspace.hpp"

#include <optional>
#include <vector>

namespace corner {

inline constexpr double kThetaSplitTol = 1e-12;   // interior/boundary split on y0
inline constexpr double kDirectionEqTol = 1e-9;   // equality of direction points

/// A point of the radial compactification: either a finite point or a
/// half-line direction. Directions are stored as unit vectors; v and -v are
/// distinct points.
class RadialPoint {
 public:
  enum class Kind { kInterior, kDirection };

  static RadialPoint interior(std::vector<double> x);
  static RadialPoint direction(std::vector<double> v);  // normalizes, v != 0

  Kind kind() const { return kind_; }
  bool is_interior() const { return kind_ == Kind::kInterior; }
  bool is_direction() const { return kind_ == Kind::kDirection; }
  const std::vector<double>& vec() const { return vec_; }
  int ambient() const { return static_cast<int>(vec_.size()); }

 private:
  RadialPoint(Kind kind, std::vector<double> vec) : kind_(kind), vec_(std::move(vec)) {}
  Kind kind_;
  std::vector<double> vec_;
};

bool radial_equal(const RadialPoint& a, const RadialPoint& b, double tol = kDirectionEqTol);

/// Central projection onto the half-sphere S^n_1: finite x to (1,x)/<x>,
/// a direction v to (0,v).
OctantPoint theta(const RadialPoint& p);

/// Inverse split on the first coordinate: y0 above tolerance gives the
/// finite point (y1..yn)/y0, otherwise the direction (y1..yn) normalized.
RadialPoint theta_inverse(const OctantPoint& q);

/// Octant-coordinate distance between two radial points of the same ambient.
double radial_distance(const RadialPoint& a, const RadialPoint& b);

/// g acting on the compactification: finite points map by g, directions by
/// normalize(g v).
RadialPoint apply_linear(const std::vector<std::vector<double>>& g, const RadialPoint& p);

/// The extension of the projection along a quotient map. Returns nullopt for
/// directions inside the collapsed subspace, where no continuous extension
/// exists and blow-up data is required instead.
std::optional<RadialPoint> push_quotient(const RadialPoint& p, const QuotientMap& q);

/// Same value computed through the chart sandwich: rotate by an orthonormal
/// split of the kernel, apply the sphere chart, project the first factor and
/// come back. Used as the independent route for the extension.
std::optional<RadialPoint> push_quotient_via_charts(const RadialPoint& p, const QuotientMap& q);

/// Polynomial path t -> sum t^k v_k with exact rational coefficients, lowest
/// degree first, so the dominant-term analysis is a decision rather than a
/// numeric guess.
class PolyCurve {
 public:
  explicit PolyCurve(RatMat coeffs);

  const RatMat& coeffs() const { return coeffs_; }
  int ambient() const { return ambient_; }
  int degree_bound() const { return static_cast<int>(coeffs_.size()) - 1; }

  /// Largest k with v_k != 0, or -1 for the zero curve.
  int top_nonzero() const;

  RatVec eval(const Rat& t) const;
  std::vector<double> eval_double(double t) const;

 private:
  RatMat coeffs_;
  int ambient_;
};

/// Limit of the curve at t -> infinity: the constant for constant curves,
/// otherwise the direction of the top coefficient.
RadialPoint curve_limit(const PolyCurve& c);

struct ExactLimit {
  RadialPoint::Kind kind;
  RatVec value;  // the constant itself, or the canonical ray representative
};

ExactLimit curve_limit_exact(const PolyCurve& c);

/// Coefficient-wise exact projection of the curve through a quotient map.
PolyCurve project_curve(const PolyCurve& c, const QuotientMap& q);

}  // namespace corner
