#include "corner/compactify.hpp"

#include <cmath>
#include <stdexcept>

namespace corner {

namespace {

/// Gram-Schmidt rows, in order; assumes exact-rank input (rows of a rational
/// RREF basis), so degenerate pivots cannot occur.
std::vector<std::vector<double>> orthonormal_rows(const RatMat& rows) {
  std::vector<std::vector<double>> out;
  for (const auto& row : rows) {
    std::vector<double> v = to_doubles(row);
    for (const auto& u : out) {
      double dot = 0.0;
      for (size_t i = 0; i < v.size(); ++i) dot += v[i] * u[i];
      for (size_t i = 0; i < v.size(); ++i) v[i] -= dot * u[i];
    }
    out.push_back(normalized(v));
  }
  return out;
}

std::vector<double> mat_apply(const std::vector<std::vector<double>>& m,
                              const std::vector<double>& v) {
  std::vector<double> out(m.size(), 0.0);
  for (size_t i = 0; i < m.size(); ++i) {
    double acc = 0.0;
    for (size_t j = 0; j < v.size(); ++j) acc += m[i][j] * v[j];
    out[i] = acc;
  }
  return out;
}

}  // namespace

RadialPoint RadialPoint::interior(std::vector<double> x) {
  return RadialPoint(Kind::kInterior, std::move(x));
}

RadialPoint RadialPoint::direction(std::vector<double> v) {
  return RadialPoint(Kind::kDirection, normalized(v));
}

bool radial_equal(const RadialPoint& a, const RadialPoint& b, double tol) {
  if (a.kind() != b.kind() || a.ambient() != b.ambient()) return false;
  double s = 0.0;
  for (int i = 0; i < a.ambient(); ++i) {
    const double d = a.vec()[i] - b.vec()[i];
    s += d * d;
  }
  return std::sqrt(s) <= tol;
}

OctantPoint theta(const RadialPoint& p) {
  std::vector<double> coords;
  coords.reserve(p.ambient() + 1);
  if (p.is_interior()) {
    double s = 1.0;
    for (double x : p.vec()) s += x * x;
    const double inv = 1.0 / std::sqrt(s);
    coords.push_back(inv);
    for (double x : p.vec()) coords.push_back(inv * x);
  } else {
    coords.push_back(0.0);
    coords.insert(coords.end(), p.vec().begin(), p.vec().end());
  }
  return OctantPoint(1, std::move(coords));
}

RadialPoint theta_inverse(const OctantPoint& q) {
  if (q.k() < 1) throw std::invalid_argument("expected a point of the half-sphere S^n_1");
  const double y0 = q[0];
  std::vector<double> rest(q.coords().begin() + 1, q.coords().end());
  if (y0 > kThetaSplitTol) {
    for (auto& x : rest) x /= y0;
    return RadialPoint::interior(std::move(rest));
  }
  return RadialPoint::direction(std::move(rest));
}

double radial_distance(const RadialPoint& a, const RadialPoint& b) {
  if (a.ambient() != b.ambient())
    throw std::invalid_argument("radial points have different ambients");
  const OctantPoint qa = theta(a);
  const OctantPoint qb = theta(b);
  double s = 0.0;
  for (int i = 0; i < qa.ambient(); ++i) {
    const double d = qa[i] - qb[i];
    s += d * d;
  }
  return std::sqrt(s);
}

RadialPoint apply_linear(const std::vector<std::vector<double>>& g, const RadialPoint& p) {
  std::vector<double> image = mat_apply(g, p.vec());
  if (p.is_interior()) return RadialPoint::interior(std::move(image));
  return RadialPoint::direction(std::move(image));
}

std::optional<RadialPoint> push_quotient(const RadialPoint& p, const QuotientMap& q) {
  std::vector<double> image = q.apply(p.vec());
  if (p.is_interior()) return RadialPoint::interior(std::move(image));
  if (norm2(image) <= kThetaSplitTol) return std::nullopt;
  return RadialPoint::direction(std::move(image));
}

std::optional<RadialPoint> push_quotient_via_charts(const RadialPoint& p, const QuotientMap& q) {
  const int n = q.source_dim();
  const int target = q.target_dim();
  if (p.ambient() != n) throw std::invalid_argument("point/quotient ambient mismatch");

  // Orthonormal split adapted to the kernel: complement rows first.
  RatMat stacked = q.matrix();
  stacked.insert(stacked.end(), q.kernel().basis().begin(), q.kernel().basis().end());
  const auto frame = orthonormal_rows(stacked);
  const std::vector<std::vector<double>> perp(frame.begin(), frame.begin() + target);
  const std::vector<std::vector<double>> along(frame.begin() + target, frame.end());

  const OctantPoint embedded = theta(p);
  std::vector<double> rest(embedded.coords().begin() + 1, embedded.coords().end());

  std::vector<double> eta;
  eta.reserve(target + 1);
  eta.push_back(embedded[0]);
  for (const auto& row : perp) {
    double acc = 0.0;
    for (int i = 0; i < n; ++i) acc += row[i] * rest[i];
    eta.push_back(acc);
  }
  std::vector<double> mu = mat_apply(along, rest);

  std::optional<RadialPoint> in_frame;
  if (target == n) {
    in_frame = theta_inverse(OctantPoint(1, eta));  // trivial kernel, no center
  } else {
    std::vector<double> point = eta;
    point.insert(point.end(), mu.begin(), mu.end());
    MixedOctantPoint split(target + 1, 1, n - target - 1, 0, std::move(point));
    if (norm2(split.head()) <= kOctantTol) return std::nullopt;  // on the collapsed sphere
    in_frame = theta_inverse(psi_map(split).phi);
  }

  // Back from the orthonormal frame to quotient coordinates.
  std::vector<std::vector<double>> t(target, std::vector<double>(target, 0.0));
  for (int i = 0; i < target; ++i)
    for (int j = 0; j < target; ++j) {
      double acc = 0.0;
      for (int l = 0; l < n; ++l) acc += q.matrix_d()[i][l] * perp[j][l];
      t[i][j] = acc;
    }
  std::vector<double> value = mat_apply(t, in_frame->vec());
  if (in_frame->is_interior()) return RadialPoint::interior(std::move(value));
  return RadialPoint::direction(std::move(value));
}

PolyCurve::PolyCurve(RatMat coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("curve needs at least one coefficient");
  ambient_ = static_cast<int>(coeffs_[0].size());
  if (ambient_ == 0) throw std::invalid_argument("curve ambient dimension must be positive");
  for (const auto& c : coeffs_)
    if (static_cast<int>(c.size()) != ambient_)
      throw std::invalid_argument("curve coefficients have mixed ambient dimensions");
}

int PolyCurve::top_nonzero() const {
  for (int k = static_cast<int>(coeffs_.size()) - 1; k >= 0; --k)
    if (!is_zero_vec(coeffs_[k])) return k;
  return -1;
}

RatVec PolyCurve::eval(const Rat& t) const {
  RatVec out(ambient_, Rat(0));
  Rat power(1);
  for (const auto& c : coeffs_) {
    for (int i = 0; i < ambient_; ++i) out[i] += power * c[i];
    power *= t;
  }
  return out;
}

std::vector<double> PolyCurve::eval_double(double t) const {
  std::vector<double> out(ambient_, 0.0);
  double power = 1.0;
  for (const auto& c : coeffs_) {
    for (int i = 0; i < ambient_; ++i) out[i] += power * rat_to_double(c[i]);
    power *= t;
  }
  return out;
}

RadialPoint curve_limit(const PolyCurve& c) {
  const int top = c.top_nonzero();
  if (top <= 0) return RadialPoint::interior(to_doubles(c.coeffs()[0]));
  return RadialPoint::direction(to_doubles(c.coeffs()[top]));
}

ExactLimit curve_limit_exact(const PolyCurve& c) {
  const int top = c.top_nonzero();
  if (top <= 0) return {RadialPoint::Kind::kInterior, c.coeffs()[0]};
  return {RadialPoint::Kind::kDirection, ray_canonical(c.coeffs()[top])};
}

PolyCurve project_curve(const PolyCurve& c, const QuotientMap& q) {
  if (c.ambient() != q.source_dim())
    throw std::invalid_argument("curve/quotient ambient mismatch");
  RatMat out;
  out.reserve(c.coeffs().size());
  for (const auto& coeff : c.coeffs()) out.push_back(q.apply(coeff));
  return PolyCurve(std::move(out));
}

}  // namespace corner
