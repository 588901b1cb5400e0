#include "corner/charts.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace corner {

double norm2(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

std::vector<double> scaled(const std::vector<double>& v, double s) {
  std::vector<double> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] * s;
  return out;
}

std::vector<double> normalized(const std::vector<double>& v) {
  const double n = norm2(v);
  if (n == 0.0) throw std::invalid_argument("cannot normalize the zero vector");
  return scaled(v, 1.0 / n);
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  double m = 0.0;
  for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

OctantPoint::OctantPoint(int k, std::vector<double> coords) : k_(k), coords_(std::move(coords)) {
  if (k_ < 0 || k_ > static_cast<int>(coords_.size()))
    throw std::invalid_argument("octant index out of range");
  const double n = norm2(coords_);
  if (n == 0.0) throw std::invalid_argument("octant point cannot be zero");
  if (std::abs(n - 1.0) > kOctantTol)
    for (auto& c : coords_) c /= n;
  for (int i = 0; i < k_; ++i)
    if (coords_[i] < -kOctantTol)
      throw std::invalid_argument("octant point has a negative corner coordinate");
}

MixedOctantPoint::MixedOctantPoint(int n, int k, int n_prime, int k_prime,
                                   std::vector<double> coords)
    : n_(n), k_(k), n_prime_(n_prime), k_prime_(k_prime), coords_(std::move(coords)) {
  if (n_ < 0 || n_prime_ < 0 || k_ < 0 || k_ > n_ || k_prime_ < 0 || k_prime_ > n_prime_ + 1)
    throw std::invalid_argument("invalid split octant signature");
  if (static_cast<int>(coords_.size()) != n_ + n_prime_ + 1)
    throw std::invalid_argument("split octant point has wrong length");
  const double nn = norm2(coords_);
  if (nn == 0.0) throw std::invalid_argument("split octant point cannot be zero");
  if (std::abs(nn - 1.0) > kOctantTol)
    for (auto& c : coords_) c /= nn;
  for (int i = 0; i < k_; ++i)
    if (coords_[i] < -kOctantTol)
      throw std::invalid_argument("split octant point has a negative corner coordinate");
  for (int i = n_; i < n_ + k_prime_; ++i)
    if (coords_[i] < -kOctantTol)
      throw std::invalid_argument("split octant point has a negative corner coordinate");
}

std::vector<double> MixedOctantPoint::head() const {
  return {coords_.begin(), coords_.begin() + n_};
}

std::vector<double> MixedOctantPoint::tail() const {
  return {coords_.begin() + n_, coords_.end()};
}

OctantPoint MixedOctantPoint::to_octant() const {
  CanPermutation can(n_, k_, n_prime_ + 1, k_prime_);
  return OctantPoint(k_ + k_prime_, can.apply(coords_));
}

CanPermutation::CanPermutation(int n, int k, int n_prime, int k_prime) {
  if (k < 0 || k > n || k_prime < 0 || k_prime > n_prime)
    throw std::invalid_argument("invalid permutation signature");
  forward_.reserve(n + n_prime);
  for (int i = 0; i < k; ++i) forward_.push_back(i);
  for (int i = 0; i < k_prime; ++i) forward_.push_back(n + i);
  for (int i = k; i < n; ++i) forward_.push_back(i);
  for (int i = k_prime; i < n_prime; ++i) forward_.push_back(n + i);
}

std::vector<double> CanPermutation::apply(const std::vector<double>& xy) const {
  if (xy.size() != forward_.size()) throw std::invalid_argument("permutation length mismatch");
  std::vector<double> out(xy.size());
  for (size_t t = 0; t < forward_.size(); ++t) out[t] = xy[forward_[t]];
  return out;
}

std::vector<double> CanPermutation::unapply(const std::vector<double>& z) const {
  if (z.size() != forward_.size()) throw std::invalid_argument("permutation length mismatch");
  std::vector<double> out(z.size());
  for (size_t t = 0; t < forward_.size(); ++t) out[forward_[t]] = z[t];
  return out;
}

ModelSubmanifold::ModelSubmanifold(int n, int k, std::vector<int> index_set)
    : n_(n), k_(k), index_set_(std::move(index_set)) {
  if (n_ < 0 || k_ < 0 || k_ > n_) throw std::invalid_argument("invalid local model");
  std::sort(index_set_.begin(), index_set_.end());
  index_set_.erase(std::unique(index_set_.begin(), index_set_.end()), index_set_.end());
  for (int i : index_set_)
    if (i < 1 || i > n_) throw std::invalid_argument("index set out of range");
}

BoundaryDepth boundary_depth(const ModelSubmanifold& m) {
  int b = 0;
  for (int i : m.index_set())
    if (i <= m.k()) ++b;
  const int c = static_cast<int>(m.index_set().size());
  return {b, c, m.n() - c};
}

std::pair<std::vector<double>, std::vector<double>> BlowupLocalModel::split(
    const std::vector<double>& x) const {
  if (static_cast<int>(x.size()) != base_dim + sphere_dim)
    throw std::invalid_argument("point length does not match the local model");
  std::vector<double> tangent, normal;
  tangent.reserve(tangent_indices.size());
  normal.reserve(normal_indices.size());
  for (int i : tangent_indices) tangent.push_back(x[i - 1]);
  for (int i : normal_indices) normal.push_back(x[i - 1]);
  return {std::move(tangent), std::move(normal)};
}

std::vector<double> BlowupLocalModel::merge(const std::vector<double>& tangent,
                                            const std::vector<double>& normal) const {
  if (static_cast<int>(tangent.size()) != base_dim ||
      static_cast<int>(normal.size()) != sphere_dim)
    throw std::invalid_argument("block lengths do not match the local model");
  std::vector<double> x(tangent.size() + normal.size());
  for (size_t i = 0; i < tangent_indices.size(); ++i) x[tangent_indices[i] - 1] = tangent[i];
  for (size_t i = 0; i < normal_indices.size(); ++i) x[normal_indices[i] - 1] = normal[i];
  return x;
}

BlowupLocalModel blowup_center_model(const ModelSubmanifold& m) {
  if (m.is_trivial())
    throw std::invalid_argument("trivial center: the normal sphere would be empty");
  const BoundaryDepth depth = boundary_depth(m);
  BlowupLocalModel model;
  model.base_dim = depth.d;
  model.base_corner = m.k() - depth.b;
  model.sphere_dim = depth.c;
  model.sphere_corner = depth.b;
  model.normal_indices = m.index_set();
  std::vector<bool> in_center(m.n() + 1, false);
  for (int i : m.index_set()) in_center[i] = true;
  // corner coordinates first so the base block is a genuine R^d_{k-b}
  for (int i = 1; i <= m.n(); ++i)
    if (!in_center[i] && i <= m.k()) model.tangent_indices.push_back(i);
  for (int i = 1; i <= m.n(); ++i)
    if (!in_center[i] && i > m.k()) model.tangent_indices.push_back(i);
  // same for the normal block: corner normals lead, so the sphere is S^{c-1}_b
  std::vector<int> reordered;
  for (int i : model.normal_indices)
    if (i <= m.k()) reordered.push_back(i);
  for (int i : model.normal_indices)
    if (i > m.k()) reordered.push_back(i);
  model.normal_indices = std::move(reordered);
  return model;
}

LocalBlowupPoint::LocalBlowupPoint(int l, std::vector<double> x_in, OctantPoint xi_in, double r_in)
    : l(l), x(std::move(x_in)), xi(std::move(xi_in)), r(r_in) {
  if (l < 0 || l > static_cast<int>(x.size()))
    throw std::invalid_argument("corner index out of range");
  for (int i = 0; i < l; ++i)
    if (x[i] < -kOctantTol)
      throw std::invalid_argument("base point has a negative corner coordinate");
  if (r < 0.0) throw std::invalid_argument("radial coordinate must be nonnegative");
}

KappaImage kappa(const std::vector<double>& x, const OctantPoint& xi, double r) {
  if (r < 0.0) throw std::invalid_argument("radial coordinate must be nonnegative");
  if (r == 0.0) return {x, xi.coords(), true, xi.k()};
  return {x, scaled(xi.coords(), r), false, xi.k()};
}

LocalBlowupPoint kappa_inverse(const KappaImage& img, int l) {
  if (img.boundary) return LocalBlowupPoint(l, img.x, OctantPoint(img.xi_k, img.second), 0.0);
  const double r = norm2(img.second);
  if (r == 0.0) throw std::invalid_argument("interior image cannot vanish");
  return LocalBlowupPoint(l, img.x, OctantPoint(img.xi_k, scaled(img.second, 1.0 / r)), r);
}

std::pair<std::vector<double>, std::vector<double>> blow_down(const LocalBlowupPoint& p) {
  return {p.x, scaled(p.xi.coords(), p.r)};
}

MixedOctantPoint upsilon(const OctantPoint& phi, const OctantPoint& psi) {
  if (psi.k() < 1)
    throw std::invalid_argument("second factor must have its radial slot in the corner block");
  if (psi.ambient() < 2) throw std::invalid_argument("second factor is too short");
  const int n = phi.ambient();
  const int k = phi.k();
  const int n_prime = psi.ambient() - 2;
  const int k_prime = psi.k() - 1;
  const double psi1 = psi[0];
  std::vector<double> out;
  out.reserve(n + n_prime + 1);
  for (int i = 0; i < n; ++i) out.push_back(psi1 * phi[i]);
  for (int i = 1; i < psi.ambient(); ++i) out.push_back(psi[i]);
  return MixedOctantPoint(n, k, n_prime, k_prime, std::move(out));
}

PsiPair psi_map(const MixedOctantPoint& p) {
  std::vector<double> eta = p.head();
  std::vector<double> mu = p.tail();
  const double r = norm2(eta);
  if (r <= kOctantTol)
    throw std::domain_error("point lies on the blow-up center; use r = 0 chart data");
  std::vector<double> psi;
  psi.reserve(mu.size() + 1);
  psi.push_back(r);
  psi.insert(psi.end(), mu.begin(), mu.end());
  return {OctantPoint(p.k(), scaled(eta, 1.0 / r)),
          OctantPoint(p.k_prime() + 1, std::move(psi))};
}

std::pair<OctantPoint, std::vector<double>> zeta(const OctantPoint& x, const OctantPoint& y,
                                                 double t) {
  if (t < 0.0) throw std::invalid_argument("scaling parameter must be nonnegative");
  if (y.k() < 1)
    throw std::invalid_argument("second factor must have its radial slot in the corner block");
  return {x, scaled(y.coords(), t)};
}

std::pair<std::vector<double>, std::vector<double>> beta_one_step(
    const OctantPoint& x, const std::vector<double>& v) {
  if (v.empty()) throw std::invalid_argument("model vector is too short");
  return {scaled(x.coords(), v[0]), {v.begin() + 1, v.end()}};
}

std::pair<std::vector<double>, std::vector<double>> beta_origin(const MixedOctantPoint& w,
                                                                double t) {
  std::vector<double> all = scaled(w.coords(), t);
  return {{all.begin(), all.begin() + w.n()}, {all.begin() + w.n(), all.end()}};
}

BTuple b_map(const OctantPoint& x, const OctantPoint& y, double t) {
  auto [zx, z] = zeta(x, y, t);
  return {zx, std::move(z), upsilon(x, y), t};
}

BDomainPoint b_left_inverse(const BTuple& tuple) {
  const MixedOctantPoint& w = tuple.w;
  std::vector<double> w1(w.coords().begin(), w.coords().begin() + w.n());
  std::vector<double> y;
  y.reserve(w.n_prime() + 2);
  y.push_back(norm2(w1));
  y.insert(y.end(), w.coords().begin() + w.n(), w.coords().end());
  return {tuple.x, OctantPoint(w.k_prime() + 1, std::move(y)), tuple.t};
}

}  // namespace corner
