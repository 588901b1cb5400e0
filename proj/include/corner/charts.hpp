#pragma once

#include <utility>
#include <vector>

namespace corner {

inline constexpr double kOctantTol = 1e-12;      // pointwise invariants
inline constexpr double kCompositeTol = 1e-10;   // composed-map identities

double norm2(const std::vector<double>& v);
std::vector<double> scaled(const std::vector<double>& v, double s);
std::vector<double> normalized(const std::vector<double>& v);
double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b);

/// Unit vector in the sphere octant S^{n-1}_k: first k coordinates >= 0.
class OctantPoint {
 public:
  /// Normalizes and validates; throws std::invalid_argument on violation.
  OctantPoint(int k, std::vector<double> coords);

  int k() const { return k_; }
  int ambient() const { return static_cast<int>(coords_.size()); }
  const std::vector<double>& coords() const { return coords_; }
  double operator[](int i) const { return coords_[i]; }

 private:
  int k_;
  std::vector<double> coords_;
};

/// Point of the sphere S^{n,n'}_{k,k'} sitting inside R^n_k x R^{n'+1}_{k'}:
/// unit vector of length n+n'+1, nonnegative in the first k slots and in the
/// k' slots right after position n.
class MixedOctantPoint {
 public:
  MixedOctantPoint(int n, int k, int n_prime, int k_prime, std::vector<double> coords);

  int n() const { return n_; }
  int k() const { return k_; }
  int n_prime() const { return n_prime_; }
  int k_prime() const { return k_prime_; }
  const std::vector<double>& coords() const { return coords_; }

  std::vector<double> head() const;  // first n coordinates (eta)
  std::vector<double> tail() const;  // last n'+1 coordinates (mu)

  /// Explicit coordinate shuffle onto the first-components octant S^{n+n'}_{k+k'}.
  OctantPoint to_octant() const;

 private:
  int n_, k_, n_prime_, k_prime_;
  std::vector<double> coords_;
};

/// The canonical permutation R^n_k x R^{n'}_{k'} -> R^{n+n'}_{k+k'} moving
/// both nonnegative blocks to the front. Kept as an explicit object so the
/// shuffle is never applied implicitly.
class CanPermutation {
 public:
  CanPermutation(int n, int k, int n_prime, int k_prime);

  std::vector<double> apply(const std::vector<double>& xy) const;
  std::vector<double> unapply(const std::vector<double>& z) const;

 private:
  std::vector<int> forward_;  // forward_[target] = source index
};

/// The local model L_I = {x in R^n_k : x_i = 0 for i in I} with 1-based I.
class ModelSubmanifold {
 public:
  ModelSubmanifold(int n, int k, std::vector<int> index_set);

  int n() const { return n_; }
  int k() const { return k_; }
  const std::vector<int>& index_set() const { return index_set_; }

  /// Codimension zero, i.e. no defining equations.
  bool is_trivial() const { return index_set_.empty(); }

 private:
  int n_, k_;
  std::vector<int> index_set_;
};

struct BoundaryDepth {
  int b;  // vanishing coordinates among the corner block
  int c;  // codimension
  int d;  // dimension
};

BoundaryDepth boundary_depth(const ModelSubmanifold& m);

/// The reordering that presents L_I as the first factor of
/// R^d_{k-b} x R^c_b, together with the signature of the blow-up model
/// R^d_{k-b} x S^{c-1}_b x [0,inf). Trivial centers are rejected: the normal
/// sphere over a codimension-zero center is empty.
struct BlowupLocalModel {
  int base_dim;       // d
  int base_corner;    // k - b
  int sphere_dim;     // c, the sphere factor is S^{c-1}
  int sphere_corner;  // b
  std::vector<int> tangent_indices;  // complement of I, 1-based, ascending
  std::vector<int> normal_indices;   // I, 1-based, ascending

  std::pair<std::vector<double>, std::vector<double>> split(const std::vector<double>& x) const;
  std::vector<double> merge(const std::vector<double>& tangent,
                            const std::vector<double>& normal) const;
};

BlowupLocalModel blowup_center_model(const ModelSubmanifold& m);

/// Point of the blown-up local model R^n_l x S^{n'-1}_{l'} x [0,inf).
struct LocalBlowupPoint {
  int l;                  // corner index of the base block
  std::vector<double> x;  // point of R^n_l
  OctantPoint xi;
  double r;

  LocalBlowupPoint(int l, std::vector<double> x, OctantPoint xi, double r);
};

/// Image value of kappa: either a face point (x, xi) at r = 0 or an interior
/// point (x, r xi) with the radial part folded in.
struct KappaImage {
  std::vector<double> x;
  std::vector<double> second;  // xi when boundary, r*xi otherwise
  bool boundary;
  int xi_k;  // octant index of the spherical factor, kept for inversion
};

KappaImage kappa(const std::vector<double>& x, const OctantPoint& xi, double r);
LocalBlowupPoint kappa_inverse(const KappaImage& img, int l);

/// beta(x, xi, r) = (x, r xi).
std::pair<std::vector<double>, std::vector<double>> blow_down(const LocalBlowupPoint& p);

/// Upsilon(phi, psi) = (psi_1 phi, psi~) for psi = (psi_1, psi~).
MixedOctantPoint upsilon(const OctantPoint& phi, const OctantPoint& psi);

struct PsiPair {
  OctantPoint phi;  // in S^{n-1}_k
  OctantPoint psi;  // in S^{n'+1}_{k'+1}
};

/// Psi(eta, mu) = (eta/|eta|, (|eta|, mu)). Throws std::domain_error when the
/// point lies on the blown-up center (|eta| below tolerance): boundary points
/// are only represented through r = 0 chart data, never by dividing.
PsiPair psi_map(const MixedOctantPoint& p);

/// zeta(x, y, t) = (x, t y): the comparison map from the two-step blow-up
/// model onto the one-step model S^{m-1}_{k_m} x R^{p+1}_{k_p+1}.
std::pair<OctantPoint, std::vector<double>> zeta(const OctantPoint& x, const OctantPoint& y,
                                                 double t);

/// Blow-down of the one-step model: (x, v) -> (v_1 x, v~).
std::pair<std::vector<double>, std::vector<double>> beta_one_step(
    const OctantPoint& x, const std::vector<double>& v);

/// Blow-down of the origin blow-up: (w, t) -> t w, split into the two blocks.
std::pair<std::vector<double>, std::vector<double>> beta_origin(const MixedOctantPoint& w,
                                                                double t);

/// (x, t y, Upsilon(x, y), t): the product of the two comparison maps.
struct BTuple {
  OctantPoint x;
  std::vector<double> z;
  MixedOctantPoint w;
  double t;
};

BTuple b_map(const OctantPoint& x, const OctantPoint& y, double t);

struct BDomainPoint {
  OctantPoint x;
  OctantPoint y;
  double t;
};

/// (x, z, (w1, w2), t) -> (x, (|w1|, w2), t); exact left inverse of b_map.
BDomainPoint b_left_inverse(const BTuple& tuple);

}  // namespace corner
