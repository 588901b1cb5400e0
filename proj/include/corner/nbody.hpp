#pragma once

#include "corner/semilattice.hpp"

#include <vector>

namespace corner {

/// Configuration-space parameters: N particles in R^d, ambient R^{N d}.
struct NBodySpec {
  int particles;       // N >= 2
  int space_dim;       // d >= 1
  int ambient_cap = 24;

  NBodySpec(int n, int d, int cap = 24);

  int ambient() const { return particles * space_dim; }
};

/// The collision-plane generators: N subspaces {x_j = 0} followed by the
/// N(N-1)/2 subspaces {x_i = x_j}, all of dimension (N-1)d.
std::vector<Subspace> generators(const NBodySpec& spec);

/// The semilattice generated by the collision planes (with {0}).
Semilattice nbody_semilattice(const NBodySpec& spec);

/// Block permutation matrix of sigma acting on particle labels:
/// (g x)_{sigma(i)} = x_i. sigma is 0-based with sigma[i] the image of i.
RatMat permutation_action(const NBodySpec& spec, const std::vector<int>& sigma);

/// Block-diagonal action of a single rational orthogonal d x d matrix on
/// every particle. Orthogonality is checked exactly.
RatMat ortho_diag_action(const NBodySpec& spec, const RatMat& g);

/// Exact check g^T g = 1 for a rational square matrix.
bool is_orthogonal_exact(const RatMat& g);

/// Numeric check g^T g = 1 within tol, for float group elements that only
/// ever act on the chart layer.
bool is_orthogonal(const std::vector<std::vector<double>>& g, double tol = 1e-12);

}  // namespace corner
