#include "corner/nbody.hpp"

#include <cmath>
#include <stdexcept>

namespace corner {

NBodySpec::NBodySpec(int n, int d, int cap) : particles(n), space_dim(d), ambient_cap(cap) {
  if (particles < 2) throw std::invalid_argument("need at least two particles");
  if (space_dim < 1) throw std::invalid_argument("space dimension must be positive");
  if (ambient() > ambient_cap)
    throw std::invalid_argument("configuration space exceeds the ambient cap");
}

std::vector<Subspace> generators(const NBodySpec& spec) {
  const int n = spec.ambient();
  const int d = spec.space_dim;
  std::vector<Subspace> out;

  auto basis_vec = [&](int particle, int axis) {
    RatVec v(n, Rat(0));
    v[particle * d + axis] = 1;
    return v;
  };

  for (int j = 0; j < spec.particles; ++j) {  // Y_j : x_j = 0
    RatMat rows;
    for (int i = 0; i < spec.particles; ++i) {
      if (i == j) continue;
      for (int a = 0; a < d; ++a) rows.push_back(basis_vec(i, a));
    }
    out.push_back(Subspace::from_span(n, rows));
  }
  for (int i = 0; i < spec.particles; ++i) {  // Y_ij : x_i = x_j
    for (int j = i + 1; j < spec.particles; ++j) {
      RatMat rows;
      for (int a = 0; a < d; ++a) {
        RatVec v(n, Rat(0));
        v[i * d + a] = 1;
        v[j * d + a] = 1;
        rows.push_back(std::move(v));
      }
      for (int k = 0; k < spec.particles; ++k) {
        if (k == i || k == j) continue;
        for (int a = 0; a < d; ++a) rows.push_back(basis_vec(k, a));
      }
      out.push_back(Subspace::from_span(n, rows));
    }
  }
  return out;
}

Semilattice nbody_semilattice(const NBodySpec& spec) {
  return close(spec.ambient(), generators(spec));
}

RatMat permutation_action(const NBodySpec& spec, const std::vector<int>& sigma) {
  const int N = spec.particles;
  const int d = spec.space_dim;
  if (static_cast<int>(sigma.size()) != N)
    throw std::invalid_argument("permutation length does not match particle count");
  std::vector<bool> hit(N, false);
  for (int v : sigma) {
    if (v < 0 || v >= N || hit[v]) throw std::invalid_argument("not a permutation");
    hit[v] = true;
  }
  RatMat g(N * d, RatVec(N * d, Rat(0)));
  for (int i = 0; i < N; ++i)
    for (int a = 0; a < d; ++a) g[sigma[i] * d + a][i * d + a] = 1;
  return g;
}

bool is_orthogonal_exact(const RatMat& g) {
  const int d = static_cast<int>(g.size());
  for (const auto& row : g)
    if (static_cast<int>(row.size()) != d) return false;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      Rat acc(0);
      for (int l = 0; l < d; ++l) acc += g[l][i] * g[l][j];
      if (acc != (i == j ? Rat(1) : Rat(0))) return false;
    }
  }
  return true;
}

bool is_orthogonal(const std::vector<std::vector<double>>& g, double tol) {
  const int d = static_cast<int>(g.size());
  for (const auto& row : g)
    if (static_cast<int>(row.size()) != d) return false;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      double acc = 0.0;
      for (int l = 0; l < d; ++l) acc += g[l][i] * g[l][j];
      if (std::abs(acc - (i == j ? 1.0 : 0.0)) > tol) return false;
    }
  }
  return true;
}

RatMat ortho_diag_action(const NBodySpec& spec, const RatMat& g) {
  const int d = spec.space_dim;
  if (static_cast<int>(g.size()) != d)
    throw std::invalid_argument("block size does not match the space dimension");
  if (!is_orthogonal_exact(g)) throw std::invalid_argument("block is not orthogonal");
  const int n = spec.ambient();
  RatMat big(n, RatVec(n, Rat(0)));
  for (int p = 0; p < spec.particles; ++p)
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) big[p * d + a][p * d + b] = g[a][b];
  return big;
}

}  // namespace corner
