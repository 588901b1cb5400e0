#include "corner/subspace.hpp"

#include <stdexcept>

namespace corner {

namespace {

void check_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("ambient dimension mismatch");
}

}  // namespace

int rref(RatMat& m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  int pivot_row = 0;
  for (int col = 0; col < cols && pivot_row < rows; ++col) {
    int sel = -1;
    for (int r = pivot_row; r < rows; ++r) {
      if (m[r][col] != 0) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(m[pivot_row], m[sel]);
    const Rat inv = m[pivot_row][col];
    for (int c = col; c < cols; ++c) m[pivot_row][c] /= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == pivot_row || m[r][col] == 0) continue;
      const Rat factor = m[r][col];
      for (int c = col; c < cols; ++c) m[r][c] -= factor * m[pivot_row][c];
    }
    ++pivot_row;
  }
  m.resize(pivot_row);
  return pivot_row;
}

RatMat kernel_basis(const RatMat& m, int cols) {
  RatMat red = m;
  rref(red);
  std::vector<int> pivot_col_of_row;
  std::vector<bool> is_pivot(cols, false);
  for (const auto& row : red) {
    int p = -1;
    for (int c = 0; c < cols; ++c) {
      if (row[c] != 0) {
        p = c;
        break;
      }
    }
    if (p >= 0) {
      pivot_col_of_row.push_back(p);
      is_pivot[p] = true;
    }
  }
  RatMat ker;
  for (int free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    RatVec v(cols, Rat(0));
    v[free_col] = 1;
    for (size_t r = 0; r < pivot_col_of_row.size(); ++r)
      v[pivot_col_of_row[r]] = -red[r][free_col];
    ker.push_back(std::move(v));
  }
  rref(ker);
  return ker;
}

Subspace Subspace::zero(int ambient_dim) {
  if (ambient_dim <= 0) throw std::invalid_argument("ambient dimension must be positive");
  return Subspace(ambient_dim, {});
}

Subspace Subspace::full(int ambient_dim) {
  if (ambient_dim <= 0) throw std::invalid_argument("ambient dimension must be positive");
  return Subspace(ambient_dim, rat_identity(ambient_dim));
}

Subspace Subspace::from_span(int ambient_dim, const RatMat& rows) {
  if (ambient_dim <= 0) throw std::invalid_argument("ambient dimension must be positive");
  RatMat m = rows;
  for (const auto& r : m)
    if (static_cast<int>(r.size()) != ambient_dim)
      throw std::invalid_argument("row length does not match ambient dimension");
  rref(m);
  return Subspace(ambient_dim, std::move(m));
}

bool Subspace::contains_vector(const RatVec& v) const {
  if (static_cast<int>(v.size()) != ambient_dim_)
    throw std::invalid_argument("vector length does not match ambient dimension");
  RatVec w = v;
  for (const auto& row : basis_) {
    int p = -1;
    for (int c = 0; c < ambient_dim_; ++c) {
      if (row[c] != 0) {
        p = c;
        break;
      }
    }
    if (p < 0) continue;
    if (w[p] == 0) continue;
    const Rat factor = w[p];  // pivot entry is 1
    for (int c = p; c < ambient_dim_; ++c) w[c] -= factor * row[c];
  }
  return is_zero_vec(w);
}

std::strong_ordering Subspace::order(const Subspace& other) const {
  if (auto c = ambient_dim_ <=> other.ambient_dim_; c != 0) return c;
  if (auto c = dim() <=> other.dim(); c != 0) return c;
  for (int r = 0; r < dim(); ++r) {
    for (int c = 0; c < ambient_dim_; ++c) {
      const Rat &x = basis_[r][c], &y = other.basis_[r][c];
      if (x < y) return std::strong_ordering::less;
      if (x > y) return std::strong_ordering::greater;
    }
  }
  return std::strong_ordering::equal;
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  check_ambient(a, b);
  const int n = a.ambient_dim();
  // Zassenhaus: rows (u, u) for u in a, rows (w, 0) for w in b; after
  // reduction the rows supported on the right half span the intersection.
  RatMat block;
  for (const auto& u : a.basis()) {
    RatVec row(2 * n, Rat(0));
    for (int i = 0; i < n; ++i) row[i] = row[n + i] = u[i];
    block.push_back(std::move(row));
  }
  for (const auto& w : b.basis()) {
    RatVec row(2 * n, Rat(0));
    for (int i = 0; i < n; ++i) row[i] = w[i];
    block.push_back(std::move(row));
  }
  rref(block);
  RatMat inter;
  for (const auto& row : block) {
    bool left_zero = true;
    for (int i = 0; i < n; ++i) {
      if (row[i] != 0) {
        left_zero = false;
        break;
      }
    }
    if (!left_zero) continue;
    RatVec v(row.begin() + n, row.end());
    if (!is_zero_vec(v)) inter.push_back(std::move(v));
  }
  return Subspace::from_span(n, inter);
}

Subspace sum(const Subspace& a, const Subspace& b) {
  check_ambient(a, b);
  RatMat rows = a.basis();
  rows.insert(rows.end(), b.basis().begin(), b.basis().end());
  return Subspace::from_span(a.ambient_dim(), rows);
}

bool contains(const Subspace& a, const Subspace& b) {
  check_ambient(a, b);
  for (const auto& v : b.basis())
    if (!a.contains_vector(v)) return false;
  return true;
}

QuotientMap::QuotientMap(int source_dim, Subspace kernel, RatMat matrix)
    : source_dim_(source_dim), kernel_(std::move(kernel)), matrix_(std::move(matrix)) {
  matrix_d_.reserve(matrix_.size());
  for (const auto& row : matrix_) matrix_d_.push_back(to_doubles(row));
}

std::vector<double> QuotientMap::apply(const std::vector<double>& v) const {
  if (static_cast<int>(v.size()) != source_dim_)
    throw std::invalid_argument("vector length does not match quotient source");
  std::vector<double> out(matrix_d_.size(), 0.0);
  for (size_t i = 0; i < matrix_d_.size(); ++i) {
    double acc = 0.0;
    for (size_t j = 0; j < v.size(); ++j) acc += matrix_d_[i][j] * v[j];
    out[i] = acc;
  }
  return out;
}

QuotientMap quotient_map(int ambient_dim, const Subspace& y) {
  if (y.ambient_dim() != ambient_dim)
    throw std::invalid_argument("ambient dimension mismatch");
  if (y.is_full())
    throw std::invalid_argument("quotient by the full ambient space is not allowed");
  // Rows span the orthogonal complement of y: the kernel of y's basis matrix
  // read as a system of inner-product equations. Already RREF-canonical.
  RatMat rows = y.is_zero() ? rat_identity(ambient_dim) : kernel_basis(y.basis(), ambient_dim);
  return QuotientMap(ambient_dim, y, std::move(rows));
}

RatMat solve_right_factor(const RatMat& a, const RatMat& b) {
  const int k = static_cast<int>(a.size());
  const int m = static_cast<int>(b.size());
  if (k == 0) {
    if (m == 0) return {};
    throw std::invalid_argument("cannot factor through an empty map");
  }
  const int n = static_cast<int>(a[0].size());
  // Solve x a = b row by row via the transposed augmented system [a^T | b^T].
  RatMat aug(n, RatVec(k + m, Rat(0)));
  for (int i = 0; i < n; ++i) {
    for (int r = 0; r < k; ++r) aug[i][r] = a[r][i];
    for (int r = 0; r < m; ++r) aug[i][k + r] = b[r][i];
  }
  rref(aug);
  RatMat x(m, RatVec(k, Rat(0)));
  for (int row = 0; row < static_cast<int>(aug.size()); ++row) {
    int p = -1;
    for (int c = 0; c < k + m; ++c) {
      if (aug[row][c] != 0) {
        p = c;
        break;
      }
    }
    if (p < 0) continue;
    if (p >= k) throw std::invalid_argument("inconsistent factorization system");
    for (int r = 0; r < m; ++r) x[r][p] = aug[row][k + r];
  }
  return x;
}

RatMat induced_quotient(const QuotientMap& from_y, const QuotientMap& to_y_big) {
  if (from_y.source_dim() != to_y_big.source_dim())
    throw std::invalid_argument("quotient maps have different sources");
  if (!contains(to_y_big.kernel(), from_y.kernel()))
    throw std::invalid_argument("induced quotient requires nested kernels");
  RatMat r = solve_right_factor(from_y.matrix(), to_y_big.matrix());
  return r;
}

}  // namespace corner
