#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"

namespace hodgehyper {

// ---------------------------------------------------------------------------
// Exact backend primitives

struct Echelon {
  Matrix<Rational> reduced;
  std::vector<std::size_t> pivots;
};

// Reduced row echelon form by Gauss-Jordan elimination over the rationals.
inline Echelon rref(Matrix<Rational> m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
    std::size_t p = row;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    Rational inv = 1 / m(row, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || is_zero(m(i, c))) continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(c);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

// Fraction-free (Bareiss) elimination on the row-scaled integer matrix.
inline std::size_t rank(const Matrix<Rational>& m) {
  const std::size_t R = m.rows(), C = m.cols();
  if (R == 0 || C == 0) return 0;
  std::vector<std::vector<mpz_class>> a(R, std::vector<mpz_class>(C));
  for (std::size_t i = 0; i < R; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < C; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < C; ++j) a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t p = r;
    while (p < R && a[p][c] == 0) ++p;
    if (p == R) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < R; ++i) {
      for (std::size_t j = c + 1; j < C; ++j) {
        a[i][j] = a[i][j] * a[r][c] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

// Scale a rational vector to a primitive integer vector with positive leading entry.
inline void make_primitive(std::vector<Rational>& v) {
  mpz_class l = 1, g = 0;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  for (auto& x : v) {
    x *= l;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
  }
  if (g == 0) return;
  auto lead = std::find_if(v.begin(), v.end(), [](const Rational& x) { return !is_zero(x); });
  if (lead != v.end() && sgn(*lead) < 0) g = -g;
  for (auto& x : v) x /= g;
}

inline Matrix<Rational> kernel_matrix(const Matrix<Rational>& m) {
  auto [r, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  Matrix<Rational> k(m.cols(), m.cols() - pivots.size());
  std::size_t out = 0;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(m.cols(), Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, f);
    make_primitive(v);
    for (std::size_t i = 0; i < v.size(); ++i) k(i, out) = v[i];
    ++out;
  }
  return k;
}

inline Matrix<Rational> column_basis(const Matrix<Rational>& m) {
  return m.select_cols(rref(m).pivots);
}

// Solves a x = b for square invertible a.
inline Matrix<Rational> solve(const Matrix<Rational>& a, const Matrix<Rational>& b) {
  if (!a.is_square() || a.rows() != b.rows()) throw std::invalid_argument("solve: shape mismatch");
  auto [r, pivots] = rref(hcat(a, b));
  if (pivots.size() < a.cols() || (a.cols() > 0 && pivots[a.cols() - 1] != a.cols() - 1))
    throw InternalInconsistency("solve: singular system");
  return r.col_range(a.cols(), a.cols() + b.cols());
}

// ---------------------------------------------------------------------------
// Float backend primitives

inline Eigen::MatrixXd to_eigen(const Matrix<double>& m) {
  Eigen::MatrixXd e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
  return e;
}

inline Matrix<double> from_eigen(const Eigen::MatrixXd& e) {
  Matrix<double> m(e.rows(), e.cols());
  for (Eigen::Index i = 0; i < e.rows(); ++i)
    for (Eigen::Index j = 0; j < e.cols(); ++j) m(i, j) = e(i, j);
  return m;
}

inline std::size_t numeric_rank(const Eigen::VectorXd& sv) {
  if (sv.size() == 0) return 0;
  const double thr = tolerances().zero * std::max(1.0, sv.maxCoeff());
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > thr) ++r;
  return r;
}

inline std::size_t rank(const Matrix<double>& m) {
  if (m.empty()) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(to_eigen(m));
  return numeric_rank(svd.singularValues());
}

inline Matrix<double> kernel_matrix(const Matrix<double>& m) {
  if (m.cols() == 0) return Matrix<double>(0, 0);
  if (m.rows() == 0) return Matrix<double>::identity(m.cols());
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(to_eigen(m), Eigen::ComputeFullV);
  const std::size_t r = numeric_rank(svd.singularValues());
  return from_eigen(svd.matrixV().rightCols(m.cols() - r));
}

// Orthonormal basis of the column space.
inline Matrix<double> column_basis(const Matrix<double>& m) {
  if (m.empty()) return Matrix<double>(m.rows(), 0);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(to_eigen(m), Eigen::ComputeFullU);
  const std::size_t r = numeric_rank(svd.singularValues());
  return from_eigen(svd.matrixU().leftCols(r));
}

inline Matrix<double> solve(const Matrix<double>& a, const Matrix<double>& b) {
  if (!a.is_square() || a.rows() != b.rows()) throw std::invalid_argument("solve: shape mismatch");
  if (a.rows() == 0) return Matrix<double>(0, b.cols());
  return from_eigen(to_eigen(a).fullPivLu().solve(to_eigen(b)));
}

// ---------------------------------------------------------------------------
// Backend-generic helpers

// Slack for float residuals such as Gram blocks and symmetry defects.
inline double residual_tolerance(double scale = 1.0) { return 10 * tolerances().zero * std::max(1.0, scale); }

template <class T>
bool near_zero(const T& x, double scale = 1.0) {
  if constexpr (scalar_traits<T>::exact)
    return is_zero(x);
  else
    return std::abs(x) <= residual_tolerance(scale);
}

template <class T>
double max_abs(const Matrix<T>& m) {
  double out = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out = std::max(out, std::abs(scalar_traits<T>::to_double(m(i, j))));
  return out;
}

// Exactly zero over the rationals; entrywise below a scaled threshold for floats.
template <class T>
bool numerically_zero(const Matrix<T>& m, double scale = 1.0) {
  if constexpr (scalar_traits<T>::exact) {
    return m.is_zero();
  } else {
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (!near_zero(m(i, j), scale)) return false;
    return true;
  }
}

template <class T>
Matrix<T> gram(const Matrix<T>& b) {
  return b.transpose() * b;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& a) {
  return solve(a, Matrix<T>::identity(a.rows()));
}

// ---------------------------------------------------------------------------
// Subspaces of a coordinate space, stored by an independent column basis.

template <class T>
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient) { return Subspace(Matrix<T>(ambient, 0)); }
  static Subspace whole(std::size_t ambient) { return Subspace(Matrix<T>::identity(ambient)); }

  // Column span of arbitrary vectors.
  static Subspace span(const Matrix<T>& vectors) { return Subspace(column_basis(vectors)); }

  // Caller guarantees independent columns.
  static Subspace from_basis(Matrix<T> basis) { return Subspace(std::move(basis)); }

  static Subspace coordinate(std::size_t ambient, const std::vector<std::size_t>& idx) {
    Matrix<T> b(ambient, idx.size());
    for (std::size_t k = 0; k < idx.size(); ++k) b(idx[k], k) = T(1);
    return Subspace(std::move(b));
  }

  std::size_t ambient_dim() const { return basis_.rows(); }
  std::size_t dim() const { return basis_.cols(); }
  const Matrix<T>& basis() const { return basis_; }

 private:
  explicit Subspace(Matrix<T> b) : basis_(std::move(b)) {}
  Matrix<T> basis_;
};

template <class T>
void require_same_ambient(const Subspace<T>& u, const Subspace<T>& v, const char* op) {
  if (u.ambient_dim() != v.ambient_dim())
    throw AmbientMismatch(std::string(op) + ": ambient dimensions " + std::to_string(u.ambient_dim()) +
                          " and " + std::to_string(v.ambient_dim()));
}

template <class T>
Subspace<T> kernel_basis(const Matrix<T>& m) {
  return Subspace<T>::from_basis(kernel_matrix(m));
}

template <class T>
Subspace<T> image(const Matrix<T>& m) {
  return Subspace<T>::span(m);
}

// Image of a subspace under a map.
template <class T>
Subspace<T> image(const Matrix<T>& m, const Subspace<T>& v) {
  if (m.cols() != v.ambient_dim()) throw AmbientMismatch("image: map domain does not match subspace");
  return Subspace<T>::span(m * v.basis());
}

template <class T>
Subspace<T> subspace_sum(const Subspace<T>& u, const Subspace<T>& v) {
  require_same_ambient(u, v, "subspace_sum");
  if (v.dim() == 0) return u;
  if (u.dim() == 0) return v;
  return Subspace<T>::span(hcat(u.basis(), v.basis()));
}

// u ∩ v from the kernel of [U | -V]: each kernel vector (a, b) gives U a = V b.
template <class T>
Subspace<T> subspace_intersection(const Subspace<T>& u, const Subspace<T>& v) {
  require_same_ambient(u, v, "subspace_intersection");
  if (u.dim() == 0 || v.dim() == 0) return Subspace<T>::zero(u.ambient_dim());
  Matrix<T> k = kernel_matrix(hcat(u.basis(), T(-1) * v.basis()));
  Matrix<T> vecs = u.basis() * k.row_range(0, u.dim());
  if constexpr (scalar_traits<T>::exact)
    return Subspace<T>::from_basis(std::move(vecs));
  else
    return Subspace<T>::span(vecs);
}

// u ⊆ v
template <class T>
bool contains(const Subspace<T>& v, const Subspace<T>& u) {
  require_same_ambient(u, v, "contains");
  if (u.dim() == 0) return true;
  if (v.dim() == 0) return false;
  return rank(hcat(v.basis(), u.basis())) == v.dim();
}

template <class T>
bool same_subspace(const Subspace<T>& u, const Subspace<T>& v) {
  return u.dim() == v.dim() && contains(u, v);
}

template <class T>
bool mutually_orthogonal(const Subspace<T>& u, const Subspace<T>& v) {
  require_same_ambient(u, v, "mutually_orthogonal");
  return numerically_zero(Matrix<T>(u.basis().transpose() * v.basis()));
}

// ⊥(w, v): the part of v orthogonal to w.
template <class T>
Subspace<T> orthogonal_complement_in(const Subspace<T>& w, const Subspace<T>& v) {
  require_same_ambient(w, v, "orthogonal_complement_in");
  if (!contains(v, w)) throw NotASubspace("orthogonal_complement_in: w is not contained in v");
  if (w.dim() == 0) return v;
  Matrix<T> k = kernel_matrix(Matrix<T>(w.basis().transpose() * v.basis()));
  Matrix<T> vecs = v.basis() * k;
  if constexpr (scalar_traits<T>::exact)
    return Subspace<T>::from_basis(std::move(vecs));
  else
    return Subspace<T>::span(vecs);
}

template <class T>
Subspace<T> orthogonal_complement(const Subspace<T>& w) {
  return orthogonal_complement_in(w, Subspace<T>::whole(w.ambient_dim()));
}

// B (BᵀB)⁻¹ Bᵀ
template <class T>
Matrix<T> orthogonal_projection(const Subspace<T>& v) {
  const auto& b = v.basis();
  if (v.dim() == 0) return Matrix<T>(v.ambient_dim(), v.ambient_dim());
  return b * solve(gram(b), b.transpose());
}

// { x : m x ∈ v }, as the kernel of m followed by the coordinates along ⊥(v).
template <class T>
Subspace<T> preimage(const Matrix<T>& m, const Subspace<T>& v) {
  if (m.rows() != v.ambient_dim()) throw AmbientMismatch("preimage: map codomain does not match subspace");
  Matrix<T> normals = orthogonal_complement(v).basis();
  if (normals.cols() == 0) return Subspace<T>::whole(m.cols());
  return kernel_basis(Matrix<T>(normals.transpose() * m));
}

// Coordinates c with basis * c = x for x in the subspace.
template <class T>
Matrix<T> coordinates_in(const Subspace<T>& v, const Matrix<T>& x) {
  const auto& b = v.basis();
  return solve(gram(b), Matrix<T>(b.transpose() * x));
}

// Canonical basis: rows of the reduced echelon form of Bᵀ, as columns.
inline Matrix<Rational> canonical_basis(const Subspace<Rational>& v) {
  if (v.dim() == 0) return v.basis();
  auto e = rref(v.basis().transpose());
  Matrix<Rational> out(v.ambient_dim(), v.dim());
  for (std::size_t k = 0; k < v.dim(); ++k) {
    std::vector<Rational> row(v.ambient_dim());
    for (std::size_t j = 0; j < v.ambient_dim(); ++j) row[j] = e.reduced(k, j);
    make_primitive(row);
    for (std::size_t j = 0; j < v.ambient_dim(); ++j) out(j, k) = row[j];
  }
  return out;
}

inline Matrix<double> canonical_basis(const Subspace<double>& v) { return v.basis(); }

// ---------------------------------------------------------------------------
// Symmetric eigendecomposition (float)

struct EigenDecomposition {
  std::vector<double> values;  // weakly increasing
  Matrix<double> vectors;      // orthonormal columns, matching values
};

inline bool is_symmetric(const Matrix<double>& m) {
  if (!m.is_square()) return false;
  const double thr = residual_tolerance(max_abs(m));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (std::abs(m(i, j) - m(j, i)) > thr) return false;
  return true;
}

inline EigenDecomposition symmetric_eigendecomposition(const Matrix<double>& m) {
  if (!is_symmetric(m)) throw NotSymmetric("symmetric_eigendecomposition: matrix is not symmetric");
  if (m.rows() == 0) return {{}, Matrix<double>(0, 0)};
  Eigen::MatrixXd e = to_eigen(m);
  e = 0.5 * (e + e.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(e);
  EigenDecomposition out;
  out.values.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + m.rows());
  out.vectors = from_eigen(solver.eigenvectors());
  return out;
}

inline EigenDecomposition symmetric_eigendecomposition(const Matrix<Rational>& m) {
  if (!m.is_square() || !(m == m.transpose()))
    throw NotSymmetric("symmetric_eigendecomposition: matrix is not symmetric");
  return symmetric_eigendecomposition(convert<double>(m));
}

}  // namespace hodgehyper
