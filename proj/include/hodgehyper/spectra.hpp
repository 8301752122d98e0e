#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "hodge.hpp"

namespace hodgehyper {

// Eigenvalues with multiplicities, strictly increasing after binning.
struct EigenMultiset {
  std::vector<std::pair<double, std::size_t>> entries;

  std::size_t total() const {
    std::size_t t = 0;
    for (const auto& e : entries) t += e.second;
    return t;
  }
  std::size_t zero_multiplicity() const {
    for (const auto& e : entries)
      if (e.first == 0.0) return e.second;
    return 0;
  }
  bool only_zeros() const { return zero_multiplicity() == total(); }
};

// Multiplicity of λ is dim(E_λ ∩ W); entries with multiplicity 0 are dropped.
using QuasiSpectrum = EigenMultiset;

namespace detail {

struct Bin {
  double value;
  std::vector<std::size_t> members;
};

// Clamp tiny values to zero, then merge neighbours closer than the bin width.
inline std::vector<Bin> bin_values(const std::vector<double>& sorted_values) {
  std::vector<Bin> bins;
  if (sorted_values.empty()) return bins;
  double scale = 1.0;
  for (double v : sorted_values) scale = std::max(scale, std::abs(v));
  const double zero_thr = tolerances().zero * scale;
  const double width = tolerances().bin * scale;
  double start = 0;
  for (std::size_t i = 0; i < sorted_values.size(); ++i) {
    double v = std::abs(sorted_values[i]) <= zero_thr ? 0.0 : sorted_values[i];
    if (bins.empty() || v - start > width) {
      bins.push_back({v, {}});
      start = v;
    }
    bins.back().members.push_back(i);
  }
  for (auto& b : bins) {
    if (b.value == 0.0) continue;
    double s = 0;
    for (auto i : b.members) s += sorted_values[i];
    b.value = s / static_cast<double>(b.members.size());
  }
  // a bin that straddles zero keeps the exact zero label
  for (auto& b : bins)
    for (auto i : b.members)
      if (std::abs(sorted_values[i]) <= zero_thr) b.value = 0.0;
  return bins;
}

template <class T>
Matrix<double> symmetric_form(const LinearOperator<T>& op) {
  if (op.domain.dim() != op.codomain.dim() || op.matrix.rows() != op.matrix.cols())
    throw NotSymmetric("spectrum: operator is not square");
  if (op.domain.is_ambient()) {
    if constexpr (scalar_traits<T>::exact)
      if (!(op.matrix == op.matrix.transpose())) throw NotSymmetric("spectrum: operator is not symmetric");
    return convert<double>(op.matrix);
  }
  // Self-adjoint for the Gram form G: G·M symmetric. With G = L Lᵀ the matrix
  // Lᵀ M L⁻ᵀ is symmetric and similar to M.
  Matrix<T> gm = op.domain.gram() * op.matrix;
  if constexpr (scalar_traits<T>::exact) {
    if (!(gm == gm.transpose())) throw NotSymmetric("spectrum: operator is not self-adjoint on its subspace");
  } else {
    if (!is_symmetric(gm)) throw NotSymmetric("spectrum: operator is not self-adjoint on its subspace");
  }
  if (op.matrix.rows() == 0) return Matrix<double>(0, 0);
  Eigen::MatrixXd g = to_eigen(convert<double>(op.domain.gram()));
  Eigen::MatrixXd m = to_eigen(convert<double>(op.matrix));
  Eigen::LLT<Eigen::MatrixXd> llt(g);
  Eigen::MatrixXd lt = llt.matrixU();
  Eigen::MatrixXd s = lt * m * lt.inverse();
  return from_eigen(0.5 * (s + s.transpose()));
}

inline std::optional<Rational> rationalize(double x, long max_den = 1000) {
  if (!std::isfinite(x)) return std::nullopt;
  // continued-fraction convergents
  long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double r = x;
  for (int it = 0; it < 40; ++it) {
    double a = std::floor(r);
    if (std::abs(a) > 1e12) break;
    long ai = static_cast<long>(a);
    long h2 = ai * h1 + h0, k2 = ai * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    if (std::abs(static_cast<double>(h1) / static_cast<double>(k1) - x) <= 1e-12 * std::max(1.0, std::abs(x))) break;
    double frac = r - a;
    if (frac < 1e-15) break;
    r = 1.0 / frac;
  }
  if (k1 == 0) return std::nullopt;
  if (std::abs(static_cast<double>(h1) / static_cast<double>(k1) - x) > 1e-9 * std::max(1.0, std::abs(x)))
    return std::nullopt;
  Rational q(h1, k1);
  q.canonicalize();
  return q;
}

// Number of principal angles between two orthonormal bases that vanish.
inline std::size_t common_directions(const Matrix<double>& q1, const Matrix<double>& q2) {
  if (q1.cols() == 0 || q2.cols() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(to_eigen(q1).transpose() * to_eigen(q2));
  std::size_t k = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) >= 1.0 - tolerances().quasi) ++k;
  return k;
}

inline bool values_match(double x, double y, double rel) {
  return std::abs(x - y) <= rel * std::max({1.0, std::abs(x), std::abs(y)});
}

struct Cluster {
  double value;
  std::size_t left = 0, right = 0;
};

// Nonzero entries of both multisets grouped by value.
inline std::vector<Cluster> cluster(const EigenMultiset& a, const EigenMultiset& b, double rel) {
  std::vector<std::tuple<double, int, std::size_t>> all;
  for (const auto& e : a.entries)
    if (e.first != 0.0) all.emplace_back(e.first, 0, e.second);
  for (const auto& e : b.entries)
    if (e.first != 0.0) all.emplace_back(e.first, 1, e.second);
  std::sort(all.begin(), all.end());
  std::vector<Cluster> out;
  double start = 0;
  for (const auto& [v, side, m] : all) {
    if (out.empty() || !values_match(start, v, rel)) {
      out.push_back({v});
      start = v;
    }
    (side == 0 ? out.back().left : out.back().right) += m;
  }
  return out;
}

}  // namespace detail

inline EigenMultiset bin_eigenvalues(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  EigenMultiset out;
  for (const auto& b : detail::bin_values(values)) out.entries.emplace_back(b.value, b.members.size());
  return out;
}

// Eigenvalues before clamping and binning.
template <class T>
std::vector<double> raw_eigenvalues(const LinearOperator<T>& op) {
  return symmetric_eigendecomposition(detail::symmetric_form(op)).values;
}

template <class T>
EigenMultiset spectrum(const LinearOperator<T>& op) {
  return bin_eigenvalues(raw_eigenvalues(op));
}

template <class T>
EigenMultiset spectrum(const Matrix<T>& symmetric) {
  return bin_eigenvalues(symmetric_eigendecomposition(symmetric).values);
}

// Quasi-spectrum of a symmetric operator on chain coordinates relative to w.
template <class T>
QuasiSpectrum quasi_spectrum(const Matrix<T>& op, const Subspace<T>& w) {
  if (!op.is_square() || op.rows() != w.ambient_dim()) throw AmbientMismatch("quasi_spectrum: shape mismatch");
  QuasiSpectrum out;
  if (w.dim() == 0) return out;
  const auto eig = symmetric_eigendecomposition(op);
  const auto bins = detail::bin_values(eig.values);
  const Matrix<double> wq = column_basis(convert<double>(w.basis()));
  for (const auto& b : bins) {
    std::optional<std::size_t> mult;
    if constexpr (scalar_traits<T>::exact) {
      std::optional<Rational> q = b.value == 0.0 ? std::optional<Rational>(Rational(0)) : detail::rationalize(b.value);
      if (q) {
        Matrix<T> shifted = op;
        for (std::size_t i = 0; i < op.rows(); ++i) shifted(i, i) -= *q;
        auto eigenspace = kernel_basis(shifted);
        if (eigenspace.dim() == b.members.size()) mult = subspace_intersection(eigenspace, w).dim();
      }
    }
    if (!mult) mult = detail::common_directions(eig.vectors.select_cols(b.members), wq);
    if (*mult > 0) out.entries.emplace_back(b.value, *mult);
  }
  return out;
}

template <class T>
QuasiSpectrum quasi_spectrum(const LinearOperator<T>& op, const Subspace<T>& w) {
  if (!op.domain.is_ambient() || !op.codomain.is_ambient())
    throw AmbientMismatch("quasi_spectrum: operator must act on a chain space");
  return quasi_spectrum(op.matrix, w);
}

constexpr double kSpectralRelTol = 1e-6;

// a ≐ b: equal away from zero.
inline bool circ_eq(const EigenMultiset& a, const EigenMultiset& b, double rel = kSpectralRelTol) {
  for (const auto& c : detail::cluster(a, b, rel))
    if (c.left != c.right) return false;
  return true;
}

// a ⊆̊ b: contained away from zero.
inline bool circ_subset(const EigenMultiset& a, const EigenMultiset& b, double rel = kSpectralRelTol) {
  for (const auto& c : detail::cluster(a, b, rel))
    if (c.left > c.right) return false;
  return true;
}

// a ⊆ b including the zero multiplicity.
inline bool multiset_subset(const EigenMultiset& a, const EigenMultiset& b, double rel = kSpectralRelTol) {
  return circ_subset(a, b, rel) && a.zero_multiplicity() <= b.zero_multiplicity();
}

inline EigenMultiset circ_union(const EigenMultiset& a, const EigenMultiset& b, double rel = kSpectralRelTol) {
  EigenMultiset out;
  const std::size_t zeros = a.zero_multiplicity() + b.zero_multiplicity();
  if (zeros) out.entries.emplace_back(0.0, zeros);
  for (const auto& c : detail::cluster(a, b, rel)) out.entries.emplace_back(c.value, c.left + c.right);
  std::sort(out.entries.begin(), out.entries.end());
  return out;
}

// F: E_λ(AB) -> E_λ(BA), x ↦ Bx, on orthonormal eigenspace bases.
struct EigenTransfer {
  Matrix<double> source_basis;  // columns span E_λ(AB)
  Matrix<double> target_basis;  // columns span E_λ(BA)
  Matrix<double> forward;       // F in those bases
  Matrix<double> inverse;       // (1/λ) A in those bases
};

template <class T>
EigenTransfer eigen_transfer(const Matrix<T>& a_in, const Matrix<T>& b_in, double lambda) {
  const Matrix<double> a = convert<double>(a_in), b = convert<double>(b_in);
  if (a.cols() != b.rows() || b.cols() != a.rows()) throw std::invalid_argument("eigen_transfer: shapes do not compose");
  const double scale = std::max({1.0, max_abs(a), max_abs(b)});
  if (std::abs(lambda) <= tolerances().zero * scale * scale) throw ZeroEigenvalue("eigen_transfer: lambda is zero");
  auto eigenspace = [&](const Matrix<double>& m) {
    Matrix<double> shifted = m;
    for (std::size_t i = 0; i < m.rows(); ++i) shifted(i, i) -= lambda;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(to_eigen(shifted), Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double thr = 1e-7 * std::max(1.0, sv.size() ? sv.maxCoeff() : 0.0);
    Eigen::Index r = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
      if (sv(i) > thr) ++r;
    return from_eigen(svd.matrixV().rightCols(m.cols() - r));
  };
  EigenTransfer t;
  t.source_basis = eigenspace(a * b);
  t.target_basis = eigenspace(b * a);
  if (t.source_basis.cols() == 0) throw NotAnEigenvalue("eigen_transfer: lambda is not an eigenvalue of AB");
  if (t.source_basis.cols() != t.target_basis.cols())
    throw InternalInconsistency("eigen_transfer: eigenspaces of AB and BA differ in dimension");
  t.forward = t.target_basis.transpose() * (b * t.source_basis);
  t.inverse = (1.0 / lambda) * Matrix<double>(t.source_basis.transpose() * (a * t.target_basis));
  Matrix<double> round = t.inverse * t.forward - Matrix<double>::identity(t.forward.cols());
  if (rank(t.forward) != t.forward.cols() || max_abs(round) > 1e-6)
    throw InternalInconsistency("eigen_transfer: transfer is not invertible");
  return t;
}

// ---------------------------------------------------------------------------
// Spectral relations at one degree

enum class RelationStatus { pass, fail, skipped };

inline const char* status_name(RelationStatus s) {
  return s == RelationStatus::pass ? "pass" : (s == RelationStatus::fail ? "fail" : "skipped");
}

struct SpectralRelation {
  std::string name;
  RelationStatus status = RelationStatus::skipped;
  EigenMultiset lhs, rhs;
};

inline bool relations_pass(const std::vector<SpectralRelation>& rs) {
  return std::none_of(rs.begin(), rs.end(), [](const SpectralRelation& r) { return r.status == RelationStatus::fail; });
}

struct SpectralOptions {
  // Gate the complement-split relation on the complement condition at both
  // degree n and n+1; false checks degree n+1 alone.
  bool complement_both_degrees = true;
};

template <class T>
std::vector<SpectralRelation> verify_spectral_suite(const HodgeAnalysis<T>& a, int n, SpectralOptions opt = {}) {
  std::vector<SpectralRelation> out;
  const auto& chains = a.chains();
  const auto& h = chains.hypergraph();
  auto status = [](bool ok) { return ok ? RelationStatus::pass : RelationStatus::fail; };
  auto lap = [&](int k, Carrier c) -> const LaplacianBundle<T>* {
    if (k < 0 || k > a.max_degree()) return nullptr;
    return &a.laplacian(k, c);
  };
  auto s_full = [&](int k, Carrier c) { auto* l = lap(k, c); return l ? spectrum(l->full) : EigenMultiset{}; };
  auto s_down = [&](int k, Carrier c) { auto* l = lap(k, c); return l ? spectrum(l->down) : EigenMultiset{}; };
  auto no_edges_of_dim = [&](std::initializer_list<int> dims) {
    for (int d : dims)
      if (d >= 0 && !h.edges_of_dim(d).empty()) return false;
    return true;
  };
  auto add = [&](std::string name, RelationStatus st, EigenMultiset lhs, EigenMultiset rhs) {
    out.push_back({std::move(name), st, std::move(lhs), std::move(rhs)});
  };

  const Carrier all[] = {Carrier::inf, Carrier::sup, Carrier::ambient};
  for (Carrier c : all) {
    const std::string tag = std::string("/") + carrier_name(c);
    const auto& l = a.laplacian(n, c);
    auto full = spectrum(l.full);
    auto un = circ_union(spectrum(l.up), spectrum(l.down));
    add("laplacian_split" + tag, status(circ_eq(full, un)), full, un);

    auto up = spectrum(l.up);
    auto down_prev = s_down(n - 1, c);
    add("up_down_shift" + tag, status(circ_eq(up, down_prev)), up, down_prev);

    const std::size_t kernel = a.harmonic(n, c).dim();
    EigenMultiset kernel_ms;
    if (kernel) kernel_ms.entries.emplace_back(0.0, kernel);
    EigenMultiset zeros_ms;
    if (full.zero_multiplicity()) zeros_ms.entries.emplace_back(0.0, full.zero_multiplicity());
    add("zero_multiplicity_matches_kernel" + tag, status(full.zero_multiplicity() == kernel), zeros_ms, kernel_ms);

    auto raw = raw_eigenvalues(l.full);
    double lo = raw.empty() ? 0.0 : raw.front();
    double hi = raw.empty() ? 0.0 : raw.back();
    add("nonnegative" + tag, status(lo >= -residual_tolerance(std::abs(hi))), bin_eigenvalues(raw), {});
  }

  const auto& amb = a.laplacian(n, Carrier::ambient);
  const Carrier restricted[] = {Carrier::inf, Carrier::sup};
  for (Carrier c : restricted) {
    const std::string tag = std::string("/") + carrier_name(c);
    const Subspace<T> here = chains.carrier_space(c, n);
    const Subspace<T> above = chains.carrier_space(c, n + 1);
    const auto& lc = a.laplacian(n, c);

    auto q_up = quasi_spectrum(amb.up.matrix, here);
    QuasiSpectrum q_down_prev;
    if (n >= 1)
      q_down_prev = quasi_spectrum(a.laplacian(n - 1, Carrier::ambient).down.matrix,
                                   image(chains.boundary_matrix_at(n), here));
    add("quasi_up_down_shift" + tag, status(circ_eq(q_up, q_down_prev)), q_up, q_down_prev);

    auto s_up_c = spectrum(lc.up);
    add("quasi_up_within_restricted_up" + tag, status(multiset_subset(q_up, s_up_c)), q_up, s_up_c);

    const auto bd_above = image(chains.boundary_matrix_at(n + 1), above);
    auto q_full_bd = quasi_spectrum(amb.full.matrix, bd_above);
    auto s_full_c = spectrum(lc.full);
    add("boundary_image_inclusion" + tag, status(circ_subset(q_full_bd, s_full_c)), q_full_bd, s_full_c);

    auto q_up_bd = quasi_spectrum(amb.up.matrix, bd_above);
    EigenMultiset expect;
    if (bd_above.dim()) expect.entries.emplace_back(0.0, bd_above.dim());
    add("up_vanishes_on_boundary_image" + tag,
        status(q_up_bd.only_zeros() && q_up_bd.total() == bd_above.dim()), q_up_bd, expect);
  }

  // Gated relations
  const bool low_dim = n == 1 && h.top_dim() <= 2;
  for (Carrier c : all) {
    const std::string name = std::string("low_dim_split/") + carrier_name(c);
    if (!low_dim) {
      add(name, RelationStatus::skipped, {}, {});
      continue;
    }
    auto lhs = s_full(1, c);
    auto rhs = circ_union(s_full(0, c), s_full(2, c));
    add(name, status(circ_eq(lhs, rhs)), lhs, rhs);
  }

  {
    const bool hyp_inf = no_edges_of_dim({n - 1, n + 3});
    const bool hyp_sup = no_edges_of_dim({n - 1, n, n + 3, n + 4});
    for (Carrier c : restricted) {
      const std::string name = std::string("gap_split/") + carrier_name(c);
      if (!(c == Carrier::inf ? hyp_inf : hyp_sup) || n + 2 > a.max_degree()) {
        add(name, RelationStatus::skipped, {}, {});
        continue;
      }
      auto lhs = s_full(n + 1, c);
      auto rhs = circ_union(s_full(n, c), s_full(n + 2, c));
      add(name, status(circ_eq(lhs, rhs)), lhs, rhs);
    }
  }

  for (Carrier c : restricted) {
    const std::string name = std::string("complement_split/") + carrier_name(c);
    bool hyp = chains.complement_condition(n + 1, c);
    if (opt.complement_both_degrees) hyp = hyp && chains.complement_condition(n, c);
    if (!hyp) {
      add(name, RelationStatus::skipped, {}, {});
      continue;
    }
    const Subspace<T> here = chains.carrier_space(c, n);
    const auto bd_above = image(chains.boundary_matrix_at(n + 1), chains.carrier_space(c, n + 1));
    auto lhs = s_full(n, c);
    auto rhs = circ_union(quasi_spectrum(amb.up.matrix, here), quasi_spectrum(amb.down.matrix, bd_above));
    add(name, status(circ_eq(lhs, rhs)), lhs, rhs);
  }
  return out;
}

template <class T = Rational>
std::vector<SpectralRelation> verify_spectral_suite(const Hypergraph& h, const Weight& phi, int n,
                                                    SpectralOptions opt = {}) {
  return verify_spectral_suite(HodgeAnalysis<T>(h, phi), n, opt);
}

}  // namespace hodgehyper
