#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "errors.hpp"
#include "hypergraph.hpp"
#include "linalg.hpp"
#include "weight.hpp"

namespace hodgehyper {

// Coordinates of the degree-n chain space of a complex. Degree -1 (and any
// degree past the top) is the zero space.
struct ChainBasis {
  std::shared_ptr<const SimplicialComplex> complex;
  int n = 0;

  const std::vector<Simplex>& simplices() const { return complex->simplices(n); }
  std::size_t dim() const { return complex ? complex->count(n) : 0; }
};

// A chain space or a subspace of one; coordinates are taken in the stored basis.
template <class T>
struct Space {
  ChainBasis chain;
  std::optional<Subspace<T>> sub;

  std::size_t dim() const { return sub ? sub->dim() : chain.dim(); }
  std::size_t ambient_dim() const { return chain.dim(); }
  bool is_ambient() const { return !sub.has_value(); }
  Matrix<T> embedding() const { return sub ? sub->basis() : Matrix<T>::identity(chain.dim()); }
  Matrix<T> gram() const { return sub ? hodgehyper::gram(sub->basis()) : Matrix<T>::identity(chain.dim()); }
  Subspace<T> as_subspace() const { return sub ? *sub : Subspace<T>::whole(chain.dim()); }
};

template <class T>
struct LinearOperator {
  Space<T> domain;
  Space<T> codomain;
  Matrix<T> matrix;
};

// Matrix of ∂ᵠ_n in simplex coordinates; rows are (n-1)-simplices.
template <class T>
Matrix<T> boundary_matrix(const SimplicialComplex& k, int n, const Weight& phi) {
  const auto& cols = k.simplices(n);
  Matrix<T> m(n >= 1 ? k.count(n - 1) : 0, cols.size());
  if (n < 1) return m;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const Simplex& s = cols[c];
    for (std::size_t i = 0; i < s.size(); ++i) {
      Simplex f = s.face(i);
      Rational coeff = weight_value(phi, s, f);
      if (i % 2) coeff = -coeff;
      m(k.index_of(f), c) = scalar_traits<T>::from_rational(coeff);
    }
  }
  return m;
}

inline void require_valid_weight(const SimplicialComplex& k, const Weight& phi) {
  WeightCheck check;
  try {
    check = validate_weight(k, phi);
  } catch (const MissingPair& e) {
    throw InvalidWeight(e.what());
  }
  if (!check) throw InvalidWeight("weight condition fails at " + check.violation->str());
}

template <class T>
LinearOperator<T> boundary(std::shared_ptr<const SimplicialComplex> k, int n, const Weight& phi) {
  require_valid_weight(*k, phi);
  Matrix<T> m = boundary_matrix<T>(*k, n, phi);
  return {Space<T>{ChainBasis{k, n}, {}}, Space<T>{ChainBasis{k, n - 1}, {}}, std::move(m)};
}

template <class T>
LinearOperator<T> boundary(const SimplicialComplex& k, int n, const Weight& phi) {
  return boundary<T>(std::make_shared<const SimplicialComplex>(k), n, phi);
}

// Adjoint under the inner products induced on the stored bases:
// G_dom⁻¹ Mᵀ G_cod, which is the transpose for chain-basis endpoints.
template <class T>
LinearOperator<T> adjoint(const LinearOperator<T>& op) {
  Matrix<T> mt = op.matrix.transpose();
  if (op.domain.is_ambient() && op.codomain.is_ambient()) return {op.codomain, op.domain, std::move(mt)};
  Matrix<T> adj = solve(op.domain.gram(), Matrix<T>(mt * op.codomain.gram()));
  return {op.codomain, op.domain, std::move(adj)};
}

namespace detail {

template <class T>
void require_ambient_operator(const LinearOperator<T>& op, const Subspace<T>& dom, const Subspace<T>& cod,
                              const char* what) {
  if (!op.domain.is_ambient() || !op.codomain.is_ambient())
    throw std::invalid_argument(std::string(what) + ": operator must act between chain spaces");
  if (dom.ambient_dim() != op.matrix.cols() || cod.ambient_dim() != op.matrix.rows())
    throw AmbientMismatch(std::string(what) + ": subspaces do not match operator shape");
}

template <class T>
LinearOperator<T> projected_adjoint(const LinearOperator<T>& op, const Subspace<T>& dom, const Subspace<T>& cod) {
  const Matrix<T>& b = dom.basis();
  Matrix<T> m = dom.dim() > 0 ? solve(gram(b), Matrix<T>(b.transpose() * op.matrix.transpose() * cod.basis()))
                              : Matrix<T>(0, cod.dim());
  return {Space<T>{op.codomain.chain, cod}, Space<T>{op.domain.chain, dom}, std::move(m)};
}

}  // namespace detail

template <class T>
LinearOperator<T> restrict(const LinearOperator<T>& op, const Subspace<T>& dom, const Subspace<T>& cod) {
  detail::require_ambient_operator(op, dom, cod, "restrict");
  Matrix<T> images = op.matrix * dom.basis();
  if (dom.dim() > 0 && !contains(cod, Subspace<T>::span(images)))
    throw NotInvariant("restrict: operator does not map the domain subspace into the codomain subspace");
  Matrix<T> m = cod.dim() > 0 ? coordinates_in(cod, images) : Matrix<T>(0, dom.dim());
  return {Space<T>{op.domain.chain, dom}, Space<T>{op.codomain.chain, cod}, std::move(m)};
}

// (op|dom)* : cod -> dom, i.e. orthogonal projection onto dom after op*
// restricted to cod, in subspace coordinates: (BᵀB)⁻¹ Bᵀ Aᵀ C.
template <class T>
LinearOperator<T> restricted_adjoint(const LinearOperator<T>& op, const Subspace<T>& dom, const Subspace<T>& cod) {
  restrict(op, dom, cod);
  return detail::projected_adjoint(op, dom, cod);
}

// op* restricted to cod, landing in the full domain chain space.
template <class T>
LinearOperator<T> ambient_adjoint_on(const LinearOperator<T>& op, const Subspace<T>& cod) {
  if (cod.ambient_dim() != op.matrix.rows()) throw AmbientMismatch("ambient_adjoint_on: shape mismatch");
  return {Space<T>{op.codomain.chain, cod}, op.domain, Matrix<T>(op.matrix.transpose() * cod.basis())};
}

template <class T>
struct ChainLevelData {
  int n = 0;
  Subspace<T> inf, sup, edge_span;
  Subspace<T> a_comp, b_comp, e_comp;
};

enum class Carrier { ambient, inf, sup };

inline const char* carrier_name(Carrier c) {
  switch (c) {
    case Carrier::ambient: return "ambient";
    case Carrier::inf: return "inf";
    case Carrier::sup: return "sup";
  }
  return "?";
}

// A hypergraph with a validated weight: its closure, boundary maps and the
// Inf/Sup levels, computed once for every degree in [-1, top + margin].
template <class T>
class HypergraphChains {
 public:
  static constexpr int kMargin = 4;

  HypergraphChains(const Hypergraph& h, const Weight& phi)
      : h_(h), phi_(phi), k_(std::make_shared<const SimplicialComplex>(closure(h))) {
    require_valid_weight(*k_, phi_);
    top_ = k_->top_dim();
    for (int n = 0; n <= max_degree() + 1; ++n) boundaries_.push_back(boundary_matrix<T>(*k_, n, phi_));
    for (int n = -1; n <= max_degree() + 1; ++n) edge_spans_.push_back(make_edge_span(n));
    for (int n = -1; n <= max_degree(); ++n) levels_.push_back(make_level(n));
  }

  const Hypergraph& hypergraph() const { return h_; }
  const Weight& weight() const { return phi_; }
  const std::shared_ptr<const SimplicialComplex>& complex() const { return k_; }
  int top_dim() const { return top_; }
  int max_degree() const { return top_ + kMargin; }

  ChainBasis basis(int n) const { return ChainBasis{k_, n}; }
  std::size_t ambient_dim(int n) const { return n < 0 ? 0 : k_->count(n); }

  // ∂ᵠ_n from degree n to degree n-1.
  const Matrix<T>& boundary_matrix_at(int n) const {
    check_degree(n, 0, max_degree() + 1);
    return boundaries_[static_cast<std::size_t>(n)];
  }

  LinearOperator<T> boundary_op(int n) const {
    return {Space<T>{basis(n), {}}, Space<T>{basis(n - 1), {}}, boundary_matrix_at(n)};
  }

  const Subspace<T>& edge_span(int n) const {
    check_degree(n, -1, max_degree() + 1);
    return edge_spans_[static_cast<std::size_t>(n + 1)];
  }

  const ChainLevelData<T>& level(int n) const {
    check_degree(n, -1, max_degree());
    return levels_[static_cast<std::size_t>(n + 1)];
  }

  Subspace<T> carrier_space(Carrier c, int n) const {
    switch (c) {
      case Carrier::inf: return level(n).inf;
      case Carrier::sup: return level(n).sup;
      default: return Subspace<T>::whole(ambient_dim(n));
    }
  }

  // ∂ᵠ_n(X) ⊆ Y with X = ⊥(Inf_n), Y = ⊥(Inf_{n-1}) for inf and X = E_n, Y = E_{n-1} for sup.
  bool complement_condition(int n, Carrier which) const {
    if (n < 0) return true;
    Subspace<T> src, dst;
    if (which == Carrier::inf) {
      src = orthogonal_complement(level(n).inf);
      dst = orthogonal_complement(level(n - 1).inf);
    } else if (which == Carrier::sup) {
      src = level(n).e_comp;
      dst = level(n - 1).e_comp;
    } else {
      return true;
    }
    if (src.dim() == 0) return true;
    return contains(dst, image(boundary_matrix_at(n), src));
  }

 private:
  void check_degree(int n, int lo, int hi) const {
    if (n < lo || n > hi) throw std::out_of_range("degree " + std::to_string(n) + " outside computed range");
  }

  Subspace<T> make_edge_span(int n) const {
    std::vector<std::size_t> idx;
    if (n >= 0)
      for (const auto& e : h_.edges_of_dim(n)) idx.push_back(k_->index_of(e));
    return Subspace<T>::coordinate(ambient_dim(n), idx);
  }

  ChainLevelData<T> make_level(int n) const {
    ChainLevelData<T> d;
    d.n = n;
    d.edge_span = edge_span(n);
    if (n <= 0)
      d.inf = d.edge_span;
    else
      d.inf = subspace_intersection(d.edge_span, preimage(boundary_matrix_at(n), edge_span(n - 1)));
    if (n >= 0)
      d.sup = subspace_sum(d.edge_span, image(boundary_matrix_at(n + 1), edge_span(n + 1)));
    else
      d.sup = d.edge_span;
    d.a_comp = orthogonal_complement_in(d.inf, d.edge_span);
    d.b_comp = orthogonal_complement_in(d.edge_span, d.sup);
    d.e_comp = orthogonal_complement(d.sup);
    return d;
  }

  Hypergraph h_;
  Weight phi_;
  std::shared_ptr<const SimplicialComplex> k_;
  int top_ = -1;
  std::vector<Matrix<T>> boundaries_;
  std::vector<Subspace<T>> edge_spans_;
  std::vector<ChainLevelData<T>> levels_;
};

template <class T>
ChainLevelData<T> chain_level(const Hypergraph& h, int n, const Weight& phi) {
  HypergraphChains<T> c(h, phi);
  if (n > c.max_degree()) {
    ChainLevelData<T> empty;
    empty.n = n;
    return empty;
  }
  return c.level(n);
}

template <class T = Rational>
bool check_complement_condition(const Hypergraph& h, int n, const Weight& phi, Carrier which) {
  HypergraphChains<T> c(h, phi);
  if (n > c.max_degree()) return true;
  return c.complement_condition(n, which);
}

}  // namespace hodgehyper
