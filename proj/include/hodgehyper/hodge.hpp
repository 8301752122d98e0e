#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <vector>

#include "chains.hpp"

namespace hodgehyper {

template <class T>
struct LaplacianBundle {
  int n = 0;
  Carrier carrier = Carrier::ambient;
  LinearOperator<T> full, up, down;
};

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

inline bool all_pass(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

template <class T>
struct HomologyReport {
  int n = 0;
  int betti_embedded = 0;
  int betti_complex = 0;
  int ker_inf_dim = 0, ker_sup_dim = 0, ker_ambient_dim = 0;
  int quotient_dim = 0;
  Subspace<T> harmonic_inf_basis, harmonic_sup_basis, harmonic_ambient_basis;
};

template <class T>
struct HodgeSummands {
  int n = 0;
  Subspace<T> common, ker_s_star, coker_s_star, boundary_part, coboundary_part;
};

struct SStarAnalysis {
  int rank = 0;
  int ker_dim = 0;
  int coker_dim = 0;
};

// Integers and identity checks for one degree; the unit of the hodge report.
struct HodgeRecord {
  int n = 0;
  int betti_embedded = 0, betti_complex = 0;
  int dim_common = 0, dim_ker_s_star = 0, dim_coker_s_star = 0;
  std::array<int, 4> summand_dims_ambient{}, summand_dims_sup{};
  std::vector<Check> checks;
};

namespace detail {

// Kernel vectors given in the coordinates of v, returned in ambient coordinates.
template <class T>
Subspace<T> lift(const Subspace<T>& v, const Matrix<T>& coords) {
  if constexpr (scalar_traits<T>::exact)
    return Subspace<T>::from_basis(v.basis() * coords);
  else
    return Subspace<T>::span(v.basis() * coords);
}

inline int as_int(std::size_t x) { return static_cast<int>(x); }

}  // namespace detail

template <class T>
LaplacianBundle<T> assemble_laplacian(const HypergraphChains<T>& c, int n, Carrier carrier) {
  LaplacianBundle<T> b;
  b.n = n;
  b.carrier = carrier;
  Space<T> here{c.basis(n), {}};
  Matrix<T> up, down;
  if (carrier == Carrier::ambient) {
    const Matrix<T>& dn = c.boundary_matrix_at(n);
    const Matrix<T>& dn1 = c.boundary_matrix_at(n + 1);
    up = dn.transpose() * dn;
    down = dn1 * dn1.transpose();
  } else {
    const Subspace<T> lo = c.carrier_space(carrier, n - 1);
    const Subspace<T> mid = c.carrier_space(carrier, n);
    const Subspace<T> hi = c.carrier_space(carrier, n + 1);
    here.sub = mid;
    const auto dn = c.boundary_op(n);
    const auto dn1 = c.boundary_op(n + 1);
    const auto r_n = restrict(dn, mid, lo);
    const auto r_n1 = restrict(dn1, hi, mid);
    up = detail::projected_adjoint(dn, mid, lo).matrix * r_n.matrix;
    down = r_n1.matrix * detail::projected_adjoint(dn1, hi, mid).matrix;
  }
  b.full = {here, here, up + down};
  b.up = {here, here, std::move(up)};
  b.down = {here, here, std::move(down)};
  return b;
}

// Everything the decomposition identities need at each degree, built once.
template <class T>
class HodgeAnalysis {
 public:
  struct Degree {
    LaplacianBundle<T> ambient, inf, sup;
    Subspace<T> harmonic_ambient, harmonic_inf, harmonic_sup;  // ambient coordinates
  };

  HodgeAnalysis(const Hypergraph& h, const Weight& phi) : chains_(h, phi) {
    for (int n = 0; n <= max_degree(); ++n) degrees_.push_back(make_degree(n));
  }

  const HypergraphChains<T>& chains() const { return chains_; }
  int top_dim() const { return chains_.top_dim(); }
  // Laplacians are available up to here; beyond the closure they are 0×0.
  int max_degree() const { return chains_.max_degree() - 1; }

  const LaplacianBundle<T>& laplacian(int n, Carrier c) const {
    const Degree& d = at(n);
    return c == Carrier::ambient ? d.ambient : (c == Carrier::inf ? d.inf : d.sup);
  }

  const Subspace<T>& harmonic(int n, Carrier c) const {
    const Degree& d = at(n);
    return c == Carrier::ambient ? d.harmonic_ambient : (c == Carrier::inf ? d.harmonic_inf : d.harmonic_sup);
  }

  Subspace<T> cycles(int n) const { return kernel_basis(chains_.boundary_matrix_at(n)); }
  Subspace<T> boundaries(int n) const { return image(chains_.boundary_matrix_at(n + 1)); }

  // dim(𝔽(𝓗)_n ∩ Ker ∂ᵠ_n) - dim(𝔽(𝓗)_n ∩ ∂ᵠ_{n+1} 𝔽(𝓗)_{n+1})
  int quotient_betti(int n) const {
    const auto& span = chains_.edge_span(n);
    auto z = subspace_intersection(span, cycles(n));
    auto b = subspace_intersection(span, image(chains_.boundary_matrix_at(n + 1), chains_.edge_span(n + 1)));
    return detail::as_int(z.dim()) - detail::as_int(b.dim());
  }

  HomologyReport<T> homology(int n) const {
    HomologyReport<T> r;
    r.n = n;
    r.harmonic_inf_basis = canonical(harmonic(n, Carrier::inf));
    r.harmonic_sup_basis = canonical(harmonic(n, Carrier::sup));
    r.harmonic_ambient_basis = canonical(harmonic(n, Carrier::ambient));
    r.ker_inf_dim = detail::as_int(r.harmonic_inf_basis.dim());
    r.ker_sup_dim = detail::as_int(r.harmonic_sup_basis.dim());
    r.ker_ambient_dim = detail::as_int(r.harmonic_ambient_basis.dim());
    r.quotient_dim = quotient_betti(n);
    if (r.ker_inf_dim != r.ker_sup_dim || r.ker_inf_dim != r.quotient_dim)
      throw InternalInconsistency("betti disagreement at degree " + std::to_string(n) + ": inf kernel " +
                                  std::to_string(r.ker_inf_dim) + ", sup kernel " + std::to_string(r.ker_sup_dim) +
                                  ", quotient " + std::to_string(r.quotient_dim));
    r.betti_embedded = r.ker_inf_dim;
    r.betti_complex = r.ker_ambient_dim;
    return r;
  }

  HodgeSummands<T> summands(int n) const {
    HodgeSummands<T> s;
    s.n = n;
    const auto& ker_l = harmonic(n, Carrier::ambient);
    const auto& lvl = chains_.level(n);
    s.common = subspace_intersection(ker_l, lvl.inf);
    const auto ker_l_sup = subspace_intersection(ker_l, lvl.sup);
    s.ker_s_star = orthogonal_complement_in(ker_l_sup, harmonic(n, Carrier::sup));
    s.coker_s_star = orthogonal_complement_in(ker_l_sup, ker_l);
    s.boundary_part = boundaries(n);
    s.coboundary_part = image(Matrix<T>(chains_.boundary_matrix_at(n).transpose()));
    return s;
  }

  std::array<Subspace<T>, 4> ambient_four(int n) const {
    auto s = summands(n);
    return {s.common, s.coker_s_star, s.boundary_part, s.coboundary_part};
  }

  std::array<Subspace<T>, 4> sup_four(int n) const { return sup_four(summands(n)); }

  std::array<Subspace<T>, 4> sup_four(const HodgeSummands<T>& s) const {
    const int n = s.n;
    const auto& sup = chains_.level(n).sup;
    auto from_above = image(chains_.boundary_matrix_at(n + 1), chains_.level(n + 1).sup);
    auto adj = detail::projected_adjoint(chains_.boundary_op(n), sup, chains_.level(n - 1).sup);
    auto from_below = Subspace<T>::span(sup.basis() * adj.matrix);
    return {s.common, s.ker_s_star, from_above, from_below};
  }

  // Rank of H_n(𝓗, φ) -> H_n(Δ𝓗, φ) on cycle/boundary quotients.
  SStarAnalysis s_star(int n) const {
    const auto bd = boundaries(n);
    const auto z_inf = subspace_intersection(cycles(n), chains_.level(n).inf);
    SStarAnalysis a;
    a.rank = detail::as_int(subspace_sum(z_inf, bd).dim()) - detail::as_int(bd.dim());
    a.ker_dim = detail::as_int(harmonic(n, Carrier::inf).dim()) - a.rank;
    a.coker_dim = detail::as_int(harmonic(n, Carrier::ambient).dim()) - a.rank;
    return a;
  }

  std::vector<Check> s_star_checks(int n, const HodgeSummands<T>& s) const {
    std::vector<Check> out;
    const auto a = s_star(n);
    const auto bd = boundaries(n);
    out.push_back({"s_star_kernel_matches_summand", a.ker_dim == detail::as_int(s.ker_s_star.dim()),
                   std::to_string(a.ker_dim) + " vs " + std::to_string(s.ker_s_star.dim())});
    out.push_back({"s_star_cokernel_matches_summand", a.coker_dim == detail::as_int(s.coker_s_star.dim()),
                   std::to_string(a.coker_dim) + " vs " + std::to_string(s.coker_s_star.dim())});
    out.push_back({"s_star_injective_on_common", subspace_sum(s.common, bd).dim() == s.common.dim() + bd.dim(), ""});
    out.push_back({"s_star_vanishes_on_kernel_summand", contains(bd, s.ker_s_star), ""});
    const auto z_sup = subspace_intersection(cycles(n), chains_.level(n).sup);
    const int rank_sup = detail::as_int(subspace_sum(z_sup, bd).dim()) - detail::as_int(bd.dim());
    out.push_back({"s_star_rank_same_from_sup", rank_sup == a.rank,
                   std::to_string(rank_sup) + " vs " + std::to_string(a.rank)});
    return out;
  }

  std::vector<Check> diagram_checks(int n) const {
    std::vector<Check> out;
    const auto& lvl = chains_.level(n);
    const auto& ker_l = harmonic(n, Carrier::ambient);
    const auto& ker_inf = harmonic(n, Carrier::inf);
    const auto& ker_sup = harmonic(n, Carrier::sup);
    const auto l_inf = subspace_intersection(ker_l, lvl.inf);
    const auto l_span = subspace_intersection(ker_l, lvl.edge_span);
    const auto l_sup = subspace_intersection(ker_l, lvl.sup);
    const auto sup_inf = subspace_intersection(ker_sup, lvl.inf);
    auto dims = [](std::size_t a, std::size_t b) { return std::to_string(a) + " vs " + std::to_string(b); };

    out.push_back({"harmonic_inf_part_equals_edge_part", l_inf.dim() == l_span.dim(), dims(l_inf.dim(), l_span.dim())});
    out.push_back({"harmonic_edge_part_equals_sup_part", l_span.dim() == l_sup.dim(), dims(l_span.dim(), l_sup.dim())});
    out.push_back({"sup_harmonic_lies_in_inf", sup_inf.dim() == ker_sup.dim(), dims(sup_inf.dim(), ker_sup.dim())});
    out.push_back({"sup_harmonic_inf_part_matches_inf_harmonic", sup_inf.dim() == ker_inf.dim(),
                   dims(sup_inf.dim(), ker_inf.dim())});
    out.push_back({"sup_harmonic_inf_part_in_inf_harmonic", contains(ker_inf, sup_inf), ""});
    out.push_back({"harmonic_inf_part_in_inf_harmonic", contains(ker_inf, l_inf), ""});
    out.push_back({"harmonic_sup_part_in_sup_harmonic", contains(ker_sup, l_sup), ""});

    const auto z = cycles(n);
    const auto split = subspace_sum(subspace_intersection(z, lvl.inf),
                                    image(chains_.boundary_matrix_at(n + 1), chains_.edge_span(n + 1)));
    out.push_back({"sup_cycles_split", same_subspace(subspace_intersection(z, lvl.sup), split), ""});

    const auto cocycles = kernel_basis(Matrix<T>(chains_.boundary_matrix_at(n + 1).transpose()));
    out.push_back({"harmonic_is_cycle_and_cocycle", same_subspace(ker_l, subspace_intersection(z, cocycles)), ""});
    return out;
  }

  std::vector<Check> chain_checks(int n) const {
    std::vector<Check> out;
    const auto& l = chains_.level(n);
    const auto amb = chains_.ambient_dim(n);
    bool nested = contains(l.edge_span, l.inf) && contains(l.sup, l.edge_span);
    bool split = l.inf.dim() + l.a_comp.dim() == l.edge_span.dim() &&
                 l.edge_span.dim() + l.b_comp.dim() == l.sup.dim() && l.sup.dim() + l.e_comp.dim() == amb;
    bool orth = mutually_orthogonal(l.inf, l.a_comp) && mutually_orthogonal(l.edge_span, l.b_comp) &&
                mutually_orthogonal(l.sup, l.e_comp);
    out.push_back({"inf_span_sup_nested", nested, ""});
    out.push_back({"complements_reassemble", split && orth, ""});
    const auto sq = chains_.boundary_matrix_at(n) * chains_.boundary_matrix_at(n + 1);
    out.push_back({"boundary_squares_to_zero", numerically_zero(sq), ""});
    return out;
  }

  HodgeRecord record(int n) const {
    HodgeRecord r;
    r.n = n;
    auto h = homology(n);
    auto s = summands(n);
    r.betti_embedded = h.betti_embedded;
    r.betti_complex = h.betti_complex;
    r.dim_common = detail::as_int(s.common.dim());
    r.dim_ker_s_star = detail::as_int(s.ker_s_star.dim());
    r.dim_coker_s_star = detail::as_int(s.coker_s_star.dim());
    std::array<Subspace<T>, 4> amb{s.common, s.coker_s_star, s.boundary_part, s.coboundary_part};
    auto sup = sup_four(s);
    for (int i = 0; i < 4; ++i) {
      r.summand_dims_ambient[i] = detail::as_int(amb[i].dim());
      r.summand_dims_sup[i] = detail::as_int(sup[i].dim());
    }

    auto& c = r.checks;
    c.push_back({"betti_triple_agreement", true,
                 "inf " + std::to_string(h.ker_inf_dim) + ", sup " + std::to_string(h.ker_sup_dim) + ", quotient " +
                     std::to_string(h.quotient_dim)});
    c.push_back({"two_summand_embedded", r.dim_common + r.dim_ker_s_star == r.betti_embedded, ""});
    c.push_back({"two_summand_complex", r.dim_common + r.dim_coker_s_star == r.betti_complex, ""});
    c.push_back({"summands_orthogonal",
                 mutually_orthogonal(s.common, s.ker_s_star) && mutually_orthogonal(s.common, s.coker_s_star), ""});
    c.push_back({"ambient_four_sum", sum(r.summand_dims_ambient) == detail::as_int(chains_.ambient_dim(n)), ""});
    c.push_back({"ambient_four_orthogonal", pairwise_orthogonal(amb), ""});
    c.push_back({"sup_four_sum", sum(r.summand_dims_sup) == detail::as_int(chains_.level(n).sup.dim()), ""});
    c.push_back({"sup_four_orthogonal", pairwise_orthogonal(sup), ""});
    for (auto& x : s_star_checks(n, s)) c.push_back(std::move(x));
    for (auto& x : diagram_checks(n)) c.push_back(std::move(x));
    for (auto& x : chain_checks(n)) c.push_back(std::move(x));
    return r;
  }

 private:
  const Degree& at(int n) const {
    if (n < 0 || n > max_degree()) throw std::out_of_range("degree " + std::to_string(n) + " outside computed range");
    return degrees_[static_cast<std::size_t>(n)];
  }

  Degree make_degree(int n) const {
    Degree d;
    d.ambient = assemble_laplacian(chains_, n, Carrier::ambient);
    d.inf = assemble_laplacian(chains_, n, Carrier::inf);
    d.sup = assemble_laplacian(chains_, n, Carrier::sup);
    d.harmonic_ambient = kernel_basis(d.ambient.full.matrix);
    d.harmonic_inf = detail::lift(chains_.level(n).inf, kernel_matrix(d.inf.full.matrix));
    d.harmonic_sup = detail::lift(chains_.level(n).sup, kernel_matrix(d.sup.full.matrix));
    return d;
  }

  static Subspace<T> canonical(const Subspace<T>& v) { return Subspace<T>::from_basis(canonical_basis(v)); }

  static int sum(const std::array<int, 4>& a) { return a[0] + a[1] + a[2] + a[3]; }

  static bool pairwise_orthogonal(const std::array<Subspace<T>, 4>& parts) {
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (!mutually_orthogonal(parts[i], parts[j])) return false;
    return true;
  }

  HypergraphChains<T> chains_;
  std::vector<Degree> degrees_;
};

// Free-function entry points; each builds the analysis for one call.

template <class T = Rational>
LaplacianBundle<T> laplacian(const Hypergraph& h, int n, const Weight& phi, Carrier carrier) {
  HypergraphChains<T> c(h, phi);
  if (n < 0 || n >= c.max_degree()) throw std::out_of_range("laplacian: degree out of range");
  return assemble_laplacian(c, n, carrier);
}

template <class T = Rational>
HomologyReport<T> embedded_homology(const Hypergraph& h, int n, const Weight& phi) {
  return HodgeAnalysis<T>(h, phi).homology(n);
}

template <class T = Rational>
HodgeSummands<T> hodge_summands(const Hypergraph& h, int n, const Weight& phi) {
  return HodgeAnalysis<T>(h, phi).summands(n);
}

template <class T = Rational>
std::array<Subspace<T>, 4> ambient_four_decomposition(const Hypergraph& h, int n, const Weight& phi) {
  return HodgeAnalysis<T>(h, phi).ambient_four(n);
}

template <class T = Rational>
std::array<Subspace<T>, 4> sup_four_decomposition(const Hypergraph& h, int n, const Weight& phi) {
  return HodgeAnalysis<T>(h, phi).sup_four(n);
}

template <class T = Rational>
SStarAnalysis s_star_analysis(const Hypergraph& h, int n, const Weight& phi) {
  return HodgeAnalysis<T>(h, phi).s_star(n);
}

template <class T = Rational>
std::vector<Check> verify_diagram_isos(const Hypergraph& h, int n, const Weight& phi) {
  return HodgeAnalysis<T>(h, phi).diagram_checks(n);
}

// ---------------------------------------------------------------------------
// Morphisms and induced chain maps

struct HypergraphMorphism {
  Hypergraph source, target;
  std::map<Vertex, Vertex, VertexLess> vertex_map;

  Vertex operator()(const Vertex& v) const {
    auto it = vertex_map.find(v);
    if (it == vertex_map.end()) throw NotAMorphism("vertex " + v + " has no image");
    return it->second;
  }
};

inline void validate_morphism(const HypergraphMorphism& rho) {
  for (const auto& e : rho.source.edges()) {
    VertexSet img;
    for (const auto& v : e.vertices()) img.insert(rho(v));
    Simplex s(std::vector<Vertex>(img.begin(), img.end()));
    if (!rho.target.contains(s)) throw NotAMorphism("image of {" + e.str() + "} is {" + s.str() + "}, not a hyperedge");
  }
}

inline HypergraphMorphism compose(const HypergraphMorphism& second, const HypergraphMorphism& first) {
  HypergraphMorphism out{first.source, second.target, {}};
  for (const auto& [v, w] : first.vertex_map) out.vertex_map[v] = second(w);
  return out;
}

// The inclusion 𝓗 -> Δ𝓗.
inline HypergraphMorphism inclusion_into_closure(const Hypergraph& h) {
  HypergraphMorphism rho{h, closure(h).as_hypergraph(), {}};
  for (const auto& v : h.vertex_set()) rho.vertex_map[v] = v;
  return rho;
}

// Per-degree matrices of the induced chain map between closures. Images are
// re-sorted with the sign of the sorting permutation; collapsed simplices map to 0.
template <class T = Rational>
std::vector<LinearOperator<T>> induced_chain_map(const HypergraphMorphism& rho) {
  validate_morphism(rho);
  auto src = std::make_shared<const SimplicialComplex>(closure(rho.source));
  auto tgt = std::make_shared<const SimplicialComplex>(closure(rho.target));
  std::vector<LinearOperator<T>> out;
  for (int k = 0; k <= std::max(src->top_dim(), 0); ++k) {
    Matrix<T> m(tgt->count(k), src->count(k));
    const auto& cols = src->simplices(k);
    for (std::size_t c = 0; c < cols.size(); ++c) {
      std::vector<Vertex> img;
      for (const auto& v : cols[c].vertices()) img.push_back(rho(v));
      int inversions = 0;
      bool degenerate = false;
      for (std::size_t i = 0; i < img.size(); ++i)
        for (std::size_t j = i + 1; j < img.size(); ++j) {
          int cmp = compare_vertices(img[i], img[j]);
          if (cmp == 0) degenerate = true;
          if (cmp > 0) ++inversions;
        }
      if (degenerate) continue;
      m(tgt->index_of(Simplex(img)), c) = T(inversions % 2 ? -1 : 1);
    }
    out.push_back({Space<T>{ChainBasis{src, k}, {}}, Space<T>{ChainBasis{tgt, k}, {}}, std::move(m)});
  }
  return out;
}

// ∂' F_k = F_{k-1} ∂ in every degree, with the given weights on each side.
template <class T = Rational>
bool is_chain_map(const HypergraphMorphism& rho, const Weight& phi_src = TrivialWeight{},
                  const Weight& phi_tgt = TrivialWeight{}) {
  auto f = induced_chain_map<T>(rho);
  HypergraphChains<T> a(rho.source, phi_src), b(rho.target, phi_tgt);
  for (std::size_t k = 1; k < f.size(); ++k) {
    const int kk = static_cast<int>(k);
    Matrix<T> lhs = b.boundary_matrix_at(kk) * f[k].matrix;
    Matrix<T> rhs = f[k - 1].matrix * a.boundary_matrix_at(kk);
    if (!numerically_zero(Matrix<T>(lhs - rhs))) return false;
  }
  return true;
}

// Rank of the induced map on embedded homology in degree n.
template <class T = Rational>
int induced_homology_rank(const HypergraphMorphism& rho, int n, const Weight& phi_src = TrivialWeight{},
                          const Weight& phi_tgt = TrivialWeight{}) {
  if (!is_chain_map<T>(rho, phi_src, phi_tgt)) throw NotAMorphism("weighted chain-map square does not commute");
  auto f = induced_chain_map<T>(rho);
  HypergraphChains<T> a(rho.source, phi_src), b(rho.target, phi_tgt);
  if (n < 0 || n > a.top_dim() || n > b.top_dim()) return 0;
  auto z = subspace_intersection(kernel_basis(a.boundary_matrix_at(n)), a.level(n).inf);
  const auto& tgt_n = b.level(n);
  auto bd = image(b.boundary_matrix_at(n + 1), b.level(n + 1).inf);
  auto fz = image(f[static_cast<std::size_t>(n)].matrix, z);
  if (!contains(tgt_n.inf, fz)) throw InternalInconsistency("induced map leaves the infimum complex");
  return detail::as_int(subspace_sum(fz, bd).dim()) - detail::as_int(bd.dim());
}

}  // namespace hodgehyper
