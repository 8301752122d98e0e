#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"

namespace hodgehyper {

using Vertex = std::string;

// Natural order: digit runs compare numerically, so v2 < v10. Ties fall back to
// plain string comparison, which keeps the order total.
inline int compare_vertices(const Vertex& a, const Vertex& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const bool da = std::isdigit(static_cast<unsigned char>(a[i]));
    const bool db = std::isdigit(static_cast<unsigned char>(b[j]));
    if (da && db) {
      std::size_t ie = i, je = j;
      while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie]))) ++ie;
      while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je]))) ++je;
      std::size_t is = i, js = j;
      while (is + 1 < ie && a[is] == '0') ++is;
      while (js + 1 < je && b[js] == '0') ++js;
      if (ie - is != je - js) return ie - is < je - js ? -1 : 1;
      for (; is < ie; ++is, ++js)
        if (a[is] != b[js]) return a[is] < b[js] ? -1 : 1;
      i = ie;
      j = je;
    } else {
      if (a[i] != b[j]) return static_cast<unsigned char>(a[i]) < static_cast<unsigned char>(b[j]) ? -1 : 1;
      ++i;
      ++j;
    }
  }
  if (i < a.size() || j < b.size()) return i < a.size() ? 1 : -1;
  return a == b ? 0 : (a < b ? -1 : 1);
}

struct VertexLess {
  bool operator()(const Vertex& a, const Vertex& b) const { return compare_vertices(a, b) < 0; }
};

using VertexSet = std::set<Vertex, VertexLess>;

// A nonempty vertex set stored in increasing order. Simplices order by
// dimension first, then lexicographically.
class Simplex {
 public:
  Simplex() = default;
  explicit Simplex(std::vector<Vertex> vs) : v_(std::move(vs)) {
    if (v_.empty()) throw InvalidHypergraph("empty simplex");
    std::sort(v_.begin(), v_.end(), VertexLess{});
    for (std::size_t i = 1; i < v_.size(); ++i)
      if (compare_vertices(v_[i - 1], v_[i]) == 0) throw InvalidHypergraph("repeated vertex " + v_[i]);
  }
  Simplex(std::initializer_list<Vertex> vs) : Simplex(std::vector<Vertex>(vs)) {}

  int dim() const { return static_cast<int>(v_.size()) - 1; }
  std::size_t size() const { return v_.size(); }
  const std::vector<Vertex>& vertices() const { return v_; }
  const Vertex& operator[](std::size_t i) const { return v_[i]; }

  // d_i: delete the i-th vertex. Undefined for 0-simplices.
  Simplex face(std::size_t i) const {
    Simplex s;
    s.v_ = v_;
    s.v_.erase(s.v_.begin() + static_cast<std::ptrdiff_t>(i));
    return s;
  }

  bool is_face_of(const Simplex& other) const {
    return std::includes(other.v_.begin(), other.v_.end(), v_.begin(), v_.end(), VertexLess{});
  }

  std::string str() const {
    std::string out;
    for (const auto& x : v_) {
      if (!out.empty()) out += ' ';
      out += x;
    }
    return out;
  }

  friend bool operator==(const Simplex& a, const Simplex& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Simplex& a, const Simplex& b) { return !(a == b); }
  friend bool operator<(const Simplex& a, const Simplex& b) {
    if (a.v_.size() != b.v_.size()) return a.v_.size() < b.v_.size();
    return std::lexicographical_compare(a.v_.begin(), a.v_.end(), b.v_.begin(), b.v_.end(), VertexLess{});
  }

 private:
  std::vector<Vertex> v_;
};

using SimplexSet = std::set<Simplex>;

// Finite set of hyperedges; the vertex set is derived from them.
class Hypergraph {
 public:
  Hypergraph() = default;
  explicit Hypergraph(const std::vector<Simplex>& edges) {
    for (const auto& e : edges)
      if (!edges_.insert(e).second) throw InvalidHypergraph("duplicate hyperedge {" + e.str() + "}");
  }
  explicit Hypergraph(SimplexSet edges) : edges_(std::move(edges)) {}
  Hypergraph(std::initializer_list<Simplex> edges) : Hypergraph(std::vector<Simplex>(edges)) {}

  const SimplexSet& edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  bool contains(const Simplex& s) const { return edges_.count(s) > 0; }

  VertexSet vertex_set() const {
    VertexSet vs;
    for (const auto& e : edges_) vs.insert(e.vertices().begin(), e.vertices().end());
    return vs;
  }

  int top_dim() const { return edges_.empty() ? -1 : edges_.rbegin()->dim(); }

  std::vector<Simplex> edges_of_dim(int n) const {
    std::vector<Simplex> out;
    for (const auto& e : edges_)
      if (e.dim() == n) out.push_back(e);
    return out;
  }

  bool is_simplicial() const {
    for (const auto& e : edges_)
      if (e.dim() > 0)
        for (std::size_t i = 0; i < e.size(); ++i)
          if (!contains(e.face(i))) return false;
    return true;
  }

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) { return a.edges_ == b.edges_; }

 private:
  SimplexSet edges_;
};

// Subset-closed hypergraph with simplices indexed per dimension.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  explicit SimplicialComplex(const Hypergraph& h) : h_(h) {
    if (!h.is_simplicial()) throw InvalidHypergraph("hypergraph is not closed under faces");
    for (const auto& s : h.edges()) {
      auto d = static_cast<std::size_t>(s.dim());
      if (by_dim_.size() <= d) by_dim_.resize(d + 1);
      index_[s] = by_dim_[d].size();
      by_dim_[d].push_back(s);
    }
  }

  const Hypergraph& as_hypergraph() const { return h_; }
  int top_dim() const { return h_.top_dim(); }

  const std::vector<Simplex>& simplices(int n) const {
    static const std::vector<Simplex> none;
    if (n < 0 || static_cast<std::size_t>(n) >= by_dim_.size()) return none;
    return by_dim_[static_cast<std::size_t>(n)];
  }
  std::size_t count(int n) const { return simplices(n).size(); }

  // Position of s among the simplices of its dimension.
  std::size_t index_of(const Simplex& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) throw InvalidHypergraph("simplex {" + s.str() + "} not in complex");
    return it->second;
  }
  bool contains(const Simplex& s) const { return index_.count(s) > 0; }

 private:
  Hypergraph h_;
  std::vector<std::vector<Simplex>> by_dim_;
  std::map<Simplex, std::size_t> index_;
};

inline void add_nonempty_subsets(const Simplex& s, SimplexSet& out) {
  const auto& v = s.vertices();
  const std::size_t k = v.size();
  for (unsigned long mask = 1; mask < (1ul << k); ++mask) {
    std::vector<Vertex> sub;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (1ul << i)) sub.push_back(v[i]);
    out.insert(Simplex(std::move(sub)));
  }
}

inline SimplicialComplex closure(const Hypergraph& h) {
  SimplexSet all;
  for (const auto& e : h.edges()) {
    if (e.size() > 20) throw InvalidHypergraph("hyperedge too large to close: {" + e.str() + "}");
    add_nonempty_subsets(e, all);
  }
  return SimplicialComplex(Hypergraph(std::move(all)));
}

struct Complement {
  Hypergraph edges;
  // false when some vertex of the original hypergraph lies in no complement edge
  bool covers_vertex_set = true;
};

inline Complement complement(const Hypergraph& h) {
  SimplexSet out;
  const auto k = closure(h);
  for (const auto& s : k.as_hypergraph().edges())
    if (!h.contains(s)) out.insert(s);
  Complement c{Hypergraph(std::move(out)), true};
  c.covers_vertex_set = c.edges.vertex_set() == h.vertex_set();
  return c;
}

// Rename vertices through a map; unmapped vertices keep their label.
inline Hypergraph relabel(const Hypergraph& h, const std::map<Vertex, Vertex>& names) {
  std::vector<Simplex> out;
  for (const auto& e : h.edges()) {
    std::vector<Vertex> vs;
    for (const auto& v : e.vertices()) {
      auto it = names.find(v);
      vs.push_back(it == names.end() ? v : it->second);
    }
    out.emplace_back(std::move(vs));
  }
  return Hypergraph(out);
}

inline Hypergraph disjoint_union(const Hypergraph& a, const Hypergraph& b) {
  for (const auto& v : a.vertex_set())
    if (b.vertex_set().count(v)) throw InvalidHypergraph("disjoint_union: shared vertex " + v);
  SimplexSet all = a.edges();
  all.insert(b.edges().begin(), b.edges().end());
  return Hypergraph(std::move(all));
}

}  // namespace hodgehyper
