#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <variant>

#include <json.hpp>

#include "errors.hpp"
#include "hypergraph.hpp"
#include "scalar.hpp"

namespace hodgehyper {

struct TrivialWeight {};
struct ZeroWeight {};

// φ(σ, τ) = scale · w(σ) / w(τ) with w > 0 on every simplex of the closure.
struct EvaluationWeight {
  std::map<Simplex, Rational> values;
  Rational scale = 1;
};

// Explicit φ(σ, d_i σ) for every codimension-one pair.
struct TableWeight {
  std::map<std::pair<Simplex, Simplex>, Rational> values;
};

using Weight = std::variant<TrivialWeight, ZeroWeight, EvaluationWeight, TableWeight>;

inline std::string pair_key(const Simplex& s, const Simplex& t) { return s.str() + "|" + t.str(); }

inline const char* kind_name(const Weight& w) {
  static const char* names[] = {"trivial", "zero", "evaluation", "table"};
  return names[w.index()];
}

// φ(σ, τ) for a codimension-one pair.
inline Rational weight_value(const Weight& phi, const Simplex& sigma, const Simplex& face) {
  return std::visit(
      [&](const auto& w) -> Rational {
        using W = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<W, TrivialWeight>) {
          return 1;
        } else if constexpr (std::is_same_v<W, ZeroWeight>) {
          return 0;
        } else if constexpr (std::is_same_v<W, EvaluationWeight>) {
          auto a = w.values.find(sigma), b = w.values.find(face);
          if (a == w.values.end()) throw InvalidWeight("evaluation weight has no value for {" + sigma.str() + "}");
          if (b == w.values.end()) throw InvalidWeight("evaluation weight has no value for {" + face.str() + "}");
          return Rational(w.scale * a->second / b->second);
        } else {
          auto it = w.values.find({sigma, face});
          if (it == w.values.end()) throw MissingPair(pair_key(sigma, face));
          return it->second;
        }
      },
      phi);
}

struct WeightViolation {
  Simplex sigma;
  std::size_t i = 0, j = 0;
  std::string str() const {
    return "({" + sigma.str() + "}, i=" + std::to_string(i) + ", j=" + std::to_string(j) + ")";
  }
};

struct WeightCheck {
  bool ok = true;
  std::optional<WeightViolation> violation;
  explicit operator bool() const { return ok; }
};

// For every σ of dimension >= 2 and j < i:
//   φ(d_i σ, d_j d_i σ) φ(σ, d_i σ) = φ(d_j σ, d_{i-1} d_j σ) φ(σ, d_j σ),
// where both sides reach the same face σ minus its i-th and j-th vertices.
inline WeightCheck validate_weight(const SimplicialComplex& k, const Weight& phi) {
  if (std::holds_alternative<TrivialWeight>(phi) || std::holds_alternative<ZeroWeight>(phi)) return {};
  if (const auto* ev = std::get_if<EvaluationWeight>(&phi)) {
    if (sgn(ev->scale) <= 0) throw InvalidWeight("evaluation weight scale C must be positive");
    for (const auto& s : k.as_hypergraph().edges()) {
      auto it = ev->values.find(s);
      if (it == ev->values.end()) throw InvalidWeight("evaluation weight has no value for {" + s.str() + "}");
      if (sgn(it->second) <= 0) throw InvalidWeight("evaluation weight is not positive at {" + s.str() + "}");
    }
    return {};
  }
  for (const auto& s : k.as_hypergraph().edges())
    if (s.dim() >= 1)
      for (std::size_t i = 0; i < s.size(); ++i) weight_value(phi, s, s.face(i));
  for (const auto& s : k.as_hypergraph().edges()) {
    if (s.dim() < 2) continue;
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = 0; j < i; ++j) {
        const Simplex di = s.face(i), dj = s.face(j);
        const Simplex lhs_face = di.face(j), rhs_face = dj.face(i - 1);
        if (lhs_face != rhs_face) throw InternalInconsistency("face identity failed on {" + s.str() + "}");
        Rational lhs = weight_value(phi, di, lhs_face) * weight_value(phi, s, di);
        Rational rhs = weight_value(phi, dj, rhs_face) * weight_value(phi, s, dj);
        if (lhs != rhs) return {false, WeightViolation{s, i, j}};
      }
  }
  return {};
}

// ---------------------------------------------------------------------------
// JSON form: {"kind": ..., "C": "p/q", "values": {...}}

namespace detail {

inline Simplex simplex_from_key(const std::string& key, const std::string& context) {
  std::istringstream ss(key);
  std::vector<Vertex> vs;
  for (std::string t; ss >> t;) vs.push_back(t);
  try {
    return Simplex(vs);
  } catch (const InvalidHypergraph& e) {
    throw ParseError("weight key \"" + context + "\": " + e.what());
  }
}

inline Rational rational_from_json(const nlohmann::json& v, const std::string& key) {
  try {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.dump());
    if (v.is_number_float()) return parse_rational(v.dump());
  } catch (const std::exception&) {
  }
  throw ParseError("weight key \"" + key + "\": value " + v.dump() + " is not a rational");
}

}  // namespace detail

inline Weight weight_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw ParseError("weight key \"kind\": missing or not a string");
  const auto kind = j["kind"].get<std::string>();
  if (kind == "trivial") return TrivialWeight{};
  if (kind == "zero") return ZeroWeight{};
  const auto values = j.value("values", nlohmann::json::object());
  if (!values.is_object()) throw ParseError("weight key \"values\": expected an object");
  if (kind == "evaluation") {
    EvaluationWeight w;
    if (j.contains("C")) w.scale = detail::rational_from_json(j["C"], "C");
    if (sgn(w.scale) <= 0) throw ParseError("weight key \"C\": must be positive");
    for (const auto& [key, v] : values.items()) {
      Rational q = detail::rational_from_json(v, key);
      if (sgn(q) <= 0) throw ParseError("weight key \"" + key + "\": evaluation values must be positive");
      if (!w.values.emplace(detail::simplex_from_key(key, key), q).second)
        throw ParseError("weight key \"" + key + "\": duplicate simplex");
    }
    return w;
  }
  if (kind == "table") {
    TableWeight w;
    for (const auto& [key, v] : values.items()) {
      auto bar = key.find('|');
      if (bar == std::string::npos) throw ParseError("weight key \"" + key + "\": expected \"sigma|tau\"");
      Simplex s = detail::simplex_from_key(key.substr(0, bar), key);
      Simplex t = detail::simplex_from_key(key.substr(bar + 1), key);
      if (t.dim() + 1 != s.dim() || !t.is_face_of(s))
        throw ParseError("weight key \"" + key + "\": tau must be a codimension-one face of sigma");
      if (!w.values.emplace(std::make_pair(s, t), detail::rational_from_json(v, key)).second)
        throw ParseError("weight key \"" + key + "\": duplicate pair");
    }
    return w;
  }
  throw ParseError("weight key \"kind\": unknown kind \"" + kind + "\"");
}

inline Weight parse_weight(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("weight file is not JSON: ") + e.what());
  }
  return weight_from_json(j);
}

inline nlohmann::ordered_json weight_to_json(const Weight& phi) {
  nlohmann::ordered_json j;
  j["kind"] = kind_name(phi);
  if (const auto* ev = std::get_if<EvaluationWeight>(&phi)) {
    j["C"] = ev->scale.get_str();
    auto& vals = j["values"] = nlohmann::ordered_json::object();
    for (const auto& [s, q] : ev->values) vals[s.str()] = q.get_str();
  } else if (const auto* tb = std::get_if<TableWeight>(&phi)) {
    auto& vals = j["values"] = nlohmann::ordered_json::object();
    for (const auto& [st, q] : tb->values) vals[pair_key(st.first, st.second)] = q.get_str();
  }
  return j;
}

}  // namespace hodgehyper
