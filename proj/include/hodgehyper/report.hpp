#pragma once

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hodge.hpp"
#include "spectra.hpp"

namespace hodgehyper {

using ordered_json = nlohmann::ordered_json;

inline ordered_json to_json(const HodgeRecord& r) {
  ordered_json j;
  j["n"] = r.n;
  j["betti_embedded"] = r.betti_embedded;
  j["betti_complex"] = r.betti_complex;
  j["dim_common"] = r.dim_common;
  j["dim_ker_s_star"] = r.dim_ker_s_star;
  j["dim_coker_s_star"] = r.dim_coker_s_star;
  j["summand_dims_ambient"] = r.summand_dims_ambient;
  j["summand_dims_sup"] = r.summand_dims_sup;
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks) {
    ordered_json cj;
    cj["name"] = c.name;
    cj["pass"] = c.pass;
    checks.push_back(cj);
  }
  j["checks"] = checks;
  return j;
}

inline ordered_json to_json(const EigenMultiset& m) {
  ordered_json a = ordered_json::array();
  for (const auto& [v, k] : m.entries) a.push_back(ordered_json::array({v, k}));
  return a;
}

inline ordered_json to_json(const SpectralRelation& r) {
  ordered_json j;
  j["relation_name"] = r.name;
  j["status"] = status_name(r.status);
  j["lhs"] = to_json(r.lhs);
  j["rhs"] = to_json(r.rhs);
  return j;
}

inline const char* kCsvHeader = "n,betti_embedded,betti_complex,dim_common,dim_ker_s,dim_coker_s";

inline std::string csv_row(const HodgeRecord& r) {
  std::ostringstream os;
  os << r.n << ',' << r.betti_embedded << ',' << r.betti_complex << ',' << r.dim_common << ',' << r.dim_ker_s_star
     << ',' << r.dim_coker_s_star;
  return os.str();
}

inline std::string csv_table(const std::vector<HodgeRecord>& rs) {
  std::string out = std::string(kCsvHeader) + "\n";
  for (const auto& r : rs) out += csv_row(r) + "\n";
  return out;
}

inline std::string text_line(const EigenMultiset& m) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < m.entries.size(); ++i)
    os << (i ? ", " : "") << '(' << m.entries[i].first << ',' << m.entries[i].second << ')';
  os << '}';
  return os.str();
}

inline std::string text_block(const HodgeRecord& r) {
  std::ostringstream os;
  os << "n=" << r.n << "  betti_embedded=" << r.betti_embedded << "  betti_complex=" << r.betti_complex
     << "  common=" << r.dim_common << "  ker_s*=" << r.dim_ker_s_star << "  coker_s*=" << r.dim_coker_s_star
     << '\n';
  auto dims = [&](const std::array<int, 4>& a) {
    return std::to_string(a[0]) + " " + std::to_string(a[1]) + " " + std::to_string(a[2]) + " " +
           std::to_string(a[3]);
  };
  os << "  ambient summands: " << dims(r.summand_dims_ambient) << '\n';
  os << "  sup summands:     " << dims(r.summand_dims_sup) << '\n';
  for (const auto& c : r.checks)
    if (!c.pass) os << "  FAIL " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << '\n';
  return os.str();
}

}  // namespace hodgehyper
