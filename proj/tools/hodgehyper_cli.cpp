#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include <hodgehyper/hodgehyper.hpp>

using namespace hodgehyper;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kInputError = 2 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string input, weight, degrees = "all", backend = "exact", output = "text", suite = "all", out;
  std::optional<std::uint64_t> seed;
  int count = 100;
  int max_len = -1;
  bool harmonic = false;
};

Hypergraph load_hypergraph(const Config& c) {
  if (c.input.empty()) throw UsageError("--input is required");
  return read_hypergraph(c.input);
}

Weight load_weight(const Config& c) {
  if (c.weight.empty()) return TrivialWeight{};
  return parse_weight(detail::slurp(c.weight));
}

// "all", "k", "a-b" or a comma list, each within [0, top].
std::vector<int> parse_degrees(const std::string& spec, int top) {
  std::vector<int> out;
  if (spec == "all") {
    for (int n = 0; n <= top; ++n) out.push_back(n);
    return out;
  }
  std::stringstream ss(spec);
  for (std::string part; std::getline(ss, part, ',');) {
    int lo = 0, hi = 0;
    try {
      if (auto dash = part.find('-'); dash != std::string::npos && dash > 0) {
        lo = std::stoi(part.substr(0, dash));
        hi = std::stoi(part.substr(dash + 1));
      } else {
        lo = hi = std::stoi(part);
      }
    } catch (const std::exception&) {
      throw UsageError("--degrees: cannot parse \"" + part + "\"");
    }
    if (lo < 0 || hi > top || lo > hi)
      throw UsageError("--degrees: " + part + " outside [0, " + std::to_string(top) + "]");
    for (int n = lo; n <= hi; ++n) out.push_back(n);
  }
  return out;
}

void require_choice(const std::string& flag, const std::string& value, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (value == a) return;
  throw UsageError(flag + ": unexpected value \"" + value + "\"");
}

template <class T>
ordered_json scalar_json(const T& x) {
  if constexpr (scalar_traits<T>::exact)
    return x.get_str();
  else
    return x;
}

// Basis vectors as {simplex: coefficient} over the nonzero entries.
template <class T>
ordered_json basis_json(const Subspace<T>& v, const std::vector<Simplex>& simplices) {
  ordered_json out = ordered_json::array();
  for (std::size_t j = 0; j < v.dim(); ++j) {
    ordered_json vec = ordered_json::object();
    for (std::size_t i = 0; i < simplices.size(); ++i)
      if (!near_zero(v.basis()(i, j))) vec[simplices[i].str()] = scalar_json(v.basis()(i, j));
    out.push_back(vec);
  }
  return out;
}

struct DegreeResult {
  HodgeRecord record;
  HomologyReport<Rational> exact_homology;
  std::optional<HomologyReport<double>> float_homology;
};

// Integer fields of two records, compared field by field.
std::vector<std::string> integer_mismatches(const HodgeRecord& a, const HodgeRecord& b) {
  std::vector<std::string> out;
  auto cmp = [&](const char* name, int x, int y) {
    if (x != y) out.push_back(std::string(name) + " exact=" + std::to_string(x) + " float=" + std::to_string(y));
  };
  cmp("betti_embedded", a.betti_embedded, b.betti_embedded);
  cmp("betti_complex", a.betti_complex, b.betti_complex);
  cmp("dim_common", a.dim_common, b.dim_common);
  cmp("dim_ker_s_star", a.dim_ker_s_star, b.dim_ker_s_star);
  cmp("dim_coker_s_star", a.dim_coker_s_star, b.dim_coker_s_star);
  for (int i = 0; i < 4; ++i) {
    cmp("summand_dims_ambient", a.summand_dims_ambient[i], b.summand_dims_ambient[i]);
    cmp("summand_dims_sup", a.summand_dims_sup[i], b.summand_dims_sup[i]);
  }
  return out;
}

ordered_json header(const std::string& command, const Config& c, const Weight& w) {
  ordered_json j;
  j["command"] = command;
  j["input"] = c.input;
  j["weight"] = kind_name(w);
  j["backend"] = c.backend;
  return j;
}

// Shared by betti and hodge: records per degree on the requested backend(s).
int run_records(const std::string& command, const Config& c) {
  require_choice("--backend", c.backend, {"exact", "float", "both"});
  require_choice("--output", c.output, {"json", "csv", "text"});
  const auto h = load_hypergraph(c);
  const auto w = load_weight(c);
  std::optional<HodgeAnalysis<Rational>> exact;
  std::optional<HodgeAnalysis<double>> approx;
  if (c.backend != "float") exact.emplace(h, w);
  if (c.backend != "exact") approx.emplace(h, w);
  const auto degrees = parse_degrees(c.degrees, closure(h).top_dim());

  std::vector<HodgeRecord> records;
  std::vector<std::string> mismatches;
  ordered_json rows = ordered_json::array();
  for (int n : degrees) {
    HodgeRecord r = exact ? exact->record(n) : approx->record(n);
    if (exact && approx)
      for (auto& m : integer_mismatches(r, approx->record(n))) mismatches.push_back("n=" + std::to_string(n) + " " + m);
    ordered_json row;
    if (command == "betti") {
      row["n"] = n;
      row["betti_embedded"] = r.betti_embedded;
      row["betti_complex"] = r.betti_complex;
      ordered_json cert;
      if (exact) {
        auto hr = exact->homology(n);
        cert["ker_inf"] = hr.ker_inf_dim;
        cert["ker_sup"] = hr.ker_sup_dim;
        cert["quotient"] = hr.quotient_dim;
      } else {
        auto hr = approx->homology(n);
        cert["ker_inf"] = hr.ker_inf_dim;
        cert["ker_sup"] = hr.ker_sup_dim;
        cert["quotient"] = hr.quotient_dim;
      }
      row["triple_agreement"] = cert;
    } else {
      row = to_json(r);
      if (c.harmonic) {
        const auto k = closure(h);
        const auto& simplices = k.simplices(n);
        ordered_json hb;
        if (exact) {
          auto hr = exact->homology(n);
          hb["inf"] = basis_json(hr.harmonic_inf_basis, simplices);
          hb["sup"] = basis_json(hr.harmonic_sup_basis, simplices);
          hb["ambient"] = basis_json(hr.harmonic_ambient_basis, simplices);
        } else {
          auto hr = approx->homology(n);
          hb["inf"] = basis_json(hr.harmonic_inf_basis, simplices);
          hb["sup"] = basis_json(hr.harmonic_sup_basis, simplices);
          hb["ambient"] = basis_json(hr.harmonic_ambient_basis, simplices);
        }
        row["harmonic_bases"] = hb;
      }
    }
    rows.push_back(row);
    records.push_back(std::move(r));
  }

  bool checks_pass = true;
  if (command == "hodge")
    for (const auto& r : records) checks_pass = checks_pass && all_pass(r.checks);

  if (c.output == "json") {
    auto j = header(command, c, w);
    j["degrees"] = rows;
    if (exact && approx) j["backend_mismatches"] = mismatches;
    std::cout << j.dump(2) << '\n';
  } else if (c.output == "csv") {
    std::cout << csv_table(records);
  } else {
    for (const auto& r : records) {
      if (command == "betti")
        std::cout << "n=" << r.n << "  betti_embedded=" << r.betti_embedded << "  betti_complex=" << r.betti_complex
                  << '\n';
      else
        std::cout << text_block(r);
    }
    for (const auto& m : mismatches) std::cout << "backend mismatch: " << m << '\n';
  }
  return checks_pass && mismatches.empty() ? kOk : kCheckFailed;
}

int run_spectra(const Config& c) {
  require_choice("--backend", c.backend, {"exact", "float", "both"});
  require_choice("--output", c.output, {"json", "csv", "text"});
  const auto h = load_hypergraph(c);
  const auto w = load_weight(c);
  std::optional<HodgeAnalysis<Rational>> exact;
  std::optional<HodgeAnalysis<double>> approx;
  if (c.backend != "float") exact.emplace(h, w);
  if (c.backend != "exact") approx.emplace(h, w);
  const auto degrees = parse_degrees(c.degrees, closure(h).top_dim());

  bool ok = true;
  ordered_json rows = ordered_json::array();
  std::vector<std::string> mismatches;
  std::ostringstream text, csv;
  csv << "n,carrier,operator,eigenvalue,multiplicity\n";
  for (int n : degrees) {
    ordered_json row;
    row["n"] = n;
    text << "n=" << n << '\n';
    ordered_json spectra;
    for (auto carrier : {Carrier::ambient, Carrier::inf, Carrier::sup}) {
      ordered_json sc;
      const char* cname = carrier_name(carrier);
      const std::pair<const char*, int> ops[] = {{"full", 0}, {"up", 1}, {"down", 2}};
      for (const auto& [oname, which] : ops) {
        auto pick = [&, which = which](const auto& bundle) {
          return which == 0 ? spectrum(bundle.full) : (which == 1 ? spectrum(bundle.up) : spectrum(bundle.down));
        };
        EigenMultiset s = exact ? pick(exact->laplacian(n, carrier)) : pick(approx->laplacian(n, carrier));
        if (exact && approx) {
          EigenMultiset f = pick(approx->laplacian(n, carrier));
          if (!multiset_subset(s, f) || !multiset_subset(f, s))
            mismatches.push_back("n=" + std::to_string(n) + " " + cname + "/" + oname + " exact=" + text_line(s) +
                                 " float=" + text_line(f));
        }
        sc[oname] = to_json(s);
        text << "  " << cname << ' ' << oname << ": " << text_line(s) << '\n';
        for (const auto& [v, m] : s.entries) csv << n << ',' << cname << ',' << oname << ',' << v << ',' << m << '\n';
      }
      spectra[cname] = sc;
    }
    row["spectra"] = spectra;
    auto rels = exact ? verify_spectral_suite(*exact, n) : verify_spectral_suite(*approx, n);
    ordered_json rj = ordered_json::array();
    for (const auto& r : rels) {
      rj.push_back(to_json(r));
      if (r.status == RelationStatus::fail) {
        ok = false;
        text << "  FAIL " << r.name << ": " << text_line(r.lhs) << " vs " << text_line(r.rhs) << '\n';
      }
    }
    std::size_t skipped = 0;
    for (const auto& r : rels) skipped += r.status == RelationStatus::skipped;
    text << "  relations: " << rels.size() - skipped << " checked, " << skipped << " skipped\n";
    row["relations"] = rj;
    rows.push_back(row);
  }
  if (c.output == "json") {
    auto j = header("spectra", c, w);
    j["degrees"] = rows;
    if (exact && approx) j["backend_mismatches"] = mismatches;
    std::cout << j.dump(2) << '\n';
  } else if (c.output == "csv") {
    std::cout << csv.str();
  } else {
    std::cout << text.str();
    for (const auto& m : mismatches) std::cout << "backend mismatch: " << m << '\n';
  }
  return ok && mismatches.empty() ? kOk : kCheckFailed;
}

int run_validate_weight(const Config& c) {
  if (c.weight.empty()) throw UsageError("--weight is required");
  const auto h = load_hypergraph(c);
  const auto w = load_weight(c);
  auto check = validate_weight(closure(h), w);
  if (c.output == "json") {
    ordered_json j;
    j["command"] = "validate-weight";
    j["weight"] = kind_name(w);
    j["valid"] = check.ok;
    if (check.violation) {
      j["sigma"] = check.violation->sigma.str();
      j["i"] = check.violation->i;
      j["j"] = check.violation->j;
    }
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << (check.ok ? "valid" : "invalid: weight condition fails at " + check.violation->str()) << '\n';
  }
  return check.ok ? kOk : kCheckFailed;
}

int run_from_digraph(const Config& c) {
  if (c.input.empty()) throw UsageError("--input is required");
  auto g = read_digraph(c.input);
  const int max_len = c.max_len >= 0 ? c.max_len : static_cast<int>(g.vertices().size());
  auto h = digraph_to_hypergraph(g, max_len);
  const auto text = format_hypergraph(h);
  if (c.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(c.out);
    if (!f) throw ParseError("cannot write " + c.out);
    f << text;
  }
  return kOk;
}

int run_format(const Config& c) {
  std::cout << format_hypergraph(load_hypergraph(c));
  return kOk;
}

// Random corpus: V = 6, d = 3, p cycling through 0.15/0.3/0.45 by seed, with
// trivial, random evaluation and zero weights; failures counted by name.
int run_suite(const Config& c) {
  require_choice("--suite", c.suite, {"diagram", "spectral", "all"});
  require_choice("--output", c.output, {"json", "csv", "text"});
  if (c.count <= 0) throw UsageError("--count must be positive");
  const std::uint64_t first = c.seed.value_or(0);
  std::map<std::string, int> failures;
  int entries = 0;
  for (std::uint64_t seed = first; seed < first + static_cast<std::uint64_t>(c.count); ++seed) {
    auto h = corpus_hypergraph(seed);
    const Weight weights[] = {TrivialWeight{}, random_evaluation_weight(h, seed + 7919), ZeroWeight{}};
    for (const auto& w : weights) {
      HodgeAnalysis<Rational> a(h, w);
      for (int n = 0; n <= a.top_dim() + 1; ++n) {
        ++entries;
        if (c.suite != "spectral")
          for (const auto& ch : a.record(n).checks)
            if (!ch.pass) ++failures[ch.name];
        if (c.suite != "diagram")
          for (const auto& r : verify_spectral_suite(a, n))
            if (r.status == RelationStatus::fail) ++failures[r.name];
      }
    }
  }
  if (c.output == "json") {
    ordered_json j;
    j["command"] = "suite";
    j["suite"] = c.suite;
    j["generator"] = {{"vertices", 6}, {"max_dim", 3}, {"p", {0.15, 0.3, 0.45}}, {"first_seed", first},
                      {"count", c.count}};
    j["degree_entries"] = entries;
    j["failures"] = failures;
    std::cout << j.dump(2) << '\n';
  } else if (c.output == "csv") {
    std::cout << "check,failures\n";
    for (const auto& [k, v] : failures) std::cout << k << ',' << v << '\n';
  } else {
    std::cout << "seeds " << first << ".." << first + c.count - 1 << ", " << entries << " degree entries\n";
    if (failures.empty()) std::cout << "all checks pass\n";
    for (const auto& [k, v] : failures) std::cout << "FAIL " << k << ": " << v << '\n';
  }
  return failures.empty() ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Embedded homology, Hodge decompositions and Laplacian spectra of weighted hypergraphs"};
  app.require_subcommand(1);
  Config cfg;

  auto add_common = [&](CLI::App* sub, bool with_weight) {
    sub->add_option("--input", cfg.input, "hypergraph file, one hyperedge per line");
    if (with_weight) sub->add_option("--weight", cfg.weight, "weight JSON file (default: trivial)");
  };
  auto add_analysis = [&](CLI::App* sub) {
    add_common(sub, true);
    sub->add_option("--degrees", cfg.degrees, "all, k, a-b or a comma list");
    sub->add_option("--backend", cfg.backend, "exact, float or both");
    sub->add_option("--output", cfg.output, "json, csv or text");
  };

  auto* betti = app.add_subcommand("betti", "embedded and closure Betti numbers per degree");
  add_analysis(betti);
  auto* hodge = app.add_subcommand("hodge", "Hodge summands and decomposition identities per degree");
  add_analysis(hodge);
  hodge->add_flag("--harmonic", cfg.harmonic, "include harmonic bases in JSON output");
  hodge->add_option("--seed", cfg.seed, "without --input: run the diagram suite from this seed");
  hodge->add_option("--count", cfg.count, "number of random hypergraphs for --seed");
  auto* spectra = app.add_subcommand("spectra", "Laplacian spectra and the spectral relations per degree");
  add_analysis(spectra);
  auto* validate = app.add_subcommand("validate-weight", "check the weight condition on the closure");
  add_common(validate, true);
  validate->add_option("--output", cfg.output, "json or text");
  auto* from_dg = app.add_subcommand("from-digraph", "path hypergraph of an acyclic digraph");
  add_common(from_dg, false);
  from_dg->add_option("--max-len", cfg.max_len, "longest path in arrows (default: vertex count)");
  from_dg->add_option("--out", cfg.out, "write the hypergraph here instead of stdout");
  auto* format = app.add_subcommand("format", "print a hypergraph file in canonical order");
  add_common(format, false);
  auto* suite = app.add_subcommand("suite", "random-corpus property suite");
  suite->add_option("--suite", cfg.suite, "diagram, spectral or all");
  suite->add_option("--seed", cfg.seed, "first seed (default 0)");
  suite->add_option("--count", cfg.count, "number of random hypergraphs (default 100)");
  suite->add_option("--output", cfg.output, "json, csv or text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*betti) return run_records("betti", cfg);
    if (*hodge) {
      if (cfg.input.empty() && cfg.seed) {
        cfg.suite = "diagram";
        return run_suite(cfg);
      }
      return run_records("hodge", cfg);
    }
    if (*spectra) return run_spectra(cfg);
    if (*validate) return run_validate_weight(cfg);
    if (*from_dg) return run_from_digraph(cfg);
    if (*format) return run_format(cfg);
    if (*suite) return run_suite(cfg);
  } catch (const CyclicDigraph& e) {
    std::cerr << "error: " << e.what() << '\n';
    std::cout << CyclicDigraph::join(e.cycle) << '\n';
    return kInputError;
  } catch (const MissingPair& e) {
    std::cerr << "error: " << e.what() << " (key \"" << e.key << "\")\n";
    return kInputError;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kInputError;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kInputError;
  } catch (const InvalidWeight& e) {
    std::cerr << "invalid weight: " << e.what() << '\n';
    return kInputError;
  } catch (const InvalidHypergraph& e) {
    std::cerr << "invalid hypergraph: " << e.what() << '\n';
    return kInputError;
  } catch (const InternalInconsistency& e) {
    std::cerr << "check failed: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kInputError;
}
