#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hodgehyper {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AmbientMismatch : Error {
  using Error::Error;
};
struct NotASubspace : Error {
  using Error::Error;
};
struct NotSymmetric : Error {
  using Error::Error;
};
struct NotInvariant : Error {
  using Error::Error;
};
struct InternalInconsistency : Error {
  using Error::Error;
};
struct NotAMorphism : Error {
  using Error::Error;
};
struct ZeroEigenvalue : Error {
  using Error::Error;
};
struct NotAnEigenvalue : Error {
  using Error::Error;
};
struct InvalidHypergraph : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line(line) {}
  std::size_t line;
};

// A required (simplex, face) entry is absent from a table weight.
struct MissingPair : Error {
  explicit MissingPair(std::string key_)
      : Error("weight table has no entry for " + key_), key(std::move(key_)) {}
  std::string key;
};

struct InvalidWeight : Error {
  using Error::Error;
};

struct CyclicDigraph : Error {
  explicit CyclicDigraph(std::vector<std::string> cycle_)
      : Error("digraph has a closed path: " + join(cycle_)), cycle(std::move(cycle_)) {}
  std::vector<std::string> cycle;

  static std::string join(const std::vector<std::string>& v) {
    std::string out;
    for (const auto& s : v) {
      if (!out.empty()) out += ' ';
      out += s;
    }
    return out;
  }
};

}  // namespace hodgehyper
