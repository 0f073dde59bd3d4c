#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "postlie/core/canonical.hpp"
#include "postlie/core/scalar.hpp"

namespace postlie::core {

/// One nonzero coordinate of an identity evaluated on basis inputs.
struct ResidualEntry {
  std::string identity;
  std::vector<int> arity;
  Tuple first;   // zero-based basis indices
  Tuple second;
  std::size_t component = 0;
  Scalar value;
};

struct ResidualReport {
  std::vector<ResidualEntry> entries;
  std::size_t evaluations = 0;

  bool ok() const { return entries.empty(); }
  /// Records every nonzero coordinate of v.
  void record(const std::string& identity, std::vector<int> arity, const Tuple& first,
              const Tuple& second, const Vector& v);
  void merge(const ResidualReport& other);
  std::size_t count(const std::string& identity) const;
  /// One line per entry, indices printed one-based.
  std::string text() const;
};

/// Thrown by operations that require a valid structure; carries the residuals.
struct InvalidStructure : std::runtime_error {
  ResidualReport report;
  InvalidStructure(const std::string& what, ResidualReport r)
      : std::runtime_error(what), report(std::move(r)) {}
};

std::string format_tuple(const Tuple& t);  // one-based, e.g. "[1,2]"

}  // namespace postlie::core
