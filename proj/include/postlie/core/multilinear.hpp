#pragma once

#include <map>
#include <span>
#include <utility>

#include "postlie/core/canonical.hpp"
#include "postlie/core/graded_space.hpp"
#include "postlie/core/scalar.hpp"

namespace postlie::core {

/// Sparse table of a map on two blocks of basis arguments, keyed by canonical tuples.
using BlockKey = std::pair<Tuple, Tuple>;
using BlockTable = std::map<BlockKey, Vector>;

/// Argument of a multilinear evaluation: a basis index with coefficient 1, or a vector.
struct Arg {
  int basis = -1;
  const Vector* vec = nullptr;
  static Arg of(int i) { return Arg{i, nullptr}; }
  static Arg of(const Vector& v) { return Arg{-1, &v}; }
};

/// Evaluates a block table multilinearly. Vector arguments are expanded in the basis.
/// Degrees are the per-basis-index degrees of each block's space.
Vector evaluate_table(const BlockTable& table, std::size_t target_dim, std::span<const Arg> first,
                      std::span<const Arg> second, std::span<const int> first_degrees,
                      std::span<const int> second_degrees, SymmetryMode mode);

}  // namespace postlie::core
