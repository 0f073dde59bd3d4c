#pragma once

#include <span>
#include <vector>

namespace postlie::core {

enum class SymmetryMode { antisymmetric, graded_symmetric };

using Tuple = std::vector<int>;

struct CanonicalTuple {
  Tuple indices;
  int sign = 1;
  bool is_zero = false;
};

/// Sorts basis indices into canonical order. `degrees` is indexed by basis index.
/// x_{i_1}...x_{i_n} = sign * x_{sorted}.
CanonicalTuple canonical_sort(std::span<const int> indices, std::span<const int> degrees,
                              SymmetryMode mode);

/// Every canonical tuple of the given length, in lexicographic order: strictly
/// increasing (antisymmetric) or weakly increasing without repeated odd entries.
std::vector<Tuple> canonical_tuples(std::size_t dim, std::size_t length, std::span<const int> degrees,
                                    SymmetryMode mode);

}  // namespace postlie::core
