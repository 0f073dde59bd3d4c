#pragma once

#include <functional>
#include <span>
#include <vector>

#include "postlie/core/graded_space.hpp"
#include "postlie/core/multilinear.hpp"

namespace postlie::linfty {

/// Degrees of the basis elements listed in a word.
std::vector<int> word_degrees(const core::Tuple& word, const core::GradedBasisSpace& space);

/// Sum of the degrees of word[from..to).
int degree_sum(const core::Tuple& word, std::size_t from, std::size_t to, const core::GradedBasisSpace& space);

/// Visits every shuffle of the word into consecutive blocks of the given sizes. The callback
/// receives the Koszul sign and the permuted word x_σ(1) ... x_σ(n).
void for_each_split(const core::Tuple& word, const core::GradedBasisSpace& space, std::span<const int> blocks,
                    const std::function<void(int, const core::Tuple&)>& visit);

/// Basis arguments word[from..to).
std::vector<core::Arg> basis_args(const core::Tuple& word, std::size_t from, std::size_t to);

inline int sign_of(int exponent) { return exponent % 2 == 0 ? 1 : -1; }

}  // namespace postlie::linfty
