#include "postlie/core/multilinear.hpp"

#include <vector>

namespace postlie::core {

namespace {

void expand(std::span<const Arg> args, std::vector<std::vector<std::pair<int, const Scalar*>>>& out,
            bool& empty) {
  static const Scalar one(1);
  for (const auto& a : args) {
    std::vector<std::pair<int, const Scalar*>> c;
    if (a.vec) {
      for (std::size_t i = 0; i < a.vec->size(); ++i)
        if (!(*a.vec)[i].is_zero()) c.emplace_back(static_cast<int>(i), &(*a.vec)[i]);
    } else {
      c.emplace_back(a.basis, &one);
    }
    if (c.empty()) empty = true;
    out.push_back(std::move(c));
  }
}

}  // namespace

Vector evaluate_table(const BlockTable& table, std::size_t target_dim, std::span<const Arg> first,
                      std::span<const Arg> second, std::span<const int> first_degrees,
                      std::span<const int> second_degrees, SymmetryMode mode) {
  Vector out(target_dim);
  if (table.empty()) return out;
  std::vector<std::vector<std::pair<int, const Scalar*>>> choices;
  bool empty = false;
  expand(first, choices, empty);
  expand(second, choices, empty);
  if (empty) return out;
  const std::size_t nf = first.size(), n = choices.size();
  std::vector<std::size_t> pos(n, 0);
  Tuple a(nf), b(n - nf);
  while (true) {
    Scalar coeff(1);
    for (std::size_t i = 0; i < n; ++i) {
      const auto& [idx, c] = choices[i][pos[i]];
      if (i < nf)
        a[i] = idx;
      else
        b[i - nf] = idx;
      if (!(*c == Scalar(1))) coeff *= *c;
    }
    auto ca = canonical_sort(a, first_degrees, mode);
    if (!ca.is_zero) {
      auto cb = canonical_sort(b, second_degrees, mode);
      if (!cb.is_zero) {
        auto it = table.find(BlockKey{ca.indices, cb.indices});
        if (it != table.end()) {
          if (ca.sign * cb.sign < 0) coeff = -coeff;
          axpy(out, coeff, it->second);
        }
      }
    }
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (++pos[k] < choices[k].size()) break;
      pos[k] = 0;
      if (k == 0) return out;
    }
    if (n == 0) return out;
  }
}

}  // namespace postlie::core
