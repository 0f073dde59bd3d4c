#include "postlie/core/canonical.hpp"

#include <functional>

namespace postlie::core {

CanonicalTuple canonical_sort(std::span<const int> indices, std::span<const int> degrees,
                              SymmetryMode mode) {
  CanonicalTuple r;
  r.indices.assign(indices.begin(), indices.end());
  auto& v = r.indices;
  // insertion sort with adjacent transpositions
  for (std::size_t i = 1; i < v.size(); ++i) {
    for (std::size_t j = i; j > 0 && v[j - 1] > v[j]; --j) {
      std::swap(v[j - 1], v[j]);
      if (mode == SymmetryMode::antisymmetric || ((degrees[v[j]] & 1) && (degrees[v[j - 1]] & 1)))
        r.sign = -r.sign;
    }
  }
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] != v[i - 1]) continue;
    if (mode == SymmetryMode::antisymmetric || (degrees[v[i]] & 1)) {
      r.is_zero = true;
      r.sign = 0;
      break;
    }
  }
  return r;
}

std::vector<Tuple> canonical_tuples(std::size_t dim, std::size_t length, std::span<const int> degrees,
                                    SymmetryMode mode) {
  std::vector<Tuple> out;
  Tuple cur;
  std::function<void(int)> rec = [&](int start) {
    if (cur.size() == length) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < static_cast<int>(dim); ++i) {
      bool strict = mode == SymmetryMode::antisymmetric || (degrees[i] & 1);
      cur.push_back(i);
      rec(strict ? i + 1 : i);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

}  // namespace postlie::core
