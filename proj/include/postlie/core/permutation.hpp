#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace postlie::core {

/// Bijection of {0..n-1}; image(i) is sigma(i+1)-1 in one-based notation.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);  // zero-based images
  static Permutation identity(std::size_t n);
  static Permutation from_one_based(const std::vector<int>& images);

  std::size_t size() const { return images_.size(); }
  int operator()(std::size_t i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }
  std::vector<int> one_based() const;

  /// (a*b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  Permutation inverse() const;
  int parity_sign() const;
  bool is_identity() const;

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.images_ == b.images_; }
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.images_ < b.images_; }

 private:
  std::vector<int> images_;
};

/// Sign eps(sigma; v) defined by v_1...v_n = eps * v_sigma(1)...v_sigma(n) in Sym.
/// degrees[i] is the degree of v_{i+1}.
int koszul_sign(const Permutation& perm, std::span<const int> degrees);
int koszul_sign(std::span<const int> images, std::span<const int> degrees);
/// Parity sign of a zero-based image list.
int parity_sign(std::span<const int> images);

/// All (i_1,...,i_k)-shuffles in lexicographic order of images.
std::vector<Permutation> shuffles(const std::vector<int>& block_sizes);

/// Visits the zero-based image lists of all shuffles with the given block sizes,
/// in lexicographic order. The callback must not retain the span.
void for_each_shuffle(std::span<const int> block_sizes,
                      const std::function<void(std::span<const int>)>& visit);

/// All compositions of n into k parts, each part >= minimum (part-wise).
std::vector<std::vector<int>> compositions(int n, const std::vector<int>& minimum);

}  // namespace postlie::core
