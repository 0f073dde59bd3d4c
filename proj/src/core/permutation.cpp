#include "postlie/core/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "postlie/core/scalar.hpp"

namespace postlie::core {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || seen[v])
      throw std::invalid_argument("not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return Permutation(std::move(v));
}

Permutation Permutation::from_one_based(const std::vector<int>& images) {
  std::vector<int> v(images);
  for (auto& x : v) --x;
  return Permutation(std::move(v));
}

std::vector<int> Permutation::one_based() const {
  std::vector<int> v(images_);
  for (auto& x : v) ++x;
  return v;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw DimensionError("permutation sizes differ");
  std::vector<int> v(a.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a(b(i));
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> v(size());
  for (std::size_t i = 0; i < size(); ++i) v[images_[i]] = static_cast<int>(i);
  return Permutation(std::move(v));
}

int Permutation::parity_sign() const {
  int s = 1;
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = a + 1; b < size(); ++b)
      if (images_[a] > images_[b]) s = -s;
  return s;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

int koszul_sign(std::span<const int> images, std::span<const int> degrees) {
  if (images.size() != degrees.size()) throw DimensionError("koszul_sign: length mismatch");
  int s = 1;
  for (std::size_t a = 0; a < images.size(); ++a)
    for (std::size_t b = a + 1; b < images.size(); ++b)
      if (images[a] > images[b] && (degrees[images[a]] & 1) && (degrees[images[b]] & 1)) s = -s;
  return s;
}

int parity_sign(std::span<const int> images) {
  int s = 1;
  for (std::size_t a = 0; a < images.size(); ++a)
    for (std::size_t b = a + 1; b < images.size(); ++b)
      if (images[a] > images[b]) s = -s;
  return s;
}

int koszul_sign(const Permutation& perm, std::span<const int> degrees) {
  return koszul_sign(std::span<const int>(perm.images()), degrees);
}

namespace {

void shuffle_rec(std::span<const int> blocks, std::size_t block, std::vector<int>& images,
                 std::vector<bool>& used, int n,
                 const std::function<void(std::span<const int>)>& visit) {
  if (block == blocks.size()) {
    visit(images);
    return;
  }
  int k = blocks[block];
  std::vector<int> free;
  for (int i = 0; i < n; ++i)
    if (!used[i]) free.push_back(i);
  int m = static_cast<int>(free.size());
  if (k > m) return;
  // lexicographic enumeration of k-subsets of the free positions
  std::vector<int> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    std::size_t base = images.size();
    for (int j = 0; j < k; ++j) {
      images.push_back(free[pick[j]]);
      used[free[pick[j]]] = true;
    }
    shuffle_rec(blocks, block + 1, images, used, n, visit);
    for (int j = 0; j < k; ++j) used[free[pick[j]]] = false;
    images.resize(base);
    int j = k - 1;
    while (j >= 0 && pick[j] == m - k + j) --j;
    if (j < 0) break;
    ++pick[j];
    for (int t = j + 1; t < k; ++t) pick[t] = pick[t - 1] + 1;
  }
}

}  // namespace

void for_each_shuffle(std::span<const int> block_sizes,
                      const std::function<void(std::span<const int>)>& visit) {
  int n = 0;
  for (int b : block_sizes) {
    if (b < 0) throw std::invalid_argument("negative block size");
    n += b;
  }
  std::vector<int> images;
  images.reserve(n);
  std::vector<bool> used(n, false);
  shuffle_rec(block_sizes, 0, images, used, n, visit);
}

std::vector<Permutation> shuffles(const std::vector<int>& block_sizes) {
  std::vector<Permutation> out;
  for_each_shuffle(block_sizes, [&](std::span<const int> im) {
    out.emplace_back(std::vector<int>(im.begin(), im.end()));
  });
  return out;
}

namespace {

void comp_rec(int n, const std::vector<int>& minimum, std::size_t i, std::vector<int>& cur,
              std::vector<std::vector<int>>& out) {
  if (i + 1 == minimum.size()) {
    if (n >= minimum[i]) {
      cur.push_back(n);
      out.push_back(cur);
      cur.pop_back();
    }
    return;
  }
  int rest_min = 0;
  for (std::size_t j = i + 1; j < minimum.size(); ++j) rest_min += minimum[j];
  for (int v = minimum[i]; v <= n - rest_min; ++v) {
    cur.push_back(v);
    comp_rec(n - v, minimum, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> compositions(int n, const std::vector<int>& minimum) {
  std::vector<std::vector<int>> out;
  if (minimum.empty()) {
    if (n == 0) out.emplace_back();
    return out;
  }
  std::vector<int> cur;
  comp_rec(n, minimum, 0, cur, out);
  return out;
}

}  // namespace postlie::core
