#include "postlie/linfty/shuffle_sum.hpp"

#include "postlie/core/permutation.hpp"

namespace postlie::linfty {

std::vector<int> word_degrees(const core::Tuple& word, const core::GradedBasisSpace& space) {
  std::vector<int> d;
  d.reserve(word.size());
  for (int i : word) d.push_back(space.degree(static_cast<std::size_t>(i)));
  return d;
}

int degree_sum(const core::Tuple& word, std::size_t from, std::size_t to, const core::GradedBasisSpace& space) {
  int s = 0;
  for (std::size_t i = from; i < to; ++i) s += space.degree(static_cast<std::size_t>(word[i]));
  return s;
}

void for_each_split(const core::Tuple& word, const core::GradedBasisSpace& space, std::span<const int> blocks,
                    const std::function<void(int, const core::Tuple&)>& visit) {
  auto degs = word_degrees(word, space);
  core::Tuple shuffled(word.size());
  core::for_each_shuffle(blocks, [&](std::span<const int> images) {
    for (std::size_t i = 0; i < images.size(); ++i) shuffled[i] = word[static_cast<std::size_t>(images[i])];
    visit(core::koszul_sign(images, degs), shuffled);
  });
}

std::vector<core::Arg> basis_args(const core::Tuple& word, std::size_t from, std::size_t to) {
  std::vector<core::Arg> a;
  a.reserve(to - from);
  for (std::size_t i = from; i < to; ++i) a.push_back(core::Arg::of(word[i]));
  return a;
}

}  // namespace postlie::linfty
