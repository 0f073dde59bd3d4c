#pragma once

#include "postlie/core/residual.hpp"
#include "postlie/freepostlie/free_lie.hpp"
#include "postlie/freepostlie/tree.hpp"

namespace postlie::free {

Letter tree_letter(const PlanarRootedTree& t);
PlanarRootedTree letter_tree(const Letter& l);

/// A ▷ product on a truncated free Lie algebra.
class PostLieOnFreeLie {
 public:
  explicit PostLieOnFreeLie(int cap) : lie_(cap) {}
  virtual ~PostLieOnFreeLie() = default;

  const FreeLieAlgebra& lie() const { return lie_; }
  int cap() const { return lie_.cap(); }
  LieElement triangle(const LieElement& x, const LieElement& y) const;
  virtual LieElement triangle_words(const Word& u, const Word& v) const = 0;
  /// Generators of weight at most w.
  virtual std::vector<Letter> alphabet(int w) const = 0;
  std::vector<Word> basis(int w) const { return FreeLieAlgebra::lyndon_basis(alphabet(w), w); }

 protected:
  void check_weight(int w) const;
  FreeLieAlgebra lie_;
};

/// Lie(k{planar rooted trees}) with left grafting extended by Post-1 and Post-2.
class FreePostLie : public PostLieOnFreeLie {
 public:
  explicit FreePostLie(int cap) : PostLieOnFreeLie(cap) {}
  LieElement triangle_words(const Word& u, const Word& v) const override;
  std::vector<Letter> alphabet(int w) const override;
  LieElement tree(const PlanarRootedTree& t) const { return LieElement::basis({tree_letter(t)}); }

 private:
  LieElement on_tree(const Word& u, const Letter& omega) const;
  mutable std::map<std::pair<Word, Letter>, LieElement> memo_tree_;
  mutable std::map<std::pair<Word, Word>, LieElement> memo_;
};

/// Lie(k{x,y}) with f ▷ g = D_f(g), D_f(x) = 0, D_f(y) = [y,f].
class IharaPostLie : public PostLieOnFreeLie {
 public:
  explicit IharaPostLie(int cap) : PostLieOnFreeLie(cap) {}
  LieElement triangle_words(const Word& u, const Word& v) const override;
  std::vector<Letter> alphabet(int w) const override;
  static Letter x() { return {1, "x"}; }
  static Letter y() { return {1, "y"}; }
  static Letter letter(const std::string& key);

 private:
  mutable std::map<std::pair<Word, Word>, LieElement> memo_;
};

/// x ▷ y in the free post-Lie algebra.
LieElement triangle_extend(const FreePostLie& algebra, const LieElement& x, const LieElement& y);
/// f ▷ g = D_f(g) on Lie(k{x,y}).
LieElement ihara_triangle(const IharaPostLie& algebra, const LieElement& f, const LieElement& g);

enum class FreeMode { free, ihara };

/// Post-1 and Post-2 on all Lyndon basis triples of total weight <= weight_cap.
/// Refuses caps above max_cap.
core::ResidualReport verify_axioms(FreeMode mode, int weight_cap, int max_cap = -1);
/// Jacobi identity of x▷y - y▷x + [x,y] on basis triples of total weight <= cap.
core::ResidualReport verify_subadjacent_jacobi(const PostLieOnFreeLie& algebra);

/// Residuals against the complete basis of weight <= cap.
core::ResidualReport axiom_residuals(const PostLieOnFreeLie& algebra);

/// "τ ▷ ω = ..." for every pair of trees of total weight <= n.
std::string grafting_table(int n);

}  // namespace postlie::free
