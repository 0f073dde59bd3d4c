#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "postlie/core/scalar.hpp"

namespace postlie::free {

using core::Scalar;

/// Planar rooted tree stored by its balanced-parenthesis word: a node is "(" followed by the
/// words of its children from left to right, then ")". The single node is "()".
class PlanarRootedTree {
 public:
  PlanarRootedTree() : code_("()") {}
  /// Parses and validates a balanced-parenthesis word describing one tree.
  static PlanarRootedTree parse(const std::string& code);
  static PlanarRootedTree from_children(const std::vector<PlanarRootedTree>& children);

  const std::string& code() const { return code_; }
  int node_count() const { return static_cast<int>(code_.size() / 2); }
  std::vector<PlanarRootedTree> children() const;
  bool is_leaf() const { return code_ == "()"; }

  /// Attaches the root of tau as the new leftmost child of node s (pre-order, zero-based).
  PlanarRootedTree graft_at(const PlanarRootedTree& tau, int s) const;

  /// Weight first, then the word.
  friend std::strong_ordering operator<=>(const PlanarRootedTree& a, const PlanarRootedTree& b);
  friend bool operator==(const PlanarRootedTree& a, const PlanarRootedTree& b) { return a.code_ == b.code_; }

 private:
  explicit PlanarRootedTree(std::string code) : code_(std::move(code)) {}
  std::string code_;
};

/// Finite linear combination of trees without zero coefficients.
class TreeSum {
 public:
  void add(const PlanarRootedTree& t, const Scalar& c);
  const std::map<PlanarRootedTree, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  TreeSum homogeneous(int weight) const;
  Scalar coefficient(const PlanarRootedTree& t) const;
  std::string str() const;
  friend bool operator==(const TreeSum& a, const TreeSum& b) { return a.terms_ == b.terms_; }

 private:
  std::map<PlanarRootedTree, Scalar> terms_;
};

/// All planar rooted trees with n nodes in canonical order.
std::vector<PlanarRootedTree> enumerate_trees(int n);

/// τ ▷ ω = Σ over nodes s of ω of τ ∘_s ω.
TreeSum left_graft(const PlanarRootedTree& tau, const PlanarRootedTree& omega);

}  // namespace postlie::free
