#pragma once

#include <vector>

#include "postlie/core/multilinear.hpp"

namespace postlie::classical {

using core::Arg;
using core::BlockTable;
using core::SpacePtr;
using core::Tuple;
using core::Vector;

/// Element of Hom(Λ^i V ⊗ Λ^{n+1-i} V, V) for i = 0..n, the degree-n part of the
/// controlling graded Lie algebra of post-Lie structures on V.
class Cochain {
 public:
  Cochain(SpacePtr space, int degree);

  const SpacePtr& space() const { return space_; }
  std::size_t dim() const;
  int degree() const { return degree_; }
  const BlockTable& component(int i) const { return comps_.at(i); }
  int components() const { return degree_ + 1; }

  /// Stores value at the sorted version of (first, second) with the antisymmetric sign.
  /// first has length i, second has length degree+1-i.
  void set(const Tuple& first, const Tuple& second, const Vector& value);
  void add(const Tuple& first, const Tuple& second, const Vector& value);

  /// Evaluation on basis indices in any order.
  Vector eval(const Tuple& first, const Tuple& second) const;
  /// Multilinear evaluation with vector arguments.
  Vector eval(std::span<const Arg> first, std::span<const Arg> second) const;

  bool is_zero() const;
  Cochain& operator+=(const Cochain& o);
  Cochain& operator-=(const Cochain& o);
  Cochain& operator*=(const core::Scalar& c);
  friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
  friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
  friend Cochain operator*(const core::Scalar& c, Cochain a) { return a *= c; }
  friend bool operator==(const Cochain& a, const Cochain& b);

  /// Canonical basis elements: (component, sorted first, sorted second, output index) in
  /// lexicographic order.
  struct BasisElement {
    int component;
    Tuple first, second;
    std::size_t output;
  };
  static std::vector<BasisElement> basis(const SpacePtr& space, int degree);
  Vector coordinates() const;
  static Cochain from_coordinates(const SpacePtr& space, int degree, const Vector& coords);

 private:
  void check_shape(const Tuple& first, const Tuple& second) const;
  SpacePtr space_;
  int degree_;
  std::vector<BlockTable> comps_;
};

/// The composition (f∘g)_k given by two shuffle-sum formulas, one for 0 ≤ k ≤ m and one for
/// m+1 ≤ k ≤ m+n.
Cochain circ(const Cochain& f, const Cochain& g);
/// [f,g] = f∘g - (-1)^{nm} g∘f.
Cochain bracket(const Cochain& f, const Cochain& g);

/// Single component (f∘g)_k evaluated at canonical arguments.
Vector circ_at(const Cochain& f, const Cochain& g, int k, const Tuple& first, const Tuple& second);

}  // namespace postlie::classical
