#pragma once

#include "postlie/core/residual.hpp"
#include "postlie/core/sparse_matrix.hpp"
#include "postlie/postlie/cochain.hpp"

namespace postlie::classical {

using core::ResidualReport;
using core::Scalar;
using core::SparseMatrix;

using core::InvalidStructure;

/// Lie bracket and ▷ on an ungraded space, stored as the degree-1 cochain π = (π₀, π₁).
class PostLieData {
 public:
  explicit PostLieData(SpacePtr space);
  PostLieData(SpacePtr space, Cochain pi);

  const SpacePtr& space() const { return space_; }
  std::size_t dim() const { return space_->dim(); }
  const Cochain& pi() const { return pi_; }

  /// [e_i, e_j]; sets [e_j, e_i] implicitly.
  void set_bracket(int i, int j, const Vector& v);
  /// e_i ▷ e_j.
  void set_triangle(int i, int j, const Vector& v);

  Vector bracket(int i, int j) const;
  Vector triangle(int i, int j) const;
  Vector bracket(const Vector& x, const Vector& y) const;
  Vector triangle(const Vector& x, const Vector& y) const;

  friend bool operator==(const PostLieData& a, const PostLieData& b) { return a.pi_ == b.pi_; }

 private:
  SpacePtr space_;
  Cochain pi_;
};

/// The three components of π∘π on every canonical basis input. Zero iff post-Lie.
ResidualReport check_postlie(const PostLieData& data);
bool is_postlie(const PostLieData& data);
void require_valid(const PostLieData& data);

/// Lie bracket x▷y − y▷x + [x,y], returned with zero ▷.
PostLieData sub_adjacent(const PostLieData& data);

enum class MorphismKind { derivation, homomorphism };

/// phi maps src to tgt; columns are images of basis vectors.
ResidualReport check_morphism(const SparseMatrix& phi, const PostLieData& src, const PostLieData& tgt,
                              MorphismKind kind);

Vector apply(const SparseMatrix& phi, const Vector& v);

}  // namespace postlie::classical
