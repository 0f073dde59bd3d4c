#pragma once

#include <map>
#include <optional>
#include <utility>

#include "postlie/core/residual.hpp"
#include "postlie/core/sparse_matrix.hpp"
#include "postlie/linfty/graded_map.hpp"

namespace postlie::linfty {

using core::InvalidStructure;
using core::ResidualReport;
using core::SparseMatrix;

/// Brackets l_k: Sym^k(V) → V of degree +1, stored as the (0,k) components of a family.
class LInftyStructure {
 public:
  explicit LInftyStructure(SpacePtr space, std::optional<int> cap = std::nullopt);
  explicit LInftyStructure(GradedFamily ops);

  const SpacePtr& space() const { return ops_.target_space(); }
  const GradedFamily& ops() const { return ops_; }
  std::optional<int> cap() const { return ops_.cap(); }

  /// l_k on basis elements in any order, k = inputs.size(). Clears the verified flag.
  void set(const Tuple& inputs, const Vector& value);
  void add(const Tuple& inputs, const Vector& value);
  Vector eval(const Tuple& inputs) const;
  Vector eval(std::span<const Arg> inputs) const;

  /// Largest n for which the generalized Jacobi identity was found to hold, 0 if none.
  int verified_up_to() const { return verified_; }
  void mark_verified(int n) { verified_ = std::max(verified_, n); }

  friend bool operator==(const LInftyStructure& a, const LInftyStructure& b) { return a.ops_ == b.ops_; }

 private:
  GradedFamily ops_;
  int verified_ = 0;
};

/// (f∘g)_n = Σ_{j} Σ_{σ∈S(j,n−j)} ε f_{n−j+1}(g_j(x_σ(1..j)), x_σ(j+1..n)) for n ≤ up_to.
/// Both families use keys (0,k) on a single space. Throws CapError past a cap.
GradedFamily nr_circ(const GradedFamily& f, const GradedFamily& g, int up_to);
/// [f,g] = f∘g − (−1)^{|f||g|} g∘f.
GradedFamily nr_bracket(const GradedFamily& f, const GradedFamily& g, int up_to);
/// (f∘g)_n at one word of basis elements.
Vector nr_circ_at(const GradedFamily& f, const GradedFamily& g, const Tuple& word);

/// Generalized Jacobi residuals (l∘l)_n on every canonical word, 1 ≤ n ≤ up_to.
ResidualReport linfty_residuals(const LInftyStructure& l, int up_to);
/// As linfty_residuals; a clean report marks l verified up to up_to.
ResidualReport check_linfty(LInftyStructure& l, int up_to);

/// f: degree-0 family with keys (0,k), second space = src space, target = tgt space.
/// Compares Σ f(l_i(..), ..) with Σ_k 1/k! Σ l'_k(f(..), ..., f(..)) on canonical words.
ResidualReport check_linfty_morphism(const GradedFamily& f, const LInftyStructure& src,
                                     const LInftyStructure& tgt, int up_to);

/// Differential graded Lie algebra given by structure constants on a graded space.
class DGLA {
 public:
  explicit DGLA(SpacePtr space);

  const SpacePtr& space() const { return space_; }
  /// [e_i, e_j] = v; [e_j, e_i] = −(−1)^{|e_i||e_j|} v is implied.
  void set_bracket(int i, int j, const Vector& v);
  /// d e_i = v.
  void set_differential(int i, const Vector& v);

  Vector bracket(int i, int j) const;
  Vector bracket(const Vector& x, const Vector& y) const;
  Vector d(int i) const;
  Vector d(const Vector& x) const;
  const SparseMatrix& differential() const { return d_; }

 private:
  SpacePtr space_;
  std::map<std::pair<int, int>, Vector> bracket_;
  SparseMatrix d_;
};

/// Graded Jacobi, d² = 0 and the Leibniz rule on basis elements.
ResidualReport check_dgla(const DGLA& g);

/// L∞ structure on s⁻¹g: l₁(s⁻¹x) = −s⁻¹dx, l₂(s⁻¹x, s⁻¹y) = (−1)^{|x|} s⁻¹[x,y].
/// Throws InvalidStructure when the input fails check_dgla.
LInftyStructure dgla_shift(const DGLA& g);

}  // namespace postlie::linfty
