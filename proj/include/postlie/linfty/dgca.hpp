#pragma once

#include <map>
#include <optional>
#include <utility>

#include "postlie/linfty/postlie_infinity.hpp"

namespace postlie::linfty {

/// Graded commutative algebra with a degree-1 differential, given by structure constants.
class DGCA {
 public:
  explicit DGCA(SpacePtr space);

  const SpacePtr& space() const { return space_; }
  std::size_t dim() const { return space_->dim(); }
  /// e_i e_j = v; e_j e_i = (−1)^{|e_i||e_j|} v is implied.
  void set_product(int i, int j, const Vector& v);
  void set_differential(int i, const Vector& v);
  void set_differential(const SparseMatrix& d);

  Vector product(int i, int j) const;
  Vector product(const Vector& a, const Vector& b) const;
  Vector d(int i) const;
  Vector d(const Vector& a) const;
  const SparseMatrix& differential() const { return d_; }

 private:
  SpacePtr space_;
  std::map<std::pair<int, int>, Vector> product_;
  SparseMatrix d_;
};

/// Associativity, d² = 0 and d(ab) = (da)b + (−1)^{|a|} a(db) on basis elements.
ResidualReport check_dgca(const DGCA& a);

/// Linear endomorphism of A of a fixed degree; columns are images of basis elements.
struct Derivation {
  SparseMatrix matrix;
  int degree = 0;
  bool leibniz_verified = false;
};

/// D(ab) = D(a)b + (−1)^{|D||a|} a D(b) and homogeneity. A clean report sets the flag.
ResidualReport check_derivation(const DGCA& a, Derivation& d);

/// Left action A × g → g by structure constants.
class AlgebraModule {
 public:
  AlgebraModule(SpacePtr algebra, SpacePtr lie);
  /// e_a · x_i = v.
  void set(int a, int x, const Vector& v);
  Vector act(int a, int x) const;
  Vector act(const Vector& a, const Vector& x) const;
  const SpacePtr& algebra_space() const { return algebra_; }
  const SpacePtr& lie_space() const { return lie_; }

 private:
  SpacePtr algebra_, lie_;
  std::map<std::pair<int, int>, Vector> table_;
};

enum class ActionFlavor { generic, poisson, algebroid };

/// Maps ρ_k: Sym^k(g) → Der(A) of degree 1 stored as the (k,1) components of a family with
/// first space g and second and target space A; ρ_k(x_1..x_k)(a) = rho(k,1)(x; a).
struct ActionData {
  DGCA algebra;
  LInftyStructure lie;
  GradedFamily rho;
  std::optional<AlgebraModule> module;
  ActionFlavor flavor = ActionFlavor::generic;
};

/// Empty ρ family for an algebra and an L∞ algebra.
GradedFamily make_rho(const DGCA& a, const LInftyStructure& g, std::optional<int> cap = std::nullopt);
/// ρ_k(x) = D for a verified derivation of degree Σx + 1.
void set_rho(GradedFamily& rho, const Tuple& x, const Derivation& d);

/// dgca axioms, each ρ_k(x) a derivation, and the action identity for 1 ≤ n ≤ up_to g-inputs.
/// The algebroid flavor also checks the module axioms, the two anchor compatibilities and d = 0.
ResidualReport check_action_data(const ActionData& data, int up_to);

/// l_k(x_1..x_{k−1}, ab) = l_k(.., a) b + (−1)^{a(1+Σx)} a l_k(.., b) for k ≤ up_to.
ResidualReport check_homotopy_poisson(const DGCA& a, const LInftyStructure& l, int up_to);

/// Action of (A, l) on the dgca (A, ·, l₁) by ρ_k(x..)(a) = l_{k+1}(x.., a). The product is taken
/// from `algebra`; its differential must be zero or equal to l₁.
ActionData poisson_action(const DGCA& algebra, const LInftyStructure& l);
/// Anchors on an algebra with zero differential and an A-module structure on g.
ActionData algebroid_action(const DGCA& algebra, const LInftyStructure& g, const GradedFamily& anchor,
                            const AlgebraModule& module);

/// Basis of A⊗g: index a·dim(g) + x, degree |a| + |x|.
SpacePtr tensor_space(const DGCA& a, const LInftyStructure& g);

/// M_{0,1}, M_{0,q}, M_{p,1} on basis words of A⊗g in the given order; zero for other shapes.
Vector action_postlie_formula(const ActionData& data, const Tuple& first, const Tuple& second);
/// Brackets 𝔩_k of the action L∞ algebra on a basis word of A⊗g in the given order.
Vector action_linfty_formula(const ActionData& data, const Tuple& word);

/// Post-Lie∞ structure on A⊗g. Throws InvalidStructure when check_action_data(data, up_to) fails.
PostLieInftyStructure dgca_action_postlie(const ActionData& data, int up_to);
/// Action L∞ algebra on A⊗g.
LInftyStructure action_linfty(const ActionData& data);

}  // namespace postlie::linfty
