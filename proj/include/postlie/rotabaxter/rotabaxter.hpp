#pragma once

#include <vector>

#include "postlie/linfty/open_closed.hpp"

namespace postlie::rotabaxter {

using core::InvalidStructure;
using core::ResidualReport;
using core::Scalar;
using core::SpacePtr;
using core::SparseMatrix;
using core::Tuple;
using core::Vector;
using linfty::DGLA;
using linfty::GradedFamily;
using linfty::LInftyStructure;
using linfty::OpenClosedStructure;
using linfty::PostLieInftyStructure;

/// Graded Lie algebra L, abelian subalgebra H = image(P) and a degree-1 element Φ ∈ ker P
/// with [Φ,Φ] = 0. The constructor checks every condition and throws InvalidStructure.
class VData {
 public:
  /// `h_basis` spans H and must consist of homogeneous vectors; `p` is a linear map L → L.
  VData(DGLA lie, std::vector<Vector> h_basis, SparseMatrix p, Vector phi);

  const DGLA& lie() const { return lie_; }
  const std::vector<Vector>& h_basis() const { return h_basis_; }
  const SparseMatrix& projection() const { return p_; }
  const Vector& phi() const { return phi_; }
  /// H with the degrees inherited from L, basis in the order of h_basis.
  const SpacePtr& h_space() const { return h_space_; }

  /// Coordinates of an element of H in h_basis; throws std::invalid_argument outside H.
  Vector coordinates(const Vector& v) const;
  /// Σ c_i h_i.
  Vector element(const Vector& coordinates) const;

 private:
  DGLA lie_;
  std::vector<Vector> h_basis_;
  SparseMatrix p_;
  Vector phi_;
  SpacePtr h_space_;
  SparseMatrix h_matrix_;
};

/// Checks the V-data conditions; empty report when they hold.
ResidualReport check_vdata(const DGLA& lie, const std::vector<Vector>& h_basis, const SparseMatrix& p,
                           const Vector& phi);

/// P[…[[Φ,a₁],a₂],…,a_k] for a₁..a_k ∈ H given in L coordinates.
Vector higher_derived_bracket(const VData& v, const std::vector<Vector>& args);

/// The higher derived brackets as an L∞ structure on h_space(), k ≤ cap.
LInftyStructure derived_linfty(const VData& v, int cap);

/// Θ_k: Sym^k(h) → g of degree 0, stored as (0,k) components with second space h and target g.
class HomotopyRBOperator {
 public:
  HomotopyRBOperator(SpacePtr h, SpacePtr g, std::optional<int> cap = std::nullopt);
  explicit HomotopyRBOperator(GradedFamily theta);

  const GradedFamily& theta() const { return theta_; }
  const SpacePtr& h_space() const { return theta_.second_space(); }
  const SpacePtr& g_space() const { return theta_.target_space(); }
  std::optional<int> cap() const { return theta_.cap(); }

  /// Θ_k on basis elements of h in any order. Clears the verified flag.
  void set(const Tuple& inputs, const Vector& value);
  Vector eval(const Tuple& inputs) const;

  int verified_up_to() const { return verified_; }
  void mark_verified(int n) { verified_ = std::max(verified_, n); }

 private:
  GradedFamily theta_;
  int verified_ = 0;
};

/// Σ_k 1/k! Σ l_k(Θ(..),…,Θ(..)) minus the Θ-decorated R terms, on every canonical word of h
/// of length 1..up_to ("rota-baxter").
ResidualReport rb_residuals(const HomotopyRBOperator& theta, const OpenClosedStructure& s, int up_to);
/// As rb_residuals; a clean report marks theta verified up to up_to.
ResidualReport check_homotopy_rb(HomotopyRBOperator& theta, const OpenClosedStructure& s, int up_to);

/// α_n = R_{0,n} + Σ_k 1/k! Σ R_{k,i}(Θ(..)…Θ(..); u..) for n ≤ up_to, without any check.
GradedFamily descendant_maps(const HomotopyRBOperator& theta, const OpenClosedStructure& s, int up_to);

struct Descendant {
  LInftyStructure alpha;
  /// check_linfty on alpha.
  ResidualReport linfty;
  /// check_linfty_morphism(Θ, (h, α), (g, l)).
  ResidualReport morphism;
};

/// Descendant L∞ algebra on h up to theta.verified_up_to(); throws InvalidStructure when theta
/// is unverified.
Descendant descendant_linfty(const HomotopyRBOperator& theta, const OpenClosedStructure& s);

/// M_{0,q} = R_{0,q} and M_{p,q} = Σ_k 1/k! Σ R_{k,q}(Θ(..)…Θ(..); u..) up to
/// theta.verified_up_to(). Throws InvalidStructure for an unverified theta and
/// std::invalid_argument when some R_{p,0} is nonzero.
PostLieInftyStructure induced_postlie_infinity(const HomotopyRBOperator& theta, const OpenClosedStructure& s);

/// Open-closed structure of a Lie algebra g acting on a Lie algebra h by derivations, both
/// ungraded and shifted: l = shifted g, R_{0,2} = shifted h, R_{1,1}(x;u) = ρ(x)u. `rho[i]`
/// is the matrix of ρ(e_i) on h. Throws InvalidStructure when ρ is not an action.
OpenClosedStructure strict_open_closed(const DGLA& g, const DGLA& h, const std::vector<SparseMatrix>& rho);

/// Θ₁ = T for a linear map T: h → g given column-wise.
HomotopyRBOperator strict_operator(const OpenClosedStructure& s, const SparseMatrix& t);

/// The identity on g as an operator for (g, g, l^C, M).
HomotopyRBOperator identity_operator(const SpacePtr& g);

}  // namespace postlie::rotabaxter
