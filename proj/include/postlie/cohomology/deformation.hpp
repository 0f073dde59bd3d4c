#pragma once

#include <optional>

#include "postlie/cohomology/cohomology.hpp"
#include "postlie/core/dual_scalar.hpp"

namespace postlie::cohomology {

/// (ω₀, ω₁) with ω₀ ∈ Hom(Λ²g, g) and ω₁ ∈ Hom(g⊗g, g), stored as a 2-cochain.
class DeformationPair {
 public:
  explicit DeformationPair(core::SpacePtr space) : omega_(make_cochain(space, 2)) {}
  explicit DeformationPair(Cochain omega);

  const Cochain& cochain() const { return omega_; }
  void set_omega0(int i, int j, const Vector& v) { omega_.set({}, {i, j}, v); }
  void set_omega1(int i, int j, const Vector& v) { omega_.set({i}, {j}, v); }
  Vector omega0(int i, int j) const { return omega_.eval(core::Tuple{}, core::Tuple{i, j}); }
  Vector omega1(int i, int j) const { return omega_.eval(core::Tuple{i}, core::Tuple{j}); }

 private:
  Cochain omega_;
};

struct DeformationCheck {
  /// The three first-order conditions: d_CE ω₀ = 0 and the linearized Post-1 and Post-2.
  ResidualReport cocycle;
  /// Post-Lie axioms of (π₀ + tω₀, π₁ + tω₁) over the dual numbers.
  ResidualReport dual;
  bool is_cocycle() const { return cocycle.ok(); }
  bool deformed_is_postlie() const { return dual.ok(); }
};

DeformationCheck check_deformation(const PostLieData& data, const DeformationPair& pair);

struct EquivalenceCheck {
  ResidualReport cocycle_first, cocycle_second;
  /// ω₀' - ω₀ - d_CE f and ω₁' - ω₁ - (f(x)▷y + x▷f(y) - f(x▷y)).
  ResidualReport difference;
  /// Id + tf as a homomorphism from the deformation by pair' to the one by pair.
  ResidualReport dual_isomorphism;
  bool ok() const {
    return cocycle_first.ok() && cocycle_second.ok() && difference.ok() && dual_isomorphism.ok();
  }
};

/// Certifies that pair' is equivalent to pair through Id + tf.
EquivalenceCheck check_equivalence(const PostLieData& data, const DeformationPair& pair,
                                   const DeformationPair& pair_prime, const SparseMatrix& f);

/// H² with bases.
CohomologyReport classify_deformations(const PostLieData& data);

/// Some f with pair' - pair = ∂f, found by a linear solve, or nothing when the classes differ.
std::optional<SparseMatrix> find_equivalence(const PostLieData& data, const DeformationPair& pair,
                                             const DeformationPair& pair_prime);

/// Brute-force post-Lie axioms over the dual numbers for structure tables
/// lie[i][j] = [e_i,e_j] and tri[i][j] = e_i ▷ e_j.
using DualTable = std::vector<std::vector<std::vector<core::DualScalar>>>;
ResidualReport dual_axioms(const DualTable& lie, const DualTable& tri);

}  // namespace postlie::cohomology
