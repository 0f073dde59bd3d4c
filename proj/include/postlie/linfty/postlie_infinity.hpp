#pragma once

#include "postlie/linfty/linfty.hpp"
#include "postlie/postlie/postlie_data.hpp"

namespace postlie::linfty {

/// Maps M_{p,q}: Sym^p(g) ⊗ Sym^q(g) → g of degree +1, q ≥ 1.
class PostLieInftyStructure {
 public:
  explicit PostLieInftyStructure(SpacePtr space, std::optional<int> cap = std::nullopt);
  explicit PostLieInftyStructure(GradedFamily maps);

  const SpacePtr& space() const { return maps_.target_space(); }
  const GradedFamily& maps() const { return maps_; }
  std::optional<int> cap() const { return maps_.cap(); }

  /// M_{p,q} with p = first.size(), q = second.size(). Clears the verified flag.
  void set(const Tuple& first, const Tuple& second, const Vector& value);
  void add(const Tuple& first, const Tuple& second, const Vector& value);
  Vector eval(const Tuple& first, const Tuple& second) const;

  /// Largest total arity for which the Maurer-Cartan identity was found to hold, 0 if none.
  int verified_up_to() const { return verified_; }
  void mark_verified(int n) { verified_ = std::max(verified_, n); }

 private:
  GradedFamily maps_;
  int verified_ = 0;
};

/// (f∘g)_{n,m} at basis words x (length n) and y (length m).
Vector graded_postlie_circ_at(const GradedFamily& f, const GradedFamily& g, const Tuple& x, const Tuple& y);
/// All components (n,m), m ≥ 1, n+m ≤ up_to, on canonical words.
GradedFamily graded_postlie_circ(const GradedFamily& f, const GradedFamily& g, int up_to);
/// [f,g] = f∘g − (−1)^{|f||g|} g∘f.
GradedFamily graded_postlie_bracket(const GradedFamily& f, const GradedFamily& g, int up_to);

/// l^C_k = Σ_j Σ_{σ∈S(j,k−j)} ε M_{j,k−j}(x_σ(1..j); x_σ(j+1..k)) for k ≤ up_to, without any check.
GradedFamily subadjacent_maps(const GradedFamily& m, int up_to);

/// Evaluates the Maurer-Cartan identity of M through the sub-adjacent brackets on every
/// canonical (n,m) input with n+m ≤ up_to, and compares it with ½[M,M] computed by
/// graded_postlie_bracket. Disagreements are reported under "mc vs half bracket".
ResidualReport postlie_infinity_residuals(const PostLieInftyStructure& m, int up_to);
ResidualReport check_postlie_infinity(PostLieInftyStructure& m, int up_to);

/// Sub-adjacent L∞ structure. Refuses input that has not been verified.
LInftyStructure subadjacent_linfty(const PostLieInftyStructure& m);

/// Classical cochain of degree n on an ungraded space (degree −1) as the degree-n graded family
/// with components (i, n+1−i).
GradedFamily to_graded(const classical::Cochain& c);
/// Inverse of to_graded. The family must live on an ungraded space.
classical::Cochain from_graded(const GradedFamily& f);
/// π = (π₀, π₁) as M_{0,2} = [·,·] and M_{1,1} = ▷.
PostLieInftyStructure embed(const classical::PostLieData& data);

}  // namespace postlie::linfty
