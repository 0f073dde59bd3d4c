#pragma once

#include "postlie/linfty/postlie_infinity.hpp"

namespace postlie::linfty {

/// L∞ algebra (g, l) with maps R_{p,q}: Sym^p(g) ⊗ Sym^q(h) → h of degree +1, p+q ≥ 1.
class OpenClosedStructure {
 public:
  OpenClosedStructure(LInftyStructure l, GradedFamily r);

  const LInftyStructure& l() const { return l_; }
  const GradedFamily& r() const { return r_; }
  const SpacePtr& g_space() const { return l_.space(); }
  const SpacePtr& h_space() const { return r_.target_space(); }
  std::optional<int> cap() const { return min_cap(l_.cap(), r_.cap()); }

  int verified_up_to() const { return verified_; }
  void mark_verified(int n) { verified_ = std::max(verified_, n); }

 private:
  LInftyStructure l_;
  GradedFamily r_;
  int verified_ = 0;
};

/// Generalized Jacobi of l ("l o l") and the mixed identity ("open-closed") on every canonical
/// input (n,m) with 1 ≤ n+m ≤ up_to.
ResidualReport open_closed_residuals(const OpenClosedStructure& s, int up_to);
ResidualReport check_open_closed(OpenClosedStructure& s, int up_to);

/// Brackets on g ⊕ h (basis of g first): (l_k(x), R_{k,0}(x)) on inputs from g,
/// (0, R_{i,k−i}(x; u)) on i inputs from g and k−i from h.
LInftyStructure extension_linfty(const OpenClosedStructure& s);

/// (g, g, l^C, M) with l^C computed without checking M.
OpenClosedStructure open_closed_from_postlie(const PostLieInftyStructure& m);

struct CharacterizationResult {
  ResidualReport postlie;
  ResidualReport open_closed;
  bool agree() const { return postlie.ok() == open_closed.ok(); }
};

/// Runs check_postlie_infinity on M and check_open_closed on (g, g, l^C, M) to the same arity.
CharacterizationResult check_characterization(const PostLieInftyStructure& m, int up_to);

}  // namespace postlie::linfty
