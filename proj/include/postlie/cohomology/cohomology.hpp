#pragma once

#include <string>
#include <vector>

#include "postlie/postlie/postlie_data.hpp"

namespace postlie::cohomology {

using classical::Cochain;
using classical::PostLieData;
using core::ResidualReport;
using core::Scalar;
using core::SparseMatrix;
using core::Vector;

/// An n-cochain lives in ⊕_{k<n} Hom(Λ^k g ⊗ Λ^{n-k} g, g), stored as a Cochain of degree n-1.
Cochain make_cochain(const core::SpacePtr& space, int n);
inline int cochain_degree(const Cochain& f) { return f.degree() + 1; }

/// ∂f = (-1)^{n-1}[π,f] for an n-cochain f. Refuses invalid data.
Cochain coboundary(const Cochain& f, const PostLieData& data);

/// ∂^k_j f: the component-k part of f sent to component j of an (n+1)-cochain by the explicit
/// formulas. Valid for j = k, j = k+1 and (k <= n-2) j = n; other pairs throw.
Cochain coboundary_component(const Cochain& f, const PostLieData& data, int k, int j);

/// Sum of every ∂^k_j f.
Cochain coboundary_explicit(const Cochain& f, const PostLieData& data);

/// Matrix of ∂ from the canonical basis of the n-cochains to that of the (n+1)-cochains.
SparseMatrix coboundary_matrix(const PostLieData& data, int n);

/// Matrix of ∂^k_j restricted to Hom(Λ^k ⊗ Λ^{n-k}, g) → Hom(Λ^j ⊗ Λ^{n+1-j}, g), on the
/// component bases returned by component_basis.
SparseMatrix component_matrix(const PostLieData& data, int n, int k, int j);
std::vector<Cochain::BasisElement> component_basis(const core::SpacePtr& space, int n, int k);
Cochain component_cochain(const core::SpacePtr& space, int n, int k, const Vector& coords);
Vector component_coordinates(const Cochain& f, int k);

struct CohomologyReport {
  int degree = 0;
  std::size_t dim_cocycles = 0, dim_coboundaries = 0, dim_H = 0;
  std::vector<Cochain> cocycle_basis, coboundary_basis;
  /// Cocycles completing the coboundaries to a basis of the cocycles.
  std::vector<Cochain> representatives;
  std::string text() const;
};

/// H^n for n >= 1, with the convention that 0-cochains vanish.
CohomologyReport cohomology_group(const PostLieData& data, int n);

/// Basis of Der(g): maps that are derivations of both the bracket and ▷.
std::vector<SparseMatrix> derivation_space(const PostLieData& data);

enum class SubcomplexMode { kk, reduced, wedge };

struct SubcomplexReport {
  /// kk: ∂^k_k on Hom(Λ^k ⊗ Λ^l, g) for l = 1..max_length.
  /// reduced: ∂^{n-1}_n on Hom(Λ^{n-1} ⊗ g, g) restricted to C^n_Der, n = 1..max_length, as a
  /// matrix whose columns are images of a basis of C^n_Der.
  /// wedge: ∂^m_{m+1} on Hom(Λ^m ⊗ Λ^k, g) for m = 0..max_length-1.
  std::vector<SparseMatrix> differentials;
  ResidualReport residuals;
};

SubcomplexReport subcomplex_check(const PostLieData& data, SubcomplexMode mode, int k, int max_length);

/// ∂^n_{n+1}∂^{n-1}_n f + ∂^{n-1}_{n+1}∂^{n-1}_{n-1} f on every basis f of Hom(Λ^{n-1} ⊗ g, g).
ResidualReport obstruction_check(const PostLieData& data, int n);

}  // namespace postlie::cohomology
