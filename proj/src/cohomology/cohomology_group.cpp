#include <sstream>

#include "postlie/cohomology/cohomology.hpp"

namespace postlie::cohomology {

std::string CohomologyReport::text() const {
  std::ostringstream os;
  os << "degree " << degree << ": dim cocycles = " << dim_cocycles << ", dim coboundaries = "
     << dim_coboundaries << ", dim H^" << degree << " = " << dim_H;
  return os.str();
}

CohomologyReport cohomology_group(const PostLieData& data, int n) {
  classical::require_valid(data);
  if (n < 1) throw std::invalid_argument("cohomology degree must be at least 1");
  CohomologyReport rep;
  rep.degree = n;
  const auto& space = data.space();
  auto kernel = core::nullspace_rank(coboundary_matrix(data, n));
  rep.dim_cocycles = kernel.nullspace_basis.size();
  for (const auto& v : kernel.nullspace_basis) rep.cocycle_basis.push_back(Cochain::from_coordinates(space, n - 1, v));

  const std::size_t dim = Cochain::basis(space, n - 1).size();
  core::IncrementalSpan span(dim);
  if (n >= 2) {
    SparseMatrix prev = coboundary_matrix(data, n - 1);
    auto image = core::nullspace_rank(prev);
    for (std::size_t c : image.pivot_columns) {
      Vector v = prev.column(c);
      span.add(v);
      rep.coboundary_basis.push_back(Cochain::from_coordinates(space, n - 1, v));
    }
    rep.dim_coboundaries = image.rank;
  }
  for (std::size_t i = 0; i < kernel.nullspace_basis.size(); ++i)
    if (span.add(kernel.nullspace_basis[i])) rep.representatives.push_back(rep.cocycle_basis[i]);
  rep.dim_H = rep.dim_cocycles - rep.dim_coboundaries;
  return rep;
}

std::vector<SparseMatrix> derivation_space(const PostLieData& data) {
  classical::require_valid(data);
  const int n = static_cast<int>(data.dim());
  // unknown phi(a,b) is the coefficient of e_a in phi(e_b)
  auto unknown = [n](int a, int b) { return static_cast<std::size_t>(a * n + b); };
  std::size_t equations = static_cast<std::size_t>(n * n * n) * 2;
  SparseMatrix sys(equations, static_cast<std::size_t>(n * n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      // residuals of E_{ab}: e_b -> e_a
      auto E = [&](const Vector& v) {
        Vector r(n);
        r[a] = v[b];
        return r;
      };
      Vector col(equations);
      std::size_t row = 0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          Vector x = core::unit_vector(n, i), y = core::unit_vector(n, j);
          Vector rb = E(data.bracket(i, j)), rt = E(data.triangle(i, j));
          core::axpy(rb, Scalar(-1), data.bracket(E(x), y));
          core::axpy(rb, Scalar(-1), data.bracket(x, E(y)));
          core::axpy(rt, Scalar(-1), data.triangle(E(x), y));
          core::axpy(rt, Scalar(-1), data.triangle(x, E(y)));
          for (int c = 0; c < n; ++c) {
            col[row + c] = rb[c];
            col[row + n + c] = rt[c];
          }
          row += 2 * n;
        }
      sys.set_column(unknown(a, b), col);
    }
  std::vector<SparseMatrix> out;
  for (const auto& v : core::nullspace_rank(sys).nullspace_basis) {
    SparseMatrix phi(n, n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) phi.set(a, b, v[unknown(a, b)]);
    out.push_back(phi);
  }
  return out;
}

}  // namespace postlie::cohomology
