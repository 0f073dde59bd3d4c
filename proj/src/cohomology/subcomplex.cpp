#include <stdexcept>

#include "postlie/cohomology/cohomology.hpp"

namespace postlie::cohomology {

namespace {

void record_columns(ResidualReport& rep, const std::string& name, const SparseMatrix& m,
                    const std::vector<Cochain::BasisElement>& basis) {
  for (std::size_t c = 0; c < m.cols(); ++c) {
    const auto& b = basis[c];
    rep.record(name, {static_cast<int>(b.first.size()), static_cast<int>(b.second.size())}, b.first, b.second,
               m.column(c));
  }
}

SparseMatrix sum(const SparseMatrix& a, const SparseMatrix& b) {
  SparseMatrix r = a;
  for (const auto& [rc, v] : b.entries()) r.add(rc.first, rc.second, v);
  return r;
}

}  // namespace

SubcomplexReport subcomplex_check(const PostLieData& data, SubcomplexMode mode, int k, int max_length) {
  classical::require_valid(data);
  if (max_length < 1) throw std::invalid_argument("max_length must be positive");
  const auto& space = data.space();
  SubcomplexReport rep;
  switch (mode) {
    case SubcomplexMode::kk: {
      if (k < 0) throw std::invalid_argument("kk mode needs k >= 0");
      for (int l = 1; l <= max_length; ++l) rep.differentials.push_back(component_matrix(data, k + l, k, k));
      for (int l = 1; l < max_length; ++l)
        record_columns(rep.residuals, "(d^k_k)^2", rep.differentials[l] * rep.differentials[l - 1],
                       component_basis(space, k + l, k));
      break;
    }
    case SubcomplexMode::wedge: {
      if (k < 3) throw std::invalid_argument("wedge mode needs k >= 3");
      for (int m = 0; m < max_length; ++m) rep.differentials.push_back(component_matrix(data, m + k, m, m + 1));
      for (int m = 0; m + 1 < max_length; ++m)
        record_columns(rep.residuals, "(d^m_{m+1})^2", rep.differentials[m + 1] * rep.differentials[m],
                       component_basis(space, m + k, m));
      break;
    }
    case SubcomplexMode::reduced: {
      for (int n = 1; n <= max_length; ++n) {
        auto ker = core::nullspace_rank(component_matrix(data, n, n - 1, n - 1)).nullspace_basis;
        SparseMatrix step = component_matrix(data, n, n - 1, n);
        SparseMatrix restricted(step.rows(), ker.size());
        for (std::size_t c = 0; c < ker.size(); ++c) restricted.set_column(c, step.apply(ker[c]));
        rep.differentials.push_back(restricted);
        // the image lies in C_Der^{n+1} and the square vanishes there
        SparseMatrix into = component_matrix(data, n + 1, n, n) * restricted;
        SparseMatrix square = component_matrix(data, n + 1, n, n + 1) * restricted;
        for (std::size_t c = 0; c < ker.size(); ++c) {
          std::vector<int> arity{n - 1, 1};
          rep.residuals.record("d^n_n d^{n-1}_n on C_Der", arity, {static_cast<int>(c)}, {}, into.column(c));
          rep.residuals.record("(d^{n-1}_n)^2 on C_Der", arity, {static_cast<int>(c)}, {}, square.column(c));
        }
      }
      break;
    }
  }
  return rep;
}

ResidualReport obstruction_check(const PostLieData& data, int n) {
  classical::require_valid(data);
  if (n < 1) throw std::invalid_argument("obstruction identity needs n >= 1");
  SparseMatrix a = component_matrix(data, n + 1, n, n + 1) * component_matrix(data, n, n - 1, n);
  SparseMatrix b = component_matrix(data, n + 1, n - 1, n + 1) * component_matrix(data, n, n - 1, n - 1);
  ResidualReport rep;
  record_columns(rep, "obstruction", sum(a, b), component_basis(data.space(), n, n - 1));
  return rep;
}

}  // namespace postlie::cohomology
