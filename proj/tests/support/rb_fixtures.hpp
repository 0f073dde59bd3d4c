#pragma once

#include "postlie/rotabaxter/rotabaxter.hpp"
#include "support/classical_fixtures.hpp"
#include "support/graded_fixtures.hpp"

namespace rb_fixtures {

using namespace postlie::linfty;
using namespace postlie::rotabaxter;
using fixtures::vec;
using postlie::core::make_space;
using postlie::core::SparseMatrix;

inline DGLA nonabelian_lie() { return graded_fixtures::nonabelian_dgla(); }

/// Matrices of ad(e_i) on a Lie algebra.
inline std::vector<SparseMatrix> adjoint(const DGLA& g) {
  std::size_t n = g.space()->dim();
  std::vector<SparseMatrix> out;
  for (std::size_t i = 0; i < n; ++i) {
    SparseMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) m.set_column(j, g.bracket(static_cast<int>(i), static_cast<int>(j)));
    out.push_back(m);
  }
  return out;
}

inline DGLA abelian(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("u" + std::to_string(i + 1));
  return DGLA(make_space(names, std::vector<int>(n, 0)));
}

inline DGLA sl2() {
  DGLA g(make_space({"h", "e", "f"}, {0, 0, 0}));
  g.set_bracket(0, 1, vec({0, 2, 0}));
  g.set_bracket(0, 2, vec({0, 0, -2}));
  g.set_bracket(1, 2, vec({1, 0, 0}));
  return g;
}

/// Operators of interest paired with their open-closed structures.
struct Case {
  std::string name;
  OpenClosedStructure s;
  HomotopyRBOperator theta;
};

inline std::vector<Case> verified_cases() {
  std::vector<Case> out;
  for (const auto& f : fixtures::valid_suite()) {
    auto m = embed(f.data);
    if (!check_postlie_infinity(m, 4).ok()) throw std::logic_error("fixture " + f.name + " is not post-Lie");
    auto s = open_closed_from_postlie(m);
    out.push_back({"id " + f.name, s, identity_operator(m.space())});
  }
  for (auto data : {graded_fixtures::cubic_action(), graded_fixtures::dual_number_action()}) {
    auto m = dgca_action_postlie(data, 4);
    out.push_back({"id dgca", open_closed_from_postlie(m), identity_operator(m.space())});
  }
  {
    auto s = strict_open_closed(nonabelian_lie(), abelian(1), {SparseMatrix(1, 1), SparseMatrix(1, 1)});
    SparseMatrix t(2, 1);
    t.set(1, 0, 1);
    out.push_back({"strict trivial action", s, strict_operator(s, t)});
  }
  {
    auto g = nonabelian_lie();
    auto s = strict_open_closed(g, g, adjoint(g));
    SparseMatrix t(2, 2);
    t.set(0, 0, -1);
    out.push_back({"weight one rb", s, strict_operator(s, t)});
  }
  {
    auto g = nonabelian_lie();
    auto s = strict_open_closed(g, abelian(2), adjoint(g));
    SparseMatrix t(2, 2);
    t.set(1, 0, 1);
    out.push_back({"weight zero rb", s, strict_operator(s, t)});
  }
  {
    auto s = graded_fixtures::adjoint_open_closed();
    out.push_back({"zero operator", s, HomotopyRBOperator(s.h_space(), s.g_space())});
  }
  return out;
}

}  // namespace rb_fixtures
