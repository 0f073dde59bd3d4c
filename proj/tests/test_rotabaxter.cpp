#include <doctest.h>

#include <random>
#include <set>

#include "support/classical_fixtures.hpp"
#include "support/graded_fixtures.hpp"
#include "support/rb_fixtures.hpp"
#include "support/rb_oracles.hpp"

using namespace postlie::linfty;
using namespace postlie::rotabaxter;
using fixtures::vec;
using postlie::core::make_space;
using namespace rb_fixtures;

namespace {

/// φ (1), h (0), x (1), y (1) with [φ,h] = x + y and [x,h] = y; H = span{h, y}.
VData four_dim_vdata() {
  DGLA l(make_space({"phi", "h", "x", "y"}, {1, 0, 1, 1}));
  l.set_bracket(0, 1, vec({0, 0, 1, 1}));
  l.set_bracket(2, 1, vec({0, 0, 0, 1}));
  SparseMatrix p(4, 4);
  p.set(1, 1, 1);
  p.set(3, 3, 1);
  return VData(l, {vec({0, 1, 0, 0}), vec({0, 0, 0, 1})}, p, vec({1, 0, 0, 0}));
}

/// φ (1), xa, xb (0), a, b, c (−1) with [φ,a] = xa, [φ,b] = xb, [xa,b] = c, [xb,a] = −c.
DGLA odd_lie() {
  DGLA l(make_space({"phi", "xa", "xb", "a", "b", "c"}, {1, 0, 0, -1, -1, -1}));
  l.set_bracket(0, 3, vec({0, 1, 0, 0, 0, 0}));
  l.set_bracket(0, 4, vec({0, 0, 1, 0, 0, 0}));
  l.set_bracket(1, 4, vec({0, 0, 0, 0, 0, 1}));
  l.set_bracket(2, 3, vec({0, 0, 0, 0, 0, -1}));
  return l;
}

SparseMatrix odd_projection() {
  SparseMatrix p(6, 6);
  for (int i = 3; i < 6; ++i) p.set(i, i, 1);
  return p;
}

std::vector<Vector> odd_h() { return {vec({0, 0, 0, 1, 0, 0}), vec({0, 0, 0, 0, 1, 0}), vec({0, 0, 0, 0, 0, 1})}; }

/// Failing words of a report restricted to components below `limit`.
std::set<Tuple> failing(const ResidualReport& rep, std::size_t limit) {
  std::set<Tuple> out;
  for (const auto& e : rep.entries)
    if (e.component < limit) out.insert(e.second);
  return out;
}

}  // namespace

TEST_CASE("vdata conditions are checked at construction") {
  CHECK_NOTHROW(four_dim_vdata());
  CHECK_NOTHROW(VData(odd_lie(), odd_h(), odd_projection(), vec({1, 0, 0, 0, 0, 0})));

  DGLA l = odd_lie();
  SparseMatrix bad_p = odd_projection();
  bad_p.set(3, 3, 2);
  CHECK_THROWS_AS(VData(l, odd_h(), bad_p, vec({1, 0, 0, 0, 0, 0})), InvalidStructure);
  CHECK_THROWS_AS(VData(l, odd_h(), odd_projection(), vec({1, 1, 0, 0, 0, 0})), InvalidStructure);
  CHECK_THROWS_AS(VData(l, odd_h(), odd_projection(), vec({0, 0, 0, 1, 0, 0})), InvalidStructure);
  CHECK_THROWS_AS(VData(l, {vec({0, 0, 0, 1, 0, 0})}, odd_projection(), vec({1, 0, 0, 0, 0, 0})),
                  InvalidStructure);

  // H spanned by everything except φ is not abelian: [xa, b] = c.
  SparseMatrix p(6, 6);
  for (int i = 1; i < 6; ++i) p.set(i, i, 1);
  std::vector<Vector> hb{vec({0, 1, 0, 0, 0, 0}), vec({0, 0, 1, 0, 0, 0}), vec({0, 0, 0, 1, 0, 0}),
                         vec({0, 0, 0, 0, 1, 0}), vec({0, 0, 0, 0, 0, 1})};
  try {
    VData(l, hb, p, vec({1, 0, 0, 0, 0, 0}));
    FAIL("non-abelian H accepted");
  } catch (const InvalidStructure& e) {
    CHECK(e.report.count("abelian") > 0);
  }
}

TEST_CASE("higher derived brackets") {
  auto v = four_dim_vdata();
  CHECK(higher_derived_bracket(v, {vec({0, 0, 0, 1})}) == vec({0, 0, 0, 0}));
  CHECK(higher_derived_bracket(v, {vec({0, 1, 0, 0})}) == vec({0, 0, 0, 1}));
  CHECK(higher_derived_bracket(v, {vec({0, 1, 0, 0}), vec({0, 1, 0, 0})}) == vec({0, 0, 0, 1}));
  CHECK_THROWS_AS(higher_derived_bracket(v, {vec({0, 0, 1, 0})}), std::invalid_argument);
  auto l = derived_linfty(v, 4);
  CHECK(l.eval(Tuple{0}) == vec({0, 1}));
  CHECK(l.eval(Tuple{0, 0}) == vec({0, 1}));
  CHECK(check_linfty(l, 4).ok());
  CHECK(graded_oracle::is_linfty(l, 4));

  VData odd(odd_lie(), odd_h(), odd_projection(), vec({1, 0, 0, 0, 0, 0}));
  auto h = odd_h();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      int si = odd.h_space()->degree(i), sj = odd.h_space()->degree(j);
      Vector ab = higher_derived_bracket(odd, {h[i], h[j]});
      Vector ba = higher_derived_bracket(odd, {h[j], h[i]});
      CHECK(ab == postlie::core::scaled(ba, Scalar((si * sj) % 2 == 0 ? 1 : -1)));
    }
  CHECK(higher_derived_bracket(odd, {h[0], h[1]}) == vec({0, 0, 0, 0, 0, 1}));
  CHECK(postlie::core::is_zero(higher_derived_bracket(odd, {h[0], h[0]})));
  auto lo = derived_linfty(odd, 4);
  CHECK(lo.eval(Tuple{0, 1}) == vec({0, 0, 1}));
  CHECK(check_linfty(lo, 4).ok());
}

TEST_CASE("zero operator") {
  auto s = graded_fixtures::adjoint_open_closed();
  HomotopyRBOperator zero(s.h_space(), s.g_space());
  CHECK(check_homotopy_rb(zero, s, 4).ok());
  auto d = descendant_linfty(zero, s);
  GradedFamily r0 = GradedFamily::on(s.h_space(), 1);
  for (const auto& [k, m] : s.r().components())
    if (k.first == 0)
      for (const auto& [key, v] : m.table()) r0.set(0, k.second, key.first, key.second, v);
  CHECK(d.alpha.ops() == r0);
  auto m = induced_postlie_infinity(zero, s);
  for (const auto& [k, c] : m.maps().components())
    if (k.first >= 1) CHECK(c.is_zero());
  CHECK(m.maps() == r0);
}

TEST_CASE("identity operator on the open-closed structure of a post-Lie infinity algebra") {
  auto all = fixtures::valid_suite();
  for (const auto& f : all) {
    INFO(f.name);
    auto m = embed(f.data);
    auto s = open_closed_from_postlie(m);
    auto id = identity_operator(m.space());
    CHECK(check_homotopy_rb(id, s, 4).ok());
    auto d = descendant_linfty(id, s);
    CHECK(d.alpha.ops() == subadjacent_maps(m.maps(), 4));
    CHECK(d.morphism.ok());
    auto induced = induced_postlie_infinity(id, s);
    CHECK(induced.maps() == m.maps().truncated(4));
  }
  for (auto data : {graded_fixtures::cubic_action(), graded_fixtures::dual_number_action(),
                    graded_fixtures::cubic_algebroid()}) {
    auto m = dgca_action_postlie(data, 4);
    auto s = open_closed_from_postlie(m);
    auto id = identity_operator(m.space());
    CHECK(check_homotopy_rb(id, s, 4).ok());
    CHECK(descendant_linfty(id, s).alpha == action_linfty(data));
  }
  for (const auto& f : fixtures::broken_suite()) {
    INFO(f.name);
    auto m = embed(f.data);
    auto s = open_closed_from_postlie(m);
    auto id = identity_operator(m.space());
    CHECK(check_homotopy_rb(id, s, 3).ok() == rb_oracle::graph_residuals(id, s, 3).ok());
  }
}

TEST_CASE("strict classical operators") {
  auto g = nonabelian_lie();
  {
    auto s = strict_open_closed(g, abelian(1), {SparseMatrix(1, 1), SparseMatrix(1, 1)});
    SparseMatrix t(2, 1);
    t.set(1, 0, 1);
    auto theta = strict_operator(s, t);
    CHECK(check_homotopy_rb(theta, s, 3).ok());
    CHECK(descendant_linfty(theta, s).alpha.ops().is_zero());
  }
  {
    DGLA h = abelian(2);
    auto s = strict_open_closed(g, h, adjoint(g));
    SparseMatrix t(2, 2);
    t.set(1, 0, 1);
    auto theta = strict_operator(s, t);
    CHECK(check_homotopy_rb(theta, s, 3).ok());
    auto d = descendant_linfty(theta, s);
    CHECK(d.linfty.ok());
    CHECK(d.morphism.ok());
    // α₂(u,v) = ρ(Tu)v − ρ(Tv)u vanishes since T(h) = span{e2}.
    CHECK(d.alpha.ops().is_zero());
    auto m = induced_postlie_infinity(theta, s);
    CHECK(m.eval({0}, {0}) == vec({0, -1}));
    CHECK(m.eval({0}, {1}) == vec({0, 0}));
    CHECK(check_postlie_infinity(m, 3).ok());

    auto id = strict_operator(s, [] {
      SparseMatrix i(2, 2);
      i.set(0, 0, 1);
      i.set(1, 1, 1);
      return i;
    }());
    CHECK(!check_homotopy_rb(id, s, 3).ok());
    CHECK_THROWS_AS(descendant_linfty(id, s), InvalidStructure);
    CHECK_THROWS_AS(induced_postlie_infinity(id, s), InvalidStructure);
  }
  CHECK_THROWS_AS(strict_open_closed(g, abelian(2), {SparseMatrix(2, 2), [] {
                                                        SparseMatrix m(2, 2);
                                                        m.set(0, 1, 1);
                                                        return m;
                                                      }()}),
                  InvalidStructure);
  CHECK_THROWS_AS(strict_open_closed(graded_fixtures::dg_example(), abelian(1), {SparseMatrix(1, 1), SparseMatrix(1, 1)}),
                  std::invalid_argument);
}

TEST_CASE("weight-one operators reproduce the classical post-Lie algebras") {
  struct Item {
    DGLA g;
    SparseMatrix t;
    postlie::classical::PostLieData expected;
  };
  SparseMatrix t2(2, 2);
  t2.set(0, 0, -1);
  SparseMatrix t3(3, 3);
  t3.set(0, 0, -1);
  t3.set(1, 1, -1);
  std::vector<Item> items{{nonabelian_lie(), t2, fixtures::rb_induced()}, {sl2(), t3, fixtures::sl2_rb()}};
  for (auto& it : items) {
    auto s = strict_open_closed(it.g, it.g, adjoint(it.g));
    auto theta = strict_operator(s, it.t);
    REQUIRE(check_homotopy_rb(theta, s, 3).ok());
    auto m = induced_postlie_infinity(theta, s);
    CHECK(m.maps() == embed(it.expected).maps());
    CHECK(check_postlie_infinity(m, 3).ok());
    auto d = descendant_linfty(theta, s);
    CHECK(d.alpha.ops() == subadjacent_maps(m.maps(), 3));
    CHECK(d.alpha.ops() == to_graded(postlie::classical::sub_adjacent(it.expected).pi()));
  }
}

TEST_CASE("descendant and induced structures of verified operators") {
  for (auto& c : verified_cases()) {
    INFO(c.name);
    REQUIRE(check_homotopy_rb(c.theta, c.s, 3).ok());
    CHECK(rb_oracle::graph_residuals(c.theta, c.s, 3).ok());
    auto d = descendant_linfty(c.theta, c.s);
    CHECK(d.linfty.ok());
    CHECK(d.morphism.ok());
    CHECK(d.alpha == rb_oracle::alpha_structure(c.theta, c.s, 3));
    auto m = induced_postlie_infinity(c.theta, c.s);
    CHECK(check_postlie_infinity(m, 3).ok());
    CHECK(subadjacent_linfty(m) == d.alpha);
  }
}

TEST_CASE("explicit identity agrees with the graph morphism on random operators") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> coin(-1, 1);
  int failures = 0;
  for (auto& c : verified_cases()) {
    INFO(c.name);
    const auto& h = *c.s.h_space();
    const auto& g = *c.s.g_space();
    for (int trial = 0; trial < 4; ++trial) {
      HomotopyRBOperator theta = c.theta;
      for (int k = 1; k <= 2; ++k)
        for (const auto& w : graded_oracle::words(h, k)) {
          if (coin(rng) != 0) continue;
          int out = graded_oracle::dsum(h, w, 0, w.size());
          Vector v = theta.eval(w);
          for (std::size_t i = 0; i < g.dim(); ++i)
            if (g.degree(i) == out) v[i] += Scalar(coin(rng));
          theta.set(w, v);
        }
      auto rep = rb_residuals(theta, c.s, 3);
      auto oracle = rb_oracle::graph_residuals(theta, c.s, 3);
      CHECK(rep.ok() == oracle.ok());
      CHECK(failing(rep, g.dim()) == failing(oracle, g.dim()));
      failures += !rep.ok();
    }
  }
  CHECK(failures > 0);
}

TEST_CASE("induced structures require actions") {
  auto base = graded_fixtures::adjoint_open_closed();
  GradedFamily r = base.r();
  r.set(2, 0, {0, 1}, {}, vec({0, 1}));
  OpenClosedStructure s(base.l(), r);
  HomotopyRBOperator zero(s.h_space(), s.g_space());
  REQUIRE(check_homotopy_rb(zero, s, 3).ok());
  CHECK_THROWS_AS(induced_postlie_infinity(zero, s), std::invalid_argument);
  HomotopyRBOperator unverified(base.h_space(), base.g_space());
  CHECK_THROWS_AS(induced_postlie_infinity(unverified, base), InvalidStructure);
  CHECK_THROWS_AS(descendant_linfty(unverified, base), InvalidStructure);
}
