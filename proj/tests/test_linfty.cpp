#include <doctest.h>

#include "support/classical_fixtures.hpp"
#include "support/graded_fixtures.hpp"
#include "support/graded_oracles.hpp"
#include "support/random_cochains.hpp"

using namespace postlie::linfty;
using fixtures::vec;
using postlie::core::make_space;
using postlie::core::Scalar;
using postlie::core::Tuple;
using postlie::core::Vector;

namespace {

auto any_shape = [](int p, int) { return p == 0; };
auto postlie_shape = [](int, int q) { return q >= 1; };

postlie::core::SpacePtr random_space(std::mt19937_64& rng, int dim) {
  std::uniform_int_distribution<int> d(-1, 1);
  std::vector<std::string> names;
  std::vector<int> degs;
  for (int i = 0; i < dim; ++i) {
    names.push_back("v" + std::to_string(i + 1));
    degs.push_back(d(rng));
  }
  return make_space(names, degs);
}

Scalar sgn(int e) { return Scalar(e % 2 == 0 ? 1 : -1); }

}  // namespace

TEST_CASE("graded map storage") {
  auto space = make_space({"u", "v", "w"}, {-1, 0, -1});
  GradedMultiMap m(space, space, space, 0, 2, 1);
  CHECK_THROWS(m.set({}, {0}, vec({0, 1, 0})));
  m.set({}, {2, 0}, vec({1, 0, 0}));
  CHECK(m.eval(Tuple{}, Tuple{0, 2}) == vec({-1, 0, 0}));
  CHECK(m.eval(Tuple{}, Tuple{2, 0}) == vec({1, 0, 0}));
  m.set({}, {1, 0}, vec({0, 1, 0}));
  CHECK(m.eval(Tuple{}, Tuple{0, 1}) == vec({0, 1, 0}));
  CHECK_THROWS(m.set({}, {0, 0}, vec({1, 0, 0})));
  CHECK_THROWS(m.set({}, {0, 2}, vec({0, 1, 0})));
  Vector x = vec({1, 0, 2});
  std::vector<postlie::core::Arg> args{postlie::core::Arg::of(x), postlie::core::Arg::of(x)};
  CHECK(m.eval({}, args) == vec({0, 0, 0}));
  GradedFamily f = GradedFamily::on(space, 1, 2);
  CHECK(f.covers(2));
  CHECK(!f.covers(3));
  CHECK_THROWS_AS(require_cover(f, 3, "test"), CapError);
}

TEST_CASE("nr circ agrees with the permutation oracle") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 8; ++trial) {
    auto space = random_space(rng, 2 + trial % 2);
    auto f = graded_oracle::random_family(rng, space, trial % 3 - 1, 3, any_shape);
    auto g = graded_oracle::random_family(rng, space, 1, 3, any_shape);
    auto c = nr_circ(f, g, 3);
    for (int n = 1; n <= 3; ++n)
      for (const auto& w : graded_oracle::words(*space, n)) {
        CHECK(c.eval(0, n, Tuple{}, w) == graded_oracle::nr_circ(f, g, w));
        Tuple r(w.rbegin(), w.rend());
        CHECK(c.eval(0, n, Tuple{}, r) == graded_oracle::nr_circ(f, g, r));
      }
  }
}

TEST_CASE("nr bracket graded antisymmetry and Jacobi") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 8; ++trial) {
    auto space = random_space(rng, 2 + trial % 2);
    int a = trial % 3 - 1, b = trial % 2, c = (trial / 2) % 2;
    auto f = graded_oracle::random_family(rng, space, a, 3, any_shape);
    auto g = graded_oracle::random_family(rng, space, b, 3, any_shape);
    auto h = graded_oracle::random_family(rng, space, c, 3, any_shape);
    CHECK(nr_bracket(f, g, 3) == sgn(a * b + 1) * nr_bracket(g, f, 3));
    GradedFamily jac = sgn(a * c) * nr_bracket(nr_bracket(f, g, 3), h, 3) +
                       sgn(a * b) * nr_bracket(nr_bracket(g, h, 3), f, 3) +
                       sgn(b * c) * nr_bracket(nr_bracket(h, f, 3), g, 3);
    CHECK(jac.is_zero());
  }
}

TEST_CASE("differential alone") {
  LInftyStructure l(make_space({"y", "z"}, {-1, 0}));
  l.set({0}, vec({0, 1}));
  CHECK(nr_bracket(l.ops(), l.ops(), 3).is_zero());
  CHECK(check_linfty(l, 3).ok());
  CHECK(l.verified_up_to() == 3);
  LInftyStructure zero(make_space({"y"}, {-1}));
  CHECK(check_linfty(zero, 4).ok());
}

TEST_CASE("dgla shift") {
  DGLA ab(make_space({"e1", "e2"}, {0, 0}));
  CHECK(dgla_shift(ab).ops().is_zero());

  auto na = dgla_shift(graded_fixtures::nonabelian_dgla());
  CHECK(na.space()->degrees() == std::vector<int>{-1, -1});
  CHECK(na.eval(Tuple{0, 1}) == vec({0, 1}));
  CHECK(na.eval(Tuple{1, 0}) == vec({0, -1}));
  CHECK(nr_bracket(na.ops(), na.ops(), 4).is_zero());
  CHECK(check_linfty(na, 4).ok());

  auto dg = graded_fixtures::dg_example();
  CHECK(check_dgla(dg).ok());
  auto l = dgla_shift(dg);
  CHECK(l.eval(Tuple{0}) == vec({0, -1}));
  CHECK(l.eval(Tuple{0, 1}) == vec({0, 1}));
  CHECK(nr_bracket(l.ops(), l.ops(), 4).is_zero());
  CHECK(check_linfty(l, 4).ok());
  CHECK(graded_oracle::is_linfty(l, 4));

  DGLA jac(make_space({"a", "b", "c"}, {0, 0, 0}));
  jac.set_bracket(0, 1, vec({0, 0, 1}));
  jac.set_bracket(1, 2, vec({1, 0, 0}));
  jac.set_bracket(0, 2, vec({1, 0, 0}));
  CHECK(!check_dgla(jac).ok());
  CHECK_THROWS_AS(dgla_shift(jac), InvalidStructure);
}

TEST_CASE("brackets violating Jacobi are located at arity 3") {
  LInftyStructure l(postlie::core::make_ungraded(3));
  l.set({0, 1}, vec({0, 0, 1}));
  l.set({1, 2}, vec({1, 0, 0}));
  l.set({0, 2}, vec({1, 0, 0}));
  auto rep = check_linfty(l, 3);
  CHECK(!rep.ok());
  CHECK(l.verified_up_to() == 0);
  for (const auto& e : rep.entries) CHECK(e.arity == std::vector<int>{3});
  CHECK(!graded_oracle::is_linfty(l, 3));
}

TEST_CASE("linfty morphisms") {
  auto na = dgla_shift(graded_fixtures::nonabelian_dgla());
  GradedFamily id(na.space(), na.space(), na.space(), 0);
  id.set(0, 1, {}, {0}, vec({1, 0}));
  id.set(0, 1, {}, {1}, vec({0, 1}));
  CHECK(check_linfty_morphism(id, na, na, 4).ok());
  LInftyStructure zero(make_space({"z"}, {-1}));
  GradedFamily f0(na.space(), na.space(), zero.space(), 0);
  CHECK(check_linfty_morphism(f0, na, zero, 4).ok());
  GradedFamily twice = Scalar(2) * id;
  auto rep = check_linfty_morphism(twice, na, na, 3);
  CHECK(!rep.ok());
  CHECK(rep.count("morphism") > 0);
}

TEST_CASE("graded post-Lie circ agrees with the permutation oracle") {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 6; ++trial) {
    auto space = random_space(rng, 2);
    auto f = graded_oracle::random_family(rng, space, trial % 3 - 1, 3, postlie_shape);
    auto g = graded_oracle::random_family(rng, space, trial % 2, 3, postlie_shape);
    auto c = graded_postlie_circ(f, g, 3);
    for (int n = 0; n < 3; ++n)
      for (int m = 1; n + m <= 3; ++m)
        for (const auto& x : graded_oracle::words(*space, n))
          for (const auto& y : graded_oracle::words(*space, m)) {
            CHECK(c.eval(n, m, x, y) == graded_oracle::postlie_circ(f, g, x, y));
            Tuple rx(x.rbegin(), x.rend()), ry(y.rbegin(), y.rend());
            CHECK(c.eval(n, m, rx, ry) == graded_oracle::postlie_circ(f, g, rx, ry));
          }
  }
}

TEST_CASE("graded post-Lie bracket antisymmetry and Jacobi") {
  std::mt19937_64 rng(91);
  for (int trial = 0; trial < 8; ++trial) {
    auto space = random_space(rng, 2);
    int a = trial % 2, b = (trial / 2) % 2, c = trial % 3 - 1;
    auto f = graded_oracle::random_family(rng, space, a, 3, postlie_shape);
    auto g = graded_oracle::random_family(rng, space, b, 3, postlie_shape);
    auto h = graded_oracle::random_family(rng, space, c, 3, postlie_shape);
    CHECK(graded_postlie_bracket(f, g, 3) == sgn(a * b + 1) * graded_postlie_bracket(g, f, 3));
    GradedFamily jac = sgn(a * c) * graded_postlie_bracket(graded_postlie_bracket(f, g, 3), h, 3) +
                       sgn(a * b) * graded_postlie_bracket(graded_postlie_bracket(g, h, 3), f, 3) +
                       sgn(b * c) * graded_postlie_bracket(graded_postlie_bracket(h, f, 3), g, 3);
    CHECK(jac.is_zero());
    if (a % 2 != 0) CHECK(graded_postlie_bracket(f, f, 3) == Scalar(2) * graded_postlie_circ(f, f, 3));
  }
}

TEST_CASE("composition is right-symmetric up to sign") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 6; ++trial) {
    auto space = random_space(rng, 2);
    int b = trial % 2, c = (trial / 2) % 2;
    auto f = graded_oracle::random_family(rng, space, trial % 3 - 1, 3, postlie_shape);
    auto g = graded_oracle::random_family(rng, space, b, 3, postlie_shape);
    auto h = graded_oracle::random_family(rng, space, c, 3, postlie_shape);
    auto assoc = [&](const GradedFamily& x, const GradedFamily& y, const GradedFamily& z) {
      return graded_postlie_circ(graded_postlie_circ(x, y, 3), z, 3) - graded_postlie_circ(x, graded_postlie_circ(y, z, 3), 3);
    };
    CHECK(assoc(f, g, h) == sgn(b * c) * assoc(f, h, g));
  }
}

TEST_CASE("dictionary with the classical bracket") {
  std::mt19937_64 rng(29);
  int pairs = 0;
  for (int dim = 1; dim <= 3; ++dim) {
    auto space = postlie::core::make_ungraded(static_cast<std::size_t>(dim));
    for (int n = 0; n <= 2; ++n)
      for (int m = 0; m <= 2; ++m)
        for (int rep = 0; rep < 2; ++rep) {
          auto f = fixtures::random_cochain(rng, space, n);
          auto g = fixtures::random_cochain(rng, space, m);
          auto lhs = graded_postlie_bracket(to_graded(f), to_graded(g), n + m + 1);
          CHECK(lhs == to_graded(postlie::classical::bracket(f, g)));
          CHECK(from_graded(to_graded(f)) == f);
          ++pairs;
        }
  }
  CHECK(pairs >= 30);
}

TEST_CASE("embedded classical structures") {
  auto all = fixtures::valid_suite();
  for (auto& b : fixtures::broken_suite()) all.push_back(b);
  for (const auto& f : all) {
    INFO(f.name);
    auto m = embed(f.data);
    bool classical = postlie::classical::is_postlie(f.data);
    auto rep = check_postlie_infinity(m, 4);
    CHECK(rep.ok() == classical);
    CHECK(rep.count("mc vs half bracket") == 0);
    CHECK(graded_oracle::is_postlie_infinity(m.maps(), 3) == classical);
    CHECK(m.verified_up_to() == (classical ? 4 : 0));
  }
}

TEST_CASE("sub-adjacent L-infinity algebras") {
  for (const auto& f : fixtures::valid_suite()) {
    INFO(f.name);
    auto m = embed(f.data);
    CHECK_THROWS_AS(subadjacent_linfty(m), InvalidStructure);
    REQUIRE(check_postlie_infinity(m, 4).ok());
    auto l = subadjacent_linfty(m);
    CHECK(check_linfty(l, 4).ok());
    auto expected = to_graded(postlie::classical::sub_adjacent(f.data).pi());
    CHECK(l.ops() == expected);
  }
  auto na = dgla_shift(graded_fixtures::nonabelian_dgla());
  PostLieInftyStructure only_zero(na.space());
  only_zero.set({}, {0, 1}, vec({0, 1}));
  REQUIRE(check_postlie_infinity(only_zero, 4).ok());
  CHECK(subadjacent_linfty(only_zero).ops() == na.ops());

  auto pre = embed(fixtures::prelie());
  REQUIRE(check_postlie_infinity(pre, 4).ok());
  auto l = subadjacent_linfty(pre);
  CHECK(l.eval(Tuple{0, 1}) == vec({0, 1}));
  CHECK(!postlie::core::is_zero(l.eval(Tuple{0, 1})));
}

TEST_CASE("open-closed structures") {
  auto adj = graded_fixtures::adjoint_open_closed();
  CHECK(check_open_closed(adj, 4).ok());
  CHECK(adj.verified_up_to() == 4);
  CHECK(graded_oracle::is_linfty(extension_linfty(adj), 4));

  GradedFamily r = adj.r();
  r.set(1, 1, {1}, {1}, vec({1, 0}));
  OpenClosedStructure bad(adj.l(), r);
  auto rep = check_open_closed(bad, 3);
  CHECK(!rep.ok());
  CHECK(rep.count("open-closed") > 0);
  CHECK(!graded_oracle::is_linfty(extension_linfty(bad), 3));
  bool located = false;
  for (const auto& e : rep.entries) located = located || e.arity == std::vector<int>{2, 1};
  CHECK(located);

  GradedFamily with_r10 = adj.r();
  with_r10.set(1, 0, {0}, {}, vec({0, 0}));
  with_r10.set(2, 0, {0, 1}, {}, vec({0, 1}));
  OpenClosedStructure odd(adj.l(), with_r10);
  CHECK(check_open_closed(odd, 4).ok() == graded_oracle::is_linfty(extension_linfty(odd), 4));
}

TEST_CASE("open-closed agrees with the extension oracle on random data") {
  std::mt19937_64 rng(77);
  auto g = dgla_shift(graded_fixtures::nonabelian_dgla());
  auto base = graded_fixtures::adjoint_open_closed();
  int passes = 0;
  for (int trial = 0; trial < 12; ++trial) {
    GradedFamily r = base.r();
    if (trial % 3 != 0) {
      auto noise = graded_oracle::random_family(rng, g.space(), 1, 2, [](int p, int q) { return p + q >= 1; }, 0.2);
      for (const auto& [k, m] : noise.components())
        for (const auto& [key, v] : m.table())
          if (trial % 2 == 0) r.add(k.first, k.second, key.first, key.second, v);
    }
    OpenClosedStructure s(g, r);
    bool ok = check_open_closed(s, 4).ok();
    CHECK(ok == graded_oracle::is_linfty(extension_linfty(s), 4));
    passes += ok;
  }
  CHECK(passes > 0);
  CHECK(passes < 12);
}

TEST_CASE("characterization theorem in both directions") {
  auto all = fixtures::valid_suite();
  for (auto& b : fixtures::broken_suite()) all.push_back(b);
  for (const auto& f : all) {
    INFO(f.name);
    auto res = check_characterization(embed(f.data), 4);
    CHECK(res.agree());
    CHECK(res.postlie.ok() == postlie::classical::is_postlie(f.data));
    auto oc = open_closed_from_postlie(embed(f.data));
    CHECK(graded_oracle::is_linfty(extension_linfty(oc), 3) == res.open_closed.ok());
  }
  auto m = dgca_action_postlie(graded_fixtures::cubic_action(), 4);
  CHECK(check_characterization(m, 4).agree());
  CHECK(check_characterization(m, 4).postlie.ok());
  PostLieInftyStructure perturbed = m;
  Vector bump(m.space()->dim());
  bump[3] = Scalar(1);
  perturbed.add({0}, {2}, bump);
  auto res = check_characterization(perturbed, 4);
  CHECK(!res.postlie.ok());
  CHECK(res.agree());
}

TEST_CASE("dgca action: zero action") {
  auto data = graded_fixtures::zero_action();
  CHECK(check_action_data(data, 4).ok());
  auto m = dgca_action_postlie(data, 4);
  for (const auto& [k, c] : m.maps().components())
    if (!c.is_zero()) CHECK(k.first == 0);
  Vector expected(4);
  expected[3] = Scalar(1);
  CHECK(m.eval({}, {2}) == expected);
  CHECK(check_postlie_infinity(m, 4).ok());
}

TEST_CASE("dgca action on the dual numbers") {
  auto data = graded_fixtures::dual_number_action();
  auto m = dgca_action_postlie(data, 4);
  CHECK(!m.maps().find(1, 1)->is_zero());
  CHECK(m.eval({0}, {1}) == vec({0, 1}));
  CHECK(check_postlie_infinity(m, 4).ok());
  CHECK(graded_oracle::is_postlie_infinity(m.maps(), 4));
  auto l = subadjacent_linfty(m);
  CHECK(check_linfty(l, 4).ok());
  CHECK(l == action_linfty(data));
  auto res = check_characterization(m, 4);
  CHECK(res.postlie.ok());
  CHECK(res.open_closed.ok());
}

TEST_CASE("dgca action of a nonabelian Lie algebra") {
  auto data = graded_fixtures::cubic_action();
  CHECK(check_action_data(data, 4).ok());
  auto m = dgca_action_postlie(data, 4);
  CHECK(check_postlie_infinity(m, 4).ok());
  auto l = subadjacent_linfty(m);
  CHECK(check_linfty(l, 4).ok());
  CHECK(l == action_linfty(data));
  CHECK(graded_oracle::is_linfty(l, 3));

  const auto& space = *m.space();
  for (int n = 0; n <= 2; ++n)
    for (const auto& x : graded_oracle::words(space, n))
      for (int y = 0; y < static_cast<int>(space.dim()); ++y) {
        std::vector<int> perm(x.size());
        std::iota(perm.begin(), perm.end(), 0);
        do {
          Tuple px;
          for (int p : perm) px.push_back(x[p]);
          int s = graded_oracle::koszul(x, perm, space);
          CHECK(action_postlie_formula(data, px, {y}) == postlie::core::scaled(m.eval(x, {y}), Scalar(s)));
        } while (std::next_permutation(perm.begin(), perm.end()));
      }
  for (int k = 1; k <= 3; ++k)
    for (const auto& w : graded_oracle::words(space, k)) {
      Tuple r(w.rbegin(), w.rend());
      std::vector<int> perm(w.size());
      std::iota(perm.rbegin(), perm.rend(), 0);
      int s = graded_oracle::koszul(w, perm, space);
      CHECK(action_linfty_formula(data, r) == postlie::core::scaled(l.eval(w), Scalar(s)));
      CHECK(action_postlie_formula(data, {}, r) == postlie::core::scaled(m.eval({}, w), Scalar(s)));
    }

  auto broken = data;
  broken.rho.set(1, 1, {1}, {1}, vec({0, 1, 0}));
  CHECK(!check_action_data(broken, 3).ok());
  CHECK_THROWS_AS(dgca_action_postlie(broken, 3), InvalidStructure);
}

TEST_CASE("homotopy Poisson flavor") {
  auto data = graded_fixtures::zero_bracket_poisson();
  CHECK(data.rho.is_zero());
  CHECK(check_action_data(data, 3).ok());
  auto m = dgca_action_postlie(data, 3);
  for (const auto& [k, c] : m.maps().components())
    if (k.first >= 1) CHECK(c.is_zero());
  CHECK(check_postlie_infinity(m, 3).ok());
  CHECK(subadjacent_linfty(m) == action_linfty(data));

  DGCA A = data.algebra;
  LInftyStructure l(A.space());
  l.set({1}, vec({0, 0, 1}));
  l.set({0, 0}, vec({0, 0, 1}));
  CHECK(!check_homotopy_poisson(A, l, 2).ok());
}

TEST_CASE("algebroid flavor") {
  auto data = graded_fixtures::cubic_algebroid();
  CHECK(check_action_data(data, 3).ok());
  auto m = dgca_action_postlie(data, 3);
  CHECK(check_postlie_infinity(m, 3).ok());
  CHECK(subadjacent_linfty(m) == action_linfty(data));

  auto bad = data;
  AlgebraModule mod(data.algebra.space(), data.lie.space());
  mod.set(0, 0, vec({1, 0}));
  mod.set(0, 1, vec({0, 1}));
  mod.set(1, 0, vec({1, 0}));
  bad.module = mod;
  auto rep = check_action_data(bad, 3);
  CHECK(!rep.ok());
  CHECK(rep.count("anchor linearity") + rep.count("module leibniz") + rep.count("module associativity") > 0);
}
