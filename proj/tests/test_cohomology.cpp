#include <doctest.h>

#include "postlie/cohomology/deformation.hpp"
#include "support/classical_fixtures.hpp"
#include "support/random_cochains.hpp"

using namespace postlie::cohomology;
using postlie::core::Tuple;
using fixtures::vec;

namespace {

std::vector<fixtures::Named> small_valid(std::mt19937_64& rng, std::size_t max_dim, std::size_t randoms) {
  std::vector<fixtures::Named> out;
  for (auto& f : fixtures::valid_suite())
    if (f.data.dim() <= max_dim) out.push_back(f);
  for (auto& f : fixtures::random_valid(rng, randoms, max_dim)) out.push_back(f);
  return out;
}

// Chevalley-Eilenberg differential with adjoint coefficients on Hom(Λ^l g, g), written from
// d f(x_0..x_l) = Σ (-1)^i [x_i, f(..x̂_i..)] + Σ_{i<j} (-1)^{i+j} f([x_i,x_j], ..x̂_i..x̂_j..).
SparseMatrix ce_oracle(const PostLieData& d, int l) {
  auto space = d.space();
  const int n = static_cast<int>(d.dim());
  auto src = component_basis(space, l, 0);
  auto dst = component_basis(space, l + 1, 0);
  SparseMatrix m(dst.size(), src.size());
  for (std::size_t c = 0; c < src.size(); ++c) {
    Vector coords(src.size());
    coords[c] = Scalar(1);
    Cochain f = component_cochain(space, l, 0, coords);
    auto fv = [&](const std::vector<Vector>& args) {
      std::vector<postlie::core::Arg> a;
      for (const auto& v : args) a.push_back(postlie::core::Arg::of(v));
      return f.eval(std::span<const postlie::core::Arg>(), std::span<const postlie::core::Arg>(a));
    };
    for (std::size_t r = 0; r < dst.size(); ++r) {
      const Tuple& x = dst[r].second;
      Vector out(n);
      for (int i = 0; i <= l; ++i) {
        std::vector<Vector> rest;
        for (int p = 0; p <= l; ++p)
          if (p != i) rest.push_back(postlie::core::unit_vector(n, x[p]));
        postlie::core::axpy(out, Scalar(i % 2 ? -1 : 1), d.bracket(postlie::core::unit_vector(n, x[i]), fv(rest)));
        for (int j = i + 1; j <= l; ++j) {
          std::vector<Vector> args{d.bracket(x[i], x[j])};
          for (int p = 0; p <= l; ++p)
            if (p != i && p != j) args.push_back(postlie::core::unit_vector(n, x[p]));
          postlie::core::axpy(out, Scalar((i + j) % 2 ? -1 : 1), fv(args));
        }
      }
      m.set(r, c, out[dst[r].output]);
    }
  }
  return m;
}

Cochain random_ncochain(std::mt19937_64& rng, const postlie::core::SpacePtr& s, int n) {
  return fixtures::random_cochain(rng, s, n - 1);
}

}  // namespace

TEST_CASE("coboundary vanishes on 1-cochains of the zero structure") {
  for (std::size_t dim = 1; dim <= 3; ++dim) {
    auto z = fixtures::zero(dim);
    for (const auto& v : postlie::core::nullspace_rank(SparseMatrix(0, dim * dim)).nullspace_basis)
      CHECK(coboundary(Cochain::from_coordinates(z.space(), 0, v), z).is_zero());
  }
}

TEST_CASE("explicit components agree with the bracket coboundary") {
  std::mt19937_64 rng(101);
  std::size_t nonzero = 0;
  for (const auto& s : small_valid(rng, 3, 6)) {
    INFO(s.name);
    for (int n = 1; n <= 3; ++n) {
      Cochain f = random_ncochain(rng, s.data.space(), n);
      Cochain df = coboundary(f, s.data);
      nonzero += !df.is_zero();
      CHECK(coboundary_explicit(f, s.data) == df);
      for (int k = 0; k < n; ++k) {
        Cochain fk = make_cochain(s.data.space(), n);
        for (const auto& [key, v] : f.component(k)) fk.set(key.first, key.second, v);
        Cochain sum = coboundary_component(fk, s.data, k, k) + coboundary_component(fk, s.data, k, k + 1);
        if (k <= n - 2) sum += coboundary_component(fk, s.data, k, n);
        CHECK(sum == coboundary(fk, s.data));
      }
    }
  }
  CHECK(nonzero > 20);
}

TEST_CASE("component pairs outside the decomposition are refused") {
  auto d = fixtures::nonabelian();
  Cochain f = make_cochain(d.space(), 3);
  CHECK_THROWS(coboundary_component(f, d, 0, 2));
  CHECK_THROWS(coboundary_component(f, d, 2, 4));
  CHECK_THROWS(coboundary_component(f, d, 3, 3));
  CHECK_NOTHROW(coboundary_component(f, d, 0, 3));
}

TEST_CASE("coboundary squares to zero") {
  std::mt19937_64 rng(7);
  for (const auto& s : small_valid(rng, 3, 8)) {
    INFO(s.name);
    for (int n = 1; n <= 3; ++n) {
      Cochain f = random_ncochain(rng, s.data.space(), n);
      CHECK(coboundary(coboundary(f, s.data), s.data).is_zero());
    }
  }
  for (const auto& s : fixtures::random_valid(rng, 3, 4)) {
    if (s.data.dim() != 4) continue;
    for (int n = 1; n <= 3; ++n) {
      Cochain f = random_ncochain(rng, s.data.space(), n);
      CHECK(coboundary(coboundary(f, s.data), s.data).is_zero());
    }
  }
}

TEST_CASE("coboundary refuses invalid data") {
  auto bad = fixtures::broken_suite()[0].data;
  CHECK_THROWS_AS(coboundary(make_cochain(bad.space(), 1), bad), postlie::classical::InvalidStructure);
  CHECK_THROWS_AS(cohomology_group(bad, 1), postlie::classical::InvalidStructure);
}

TEST_CASE("1-cocycles on the nonabelian Lie algebra") {
  auto d = fixtures::nonabelian();
  Cochain ad = make_cochain(d.space(), 1);  // ad_{e1}: e2 -> e2
  ad.set({}, {1}, vec({0, 1}));
  CHECK(coboundary(ad, d).is_zero());
  Cochain id = make_cochain(d.space(), 1);
  id.set({}, {0}, vec({1, 0}));
  id.set({}, {1}, vec({0, 1}));
  Cochain did = coboundary(id, d);
  CHECK(!did.is_zero());
  // ∂(Id)_0(e1,e2) = [e1,e2]
  CHECK(did.eval(Tuple{}, Tuple{0, 1}) == vec({0, 1}));
}

TEST_CASE("cohomology of the one-dimensional abelian algebra") {
  auto z = fixtures::zero(1);
  auto h1 = cohomology_group(z, 1);
  CHECK(h1.dim_H == 1);
  auto h2 = cohomology_group(z, 2);
  CHECK(h2.dim_H == 1);
  CHECK(h2.dim_cocycles == 1);
  CHECK(h2.dim_coboundaries == 0);
  CHECK(h1.text() == "degree 1: dim cocycles = 1, dim coboundaries = 0, dim H^1 = 1");
}

TEST_CASE("cohomology report invariants") {
  std::mt19937_64 rng(5);
  for (const auto& s : small_valid(rng, 3, 4)) {
    INFO(s.name);
    for (int n = 1; n <= 3; ++n) {
      if (s.data.dim() == 3 && n == 3) continue;
      auto r = cohomology_group(s.data, n);
      CHECK(r.dim_cocycles >= r.dim_coboundaries);
      CHECK(r.dim_H == r.dim_cocycles - r.dim_coboundaries);
      CHECK(r.representatives.size() == r.dim_H);
      CHECK(r.cocycle_basis.size() == r.dim_cocycles);
      CHECK(r.coboundary_basis.size() == r.dim_coboundaries);
      for (const auto& c : r.cocycle_basis) CHECK(coboundary(c, s.data).is_zero());
      for (const auto& c : r.coboundary_basis) CHECK(coboundary(c, s.data).is_zero());
    }
  }
}

TEST_CASE("derivations") {
  for (std::size_t n = 1; n <= 3; ++n) CHECK(derivation_space(fixtures::zero(n)).size() == n * n);
  CHECK(derivation_space(fixtures::nonabelian()).size() == 2);
  std::mt19937_64 rng(13);
  std::vector<fixtures::Named> all = fixtures::valid_suite();
  for (auto& f : fixtures::random_valid(rng, 10, 4)) all.push_back(f);
  for (const auto& s : all) {
    INFO(s.name);
    auto der = derivation_space(s.data);
    for (const auto& phi : der)
      CHECK(postlie::classical::check_morphism(phi, s.data, s.data, postlie::classical::MorphismKind::derivation).ok());
    CHECK(der.size() == cohomology_group(s.data, 1).dim_H);
  }
}

TEST_CASE("kk subcomplexes") {
  std::mt19937_64 rng(19);
  for (const auto& s : small_valid(rng, 3, 4)) {
    INFO(s.name);
    auto r0 = subcomplex_check(s.data, SubcomplexMode::kk, 0, 3);
    CHECK(r0.residuals.ok());
    for (int l = 1; l <= 2; ++l) {
      auto ce = ce_oracle(s.data, l);
      const auto& m = r0.differentials[l - 1];
      CHECK(m.entries() == ce.entries());
    }
    for (int k = 1; k <= 2; ++k) CHECK(subcomplex_check(s.data, SubcomplexMode::kk, k, 2).residuals.ok());
  }
}

TEST_CASE("reduced complex, wedge complexes and the obstruction identity") {
  std::mt19937_64 rng(29);
  for (const auto& s : small_valid(rng, 3, 4)) {
    INFO(s.name);
    CHECK(subcomplex_check(s.data, SubcomplexMode::reduced, 0, 2).residuals.ok());
    for (int n = 1; n <= 3; ++n) CHECK(obstruction_check(s.data, n).ok());
    if (s.data.dim() >= 3) CHECK(subcomplex_check(s.data, SubcomplexMode::wedge, 3, 2).residuals.ok());
  }
  CHECK_THROWS(subcomplex_check(fixtures::zero(2), SubcomplexMode::wedge, 2, 2));
}

TEST_CASE("the reduced-complex kernel is exactly the derivation-type cochains") {
  auto d = fixtures::nonabelian();
  // C^1_Der = ker ∂^0_0 on Hom(g,g): derivations of the Lie bracket
  auto ker = postlie::core::nullspace_rank(component_matrix(d, 1, 0, 0)).nullspace_basis;
  CHECK(ker.size() == 2);
}

TEST_CASE("trivial and coboundary deformations") {
  std::mt19937_64 rng(31);
  for (const auto& s : small_valid(rng, 3, 5)) {
    INFO(s.name);
    DeformationPair zero(s.data.space());
    auto c = check_deformation(s.data, zero);
    CHECK(c.is_cocycle());
    CHECK(c.deformed_is_postlie());
    Cochain f = random_ncochain(rng, s.data.space(), 1);
    DeformationPair exact(coboundary(f, s.data));
    auto ce = check_deformation(s.data, exact);
    CHECK(ce.is_cocycle());
    CHECK(ce.deformed_is_postlie());
    SparseMatrix fm(s.data.dim(), s.data.dim());
    for (int b = 0; b < static_cast<int>(s.data.dim()); ++b) fm.set_column(b, f.eval(Tuple{}, Tuple{b}));
    CHECK(check_equivalence(s.data, zero, exact, fm).ok());
    auto found = find_equivalence(s.data, zero, exact);
    REQUIRE(found.has_value());
    CHECK(check_equivalence(s.data, zero, exact, *found).ok());
  }
}

TEST_CASE("a nontrivial deformation of the one-dimensional abelian algebra") {
  auto z = fixtures::zero(1);
  DeformationPair p(z.space());
  p.set_omega1(0, 0, vec({1}));
  auto c = check_deformation(z, p);
  CHECK(c.is_cocycle());
  CHECK(c.deformed_is_postlie());
  CHECK(!find_equivalence(z, DeformationPair(z.space()), p).has_value());
  CHECK(classify_deformations(z).dim_H == 1);
  SparseMatrix f(1, 1);
  f.set(0, 0, 1);
  CHECK(!check_equivalence(z, DeformationPair(z.space()), p, f).ok());
}

TEST_CASE("cocycle conditions match the dual-number axioms and the coboundary") {
  std::mt19937_64 rng(37);
  std::size_t cocycles = 0, non = 0;
  for (const auto& s : small_valid(rng, 3, 6)) {
    INFO(s.name);
    auto h2 = cohomology_group(s.data, 2);
    for (int t = 0; t < 4; ++t) {
      Cochain w = random_ncochain(rng, s.data.space(), 2);
      if (t % 2 == 0) {
        w = make_cochain(s.data.space(), 2);
        std::uniform_int_distribution<int> v(-2, 2);
        for (const auto& z : h2.cocycle_basis) w += Scalar(v(rng)) * z;
      }
      auto c = check_deformation(s.data, DeformationPair(w));
      CHECK(c.is_cocycle() == c.deformed_is_postlie());
      CHECK(c.is_cocycle() == coboundary(w, s.data).is_zero());
      (c.is_cocycle() ? cocycles : non)++;
    }
  }
  CHECK(cocycles > 0);
  CHECK(non > 0);
}

TEST_CASE("equivalence reports the broken cocycle") {
  auto d = fixtures::nonabelian();
  DeformationPair bad(d.space());
  bad.set_omega1(0, 0, vec({1, 0}));
  auto c = check_deformation(d, bad);
  CHECK(!c.is_cocycle());
  auto eq = check_equivalence(d, DeformationPair(d.space()), bad, SparseMatrix(2, 2));
  CHECK(!eq.cocycle_second.ok());
  CHECK(!eq.ok());
}
