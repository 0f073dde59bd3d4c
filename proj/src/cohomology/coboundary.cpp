#include <stdexcept>

#include "postlie/cohomology/cohomology.hpp"
#include "postlie/core/permutation.hpp"

namespace postlie::cohomology {

using core::Arg;
using core::Tuple;

namespace {

Scalar sgn(int e) { return Scalar(e % 2 == 0 ? 1 : -1); }

// Evaluates the explicit formulas on basis inputs. Positions p are one-based as in the formulas.
class Explicit {
 public:
  Explicit(const Cochain& f, const PostLieData& d) : f_(f), d_(d), n_(cochain_degree(f)), dim_(d.dim()) {}

  Vector value(int k, int j, const Tuple& x) const {
    if (j == k) return kk(k, x);
    if (k == n_ - 1 && j == n_) return last(x);
    if (j == k + 1) return kk1(k, x);
    return kn(k, x);
  }

 private:
  Vector e(int i) const { return core::unit_vector(dim_, i); }
  // x_p for one-based p
  int at(const Tuple& x, int p) const { return x[p - 1]; }

  // f(vs ; ws) where each list mixes basis indices and vectors
  Vector f(const std::vector<Arg>& first, const std::vector<Arg>& second) const {
    return f_.eval(std::span<const Arg>(first), std::span<const Arg>(second));
  }
  std::vector<Arg> basis_args(const Tuple& x, int from, int to, std::initializer_list<int> skip) const {
    std::vector<Arg> r;
    for (int p = from; p <= to; ++p) {
      bool skipped = false;
      for (int s : skip) skipped |= s == p;
      if (!skipped) r.push_back(Arg::of(at(x, p)));
    }
    return r;
  }
  // [x_i,x_j] + x_i▷x_j - x_j▷x_i
  Vector sub_adjacent(int a, int b) const {
    Vector w = d_.bracket(a, b);
    core::axpy(w, Scalar(1), d_.triangle(a, b));
    core::axpy(w, Scalar(-1), d_.triangle(b, a));
    return w;
  }

  Vector kk(int k, const Tuple& x) const {
    Vector out(dim_);
    const int N = n_ + 1;
    for (int i = k + 1; i <= N; ++i) {
      Vector v = f(basis_args(x, 1, k, {}), basis_args(x, k + 1, N, {i}));
      core::axpy(out, sgn(i + 1), d_.bracket(e(at(x, i)), v));
    }
    for (int i = k + 1; i <= N; ++i)
      for (int j = i + 1; j <= N; ++j) {
        Vector w = d_.bracket(at(x, i), at(x, j));
        std::vector<Arg> second{Arg::of(w)};
        for (auto a : basis_args(x, k + 1, N, {i, j})) second.push_back(a);
        core::axpy(out, sgn(k + i + j), f(basis_args(x, 1, k, {}), second));
      }
    return out;
  }

  Vector kk1(int k, const Tuple& x) const {
    Vector out(dim_);
    const int N = n_ + 1;
    for (int i = 1; i <= k + 1; ++i) {
      Vector v = f(basis_args(x, 1, k + 1, {i}), basis_args(x, k + 2, N, {}));
      core::axpy(out, sgn(i - 1), d_.triangle(e(at(x, i)), v));
    }
    for (int i = 1; i <= k + 1; ++i)
      for (int j = i + 1; j <= k + 1; ++j) {
        Vector w = sub_adjacent(at(x, i), at(x, j));
        std::vector<Arg> first{Arg::of(w)};
        for (auto a : basis_args(x, 1, k + 1, {i, j})) first.push_back(a);
        core::axpy(out, sgn(i + j), f(first, basis_args(x, k + 2, N, {})));
      }
    for (int i = 1; i <= k + 1; ++i)
      for (int j = k + 2; j <= N; ++j) {
        Vector w = d_.triangle(at(x, i), at(x, j));
        std::vector<Arg> second{Arg::of(w)};
        for (auto a : basis_args(x, k + 2, N, {j})) second.push_back(a);
        core::axpy(out, -sgn(i + j + k + 1), f(basis_args(x, 1, k + 1, {i}), second));
      }
    return out;
  }

  Vector kn(int k, const Tuple& x) const {
    Vector out(dim_);
    const int blocks[2] = {k, n_ - k};
    core::for_each_shuffle(blocks, [&](std::span<const int> s) {
      std::vector<Arg> first, second;
      for (int p = 0; p < n_; ++p) (p < k ? first : second).push_back(Arg::of(x[s[p]]));
      Vector v = f(first, second);
      core::axpy(out, sgn(n_ - 1) * Scalar(core::parity_sign(s)), d_.triangle(v, e(x[n_])));
    });
    return out;
  }

  Vector last(const Tuple& x) const {
    Vector out(dim_);
    const int n = n_;
    const Arg tail = Arg::of(at(x, n + 1));
    for (int i = 1; i <= n; ++i) {
      Vector v = f(basis_args(x, 1, n, {i}), {tail});
      core::axpy(out, sgn(i + 1), d_.triangle(e(at(x, i)), v));
      Vector u = f(basis_args(x, 1, n, {i}), {Arg::of(at(x, i))});
      core::axpy(out, sgn(i + 1), d_.triangle(u, e(at(x, n + 1))));
      Vector w = d_.triangle(at(x, i), at(x, n + 1));
      core::axpy(out, -sgn(i + 1), f(basis_args(x, 1, n, {i}), {Arg::of(w)}));
    }
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        Vector w = sub_adjacent(at(x, i), at(x, j));
        std::vector<Arg> first{Arg::of(w)};
        for (auto a : basis_args(x, 1, n, {i, j})) first.push_back(a);
        core::axpy(out, sgn(i + j), f(first, {tail}));
      }
    return out;
  }

  const Cochain& f_;
  const PostLieData& d_;
  int n_;
  std::size_t dim_;
};

void check_pair(int n, int k, int j) {
  if (k < 0 || k > n - 1) throw std::invalid_argument("component k out of range");
  bool ok = j == k || j == k + 1 || (k <= n - 2 && j == n);
  if (!ok) throw std::invalid_argument("no component ∂^k_j for this pair");
}

Cochain component_unchecked(const Cochain& f, const PostLieData& data, int k, int j) {
  const int n = cochain_degree(f);
  check_pair(n, k, j);
  Cochain out = make_cochain(data.space(), n + 1);
  if (f.component(k).empty()) return out;
  // restrict f to its component k
  Cochain fk = make_cochain(data.space(), n);
  for (const auto& [key, v] : f.component(k)) fk.set(key.first, key.second, v);
  Explicit ex(fk, data);
  const auto& deg = data.space()->degrees();
  auto firsts = core::canonical_tuples(data.dim(), j, deg, core::SymmetryMode::antisymmetric);
  auto seconds = core::canonical_tuples(data.dim(), n + 1 - j, deg, core::SymmetryMode::antisymmetric);
  for (const auto& a : firsts)
    for (const auto& b : seconds) {
      Tuple x = a;
      x.insert(x.end(), b.begin(), b.end());
      Vector v = ex.value(k, j, x);
      if (!core::is_zero(v)) out.set(a, b, v);
    }
  return out;
}

}  // namespace

Cochain make_cochain(const core::SpacePtr& space, int n) {
  if (n < 1) throw std::invalid_argument("cochains start in degree 1");
  return Cochain(space, n - 1);
}

Cochain coboundary(const Cochain& f, const PostLieData& data) {
  classical::require_valid(data);
  if (!core::same_space(f.space(), data.space())) throw core::DimensionError("cochain over another space");
  Cochain r = classical::bracket(data.pi(), f);
  return sgn(cochain_degree(f) - 1) * r;
}

Cochain coboundary_component(const Cochain& f, const PostLieData& data, int k, int j) {
  classical::require_valid(data);
  if (!core::same_space(f.space(), data.space())) throw core::DimensionError("cochain over another space");
  return component_unchecked(f, data, k, j);
}

Cochain coboundary_explicit(const Cochain& f, const PostLieData& data) {
  classical::require_valid(data);
  const int n = cochain_degree(f);
  Cochain out = make_cochain(data.space(), n + 1);
  for (int k = 0; k <= n - 1; ++k) {
    out += component_unchecked(f, data, k, k);
    out += component_unchecked(f, data, k, k + 1);
    if (k <= n - 2) out += component_unchecked(f, data, k, n);
  }
  return out;
}

std::vector<Cochain::BasisElement> component_basis(const core::SpacePtr& space, int n, int k) {
  std::vector<Cochain::BasisElement> r;
  for (auto& b : Cochain::basis(space, n - 1))
    if (b.component == k) r.push_back(std::move(b));
  return r;
}

Cochain component_cochain(const core::SpacePtr& space, int n, int k, const Vector& coords) {
  auto basis = component_basis(space, n, k);
  if (coords.size() != basis.size()) throw core::DimensionError("component coordinate length");
  Cochain c = make_cochain(space, n);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!coords[i].is_zero()) {
      Vector v(space->dim());
      v[basis[i].output] = coords[i];
      c.add(basis[i].first, basis[i].second, v);
    }
  return c;
}

Vector component_coordinates(const Cochain& f, int k) {
  auto basis = component_basis(f.space(), cochain_degree(f), k);
  Vector r(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto& t = f.component(k);
    auto it = t.find({basis[i].first, basis[i].second});
    if (it != t.end()) r[i] = it->second[basis[i].output];
  }
  return r;
}

SparseMatrix coboundary_matrix(const PostLieData& data, int n) {
  classical::require_valid(data);
  auto src = Cochain::basis(data.space(), n - 1);
  std::size_t rows = Cochain::basis(data.space(), n).size();
  SparseMatrix m(rows, src.size());
  for (std::size_t c = 0; c < src.size(); ++c) {
    Vector coords(src.size());
    coords[c] = Scalar(1);
    Cochain f = Cochain::from_coordinates(data.space(), n - 1, coords);
    Cochain r = sgn(n - 1) * classical::bracket(data.pi(), f);
    m.set_column(c, r.coordinates());
  }
  return m;
}

SparseMatrix component_matrix(const PostLieData& data, int n, int k, int j) {
  classical::require_valid(data);
  check_pair(n, k, j);
  std::size_t cols = component_basis(data.space(), n, k).size();
  std::size_t rows = component_basis(data.space(), n + 1, j).size();
  SparseMatrix m(rows, cols);
  for (std::size_t c = 0; c < cols; ++c) {
    Vector coords(cols);
    coords[c] = Scalar(1);
    Cochain f = component_cochain(data.space(), n, k, coords);
    m.set_column(c, component_coordinates(component_unchecked(f, data, k, j), j));
  }
  return m;
}

}  // namespace postlie::cohomology
