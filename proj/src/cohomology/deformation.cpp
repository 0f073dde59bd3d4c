#include "postlie/cohomology/deformation.hpp"

namespace postlie::cohomology {

using core::Arg;
using core::DualScalar;
using core::Tuple;

DeformationPair::DeformationPair(Cochain omega) : omega_(std::move(omega)) {
  if (omega_.degree() != 1) throw core::DimensionError("a deformation pair is a 2-cochain");
}

namespace {

using DualVector = std::vector<DualScalar>;

Vector w0(const Cochain& w, const Vector& x, const Vector& y) {
  Arg s[2] = {Arg::of(x), Arg::of(y)};
  return w.eval(std::span<const Arg>(), std::span<const Arg>(s, 2));
}

Vector w1(const Cochain& w, const Vector& x, const Vector& y) {
  Arg a = Arg::of(x), b = Arg::of(y);
  return w.eval(std::span<const Arg>(&a, 1), std::span<const Arg>(&b, 1));
}

ResidualReport cocycle_residuals(const PostLieData& d, const Cochain& w) {
  ResidualReport rep;
  const int n = static_cast<int>(d.dim());
  auto e = [n](int i) { return core::unit_vector(n, i); };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        Vector x = e(a), y = e(b), z = e(c);
        if (a < b && b < c) {
          Vector r = d.bracket(x, w0(w, y, z));
          core::axpy(r, Scalar(-1), d.bracket(y, w0(w, x, z)));
          core::axpy(r, Scalar(1), d.bracket(z, w0(w, x, y)));
          core::axpy(r, Scalar(-1), w0(w, d.bracket(x, y), z));
          core::axpy(r, Scalar(1), w0(w, d.bracket(x, z), y));
          core::axpy(r, Scalar(-1), w0(w, d.bracket(y, z), x));
          rep.record("d_CE omega0", {3}, {a, b, c}, {}, r);
        }
        if (b < c) {
          Vector r = w1(w, x, d.bracket(y, z));
          core::axpy(r, Scalar(1), d.triangle(x, w0(w, y, z)));
          core::axpy(r, Scalar(-1), w0(w, d.triangle(x, y), z));
          core::axpy(r, Scalar(-1), d.bracket(w1(w, x, y), z));
          core::axpy(r, Scalar(-1), w0(w, y, d.triangle(x, z)));
          core::axpy(r, Scalar(-1), d.bracket(y, w1(w, x, z)));
          rep.record("linearized post-1", {1, 2}, {a}, {b, c}, r);
        }
        if (a < b) {
          Vector u = w1(w, x, y);
          core::axpy(u, Scalar(-1), w1(w, y, x));
          core::axpy(u, Scalar(1), w0(w, x, y));
          Vector s = d.triangle(x, y);
          core::axpy(s, Scalar(-1), d.triangle(y, x));
          core::axpy(s, Scalar(1), d.bracket(x, y));
          Vector r = d.triangle(u, z);
          core::axpy(r, Scalar(1), w1(w, s, z));
          core::axpy(r, Scalar(-1), w1(w, x, d.triangle(y, z)));
          core::axpy(r, Scalar(-1), d.triangle(x, w1(w, y, z)));
          core::axpy(r, Scalar(1), w1(w, y, d.triangle(x, z)));
          core::axpy(r, Scalar(1), d.triangle(y, w1(w, x, z)));
          rep.record("linearized post-2", {2, 1}, {a, b}, {c}, r);
        }
      }
  return rep;
}

void deformed_tables(const PostLieData& d, const Cochain& w, DualTable& lie, DualTable& tri) {
  const int n = static_cast<int>(d.dim());
  lie.assign(n, std::vector<DualVector>(n, DualVector(n)));
  tri = lie;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vector b = d.bracket(i, j), t = d.triangle(i, j);
      Vector wb = w.eval(Tuple{}, Tuple{i, j}), wt = w.eval(Tuple{i}, Tuple{j});
      for (int c = 0; c < n; ++c) {
        lie[i][j][c] = DualScalar(b[c], wb[c]);
        tri[i][j][c] = DualScalar(t[c], wt[c]);
      }
    }
}

// product of structure table with two dual vectors
DualVector mul(const DualTable& t, const DualVector& x, const DualVector& y) {
  std::size_t n = t.size();
  DualVector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      DualScalar c = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) out[k] += c * t[i][j][k];
    }
  }
  return out;
}

DualVector unit(std::size_t n, std::size_t i) {
  DualVector v(n);
  v[i] = DualScalar(1);
  return v;
}

DualVector combine(std::initializer_list<std::pair<int, const DualVector*>> terms) {
  DualVector out(terms.begin()->second->size());
  for (const auto& [s, v] : terms)
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += DualScalar(s) * (*v)[k];
  return out;
}

void record_dual(ResidualReport& rep, const std::string& name, std::vector<int> arity, const Tuple& first,
                 const Tuple& second, const DualVector& v) {
  Vector value(v.size()), slope(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    value[k] = v[k].value;
    slope[k] = v[k].slope;
  }
  rep.record(name + " [t^0]", arity, first, second, value);
  rep.record(name + " [t^1]", arity, first, second, slope);
}

DualVector apply_dual(const std::vector<DualVector>& phi_columns, const DualVector& v) {
  DualVector out(v.size());
  for (std::size_t j = 0; j < v.size(); ++j)
    for (std::size_t k = 0; k < v.size(); ++k) out[k] += v[j] * phi_columns[j][k];
  return out;
}

}  // namespace

ResidualReport dual_axioms(const DualTable& lie, const DualTable& tri) {
  ResidualReport rep;
  const std::size_t n = lie.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      DualVector x = unit(n, a), y = unit(n, b);
      DualVector anti = mul(lie, x, y);
      DualVector yx = mul(lie, y, x);
      for (std::size_t k = 0; k < n; ++k) anti[k] += yx[k];
      Tuple ab{static_cast<int>(a), static_cast<int>(b)};
      record_dual(rep, "antisymmetry", {2}, ab, {}, anti);
      for (std::size_t c = 0; c < n; ++c) {
        DualVector z = unit(n, c);
        Tuple abc{static_cast<int>(a), static_cast<int>(b), static_cast<int>(c)};
        DualVector j1 = mul(lie, x, mul(lie, y, z)), j2 = mul(lie, y, mul(lie, z, x)), j3 = mul(lie, z, mul(lie, x, y));
        record_dual(rep, "jacobi", {3}, abc, {}, combine({{1, &j1}, {1, &j2}, {1, &j3}}));
        DualVector p1 = mul(tri, x, mul(lie, y, z)), p2 = mul(lie, mul(tri, x, y), z), p3 = mul(lie, y, mul(tri, x, z));
        record_dual(rep, "post-1", {1, 2}, {abc[0]}, {abc[1], abc[2]}, combine({{1, &p1}, {-1, &p2}, {-1, &p3}}));
        DualVector xy = mul(lie, x, y), txy = mul(tri, x, y), tyx = mul(tri, y, x);
        DualVector s = combine({{1, &xy}, {1, &txy}, {-1, &tyx}});
        DualVector q1 = mul(tri, s, z), q2 = mul(tri, x, mul(tri, y, z)), q3 = mul(tri, y, mul(tri, x, z));
        record_dual(rep, "post-2", {2, 1}, {abc[0], abc[1]}, {abc[2]}, combine({{1, &q1}, {-1, &q2}, {1, &q3}}));
      }
    }
  return rep;
}

DeformationCheck check_deformation(const PostLieData& data, const DeformationPair& pair) {
  classical::require_valid(data);
  if (!core::same_space(pair.cochain().space(), data.space())) throw core::DimensionError("pair over another space");
  DeformationCheck out;
  out.cocycle = cocycle_residuals(data, pair.cochain());
  DualTable lie, tri;
  deformed_tables(data, pair.cochain(), lie, tri);
  out.dual = dual_axioms(lie, tri);
  return out;
}

EquivalenceCheck check_equivalence(const PostLieData& data, const DeformationPair& pair,
                                   const DeformationPair& pair_prime, const SparseMatrix& f) {
  classical::require_valid(data);
  const int n = static_cast<int>(data.dim());
  if (f.rows() != data.dim() || f.cols() != data.dim()) throw core::DimensionError("f must be square");
  EquivalenceCheck out;
  out.cocycle_first = cocycle_residuals(data, pair.cochain());
  out.cocycle_second = cocycle_residuals(data, pair_prime.cochain());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Vector x = core::unit_vector(n, a), y = core::unit_vector(n, b);
      Vector fx = f.apply(x), fy = f.apply(y);
      if (a < b) {
        Vector r = pair_prime.omega0(a, b);
        core::axpy(r, Scalar(-1), pair.omega0(a, b));
        core::axpy(r, Scalar(-1), data.bracket(x, fy));
        core::axpy(r, Scalar(1), data.bracket(y, fx));
        core::axpy(r, Scalar(1), f.apply(data.bracket(a, b)));
        out.difference.record("omega0' - omega0 - d_CE f", {2}, {a, b}, {}, r);
      }
      Vector r = pair_prime.omega1(a, b);
      core::axpy(r, Scalar(-1), pair.omega1(a, b));
      core::axpy(r, Scalar(-1), data.triangle(fx, y));
      core::axpy(r, Scalar(-1), data.triangle(x, fy));
      core::axpy(r, Scalar(1), f.apply(data.triangle(a, b)));
      out.difference.record("omega1' - omega1 - d_tri f", {1, 1}, {a}, {b}, r);
    }
  DualTable lie, tri, lie_p, tri_p;
  deformed_tables(data, pair.cochain(), lie, tri);
  deformed_tables(data, pair_prime.cochain(), lie_p, tri_p);
  std::vector<DualVector> phi(n, DualVector(n));
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) phi[j][k] = DualScalar(Scalar(j == k ? 1 : 0), f.get(k, j));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      DualVector x = unit(n, a), y = unit(n, b);
      DualVector px = apply_dual(phi, x), py = apply_dual(phi, y);
      DualVector l1 = apply_dual(phi, mul(lie_p, x, y)), l2 = mul(lie, px, py);
      DualVector t1 = apply_dual(phi, mul(tri_p, x, y)), t2 = mul(tri, px, py);
      record_dual(out.dual_isomorphism, "bracket", {2}, {a, b}, {}, combine({{1, &l1}, {-1, &l2}}));
      record_dual(out.dual_isomorphism, "triangle", {1, 1}, {a}, {b}, combine({{1, &t1}, {-1, &t2}}));
    }
  return out;
}

CohomologyReport classify_deformations(const PostLieData& data) { return cohomology_group(data, 2); }

std::optional<SparseMatrix> find_equivalence(const PostLieData& data, const DeformationPair& pair,
                                             const DeformationPair& pair_prime) {
  Vector target = pair_prime.cochain().coordinates();
  core::axpy(target, Scalar(-1), pair.cochain().coordinates());
  auto x = core::solve(coboundary_matrix(data, 1), target);
  if (!x) return std::nullopt;
  auto basis = Cochain::basis(data.space(), 0);
  SparseMatrix f(data.dim(), data.dim());
  for (std::size_t i = 0; i < basis.size(); ++i)
    f.add(basis[i].output, static_cast<std::size_t>(basis[i].second[0]), (*x)[i]);
  return f;
}

}  // namespace postlie::cohomology
