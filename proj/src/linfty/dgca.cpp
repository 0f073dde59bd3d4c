#include "postlie/linfty/dgca.hpp"

#include "postlie/core/canonical.hpp"
#include "postlie/linfty/shuffle_sum.hpp"

namespace postlie::linfty {

using core::SymmetryMode;

namespace {

std::vector<Tuple> words(const core::GradedBasisSpace& s, int n) {
  return core::canonical_tuples(s.dim(), static_cast<std::size_t>(n), s.degrees(), SymmetryMode::graded_symmetric);
}

int bound_of(const GradedFamily& f) { return f.cap() ? *f.cap() : f.max_arity(); }

Vector unit(const SpacePtr& s, int i) { return core::unit_vector(s->dim(), static_cast<std::size_t>(i)); }

}  // namespace

DGCA::DGCA(SpacePtr space) : space_(std::move(space)), d_(space_->dim(), space_->dim()) {}

void DGCA::set_product(int i, int j, const Vector& v) {
  const auto& s = *space_;
  if (v.size() != s.dim()) throw core::DimensionError("DGCA: product dimension");
  int di = s.degree(static_cast<std::size_t>(i)), dj = s.degree(static_cast<std::size_t>(j));
  for (std::size_t c = 0; c < v.size(); ++c)
    if (!v[c].is_zero() && s.degree(c) != di + dj) throw std::invalid_argument("DGCA: product is not homogeneous");
  Vector swapped = core::scaled(v, Scalar(sign_of(di * dj)));
  if (i == j && swapped != v) throw std::invalid_argument("DGCA: the square of an odd element must vanish");
  product_[{i, j}] = v;
  product_[{j, i}] = swapped;
}

void DGCA::set_differential(int i, const Vector& v) {
  const auto& s = *space_;
  if (v.size() != s.dim()) throw core::DimensionError("DGCA: differential dimension");
  for (std::size_t c = 0; c < v.size(); ++c)
    if (!v[c].is_zero() && s.degree(c) != s.degree(static_cast<std::size_t>(i)) + 1)
      throw std::invalid_argument("DGCA: d must have degree 1");
  d_.set_column(static_cast<std::size_t>(i), v);
}

void DGCA::set_differential(const SparseMatrix& d) {
  if (d.rows() != dim() || d.cols() != dim()) throw core::DimensionError("DGCA: differential shape");
  for (std::size_t i = 0; i < dim(); ++i) set_differential(static_cast<int>(i), d.column(i));
}

Vector DGCA::product(int i, int j) const {
  auto it = product_.find({i, j});
  return it == product_.end() ? Vector(dim()) : it->second;
}

Vector DGCA::product(const Vector& a, const Vector& b) const {
  Vector out(dim());
  for (const auto& [k, v] : product_) {
    const Scalar& x = a[static_cast<std::size_t>(k.first)];
    const Scalar& y = b[static_cast<std::size_t>(k.second)];
    if (!x.is_zero() && !y.is_zero()) core::axpy(out, x * y, v);
  }
  return out;
}

Vector DGCA::d(int i) const { return d_.column(static_cast<std::size_t>(i)); }
Vector DGCA::d(const Vector& a) const { return d_.apply(a); }

ResidualReport check_dgca(const DGCA& A) {
  const auto& s = A.space();
  const int n = static_cast<int>(A.dim());
  ResidualReport rep;
  for (int a = 0; a < n; ++a) {
    rep.record("d o d", {1}, {}, {a}, A.d(A.d(a)));
    for (int b = 0; b < n; ++b) {
      Vector leib = A.d(A.product(a, b));
      core::axpy(leib, Scalar(-1), A.product(A.d(a), unit(s, b)));
      core::axpy(leib, Scalar(-sign_of(s->degree(static_cast<std::size_t>(a)))), A.product(unit(s, a), A.d(b)));
      rep.record("leibniz", {2}, {}, {a, b}, leib);
      for (int c = 0; c < n; ++c) {
        Vector assoc = A.product(A.product(a, b), unit(s, c));
        core::axpy(assoc, Scalar(-1), A.product(unit(s, a), A.product(b, c)));
        rep.record("associativity", {3}, {}, {a, b, c}, assoc);
      }
    }
  }
  return rep;
}

ResidualReport check_derivation(const DGCA& A, Derivation& D) {
  const auto& s = *A.space();
  const int n = static_cast<int>(A.dim());
  if (D.matrix.rows() != s.dim() || D.matrix.cols() != s.dim()) throw core::DimensionError("derivation shape");
  ResidualReport rep;
  for (int a = 0; a < n; ++a) {
    Vector col = D.matrix.column(static_cast<std::size_t>(a));
    Vector off(s.dim());
    for (std::size_t c = 0; c < col.size(); ++c)
      if (s.degree(c) != s.degree(static_cast<std::size_t>(a)) + D.degree) off[c] = col[c];
    rep.record("derivation degree", {1}, {}, {a}, off);
    for (int b = 0; b < n; ++b) {
      Vector v = D.matrix.apply(A.product(a, b));
      core::axpy(v, Scalar(-1), A.product(col, unit(A.space(), b)));
      core::axpy(v, Scalar(-sign_of(D.degree * s.degree(static_cast<std::size_t>(a)))),
                 A.product(unit(A.space(), a), D.matrix.column(static_cast<std::size_t>(b))));
      rep.record("derivation leibniz", {2}, {}, {a, b}, v);
    }
  }
  D.leibniz_verified = rep.ok();
  return rep;
}

AlgebraModule::AlgebraModule(SpacePtr algebra, SpacePtr lie) : algebra_(std::move(algebra)), lie_(std::move(lie)) {}

void AlgebraModule::set(int a, int x, const Vector& v) {
  if (v.size() != lie_->dim()) throw core::DimensionError("AlgebraModule: value dimension");
  int deg = algebra_->degree(static_cast<std::size_t>(a)) + lie_->degree(static_cast<std::size_t>(x));
  for (std::size_t c = 0; c < v.size(); ++c)
    if (!v[c].is_zero() && lie_->degree(c) != deg) throw std::invalid_argument("AlgebraModule: action is not homogeneous");
  table_[{a, x}] = v;
}

Vector AlgebraModule::act(int a, int x) const {
  auto it = table_.find({a, x});
  return it == table_.end() ? Vector(lie_->dim()) : it->second;
}

Vector AlgebraModule::act(const Vector& a, const Vector& x) const {
  Vector out(lie_->dim());
  for (const auto& [k, v] : table_) {
    const Scalar& s = a[static_cast<std::size_t>(k.first)];
    const Scalar& t = x[static_cast<std::size_t>(k.second)];
    if (!s.is_zero() && !t.is_zero()) core::axpy(out, s * t, v);
  }
  return out;
}

GradedFamily make_rho(const DGCA& a, const LInftyStructure& g, std::optional<int> cap) {
  return GradedFamily(g.space(), a.space(), a.space(), 1, cap);
}

void set_rho(GradedFamily& rho, const Tuple& x, const Derivation& d) {
  if (!d.leibniz_verified) throw std::invalid_argument("set_rho: derivation has not been verified");
  int deg = 1;
  for (int i : x) deg += rho.first_space()->degree(static_cast<std::size_t>(i));
  if (d.degree != deg) throw std::invalid_argument("set_rho: derivation degree must be Σx + 1");
  const int k = static_cast<int>(x.size());
  for (std::size_t a = 0; a < d.matrix.cols(); ++a) rho.set(k, 1, x, {static_cast<int>(a)}, d.matrix.column(a));
}

namespace {

Vector rho_at(const GradedFamily& rho, std::span<const Arg> x, const Arg& a) {
  return rho.eval(static_cast<int>(x.size()), 1, x, std::span<const Arg>(&a, 1));
}

void check_module(const ActionData& data, int up_to, ResidualReport& rep) {
  const auto& A = data.algebra;
  const auto& mod = *data.module;
  const auto& g = *data.lie.space();
  const int na = static_cast<int>(A.dim()), ng = static_cast<int>(g.dim());
  for (int a = 0; a < na; ++a) rep.record("algebroid d", {1}, {}, {a}, A.d(a));
  for (int a = 0; a < na; ++a)
    for (int b = 0; b < na; ++b)
      for (int x = 0; x < ng; ++x) {
        Vector v = mod.act(unit(A.space(), a), mod.act(b, x));
        core::axpy(v, Scalar(-1), mod.act(A.product(a, b), unit(data.lie.space(), x)));
        rep.record("module associativity", {2, 1}, {a, b}, {x}, v);
      }
  for (int k = 1; k <= up_to; ++k) {
    auto rest = words(g, k - 1);
    for (int x1 = 0; x1 < ng; ++x1)
      for (const auto& w : rest)
        for (int a = 0; a < na; ++a) {
          int da = A.space()->degree(static_cast<std::size_t>(a));
          Vector ax = mod.act(a, x1);
          std::vector<Arg> args{Arg::of(ax)}, plain{Arg::of(x1)};
          for (int i : w) {
            args.push_back(Arg::of(i));
            plain.push_back(Arg::of(i));
          }
          for (int b = 0; b < na; ++b) {
            Vector v = rho_at(data.rho, args, Arg::of(b));
            core::axpy(v, Scalar(-sign_of(da)), A.product(unit(A.space(), a), rho_at(data.rho, plain, Arg::of(b))));
            Tuple in{x1};
            in.insert(in.end(), w.begin(), w.end());
            rep.record("anchor linearity", {k, 1}, in, {a, b}, v);
          }
        }
    if (!data.lie.ops().covers(k + 1)) continue;
    for (const auto& w : words(g, k))
      for (int x = 0; x < ng; ++x)
        for (int a = 0; a < na; ++a) {
          int da = A.space()->degree(static_cast<std::size_t>(a));
          int sx = degree_sum(w, 0, w.size(), g);
          Vector ax = mod.act(a, x);
          auto args = basis_args(w, 0, w.size());
          args.push_back(Arg::of(ax));
          Vector v = data.lie.eval(args);
          Vector r = rho_at(data.rho, basis_args(w, 0, w.size()), Arg::of(a));
          core::axpy(v, Scalar(-1), mod.act(r, unit(data.lie.space(), x)));
          Tuple full = w;
          full.push_back(x);
          core::axpy(v, Scalar(-sign_of(da * (1 + sx))), mod.act(unit(A.space(), a), data.lie.eval(full)));
          rep.record("module leibniz", {k, 1}, full, {a}, v);
        }
  }
}

}  // namespace

ResidualReport check_homotopy_poisson(const DGCA& A, const LInftyStructure& l, int up_to) {
  if (!core::same_space(A.space(), l.space())) throw std::invalid_argument("check_homotopy_poisson: space mismatch");
  require_cover(l.ops(), up_to, "check_homotopy_poisson");
  const auto& s = *A.space();
  const int n = static_cast<int>(A.dim());
  ResidualReport rep;
  for (int k = 1; k <= up_to; ++k)
    for (const auto& w : words(s, k - 1)) {
      int sx = degree_sum(w, 0, w.size(), s);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          Vector ab = A.product(a, b);
          auto args = basis_args(w, 0, w.size());
          args.push_back(Arg::of(ab));
          Vector v = l.eval(args);
          Tuple wa = w, wb = w;
          wa.push_back(a);
          wb.push_back(b);
          core::axpy(v, Scalar(-1), A.product(l.eval(wa), unit(A.space(), b)));
          core::axpy(v, Scalar(-sign_of(s.degree(static_cast<std::size_t>(a)) * (1 + sx))),
                     A.product(unit(A.space(), a), l.eval(wb)));
          rep.record("poisson leibniz", {k, 2}, w, {a, b}, v);
        }
    }
  return rep;
}

ResidualReport check_action_data(const ActionData& data, int up_to) {
  const auto& A = data.algebra;
  const auto& rho = data.rho;
  const auto& l = data.lie;
  if (!core::same_space(rho.first_space(), l.space()) || !core::same_space(rho.second_space(), A.space()) ||
      !core::same_space(rho.target_space(), A.space()) || rho.degree() != 1)
    throw std::invalid_argument("check_action_data: rho must map Sym(g) ⊗ A to A with degree 1");
  require_cover(l.ops(), up_to, "check_action_data");
  require_cover(rho, up_to + 1, "check_action_data");
  ResidualReport rep = check_dgca(A);
  rep.merge(linfty_residuals(l, up_to));
  const auto& g = *l.space();
  const auto& as = A.space();
  const int na = static_cast<int>(A.dim());
  for (int n = 1; n <= up_to; ++n)
    for (const auto& x : words(g, n)) {
      int sx = degree_sum(x, 0, x.size(), g);
      auto xargs = basis_args(x, 0, x.size());
      for (int a = 0; a < na; ++a) {
        int da = as->degree(static_cast<std::size_t>(a));
        for (int b = 0; b < na; ++b) {
          Vector v = rho_at(rho, xargs, Arg::of(A.product(a, b)));
          core::axpy(v, Scalar(-1), A.product(rho_at(rho, xargs, Arg::of(a)), unit(as, b)));
          core::axpy(v, Scalar(-sign_of((sx + 1) * da)), A.product(unit(as, a), rho_at(rho, xargs, Arg::of(b))));
          rep.record("rho derivation", {n, 2}, x, {a, b}, v);
        }
        Vector v(A.dim());
        for (int i = 1; i <= n; ++i) {
          int blocks[] = {i, n - i};
          for_each_split(x, g, blocks, [&](int sign, const Tuple& w) {
            auto ui = static_cast<std::size_t>(i);
            Vector inner = l.eval(basis_args(w, 0, ui));
            if (core::is_zero(inner)) return;
            std::vector<Arg> args{Arg::of(inner)};
            for (std::size_t t = ui; t < w.size(); ++t) args.push_back(Arg::of(w[t]));
            core::axpy(v, Scalar(sign), rho_at(rho, args, Arg::of(a)));
          });
        }
        for (int i = 1; i < n; ++i) {
          int blocks[] = {i, n - i};
          for_each_split(x, g, blocks, [&](int sign, const Tuple& w) {
            auto ui = static_cast<std::size_t>(i);
            Vector inner = rho_at(rho, basis_args(w, ui, w.size()), Arg::of(a));
            if (core::is_zero(inner)) return;
            int s = sign * sign_of(degree_sum(w, 0, ui, g));
            core::axpy(v, Scalar(s), rho_at(rho, basis_args(w, 0, ui), Arg::of(inner)));
          });
        }
        core::axpy(v, Scalar(1), A.d(rho_at(rho, xargs, Arg::of(a))));
        Vector da_vec = A.d(a);
        core::axpy(v, Scalar(sign_of(sx)), rho_at(rho, xargs, Arg::of(da_vec)));
        rep.record("action", {n, 1}, x, {a}, v);
      }
    }
  if (data.flavor == ActionFlavor::algebroid) {
    if (!data.module) throw std::invalid_argument("check_action_data: algebroid flavor needs a module");
    check_module(data, up_to, rep);
  }
  if (data.flavor == ActionFlavor::poisson) {
    int k = l.ops().covers(up_to + 1) ? up_to + 1 : up_to;
    rep.merge(check_homotopy_poisson(A, l, k));
    for (int a = 0; a < na; ++a) {
      Vector v = A.d(a);
      core::axpy(v, Scalar(-1), l.eval(Tuple{a}));
      rep.record("poisson differential", {1}, {}, {a}, v);
    }
  }
  return rep;
}

ActionData poisson_action(const DGCA& algebra, const LInftyStructure& l) {
  if (!core::same_space(algebra.space(), l.space())) throw std::invalid_argument("poisson_action: space mismatch");
  DGCA A = algebra;
  const int n = static_cast<int>(A.dim());
  for (int a = 0; a < n; ++a) {
    Vector l1 = l.eval(Tuple{a});
    Vector d = algebra.d(a);
    if (!core::is_zero(d) && d != l1) throw std::invalid_argument("poisson_action: differential differs from l_1");
    A.set_differential(a, l1);
  }
  GradedFamily rho = make_rho(A, l, l.cap());
  int bound = bound_of(l.ops());
  for (int k = 1; k + 1 <= bound; ++k)
    for (const auto& x : words(*l.space(), k))
      for (int a = 0; a < n; ++a) {
        Tuple xa = x;
        xa.push_back(a);
        Vector v = l.eval(xa);
        if (!core::is_zero(v)) rho.set(k, 1, x, {a}, v);
      }
  return ActionData{A, l, rho, std::nullopt, ActionFlavor::poisson};
}

ActionData algebroid_action(const DGCA& algebra, const LInftyStructure& g, const GradedFamily& anchor,
                            const AlgebraModule& module) {
  if (!core::same_space(module.algebra_space(), algebra.space()) || !core::same_space(module.lie_space(), g.space()))
    throw std::invalid_argument("algebroid_action: module space mismatch");
  return ActionData{algebra, g, anchor, module, ActionFlavor::algebroid};
}

SpacePtr tensor_space(const DGCA& a, const LInftyStructure& g) {
  const auto& as = *a.space();
  const auto& gs = *g.space();
  std::vector<std::string> names;
  std::vector<int> degs;
  for (std::size_t i = 0; i < as.dim(); ++i)
    for (std::size_t j = 0; j < gs.dim(); ++j) {
      names.push_back(as.name(i) + "*" + gs.name(j));
      degs.push_back(as.degree(i) + gs.degree(j));
    }
  return core::make_space(names, degs);
}

namespace {

struct Decoded {
  std::vector<int> a, x;
};

Decoded decode(const ActionData& data, const Tuple& word) {
  const int dg = static_cast<int>(data.lie.space()->dim());
  Decoded d;
  for (int t : word) {
    d.a.push_back(t / dg);
    d.x.push_back(t % dg);
  }
  return d;
}

Vector tensor(const Vector& a, const Vector& x) {
  Vector out(a.size() * x.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero())
      for (std::size_t j = 0; j < x.size(); ++j) out[i * x.size() + j] = a[i] * x[j];
  return out;
}

/// Σ_i (1 + x_1 + ... + x_{i−1}) a_i over the first `count` factors.
int prefix_exponent(const ActionData& data, const Decoded& d, std::size_t count) {
  const auto& as = *data.algebra.space();
  const auto& gs = *data.lie.space();
  int e = 0, xs = 0;
  for (std::size_t i = 0; i < count; ++i) {
    e += (1 + xs) * as.degree(static_cast<std::size_t>(d.a[i]));
    xs += gs.degree(static_cast<std::size_t>(d.x[i]));
  }
  return e;
}

Vector product_of(const DGCA& A, const std::vector<int>& as) {
  Vector acc = unit(A.space(), as.front());
  for (std::size_t i = 1; i < as.size(); ++i) acc = A.product(acc, unit(A.space(), as[i]));
  return acc;
}

Vector first_bracket(const ActionData& data, int a, int x) {
  const auto& A = data.algebra;
  Vector out = tensor(A.d(a), unit(data.lie.space(), x));
  core::axpy(out, Scalar(sign_of(A.space()->degree(static_cast<std::size_t>(a)))),
             tensor(unit(A.space(), a), data.lie.eval(Tuple{x})));
  return out;
}

Vector product_term(const ActionData& data, const Decoded& d) {
  std::size_t q = d.a.size();
  Vector lq = data.lie.eval(d.x);
  if (core::is_zero(lq)) return Vector(data.algebra.dim() * data.lie.space()->dim());
  return core::scaled(tensor(product_of(data.algebra, d.a), lq), Scalar(sign_of(prefix_exponent(data, d, q))));
}

}  // namespace

Vector action_postlie_formula(const ActionData& data, const Tuple& first, const Tuple& second) {
  const std::size_t p = first.size(), q = second.size();
  const std::size_t out_dim = data.algebra.dim() * data.lie.space()->dim();
  if (q == 0) throw std::invalid_argument("action_postlie_formula: q must be at least 1");
  Tuple word = first;
  word.insert(word.end(), second.begin(), second.end());
  Decoded d = decode(data, word);
  if (p == 0 && q == 1) return first_bracket(data, d.a[0], d.x[0]);
  if (p == 0) return product_term(data, d);
  if (q != 1) return Vector(out_dim);
  std::vector<Arg> xs;
  for (std::size_t i = 0; i < p; ++i) xs.push_back(Arg::of(d.x[i]));
  Vector r = rho_at(data.rho, xs, Arg::of(d.a[p]));
  if (core::is_zero(r)) return Vector(out_dim);
  Vector coeff = data.algebra.product(product_of(data.algebra, std::vector<int>(d.a.begin(), d.a.begin() + static_cast<long>(p))), r);
  return core::scaled(tensor(coeff, unit(data.lie.space(), d.x[p])), Scalar(sign_of(prefix_exponent(data, d, p))));
}

Vector action_linfty_formula(const ActionData& data, const Tuple& word) {
  const std::size_t k = word.size();
  if (k == 0) throw std::invalid_argument("action_linfty_formula: empty word");
  Decoded d = decode(data, word);
  if (k == 1) return first_bracket(data, d.a[0], d.x[0]);
  const auto& as = *data.algebra.space();
  const auto& gs = *data.lie.space();
  Vector out = product_term(data, d);
  int global = prefix_exponent(data, d, k);
  for (std::size_t j = 0; j < k; ++j) {
    int before = 0, after_ax = 0, after_x = 0;
    for (std::size_t i = 0; i < j; ++i) before += gs.degree(static_cast<std::size_t>(d.x[i]));
    for (std::size_t i = j + 1; i < k; ++i) {
      after_ax += as.degree(static_cast<std::size_t>(d.a[i])) + gs.degree(static_cast<std::size_t>(d.x[i]));
      after_x += gs.degree(static_cast<std::size_t>(d.x[i]));
    }
    int aj = as.degree(static_cast<std::size_t>(d.a[j]));
    int xj = gs.degree(static_cast<std::size_t>(d.x[j]));
    int e = (1 + before + after_ax) * aj + after_x * xj + global;
    std::vector<Arg> xs;
    std::vector<int> others;
    for (std::size_t i = 0; i < k; ++i)
      if (i != j) {
        xs.push_back(Arg::of(d.x[i]));
        others.push_back(d.a[i]);
      }
    Vector r = rho_at(data.rho, xs, Arg::of(d.a[j]));
    if (core::is_zero(r)) continue;
    Vector coeff = data.algebra.product(product_of(data.algebra, others), r);
    core::axpy(out, Scalar(sign_of(e)), tensor(coeff, unit(data.lie.space(), d.x[j])));
  }
  return out;
}

namespace {

int formula_bound(const ActionData& data) {
  return std::max({1, bound_of(data.lie.ops()), bound_of(data.rho)});
}

}  // namespace

PostLieInftyStructure dgca_action_postlie(const ActionData& data, int up_to) {
  auto rep = check_action_data(data, up_to);
  if (!rep.ok()) throw InvalidStructure("dgca_action_postlie: the action axioms fail", rep);
  auto space = tensor_space(data.algebra, data.lie);
  PostLieInftyStructure m(space, min_cap(data.lie.cap(), data.rho.cap()));
  const int bound = formula_bound(data);
  for (int t = 1; t <= bound; ++t) {
    for (const auto& w : words(*space, t)) {
      Vector v = action_postlie_formula(data, {}, w);
      if (!core::is_zero(v)) m.set({}, w, v);
    }
    if (t < 2) continue;
    for (const auto& x : words(*space, t - 1))
      for (int y = 0; y < static_cast<int>(space->dim()); ++y) {
        Vector v = action_postlie_formula(data, x, {y});
        if (!core::is_zero(v)) m.set(x, {y}, v);
      }
  }
  return m;
}

LInftyStructure action_linfty(const ActionData& data) {
  auto space = tensor_space(data.algebra, data.lie);
  LInftyStructure l(space, min_cap(data.lie.cap(), data.rho.cap()));
  const int bound = formula_bound(data);
  for (int k = 1; k <= bound; ++k)
    for (const auto& w : words(*space, k)) {
      Vector v = action_linfty_formula(data, w);
      if (!core::is_zero(v)) l.set(w, v);
    }
  return l;
}

}  // namespace postlie::linfty
