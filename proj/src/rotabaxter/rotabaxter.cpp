#include "postlie/rotabaxter/rotabaxter.hpp"

#include <functional>
#include <stdexcept>

#include "postlie/core/canonical.hpp"
#include "postlie/linfty/shuffle_sum.hpp"

namespace postlie::rotabaxter {

using core::Arg;
using linfty::basis_args;
using linfty::for_each_split;

namespace {

std::vector<Tuple> words(const core::GradedBasisSpace& s, int n) {
  return core::canonical_tuples(s.dim(), static_cast<std::size_t>(n), s.degrees(), core::SymmetryMode::graded_symmetric);
}

Vector unit(std::size_t dim, std::size_t i) { return core::unit_vector(dim, i); }

int homogeneous_degree(const core::GradedBasisSpace& s, const Vector& v) {
  std::optional<int> deg;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (deg && *deg != s.degree(i)) throw std::invalid_argument("vdata: basis vector of H is not homogeneous");
    deg = s.degree(i);
  }
  if (!deg) throw std::invalid_argument("vdata: zero vector in the basis of H");
  return *deg;
}

using DecorationVisit = std::function<void(const Scalar&, const std::vector<Vector>&, const Tuple&)>;

void compositions(int total, int parts, std::vector<int>& cur, const std::function<void()>& visit) {
  if (parts == 0) {
    if (total == 0) visit();
    return;
  }
  for (int i = 1; i <= total - (parts - 1); ++i) {
    cur.push_back(i);
    compositions(total - i, parts - 1, cur, visit);
    cur.pop_back();
  }
}

/// Σ_k 1/k! Σ_{σ} ε Θ_{i_1}(..)…Θ_{i_k}(..) ⊗ tail over compositions i_1..i_k ≥ 1 of t and
/// tails of length n − t. With exact_tail set only that tail length is visited.
void for_each_decoration(const GradedFamily& theta, const core::GradedBasisSpace& h, const Tuple& word,
                         std::optional<int> exact_tail, const DecorationVisit& visit) {
  const int n = static_cast<int>(word.size());
  const int max_theta = theta.max_arity();
  if (max_theta == 0) return;
  for (int tail = 0; tail < n; ++tail) {
    if (exact_tail && tail != *exact_tail) continue;
    const int t = n - tail;
    for (int k = 1; k <= t; ++k) {
      Scalar coef = Scalar(1) / core::factorial(k);
      std::vector<int> parts;
      compositions(t, k, parts, [&] {
        for (int i : parts)
          if (i > max_theta || !theta.find(0, i)) return;
        std::vector<int> blocks = parts;
        blocks.push_back(tail);
        for_each_split(word, h, blocks, [&](int sign, const Tuple& w) {
          std::vector<Vector> values;
          std::size_t at = 0;
          for (int i : parts) {
            auto ui = static_cast<std::size_t>(i);
            values.push_back(theta.eval(0, i, {}, basis_args(w, at, at + ui)));
            if (core::is_zero(values.back())) return;
            at += ui;
          }
          visit(coef * sign, values, Tuple(w.begin() + t, w.end()));
        });
      });
    }
  }
}

std::vector<Arg> vector_args(const std::vector<Vector>& v) {
  std::vector<Arg> a;
  for (const auto& x : v) a.push_back(Arg::of(x));
  return a;
}

/// α on a word in the given order.
Vector alpha_raw(const HomotopyRBOperator& theta, const OpenClosedStructure& s, const Tuple& word) {
  const auto& r = s.r();
  const auto& h = *s.h_space();
  const int n = static_cast<int>(word.size());
  Vector out = r.eval(0, n, {}, basis_args(word, 0, word.size()));
  for_each_decoration(theta.theta(), h, word, std::nullopt, [&](const Scalar& c, const std::vector<Vector>& vals,
                                                                  const Tuple& tail) {
    int k = static_cast<int>(vals.size());
    if (!r.find(k, static_cast<int>(tail.size()))) return;
    core::axpy(out, c, r.eval(k, static_cast<int>(tail.size()), vector_args(vals), basis_args(tail, 0, tail.size())));
  });
  return out;
}

void require_operator_fits(const HomotopyRBOperator& theta, const OpenClosedStructure& s) {
  if (!core::same_space(theta.h_space(), s.h_space()) || !core::same_space(theta.g_space(), s.g_space()))
    throw std::invalid_argument("homotopy Rota-Baxter operator: spaces do not match the open-closed structure");
}

void require_verified(const HomotopyRBOperator& theta, const std::string& what) {
  if (theta.verified_up_to() == 0) throw InvalidStructure(what + ": operator not verified", ResidualReport{});
}

void require_ungraded(const DGLA& g, const std::string& what) {
  for (int d : g.space()->degrees())
    if (d != 0) throw std::invalid_argument(what + ": expected an ungraded Lie algebra");
  if (!g.differential().is_zero()) throw std::invalid_argument(what + ": expected zero differential");
}

}  // namespace

ResidualReport check_vdata(const DGLA& lie, const std::vector<Vector>& h_basis, const SparseMatrix& p,
                           const Vector& phi) {
  const auto& s = *lie.space();
  const std::size_t n = s.dim();
  if (p.rows() != n || p.cols() != n || phi.size() != n) throw core::DimensionError("vdata: dimension mismatch");
  for (const auto& h : h_basis)
    if (h.size() != n) throw core::DimensionError("vdata: dimension mismatch");
  ResidualReport rep = linfty::check_dgla(lie);
  for (std::size_t i = 0; i < n; ++i) rep.record("lie differential", {1}, {}, {static_cast<int>(i)}, lie.d(unit(n, i)));

  SparseMatrix p2 = p * p;
  for (std::size_t i = 0; i < n; ++i) {
    Vector v = p2.column(i);
    core::axpy(v, Scalar(-1), p.column(i));
    rep.record("projection idempotent", {1}, {}, {static_cast<int>(i)}, v);
  }
  core::IncrementalSpan span(n);
  for (std::size_t i = 0; i < h_basis.size(); ++i) {
    homogeneous_degree(s, h_basis[i]);
    if (!span.add(h_basis[i])) throw std::invalid_argument("vdata: basis of H is linearly dependent");
    Vector v = p.apply(h_basis[i]);
    core::axpy(v, Scalar(-1), h_basis[i]);
    rep.record("projection image", {1}, {}, {static_cast<int>(i)}, v);
    for (std::size_t j = i; j < h_basis.size(); ++j)
      rep.record("abelian", {2}, {}, {static_cast<int>(i), static_cast<int>(j)}, lie.bracket(h_basis[i], h_basis[j]));
  }
  if (core::rank(p) != h_basis.size()) {
    Vector gap(1, Scalar(static_cast<long>(core::rank(p))) - Scalar(static_cast<long>(h_basis.size())));
    rep.record("projection image", {0}, {}, {}, gap);
  }
  auto kernel = core::nullspace_rank(p).nullspace_basis;
  for (std::size_t i = 0; i < kernel.size(); ++i)
    for (std::size_t j = i; j < kernel.size(); ++j)
      rep.record("kernel subalgebra", {2}, {}, {static_cast<int>(i), static_cast<int>(j)},
                 p.apply(lie.bracket(kernel[i], kernel[j])));
  Vector off(n);
  for (std::size_t i = 0; i < n; ++i)
    if (s.degree(i) != 1) off[i] = phi[i];
  rep.record("phi degree", {1}, {}, {}, off);
  rep.record("phi kernel", {1}, {}, {}, p.apply(phi));
  rep.record("phi square", {2}, {}, {}, lie.bracket(phi, phi));
  return rep;
}

VData::VData(DGLA lie, std::vector<Vector> h_basis, SparseMatrix p, Vector phi)
    : lie_(std::move(lie)), h_basis_(std::move(h_basis)), p_(std::move(p)), phi_(std::move(phi)),
      h_matrix_(lie_.space()->dim(), h_basis_.size()) {
  auto rep = check_vdata(lie_, h_basis_, p_, phi_);
  if (!rep.ok()) throw InvalidStructure("vdata: conditions fail", rep);
  std::vector<std::string> names;
  std::vector<int> degs;
  for (std::size_t i = 0; i < h_basis_.size(); ++i) {
    names.push_back("h" + std::to_string(i + 1));
    degs.push_back(homogeneous_degree(*lie_.space(), h_basis_[i]));
    h_matrix_.set_column(i, h_basis_[i]);
  }
  h_space_ = core::make_space(names, degs);
}

Vector VData::coordinates(const Vector& v) const {
  auto c = core::solve(h_matrix_, v);
  if (!c) throw std::invalid_argument("vdata: element outside H");
  return *c;
}

Vector VData::element(const Vector& coordinates) const { return h_matrix_.apply(coordinates); }

Vector higher_derived_bracket(const VData& v, const std::vector<Vector>& args) {
  Vector x = v.phi();
  for (const auto& a : args) {
    v.coordinates(a);
    x = v.lie().bracket(x, a);
  }
  return v.projection().apply(x);
}

LInftyStructure derived_linfty(const VData& v, int cap) {
  LInftyStructure l(v.h_space(), cap);
  for (int k = 1; k <= cap; ++k)
    for (const auto& w : words(*v.h_space(), k)) {
      std::vector<Vector> args;
      for (int i : w) args.push_back(v.h_basis()[static_cast<std::size_t>(i)]);
      Vector value = v.coordinates(higher_derived_bracket(v, args));
      if (!core::is_zero(value)) l.set(w, value);
    }
  return l;
}

HomotopyRBOperator::HomotopyRBOperator(SpacePtr h, SpacePtr g, std::optional<int> cap)
    : theta_(h, h, std::move(g), 0, cap) {}

HomotopyRBOperator::HomotopyRBOperator(GradedFamily theta) : theta_(std::move(theta)) {
  if (theta_.degree() != 0) throw std::invalid_argument("homotopy Rota-Baxter operator: degree must be 0");
  for (const auto& [k, m] : theta_.components())
    if (k.first != 0 || k.second < 1)
      throw std::invalid_argument("homotopy Rota-Baxter operator: components must be Θ_k with k ≥ 1");
}

void HomotopyRBOperator::set(const Tuple& inputs, const Vector& value) {
  theta_.set(0, static_cast<int>(inputs.size()), {}, inputs, value);
  verified_ = 0;
}

Vector HomotopyRBOperator::eval(const Tuple& inputs) const {
  return theta_.eval(0, static_cast<int>(inputs.size()), {}, inputs);
}

ResidualReport rb_residuals(const HomotopyRBOperator& theta, const OpenClosedStructure& s, int up_to) {
  require_operator_fits(theta, s);
  linfty::require_cover(theta.theta(), up_to, "check_homotopy_rb");
  linfty::require_cover(s.l().ops(), up_to, "check_homotopy_rb");
  linfty::require_cover(s.r(), up_to, "check_homotopy_rb");
  const auto& h = *s.h_space();
  const auto& l = s.l().ops();
  const auto& th = theta.theta();
  ResidualReport rep;
  for (int n = 1; n <= up_to; ++n)
    for (const auto& w : words(h, n)) {
      Vector v(s.g_space()->dim());
      for_each_decoration(th, h, w, 0, [&](const Scalar& c, const std::vector<Vector>& vals, const Tuple&) {
        int k = static_cast<int>(vals.size());
        if (l.find(0, k)) core::axpy(v, c, l.eval(0, k, {}, vector_args(vals)));
      });
      for (int i = 1; i <= n; ++i) {
        if (!th.find(0, n - i + 1)) continue;
        int blocks[] = {i, n - i};
        for_each_split(w, h, blocks, [&](int sign, const Tuple& sw) {
          auto ui = static_cast<std::size_t>(i);
          Vector inner = alpha_raw(theta, s, Tuple(sw.begin(), sw.begin() + i));
          if (core::is_zero(inner)) return;
          std::vector<Arg> args{Arg::of(inner)};
          for (std::size_t j = ui; j < sw.size(); ++j) args.push_back(Arg::of(sw[j]));
          core::axpy(v, Scalar(-sign), th.eval(0, n - i + 1, {}, args));
        });
      }
      rep.record("rota-baxter", {n}, {}, w, v);
    }
  return rep;
}

ResidualReport check_homotopy_rb(HomotopyRBOperator& theta, const OpenClosedStructure& s, int up_to) {
  auto rep = rb_residuals(theta, s, up_to);
  if (rep.ok()) theta.mark_verified(up_to);
  return rep;
}

GradedFamily descendant_maps(const HomotopyRBOperator& theta, const OpenClosedStructure& s, int up_to) {
  require_operator_fits(theta, s);
  linfty::require_cover(theta.theta(), up_to, "descendant");
  linfty::require_cover(s.r(), up_to, "descendant");
  GradedFamily out = GradedFamily::on(s.h_space(), 1, up_to);
  for (int n = 1; n <= up_to; ++n)
    for (const auto& w : words(*s.h_space(), n)) {
      Vector v = alpha_raw(theta, s, w);
      if (!core::is_zero(v)) out.set(0, n, {}, w, v);
    }
  return out;
}

Descendant descendant_linfty(const HomotopyRBOperator& theta, const OpenClosedStructure& s) {
  require_verified(theta, "descendant_linfty");
  const int n = theta.verified_up_to();
  LInftyStructure alpha(descendant_maps(theta, s, n));
  auto linfty_rep = linfty::check_linfty(alpha, n);
  auto morphism = linfty::check_linfty_morphism(theta.theta(), alpha, s.l(), n);
  return Descendant{std::move(alpha), std::move(linfty_rep), std::move(morphism)};
}

PostLieInftyStructure induced_postlie_infinity(const HomotopyRBOperator& theta, const OpenClosedStructure& s) {
  require_verified(theta, "induced_postlie_infinity");
  require_operator_fits(theta, s);
  for (const auto& [k, m] : s.r().components())
    if (k.second == 0 && !m.is_zero())
      throw std::invalid_argument("induced_postlie_infinity: R_{p,0} must vanish for an action");
  const int up_to = theta.verified_up_to();
  linfty::require_cover(s.r(), up_to, "induced_postlie_infinity");
  const auto& h = *s.h_space();
  const auto& r = s.r();
  PostLieInftyStructure out(s.h_space(), up_to);
  for (int p = 0; p < up_to; ++p)
    for (int q = 1; p + q <= up_to; ++q) {
      if (p == 0 && !r.find(0, q)) continue;
      auto ys = words(h, q);
      for (const auto& x : words(h, p))
        for (const auto& y : ys) {
          auto second = basis_args(y, 0, y.size());
          Vector v(h.dim());
          if (p == 0) {
            v = r.eval(0, q, {}, y);
          } else {
            for_each_decoration(theta.theta(), h, x, 0, [&](const Scalar& c, const std::vector<Vector>& vals,
                                                            const Tuple&) {
              int k = static_cast<int>(vals.size());
              if (r.find(k, q)) core::axpy(v, c, r.eval(k, q, vector_args(vals), second));
            });
          }
          if (!core::is_zero(v)) out.set(x, y, v);
        }
    }
  return out;
}

OpenClosedStructure strict_open_closed(const DGLA& g, const DGLA& h, const std::vector<SparseMatrix>& rho) {
  require_ungraded(g, "strict_open_closed");
  require_ungraded(h, "strict_open_closed");
  const std::size_t dg = g.space()->dim(), dh = h.space()->dim();
  if (rho.size() != dg) throw core::DimensionError("strict_open_closed: one matrix per basis element of g");
  LInftyStructure lg = linfty::dgla_shift(g);
  LInftyStructure lh = linfty::dgla_shift(h);
  GradedFamily r(lg.space(), lh.space(), lh.space(), 1);
  if (const auto* mu = lh.ops().find(0, 2))
    for (const auto& [key, v] : mu->table()) r.set(0, 2, key.first, key.second, v);
  for (std::size_t i = 0; i < dg; ++i) {
    if (rho[i].rows() != dh || rho[i].cols() != dh) throw core::DimensionError("strict_open_closed: action matrix size");
    for (std::size_t j = 0; j < dh; ++j) {
      Vector v = rho[i].column(j);
      if (!core::is_zero(v)) r.set(1, 1, {static_cast<int>(i)}, {static_cast<int>(j)}, v);
    }
  }
  OpenClosedStructure s(std::move(lg), std::move(r));
  auto rep = linfty::check_open_closed(s, 3);
  if (!rep.ok()) throw InvalidStructure("strict_open_closed: not an action by derivations", rep);
  return s;
}

HomotopyRBOperator strict_operator(const OpenClosedStructure& s, const SparseMatrix& t) {
  const std::size_t dg = s.g_space()->dim(), dh = s.h_space()->dim();
  if (t.rows() != dg || t.cols() != dh) throw core::DimensionError("strict_operator: matrix size");
  HomotopyRBOperator theta(s.h_space(), s.g_space());
  for (std::size_t j = 0; j < dh; ++j) {
    Vector v = t.column(j);
    if (!core::is_zero(v)) theta.set({static_cast<int>(j)}, v);
  }
  return theta;
}

HomotopyRBOperator identity_operator(const SpacePtr& g) {
  HomotopyRBOperator theta(g, g);
  for (std::size_t i = 0; i < g->dim(); ++i) theta.set({static_cast<int>(i)}, unit(g->dim(), i));
  return theta;
}

}  // namespace postlie::rotabaxter
