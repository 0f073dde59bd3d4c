#include "postlie/linfty/linfty.hpp"

#include "postlie/core/canonical.hpp"
#include "postlie/core/permutation.hpp"
#include "postlie/linfty/shuffle_sum.hpp"

namespace postlie::linfty {

using core::SymmetryMode;

LInftyStructure::LInftyStructure(SpacePtr space, std::optional<int> cap)
    : ops_(GradedFamily::on(std::move(space), 1, cap)) {}

LInftyStructure::LInftyStructure(GradedFamily ops) : ops_(std::move(ops)) {
  if (ops_.degree() != 1) throw std::invalid_argument("LInftyStructure: brackets must have degree 1");
  if (!core::same_space(ops_.first_space(), ops_.target_space()) ||
      !core::same_space(ops_.second_space(), ops_.target_space()))
    throw std::invalid_argument("LInftyStructure: brackets must act on a single space");
  for (const auto& [k, m] : ops_.components())
    if (k.first != 0 && !m.is_zero()) throw std::invalid_argument("LInftyStructure: components must be (0,k)");
}

void LInftyStructure::set(const Tuple& inputs, const Vector& value) {
  ops_.set(0, static_cast<int>(inputs.size()), {}, inputs, value);
  verified_ = 0;
}

void LInftyStructure::add(const Tuple& inputs, const Vector& value) {
  ops_.add(0, static_cast<int>(inputs.size()), {}, inputs, value);
  verified_ = 0;
}

Vector LInftyStructure::eval(const Tuple& inputs) const {
  return ops_.eval(0, static_cast<int>(inputs.size()), {}, inputs);
}

Vector LInftyStructure::eval(std::span<const Arg> inputs) const {
  return ops_.eval(0, static_cast<int>(inputs.size()), {}, inputs);
}

Vector nr_circ_at(const GradedFamily& f, const GradedFamily& g, const Tuple& word) {
  const auto& space = *g.second_space();
  const int n = static_cast<int>(word.size());
  Vector out(f.target_space()->dim());
  for (int j = 1; j <= n; ++j) {
    if (!g.find(0, j) || !f.find(0, n - j + 1)) continue;
    int blocks[] = {j, n - j};
    for_each_split(word, space, blocks, [&](int sign, const Tuple& w) {
      Vector inner = g.eval(0, j, {}, basis_args(w, 0, static_cast<std::size_t>(j)));
      if (core::is_zero(inner)) return;
      std::vector<Arg> args{Arg::of(inner)};
      for (std::size_t i = static_cast<std::size_t>(j); i < w.size(); ++i) args.push_back(Arg::of(w[i]));
      core::axpy(out, Scalar(sign), f.eval(0, n - j + 1, {}, args));
    });
  }
  return out;
}

namespace {

void require_single_space(const GradedFamily& f, const GradedFamily& g) {
  if (!core::same_space(f.second_space(), g.second_space()) ||
      !core::same_space(f.target_space(), g.target_space()) ||
      !core::same_space(f.second_space(), f.target_space()))
    throw std::invalid_argument("nr_circ: families must act on the same space");
}

std::vector<Tuple> words(const core::GradedBasisSpace& s, int n) {
  return core::canonical_tuples(s.dim(), static_cast<std::size_t>(n), s.degrees(), SymmetryMode::graded_symmetric);
}

}  // namespace

GradedFamily nr_circ(const GradedFamily& f, const GradedFamily& g, int up_to) {
  require_single_space(f, g);
  require_cover(f, up_to, "nr_circ");
  require_cover(g, up_to, "nr_circ");
  const auto& space = f.target_space();
  GradedFamily out = GradedFamily::on(space, f.degree() + g.degree(), up_to);
  for (int n = 1; n <= up_to; ++n)
    for (const auto& w : words(*space, n)) {
      Vector v = nr_circ_at(f, g, w);
      if (!core::is_zero(v)) out.set(0, n, {}, w, v);
    }
  return out;
}

GradedFamily nr_bracket(const GradedFamily& f, const GradedFamily& g, int up_to) {
  GradedFamily a = nr_circ(f, g, up_to);
  GradedFamily b = nr_circ(g, f, up_to);
  b *= Scalar(-sign_of(f.degree() * g.degree()));
  return a += b;
}

ResidualReport linfty_residuals(const LInftyStructure& l, int up_to) {
  require_cover(l.ops(), up_to, "check_linfty");
  ResidualReport rep;
  for (int n = 1; n <= up_to; ++n)
    for (const auto& w : words(*l.space(), n)) rep.record("l o l", {n}, {}, w, nr_circ_at(l.ops(), l.ops(), w));
  return rep;
}

ResidualReport check_linfty(LInftyStructure& l, int up_to) {
  auto rep = linfty_residuals(l, up_to);
  if (rep.ok()) l.mark_verified(up_to);
  return rep;
}

ResidualReport check_linfty_morphism(const GradedFamily& f, const LInftyStructure& src,
                                     const LInftyStructure& tgt, int up_to) {
  if (f.degree() != 0) throw std::invalid_argument("check_linfty_morphism: f must have degree 0");
  if (!core::same_space(f.second_space(), src.space()) || !core::same_space(f.target_space(), tgt.space()))
    throw std::invalid_argument("check_linfty_morphism: space mismatch");
  require_cover(f, up_to, "check_linfty_morphism");
  require_cover(src.ops(), up_to, "check_linfty_morphism");
  require_cover(tgt.ops(), up_to, "check_linfty_morphism");
  const auto& space = *src.space();
  const std::size_t out_dim = tgt.space()->dim();
  ResidualReport rep;
  for (int n = 1; n <= up_to; ++n)
    for (const auto& word : words(space, n)) {
      Vector lhs(out_dim);
      for (int i = 1; i <= n; ++i) {
        int blocks[] = {i, n - i};
        for_each_split(word, space, blocks, [&](int sign, const Tuple& w) {
          Vector inner = src.eval(basis_args(w, 0, static_cast<std::size_t>(i)));
          if (core::is_zero(inner)) return;
          std::vector<Arg> args{Arg::of(inner)};
          for (std::size_t t = static_cast<std::size_t>(i); t < w.size(); ++t) args.push_back(Arg::of(w[t]));
          core::axpy(lhs, Scalar(sign), f.eval(0, n - i + 1, {}, args));
        });
      }
      Vector rhs(out_dim);
      for (int k = 1; k <= n; ++k) {
        if (!tgt.ops().find(0, k)) continue;
        Scalar weight = Scalar(1) / core::factorial(k);
        for (const auto& comp : core::compositions(n, std::vector<int>(static_cast<std::size_t>(k), 1)))
          for_each_split(word, space, comp, [&](int sign, const Tuple& w) {
            std::vector<Vector> vals;
            vals.reserve(comp.size());
            std::size_t at = 0;
            for (int size : comp) {
              vals.push_back(f.eval(0, size, {}, basis_args(w, at, at + static_cast<std::size_t>(size))));
              at += static_cast<std::size_t>(size);
              if (core::is_zero(vals.back())) return;
            }
            std::vector<Arg> args;
            for (const auto& v : vals) args.push_back(Arg::of(v));
            core::axpy(rhs, weight * Scalar(sign), tgt.eval(args));
          });
      }
      core::axpy(lhs, Scalar(-1), rhs);
      rep.record("morphism", {n}, {}, word, lhs);
    }
  return rep;
}

DGLA::DGLA(SpacePtr space) : space_(std::move(space)), d_(space_->dim(), space_->dim()) {}

void DGLA::set_bracket(int i, int j, const Vector& v) {
  const auto& s = *space_;
  if (v.size() != s.dim()) throw core::DimensionError("DGLA: bracket dimension");
  int di = s.degree(static_cast<std::size_t>(i)), dj = s.degree(static_cast<std::size_t>(j));
  for (std::size_t c = 0; c < v.size(); ++c)
    if (!v[c].is_zero() && s.degree(c) != di + dj) throw std::invalid_argument("DGLA: bracket is not homogeneous");
  Vector swapped = core::scaled(v, Scalar(-sign_of(di * dj)));
  if (i == j && swapped != v) throw std::invalid_argument("DGLA: [x,x] must vanish for even x");
  bracket_[{i, j}] = v;
  bracket_[{j, i}] = swapped;
}

void DGLA::set_differential(int i, const Vector& v) {
  const auto& s = *space_;
  if (v.size() != s.dim()) throw core::DimensionError("DGLA: differential dimension");
  for (std::size_t c = 0; c < v.size(); ++c)
    if (!v[c].is_zero() && s.degree(c) != s.degree(static_cast<std::size_t>(i)) + 1)
      throw std::invalid_argument("DGLA: d must have degree 1");
  d_.set_column(static_cast<std::size_t>(i), v);
}

Vector DGLA::bracket(int i, int j) const {
  auto it = bracket_.find({i, j});
  return it == bracket_.end() ? Vector(space_->dim()) : it->second;
}

Vector DGLA::bracket(const Vector& x, const Vector& y) const {
  Vector out(space_->dim());
  for (const auto& [k, v] : bracket_) {
    const Scalar& a = x[static_cast<std::size_t>(k.first)];
    const Scalar& b = y[static_cast<std::size_t>(k.second)];
    if (!a.is_zero() && !b.is_zero()) core::axpy(out, a * b, v);
  }
  return out;
}

Vector DGLA::d(int i) const { return d_.column(static_cast<std::size_t>(i)); }
Vector DGLA::d(const Vector& x) const { return d_.apply(x); }

ResidualReport check_dgla(const DGLA& g) {
  const auto& s = *g.space();
  const int n = static_cast<int>(s.dim());
  ResidualReport rep;
  auto e = [&](int i) { return core::unit_vector(s.dim(), static_cast<std::size_t>(i)); };
  for (int x = 0; x < n; ++x) {
    rep.record("d o d", {1}, {}, {x}, g.d(g.d(x)));
    for (int y = 0; y < n; ++y) {
      int dx = s.degree(static_cast<std::size_t>(x)), dy = s.degree(static_cast<std::size_t>(y));
      Vector leib = g.d(g.bracket(x, y));
      core::axpy(leib, Scalar(-1), g.bracket(g.d(x), e(y)));
      core::axpy(leib, Scalar(-sign_of(dx)), g.bracket(e(x), g.d(y)));
      rep.record("leibniz", {2}, {}, {x, y}, leib);
      for (int z = 0; z < n; ++z) {
        Vector jac = g.bracket(e(x), g.bracket(y, z));
        core::axpy(jac, Scalar(-1), g.bracket(g.bracket(x, y), e(z)));
        core::axpy(jac, Scalar(-sign_of(dx * dy)), g.bracket(e(y), g.bracket(x, z)));
        rep.record("jacobi", {3}, {}, {x, y, z}, jac);
      }
    }
  }
  return rep;
}

LInftyStructure dgla_shift(const DGLA& g) {
  auto rep = check_dgla(g);
  if (!rep.ok()) throw InvalidStructure("dgla_shift: input is not a dg Lie algebra", rep);
  const auto& s = *g.space();
  std::vector<int> degs;
  for (int d : s.degrees()) degs.push_back(d - 1);
  auto shifted = core::make_space(s.names(), degs);
  LInftyStructure l(shifted);
  const int n = static_cast<int>(s.dim());
  for (int i = 0; i < n; ++i) {
    Vector v = core::scaled(g.d(i), Scalar(-1));
    if (!core::is_zero(v)) l.set({i}, v);
  }
  for (const auto& w : words(*shifted, 2)) {
    Vector v = core::scaled(g.bracket(w[0], w[1]), Scalar(sign_of(s.degree(static_cast<std::size_t>(w[0])))));
    if (!core::is_zero(v)) l.set(w, v);
  }
  return l;
}

}  // namespace postlie::linfty
