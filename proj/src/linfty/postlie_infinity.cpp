#include "postlie/linfty/postlie_infinity.hpp"

#include "postlie/core/canonical.hpp"
#include "postlie/linfty/shuffle_sum.hpp"

namespace postlie::linfty {

using core::SymmetryMode;

namespace {

std::vector<Tuple> words(const core::GradedBasisSpace& s, int n) {
  return core::canonical_tuples(s.dim(), static_cast<std::size_t>(n), s.degrees(), SymmetryMode::graded_symmetric);
}

void require_single_space(const GradedFamily& f) {
  if (!core::same_space(f.first_space(), f.target_space()) || !core::same_space(f.second_space(), f.target_space()))
    throw std::invalid_argument("post-Lie family must act on a single space");
}

std::vector<Arg> with_front(const Vector& front, const Tuple& w, std::size_t from, std::size_t to) {
  std::vector<Arg> a{Arg::of(front)};
  for (std::size_t i = from; i < to; ++i) a.push_back(Arg::of(w[i]));
  return a;
}

}  // namespace

PostLieInftyStructure::PostLieInftyStructure(SpacePtr space, std::optional<int> cap)
    : maps_(GradedFamily::on(std::move(space), 1, cap)) {}

PostLieInftyStructure::PostLieInftyStructure(GradedFamily maps) : maps_(std::move(maps)) {
  if (maps_.degree() != 1) throw std::invalid_argument("PostLieInftyStructure: maps must have degree 1");
  require_single_space(maps_);
  for (const auto& [k, m] : maps_.components())
    if (k.second < 1 && !m.is_zero()) throw std::invalid_argument("PostLieInftyStructure: q must be at least 1");
}

void PostLieInftyStructure::set(const Tuple& first, const Tuple& second, const Vector& value) {
  if (second.empty()) throw std::invalid_argument("PostLieInftyStructure: q must be at least 1");
  maps_.set(static_cast<int>(first.size()), static_cast<int>(second.size()), first, second, value);
  verified_ = 0;
}

void PostLieInftyStructure::add(const Tuple& first, const Tuple& second, const Vector& value) {
  if (second.empty()) throw std::invalid_argument("PostLieInftyStructure: q must be at least 1");
  maps_.add(static_cast<int>(first.size()), static_cast<int>(second.size()), first, second, value);
  verified_ = 0;
}

Vector PostLieInftyStructure::eval(const Tuple& first, const Tuple& second) const {
  return maps_.eval(static_cast<int>(first.size()), static_cast<int>(second.size()), first, second);
}

Vector graded_postlie_circ_at(const GradedFamily& f, const GradedFamily& g, const Tuple& x, const Tuple& y) {
  const auto& space = *g.target_space();
  const int n = static_cast<int>(x.size()), m = static_cast<int>(y.size());
  const int l = g.degree();
  Vector out(f.target_space()->dim());
  for (int p = 0; p <= n - 1; ++p)
    for (int q = 1; p + q <= n; ++q) {
      if (!g.find(p, q) || !f.find(n - p - q + 1, m)) continue;
      int blocks[] = {p, q, n - p - q};
      auto second = basis_args(y, 0, y.size());
      for_each_split(x, space, blocks, [&](int sign, const Tuple& w) {
        auto up = static_cast<std::size_t>(p), uq = static_cast<std::size_t>(p + q);
        Vector inner = g.eval(p, q, basis_args(w, 0, up), basis_args(w, up, uq));
        if (core::is_zero(inner)) return;
        core::axpy(out, Scalar(sign), f.eval(n - p - q + 1, m, with_front(inner, w, uq, w.size()), second));
      });
    }
  for (int p = 0; p <= n; ++p)
    for (int q = 1; q <= m; ++q) {
      if (!g.find(p, q) || !f.find(n - p, m - q + 1)) continue;
      int xblocks[] = {n - p, p}, yblocks[] = {q, m - q};
      for_each_split(x, space, xblocks, [&](int sx, const Tuple& wx) {
        auto split = static_cast<std::size_t>(n - p);
        int s = sx * sign_of(l * degree_sum(wx, 0, split, space));
        auto outer_first = basis_args(wx, 0, split);
        auto inner_first = basis_args(wx, split, wx.size());
        for_each_split(y, space, yblocks, [&](int sy, const Tuple& wy) {
          auto uq = static_cast<std::size_t>(q);
          Vector inner = g.eval(p, q, inner_first, basis_args(wy, 0, uq));
          if (core::is_zero(inner)) return;
          core::axpy(out, Scalar(s * sy), f.eval(n - p, m - q + 1, outer_first, with_front(inner, wy, uq, wy.size())));
        });
      });
    }
  return out;
}

GradedFamily graded_postlie_circ(const GradedFamily& f, const GradedFamily& g, int up_to) {
  require_single_space(f);
  require_single_space(g);
  if (!core::same_space(f.target_space(), g.target_space()))
    throw std::invalid_argument("graded_postlie_circ: space mismatch");
  require_cover(f, up_to, "graded_postlie_circ");
  require_cover(g, up_to, "graded_postlie_circ");
  const auto& space = f.target_space();
  GradedFamily out = GradedFamily::on(space, f.degree() + g.degree(), up_to);
  for (int n = 0; n < up_to; ++n)
    for (int m = 1; n + m <= up_to; ++m) {
      auto ys = words(*space, m);
      for (const auto& x : words(*space, n))
        for (const auto& y : ys) {
          Vector v = graded_postlie_circ_at(f, g, x, y);
          if (!core::is_zero(v)) out.set(n, m, x, y, v);
        }
    }
  return out;
}

GradedFamily graded_postlie_bracket(const GradedFamily& f, const GradedFamily& g, int up_to) {
  GradedFamily a = graded_postlie_circ(f, g, up_to);
  GradedFamily b = graded_postlie_circ(g, f, up_to);
  b *= Scalar(-sign_of(f.degree() * g.degree()));
  return a += b;
}

GradedFamily subadjacent_maps(const GradedFamily& m, int up_to) {
  require_single_space(m);
  require_cover(m, up_to, "subadjacent");
  const auto& space = m.target_space();
  GradedFamily out = GradedFamily::on(space, m.degree(), up_to);
  for (int k = 1; k <= up_to; ++k)
    for (const auto& w : words(*space, k)) {
      Vector v(space->dim());
      for (int j = 0; j < k; ++j) {
        if (!m.find(j, k - j)) continue;
        int blocks[] = {j, k - j};
        for_each_split(w, *space, blocks, [&](int sign, const Tuple& s) {
          auto uj = static_cast<std::size_t>(j);
          core::axpy(v, Scalar(sign), m.eval(j, k - j, basis_args(s, 0, uj), basis_args(s, uj, s.size())));
        });
      }
      if (!core::is_zero(v)) out.set(0, k, {}, w, v);
    }
  return out;
}

ResidualReport postlie_infinity_residuals(const PostLieInftyStructure& pl, int up_to) {
  const auto& M = pl.maps();
  require_cover(M, up_to, "check_postlie_infinity");
  const auto& space = *pl.space();
  GradedFamily lc = subadjacent_maps(M, up_to);
  GradedFamily half = Scalar(1, 2) * graded_postlie_bracket(M, M, up_to);
  ResidualReport rep, mismatch;
  for (int n = 0; n < up_to; ++n)
    for (int m = 1; n + m <= up_to; ++m) {
      auto ys = words(space, m);
      for (const auto& x : words(space, n))
        for (const auto& y : ys) {
          Vector v(space.dim());
          auto second = basis_args(y, 0, y.size());
          for (int i = 1; i <= n; ++i) {
            if (!M.find(n - i + 1, m)) continue;
            int blocks[] = {i, n - i};
            for_each_split(x, space, blocks, [&](int sign, const Tuple& w) {
              auto ui = static_cast<std::size_t>(i);
              Vector inner = lc.eval(0, i, {}, basis_args(w, 0, ui));
              if (core::is_zero(inner)) return;
              core::axpy(v, Scalar(sign), M.eval(n - i + 1, m, with_front(inner, w, ui, w.size()), second));
            });
          }
          for (int j = 0; j <= n; ++j)
            for (int i = 1; i <= m; ++i) {
              if (!M.find(j, i) || !M.find(n - j, m - i + 1)) continue;
              int xblocks[] = {n - j, j}, yblocks[] = {i, m - i};
              for_each_split(x, space, xblocks, [&](int sx, const Tuple& wx) {
                auto split = static_cast<std::size_t>(n - j);
                int s = sx * sign_of(degree_sum(wx, 0, split, space));
                for_each_split(y, space, yblocks, [&](int sy, const Tuple& wy) {
                  auto ui = static_cast<std::size_t>(i);
                  Vector inner = M.eval(j, i, basis_args(wx, split, wx.size()), basis_args(wy, 0, ui));
                  if (core::is_zero(inner)) return;
                  core::axpy(v, Scalar(s * sy),
                             M.eval(n - j, m - i + 1, basis_args(wx, 0, split), with_front(inner, wy, ui, wy.size())));
                });
              });
            }
          Vector diff = v;
          core::axpy(diff, Scalar(-1), half.eval(n, m, x, y));
          rep.record("post-Lie MC", {n, m}, x, y, v);
          mismatch.record("mc vs half bracket", {n, m}, x, y, diff);
        }
    }
  rep.entries.insert(rep.entries.end(), mismatch.entries.begin(), mismatch.entries.end());
  return rep;
}

ResidualReport check_postlie_infinity(PostLieInftyStructure& m, int up_to) {
  auto rep = postlie_infinity_residuals(m, up_to);
  if (rep.ok()) m.mark_verified(up_to);
  return rep;
}

LInftyStructure subadjacent_linfty(const PostLieInftyStructure& m) {
  if (m.verified_up_to() == 0)
    throw InvalidStructure("subadjacent_linfty: the post-Lie∞ structure has not been verified", {});
  int bound = m.cap() ? *m.cap() : m.maps().max_arity();
  GradedFamily l = subadjacent_maps(m.maps(), bound);
  l.set_cap(m.cap());
  return LInftyStructure(std::move(l));
}

GradedFamily to_graded(const classical::Cochain& c) {
  const int n = c.degree();
  GradedFamily out = GradedFamily::on(c.space(), n);
  for (int i = 0; i <= n; ++i)
    for (const auto& [key, v] : c.component(i)) out.set(i, n + 1 - i, key.first, key.second, v);
  return out;
}

classical::Cochain from_graded(const GradedFamily& f) {
  require_single_space(f);
  if (!f.target_space()->is_ungraded()) throw std::invalid_argument("from_graded: space is not ungraded");
  classical::Cochain c(f.target_space(), f.degree());
  for (const auto& [k, m] : f.components()) {
    if (m.is_zero()) continue;
    if (k.first + k.second != f.degree() + 1) throw std::invalid_argument("from_graded: arity does not match the degree");
    for (const auto& [key, v] : m.table()) c.set(key.first, key.second, v);
  }
  return c;
}

PostLieInftyStructure embed(const classical::PostLieData& data) { return PostLieInftyStructure(to_graded(data.pi())); }

}  // namespace postlie::linfty
