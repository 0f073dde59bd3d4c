#include "postlie/linfty/open_closed.hpp"

#include <algorithm>

#include "postlie/core/canonical.hpp"
#include "postlie/linfty/shuffle_sum.hpp"

namespace postlie::linfty {

using core::SymmetryMode;

namespace {

std::vector<Tuple> words(const core::GradedBasisSpace& s, int n) {
  return core::canonical_tuples(s.dim(), static_cast<std::size_t>(n), s.degrees(), SymmetryMode::graded_symmetric);
}

std::vector<Arg> with_front(const Vector& front, const Tuple& w, std::size_t from, std::size_t to) {
  std::vector<Arg> a{Arg::of(front)};
  for (std::size_t i = from; i < to; ++i) a.push_back(Arg::of(w[i]));
  return a;
}

int bound_of(const GradedFamily& f) { return f.cap() ? *f.cap() : f.max_arity(); }

}  // namespace

OpenClosedStructure::OpenClosedStructure(LInftyStructure l, GradedFamily r) : l_(std::move(l)), r_(std::move(r)) {
  if (r_.degree() != 1) throw std::invalid_argument("OpenClosedStructure: R must have degree 1");
  if (!core::same_space(r_.first_space(), l_.space()) || !core::same_space(r_.second_space(), r_.target_space()))
    throw std::invalid_argument("OpenClosedStructure: R must map Sym(g) ⊗ Sym(h) to h");
  if (const auto* r00 = r_.find(0, 0); r00 && !r00->is_zero())
    throw std::invalid_argument("OpenClosedStructure: R_{0,0} must vanish");
}

ResidualReport open_closed_residuals(const OpenClosedStructure& s, int up_to) {
  const auto& R = s.r();
  require_cover(R, up_to, "check_open_closed");
  ResidualReport rep = linfty_residuals(s.l(), up_to);
  const auto& g = *s.g_space();
  const auto& h = *s.h_space();
  for (int n = 0; n <= up_to; ++n)
    for (int m = 0; n + m <= up_to; ++m) {
      if (n + m == 0) continue;
      auto us = words(h, m);
      for (const auto& x : words(g, n))
        for (const auto& u : us) {
          Vector v(h.dim());
          auto second = basis_args(u, 0, u.size());
          for (int i = 1; i <= n; ++i) {
            if (!R.find(n - i + 1, m)) continue;
            int blocks[] = {i, n - i};
            for_each_split(x, g, blocks, [&](int sign, const Tuple& w) {
              auto ui = static_cast<std::size_t>(i);
              Vector inner = s.l().eval(basis_args(w, 0, ui));
              if (core::is_zero(inner)) return;
              core::axpy(v, Scalar(sign), R.eval(n - i + 1, m, with_front(inner, w, ui, w.size()), second));
            });
          }
          for (int i = 0; i <= n; ++i)
            for (int k = 0; k <= m; ++k) {
              if (n - i + k == 0) continue;
              if (!R.find(n - i, k) || !R.find(i, m - k + 1)) continue;
              int xblocks[] = {i, n - i}, ublocks[] = {k, m - k};
              for_each_split(x, g, xblocks, [&](int sx, const Tuple& wx) {
                auto ui = static_cast<std::size_t>(i);
                int sg = sx * sign_of(degree_sum(wx, 0, ui, g));
                for_each_split(u, h, ublocks, [&](int su, const Tuple& wu) {
                  auto uk = static_cast<std::size_t>(k);
                  Vector inner = R.eval(n - i, k, basis_args(wx, ui, wx.size()), basis_args(wu, 0, uk));
                  if (core::is_zero(inner)) return;
                  core::axpy(v, Scalar(sg * su),
                             R.eval(i, m - k + 1, basis_args(wx, 0, ui), with_front(inner, wu, uk, wu.size())));
                });
              });
            }
          rep.record("open-closed", {n, m}, x, u, v);
        }
    }
  return rep;
}

ResidualReport check_open_closed(OpenClosedStructure& s, int up_to) {
  auto rep = open_closed_residuals(s, up_to);
  if (rep.ok()) s.mark_verified(up_to);
  return rep;
}

LInftyStructure extension_linfty(const OpenClosedStructure& s) {
  const auto& g = *s.g_space();
  const auto& h = *s.h_space();
  auto names = g.names();
  auto degs = g.degrees();
  for (const auto& n : h.names()) names.push_back(std::find(names.begin(), names.end(), n) == names.end() ? n : n + "'");
  degs.insert(degs.end(), h.degrees().begin(), h.degrees().end());
  auto sum = core::make_space(names, degs);
  const int dg = static_cast<int>(g.dim());
  int bound = std::max(bound_of(s.l().ops()), bound_of(s.r()));
  LInftyStructure out(sum, s.cap());
  for (int k = 1; k <= bound; ++k)
    for (const auto& w : words(*sum, k)) {
      Tuple x, u;
      for (int i : w) (i < dg ? x : u).push_back(i < dg ? i : i - dg);
      Vector v(sum->dim());
      if (u.empty()) {
        Vector a = s.l().eval(x);
        for (int c = 0; c < dg; ++c) v[static_cast<std::size_t>(c)] = a[static_cast<std::size_t>(c)];
      }
      Vector b = s.r().eval(static_cast<int>(x.size()), static_cast<int>(u.size()), x, u);
      for (std::size_t c = 0; c < b.size(); ++c) v[static_cast<std::size_t>(dg) + c] = b[c];
      if (!core::is_zero(v)) out.set(w, v);
    }
  return out;
}

OpenClosedStructure open_closed_from_postlie(const PostLieInftyStructure& m) {
  GradedFamily lc = subadjacent_maps(m.maps(), bound_of(m.maps()));
  lc.set_cap(m.cap());
  return OpenClosedStructure(LInftyStructure(std::move(lc)), m.maps());
}

CharacterizationResult check_characterization(const PostLieInftyStructure& m, int up_to) {
  CharacterizationResult r;
  r.postlie = postlie_infinity_residuals(m, up_to);
  r.open_closed = open_closed_residuals(open_closed_from_postlie(m), up_to);
  return r;
}

}  // namespace postlie::linfty
