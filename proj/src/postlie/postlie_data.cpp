#include "postlie/postlie/postlie_data.hpp"

#include "postlie/core/canonical.hpp"

namespace postlie::classical {

using core::canonical_tuples;
using core::DimensionError;
using core::SymmetryMode;

PostLieData::PostLieData(SpacePtr space) : space_(space), pi_(space, 1) {
  if (!space_->is_ungraded()) throw DimensionError("post-Lie data needs an ungraded space");
}

PostLieData::PostLieData(SpacePtr space, Cochain pi) : space_(std::move(space)), pi_(std::move(pi)) {
  if (!space_->is_ungraded()) throw DimensionError("post-Lie data needs an ungraded space");
  if (pi_.degree() != 1 || !core::same_space(pi_.space(), space_))
    throw DimensionError("post-Lie data needs a degree-1 cochain on its space");
}

void PostLieData::set_bracket(int i, int j, const Vector& v) { pi_.set({}, {i, j}, v); }
void PostLieData::set_triangle(int i, int j, const Vector& v) { pi_.set({i}, {j}, v); }
Vector PostLieData::bracket(int i, int j) const { return pi_.eval(Tuple{}, Tuple{i, j}); }
Vector PostLieData::triangle(int i, int j) const { return pi_.eval(Tuple{i}, Tuple{j}); }

Vector PostLieData::bracket(const Vector& x, const Vector& y) const {
  Arg s[2] = {Arg::of(x), Arg::of(y)};
  return pi_.eval(std::span<const Arg>(), std::span<const Arg>(s, 2));
}

Vector PostLieData::triangle(const Vector& x, const Vector& y) const {
  Arg a = Arg::of(x), b = Arg::of(y);
  return pi_.eval(std::span<const Arg>(&a, 1), std::span<const Arg>(&b, 1));
}

ResidualReport check_postlie(const PostLieData& data) {
  ResidualReport rep;
  const auto& pi = data.pi();
  const auto& deg = data.space()->degrees();
  for (int k = 0; k <= 2; ++k) {
    auto firsts = canonical_tuples(data.dim(), k, deg, SymmetryMode::antisymmetric);
    auto seconds = canonical_tuples(data.dim(), 3 - k, deg, SymmetryMode::antisymmetric);
    for (const auto& a : firsts)
      for (const auto& b : seconds)
        rep.record("(pi o pi)_" + std::to_string(k), {k, 3 - k}, a, b, circ_at(pi, pi, k, a, b));
  }
  return rep;
}

bool is_postlie(const PostLieData& data) { return check_postlie(data).ok(); }

void require_valid(const PostLieData& data) {
  auto rep = check_postlie(data);
  if (!rep.ok()) throw InvalidStructure("structure is not a post-Lie algebra", rep);
}

PostLieData sub_adjacent(const PostLieData& data) {
  require_valid(data);
  PostLieData out(data.space());
  for (int i = 0; i < static_cast<int>(data.dim()); ++i)
    for (int j = i + 1; j < static_cast<int>(data.dim()); ++j) {
      Vector v = data.triangle(i, j);
      core::axpy(v, Scalar(-1), data.triangle(j, i));
      core::axpy(v, Scalar(1), data.bracket(i, j));
      out.set_bracket(i, j, v);
    }
  return out;
}

Vector apply(const SparseMatrix& phi, const Vector& v) { return phi.apply(v); }

ResidualReport check_morphism(const SparseMatrix& phi, const PostLieData& src, const PostLieData& tgt,
                              MorphismKind kind) {
  if (phi.cols() != src.dim() || phi.rows() != tgt.dim()) throw DimensionError("morphism shape mismatch");
  if (kind == MorphismKind::derivation && !(src == tgt && core::same_space(src.space(), tgt.space())))
    throw DimensionError("derivation check needs src = tgt");
  ResidualReport rep;
  const int n = static_cast<int>(src.dim());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vector x = core::unit_vector(n, i), y = core::unit_vector(n, j);
      Vector px = phi.apply(x), py = phi.apply(y);
      Vector rb = phi.apply(src.bracket(i, j)), rt = phi.apply(src.triangle(i, j));
      if (kind == MorphismKind::derivation) {
        core::axpy(rb, Scalar(-1), tgt.bracket(px, y));
        core::axpy(rb, Scalar(-1), tgt.bracket(x, py));
        core::axpy(rt, Scalar(-1), tgt.triangle(px, y));
        core::axpy(rt, Scalar(-1), tgt.triangle(x, py));
      } else {
        core::axpy(rb, Scalar(-1), tgt.bracket(px, py));
        core::axpy(rt, Scalar(-1), tgt.triangle(px, py));
      }
      if (i < j) rep.record("bracket", {2}, {i, j}, {}, rb);
      rep.record("triangle", {1, 1}, {i}, {j}, rt);
    }
  return rep;
}

}  // namespace postlie::classical
