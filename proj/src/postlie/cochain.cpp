#include "postlie/postlie/cochain.hpp"

#include "postlie/core/permutation.hpp"

namespace postlie::classical {

using core::canonical_sort;
using core::canonical_tuples;
using core::DimensionError;
using core::Scalar;
using core::SymmetryMode;

Cochain::Cochain(SpacePtr space, int degree)
    : space_(std::move(space)), degree_(degree), comps_(degree >= 0 ? degree + 1 : 0) {
  if (!space_) throw DimensionError("cochain without space");
  if (degree < 0) throw DimensionError("negative cochain degree");
}

std::size_t Cochain::dim() const { return space_->dim(); }

void Cochain::check_shape(const Tuple& first, const Tuple& second) const {
  if (static_cast<int>(first.size() + second.size()) != degree_ + 1 || second.empty())
    throw DimensionError("cochain argument shape mismatch");
  for (int i : first)
    if (i < 0 || static_cast<std::size_t>(i) >= dim()) throw DimensionError("basis index out of range");
  for (int i : second)
    if (i < 0 || static_cast<std::size_t>(i) >= dim()) throw DimensionError("basis index out of range");
}

void Cochain::set(const Tuple& first, const Tuple& second, const Vector& value) {
  check_shape(first, second);
  if (value.size() != dim()) throw DimensionError("cochain value length mismatch");
  const auto& deg = space_->degrees();
  auto a = canonical_sort(first, deg, SymmetryMode::antisymmetric);
  auto b = canonical_sort(second, deg, SymmetryMode::antisymmetric);
  if (a.is_zero || b.is_zero) {
    if (!core::is_zero(value)) throw std::invalid_argument("nonzero value on a repeated wedge argument");
    return;
  }
  auto& table = comps_[first.size()];
  core::BlockKey key{a.indices, b.indices};
  if (core::is_zero(value)) {
    table.erase(key);
    return;
  }
  table[key] = a.sign * b.sign > 0 ? value : core::scaled(value, Scalar(-1));
}

void Cochain::add(const Tuple& first, const Tuple& second, const Vector& value) {
  Vector cur = eval(first, second);
  core::axpy(cur, Scalar(1), value);
  set(first, second, cur);
}

Vector Cochain::eval(const Tuple& first, const Tuple& second) const {
  check_shape(first, second);
  const auto& deg = space_->degrees();
  auto a = canonical_sort(first, deg, SymmetryMode::antisymmetric);
  auto b = canonical_sort(second, deg, SymmetryMode::antisymmetric);
  Vector out(dim());
  if (a.is_zero || b.is_zero) return out;
  const auto& table = comps_[first.size()];
  auto it = table.find({a.indices, b.indices});
  if (it == table.end()) return out;
  return a.sign * b.sign > 0 ? it->second : core::scaled(it->second, Scalar(-1));
}

Vector Cochain::eval(std::span<const Arg> first, std::span<const Arg> second) const {
  if (static_cast<int>(first.size() + second.size()) != degree_ + 1 || second.empty())
    throw DimensionError("cochain argument shape mismatch");
  const auto& deg = space_->degrees();
  return core::evaluate_table(comps_[first.size()], dim(), first, second, deg, deg,
                              SymmetryMode::antisymmetric);
}

bool Cochain::is_zero() const {
  for (const auto& t : comps_)
    if (!t.empty()) return false;
  return true;
}

namespace {

void accumulate(BlockTable& dst, const BlockTable& src, const Scalar& c) {
  for (const auto& [k, v] : src) {
    auto it = dst.find(k);
    if (it == dst.end()) {
      dst.emplace(k, core::scaled(v, c));
      continue;
    }
    core::axpy(it->second, c, v);
    if (core::is_zero(it->second)) dst.erase(it);
  }
}

}  // namespace

Cochain& Cochain::operator+=(const Cochain& o) {
  if (!core::same_space(space_, o.space_) || degree_ != o.degree_) throw DimensionError("cochain mismatch");
  for (int i = 0; i <= degree_; ++i) accumulate(comps_[i], o.comps_[i], Scalar(1));
  return *this;
}

Cochain& Cochain::operator-=(const Cochain& o) {
  if (!core::same_space(space_, o.space_) || degree_ != o.degree_) throw DimensionError("cochain mismatch");
  for (int i = 0; i <= degree_; ++i) accumulate(comps_[i], o.comps_[i], Scalar(-1));
  return *this;
}

Cochain& Cochain::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    for (auto& t : comps_) t.clear();
    return *this;
  }
  for (auto& t : comps_)
    for (auto& [k, v] : t) v = core::scaled(v, c);
  return *this;
}

bool operator==(const Cochain& a, const Cochain& b) {
  return core::same_space(a.space_, b.space_) && a.degree_ == b.degree_ && a.comps_ == b.comps_;
}

std::vector<Cochain::BasisElement> Cochain::basis(const SpacePtr& space, int degree) {
  std::vector<BasisElement> out;
  const auto& deg = space->degrees();
  for (int i = 0; i <= degree; ++i) {
    auto firsts = canonical_tuples(space->dim(), i, deg, SymmetryMode::antisymmetric);
    auto seconds = canonical_tuples(space->dim(), degree + 1 - i, deg, SymmetryMode::antisymmetric);
    for (const auto& a : firsts)
      for (const auto& b : seconds)
        for (std::size_t o = 0; o < space->dim(); ++o) out.push_back({i, a, b, o});
  }
  return out;
}

Vector Cochain::coordinates() const {
  auto b = basis(space_, degree_);
  Vector v(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    auto it = comps_[b[i].component].find({b[i].first, b[i].second});
    if (it != comps_[b[i].component].end()) v[i] = it->second[b[i].output];
  }
  return v;
}

Cochain Cochain::from_coordinates(const SpacePtr& space, int degree, const Vector& coords) {
  auto b = basis(space, degree);
  if (coords.size() != b.size()) throw DimensionError("coordinate vector length mismatch");
  Cochain c(space, degree);
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (coords[i].is_zero()) continue;
    auto& slot = c.comps_[b[i].component][{b[i].first, b[i].second}];
    if (slot.empty()) slot = Vector(space->dim());
    slot[b[i].output] = coords[i];
  }
  return c;
}

Vector circ_at(const Cochain& f, const Cochain& g, int k, const Tuple& first, const Tuple& second) {
  const int n = f.degree(), m = g.degree();
  const std::size_t dim = f.dim();
  Vector out(dim);
  const int rest = n + m + 1 - k;
  if (static_cast<int>(first.size()) != k || static_cast<int>(second.size()) != rest)
    throw DimensionError("circ_at: argument shape mismatch");

  // g inserted into the second block of f: j arguments of g come from the first block.
  for (int j = 0; j <= std::min(k, m); ++j) {
    if (k - j > n || n + j - k < 0) continue;
    const int sign_m = (m * (k - j)) % 2 ? -1 : 1;
    std::vector<int> sblocks{k - j, j}, tblocks{m + 1 - j, n + j - k};
    core::for_each_shuffle(sblocks, [&](std::span<const int> s) {
      int ss = core::parity_sign(s);
      core::for_each_shuffle(tblocks, [&](std::span<const int> t) {
        int ts = core::parity_sign(t);
        std::vector<Arg> gf, gs, ff, fs;
        for (int a = k - j; a < k; ++a) gf.push_back(Arg::of(first[s[a]]));
        for (int a = 0; a < m + 1 - j; ++a) gs.push_back(Arg::of(second[t[a]]));
        Vector inner = g.eval(gf, gs);
        if (core::is_zero(inner)) return;
        for (int a = 0; a < k - j; ++a) ff.push_back(Arg::of(first[s[a]]));
        fs.push_back(Arg::of(inner));
        for (int a = m + 1 - j; a < rest; ++a) fs.push_back(Arg::of(second[t[a]]));
        core::axpy(out, Scalar(ss * ts * sign_m), f.eval(ff, fs));
      });
    });
  }

  // g inserted into the first block of f: all m+1 arguments of g from the first block.
  if (k >= m + 1) {
    for (int j = 0; j <= m; ++j) {
      std::vector<int> blocks{j, m + 1 - j, k - m - 1};
      core::for_each_shuffle(blocks, [&](std::span<const int> s) {
        int ss = core::parity_sign(s);
        std::vector<Arg> gf, gs, ff, fs;
        for (int a = 0; a < j; ++a) gf.push_back(Arg::of(first[s[a]]));
        for (int a = j; a < m + 1; ++a) gs.push_back(Arg::of(first[s[a]]));
        Vector inner = g.eval(gf, gs);
        if (core::is_zero(inner)) return;
        ff.push_back(Arg::of(inner));
        for (int a = m + 1; a < k; ++a) ff.push_back(Arg::of(first[s[a]]));
        for (int a = 0; a < rest; ++a) fs.push_back(Arg::of(second[a]));
        core::axpy(out, Scalar(ss), f.eval(ff, fs));
      });
    }
  }
  return out;
}

Cochain circ(const Cochain& f, const Cochain& g) {
  if (!core::same_space(f.space(), g.space())) throw DimensionError("circ: space mismatch");
  const int deg = f.degree() + g.degree();
  Cochain out(f.space(), deg);
  const auto& d = f.space()->degrees();
  for (int k = 0; k <= deg; ++k) {
    auto firsts = canonical_tuples(f.dim(), k, d, SymmetryMode::antisymmetric);
    auto seconds = canonical_tuples(f.dim(), deg + 1 - k, d, SymmetryMode::antisymmetric);
    for (const auto& a : firsts)
      for (const auto& b : seconds) {
        Vector v = circ_at(f, g, k, a, b);
        if (!core::is_zero(v)) out.set(a, b, v);
      }
  }
  return out;
}

Cochain bracket(const Cochain& f, const Cochain& g) {
  Cochain r = circ(f, g);
  Cochain s = circ(g, f);
  if ((f.degree() * g.degree()) % 2)
    r += s;
  else
    r -= s;
  return r;
}

}  // namespace postlie::classical
