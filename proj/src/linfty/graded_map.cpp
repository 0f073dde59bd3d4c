#include "postlie/linfty/graded_map.hpp"

#include <algorithm>

#include "postlie/core/canonical.hpp"
#include "postlie/core/residual.hpp"

namespace postlie::linfty {

using core::SymmetryMode;

GradedMultiMap::GradedMultiMap(SpacePtr first, SpacePtr second, SpacePtr target, int p, int q, int degree)
    : first_(std::move(first)), second_(std::move(second)), target_(std::move(target)), p_(p), q_(q),
      degree_(degree) {
  if (p < 0 || q < 0) throw std::invalid_argument("GradedMultiMap: negative arity");
}

void GradedMultiMap::check_value(const Tuple& first, const Tuple& second, const Vector& value) const {
  if (static_cast<int>(first.size()) != p_ || static_cast<int>(second.size()) != q_)
    throw std::invalid_argument("GradedMultiMap: arity mismatch");
  if (value.size() != target_->dim()) throw core::DimensionError("GradedMultiMap: value dimension");
  int in = degree_;
  for (int i : first) in += first_->degree(static_cast<std::size_t>(i));
  for (int i : second) in += second_->degree(static_cast<std::size_t>(i));
  for (std::size_t c = 0; c < value.size(); ++c)
    if (!value[c].is_zero() && target_->degree(c) != in)
      throw std::invalid_argument("GradedMultiMap: value is not homogeneous of the map degree");
}

void GradedMultiMap::add(const Tuple& first, const Tuple& second, const Vector& value) {
  check_value(first, second, value);
  if (core::is_zero(value)) return;
  auto a = core::canonical_sort(first, first_->degrees(), SymmetryMode::graded_symmetric);
  auto b = core::canonical_sort(second, second_->degrees(), SymmetryMode::graded_symmetric);
  if (a.is_zero || b.is_zero) throw std::invalid_argument("GradedMultiMap: input vanishes in Sym");
  auto& slot = table_[{a.indices, b.indices}];
  if (slot.empty()) slot.assign(target_->dim(), Scalar());
  core::axpy(slot, Scalar(a.sign * b.sign), value);
  if (core::is_zero(slot)) table_.erase({a.indices, b.indices});
}

void GradedMultiMap::set(const Tuple& first, const Tuple& second, const Vector& value) {
  check_value(first, second, value);
  auto a = core::canonical_sort(first, first_->degrees(), SymmetryMode::graded_symmetric);
  auto b = core::canonical_sort(second, second_->degrees(), SymmetryMode::graded_symmetric);
  if (a.is_zero || b.is_zero) {
    if (core::is_zero(value)) return;
    throw std::invalid_argument("GradedMultiMap: input vanishes in Sym");
  }
  core::BlockKey key{a.indices, b.indices};
  if (core::is_zero(value))
    table_.erase(key);
  else
    table_[key] = core::scaled(value, Scalar(a.sign * b.sign));
}

Vector GradedMultiMap::eval(const Tuple& first, const Tuple& second) const {
  if (static_cast<int>(first.size()) != p_ || static_cast<int>(second.size()) != q_)
    throw std::invalid_argument("GradedMultiMap: arity mismatch");
  Vector out(target_->dim());
  auto a = core::canonical_sort(first, first_->degrees(), SymmetryMode::graded_symmetric);
  auto b = core::canonical_sort(second, second_->degrees(), SymmetryMode::graded_symmetric);
  if (a.is_zero || b.is_zero) return out;
  auto it = table_.find({a.indices, b.indices});
  if (it == table_.end()) return out;
  return core::scaled(it->second, Scalar(a.sign * b.sign));
}

Vector GradedMultiMap::eval(std::span<const Arg> first, std::span<const Arg> second) const {
  if (static_cast<int>(first.size()) != p_ || static_cast<int>(second.size()) != q_)
    throw std::invalid_argument("GradedMultiMap: arity mismatch");
  return core::evaluate_table(table_, target_->dim(), first, second, first_->degrees(), second_->degrees(),
                              SymmetryMode::graded_symmetric);
}

bool GradedMultiMap::is_zero() const { return table_.empty(); }

GradedMultiMap& GradedMultiMap::operator+=(const GradedMultiMap& o) {
  if (o.p_ != p_ || o.q_ != q_ || o.degree_ != degree_) throw std::invalid_argument("GradedMultiMap: shape");
  for (const auto& [k, v] : o.table_) {
    auto& slot = table_[k];
    if (slot.empty()) slot.assign(target_->dim(), Scalar());
    core::axpy(slot, Scalar(1), v);
    if (core::is_zero(slot)) table_.erase(k);
  }
  return *this;
}

GradedMultiMap& GradedMultiMap::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    table_.clear();
    return *this;
  }
  for (auto& [k, v] : table_) v = core::scaled(v, c);
  return *this;
}

bool operator==(const GradedMultiMap& a, const GradedMultiMap& b) {
  return a.p_ == b.p_ && a.q_ == b.q_ && a.degree_ == b.degree_ && a.table_ == b.table_;
}

GradedFamily::GradedFamily(SpacePtr first, SpacePtr second, SpacePtr target, int degree,
                           std::optional<int> cap)
    : first_(std::move(first)), second_(std::move(second)), target_(std::move(target)), degree_(degree),
      cap_(cap) {}

GradedFamily GradedFamily::on(SpacePtr space, int degree, std::optional<int> cap) {
  return GradedFamily(space, space, space, degree, cap);
}

GradedMultiMap& GradedFamily::at(int p, int q) {
  auto it = maps_.find({p, q});
  if (it == maps_.end()) it = maps_.emplace(std::pair{p, q}, GradedMultiMap(first_, second_, target_, p, q, degree_)).first;
  return it->second;
}

const GradedMultiMap* GradedFamily::find(int p, int q) const {
  auto it = maps_.find({p, q});
  return it == maps_.end() ? nullptr : &it->second;
}

void GradedFamily::set(int p, int q, const Tuple& first, const Tuple& second, const Vector& value) {
  at(p, q).set(first, second, value);
}

void GradedFamily::add(int p, int q, const Tuple& first, const Tuple& second, const Vector& value) {
  at(p, q).add(first, second, value);
}

Vector GradedFamily::eval(int p, int q, const Tuple& first, const Tuple& second) const {
  if (const auto* m = find(p, q)) return m->eval(first, second);
  return Vector(target_->dim());
}

Vector GradedFamily::eval(int p, int q, std::span<const Arg> first, std::span<const Arg> second) const {
  if (const auto* m = find(p, q)) return m->eval(first, second);
  return Vector(target_->dim());
}

int GradedFamily::max_arity() const {
  int best = 0;
  for (const auto& [k, m] : maps_)
    if (!m.is_zero()) best = std::max(best, k.first + k.second);
  return best;
}

bool GradedFamily::is_zero() const {
  return std::all_of(maps_.begin(), maps_.end(), [](const auto& kv) { return kv.second.is_zero(); });
}

GradedFamily GradedFamily::truncated(int cap) const {
  GradedFamily out(first_, second_, target_, degree_, min_cap(cap_, cap));
  for (const auto& [k, m] : maps_)
    if (k.first + k.second <= cap && !m.is_zero()) out.maps_.emplace(k, m);
  return out;
}

GradedFamily& GradedFamily::operator+=(const GradedFamily& o) {
  if (o.degree_ != degree_) throw std::invalid_argument("GradedFamily: degree mismatch");
  for (const auto& [k, m] : o.maps_) at(k.first, k.second) += m;
  cap_ = min_cap(cap_, o.cap_);
  return *this;
}

GradedFamily& GradedFamily::operator-=(const GradedFamily& o) {
  GradedFamily neg = o;
  neg *= Scalar(-1);
  return *this += neg;
}

GradedFamily& GradedFamily::operator*=(const Scalar& c) {
  for (auto& [k, m] : maps_) m *= c;
  return *this;
}

bool operator==(const GradedFamily& a, const GradedFamily& b) {
  if (a.degree_ != b.degree_) return false;
  auto nonzero = [](const GradedFamily& f) {
    std::map<std::pair<int, int>, BlockTable> r;
    for (const auto& [k, m] : f.maps_)
      if (!m.is_zero()) r[k] = m.table();
    return r;
  };
  return nonzero(a) == nonzero(b);
}

std::optional<int> min_cap(std::optional<int> a, std::optional<int> b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

void require_cover(const GradedFamily& f, int total_arity, const std::string& what) {
  if (!f.covers(total_arity))
    throw CapError(what + ": arity " + std::to_string(total_arity) + " exceeds the cap " +
                       std::to_string(*f.cap()),
                   total_arity);
}

}  // namespace postlie::linfty
