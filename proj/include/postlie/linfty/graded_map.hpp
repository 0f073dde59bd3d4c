#pragma once

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>

#include "postlie/core/multilinear.hpp"

namespace postlie::linfty {

using core::Arg;
using core::BlockTable;
using core::Scalar;
using core::SpacePtr;
using core::Tuple;
using core::Vector;

/// A requested arity lies beyond the truncation cap of an input.
struct CapError : std::out_of_range {
  int arity;
  CapError(const std::string& what, int a) : std::out_of_range(what), arity(a) {}
};

/// Graded symmetric map Sym^p(first) ⊗ Sym^q(second) → target of a fixed degree.
/// Values are stored on canonical tuples only.
class GradedMultiMap {
 public:
  GradedMultiMap(SpacePtr first, SpacePtr second, SpacePtr target, int p, int q, int degree);

  int p() const { return p_; }
  int q() const { return q_; }
  int degree() const { return degree_; }
  const SpacePtr& first_space() const { return first_; }
  const SpacePtr& second_space() const { return second_; }
  const SpacePtr& target_space() const { return target_; }
  const BlockTable& table() const { return table_; }

  /// Inputs in any order; the Koszul sign of sorting is applied. Throws when the value
  /// is not homogeneous of the expected degree or when the input tuple vanishes in Sym.
  void set(const Tuple& first, const Tuple& second, const Vector& value);
  void add(const Tuple& first, const Tuple& second, const Vector& value);

  Vector eval(const Tuple& first, const Tuple& second) const;
  Vector eval(std::span<const Arg> first, std::span<const Arg> second) const;

  bool is_zero() const;
  GradedMultiMap& operator+=(const GradedMultiMap& o);
  GradedMultiMap& operator*=(const Scalar& c);
  friend bool operator==(const GradedMultiMap& a, const GradedMultiMap& b);

 private:
  void check_value(const Tuple& first, const Tuple& second, const Vector& value) const;
  SpacePtr first_, second_, target_;
  int p_, q_, degree_;
  BlockTable table_;
};

/// Collection {f_{p,q}} of graded multilinear maps of one degree. Components with p+q above
/// the cap are unknown; without a cap every absent component is zero.
class GradedFamily {
 public:
  GradedFamily(SpacePtr first, SpacePtr second, SpacePtr target, int degree,
               std::optional<int> cap = std::nullopt);
  /// first = second = target.
  static GradedFamily on(SpacePtr space, int degree, std::optional<int> cap = std::nullopt);

  int degree() const { return degree_; }
  std::optional<int> cap() const { return cap_; }
  void set_cap(std::optional<int> cap) { cap_ = cap; }
  bool covers(int total_arity) const { return !cap_ || total_arity <= *cap_; }
  const SpacePtr& first_space() const { return first_; }
  const SpacePtr& second_space() const { return second_; }
  const SpacePtr& target_space() const { return target_; }

  GradedMultiMap& at(int p, int q);
  const GradedMultiMap* find(int p, int q) const;
  const std::map<std::pair<int, int>, GradedMultiMap>& components() const { return maps_; }

  void set(int p, int q, const Tuple& first, const Tuple& second, const Vector& value);
  void add(int p, int q, const Tuple& first, const Tuple& second, const Vector& value);
  /// Zero for absent components.
  Vector eval(int p, int q, const Tuple& first, const Tuple& second) const;
  Vector eval(int p, int q, std::span<const Arg> first, std::span<const Arg> second) const;

  /// Largest p+q carrying a nonzero value, 0 when zero.
  int max_arity() const;
  bool is_zero() const;
  /// Drops components with p+q above the bound and sets the cap.
  GradedFamily truncated(int cap) const;

  GradedFamily& operator+=(const GradedFamily& o);
  GradedFamily& operator-=(const GradedFamily& o);
  GradedFamily& operator*=(const Scalar& c);
  friend GradedFamily operator+(GradedFamily a, const GradedFamily& b) { return a += b; }
  friend GradedFamily operator-(GradedFamily a, const GradedFamily& b) { return a -= b; }
  friend GradedFamily operator*(const Scalar& c, GradedFamily a) { return a *= c; }
  /// Same degree and the same nonzero values; caps are ignored.
  friend bool operator==(const GradedFamily& a, const GradedFamily& b);

 private:
  SpacePtr first_, second_, target_;
  int degree_;
  std::optional<int> cap_;
  std::map<std::pair<int, int>, GradedMultiMap> maps_;
};

/// Smaller of two caps, nullopt meaning no cap.
std::optional<int> min_cap(std::optional<int> a, std::optional<int> b);

/// Throws CapError unless the family covers the arity.
void require_cover(const GradedFamily& f, int total_arity, const std::string& what);

}  // namespace postlie::linfty
