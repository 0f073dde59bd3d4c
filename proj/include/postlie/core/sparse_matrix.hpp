#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "postlie/core/scalar.hpp"

namespace postlie::core {

class SparseMatrix {
 public:
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Scalar& v);
  void add(std::size_t r, std::size_t c, const Scalar& v);
  void set_column(std::size_t c, const Vector& v);
  Vector column(std::size_t c) const;
  const std::map<std::pair<std::size_t, std::size_t>, Scalar>& entries() const { return entries_; }
  std::size_t nonzeros() const { return entries_.size(); }

  Vector apply(const Vector& v) const;
  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  bool is_zero() const { return entries_.empty(); }

 private:
  void check(std::size_t r, std::size_t c) const;
  std::size_t rows_, cols_;
  std::map<std::pair<std::size_t, std::size_t>, Scalar> entries_;
};

struct NullspaceResult {
  std::size_t rank = 0;
  std::vector<Vector> nullspace_basis;
  std::vector<std::size_t> pivot_columns;
};

/// Fraction-free Gauss-Jordan elimination over the integers after clearing row denominators.
NullspaceResult nullspace_rank(const SparseMatrix& m);
std::size_t rank(const SparseMatrix& m);

/// Some solution x of m x = b, or nothing when inconsistent.
std::optional<Vector> solve(const SparseMatrix& m, const Vector& b);

/// Row-reduced span of vectors, grown one vector at a time.
class IncrementalSpan {
 public:
  explicit IncrementalSpan(std::size_t dim) : dim_(dim) {}
  /// Adds v; returns false when v already lies in the span.
  bool add(const Vector& v);
  bool contains(const Vector& v) const;
  std::size_t size() const { return rows_.size(); }

 private:
  Vector reduce(const Vector& v) const;
  std::size_t dim_;
  std::vector<std::pair<std::size_t, Vector>> rows_;  // (pivot, row with pivot 1)
};

}  // namespace postlie::core
