#include "postlie/core/sparse_matrix.hpp"

namespace postlie::core {

void SparseMatrix::check(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw DimensionError("matrix index out of range");
}

Scalar SparseMatrix::get(std::size_t r, std::size_t c) const {
  check(r, c);
  auto it = entries_.find({r, c});
  return it == entries_.end() ? Scalar(0) : it->second;
}

void SparseMatrix::set(std::size_t r, std::size_t c, const Scalar& v) {
  check(r, c);
  if (v.is_zero())
    entries_.erase({r, c});
  else
    entries_[{r, c}] = v;
}

void SparseMatrix::add(std::size_t r, std::size_t c, const Scalar& v) {
  if (v.is_zero()) return;
  set(r, c, get(r, c) + v);
}

void SparseMatrix::set_column(std::size_t c, const Vector& v) {
  if (v.size() != rows_) throw DimensionError("column length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) set(r, c, v[r]);
}

Vector SparseMatrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = get(r, c);
  return v;
}

Vector SparseMatrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw DimensionError("matrix-vector size mismatch");
  Vector out(rows_);
  for (const auto& [rc, x] : entries_) out[rc.first] += x * v[rc.second];
  return out;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product size mismatch");
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> brows(b.rows_);
  for (const auto& [rc, x] : b.entries_) brows[rc.first].emplace_back(rc.second, x);
  SparseMatrix out(a.rows_, b.cols_);
  for (const auto& [rc, x] : a.entries_)
    for (const auto& [c, y] : brows[rc.second]) out.add(rc.first, c, x * y);
  return out;
}

namespace {

using IntRow = std::vector<mpz_class>;

void make_primitive(IntRow& row) {
  mpz_class g = 0;
  for (const auto& x : row)
    if (x != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1)
    for (auto& x : row)
      if (x != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

std::vector<IntRow> integer_rows(const SparseMatrix& m, const Vector* rhs) {
  std::size_t width = m.cols() + (rhs ? 1 : 0);
  std::vector<Vector> q(m.rows(), Vector(width));
  for (const auto& [rc, x] : m.entries()) q[rc.first][rc.second] = x;
  if (rhs)
    for (std::size_t r = 0; r < m.rows(); ++r) q[r][m.cols()] = (*rhs)[r];
  std::vector<IntRow> out;
  for (auto& row : q) {
    mpz_class l = 1;
    for (const auto& x : row)
      if (!x.is_zero()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.denominator().get_mpz_t());
    IntRow ir(width);
    bool any = false;
    for (std::size_t c = 0; c < width; ++c) {
      if (row[c].is_zero()) continue;
      ir[c] = row[c].numerator() * (l / row[c].denominator());
      any = true;
    }
    if (any) {
      make_primitive(ir);
      out.push_back(std::move(ir));
    }
  }
  return out;
}

/// Reduces to reduced echelon form in place, over the first `ncols` columns.
std::vector<std::size_t> reduce(std::vector<IntRow>& rows, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const IntRow& piv = rows[r];
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), piv[c].get_mpz_t(), rows[i][c].get_mpz_t());
      mpz_class a = piv[c] / g, b = rows[i][c] / g;
      for (std::size_t j = 0; j < rows[i].size(); ++j) {
        if (piv[j] == 0 && rows[i][j] == 0) continue;
        rows[i][j] = a * rows[i][j] - b * piv[j];
      }
      make_primitive(rows[i]);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

Scalar ratio(const mpz_class& num, const mpz_class& den) { return Scalar(mpq_class(num, den)); }

}  // namespace

NullspaceResult nullspace_rank(const SparseMatrix& m) {
  auto rows = integer_rows(m, nullptr);
  NullspaceResult res;
  res.pivot_columns = reduce(rows, m.cols());
  res.rank = res.pivot_columns.size();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : res.pivot_columns) is_pivot[c] = true;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = Scalar(1);
    for (std::size_t i = 0; i < res.rank; ++i) {
      std::size_t c = res.pivot_columns[i];
      if (rows[i][f] != 0) v[c] = -ratio(rows[i][f], rows[i][c]);
    }
    res.nullspace_basis.push_back(std::move(v));
  }
  return res;
}

std::size_t rank(const SparseMatrix& m) {
  auto rows = integer_rows(m, nullptr);
  return reduce(rows, m.cols()).size();
}

std::optional<Vector> solve(const SparseMatrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw DimensionError("solve: rhs length mismatch");
  auto rows = integer_rows(m, &b);
  auto pivots = reduce(rows, m.cols());
  for (std::size_t i = pivots.size(); i < rows.size(); ++i)
    if (rows[i][m.cols()] != 0) return std::nullopt;
  Vector x(m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    x[pivots[i]] = ratio(rows[i][m.cols()], rows[i][pivots[i]]);
  return x;
}

Vector IncrementalSpan::reduce(const Vector& v) const {
  if (v.size() != dim_) throw DimensionError("span: vector length mismatch");
  Vector r(v);
  for (const auto& [p, row] : rows_)
    if (!r[p].is_zero()) axpy(r, -r[p], row);
  return r;
}

bool IncrementalSpan::add(const Vector& v) {
  Vector r = reduce(v);
  std::size_t p = 0;
  while (p < dim_ && r[p].is_zero()) ++p;
  if (p == dim_) return false;
  Scalar inv = Scalar(1) / r[p];
  for (auto& x : r) x *= inv;
  for (auto& [q, row] : rows_)
    if (!row[p].is_zero()) axpy(row, -row[p], r);
  rows_.emplace_back(p, std::move(r));
  return true;
}

bool IncrementalSpan::contains(const Vector& v) const { return is_zero(reduce(v)); }

}  // namespace postlie::core
