#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace postlie::core {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Exact rational number, always kept in lowest terms with positive denominator.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(long num, long den);
  explicit Scalar(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Accepts "p" or "p/q" with optional leading sign; q must be nonzero.
  static Scalar parse(std::string_view text);

  std::string str() const;
  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }
  const mpq_class& raw() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  Scalar operator-() const { return Scalar(mpq_class(-q_)); }
  Scalar& operator+=(const Scalar& o) { q_ += o.q_; return *this; }
  Scalar& operator-=(const Scalar& o) { q_ -= o.q_; return *this; }
  Scalar& operator*=(const Scalar& o) { q_ *= o.q_; return *this; }
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

 private:
  mpq_class q_;
};

Scalar factorial(int n);
Scalar binomial(int n, int k);

/// Dense coordinate vector.
using Vector = std::vector<Scalar>;

bool is_zero(const Vector& v);
void axpy(Vector& out, const Scalar& c, const Vector& x);
Vector scaled(const Vector& x, const Scalar& c);
Vector unit_vector(std::size_t dim, std::size_t i);
std::string format_vector(const Vector& v);

}  // namespace postlie::core
