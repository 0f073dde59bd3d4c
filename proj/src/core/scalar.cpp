#include "postlie/core/scalar.hpp"

#include <cctype>

namespace postlie::core {

Scalar::Scalar(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

namespace {

bool valid_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Scalar Scalar::parse(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den[0] == '-' || den[0] == '+')
    throw ParseError("malformed rational '" + std::string(text) + "'");
  std::string n(num);
  if (n[0] == '+') n.erase(0, 1);
  mpz_class zn(n, 10), zd(std::string(den), 10);
  if (zd == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  mpq_class q(zn, zd);
  q.canonicalize();
  return Scalar(q);
}

std::string Scalar::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  q_ /= o.q_;
  return *this;
}

Scalar factorial(int n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return Scalar(mpq_class(r));
}

Scalar binomial(int n, int k) {
  if (k < 0 || k > n) return Scalar(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Scalar(mpq_class(r));
}

bool is_zero(const Vector& v) {
  for (const auto& c : v)
    if (!c.is_zero()) return false;
  return true;
}

void axpy(Vector& out, const Scalar& c, const Vector& x) {
  if (out.size() != x.size()) throw DimensionError("axpy: size mismatch");
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) out[i] += c * x[i];
}

Vector scaled(const Vector& x, const Scalar& c) {
  Vector r(x);
  for (auto& e : r) e *= c;
  return r;
}

Vector unit_vector(std::size_t dim, std::size_t i) {
  Vector v(dim);
  v.at(i) = Scalar(1);
  return v;
}

std::string format_vector(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].str();
  }
  return s + ")";
}

}  // namespace postlie::core
