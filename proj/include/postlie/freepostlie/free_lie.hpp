#pragma once

#include <compare>
#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "postlie/core/scalar.hpp"

namespace postlie::free {

using core::Scalar;

/// Raised when a product would exceed the weight cap.
struct TruncationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Generator of a free Lie algebra, ordered by weight and then key.
struct Letter {
  int weight = 1;
  std::string key;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

int weight(const Word& w);
bool is_lyndon(const Word& w);
/// w = uv with v the longest proper Lyndon suffix. Requires a Lyndon word of length >= 2.
std::pair<Word, Word> standard_factorization(const Word& w);
/// Standard bracketing, e.g. "[x,[x,y]]".
std::string format_word(const Word& w);

/// Element of the free Lie algebra in the Lyndon basis.
class LieElement {
 public:
  LieElement() = default;
  static LieElement basis(const Word& w);

  void add(const Word& w, const Scalar& c);
  const std::map<Word, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const Word& w) const;
  int max_weight() const;
  LieElement homogeneous(int w) const;
  std::string str() const;

  LieElement& operator+=(const LieElement& o);
  LieElement& operator-=(const LieElement& o);
  LieElement& operator*=(const Scalar& c);
  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  friend LieElement operator*(const Scalar& c, LieElement a) { return a *= c; }
  friend bool operator==(const LieElement& a, const LieElement& b) { return a.terms_ == b.terms_; }

 private:
  std::map<Word, Scalar> terms_;
};

/// Formal bracket expression over letters.
struct BracketExpr {
  Letter letter;
  std::shared_ptr<const BracketExpr> left, right;
  bool is_letter() const { return !left; }
  int weight() const;
  static std::shared_ptr<const BracketExpr> leaf(Letter l);
  static std::shared_ptr<const BracketExpr> br(std::shared_ptr<const BracketExpr> a,
                                               std::shared_ptr<const BracketExpr> b);
};
using ExprPtr = std::shared_ptr<const BracketExpr>;

/// Parses "[A,B]" nesting; letter tokens are resolved by `letter` (which throws on bad input).
ExprPtr parse_bracket_expr(const std::string& text, const std::function<Letter(const std::string&)>& letter);

/// Free Lie algebra truncated at a weight cap; products above the cap raise TruncationError.
class FreeLieAlgebra {
 public:
  explicit FreeLieAlgebra(int cap) : cap_(cap) {}
  int cap() const { return cap_; }

  LieElement bracket(const LieElement& a, const LieElement& b) const;
  LieElement bracket_words(const Word& u, const Word& v) const;
  LieElement normalize(const ExprPtr& e) const;

  /// Lyndon words over `alphabet` with total weight <= max_weight, ordered by weight then word.
  static std::vector<Word> lyndon_basis(const std::vector<Letter>& alphabet, int max_weight);

 private:
  int cap_;
  mutable std::map<std::pair<Word, Word>, LieElement> memo_;
};

}  // namespace postlie::free
