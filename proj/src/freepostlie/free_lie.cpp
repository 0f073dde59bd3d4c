#include "postlie/freepostlie/free_lie.hpp"

#include <algorithm>

namespace postlie::free {

int weight(const Word& w) {
  int s = 0;
  for (const auto& l : w) s += l.weight;
  return s;
}

bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  for (std::size_t i = 1; i < w.size(); ++i)
    if (!(w < Word(w.begin() + static_cast<long>(i), w.end()))) return false;
  return true;
}

std::pair<Word, Word> standard_factorization(const Word& w) {
  if (w.size() < 2 || !is_lyndon(w)) throw std::invalid_argument("standard factorization needs a Lyndon word");
  for (std::size_t i = 1; i < w.size(); ++i) {
    Word v(w.begin() + static_cast<long>(i), w.end());
    if (is_lyndon(v)) return {Word(w.begin(), w.begin() + static_cast<long>(i)), v};
  }
  throw std::logic_error("unreachable");
}

std::string format_word(const Word& w) {
  if (w.size() == 1) return w[0].key;
  auto [u, v] = standard_factorization(w);
  return "[" + format_word(u) + "," + format_word(v) + "]";
}

LieElement LieElement::basis(const Word& w) {
  if (!is_lyndon(w)) {
    std::string keys;
    for (const auto& l : w) keys += (keys.empty() ? "" : " ") + l.key;
    throw std::invalid_argument("not a Lyndon word: " + keys);
  }
  LieElement e;
  e.terms_.emplace(w, Scalar(1));
  return e;
}

void LieElement::add(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar LieElement::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar(0) : it->second;
}

int LieElement::max_weight() const {
  int m = 0;
  for (const auto& [w, c] : terms_) m = std::max(m, weight(w));
  return m;
}

LieElement LieElement::homogeneous(int wt) const {
  LieElement r;
  for (const auto& [w, c] : terms_)
    if (weight(w) == wt) r.terms_.emplace(w, c);
  return r;
}

std::string LieElement::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += c.str() + "*" + format_word(w);
  }
  return s;
}

LieElement& LieElement::operator+=(const LieElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

LieElement& LieElement::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

int BracketExpr::weight() const { return is_letter() ? letter.weight : left->weight() + right->weight(); }

ExprPtr BracketExpr::leaf(Letter l) {
  auto e = std::make_shared<BracketExpr>();
  e->letter = std::move(l);
  return e;
}

ExprPtr BracketExpr::br(ExprPtr a, ExprPtr b) {
  auto e = std::make_shared<BracketExpr>();
  e->left = std::move(a);
  e->right = std::move(b);
  return e;
}

namespace {

struct ExprParser {
  const std::string& s;
  const std::function<Letter(const std::string&)>& letter;
  std::size_t pos = 0;

  void skip() {
    while (pos < s.size() && s[pos] == ' ') ++pos;
  }
  void expect(char c) {
    skip();
    if (pos >= s.size() || s[pos] != c) throw core::ParseError(std::string("expected '") + c + "' in " + s);
    ++pos;
  }
  ExprPtr parse() {
    skip();
    if (pos < s.size() && s[pos] == '[') {
      ++pos;
      ExprPtr a = parse();
      expect(',');
      ExprPtr b = parse();
      expect(']');
      return BracketExpr::br(a, b);
    }
    std::size_t start = pos;
    while (pos < s.size() && s[pos] != ',' && s[pos] != ']' && s[pos] != '[' && s[pos] != ' ') ++pos;
    if (start == pos) throw core::ParseError("expected a letter in " + s);
    return BracketExpr::leaf(letter(s.substr(start, pos - start)));
  }
};

}  // namespace

ExprPtr parse_bracket_expr(const std::string& text, const std::function<Letter(const std::string&)>& letter) {
  ExprParser p{text, letter};
  ExprPtr e = p.parse();
  p.skip();
  if (p.pos != text.size()) throw core::ParseError("trailing input in " + text);
  return e;
}

LieElement FreeLieAlgebra::bracket(const LieElement& a, const LieElement& b) const {
  LieElement r;
  for (const auto& [u, c] : a.terms())
    for (const auto& [v, d] : b.terms()) r += (c * d) * bracket_words(u, v);
  return r;
}

LieElement FreeLieAlgebra::bracket_words(const Word& u, const Word& v) const {
  if (weight(u) + weight(v) > cap_)
    throw TruncationError("bracket of weight " + std::to_string(weight(u) + weight(v)) + " exceeds cap " +
                          std::to_string(cap_));
  if (u == v) return {};
  if (v < u) return Scalar(-1) * bracket_words(v, u);
  auto key = std::make_pair(u, v);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  LieElement r;
  std::pair<Word, Word> f;
  if (u.size() > 1) f = standard_factorization(u);
  if (u.size() == 1 || !(f.second < v)) {
    Word uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    r.add(uv, Scalar(1));
  } else {
    // [[u1,u2],v] = [u1,[u2,v]] + [[u1,v],u2]
    const Word& u1 = f.first;
    const Word& u2 = f.second;
    LieElement b1 = LieElement::basis(u1), b2 = LieElement::basis(u2);
    r = bracket(b1, bracket_words(u2, v));
    r += bracket(bracket_words(u1, v), b2);
  }
  memo_.emplace(key, r);
  return r;
}

LieElement FreeLieAlgebra::normalize(const ExprPtr& e) const {
  if (e->weight() > cap_) throw TruncationError("expression weight exceeds cap");
  if (e->is_letter()) return LieElement::basis({e->letter});
  return bracket(normalize(e->left), normalize(e->right));
}

std::vector<Word> FreeLieAlgebra::lyndon_basis(const std::vector<Letter>& alphabet, int max_weight) {
  std::vector<Letter> letters = alphabet;
  std::sort(letters.begin(), letters.end());
  std::vector<Word> out;
  Word cur;
  std::function<void(int)> grow = [&](int w) {
    if (!cur.empty() && is_lyndon(cur)) out.push_back(cur);
    for (const auto& l : letters) {
      if (w + l.weight > max_weight) continue;
      // a Lyndon word starts with its smallest letter
      if (!cur.empty() && l < cur.front()) continue;
      cur.push_back(l);
      grow(w + l.weight);
      cur.pop_back();
    }
  };
  grow(0);
  std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
    int wa = weight(a), wb = weight(b);
    return wa != wb ? wa < wb : a < b;
  });
  return out;
}

}  // namespace postlie::free
