#include "postlie/freepostlie/free_postlie.hpp"

#include <sstream>

namespace postlie::free {

Letter tree_letter(const PlanarRootedTree& t) { return {t.node_count(), t.code()}; }
PlanarRootedTree letter_tree(const Letter& l) { return PlanarRootedTree::parse(l.key); }

void PostLieOnFreeLie::check_weight(int w) const {
  if (w > cap())
    throw TruncationError("product of weight " + std::to_string(w) + " exceeds cap " + std::to_string(cap()));
}

LieElement PostLieOnFreeLie::triangle(const LieElement& x, const LieElement& y) const {
  LieElement r;
  for (const auto& [u, c] : x.terms())
    for (const auto& [v, d] : y.terms()) r += (c * d) * triangle_words(u, v);
  return r;
}

LieElement FreePostLie::triangle_words(const Word& u, const Word& v) const {
  check_weight(weight(u) + weight(v));
  if (v.size() == 1) return on_tree(u, v[0]);
  auto key = std::make_pair(u, v);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  // Post-1: u ▷ [v1,v2] = [u▷v1, v2] + [v1, u▷v2]
  auto [v1, v2] = standard_factorization(v);
  LieElement b1 = LieElement::basis(v1), b2 = LieElement::basis(v2);
  LieElement r = lie_.bracket(triangle_words(u, v1), b2);
  r += lie_.bracket(b1, triangle_words(u, v2));
  memo_.emplace(key, r);
  return r;
}

LieElement FreePostLie::on_tree(const Word& u, const Letter& omega) const {
  auto key = std::make_pair(u, omega);
  if (auto it = memo_tree_.find(key); it != memo_tree_.end()) return it->second;
  LieElement r;
  if (u.size() == 1) {
    TreeSum g = left_graft(letter_tree(u[0]), letter_tree(omega));
    for (const auto& [t, c] : g.terms())
      r.add({tree_letter(t)}, c);
  } else {
    // [a,b]▷z = a▷(b▷z) - b▷(a▷z) - (a▷b)▷z + (b▷a)▷z
    auto [a, b] = standard_factorization(u);
    LieElement A = LieElement::basis(a), B = LieElement::basis(b), Z = LieElement::basis({omega});
    r = triangle(A, triangle(B, Z));
    r -= triangle(B, triangle(A, Z));
    r -= triangle(triangle(A, B), Z);
    r += triangle(triangle(B, A), Z);
  }
  memo_tree_.emplace(key, r);
  return r;
}

std::vector<Letter> FreePostLie::alphabet(int w) const {
  std::vector<Letter> out;
  for (int n = 1; n <= w; ++n)
    for (const auto& t : enumerate_trees(n)) out.push_back(tree_letter(t));
  return out;
}

Letter IharaPostLie::letter(const std::string& key) {
  if (key == "x") return x();
  if (key == "y") return y();
  throw core::ParseError("Ihara letters are x and y, got " + key);
}

std::vector<Letter> IharaPostLie::alphabet(int) const { return {x(), y()}; }

LieElement IharaPostLie::triangle_words(const Word& f, const Word& g) const {
  check_weight(weight(f) + weight(g));
  if (g.size() == 1) {
    if (g[0] == x()) return {};
    return lie_.bracket(LieElement::basis({y()}), LieElement::basis(f));
  }
  auto key = std::make_pair(f, g);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  auto [g1, g2] = standard_factorization(g);
  LieElement r = lie_.bracket(triangle_words(f, g1), LieElement::basis(g2));
  r += lie_.bracket(LieElement::basis(g1), triangle_words(f, g2));
  memo_.emplace(key, r);
  return r;
}

LieElement triangle_extend(const FreePostLie& algebra, const LieElement& x, const LieElement& y) {
  return algebra.triangle(x, y);
}

LieElement ihara_triangle(const IharaPostLie& algebra, const LieElement& f, const LieElement& g) {
  return algebra.triangle(f, g);
}

namespace {

core::Vector coords(const LieElement& e, const std::map<Word, std::size_t>& index) {
  core::Vector v(index.size());
  for (const auto& [w, c] : e.terms()) v.at(index.at(w)) = c;
  return v;
}

}  // namespace

core::ResidualReport axiom_residuals(const PostLieOnFreeLie& A) {
  const int cap = A.cap();
  auto basis = A.basis(cap);
  std::map<Word, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  const auto& lie = A.lie();
  core::ResidualReport rep;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j)
      for (std::size_t k = 0; k < basis.size(); ++k) {
        if (weight(basis[i]) + weight(basis[j]) + weight(basis[k]) > cap) continue;
        LieElement x = LieElement::basis(basis[i]), y = LieElement::basis(basis[j]), z = LieElement::basis(basis[k]);
        core::Tuple t{static_cast<int>(i), static_cast<int>(j), static_cast<int>(k)};
        LieElement p1 = A.triangle(x, lie.bracket(y, z));
        p1 -= lie.bracket(A.triangle(x, y), z);
        p1 -= lie.bracket(y, A.triangle(x, z));
        rep.record("post-1", {1, 1, 1}, t, {}, coords(p1, index));
        LieElement s = lie.bracket(x, y) + A.triangle(x, y) - A.triangle(y, x);
        LieElement p2 = A.triangle(s, z);
        p2 -= A.triangle(x, A.triangle(y, z));
        p2 += A.triangle(y, A.triangle(x, z));
        rep.record("post-2", {1, 1, 1}, t, {}, coords(p2, index));
      }
  return rep;
}

core::ResidualReport verify_axioms(FreeMode mode, int weight_cap, int max_cap) {
  if (max_cap < 0) max_cap = mode == FreeMode::free ? 5 : 4;
  if (weight_cap > max_cap)
    throw std::invalid_argument("weight cap " + std::to_string(weight_cap) + " above the configured maximum " +
                                std::to_string(max_cap));
  if (weight_cap < 1) throw std::invalid_argument("weight cap must be positive");
  if (mode == FreeMode::free) return axiom_residuals(FreePostLie(weight_cap));
  return axiom_residuals(IharaPostLie(weight_cap));
}

core::ResidualReport verify_subadjacent_jacobi(const PostLieOnFreeLie& A) {
  const int cap = A.cap();
  auto basis = A.basis(cap);
  std::map<Word, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  auto sub = [&](const LieElement& a, const LieElement& b) {
    return A.triangle(a, b) - A.triangle(b, a) + A.lie().bracket(a, b);
  };
  core::ResidualReport rep;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      for (std::size_t k = j + 1; k < basis.size(); ++k) {
        if (weight(basis[i]) + weight(basis[j]) + weight(basis[k]) > cap) continue;
        LieElement x = LieElement::basis(basis[i]), y = LieElement::basis(basis[j]), z = LieElement::basis(basis[k]);
        LieElement r = sub(x, sub(y, z)) + sub(y, sub(z, x)) + sub(z, sub(x, y));
        rep.record("sub-adjacent jacobi", {1, 1, 1},
                   {static_cast<int>(i), static_cast<int>(j), static_cast<int>(k)}, {}, coords(r, index));
      }
  return rep;
}

std::string grafting_table(int n) {
  std::ostringstream os;
  for (int a = 1; a < n; ++a)
    for (const auto& tau : enumerate_trees(a))
      for (int b = 1; a + b <= n; ++b)
        for (const auto& omega : enumerate_trees(b))
          os << tau.code() << " |> " << omega.code() << " = " << left_graft(tau, omega).str() << "\n";
  return os.str();
}

}  // namespace postlie::free
