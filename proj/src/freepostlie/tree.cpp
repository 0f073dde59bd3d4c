#include "postlie/freepostlie/tree.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace postlie::free {

PlanarRootedTree PlanarRootedTree::parse(const std::string& code) {
  if (code.empty()) throw core::ParseError("empty tree word");
  int depth = 0;
  for (std::size_t i = 0; i < code.size(); ++i) {
    char c = code[i];
    if (c == '(') ++depth;
    else if (c == ')') --depth;
    else throw core::ParseError("tree word may only contain parentheses: " + code);
    if (depth < 0 || (depth == 0 && i + 1 != code.size()))
      throw core::ParseError("tree word is not a single balanced tree: " + code);
  }
  if (depth != 0) throw core::ParseError("unbalanced tree word: " + code);
  return PlanarRootedTree(code);
}

PlanarRootedTree PlanarRootedTree::from_children(const std::vector<PlanarRootedTree>& children) {
  std::string s = "(";
  for (const auto& c : children) s += c.code_;
  return PlanarRootedTree(s + ")");
}

std::vector<PlanarRootedTree> PlanarRootedTree::children() const {
  std::vector<PlanarRootedTree> out;
  int depth = 0;
  std::size_t start = 1;
  for (std::size_t i = 1; i + 1 < code_.size(); ++i) {
    depth += code_[i] == '(' ? 1 : -1;
    if (depth == 0) {
      out.push_back(PlanarRootedTree(code_.substr(start, i + 1 - start)));
      start = i + 1;
    }
  }
  return out;
}

PlanarRootedTree PlanarRootedTree::graft_at(const PlanarRootedTree& tau, int s) const {
  int seen = -1;
  for (std::size_t i = 0; i < code_.size(); ++i)
    if (code_[i] == '(' && ++seen == s) {
      std::string r = code_;
      r.insert(i + 1, tau.code_);
      return PlanarRootedTree(r);
    }
  throw std::out_of_range("no such node");
}

std::strong_ordering operator<=>(const PlanarRootedTree& a, const PlanarRootedTree& b) {
  if (auto c = a.code_.size() <=> b.code_.size(); c != 0) return c;
  return a.code_ <=> b.code_;
}

void TreeSum::add(const PlanarRootedTree& t, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TreeSum TreeSum::homogeneous(int weight) const {
  TreeSum r;
  for (const auto& [t, c] : terms_)
    if (t.node_count() == weight) r.terms_.emplace(t, c);
  return r;
}

Scalar TreeSum::coefficient(const PlanarRootedTree& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? Scalar(0) : it->second;
}

std::string TreeSum::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [t, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += c.str() + "*" + t.code();
  }
  return s;
}

std::vector<PlanarRootedTree> enumerate_trees(int n) {
  if (n <= 0) throw std::invalid_argument("trees have at least one node");
  // ordered forests with m nodes
  std::vector<std::vector<std::vector<PlanarRootedTree>>> forests(n);
  forests[0] = {{}};
  std::vector<std::vector<PlanarRootedTree>> trees(n + 1);
  for (int m = 1; m <= n; ++m) {
    for (const auto& f : forests[m - 1]) trees[m].push_back(PlanarRootedTree::from_children(f));
    std::sort(trees[m].begin(), trees[m].end());
    if (m == n) break;
    // forest of m nodes = first tree of a nodes followed by a forest of m - a nodes
    for (int a = 1; a <= m; ++a)
      for (const auto& t : trees[a])
        for (const auto& rest : forests[m - a]) {
          std::vector<PlanarRootedTree> f{t};
          f.insert(f.end(), rest.begin(), rest.end());
          forests[m].push_back(std::move(f));
        }
  }
  return trees[n];
}

TreeSum left_graft(const PlanarRootedTree& tau, const PlanarRootedTree& omega) {
  TreeSum r;
  for (int s = 0; s < omega.node_count(); ++s) r.add(omega.graft_at(tau, s), Scalar(1));
  return r;
}

}  // namespace postlie::free
