#include "postlie/core/residual.hpp"

namespace postlie::core {

void ResidualReport::record(const std::string& identity, std::vector<int> arity, const Tuple& first,
                            const Tuple& second, const Vector& v) {
  ++evaluations;
  for (std::size_t c = 0; c < v.size(); ++c)
    if (!v[c].is_zero()) entries.push_back({identity, arity, first, second, c, v[c]});
}

void ResidualReport::merge(const ResidualReport& other) {
  evaluations += other.evaluations;
  entries.insert(entries.end(), other.entries.begin(), other.entries.end());
}

std::size_t ResidualReport::count(const std::string& identity) const {
  std::size_t n = 0;
  for (const auto& e : entries)
    if (e.identity == identity) ++n;
  return n;
}

std::string format_tuple(const Tuple& t) {
  std::string s = "[";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t[i] + 1);
  }
  return s + "]";
}

std::string ResidualReport::text() const {
  std::string s;
  for (const auto& e : entries) {
    s += e.identity + " (";
    for (std::size_t i = 0; i < e.arity.size(); ++i) s += (i ? "," : "") + std::to_string(e.arity[i]);
    s += ") " + format_tuple(e.first) + "|" + format_tuple(e.second) + " component " +
         std::to_string(e.component + 1) + ": " + e.value.str() + "\n";
  }
  return s;
}

}  // namespace postlie::core
