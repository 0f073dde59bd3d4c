#include "postlie/core/graded_space.hpp"

#include "postlie/core/scalar.hpp"

namespace postlie::core {

GradedBasisSpace::GradedBasisSpace(std::vector<std::string> names, std::vector<int> degrees)
    : names_(std::move(names)), degrees_(std::move(degrees)) {
  if (names_.size() != degrees_.size())
    throw DimensionError("basis names and degrees differ in length");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw std::invalid_argument("empty basis label");
    if (!lookup_.emplace(names_[i], i).second)
      throw std::invalid_argument("duplicate basis label '" + names_[i] + "'");
  }
}

GradedBasisSpace GradedBasisSpace::ungraded(std::vector<std::string> names) {
  std::vector<int> d(names.size(), -1);
  return GradedBasisSpace(std::move(names), std::move(d));
}

GradedBasisSpace GradedBasisSpace::ungraded(std::size_t dim, const std::string& prefix) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < dim; ++i) names.push_back(prefix + std::to_string(i + 1));
  return ungraded(std::move(names));
}

std::size_t GradedBasisSpace::index_of(const std::string& name) const {
  auto it = lookup_.find(name);
  if (it == lookup_.end()) throw std::out_of_range("unknown basis label '" + name + "'");
  return it->second;
}

bool GradedBasisSpace::is_ungraded() const {
  for (int d : degrees_)
    if (d != -1) return false;
  return true;
}

SpacePtr make_space(std::vector<std::string> names, std::vector<int> degrees) {
  return std::make_shared<const GradedBasisSpace>(std::move(names), std::move(degrees));
}

SpacePtr make_ungraded(std::size_t dim, const std::string& prefix) {
  return std::make_shared<const GradedBasisSpace>(GradedBasisSpace::ungraded(dim, prefix));
}

bool same_space(const SpacePtr& a, const SpacePtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace postlie::core
