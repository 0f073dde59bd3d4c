#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace postlie::core {

/// Finite graded vector space given by a labelled basis with one degree per element.
class GradedBasisSpace {
 public:
  GradedBasisSpace(std::vector<std::string> names, std::vector<int> degrees);

  /// All degrees -1, the classical convention for ungraded spaces.
  static GradedBasisSpace ungraded(std::vector<std::string> names);
  static GradedBasisSpace ungraded(std::size_t dim, const std::string& prefix = "e");

  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& degrees() const { return degrees_; }
  int degree(std::size_t i) const { return degrees_.at(i); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  /// Throws std::out_of_range for an unknown label.
  std::size_t index_of(const std::string& name) const;
  bool is_ungraded() const;

  friend bool operator==(const GradedBasisSpace& a, const GradedBasisSpace& b) {
    return a.names_ == b.names_ && a.degrees_ == b.degrees_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<int> degrees_;
  std::map<std::string, std::size_t> lookup_;
};

using SpacePtr = std::shared_ptr<const GradedBasisSpace>;

SpacePtr make_space(std::vector<std::string> names, std::vector<int> degrees);
SpacePtr make_ungraded(std::size_t dim, const std::string& prefix = "e");

bool same_space(const SpacePtr& a, const SpacePtr& b);

}  // namespace postlie::core
