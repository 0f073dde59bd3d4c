#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include <json.hpp>

#include "postlie/cohomology/deformation.hpp"
#include "postlie/linfty/dgca.hpp"
#include "postlie/rotabaxter/rotabaxter.hpp"

namespace postlie::cli {

using Json = nlohmann::ordered_json;

/// Schema violation; `field` is a JSON path such as "maps.lie.[1,2]".
struct ParseError : std::runtime_error {
  std::string field;
  ParseError(const std::string& field, const std::string& what)
      : std::runtime_error(field.empty() ? what : field + ": " + what), field(field) {}
};

enum class Kind { postlie, graded, open_closed, rb_bundle, deformation, action_data };

std::string kind_name(Kind k);

/// Brackets l and/or post-Lie∞ maps M on one graded space.
struct GradedFile {
  core::SpacePtr space;
  std::optional<int> cap;
  std::optional<linfty::LInftyStructure> l;
  std::optional<linfty::PostLieInftyStructure> m;
};

struct RBBundle {
  linfty::OpenClosedStructure s;
  rotabaxter::HomotopyRBOperator theta;
};

/// ω₀ and ω₁ on a named basis; the basis must match the structure it deforms.
struct DeformationFile {
  core::SpacePtr space;
  cohomology::DeformationPair pair;
};

using Content = std::variant<classical::PostLieData, GradedFile, linfty::OpenClosedStructure, RBBundle,
                             DeformationFile, linfty::ActionData>;

struct StructureFile {
  int format_version = 1;
  Kind kind = Kind::postlie;
  Content content;
};

/// Throws ParseError on any schema violation.
StructureFile parse_structure(const Json& j);
StructureFile parse_structure_text(const std::string& text);
/// Reads and parses a file; I/O failures are reported as ParseError with an empty field.
StructureFile load_structure(const std::string& path);

/// Canonical JSON: basis order, canonical input tuples, zero coefficients dropped.
Json to_json(const StructureFile& f);
/// to_json dumped with two-space indentation and a trailing newline.
std::string serialize(const StructureFile& f);

/// "p/q" or "p" with optional leading minus; denominators must be positive.
core::Scalar parse_rational(const std::string& s, const std::string& field);

/// "[1,2]" or "[1]|[2]" into zero-based tuples. With `blocks` = 1 a bar is rejected; with 2 it
/// is required.
std::pair<core::Tuple, core::Tuple> parse_key(const std::string& key, int blocks, const std::string& field);

}  // namespace postlie::cli
