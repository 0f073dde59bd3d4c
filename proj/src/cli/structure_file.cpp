#include "postlie/cli/structure_file.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "postlie/core/canonical.hpp"

namespace postlie::cli {

using core::Scalar;
using core::SpacePtr;
using core::Tuple;
using core::Vector;
using linfty::GradedFamily;

namespace {

const std::map<std::string, Kind>& kinds() {
  static const std::map<std::string, Kind> k{{"postlie", Kind::postlie},         {"graded", Kind::graded},
                                             {"open_closed", Kind::open_closed}, {"rb_bundle", Kind::rb_bundle},
                                             {"deformation", Kind::deformation}, {"action_data", Kind::action_data}};
  return k;
}

std::string join(const std::string& a, const std::string& b) { return a.empty() ? b : a + "." + b; }

void require_object(const Json& j, const std::string& field) {
  if (!j.is_object()) throw ParseError(field, "expected an object");
}

void allow_keys(const Json& j, const std::string& field, std::initializer_list<const char*> keys) {
  for (const auto& [k, v] : j.items()) {
    bool known = false;
    for (const char* a : keys) known = known || k == a;
    if (!known) throw ParseError(join(field, k), "unknown field");
  }
}

const Json& required(const Json& j, const std::string& field, const char* key) {
  if (!j.contains(key)) throw ParseError(join(field, key), "missing field");
  return j.at(key);
}

int as_int(const Json& j, const std::string& field) {
  if (!j.is_number_integer()) throw ParseError(field, "expected an integer");
  return j.get<int>();
}

/// {"basis": [...]} or {"dimension": n}, plus "degrees" when graded. Ungraded spaces sit in degree −1.
SpacePtr parse_space(const Json& j, const std::string& field, bool graded, std::initializer_list<const char*> extra) {
  require_object(j, field);
  std::vector<std::string> names;
  if (j.contains("basis") == j.contains("dimension"))
    throw ParseError(field, "exactly one of \"basis\" and \"dimension\" is required");
  if (j.contains("basis")) {
    const auto& b = j.at("basis");
    if (!b.is_array() || b.empty()) throw ParseError(join(field, "basis"), "expected a nonempty array of names");
    std::set<std::string> seen;
    for (std::size_t i = 0; i < b.size(); ++i) {
      std::string f = join(field, "basis") + "[" + std::to_string(i) + "]";
      if (!b[i].is_string() || b[i].get<std::string>().empty()) throw ParseError(f, "expected a nonempty string");
      std::string name = b[i].get<std::string>();
      if (!seen.insert(name).second) throw ParseError(f, "duplicate basis name '" + name + "'");
      names.push_back(name);
    }
  } else {
    int dim = as_int(j.at("dimension"), join(field, "dimension"));
    if (dim < 1) throw ParseError(join(field, "dimension"), "must be positive");
    for (int i = 1; i <= dim; ++i) names.push_back("e" + std::to_string(i));
  }
  std::vector<int> degrees(names.size(), -1);
  if (graded) {
    const auto& d = required(j, field, "degrees");
    if (!d.is_array() || d.size() != names.size())
      throw ParseError(join(field, "degrees"), "expected one integer per basis element");
    for (std::size_t i = 0; i < d.size(); ++i) degrees[i] = as_int(d[i], join(field, "degrees") + "[" + std::to_string(i) + "]");
  } else if (j.contains("degrees")) {
    throw ParseError(join(field, "degrees"), "degrees are not allowed for this kind");
  }
  for (const auto& [k, v] : j.items()) {
    bool known = k == "basis" || k == "dimension" || (graded && k == "degrees");
    for (const char* e : extra) known = known || k == e;
    if (!known) throw ParseError(join(field, k), "unknown field");
  }
  return core::make_space(names, degrees);
}

Json space_json(const core::GradedBasisSpace& s, bool graded) {
  Json j = Json::object();
  j["basis"] = s.names();
  if (graded) j["degrees"] = s.degrees();
  return j;
}

Vector parse_vector(const Json& j, const core::GradedBasisSpace& target, const std::string& field) {
  require_object(j, field);
  Vector v(target.dim());
  const auto& names = target.names();
  for (const auto& [name, coef] : j.items()) {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw ParseError(join(field, name), "unknown basis name");
    if (!coef.is_string()) throw ParseError(join(field, name), "coefficients are rational strings");
    v[static_cast<std::size_t>(it - names.begin())] = parse_rational(coef.get<std::string>(), join(field, name));
  }
  return v;
}

Json vector_json(const Vector& v, const core::GradedBasisSpace& target) {
  Json j = Json::object();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) j[target.names()[i]] = v[i].str();
  return j;
}

std::string key_string(const Tuple& first, const Tuple& second, int blocks) {
  if (blocks == 1) return core::format_tuple(second);
  return core::format_tuple(first) + "|" + core::format_tuple(second);
}

struct MapSpec {
  int blocks;
  const core::GradedBasisSpace* first;  // null for single-block maps
  const core::GradedBasisSpace* second;
  const core::GradedBasisSpace* target;
  std::optional<std::size_t> p, q;  // required lengths
  bool allow_empty_second = false;
};

/// Visits every entry of a map table after validating indices, lengths and duplicates.
template <class Set>
void parse_map(const Json& maps, const std::string& field, const char* name, const MapSpec& spec, Set&& set) {
  if (!maps.contains(name)) return;
  const auto& table = maps.at(name);
  std::string mf = join(field, name);
  require_object(table, mf);
  std::set<std::pair<Tuple, Tuple>> seen;
  for (const auto& [key, value] : table.items()) {
    std::string f = mf + "." + key;
    auto [first, second] = parse_key(key, spec.blocks, f);
    if (spec.p && first.size() != *spec.p) throw ParseError(f, "expected " + std::to_string(*spec.p) + " inputs in the first block");
    if (spec.q && second.size() != *spec.q)
      throw ParseError(f, "expected " + std::to_string(*spec.q) + (spec.blocks == 2 ? " inputs in the second block" : " inputs"));
    if (second.empty() && !spec.allow_empty_second) throw ParseError(f, "empty input block");
    auto check_range = [&](const Tuple& t, const core::GradedBasisSpace* s) {
      for (int i : t)
        if (!s || i >= static_cast<int>(s->dim())) throw ParseError(f, "index " + std::to_string(i + 1) + " out of range");
    };
    check_range(first, spec.first);
    check_range(second, spec.second);
    Vector v = parse_vector(value, *spec.target, f);
    auto mode = core::SymmetryMode::graded_symmetric;
    auto c1 = core::canonical_sort(first, spec.first ? spec.first->degrees() : std::vector<int>{}, mode);
    auto c2 = core::canonical_sort(second, spec.second->degrees(), mode);
    if (!seen.insert({c1.indices, c2.indices}).second) throw ParseError(f, "duplicate entry for the same symmetric input");
    if (c1.is_zero || c2.is_zero) {
      if (!core::is_zero(v)) throw ParseError(f, "input vanishes by graded symmetry but the value is nonzero");
      continue;
    }
    if (core::is_zero(v)) continue;
    try {
      set(first, second, v);
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(f, e.what());
    }
  }
}

void family_json(Json& maps, const char* name, const GradedFamily& fam, int blocks) {
  Json t = Json::object();
  for (const auto& [k, comp] : fam.components())
    for (const auto& [key, v] : comp.table())
      if (!core::is_zero(v)) t[key_string(key.first, key.second, blocks)] = vector_json(v, *fam.target_space());
  maps[name] = t;
}

std::optional<int> parse_cap(const Json& j) {
  if (!j.contains("cap")) return std::nullopt;
  int c = as_int(j.at("cap"), "cap");
  if (c < 1) throw ParseError("cap", "must be positive");
  return c;
}

const Json& maps_of(const Json& j, std::initializer_list<const char*> names) {
  static const Json empty = Json::object();
  if (!j.contains("maps")) return empty;
  const auto& m = j.at("maps");
  require_object(m, "maps");
  allow_keys(m, "maps", names);
  return m;
}

classical::PostLieData parse_postlie(const Json& j) {
  allow_keys(j, "", {"format_version", "kind", "basis", "dimension", "maps"});
  auto space = parse_space(j, "", false, {"format_version", "kind", "maps"});
  const auto& maps = maps_of(j, {"lie", "triangle"});
  classical::PostLieData d(space);
  parse_map(maps, "maps", "lie", {1, nullptr, space.get(), space.get(), std::nullopt, 2},
            [&](const Tuple&, const Tuple& s, const Vector& v) { d.set_bracket(s[0], s[1], v); });
  parse_map(maps, "maps", "triangle", {2, space.get(), space.get(), space.get(), 1, 1},
            [&](const Tuple& f, const Tuple& s, const Vector& v) { d.set_triangle(f[0], s[0], v); });
  return d;
}

DeformationFile parse_deformation(const Json& j) {
  allow_keys(j, "", {"format_version", "kind", "basis", "dimension", "maps"});
  auto space = parse_space(j, "", false, {"format_version", "kind", "maps"});
  const auto& maps = maps_of(j, {"omega0", "omega1"});
  cohomology::DeformationPair pair(space);
  parse_map(maps, "maps", "omega0", {1, nullptr, space.get(), space.get(), std::nullopt, 2},
            [&](const Tuple&, const Tuple& s, const Vector& v) { pair.set_omega0(s[0], s[1], v); });
  parse_map(maps, "maps", "omega1", {2, space.get(), space.get(), space.get(), 1, 1},
            [&](const Tuple& f, const Tuple& s, const Vector& v) { pair.set_omega1(f[0], s[0], v); });
  return DeformationFile{space, pair};
}

GradedFile parse_graded(const Json& j) {
  allow_keys(j, "", {"format_version", "kind", "basis", "dimension", "degrees", "cap", "maps"});
  auto space = parse_space(j, "", true, {"format_version", "kind", "cap", "maps"});
  GradedFile g{space, parse_cap(j), std::nullopt, std::nullopt};
  const auto& maps = maps_of(j, {"l", "M"});
  if (maps.contains("l")) {
    linfty::LInftyStructure l(space, g.cap);
    parse_map(maps, "maps", "l", {1, nullptr, space.get(), space.get(), std::nullopt, std::nullopt},
              [&](const Tuple&, const Tuple& s, const Vector& v) { l.set(s, v); });
    g.l = std::move(l);
  }
  if (maps.contains("M")) {
    linfty::PostLieInftyStructure m(space, g.cap);
    parse_map(maps, "maps", "M", {2, space.get(), space.get(), space.get(), std::nullopt, std::nullopt},
              [&](const Tuple& f, const Tuple& s, const Vector& v) { m.set(f, s, v); });
    g.m = std::move(m);
  }
  return g;
}

linfty::OpenClosedStructure parse_open_closed_parts(const Json& j, const Json& maps, const SpacePtr& g,
                                                    const SpacePtr& h, std::optional<int> cap) {
  linfty::LInftyStructure l(g, cap);
  parse_map(maps, "maps", "l", {1, nullptr, g.get(), g.get(), std::nullopt, std::nullopt},
            [&](const Tuple&, const Tuple& s, const Vector& v) { l.set(s, v); });
  GradedFamily r(g, h, h, 1, cap);
  MapSpec rs{2, g.get(), h.get(), h.get(), std::nullopt, std::nullopt, true};
  parse_map(maps, "maps", "R", rs, [&](const Tuple& f, const Tuple& s, const Vector& v) {
    if (f.empty() && s.empty()) throw ParseError("maps.R", "R_{0,0} is not allowed");
    r.set(static_cast<int>(f.size()), static_cast<int>(s.size()), f, s, v);
  });
  (void)j;
  return linfty::OpenClosedStructure(std::move(l), std::move(r));
}

linfty::OpenClosedStructure parse_open_closed(const Json& j) {
  allow_keys(j, "", {"format_version", "kind", "g", "h", "cap", "maps"});
  auto g = parse_space(required(j, "", "g"), "g", true, {});
  auto h = parse_space(required(j, "", "h"), "h", true, {});
  return parse_open_closed_parts(j, maps_of(j, {"l", "R"}), g, h, parse_cap(j));
}

RBBundle parse_rb(const Json& j) {
  allow_keys(j, "", {"format_version", "kind", "g", "h", "cap", "maps"});
  auto g = parse_space(required(j, "", "g"), "g", true, {});
  auto h = parse_space(required(j, "", "h"), "h", true, {});
  auto cap = parse_cap(j);
  const auto& maps = maps_of(j, {"l", "R", "theta"});
  auto s = parse_open_closed_parts(j, maps, g, h, cap);
  rotabaxter::HomotopyRBOperator theta(h, g, cap);
  parse_map(maps, "maps", "theta", {1, nullptr, h.get(), g.get(), std::nullopt, std::nullopt},
            [&](const Tuple&, const Tuple& sw, const Vector& v) { theta.set(sw, v); });
  return RBBundle{std::move(s), std::move(theta)};
}

const std::map<std::string, linfty::ActionFlavor>& flavors() {
  static const std::map<std::string, linfty::ActionFlavor> f{{"generic", linfty::ActionFlavor::generic},
                                                             {"poisson", linfty::ActionFlavor::poisson},
                                                             {"algebroid", linfty::ActionFlavor::algebroid}};
  return f;
}

std::string flavor_name(linfty::ActionFlavor f) {
  for (const auto& [n, v] : flavors())
    if (v == f) return n;
  return "generic";
}

linfty::ActionData parse_action(const Json& j) {
  allow_keys(j, "", {"format_version", "kind", "algebra", "lie", "flavor", "cap", "maps"});
  auto a = parse_space(required(j, "", "algebra"), "algebra", true, {});
  auto g = parse_space(required(j, "", "lie"), "lie", true, {});
  auto cap = parse_cap(j);
  const auto& fj = required(j, "", "flavor");
  if (!fj.is_string() || !flavors().count(fj.get<std::string>()))
    throw ParseError("flavor", "expected generic, poisson or algebroid");
  auto flavor = flavors().at(fj.get<std::string>());
  const auto& maps = maps_of(j, {"product", "differential", "l", "rho", "module"});

  linfty::DGCA A(a);
  parse_map(maps, "maps", "product", {1, nullptr, a.get(), a.get(), std::nullopt, 2},
            [&](const Tuple&, const Tuple& s, const Vector& v) { A.set_product(s[0], s[1], v); });
  parse_map(maps, "maps", "differential", {1, nullptr, a.get(), a.get(), std::nullopt, 1},
            [&](const Tuple&, const Tuple& s, const Vector& v) { A.set_differential(s[0], v); });
  linfty::LInftyStructure l(g, cap);
  parse_map(maps, "maps", "l", {1, nullptr, g.get(), g.get(), std::nullopt, std::nullopt},
            [&](const Tuple&, const Tuple& s, const Vector& v) { l.set(s, v); });
  GradedFamily rho = linfty::make_rho(A, l, cap);
  parse_map(maps, "maps", "rho", {2, g.get(), a.get(), a.get(), std::nullopt, 1},
            [&](const Tuple& f, const Tuple& s, const Vector& v) {
              if (f.empty()) throw ParseError("maps.rho", "ρ needs at least one Lie input");
              rho.set(static_cast<int>(f.size()), 1, f, s, v);
            });
  std::optional<linfty::AlgebraModule> module;
  if (maps.contains("module")) {
    if (flavor != linfty::ActionFlavor::algebroid) throw ParseError("maps.module", "only the algebroid flavor has a module");
    linfty::AlgebraModule mod(a, g);
    parse_map(maps, "maps", "module", {2, a.get(), g.get(), g.get(), 1, 1},
              [&](const Tuple& f, const Tuple& s, const Vector& v) { mod.set(f[0], s[0], v); });
    module = std::move(mod);
  }
  try {
    switch (flavor) {
      case linfty::ActionFlavor::poisson:
        if (!rho.is_zero()) throw ParseError("maps.rho", "the poisson flavor derives ρ from l");
        if (!core::same_space(a, g)) throw ParseError("lie", "the poisson flavor needs lie = algebra");
        return linfty::poisson_action(A, l);
      case linfty::ActionFlavor::algebroid:
        if (!module) throw ParseError("maps.module", "the algebroid flavor needs a module");
        return linfty::algebroid_action(A, l, rho, *module);
      case linfty::ActionFlavor::generic:
        break;
    }
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError("", e.what());
  }
  return linfty::ActionData{A, l, rho, std::nullopt, flavor};
}

Json cap_json(Json& j, std::optional<int> cap) {
  if (cap) j["cap"] = *cap;
  return j;
}

Json postlie_json(const classical::PostLieData& d) {
  Json j, maps, lie = Json::object(), tri = Json::object();
  const auto& s = *d.space();
  j["basis"] = s.names();
  const int n = static_cast<int>(d.dim());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      Vector v = d.bracket(a, b);
      if (!core::is_zero(v)) lie[key_string({}, {a, b}, 1)] = vector_json(v, s);
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Vector v = d.triangle(a, b);
      if (!core::is_zero(v)) tri[key_string({a}, {b}, 2)] = vector_json(v, s);
    }
  maps["lie"] = lie;
  maps["triangle"] = tri;
  j["maps"] = maps;
  return j;
}

Json deformation_json(const DeformationFile& d) {
  Json j, maps, w0 = Json::object(), w1 = Json::object();
  const auto& s = *d.space;
  j["basis"] = s.names();
  const int n = static_cast<int>(s.dim());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      Vector v = d.pair.omega0(a, b);
      if (!core::is_zero(v)) w0[key_string({}, {a, b}, 1)] = vector_json(v, s);
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Vector v = d.pair.omega1(a, b);
      if (!core::is_zero(v)) w1[key_string({a}, {b}, 2)] = vector_json(v, s);
    }
  maps["omega0"] = w0;
  maps["omega1"] = w1;
  j["maps"] = maps;
  return j;
}

Json graded_json(const GradedFile& g) {
  Json j = space_json(*g.space, true);
  cap_json(j, g.cap);
  Json maps = Json::object();
  if (g.l) family_json(maps, "l", g.l->ops(), 1);
  if (g.m) family_json(maps, "M", g.m->maps(), 2);
  j["maps"] = maps;
  return j;
}

Json open_closed_json(const linfty::OpenClosedStructure& s, const rotabaxter::HomotopyRBOperator* theta) {
  Json j;
  j["g"] = space_json(*s.g_space(), true);
  j["h"] = space_json(*s.h_space(), true);
  std::optional<int> cap = s.cap();
  if (theta) cap = linfty::min_cap(cap, theta->cap());
  cap_json(j, cap);
  Json maps = Json::object();
  family_json(maps, "l", s.l().ops(), 1);
  family_json(maps, "R", s.r(), 2);
  if (theta) family_json(maps, "theta", theta->theta(), 1);
  j["maps"] = maps;
  return j;
}

Json action_json(const linfty::ActionData& d) {
  Json j;
  const auto& a = *d.algebra.space();
  j["algebra"] = space_json(a, true);
  j["lie"] = space_json(*d.lie.space(), true);
  j["flavor"] = flavor_name(d.flavor);
  cap_json(j, linfty::min_cap(d.lie.cap(), d.rho.cap()));
  Json maps = Json::object(), prod = Json::object(), diff = Json::object();
  const int n = static_cast<int>(a.dim());
  for (int x = 0; x < n; ++x)
    for (int y = x; y < n; ++y) {
      bool odd = a.degree(static_cast<std::size_t>(x)) % 2 != 0;
      if (x == y && odd) continue;
      Vector v = d.algebra.product(x, y);
      if (!core::is_zero(v)) prod[key_string({}, {x, y}, 1)] = vector_json(v, a);
    }
  for (int x = 0; x < n; ++x) {
    Vector v = d.algebra.d(x);
    if (!core::is_zero(v)) diff[key_string({}, {x}, 1)] = vector_json(v, a);
  }
  maps["product"] = prod;
  maps["differential"] = diff;
  family_json(maps, "l", d.lie.ops(), 1);
  if (d.flavor != linfty::ActionFlavor::poisson) family_json(maps, "rho", d.rho, 2);
  if (d.module) {
    Json mod = Json::object();
    const auto& g = *d.lie.space();
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < static_cast<int>(g.dim()); ++y) {
        Vector v = d.module->act(x, y);
        if (!core::is_zero(v)) mod[key_string({x}, {y}, 2)] = vector_json(v, g);
      }
    maps["module"] = mod;
  }
  j["maps"] = maps;
  return j;
}

}  // namespace

std::string kind_name(Kind k) {
  for (const auto& [n, v] : kinds())
    if (v == k) return n;
  return "postlie";
}

Scalar parse_rational(const std::string& s, const std::string& field) {
  static const std::regex re("-?(0|[1-9][0-9]*)(/[1-9][0-9]*)?");
  if (!std::regex_match(s, re)) throw ParseError(field, "malformed rational '" + s + "'");
  try {
    return Scalar::parse(s);
  } catch (const std::exception& e) {
    throw ParseError(field, e.what());
  }
}

std::pair<Tuple, Tuple> parse_key(const std::string& key, int blocks, const std::string& field) {
  static const std::regex block("\\[(|[1-9][0-9]*(,[1-9][0-9]*)*)\\]");
  auto parse_block = [&](const std::string& b) {
    if (!std::regex_match(b, block)) throw ParseError(field, "malformed key '" + key + "'");
    Tuple t;
    std::string inner = b.substr(1, b.size() - 2);
    std::stringstream ss(inner);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.size() > 6) throw ParseError(field, "index out of range in '" + key + "'");
      t.push_back(std::stoi(item) - 1);
    }
    return t;
  };
  auto bar = key.find('|');
  if (blocks == 1) {
    if (bar != std::string::npos) throw ParseError(field, "expected a single block key like \"[1,2]\"");
    return {Tuple{}, parse_block(key)};
  }
  if (bar == std::string::npos || key.find('|', bar + 1) != std::string::npos)
    throw ParseError(field, "expected a two-block key like \"[1]|[2]\"");
  return {parse_block(key.substr(0, bar)), parse_block(key.substr(bar + 1))};
}

StructureFile parse_structure(const Json& j) {
  require_object(j, "");
  int version = as_int(required(j, "", "format_version"), "format_version");
  if (version != 1) throw ParseError("format_version", "unsupported version " + std::to_string(version));
  const auto& kj = required(j, "", "kind");
  if (!kj.is_string() || !kinds().count(kj.get<std::string>())) throw ParseError("kind", "unknown kind");
  Kind kind = kinds().at(kj.get<std::string>());
  auto content = [&]() -> Content {
    try {
      switch (kind) {
        case Kind::postlie: return parse_postlie(j);
        case Kind::graded: return parse_graded(j);
        case Kind::open_closed: return parse_open_closed(j);
        case Kind::rb_bundle: return parse_rb(j);
        case Kind::deformation: return parse_deformation(j);
        case Kind::action_data: break;
      }
      return parse_action(j);
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError("", e.what());
    }
  }();
  return StructureFile{version, kind, std::move(content)};
}

StructureFile parse_structure_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError("", std::string("invalid JSON: ") + e.what());
  }
  return parse_structure(j);
}

StructureFile load_structure(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("", "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_structure_text(ss.str());
}

Json to_json(const StructureFile& f) {
  Json body;
  switch (f.kind) {
    case Kind::postlie: body = postlie_json(std::get<classical::PostLieData>(f.content)); break;
    case Kind::graded: body = graded_json(std::get<GradedFile>(f.content)); break;
    case Kind::open_closed: body = open_closed_json(std::get<linfty::OpenClosedStructure>(f.content), nullptr); break;
    case Kind::rb_bundle: {
      const auto& b = std::get<RBBundle>(f.content);
      body = open_closed_json(b.s, &b.theta);
      break;
    }
    case Kind::deformation: body = deformation_json(std::get<DeformationFile>(f.content)); break;
    case Kind::action_data: body = action_json(std::get<linfty::ActionData>(f.content)); break;
  }
  Json j;
  j["format_version"] = f.format_version;
  j["kind"] = kind_name(f.kind);
  for (const auto& [k, v] : body.items()) j[k] = v;
  return j;
}

std::string serialize(const StructureFile& f) { return to_json(f).dump(2) + "\n"; }

}  // namespace postlie::cli
