#include "postlie/cli/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <optional>

#include "postlie/cli/structure_file.hpp"
#include "postlie/freepostlie/free_postlie.hpp"
#include "postlie/freepostlie/tree.hpp"

namespace postlie::cli {

using core::ResidualReport;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Section {
  std::string name;
  ResidualReport report;
};

/// Everything a command prints; rendered both as text and as the JSON report.
struct Outcome {
  Outcome() = default;
  explicit Outcome(std::string c, std::optional<std::string> k = std::nullopt, std::optional<int> a = std::nullopt)
      : command(std::move(c)), kind(std::move(k)), arity(a) {}

  std::string command;
  std::optional<std::string> kind;
  std::optional<int> arity;
  std::vector<std::string> lines;
  Json info = Json::object();
  std::vector<Section> sections;
  bool failed = false;  // a requested property fails without a residual, e.g. no equivalence

  bool ok() const {
    if (failed) return false;
    for (const auto& s : sections)
      if (!s.report.ok()) return false;
    return true;
  }
  void add(std::string name, ResidualReport r) { sections.push_back({std::move(name), std::move(r)}); }
};

Json residual_json(const core::ResidualEntry& e) {
  auto one_based = [](const core::Tuple& t) {
    Json a = Json::array();
    for (int i : t) a.push_back(i + 1);
    return a;
  };
  Json j;
  j["identity"] = e.identity;
  j["arity"] = e.arity;
  j["first"] = one_based(e.first);
  j["second"] = one_based(e.second);
  j["component"] = e.component + 1;
  j["value"] = e.value.str();
  return j;
}

Json report_json(const Outcome& o) {
  Json j;
  j["format_version"] = 1;
  j["command"] = o.command;
  if (o.kind) j["kind"] = *o.kind;
  if (o.arity) j["max_arity"] = *o.arity;
  if (!o.info.empty()) j["info"] = o.info;
  Json secs = Json::array();
  for (const auto& s : o.sections) {
    Json sj;
    sj["name"] = s.name;
    sj["ok"] = s.report.ok();
    sj["evaluations"] = s.report.evaluations;
    Json res = Json::array();
    for (const auto& e : s.report.entries) res.push_back(residual_json(e));
    sj["residuals"] = res;
    secs.push_back(sj);
  }
  j["sections"] = secs;
  j["ok"] = o.ok();
  return j;
}

void print_text(const Outcome& o, std::ostream& out) {
  for (const auto& l : o.lines) out << l << "\n";
  for (const auto& s : o.sections) {
    if (s.report.ok()) {
      out << s.name << ": PASS (" << s.report.evaluations << " evaluations)\n";
      continue;
    }
    out << s.name << ": FAIL (" << s.report.entries.size() << " nonzero residuals)\n";
    std::istringstream lines(s.report.text());
    for (std::string l; std::getline(lines, l);) out << "  " << l << "\n";
  }
  out << "result: " << (o.ok() ? "PASS" : "FAIL") << "\n";
}

/// Resolves --max-arity against the global limit and the structure's own cap.
int resolve_arity(std::optional<int> requested, std::optional<int> structure_cap) {
  int limit = arity_limit();
  if (requested) {
    if (*requested < 1) throw UsageError("--max-arity must be positive");
    if (*requested > limit)
      throw linfty::CapError("cap exceeded: --max-arity " + std::to_string(*requested) +
                                 " is above POSTLIE_MAX_ARITY = " + std::to_string(limit),
                             *requested);
    if (structure_cap && *requested > *structure_cap)
      throw linfty::CapError("cap exceeded: --max-arity " + std::to_string(*requested) +
                                 " is above the structure cap " + std::to_string(*structure_cap),
                             *requested);
    return *requested;
  }
  int a = std::min(default_arity, limit);
  if (structure_cap) a = std::min(a, *structure_cap);
  return a;
}

template <class T>
const T& expect(const StructureFile& f, Kind kind, const std::string& command) {
  if (f.kind != kind)
    throw UsageError(command + " expects a structure of kind " + kind_name(kind) + ", got " + kind_name(f.kind));
  return std::get<T>(f.content);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream o(path, std::ios::binary);
  if (!o) throw UsageError("cannot write " + path);
  o << text;
}

ResidualReport difference(const std::string& identity, const linfty::GradedFamily& a, const linfty::GradedFamily& b) {
  ResidualReport r;
  auto diff = a - b;
  for (const auto& [k, comp] : diff.components())
    for (const auto& [key, v] : comp.table()) r.record(identity, {k.first, k.second}, key.first, key.second, v);
  for (const auto& [k, comp] : a.components()) r.evaluations += comp.table().size();
  return r;
}

struct Options {
  std::string file, pair, equiv, output, construction, report;
  std::optional<int> max_arity, degree, weight;
  bool verify = false, table = false;
  std::string mode = "free";
};

Outcome cmd_check(const Options& o) {
  auto f = load_structure(o.file);
  const auto& d = expect<classical::PostLieData>(f, Kind::postlie, "check");
  Outcome r{"check", kind_name(f.kind)};
  r.add("post-lie axioms", classical::check_postlie(d));
  return r;
}

Outcome cmd_cohomology(const Options& o) {
  auto f = load_structure(o.file);
  const auto& d = expect<classical::PostLieData>(f, Kind::postlie, "cohomology");
  Outcome r{"cohomology", kind_name(f.kind)};
  int n = *o.degree;
  if (n < 1) throw UsageError("--degree must be at least 1");
  if (n > arity_limit())
    throw linfty::CapError("cap exceeded: --degree " + std::to_string(n) + " is above POSTLIE_MAX_ARITY = " +
                               std::to_string(arity_limit()),
                           n);
  auto axioms = classical::check_postlie(d);
  if (!axioms.ok()) {
    r.add("post-lie axioms", axioms);
    return r;
  }
  auto c = cohomology::cohomology_group(d, n);
  r.lines.push_back(c.text());
  r.info["degree"] = c.degree;
  r.info["dim_cocycles"] = c.dim_cocycles;
  r.info["dim_coboundaries"] = c.dim_coboundaries;
  r.info["dim_H"] = c.dim_H;
  return r;
}

cohomology::DeformationPair load_pair(const std::string& path, const core::SpacePtr& space) {
  auto f = load_structure(path);
  const auto& d = expect<DeformationFile>(f, Kind::deformation, "deform");
  if (!core::same_space(d.space, space)) throw UsageError("deformation basis differs from the structure basis");
  return d.pair;
}

Outcome cmd_deform(const Options& o) {
  auto f = load_structure(o.file);
  const auto& d = expect<classical::PostLieData>(f, Kind::postlie, "deform");
  Outcome r{"deform", kind_name(f.kind)};
  auto axioms = classical::check_postlie(d);
  if (!axioms.ok()) {
    r.add("post-lie axioms", axioms);
    return r;
  }
  auto pair = load_pair(o.pair, d.space());
  auto c = cohomology::check_deformation(d, pair);
  r.add("cocycle", c.cocycle);
  r.add("deformed post-lie axioms", c.dual);
  if (o.equiv.empty()) return r;
  auto other = load_pair(o.equiv, d.space());
  auto eq = cohomology::find_equivalence(d, pair, other);
  if (!eq) {
    r.lines.push_back("equivalence: none, the classes differ");
    r.info["equivalent"] = false;
    r.failed = true;
    return r;
  }
  r.info["equivalent"] = true;
  Json fj = Json::object();
  for (const auto& [rc, v] : eq->entries()) fj[core::format_tuple({static_cast<int>(rc.first), static_cast<int>(rc.second)})] = v.str();
  r.info["f"] = fj;
  auto e = cohomology::check_equivalence(d, pair, other, *eq);
  r.add("equivalent pair cocycle", e.cocycle_second);
  r.add("pair difference", e.difference);
  r.add("dual isomorphism", e.dual_isomorphism);
  return r;
}

Outcome cmd_free(const Options& o) {
  Outcome r{"free-postlie"};
  int w = *o.weight;
  if (w < 1) throw UsageError("--weight must be positive");
  if (w > arity_limit())
    throw linfty::CapError("cap exceeded: --weight " + std::to_string(w) + " is above POSTLIE_MAX_ARITY = " +
                               std::to_string(arity_limit()),
                           w);
  if (o.mode != "free" && o.mode != "ihara") throw UsageError("--mode must be free or ihara");
  std::string counts;
  Json cj = Json::array();
  for (int n = 1; n <= w; ++n) {
    auto c = free::enumerate_trees(n).size();
    counts += (n > 1 ? " " : "") + std::to_string(c);
    cj.push_back(c);
  }
  r.lines.push_back(counts);
  r.info["mode"] = o.mode;
  r.info["weight"] = w;
  r.info["tree_counts"] = cj;
  if (o.table) {
    std::string t = free::grafting_table(w);
    std::istringstream in(t);
    for (std::string l; std::getline(in, l);) r.lines.push_back(l);
    r.info["grafting_table"] = t;
  }
  if (o.verify) {
    auto mode = o.mode == "ihara" ? free::FreeMode::ihara : free::FreeMode::free;
    try {
      r.add("free post-lie axioms", free::verify_axioms(mode, w));
    } catch (const std::invalid_argument& e) {
      throw linfty::CapError(std::string("cap exceeded: ") + e.what(), w);
    }
  }
  return r;
}

const GradedFile& graded_with(const StructureFile& f, bool need_l, const std::string& command) {
  const auto& g = expect<GradedFile>(f, Kind::graded, command);
  if (need_l && !g.l) throw UsageError(command + " needs an \"l\" map table");
  if (!need_l && !g.m) throw UsageError(command + " needs an \"M\" map table");
  return g;
}

Outcome cmd_linfty(const Options& o) {
  auto f = load_structure(o.file);
  auto l = *graded_with(f, true, "linfty-check").l;
  Outcome r{"linfty-check", kind_name(f.kind), resolve_arity(o.max_arity, l.cap())};
  r.add("l-infinity", linfty::check_linfty(l, *r.arity));
  return r;
}

Outcome cmd_postlie_infinity(const Options& o) {
  auto f = load_structure(o.file);
  auto m = *graded_with(f, false, "postlie-infinity-check").m;
  Outcome r{"postlie-infinity-check", kind_name(f.kind), resolve_arity(o.max_arity, m.cap())};
  r.add("post-lie-infinity", linfty::check_postlie_infinity(m, *r.arity));
  if (!r.ok()) return r;
  auto sub = linfty::subadjacent_linfty(m);
  r.add("sub-adjacent l-infinity", linfty::check_linfty(sub, *r.arity));
  return r;
}

Outcome cmd_open_closed(const Options& o) {
  auto f = load_structure(o.file);
  auto s = expect<linfty::OpenClosedStructure>(f, Kind::open_closed, "open-closed-check");
  Outcome r{"open-closed-check", kind_name(f.kind), resolve_arity(o.max_arity, s.cap())};
  r.add("open-closed", linfty::check_open_closed(s, *r.arity));
  return r;
}

bool is_action(const linfty::OpenClosedStructure& s) {
  for (const auto& [k, comp] : s.r().components())
    if (k.second == 0 && !comp.is_zero()) return false;
  return true;
}

Outcome cmd_rb(const Options& o) {
  auto f = load_structure(o.file);
  auto b = expect<RBBundle>(f, Kind::rb_bundle, "rb-check");
  Outcome r{"rb-check", kind_name(f.kind), resolve_arity(o.max_arity, linfty::min_cap(b.s.cap(), b.theta.cap()))};
  int n = *r.arity;
  r.add("open-closed", linfty::check_open_closed(b.s, n));
  if (!r.ok()) return r;
  r.add("rota-baxter", rotabaxter::check_homotopy_rb(b.theta, b.s, n));
  if (!r.ok()) return r;
  auto desc = rotabaxter::descendant_linfty(b.theta, b.s);
  r.add("descendant l-infinity", desc.linfty);
  r.add("l-infinity morphism", desc.morphism);
  if (!is_action(b.s)) {
    r.lines.push_back("induced post-lie-infinity: skipped, some R_{p,0} is nonzero");
    return r;
  }
  auto m = rotabaxter::induced_postlie_infinity(b.theta, b.s);
  r.add("induced post-lie-infinity", linfty::check_postlie_infinity(m, n));
  if (!r.ok()) return r;
  auto sub = linfty::subadjacent_maps(m.maps(), n);
  r.add("sub-adjacent vs descendant", difference("sub-adjacent vs descendant", sub, desc.alpha.ops()));
  return r;
}

Outcome cmd_construct(const Options& o) {
  auto f = load_structure(o.file);
  const std::string& what = o.construction;
  Outcome r{"construct", kind_name(f.kind)};
  r.info["construction"] = what;
  std::optional<linfty::PostLieInftyStructure> m;
  if (what == "rb-induced") {
    auto b = expect<RBBundle>(f, Kind::rb_bundle, "construct rb-induced");
    r.arity = resolve_arity(o.max_arity, linfty::min_cap(b.s.cap(), b.theta.cap()));
    if (!is_action(b.s)) throw UsageError("construct rb-induced needs R_{p,0} = 0 for all p");
    r.add("open-closed", linfty::check_open_closed(b.s, *r.arity));
    if (!r.ok()) return r;
    r.add("rota-baxter", rotabaxter::check_homotopy_rb(b.theta, b.s, *r.arity));
    if (!r.ok()) return r;
    m = rotabaxter::induced_postlie_infinity(b.theta, b.s);
  } else {
    const auto& d = expect<linfty::ActionData>(f, Kind::action_data, "construct " + what);
    std::optional<linfty::ActionFlavor> need;
    if (what == "poisson") need = linfty::ActionFlavor::poisson;
    else if (what == "algebroid") need = linfty::ActionFlavor::algebroid;
    else if (what != "dgca-action") throw UsageError("unknown construction '" + what + "'");
    if (need && d.flavor != *need) throw UsageError("construct " + what + " needs flavor " + what);
    r.arity = resolve_arity(o.max_arity, linfty::min_cap(d.lie.cap(), d.rho.cap()));
    r.add("action data", linfty::check_action_data(d, *r.arity));
    if (!r.ok()) return r;
    m = linfty::dgca_action_postlie(d, *r.arity);
  }
  r.add("constructed post-lie-infinity", linfty::check_postlie_infinity(*m, *r.arity));
  GradedFile g{m->space(), r.arity, std::nullopt, linfty::PostLieInftyStructure(m->maps().truncated(*r.arity))};
  write_file(o.output, serialize(StructureFile{1, Kind::graded, g}));
  return r;
}

}  // namespace

int arity_limit() {
  const char* v = std::getenv("POSTLIE_MAX_ARITY");
  if (!v || !*v) return 5;
  std::string s(v);
  if (s.find_first_not_of("0123456789") != std::string::npos || s.size() > 6 || std::stoi(s) < 1)
    throw ParseError("POSTLIE_MAX_ARITY", "expected a positive integer, got '" + s + "'");
  return std::stoi(s);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of post-Lie, L-infinity and Rota-Baxter structures", "postlie"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--report", o.report, "Write a JSON report to FILE");

  auto arity = [&](CLI::App* c) { c->add_option("--max-arity", o.max_arity, "Highest arity checked"); };
  auto file = [&](CLI::App* c) { c->add_option("file", o.file, "Structure file")->required(); };

  auto* check = app.add_subcommand("check", "Post-Lie axioms of a postlie structure");
  file(check);
  auto* coh = app.add_subcommand("cohomology", "Cohomology of a post-Lie algebra in one degree");
  file(coh);
  coh->add_option("--degree", o.degree, "Cochain degree n >= 1")->required();
  auto* deform = app.add_subcommand("deform", "Infinitesimal deformation by a 2-cochain pair");
  file(deform);
  deform->add_option("--pair", o.pair, "Deformation file")->required();
  deform->add_option("--equiv", o.equiv, "Second deformation file to compare with");
  auto* fr = app.add_subcommand("free-postlie", "Planar rooted trees and the free post-Lie algebra");
  fr->add_option("--weight", o.weight, "Weight cap")->required();
  auto* verify = fr->add_flag("--verify", o.verify, "Check the post-Lie axioms on the Lyndon basis");
  fr->add_flag("--table", o.table, "Print the grafting table")->excludes(verify);
  fr->add_option("--mode", o.mode, "free or ihara");
  auto* lc = app.add_subcommand("linfty-check", "Generalized Jacobi identities of l");
  file(lc);
  arity(lc);
  auto* pc = app.add_subcommand("postlie-infinity-check", "Maurer-Cartan identity of M");
  file(pc);
  arity(pc);
  auto* oc = app.add_subcommand("open-closed-check", "Identities of an open-closed structure");
  file(oc);
  arity(oc);
  auto* rb = app.add_subcommand("rb-check", "Homotopy Rota-Baxter identity with descendant and induced checks");
  file(rb);
  arity(rb);
  auto* cons = app.add_subcommand("construct", "Build a post-Lie-infinity structure");
  cons->add_option("construction", o.construction, "dgca-action, poisson, algebroid or rb-induced")
      ->required()
      ->check(CLI::IsMember({"dgca-action", "poisson", "algebroid", "rb-induced"}));
  file(cons);
  cons->add_option("-o,--output", o.output, "Output structure file")->required();
  arity(cons);
  for (auto* c : app.get_subcommands({})) c->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    Outcome r;
    if (check->parsed()) r = cmd_check(o);
    else if (coh->parsed()) r = cmd_cohomology(o);
    else if (deform->parsed()) r = cmd_deform(o);
    else if (fr->parsed()) r = cmd_free(o);
    else if (lc->parsed()) r = cmd_linfty(o);
    else if (pc->parsed()) r = cmd_postlie_infinity(o);
    else if (oc->parsed()) r = cmd_open_closed(o);
    else if (rb->parsed()) r = cmd_rb(o);
    else r = cmd_construct(o);
    print_text(r, out);
    if (!o.report.empty()) write_file(o.report, report_json(r).dump(2) + "\n");
    return r.ok() ? exit_ok : exit_residual;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const linfty::CapError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const core::InvalidStructure& e) {
    err << "error: " << e.what() << "\n" << e.report.text();
    return exit_residual;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  }
  return exit_usage;
}

}  // namespace postlie::cli
