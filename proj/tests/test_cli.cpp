#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "postlie/cli/cli.hpp"
#include "postlie/cli/structure_file.hpp"
#include "support/classical_fixtures.hpp"
#include "support/graded_fixtures.hpp"

namespace fs = std::filesystem;
using namespace postlie::cli;
using postlie::classical::PostLieData;

namespace {

const fs::path data_dir = fs::path(POSTLIE_TEST_DIR) / "data";
const fs::path golden_dir = fs::path(POSTLIE_TEST_DIR) / "golden";

std::string read(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / "postlie_test_cli";
  fs::create_directories(dir);
  return dir / name;
}

struct Run {
  int code;
  std::string out, err;
};

Run run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> split_args(const std::string& s) {
  std::vector<std::string> a;
  std::istringstream in(s);
  for (std::string w; in >> w;) {
    if (w[0] == '@') w = (data_dir / w.substr(2)).string();
    a.push_back(w);
  }
  return a;
}

struct ArityEnv {
  explicit ArityEnv(const char* v) { setenv("POSTLIE_MAX_ARITY", v, 1); }
  ~ArityEnv() { unsetenv("POSTLIE_MAX_ARITY"); }
};

std::string minimal(const std::string& body) {
  return std::string(R"({"format_version": 1, "kind": "postlie", )") + body + "}";
}

std::string error_field(const std::string& text) {
  try {
    parse_structure_text(text);
  } catch (const ParseError& e) {
    return e.field;
  }
  return "<no error>";
}

}  // namespace

TEST_CASE("minimal and nonabelian files") {
  auto zero = parse_structure_text(minimal(R"("dimension": 1)"));
  CHECK(zero.kind == Kind::postlie);
  CHECK(std::get<PostLieData>(zero.content) == fixtures::zero(1));

  auto f = parse_structure_text(minimal(R"("dimension": 2, "maps": {"lie": {"[1,2]": {"e2": "1"}}, "triangle": {}})"));
  const auto& d = std::get<PostLieData>(f.content);
  CHECK(d == fixtures::nonabelian());
  CHECK(postlie::classical::check_postlie(d).ok());
  CHECK(std::get<PostLieData>(parse_structure_text(serialize(f)).content) == d);
}

TEST_CASE("antisymmetric and graded-symmetric keys land on one canonical entry") {
  auto f = parse_structure_text(minimal(R"("dimension": 2, "maps": {"lie": {"[2,1]": {"e2": "-1"}}})"));
  CHECK(std::get<PostLieData>(f.content) == fixtures::nonabelian());
  CHECK(serialize(f).find("\"[1,2]\"") != std::string::npos);
  CHECK(error_field(minimal(R"("dimension": 2, "maps": {"lie": {"[1,2]": {"e2": "1"}, "[2,1]": {"e2": "-1"}}})")) ==
        "maps.lie.[2,1]");
}

TEST_CASE("round trip of every fixture") {
  int n = 0;
  for (const auto& entry : fs::directory_iterator(data_dir)) {
    if (entry.path().extension() != ".json") continue;
    INFO(entry.path().filename().string());
    auto first = load_structure(entry.path().string());
    std::string once = serialize(first);
    auto second = parse_structure_text(once);
    CHECK(second.kind == first.kind);
    CHECK(serialize(second) == once);
    if (first.kind == Kind::postlie)
      CHECK(std::get<PostLieData>(second.content) == std::get<PostLieData>(first.content));
    if (first.kind == Kind::graded) {
      const auto& a = std::get<GradedFile>(first.content);
      const auto& b = std::get<GradedFile>(second.content);
      CHECK(a.l.has_value() == b.l.has_value());
      if (a.l) CHECK(*a.l == *b.l);
      if (a.m) CHECK(a.m->maps() == b.m->maps());
    }
    if (first.kind == Kind::rb_bundle) {
      const auto& a = std::get<RBBundle>(first.content);
      const auto& b = std::get<RBBundle>(second.content);
      CHECK(a.theta.theta() == b.theta.theta());
      CHECK(a.s.r() == b.s.r());
    }
    ++n;
  }
  CHECK(n >= 20);
}

TEST_CASE("action data files reproduce the library fixtures") {
  auto f = load_structure((data_dir / "action_cubic_algebroid.json").string());
  const auto& d = std::get<postlie::linfty::ActionData>(f.content);
  auto ref = graded_fixtures::cubic_algebroid();
  CHECK(d.flavor == ref.flavor);
  CHECK(d.rho == ref.rho);
  CHECK(d.lie == ref.lie);
  auto p = load_structure((data_dir / "action_poisson.json").string());
  CHECK(std::get<postlie::linfty::ActionData>(p.content).rho == graded_fixtures::zero_bracket_poisson().rho);
  auto g = load_structure((data_dir / "action_dual_numbers.json").string());
  CHECK(std::get<postlie::linfty::ActionData>(g.content).rho == graded_fixtures::dual_number_action().rho);
}

TEST_CASE("schema violations name the field") {
  CHECK(error_field(minimal(R"("basis": ["x", "x"])")) == "basis[1]");
  CHECK(error_field(minimal(R"("dimension": 2, "maps": {"lie": {"[1,2]": {"e2": "1/0"}}})")) == "maps.lie.[1,2].e2");
  CHECK(error_field(minimal(R"("dimension": 2, "maps": {"lie": {"[1,2]": {"e2": "1.5"}}})")) == "maps.lie.[1,2].e2");
  CHECK(error_field(minimal(R"("dimension": 2, "maps": {"lie": {"[1,2]": {"e2": "01"}}})")) == "maps.lie.[1,2].e2");
  CHECK(error_field(minimal(R"("dimension": 2, "maps": {"lie": {"[1,2]": {"e2": 1}}})")) == "maps.lie.[1,2].e2");
  CHECK(error_field(minimal(R"("dimension": 2, "maps": {"lie": {"[1,3]": {"e2": "1"}}})")) == "maps.lie.[1,3]");
  CHECK(error_field(minimal(R"("dimension": 2, "maps": {"lie": {"[0,1]": {"e2": "1"}}})")) == "maps.lie.[0,1]");
  CHECK(error_field(minimal(R"("dimension": 2, "maps": {"lie": {"[1,2]": {"e3": "1"}}})")) == "maps.lie.[1,2].e3");
  CHECK(error_field(minimal(R"("dimension": 2, "maps": {"lie": {"[1]|[2]": {"e2": "1"}}})")) == "maps.lie.[1]|[2]");
  CHECK(error_field(minimal(R"("dimension": 2, "maps": {"triangle": {"[1,2]": {"e2": "1"}}})")) == "maps.triangle.[1,2]");
  CHECK(error_field(minimal(R"("dimension": 2, "maps": {"lie": {"[1,1]": {"e2": "1"}}})")) == "maps.lie.[1,1]");
  CHECK(error_field(minimal(R"("dimension": 2, "maps": {"lie": {"[1,2,1]": {"e2": "1"}}})")) == "maps.lie.[1,2,1]");
  CHECK(error_field(minimal(R"("dimension": 2, "maps": {"bracket": {}})")) == "maps.bracket");
  CHECK(error_field(minimal(R"("dimension": 2, "colour": "red")")) == "colour");
  CHECK(error_field(minimal(R"("dimension": 2, "degrees": [0, 0])")) == "degrees");
  CHECK(error_field(minimal(R"("dimension": 0)")) == "dimension");
  CHECK(error_field(minimal(R"("dimension": 2, "basis": ["a", "b"])")) == "");
  CHECK(error_field(R"({"format_version": 2, "kind": "postlie", "dimension": 1})") == "format_version");
  CHECK(error_field(R"({"format_version": 1, "kind": "lie", "dimension": 1})") == "kind");
  CHECK(error_field(R"({"format_version": 1, "dimension": 1})") == "kind");
  CHECK(error_field(R"({"format_version": 1, "kind": "graded", "basis": ["x"]})") == "degrees");
  CHECK(error_field(R"({"format_version": 1, "kind": "graded", "basis": ["x"], "degrees": [-1],
                        "maps": {"l": {"[1]": {"x": "1"}}}})") == "maps.l.[1]");
  CHECK(error_field(R"({"format_version": 1, "kind": "graded", "basis": ["x"], "degrees": [0], "cap": 2,
                        "maps": {"l": {"[1,1,1]": {"x": "1"}}}})") == "maps.l.[1,1,1]");
  CHECK(error_field(R"({"format_version": 1, "kind": "graded", "basis": ["x"], "degrees": [0],
                        "maps": {"M": {"[1]|[]": {"x": "1"}}}})") == "maps.M.[1]|[]");
  CHECK(error_field("{\"format_version\": 1,") == "");
  CHECK_THROWS_AS(load_structure((data_dir / "missing.json").string()), ParseError);
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("-6/4", "f") == postlie::core::Scalar(-3, 2));
  CHECK(parse_rational("0", "f").is_zero());
  for (const char* bad : {"", "+1", "1/", "/2", "1/-2", "1/0", "1/02", "--1", " 1", "1e3", "0x10"})
    CHECK_THROWS_AS(parse_rational(bad, "f"), ParseError);
}

TEST_CASE("golden reports are byte-stable") {
  std::ifstream cases(golden_dir / "cases.txt");
  int n = 0;
  for (std::string line; std::getline(cases, line);) {
    if (line.empty() || line[0] == '#') continue;
    auto bar = line.find('|');
    std::string name = line.substr(0, line.find(' '));
    INFO(name);
    auto args = split_args(line.substr(bar + 1));
    auto report = scratch(name + ".report.json");
    args.insert(args.begin(), {"--report", report.string()});
    auto r = run_cli(args);
    CHECK(r.out == read(golden_dir / (name + ".txt")));
    CHECK(read(report) == read(golden_dir / (name + ".report.json")));
    bool pass = r.out.find("result: PASS\n") != std::string::npos;
    CHECK(r.code == (pass ? exit_ok : exit_residual));
    auto again = run_cli(args);
    CHECK(again.out == r.out);
    CHECK(again.code == r.code);
    ++n;
  }
  CHECK(n >= 25);
}

TEST_CASE("spec examples through the command line") {
  CHECK(run_cli({"check", (data_dir / "nonabelian.json").string()}).code == exit_ok);
  auto f = run_cli({"free-postlie", "--weight", "5", "--verify"});
  CHECK(f.code == exit_ok);
  CHECK(f.out.rfind("1 1 2 5 14\n", 0) == 0);
  auto c = run_cli({"cohomology", (data_dir / "zero_1d.json").string(), "--degree", "1"});
  CHECK(c.code == exit_ok);
  CHECK(c.out.find("dim H^1 = 1") != std::string::npos);
}

TEST_CASE("usage, parse and cap errors exit with 2") {
  auto file = (data_dir / "linfty_nonabelian.json").string();
  CHECK(run_cli({}).code == exit_usage);
  CHECK(run_cli({"frobnicate"}).code == exit_usage);
  CHECK(run_cli({"check"}).code == exit_usage);
  CHECK(run_cli({"check", (data_dir / "missing.json").string()}).code == exit_usage);
  CHECK(run_cli({"check", file}).code == exit_usage);
  CHECK(run_cli({"linfty-check", file, "--max-arity", "0"}).code == exit_usage);
  CHECK(run_cli({"free-postlie", "--weight", "3", "--verify", "--table"}).code == exit_usage);
  CHECK(run_cli({"free-postlie", "--weight", "3", "--mode", "tree"}).code == exit_usage);
  CHECK(run_cli({"construct", "tensor", file, "-o", scratch("x.json").string()}).code == exit_usage);

  auto cap = run_cli({"linfty-check", file, "--max-arity", "6"});
  CHECK(cap.code == exit_usage);
  CHECK(cap.err.find("cap exceeded") != std::string::npos);
  CHECK(run_cli({"free-postlie", "--weight", "6"}).code == exit_usage);
  CHECK(run_cli({"cohomology", (data_dir / "zero_1d.json").string(), "--degree", "6"}).code == exit_usage);
  auto truncated = (data_dir / "linfty_differential.json").string();
  CHECK(run_cli({"linfty-check", truncated, "--max-arity", "4"}).code == exit_usage);
  CHECK(run_cli({"linfty-check", truncated, "--max-arity", "3"}).code == exit_ok);
  {
    ArityEnv env("3");
    CHECK(run_cli({"linfty-check", file, "--max-arity", "4"}).code == exit_usage);
    auto ok = run_cli({"--report", scratch("env.json").string(), "linfty-check", file});
    CHECK(ok.code == exit_ok);
    CHECK(read(scratch("env.json")).find("\"max_arity\": 3") != std::string::npos);
  }
  {
    ArityEnv env("five");
    CHECK(run_cli({"linfty-check", file}).code == exit_usage);
  }
  {
    ArityEnv env("6");
    CHECK(run_cli({"free-postlie", "--weight", "6"}).code == exit_ok);
    CHECK(run_cli({"free-postlie", "--weight", "6", "--verify"}).code == exit_usage);
  }
}

TEST_CASE("construct writes a verified post-Lie-infinity file") {
  struct Case {
    const char* what;
    const char* input;
  };
  for (const auto& c : {Case{"dgca-action", "action_dual_numbers.json"}, Case{"poisson", "action_poisson.json"},
                        Case{"algebroid", "action_cubic_algebroid.json"}, Case{"rb-induced", "rb_identity.json"}}) {
    INFO(c.what);
    auto out = scratch(std::string(c.what) + ".json");
    auto r = run_cli({"construct", c.what, (data_dir / c.input).string(), "-o", out.string(), "--max-arity", "3"});
    CHECK(r.code == exit_ok);
    std::string first = read(out);
    auto f = parse_structure_text(first);
    CHECK(f.kind == Kind::graded);
    CHECK(serialize(f) == first);
    CHECK(run_cli({"postlie-infinity-check", out.string(), "--max-arity", "3"}).code == exit_ok);
    CHECK(run_cli({"postlie-infinity-check", out.string(), "--max-arity", "4"}).code == exit_usage);
    run_cli({"construct", c.what, (data_dir / c.input).string(), "-o", out.string(), "--max-arity", "3"});
    CHECK(read(out) == first);
  }
  auto out = scratch("refused.json").string();
  CHECK(run_cli({"construct", "poisson", (data_dir / "action_dual_numbers.json").string(), "-o", out}).code ==
        exit_usage);
  CHECK(run_cli({"construct", "rb-induced", (data_dir / "rb_broken.json").string(), "-o", out}).code ==
        exit_residual);
}

TEST_CASE("invalid action data is reported, not constructed") {
  auto text = read(data_dir / "action_dual_numbers.json");
  auto j = Json::parse(text);
  j["maps"]["rho"]["[1]|[1]"] = Json{{"a", "1"}};
  auto in = scratch("bad_action.json");
  std::ofstream(in) << j.dump(2);
  auto r = run_cli({"construct", "dgca-action", in.string(), "-o", scratch("bad_out.json").string()});
  CHECK(r.code == exit_residual);
  CHECK(r.out.find("action data: FAIL") != std::string::npos);
}
