#include "cli.hpp"
#include "doctest.h"
#include "support.hpp"

#include <filesystem>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include <unistd.h>

namespace fs = std::filesystem;
using hfgrade::cli::ExitCode;
using hfgrade::cli::Json;

namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Outcome o;
  o.code = hfgrade::cli::run(args, out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

Json run_json(std::vector<std::string> args) {
  args.insert(args.begin(), "--json");
  const auto o = run(args);
  REQUIRE(o.code == 0);
  return Json::parse(o.out);
}

class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = fs::temp_directory_path() / ("hfgrade_cli_test_" + std::to_string(::getpid()) + "_" +
                                         std::to_string(counter++));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  std::string write(const std::string& name, const std::string& text) const {
    const auto p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

void collect_numbers(const Json& j, std::set<std::string>& out) {
  if (j.is_object() || j.is_array()) {
    for (const auto& v : j) collect_numbers(v, out);
  } else if (j.is_number_integer()) {
    out.insert(j.dump());
  } else if (j.is_string()) {
    const std::string s = j.get<std::string>();
    static const std::regex number("^-?[0-9]+(/[0-9]+)?$");
    if (std::regex_match(s, number)) out.insert(s);
  }
}

}  // namespace

TEST_CASE("cli: exit codes") {
  TempDir tmp;
  const auto sphere = tmp.write("s3.hd", fixtures::kSphere);
  CHECK(run({"validate", sphere}).code == static_cast<int>(ExitCode::kOk));
  CHECK(run({"validate", tmp.file("missing.hd")}).code == static_cast<int>(ExitCode::kInputError));
  CHECK(run({"frobnicate"}).code == static_cast<int>(ExitCode::kUsageError));
  CHECK(run({"frobnicate"}).err.find("unknown command 'frobnicate'") != std::string::npos);
  CHECK(run({}).code == static_cast<int>(ExitCode::kUsageError));
  CHECK(run({"grade"}).code == static_cast<int>(ExitCode::kUsageError));
  CHECK(run({"domain", sphere, "x0", "nope"}).code == static_cast<int>(ExitCode::kInputError));
  CHECK(run({"atlas", "torus", "4", "2"}).code == static_cast<int>(ExitCode::kInputError));
}

TEST_CASE("cli: parse errors report file, line and column") {
  TempDir tmp;
  std::string bad = fixtures::kSphere;
  bad.replace(bad.find("x0+"), 3, "x0?");
  const auto path = tmp.write("bad.hd", bad);
  const auto o = run({"validate", path});
  CHECK(o.code == static_cast<int>(ExitCode::kInputError));
  CHECK(o.err.find(path + ": line 3, column 11") != std::string::npos);
}

TEST_CASE("cli: grade on L(3,1)") {
  TempDir tmp;
  const auto j = run_json({"grade", tmp.write("l31.hd", fixtures::kLens31)});
  CHECK(j["status"] == 0);
  CHECK(j["diagram"]["H1"] == "Z/3");
  REQUIRE(j["payload"]["classes"].size() == 3);
  for (const auto& c : j["payload"]["classes"]) {
    CHECK(c["size"] == 1);
    CHECK(c["divisibility"] == 0);
  }
  for (const auto& r : j["payload"]["rows"]) CHECK(r["offset"] == 0);
}

TEST_CASE("cli: domain and audit on the S1xS2 bigon") {
  TempDir tmp;
  const auto path = tmp.file("s1s2.hd");
  REQUIRE(run({"atlas", "s1s2", "-o", path}).code == 0);
  const auto j = run_json({"domain", path, "x1", "x0", "--positive"});
  const auto& p = j["payload"];
  CHECK(p["connected"] == true);
  CHECK(p["relative_grading"] == 1);
  CHECK(p["positive"]["euler_measure"] == "1/2");
  CHECK(p["positive"]["n_x"] == "1/4");
  CHECK(p["positive"]["n_y"] == "1/4");
  CHECK(p["positive"]["maslov_index"] == 1);
  CHECK(run_json({"domain", path, "x0", "x1"})["payload"]["relative_grading"] == -1);

  const auto audit = run_json({"audit", path, "x1", "x0"})["payload"]["audit"];
  CHECK(audit["layer_sum"] == "1");
  CHECK(audit["single_layer_case"] == true);
}

TEST_CASE("cli: generators in different classes") {
  TempDir tmp;
  const auto path = tmp.write("l31.hd", fixtures::kLens31);
  const auto o = run({"--json", "domain", path, "x0", "x1"});
  CHECK(o.code == 0);
  const auto j = Json::parse(o.out);
  CHECK(j["payload"]["connected"] == false);
  CHECK(j["payload"]["result"] == "no connecting class");
}

TEST_CASE("cli: shift arithmetic") {
  const auto j = run_json({"shift", "--c1sq", "0", "--chi", "2", "--sigma", "0"});
  CHECK(j["payload"]["theta"] == "-4");
  CHECK(j["payload"]["shift"] == "-1");
  CHECK(j["diagram"].is_null());
  CHECK(run({"shift", "--c1sq", "x", "--chi", "2", "--sigma", "0"}).code != 0);
}

TEST_CASE("cli: atlas and stabilize write loadable files") {
  TempDir tmp;
  const auto ob = tmp.file("ob.hd");
  REQUIRE(run({"atlas", "openbook-annulus", "3", "-o", ob}).code == 0);
  CHECK(hfgrade::load_diagram(slurp(ob)).vertex_count() == 3);
  const auto stab = tmp.file("stab.hd");
  const auto j = run_json({"stabilize", ob, "-o", stab});
  CHECK(j["payload"]["result"]["genus"] == 2);
  const auto d = hfgrade::load_diagram(slurp(stab));
  CHECK(d.genus() == 2);
  CHECK(d.vertex_count() == 4);
  // without -o the text mode prints the diagram itself
  const auto raw = run({"atlas", "torus", "5", "2"});
  CHECK(raw.code == 0);
  CHECK(hfgrade::load_diagram(raw.out).vertex_count() == 5);
}

TEST_CASE("cli: json output is a fixed point and deterministic") {
  TempDir tmp;
  const auto path = tmp.write("double.hd", fixtures::kDoubleS1S2);
  for (const auto& cmd : std::vector<std::vector<std::string>>{{"info", path},
                                                               {"generators", path},
                                                               {"spinc", path},
                                                               {"grade", path},
                                                               {"domain", path, "x0,y0", "x1,y1", "--positive"},
                                                               {"audit", path, "x0,y0", "x1,y1"}}) {
    std::vector<std::string> args{"--json"};
    args.insert(args.end(), cmd.begin(), cmd.end());
    const auto first = run(args), second = run(args);
    CAPTURE(cmd[0]);
    REQUIRE(first.code == 0);
    CHECK(first.out == second.out);
    const Json j = Json::parse(first.out);
    CHECK(Json::parse(j.dump()) == j);
    CHECK(j.dump(2) + "\n" == first.out);
  }
}

TEST_CASE("cli: every number in text mode appears in the json report") {
  TempDir tmp;
  const auto path = tmp.write("winding.hd", fixtures::kWinding);
  for (const auto& cmd : std::vector<std::vector<std::string>>{
           {"info", path}, {"grade", path}, {"domain", path, "x0", "x3"}, {"audit", path, "x1", "x2"}}) {
    CAPTURE(cmd[0]);
    const auto text = run(cmd);
    REQUIRE(text.code == 0);
    std::vector<std::string> args{"--json"};
    args.insert(args.end(), cmd.begin(), cmd.end());
    std::set<std::string> numbers;
    collect_numbers(Json::parse(run(args).out), numbers);
    std::istringstream lines(text.out);
    std::string line;
    static const std::regex value(":\\s+(-?[0-9]+(/[0-9]+)?)$");
    while (std::getline(lines, line)) {
      std::smatch m;
      if (std::regex_search(line, m, value)) CHECK_MESSAGE(numbers.count(m[1]) == 1, line);
    }
  }
}

TEST_CASE("cli: selftest") {
  const auto j = run_json({"--seed", "7", "selftest", "--trials", "12"});
  CHECK(j["status"] == 0);
}
