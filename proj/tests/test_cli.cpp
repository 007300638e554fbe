#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {
  struct Result {
    int         code;
    std::string out;
    std::string err;
  };

  Result run(std::vector<std::string> const& args) {
    std::ostringstream out, err;
    int const          code = sgsize::cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }

  std::string temp(std::string const& name, std::string const& content) {
    auto const path = fs::temp_directory_path() / ("sgsize_cli_" + name);
    std::ofstream(path, std::ios::binary) << content;
    return path.string();
  }

  std::string read(std::string const& path) {
    std::ifstream      in(path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  std::string const right_zero = "3\n0 1 2\n0 1 2\n0 1 2\n";
}  // namespace

TEST_CASE("validate") {
  auto r = run({"validate", temp("rz.txt", right_zero)});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"n\":3,\"status\":\"ok\"}\n");

  r = run({"validate", temp("bad.txt", "2\n1 0\n0 0\n")});
  CHECK(r.code == 1);
  auto const doc = json::parse(r.out);
  CHECK(doc["status"] == "violation");
  CHECK(doc["violation"] == json({0, 0, 1}));
  CHECK(doc["left"] != doc["right"]);

  r = run({"validate", temp("garbage.txt", "2\n0 1\n")});
  CHECK(r.code == 2);
  CHECK(r.err.rfind("sgsize: error:", 0) == 0);
  CHECK(run({"validate", "/nonexistent/t.txt"}).code == 2);
  CHECK(run({"validate"}).code == 2);
}

TEST_CASE("classify and families") {
  auto const table = temp("rz2.txt", right_zero);
  auto       r     = run({"classify", table, "--set", "0", "--notion", "thick"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["verdict"] == true);
  r = run({"classify", table, "--set", "0", "--notion", "syndetic"});
  CHECK(json::parse(r.out)["verdict"] == false);

  auto const F = temp("f.json", R"({"n":3,"members":[[0,1],[0,1,2]]})");
  r = run({"classify", table, "--set", "0,1", "--notion", "rel-syn", "--filter-f", F,
           "--filter-g", F});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["F"] == json({{0, 1}, {0, 1, 2}}));
  r = run({"classify", table, "--set", "0", "--notion", "szz-ps", "--filter-f", F});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out).contains("point"));

  r = run({"classify", table, "--set", "5", "--notion", "thick"});
  CHECK(r.code == 2);
  r = run({"classify", table, "--set", "0", "--notion", "huge"});
  CHECK(r.code == 2);
  r = run({"classify", temp("nonassoc.txt", "2\n1 0\n0 0\n"), "--set", "0",
           "--notion", "thick"});
  CHECK(r.code == 2);
  CHECK(r.err.find("not associative") != std::string::npos);

  r = run({"families", table});
  CHECK(r.code == 0);
  auto const doc = json::parse(r.out);
  CHECK(doc["syn"] == json({{0, 1, 2}}));
  CHECK(doc["thick"].size() == 7);
  CHECK(doc["ps"] == doc["thick"]);
  r = run({"families", table, "--f", F});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["relative"] == true);
}

TEST_CASE("check") {
  auto r = run({"check", "--max-order", "2", "--no-timing"});
  CHECK(r.code == 0);
  auto const summary = json::parse(r.out);
  CHECK(summary["status"] == "pass");
  CHECK(summary["tables_per_order"] == json({1, 8}));
  CHECK(summary["claims"].size() == 40);
  CHECK_FALSE(summary.contains("meta"));

  auto const out1 = (fs::temp_directory_path() / "sgsize_cli_check1.jsonl").string();
  auto const out2 = (fs::temp_directory_path() / "sgsize_cli_check2.jsonl").string();
  auto const a = run({"check", "--max-order", "2", "--claims", "L3_8,T1_4", "--jobs",
                      "1", "--no-timing", "--out", out1});
  auto const b = run({"check", "--max-order", "2", "--claims", "L3_8,T1_4", "--jobs",
                      "4", "--no-timing", "--out", out2});
  CHECK(a.code == 0);
  CHECK(b.code == 0);
  CHECK(a.out == b.out);
  CHECK(read(out1) == read(out2));
  std::istringstream lines(read(out1));
  std::string        line;
  int                count = 0;
  while (std::getline(lines, line)) {
    auto const rep = json::parse(line);
    CHECK(rep["status"] == "pass");
    CHECK(rep.contains("universe"));
    ++count;
  }
  CHECK(count > 0);

  CHECK(run({"check", "--max-order", "4"}).code == 2);
  CHECK(run({"check", "--max-order", "9", "--dedupe", "iso"}).code == 2);
  CHECK(run({"check", "--max-order", "2", "--claims", "X9"}).code == 2);
  CHECK(run({"check"}).code == 2);
  CHECK(run({"check", "--max-order", "2", "--dedupe", "maybe"}).code == 2);
}

TEST_CASE("enumerate") {
  auto r = run({"enumerate", "--order", "2"});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 8);
  r = run({"enumerate", "--order", "3", "--dedupe", "iso"});
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 24);
  auto const path = (fs::temp_directory_path() / "sgsize_cli_enum.jsonl").string();
  r = run({"enumerate", "--order", "4", "--dedupe", "iso", "--out", path});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["count"] == 188);
  auto const text = read(path);
  CHECK(std::count(text.begin(), text.end(), '\n') == 188);
  CHECK(run({"enumerate", "--order", "4"}).code == 2);
}

TEST_CASE("search-q46") {
  auto const a = run({"search-q46", "--max-order", "3", "--no-timing"});
  auto const b = run({"search-q46", "--max-order", "3", "--no-timing"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  auto const doc = json::parse(a.out);
  CHECK(doc["outcome"] == "none_found");
  CHECK(doc["candidate"].is_null());
  CHECK(doc["universes_examined"] == 142);
  auto const c = run({"search-q46", "--max-order", "3", "--budget", "5", "--no-timing"});
  CHECK(json::parse(c.out)["partial"] == true);
  CHECK(run({"search-q46", "--max-order", "7"}).code == 2);
}

TEST_CASE("natwin") {
  std::string evens = "100;";
  for (int k = 2; k <= 100; k += 2) {
    evens += (k == 2 ? " " : ",") + std::to_string(k);
  }
  auto const in = temp("evens.rle", evens);
  auto       r  = run({"natwin", "--in", in, "--op", "ap", "--k", "5"});
  CHECK(r.code == 0);
  auto doc = json::parse(r.out);
  CHECK(doc["a"] == 2);
  CHECK(doc["d"] == 2);

  r = run({"natwin", "--in", in, "--op", "gap-bound"});
  CHECK(json::parse(r.out)["b"] == 2);
  r = run({"natwin", "--in", in, "--op", "runs"});
  CHECK(json::parse(r.out)["max_run"] == 1);
  r = run({"natwin", "--in", in, "--op", "ps-witness", "--b", "2", "--L", "10"});
  CHECK(json::parse(r.out)["interval"] == json({1, 10}));
  r = run({"natwin", "--in", in, "--op", "embed", "--m", "10", "--other", in});
  CHECK(json::parse(r.out)["embeddable"] == true);
  r = run({"natwin", "--op", "example-3-4", "--horizon", "200", "--m", "20"});
  CHECK(r.code == 0);
  doc = json::parse(r.out);
  CHECK(doc["passed"] == true);
  CHECK(doc["shift"] == 2);

  CHECK(run({"natwin", "--in", temp("bad.rle", "100; 2-x"), "--op", "runs"}).code == 2);
  CHECK(run({"natwin", "--in", in, "--op", "ap"}).code == 2);
  CHECK(run({"natwin", "--in", in, "--op", "nope"}).code == 2);
  CHECK(run({"natwin", "--op", "example-3-4", "--horizon", "10", "--m", "6"}).code == 2);
}

TEST_CASE("help and unknown commands") {
  auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("check") != std::string::npos);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
}
