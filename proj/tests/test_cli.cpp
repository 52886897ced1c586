#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dgf/cli.hpp"
#include "support/reference.hpp"

using namespace dgf;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "dgf");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(int(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::filesystem::path temp_file(const std::string& name, const std::string& text) {
  const auto p = std::filesystem::temp_directory_path() / ("dgf_test_" + name);
  std::ofstream(p) << text;
  return p;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string f; std::getline(in, f, sep);) out.push_back(f);
  return out;
}

}  // namespace

TEST_CASE("table in numeric mode") {
  const auto r = invoke({"table", "--family", "dag", "--max-n", "5", "--mode", "numeric"});
  REQUIRE(r.code == 0);
  const auto l = lines(r.out);
  REQUIRE(l.size() == 7);
  CHECK(l.front() == "n,count");
  CHECK(l.back() == "5,29281");
}

TEST_CASE("table in polynomial mode") {
  const auto r = invoke({"table", "--family", "scc", "--max-n", "3"});
  REQUIRE(r.code == 0);
  const auto l = lines(r.out);
  CHECK(l.front() == "n,m,count");
  CHECK(std::count(l.begin(), l.end(), "3,4,9") == 1);
  CHECK(std::count(l.begin(), l.end(), "3,6,1") == 1);

  const auto marked = invoke({"table", "--family", "dag-sources", "--max-n", "2"});
  REQUIRE(marked.code == 0);
  CHECK(lines(marked.out).front() == "n,m,p,count");
  CHECK(lines(marked.out).back() == "2,1,1,2");

  const auto zero = invoke({"table", "--family", "dag", "--max-n", "0"});
  CHECK(lines(zero.out) == std::vector<std::string>{"n,m,count", "0,0,1"});
}

TEST_CASE("json output carries the same rows as csv") {
  const auto csv = invoke({"table", "--family", "initially-connected", "--max-n", "4"});
  const auto json = invoke({"table", "--family", "initially-connected", "--max-n", "4", "--format", "json"});
  REQUIRE(csv.code == 0);
  REQUIRE(json.code == 0);
  const auto doc = nlohmann::json::parse(json.out);
  CHECK(doc["family"] == "initially-connected");
  CHECK(doc["mode"] == "poly");
  CHECK(doc["order"] == 4);
  REQUIRE(doc["rows"].is_array());

  std::multiset<std::string> from_json, from_csv;
  for (const auto& row : doc["rows"]) {
    CHECK(row["count"].is_string());
    CHECK(!row.contains("p"));
    from_json.insert(std::to_string(row["n"].get<int>()) + "," + std::to_string(row["m"].get<int>()) + "," +
                     row["count"].get<std::string>());
  }
  const auto l = lines(csv.out);
  from_csv.insert(l.begin() + 1, l.end());
  CHECK(from_json == from_csv);
}

TEST_CASE("output is byte-deterministic") {
  const std::vector<std::string> args = {"table", "--family", "scc", "--max-n", "7", "--format", "json"};
  CHECK(invoke(args).out == invoke(args).out);

  const auto path = std::filesystem::temp_directory_path() / "dgf_test_out.csv";
  const auto r = invoke({"table", "--family", "dag", "--max-n", "6", "--out", path.string()});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::stringstream file;
  file << std::ifstream(path).rdbuf();
  CHECK(file.str() == invoke({"table", "--family", "dag", "--max-n", "6"}).out);
  std::filesystem::remove(path);
}

TEST_CASE("custom family payloads") {
  // single vertex: restricted SCC digraphs are DAGs
  const auto z = temp_file("z.txt", "# one vertex\n1: 1\n\n");
  const auto r = invoke({"table", "--family", "restricted-scc", "--custom-family", z.string(), "--max-n", "5",
                         "--mode", "numeric"});
  REQUIRE(r.code == 0);
  CHECK(lines(r.out).back() == "5,29281");

  const auto two_cycle = temp_file("c2.txt", "2: 0 0 1\n");
  const auto r2 = invoke({"table", "--family", "restricted-scc", "--custom-family", two_cycle.string(),
                          "--max-n", "2"});
  REQUIRE(r2.code == 0);
  CHECK(lines(r2.out).back() == "2,2,1");

  std::istringstream parsed("1: 1\n3: 0 0 0 2 9 6 1\n");
  const Series s = cli::parse_custom_family(parsed, 4);
  CHECK(s[3] == catalog::scc_egf(3)[3]);
  CHECK(s[4].is_zero());

  for (const auto& [name, text, line] : std::vector<std::tuple<std::string, std::string, int>>{
           {"neg.txt", "1: 1\n2: 0 -1\n", 2},
           {"dup.txt", "1: 1\n# c\n1: 1\n", 3},
           {"empty.txt", "0: 1\n", 1},
           {"junk.txt", "\nhello\n", 2},
       }) {
    const auto p = temp_file(name, text);
    const auto bad = invoke({"table", "--family", "restricted-scc", "--custom-family", p.string()});
    CHECK(bad.code == 3);
    CHECK(bad.err.find("line " + std::to_string(line)) != std::string::npos);
    std::filesystem::remove(p);
  }

  CHECK(invoke({"table", "--family", "restricted-scc"}).code == 2);
  CHECK(invoke({"table", "--family", "restricted-scc", "--custom-family", "/nonexistent/x"}).code == 3);
  std::filesystem::remove(z);
  std::filesystem::remove(two_cycle);
}

TEST_CASE("usage errors") {
  CHECK(invoke({"table", "--family", "nope"}).code == 2);
  CHECK(invoke({"table"}).code == 2);
  CHECK(invoke({"table", "--family", "dag", "--max-n", "-1"}).code == 2);
  CHECK(invoke({"table", "--family", "dag", "--mode", "fast"}).code == 2);
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
}

TEST_CASE("selftest") {
  const auto ok = invoke({"selftest"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("FAIL") == std::string::npos);

  const auto capped = invoke({"selftest", "--max-n", "6"});
  CHECK(capped.code == 2);

  // off-by-one in one DAG coefficient must be caught and named
  cli::RunConfig cfg;
  cfg.max_n = 3;
  const auto base = selftest::default_computer();
  const selftest::FamilyComputer broken = [base](const catalog::FamilyId& id, std::size_t order, CoeffMode mode) {
    Series s = base(id, order, mode);
    if (id.family != catalog::Family::Dag || order < 2) return s;
    std::vector<CoeffPoly> c(s.coeffs().begin(), s.coeffs().end());
    c[2] += mode.lift(CoeffPoly::w());
    return Series(s.kind(), s.mode(), std::move(c));
  };
  std::ostringstream out, err;
  CHECK(cli::cmd_selftest(cfg, out, err, broken) == 1);
  CHECK(out.str().find("FAIL") != std::string::npos);
  CHECK(err.str().find("family=dag") != std::string::npos);
}

TEST_CASE("bench") {
  const auto r = invoke({"bench", "--max-n", "100"});
  REQUIRE(r.code == 0);
  const auto l = lines(r.out);
  REQUIRE(l.size() >= 101);
  CHECK(l[0] == "n,scc,dag");
  CHECK(split(l[100], ',')[0] == "100");
  const auto scc = ref::scc_counts(20);
  const auto dag = ref::dag_counts(20);
  for (int n = 1; n <= 20; ++n) {
    const auto f = split(l[n], ',');
    REQUIRE(f.size() == 3);
    CHECK(f[0] == std::to_string(n));
    CHECK(f[1] == scc[n].get_str());
    CHECK(f[2] == dag[n].get_str());
  }
  CHECK(r.out.find("# scc_egf_ms=") != std::string::npos);

  CHECK(invoke({"bench", "--max-n", "1"}).code == 0);
  CHECK(invoke({"bench", "--max-n", "40", "--mode", "poly"}).code == 2);
  CHECK(invoke({"bench", "--max-n", "6", "--mode", "poly"}).code == 0);
}
