#include <doctest.h>

#include <json.hpp>
#include <algorithm>
#include <set>
#include <sstream>

#include "cli.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
  std::vector<json> records() const {
    std::vector<json> recs;
    std::istringstream in(out);
    for (std::string line; std::getline(in, line);) recs.push_back(json::parse(line));
    return recs;
  }
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "cyclic-curves");
  std::ostringstream out, err;
  int code = cyclic::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool no_json_numbers(const json& j) {
  if (j.is_number()) return false;
  if (j.is_structured())
    for (const auto& v : j)
      if (!no_json_numbers(v)) return false;
  return true;
}

}  // namespace

TEST_CASE("classify records") {
  auto r = run({"classify", "--p", "5", "--genus", "2"});
  CHECK(r.code == 0);
  auto recs = r.records();
  REQUIRE(recs.size() == 5);
  std::vector<std::string> shape;
  for (const auto& rec : recs) {
    CHECK(rec["schema_version"] == "1");
    CHECK(rec["command"]["name"] == "classify");
    CHECK(no_json_numbers(rec));
    shape.push_back(rec["payload"]["N"].get<std::string>() + " " +
                    rec["payload"]["branch"].get<std::string>());
  }
  CHECK(shape == std::vector<std::string>{"5 III-Homma", "6 I-Kummer", "6 I-Hyperelliptic",
                                          "8 I-Kummer", "10 II-ASPower"});
  CHECK(recs[1]["payload"]["ramification"]["text"] == "(0; 3, 6, 6)");
  CHECK(recs[4]["payload"]["ramification"]["orbits"][0]["filtration"] ==
        json::array({"10", "5", "5"}));

  // Serialization is canonical: re-dumping a parsed line reproduces it.
  std::istringstream in(r.out);
  for (std::string line; std::getline(in, line);) CHECK(json::parse(line).dump() == line);
}

TEST_CASE("classify options") {
  auto raw = run({"classify", "--p", "5", "--genus", "2", "--n", "6", "--raw-pairs"});
  CHECK(raw.code == 0);
  CHECK(raw.records().size() == 4);  // three pairs plus the hyperelliptic entry

  auto csv = run({"classify", "--p", "0", "--genus", "2", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("N,branch,genus,model,pairs,ramification,wild\n", 0) == 0);

  auto table = run({"classify", "--p", "3", "--genus", "3", "--format", "table"});
  CHECK(table.code == 0);
  CHECK(table.out.find("kummer:14,1,6") != std::string::npos);
}

TEST_CASE("characteristic 2 is rejected") {
  auto r = run({"classify", "--p", "2", "--genus", "3"});
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK(r.err == "characteristic 2 unsupported\n");
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"classify", "--p", "5"}).code == 2);
  CHECK(run({"classify", "--p", "5", "--genus", "x"}).code == 2);
  CHECK(run({"classify", "--p", "5", "--genus", "1"}).code == 2);
  CHECK(run({"classify", "--p", "5", "--genus", "2", "--format", "xml"}).code == 2);
  CHECK(run({"pairs", "--n", "2"}).code == 2);
  auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("classify") != std::string::npos);
}

TEST_CASE("pairs and signatures") {
  auto pairs = run({"pairs", "--n", "7", "--canonical"});
  CHECK(pairs.code == 0);
  auto recs = pairs.records();
  REQUIRE(recs.size() == 2);
  CHECK(recs[0]["payload"]["orbit_size"] == "9");
  CHECK(recs[1]["payload"]["s"] == "2");
  CHECK(run({"pairs", "--n", "12"}).records().size() == 42);
  CHECK(run({"pairs", "--n", "12", "--genus", "4"}).records().size() > 0);

  auto sigs = run({"signatures", "--n", "6", "--genus", "2"}).records();
  std::set<std::string> texts;
  for (const auto& rec : sigs) texts.insert(rec["payload"]["text"].get<std::string>());
  CHECK(texts == std::set<std::string>{"(0; 3, 6, 6)", "(0; 2, 2, 3, 3)"});
  auto five = run({"signatures", "--n", "5", "--genus", "2"}).records();
  REQUIRE(five.size() == 1);
  CHECK(five[0]["payload"]["text"] == "(0; 5, 5, 5)");
  auto seven = run({"signatures", "--n", "7", "--genus", "4"});
  CHECK(seven.code == 0);
  CHECK(seven.out.empty());
  auto seven3 = run({"signatures", "--n", "7", "--genus", "3"}).records();
  CHECK(std::any_of(seven3.begin(), seven3.end(), [](const json& rec) {
    return rec["payload"]["text"] == "(0; 7, 7, 7)";
  }));
}

TEST_CASE("verify Homma curve") {
  auto r = run({"verify", "--model", "homma:5", "--q", "5", "--zeta-depth", "4"});
  CHECK(r.code == 0);
  auto recs = r.records();
  REQUIRE(recs.size() == 6);
  std::vector<std::string> counts;
  for (int i = 0; i < 4; ++i) {
    CHECK(recs[i]["payload"]["check"] == "count");
    CHECK(recs[i]["payload"]["ok"] == true);
    counts.push_back(recs[i]["payload"]["places"]);
  }
  CHECK(counts == std::vector<std::string>{"6", "6", "126", "526"});
  CHECK(recs[4]["payload"]["order"] == "5");
  CHECK(recs[4]["payload"]["fixed_points"] == "0");
  CHECK(recs[5]["payload"]["inferred_genus"] == "2");
  for (const auto& rec : recs) CHECK(no_json_numbers(rec));
}

TEST_CASE("verify Kummer curve") {
  CHECK(run({"verify", "--model", "kummer:5,1,1", "--q", "7"}).code == 2);
  auto r = run({"verify", "--model", "kummer:5,1,1", "--q", "11", "--zeta", "3"});
  CHECK(r.code == 0);
  auto recs = r.records();
  REQUIRE(recs.size() == 2);
  CHECK(recs[0]["payload"]["places"] == "13");
  CHECK(recs[0]["payload"]["naive"] == "13");
  CHECK(recs[1]["payload"]["order"] == "5");
  CHECK(recs[1]["payload"]["zeta"] == "3");
  CHECK(recs[1]["payload"]["fixed_points"] == "2");
  CHECK(run({"verify", "--model", "kummer:5,1,1", "--q", "11", "--zeta", "2"}).code == 2);
}

TEST_CASE("verify mismatch and precondition exits") {
  auto small = run({"verify", "--model", "aspower:5,2,1,0", "--q", "5"});
  CHECK(small.code == 1);
  CHECK(small.records().back()["payload"]["error"] == "OrderMismatch");
  CHECK(run({"verify", "--model", "aspower:5,2,1,0", "--q", "625"}).code == 0);
  CHECK(run({"verify", "--model", "aspower:5,2,1,0", "--q", "11"}).code == 2);
  CHECK(run({"verify", "--model", "hyper:2,lambda", "--q", "7"}).code == 2);
  CHECK(run({"verify", "--model", "homma:7", "--q", "7", "--zeta-depth", "6",
             "--max-field", "1000"}).code == 2);
  CHECK(run({"verify", "--model", "bogus", "--q", "7"}).code == 2);
  CHECK(run({"verify", "--model", "homma:5", "--q", "6"}).code == 2);
}
