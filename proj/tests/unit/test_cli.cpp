#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "brauerkit/cli.hpp"

using json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = brauerkit::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string error_code(const Result& r) { return json::parse(r.err)["error"]["code"].get<std::string>(); }

const char* kQuaternion2 = R"({"inv":[{"place":{"p":2},"value":"1/2"},{"place":{"real":0},"value":"1/2"}]})";

}  // namespace

TEST_CASE("qm-surface check") {
  Result r = run({"reduce", "qm-surface", "--ram", "2,3", "--q", "5"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["all_must_split"].get<bool>());
  CHECK(j["rows"].size() >= 9);
  for (const auto& row : j["rows"]) CHECK(row["verdict"] == "MustSplit");

  Result text = run({"reduce", "qm-surface", "--ram", "2,3", "--q", "5", "--format", "text"});
  CHECK(text.code == 0);
  CHECK(text.out.find("MustSplit") != std::string::npos);
  CHECK(text.out.find("all MustSplit: yes") != std::string::npos);
}

TEST_CASE("domain errors exit with 1") {
  Result r = run({"brauer", "index", R"({"inv":[{"place":{"p":2},"value":"1/2"}]})"});
  CHECK(r.code == 1);
  CHECK(error_code(r) == "ReciprocityViolation");
  CHECK(r.out.empty());

  Result bad_place = run({"brauer", "index", R"({"inv":[{"place":{"p":4},"value":"1/2"},{"place":{"real":0},"value":"1/2"}]})"});
  CHECK(bad_place.code == 1);
  CHECK(error_code(bad_place) == "InvalidPlace");

  Result reducible = run({"field", "info", R"({"poly":[-1,0,1]})"});
  CHECK(reducible.code == 1);
  CHECK(error_code(reducible) == "NotIrreducible");
}

TEST_CASE("malformed input exits with 2") {
  Result broken = run({"brauer", "index", "{\"inv\": ["});
  CHECK(broken.code == 2);
  CHECK(error_code(broken) == "MalformedInput");

  Result schema = run({"brauer", "index", R"({"inv":[{"place":{"p":2}}]})"});
  CHECK(schema.code == 2);
  CHECK(error_code(schema) == "MalformedInput");

  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({"weil", "enumerate"}).code == 2);
  CHECK(run({"weil", "enumerate", "--q", "4", "--degree", "3"}).code == 2);
  CHECK(run({"reduce", "qm-surface", "--ram", "4", "--q", "5"}).code == 2);
}

TEST_CASE("brauer index output round trips") {
  Result r = run({"brauer", "index", kQuaternion2});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["index"] == 2);
  Result again = run({"brauer", "index", j["class"].dump()});
  REQUIRE(again.code == 0);
  CHECK(json::parse(again.out) == j);
}

TEST_CASE("brauer add and restrict") {
  Result sum = run({"brauer", "add", std::string(R"({"a":)") + kQuaternion2 + R"(,"b":)" + kQuaternion2 + "}"});
  REQUIRE(sum.code == 0);
  CHECK(json::parse(sum.out)["index"] == 1);

  Result res = run({"brauer", "restrict", std::string(R"({"class":)") + kQuaternion2 + R"(,"map":{"target":{"poly":[1,0,1]}}})"});
  REQUIRE(res.code == 0);
  CHECK(json::parse(res.out)["index"] == 1);
}

TEST_CASE("field info") {
  Result r = run({"field", "info", R"({"poly":[1,0,1]})", "--primes", "2,5"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["degree"] == 2);
  CHECK(j["places_above"]["2"].size() == 1);
  CHECK(j["places_above"]["5"].size() == 2);
  CHECK(j["complex_places"].size() == 1);
}

TEST_CASE("embed decide") {
  Result self = run({"embed", "decide", std::string(R"({"D":)") + kQuaternion2 + R"(,"B":)" + kQuaternion2 + "}"});
  REQUIRE(self.code == 0);
  CHECK(json::parse(self.out)["embeddable"].get<bool>());

  const char* d23 = R"({"inv":[{"place":{"p":2},"value":"1/2"},{"place":{"p":3},"value":"1/2"}]})";
  Result no = run({"embed", "decide", std::string(R"({"D":)") + d23 + R"(,"B":)" + kQuaternion2 + "}"});
  REQUIRE(no.code == 0);
  json j = json::parse(no.out);
  CHECK_FALSE(j["embeddable"].get<bool>());
  CHECK(j["candidates"][0]["failing_condition"] == "Condition2");
}

TEST_CASE("weil subcommands") {
  Result check = run({"weil", "check", R"({"poly":[5,-1,1],"q":5})"});
  REQUIRE(check.code == 0);
  CHECK(json::parse(check.out)["is_weil_number"].get<bool>());

  Result enumerate = run({"weil", "enumerate", "--q", "2", "--degree", "2"});
  REQUIRE(enumerate.code == 0);
  // x^2 + ax + 2 for |a| <= 2, and x^2 - 2.
  CHECK(json::parse(enumerate.out)["count"] == 6);

  Result inv = run({"weil", "invariants", R"({"poly":[5,0,1],"q":5})"});
  REQUIRE(inv.code == 0);
  json j = json::parse(inv.out);
  // sqrt(-5) generates the commutative endomorphism algebra of an elliptic curve.
  CHECK(j["e"] == 1);
  CHECK(j["g"] == 1);
  Result s25 = run({"weil", "invariants", R"({"poly":[25,0,1],"q":{"p":5,"m":2}})"});
  REQUIRE(s25.code == 0);
  CHECK(json::parse(s25.out)["e"] == 2);
}

TEST_CASE("weil import from a file") {
  const std::string path = "brauerkit_cli_test_import.csv";
  {
    std::ofstream f(path);
    f << "p,m,coeffs\n2,1,2 1 1\n3,1,x y\n5,1,1 -1 5\n";
  }
  Result r = run({"weil", "import", path});
  std::remove(path.c_str());
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["numbers"].size() == 2);
  CHECK(j["numbers"][0]["line"] == 2);
  REQUIRE(j["issues"].size() == 1);
  CHECK(j["issues"][0]["line"] == 3);
}

TEST_CASE("reduce obstruction") {
  const char* quat23 = R"({"inv":[{"place":{"p":2},"value":"1/2"},{"place":{"p":3},"value":"1/2"}]})";
  std::string doc = std::string(R"({"endo":)") + quat23 + R"(,"ell":2,"map":{"target":"Q"},"weil":{"poly":[5,-1,1],"q":5}})";
  Result r = run({"reduce", "obstruction", doc});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["verdict"] == "MustSplit");

  Result text = run({"--format", "text", "reduce", "obstruction", doc});
  CHECK(text.code == 0);
  CHECK(text.out.find("MustSplit") != std::string::npos);
}
