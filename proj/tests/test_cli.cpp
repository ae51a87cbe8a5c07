#include <doctest.h>

#include <sstream>

#include "liouville/cli.hpp"
#include "liouville/json_io.hpp"

using namespace liouville;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run_args(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args, int expect = 0) {
  args.push_back("--json");
  auto r = run_args(args);
  CHECK(r.code == expect);
  return Json::parse(r.out);
}

}  // namespace

TEST_CASE("cli: numfield monodromy of Q[sqrt 2]") {
  auto j = run_json({"numfield", "--poly", "-2,0,1", "--monodromy"});
  CHECK(j["schema"] == "liouville-lab/1");
  CHECK(j["verdict"] == "pass");
  CHECK(j["result"]["monodromy"][0] == Json::parse("[[3,4],[2,3]]"));
  CHECK(j["result"]["signature"] == Json::parse("[2,0]"));
  CHECK(j["result"]["units"]["positive_free"][0] == Json::parse("[3,2]"));
  CHECK(j["result"]["liouville_certificate"] == "positive-exact");
  auto human = run_args({"numfield", "--poly", "-2,0,1", "--monodromy"});
  CHECK(human.code == 0);
  CHECK(human.out.find("[[[3,4],[2,3]]]") != std::string::npos);
}

TEST_CASE("cli: numfield of Q[i]") {
  auto j = run_json({"numfield", "--poly", "1,0,1", "--box", "20"});
  CHECK(j["result"]["units"]["torsion"].size() == 4);
  CHECK(j["result"]["units"]["rank"] == 0);
  CHECK(j["result"]["monodromy"][0] == Json::parse("[[0,-1],[1,0]]"));
  CHECK(j["result"]["liouville_certificate"] == "not-applicable");
}

TEST_CASE("cli: cotame on the four-dimensional pair") {
  auto j = run_json({"cotame", "--omega0", "remark0", "--omega1", "remark1"});
  CHECK(j["verdict"] == "pass");
  CHECK(j["certificate"] == "exact");
  CHECK(j["result"]["J"].size() == 4);
  CHECK(j["result"]["exact_tames_omega1"] == true);
  // inline JSON, opposite forms
  auto neg = run_json({"cotame", "--omega0", "[[0,1],[-1,0]]", "--omega1", "[[0,-1],[1,0]]"}, 1);
  CHECK(neg["verdict"] == "fail");
  CHECK(neg["result"]["segment_nondegenerate"] == false);
}

TEST_CASE("cli: pencil-reduce") {
  auto j = run_json({"pencil-reduce", "--omega0", "standard:4", "--omega1",
                     "[[0,0,\"5/2\",0],[0,0,0,\"5/2\"],[\"-5/2\",0,0,0],[0,\"-5/2\",0,0]]"});
  CHECK(j["verdict"] == "pass");
  for (const auto& b : j["result"]["blocks"]) CHECK(b["lambda"].get<double>() == doctest::Approx(2.5));
}

TEST_CASE("cli: pair, contact and Geiges certificates") {
  auto p = run_json({"verify-pair", "--preset", "totreal:2"});
  CHECK(p["result"]["certificate"] == "positive-exact");
  auto c = run_json({"verify-contact", "--preset", "totreal:3", "--form", "minus"});
  CHECK(c["result"]["sign"] == "negative");
  auto g = run_json({"geiges", "--n", "2"});
  CHECK(g["result"]["pair"] == true);
}

TEST_CASE("cli: grid commands") {
  CHECK(run_json({"giroux-torsion", "--k", "2", "--points", "256"})["result"]["pass"] == true);
  auto r = run_json({"reeb", "--k", "1", "--points", "64"});
  CHECK(r["result"]["max_r1"].get<double>() <= 1e-8);
  CHECK(run_json({"lutz-check", "--k", "1", "--tau", "0.25", "--points", "64"})["verdict"] == "pass");
  CHECK(run_json({"cutoff", "--points", "128"})["result"]["found"] == true);
}

TEST_CASE("cli: suites") {
  auto s = run_json({"suite", "--name", "pencil", "--trials", "20", "--dims", "4,6"});
  CHECK(s["result"]["mismatches"] == 0);
  CHECK(s["result"]["trials"] == 40);
  auto c = run_json({"suite", "--name", "cayley", "--trials", "20"});
  CHECK(c["result"]["mismatches"] == 0);
  auto x = run_json({"suite", "--name", "counterexample", "--trials", "50"});
  CHECK(x["result"]["wedge_zero"] == true);
}

TEST_CASE("cli: reports are reproducible") {
  std::vector<std::string> a{"suite", "--name", "pencil", "--trials", "10", "--dims", "4", "--seed", "42", "--json"};
  auto r1 = run_args(a), r2 = run_args(a);
  CHECK(r1.out == r2.out);
  auto t1 = run_args({"--threads", "1", "cotame", "--omega0", "remark0", "--omega1", "remark1", "--json"});
  auto t2 = run_args({"cotame", "--omega0", "remark0", "--omega1", "remark1", "--json", "--threads", "3"});
  CHECK(t1.out == t2.out);
  auto j = Json::parse(r1.out);
  CHECK(j["seed"] == 42);
  CHECK_FALSE(j.contains("timing_ms"));
  a.push_back("--timing");
  CHECK(Json::parse(run_args(a).out).contains("timing_ms"));
  for (const char* key : {"operation", "certificate", "tolerances", "orientation", "inputs"}) CHECK(j.contains(key));
}

TEST_CASE("cli: usage and input errors") {
  CHECK(run_args({"verify-pair", "--preset", "totreal:2", "--no-such-flag"}).code == 2);
  CHECK(run_args({}).code == 2);
  CHECK(run_args({"frobnicate"}).code == 2);
  CHECK(run_args({"numfield", "--poly", "-1,0,1"}).code == 2);
  CHECK(run_args({"numfield", "--poly", "x,1"}).code == 2);
  CHECK(run_args({"verify-pair", "--preset", "nope:3"}).code == 2);
  CHECK(run_args({"cotame", "--omega0", "/no/such/file.json", "--omega1", "remark1"}).code == 2);
  CHECK(run_args({"cotame", "--omega0", "[[0,1],[1,0]]", "--omega1", "remark1"}).code == 2);
  CHECK(run_args({"suite", "--name", "bogus"}).code == 2);
  auto help = run_args({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("numfield") != std::string::npos);
}

TEST_CASE("cli: negative verdicts exit with 1") {
  // unit search box too small for the Dirichlet rank
  auto r = run_args({"numfield", "--poly", "-46,0,1", "--box", "50"});
  CHECK(r.code == 1);
  CHECK(r.out.find("increase box_bound") != std::string::npos);
  CHECK(run_args({"verify-contact", "--preset", "sol:2,1,1,1", "--form", "plus"}).code == 0);
}
