#include <filesystem>
#include <set>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "ncalg/cli.hpp"
#include "ncalg/io.hpp"
#include "support.hpp"

using namespace ncalg;
using namespace ncalg::testing;
using nlohmann::json;

namespace {

  struct Result {
    int         code;
    std::string out;
    std::string err;
    json        report() const { return json::parse(out); }
  };

  Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int                code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }

  std::string tmp(std::string const& name) {
    return (std::filesystem::temp_directory_path() / ("ncalg_test_" + name)).string();
  }

}  // namespace

TEST_CASE("diamond on the Shirshov rules") {
  auto r = run({"diamond", "--system", data_path("shirshov.ncalg")});
  CHECK(r.code == cli::refuted);
  auto j = r.report();
  CHECK(j["verdict"] == "refuted");
  auto const& w = j["diamond"]["witness"];
  CHECK(w["word"] == "x.y.x.y.y.x");
  std::set<std::string> results{w["via_first"], w["via_second"]};
  CHECK(results == std::set<std::string>{"0", "x.y"});
}

TEST_CASE("ideal extension demo") {
  auto r = run({"ideal-ext", "--demo", "shirshov", "--degree", "8"});
  CHECK(r.code == cli::refuted);
  auto j = r.report();
  CHECK(j["result"]["witness"] == "1");
  CHECK(j["one_in_J"] == true);
  CHECK(j["trace"]["word"] == "x.y.x.y.y.x.y.x");
  std::set<std::string> ends;
  for (auto const& p : j["trace"]["paths"]) {
    ends.insert(p["result"].get<std::string>());
  }
  CHECK(ends == std::set<std::string>{"0", "1"});

  auto n = run({"ideal-ext", "--demo", "shirshov", "--degree", "8", "--nonunital"});
  CHECK(n.code == cli::verified);
  CHECK(n.report()["verdict"] == "holds_up_to_degree");

  auto hand = run({"ideal-ext", "--sub", "x.y.x", "--ideal", "x.y.x.x.y.x", "--degree", "4"});
  CHECK(hand.code == cli::verified);
  CHECK(run({"ideal-ext", "--degree", "4"}).code == cli::input_error);
}

TEST_CASE("coproduct growth counts") {
  auto r = run({"coproduct", "growth", "--d1", "1", "--d2", "1", "--n", "10"});
  CHECK(r.code == cli::verified);
  auto counts = r.report()["counts"];
  REQUIRE(counts.size() == 11);
  for (std::size_t n = 0; n <= 10; ++n) {
    CHECK(counts[n] == std::to_string(2 * n + 1));
  }
}

TEST_CASE("rewriting subcommands") {
  auto sys = data_path("shirshov.ncalg");
  auto nf  = run({"nf", "--system", sys, "--poly", "x.y.x.y.y.x + y"});
  CHECK(nf.code == cli::verified);
  CHECK(nf.report()["normal_form"] == "y");

  auto traced = run({"nf", "--system", sys, "--poly", "x.y.x.y", "--trace"});
  CHECK(traced.code == cli::verified);
  CHECK(traced.report().contains("trace"));

  auto starved = run({"nf", "--system", sys, "--poly", "x.y.x", "--fuel", "0"});
  CHECK(starved.code == cli::refuted);
  CHECK(starved.report()["verdict"] == "fuel_exhausted");

  auto basis = run({"basis", "--system", sys, "--max-len", "4"});
  CHECK(basis.code == cli::verified);
  CHECK(basis.report()["counts"] == json::array({1, 2, 4, 7, 11}));

  CHECK(run({"nf", "--system", sys, "--poly", "x."}).code == cli::input_error);
  CHECK(run({"nf", "--system", data_path("missing.ncalg"), "--poly", "x"}).code
        == cli::input_error);
}

TEST_CASE("embedding subcommands") {
  auto out   = tmp("cube3.ncalg");
  auto three = run({"embed", "three-gen", "--algebra", data_path("cube.alg"), "--out", out,
                    "--verify", "4"});
  CHECK(three.code == cli::verified);
  auto saved = io::load_system(io::read_file(out));
  CHECK(saved.rules().size() == 5);
  CHECK(run({"diamond", "--system", out}).code == cli::verified);

  auto two = run({"embed", "two-gen", "--algebra", data_path("cube.alg"), "--out",
                  tmp("cube2.ncalg"), "--verify", "4"});
  CHECK(two.code == cli::refuted);
  CHECK(two.report()["verification"]["missing_symbol"] == "t");

  auto central =
      run({"embed", "central", "--ring-file", data_path("central.ring"), "--gens", "t,t^2"});
  CHECK(central.code == cli::verified);
  CHECK(central.report()["diamond"]["confluent"] == true);

  auto nonunital = run({"embed", "nonunital", "--algebra", data_path("nonunital.alg"),
                        "--family", "f=n", "--N", "3"});
  CHECK(nonunital.code == cli::verified);
  CHECK(nonunital.report()["dictionary"]["a"] == "x.y.x");
  CHECK(run({"embed", "nonunital", "--algebra", data_path("nonunital.alg"), "--family", "f=2",
             "--N", "3"})
            .code
        == cli::input_error);
}

TEST_CASE("word families and semigroups") {
  CHECK(run({"family", "check", "--words", "x.y.z,x.y.y.z"}).code == cli::verified);
  auto bad = run({"family", "check", "--words", "x.y.x"});
  CHECK(bad.code == cli::refuted);
  CHECK(bad.report()["witness"]["kind"] == "overlap");

  auto iso = run({"semigroup", "isolated", "--gens", "x.x", "--bound", "6"});
  CHECK(iso.code == cli::refuted);
  CHECK(iso.report()["witness"] == json{{"left", "x"}, {"middle", "x.x"}, {"right", "x"}});
  CHECK(run({"semigroup", "isolated", "--gens", "x.y.x,x.y.y.x", "--bound", "8"}).code
        == cli::verified);

  auto fac = run({"semigroup", "factorize", "--word", "x.y.x.x.y.y.x.x", "--family", "f=n",
                  "--N", "3"});
  CHECK(fac.code == cli::verified);
  CHECK(fac.report()["n"] == json::array({1, 2}));
  CHECK(run({"semigroup", "factorize", "--word", "x.y.y", "--family", "f=n", "--N", "3"}).code
        == cli::refuted);

  auto uni = run({"semigroup", "unique", "--gens", "x,x.x", "--bound", "6"});
  CHECK(uni.code == cli::refuted);
  CHECK(uni.report()["clash"]["word"] == "x.x");
}

TEST_CASE("module demos") {
  auto bim = run({"bimodule", "demo", "--algebra", data_path("torsion.zalg"), "--degree", "3"});
  CHECK(bim.code == cli::verified);
  CHECK(bim.report()["module"] == "Z + Z/2");
  CHECK(bim.report()["order_mismatches"] == 0);

  auto cop = run({"coproduct", "demo", "--a1", data_path("sqrt2.alg"), "--a2",
                  data_path("truncated_x3.alg"), "--degree", "3"});
  CHECK(cop.code == cli::verified);
  CHECK(cop.report()["closure"]["passes"] == true);

  auto ops = run({"operators", "check", "--algebra", data_path("cube.alg"), "--blocks", "6"});
  CHECK(ops.code == cli::verified);
  CHECK(ops.report()["relations"]["holds"] == true);
  CHECK(ops.report()["cross_validation"]["passes"] == true);

  auto mat = run({"matrix", "two-gen", "--algebra", data_path("dual.alg"), "--degree", "6"});
  CHECK(mat.code == cli::verified);
  CHECK(mat.report()["target"] == 18);
  auto short_run =
      run({"matrix", "two-gen", "--algebra", data_path("dual.alg"), "--degree", "2"});
  CHECK(short_run.code == cli::refuted);
}

TEST_CASE("usage errors and global flags") {
  auto none = run({});
  CHECK(none.code == cli::input_error);
  CHECK(none.err.find("Usage") != std::string::npos);
  CHECK(run({"bogus"}).code == cli::input_error);
  CHECK(run({"diamond", "--system", data_path("shirshov.ncalg"), "--bogus"}).code
        == cli::input_error);
  CHECK(run({"--format", "xml", "family", "check", "--words", "x"}).code == cli::input_error);
  CHECK(run({"--help"}).code == cli::verified);

  auto text = run({"--format", "text", "semigroup", "isolated", "--gens", "x.x", "--bound", "6"});
  CHECK(text.code == cli::refuted);
  CHECK(text.out.find("witness.middle: x.x") != std::string::npos);

  auto timed = run({"--timings", "family", "check", "--words", "x.y.z"});
  CHECK(timed.report().contains("timings"));
  CHECK_FALSE(run({"family", "check", "--words", "x.y.z"}).report().contains("timings"));
}

TEST_CASE("reports are deterministic") {
  std::vector<std::vector<std::string>> commands{
      {"--seed", "5", "operators", "check", "--algebra", data_path("cube.alg"), "--blocks", "5"},
      {"--seed", "5", "coproduct", "demo", "--a1", data_path("sqrt2.alg"), "--a2",
       data_path("truncated_x3.alg"), "--degree", "3"},
      {"--seed", "5", "bimodule", "demo", "--algebra", data_path("torsion.zalg"), "--degree", "2"},
      {"ideal-ext", "--demo", "shirshov", "--degree", "6"},
  };
  for (auto const& c : commands) {
    auto a = run(c);
    auto b = run(c);
    CHECK(a.out == b.out);
    CHECK(a.code == b.code);
  }
}
