#include <string>

#include "doctest.h"
#include "ncalg/error.hpp"
#include "ncalg/io.hpp"
#include "support.hpp"

using namespace ncalg;
using namespace ncalg::testing;

namespace {

  std::string rules_text(rewrite::ReductionSystem const& sys) {
    std::string out;
    for (auto const& r : sys.rules()) {
      out += format_rule(r, sys.alphabet()) + "\n";
    }
    return out;
  }

  // Line and column of the ParseError raised by f.
  template <typename F>
  std::pair<std::size_t, std::size_t> where(F&& f) {
    try {
      f();
    } catch (ParseError const& e) {
      return {e.line(), e.column()};
    }
    FAIL("no ParseError");
    return {0, 0};
  }

  std::string table_text(embed::AlgebraPresentation const& A) {
    std::string out;
    for (auto const& p : A.table()) {
      out += format_poly(p) + ";";
    }
    return out;
  }

}  // namespace

TEST_CASE("reduction systems load and round trip") {
  auto sys = io::load_system(io::read_file(data_path("shirshov.ncalg")));
  CHECK(sys.ring().name() == "Q");
  CHECK(sys.alphabet().size() == 2);
  CHECK(rules_text(sys) == "x.y.x -> 0\nx.y.y.x -> 1\n");

  auto again = io::load_system(io::save_system(sys));
  CHECK(rules_text(again) == rules_text(sys));
  CHECK(io::save_system(again) == io::save_system(sys));

  auto minimal = io::load_system("ring Z\nalphabet a\n");
  CHECK(minimal.rules().empty());
  CHECK(minimal.ring().name() == "Z");

  auto poly_ring = io::load_system("ring Q[t]\nalphabet x y\nrule y.x -> t*x.y + 1/2\n");
  CHECK(rules_text(io::load_system(io::save_system(poly_ring))) == rules_text(poly_ring));
}

TEST_CASE("reduction system errors carry coordinates") {
  CHECK(where([] { io::load_system("ring Q\nalphabet x y x\n"); })
        == std::pair<std::size_t, std::size_t>{2, 14});
  CHECK(where([] { io::load_system("ring Q\nalphabet x\nrule x -> x\n"); }).first == 3);
  CHECK(where([] { io::load_system("ring Q\nalphabet x y\nrule x -> y\n"); }).first == 3);
  CHECK(where([] { io::load_system("ring Q\n\n  alphabet x\n  rule x x\n"); })
        == std::pair<std::size_t, std::size_t>{4, 8});
  CHECK(where([] { io::load_system("alphabet x\n"); }).first == 1);
  CHECK(where([] { io::load_system("ring Q\n# nothing\n"); }).first == 2);
  CHECK(where([] { io::load_system("ring Q\nalphabet x\nlemma x -> 1\n"); })
        == std::pair<std::size_t, std::size_t>{3, 1});
  CHECK(where([] { io::load_system("ring Q\nalphabet x\nrule x.x -> 1/0\n"); }).first == 3);
  CHECK(where([] { io::load_system("ring F4\nalphabet x\n"); }).first == 1);
  CHECK_THROWS_AS(io::read_file(data_path("missing.ncalg")), InputError);
}

TEST_CASE("algebra documents") {
  auto cube = io::load_algebra(io::read_file(data_path("cube.alg")));
  CHECK(cube.algebra.dimension() == 3);
  CHECK(cube.algebra.unital());
  CHECK_FALSE(cube.algebra.associativity_failure().has_value());
  CHECK(cube.gens.size() == 1);
  CHECK_FALSE(cube.psi.has_value());
  auto back = io::load_algebra(io::save_algebra(cube));
  CHECK(table_text(back.algebra) == table_text(cube.algebra));
  CHECK(format_poly(back.gens[0]) == "t");

  auto nonunital = io::load_algebra(io::read_file(data_path("nonunital.alg")));
  CHECK_FALSE(nonunital.algebra.unital());
  CHECK(nonunital.algebra.dimension() == 2);

  auto truncated = io::load_algebra(io::read_file(data_path("truncated_x3.alg")));
  REQUIRE(truncated.psi.has_value());
  CHECK(format_poly((*truncated.psi)[1]) == "x.x");
  CHECK(truncated.lift == "u");
  auto t2 = io::load_algebra(io::save_algebra(truncated));
  CHECK(t2.lift == truncated.lift);
  CHECK(format_poly((*t2.psi)[0]) == "x");

  auto empty = io::load_algebra(io::read_file(data_path("rationals.alg")));
  CHECK(empty.algebra.dimension() == 1);

  CHECK(where([] { io::load_algebra("ring Q\nbasis t\nunital true\n"); }).first == 3);
  CHECK(where([] { io::load_algebra("ring Q\nunital true\n"); }).first == 2);
  CHECK(where([] {
          io::load_algebra("ring Q\nbasis t\nunital true\ntable t.t -> 1\ngen 1 -> t\n");
        }).first
        == 5);
  CHECK_THROWS_AS(io::load_algebra("ring Q\nbasis a\nunital false\ntable a.a -> 1\n"),
                  ParseError);
}

TEST_CASE("Z-algebra documents") {
  auto doc = io::load_zalgebra(io::read_file(data_path("torsion.zalg")));
  CHECK(doc.algebra->rank() == 2);
  CHECK(doc.algebra->module()->describe() == "Z + Z/2");
  CHECK(doc.s.size() == 2);
  CHECK(doc.algebra->module()->equal(doc.s[1], tensorring::Vec{1, 1}));
  CHECK(doc.algebra->module()->equal(doc.s[0], doc.algebra->generator(1)));
  auto back = io::load_zalgebra(io::save_zalgebra(doc));
  CHECK(back.algebra->module()->describe() == "Z + Z/2");
  CHECK(io::save_zalgebra(back) == io::save_zalgebra(doc));

  CHECK(where([] {
          io::load_zalgebra("domain Z\ngenerators one\nunit -> one\n");
        }).first
        == 3);
  CHECK_THROWS_AS(
      io::load_zalgebra("domain Z\ngenerators one one\nunit -> one\ntable one.one -> one\n"),
      ParseError);
}
