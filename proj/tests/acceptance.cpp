// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Every check compares against an independent oracle or
// a hand-derived value.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"
#include "ncalg/cli.hpp"
#include "ncalg/coproduct.hpp"
#include "ncalg/embed.hpp"
#include "ncalg/error.hpp"
#include "ncalg/oprealize.hpp"
#include "ncalg/semigroup.hpp"
#include "ncalg/tensorring.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace ncalg;
using namespace ncalg::testing;

namespace {

  // Collects failed expectations; the criterion passes when none failed.
  class Check {
   public:
    void expect(bool ok, std::string const& what) {
      ++_count;
      if (!ok && _first.empty()) {
        _first = what;
      }
      _failed += ok ? 0 : 1;
    }
    void note(std::string const& s) { _notes += (_notes.empty() ? "" : ", ") + s; }
    bool        ok() const { return _failed == 0; }
    std::string summary() const {
      std::string s = std::to_string(_count) + " checks";
      if (!_notes.empty()) {
        s += "; " + _notes;
      }
      if (!ok()) {
        s += "; " + std::to_string(_failed) + " failed, first: " + _first;
      }
      return s;
    }

   private:
    std::size_t _count  = 0;
    std::size_t _failed = 0;
    std::string _first;
    std::string _notes;
  };

  nlohmann::json run_cli(std::vector<std::string> const& args, int& code) {
    std::ostringstream out, err;
    code = cli::run(args, out, err);
    return nlohmann::json::parse(out.str());
  }

  std::vector<FreePoly> letters(rewrite::ReductionSystem const& sys,
                                std::vector<std::string> const& names) {
    std::vector<FreePoly> out;
    for (auto const& n : names) {
      out.push_back(poly(sys.algebra(), n));
    }
    return out;
  }

  std::vector<FreePoly> parse_all(embed::AlgebraPresentation const& A,
                                  std::vector<std::string> const&   texts) {
    std::vector<FreePoly> out;
    for (auto const& t : texts) {
      out.push_back(A.parse(t));
    }
    return out;
  }

  std::vector<Letter> letters_of(Word const& w) { return w.letters(); }

  ////////////////////////////////////////////////////////////////////////

  void shirshov(Check& c) {
    int  code = 0;
    auto j    = run_cli({"ideal-ext", "--demo", "shirshov", "--degree", "8"}, code);
    c.expect(code == cli::refuted, "unital exit code");
    c.expect(j["result"]["witness"] == "1", "witness 1");
    c.expect(j["one_in_J"] == true, "1 in J");
    c.expect(j["trace"]["word"] == "x.y.x.y.y.x.y.x", "trace word");
    std::set<std::string> ends;
    for (auto const& p : j["trace"]["paths"]) {
      ends.insert(p["result"].get<std::string>());
    }
    c.expect(ends == std::set<std::string>{"0", "1"}, "trace ends in 0 and 1");

    // By hand: xyx -> 0 at offset 0 gives 0; xy^2x -> 1 at offset 2 leaves
    // x y y x, which reduces to 1.
    auto a   = algebra({"x", "y"});
    auto sys = system(a, {{"x.y.x", "0"}, {"x.y.y.x", "1"}});
    auto w   = word(a, "x.y.x.y.y.x.y.x");
    auto one = rewrite::reduce_at(w, 0, sys.rules()[0]);
    auto two = rewrite::reduce_at(w, 2, sys.rules()[1]);
    c.expect(one.is_zero(), "left reduction gives 0");
    c.expect(rewrite::normal_form(two, sys) == poly(a, "1"), "right reduction gives 1");

    auto n = run_cli({"ideal-ext", "--demo", "shirshov", "--degree", "8", "--nonunital"}, code);
    c.expect(code == cli::verified, "nonunital exit code");
    c.expect(n["verdict"] == "holds_up_to_degree", "nonunital holds");
  }

  void diamond(Check& c) {
    auto A = cube_roots();
    c.expect(rewrite::check_diamond(embed::build_three_gen(A, {A.parse("t")})).resolvable(),
             "three-gen cube");
    c.expect(rewrite::check_diamond(embed::build_two_gen(A, {A.parse("t")})).resolvable(),
             "two-gen cube");

    std::mt19937_64 rng(2);
    std::size_t     tables = 0;
    while (tables < 20) {
      auto t     = random_table(rng, 2);
      auto fails = oracle::associativity_failures(t, 2);
      if (fails.empty()) {
        continue;
      }
      ++tables;
      auto B = presentation(t, {"a", "b"});
      std::set<std::vector<Letter>> failing;
      for (auto const& f : fails) {
        // x, y, z come first in the alphabet.
        failing.insert({static_cast<Letter>(f[0] + 3), static_cast<Letter>(f[1] + 3),
                        static_cast<Letter>(f[2] + 3)});
      }
      auto report = rewrite::check_diamond(
          embed::build_three_gen(B, {B.parse("a")}, embed::BuildOptions{false}));
      std::set<std::vector<Letter>> unresolvable;
      for (auto const& v : report.verdicts) {
        if (v.status == rewrite::AmbiguityVerdict::Status::unresolvable) {
          unresolvable.insert(letters_of(v.ambiguity.witness));
        }
      }
      c.expect(unresolvable == failing, "unresolvable triples match the oracle");
      auto first = report.first_failure();
      c.expect(first && failing.count(letters_of(first->ambiguity.witness)) == 1,
               "reported triple fails associativity");
    }
    c.note("20 non-associative tables");
  }

  void embedding(Check& c) {
    struct Case {
      std::string                              name;
      embed::AlgebraPresentation               A;
      bool                                     three;
      std::vector<std::string>                 S, shorter;
    };
    std::vector<Case> cases{
        {"sqrt2 three-gen", sqrt2(), true, {"1", "t"}, {"1"}},
        {"sqrt2 two-gen", sqrt2(), false, {"1", "t"}, {"1"}},
        {"cube three-gen", cube_roots(), true, {"1", "t"}, {"1"}},
        {"cube two-gen", cube_roots(), false, {"t", "t2"}, {"t"}},
    };
    for (auto const& k : cases) {
      for (bool full : {true, false}) {
        auto S   = parse_all(k.A, full ? k.S : k.shorter);
        auto sys = k.three ? embed::build_three_gen(k.A, S) : embed::build_two_gen(k.A, S);
        auto gens =
            letters(sys, k.three ? std::vector<std::string>{"x", "y", "z"}
                                 : std::vector<std::string>{"x", "y"});
        auto r = embed::verify_embedding(sys, k.A, gens, 6);
        if (full) {
          c.expect(r.passes(), k.name + " passes");
        } else {
          c.expect(r.diamond.resolvable() && r.basis_injective && r.table_respected,
                   k.name + " shortened keeps the table");
          c.expect(!r.generators_generate, k.name + " shortened stops generating");
        }
      }
    }
  }

  void word_families(Check& c) {
    auto a3 = algebra({"x", "y", "z"});
    auto a2 = algebra({"x", "y"});
    auto family = [](std::size_t n_max, std::function<Word(std::size_t)> const& w) {
      std::vector<Word> out;
      for (std::size_t n = 0; n <= n_max; ++n) {
        out.push_back(w(n));
      }
      return out;
    };
    auto ambiguities = [](AlgebraPtr const& a, std::vector<Word> const& ws) {
      std::vector<rewrite::Rule> rules;
      for (auto const& w : ws) {
        rules.push_back({w, FreePoly(a)});
      }
      return rewrite::find_ambiguities(rewrite::ReductionSystem(a, rules)).size();
    };
    auto xyz = family(50, embed::three_gen_word);
    auto two = family(50, embed::two_gen_word);
    auto xyx = family(50, [](std::size_t n) {
      Word w{0};
      for (std::size_t i = 0; i < n; ++i) {
        w.push_back(1);
      }
      w.push_back(0);
      return w;
    });
    c.expect(embed::check_word_family(xyz).passes(), "x y^n z passes");
    c.expect(ambiguities(a3, xyz) == 0, "x y^n z has no ambiguities");
    c.expect(embed::check_word_family(two).passes(), "x^2 y^(n+1) x y passes");
    c.expect(ambiguities(a2, two) == 0, "x^2 y^(n+1) x y has no ambiguities");
    auto bad = embed::check_word_family(xyx);
    c.expect(!bad.passes() && bad.witness.has_value(), "x y^n x fails with a witness");
    if (bad.witness) {
      // Re-verify: a final part of `first` of length pos is an initial part
      // of `second`.
      auto const& w  = *bad.witness;
      auto const  u  = xyx[w.first].letters();
      auto const  v  = xyx[w.second].letters();
      bool        ok = w.kind == embed::FamilyWitness::Kind::overlap && w.pos > 0
                && w.pos < std::min(u.size(), v.size())
                && std::equal(u.end() - static_cast<long>(w.pos), u.end(), v.begin());
      if (w.kind == embed::FamilyWitness::Kind::subword) {
        ok = oracle::has_factor(u, v) && w.first != w.second;
      }
      c.expect(ok, "x y^n x witness re-verifies");
    }
    c.expect(ambiguities(a2, xyx) > 0, "x y^n x has ambiguities");
  }

  void isolation(Check& c) {
    auto make = [](embed::FamilyExponent const& f, std::size_t N) {
      std::vector<Word> ws;
      for (std::size_t n = 1; n <= N; ++n) {
        ws.push_back(embed::family_word(n, f));
      }
      return semigroup::WordFamily(Alphabet({"x", "y"}), ws);
    };
    for (auto const& [name, f] :
         std::vector<std::pair<std::string, embed::FamilyExponent>>{
             {"f=1", embed::exponent_one}, {"f=n", embed::exponent_n}}) {
      auto F = make(f, 3);
      c.expect(semigroup::is_isolated(F, 12).isolated, name + " isolated at 12");
      c.expect(semigroup::unique_factorization_check(F, 12).unique, name + " unique at 12");
    }
    semigroup::WordFamily sq(Alphabet({"x", "y"}), {Word{0, 0}});
    auto                  v = semigroup::is_isolated(sq, 12);
    c.expect(!v.isolated && v.witness && v.witness->left == Word{0}
                 && v.witness->middle == Word{0, 0} && v.witness->right == Word{0},
             "<x^2> refuted by (x, x^2, x)");

    std::mt19937_64                            rng(5);
    std::uniform_int_distribution<std::size_t> n(1, 6), len(1, 6);
    for (int trial = 0; trial < 1000; ++trial) {
      auto                     f = trial % 2 == 0 ? embed::FamilyExponent(embed::exponent_n)
                                                  : embed::FamilyExponent(embed::exponent_one);
      std::vector<std::size_t> seq;
      Word                     w;
      for (std::size_t k = len(rng); seq.size() < k;) {
        seq.push_back(n(rng));
        w *= embed::family_word(seq.back(), f);
      }
      c.expect(semigroup::factorize_xy_family(w, f, 6) == seq, "factorize round trip");
    }
    c.note("1000 factorizations");
  }

  void monomial_ideals(Check& c) {
    std::vector<Word> fam;
    for (std::size_t n = 1; n <= 3; ++n) {
      fam.push_back(embed::family_word(n, embed::exponent_n));
    }
    auto                  a = algebra({"x", "y"});
    std::vector<FreePoly> sub;
    for (auto const& w : fam) {
      sub.push_back(FreePoly(a, w));
    }
    std::mt19937_64                            rng(6);
    std::uniform_int_distribution<std::size_t> pick(0, 2), count(1, 3), factors(1, 2);
    std::size_t                                total = 0;
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<FreePoly> ideal;
      for (std::size_t k = count(rng); ideal.size() < k;) {
        Word w;
        for (std::size_t f = factors(rng), i = 0; i < f; ++i) {
          w *= fam[pick(rng)];
        }
        if (w.size() <= 8) {
          ideal.push_back(FreePoly(a, w));
        }
      }
      auto v = semigroup::check_ideal_extension(sub, ideal, false, 8);
      c.expect(v.holds && !v.witness, "monomial ideal extends");
      c.expect(v.dim_intersection == v.dim_ideal, "J cap A equals I");
      total += v.dim_ideal;
    }
    c.expect(total > 20, "ideals are not trivially small");
    c.note("20 ideals at degree 8, total dim I_8 " + std::to_string(total));
  }

  tensorring::ZAlgebraPtr torsion() {
    using namespace tensorring;
    auto module = std::make_shared<FgAbGroup const>(2, IntMatrix::from_rows({{0, 2}}));
    return std::make_shared<ZAlgebra const>(
        module, Vec{1, 0}, std::vector<Vec>{{1, 0}, {0, 1}, {0, 1}, {0, 0}},
        std::vector<std::string>{"1", "u"});
  }

  void torsion_ring(Check& c) {
    using namespace tensorring;
    auto                      A = torsion();
    std::vector<Vec>          S{{0, 1}, {1, 1}, {1, 0}};
    std::vector<BimoduleRule> rules;
    for (std::size_t n = 0; n < S.size(); ++n) {
      rules.push_back(xyz_rule(A, S[n], n));
    }
    TensorRing R(A, Alphabet({"x", "y", "z"}), rules);
    // Structure constants of Z[u]/(2u, u^2) by hand: 1 1 = 1, 1 u = u 1 = u,
    // u u = 0.
    std::vector<Vec> expected{{1, 0}, {0, 1}, {0, 1}, {0, 0}};
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) {
        auto p = reduce_graded(R, R.mul(R.scalar(A->generator(i)), R.scalar(A->generator(j))));
        c.expect(p == R.scalar(expected[i * 2 + j]), "epsilon table entry");
      }
    }
    c.expect(R.scalar(Vec{0, 2}) == GradedElement{}, "2u vanishes");

    std::mt19937_64                            rng(7);
    std::uniform_int_distribution<long>        co(-2, 2);
    std::uniform_int_distribution<std::size_t> len(0, 3), letter(0, 2);
    for (int trial = 0; trial < 200; ++trial) {
      GradedElement e;
      for (int k = 0; k < 3; ++k) {
        Word w;
        for (std::size_t n = len(rng); w.size() < n;) {
          w.push_back(static_cast<Letter>(letter(rng)));
        }
        std::vector<Vec> slots;
        for (std::size_t i = 0; i <= w.size(); ++i) {
          slots.push_back(Vec{co(rng), co(rng)});
        }
        e = R.sum(e, R.pure(w, slots));
      }
      auto det = reduce_graded(R, e);
      for (int order = 0; order < 3; ++order) {
        c.expect(R.reduce(e, 1'000'000, RewriteOrder::random, &rng) == det,
                 "order independence");
      }
    }

    std::uniform_int_distribution<std::size_t> dim(1, 4);
    std::uniform_int_distribution<long>        entry(-6, 6);
    for (int trial = 0; trial < 500; ++trial) {
      IntMatrix M(dim(rng), dim(rng));
      for (std::size_t i = 0; i < M.rows(); ++i) {
        for (std::size_t j = 0; j < M.cols(); ++j) {
          M(i, j) = entry(rng);
        }
      }
      auto snf = smith_normal_form(M);
      c.expect(snf.U * M * snf.V == snf.D, "U M V = D");
      c.expect(snf.D.is_diagonal(), "D diagonal");
      auto ud = oracle::cofactor_det([&] {
        std::vector<std::vector<Integer>> m(snf.U.rows(), std::vector<Integer>(snf.U.cols()));
        for (std::size_t i = 0; i < m.size(); ++i) {
          for (std::size_t j = 0; j < m[i].size(); ++j) {
            m[i][j] = snf.U(i, j);
          }
        }
        return m;
      }());
      auto vd = determinant(snf.V);
      c.expect((ud == 1 || ud == -1) && (vd == 1 || vd == -1), "unimodular");
      c.expect(snf.V * snf.V_inverse == IntMatrix::identity(M.cols()), "V inverse");
      auto diag = snf.diagonal();
      for (std::size_t k = 0; k + 1 < diag.size(); ++k) {
        bool divides = diag[k] == 0 ? diag[k + 1] == 0 : diag[k + 1] % diag[k] == 0;
        c.expect(diag[k] >= 0 && divides, "divisibility chain");
      }
      if (M.rows() <= 3 && M.cols() <= 3) {
        std::vector<std::vector<Integer>> m(M.rows(), std::vector<Integer>(M.cols()));
        for (std::size_t i = 0; i < M.rows(); ++i) {
          for (std::size_t j = 0; j < M.cols(); ++j) {
            m[i][j] = M(i, j);
          }
        }
        std::vector<Integer> nonzero;
        for (auto const& d : diag) {
          if (d != 0) {
            nonzero.push_back(d);
          }
        }
        c.expect(nonzero == oracle::minors_invariant_factors(m), "gcd-of-minors oracle");
      }
    }
    c.note("200 elements, 500 matrices");
  }

  void a0a1(Check& c) {
    using namespace tensorring;
    auto quadratic = [](long q, std::string const& t) {
      auto module = std::make_shared<FgAbGroup const>(FgAbGroup::free(2, Domain::rationals));
      return std::make_shared<ZAlgebra const>(
          module, Vec{1, 0}, std::vector<Vec>{{1, 0}, {0, 1}, {0, 1}, {q, 0}},
          std::vector<std::string>{"1", t});
    };
    auto       A0 = quadratic(2, "t");
    auto       A1 = quadratic(0, "g");
    ZModuleMap phi(A1->module(), A0->module(), {Vec{1, 0}, Vec{0, 1}});
    auto       con  = build_A0A1(A0, A1, phi, Vec{1, 0});
    auto       want = [&](Vec const& a) { return con.ring->scalar(con.embed0(phi.apply(a))); };
    for (std::size_t i = 0; i < 2; ++i) {
      c.expect(con.x_a_z(A1->generator(i)) == want(A1->generator(i)), "basis element");
    }
    std::mt19937_64                     rng(8);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
    for (int trial = 0; trial < 100; ++trial) {
      Vec a(2);
      for (auto& e : a) {
        e = Rational(num(rng), den(rng));
        e.canonicalize();
      }
      c.expect(con.x_a_z(a) == want(a), "random element");
    }
  }

  void coproducts(Check& c) {
    using namespace coproduct;
    for (std::size_t n = 0; n <= 20; ++n) {
      c.expect(alternating_word_count(1, 1, n) == Integer(static_cast<unsigned long>(2 * n + 1)),
               "2n+1");
    }
    for (std::size_t d1 = 1; d1 <= 3; ++d1) {
      for (std::size_t d2 = 1; d2 <= 3; ++d2) {
        auto counts = alternating_word_counts(d1, d2, 10);
        for (std::size_t n = 0; n <= 10; ++n) {
          auto brute = oracle::count_alternating(d1, d2, n);
          c.expect(counts[n] == Integer(static_cast<unsigned long>(brute)), "brute count");
        }
      }
    }
    auto sq = embed::AlgebraPresentation::from_text("Q", {"m1", "m2"}, true,
                                                    {"0", "0", "0", "0"});
    auto tr = embed::AlgebraPresentation::from_text("Q", {"u", "u2"}, true,
                                                    {"u2", "0", "0", "0"});
    auto x  = algebra({"x"});
    Coproduct B(DecomposedAlgebra::factor_one(sq),
                DecomposedAlgebra::factor_two(tr, {poly(x, "x"), poly(x, "x^2")}, "u"));
    auto r = tensor_subalgebra(B, 4);
    c.expect(r.dims == std::vector<std::size_t>{2, 4, 8, 16}, "dims (dim M1)^d");
    c.expect(r.dims_match && r.shape_ok, "shape");
  }

  QMatrix random_matrix(std::mt19937_64& rng, std::size_t d) {
    std::uniform_int_distribution<long> e(-3, 3), den(1, 3);
    QMatrix                             m(d, d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        Rational q(e(rng), den(rng));
        q.canonicalize();
        m(i, j) = q;
      }
    }
    return m;
  }

  void realization(Check& c) {
    using namespace oprealize;
    std::mt19937_64 rng(10);
    for (std::size_t d = 1; d <= 3; ++d) {
      for (std::size_t m = 0; m <= 5; ++m) {
        TruncatedDirectSum   M(8, d);
        std::vector<QMatrix> s;
        for (std::size_t i = 0; i <= m; ++i) {
          s.push_back(random_matrix(rng, d));
        }
        auto v = check_relations(build_shift_operators(M, s), M, s);
        c.expect(v.holds && v.checked_blocks > 0, "relations exact");
      }
    }

    auto A   = cube_roots();
    auto S   = parse_all(A, {"t", "1 + t2"});
    auto sys = embed::build_three_gen(A, S);
    auto R   = realize(A, S, 8);
    auto v   = cross_validate(sys, R, sample_pairs(sys, 500, 4, rng), 4);
    c.expect(v.passes() && v.pairs == 500, "cross validation");
    c.note(std::to_string(v.compared) + " of 500 pairs compared");

    auto Q = embed::AlgebraPresentation::from_text("Q", {}, true, {});
    auto q = matrix_two_generators(Q, {Q.parse("1")}, 6);
    c.expect(q.target == 9 && q.full(), "Q reaches 9");
    auto D = embed::AlgebraPresentation::from_text("Q", {"t"}, true, {"0"});
    auto r = matrix_two_generators(D, {D.parse("t")}, 6);
    c.expect(r.target == 18 && r.full(), "Q[t]/(t^2) reaches 18");
  }

  void engine(Check& c) {
    auto sq = sqrt2();
    auto cu = cube_roots();
    auto qt = CoeffRing::parse("Q[t]");
    std::vector<std::pair<std::string, rewrite::ReductionSystem>> systems{
        {"sqrt2 three-gen", embed::build_three_gen(sq, parse_all(sq, {"1", "t"}))},
        {"sqrt2 two-gen", embed::build_two_gen(sq, parse_all(sq, {"1", "t"}))},
        {"cube three-gen", embed::build_three_gen(cu, parse_all(cu, {"t"}))},
        {"cube two-gen", embed::build_two_gen(cu, parse_all(cu, {"t", "t2"}))},
        {"central", embed::build_central(CoeffRing::rationals(), qt,
                                         {qt.indeterminate(0), qt.indeterminate(0, 2)})},
    };
    std::mt19937_64 rng(11);
    for (auto const& [name, sys] : systems) {
      c.expect(rewrite::check_diamond(sys).resolvable(), name + " confluent");
      for (int trial = 0; trial < 500; ++trial) {
        auto p  = random_poly(sys.algebra(), rng, 6);
        auto q  = random_poly(sys.algebra(), rng, 6);
        auto np = rewrite::normal_form(p, sys);
        auto nq = rewrite::normal_form(q, sys);
        c.expect(rewrite::is_irreducible(np, sys), name + " irreducible");
        c.expect(rewrite::normal_form_random(p, sys, rng) == np, name + " strategy");
        c.expect(rewrite::normal_form(p + q, sys) == np + nq, name + " additive");
        c.expect(rewrite::normal_form(p * q, sys) == rewrite::normal_form(np * nq, sys),
                 name + " multiplicative");
      }
    }
    c.note("500 polynomials per system");

    auto shirshov = system(algebra({"x", "y"}), {{"x.y.x", "0"}, {"x.y.y.x", "1"}});
    for (auto const* sys :
         {&shirshov, &systems[2].second, &systems[3].second, &systems[4].second}) {
      std::vector<std::vector<Letter>> lhs;
      for (auto const& r : sys->rules()) {
        lhs.push_back(r.lhs.letters());
      }
      auto words = rewrite::irreducible_words(*sys, 8);
      c.expect(words.size() == oracle::count_avoiding(sys->alphabet().size(), lhs, 8),
               "irreducible count");
    }
  }

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"Shirshov counterexample", shirshov},
      {"diamond certification", diamond},
      {"embedding verification", embedding},
      {"word-family certificates", word_families},
      {"isolation and factorization", isolation},
      {"monomial ideal extension", monomial_ideals},
      {"torsion tensor ring and Smith forms", torsion_ring},
      {"A0/A1 construction", a0a1},
      {"coproduct growth and tensor subalgebra", coproducts},
      {"operator realization", realization},
      {"engine properties", engine},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    auto  start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (std::exception const& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all         = all && c.ok();
    std::cout << "criterion " << (i + 1) << " " << (c.ok() ? "PASS" : "FAIL") << "  "
              << criteria[i].first << " (" << c.summary() << "; " << std::fixed
              << std::setprecision(2) << secs << " s)" << std::endl;
  }
  return all ? 0 : 1;
}
