#include "ncalg/embed.hpp"

#include <algorithm>

#include "ncalg/error.hpp"
#include "ncalg/linalg.hpp"

namespace ncalg::embed {

  namespace {

    using rewrite::ReductionSystem;
    using rewrite::Rule;

    AlgebraPtr extended_algebra(AlgebraPresentation const&      A,
                                std::vector<std::string> const& reserved) {
      std::vector<std::string> symbols = reserved;
      for (auto const& b : A.basis().symbols()) {
        if (std::find(reserved.begin(), reserved.end(), b) != reserved.end()) {
          throw InputError("basis symbol " + b + " clashes with a reserved generator");
        }
        symbols.push_back(b);
      }
      return make_algebra(Alphabet(symbols), A.ring());
    }

    std::vector<Rule> table_rules(AlgebraPresentation const& A,
                                  AlgebraPtr const&          alg,
                                  std::size_t                offset,
                                  BuildOptions               options) {
      if (!A.unital()) {
        throw InputError("the embedding builders need a unital algebra");
      }
      if (options.check_associativity) {
        if (auto bad = A.associativity_failure()) {
          auto const& s = A.basis().symbols();
          throw InputError("multiplication table is not associative at "
                           + s[(*bad)[0]] + "." + s[(*bad)[1]] + "." + s[(*bad)[2]]);
        }
      }
      std::vector<Rule> rules;
      auto const        n = A.rank();
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          Word lhs{static_cast<Letter>(offset + i), static_cast<Letter>(offset + j)};
          rules.push_back(
              {lhs, transfer(A.product(static_cast<Letter>(i), static_cast<Letter>(j)), alg)});
        }
      }
      return rules;
    }

    FreePoly sequence_element(AlgebraPresentation const& A,
                              FreePoly const&            s,
                              AlgebraPtr const&          alg) {
      if (!same_algebra(s.algebra(), A.algebra())) {
        throw InputError("generator " + format_poly(s) + " is not an element of A");
      }
      A.check_element(s);
      return transfer(s, alg);
    }

  }  // namespace

  Word three_gen_word(std::size_t n) {
    return Word::letter(0) * Word::power(1, n) * Word::letter(2);
  }

  Word two_gen_word(std::size_t n) {
    return Word::power(0, 2) * Word::power(1, n + 1) * Word{0, 1};
  }

  ReductionSystem build_three_gen(AlgebraPresentation const&   A,
                                  std::vector<FreePoly> const& S,
                                  BuildOptions                 options) {
    if (S.empty()) {
      throw InputError("generating sequence is empty");
    }
    auto alg   = extended_algebra(A, {"x", "y", "z"});
    auto rules = table_rules(A, alg, 3, options);
    for (std::size_t n = 0; n < S.size(); ++n) {
      rules.push_back({three_gen_word(n), sequence_element(A, S[n], alg)});
    }
    return ReductionSystem(alg, std::move(rules));
  }

  ReductionSystem build_two_gen(AlgebraPresentation const&   A,
                                std::vector<FreePoly> const& S,
                                BuildOptions                 options) {
    if (S.empty()) {
      throw InputError("generating sequence is empty");
    }
    auto alg   = extended_algebra(A, {"x", "y"});
    auto rules = table_rules(A, alg, 2, options);
    for (std::size_t n = 0; n < S.size(); ++n) {
      rules.push_back({two_gen_word(n), sequence_element(A, S[n], alg)});
    }
    return ReductionSystem(alg, std::move(rules));
  }

  FamilyVerdict check_word_family(std::vector<Word> const& words) {
    FamilyVerdict v;
    for (auto const& w : words) {
      if (w.empty()) {
        throw InputError("word families may not contain the empty word");
      }
    }
    for (std::size_t i = 0; i < words.size() && v.subword_free; ++i) {
      for (std::size_t j = 0; j < words.size(); ++j) {
        if (i == j) {
          continue;
        }
        auto pos = words[i].find(words[j]);
        if (pos != std::string::npos) {
          v.subword_free = false;
          v.witness      = FamilyWitness{FamilyWitness::Kind::subword, i, j, pos};
          break;
        }
      }
    }
    for (std::size_t i = 0; i < words.size() && v.overlap_free; ++i) {
      for (std::size_t j = 0; j < words.size() && v.overlap_free; ++j) {
        auto const& a = words[i];
        auto const& b = words[j];
        for (std::size_t k = 1; k < std::min(a.size(), b.size()); ++k) {
          if (a.suffix(k) == b.prefix(k)) {
            v.overlap_free = false;
            if (!v.witness) {
              v.witness = FamilyWitness{FamilyWitness::Kind::overlap, i, j, k};
            }
            break;
          }
        }
      }
    }
    return v;
  }

  ReductionSystem build_central(CoeffRing const&          k0,
                                CoeffRing const&          ring,
                                std::vector<Coeff> const& S) {
    if (S.empty()) {
      throw InputError("generating sequence is empty");
    }
    bool over_k0 = ring.kind() == CoeffRing::Kind::polynomials
                       ? k0.kind() == CoeffRing::Kind::rationals
                       : k0 == ring;
    if (!over_k0) {
      throw InputError(ring.name() + " is not an algebra over " + k0.name());
    }
    auto              alg = make_algebra(Alphabet({"x", "y"}), ring);
    std::vector<Rule> rules;
    for (std::size_t n = 0; n < S.size(); ++n) {
      if (!ring.is_canonical(S[n])) {
        throw InputError("generator " + std::to_string(n) + " is not an element of "
                         + ring.name());
      }
      rules.push_back({two_gen_word(n), FreePoly::constant(alg, S[n])});
    }
    return ReductionSystem(alg, std::move(rules));
  }

  std::size_t exponent_one(std::size_t) {
    return 1;
  }

  std::size_t exponent_n(std::size_t n) {
    return n;
  }

  Word family_word(std::size_t n, FamilyExponent const& f) {
    return Word::letter(0) * Word::power(1, n) * Word::power(0, f(n));
  }

  NonunitalEmbedding build_nonunital(AlgebraPresentation const& A,
                                     FamilyExponent const&      f,
                                     std::size_t                N) {
    if (A.unital()) {
      throw InputError("build_nonunital needs a nonunital algebra");
    }
    auto const n = A.rank();
    if (n > N) {
      throw InputError("the algebra has " + std::to_string(n)
                       + " basis symbols, more than N = " + std::to_string(N));
    }
    NonunitalEmbedding out;
    out.algebra = make_algebra(Alphabet({"x", "y"}), A.ring());
    for (std::size_t k = 1; k <= n; ++k) {
      if (f(k) < 1) {
        throw InputError("f(" + std::to_string(k) + ") must be at least 1");
      }
      out.dictionary.push_back(family_word(k, f));
      out.sub_gens.emplace_back(out.algebra, out.dictionary.back());
    }
    auto const& R = A.ring();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        FreePoly g(out.algebra, out.dictionary[i] * out.dictionary[j]);
        for (auto const& [w, c] : A.product(static_cast<Letter>(i), static_cast<Letter>(j)).terms()) {
          g.add_term(out.dictionary[w[0]], R.neg(c));
        }
        out.ideal_gens.push_back(std::move(g));
      }
    }
    return out;
  }

  EmbeddingReport verify_embedding(ReductionSystem const&       sys,
                                   AlgebraPresentation const&   A,
                                   std::vector<FreePoly> const& gens,
                                   std::size_t                  degree,
                                   std::size_t                  fuel) {
    (void)ScalarField::of(sys.ring());
    EmbeddingReport report;
    report.degree_checked = degree;
    report.diamond        = rewrite::check_diamond(sys, fuel);
    if (!report.diamond.resolvable()) {
      return report;
    }
    auto const&       alg = sys.algebra();
    std::vector<Word> letters;
    for (auto const& b : A.basis().symbols()) {
      if (!sys.alphabet().has(b)) {
        throw InputError("basis symbol " + b + " is not in the system alphabet");
      }
      letters.push_back(Word::letter(sys.alphabet().letter(b)));
    }

    report.basis_injective = std::none_of(letters.begin(), letters.end(), [&](Word const& w) {
      return sys.is_reducible(w);
    });

    report.table_respected = true;
    for (std::size_t i = 0; i < letters.size() && report.table_respected; ++i) {
      for (std::size_t j = 0; j < letters.size(); ++j) {
        auto nf   = rewrite::normal_form(FreePoly(alg, letters[i] * letters[j]), sys, fuel);
        auto want = transfer(A.product(static_cast<Letter>(i), static_cast<Letter>(j)), alg);
        if (!(nf == want)) {
          report.table_respected = false;
          report.table_failure   = {A.basis().symbols()[i], A.basis().symbols()[j]};
          break;
        }
      }
    }

    auto span                  = rewrite::subalgebra_span(gens, sys, degree, fuel);
    report.generators_generate = true;
    for (std::size_t i = 0; i < letters.size(); ++i) {
      if (!span.contains(FreePoly(alg, letters[i]))) {
        report.generators_generate = false;
        report.missing_symbol      = A.basis().symbols()[i];
        break;
      }
    }
    return report;
  }

}  // namespace ncalg::embed
