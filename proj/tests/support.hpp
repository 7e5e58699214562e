#ifndef NCALG_TESTS_SUPPORT_HPP_
#define NCALG_TESTS_SUPPORT_HPP_

#include <random>
#include <string>
#include <vector>

#include "ncalg/algebra.hpp"
#include "ncalg/embed.hpp"
#include "ncalg/freepoly.hpp"
#include "ncalg/rewrite.hpp"

namespace ncalg::testing {

  inline AlgebraPtr algebra(std::vector<std::string> symbols,
                            CoeffRing ring = CoeffRing::rationals()) {
    return make_algebra(Alphabet(std::move(symbols)), std::move(ring));
  }

  inline FreePoly poly(AlgebraPtr const& a, std::string const& text) {
    return parse_poly(text, a);
  }

  inline Word word(AlgebraPtr const& a, std::string const& text) {
    return a->alphabet.parse(text);
  }

  inline std::string data_path(std::string const& name) {
    return std::string(NCALG_TEST_DATA) + "/" + name;
  }

  /// Random polynomial with small integer coefficients and words of length
  /// at most max_len.
  inline FreePoly random_poly(AlgebraPtr const& a, std::mt19937_64& rng,
                              std::size_t max_len, std::size_t terms = 4) {
    FreePoly                                   p(a);
    std::uniform_int_distribution<long>        coeff(-3, 3);
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::uniform_int_distribution<std::size_t> letter(0, a->alphabet.size() - 1);
    for (std::size_t t = 0; t < terms; ++t) {
      Word w;
      for (std::size_t n = len(rng); w.size() < n;) {
        w.push_back(static_cast<Letter>(letter(rng)));
      }
      p.add_term(w, a->ring.from_integer(coeff(rng)));
    }
    return p;
  }

  /// Q[t]/(t^2 - 2) on the basis 1, t.
  inline embed::AlgebraPresentation sqrt2() {
    return embed::AlgebraPresentation::from_text("Q", {"t"}, true, {"2"});
  }

  /// Q[t]/(t^3 - 1) on the basis 1, t, t2.
  inline embed::AlgebraPresentation cube_roots() {
    return embed::AlgebraPresentation::from_text("Q", {"t", "t2"}, true,
                                                 {"t2", "1", "1", "t"});
  }

  /// Unital table over {1, b_1, .., b_r} with random entries in -1..1;
  /// entry i*r + j holds the coordinates of b_i b_j, unit first.
  inline std::vector<std::vector<Rational>> random_table(std::mt19937_64& rng, std::size_t r) {
    std::uniform_int_distribution<int>  c(-1, 1);
    std::vector<std::vector<Rational>> t(r * r, std::vector<Rational>(r + 1));
    for (auto& row : t) {
      for (auto& e : row) {
        e = c(rng);
      }
    }
    return t;
  }

  /// Presentation of a unital table in the layout of random_table.
  inline embed::AlgebraPresentation presentation(std::vector<std::vector<Rational>> const& t,
                                                 std::vector<std::string>                 basis) {
    std::size_t           r = basis.size();
    auto                  a = algebra(std::move(basis));
    std::vector<FreePoly> table;
    for (auto const& row : t) {
      FreePoly p(a);
      for (std::size_t k = 0; k <= r; ++k) {
        p.add_term(k == 0 ? Word() : Word::letter(static_cast<Letter>(k - 1)),
                   a->ring.from_rational(row[k]));
      }
      table.push_back(p);
    }
    return embed::AlgebraPresentation(a, true, table);
  }

  /// Q[t]/(t^3 - c2 t^2 - c1 t - c0) on the basis 1, t, t2.
  inline embed::AlgebraPresentation cubic(Rational c0, Rational c1, Rational c2) {
    // t^3 = c0 + c1 t + c2 t2, t^4 = c2 c0 + (c0 + c2 c1) t + (c1 + c2^2) t2
    std::vector<std::vector<Rational>> t{
        {0, 0, 1}, {c0, c1, c2}, {c0, c1, c2}, {c2 * c0, c0 + c2 * c1, c1 + c2 * c2}};
    return presentation(t, {"t", "t2"});
  }

  /// Rules lhs -> rhs from texts over one algebra.
  inline rewrite::ReductionSystem system(AlgebraPtr const&                                      a,
                                         std::vector<std::pair<std::string, std::string>> const& rules) {
    std::vector<rewrite::Rule> rs;
    for (auto const& [l, r] : rules) {
      rs.push_back({word(a, l), poly(a, r)});
    }
    return rewrite::ReductionSystem(a, rs);
  }

}  // namespace ncalg::testing

#endif  // NCALG_TESTS_SUPPORT_HPP_
