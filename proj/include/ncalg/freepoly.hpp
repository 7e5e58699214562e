#ifndef NCALG_FREEPOLY_HPP_
#define NCALG_FREEPOLY_HPP_

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ncalg/coeff.hpp"
#include "ncalg/word.hpp"

namespace ncalg {

  /// The free algebra k<X>: an alphabet together with a coefficient ring.
  struct FreeAlgebra {
    Alphabet  alphabet;
    CoeffRing ring;

    friend bool operator==(FreeAlgebra const&, FreeAlgebra const&) = default;
  };

  using AlgebraPtr = std::shared_ptr<FreeAlgebra const>;

  /// Throws InputError when a ring indeterminate shares a name with a symbol.
  AlgebraPtr make_algebra(Alphabet alphabet, CoeffRing ring);

  /// A finite linear combination of words with nonzero coefficients.
  ///
  /// Terms are kept in a hash map; an order is only imposed by
  /// sorted_terms() and by formatting. Two polynomials compare equal iff
  /// their term maps are equal.
  class FreePoly {
   public:
    using TermMap = std::unordered_map<Word, Coeff, WordHash>;

    explicit FreePoly(AlgebraPtr algebra);
    FreePoly(AlgebraPtr algebra, Word const& w);
    FreePoly(AlgebraPtr algebra, Word const& w, Coeff const& c);

    static FreePoly constant(AlgebraPtr algebra, Coeff const& c) {
      return FreePoly(std::move(algebra), Word(), c);
    }
    static FreePoly one(AlgebraPtr algebra) {
      auto c = algebra->ring.one();
      return FreePoly(std::move(algebra), Word(), c);
    }

    AlgebraPtr const& algebra() const noexcept { return _algebra; }
    CoeffRing const&  ring() const noexcept { return _algebra->ring; }
    Alphabet const&   alphabet() const noexcept { return _algebra->alphabet; }
    TermMap const&    terms() const noexcept { return _terms; }

    bool        is_zero() const noexcept { return _terms.empty(); }
    std::size_t size() const noexcept { return _terms.size(); }
    /// Coefficient of `w` (zero when absent).
    Coeff coeff(Word const& w) const;
    /// Longest word length; 0 for the zero polynomial.
    std::size_t degree() const;
    /// Largest word in the monomial order. Precondition: nonzero.
    Word leading_word() const;
    /// Terms in descending monomial order.
    std::vector<std::pair<Word, Coeff>> sorted_terms() const;

    /// Adds c*w, dropping the term if it cancels.
    void add_term(Word const& w, Coeff const& c);

    FreePoly& operator+=(FreePoly const& other);
    FreePoly& operator-=(FreePoly const& other);
    FreePoly  operator-() const;
    FreePoly  scaled(Coeff const& c) const;
    /// u * this * v for words u, v.
    FreePoly sandwiched(Word const& u, Word const& v) const;

    friend FreePoly operator+(FreePoly a, FreePoly const& b) { return a += b; }
    friend FreePoly operator-(FreePoly a, FreePoly const& b) { return a -= b; }
    friend FreePoly operator*(FreePoly const& a, FreePoly const& b);

    friend bool operator==(FreePoly const& a, FreePoly const& b);

   private:
    void check_compatible(FreePoly const& other) const;

    AlgebraPtr _algebra;
    TermMap    _terms;
  };

  /// True when both operands live in the same free algebra.
  bool same_algebra(AlgebraPtr const& a, AlgebraPtr const& b);

  /// The same polynomial over `target`, matching symbols by name. Throws
  /// InputError when a symbol is missing or the rings differ.
  FreePoly transfer(FreePoly const& p, AlgebraPtr const& target);

  FreePoly poly_add(FreePoly const& p, FreePoly const& q);
  FreePoly poly_mul(FreePoly const& p, FreePoly const& q);

  /// Grammar: signed terms joined by + and -, each term a `*`-product of
  /// factors; a factor is a rational `p` or `p/q`, a ring indeterminate
  /// with optional `^k`, or a word `sym(.sym)*` (symbols may carry `^k`).
  /// `1` denotes the empty word. Throws ParseError.
  FreePoly parse_poly(std::string_view text, AlgebraPtr const& algebra);

  /// Deterministic text, words in descending monomial order; "0" for zero.
  std::string format_poly(FreePoly const& p);

}  // namespace ncalg

#endif  // NCALG_FREEPOLY_HPP_
