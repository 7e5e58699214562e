#ifndef NCALG_COEFF_HPP_
#define NCALG_COEFF_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace ncalg {

  using Integer  = mpz_class;
  using Rational = mpq_class;

  /// Exponent vector of a commutative monomial t1^e1 ... tk^ek.
  using Exponents = std::vector<std::uint32_t>;

  /// Sparse polynomial in commuting indeterminates over Q. Terms are sorted
  /// in descending graded-lex order of exponents and never carry a zero
  /// coefficient.
  struct CommPoly {
    std::vector<std::pair<Exponents, Rational>> terms;

    bool is_zero() const noexcept { return terms.empty(); }
    friend bool operator==(CommPoly const&, CommPoly const&) = default;
  };

  /// Graded-lex comparison of exponent vectors; true when `a` is larger.
  bool exponents_greater(Exponents const& a, Exponents const& b);

  /// An element of some CoeffRing. The representation is only meaningful
  /// together with the ring: scalar kinds use the rational, the polynomial
  /// kind uses the CommPoly.
  class Coeff {
   public:
    Coeff() : _value(Rational(0)) {}
    explicit Coeff(Rational q) : _value(std::move(q)) {}
    explicit Coeff(CommPoly p) : _value(std::move(p)) {}

    bool is_poly() const noexcept {
      return std::holds_alternative<CommPoly>(_value);
    }
    Rational const& scalar() const { return std::get<Rational>(_value); }
    CommPoly const& poly() const { return std::get<CommPoly>(_value); }

    friend bool operator==(Coeff const&, Coeff const&) = default;

    std::size_t hash() const;

   private:
    std::variant<Rational, CommPoly> _value;
  };

  /// The four coefficient rings of the workbench. Dispatch is over a closed
  /// set of kinds; every element produced by a ring method is canonical.
  class CoeffRing {
   public:
    enum class Kind { rationals, integers, integers_mod, polynomials };

    static CoeffRing rationals();
    static CoeffRing integers();
    static CoeffRing integers_mod(Integer m);
    /// Q[t1, ..., tk] with the given indeterminate names.
    static CoeffRing polynomials(std::vector<std::string> indeterminates);

    /// Parses `Q`, `Z`, `Z/m` or `Q[t1,...,tk]`.
    static CoeffRing parse(std::string const& text);

    Kind kind() const noexcept { return _kind; }
    Integer const& modulus() const noexcept { return _modulus; }
    std::vector<std::string> const& indeterminates() const noexcept {
      return _names;
    }
    /// Index of an indeterminate, or -1.
    int indeterminate_index(std::string const& name) const;

    /// True for Q and for Z/p with p prime.
    bool is_field() const;

    std::string name() const;

    Coeff zero() const;
    Coeff one() const;
    Coeff from_integer(long n) const { return from_rational(Rational(n)); }
    /// Throws InputError when q has no image in the ring (Z with a
    /// non-integer, Z/m with a denominator not invertible mod m).
    Coeff from_rational(Rational const& q) const;
    /// The indeterminate t_i; polynomial kind only.
    Coeff indeterminate(std::size_t i, std::uint32_t power = 1) const;

    Coeff add(Coeff const& a, Coeff const& b) const;
    Coeff sub(Coeff const& a, Coeff const& b) const;
    Coeff mul(Coeff const& a, Coeff const& b) const;
    Coeff neg(Coeff const& a) const;
    /// Field kinds only; throws InputError on zero or non-fields.
    Coeff inverse(Coeff const& a) const;

    bool is_zero(Coeff const& a) const;
    bool is_one(Coeff const& a) const;

    /// Checks that `a` is in canonical form for this ring.
    bool is_canonical(Coeff const& a) const;

    /// Text of a coefficient; polynomial coefficients may contain several
    /// terms joined by " + " / " - ".
    std::string format(Coeff const& a) const;

    friend bool operator==(CoeffRing const& a, CoeffRing const& b) {
      return a._kind == b._kind && a._modulus == b._modulus
             && a._names == b._names;
    }

   private:
    CoeffRing(Kind kind, Integer modulus, std::vector<std::string> names)
        : _kind(kind), _modulus(std::move(modulus)), _names(std::move(names)) {}

    Rational reduce_scalar(Rational q) const;

    Kind                     _kind;
    Integer                  _modulus;
    std::vector<std::string> _names;
  };

  std::string format_rational(Rational const& q);

}  // namespace ncalg

#endif  // NCALG_COEFF_HPP_
