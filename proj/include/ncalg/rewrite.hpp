#ifndef NCALG_REWRITE_HPP_
#define NCALG_REWRITE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ncalg/freepoly.hpp"
#include "ncalg/linalg.hpp"

namespace ncalg::rewrite {

  /// Length-graded lexicographic order over the alphabet order. It is the
  /// only built-in order: total, compatible with concatenation on both sides
  /// and well-founded.
  struct MonomialOrder {
    enum class Kind { deglex };
    Kind kind = Kind::deglex;

    bool less(Word const& a, Word const& b) const {
      return deglex_compare(a, b) < 0;
    }
    friend bool operator==(MonomialOrder const&, MonomialOrder const&) = default;
  };

  struct Rule {
    Word     lhs;
    FreePoly rhs;
  };

  /// An occurrence of rule `rule` at offset `pos` of some word.
  struct Match {
    std::size_t pos;
    std::size_t rule;
    friend bool operator==(Match const&, Match const&) = default;
  };

  /// Rules lhs -> rhs over one free algebra. Construction checks that every
  /// lhs is nonempty and that every word of every rhs lies strictly below
  /// its lhs.
  class ReductionSystem {
   public:
    ReductionSystem(AlgebraPtr algebra,
                    std::vector<Rule> rules,
                    MonomialOrder order = {});

    AlgebraPtr const&        algebra() const noexcept { return _algebra; }
    Alphabet const&          alphabet() const noexcept { return _algebra->alphabet; }
    CoeffRing const&         ring() const noexcept { return _algebra->ring; }
    std::vector<Rule> const& rules() const noexcept { return _rules; }
    MonomialOrder const&     order() const noexcept { return _order; }

    /// Leftmost occurrence of any lhs in w, ties broken by lowest rule index.
    std::optional<Match> leftmost_match(Word const& w) const;
    /// Every occurrence of every lhs, sorted by (pos, rule).
    std::vector<Match> all_matches(Word const& w) const;
    bool               is_reducible(Word const& w) const {
      return leftmost_match(w).has_value();
    }

   private:
    // Trie over left-hand sides; child table is nodes x alphabet size.
    std::int32_t child(std::int32_t node, Letter l) const {
      return _children[static_cast<std::size_t>(node) * _width + l];
    }

    AlgebraPtr                            _algebra;
    std::vector<Rule>                     _rules;
    MonomialOrder                         _order;
    std::size_t                           _width;
    std::vector<std::int32_t>             _children;
    std::vector<std::vector<std::size_t>> _terminal;
  };

  inline constexpr std::size_t default_fuel = 1'000'000;

  /// prefix * rhs * suffix where lhs occurs in w at pos. Throws InputError
  /// if it does not.
  FreePoly reduce_at(Word const& w, std::size_t pos, Rule const& rule);

  struct TraceStep {
    Word        word;
    std::size_t pos;
    std::size_t rule;
  };

  /// Exhaustive reduction with the deterministic strategy: the largest
  /// remaining word is rewritten first, at its leftmost occurrence, by the
  /// lowest-index rule. Throws FuelExhausted after `fuel` single reductions.
  FreePoly normal_form(FreePoly const&        p,
                       ReductionSystem const& sys,
                       std::size_t            fuel  = default_fuel,
                       std::vector<TraceStep>* trace = nullptr);

  /// Reduction with uniformly random choices of term and occurrence. Only
  /// meant for confluence property tests.
  FreePoly normal_form_random(FreePoly const&        p,
                              ReductionSystem const& sys,
                              std::mt19937_64&       rng,
                              std::size_t            fuel = default_fuel);

  /// True when no word of p contains a left-hand side.
  bool is_irreducible(FreePoly const& p, ReductionSystem const& sys);

  struct Ambiguity {
    enum class Kind { overlap, inclusion };
    Kind        kind;
    std::size_t first;       // rule applied at first_pos
    std::size_t second;      // rule applied at second_pos
    Word        witness;
    std::size_t first_pos;
    std::size_t second_pos;
  };

  /// Overlap ambiguities (a nonempty proper suffix of one lhs equals a
  /// nonempty proper prefix of another, self-overlaps included) followed by
  /// inclusion ambiguities (one lhs a factor of another).
  std::vector<Ambiguity> find_ambiguities(ReductionSystem const& sys);

  struct AmbiguityVerdict {
    enum class Status { resolvable, unresolvable, fuel_exhausted };
    Ambiguity               ambiguity;
    Status                  status;
    std::optional<FreePoly> via_first;   // normal form after the first rule
    std::optional<FreePoly> via_second;
  };

  struct DiamondReport {
    std::vector<AmbiguityVerdict> verdicts;

    bool resolvable() const;
    /// First verdict that is not resolvable, if any.
    AmbiguityVerdict const* first_failure() const;
  };

  /// Reduces each ambiguity both ways and compares normal forms. No
  /// completion is attempted.
  DiamondReport check_diamond(ReductionSystem const& sys,
                              std::size_t            fuel = default_fuel);

  /// Words of length <= max_len with no lhs as a factor, in monomial order.
  std::vector<Word> irreducible_words(ReductionSystem const& sys,
                                      std::size_t            max_len);

  /// A finite-dimensional subspace of the free algebra over its scalar
  /// field (Q for polynomial coefficient rings).
  class Span {
   public:
    explicit Span(AlgebraPtr algebra);

    AlgebraPtr const& algebra() const noexcept { return _algebra; }
    std::size_t       dimension() const noexcept { return _space.dimension(); }
    bool              insert(FreePoly const& p);
    bool              contains(FreePoly const& p) const;
    /// Reduced row echelon basis, leading words descending.
    std::vector<FreePoly> basis() const;

   private:
    AlgebraPtr _algebra;
    PolySpace  _space;
  };

  /// Span of the normal forms of all products of 1..degree generators.
  /// The system must be confluent on the explored region; results for
  /// non-confluent systems depend on the reduction strategy.
  Span subalgebra_span(std::vector<FreePoly> const& gens,
                       ReductionSystem const&       sys,
                       std::size_t                  degree,
                       std::size_t                  fuel = default_fuel);

  std::string format_rule(Rule const& r, Alphabet const& alphabet);

}  // namespace ncalg::rewrite

#endif  // NCALG_REWRITE_HPP_
