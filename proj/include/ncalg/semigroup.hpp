#ifndef NCALG_SEMIGROUP_HPP_
#define NCALG_SEMIGROUP_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "ncalg/embed.hpp"
#include "ncalg/freepoly.hpp"

namespace ncalg::semigroup {

  /// Generators of a subsemigroup S of the free semigroup on `alphabet`.
  /// Duplicates are dropped, keeping the first occurrence.
  class WordFamily {
   public:
    WordFamily(Alphabet alphabet, std::vector<Word> words);

    Alphabet const&          alphabet() const noexcept { return _alphabet; }
    std::vector<Word> const& words() const noexcept { return _words; }
    std::size_t              max_length() const noexcept { return _max_length; }

    /// A factorization of w into family words, preferring the lowest index
    /// at each step; none for w outside S (the empty word included).
    std::optional<std::vector<std::size_t>> factorize(Word const& w) const;
    bool contains(Word const& w) const { return factorize(w).has_value(); }
    /// Members of S of length <= bound, sorted by monomial order.
    std::vector<Word> members(std::size_t bound) const;

   private:
    Alphabet          _alphabet;
    std::vector<Word> _words;
    std::size_t       _max_length = 0;
  };

  struct IsolationWitness {
    Word left;    // t
    Word middle;  // s, a member of S
    Word right;   // t'; t s t' is in S but t or t' is outside S ∪ {1}
  };

  struct IsolationVerdict {
    bool                            isolated;  // up to `bound`
    std::size_t                     bound;
    std::optional<IsolationWitness> witness;
  };

  /// Checks t s t' ∈ S => t, t' ∈ S ∪ {1} for all |t s t'| <= bound.
  /// Requires bound >= the longest family word.
  IsolationVerdict is_isolated(WordFamily const& F, std::size_t bound);

  /// Breaks w over {x=0, y=1} before each factor x y and matches every
  /// segment against x y^n x^f(n), 1 <= n <= N. Returns the n of each
  /// segment, or none.
  std::optional<std::vector<std::size_t>> factorize_xy_family(
      Word const& w, embed::FamilyExponent const& f, std::size_t N);

  struct FactorizationClash {
    Word                     word;
    std::vector<std::size_t> first;
    std::vector<std::size_t> second;
  };

  struct UniquenessVerdict {
    bool                              unique;  // up to `bound`
    std::size_t                       bound;
    std::optional<FactorizationClash> clash;
  };

  /// Enumerates index sequences with total length <= bound and reports the
  /// smallest word reached by two of them.
  UniquenessVerdict unique_factorization_check(WordFamily const& F, std::size_t bound);

  struct IdealExtLimits {
    std::size_t max_products = 2'000'000;
  };

  struct IdealExtVerdict {
    bool        holds;  // up to `degree`
    std::size_t degree;
    /// An element of (J ∩ A) outside I, monic, with the smallest leading
    /// word available.
    std::optional<FreePoly> witness;
    std::size_t             dim_subalgebra    = 0;  // A_d
    std::size_t             dim_ideal         = 0;  // I_d
    std::size_t             dim_ambient_ideal = 0;  // J_d
    std::size_t             dim_intersection  = 0;  // J_d ∩ A_d
  };

  /// Degree-truncated ideal extension check for the subalgebra A generated
  /// by `sub_gens` (plus 1 when unital) inside the free algebra.
  ///
  ///   A_d: products of generators of total degree <= d (and 1)
  ///   I_d: a g a' with a, a' ∈ {1} ∪ products, g an ideal generator
  ///   J_d: u g v for words u, v with |u| + deg g + |v| <= d
  ///
  /// The property holds up to d when J_d ∩ A_d ⊆ I_d. Requires a field
  /// coefficient ring, generators of degree >= 1, and ideal generators in
  /// A_d. Throws ResourceLimit past `limits`.
  IdealExtVerdict check_ideal_extension(std::vector<FreePoly> const& sub_gens,
                                        std::vector<FreePoly> const& ideal_gens,
                                        bool                         unital,
                                        std::size_t                  degree,
                                        IdealExtLimits               limits = {});

}  // namespace ncalg::semigroup

#endif  // NCALG_SEMIGROUP_HPP_
