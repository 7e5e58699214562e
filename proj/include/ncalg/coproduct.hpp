#ifndef NCALG_COPRODUCT_HPP_
#define NCALG_COPRODUCT_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ncalg/algebra.hpp"
#include "ncalg/linalg.hpp"

namespace ncalg::coproduct {

  /// Which summand of B a letter belongs to: M1, or one of kx, kx^2, M2
  /// inside M2' = kx + kx^2 + M2.
  enum class SummandClass { M1, X, X2, M2 };

  /// A finite-dimensional Q-algebra split as Q ⊕ M.
  ///
  /// Factor 1 uses the given basis: M is spanned by the basis symbols and
  /// the retraction is the unit coordinate. Factor 2 carries a surjection
  /// psi onto Q[x]/(x^3) and a lift of x; its M-basis is rebuilt as
  /// {lift, lift^2} followed by a basis of ker psi.
  class DecomposedAlgebra {
   public:
    enum class Role { factor_one, factor_two };

    struct Product {
      Rational              scalar;
      std::vector<Rational> part;  // coordinates over the M-basis
      friend bool operator==(Product const&, Product const&) = default;
    };

    static DecomposedAlgebra factor_one(embed::AlgebraPresentation const& A);
    /// `psi[i]` is the image of basis symbol i as a polynomial in one
    /// variable of degree <= 2 (higher terms vanish); `lift` names the
    /// basis symbol chosen as the preimage of x.
    static DecomposedAlgebra factor_two(embed::AlgebraPresentation const& A,
                                        std::vector<FreePoly> const&      psi,
                                        std::string const&                lift);

    Role                            role() const noexcept { return _role; }
    std::size_t                     dim() const noexcept { return _names.size(); }
    std::vector<std::string> const& names() const noexcept { return _names; }
    std::vector<SummandClass> const& classes() const noexcept { return _classes; }
    /// Each M-basis vector in the coordinates of the original basis
    /// {1} ∪ B.
    std::vector<std::vector<Rational>> const& original() const noexcept {
      return _original;
    }
    Product const& product(std::size_t i, std::size_t j) const {
      return _table[i * dim() + j];
    }

   private:
    Role                               _role = Role::factor_one;
    std::vector<std::string>           _names;
    std::vector<SummandClass>          _classes;
    std::vector<std::vector<Rational>> _original;
    std::vector<Product>               _table;
  };

  /// Words over the combined alphabet: letters 0..d1-1 are the M1-basis,
  /// d1..d1+d2-1 the M2'-basis.
  using Element = std::map<Word, Rational, DeglexGreater>;

  /// The coproduct B = A1 ⊔ A2 on its alternating-word basis.
  class Coproduct {
   public:
    Coproduct(DecomposedAlgebra A1, DecomposedAlgebra A2);

    DecomposedAlgebra const& first() const noexcept { return _A1; }
    DecomposedAlgebra const& second() const noexcept { return _A2; }
    std::size_t              d1() const noexcept { return _A1.dim(); }
    std::size_t              d2() const noexcept { return _A2.dim(); }
    Alphabet const&          alphabet() const noexcept { return _alphabet; }

    /// 1 or 2.
    int          factor_of(Letter l) const { return l < d1() ? 1 : 2; }
    SummandClass summand_class(Letter l) const;
    std::vector<SummandClass> summand(Word const& w) const;
    bool         is_alternating(Word const& w) const;
    Letter       m1_letter(std::size_t i) const { return static_cast<Letter>(i); }
    Letter       m2_letter(std::size_t i) const { return static_cast<Letter>(d1() + i); }
    /// The letter of the lift x in the M2'-basis.
    Letter       x_letter() const { return m2_letter(0); }

    Element one() const { return {{Word(), Rational(1)}}; }
    Element word(Word const& w) const;
    /// Product with straightening at same-factor junctions.
    Element mul(Element const& u, Element const& v) const;
    Element add(Element const& u, Element const& v, Rational const& c = 1) const;
    std::string format(Element const& e) const;

   private:
    void straighten(Word const& a, Word const& b, Rational const& c, Element& out) const;

    DecomposedAlgebra _A1;
    DecomposedAlgebra _A2;
    Alphabet          _alphabet;
  };

  /// Number of alternating words of length <= n with d1 and d2 letters in
  /// the two factors.
  Integer alternating_word_count(std::size_t d1, std::size_t d2, std::size_t n);
  /// Same count for every length bound 0..n.
  std::vector<Integer> alternating_word_counts(std::size_t d1, std::size_t d2, std::size_t n);

  struct TensorSubalgebraReport {
    /// dims[d-1]: dimension of the span of products of d generators x m x.
    std::vector<std::size_t> dims;
    bool                     dims_match = true;  // dims[d-1] = d1^d
    bool                     shape_ok   = true;  // words x M1 x^2 M1 ... M1 x
    /// Bases of the graded pieces.
    std::vector<std::vector<Element>> bases;
  };

  /// Graded pieces of [k]<x M1 x> inside B up to `degree`.
  TensorSubalgebraReport tensor_subalgebra(Coproduct const& B, std::size_t degree);

  /// The generators x m x for the M1-basis.
  std::vector<Element> tensor_generators(Coproduct const& B);

  struct ClosureFailure {
    Element u;
    Element v;
    Element product;
  };

  struct ClosureVerdict {
    std::size_t                   samples  = 0;
    std::size_t                   two_way  = 0;  // samples with an M1·M1 junction
    std::optional<ClosureFailure> failure;
    bool passes() const { return !failure.has_value(); }
  };

  /// Products of random summand-pure elements of length <= degree land in
  /// the summand predicted by the junction classes, or in the two
  /// summands predicted at an M1·M1 junction.
  ClosureVerdict summand_closure_check(Coproduct const& B,
                                       std::size_t      samples,
                                       std::size_t      degree,
                                       std::mt19937_64& rng);

  /// Summands a product of elements from summands `u` and `v` may meet.
  std::vector<std::vector<SummandClass>> predicted_summands(
      std::vector<SummandClass> const& u, std::vector<SummandClass> const& v);

  struct CoproductIdealVerdict {
    bool                   holds;  // up to `degree`
    std::size_t            degree;
    std::optional<Element> witness;
    std::size_t            dim_subalgebra   = 0;
    std::size_t            dim_ideal        = 0;
    std::size_t            dim_ambient      = 0;
    std::size_t            dim_intersection = 0;
  };

  /// Truncated ideal extension of A = [k]<x M1 x> in B. A_d and I_d use
  /// generator degree <= d; J uses t g t' over alternating words with
  /// |t| + len(g) + |t'| <= 3d. `ideal_gens` must lie in A_d.
  CoproductIdealVerdict check_ideal_extension(Coproduct const&            B,
                                              std::vector<Element> const& ideal_gens,
                                              std::size_t                 degree,
                                              std::size_t max_vectors = 2'000'000);

}  // namespace ncalg::coproduct

#endif  // NCALG_COPRODUCT_HPP_
