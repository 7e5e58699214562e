#ifndef NCALG_EMBED_HPP_
#define NCALG_EMBED_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ncalg/algebra.hpp"
#include "ncalg/rewrite.hpp"

namespace ncalg::embed {

  struct BuildOptions {
    /// Reject non-associative tables. Disable to study the failing
    /// ambiguities of a broken table.
    bool check_associativity = true;
  };

  /// Alphabet {x, y, z} ∪ B with rules b b' -> b*b' for all basis pairs
  /// followed by x y^n z -> s_n for n = 0..N.
  rewrite::ReductionSystem build_three_gen(AlgebraPresentation const& A,
                                           std::vector<FreePoly> const& S,
                                           BuildOptions options = {});

  /// Alphabet {x, y} ∪ B with rules b b' -> b*b' and x^2 y^(n+1) x y -> s_n.
  rewrite::ReductionSystem build_two_gen(AlgebraPresentation const& A,
                                         std::vector<FreePoly> const& S,
                                         BuildOptions options = {});

  /// x y^n z over the alphabet x=0, y=1, z=2.
  Word three_gen_word(std::size_t n);
  /// x^2 y^(n+1) x y over the alphabet x=0, y=1.
  Word two_gen_word(std::size_t n);

  struct FamilyWitness {
    enum class Kind { subword, overlap };
    Kind        kind;
    std::size_t first;   // index of the word containing or overlapping
    std::size_t second;  // index of the contained or overlapped word
    /// subword: offset of `second` inside `first`; overlap: length of the
    /// shared final/initial part.
    std::size_t pos;
  };

  struct FamilyVerdict {
    bool                         subword_free = true;
    bool                         overlap_free = true;
    std::optional<FamilyWitness> witness;

    bool passes() const { return subword_free && overlap_free; }
  };

  /// Checks that no member is a factor of another and that no nonempty
  /// proper final part of a member is an initial part of a member.
  /// Duplicate words count as subwords of each other. Throws InputError on
  /// an empty word.
  FamilyVerdict check_word_family(std::vector<Word> const& words);

  /// System over the commutative ring `ring` (a k0-algebra) with alphabet
  /// {x, y} and scalar rules x^2 y^(n+1) x y -> s_n.
  rewrite::ReductionSystem build_central(CoeffRing const&          k0,
                                         CoeffRing const&          ring,
                                         std::vector<Coeff> const& S);

  using FamilyExponent = std::function<std::size_t(std::size_t)>;

  /// f(n) = 1 and f(n) = n.
  std::size_t exponent_one(std::size_t n);
  std::size_t exponent_n(std::size_t n);

  /// x y^n x^f(n) over the alphabet x=0, y=1.
  Word family_word(std::size_t n, FamilyExponent const& f);

  struct NonunitalEmbedding {
    AlgebraPtr            algebra;     // [k]<x, y>
    std::vector<Word>     dictionary;  // w_n for basis symbol n-1
    std::vector<FreePoly> sub_gens;    // the w_n as polynomials
    /// w_i w_j - sum_k c_k w_k for every table entry b_i b_j = sum c_k b_k.
    std::vector<FreePoly> ideal_gens;
  };

  /// Substitutes basis symbol b_n (n = 1..|B|) by w_n = x y^n x^f(n).
  /// Requires a nonunital A with |B| <= N and f(n) >= 1.
  NonunitalEmbedding build_nonunital(AlgebraPresentation const& A,
                                     FamilyExponent const&      f,
                                     std::size_t                N);

  struct EmbeddingReport {
    rewrite::DiamondReport diamond;
    bool                   basis_injective     = false;
    bool                   table_respected     = false;
    bool                   generators_generate = false;
    std::size_t            degree_checked      = 0;
    /// First basis symbol outside the generated span, if any.
    std::optional<std::string> missing_symbol;
    /// First pair whose product disagrees with the table, if any.
    std::optional<std::pair<std::string, std::string>> table_failure;

    bool passes() const {
      return diamond.resolvable() && basis_injective && table_respected
             && generators_generate;
    }
  };

  /// Confluence, then (a) basis symbols are distinct irreducible words,
  /// (b) nf(b b') equals the table entry, (c) every basis symbol lies in
  /// the span of products of at most `degree` generators. Stops after the
  /// diamond check when it fails. Requires a field coefficient ring.
  EmbeddingReport verify_embedding(rewrite::ReductionSystem const& sys,
                                   AlgebraPresentation const&      A,
                                   std::vector<FreePoly> const&    gens,
                                   std::size_t                     degree,
                                   std::size_t fuel = rewrite::default_fuel);

}  // namespace ncalg::embed

#endif  // NCALG_EMBED_HPP_
