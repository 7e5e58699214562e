#ifndef NCALG_OPREALIZE_HPP_
#define NCALG_OPREALIZE_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ncalg/algebra.hpp"
#include "ncalg/linalg.hpp"
#include "ncalg/rewrite.hpp"

namespace ncalg::oprealize {

  /// Index of a summand of M = ⊕ M_σ: a nonempty finite sequence of
  /// naturals. The weight of (a_1, ..., a_L) is Σ a_k + L − 1, so the
  /// sequence (i) has weight i.
  using Block = std::vector<std::size_t>;

  std::size_t weight(Block const& b);

  /// Truncation of ⊕ M_σ to the blocks of weight at most N − 1, each a
  /// copy of a d-dimensional module. When an algebra is attached, its
  /// basis acts on every block by the given matrices.
  class TruncatedDirectSum {
   public:
    /// Bare d-dimensional blocks.
    TruncatedDirectSum(std::size_t N, std::size_t d);
    /// One d×d matrix per basis symbol of A; the relations of A are
    /// checked exactly (the unit acts as the identity).
    TruncatedDirectSum(std::size_t                       N,
                       embed::AlgebraPresentation const& A,
                       std::vector<QMatrix>              action);
    /// Left regular representation on {1} ∪ B.
    static TruncatedDirectSum regular(std::size_t N, embed::AlgebraPresentation const& A);

    std::size_t N() const noexcept { return _N; }
    std::size_t d() const noexcept { return _d; }
    /// Blocks ordered by weight, then lexicographically.
    std::vector<Block> const& blocks() const noexcept { return _blocks; }
    std::size_t               block_count() const noexcept { return _blocks.size(); }
    std::optional<std::size_t> index(Block const& b) const;

    bool has_action() const noexcept { return _algebra.has_value(); }
    embed::AlgebraPresentation const& algebra() const;
    std::vector<QMatrix> const&       action() const noexcept { return _action; }
    /// Matrix of an element of the attached algebra.
    QMatrix element(FreePoly const& p) const;

   private:
    std::size_t                               _N;
    std::size_t                               _d;
    std::vector<Block>                        _blocks;
    std::map<Block, std::size_t>              _index;
    std::optional<embed::AlgebraPresentation> _algebra;
    std::vector<QMatrix>                      _action;
  };

  /// Sparse block matrix: entry (r, c) maps block c into block r.
  class BlockOperator {
   public:
    BlockOperator(std::size_t blocks, std::size_t d) : _blocks(blocks), _d(d) {}

    static BlockOperator identity(std::size_t blocks, std::size_t d);
    /// The same d×d matrix on every block.
    static BlockOperator diagonal(std::size_t blocks, QMatrix const& m);

    std::size_t blocks() const noexcept { return _blocks; }
    std::size_t d() const noexcept { return _d; }
    std::map<std::pair<std::size_t, std::size_t>, QMatrix> const& entries() const noexcept {
      return _entries;
    }

    /// Zero blocks are never stored.
    void    add(std::size_t row, std::size_t col, QMatrix const& m);
    QMatrix block(std::size_t row, std::size_t col) const;
    QMatrix dense() const;

    BlockOperator&       operator+=(BlockOperator const& o);
    friend BlockOperator operator+(BlockOperator a, BlockOperator const& b) { return a += b; }
    friend BlockOperator operator*(BlockOperator const& a, BlockOperator const& b);
    BlockOperator        scaled(Rational const& c) const;
    friend bool operator==(BlockOperator const&, BlockOperator const&) = default;

    /// Column c of this and of o agree.
    bool agrees_on(BlockOperator const& o, std::size_t col) const;

   private:
    std::size_t                                             _blocks;
    std::size_t                                             _d;
    std::map<std::pair<std::size_t, std::size_t>, QMatrix> _entries;
  };

  struct ShiftOperators {
    BlockOperator x, y, z;
  };

  /// z: M_σ -> M_(0,σ); y: M_(a,…) -> M_(a+1,…); x: M_(i,ρ) -> M_ρ acting
  /// by s_i (zero when i > m or ρ is empty). Maps leaving the truncation
  /// are zero. Requires m + 1 < N so that x y^m z is exact on block (0).
  ShiftOperators build_shift_operators(TruncatedDirectSum const& M,
                                       std::vector<QMatrix> const& s);

  struct RelationFailure {
    std::size_t index;
    Block       block;
    std::size_t row, col;
  };

  struct RelationVerdict {
    bool                           holds = true;
    std::size_t                    checked_blocks = 0;
    std::optional<RelationFailure> failure;
  };

  /// x y^i z = s_i on every block whose trajectory stays inside the
  /// truncation, for all i ≤ m. Exact comparison.
  RelationVerdict check_relations(ShiftOperators const&       ops,
                                  TruncatedDirectSum const&   M,
                                  std::vector<QMatrix> const& s);

  /// The three-generator algebra acting on a truncated direct sum of
  /// copies of a module over A.
  struct Realization {
    TruncatedDirectSum   M;
    std::vector<QMatrix> s;
    ShiftOperators       ops;
  };

  /// Regular module of A with s_i the matrices of S[i].
  Realization realize(embed::AlgebraPresentation const& A,
                      std::vector<FreePoly> const&      S,
                      std::size_t                       N);

  /// Operator of a polynomial over {x, y, z} ∪ B.
  BlockOperator operator_of(Realization const& R, FreePoly const& p);

  struct CrossFailure {
    FreePoly first, second;
    Block    block;
  };

  struct CrossVerdict {
    std::size_t                 pairs    = 0;
    std::size_t                 compared = 0;  // pairs with equal normal forms
    std::size_t                 region   = 0;  // blocks of weight ≤ N−1−degree
    std::optional<CrossFailure> failure;
    bool passes() const { return !failure.has_value(); }
  };

  /// For each pair with equal normal forms in sys, the operators agree on
  /// every block of weight ≤ N − 1 − degree. Words longer than degree are
  /// rejected, as is a degree without headroom.
  CrossVerdict cross_validate(rewrite::ReductionSystem const&                  sys,
                              Realization const&                               R,
                              std::vector<std::pair<FreePoly, FreePoly>> const& pairs,
                              std::size_t                                      degree,
                              std::size_t fuel = rewrite::default_fuel);

  /// Random pairs of words of length ≤ degree over the system alphabet;
  /// every other pair is (w, normal form of w).
  std::vector<std::pair<FreePoly, FreePoly>> sample_pairs(rewrite::ReductionSystem const& sys,
                                                          std::size_t count,
                                                          std::size_t degree,
                                                          std::mt19937_64& rng);

  /// Square matrix with entries in an algebra.
  using AlgebraMatrix = std::vector<std::vector<FreePoly>>;

  struct TwoGenReport {
    AlgebraMatrix            P, Q;
    std::vector<std::size_t> dims;  // span of products of ≤ k factors, k = 0..degree
    std::size_t              target = 0;
    std::optional<std::size_t> full_at;
    bool full() const { return full_at.has_value(); }
  };

  /// P cycles the n + 2 coordinates (e_i -> e_{i+1}); Q has rows
  /// (0, r_1, …, r_n, 0) and (1, 0, …, 0), others zero. The target is
  /// (n + 2)^2 · dim R. R must be over Q or Z/p.
  TwoGenReport matrix_two_generators(embed::AlgebraPresentation const& R,
                                     std::vector<FreePoly> const&      gens,
                                     std::size_t                       degree);

}  // namespace ncalg::oprealize

#endif  // NCALG_OPREALIZE_HPP_
