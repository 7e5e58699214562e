#ifndef NCALG_ALGEBRA_HPP_
#define NCALG_ALGEBRA_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ncalg/freepoly.hpp"

namespace ncalg::embed {

  /// A k-algebra free on the basis {1} ∪ B (unital) or on B (nonunital),
  /// given by structure constants.
  ///
  /// Elements are FreePolys over the alphabet B whose words have length at
  /// most one; the empty word stands for the unit. The table is stored row
  /// major: product(i, j) = b_i * b_j.
  class AlgebraPresentation {
   public:
    /// Validates shapes and supports. Associativity is not checked here so
    /// that broken tables can still be studied; see associativity_failure.
    AlgebraPresentation(AlgebraPtr                        algebra,
                        bool                              unital,
                        std::vector<FreePoly>             table,
                        std::optional<std::vector<Coeff>> augmentation = {});

    /// Convenience constructor; `table` holds |B|^2 polynomial texts.
    static AlgebraPresentation from_text(std::string const&              ring,
                                         std::vector<std::string> const& basis,
                                         bool                            unital,
                                         std::vector<std::string> const& table);

    AlgebraPtr const& algebra() const noexcept { return _algebra; }
    CoeffRing const&  ring() const noexcept { return _algebra->ring; }
    Alphabet const&   basis() const noexcept { return _algebra->alphabet; }
    std::size_t       rank() const noexcept { return basis().size(); }
    bool              unital() const noexcept { return _unital; }
    /// Module rank including the unit when unital.
    std::size_t dimension() const noexcept { return rank() + (_unital ? 1 : 0); }

    FreePoly const& product(Letter i, Letter j) const {
      return _table[static_cast<std::size_t>(i) * rank() + j];
    }
    std::vector<FreePoly> const& table() const noexcept { return _table; }
    std::optional<std::vector<Coeff>> const& augmentation() const noexcept {
      return _augmentation;
    }

    /// Basis element b_i, or the unit.
    FreePoly basis_element(Letter i) const { return FreePoly(_algebra, Word::letter(i)); }
    FreePoly unit() const;

    /// Throws InputError when p has words of length > 1, or a unit
    /// component in the nonunital case.
    void check_element(FreePoly const& p) const;
    FreePoly parse(std::string const& text) const;

    /// Product in the algebra, extended bilinearly from the table.
    FreePoly mul(FreePoly const& a, FreePoly const& b) const;

    /// First basis triple (in lexicographic index order) with
    /// (b b') b'' != b (b' b''), if any.
    std::optional<std::array<Letter, 3>> associativity_failure() const;
    bool is_associative() const { return !associativity_failure().has_value(); }

   private:
    AlgebraPtr                        _algebra;
    bool                              _unital;
    std::vector<FreePoly>             _table;
    std::optional<std::vector<Coeff>> _augmentation;
  };

}  // namespace ncalg::embed

#endif  // NCALG_ALGEBRA_HPP_
