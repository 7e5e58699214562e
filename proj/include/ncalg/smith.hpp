#ifndef NCALG_SMITH_HPP_
#define NCALG_SMITH_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "ncalg/coeff.hpp"

namespace ncalg::tensorring {

  /// Dense integer matrix.
  class IntMatrix {
   public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : _rows(rows), _cols(cols), _data(rows * cols) {}
    /// Row-major construction; every row must have the same length.
    static IntMatrix from_rows(std::vector<std::vector<long>> const& rows);
    static IntMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return _rows; }
    std::size_t cols() const noexcept { return _cols; }

    Integer& operator()(std::size_t i, std::size_t j) { return _data[i * _cols + j]; }
    Integer const& operator()(std::size_t i, std::size_t j) const {
      return _data[i * _cols + j];
    }

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row[dst] += f * row[src]
    void add_row(std::size_t dst, std::size_t src, Integer const& f);
    /// col[dst] += f * col[src]
    void add_col(std::size_t dst, std::size_t src, Integer const& f);

    friend IntMatrix operator*(IntMatrix const& a, IntMatrix const& b);
    friend bool      operator==(IntMatrix const&, IntMatrix const&) = default;

    bool is_diagonal() const;
    std::string format() const;

   private:
    std::size_t          _rows = 0;
    std::size_t          _cols = 0;
    std::vector<Integer> _data;
  };

  /// Determinant of a square matrix by fraction-free elimination.
  Integer determinant(IntMatrix const& m);

  /// U * M * V = D with U, V unimodular and D diagonal, its diagonal
  /// nonnegative and each entry dividing the next. V_inverse is V^-1.
  struct SmithForm {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;
    IntMatrix V_inverse;

    /// The min(rows, cols) diagonal entries of D.
    std::vector<Integer> diagonal() const;
  };

  /// Pivots on a smallest nonzero absolute value, with row and column swaps.
  SmithForm smith_normal_form(IntMatrix const& M);

}  // namespace ncalg::tensorring

#endif  // NCALG_SMITH_HPP_
