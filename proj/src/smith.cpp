#include "ncalg/smith.hpp"

#include <optional>
#include <utility>

#include "ncalg/error.hpp"

namespace ncalg::tensorring {

  IntMatrix IntMatrix::from_rows(std::vector<std::vector<long>> const& rows) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    IntMatrix   m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) {
        throw InputError("ragged integer matrix");
      }
      for (std::size_t j = 0; j < cols; ++j) {
        m(i, j) = rows[i][j];
      }
    }
    return m;
  }

  IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = 1;
    }
    return m;
  }

  void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) {
      return;
    }
    for (std::size_t j = 0; j < _cols; ++j) {
      std::swap((*this)(a, j), (*this)(b, j));
    }
  }

  void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) {
      return;
    }
    for (std::size_t i = 0; i < _rows; ++i) {
      std::swap((*this)(i, a), (*this)(i, b));
    }
  }

  void IntMatrix::add_row(std::size_t dst, std::size_t src, Integer const& f) {
    if (f == 0) {
      return;
    }
    for (std::size_t j = 0; j < _cols; ++j) {
      (*this)(dst, j) += f * (*this)(src, j);
    }
  }

  void IntMatrix::add_col(std::size_t dst, std::size_t src, Integer const& f) {
    if (f == 0) {
      return;
    }
    for (std::size_t i = 0; i < _rows; ++i) {
      (*this)(i, dst) += f * (*this)(i, src);
    }
  }

  IntMatrix operator*(IntMatrix const& a, IntMatrix const& b) {
    if (a._cols != b._rows) {
      throw InputError("integer matrix shapes do not match");
    }
    IntMatrix out(a._rows, b._cols);
    for (std::size_t i = 0; i < a._rows; ++i) {
      for (std::size_t k = 0; k < a._cols; ++k) {
        auto const& x = a(i, k);
        if (x == 0) {
          continue;
        }
        for (std::size_t j = 0; j < b._cols; ++j) {
          out(i, j) += x * b(k, j);
        }
      }
    }
    return out;
  }

  bool IntMatrix::is_diagonal() const {
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t j = 0; j < _cols; ++j) {
        if (i != j && (*this)(i, j) != 0) {
          return false;
        }
      }
    }
    return true;
  }

  std::string IntMatrix::format() const {
    std::string out = "[";
    for (std::size_t i = 0; i < _rows; ++i) {
      out += i == 0 ? "[" : ", [";
      for (std::size_t j = 0; j < _cols; ++j) {
        out += (j == 0 ? "" : ", ") + (*this)(i, j).get_str();
      }
      out += "]";
    }
    return out + "]";
  }

  Integer determinant(IntMatrix const& m) {
    if (m.rows() != m.cols()) {
      throw InputError("determinant of a non-square matrix");
    }
    auto const n = m.rows();
    if (n == 0) {
      return 1;
    }
    IntMatrix a    = m;
    Integer   prev = 1;
    int       sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (a(k, k) == 0) {
        std::size_t r = k + 1;
        while (r < n && a(r, k) == 0) {
          ++r;
        }
        if (r == n) {
          return 0;
        }
        a.swap_rows(k, r);
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          Integer t = a(k, k) * a(i, j) - a(i, k) * a(k, j);
          mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
          a(i, j) = t;
        }
        a(i, k) = 0;
      }
      prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
  }

  std::vector<Integer> SmithForm::diagonal() const {
    std::vector<Integer> out;
    for (std::size_t i = 0; i < D.rows() && i < D.cols(); ++i) {
      out.push_back(D(i, i));
    }
    return out;
  }

  SmithForm smith_normal_form(IntMatrix const& M) {
    auto const m = M.rows();
    auto const n = M.cols();
    SmithForm  f{IntMatrix::identity(m), M, IntMatrix::identity(n), IntMatrix::identity(n)};
    auto&      D = f.D;

    // Column operations keep V_inverse in step: V <- V E, V^-1 <- E^-1 V^-1.
    auto col_add = [&](std::size_t dst, std::size_t src, Integer const& q) {
      D.add_col(dst, src, q);
      f.V.add_col(dst, src, q);
      f.V_inverse.add_row(src, dst, -q);
    };
    auto col_swap = [&](std::size_t a, std::size_t b) {
      D.swap_cols(a, b);
      f.V.swap_cols(a, b);
      f.V_inverse.swap_rows(a, b);
    };
    auto row_add = [&](std::size_t dst, std::size_t src, Integer const& q) {
      D.add_row(dst, src, q);
      f.U.add_row(dst, src, q);
    };
    auto row_swap = [&](std::size_t a, std::size_t b) {
      D.swap_rows(a, b);
      f.U.swap_rows(a, b);
    };

    for (std::size_t t = 0; t < std::min(m, n); ++t) {
      while (true) {
        std::optional<std::pair<std::size_t, std::size_t>> pivot;
        for (std::size_t i = t; i < m; ++i) {
          for (std::size_t j = t; j < n; ++j) {
            if (D(i, j) != 0
                && (!pivot || abs(D(i, j)) < abs(D(pivot->first, pivot->second)))) {
              pivot = {i, j};
            }
          }
        }
        if (!pivot) {
          return f;
        }
        row_swap(t, pivot->first);
        col_swap(t, pivot->second);

        bool    clean = true;
        Integer q;
        for (std::size_t i = t + 1; i < m; ++i) {
          mpz_tdiv_q(q.get_mpz_t(), D(i, t).get_mpz_t(), D(t, t).get_mpz_t());
          row_add(i, t, -q);
          clean = clean && D(i, t) == 0;
        }
        for (std::size_t j = t + 1; j < n; ++j) {
          mpz_tdiv_q(q.get_mpz_t(), D(t, j).get_mpz_t(), D(t, t).get_mpz_t());
          col_add(j, t, -q);
          clean = clean && D(t, j) == 0;
        }
        if (!clean) {
          continue;  // a nonzero remainder is a strictly smaller pivot
        }
        std::optional<std::size_t> bad_row;
        for (std::size_t i = t + 1; i < m && !bad_row; ++i) {
          for (std::size_t j = t + 1; j < n; ++j) {
            if (!mpz_divisible_p(D(i, j).get_mpz_t(), D(t, t).get_mpz_t())) {
              bad_row = i;
              break;
            }
          }
        }
        if (!bad_row) {
          break;
        }
        row_add(t, *bad_row, 1);
      }
      if (D(t, t) < 0) {
        for (std::size_t j = 0; j < n; ++j) {
          D(t, j) = -D(t, j);
        }
        for (std::size_t j = 0; j < m; ++j) {
          f.U(t, j) = -f.U(t, j);
        }
      }
    }
    return f;
  }

}  // namespace ncalg::tensorring
