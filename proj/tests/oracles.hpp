#ifndef NCALG_TESTS_ORACLES_HPP_
#define NCALG_TESTS_ORACLES_HPP_

// Independent reference computations. None of these call into the module
// they are used to check.

#include <algorithm>
#include <array>
#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "ncalg/coeff.hpp"
#include "ncalg/freepoly.hpp"
#include "ncalg/rewrite.hpp"

namespace ncalg::oracle {

  /// All words of length exactly n over k letters, by odometer.
  inline void for_each_word(std::size_t k, std::size_t n,
                            std::function<void(std::vector<Letter> const&)> const& f) {
    std::vector<Letter> w(n, 0);
    while (true) {
      f(w);
      std::size_t i = n;
      while (i > 0 && w[i - 1] + 1u == k) {
        w[--i] = 0;
      }
      if (i == 0) {
        return;
      }
      ++w[i - 1];
    }
  }

  /// Naive factor test on letter vectors.
  inline bool has_factor(std::vector<Letter> const& w, std::vector<Letter> const& f) {
    if (f.size() > w.size()) {
      return false;
    }
    for (std::size_t p = 0; p + f.size() <= w.size(); ++p) {
      if (std::equal(f.begin(), f.end(), w.begin() + static_cast<long>(p))) {
        return true;
      }
    }
    return false;
  }

  /// Number of words of length <= max_len over `k` letters avoiding every
  /// pattern as a factor.
  inline std::size_t count_avoiding(std::size_t k,
                                    std::vector<std::vector<Letter>> const& patterns,
                                    std::size_t max_len) {
    std::size_t count = 0;
    for (std::size_t n = 0; n <= max_len; ++n) {
      for_each_word(k, n, [&](std::vector<Letter> const& w) {
        for (auto const& p : patterns) {
          if (has_factor(w, p)) {
            return;
          }
        }
        ++count;
      });
    }
    return count;
  }

  struct Overlap {
    std::size_t         first, second, shared;
    std::vector<Letter> witness;
    friend auto operator<=>(Overlap const&, Overlap const&) = default;
  };

  /// Every pair (i, j) and length 0 < k < min(|l_i|, |l_j|) with the final
  /// k letters of l_i equal to the first k of l_j.
  inline std::set<Overlap> overlaps(std::vector<std::vector<Letter>> const& lhs) {
    std::set<Overlap> out;
    for (std::size_t i = 0; i < lhs.size(); ++i) {
      for (std::size_t j = 0; j < lhs.size(); ++j) {
        auto const& a = lhs[i];
        auto const& b = lhs[j];
        for (std::size_t k = 1; k < std::min(a.size(), b.size()); ++k) {
          bool match = true;
          for (std::size_t t = 0; t < k; ++t) {
            match = match && a[a.size() - k + t] == b[t];
          }
          if (match) {
            std::vector<Letter> w = a;
            w.insert(w.end(), b.begin() + static_cast<long>(k), b.end());
            out.insert({i, j, k, w});
          }
        }
      }
    }
    return out;
  }

  /// Dershowitz–Manna extension of the deglex order to the word sets of two
  /// polynomials: true when `before` is strictly greater than `after`.
  inline bool multiset_decreases(FreePoly const& before, FreePoly const& after) {
    auto greater = [](std::vector<Letter> const& a, std::vector<Letter> const& b) {
      return a.size() != b.size() ? a.size() > b.size() : a > b;
    };
    std::set<std::vector<Letter>> M, N;
    for (auto const& [w, c] : before.terms()) {
      M.insert(w.letters());
    }
    for (auto const& [w, c] : after.terms()) {
      N.insert(w.letters());
    }
    if (M == N) {
      return false;
    }
    for (auto const& y : N) {
      if (M.count(y)) {
        continue;
      }
      bool dominated = false;
      for (auto const& x : M) {
        dominated = dominated || (!N.count(x) && greater(x, y));
      }
      if (!dominated) {
        return false;
      }
    }
    return true;
  }

  /// Integer determinant by cofactor expansion.
  inline Integer cofactor_det(std::vector<std::vector<Integer>> const& m) {
    std::size_t n = m.size();
    if (n == 0) {
      return 1;
    }
    if (n == 1) {
      return m[0][0];
    }
    Integer det = 0;
    for (std::size_t c = 0; c < n; ++c) {
      std::vector<std::vector<Integer>> minor;
      for (std::size_t r = 1; r < n; ++r) {
        std::vector<Integer> row;
        for (std::size_t k = 0; k < n; ++k) {
          if (k != c) {
            row.push_back(m[r][k]);
          }
        }
        minor.push_back(row);
      }
      Integer term = m[0][c] * cofactor_det(minor);
      det += (c % 2 == 0) ? term : Integer(-term);
    }
    return det;
  }

  /// Subsets of size k of {0, .., n-1}.
  inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t>              cur;
    std::function<void(std::size_t)>      rec = [&](std::size_t from) {
      if (cur.size() == k) {
        out.push_back(cur);
        return;
      }
      for (std::size_t i = from; i < n; ++i) {
        cur.push_back(i);
        rec(i + 1);
        cur.pop_back();
      }
    };
    rec(0);
    return out;
  }

  /// Invariant factors d_k = D_k / D_(k-1), D_k the gcd of the k×k minors,
  /// up to the rank. Entries are the nonzero diagonal of the Smith form.
  inline std::vector<Integer> minors_invariant_factors(
      std::vector<std::vector<Integer>> const& m) {
    std::size_t rows = m.size();
    std::size_t cols = rows == 0 ? 0 : m[0].size();
    std::vector<Integer> D{Integer(1)};
    for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
      Integer g = 0;
      for (auto const& rs : subsets(rows, k)) {
        for (auto const& cs : subsets(cols, k)) {
          std::vector<std::vector<Integer>> sub;
          for (auto r : rs) {
            std::vector<Integer> row;
            for (auto c : cs) {
              row.push_back(m[r][c]);
            }
            sub.push_back(row);
          }
          Integer det = cofactor_det(sub);
          mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), det.get_mpz_t());
        }
      }
      if (g == 0) {
        break;
      }
      D.push_back(g);
    }
    std::vector<Integer> out;
    for (std::size_t k = 1; k < D.size(); ++k) {
      out.push_back(D[k] / D[k - 1]);
    }
    return out;
  }

  /// Alternating words of length <= n over d1 + d2 letters, by filtering
  /// every word.
  inline std::size_t count_alternating(std::size_t d1, std::size_t d2, std::size_t n) {
    std::size_t count = 0;
    for (std::size_t len = 0; len <= n; ++len) {
      for_each_word(d1 + d2, len, [&](std::vector<Letter> const& w) {
        for (std::size_t i = 1; i < w.size(); ++i) {
          if ((w[i - 1] < d1) == (w[i] < d1)) {
            return;
          }
        }
        ++count;
      });
    }
    return count;
  }

  /// Unital algebra on {1, b_1, .., b_r} by a table of coordinate vectors
  /// (index 0 is the unit). Returns the triples (i, j, k) of basis symbols
  /// with (b_i b_j) b_k != b_i (b_j b_k).
  inline std::vector<std::array<std::size_t, 3>> associativity_failures(
      std::vector<std::vector<Rational>> const& table, std::size_t r) {
    auto mul = [&](std::vector<Rational> const& u, std::vector<Rational> const& v) {
      std::vector<Rational> out(r + 1);
      for (std::size_t a = 0; a <= r; ++a) {
        for (std::size_t b = 0; b <= r; ++b) {
          if (u[a] == 0 || v[b] == 0) {
            continue;
          }
          if (a == 0 || b == 0) {
            out[a == 0 ? b : a] += u[a] * v[b];
            continue;
          }
          auto const& p = table[(a - 1) * r + (b - 1)];
          for (std::size_t c = 0; c <= r; ++c) {
            out[c] += u[a] * v[b] * p[c];
          }
        }
      }
      return out;
    };
    auto e = [&](std::size_t i) {
      std::vector<Rational> v(r + 1);
      v[i + 1] = 1;
      return v;
    };
    std::vector<std::array<std::size_t, 3>> out;
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) {
        for (std::size_t k = 0; k < r; ++k) {
          if (mul(mul(e(i), e(j)), e(k)) != mul(e(i), mul(e(j), e(k)))) {
            out.push_back({i, j, k});
          }
        }
      }
    }
    return out;
  }

}  // namespace ncalg::oracle

#endif  // NCALG_TESTS_ORACLES_HPP_
