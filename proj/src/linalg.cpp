#include "ncalg/linalg.hpp"

#include <utility>

namespace ncalg {

  ScalarField ScalarField::mod(Integer p) {
    if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 25) == 0) {
      throw InputError("Z/" + p.get_str() + " is not a field");
    }
    return ScalarField(std::move(p));
  }

  ScalarField ScalarField::of(CoeffRing const& ring) {
    switch (ring.kind()) {
      case CoeffRing::Kind::rationals:
      case CoeffRing::Kind::polynomials: return rationals();
      case CoeffRing::Kind::integers_mod: return mod(ring.modulus());
      case CoeffRing::Kind::integers: break;
    }
    throw InputError("linear algebra needs a field coefficient ring, found "
                     + ring.name());
  }

  Rational ScalarField::normalize(Rational q) const {
    q.canonicalize();
    if (_p == 0) {
      return q;
    }
    Integer num = q.get_num() % _p;
    if (num < 0) {
      num += _p;
    }
    if (q.get_den() != 1) {
      Integer inv;
      Integer den = q.get_den();
      if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), _p.get_mpz_t()) == 0) {
        throw InputError("denominator not invertible mod " + _p.get_str());
      }
      num = (num * inv) % _p;
    }
    return Rational(num);
  }

  Rational ScalarField::inv(Rational const& a) const {
    if (a == 0) {
      throw InputError("division by zero");
    }
    return normalize(1 / a);
  }

  PolyVector flatten(FreePoly const& p) {
    PolyVector out;
    auto       field = ScalarField::of(p.ring());
    for (auto const& [w, c] : p.terms()) {
      if (c.is_poly()) {
        for (auto const& [e, q] : c.poly().terms) {
          out.emplace(FlatKey{w, e}, q);
        }
      } else {
        out.emplace(FlatKey{w, {}}, field.normalize(c.scalar()));
      }
    }
    return out;
  }

  FreePoly unflatten(PolyVector const& v, AlgebraPtr const& algebra) {
    FreePoly    out(algebra);
    auto const& R = algebra->ring;
    for (auto const& [key, q] : v) {
      if (R.kind() == CoeffRing::Kind::polynomials) {
        CommPoly cp;
        cp.terms.emplace_back(key.exps, q);
        out.add_term(key.word, Coeff(std::move(cp)));
      } else {
        out.add_term(key.word, R.from_rational(q));
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // QMatrix
  ////////////////////////////////////////////////////////////////////////

  QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = 1;
    }
    return m;
  }

  bool QMatrix::is_zero() const {
    for (auto const& q : _data) {
      if (q != 0) {
        return false;
      }
    }
    return true;
  }

  QMatrix& QMatrix::operator+=(QMatrix const& o) {
    if (o._rows != _rows || o._cols != _cols) {
      throw InputError("matrix shape mismatch");
    }
    for (std::size_t i = 0; i < _data.size(); ++i) {
      _data[i] += o._data[i];
    }
    return *this;
  }

  QMatrix& QMatrix::operator-=(QMatrix const& o) {
    if (o._rows != _rows || o._cols != _cols) {
      throw InputError("matrix shape mismatch");
    }
    for (std::size_t i = 0; i < _data.size(); ++i) {
      _data[i] -= o._data[i];
    }
    return *this;
  }

  QMatrix operator*(QMatrix const& a, QMatrix const& b) {
    if (a._cols != b._rows) {
      throw InputError("matrix shape mismatch in product");
    }
    QMatrix c(a._rows, b._cols);
    for (std::size_t i = 0; i < a._rows; ++i) {
      for (std::size_t k = 0; k < a._cols; ++k) {
        auto const& aik = a(i, k);
        if (aik == 0) {
          continue;
        }
        for (std::size_t j = 0; j < b._cols; ++j) {
          if (b(k, j) != 0) {
            c(i, j) += aik * b(k, j);
          }
        }
      }
    }
    return c;
  }

  QMatrix QMatrix::scaled(Rational const& c) const {
    QMatrix out = *this;
    for (auto& q : out._data) {
      q *= c;
    }
    return out;
  }

  namespace {
    // In-place reduced row echelon form; returns pivot columns.
    std::vector<std::size_t> rref(QMatrix& m) {
      std::vector<std::size_t> pivots;
      std::size_t              r = 0;
      for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) {
          ++p;
        }
        if (p == m.rows()) {
          continue;
        }
        if (p != r) {
          for (std::size_t j = 0; j < m.cols(); ++j) {
            std::swap(m(p, j), m(r, j));
          }
        }
        Rational s = 1 / m(r, c);
        for (std::size_t j = 0; j < m.cols(); ++j) {
          m(r, j) *= s;
        }
        for (std::size_t i = 0; i < m.rows(); ++i) {
          if (i != r && m(i, c) != 0) {
            Rational f = m(i, c);
            for (std::size_t j = 0; j < m.cols(); ++j) {
              m(i, j) -= f * m(r, j);
            }
          }
        }
        pivots.push_back(c);
        ++r;
      }
      return pivots;
    }
  }  // namespace

  std::size_t QMatrix::rank() const {
    QMatrix m = *this;
    return rref(m).size();
  }

  std::vector<std::vector<Rational>> QMatrix::nullspace() const {
    QMatrix                            m      = *this;
    auto                               pivots = rref(m);
    std::vector<bool>                  is_pivot(_cols, false);
    std::vector<std::vector<Rational>> out;
    for (auto c : pivots) {
      is_pivot[c] = true;
    }
    for (std::size_t free = 0; free < _cols; ++free) {
      if (is_pivot[free]) {
        continue;
      }
      std::vector<Rational> v(_cols);
      v[free] = 1;
      for (std::size_t r = 0; r < pivots.size(); ++r) {
        v[pivots[r]] = -m(r, free);
      }
      out.push_back(std::move(v));
    }
    return out;
  }

  std::optional<std::vector<Rational>>
  QMatrix::solve(std::vector<Rational> const& b) const {
    QMatrix aug(_rows, _cols + 1);
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t j = 0; j < _cols; ++j) {
        aug(i, j) = (*this)(i, j);
      }
      aug(i, _cols) = b.at(i);
    }
    auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == _cols) {
      return std::nullopt;
    }
    std::vector<Rational> x(_cols);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      x[pivots[r]] = aug(r, _cols);
    }
    return x;
  }

  QMatrix QMatrix::inverse() const {
    if (_rows != _cols) {
      throw InputError("inverse of a non-square matrix");
    }
    QMatrix aug(_rows, 2 * _cols);
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t j = 0; j < _cols; ++j) {
        aug(i, j) = (*this)(i, j);
      }
      aug(i, _cols + i) = 1;
    }
    auto pivots = rref(aug);
    if (pivots.size() < _rows || pivots[_rows - 1] >= _cols) {
      throw InputError("singular matrix");
    }
    QMatrix inv(_rows, _cols);
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t j = 0; j < _cols; ++j) {
        inv(i, j) = aug(i, _cols + j);
      }
    }
    return inv;
  }

}  // namespace ncalg
