#ifndef NCALG_LINALG_HPP_
#define NCALG_LINALG_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "ncalg/coeff.hpp"
#include "ncalg/error.hpp"
#include "ncalg/freepoly.hpp"

namespace ncalg {

  /// Prime field or Q, with elements stored as reduced rationals
  /// (representatives in [0, p) for Z/p).
  class ScalarField {
   public:
    static ScalarField rationals() { return ScalarField(0); }
    static ScalarField mod(Integer p);
    /// Scalar field underlying a coefficient ring: Q for Q and Q[t...],
    /// Z/p for prime p. Throws InputError for Z and composite moduli.
    static ScalarField of(CoeffRing const& ring);

    Integer const& characteristic() const noexcept { return _p; }

    Rational normalize(Rational q) const;
    Rational add(Rational const& a, Rational const& b) const {
      return normalize(a + b);
    }
    Rational sub(Rational const& a, Rational const& b) const {
      return normalize(a - b);
    }
    Rational mul(Rational const& a, Rational const& b) const {
      return normalize(a * b);
    }
    Rational inv(Rational const& a) const;

   private:
    explicit ScalarField(Integer p) : _p(std::move(p)) {}
    Integer _p;
  };

  /// Subspace of a sparse vector space, kept in echelon form. The pivot of
  /// each row is its first coordinate under `Compare`, normalized to 1.
  template <typename Key, typename Compare = std::less<Key>>
  class EchelonSpace {
   public:
    using Vector = std::map<Key, Rational, Compare>;

    explicit EchelonSpace(ScalarField field, Compare cmp = Compare())
        : _field(std::move(field)), _rows(cmp), _cmp(cmp) {}

    ScalarField const& field() const noexcept { return _field; }
    std::size_t        dimension() const noexcept { return _rows.size(); }

    /// Residual of v modulo the space: no coordinate of the result is a
    /// pivot.
    Vector reduce(Vector v) const {
      auto it = v.begin();
      while (it != v.end()) {
        auto row = _rows.find(it->first);
        if (row == _rows.end()) {
          ++it;
          continue;
        }
        Key      k = it->first;
        Rational f = it->second;
        axpy(v, _field.normalize(-f), row->second);
        it = v.upper_bound(k);
      }
      return v;
    }

    bool contains(Vector const& v) const { return reduce(v).empty(); }

    /// Adds v to the space; returns false when v was already in it.
    bool insert(Vector const& v) {
      Vector r = reduce(v);
      if (r.empty()) {
        return false;
      }
      Rational s = _field.inv(r.begin()->second);
      for (auto& [k, c] : r) {
        c = _field.mul(c, s);
      }
      Key pivot = r.begin()->first;
      _rows.emplace(pivot, std::move(r));
      return true;
    }

    template <typename Range>
    void insert_all(Range const& vs) {
      for (auto const& v : vs) {
        insert(v);
      }
    }

    /// Rows of the reduced row echelon form, in pivot order.
    std::vector<Vector> reduced_basis() const {
      std::vector<Vector> out;
      for (auto const& [pivot, row] : _rows) {
        Vector tail = row;
        tail.erase(pivot);
        Vector r = reduce(std::move(tail));
        r.emplace(pivot, Rational(1));
        out.push_back(std::move(r));
      }
      return out;
    }

    std::vector<Key> pivots() const {
      std::vector<Key> out;
      for (auto const& kv : _rows) {
        out.push_back(kv.first);
      }
      return out;
    }

    /// v += f * w.
    void axpy(Vector& v, Rational const& f, Vector const& w) const {
      for (auto const& [k, c] : w) {
        auto [it, inserted] = v.try_emplace(k, Rational(0));
        it->second = _field.add(it->second, _field.mul(f, c));
        if (it->second == 0) {
          v.erase(it);
        }
      }
    }

   private:
    ScalarField              _field;
    std::map<Key, Vector, Compare> _rows;
    Compare                  _cmp;
  };

  /// Basis of U ∩ W by the Zassenhaus construction: rows [u | u] and
  /// [w | 0] are reduced with the first copy ordered first; rows left with
  /// a zero first half carry the intersection in their second half.
  template <typename Key, typename Compare>
  std::vector<typename EchelonSpace<Key, Compare>::Vector> intersection(
      EchelonSpace<Key, Compare> const& U, EchelonSpace<Key, Compare> const& W) {
    using Vector = typename EchelonSpace<Key, Compare>::Vector;
    struct Tagged {
      int tag;
      Key key;
    };
    struct TaggedOrder {
      bool operator()(Tagged const& a, Tagged const& b) const {
        if (a.tag != b.tag) {
          return a.tag < b.tag;
        }
        return Compare{}(a.key, b.key);
      }
    };
    EchelonSpace<Tagged, TaggedOrder> Z(U.field());
    for (auto const& row : U.reduced_basis()) {
      typename EchelonSpace<Tagged, TaggedOrder>::Vector v;
      for (auto const& [k, c] : row) {
        v.emplace(Tagged{0, k}, c);
        v.emplace(Tagged{1, k}, c);
      }
      Z.insert(v);
    }
    for (auto const& row : W.reduced_basis()) {
      typename EchelonSpace<Tagged, TaggedOrder>::Vector v;
      for (auto const& [k, c] : row) {
        v.emplace(Tagged{0, k}, c);
      }
      Z.insert(v);
    }
    std::vector<Vector> out;
    for (auto const& row : Z.reduced_basis()) {
      if (row.begin()->first.tag == 1) {
        Vector v;
        for (auto const& [k, c] : row) {
          v.emplace(k.key, c);
        }
        out.push_back(std::move(v));
      }
    }
    return out;
  }

  /// A vector in the span of I and `extra` that is not in I, monic, with
  /// the smallest leading key such a vector can have; none when `extra`
  /// lies in I.
  template <typename Key, typename Compare>
  std::optional<typename EchelonSpace<Key, Compare>::Vector> outside_witness(
      EchelonSpace<Key, Compare> const&                                 I,
      std::vector<typename EchelonSpace<Key, Compare>::Vector> const& extra) {
    EchelonSpace<Key, Compare> combined = I;
    for (auto const& v : extra) {
      combined.insert(v);
    }
    auto const pivots = I.pivots();
    std::optional<typename EchelonSpace<Key, Compare>::Vector> best;
    for (auto const& row : combined.reduced_basis()) {
      auto const& p   = row.begin()->first;
      bool        old = false;
      for (auto const& q : pivots) {
        if (!Compare{}(p, q) && !Compare{}(q, p)) {
          old = true;
          break;
        }
      }
      if (!old) {
        best = row;  // rows come in pivot order, so the last is smallest
      }
    }
    return best;
  }

  /// Coordinate of a flattened free-algebra element: a word together with
  /// the commutative exponents of a polynomial coefficient (empty for
  /// scalar rings). The order puts larger words first.
  struct FlatKey {
    Word      word;
    Exponents exps;
    friend bool operator==(FlatKey const&, FlatKey const&) = default;
  };

  struct FlatKeyOrder {
    bool operator()(FlatKey const& a, FlatKey const& b) const {
      auto c = deglex_compare(a.word, b.word);
      if (c != 0) {
        return c > 0;
      }
      return exponents_greater(a.exps, b.exps);
    }
  };

  using PolyVector = std::map<FlatKey, Rational, FlatKeyOrder>;
  using PolySpace  = EchelonSpace<FlatKey, FlatKeyOrder>;

  /// Coordinates of p over ScalarField::of(p.ring()).
  PolyVector flatten(FreePoly const& p);
  FreePoly   unflatten(PolyVector const& v, AlgebraPtr const& algebra);

  /// Dense exact matrix over Q.
  class QMatrix {
   public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols)
        : _rows(rows), _cols(cols), _data(rows * cols) {}

    static QMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return _rows; }
    std::size_t cols() const noexcept { return _cols; }

    Rational& operator()(std::size_t i, std::size_t j) {
      return _data[i * _cols + j];
    }
    Rational const& operator()(std::size_t i, std::size_t j) const {
      return _data[i * _cols + j];
    }

    bool is_zero() const;

    QMatrix&       operator+=(QMatrix const& o);
    QMatrix&       operator-=(QMatrix const& o);
    friend QMatrix operator+(QMatrix a, QMatrix const& b) { return a += b; }
    friend QMatrix operator-(QMatrix a, QMatrix const& b) { return a -= b; }
    friend QMatrix operator*(QMatrix const& a, QMatrix const& b);
    QMatrix        scaled(Rational const& c) const;
    friend bool operator==(QMatrix const&, QMatrix const&) = default;

    std::size_t rank() const;
    /// Basis of {v : A v = 0}, as column vectors.
    std::vector<std::vector<Rational>> nullspace() const;
    /// Solution of A x = b, if any.
    std::optional<std::vector<Rational>> solve(std::vector<Rational> const& b) const;
    /// Throws InputError when singular.
    QMatrix inverse() const;

   private:
    std::size_t           _rows = 0;
    std::size_t           _cols = 0;
    std::vector<Rational> _data;
  };

}  // namespace ncalg

#endif  // NCALG_LINALG_HPP_
