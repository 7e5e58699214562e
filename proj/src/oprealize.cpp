#include "ncalg/oprealize.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "ncalg/error.hpp"

namespace ncalg::oprealize {

  std::size_t weight(Block const& b) {
    return std::accumulate(b.begin(), b.end(), std::size_t(0)) + b.size() - 1;
  }

  ////////////////////////////////////////////////////////////////////////
  // TruncatedDirectSum

  namespace {

    // Sequences with Σ (a_k + 1) ≤ budget, extending `prefix`.
    void enumerate(Block& prefix, std::size_t budget, std::vector<Block>& out) {
      for (std::size_t a = 0; a + 1 <= budget; ++a) {
        prefix.push_back(a);
        out.push_back(prefix);
        enumerate(prefix, budget - a - 1, out);
        prefix.pop_back();
      }
    }

    std::vector<Rational> unit_coords(embed::AlgebraPresentation const& A, FreePoly const& p) {
      std::size_t           shift = A.unital() ? 1 : 0;
      std::vector<Rational> v(A.dimension());
      for (auto const& [w, c] : p.terms()) {
        v[w.empty() ? 0 : w[0] + shift] = c.scalar();
      }
      return v;
    }

    void require_rationals(CoeffRing const& ring, char const* what) {
      if (ring.kind() != CoeffRing::Kind::rationals) {
        throw InputError(std::string(what) + " must be over Q");
      }
    }

  }  // namespace

  TruncatedDirectSum::TruncatedDirectSum(std::size_t N, std::size_t d) : _N(N), _d(d) {
    if (N == 0 || d == 0) {
      throw InputError("a truncated direct sum needs N >= 1 and d >= 1");
    }
    Block prefix;
    enumerate(prefix, N, _blocks);
    std::sort(_blocks.begin(), _blocks.end(), [](Block const& a, Block const& b) {
      return std::make_pair(weight(a), a) < std::make_pair(weight(b), b);
    });
    for (std::size_t i = 0; i < _blocks.size(); ++i) {
      _index.emplace(_blocks[i], i);
    }
  }

  TruncatedDirectSum::TruncatedDirectSum(std::size_t                       N,
                                         embed::AlgebraPresentation const& A,
                                         std::vector<QMatrix>              action)
      : TruncatedDirectSum(N, action.empty() ? A.dimension() : action.front().rows()) {
    require_rationals(A.ring(), "the acting algebra");
    if (action.size() != A.rank()) {
      throw InputError("need one action matrix per basis symbol");
    }
    for (auto const& m : action) {
      if (m.rows() != _d || m.cols() != _d) {
        throw InputError("action matrices must all be " + std::to_string(_d) + "x"
                         + std::to_string(_d));
      }
    }
    _algebra = A;
    _action  = std::move(action);
    for (std::size_t i = 0; i < A.rank(); ++i) {
      for (std::size_t j = 0; j < A.rank(); ++j) {
        auto want = element(A.product(static_cast<Letter>(i), static_cast<Letter>(j)));
        if (_action[i] * _action[j] != want) {
          throw InputError("action violates " + A.basis().symbol(static_cast<Letter>(i)) + "."
                           + A.basis().symbol(static_cast<Letter>(j)));
        }
      }
    }
  }

  TruncatedDirectSum TruncatedDirectSum::regular(std::size_t N, embed::AlgebraPresentation const& A) {
    require_rationals(A.ring(), "the acting algebra");
    std::size_t const d     = A.dimension();
    std::size_t const shift = A.unital() ? 1 : 0;
    std::vector<QMatrix> action;
    for (std::size_t i = 0; i < A.rank(); ++i) {
      QMatrix m(d, d);
      for (std::size_t j = 0; j < d; ++j) {
        FreePoly e = (A.unital() && j == 0) ? A.unit()
                                            : A.basis_element(static_cast<Letter>(j - shift));
        auto col = unit_coords(A, A.mul(A.basis_element(static_cast<Letter>(i)), e));
        for (std::size_t r = 0; r < d; ++r) {
          m(r, j) = col[r];
        }
      }
      action.push_back(std::move(m));
    }
    if (d == 0) {
      throw InputError("the regular module of the zero algebra has no blocks");
    }
    return TruncatedDirectSum(N, A, std::move(action));
  }

  std::optional<std::size_t> TruncatedDirectSum::index(Block const& b) const {
    auto it = _index.find(b);
    if (it == _index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  embed::AlgebraPresentation const& TruncatedDirectSum::algebra() const {
    if (!_algebra) {
      throw InputError("no algebra acts on this direct sum");
    }
    return *_algebra;
  }

  QMatrix TruncatedDirectSum::element(FreePoly const& p) const {
    auto const& A = algebra();
    A.check_element(p);
    QMatrix out(_d, _d);
    for (auto const& [w, c] : p.terms()) {
      out += (w.empty() ? QMatrix::identity(_d) : _action[w[0]]).scaled(c.scalar());
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // BlockOperator

  BlockOperator BlockOperator::identity(std::size_t blocks, std::size_t d) {
    return diagonal(blocks, QMatrix::identity(d));
  }

  BlockOperator BlockOperator::diagonal(std::size_t blocks, QMatrix const& m) {
    BlockOperator out(blocks, m.rows());
    for (std::size_t i = 0; i < blocks; ++i) {
      out.add(i, i, m);
    }
    return out;
  }

  void BlockOperator::add(std::size_t row, std::size_t col, QMatrix const& m) {
    if (m.is_zero()) {
      return;
    }
    auto [it, inserted] = _entries.try_emplace({row, col}, m);
    if (!inserted) {
      it->second += m;
      if (it->second.is_zero()) {
        _entries.erase(it);
      }
    }
  }

  QMatrix BlockOperator::block(std::size_t row, std::size_t col) const {
    auto it = _entries.find({row, col});
    return it == _entries.end() ? QMatrix(_d, _d) : it->second;
  }

  QMatrix BlockOperator::dense() const {
    QMatrix out(_blocks * _d, _blocks * _d);
    for (auto const& [rc, m] : _entries) {
      for (std::size_t i = 0; i < _d; ++i) {
        for (std::size_t j = 0; j < _d; ++j) {
          out(rc.first * _d + i, rc.second * _d + j) = m(i, j);
        }
      }
    }
    return out;
  }

  BlockOperator& BlockOperator::operator+=(BlockOperator const& o) {
    for (auto const& [rc, m] : o._entries) {
      add(rc.first, rc.second, m);
    }
    return *this;
  }

  BlockOperator operator*(BlockOperator const& a, BlockOperator const& b) {
    if (a._blocks != b._blocks || a._d != b._d) {
      throw InputError("block operator shapes differ");
    }
    std::vector<std::vector<std::pair<std::size_t, QMatrix const*>>> rows_of_b(b._blocks);
    for (auto const& [rc, m] : b._entries) {
      rows_of_b[rc.first].emplace_back(rc.second, &m);
    }
    BlockOperator out(a._blocks, a._d);
    for (auto const& [rk, m] : a._entries) {
      for (auto const& [c, n] : rows_of_b[rk.second]) {
        out.add(rk.first, c, m * *n);
      }
    }
    return out;
  }

  BlockOperator BlockOperator::scaled(Rational const& c) const {
    BlockOperator out(_blocks, _d);
    if (c != 0) {
      for (auto const& [rc, m] : _entries) {
        out._entries.emplace(rc, m.scaled(c));
      }
    }
    return out;
  }

  bool BlockOperator::agrees_on(BlockOperator const& o, std::size_t col) const {
    auto column = [col](BlockOperator const& op) {
      std::map<std::size_t, QMatrix const*> out;
      for (auto const& [rc, m] : op._entries) {
        if (rc.second == col) {
          out.emplace(rc.first, &m);
        }
      }
      return out;
    };
    auto mine   = column(*this);
    auto theirs = column(o);
    if (mine.size() != theirs.size()) {
      return false;
    }
    for (auto const& [r, m] : mine) {
      auto it = theirs.find(r);
      if (it == theirs.end() || *it->second != *m) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Shift operators

  ShiftOperators build_shift_operators(TruncatedDirectSum const&   M,
                                       std::vector<QMatrix> const& s) {
    if (s.empty()) {
      throw InputError("need at least s_0");
    }
    if (s.size() >= M.N()) {
      throw InputError("no headroom: m = " + std::to_string(s.size() - 1)
                       + " needs N >= " + std::to_string(s.size() + 1));
    }
    for (auto const& m : s) {
      if (m.rows() != M.d() || m.cols() != M.d()) {
        throw InputError("s matrices must match the block dimension");
      }
    }
    auto const     n = M.block_count();
    auto const     I = QMatrix::identity(M.d());
    ShiftOperators ops{BlockOperator(n, M.d()), BlockOperator(n, M.d()), BlockOperator(n, M.d())};
    for (std::size_t c = 0; c < n; ++c) {
      Block const& sigma = M.blocks()[c];
      Block        up    = sigma;
      up.insert(up.begin(), 0);
      if (auto r = M.index(up)) {
        ops.z.add(*r, c, I);
      }
      Block next = sigma;
      ++next[0];
      if (auto r = M.index(next)) {
        ops.y.add(*r, c, I);
      }
      if (sigma.size() >= 2 && sigma[0] < s.size()) {
        Block rest(sigma.begin() + 1, sigma.end());
        ops.x.add(*M.index(rest), c, s[sigma[0]]);
      }
    }
    return ops;
  }

  RelationVerdict check_relations(ShiftOperators const&       ops,
                                  TruncatedDirectSum const&   M,
                                  std::vector<QMatrix> const& s) {
    RelationVerdict verdict;
    BlockOperator   yi = BlockOperator::identity(M.block_count(), M.d());
    for (std::size_t i = 0; i < s.size() && verdict.holds; ++i) {
      BlockOperator op = ops.x * yi * ops.z;
      yi               = yi * ops.y;
      for (std::size_t c = 0; c < M.block_count() && verdict.holds; ++c) {
        if (weight(M.blocks()[c]) + i + 1 > M.N() - 1) {
          continue;
        }
        ++verdict.checked_blocks;
        for (std::size_t r = 0; r < M.block_count() && verdict.holds; ++r) {
          QMatrix got  = op.block(r, c);
          QMatrix want = r == c ? s[i] : QMatrix(M.d(), M.d());
          for (std::size_t a = 0; a < M.d() && verdict.holds; ++a) {
            for (std::size_t b = 0; b < M.d(); ++b) {
              if (got(a, b) != want(a, b)) {
                verdict.holds   = false;
                verdict.failure = RelationFailure{i, M.blocks()[c], r * M.d() + a, c * M.d() + b};
                break;
              }
            }
          }
        }
      }
    }
    return verdict;
  }

  ////////////////////////////////////////////////////////////////////////
  // Realization

  Realization realize(embed::AlgebraPresentation const& A,
                      std::vector<FreePoly> const&      S,
                      std::size_t                       N) {
    auto                 M = TruncatedDirectSum::regular(N, A);
    std::vector<QMatrix> s;
    for (auto const& p : S) {
      s.push_back(M.element(p));
    }
    auto ops = build_shift_operators(M, s);
    return Realization{std::move(M), std::move(s), std::move(ops)};
  }

  namespace {

    std::vector<BlockOperator> letter_operators(Realization const& R, Alphabet const& alphabet) {
      auto const&                B = R.M.algebra().basis();
      std::vector<BlockOperator> out;
      for (auto const& sym : alphabet.symbols()) {
        if (sym == "x") {
          out.push_back(R.ops.x);
        } else if (sym == "y") {
          out.push_back(R.ops.y);
        } else if (sym == "z") {
          out.push_back(R.ops.z);
        } else if (B.has(sym)) {
          out.push_back(BlockOperator::diagonal(R.M.block_count(), R.M.action()[B.letter(sym)]));
        } else {
          throw InputError("symbol " + sym + " has no operator");
        }
      }
      return out;
    }

    BlockOperator evaluate(Realization const&                R,
                           std::vector<BlockOperator> const& letters,
                           FreePoly const&                   p) {
      require_rationals(p.ring(), "operator words");
      BlockOperator out(R.M.block_count(), R.M.d());
      auto const    one = BlockOperator::identity(R.M.block_count(), R.M.d());
      for (auto const& [w, c] : p.terms()) {
        BlockOperator term = one;
        for (std::size_t i = 0; i < w.size(); ++i) {
          term = term * letters[w[i]];
        }
        out += term.scaled(c.scalar());
      }
      return out;
    }

  }  // namespace

  BlockOperator operator_of(Realization const& R, FreePoly const& p) {
    return evaluate(R, letter_operators(R, p.alphabet()), p);
  }

  CrossVerdict cross_validate(rewrite::ReductionSystem const&                   sys,
                              Realization const&                                R,
                              std::vector<std::pair<FreePoly, FreePoly>> const& pairs,
                              std::size_t                                       degree,
                              std::size_t                                       fuel) {
    if (degree + 1 > R.M.N()) {
      throw InputError("insufficient headroom: degree " + std::to_string(degree)
                       + " needs N >= " + std::to_string(degree + 1));
    }
    auto const   letters = letter_operators(R, sys.alphabet());
    CrossVerdict verdict;
    std::vector<std::size_t> region;
    for (std::size_t c = 0; c < R.M.block_count(); ++c) {
      if (weight(R.M.blocks()[c]) + degree <= R.M.N() - 1) {
        region.push_back(c);
      }
    }
    verdict.region = region.size();
    for (auto const& [first, second] : pairs) {
      if (first.degree() > degree || second.degree() > degree) {
        throw InputError("sampled word longer than the degree bound");
      }
      ++verdict.pairs;
      if (rewrite::normal_form(first, sys, fuel) != rewrite::normal_form(second, sys, fuel)) {
        continue;
      }
      ++verdict.compared;
      auto a = evaluate(R, letters, first);
      auto b = evaluate(R, letters, second);
      for (auto c : region) {
        if (!a.agrees_on(b, c)) {
          verdict.failure = CrossFailure{first, second, R.M.blocks()[c]};
          return verdict;
        }
      }
    }
    return verdict;
  }

  std::vector<std::pair<FreePoly, FreePoly>> sample_pairs(rewrite::ReductionSystem const& sys,
                                                          std::size_t      count,
                                                          std::size_t      degree,
                                                          std::mt19937_64& rng) {
    auto const& alphabet = sys.alphabet();
    auto        pick     = [&](std::size_t n) {
      return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    };
    auto random_word = [&]() {
      Word w;
      for (std::size_t len = pick(degree + 1); w.size() < len;) {
        w.push_back(static_cast<Letter>(pick(alphabet.size())));
      }
      return FreePoly(sys.algebra(), w);
    };
    std::vector<std::pair<FreePoly, FreePoly>> out;
    for (std::size_t i = 0; i < count; ++i) {
      auto w = random_word();
      if (i % 2 == 0) {
        out.emplace_back(w, rewrite::normal_form(w, sys));
      } else {
        out.emplace_back(w, random_word());
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Two generators for matrix rings

  namespace {

    using Entry = std::tuple<std::size_t, std::size_t, std::size_t>;  // row, col, coordinate
    using MatrixSpace = EchelonSpace<Entry>;

    AlgebraMatrix matmul(embed::AlgebraPresentation const& R,
                         AlgebraMatrix const&              a,
                         AlgebraMatrix const&              b) {
      auto const    n = a.size();
      AlgebraMatrix out(n, std::vector<FreePoly>(n, FreePoly(R.algebra())));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
          if (a[i][k].is_zero()) {
            continue;
          }
          for (std::size_t j = 0; j < n; ++j) {
            if (!b[k][j].is_zero()) {
              out[i][j] += R.mul(a[i][k], b[k][j]);
            }
          }
        }
      }
      return out;
    }

    MatrixSpace::Vector flatten_matrix(embed::AlgebraPresentation const& R,
                                       AlgebraMatrix const&              m) {
      std::size_t const   shift = R.unital() ? 1 : 0;
      MatrixSpace::Vector v;
      for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) {
          for (auto const& [w, c] : m[i][j].terms()) {
            v.emplace(Entry{i, j, w.empty() ? 0 : w[0] + shift}, c.scalar());
          }
        }
      }
      return v;
    }

    AlgebraMatrix unflatten_matrix(embed::AlgebraPresentation const& R,
                                   std::size_t                       n,
                                   MatrixSpace::Vector const&        v) {
      std::size_t const shift = R.unital() ? 1 : 0;
      AlgebraMatrix     out(n, std::vector<FreePoly>(n, FreePoly(R.algebra())));
      for (auto const& [e, c] : v) {
        auto [i, j, k] = e;
        Word w         = (R.unital() && k == 0) ? Word() : Word::letter(static_cast<Letter>(k - shift));
        out[i][j].add_term(w, R.ring().from_rational(c));
      }
      return out;
    }

  }  // namespace

  TwoGenReport matrix_two_generators(embed::AlgebraPresentation const& R,
                                     std::vector<FreePoly> const&      gens,
                                     std::size_t                       degree) {
    auto const kind = R.ring().kind();
    if (kind != CoeffRing::Kind::rationals && kind != CoeffRing::Kind::integers_mod) {
      throw InputError("matrix spans need a field of scalars, got " + R.ring().name());
    }
    auto const field = ScalarField::of(R.ring());
    if (!R.unital()) {
      throw InputError("matrix generators need a unital algebra");
    }
    if (gens.empty()) {
      throw InputError("need at least one generator r_1");
    }
    for (auto const& g : gens) {
      R.check_element(g);
    }
    std::size_t const n = gens.size() + 2;
    TwoGenReport      report;
    auto              zero = FreePoly(R.algebra());
    report.P.assign(n, std::vector<FreePoly>(n, zero));
    report.Q.assign(n, std::vector<FreePoly>(n, zero));
    auto one = R.unit();
    for (std::size_t i = 0; i < n; ++i) {
      report.P[(i + 1) % n][i] = one;
    }
    for (std::size_t i = 0; i < gens.size(); ++i) {
      report.Q[0][i + 1] = gens[i];
    }
    report.Q[1][0] = one;
    report.target  = n * n * R.dimension();

    AlgebraMatrix identity(n, std::vector<FreePoly>(n, zero));
    for (std::size_t i = 0; i < n; ++i) {
      identity[i][i] = one;
    }
    MatrixSpace total(field);
    MatrixSpace level(field);
    total.insert(flatten_matrix(R, identity));
    level.insert(flatten_matrix(R, identity));
    report.dims.push_back(total.dimension());
    if (total.dimension() == report.target) {
      report.full_at = 0;
    }
    for (std::size_t k = 1; k <= degree; ++k) {
      MatrixSpace next(field);
      for (auto const& row : level.reduced_basis()) {
        auto m = unflatten_matrix(R, n, row);
        next.insert(flatten_matrix(R, matmul(R, m, report.P)));
        next.insert(flatten_matrix(R, matmul(R, m, report.Q)));
      }
      for (auto const& row : next.reduced_basis()) {
        total.insert(row);
      }
      level = std::move(next);
      report.dims.push_back(total.dimension());
      if (!report.full_at && total.dimension() == report.target) {
        report.full_at = k;
      }
    }
    return report;
  }

}  // namespace ncalg::oprealize
