#include "ncalg/coproduct.hpp"

#include <algorithm>
#include <set>

#include "ncalg/error.hpp"

namespace ncalg::coproduct {

  namespace {

    using Coords = std::vector<Rational>;

    void require_rational_unital(embed::AlgebraPresentation const& A) {
      if (A.ring().kind() != CoeffRing::Kind::rationals) {
        throw InputError("coproduct factors must be algebras over Q");
      }
      if (!A.unital()) {
        throw InputError("coproduct factors must be unital");
      }
      if (auto bad = A.associativity_failure()) {
        auto const& s = A.basis().symbols();
        throw InputError("factor table is not associative at " + s[(*bad)[0]] + "."
                         + s[(*bad)[1]] + "." + s[(*bad)[2]]);
      }
    }

    // Coordinates over {1} ∪ B, unit first.
    Coords coords(embed::AlgebraPresentation const& A, FreePoly const& p) {
      Coords v(A.rank() + 1);
      for (auto const& [w, c] : p.terms()) {
        v[w.empty() ? 0 : w[0] + 1] = c.scalar();
      }
      return v;
    }

    FreePoly from_coords(embed::AlgebraPresentation const& A, Coords const& v) {
      FreePoly p(A.algebra());
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] != 0) {
          p.add_term(i == 0 ? Word() : Word::letter(static_cast<Letter>(i - 1)),
                     Coeff(v[i]));
        }
      }
      return p;
    }

    using Truncated = std::array<Rational, 3>;  // coefficients of 1, x, x^2

    Truncated truncated_mul(Truncated const& a, Truncated const& b) {
      Truncated out{};
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; i + j < 3; ++j) {
          out[i + j] += a[i] * b[j];
        }
      }
      return out;
    }

    bool is_factor_one_class(SummandClass c) {
      return c == SummandClass::M1;
    }

    SummandClass merge(SummandClass a, SummandClass b) {
      return a == SummandClass::X && b == SummandClass::X ? SummandClass::X2
                                                          : SummandClass::M2;
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // DecomposedAlgebra

  DecomposedAlgebra DecomposedAlgebra::factor_one(embed::AlgebraPresentation const& A) {
    require_rational_unital(A);
    DecomposedAlgebra d;
    d._role      = Role::factor_one;
    auto const n = A.rank();
    d._names     = A.basis().symbols();
    d._classes.assign(n, SummandClass::M1);
    for (std::size_t i = 0; i < n; ++i) {
      Coords v(n + 1);
      v[i + 1] = 1;
      d._original.push_back(std::move(v));
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        auto v = coords(A, A.product(static_cast<Letter>(i), static_cast<Letter>(j)));
        d._table.push_back({v[0], Coords(v.begin() + 1, v.end())});
      }
    }
    return d;
  }

  DecomposedAlgebra DecomposedAlgebra::factor_two(embed::AlgebraPresentation const& A,
                                                  std::vector<FreePoly> const&      psi,
                                                  std::string const&                lift) {
    require_rational_unital(A);
    auto const n = A.rank();
    if (psi.size() != n) {
      throw InputError("psi needs one image per basis symbol");
    }
    if (!A.basis().has(lift)) {
      throw InputError("lift " + lift + " is not a basis symbol");
    }
    // psi on {1} ∪ B.
    std::vector<Truncated> image(n + 1);
    image[0] = {Rational(1), Rational(0), Rational(0)};
    for (std::size_t i = 0; i < n; ++i) {
      if (psi[i].alphabet().size() != 1) {
        throw InputError("psi images must be polynomials in a single variable");
      }
      for (auto const& [w, c] : psi[i].terms()) {
        if (w.size() < 3) {
          image[i + 1][w.size()] += c.scalar();
        }
      }
    }
    auto apply = [&](Coords const& v) {
      Truncated t{};
      for (std::size_t i = 0; i <= n; ++i) {
        for (std::size_t k = 0; k < 3; ++k) {
          t[k] += v[i] * image[i][k];
        }
      }
      return t;
    };
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        auto lhs = apply(coords(A, A.product(static_cast<Letter>(i), static_cast<Letter>(j))));
        auto rhs = truncated_mul(image[i + 1], image[j + 1]);
        if (lhs != rhs) {
          throw InputError("psi is not multiplicative on " + A.basis().symbols()[i] + "."
                           + A.basis().symbols()[j]);
        }
      }
    }
    auto l = A.basis().letter(lift);
    if (image[l + 1] != Truncated{Rational(0), Rational(1), Rational(0)}) {
      throw InputError("psi does not send the lift " + lift + " to x");
    }

    Coords x(n + 1);
    x[l + 1] = 1;
    Coords  x2 = coords(A, A.mul(from_coords(A, x), from_coords(A, x)));
    QMatrix psi_matrix(3, n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
      for (std::size_t k = 0; k < 3; ++k) {
        psi_matrix(k, i) = image[i][k];
      }
    }
    auto kernel = psi_matrix.nullspace();

    DecomposedAlgebra d;
    d._role     = Role::factor_two;
    d._names    = {"x", "x2"};
    d._classes  = {SummandClass::X, SummandClass::X2};
    d._original = {x, x2};
    for (std::size_t k = 0; k < kernel.size(); ++k) {
      d._names.push_back("k" + std::to_string(k + 1));
      d._classes.push_back(SummandClass::M2);
      d._original.push_back(kernel[k]);
    }
    if (d._original.size() != n) {
      throw InputError("psi is not surjective onto Q[x]/(x^3)");
    }
    QMatrix P(n + 1, n + 1);
    P(0, 0) = 1;
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t r = 0; r <= n; ++r) {
        P(r, c + 1) = d._original[c][r];
      }
    }
    QMatrix Pinv = P.inverse();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        auto prod = coords(A, A.mul(from_coords(A, d._original[i]),
                                    from_coords(A, d._original[j])));
        Coords nc(n + 1);
        for (std::size_t r = 0; r <= n; ++r) {
          for (std::size_t c = 0; c <= n; ++c) {
            nc[r] += Pinv(r, c) * prod[c];
          }
        }
        d._table.push_back({nc[0], Coords(nc.begin() + 1, nc.end())});
      }
    }
    return d;
  }

  ////////////////////////////////////////////////////////////////////////
  // Coproduct

  Coproduct::Coproduct(DecomposedAlgebra A1, DecomposedAlgebra A2)
      : _A1(std::move(A1)), _A2(std::move(A2)) {
    std::vector<std::string> names = _A1.names();
    names.insert(names.end(), _A2.names().begin(), _A2.names().end());
    _alphabet = Alphabet(names);
  }

  SummandClass Coproduct::summand_class(Letter l) const {
    if (l < d1()) {
      return SummandClass::M1;
    }
    return _A2.role() == DecomposedAlgebra::Role::factor_two ? _A2.classes()[l - d1()]
                                                             : SummandClass::M2;
  }

  std::vector<SummandClass> Coproduct::summand(Word const& w) const {
    std::vector<SummandClass> out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      out.push_back(summand_class(w[i]));
    }
    return out;
  }

  bool Coproduct::is_alternating(Word const& w) const {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] >= d1() + d2()) {
        return false;
      }
      if (i > 0 && factor_of(w[i]) == factor_of(w[i - 1])) {
        return false;
      }
    }
    return true;
  }

  Element Coproduct::word(Word const& w) const {
    if (!is_alternating(w)) {
      throw InputError("word " + _alphabet.format(w) + " is not alternating");
    }
    return {{w, Rational(1)}};
  }

  void Coproduct::straighten(Word const& a, Word const& b, Rational const& c, Element& out) const {
    if (c == 0) {
      return;
    }
    auto emit = [&](Word const& w, Rational const& k) {
      auto [it, inserted] = out.try_emplace(w, Rational(0));
      it->second += k;
      if (it->second == 0) {
        out.erase(it);
      }
    };
    if (a.empty() || b.empty() || factor_of(a[a.size() - 1]) != factor_of(b[0])) {
      emit(a * b, c);
      return;
    }
    Letter s      = a[a.size() - 1];
    Letter t      = b[0];
    bool   first  = factor_of(s) == 1;
    auto   offset = first ? 0 : d1();
    auto const& p = (first ? _A1 : _A2).product(s - offset, t - offset);
    Word a2 = a.prefix(a.size() - 1);
    Word b2 = b.factor(1);
    straighten(a2, b2, c * p.scalar, out);
    for (std::size_t k = 0; k < p.part.size(); ++k) {
      if (p.part[k] != 0) {
        emit(a2 * Word::letter(static_cast<Letter>(offset + k)) * b2, c * p.part[k]);
      }
    }
  }

  Element Coproduct::mul(Element const& u, Element const& v) const {
    Element out;
    for (auto const& [a, ca] : u) {
      for (auto const& [b, cb] : v) {
        straighten(a, b, ca * cb, out);
      }
    }
    return out;
  }

  Element Coproduct::add(Element const& u, Element const& v, Rational const& c) const {
    Element out = u;
    for (auto const& [w, k] : v) {
      auto [it, inserted] = out.try_emplace(w, Rational(0));
      it->second += c * k;
      if (it->second == 0) {
        out.erase(it);
      }
    }
    return out;
  }

  std::string Coproduct::format(Element const& e) const {
    std::string out;
    for (auto const& [w, c] : e) {
      bool     neg = c < 0;
      Rational mag = neg ? Rational(-c) : c;
      std::string t;
      if (w.empty()) {
        t = format_rational(mag);
      } else {
        t = mag == 1 ? _alphabet.format(w) : format_rational(mag) + "*" + _alphabet.format(w);
      }
      if (out.empty()) {
        out = (neg ? "-" : "") + t;
      } else {
        out += (neg ? " - " : " + ") + t;
      }
    }
    return out.empty() ? "0" : out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Counting

  std::vector<Integer> alternating_word_counts(std::size_t d1, std::size_t d2, std::size_t n) {
    if (d1 == 0 || d2 == 0) {
      throw InputError("factor dimensions must be at least 1");
    }
    std::vector<Integer> out{Integer(1)};
    Integer              e1 = static_cast<unsigned long>(d1);  // ending in factor 1
    Integer              e2 = static_cast<unsigned long>(d2);
    Integer              total = 1;
    for (std::size_t k = 1; k <= n; ++k) {
      total += e1 + e2;
      out.push_back(total);
      Integer n1 = e2 * static_cast<unsigned long>(d1);
      Integer n2 = e1 * static_cast<unsigned long>(d2);
      e1 = n1;
      e2 = n2;
    }
    return out;
  }

  Integer alternating_word_count(std::size_t d1, std::size_t d2, std::size_t n) {
    return alternating_word_counts(d1, d2, n).back();
  }

  ////////////////////////////////////////////////////////////////////////
  // Tensor subalgebra

  namespace {

    using WordSpace = EchelonSpace<Word, DeglexGreater>;

    WordSpace::Vector to_vector(Element const& e) {
      return WordSpace::Vector(e.begin(), e.end());
    }

    Element to_element(WordSpace::Vector const& v) {
      return Element(v.begin(), v.end());
    }

    void require_factor_two(Coproduct const& B) {
      if (B.second().role() != DecomposedAlgebra::Role::factor_two) {
        throw InputError("the second factor needs psi and a lift of x");
      }
    }

    bool has_tensor_shape(Coproduct const& B, Word const& w, std::size_t d) {
      if (w.size() != 2 * d + 1) {
        return false;
      }
      for (std::size_t i = 0; i < w.size(); ++i) {
        auto c    = B.summand_class(w[i]);
        auto want = i % 2 == 1                          ? SummandClass::M1
                    : (i == 0 || i + 1 == w.size()) ? SummandClass::X
                                                        : SummandClass::X2;
        if (c != want) {
          return false;
        }
      }
      return true;
    }

  }  // namespace

  std::vector<Element> tensor_generators(Coproduct const& B) {
    require_factor_two(B);
    std::vector<Element> out;
    for (std::size_t i = 0; i < B.d1(); ++i) {
      out.push_back(B.word(Word{B.x_letter(), B.m1_letter(i), B.x_letter()}));
    }
    return out;
  }

  TensorSubalgebraReport tensor_subalgebra(Coproduct const& B, std::size_t degree) {
    auto                   gens = tensor_generators(B);
    TensorSubalgebraReport r;
    std::vector<Element>   level = gens;
    Integer                expected = 1;
    for (std::size_t d = 1; d <= degree; ++d) {
      WordSpace space(ScalarField::rationals());
      if (d == 1) {
        for (auto const& g : gens) {
          space.insert(to_vector(g));
        }
      } else {
        for (auto const& u : level) {
          for (auto const& g : gens) {
            space.insert(to_vector(B.mul(u, g)));
          }
        }
      }
      level.clear();
      for (auto const& row : space.reduced_basis()) {
        level.push_back(to_element(row));
        for (auto const& [w, c] : row) {
          r.shape_ok = r.shape_ok && has_tensor_shape(B, w, d);
        }
      }
      expected *= static_cast<unsigned long>(B.d1());
      r.dims.push_back(space.dimension());
      r.dims_match = r.dims_match && Integer(static_cast<unsigned long>(space.dimension())) == expected;
      r.bases.push_back(level);
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Summand closure

  std::vector<std::vector<SummandClass>> predicted_summands(
      std::vector<SummandClass> const& u, std::vector<SummandClass> const& v) {
    if (u.empty()) {
      return {v};
    }
    if (v.empty()) {
      return {u};
    }
    auto last  = u.back();
    auto first = v.front();
    std::vector<SummandClass> head(u.begin(), u.end() - 1);
    std::vector<SummandClass> tail(v.begin() + 1, v.end());
    auto joined = [&](SummandClass mid) {
      auto w = head;
      w.push_back(mid);
      w.insert(w.end(), tail.begin(), tail.end());
      return w;
    };
    if (is_factor_one_class(last) != is_factor_one_class(first)) {
      auto w = u;
      w.insert(w.end(), v.begin(), v.end());
      return {w};
    }
    if (!is_factor_one_class(last)) {
      return {joined(merge(last, first))};
    }
    // M1 M1 ⊆ k + M1: the scalar part straightens the neighbours.
    std::vector<std::vector<SummandClass>> out{joined(SummandClass::M1)};
    for (auto& w : predicted_summands(head, tail)) {
      out.push_back(std::move(w));
    }
    return out;
  }

  ClosureVerdict summand_closure_check(Coproduct const& B,
                                       std::size_t      samples,
                                       std::size_t      degree,
                                       std::mt19937_64& rng) {
    require_factor_two(B);
    std::map<SummandClass, std::vector<Letter>> by_class;
    for (std::size_t l = 0; l < B.d1() + B.d2(); ++l) {
      by_class[B.summand_class(static_cast<Letter>(l))].push_back(static_cast<Letter>(l));
    }
    std::vector<SummandClass> second_classes;
    for (auto c : {SummandClass::X, SummandClass::X2, SummandClass::M2}) {
      if (by_class.count(c) != 0) {
        second_classes.push_back(c);
      }
    }
    auto pick = [&](std::size_t n) {
      return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    };
    auto random_pure = [&]() {
      std::size_t               len       = pick(degree + 1);
      bool                      m1        = pick(2) == 0;
      std::vector<SummandClass> shape;
      for (std::size_t i = 0; i < len; ++i, m1 = !m1) {
        shape.push_back(m1 ? SummandClass::M1 : second_classes[pick(second_classes.size())]);
      }
      Element     e;
      std::size_t terms = 1 + pick(3);
      for (std::size_t t = 0; t < terms; ++t) {
        Word w;
        for (auto c : shape) {
          auto const& ls = by_class[c];
          w.push_back(ls[pick(ls.size())]);
        }
        e = B.add(e, B.word(w), Rational(static_cast<long>(pick(7)) - 3));
      }
      if (e.empty()) {
        Word w;
        for (auto c : shape) {
          w.push_back(by_class[c].front());
        }
        e = B.word(w);
      }
      return std::make_pair(e, shape);
    };

    ClosureVerdict verdict;
    for (std::size_t s = 0; s < samples && !verdict.failure; ++s) {
      auto [u, cu] = random_pure();
      auto [v, cv] = random_pure();
      auto predicted = predicted_summands(cu, cv);
      if (predicted.size() > 1) {
        ++verdict.two_way;
      }
      auto product = B.mul(u, v);
      for (auto const& [w, c] : product) {
        if (std::find(predicted.begin(), predicted.end(), B.summand(w)) == predicted.end()) {
          verdict.failure = ClosureFailure{u, v, product};
          break;
        }
      }
      ++verdict.samples;
    }
    return verdict;
  }

  ////////////////////////////////////////////////////////////////////////
  // Ideal extension inside B

  CoproductIdealVerdict check_ideal_extension(Coproduct const&            B,
                                              std::vector<Element> const& ideal_gens,
                                              std::size_t                 degree,
                                              std::size_t                 max_vectors) {
    auto gens = tensor_generators(B);
    CoproductIdealVerdict verdict{true, degree, std::nullopt};
    std::size_t           inserted = 0;
    auto                  guard    = [&]() {
      if (++inserted > max_vectors) {
        throw ResourceLimit("more than " + std::to_string(max_vectors) + " spanning vectors");
      }
    };

    // products[k]: all products of k generators (single words here).
    std::vector<std::vector<Element>> products{{B.one()}};
    for (std::size_t k = 1; k <= degree; ++k) {
      std::vector<Element> next;
      for (auto const& u : products.back()) {
        for (auto const& g : gens) {
          guard();
          next.push_back(B.mul(u, g));
        }
      }
      products.push_back(std::move(next));
    }
    WordSpace A(ScalarField::rationals());
    for (std::size_t k = 1; k <= degree; ++k) {
      for (auto const& p : products[k]) {
        A.insert(to_vector(p));
      }
    }
    verdict.dim_subalgebra = A.dimension();

    auto gen_degree = [](Element const& g) {
      std::size_t d = 0;
      for (auto const& [w, c] : g) {
        d = std::max(d, w.size() / 2);
      }
      return d;
    };
    auto word_length = [](Element const& g) {
      std::size_t d = 0;
      for (auto const& [w, c] : g) {
        d = std::max(d, w.size());
      }
      return d;
    };

    WordSpace I(ScalarField::rationals());
    for (auto const& g : ideal_gens) {
      if (g.empty()) {
        continue;
      }
      auto dg = gen_degree(g);
      if (dg > degree) {
        continue;
      }
      if (!A.contains(to_vector(g))) {
        throw InputError("ideal generator " + B.format(g) + " is not in the subalgebra");
      }
      for (std::size_t a = 0; a + dg <= degree; ++a) {
        for (auto const& pa : products[a]) {
          auto ag = B.mul(pa, g);
          for (std::size_t b = 0; a + dg + b <= degree; ++b) {
            for (auto const& pb : products[b]) {
              guard();
              I.insert(to_vector(B.mul(ag, pb)));
            }
          }
        }
      }
    }
    verdict.dim_ideal = I.dimension();

    // A product of d generators x m x reduces to length 2d + 1, but as
    // t g t' it spans 3d letters (each x.x straightens to x2).
    auto const        L = 3 * degree;
    std::vector<Word> alternating{Word()};
    for (std::size_t i = 0; i < alternating.size(); ++i) {
      Word w = alternating[i];
      if (w.size() >= L) {
        continue;
      }
      for (std::size_t l = 0; l < B.d1() + B.d2(); ++l) {
        Word v = w;
        v.push_back(static_cast<Letter>(l));
        if (B.is_alternating(v)) {
          alternating.push_back(std::move(v));
        }
      }
    }
    WordSpace J(ScalarField::rationals());
    for (auto const& g : ideal_gens) {
      if (g.empty() || word_length(g) > L) {
        continue;
      }
      auto room = L - word_length(g);
      for (auto const& t : alternating) {
        if (t.size() > room) {
          break;
        }
        auto tg = B.mul(B.word(t), g);
        for (auto const& t2 : alternating) {
          if (t.size() + t2.size() > room) {
            break;
          }
          guard();
          J.insert(to_vector(B.mul(tg, B.word(t2))));
        }
      }
    }
    verdict.dim_ambient = J.dimension();

    auto meet                = intersection(A, J);
    verdict.dim_intersection = meet.size();
    if (auto best = outside_witness(I, meet)) {
      verdict.holds   = false;
      verdict.witness = to_element(*best);
    }
    return verdict;
  }

}  // namespace ncalg::coproduct
