#include "ncalg/freepoly.hpp"

#include <algorithm>
#include <cctype>

#include "ncalg/error.hpp"

namespace ncalg {

  AlgebraPtr make_algebra(Alphabet alphabet, CoeffRing ring) {
    for (auto const& name : ring.indeterminates()) {
      if (alphabet.has(name)) {
        throw InputError("ring indeterminate '" + name
                         + "' clashes with an alphabet symbol");
      }
    }
    return std::make_shared<FreeAlgebra const>(
        FreeAlgebra{std::move(alphabet), std::move(ring)});
  }

  bool same_algebra(AlgebraPtr const& a, AlgebraPtr const& b) {
    return a == b || *a == *b;
  }

  FreePoly::FreePoly(AlgebraPtr algebra) : _algebra(std::move(algebra)) {}

  FreePoly::FreePoly(AlgebraPtr algebra, Word const& w)
      : _algebra(std::move(algebra)) {
    add_term(w, ring().one());
  }

  FreePoly::FreePoly(AlgebraPtr algebra, Word const& w, Coeff const& c)
      : _algebra(std::move(algebra)) {
    add_term(w, c);
  }

  Coeff FreePoly::coeff(Word const& w) const {
    auto it = _terms.find(w);
    return it == _terms.end() ? ring().zero() : it->second;
  }

  std::size_t FreePoly::degree() const {
    std::size_t d = 0;
    for (auto const& [w, c] : _terms) {
      d = std::max(d, w.size());
    }
    return d;
  }

  Word FreePoly::leading_word() const {
    auto it = std::max_element(
        _terms.begin(), _terms.end(), [](auto const& a, auto const& b) {
          return deglex_compare(a.first, b.first) < 0;
        });
    return it->first;
  }

  std::vector<std::pair<Word, Coeff>> FreePoly::sorted_terms() const {
    std::vector<std::pair<Word, Coeff>> out(_terms.begin(), _terms.end());
    std::sort(out.begin(), out.end(), [](auto const& a, auto const& b) {
      return deglex_compare(a.first, b.first) > 0;
    });
    return out;
  }

  void FreePoly::add_term(Word const& w, Coeff const& c) {
    auto const& R = ring();
    if (R.is_zero(c)) {
      return;
    }
    auto [it, inserted] = _terms.try_emplace(w, c);
    if (!inserted) {
      it->second = R.add(it->second, c);
      if (R.is_zero(it->second)) {
        _terms.erase(it);
      }
    }
  }

  void FreePoly::check_compatible(FreePoly const& other) const {
    if (!same_algebra(_algebra, other._algebra)) {
      throw InputError("polynomials over different alphabets or rings");
    }
  }

  FreePoly& FreePoly::operator+=(FreePoly const& other) {
    check_compatible(other);
    for (auto const& [w, c] : other._terms) {
      add_term(w, c);
    }
    return *this;
  }

  FreePoly& FreePoly::operator-=(FreePoly const& other) {
    check_compatible(other);
    for (auto const& [w, c] : other._terms) {
      add_term(w, ring().neg(c));
    }
    return *this;
  }

  FreePoly FreePoly::operator-() const {
    FreePoly out(_algebra);
    for (auto const& [w, c] : _terms) {
      out._terms.emplace(w, ring().neg(c));
    }
    return out;
  }

  FreePoly FreePoly::scaled(Coeff const& c) const {
    FreePoly out(_algebra);
    for (auto const& [w, d] : _terms) {
      out.add_term(w, ring().mul(c, d));
    }
    return out;
  }

  FreePoly FreePoly::sandwiched(Word const& u, Word const& v) const {
    FreePoly out(_algebra);
    for (auto const& [w, c] : _terms) {
      out._terms.emplace(u * w * v, c);
    }
    return out;
  }

  FreePoly operator*(FreePoly const& a, FreePoly const& b) {
    a.check_compatible(b);
    FreePoly out(a._algebra);
    auto const& R = a.ring();
    for (auto const& [wa, ca] : a._terms) {
      for (auto const& [wb, cb] : b._terms) {
        out.add_term(wa * wb, R.mul(ca, cb));
      }
    }
    return out;
  }

  bool operator==(FreePoly const& a, FreePoly const& b) {
    return same_algebra(a._algebra, b._algebra) && a._terms == b._terms;
  }

  FreePoly transfer(FreePoly const& p, AlgebraPtr const& target) {
    if (!(p.ring() == target->ring)) {
      throw InputError("cannot move a polynomial over " + p.ring().name()
                       + " into an algebra over " + target->ring.name());
    }
    std::vector<Letter> map;
    for (auto const& s : p.alphabet().symbols()) {
      map.push_back(target->alphabet.has(s) ? target->alphabet.letter(s) : 0);
    }
    FreePoly out(target);
    for (auto const& [w, c] : p.terms()) {
      Word v;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (!target->alphabet.has(p.alphabet().symbol(w[i]))) {
          throw InputError("symbol " + p.alphabet().symbol(w[i])
                           + " is missing from the target alphabet");
        }
        v.push_back(map[w[i]]);
      }
      out.add_term(v, c);
    }
    return out;
  }

  FreePoly poly_add(FreePoly const& p, FreePoly const& q) {
    return p + q;
  }

  FreePoly poly_mul(FreePoly const& p, FreePoly const& q) {
    return p * q;
  }

  ////////////////////////////////////////////////////////////////////////
  // Text grammar
  ////////////////////////////////////////////////////////////////////////

  namespace {
    class PolyParser {
     public:
      PolyParser(std::string_view text, AlgebraPtr const& algebra)
          : _text(text), _algebra(algebra), _ring(algebra->ring) {}

      FreePoly parse() {
        FreePoly out(_algebra);
        skip();
        if (at_end()) {
          fail("empty polynomial");
        }
        bool first = true;
        while (true) {
          skip();
          bool negative = false;
          if (peek() == '+' || peek() == '-') {
            negative = peek() == '-';
            ++_pos;
          } else if (!first) {
            fail("expected '+' or '-'");
          }
          first = false;
          skip();
          auto [w, c] = term();
          if (negative) {
            c = _ring.neg(c);
          }
          out.add_term(w, c);
          skip();
          if (at_end()) {
            break;
          }
        }
        return out;
      }

     private:
      bool at_end() const { return _pos >= _text.size(); }
      char peek() const { return at_end() ? '\0' : _text[_pos]; }
      void skip() {
        while (!at_end() && (peek() == ' ' || peek() == '\t')) {
          ++_pos;
        }
      }
      [[noreturn]] void fail(std::string const& what) const {
        throw ParseError(what, 0, _pos + 1);
      }

      static bool ident_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
      }

      std::string identifier() {
        std::size_t start = _pos;
        while (!at_end() && ident_char(peek())) {
          ++_pos;
        }
        return std::string(_text.substr(start, _pos - start));
      }

      Integer digits() {
        std::size_t start = _pos;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
          ++_pos;
        }
        if (start == _pos) {
          fail("expected digits");
        }
        return Integer(std::string(_text.substr(start, _pos - start)));
      }

      std::uint32_t exponent() {
        skip();
        if (peek() != '^') {
          return 1;
        }
        ++_pos;
        skip();
        Integer e = digits();
        if (!e.fits_uint_p()) {
          fail("exponent too large");
        }
        return static_cast<std::uint32_t>(e.get_ui());
      }

      std::pair<Word, Coeff> term() {
        Word  w;
        Coeff c = _ring.one();
        while (true) {
          skip();
          char ch = peek();
          if (std::isdigit(static_cast<unsigned char>(ch))) {
            Integer num = digits();
            Integer den = 1;
            skip();
            if (peek() == '/') {
              ++_pos;
              skip();
              den = digits();
              if (den == 0) {
                fail("zero denominator");
              }
            }
            Rational q(num, den);
            q.canonicalize();
            try {
              c = _ring.mul(c, _ring.from_rational(q));
            } catch (InputError const& e) {
              fail(e.what());
            }
          } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::size_t start = _pos;
            std::string name  = identifier();
            int         t     = _ring.indeterminate_index(name);
            if (t >= 0) {
              c = _ring.mul(c, _ring.indeterminate(t, exponent()));
            } else {
              _pos = start;
              w *= word();
            }
          } else {
            fail(at_end() ? "unexpected end of input" : "unexpected character");
          }
          skip();
          if (peek() == '*') {
            ++_pos;
            continue;
          }
          return {w, c};
        }
      }

      Word word() {
        Word w;
        while (true) {
          skip();
          std::size_t start = _pos;
          std::string sym   = identifier();
          if (!Alphabet::valid_symbol(sym)) {
            _pos = start;
            fail("expected symbol");
          }
          if (!_algebra->alphabet.has(sym)) {
            _pos = start;
            fail("unknown symbol '" + sym + "'");
          }
          w *= Word::power(_algebra->alphabet.letter(sym), exponent());
          skip();
          if (peek() == '.') {
            ++_pos;
            continue;
          }
          return w;
        }
      }

      std::string_view  _text;
      AlgebraPtr const& _algebra;
      CoeffRing const&  _ring;
      std::size_t       _pos = 0;
    };

    // One printable monomial of a coefficient: sign, magnitude text (possibly
    // empty when it equals 1) and whether it is a pure number.
    struct CoeffPiece {
      bool        negative;
      std::string body;
    };

    std::vector<CoeffPiece> coeff_pieces(CoeffRing const& R, Coeff const& c) {
      std::vector<CoeffPiece> out;
      if (R.kind() != CoeffRing::Kind::polynomials) {
        auto const& q = c.scalar();
        out.push_back({q < 0, q == 1 || q == -1 ? "" : format_rational(abs(q))});
        return out;
      }
      for (auto const& [e, q] : c.poly().terms) {
        std::string body;
        Rational    mag = abs(q);
        if (mag != 1) {
          body = format_rational(mag);
        }
        for (std::size_t j = 0; j < e.size(); ++j) {
          if (e[j] == 0) {
            continue;
          }
          if (!body.empty()) {
            body += '*';
          }
          body += R.indeterminates()[j];
          if (e[j] > 1) {
            body += '^' + std::to_string(e[j]);
          }
        }
        out.push_back({q < 0, body});
      }
      return out;
    }
  }  // namespace

  FreePoly parse_poly(std::string_view text, AlgebraPtr const& algebra) {
    return PolyParser(text, algebra).parse();
  }

  std::string format_poly(FreePoly const& p) {
    if (p.is_zero()) {
      return "0";
    }
    std::string out;
    bool        first = true;
    for (auto const& [w, c] : p.sorted_terms()) {
      for (auto const& piece : coeff_pieces(p.ring(), c)) {
        std::string body;
        if (w.empty()) {
          body = piece.body.empty() ? "1" : piece.body;
        } else if (piece.body.empty()) {
          body = p.alphabet().format(w);
        } else {
          body = piece.body + '*' + p.alphabet().format(w);
        }
        if (first) {
          out += (piece.negative ? "-" : "") + body;
        } else {
          out += (piece.negative ? " - " : " + ") + body;
        }
        first = false;
      }
    }
    return out;
  }

}  // namespace ncalg
