#include "ncalg/coeff.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "ncalg/error.hpp"

namespace ncalg {

  namespace {
    std::uint32_t total_degree(Exponents const& e) {
      std::uint32_t d = 0;
      for (auto x : e) {
        d += x;
      }
      return d;
    }

    void hash_combine(std::size_t& seed, std::size_t v) {
      seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
    }

    std::size_t hash_rational(Rational const& q) {
      return std::hash<std::string>{}(q.get_str());
    }

    using TermMap = std::map<Exponents,
                             Rational,
                             std::function<bool(Exponents const&,
                                                Exponents const&)>>;

    TermMap make_term_map() {
      return TermMap(exponents_greater);
    }

    CommPoly normalize(TermMap&& acc) {
      CommPoly out;
      for (auto& [e, c] : acc) {
        if (c != 0) {
          out.terms.emplace_back(e, c);
        }
      }
      return out;
    }
  }  // namespace

  bool exponents_greater(Exponents const& a, Exponents const& b) {
    auto da = total_degree(a), db = total_degree(b);
    if (da != db) {
      return da > db;
    }
    return a > b;
  }

  std::size_t Coeff::hash() const {
    if (!is_poly()) {
      return hash_rational(scalar());
    }
    std::size_t seed = 0x51;
    for (auto const& [e, c] : poly().terms) {
      for (auto x : e) {
        hash_combine(seed, x);
      }
      hash_combine(seed, hash_rational(c));
    }
    return seed;
  }

  ////////////////////////////////////////////////////////////////////////
  // CoeffRing
  ////////////////////////////////////////////////////////////////////////

  CoeffRing CoeffRing::rationals() {
    return CoeffRing(Kind::rationals, 0, {});
  }

  CoeffRing CoeffRing::integers() {
    return CoeffRing(Kind::integers, 0, {});
  }

  CoeffRing CoeffRing::integers_mod(Integer m) {
    if (m < 2) {
      throw InputError("Z/m requires m >= 2, found " + m.get_str());
    }
    return CoeffRing(Kind::integers_mod, std::move(m), {});
  }

  CoeffRing CoeffRing::polynomials(std::vector<std::string> names) {
    if (names.empty()) {
      throw InputError("Q[...] requires at least one indeterminate");
    }
    std::set<std::string> seen;
    for (auto const& n : names) {
      if (n.empty() || !seen.insert(n).second) {
        throw InputError("invalid or duplicate indeterminate '" + n + "'");
      }
    }
    return CoeffRing(Kind::polynomials, 0, std::move(names));
  }

  CoeffRing CoeffRing::parse(std::string const& raw) {
    std::string text;
    for (char c : raw) {
      if (c != ' ' && c != '\t') {
        text += c;
      }
    }
    if (text == "Q") {
      return rationals();
    }
    if (text == "Z") {
      return integers();
    }
    if (text.size() > 2 && text.compare(0, 2, "Z/") == 0) {
      auto digits = text.substr(2);
      if (!std::all_of(digits.begin(), digits.end(), [](char c) {
            return c >= '0' && c <= '9';
          })) {
        throw InputError("bad modulus in ring '" + raw + "'");
      }
      return integers_mod(Integer(digits));
    }
    if (text.size() > 3 && text.compare(0, 2, "Q[") == 0 && text.back() == ']') {
      std::vector<std::string> names;
      std::string              cur;
      for (std::size_t i = 2; i + 1 < text.size(); ++i) {
        if (text[i] == ',') {
          names.push_back(cur);
          cur.clear();
        } else {
          cur += text[i];
        }
      }
      names.push_back(cur);
      return polynomials(std::move(names));
    }
    throw InputError("unknown ring '" + raw + "' (expected Q, Z, Z/m or Q[t,...])");
  }

  int CoeffRing::indeterminate_index(std::string const& name) const {
    auto it = std::find(_names.begin(), _names.end(), name);
    return it == _names.end() ? -1 : static_cast<int>(it - _names.begin());
  }

  bool CoeffRing::is_field() const {
    switch (_kind) {
      case Kind::rationals: return true;
      case Kind::integers_mod:
        return mpz_probab_prime_p(_modulus.get_mpz_t(), 25) > 0;
      default: return false;
    }
  }

  std::string CoeffRing::name() const {
    switch (_kind) {
      case Kind::rationals: return "Q";
      case Kind::integers: return "Z";
      case Kind::integers_mod: return "Z/" + _modulus.get_str();
      case Kind::polynomials: {
        std::string s = "Q[";
        for (std::size_t i = 0; i < _names.size(); ++i) {
          s += (i ? "," : "") + _names[i];
        }
        return s + "]";
      }
    }
    return "?";
  }

  Rational CoeffRing::reduce_scalar(Rational q) const {
    q.canonicalize();  // callers may pass unreduced fractions
    switch (_kind) {
      case Kind::rationals: return q;
      case Kind::integers:
        if (q.get_den() != 1) {
          throw InputError("non-integer " + q.get_str() + " in ring Z");
        }
        return q;
      case Kind::integers_mod: {
        Integer num = q.get_num() % _modulus;
        if (num < 0) {
          num += _modulus;
        }
        Integer den = q.get_den();
        if (den != 1) {
          Integer inv;
          if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), _modulus.get_mpz_t())
              == 0) {
            throw InputError("denominator " + den.get_str()
                             + " not invertible in " + name());
          }
          num = (num * inv) % _modulus;
        }
        return Rational(num);
      }
      case Kind::polynomials: break;
    }
    return q;
  }

  Coeff CoeffRing::zero() const {
    return _kind == Kind::polynomials ? Coeff(CommPoly{}) : Coeff(Rational(0));
  }

  Coeff CoeffRing::one() const {
    return from_rational(Rational(1));
  }

  Coeff CoeffRing::from_rational(Rational const& value) const {
    if (_kind == Kind::polynomials) {
      Rational q = value;
      q.canonicalize();
      CommPoly p;
      if (q != 0) {
        p.terms.emplace_back(Exponents(_names.size(), 0), q);
      }
      return Coeff(std::move(p));
    }
    return Coeff(reduce_scalar(value));
  }

  Coeff CoeffRing::indeterminate(std::size_t i, std::uint32_t power) const {
    if (_kind != Kind::polynomials || i >= _names.size()) {
      throw InputError("ring " + name() + " has no indeterminate #"
                       + std::to_string(i));
    }
    Exponents e(_names.size(), 0);
    e[i] = power;
    CommPoly p;
    p.terms.emplace_back(std::move(e), Rational(1));
    return Coeff(std::move(p));
  }

  Coeff CoeffRing::add(Coeff const& a, Coeff const& b) const {
    if (_kind != Kind::polynomials) {
      return Coeff(reduce_scalar(a.scalar() + b.scalar()));
    }
    auto acc = make_term_map();
    for (auto const& [e, c] : a.poly().terms) {
      acc[e] += c;
    }
    for (auto const& [e, c] : b.poly().terms) {
      acc[e] += c;
    }
    return Coeff(normalize(std::move(acc)));
  }

  Coeff CoeffRing::neg(Coeff const& a) const {
    if (_kind != Kind::polynomials) {
      return Coeff(reduce_scalar(-a.scalar()));
    }
    CommPoly p = a.poly();
    for (auto& t : p.terms) {
      t.second = -t.second;
    }
    return Coeff(std::move(p));
  }

  Coeff CoeffRing::sub(Coeff const& a, Coeff const& b) const {
    return add(a, neg(b));
  }

  Coeff CoeffRing::mul(Coeff const& a, Coeff const& b) const {
    if (_kind != Kind::polynomials) {
      return Coeff(reduce_scalar(a.scalar() * b.scalar()));
    }
    auto const& pa = a.poly().terms;
    auto const& pb = b.poly().terms;
    if (pa.empty() || pb.empty()) {
      return zero();
    }
    // Fast path for constants, which dominate in practice.
    if (pb.size() == 1 && total_degree(pb[0].first) == 0) {
      CommPoly p = a.poly();
      for (auto& t : p.terms) {
        t.second *= pb[0].second;
      }
      return Coeff(std::move(p));
    }
    auto acc = make_term_map();
    for (auto const& [ea, ca] : pa) {
      for (auto const& [eb, cb] : pb) {
        Exponents e(ea.size());
        for (std::size_t i = 0; i < e.size(); ++i) {
          e[i] = ea[i] + eb[i];
        }
        acc[e] += ca * cb;
      }
    }
    return Coeff(normalize(std::move(acc)));
  }

  Coeff CoeffRing::inverse(Coeff const& a) const {
    if (!is_field()) {
      throw InputError("ring " + name() + " is not a field");
    }
    if (is_zero(a)) {
      throw InputError("division by zero in " + name());
    }
    return Coeff(reduce_scalar(1 / a.scalar()));
  }

  bool CoeffRing::is_zero(Coeff const& a) const {
    return a.is_poly() ? a.poly().is_zero() : a.scalar() == 0;
  }

  bool CoeffRing::is_one(Coeff const& a) const {
    return a == one();
  }

  bool CoeffRing::is_canonical(Coeff const& a) const {
    if (_kind == Kind::polynomials) {
      if (!a.is_poly()) {
        return false;
      }
      auto const& t = a.poly().terms;
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i].second == 0 || t[i].first.size() != _names.size()) {
          return false;
        }
        if (i > 0 && !exponents_greater(t[i - 1].first, t[i].first)) {
          return false;
        }
      }
      return true;
    }
    if (a.is_poly()) {
      return false;
    }
    auto const& q = a.scalar();
    if (q.get_den() <= 0 || gcd(q.get_num(), q.get_den()) != 1) {
      return false;
    }
    switch (_kind) {
      case Kind::integers: return q.get_den() == 1;
      case Kind::integers_mod:
        return q.get_den() == 1 && q >= 0 && q.get_num() < _modulus;
      default: return true;
    }
  }

  std::string format_rational(Rational const& q) {
    return q.get_str();
  }

  std::string CoeffRing::format(Coeff const& a) const {
    if (_kind != Kind::polynomials) {
      return format_rational(a.scalar());
    }
    auto const& terms = a.poly().terms;
    if (terms.empty()) {
      return "0";
    }
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      auto const& [e, c] = terms[i];
      Rational        mag = abs(c);
      std::string     mono;
      for (std::size_t j = 0; j < e.size(); ++j) {
        if (e[j] == 0) {
          continue;
        }
        if (!mono.empty()) {
          mono += '*';
        }
        mono += _names[j];
        if (e[j] > 1) {
          mono += '^' + std::to_string(e[j]);
        }
      }
      std::string body;
      if (mono.empty()) {
        body = format_rational(mag);
      } else if (mag == 1) {
        body = mono;
      } else {
        body = format_rational(mag) + '*' + mono;
      }
      if (i == 0) {
        out += (c < 0 ? "-" : "") + body;
      } else {
        out += (c < 0 ? " - " : " + ") + body;
      }
    }
    return out;
  }

}  // namespace ncalg
