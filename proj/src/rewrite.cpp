#include "ncalg/rewrite.hpp"

#include <algorithm>
#include <map>

#include "ncalg/error.hpp"

namespace ncalg::rewrite {

  ReductionSystem::ReductionSystem(AlgebraPtr        algebra,
                                   std::vector<Rule> rules,
                                   MonomialOrder     order)
      : _algebra(std::move(algebra)),
        _rules(std::move(rules)),
        _order(order),
        _width(std::max<std::size_t>(_algebra->alphabet.size(), 1)) {
    for (std::size_t i = 0; i < _rules.size(); ++i) {
      auto const& r = _rules[i];
      if (r.lhs.empty()) {
        throw InputError("rule " + std::to_string(i) + " has an empty lhs");
      }
      for (std::size_t j = 0; j < r.lhs.size(); ++j) {
        if (r.lhs[j] >= alphabet().size()) {
          throw InputError("rule " + std::to_string(i)
                           + " uses a letter outside the alphabet");
        }
      }
      if (!same_algebra(r.rhs.algebra(), _algebra)) {
        throw InputError("rule " + std::to_string(i)
                         + " is over a different alphabet or ring");
      }
      for (auto const& [w, c] : r.rhs.terms()) {
        if (!_order.less(w, r.lhs)) {
          throw InputError("rule " + format_rule(r, alphabet())
                           + " is not decreasing: " + alphabet().format(w)
                           + " is not below " + alphabet().format(r.lhs));
        }
      }
    }
    _children.assign(_width, -1);
    _terminal.emplace_back();
    for (std::size_t i = 0; i < _rules.size(); ++i) {
      std::int32_t node = 0;
      for (std::size_t j = 0; j < _rules[i].lhs.size(); ++j) {
        auto  slot = static_cast<std::size_t>(node) * _width + _rules[i].lhs[j];
        if (_children[slot] < 0) {
          _children[slot] = static_cast<std::int32_t>(_terminal.size());
          _terminal.emplace_back();
          _children.resize(_children.size() + _width, -1);
        }
        node = _children[slot];
      }
      _terminal[node].push_back(i);
    }
  }

  std::optional<Match> ReductionSystem::leftmost_match(Word const& w) const {
    for (std::size_t start = 0; start < w.size(); ++start) {
      std::int32_t node = 0;
      std::size_t  best = _rules.size();
      for (std::size_t j = start; j < w.size(); ++j) {
        node = child(node, w[j]);
        if (node < 0) {
          break;
        }
        if (!_terminal[node].empty()) {
          best = std::min(best, _terminal[node].front());
        }
      }
      if (best < _rules.size()) {
        return Match{start, best};
      }
    }
    return std::nullopt;
  }

  std::vector<Match> ReductionSystem::all_matches(Word const& w) const {
    std::vector<Match> out;
    for (std::size_t start = 0; start < w.size(); ++start) {
      std::int32_t node = 0;
      auto         first = out.size();
      for (std::size_t j = start; j < w.size(); ++j) {
        node = child(node, w[j]);
        if (node < 0) {
          break;
        }
        for (auto r : _terminal[node]) {
          out.push_back({start, r});
        }
      }
      std::sort(out.begin() + static_cast<std::ptrdiff_t>(first),
                out.end(),
                [](Match const& a, Match const& b) { return a.rule < b.rule; });
    }
    return out;
  }

  FreePoly reduce_at(Word const& w, std::size_t pos, Rule const& rule) {
    if (!w.occurs_at(rule.lhs, pos)) {
      throw InputError("lhs does not occur at position " + std::to_string(pos));
    }
    return rule.rhs.sandwiched(w.prefix(pos), w.factor(pos + rule.lhs.size()));
  }

  FreePoly normal_form(FreePoly const&         p,
                       ReductionSystem const&  sys,
                       std::size_t             fuel,
                       std::vector<TraceStep>* trace) {
    if (!same_algebra(p.algebra(), sys.algebra())) {
      throw InputError("polynomial and system are over different algebras");
    }
    auto const& R = sys.ring();
    // Pending terms, largest word first. Every reduction only produces
    // smaller words, so each popped irreducible word is final.
    std::map<Word, Coeff, DeglexGreater> work;
    for (auto const& [w, c] : p.terms()) {
      work.emplace(w, c);
    }
    FreePoly    out(sys.algebra());
    std::size_t steps = 0;
    while (!work.empty()) {
      auto node  = work.extract(work.begin());
      auto const& w = node.key();
      auto const& c = node.mapped();
      auto m = sys.leftmost_match(w);
      if (!m) {
        out.add_term(w, c);
        continue;
      }
      if (steps == fuel) {
        throw FuelExhausted(fuel);
      }
      ++steps;
      if (trace != nullptr) {
        trace->push_back({w, m->pos, m->rule});
      }
      auto const& rule   = sys.rules()[m->rule];
      Word const  prefix = w.prefix(m->pos);
      Word const  suffix = w.factor(m->pos + rule.lhs.size());
      for (auto const& [rw, rc] : rule.rhs.terms()) {
        Word nw = prefix * rw * suffix;
        auto cc = R.mul(c, rc);
        auto [it, inserted] = work.try_emplace(std::move(nw), cc);
        if (!inserted) {
          it->second = R.add(it->second, cc);
          if (R.is_zero(it->second)) {
            work.erase(it);
          }
        }
      }
    }
    return out;
  }

  FreePoly normal_form_random(FreePoly const&        p,
                              ReductionSystem const& sys,
                              std::mt19937_64&       rng,
                              std::size_t            fuel) {
    FreePoly    cur   = p;
    std::size_t steps = 0;
    while (true) {
      std::vector<std::pair<Word, Coeff>> reducible;
      for (auto const& t : cur.sorted_terms()) {
        if (sys.is_reducible(t.first)) {
          reducible.push_back(t);
        }
      }
      if (reducible.empty()) {
        return cur;
      }
      if (steps == fuel) {
        throw FuelExhausted(fuel);
      }
      ++steps;
      std::uniform_int_distribution<std::size_t> pick_term(0, reducible.size() - 1);
      auto const& [w, c] = reducible[pick_term(rng)];
      auto matches = sys.all_matches(w);
      std::uniform_int_distribution<std::size_t> pick_match(0, matches.size() - 1);
      auto m = matches[pick_match(rng)];
      FreePoly replaced = reduce_at(w, m.pos, sys.rules()[m.rule]).scaled(c);
      cur -= FreePoly(sys.algebra(), w, c);
      cur += replaced;
    }
  }

  bool is_irreducible(FreePoly const& p, ReductionSystem const& sys) {
    for (auto const& [w, c] : p.terms()) {
      if (sys.is_reducible(w)) {
        return false;
      }
    }
    return true;
  }

  std::vector<Ambiguity> find_ambiguities(ReductionSystem const& sys) {
    auto const&            rules = sys.rules();
    std::vector<Ambiguity> out;
    for (std::size_t i = 0; i < rules.size(); ++i) {
      for (std::size_t j = 0; j < rules.size(); ++j) {
        Word const& a = rules[i].lhs;
        Word const& b = rules[j].lhs;
        for (std::size_t k = 1; k < std::min(a.size(), b.size()); ++k) {
          if (a.suffix(k) == b.prefix(k)) {
            out.push_back({Ambiguity::Kind::overlap,
                           i,
                           j,
                           a * b.factor(k),
                           0,
                           a.size() - k});
          }
        }
      }
    }
    for (std::size_t i = 0; i < rules.size(); ++i) {
      for (std::size_t j = 0; j < rules.size(); ++j) {
        if (i == j) {
          continue;
        }
        Word const& a = rules[i].lhs;
        Word const& b = rules[j].lhs;
        if (a == b && j < i) {
          continue;  // identical lhs: report the pair once
        }
        for (auto pos = a.find(b); pos != std::string::npos; pos = a.find(b, pos + 1)) {
          out.push_back({Ambiguity::Kind::inclusion, i, j, a, 0, pos});
        }
      }
    }
    return out;
  }

  bool DiamondReport::resolvable() const {
    return first_failure() == nullptr;
  }

  AmbiguityVerdict const* DiamondReport::first_failure() const {
    for (auto const& v : verdicts) {
      if (v.status != AmbiguityVerdict::Status::resolvable) {
        return &v;
      }
    }
    return nullptr;
  }

  DiamondReport check_diamond(ReductionSystem const& sys, std::size_t fuel) {
    DiamondReport report;
    for (auto const& amb : find_ambiguities(sys)) {
      AmbiguityVerdict v{amb, AmbiguityVerdict::Status::resolvable, {}, {}};
      try {
        auto one = reduce_at(amb.witness, amb.first_pos, sys.rules()[amb.first]);
        auto two = reduce_at(amb.witness, amb.second_pos, sys.rules()[amb.second]);
        v.via_first  = normal_form(one, sys, fuel);
        v.via_second = normal_form(two, sys, fuel);
        if (!(*v.via_first == *v.via_second)) {
          v.status = AmbiguityVerdict::Status::unresolvable;
        }
      } catch (FuelExhausted const&) {
        v.status = AmbiguityVerdict::Status::fuel_exhausted;
      }
      report.verdicts.push_back(std::move(v));
    }
    return report;
  }

  std::vector<Word> irreducible_words(ReductionSystem const& sys,
                                      std::size_t            max_len) {
    std::vector<Word> out{Word()};
    std::vector<Word> level{Word()};
    auto const        n = sys.alphabet().size();
    for (std::size_t len = 1; len <= max_len; ++len) {
      std::vector<Word> next;
      for (auto const& w : level) {
        for (std::size_t a = 0; a < n; ++a) {
          Word v = w;
          v.push_back(static_cast<Letter>(a));
          // w is irreducible, so only factors ending at the new letter matter.
          bool bad = false;
          for (auto const& r : sys.rules()) {
            if (v.ends_with(r.lhs)) {
              bad = true;
              break;
            }
          }
          if (!bad) {
            next.push_back(std::move(v));
          }
        }
      }
      out.insert(out.end(), next.begin(), next.end());
      level = std::move(next);
    }
    return out;
  }

  Span::Span(AlgebraPtr algebra)
      : _algebra(std::move(algebra)),
        _space(ScalarField::of(_algebra->ring)) {}

  bool Span::insert(FreePoly const& p) {
    return _space.insert(flatten(p));
  }

  bool Span::contains(FreePoly const& p) const {
    return _space.contains(flatten(p));
  }

  std::vector<FreePoly> Span::basis() const {
    std::vector<FreePoly> out;
    for (auto const& row : _space.reduced_basis()) {
      out.push_back(unflatten(row, _algebra));
    }
    return out;
  }

  Span subalgebra_span(std::vector<FreePoly> const& gens,
                       ReductionSystem const&       sys,
                       std::size_t                  degree,
                       std::size_t                  fuel) {
    Span                  total(sys.algebra());
    std::vector<FreePoly> nf_gens;
    for (auto const& g : gens) {
      nf_gens.push_back(normal_form(g, sys, fuel));
    }
    if (degree == 0) {
      return total;
    }
    // Level k spans the normal forms of products of exactly k generators;
    // under confluence nf(u*g) = nf(nf(u)*nf(g)), so a basis per level
    // suffices.
    std::vector<FreePoly> level;
    {
      Span s(sys.algebra());
      for (auto const& g : nf_gens) {
        if (s.insert(g)) {
          total.insert(g);
        }
      }
      level = s.basis();
    }
    for (std::size_t k = 2; k <= degree && !level.empty(); ++k) {
      Span s(sys.algebra());
      for (auto const& u : level) {
        for (auto const& g : nf_gens) {
          auto prod = normal_form(u * g, sys, fuel);
          if (s.insert(prod)) {
            total.insert(prod);
          }
        }
      }
      level = s.basis();
    }
    return total;
  }

  std::string format_rule(Rule const& r, Alphabet const& alphabet) {
    return alphabet.format(r.lhs) + " -> " + format_poly(r.rhs);
  }

}  // namespace ncalg::rewrite
