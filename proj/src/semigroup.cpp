#include "ncalg/semigroup.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ncalg/error.hpp"
#include "ncalg/linalg.hpp"

namespace ncalg::semigroup {

  WordFamily::WordFamily(Alphabet alphabet, std::vector<Word> words)
      : _alphabet(std::move(alphabet)) {
    for (auto& w : words) {
      if (w.empty()) {
        throw InputError("semigroup generators must be nonempty words");
      }
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] >= _alphabet.size()) {
          throw InputError("generator uses a letter outside the alphabet");
        }
      }
      if (std::find(_words.begin(), _words.end(), w) == _words.end()) {
        _max_length = std::max(_max_length, w.size());
        _words.push_back(std::move(w));
      }
    }
  }

  std::optional<std::vector<std::size_t>> WordFamily::factorize(Word const& w) const {
    if (w.empty()) {
      return std::nullopt;
    }
    // back[i] = (previous cut, word index) of some factorization of w[0, i).
    constexpr auto none = static_cast<std::size_t>(-1);
    std::vector<std::pair<std::size_t, std::size_t>> back(w.size() + 1, {none, none});
    back[0] = {0, 0};
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (back[i].first == none) {
        continue;
      }
      for (std::size_t k = 0; k < _words.size(); ++k) {
        auto end = i + _words[k].size();
        if (end <= w.size() && back[end].first == none && w.occurs_at(_words[k], i)) {
          back[end] = {i, k};
        }
      }
    }
    if (back[w.size()].first == none) {
      return std::nullopt;
    }
    std::vector<std::size_t> out;
    for (std::size_t i = w.size(); i > 0; i = back[i].first) {
      out.push_back(back[i].second);
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

  std::vector<Word> WordFamily::members(std::size_t bound) const {
    std::set<Word, DeglexLess> seen;
    std::vector<Word>          frontier;
    for (auto const& g : _words) {
      if (g.size() <= bound && seen.insert(g).second) {
        frontier.push_back(g);
      }
    }
    while (!frontier.empty()) {
      std::vector<Word> next;
      for (auto const& u : frontier) {
        for (auto const& g : _words) {
          if (u.size() + g.size() <= bound) {
            Word v = u * g;
            if (seen.insert(v).second) {
              next.push_back(std::move(v));
            }
          }
        }
      }
      frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
  }

  IsolationVerdict is_isolated(WordFamily const& F, std::size_t bound) {
    if (bound < F.max_length()) {
      throw InputError("bound " + std::to_string(bound)
                       + " is below the longest generator length");
    }
    auto in_s1 = [&](Word const& w) { return w.empty() || F.contains(w); };
    for (auto const& u : F.members(bound)) {
      for (std::size_t i = 0; i < u.size(); ++i) {
        for (std::size_t j = i + 1; j <= u.size(); ++j) {
          if (i == 0 && j == u.size()) {
            continue;
          }
          Word s = u.factor(i, j - i);
          if (!F.contains(s)) {
            continue;
          }
          Word t  = u.prefix(i);
          Word t2 = u.factor(j);
          if (!in_s1(t) || !in_s1(t2)) {
            return {false, bound, IsolationWitness{t, s, t2}};
          }
        }
      }
    }
    return {true, bound, std::nullopt};
  }

  std::optional<std::vector<std::size_t>> factorize_xy_family(
      Word const& w, embed::FamilyExponent const& f, std::size_t N) {
    Word const xy{0, 1};
    if (w.empty() || !w.starts_with(xy)) {
      return std::nullopt;
    }
    std::vector<std::size_t> out;
    std::size_t              start = 0;
    while (start < w.size()) {
      auto next = w.find(xy, start + 1);
      auto end  = next == std::string::npos ? w.size() : next;
      Word seg  = w.factor(start, end - start);
      // seg = x y^n x^m with n >= 1, m >= 0 by the choice of cuts.
      std::size_t n = 0;
      while (1 + n < seg.size() && seg[1 + n] == 1) {
        ++n;
      }
      std::size_t m = seg.size() - 1 - n;
      if (n == 0 || n > N || !(seg == embed::family_word(n, f)) || m != f(n)) {
        return std::nullopt;
      }
      out.push_back(n);
      start = end;
    }
    return out;
  }

  UniquenessVerdict unique_factorization_check(WordFamily const& F, std::size_t bound) {
    // Words are expanded once; a word reached twice is a clash and is not
    // expanded again, since every extension would clash as well. The
    // smallest clashing word is reported.
    std::map<Word, std::vector<std::size_t>, DeglexLess> first;
    std::optional<FactorizationClash>                    clash;
    auto const&                                          words = F.words();

    std::vector<std::pair<Word, std::vector<std::size_t>>> frontier{{Word(), {}}};
    while (!frontier.empty()) {
      std::vector<std::pair<Word, std::vector<std::size_t>>> next;
      for (auto const& [current, seq] : frontier) {
        for (std::size_t k = 0; k < words.size(); ++k) {
          if (current.size() + words[k].size() > bound) {
            continue;
          }
          Word ext = current * words[k];
          auto s   = seq;
          s.push_back(k);
          auto [it, inserted] = first.try_emplace(ext, s);
          if (inserted) {
            next.emplace_back(std::move(ext), std::move(s));
          } else if (!clash || deglex_compare(ext, clash->word) < 0) {
            clash = FactorizationClash{ext, it->second, s};
          }
        }
      }
      frontier = std::move(next);
    }
    return {!clash.has_value(), bound, clash};
  }

  namespace {

    struct Product {
      FreePoly    poly;
      std::size_t degree;
    };

    // All products of generators with total degree <= d, the empty product
    // included.
    std::vector<Product> products(std::vector<FreePoly> const& gens,
                                  AlgebraPtr const&            alg,
                                  std::size_t                  d,
                                  IdealExtLimits               limits) {
      std::vector<Product> out{{FreePoly::one(alg), 0}};
      std::size_t          begin = 0;
      while (begin < out.size()) {
        std::size_t end = out.size();
        for (std::size_t i = begin; i < end; ++i) {
          for (auto const& g : gens) {
            auto deg = out[i].degree + g.degree();
            if (deg > d) {
              continue;
            }
            if (out.size() >= limits.max_products) {
              throw ResourceLimit("more than " + std::to_string(limits.max_products)
                                  + " subalgebra products");
            }
            out.push_back({out[i].poly * g, deg});
          }
        }
        begin = end;
      }
      return out;
    }

    void words_up_to(std::size_t n, std::size_t letters, std::vector<Word>& out) {
      std::vector<Word> level{Word()};
      out.push_back(Word());
      for (std::size_t len = 1; len <= n; ++len) {
        std::vector<Word> next;
        for (auto const& w : level) {
          for (std::size_t a = 0; a < letters; ++a) {
            Word v = w;
            next.push_back(v.push_back(static_cast<Letter>(a)));
          }
        }
        out.insert(out.end(), next.begin(), next.end());
        level = std::move(next);
      }
    }

  }  // namespace

  IdealExtVerdict check_ideal_extension(std::vector<FreePoly> const& sub_gens,
                                        std::vector<FreePoly> const& ideal_gens,
                                        bool                         unital,
                                        std::size_t                  degree,
                                        IdealExtLimits               limits) {
    if (sub_gens.empty()) {
      throw InputError("no subalgebra generators");
    }
    auto const& alg   = sub_gens.front().algebra();
    auto const  field = ScalarField::of(alg->ring);
    for (auto const& g : sub_gens) {
      if (!same_algebra(g.algebra(), alg)) {
        throw InputError("subalgebra generators live in different algebras");
      }
      if (g.is_zero() || g.degree() == 0) {
        throw InputError("subalgebra generators must have degree at least 1");
      }
    }
    for (auto const& g : ideal_gens) {
      if (!same_algebra(g.algebra(), alg)) {
        throw InputError("ideal generators live in a different algebra");
      }
    }

    IdealExtVerdict verdict{true, degree, std::nullopt};

    auto prods = products(sub_gens, alg, degree, limits);
    PolySpace A(field);
    for (auto const& p : prods) {
      if (p.degree > 0 || unital) {
        A.insert(flatten(p.poly));
      }
    }
    verdict.dim_subalgebra = A.dimension();

    PolySpace I(field);
    for (auto const& g : ideal_gens) {
      if (g.is_zero()) {
        continue;
      }
      if (g.degree() > degree) {
        continue;
      }
      if (!A.contains(flatten(g))) {
        throw InputError("ideal generator " + format_poly(g)
                         + " is not in the subalgebra up to degree "
                         + std::to_string(degree));
      }
      for (auto const& a : prods) {
        if (a.degree + g.degree() > degree) {
          continue;
        }
        auto ag = a.poly * g;
        for (auto const& b : prods) {
          if (a.degree + g.degree() + b.degree <= degree) {
            I.insert(flatten(ag * b.poly));
          }
        }
      }
    }
    verdict.dim_ideal = I.dimension();

    std::vector<Word> ambient_words;
    words_up_to(degree, alg->alphabet.size(), ambient_words);
    PolySpace J(field);
    for (auto const& g : ideal_gens) {
      if (g.is_zero() || g.degree() > degree) {
        continue;
      }
      auto room = degree - g.degree();
      for (auto const& u : ambient_words) {
        if (u.size() > room) {
          break;
        }
        auto ug = g.sandwiched(u, Word());
        for (auto const& v : ambient_words) {
          if (u.size() + v.size() > room) {
            break;
          }
          J.insert(flatten(ug.sandwiched(Word(), v)));
        }
      }
    }
    verdict.dim_ambient_ideal = J.dimension();

    auto meet                = intersection(A, J);
    verdict.dim_intersection = meet.size();
    auto best                = outside_witness(I, meet);
    if (best) {
      verdict.holds   = false;
      verdict.witness = unflatten(*best, alg);
    }
    return verdict;
  }

}  // namespace ncalg::semigroup
