#include "ncalg/tensorring.hpp"

#include <algorithm>

#include "ncalg/error.hpp"

namespace ncalg::tensorring {

  namespace {

    constexpr std::size_t max_component_rank = std::size_t{1} << 22;

    std::size_t ipow(std::size_t g, std::size_t m) {
      std::size_t r = 1;
      for (std::size_t i = 0; i < m; ++i) {
        if (g != 0 && r > max_component_rank / std::max<std::size_t>(g, 1)) {
          throw ResourceLimit("tensor power rank exceeds "
                              + std::to_string(max_component_rank));
        }
        r *= g;
      }
      return r;
    }

    bool all_zero(Vec const& v) {
      return std::all_of(v.begin(), v.end(), [](Rational const& q) { return q == 0; });
    }

    void axpy(Vec& v, Rational const& c, Vec const& w) {
      if (c == 0) {
        return;
      }
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] != 0) {
          v[i] += c * w[i];
        }
      }
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // FgAbGroup

  FgAbGroup::FgAbGroup(std::size_t generators, IntMatrix relations, Domain domain)
      : _generators(generators), _relations(std::move(relations)), _domain(domain) {
    if (_relations.cols() != _generators) {
      throw InputError("relation matrix has " + std::to_string(_relations.cols())
                       + " columns for " + std::to_string(_generators) + " generators");
    }
    if (_domain == Domain::rationals && _relations.rows() != 0) {
      throw InputError("modules over Q are presented without relations");
    }
    _smith = smith_normal_form(_relations);
    _moduli.assign(_generators, Integer(0));
    auto diag = _smith.diagonal();
    for (std::size_t i = 0; i < diag.size(); ++i) {
      _moduli[i] = diag[i];
    }
  }

  std::vector<Integer> FgAbGroup::invariant_factors() const {
    std::vector<Integer> out;
    for (auto const& d : _moduli) {
      if (d > 1) {
        out.push_back(d);
      }
    }
    return out;
  }

  std::size_t FgAbGroup::free_rank() const {
    return static_cast<std::size_t>(
        std::count(_moduli.begin(), _moduli.end(), Integer(0)));
  }

  std::string FgAbGroup::describe() const {
    std::string base = _domain == Domain::integers ? "Z" : "Q";
    std::string out;
    if (auto r = free_rank(); r > 0) {
      out = r == 1 ? base : base + "^" + std::to_string(r);
    }
    for (auto const& d : invariant_factors()) {
      out += (out.empty() ? "" : " + ") + std::string("Z/") + d.get_str();
    }
    return out.empty() ? "0" : out;
  }

  Vec FgAbGroup::generator(std::size_t i) const {
    Vec v(_generators);
    v.at(i) = 1;
    return v;
  }

  Vec FgAbGroup::normalize(Vec const& v) const {
    if (v.size() != _generators) {
      throw InputError("vector of length " + std::to_string(v.size())
                       + " in a module with " + std::to_string(_generators)
                       + " generators");
    }
    if (_domain == Domain::rationals) {
      return v;
    }
    std::vector<Integer> x(_generators);
    for (std::size_t i = 0; i < _generators; ++i) {
      if (v[i].get_den() != 1) {
        throw InputError("non-integral coordinate " + v[i].get_str() + " over Z");
      }
      x[i] = v[i].get_num();
    }
    auto const&          V = _smith.V;
    std::vector<Integer> y(_generators);
    for (std::size_t i = 0; i < _generators; ++i) {
      if (x[i] == 0) {
        continue;
      }
      for (std::size_t j = 0; j < _generators; ++j) {
        y[j] += x[i] * V(i, j);
      }
    }
    for (std::size_t j = 0; j < _generators; ++j) {
      if (_moduli[j] != 0) {
        mpz_fdiv_r(y[j].get_mpz_t(), y[j].get_mpz_t(), _moduli[j].get_mpz_t());
      }
    }
    auto const& W = _smith.V_inverse;
    Vec         out(_generators);
    for (std::size_t j = 0; j < _generators; ++j) {
      if (y[j] == 0) {
        continue;
      }
      for (std::size_t k = 0; k < _generators; ++k) {
        out[k] += Rational(y[j] * W(j, k));
      }
    }
    return out;
  }

  bool FgAbGroup::is_zero(Vec const& v) const {
    return all_zero(normalize(v));
  }

  bool FgAbGroup::equal(Vec const& a, Vec const& b) const {
    return normalize(a) == normalize(b);
  }

  FgAbGroup tensor_product(FgAbGroup const& M, FgAbGroup const& N) {
    if (M.domain() != N.domain()) {
      throw InputError("tensor product of modules over different domains");
    }
    auto const gm = M.generators();
    auto const gn = N.generators();
    auto const rm = M.relations().rows();
    auto const rn = N.relations().rows();
    IntMatrix  rel(rm * gn + gm * rn, gm * gn);
    std::size_t row = 0;
    for (std::size_t r = 0; r < rm; ++r) {
      for (std::size_t j = 0; j < gn; ++j, ++row) {
        for (std::size_t i = 0; i < gm; ++i) {
          rel(row, i * gn + j) = M.relations()(r, i);
        }
      }
    }
    for (std::size_t i = 0; i < gm; ++i) {
      for (std::size_t s = 0; s < rn; ++s, ++row) {
        for (std::size_t j = 0; j < gn; ++j) {
          rel(row, i * gn + j) = N.relations()(s, j);
        }
      }
    }
    return FgAbGroup(gm * gn, std::move(rel), M.domain());
  }

  FgAbGroup tensor_power(FgAbGroup const& M, std::size_t m) {
    FgAbGroup out = FgAbGroup::free(1, M.domain());
    for (std::size_t i = 0; i < m; ++i) {
      out = i == 0 ? M : tensor_product(out, M);
    }
    return out;
  }

  Vec pure_tensor(Vec const& a, Vec const& b) {
    Vec out(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) {
        continue;
      }
      for (std::size_t j = 0; j < b.size(); ++j) {
        out[i * b.size() + j] = a[i] * b[j];
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // ZModuleMap

  ZModuleMap::ZModuleMap(GroupPtr source, GroupPtr target, std::vector<Vec> images)
      : _source(std::move(source)), _target(std::move(target)), _images(std::move(images)) {
    if (_images.size() != _source->generators()) {
      throw InputError("module map needs one image per source generator");
    }
    for (auto& v : _images) {
      v = _target->normalize(v);
    }
    auto const& rel = _source->relations();
    for (std::size_t r = 0; r < rel.rows(); ++r) {
      Vec img = _target->zero();
      for (std::size_t i = 0; i < rel.cols(); ++i) {
        axpy(img, Rational(rel(r, i)), _images[i]);
      }
      if (!_target->is_zero(img)) {
        throw InputError("module map does not kill source relation "
                         + std::to_string(r));
      }
    }
  }

  Vec ZModuleMap::apply(Vec const& v) const {
    if (v.size() != _source->generators()) {
      throw InputError("module map applied to a vector of the wrong length");
    }
    Vec out = _target->zero();
    for (std::size_t i = 0; i < v.size(); ++i) {
      axpy(out, v[i], _images[i]);
    }
    return _target->normalize(out);
  }

  ////////////////////////////////////////////////////////////////////////
  // ZAlgebra

  ZAlgebra::ZAlgebra(GroupPtr                 module,
                     Vec                      unit,
                     std::vector<Vec>         table,
                     std::vector<std::string> names)
      : _module(std::move(module)),
        _unit(std::move(unit)),
        _table(std::move(table)),
        _names(std::move(names)) {
    auto const g = rank();
    if (_names.empty()) {
      for (std::size_t i = 0; i < g; ++i) {
        _names.push_back("g" + std::to_string(i));
      }
    }
    if (_names.size() != g) {
      throw InputError("one name per generator expected");
    }
    if (_table.size() != g * g) {
      throw InputError("structure constants need " + std::to_string(g * g) + " entries");
    }
    _unit = _module->normalize(_unit);
    for (auto& v : _table) {
      v = _module->normalize(v);
    }
    auto const& rel = _module->relations();
    for (std::size_t r = 0; r < rel.rows(); ++r) {
      for (std::size_t j = 0; j < g; ++j) {
        Vec left = _module->zero();
        Vec right = _module->zero();
        for (std::size_t i = 0; i < g; ++i) {
          axpy(left, Rational(rel(r, i)), product(i, j));
          axpy(right, Rational(rel(r, i)), product(j, i));
        }
        if (!_module->is_zero(left) || !_module->is_zero(right)) {
          throw InputError("multiplication is not well defined on relation "
                           + std::to_string(r));
        }
      }
    }
    for (std::size_t i = 0; i < g; ++i) {
      auto gi = generator(i);
      if (!_module->equal(mul(_unit, gi), gi) || !_module->equal(mul(gi, _unit), gi)) {
        throw InputError("unit law fails at generator " + _names[i]);
      }
      for (std::size_t j = 0; j < g; ++j) {
        for (std::size_t k = 0; k < g; ++k) {
          auto left  = mul(product(i, j), generator(k));
          auto right = mul(gi, product(j, k));
          if (!_module->equal(left, right)) {
            throw InputError("multiplication is not associative at " + _names[i] + "."
                             + _names[j] + "." + _names[k]);
          }
        }
      }
    }
  }

  Vec ZAlgebra::raw_mul(Vec const& a, Vec const& b) const {
    Vec out = _module->zero();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) {
        continue;
      }
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (b[j] != 0) {
          axpy(out, a[i] * b[j], product(i, j));
        }
      }
    }
    return out;
  }

  Vec ZAlgebra::mul(Vec const& a, Vec const& b) const {
    return _module->normalize(raw_mul(a, b));
  }

  std::string ZAlgebra::format(Vec const& v) const {
    auto        n = _module->normalize(v);
    std::string out;
    for (std::size_t i = 0; i < n.size(); ++i) {
      if (n[i] == 0) {
        continue;
      }
      Rational c    = n[i];
      bool     neg  = c < 0;
      Rational mag  = neg ? Rational(-c) : c;
      std::string t = mag == 1 ? _names[i] : format_rational(mag) + "*" + _names[i];
      if (out.empty()) {
        out = (neg ? "-" : "") + t;
      } else {
        out += (neg ? " - " : " + ") + t;
      }
    }
    return out.empty() ? "0" : out;
  }

  ZAlgebra tensor_algebra(ZAlgebra const& A0, ZAlgebra const& A1) {
    auto module = std::make_shared<FgAbGroup const>(
        tensor_product(*A0.module(), *A1.module()));
    auto const g0 = A0.rank();
    auto const g1 = A1.rank();
    std::vector<Vec> table;
    for (std::size_t i0 = 0; i0 < g0; ++i0) {
      for (std::size_t i1 = 0; i1 < g1; ++i1) {
        for (std::size_t j0 = 0; j0 < g0; ++j0) {
          for (std::size_t j1 = 0; j1 < g1; ++j1) {
            table.push_back(pure_tensor(A0.product(i0, j0), A1.product(i1, j1)));
          }
        }
      }
    }
    std::vector<std::string> names;
    for (auto const& a : A0.names()) {
      for (auto const& b : A1.names()) {
        names.push_back(a + "*" + b);
      }
    }
    return ZAlgebra(module, pure_tensor(A0.unit(), A1.unit()), std::move(table),
                    std::move(names));
  }

  FgAbGroup graded_component(ZAlgebra const& A, Word const& w) {
    return tensor_power(*A.module(), w.size() + 1);
  }

  ////////////////////////////////////////////////////////////////////////
  // Reduction maps

  namespace {

    // Product g_{i_1} ... g_{i_m} for the tuple encoded by idx.
    Vec tuple_product(ZAlgebra const& A, std::size_t idx, std::size_t m) {
      auto const          g = A.rank();
      std::vector<size_t> digits(m);
      for (std::size_t k = m; k-- > 0;) {
        digits[k] = idx % g;
        idx /= g;
      }
      Vec acc = A.unit();
      for (auto d : digits) {
        acc = A.mul(acc, A.generator(d));
      }
      return acc;
    }

    Word xyz_word(std::size_t n) {
      return Word::letter(0) * Word::power(1, n) * Word::letter(2);
    }

  }  // namespace

  BimoduleRule xyz_rule(ZAlgebraPtr const& A, Vec const& s_n, std::size_t n, Placement placement) {
    auto source = std::make_shared<FgAbGroup const>(tensor_power(*A->module(), n + 1));
    auto s      = A->module()->normalize(s_n);
    std::vector<Vec> images;
    for (std::size_t idx = 0; idx < source->generators(); ++idx) {
      auto p = tuple_product(*A, idx, n + 1);
      images.push_back(placement == Placement::displayed ? A->mul(p, s) : A->mul(s, p));
    }
    return {xyz_word(n), ZModuleMap(source, A->module(), std::move(images))};
  }

  ZModuleMap reduction_map(ZAlgebraPtr const& A, Vec const& s_n, std::size_t n, Placement placement) {
    auto rule   = xyz_rule(A, s_n, n, placement);
    auto source = std::make_shared<FgAbGroup const>(tensor_power(*A->module(), n + 3));
    auto const g     = A->rank();
    auto const inner = rule.inner.source()->generators();
    std::vector<Vec> images;
    for (std::size_t idx = 0; idx < source->generators(); ++idx) {
      std::size_t last  = idx % g;
      std::size_t mid   = (idx / g) % inner;
      std::size_t first = idx / g / inner;
      images.push_back(A->mul(A->mul(A->generator(first), rule.inner.images()[mid]),
                              A->generator(last)));
    }
    return ZModuleMap(source, A->module(), std::move(images));
  }

  ////////////////////////////////////////////////////////////////////////
  // TensorRing

  TensorRing::TensorRing(ZAlgebraPtr A, Alphabet grading, std::vector<BimoduleRule> rules)
      : _A(std::move(A)), _grading(std::move(grading)), _rules(std::move(rules)) {
    for (auto const& r : _rules) {
      if (r.lhs.empty()) {
        throw InputError("bimodule rule with an empty left-hand side");
      }
      for (std::size_t i = 0; i < r.lhs.size(); ++i) {
        if (r.lhs[i] >= _grading.size()) {
          throw InputError("bimodule rule uses a letter outside the grading alphabet");
        }
      }
      if (r.inner.source()->generators() != ipow(_A->rank(), r.lhs.size() - 1)
          || r.inner.target()->generators() != _A->rank()) {
        throw InputError("bimodule rule map has the wrong shape for "
                         + _grading.format(r.lhs));
      }
    }
  }

  GroupPtr TensorRing::component(std::size_t word_length) const {
    std::lock_guard<std::mutex> lock(_cache_mutex);
    if (_powers.empty()) {
      _powers.push_back(std::make_shared<FgAbGroup const>(FgAbGroup::free(1, _A->module()->domain())));
      _powers.push_back(_A->module());
    }
    while (_powers.size() <= word_length + 1) {
      ipow(_A->rank(), _powers.size());
      _powers.push_back(
          std::make_shared<FgAbGroup const>(tensor_product(*_powers.back(), *_A->module())));
    }
    return _powers[word_length + 1];
  }

  GradedElement TensorRing::pure(Word const& w, std::vector<Vec> const& slots) const {
    if (slots.size() != w.size() + 1) {
      throw InputError("a pure tensor on a word of length " + std::to_string(w.size())
                       + " needs " + std::to_string(w.size() + 1) + " slots");
    }
    Vec v = _A->module()->normalize(slots[0]);
    for (std::size_t i = 1; i < slots.size(); ++i) {
      v = pure_tensor(v, _A->module()->normalize(slots[i]));
    }
    GradedElement e;
    add(e, w, v);
    return e;
  }

  void TensorRing::add(GradedElement& e, Word const& w, Vec const& v, Rational const& c) const {
    auto group = component(w.size());
    auto it    = e.components.find(w);
    Vec  acc   = it == e.components.end() ? group->zero() : it->second;
    axpy(acc, c, v);
    acc = group->normalize(acc);
    if (all_zero(acc)) {
      if (it != e.components.end()) {
        e.components.erase(it);
      }
    } else if (it == e.components.end()) {
      e.components.emplace(w, std::move(acc));
    } else {
      it->second = std::move(acc);
    }
  }

  GradedElement TensorRing::sum(GradedElement const& a, GradedElement const& b) const {
    GradedElement out = a;
    for (auto const& [w, v] : b.components) {
      add(out, w, v);
    }
    return out;
  }

  GradedElement TensorRing::mul(GradedElement const& a, GradedElement const& b) const {
    auto const                         g = _A->rank();
    std::map<Word, Vec, DeglexGreater> raw;
    for (auto const& [wa, va] : a.components) {
      for (auto const& [wb, vb] : b.components) {
        auto const tail_rank = ipow(g, wb.size());
        Word       w         = wa * wb;
        auto [it, inserted]  = raw.try_emplace(w, Vec(ipow(g, w.size() + 1)));
        Vec& acc             = it->second;
        for (std::size_t i = 0; i < va.size(); ++i) {
          if (va[i] == 0) {
            continue;
          }
          auto head = i / g;
          auto last = i % g;
          for (std::size_t j = 0; j < vb.size(); ++j) {
            if (vb[j] == 0) {
              continue;
            }
            auto        first = j / tail_rank;
            auto        tail  = j % tail_rank;
            auto const& p     = _A->product(last, first);
            Rational    c     = va[i] * vb[j];
            for (std::size_t k = 0; k < g; ++k) {
              if (p[k] != 0) {
                acc[(head * g + k) * tail_rank + tail] += c * p[k];
              }
            }
          }
        }
      }
    }
    GradedElement out;
    for (auto const& [w, v] : raw) {
      add(out, w, v);
    }
    return out;
  }

  bool TensorRing::is_reducible(Word const& w) const {
    return std::any_of(_rules.begin(), _rules.end(),
                       [&](BimoduleRule const& r) { return w.contains(r.lhs); });
  }

  void TensorRing::rewrite_component(Word const&    w,
                                     Vec const&     v,
                                     std::size_t    pos,
                                     std::size_t    rule,
                                     GradedElement& out) const {
    auto const& r       = _rules[rule];
    auto const  g       = _A->rank();
    auto const  len     = r.lhs.size();
    auto const  slots   = w.size() + 1;
    auto const  after   = slots - (pos + len + 1);  // slots after the right outer one
    auto const  inner_n = ipow(g, len - 1);
    auto const  after_n = ipow(g, after);
    Word const  target  = w.prefix(pos) * w.factor(pos + len);
    Vec         acc(ipow(g, target.size() + 1));

    for (std::size_t idx = 0; idx < v.size(); ++idx) {
      if (v[idx] == 0) {
        continue;
      }
      std::size_t rest   = idx;
      std::size_t suffix = rest % after_n;
      rest /= after_n;
      std::size_t right = rest % g;
      rest /= g;
      std::size_t mid = rest % inner_n;
      rest /= inner_n;
      std::size_t left   = rest % g;
      std::size_t prefix = rest / g;

      auto image = _A->mul(_A->mul(_A->generator(left), r.inner.images()[mid]),
                           _A->generator(right));
      for (std::size_t k = 0; k < g; ++k) {
        if (image[k] != 0) {
          acc[(prefix * g + k) * after_n + suffix] += v[idx] * image[k];
        }
      }
    }
    add(out, target, acc);
  }

  GradedElement TensorRing::reduce(GradedElement e,
                                   std::size_t   fuel,
                                   RewriteOrder  order,
                                   std::mt19937_64* rng) const {
    if (order == RewriteOrder::random && rng == nullptr) {
      throw InputError("random rewrite order needs a generator");
    }
    std::size_t steps = 0;
    while (true) {
      std::vector<Word> reducible;
      for (auto const& [w, v] : e.components) {
        if (is_reducible(w)) {
          reducible.push_back(w);
          if (order == RewriteOrder::deterministic) {
            break;  // components are ordered largest first
          }
        }
      }
      if (reducible.empty()) {
        return e;
      }
      if (steps == fuel) {
        throw FuelExhausted(fuel);
      }
      ++steps;
      Word w = order == RewriteOrder::deterministic
                   ? reducible.front()
                   : reducible[std::uniform_int_distribution<std::size_t>(
                         0, reducible.size() - 1)(*rng)];
      std::vector<std::pair<std::size_t, std::size_t>> occ;
      for (std::size_t pos = 0; pos < w.size(); ++pos) {
        for (std::size_t k = 0; k < _rules.size(); ++k) {
          if (w.occurs_at(_rules[k].lhs, pos)) {
            occ.emplace_back(pos, k);
          }
        }
      }
      auto pick = order == RewriteOrder::deterministic
                      ? occ.front()
                      : occ[std::uniform_int_distribution<std::size_t>(0, occ.size() - 1)(*rng)];
      auto node = e.components.extract(w);
      rewrite_component(w, node.mapped(), pick.first, pick.second, e);
    }
  }

  std::string TensorRing::format(GradedElement const& e) const {
    auto const  g = _A->rank();
    std::string out;
    for (auto const& [w, v] : e.components) {
      auto const slots = w.size() + 1;
      for (std::size_t idx = 0; idx < v.size(); ++idx) {
        if (v[idx] == 0) {
          continue;
        }
        std::vector<std::size_t> digits(slots);
        std::size_t              rest = idx;
        for (std::size_t k = slots; k-- > 0;) {
          digits[k] = rest % g;
          rest /= g;
        }
        std::string t = "(" + _A->names()[digits[0]];
        for (std::size_t k = 0; k < w.size(); ++k) {
          t += " " + _grading.symbol(w[k]) + " " + _A->names()[digits[k + 1]];
        }
        t += ")";
        Rational c   = v[idx];
        bool     neg = c < 0;
        Rational mag = neg ? Rational(-c) : c;
        if (mag != 1) {
          t = format_rational(mag) + "*" + t;
        }
        if (out.empty()) {
          out = (neg ? "-" : "") + t;
        } else {
          out += (neg ? " - " : " + ") + t;
        }
      }
    }
    return out.empty() ? "0" : out;
  }

  GradedElement reduce_graded(TensorRing const& ring, GradedElement const& e, std::size_t fuel) {
    return ring.reduce(e, fuel);
  }

  ////////////////////////////////////////////////////////////////////////
  // A0/A1

  Vec A0A1Construction::embed0(Vec const& a0) const {
    return A->module()->normalize(pure_tensor(a0, A1->unit()));
  }

  Vec A0A1Construction::embed1(Vec const& a1) const {
    return A->module()->normalize(pure_tensor(A0->unit(), a1));
  }

  GradedElement A0A1Construction::x_a_z(Vec const& a) const {
    auto e = ring->pure(Word{0, 1}, {A->unit(), embed1(a), A->unit()});
    return ring->reduce(e);
  }

  A0A1Construction build_A0A1(ZAlgebraPtr const&        A0,
                              ZAlgebraPtr const&        A1,
                              ZModuleMap const&         phi,
                              std::optional<Vec> const& pi0) {
    if (!pi0) {
      throw InputError("k must be a direct summand of A0: no retraction supplied");
    }
    if (phi.source()->generators() != A1->rank() || phi.target()->generators() != A0->rank()) {
      throw InputError("phi must map A1 to A0");
    }
    auto const& pi = *pi0;
    if (pi.size() != A0->rank()) {
      throw InputError("retraction needs one value per generator of A0");
    }
    auto apply_pi = [&](Vec const& v) {
      Rational s = 0;
      for (std::size_t i = 0; i < v.size(); ++i) {
        s += v[i] * pi[i];
      }
      return s;
    };
    if (apply_pi(A0->unit()) != 1) {
      throw InputError("retraction does not send 1 to 1");
    }
    auto const& rel = A0->module()->relations();
    for (std::size_t r = 0; r < rel.rows(); ++r) {
      Vec row(A0->rank());
      for (std::size_t i = 0; i < row.size(); ++i) {
        row[i] = Rational(rel(r, i));
      }
      if (apply_pi(row) != 0) {
        throw InputError("retraction is not defined on A0");
      }
    }

    A0A1Construction c;
    c.A0 = A0;
    c.A1 = A1;
    c.A  = std::make_shared<ZAlgebra const>(tensor_algebra(*A0, *A1));
    std::vector<Vec> images;
    for (std::size_t i0 = 0; i0 < A0->rank(); ++i0) {
      for (std::size_t i1 = 0; i1 < A1->rank(); ++i1) {
        Vec p = phi.images()[i1];
        for (auto& q : p) {
          q *= pi[i0];
        }
        images.push_back(pure_tensor(p, A1->unit()));
      }
    }
    c.theta = std::make_shared<ZModuleMap>(c.A->module(), c.A->module(), std::move(images));
    c.ring  = std::make_shared<TensorRing>(c.A, Alphabet({"x", "z"}),
                                          std::vector<BimoduleRule>{{Word{0, 1}, *c.theta}});
    return c;
  }

}  // namespace ncalg::tensorring
