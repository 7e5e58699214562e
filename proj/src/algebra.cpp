#include "ncalg/algebra.hpp"

#include "ncalg/error.hpp"

namespace ncalg::embed {

  AlgebraPresentation::AlgebraPresentation(AlgebraPtr            algebra,
                                           bool                  unital,
                                           std::vector<FreePoly> table,
                                           std::optional<std::vector<Coeff>> augmentation)
      : _algebra(std::move(algebra)),
        _unital(unital),
        _table(std::move(table)),
        _augmentation(std::move(augmentation)) {
    auto const n = rank();
    if (_table.size() != n * n) {
      throw InputError("multiplication table needs " + std::to_string(n * n)
                       + " entries, got " + std::to_string(_table.size()));
    }
    for (auto const& e : _table) {
      if (!same_algebra(e.algebra(), _algebra)) {
        throw InputError("table entry over a different algebra");
      }
      check_element(e);
    }
    if (_augmentation) {
      if (_augmentation->size() != n) {
        throw InputError("augmentation must give one value per basis symbol");
      }
      auto const& R   = ring();
      auto        aug = [&](FreePoly const& p) {
        Coeff s = R.zero();
        for (auto const& [w, c] : p.terms()) {
          s = R.add(s, R.mul(c, w.empty() ? R.one() : (*_augmentation)[w[0]]));
        }
        return s;
      };
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          auto lhs = aug(product(static_cast<Letter>(i), static_cast<Letter>(j)));
          auto rhs = R.mul((*_augmentation)[i], (*_augmentation)[j]);
          if (!(lhs == rhs)) {
            throw InputError("augmentation is not multiplicative on "
                             + basis().symbols()[i] + "." + basis().symbols()[j]);
          }
        }
      }
    }
  }

  AlgebraPresentation AlgebraPresentation::from_text(
      std::string const&              ring,
      std::vector<std::string> const& basis,
      bool                            unital,
      std::vector<std::string> const& table) {
    auto                  alg = make_algebra(Alphabet(basis), CoeffRing::parse(ring));
    std::vector<FreePoly> entries;
    for (auto const& t : table) {
      entries.push_back(parse_poly(t, alg));
    }
    return AlgebraPresentation(alg, unital, std::move(entries));
  }

  FreePoly AlgebraPresentation::unit() const {
    if (!_unital) {
      throw InputError("nonunital algebra has no unit");
    }
    return FreePoly::one(_algebra);
  }

  void AlgebraPresentation::check_element(FreePoly const& p) const {
    for (auto const& [w, c] : p.terms()) {
      if (w.size() > 1) {
        throw InputError("element " + format_poly(p)
                         + " is not a combination of basis symbols");
      }
      if (w.empty() && !_unital) {
        throw InputError("element " + format_poly(p)
                         + " has a unit component in a nonunital algebra");
      }
    }
  }

  FreePoly AlgebraPresentation::parse(std::string const& text) const {
    auto p = parse_poly(text, _algebra);
    check_element(p);
    return p;
  }

  FreePoly AlgebraPresentation::mul(FreePoly const& a, FreePoly const& b) const {
    auto const& R = ring();
    FreePoly    out(_algebra);
    for (auto const& [wa, ca] : a.terms()) {
      for (auto const& [wb, cb] : b.terms()) {
        auto c = R.mul(ca, cb);
        if (wa.empty() || wb.empty()) {
          out.add_term(wa * wb, c);
        } else {
          out += product(wa[0], wb[0]).scaled(c);
        }
      }
    }
    return out;
  }

  std::optional<std::array<Letter, 3>> AlgebraPresentation::associativity_failure() const {
    auto const n = rank();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        auto const& ij = product(static_cast<Letter>(i), static_cast<Letter>(j));
        for (std::size_t k = 0; k < n; ++k) {
          auto li = static_cast<Letter>(i);
          auto lk = static_cast<Letter>(k);
          auto left  = mul(ij, basis_element(lk));
          auto right = mul(basis_element(li), product(static_cast<Letter>(j), lk));
          if (!(left == right)) {
            return std::array<Letter, 3>{li, static_cast<Letter>(j), lk};
          }
        }
      }
    }
    return std::nullopt;
  }

}  // namespace ncalg::embed
