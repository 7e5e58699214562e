#ifndef NCALG_TENSORRING_HPP_
#define NCALG_TENSORRING_HPP_

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ncalg/smith.hpp"
#include "ncalg/word.hpp"

namespace ncalg::tensorring {

  /// Coordinates with respect to a generating set. Entries are integers
  /// over Z and arbitrary rationals over Q.
  using Vec = std::vector<Rational>;

  /// Z-modules are presented by integer relations; Q is the degenerate
  /// case of a free module with no relations.
  enum class Domain { integers, rationals };

  /// Finitely generated module Z^g / (row span of the relation matrix),
  /// or Q^g.
  class FgAbGroup {
   public:
    FgAbGroup(std::size_t generators, IntMatrix relations, Domain domain = Domain::integers);
    static FgAbGroup free(std::size_t generators, Domain domain = Domain::integers) {
      return FgAbGroup(generators, IntMatrix(0, generators), domain);
    }

    std::size_t      generators() const noexcept { return _generators; }
    Domain           domain() const noexcept { return _domain; }
    IntMatrix const& relations() const noexcept { return _relations; }
    SmithForm const& smith() const noexcept { return _smith; }

    /// Invariant factors d_1 | d_2 | ... that exceed 1.
    std::vector<Integer> invariant_factors() const;
    std::size_t          free_rank() const;
    /// "0", or summands like "Z^2 + Z/2 + Z/4".
    std::string describe() const;

    /// The canonical representative of the class of v: SNF coordinates
    /// reduced into [0, d_i), mapped back to generator coordinates. Throws
    /// InputError for non-integral entries over Z.
    Vec  normalize(Vec const& v) const;
    bool is_zero(Vec const& v) const;
    bool equal(Vec const& a, Vec const& b) const;
    Vec  zero() const { return Vec(_generators); }
    Vec  generator(std::size_t i) const;

   private:
    std::size_t          _generators;
    IntMatrix            _relations;
    Domain               _domain;
    SmithForm            _smith;
    std::vector<Integer> _moduli;  // per SNF coordinate; 0 means unconstrained
  };

  using GroupPtr = std::shared_ptr<FgAbGroup const>;

  /// M ⊗ N with generator (i, j) at index i * N.generators() + j, and
  /// relations r ⊗ e_j and e_i ⊗ s.
  FgAbGroup tensor_product(FgAbGroup const& M, FgAbGroup const& N);
  /// M^{⊗m}; m = 0 gives the base ring (one free generator).
  FgAbGroup tensor_power(FgAbGroup const& M, std::size_t m);
  /// Coordinates of the pure tensor a ⊗ b in the layout above.
  Vec pure_tensor(Vec const& a, Vec const& b);

  /// Homomorphism given by the images of the source generators. The
  /// constructor checks that every source relation maps to zero.
  class ZModuleMap {
   public:
    ZModuleMap(GroupPtr source, GroupPtr target, std::vector<Vec> images);

    GroupPtr const&         source() const noexcept { return _source; }
    GroupPtr const&         target() const noexcept { return _target; }
    std::vector<Vec> const& images() const noexcept { return _images; }
    /// Normalized image of v.
    Vec apply(Vec const& v) const;

   private:
    GroupPtr         _source;
    GroupPtr         _target;
    std::vector<Vec> _images;
  };

  /// Ring structure on a module by structure constants g_i g_j.
  class ZAlgebra {
   public:
    /// `table` has generators^2 entries, row major. Checks that the product
    /// is well defined on relations, associative and unital on generators.
    ZAlgebra(GroupPtr                 module,
             Vec                      unit,
             std::vector<Vec>         table,
             std::vector<std::string> names = {});

    GroupPtr const&                 module() const noexcept { return _module; }
    std::size_t                     rank() const noexcept { return _module->generators(); }
    Vec const&                      unit() const noexcept { return _unit; }
    Vec const&                      product(std::size_t i, std::size_t j) const {
      return _table[i * rank() + j];
    }
    std::vector<std::string> const& names() const noexcept { return _names; }

    Vec generator(std::size_t i) const { return _module->generator(i); }
    Vec mul(Vec const& a, Vec const& b) const;
    /// Linear combination of generator names, "0" for zero.
    std::string format(Vec const& v) const;

   private:
    Vec raw_mul(Vec const& a, Vec const& b) const;

    GroupPtr                 _module;
    Vec                      _unit;
    std::vector<Vec>         _table;
    std::vector<std::string> _names;
  };

  using ZAlgebraPtr = std::shared_ptr<ZAlgebra const>;

  /// A0 ⊗ A1 with (a ⊗ b)(a' ⊗ b') = aa' ⊗ bb'. Generator names are
  /// joined by '*'.
  ZAlgebra tensor_algebra(ZAlgebra const& A0, ZAlgebra const& A1);

  /// A^{⊗(|w|+1)}: the tensor-ring component of a word w. Generators are
  /// tuples of A-generators, first slot most significant.
  FgAbGroup graded_component(ZAlgebra const& A, Word const& w);

  /// Where s_n goes in a_0 x a_1 y ... y a_{n+1} z a_{n+2}: displayed is
  /// a_0 a_1 ... a_{n+1} s_n a_{n+2}; after_first is a_0 s_n a_1 ... a_{n+2}.
  enum class Placement { displayed, after_first };

  /// Reduction rule lhs -> 1 of the tensor ring: a ⊗ (inner slots) ⊗ a'
  /// maps to a * inner(...) * a'. `inner` goes from A^{⊗(|lhs|-1)} to A.
  struct BimoduleRule {
    Word       lhs;
    ZModuleMap inner;
  };

  /// Rule for x y^n z (x=0, y=1, z=2) with the given s_n.
  BimoduleRule xyz_rule(ZAlgebraPtr const& A, Vec const& s_n, std::size_t n,
                        Placement placement = Placement::displayed);

  /// The bimodule map A^{⊗(n+3)} -> A on the component of x y^n z.
  ZModuleMap reduction_map(ZAlgebraPtr const& A, Vec const& s_n, std::size_t n,
                           Placement placement = Placement::displayed);

  /// Element of the tensor ring: one vector per grading word, each in
  /// A^{⊗(|w|+1)}. Components are kept normalized and nonzero.
  struct GradedElement {
    std::map<Word, Vec, DeglexGreater> components;
    friend bool operator==(GradedElement const&, GradedElement const&) = default;
  };

  enum class RewriteOrder { deterministic, random };

  /// A ⟨M_a ⊕ ...⟩ over a grading alphabet with bimodule reduction rules.
  /// Tensor powers are built on first use and cached by length.
  class TensorRing {
   public:
    TensorRing(ZAlgebraPtr A, Alphabet grading, std::vector<BimoduleRule> rules);

    ZAlgebraPtr const&                algebra() const noexcept { return _A; }
    Alphabet const&                  grading() const noexcept { return _grading; }
    std::vector<BimoduleRule> const& rules() const noexcept { return _rules; }

    GroupPtr component(std::size_t word_length) const;

    /// a_0 w_0 a_1 ... w_{L-1} a_L for slot vectors a_i.
    GradedElement pure(Word const& w, std::vector<Vec> const& slots) const;
    /// The ε-component element a.
    GradedElement scalar(Vec const& a) const { return pure(Word(), {a}); }
    /// Adds c * v at word w, normalizing.
    void add(GradedElement& e, Word const& w, Vec const& v, Rational const& c = 1) const;
    GradedElement sum(GradedElement const& a, GradedElement const& b) const;
    GradedElement mul(GradedElement const& a, GradedElement const& b) const;

    bool is_reducible(Word const& w) const;
    /// Rewrites reducible components until none is left. The deterministic
    /// order takes the largest word first, then its leftmost occurrence and
    /// lowest rule; the random order picks component and occurrence with
    /// `rng`. Throws FuelExhausted after `fuel` component rewrites.
    GradedElement reduce(GradedElement e,
                         std::size_t fuel = 1'000'000,
                         RewriteOrder order = RewriteOrder::deterministic,
                         std::mt19937_64* rng = nullptr) const;

    std::string format(GradedElement const& e) const;

   private:
    // Rewrites component (w, v) at the occurrence (pos, rule) into `out`.
    void rewrite_component(Word const& w, Vec const& v, std::size_t pos,
                           std::size_t rule, GradedElement& out) const;

    ZAlgebraPtr                        _A;
    Alphabet                          _grading;
    std::vector<BimoduleRule>         _rules;
    mutable std::mutex                _cache_mutex;
    mutable std::vector<GroupPtr>     _powers;  // _powers[m] = A^{⊗m}
  };

  /// Rewrites with the deterministic order.
  GradedElement reduce_graded(TensorRing const& ring, GradedElement const& e,
                              std::size_t fuel = 1'000'000);

  /// Data of the A0/A1 construction: A = A0 ⊗ A1, the endomorphism
  /// θ(a0 ⊗ a1) = φ(a1) ⊗ π(a0), and the tensor ring over {x, z} with the
  /// single rule a x a' z a'' -> a θ(a') a''.
  struct A0A1Construction {
    ZAlgebraPtr                  A0;
    ZAlgebraPtr                  A1;
    ZAlgebraPtr                  A;
    std::shared_ptr<ZModuleMap> theta;
    std::shared_ptr<TensorRing> ring;

    Vec embed0(Vec const& a0) const;  // a0 ⊗ 1
    Vec embed1(Vec const& a1) const;  // 1 ⊗ a1
    /// Reduced form of x a z for a ∈ A1.
    GradedElement x_a_z(Vec const& a) const;
  };

  /// `phi` maps A1 to A0 as modules; `pi0` is a retraction A0 -> k given as
  /// a functional on generators with pi0(1) = 1. Throws InputError when the
  /// retraction is missing or fails.
  A0A1Construction build_A0A1(ZAlgebraPtr const&         A0,
                              ZAlgebraPtr const&         A1,
                              ZModuleMap const&         phi,
                              std::optional<Vec> const& pi0);

}  // namespace ncalg::tensorring

#endif  // NCALG_TENSORRING_HPP_
