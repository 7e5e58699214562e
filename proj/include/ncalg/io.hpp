#ifndef NCALG_IO_HPP_
#define NCALG_IO_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ncalg/algebra.hpp"
#include "ncalg/rewrite.hpp"
#include "ncalg/tensorring.hpp"

namespace ncalg::io {

  /// Whole file as text. Throws InputError when it cannot be read.
  std::string read_file(std::string const& path);
  void        write_file(std::string const& path, std::string const& text);

  /// .ncalg documents:
  ///
  ///   ring Q
  ///   alphabet x y z
  ///   rule x.z -> 1
  ///
  /// `#` starts a comment. Errors carry the line and column.
  rewrite::ReductionSystem load_system(std::string_view text);
  std::string              save_system(rewrite::ReductionSystem const& sys);

  /// .alg documents: ring, basis, unital, the full table, optional
  /// generating elements `gen i -> p`, augmentation `aug b -> c`, and the
  /// data of a second coproduct factor, `psi b -> p(x)` and `lift x -> b`.
  struct AlgebraDocument {
    embed::AlgebraPresentation           algebra;
    std::vector<FreePoly>                gens;
    std::optional<std::vector<FreePoly>> psi;  // over the alphabet {x}
    std::optional<std::string>           lift;
  };

  AlgebraDocument load_algebra(std::string_view text);
  std::string     save_algebra(AlgebraDocument const& doc);

  /// .zalg documents, a Z-algebra on named module generators:
  ///
  ///   domain Z
  ///   generators one u
  ///   relation 0 2
  ///   unit -> one
  ///   table u.u -> 0
  ///   s 0 -> u
  ///
  /// Entries are integer combinations of generator names; the relation
  /// rows list integer coefficients. The table must be complete.
  struct ZAlgebraDocument {
    tensorring::ZAlgebraPtr      algebra;
    std::vector<tensorring::Vec> s;
  };

  ZAlgebraDocument load_zalgebra(std::string_view text);
  std::string      save_zalgebra(ZAlgebraDocument const& doc);

}  // namespace ncalg::io

#endif  // NCALG_IO_HPP_
