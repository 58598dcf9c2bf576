#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lenscx/complex.hpp"
#include "lenscx/exactlin.hpp"

namespace lenscx {

/// A word in the generators: letter +g is generator g-1, -g its inverse.
using Word = std::vector<int>;

struct Presentation {
  int generators = 0;
  std::vector<Word> relators;
};

/// Freely and cyclically reduced form of a relator.
Word cyclically_reduce(Word w);

/// Edge-path group of the 2-skeleton. The spanning tree comes from a BFS
/// from vertex 0; the non-tree edges (oriented low to high) are the
/// generators and each triangle gives one relator. Relators of length <= 1
/// are then eliminated along with the generators they kill.
/// Throws Disconnected.
Presentation edge_path_presentation(const SimplicialComplex& complex);

/// Tietze transformations: repeatedly eliminate a generator occurring once
/// in a short relator. The group is unchanged.
Presentation tietze_reduce(Presentation p);

struct Abelianization {
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion;
};

/// Smith form of the relator exponent-sum matrix.
Abelianization abelianization(const Presentation& p);

struct CosetResult {
  /// Order of the group when the table closed; empty means Inconclusive.
  std::optional<std::size_t> order;
  std::size_t cosets_defined = 0;
};

/// HLT coset enumeration over the trivial subgroup. Gives up (soft) once
/// more than `max_cosets` cosets have been defined.
CosetResult coset_enumeration(const Presentation& p, std::size_t max_cosets);

}  // namespace lenscx
