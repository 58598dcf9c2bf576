#pragma once

#include <cstddef>
#include <vector>

#include "lenscx/complex.hpp"
#include "lenscx/exactlin.hpp"

namespace lenscx {

/// H_d = Z^betti (+) Z/t_1 (+) ... with t_1 | t_2 | ... and t_i > 1.
struct HomologyGroup {
  std::size_t betti = 0;
  std::vector<BigInt> torsion;

  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// Indexed by dimension 0..dim K.
using HomologyGroups = std::vector<HomologyGroup>;

/// Rows indexed by (d-1)-faces, columns by d-faces, both in FaceLattice
/// order. Dropping the i-th vertex of a sorted face carries sign (-1)^i.
SparseIntMatrix boundary_matrix(const FaceLattice& lattice, int d);
SparseIntMatrix boundary_matrix(const SimplicialComplex& complex, int d);

HomologyGroups homology_groups(const SimplicialComplex& complex);
HomologyGroups homology_groups(const FaceLattice& lattice);

/// Euler characteristic from boundary ranks: sum (-1)^d (f_d - rank d_d - rank d_{d+1}).
std::int64_t euler_from_ranks(const FaceLattice& lattice);

}  // namespace lenscx
