#include "lenscx/homology.hpp"

#include "lenscx/error.hpp"

namespace lenscx {

SparseIntMatrix boundary_matrix(const FaceLattice& lattice, int d) {
  if (d < 1 || d > lattice.dim()) {
    throw Error(ErrorKind::DimensionOutOfRange,
                "boundary dimension " + std::to_string(d) + " outside [1," + std::to_string(lattice.dim()) + "]");
  }
  const auto& cols = lattice.faces(d);
  std::vector<Eigen::Triplet<std::int64_t>> triplets;
  triplets.reserve(cols.size() * static_cast<std::size_t>(d + 1));
  Simplex face;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (int i = 0; i <= d; ++i) {
      face = cols[j];
      face.erase(face.begin() + i);
      triplets.emplace_back(static_cast<Eigen::Index>(lattice.index_of(face)), static_cast<Eigen::Index>(j),
                            (i % 2 == 0) ? 1 : -1);
    }
  }
  SparseIntMatrix B(static_cast<Eigen::Index>(lattice.count(d - 1)), static_cast<Eigen::Index>(cols.size()));
  B.setFromTriplets(triplets.begin(), triplets.end());
  return B;
}

SparseIntMatrix boundary_matrix(const SimplicialComplex& complex, int d) {
  return boundary_matrix(FaceLattice(complex), d);
}

namespace {

struct BoundaryRanks {
  std::vector<std::size_t> rank;  // rank[d] = rank of d_d, rank[0] = 0
  std::vector<std::vector<BigInt>> torsion;  // torsion of d_d
};

BoundaryRanks boundary_ranks(const FaceLattice& lattice) {
  const int top = lattice.dim();
  BoundaryRanks out;
  out.rank.assign(top + 2, 0);
  out.torsion.assign(top + 2, {});
  for (int d = 1; d <= top; ++d) {
    SparseSmith smith(boundary_matrix(lattice, d));
    out.rank[d] = smith.rank();
    out.torsion[d] = smith.torsion();
  }
  return out;
}

}  // namespace

HomologyGroups homology_groups(const FaceLattice& lattice) {
  const auto ranks = boundary_ranks(lattice);
  HomologyGroups groups(lattice.dim() + 1);
  for (int d = 0; d <= lattice.dim(); ++d) {
    groups[d].betti = lattice.count(d) - ranks.rank[d] - ranks.rank[d + 1];
    groups[d].torsion = ranks.torsion[d + 1];
  }
  return groups;
}

HomologyGroups homology_groups(const SimplicialComplex& complex) {
  return homology_groups(FaceLattice(complex));
}

std::int64_t euler_from_ranks(const FaceLattice& lattice) {
  const auto ranks = boundary_ranks(lattice);
  std::int64_t chi = 0;
  for (int d = 0; d <= lattice.dim(); ++d) {
    const auto betti = static_cast<std::int64_t>(lattice.count(d) - ranks.rank[d] - ranks.rank[d + 1]);
    chi += (d % 2 == 0) ? betti : -betti;
  }
  return chi;
}

}  // namespace lenscx
