#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace lenscx {

/// A face given by its strictly increasing vertex indices.
using Simplex = std::vector<int>;

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept;
};

/// Finite abstract simplicial complex stored by its facets.
///
/// Facets are strictly sorted index sets, none contained in another, and the
/// facet list itself is sorted lexicographically. Every vertex lies in at
/// least one facet. Values are immutable once built.
class SimplicialComplex {
 public:
  /// Validates and canonicalizes: duplicate facets are merged and faces
  /// dominated by a larger facet are dropped.
  static SimplicialComplex from_facets(std::vector<std::string> labels,
                                       std::vector<Simplex> facets);

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<Simplex>& facets() const noexcept { return facets_; }
  int num_vertices() const noexcept { return static_cast<int>(labels_.size()); }
  int dim() const noexcept { return dim_; }
  bool is_pure() const noexcept;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  SimplicialComplex() = default;

  std::vector<std::string> labels_;
  std::vector<Simplex> facets_;
  int dim_ = -1;
};

/// The full face set of a complex, built on demand.
///
/// Faces of each dimension are listed in lexicographic order; this order
/// indexes rows and columns of boundary matrices and the entries of cochains.
class FaceLattice {
 public:
  explicit FaceLattice(const SimplicialComplex& complex);

  int dim() const noexcept { return static_cast<int>(faces_.size()) - 1; }
  const std::vector<Simplex>& faces(int d) const;
  std::size_t count(int d) const;
  std::size_t total() const noexcept;
  /// Position of `face` within faces(face.size() - 1), or -1 if absent.
  std::int64_t index_of(const Simplex& face) const;

 private:
  std::vector<std::vector<Simplex>> faces_;
  std::vector<std::unordered_map<Simplex, std::int64_t, SimplexHash>> index_;
};

std::vector<std::size_t> f_vector(const SimplicialComplex& complex);
std::int64_t euler_characteristic(const SimplicialComplex& complex);

/// Vertices of the result are the faces of `complex` in FaceLattice order
/// (graded by dimension, then lexicographic); each is labeled by its index
/// set, e.g. "[0,2]". Facets are the maximal flags.
SimplicialComplex barycentric_subdivision(const SimplicialComplex& complex);

bool is_closed_pseudomanifold(const SimplicialComplex& complex, int d);

/// Signs on the top faces (aligned with facets()) whose signed boundary
/// vanishes.
struct OrientationClass {
  std::vector<int> coefficients;
};

/// First facet gets +1; signs are propagated across ridges breadth first.
/// Throws NotPseudomanifold if the precondition fails and NonOrientable on
/// an inconsistent propagation.
OrientationClass fundamental_cycle(const SimplicialComplex& complex);

/// The n-cycle C_n with vertices "v0".."v{n-1}" (n >= 3).
SimplicialComplex cycle_complex(int n);

}  // namespace lenscx
