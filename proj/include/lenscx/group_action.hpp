#pragma once

#include <vector>

#include "lenscx/complex.hpp"

namespace lenscx {

/// Z/nZ acting on vertex indices through a generator permutation with
/// generator^order == identity.
class CyclicAction {
 public:
  /// Throws InvalidInput unless `generator` is a permutation of 0..size-1
  /// whose order-th power is the identity.
  static CyclicAction create(int order, std::vector<int> generator);
  static CyclicAction identity(int num_vertices);

  int order() const noexcept { return order_; }
  const std::vector<int>& generator() const noexcept { return generator_; }
  int num_vertices() const noexcept { return static_cast<int>(generator_.size()); }

  int apply(int vertex, int power = 1) const;
  /// Sorted image of a face under generator^power.
  Simplex image(const Simplex& face, int power = 1) const;

  friend bool operator==(const CyclicAction&, const CyclicAction&) = default;

 private:
  CyclicAction() = default;
  int order_ = 1;
  std::vector<int> generator_;
};

/// Every facet is carried to a facet.
bool is_simplicial(const CyclicAction& action, const SimplicialComplex& complex);

/// No face is mapped to itself (as a set) by a nontrivial group element.
/// Throws NotSimplicial if the action does not preserve the complex.
bool is_free_on_cells(const CyclicAction& action, const SimplicialComplex& complex);

/// No face contains both v and g.v for g != e; equivalently no edge joins
/// two vertices of one orbit.
bool separates_orbit_vertices(const CyclicAction& action, const SimplicialComplex& complex);

/// Distinct face orbits have distinct vertex-orbit sets in every dimension,
/// so the orbit space is itself a simplicial complex.
bool orbit_faces_distinct(const CyclicAction& action, const SimplicialComplex& complex);

/// Orbit complex K/G. Vertices are vertex orbits ordered and labeled by
/// their smallest member; facets are the images of facet orbits.
/// Throws FreenessViolation if some face is fixed, IdentificationClash if
/// the orbit space is not simplicial (subdivide and retry).
SimplicialComplex quotient(const SimplicialComplex& complex, const CyclicAction& action);

/// Action on barycentric_subdivision(complex) given by the image of faces.
CyclicAction induced_action_on_subdivision(const CyclicAction& action, const SimplicialComplex& complex);

}  // namespace lenscx
