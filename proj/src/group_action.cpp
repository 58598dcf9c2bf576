#include "lenscx/group_action.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "lenscx/error.hpp"

namespace lenscx {

CyclicAction CyclicAction::create(int order, std::vector<int> generator) {
  if (order < 1) throw Error(ErrorKind::InvalidInput, "action order must be >= 1");
  const int nv = static_cast<int>(generator.size());
  std::vector<bool> hit(generator.size(), false);
  for (int v : generator) {
    if (v < 0 || v >= nv || hit[v]) throw Error(ErrorKind::InvalidInput, "generator is not a permutation");
    hit[v] = true;
  }
  CyclicAction a;
  a.order_ = order;
  a.generator_ = std::move(generator);
  for (int v = 0; v < nv; ++v) {
    int w = v;
    for (int i = 0; i < order; ++i) w = a.generator_[w];
    if (w != v) {
      throw Error(ErrorKind::InvalidInput, "generator^" + std::to_string(order) + " is not the identity");
    }
  }
  return a;
}

CyclicAction CyclicAction::identity(int num_vertices) {
  std::vector<int> g(static_cast<std::size_t>(num_vertices));
  std::iota(g.begin(), g.end(), 0);
  return create(1, std::move(g));
}

int CyclicAction::apply(int vertex, int power) const {
  power %= order_;
  if (power < 0) power += order_;
  for (int i = 0; i < power; ++i) vertex = generator_[vertex];
  return vertex;
}

Simplex CyclicAction::image(const Simplex& face, int power) const {
  Simplex out;
  out.reserve(face.size());
  for (int v : face) out.push_back(apply(v, power));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_simplicial(const CyclicAction& action, const SimplicialComplex& complex) {
  if (action.num_vertices() != complex.num_vertices()) return false;
  const auto& facets = complex.facets();
  for (const auto& f : facets) {
    if (!std::binary_search(facets.begin(), facets.end(), action.image(f))) return false;
  }
  return true;
}

bool is_free_on_cells(const CyclicAction& action, const SimplicialComplex& complex) {
  if (!is_simplicial(action, complex)) throw Error(ErrorKind::NotSimplicial, "action does not preserve the complex");
  FaceLattice lattice(complex);
  for (int d = 0; d <= lattice.dim(); ++d) {
    for (const auto& face : lattice.faces(d)) {
      for (int m = 1; m < action.order(); ++m) {
        if (action.image(face, m) == face) return false;
      }
    }
  }
  return true;
}

namespace {

std::vector<int> orbit_representatives(const CyclicAction& action) {
  std::vector<int> rep(static_cast<std::size_t>(action.num_vertices()), -1);
  for (int v = 0; v < action.num_vertices(); ++v) {
    if (rep[v] >= 0) continue;
    int w = v;
    do {
      rep[w] = v;
      w = action.apply(w);
    } while (w != v);
  }
  return rep;
}

Simplex orbit_image(const Simplex& face, const std::vector<int>& index_of_rep, const std::vector<int>& rep) {
  Simplex out;
  out.reserve(face.size());
  for (int v : face) out.push_back(index_of_rep[rep[v]]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool separates_orbit_vertices(const CyclicAction& action, const SimplicialComplex& complex) {
  const auto rep = orbit_representatives(action);
  for (const auto& f : complex.facets()) {
    for (std::size_t a = 0; a < f.size(); ++a) {
      for (std::size_t b = a + 1; b < f.size(); ++b) {
        if (rep[f[a]] == rep[f[b]]) return false;
      }
    }
  }
  return true;
}

bool orbit_faces_distinct(const CyclicAction& action, const SimplicialComplex& complex) {
  const auto rep = orbit_representatives(action);
  std::vector<int> identity(rep.size());
  std::iota(identity.begin(), identity.end(), 0);
  FaceLattice lattice(complex);
  for (int d = 0; d <= lattice.dim(); ++d) {
    // Orbits of d-faces, counted by their smallest member.
    std::size_t orbit_count = 0;
    std::unordered_set<Simplex, SimplexHash> images;
    for (const auto& face : lattice.faces(d)) {
      bool smallest = true;
      for (int m = 1; m < action.order() && smallest; ++m) smallest = !(action.image(face, m) < face);
      if (smallest) ++orbit_count;
      images.insert(orbit_image(face, identity, rep));
    }
    if (images.size() != orbit_count) return false;
  }
  return true;
}

SimplicialComplex quotient(const SimplicialComplex& complex, const CyclicAction& action) {
  if (!is_free_on_cells(action, complex)) {
    throw Error(ErrorKind::FreenessViolation, "a nontrivial group element fixes a face");
  }
  if (!separates_orbit_vertices(action, complex)) {
    throw Error(ErrorKind::IdentificationClash, "a face contains two vertices of one orbit");
  }
  if (!orbit_faces_distinct(action, complex)) {
    throw Error(ErrorKind::IdentificationClash, "distinct face orbits share a vertex-orbit set");
  }
  const auto rep = orbit_representatives(action);
  std::vector<int> index_of_rep(rep.size(), -1);
  std::vector<std::string> labels;
  for (int v = 0; v < complex.num_vertices(); ++v) {
    if (rep[v] == v) {
      index_of_rep[v] = static_cast<int>(labels.size());
      labels.push_back(complex.labels()[v]);
    }
  }
  std::vector<Simplex> facets;
  facets.reserve(complex.facets().size() / static_cast<std::size_t>(action.order()));
  for (const auto& f : complex.facets()) facets.push_back(orbit_image(f, index_of_rep, rep));
  return SimplicialComplex::from_facets(std::move(labels), std::move(facets));
}

CyclicAction induced_action_on_subdivision(const CyclicAction& action, const SimplicialComplex& complex) {
  if (!is_simplicial(action, complex)) throw Error(ErrorKind::NotSimplicial, "action does not preserve the complex");
  FaceLattice lattice(complex);
  std::vector<std::int64_t> offset(lattice.dim() + 2, 0);
  for (int d = 0; d <= lattice.dim(); ++d) offset[d + 1] = offset[d] + static_cast<std::int64_t>(lattice.count(d));
  std::vector<int> generator;
  generator.reserve(lattice.total());
  for (int d = 0; d <= lattice.dim(); ++d) {
    for (const auto& face : lattice.faces(d)) {
      generator.push_back(static_cast<int>(offset[d] + lattice.index_of(action.image(face))));
    }
  }
  return CyclicAction::create(action.order(), std::move(generator));
}

}  // namespace lenscx
