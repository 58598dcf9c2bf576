#include "lenscx/complex.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

#include "lenscx/error.hpp"

namespace lenscx {

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int v : s) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

namespace {

bool is_subset(const Simplex& small, const Simplex& large) {
  return std::includes(large.begin(), large.end(), small.begin(), small.end());
}

// Calls `fn` with every nonempty subset of `facet` (as a sorted Simplex).
template <typename Fn>
void for_each_face(const Simplex& facet, Fn&& fn) {
  const std::size_t k = facet.size();
  Simplex face;
  face.reserve(k);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    face.clear();
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (std::uint64_t{1} << i)) face.push_back(facet[i]);
    }
    fn(face);
  }
}

std::string index_set_label(const Simplex& s) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out << ',';
    out << s[i];
  }
  out << ']';
  return out.str();
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(std::vector<std::string> labels,
                                                 std::vector<Simplex> facets) {
  if (facets.empty()) throw Error(ErrorKind::InvalidInput, "facet list is empty");
  const int nv = static_cast<int>(labels.size());
  std::vector<bool> used(labels.size(), false);
  for (auto& f : facets) {
    if (f.empty()) throw Error(ErrorKind::EmptyFacet, "facet with no vertices");
    if (f.size() > 62) throw Error(ErrorKind::InvalidInput, "facet dimension too large");
    std::sort(f.begin(), f.end());
    for (int v : f) {
      if (v < 0 || v >= nv) {
        throw Error(ErrorKind::IndexOutOfRange,
                    "vertex index " + std::to_string(v) + " not in [0," + std::to_string(nv) + ")");
      }
      used[v] = true;
    }
    if (std::adjacent_find(f.begin(), f.end()) != f.end()) {
      throw Error(ErrorKind::InvalidInput, "facet repeats a vertex");
    }
  }
  for (int v = 0; v < nv; ++v) {
    if (!used[v]) throw Error(ErrorKind::InvalidInput, "vertex " + std::to_string(v) + " lies in no facet");
  }

  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());

  // Drop faces contained in a strictly larger facet.
  std::vector<const Simplex*> by_size;
  for (const auto& f : facets) by_size.push_back(&f);
  std::stable_sort(by_size.begin(), by_size.end(),
                   [](const Simplex* a, const Simplex* b) { return a->size() > b->size(); });
  std::vector<Simplex> kept;
  std::vector<const Simplex*> larger;
  std::size_t current = by_size.front()->size();
  std::size_t boundary = 0;
  for (std::size_t i = 0; i < by_size.size(); ++i) {
    const Simplex* f = by_size[i];
    if (f->size() != current) {
      current = f->size();
      boundary = larger.size();
    }
    bool dominated = false;
    for (std::size_t j = 0; j < boundary && !dominated; ++j) dominated = is_subset(*f, *larger[j]);
    if (!dominated) larger.push_back(f);
  }
  for (const Simplex* f : larger) kept.push_back(*f);
  std::sort(kept.begin(), kept.end());

  SimplicialComplex k;
  k.labels_ = std::move(labels);
  k.facets_ = std::move(kept);
  for (const auto& f : k.facets_) k.dim_ = std::max(k.dim_, static_cast<int>(f.size()) - 1);
  return k;
}

bool SimplicialComplex::is_pure() const noexcept {
  return std::all_of(facets_.begin(), facets_.end(),
                     [this](const Simplex& f) { return static_cast<int>(f.size()) == dim_ + 1; });
}

FaceLattice::FaceLattice(const SimplicialComplex& complex) {
  const int d = complex.dim();
  faces_.resize(d + 1);
  index_.resize(d + 1);
  for (const auto& facet : complex.facets()) {
    for_each_face(facet, [&](const Simplex& face) {
      auto& idx = index_[face.size() - 1];
      if (idx.emplace(face, 0).second) faces_[face.size() - 1].push_back(face);
    });
  }
  for (int k = 0; k <= d; ++k) {
    std::sort(faces_[k].begin(), faces_[k].end());
    for (std::size_t i = 0; i < faces_[k].size(); ++i) index_[k][faces_[k][i]] = static_cast<std::int64_t>(i);
  }
}

const std::vector<Simplex>& FaceLattice::faces(int d) const {
  if (d < 0 || d > dim()) throw Error(ErrorKind::DimensionOutOfRange, "no faces of dimension " + std::to_string(d));
  return faces_[d];
}

std::size_t FaceLattice::count(int d) const {
  return (d < 0 || d > dim()) ? 0 : faces_[d].size();
}

std::size_t FaceLattice::total() const noexcept {
  std::size_t t = 0;
  for (const auto& f : faces_) t += f.size();
  return t;
}

std::int64_t FaceLattice::index_of(const Simplex& face) const {
  if (face.empty() || static_cast<int>(face.size()) - 1 > dim()) return -1;
  const auto& idx = index_[face.size() - 1];
  auto it = idx.find(face);
  return it == idx.end() ? -1 : it->second;
}

std::vector<std::size_t> f_vector(const SimplicialComplex& complex) {
  FaceLattice lattice(complex);
  std::vector<std::size_t> f;
  for (int d = 0; d <= lattice.dim(); ++d) f.push_back(lattice.count(d));
  return f;
}

std::int64_t euler_characteristic(const SimplicialComplex& complex) {
  std::int64_t chi = 0;
  const auto f = f_vector(complex);
  for (std::size_t d = 0; d < f.size(); ++d) {
    chi += (d % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(f[d]);
  }
  return chi;
}

SimplicialComplex barycentric_subdivision(const SimplicialComplex& complex) {
  FaceLattice lattice(complex);
  std::vector<std::int64_t> offset(lattice.dim() + 2, 0);
  for (int d = 0; d <= lattice.dim(); ++d) offset[d + 1] = offset[d] + static_cast<std::int64_t>(lattice.count(d));

  std::vector<std::string> labels;
  labels.reserve(lattice.total());
  for (int d = 0; d <= lattice.dim(); ++d) {
    for (const auto& face : lattice.faces(d)) labels.push_back(index_set_label(face));
  }
  auto vertex_of = [&](const Simplex& face) {
    return static_cast<int>(offset[face.size() - 1] + lattice.index_of(face));
  };

  // A maximal flag is a facet together with an ordering of its vertices.
  std::vector<Simplex> flags;
  for (const auto& facet : complex.facets()) {
    Simplex order = facet;
    do {
      Simplex flag;
      Simplex prefix;
      for (int v : order) {
        prefix.insert(std::upper_bound(prefix.begin(), prefix.end(), v), v);
        flag.push_back(vertex_of(prefix));
      }
      std::sort(flag.begin(), flag.end());
      flags.push_back(std::move(flag));
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return SimplicialComplex::from_facets(std::move(labels), std::move(flags));
}

namespace {

struct RidgeIncidence {
  std::size_t facet;
  std::size_t dropped;  // position of the vertex removed from the facet
};

std::unordered_map<Simplex, std::vector<RidgeIncidence>, SimplexHash> ridge_map(
    const std::vector<Simplex>& facets) {
  std::unordered_map<Simplex, std::vector<RidgeIncidence>, SimplexHash> ridges;
  for (std::size_t f = 0; f < facets.size(); ++f) {
    for (std::size_t i = 0; i < facets[f].size(); ++i) {
      Simplex r = facets[f];
      r.erase(r.begin() + static_cast<std::ptrdiff_t>(i));
      ridges[r].push_back({f, i});
    }
  }
  return ridges;
}

}  // namespace

bool is_closed_pseudomanifold(const SimplicialComplex& complex, int d) {
  if (d < 1) return false;
  const auto& facets = complex.facets();
  for (const auto& f : facets) {
    if (static_cast<int>(f.size()) != d + 1) return false;
  }
  const auto ridges = ridge_map(facets);
  for (const auto& [ridge, inc] : ridges) {
    if (inc.size() != 2) return false;
  }
  std::vector<bool> seen(facets.size(), false);
  std::queue<std::size_t> todo;
  todo.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!todo.empty()) {
    const std::size_t f = todo.front();
    todo.pop();
    for (std::size_t i = 0; i < facets[f].size(); ++i) {
      Simplex r = facets[f];
      r.erase(r.begin() + static_cast<std::ptrdiff_t>(i));
      for (const auto& inc : ridges.at(r)) {
        if (!seen[inc.facet]) {
          seen[inc.facet] = true;
          ++reached;
          todo.push(inc.facet);
        }
      }
    }
  }
  return reached == facets.size();
}

OrientationClass fundamental_cycle(const SimplicialComplex& complex) {
  if (!is_closed_pseudomanifold(complex, complex.dim())) {
    throw Error(ErrorKind::NotPseudomanifold, "complex is not a closed pseudomanifold of its dimension");
  }
  const auto& facets = complex.facets();
  const auto ridges = ridge_map(facets);
  OrientationClass orientation;
  orientation.coefficients.assign(facets.size(), 0);
  orientation.coefficients[0] = 1;
  std::queue<std::size_t> todo;
  todo.push(0);
  while (!todo.empty()) {
    const std::size_t f = todo.front();
    todo.pop();
    const int cf = orientation.coefficients[f];
    for (std::size_t i = 0; i < facets[f].size(); ++i) {
      Simplex r = facets[f];
      r.erase(r.begin() + static_cast<std::ptrdiff_t>(i));
      // Contribution of f to the ridge is cf * (-1)^i; the neighbour must cancel it.
      const int contribution = (i % 2 == 0) ? cf : -cf;
      for (const auto& inc : ridges.at(r)) {
        if (inc.facet == f) continue;
        const int required = (inc.dropped % 2 == 0) ? -contribution : contribution;
        int& cg = orientation.coefficients[inc.facet];
        if (cg == 0) {
          cg = required;
          todo.push(inc.facet);
        } else if (cg != required) {
          throw Error(ErrorKind::NonOrientable, "orientation propagation is inconsistent");
        }
      }
    }
  }
  return orientation;
}

SimplicialComplex cycle_complex(int n) {
  if (n < 3) throw Error(ErrorKind::BadCycleLength, "a simplicial cycle needs n >= 3");
  std::vector<std::string> labels;
  std::vector<Simplex> facets;
  for (int i = 0; i < n; ++i) {
    labels.push_back("v" + std::to_string(i));
    facets.push_back({i, (i + 1) % n});
  }
  return SimplicialComplex::from_facets(std::move(labels), std::move(facets));
}

}  // namespace lenscx
