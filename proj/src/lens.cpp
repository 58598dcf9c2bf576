#include "lenscx/lens.hpp"

#include <numeric>

#include "lenscx/error.hpp"
#include "lenscx/homology.hpp"
#include "lenscx/json_io.hpp"
#include "lenscx/pi1.hpp"
#include "lenscx/torsion.hpp"

namespace lenscx {

std::string mn_label(int factor, int i) {
  return "D" + std::to_string(factor) + "_" + std::to_string(i);
}

SimplicialComplex build_mn(int n) {
  if (n < 3) throw Error(ErrorKind::BadCycleLength, "M_n needs n >= 3, got " + std::to_string(n));
  std::vector<std::string> labels;
  for (int factor = 1; factor <= 2; ++factor) {
    for (int i = 1; i <= n; ++i) labels.push_back(mn_label(factor, i));
  }
  std::vector<Simplex> facets;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) facets.push_back({i, (i + 1) % n, n + j, n + (j + 1) % n});
  }
  return SimplicialComplex::from_facets(std::move(labels), std::move(facets));
}

CyclicAction psi_k_on_mn(int n, int k) {
  if (n < 3) throw Error(ErrorKind::BadCycleLength, "M_n needs n >= 3, got " + std::to_string(n));
  if (k < 1 || k >= n || std::gcd(n, k) != 1) {
    throw Error(ErrorKind::NotCoprime, "need 1 <= k < n with gcd(n,k) = 1, got n=" + std::to_string(n) +
                                           " k=" + std::to_string(k));
  }
  std::vector<int> generator(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < n; ++i) {
    generator[i] = (i + 1) % n;
    generator[n + i] = n + (i + k) % n;
  }
  return CyclicAction::create(n, std::move(generator));
}

LensProfile lens_profile(int n, int k) {
  if (n < 2 || k < 1 || std::gcd(n, k) != 1) {
    throw Error(ErrorKind::NotCoprime, "lens parameters must be coprime");
  }
  LensProfile p;
  p.n = n;
  p.k = k % n;
  for (std::int64_t m = 1; m < n; ++m) {
    if ((m * k) % n == 1 % n) {
      p.k_inverse = m;
      break;
    }
  }
  p.torsion_orbit = square_orbit(n, p.k_inverse);
  return p;
}

LensClassification classify_lens_params(int n, int k1, int k2) {
  if (n < 2 || std::gcd(n, k1) != 1 || std::gcd(n, k2) != 1) {
    throw Error(ErrorKind::NotCoprime, "lens parameters must be coprime to n");
  }
  LensClassification c;
  c.orbit1 = lens_profile(n, k1).torsion_orbit;
  c.orbit2 = lens_profile(n, k2).torsion_orbit;
  const std::int64_t product = (static_cast<std::int64_t>(k1) * k2) % n;
  for (std::int64_t m = 0; m < n && !c.homotopy_equivalent; ++m) {
    const std::int64_t sq = (m * m) % n;
    c.homotopy_equivalent = (sq == product) || ((n - sq) % n == product);
  }
  return c;
}

namespace {

Json f_vector_json(const SimplicialComplex& k) {
  Json arr = Json::array();
  for (auto f : f_vector(k)) arr.push_back(f);
  return arr;
}

bool expected_lens_homology(const HomologyGroups& h, int n) {
  return h.size() == 4 && h[0].betti == 1 && h[0].torsion.empty() && h[1].betti == 0 &&
         h[1].torsion == std::vector<BigInt>{BigInt(n)} && h[2].betti == 0 && h[2].torsion.empty() &&
         h[3].betti == 1 && h[3].torsion.empty();
}

}  // namespace

LensVerification verify_lens(int n, int k, const LensOptions& options) {
  const CyclicAction psi = psi_k_on_mn(n, k);
  const SimplicialComplex mn = build_mn(n);
  const LensProfile profile = lens_profile(n, k);

  Report report;
  report.add("mn_closed_pseudomanifold", is_closed_pseudomanifold(mn, 3), {{"f_vector", f_vector_json(mn)}});

  // The orbit space needs the action to separate each face's vertices and
  // to keep distinct face orbits apart; subdivide until both hold.
  SimplicialComplex current = mn;
  CyclicAction action = psi;
  Json attempts = Json::array();
  int subdivisions = 0;
  bool free = true;
  bool simplicial = false;
  while (!simplicial && subdivisions < 3) {
    action = induced_action_on_subdivision(action, current);
    current = barycentric_subdivision(current);
    ++subdivisions;
    free = is_free_on_cells(action, current);
    const bool separated = separates_orbit_vertices(action, current);
    const bool distinct = orbit_faces_distinct(action, current);
    attempts.push_back({{"subdivisions", subdivisions},
                        {"separates_orbit_vertices", separated},
                        {"orbit_faces_distinct", distinct}});
    simplicial = free && separated && distinct;
    if (!free) break;
  }
  report.add("free_on_cells", free, {{"subdivisions", subdivisions}});
  report.add("quotient_simplicial", simplicial, {{"subdivisions", subdivisions}, {"attempts", attempts}});

  LensVerification out{n, k, {}, subdivisions, mn};
  if (!simplicial) {
    out.report = std::move(report);
    return out;
  }
  const SimplicialComplex q = quotient(current, action);

  const auto f_cover = f_vector(current);
  const auto f_quot = f_vector(q);
  bool divides = f_cover.size() == f_quot.size();
  for (std::size_t d = 0; divides && d < f_cover.size(); ++d) divides = f_cover[d] == f_quot[d] * static_cast<std::size_t>(n);
  report.add("face_counts_divide", divides, {{"cover", f_vector_json(current)}, {"quotient", f_vector_json(q)}});

  const std::int64_t chi = euler_characteristic(q);
  report.add("euler_characteristic", chi == 0 && euler_characteristic(current) == n * chi, chi);

  const bool pseudomanifold = is_closed_pseudomanifold(q, 3);
  report.add("closed_pseudomanifold", pseudomanifold, 3);

  bool orientable = false;
  if (pseudomanifold) {
    try {
      fundamental_cycle(q);
      orientable = true;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NonOrientable) throw;
    }
  }
  report.add("orientable", orientable, orientable);

  FaceLattice lattice(q);
  const HomologyGroups h = homology_groups(lattice);
  report.add("homology", expected_lens_homology(h, n), homology_to_json(h));

  if (options.run_pi1) {
    const Presentation raw = edge_path_presentation(q);
    const Abelianization ab = abelianization(raw);
    const Presentation reduced = tietze_reduce(raw);
    const std::size_t max_cosets = options.max_cosets ? options.max_cosets : 10 * static_cast<std::size_t>(n);
    const CosetResult cosets = coset_enumeration(reduced, max_cosets);
    const bool ab_matches = ab.free_rank == h[1].betti && ab.torsion == h[1].torsion;
    const bool order_ok = cosets.order && *cosets.order == static_cast<std::size_t>(n);
    Json value = {{"generators", raw.generators},
                  {"relators", raw.relators.size()},
                  {"reduced_generators", reduced.generators},
                  {"reduced_relators", reduced.relators.size()},
                  {"abelianization", abelianization_to_json(ab)},
                  {"abelianization_matches_H1", ab_matches},
                  {"max_cosets", max_cosets},
                  {"cosets_defined", cosets.cosets_defined}};
    value["order"] = cosets.order ? Json(*cosets.order) : Json("Inconclusive");
    // A group of order n with abelianization Z/n is cyclic.
    value["cyclic"] = order_ok && ab_matches;
    report.add("pi1", order_ok && ab_matches, std::move(value));
  }

  if (options.run_torsion) {
    const QInvariant qi = q_invariant(q, n);
    Json orbit = Json::array();
    for (auto v : qi.orbit) orbit.push_back(v);
    Json expected = Json::array();
    for (auto v : profile.torsion_orbit) expected.push_back(v);
    report.add("torsion", qi.orbit == profile.torsion_orbit,
               {{"q_orbit", orbit}, {"modulus", n}, {"pairing", qi.value}, {"expected_orbit", expected}});
  }

  out.report = std::move(report);
  out.quotient = q;
  return out;
}

}  // namespace lenscx
