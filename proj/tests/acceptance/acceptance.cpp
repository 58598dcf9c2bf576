// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance                 run all criteria
//   acceptance --criterion N   run only criterion N (exit 1 if it fails)

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lenscx/complex.hpp"
#include "lenscx/error.hpp"
#include "lenscx/group_action.hpp"
#include "lenscx/homology.hpp"
#include "lenscx/lens.hpp"
#include "lenscx/pi1.hpp"
#include "lenscx/sphere_map.hpp"
#include "lenscx/surface.hpp"
#include "lenscx/torsion.hpp"
#include "oracles.hpp"

using namespace lenscx;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

std::vector<std::string> labels(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back("v" + std::to_string(i));
  return out;
}

bool is_sphere3_homology(const HomologyGroups& h) {
  return h == HomologyGroups{{1, {}}, {0, {}}, {0, {}}, {1, {}}};
}

bool orientable(const SimplicialComplex& k) {
  try {
    fundamental_cycle(k);
    return true;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NonOrientable) return false;
    throw;
  }
}

template <typename Fn>
ErrorKind error_kind(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvalidInput;
}

void criterion_mn(Outcome& out) {
  const std::vector<std::vector<std::size_t>> expected = {{6, 15, 18, 9}, {8, 24, 32, 16}, {10, 35, 50, 25}};
  for (int n = 3; n <= 5; ++n) {
    const auto start = Clock::now();
    const auto mn = build_mn(n);
    const auto f = f_vector(mn);
    const std::string tag = "n=" + std::to_string(n) + " ";
    out.expect(f == expected[n - 3], tag + "f-vector");
    out.expect(f == oracle::mn_f_vector(n), tag + "f-vector vs subset enumeration");
    out.expect(euler_characteristic(mn) == 0, tag + "euler characteristic");
    out.expect(is_closed_pseudomanifold(mn, 3), tag + "closed pseudomanifold");
    out.expect(orientable(mn), tag + "orientable");
    out.expect(is_sphere3_homology(homology_groups(mn)), tag + "homology");
    const double t = seconds_since(start);
    out.expect(t < 1.0, tag + "time");
    std::ostringstream note;
    note << tag << t << "s";
    out.notes.push_back(note.str());
  }
}

void criterion_quotient(Outcome& out) {
  for (auto [n, k] : {std::pair{3, 1}, std::pair{5, 1}, std::pair{5, 2}}) {
    const auto start = Clock::now();
    const std::string tag = "(" + std::to_string(n) + "," + std::to_string(k) + ") ";

    // The criterion asks for a simplicial orbit space after one subdivision.
    const auto mn = build_mn(n);
    const auto sd1 = barycentric_subdivision(mn);
    const auto a1 = induced_action_on_subdivision(psi_k_on_mn(n, k), mn);
    out.expect(is_free_on_cells(a1, sd1), tag + "free on cells after one subdivision");
    const bool one_step = separates_orbit_vertices(a1, sd1) && orbit_faces_distinct(a1, sd1);
    out.expect(one_step, tag + "quotient simplicial after one subdivision");

    LensOptions options;
    options.run_pi1 = true;
    const auto v = verify_lens(n, k, options);
    const auto& r = v.report;
    for (const char* name : {"free_on_cells", "quotient_simplicial", "orientable", "homology", "pi1"}) {
      const Check* c = r.find(name);
      out.expect(c && c->pass, tag + name);
    }
    const Check* pi1 = r.find("pi1");
    out.expect(pi1 && pi1->value["order"] == n, tag + "pi1 order");
    const double t = seconds_since(start);
    out.expect(t < 30.0, tag + "time");
    std::ostringstream note;
    note << tag << "subdivisions=" << v.subdivisions << " " << t << "s";
    out.notes.push_back(note.str());
  }
}

void criterion_torsion(Outcome& out) {
  std::vector<std::set<std::int64_t>> orbits;
  for (int k : {1, 2}) {
    const auto v = verify_lens(5, k);
    const auto qi = q_invariant(v.quotient, 5);
    std::int64_t kbar = 1;
    while ((kbar * k) % 5 != 1) ++kbar;
    const auto oracle_orbit = oracle::unit_square_orbit(5, kbar);
    out.expect(qi.orbit == oracle_orbit, "k=" + std::to_string(k) + " orbit vs enumeration");
    for (auto x : qi.orbit) out.expect(x > 0 && x < 5, "orbit inside the units mod 5");
    orbits.push_back(qi.orbit);
  }
  out.expect(orbits[0] == std::set<std::int64_t>{1, 4}, "L(5,1) orbit {1,4}");
  out.expect(orbits[1] == std::set<std::int64_t>{2, 3}, "L(5,2) orbit {2,3}");
  for (auto x : orbits[0]) out.expect(!orbits[1].count(x), "orbits disjoint");
}

void criterion_fn(Outcome& out) {
  const auto start = Clock::now();
  for (auto [n, k] : {std::pair{3, 1}, std::pair{5, 1}, std::pair{5, 2}}) {
    const auto r = fn_check(n, k, 10000, 42);
    const std::string tag = "(" + std::to_string(n) + "," + std::to_string(k) + ") ";
    out.expect(r.max_norm_err < 1e-12, tag + "norm");
    out.expect(r.max_seam_err < 1e-12, tag + "seam");
    out.expect(r.max_equiv_err < 1e-12, tag + "equivariance");
    out.expect(r.max_roundtrip_err < 1e-9, tag + "round trip");
    out.expect(!r.origin_hit, tag + "origin");
    std::ostringstream note;
    note << tag << "norm=" << r.max_norm_err << " seam=" << r.max_seam_err << " equiv=" << r.max_equiv_err
         << " rt=" << r.max_roundtrip_err;
    out.notes.push_back(note.str());
  }
  out.expect(seconds_since(start) < 5.0, "time");
}

void criterion_surface(Outcome& out) {
  const auto z5 = demo_z5();
  for (const auto& c : z5.classes) out.expect(is_minus_one_curve(c), "(-1)-curve");
  const auto r5 = verify_anticanonical_cycle(z5);
  out.expect(r5.find("anticanonical") && r5.find("anticanonical")->pass, "sum is -K");
  out.expect(r5.find("cycle_adjacency") && r5.find("cycle_adjacency")->pass, "adjacency is the 5-cycle");
  out.expect(r5.overall(), "Z/5 pair");
  out.expect(verify_anticanonical_cycle(demo_z3()).overall(), "Z/3 coordinate triangle");
  out.expect(m05_cyclic_check().overall(), "cyclic check on the boundary dictionary");
  for (int i = 1; i <= 5; ++i) out.expect(m05_class_of(i, i + 2) == z5.classes[i - 1], "Delta_i = A_{i,i+2}");
}

void criterion_cross(Outcome& out) {
  struct Entry {
    std::string name;
    SimplicialComplex k;
    bool subdivide;
  };
  std::vector<Entry> suite = {
      {"M_3", build_mn(3), true},
      {"M_4", build_mn(4), true},
      {"M_5", build_mn(5), true},
      {"torus", SimplicialComplex::from_facets(labels(7), oracle::torus_facets()), true},
      {"RP2", SimplicialComplex::from_facets(labels(6), oracle::rp2_facets()), true},
      {"L(3,1)", verify_lens(3, 1).quotient, true},
      {"L(5,1)", verify_lens(5, 1).quotient, false},
      {"L(5,2)", verify_lens(5, 2).quotient, false},
  };
  for (const auto& e : suite) {
    FaceLattice lat(e.k);
    const auto h = homology_groups(lat);
    const auto ab = abelianization(edge_path_presentation(e.k));
    out.expect(ab.free_rank == h[1].betti && ab.torsion == h[1].torsion, e.name + " abelianization vs H_1");
    out.expect(euler_from_ranks(lat) == euler_characteristic(e.k), e.name + " euler from ranks");
    if (e.subdivide) {
      out.expect(homology_groups(barycentric_subdivision(e.k)) == h, e.name + " homology under subdivision");
    }
  }
}

void criterion_negative(Outcome& out) {
  out.expect(error_kind([] { psi_k_on_mn(4, 2); }) == ErrorKind::NotCoprime, "psi(4,2) rejected");
  out.expect(error_kind([] { verify_lens(6, 3); }) == ErrorKind::NotCoprime, "verify_lens(6,3) rejected");
  auto bad = demo_z5();
  bad.classes[1] = bad.classes[1] + DivisorClass::exceptional(4, 1);
  out.expect(!verify_anticanonical_cycle(bad).overall(), "perturbed class list fails");
  out.expect(error_kind([&] { product_dual_complex(bad); }) == ErrorKind::CycleCheckFailed, "perturbed product rejected");
  const auto rp2 = SimplicialComplex::from_facets(labels(6), oracle::rp2_facets());
  out.expect(is_closed_pseudomanifold(rp2, 2) && euler_characteristic(rp2) == 1, "RP2 triangulation sane");
  out.expect(error_kind([&] { fundamental_cycle(rp2); }) == ErrorKind::NonOrientable, "RP2 non-orientable");
}

struct Criterion {
  int id;
  std::string title;
  std::function<void(Outcome&)> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "M_n certification", criterion_mn},
      {2, "quotient certification", criterion_quotient},
      {3, "homotopy separation", criterion_torsion},
      {4, "F_n numerics", criterion_fn},
      {5, "surface checks", criterion_surface},
      {6, "cross-oracle consistency", criterion_cross},
      {7, "negative controls", criterion_negative},
  };
  return all;
}

bool run_one(const Criterion& c) {
  Outcome out;
  try {
    c.run(out);
  } catch (const std::exception& e) {
    out.failures.push_back(std::string("exception: ") + e.what());
  }
  const bool pass = out.failures.empty();
  std::cout << "criterion " << c.id << " [" << c.title << "]: " << (pass ? "PASS" : "FAIL");
  if (!pass) {
    std::cout << " (failed:";
    for (const auto& f : out.failures) std::cout << " " << f << ";";
    std::cout << ")";
  }
  std::cout << '\n';
  for (const auto& n : out.notes) std::cout << "    " << n << '\n';
  return pass;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--criterion N]\n";
      return 2;
    }
  }
  bool all_pass = true;
  bool ran = false;
  for (const auto& c : criteria()) {
    if (only && c.id != only) continue;
    ran = true;
    all_pass = run_one(c) && all_pass;
  }
  if (!ran) {
    std::cerr << "no criterion " << only << '\n';
    return 2;
  }
  return all_pass ? 0 : 1;
}
