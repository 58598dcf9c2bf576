#pragma once

#include <cstdint>
#include <set>
#include <string>

#include "lenscx/complex.hpp"
#include "lenscx/group_action.hpp"
#include "lenscx/report.hpp"

namespace lenscx {

/// Label of vertex Delta_{factor,i} of M_n, factor in {1,2}, i in 1..n.
std::string mn_label(int factor, int i);

/// M_n: the join of two n-cycles, dual complex of the product of two
/// n-cycle boundary pairs. Vertex Delta_{mu,i} has index (mu-1)*n + (i-1);
/// facets are {Delta_{1,i}, Delta_{1,i+1}, Delta_{2,j}, Delta_{2,j+1}}.
/// A face holds at most two vertices per factor, consecutive mod n.
/// Throws BadCycleLength for n < 3.
SimplicialComplex build_mn(int n);

/// Psi_k on M_n: Delta_{1,i} -> Delta_{1,i+1}, Delta_{2,j} -> Delta_{2,j+k}.
/// Throws BadCycleLength (n < 3) or NotCoprime (gcd(n,k) != 1 or k outside [1,n)).
CyclicAction psi_k_on_mn(int n, int k);

/// Expected invariants of L(n,k).
struct LensProfile {
  int n = 0;
  int k = 0;
  std::int64_t k_inverse = 0;
  std::set<std::int64_t> torsion_orbit;  // {+-m^2 k^{-1} mod n}
};

LensProfile lens_profile(int n, int k);

struct LensClassification {
  bool homotopy_equivalent = false;
  std::set<std::int64_t> orbit1;
  std::set<std::int64_t> orbit2;
};

/// L(n,k1) ~ L(n,k2) iff k1 k2 = +-m^2 mod n for some m.
LensClassification classify_lens_params(int n, int k1, int k2);

struct LensOptions {
  bool run_torsion = false;
  bool run_pi1 = false;
  /// Defaults to 10 * n.
  std::size_t max_cosets = 0;
};

struct LensVerification {
  int n = 0;
  int k = 0;
  Report report;
  int subdivisions = 0;
  SimplicialComplex quotient;
};

/// build_mn -> subdivide -> induced Psi_k -> freeness -> quotient, then
/// Euler characteristic, closed orientable pseudomanifold, homology
/// (Z, Z/n, 0, Z) and optionally pi_1 order and the torsion orbit.
/// The subdivision is repeated when the orbit space is not yet simplicial.
LensVerification verify_lens(int n, int k, const LensOptions& options = {});

}  // namespace lenscx
