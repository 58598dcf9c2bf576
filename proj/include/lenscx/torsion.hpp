#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "lenscx/complex.hpp"

namespace lenscx {

/// Simplicial cochain with Z/modulus values, one per face of `degree` in
/// FaceLattice order.
struct CochainModN {
  int degree = 0;
  std::int64_t modulus = 1;
  std::vector<std::int64_t> values;  // each in [0, modulus)
};

/// (delta u)(v_0..v_{d+1}) = sum_i (-1)^i u(v_0..^v_i..v_{d+1}) mod n.
CochainModN coboundary(const FaceLattice& lattice, const CochainModN& u);

/// A 1-cocycle generating H^1(K; Z/n) = Z/n, read off the left Smith
/// transform of the second boundary map. Throws WrongTorsion unless
/// H_1(K) = Z/n.
CochainModN h1_generator(const SimplicialComplex& complex, std::int64_t n);

/// Connecting map of 0 -> Z/n -> Z/n^2 -> Z/n -> 0: lift to [0, n), take the
/// integral coboundary, divide by n. Throws NotCocycle.
CochainModN bockstein(const FaceLattice& lattice, const CochainModN& u);

/// Alexander-Whitney product: (a u b)(v_0..v_{p+q}) = a(v_0..v_p) b(v_p..v_{p+q}),
/// vertices in index order.
CochainModN cup(const FaceLattice& lattice, const CochainModN& a, const CochainModN& b);

/// <c, sum_f coeff_f f> mod n for a top-degree cochain.
std::int64_t evaluate(const CochainModN& top, const OrientationClass& fundamental);

/// {+-m^2 v mod n : m a unit mod n}.
std::set<std::int64_t> square_orbit(std::int64_t n, std::int64_t v);

struct QInvariant {
  std::int64_t modulus = 0;
  std::int64_t value = 0;  // <u u Bu, [K]> for the chosen u and orientation
  std::set<std::int64_t> orbit;
};

/// Linking-type invariant of a closed orientable 3-pseudomanifold with
/// H_1 = Z/n, reported as an orbit under u -> m u and orientation reversal.
/// Throws NotUnit if the pairing is not invertible mod n.
QInvariant q_invariant(const SimplicialComplex& complex, std::int64_t n);

}  // namespace lenscx
