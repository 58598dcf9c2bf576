#include "lenscx/torsion.hpp"

#include <numeric>

#include "lenscx/error.hpp"
#include "lenscx/homology.hpp"

namespace lenscx {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t n) {
  a %= n;
  return a < 0 ? a + n : a;
}

// Integral coboundary of integer values on degree-d faces.
std::vector<std::int64_t> integral_coboundary(const FaceLattice& lattice, int degree,
                                              const std::vector<std::int64_t>& values) {
  const auto& targets = lattice.faces(degree + 1);
  std::vector<std::int64_t> out(targets.size(), 0);
  Simplex face;
  for (std::size_t j = 0; j < targets.size(); ++j) {
    std::int64_t acc = 0;
    for (int i = 0; i <= degree + 1; ++i) {
      face = targets[j];
      face.erase(face.begin() + i);
      const std::int64_t v = values[static_cast<std::size_t>(lattice.index_of(face))];
      acc += (i % 2 == 0) ? v : -v;
    }
    out[j] = acc;
  }
  return out;
}

}  // namespace

CochainModN coboundary(const FaceLattice& lattice, const CochainModN& u) {
  if (u.degree + 1 > lattice.dim()) {
    throw Error(ErrorKind::DimensionOutOfRange, "no faces above degree " + std::to_string(u.degree));
  }
  CochainModN out{u.degree + 1, u.modulus, integral_coboundary(lattice, u.degree, u.values)};
  for (auto& v : out.values) v = mod(v, u.modulus);
  return out;
}

CochainModN h1_generator(const SimplicialComplex& complex, std::int64_t n) {
  FaceLattice lattice(complex);
  if (lattice.dim() < 2) throw Error(ErrorKind::WrongTorsion, "complex has no 2-faces");
  const auto h = homology_groups(lattice);
  if (h[1].betti != 0 || h[1].torsion.size() != 1 || h[1].torsion[0] != n) {
    throw Error(ErrorKind::WrongTorsion, "H_1 is not Z/" + std::to_string(n));
  }
  // U d2 V = D with D_tt = n: row t of U is a cochain whose coboundary is
  // n times a row of V^{-1}, and which pairs to 1 with the torsion cycle.
  SparseSmith smith(boundary_matrix(lattice, 2), true);
  const auto& factors = smith.invariant_factors();
  std::size_t position = factors.size();
  for (std::size_t t = 0; t < factors.size(); ++t) {
    if (factors[t] == n) position = t;
  }
  if (position == factors.size()) throw Error(ErrorKind::WrongTorsion, "no invariant factor equal to n");
  const auto row = smith.left_row(position);
  CochainModN u{1, n, std::vector<std::int64_t>(row.size(), 0)};
  const BigInt big_n(n);
  for (std::size_t e = 0; e < row.size(); ++e) {
    BigInt r = row[e] % big_n;
    if (r < 0) r += big_n;
    u.values[e] = static_cast<std::int64_t>(r);
  }
  return u;
}

CochainModN bockstein(const FaceLattice& lattice, const CochainModN& u) {
  const auto lifted = integral_coboundary(lattice, u.degree, u.values);
  CochainModN out{u.degree + 1, u.modulus, std::vector<std::int64_t>(lifted.size(), 0)};
  for (std::size_t j = 0; j < lifted.size(); ++j) {
    if (lifted[j] % u.modulus != 0) throw Error(ErrorKind::NotCocycle, "cochain is not a cocycle mod n");
    out.values[j] = mod(lifted[j] / u.modulus, u.modulus);
  }
  return out;
}

CochainModN cup(const FaceLattice& lattice, const CochainModN& a, const CochainModN& b) {
  if (a.modulus != b.modulus) throw Error(ErrorKind::InvalidInput, "cup product of different moduli");
  const int degree = a.degree + b.degree;
  const auto& faces = lattice.faces(degree);
  CochainModN out{degree, a.modulus, std::vector<std::int64_t>(faces.size(), 0)};
  for (std::size_t j = 0; j < faces.size(); ++j) {
    const Simplex front(faces[j].begin(), faces[j].begin() + a.degree + 1);
    const Simplex back(faces[j].begin() + a.degree, faces[j].end());
    const std::int64_t x = a.values[static_cast<std::size_t>(lattice.index_of(front))];
    const std::int64_t y = b.values[static_cast<std::size_t>(lattice.index_of(back))];
    out.values[j] = mod(x * y, a.modulus);
  }
  return out;
}

std::int64_t evaluate(const CochainModN& top, const OrientationClass& fundamental) {
  if (top.values.size() != fundamental.coefficients.size()) {
    throw Error(ErrorKind::InvalidInput, "cochain and fundamental class have different supports");
  }
  std::int64_t acc = 0;
  for (std::size_t f = 0; f < top.values.size(); ++f) acc = mod(acc + fundamental.coefficients[f] * top.values[f], top.modulus);
  return acc;
}

std::set<std::int64_t> square_orbit(std::int64_t n, std::int64_t v) {
  std::set<std::int64_t> orbit;
  for (std::int64_t m = 1; m < n; ++m) {
    if (std::gcd(m, n) != 1) continue;
    const std::int64_t s = mod(m * m % n * mod(v, n), n);
    orbit.insert(s);
    orbit.insert(mod(-s, n));
  }
  return orbit;
}

QInvariant q_invariant(const SimplicialComplex& complex, std::int64_t n) {
  if (complex.dim() != 3 || !is_closed_pseudomanifold(complex, 3)) {
    throw Error(ErrorKind::NotPseudomanifold, "q invariant needs a closed 3-pseudomanifold");
  }
  const OrientationClass fundamental = fundamental_cycle(complex);
  FaceLattice lattice(complex);
  const CochainModN u = h1_generator(complex, n);
  const CochainModN beta = bockstein(lattice, u);
  QInvariant q;
  q.modulus = n;
  q.value = evaluate(cup(lattice, u, beta), fundamental);
  if (std::gcd(q.value, n) != 1) {
    throw Error(ErrorKind::NotUnit, "pairing " + std::to_string(q.value) + " is not a unit mod " + std::to_string(n));
  }
  q.orbit = square_orbit(n, q.value);
  return q;
}

}  // namespace lenscx
