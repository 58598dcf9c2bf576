#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lenscx/complex.hpp"
#include "lenscx/report.hpp"

namespace lenscx {

/// The class a L + sum b_i E_i on the plane blown up in r points, so E_3 on
/// the 4-point blowup is (0; 0, 0, 1, 0) and L - E_2 - E_4 is (1; 0, -1, 0, -1).
struct DivisorClass {
  std::int64_t a = 0;
  std::vector<std::int64_t> b;

  int rank() const noexcept { return static_cast<int>(b.size()); }

  static DivisorClass line(int r);
  /// E_i with i in 1..r.
  static DivisorClass exceptional(int r, int i);

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
  friend auto operator<=>(const DivisorClass&, const DivisorClass&) = default;
};

DivisorClass operator+(const DivisorClass& x, const DivisorClass& y);
DivisorClass operator-(const DivisorClass& x, const DivisorClass& y);
DivisorClass operator-(const DivisorClass& x);

/// L^2 = 1, E_i^2 = -1, mixed products 0. Throws RankMismatch.
std::int64_t intersect(const DivisorClass& x, const DivisorClass& y);

/// K = -3L + sum E_i.
DivisorClass canonical_class(int r);

/// c^2 = c.K = -1.
bool is_minus_one_curve(const DivisorClass& c);

/// Components of a boundary cycle, in cyclic order, with an optional vertex
/// permutation standing in for the surface automorphism.
struct CyclePair {
  int r = 0;
  std::vector<DivisorClass> classes;
  std::optional<std::vector<int>> action;
};

/// Sum equals -K, consecutive classes meet once, others not at all; when an
/// action is present it must rotate the cycle transitively.
Report verify_anticanonical_cycle(const CyclePair& pair);

/// Class of the boundary divisor A_{i,j} of the 5-pointed genus-0 moduli
/// space viewed as the blowup of the plane in four points: A_{i,5} = E_i and
/// A_{i,j} = L - E_k - E_l with {k,l} the rest of {1,2,3,4}. Indices are
/// read mod 5 in 1..5 (so A_{4,6} = A_{1,4}); throws BadIndices when the
/// two points coincide or an index is out of range.
DivisorClass m05_class_of(int i, int j);

/// Cyclic relabelling p_i -> p_{i+1} of the marked points acts on the ten
/// (-1)-curves; checks it rotates the five listed boundary classes.
Report m05_cyclic_check();

/// Dual complex of (X x X, pr_1^* D + pr_2^* D); equals build_mn(n).
/// Throws CycleCheckFailed if the pair is not an anticanonical cycle.
SimplicialComplex product_dual_complex(const CyclePair& pair);

/// Three coordinate lines in the plane with the coordinate rotation.
CyclePair demo_z3();
/// The five boundary classes on the 4-point blowup with the rotation.
CyclePair demo_z5();

}  // namespace lenscx
