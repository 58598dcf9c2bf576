#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace lenscx {

/// Point of L_n: barycentric coordinates Y_{mu,i} on the 2n vertices of M_n,
/// supported on one facet {Delta_{1,i}, Delta_{1,i+1}, Delta_{2,j}, Delta_{2,j+1}}.
///
/// Index idx in 0..n-1 stands for label i = idx + 1, matching the vertex
/// order of build_mn.
class LnPoint {
 public:
  /// Throws DomainViolation for negative or non-normalized coordinates and
  /// SupportViolation when no facet carries the support.
  static LnPoint make(int n, std::vector<double> y);

  int n() const noexcept { return n_; }
  double at(int factor, int idx) const { return y_[static_cast<std::size_t>((factor - 1) * n_ + idx)]; }
  const std::vector<double>& coordinates() const noexcept { return y_; }

 private:
  LnPoint() = default;
  int n_ = 0;
  std::vector<double> y_;
};

struct SpherePoint {
  std::complex<double> z;
  std::complex<double> w;
};

/// Euclidean distance in C^2.
double distance(const SpherePoint& a, const SpherePoint& b);

/// f_n(x1, x2) = sin(pi/2 (x1+x2)) exp(2 pi i/n * x2/(x1+x2)), f_n(0,0) = 0.
/// Throws DomainViolation outside x1, x2 >= 0, x1 + x2 <= 1.
std::complex<double> little_f(int n, double x1, double x2);

/// F^{i,j}_n with 0-based chart indices: the first coordinate is
/// exp(2 pi i (i+1)/n) f_n(Y_{1,i}, Y_{1,i+1}) and likewise for the second.
/// Throws SupportViolation if the chart misses part of the support.
SpherePoint chart_value(const LnPoint& p, int i, int j);

/// F_n: evaluates every admissible chart and requires agreement within
/// 1e-12.
SpherePoint big_f(const LnPoint& p);

/// Unique preimage under F_n. The input is renormalized; throws NotOnSphere
/// if its norm is more than 1e-9 away from 1.
LnPoint f_inverse(int n, const SpherePoint& s);

/// Psi_k on coordinates: mass on Delta_{1,i} moves to Delta_{1,i+1} and on
/// Delta_{2,j} to Delta_{2,j+k}.
LnPoint apply_psi(const LnPoint& p, int k);

/// Uniform facet, then barycentric coordinates from sorted uniform gaps.
LnPoint sample_ln_point(int n, std::mt19937_64& rng);

/// Largest |F(Psi_k P) - (e^{2 pi i/n} z, e^{2 pi i k/n} w)| over sampled P.
double check_equivariance(int n, int k, std::size_t samples, std::uint64_t seed);

struct FnCheck {
  double max_norm_err = 0;
  double max_seam_err = 0;
  double max_equiv_err = 0;
  double max_roundtrip_err = 0;
  bool origin_hit = false;  // (z, w) = (0, 0) seen
};

/// Sphere constraint, chart agreement on seam points, equivariance and
/// inverse round trips over `samples` random points of L_n.
FnCheck fn_check(int n, int k, std::size_t samples, std::uint64_t seed);

}  // namespace lenscx
