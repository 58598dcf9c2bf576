#include "lenscx/sphere_map.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "lenscx/error.hpp"

namespace lenscx {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kIdentityTol = 1e-12;
constexpr double kRoundTripTol = 1e-9;

int wrap(int i, int n) { return ((i % n) + n) % n; }

// Nonzero coordinates of one factor.
std::vector<int> support(const LnPoint& p, int factor) {
  std::vector<int> s;
  for (int idx = 0; idx < p.n(); ++idx) {
    if (p.at(factor, idx) != 0.0) s.push_back(idx);
  }
  return s;
}

bool chart_covers(const std::vector<int>& supp, int i, int n) {
  return std::all_of(supp.begin(), supp.end(), [&](int idx) { return idx == i || idx == wrap(i + 1, n); });
}

// Charts i with supp contained in {i, i+1}.
std::vector<int> admissible_charts(const std::vector<int>& supp, int n) {
  if (supp.empty()) return {0};
  if (supp.size() == 1) return {supp[0], wrap(supp[0] - 1, n)};
  std::vector<int> out;
  for (int i = 0; i < n; ++i) {
    if (chart_covers(supp, i, n)) out.push_back(i);
  }
  return out;
}

double uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// exp(2 pi i (i+1)/n) f_n(x1, x2); index i carries label i+1.
std::complex<double> chart_coordinate(int n, int i, double x1, double x2);

}  // namespace

LnPoint LnPoint::make(int n, std::vector<double> y) {
  if (n < 3) throw Error(ErrorKind::BadCycleLength, "L_n needs n >= 3");
  if (y.size() != static_cast<std::size_t>(2 * n)) throw Error(ErrorKind::DomainViolation, "expected 2n coordinates");
  double sum = 0;
  for (double v : y) {
    if (!(v >= 0.0) || !std::isfinite(v)) throw Error(ErrorKind::DomainViolation, "coordinates must be nonnegative");
    sum += v;
  }
  if (std::abs(sum - 1.0) > kIdentityTol) throw Error(ErrorKind::DomainViolation, "coordinates must sum to 1");
  LnPoint p;
  p.n_ = n;
  p.y_ = std::move(y);
  for (int factor = 1; factor <= 2; ++factor) {
    if (admissible_charts(support(p, factor), n).empty()) {
      throw Error(ErrorKind::SupportViolation, "support is not contained in a facet of M_n");
    }
  }
  return p;
}

double distance(const SpherePoint& a, const SpherePoint& b) {
  return std::sqrt(std::norm(a.z - b.z) + std::norm(a.w - b.w));
}

std::complex<double> little_f(int n, double x1, double x2) {
  if (n < 1) throw Error(ErrorKind::DomainViolation, "n must be positive");
  if (!(x1 >= 0.0) || !(x2 >= 0.0) || x1 + x2 > 1.0 + kIdentityTol) {
    throw Error(ErrorKind::DomainViolation, "f_n needs x1, x2 >= 0 and x1 + x2 <= 1");
  }
  const double s = x1 + x2;
  if (s == 0.0) return {0.0, 0.0};
  return std::sin(kPi / 2 * s) * std::exp(std::complex<double>(0.0, 2 * kPi / n * (x2 / s)));
}

namespace {

std::complex<double> chart_coordinate(int n, int i, double x1, double x2) {
  return std::polar(1.0, 2 * kPi * (i + 1) / n) * little_f(n, x1, x2);
}

}  // namespace

SpherePoint chart_value(const LnPoint& p, int i, int j) {
  const int n = p.n();
  if (i < 0 || i >= n || j < 0 || j >= n) throw Error(ErrorKind::SupportViolation, "chart index out of range");
  if (!chart_covers(support(p, 1), i, n) || !chart_covers(support(p, 2), j, n)) {
    throw Error(ErrorKind::SupportViolation, "chart does not cover the support of the point");
  }
  return {chart_coordinate(n, i, p.at(1, i), p.at(1, wrap(i + 1, n))),
          chart_coordinate(n, j, p.at(2, j), p.at(2, wrap(j + 1, n)))};
}

SpherePoint big_f(const LnPoint& p) {
  const int n = p.n();
  const auto charts1 = admissible_charts(support(p, 1), n);
  const auto charts2 = admissible_charts(support(p, 2), n);
  const SpherePoint first = chart_value(p, charts1.front(), charts2.front());
  for (int i : charts1) {
    for (int j : charts2) {
      if (distance(chart_value(p, i, j), first) > kIdentityTol) {
        throw std::logic_error("F_n charts disagree on a seam point");
      }
    }
  }
  return first;
}

LnPoint f_inverse(int n, const SpherePoint& s) {
  const double norm = std::sqrt(std::norm(s.z) + std::norm(s.w));
  if (!std::isfinite(norm) || std::abs(norm - 1.0) > kRoundTripTol) {
    throw Error(ErrorKind::NotOnSphere, "|z|^2 + |w|^2 is not 1");
  }
  const std::array<std::complex<double>, 2> coords{s.z / norm, s.w / norm};
  // |z| = sin(pi/2 s1), |w| = sin(pi/2 (1 - s1)) = cos(pi/2 s1).
  const double s1 = 2 / kPi * std::atan2(std::abs(coords[0]), std::abs(coords[1]));
  const std::array<double, 2> mass{s1, 1.0 - s1};
  std::vector<double> y(static_cast<std::size_t>(2 * n), 0.0);
  for (int f = 0; f < 2; ++f) {
    if (coords[f] == 0.0 || mass[f] <= 0.0) continue;
    double theta = std::arg(coords[f]);
    if (theta < 0) theta += 2 * kPi;
    double t = theta * n / (2 * kPi);  // phase in units of roots of unity
    if (std::abs(t - std::round(t)) < kIdentityTol * n) t = std::round(t);
    const double whole = std::floor(t);
    const double frac = t - whole;
    // Root of unity number l belongs to label l, i.e. index l - 1.
    const int idx = wrap(static_cast<int>(whole) - 1, n);
    y[static_cast<std::size_t>(f * n + idx)] += mass[f] * (1.0 - frac);
    if (frac > 0.0) y[static_cast<std::size_t>(f * n + wrap(idx + 1, n))] += mass[f] * frac;
  }
  return LnPoint::make(n, std::move(y));
}

LnPoint apply_psi(const LnPoint& p, int k) {
  const int n = p.n();
  std::vector<double> y(static_cast<std::size_t>(2 * n), 0.0);
  for (int idx = 0; idx < n; ++idx) {
    y[static_cast<std::size_t>(wrap(idx + 1, n))] = p.at(1, idx);
    y[static_cast<std::size_t>(n + wrap(idx + k, n))] = p.at(2, idx);
  }
  return LnPoint::make(n, std::move(y));
}

LnPoint sample_ln_point(int n, std::mt19937_64& rng) {
  const int i = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
  const int j = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
  std::array<double, 3> cut{uniform(rng), uniform(rng), uniform(rng)};
  std::sort(cut.begin(), cut.end());
  std::vector<double> y(static_cast<std::size_t>(2 * n), 0.0);
  y[static_cast<std::size_t>(i)] = cut[0];
  y[static_cast<std::size_t>(wrap(i + 1, n))] = cut[1] - cut[0];
  y[static_cast<std::size_t>(n + j)] = cut[2] - cut[1];
  y[static_cast<std::size_t>(n + wrap(j + 1, n))] = 1.0 - cut[2];
  return LnPoint::make(n, std::move(y));
}

namespace {

double equivariance_error(const LnPoint& p, int k) {
  const int n = p.n();
  const SpherePoint s = big_f(p);
  const SpherePoint moved = big_f(apply_psi(p, k));
  const SpherePoint expected{std::polar(1.0, 2 * kPi / n) * s.z, std::polar(1.0, 2 * kPi * k / n) * s.w};
  return distance(moved, expected);
}

}  // namespace

double check_equivariance(int n, int k, std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  double worst = 0;
  for (std::size_t s = 0; s < samples; ++s) worst = std::max(worst, equivariance_error(sample_ln_point(n, rng), k));
  return worst;
}

FnCheck fn_check(int n, int k, std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  FnCheck out;
  for (std::size_t sample = 0; sample < samples; ++sample) {
    const LnPoint p = sample_ln_point(n, rng);
    const SpherePoint s = big_f(p);
    out.max_norm_err = std::max(out.max_norm_err, std::abs(std::norm(s.z) + std::norm(s.w) - 1.0));
    if (s.z == 0.0 && s.w == 0.0) out.origin_hit = true;
    out.max_equiv_err = std::max(out.max_equiv_err, equivariance_error(p, k));

    const LnPoint back = f_inverse(n, s);
    for (std::size_t c = 0; c < back.coordinates().size(); ++c) {
      out.max_roundtrip_err = std::max(out.max_roundtrip_err, std::abs(back.coordinates()[c] - p.coordinates()[c]));
    }
    out.max_roundtrip_err = std::max(out.max_roundtrip_err, distance(big_f(back), s));

    // Seam point with the same factor masses, one vertex per factor: two
    // charts apply in each factor.
    double s1 = 0;
    for (int idx = 0; idx < n; ++idx) s1 += p.at(1, idx);
    const int a = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    const int b = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    std::vector<double> y(static_cast<std::size_t>(2 * n), 0.0);
    y[static_cast<std::size_t>(a)] = s1;
    y[static_cast<std::size_t>(n + b)] = 1.0 - s1;
    const LnPoint seam = LnPoint::make(n, std::move(y));
    const SpherePoint ref = chart_value(seam, a, b);
    for (int i : {a, wrap(a - 1, n)}) {
      for (int j : {b, wrap(b - 1, n)}) out.max_seam_err = std::max(out.max_seam_err, distance(chart_value(seam, i, j), ref));
    }
  }
  return out;
}

}  // namespace lenscx
