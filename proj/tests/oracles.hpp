#pragma once

// Brute-force reference computations used only by the tests. Nothing here
// calls into the library's algorithms.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Big = boost::multiprecision::cpp_int;
using Mat = std::vector<std::vector<Big>>;

// Fraction-free Gaussian elimination; returns the rank and leaves the
// determinant (square input) in *det.
inline std::size_t bareiss(Mat a, Big* det = nullptr) {
  const std::size_t m = a.size();
  const std::size_t n = m ? a[0].size() : 0;
  std::size_t r = 0;
  Big prev = 1;
  int sign = 1;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && a[p][c] == 0) ++p;
    if (p == m) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < m; ++i) {
      for (std::size_t j = c + 1; j < n; ++j) {
        a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  if (det) *det = (m == n && r == n) ? Big(sign * prev) : Big(0);
  return r;
}

inline Big gcd_all(const std::vector<Big>& v) {
  Big g = 0;
  for (const auto& x : v) g = boost::multiprecision::gcd(g, x < 0 ? Big(-x) : x);
  return g;
}

// Subsets of {0..nv-1} (as sorted vectors) with `size` elements.
template <typename Pred>
std::vector<std::vector<int>> subsets(int nv, int size, Pred keep) {
  std::vector<std::vector<int>> out;
  std::vector<int> mask(static_cast<std::size_t>(nv), 0);
  std::fill(mask.end() - size, mask.end(), 1);
  do {
    std::vector<int> s;
    for (int i = 0; i < nv; ++i) {
      if (mask[static_cast<std::size_t>(i)]) s.push_back(i);
    }
    if (keep(s)) out.push_back(s);
  } while (std::next_permutation(mask.begin(), mask.end()));
  std::sort(out.begin(), out.end());
  return out;
}

// Membership in the join of two n-cycles: per factor at most two vertices,
// and two only if they are adjacent on the cycle.
inline bool in_mn(int n, const std::vector<int>& s) {
  for (int mu = 0; mu < 2; ++mu) {
    std::vector<int> part;
    for (int v : s) {
      if (v / n == mu) part.push_back(v % n);
    }
    if (part.size() > 2) return false;
    if (part.size() == 2) {
      const int d = part[1] - part[0];
      if (d != 1 && d != n - 1) return false;
    }
  }
  return true;
}

inline std::vector<std::size_t> mn_f_vector(int n) {
  std::vector<std::size_t> f;
  for (int size = 1; size <= 4; ++size) {
    f.push_back(subsets(2 * n, size, [n](const std::vector<int>& s) { return in_mn(n, s); }).size());
  }
  return f;
}

// Stirling numbers of the second kind.
inline std::uint64_t stirling2(int n, int k) {
  std::vector<std::vector<std::uint64_t>> s(static_cast<std::size_t>(n + 1),
                                            std::vector<std::uint64_t>(static_cast<std::size_t>(n + 1), 0));
  s[0][0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= i; ++j) s[i][j] = static_cast<std::uint64_t>(j) * s[i - 1][j] + s[i - 1][j - 1];
  }
  return k <= n ? s[n][k] : 0;
}

// f-vector of the barycentric subdivision: a j-simplex of Sd K is a chain of
// j+1 faces, i.e. an ordered partition of the top face's vertices.
inline std::vector<std::size_t> subdivided_f_vector(const std::vector<std::size_t>& f) {
  std::vector<std::size_t> out(f.size(), 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    std::uint64_t fact = 1;
    for (std::size_t j = 0; j <= i; ++j) {
      fact *= (j + 1);
      out[j] += f[i] * fact * stirling2(static_cast<int>(i + 1), static_cast<int>(j + 1));
    }
  }
  return out;
}

inline std::set<std::int64_t> unit_square_orbit(std::int64_t n, std::int64_t v) {
  std::set<std::int64_t> out;
  for (std::int64_t m = 1; m < n; ++m) {
    if (std::gcd(m, n) != 1) continue;
    const std::int64_t x = (m * m % n) * (v % n) % n;
    out.insert(x);
    out.insert((n - x) % n);
  }
  return out;
}

inline std::vector<std::vector<int>> rp2_facets() {
  return {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
          {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}};
}

inline std::vector<std::vector<int>> torus_facets() {
  std::vector<std::vector<int>> f;
  for (int i = 0; i < 7; ++i) {
    std::vector<int> a{i, (i + 1) % 7, (i + 3) % 7};
    std::vector<int> b{i, (i + 2) % 7, (i + 3) % 7};
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    f.push_back(a);
    f.push_back(b);
  }
  return f;
}

inline std::vector<std::vector<int>> sphere2_facets() {
  return {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
}

}  // namespace oracle
