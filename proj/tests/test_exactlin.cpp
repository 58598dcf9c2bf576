#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "lenscx/exactlin.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace lenscx;

namespace {

oracle::Mat to_oracle(const IntMatrix& a) {
  oracle::Mat m(static_cast<std::size_t>(a.rows()), std::vector<oracle::Big>(static_cast<std::size_t>(a.cols())));
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) m[i][j] = oracle::Big(a(i, j).str());
  }
  return m;
}

IntMatrix random_matrix(std::mt19937_64& rng, int rows, int cols, int spread, double density) {
  std::uniform_int_distribution<int> entry(-spread, spread);
  std::uniform_real_distribution<double> coin(0, 1);
  IntMatrix a(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) a(i, j) = coin(rng) < density ? entry(rng) : 0;
  }
  return a;
}

SparseIntMatrix to_sparse(const IntMatrix& a) {
  SparseIntMatrix s(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (a(i, j) != 0) s.insert(i, j) = static_cast<std::int64_t>(a(i, j));
    }
  }
  s.makeCompressed();
  return s;
}

oracle::Big abs_det(const IntMatrix& a) {
  oracle::Big d;
  oracle::bareiss(to_oracle(a), &d);
  return d < 0 ? oracle::Big(-d) : d;
}

// Plain triple loop: Eigen's product path for BigInt trips over a Boost
// trait, so the tests multiply by hand.
template <typename S>
DenseMatrix<S> mul(const DenseMatrix<S>& a, const DenseMatrix<S>& b) {
  DenseMatrix<S> c(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      S acc = 0;
      for (Eigen::Index t = 0; t < a.cols(); ++t) acc += a(i, t) * b(t, j);
      c(i, j) = acc;
    }
  }
  return c;
}

template <typename A, typename B>
bool same(const A& a, const B& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (a(i, j) != b(i, j)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("Smith form of a small matrix") {
  IntMatrix a(3, 3);
  a << 2, 4, 4, -6, 6, 12, 10, -4, -16;
  const auto snf = smith_normal_form(a);
  CHECK(snf.diagonal() == std::vector<BigInt>{2, 6, 12});
  CHECK(same(mul(mul(snf.U, a), snf.V), snf.D));
}

TEST_CASE("Smith form properties on random matrices") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<int> dim(1, 7);
    const int m = dim(rng);
    const int n = dim(rng);
    const IntMatrix a = random_matrix(rng, m, n, 9, 0.7);
    const auto snf = smith_normal_form(a);

    CHECK(same(mul(mul(snf.U, a), snf.V), snf.D));
    CHECK(abs_det(snf.U) == 1);
    CHECK(abs_det(snf.V) == 1);
    for (Eigen::Index i = 0; i < m; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        if (i != j) CHECK(snf.D(i, j) == 0);
      }
    }
    const auto d = snf.diagonal();
    for (std::size_t i = 0; i < d.size(); ++i) {
      CHECK(d[i] >= 0);
      if (i + 1 < d.size() && d[i + 1] != 0) CHECK(d[i + 1] % d[i] == 0);
      if (i + 1 < d.size() && d[i] == 0) CHECK(d[i + 1] == 0);
    }
    CHECK(static_cast<std::size_t>(snf.rank()) == oracle::bareiss(to_oracle(a)));
    if (m == n) {
      BigInt prod = 1;
      for (const auto& x : d) prod *= x;
      CHECK(oracle::Big(prod.str()) == abs_det(a));
    }
  }
}

TEST_CASE("Smith form is templated on the scalar") {
  DenseMatrix<long long> a(2, 3);
  a << 4, 6, 8, 2, 2, 2;
  const auto snf = smith_normal_form(a);
  CHECK(snf.diagonal() == std::vector<long long>{2, 2});
  CHECK(same(mul(mul(snf.U, a), snf.V), snf.D));
}

TEST_CASE("integer kernel basis") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const IntMatrix a = random_matrix(rng, 3, 6, 5, 0.8);
    const auto basis = kernel_basis(a);
    CHECK(basis.size() == 6 - oracle::bareiss(to_oracle(a)));
    for (const auto& v : basis) {
      const IntMatrix av = mul<BigInt>(a, v);
      CHECK(same(av, IntMatrix::Zero(av.rows(), 1)));
    }
  }
}

TEST_CASE("sparse Smith agrees with the dense form") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<int> dim(1, 25);
    const int m = dim(rng);
    const int n = dim(rng);
    const IntMatrix a = random_matrix(rng, m, n, 3, 0.25);
    const SparseSmith sparse(to_sparse(a), true);
    const auto dense = smith_normal_form(a);
    std::vector<BigInt> nonzero;
    for (const auto& x : dense.diagonal()) {
      if (x != 0) nonzero.push_back(x);
    }
    REQUIRE(sparse.invariant_factors() == nonzero);
    CHECK(sparse.rank() == oracle::bareiss(to_oracle(a)));

    // Row p of U times A is d_p times a primitive vector.
    for (std::size_t p = 0; p < sparse.rank(); ++p) {
      const auto row = sparse.left_row(p);
      REQUIRE(row.size() == static_cast<std::size_t>(m));
      std::vector<oracle::Big> prod(static_cast<std::size_t>(n), 0);
      for (int j = 0; j < n; ++j) {
        for (int i = 0; i < m; ++i) prod[j] += oracle::Big(row[i].str()) * oracle::Big(a(i, j).str());
      }
      CHECK(oracle::gcd_all(prod) == oracle::Big(sparse.invariant_factors()[p].str()));
    }
  }
}

TEST_CASE("sparse Smith on a boundary-like matrix with torsion") {
  // diag(2, 3) next to a unimodular 2x2 block.
  SparseIntMatrix a(4, 4);
  a.insert(0, 0) = 2;
  a.insert(1, 1) = 3;
  a.insert(2, 2) = 1;
  a.insert(3, 2) = 1;
  a.insert(3, 3) = -1;
  a.makeCompressed();
  SparseSmith s(a);
  CHECK(s.invariant_factors() == std::vector<BigInt>{1, 1, 1, 6});
  CHECK(s.torsion() == std::vector<BigInt>{6});
  CHECK_THROWS(s.left_row(0));
  CHECK(to_dense(a)(3, 3) == -1);
}
