#include "lenscx/exactlin.hpp"

#include <algorithm>
#include <stdexcept>

namespace lenscx {

namespace {

struct Entry {
  std::int32_t col;
  BigInt val;
};
using SparseRow = std::vector<Entry>;

const BigInt* find_entry(const SparseRow& row, std::int32_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const Entry& e, std::int32_t c) { return e.col < c; });
  return (it != row.end() && it->col == col) ? &it->val : nullptr;
}

// target += coeff * source; reports columns that gained an entry.
void axpy(SparseRow& target, const SparseRow& source, const BigInt& coeff,
          std::vector<std::int32_t>& new_cols) {
  SparseRow out;
  out.reserve(target.size() + source.size());
  std::size_t a = 0, b = 0;
  while (a < target.size() || b < source.size()) {
    if (b == source.size() || (a < target.size() && target[a].col < source[b].col)) {
      out.push_back(std::move(target[a++]));
    } else if (a == target.size() || source[b].col < target[a].col) {
      new_cols.push_back(source[b].col);
      out.push_back({source[b].col, coeff * source[b].val});
      ++b;
    } else {
      BigInt v = target[a].val + coeff * source[b].val;
      if (v != 0) out.push_back({target[a].col, std::move(v)});
      ++a;
      ++b;
    }
  }
  target = std::move(out);
}

}  // namespace

IntMatrix to_dense(const SparseIntMatrix& A) {
  IntMatrix D = IntMatrix::Zero(A.rows(), A.cols());
  for (Eigen::Index k = 0; k < A.outerSize(); ++k) {
    for (SparseIntMatrix::InnerIterator it(A, k); it; ++it) D(it.row(), it.col()) = BigInt(it.value());
  }
  return D;
}

SparseSmith::SparseSmith(const SparseIntMatrix& A, bool track_left)
    : rows_(A.rows()), cols_(A.cols()), track_left_(track_left) {
  const auto m = static_cast<std::int32_t>(A.rows());
  const auto n = static_cast<std::int32_t>(A.cols());
  std::vector<SparseRow> rows(m);
  std::vector<std::vector<std::int32_t>> col_rows(n);  // may hold stale row ids
  for (Eigen::Index k = 0; k < A.outerSize(); ++k) {
    for (SparseIntMatrix::InnerIterator it(A, k); it; ++it) {
      if (it.value() == 0) continue;
      rows[it.row()].push_back({static_cast<std::int32_t>(it.col()), BigInt(it.value())});
      col_rows[it.col()].push_back(static_cast<std::int32_t>(it.row()));
    }
  }
  for (auto& r : rows) {
    std::sort(r.begin(), r.end(), [](const Entry& x, const Entry& y) { return x.col < y.col; });
  }

  std::vector<bool> row_done(m, false);
  std::vector<bool> col_done(n, false);
  std::vector<std::int64_t> stamp(m, -1);
  std::int64_t visit = 0;
  std::vector<std::int32_t> live;
  std::vector<std::int32_t> new_cols;

  bool progress = true;
  while (progress) {
    progress = false;
    for (std::int32_t c = 0; c < n; ++c) {
      if (col_done[c]) continue;
      live.clear();
      ++visit;
      for (std::int32_t r : col_rows[c]) {
        if (row_done[r] || stamp[r] == visit) continue;
        stamp[r] = visit;
        if (find_entry(rows[r], c)) live.push_back(r);
      }
      col_rows[c] = live;
      if (live.empty()) {
        col_done[c] = true;
        continue;
      }
      std::int32_t pivot = -1;
      for (std::int32_t r : live) {
        const BigInt& v = *find_entry(rows[r], c);
        if ((v == 1 || v == -1) && (pivot < 0 || rows[r].size() < rows[pivot].size())) pivot = r;
      }
      if (pivot < 0) continue;
      progress = true;
      const BigInt p = *find_entry(rows[pivot], c);  // p == p^{-1}
      for (std::int32_t r : live) {
        if (r == pivot) continue;
        const BigInt coeff = -(*find_entry(rows[r], c)) * p;
        new_cols.clear();
        axpy(rows[r], rows[pivot], coeff, new_cols);
        for (std::int32_t nc : new_cols) col_rows[nc].push_back(r);
        if (track_left_) log_.push_back({r, pivot, coeff});
      }
      row_done[pivot] = true;
      col_done[c] = true;
      col_rows[c].clear();
      factors_.push_back(BigInt(1));
      if (track_left_) sources_.push_back({{pivot, p}});
      rows[pivot].clear();
    }
  }

  // Whatever survives has no unit entries; finish densely.
  std::vector<std::int32_t> rest_rows;
  std::vector<std::int32_t> rest_cols;
  std::vector<std::int32_t> col_pos(n, -1);
  for (std::int32_t r = 0; r < m; ++r) {
    if (row_done[r] || rows[r].empty()) continue;
    rest_rows.push_back(r);
    for (const auto& e : rows[r]) {
      if (col_pos[e.col] < 0) {
        col_pos[e.col] = 0;
        rest_cols.push_back(e.col);
      }
    }
  }
  if (rest_rows.empty()) return;
  std::sort(rest_cols.begin(), rest_cols.end());
  for (std::size_t j = 0; j < rest_cols.size(); ++j) col_pos[rest_cols[j]] = static_cast<std::int32_t>(j);
  IntMatrix B = IntMatrix::Zero(static_cast<Eigen::Index>(rest_rows.size()),
                                static_cast<Eigen::Index>(rest_cols.size()));
  for (std::size_t i = 0; i < rest_rows.size(); ++i) {
    for (const auto& e : rows[rest_rows[i]]) B(static_cast<Eigen::Index>(i), col_pos[e.col]) = e.val;
  }
  const auto snf = smith_normal_form(B);
  for (Eigen::Index t = 0; t < std::min(B.rows(), B.cols()); ++t) {
    if (snf.D(t, t) == 0) break;
    factors_.push_back(snf.D(t, t));
    if (track_left_) {
      std::vector<std::pair<std::int32_t, BigInt>> src;
      for (Eigen::Index j = 0; j < B.rows(); ++j) {
        if (snf.U(t, j) != 0) src.emplace_back(rest_rows[j], snf.U(t, j));
      }
      sources_.push_back(std::move(src));
    }
  }
}

std::vector<BigInt> SparseSmith::torsion() const {
  std::vector<BigInt> t;
  for (const auto& f : factors_) {
    if (f > 1) t.push_back(f);
  }
  return t;
}

std::vector<BigInt> SparseSmith::left_row(std::size_t position) const {
  if (!track_left_) throw std::logic_error("SparseSmith: left transform was not tracked");
  if (position >= factors_.size()) throw std::out_of_range("SparseSmith::left_row");
  std::vector<BigInt> x(static_cast<std::size_t>(rows_), BigInt(0));
  for (const auto& [row, c] : sources_[position]) x[row] += c;
  // x * E_m * ... * E_1 with E = I + c e_target e_source^T.
  for (auto it = log_.rbegin(); it != log_.rend(); ++it) {
    if (x[it->target] != 0) x[it->source] += it->coeff * x[it->target];
  }
  return x;
}

}  // namespace lenscx
