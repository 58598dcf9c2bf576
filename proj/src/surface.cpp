#include "lenscx/surface.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "lenscx/error.hpp"
#include "lenscx/json_io.hpp"
#include "lenscx/lens.hpp"

namespace lenscx {

DivisorClass DivisorClass::line(int r) {
  return {1, std::vector<std::int64_t>(static_cast<std::size_t>(r), 0)};
}

DivisorClass DivisorClass::exceptional(int r, int i) {
  if (i < 1 || i > r) throw Error(ErrorKind::BadIndices, "exceptional index out of range");
  DivisorClass c{0, std::vector<std::int64_t>(static_cast<std::size_t>(r), 0)};
  c.b[i - 1] = 1;
  return c;
}

namespace {

void require_same_rank(const DivisorClass& x, const DivisorClass& y) {
  if (x.rank() != y.rank()) {
    throw Error(ErrorKind::RankMismatch,
                "classes live on blowups in " + std::to_string(x.rank()) + " and " + std::to_string(y.rank()) + " points");
  }
}

}  // namespace

DivisorClass operator+(const DivisorClass& x, const DivisorClass& y) {
  require_same_rank(x, y);
  DivisorClass c = x;
  c.a += y.a;
  for (std::size_t i = 0; i < c.b.size(); ++i) c.b[i] += y.b[i];
  return c;
}

DivisorClass operator-(const DivisorClass& x) {
  DivisorClass c = x;
  c.a = -c.a;
  for (auto& v : c.b) v = -v;
  return c;
}

DivisorClass operator-(const DivisorClass& x, const DivisorClass& y) { return x + (-y); }

std::int64_t intersect(const DivisorClass& x, const DivisorClass& y) {
  require_same_rank(x, y);
  std::int64_t s = x.a * y.a;
  for (std::size_t i = 0; i < x.b.size(); ++i) s -= x.b[i] * y.b[i];
  return s;
}

DivisorClass canonical_class(int r) {
  return {-3, std::vector<std::int64_t>(static_cast<std::size_t>(r), 1)};
}

bool is_minus_one_curve(const DivisorClass& c) {
  return intersect(c, c) == -1 && intersect(c, canonical_class(c.rank())) == -1;
}

namespace {

Json class_json(const DivisorClass& c) {
  Json arr = Json::array({c.a});
  for (auto v : c.b) arr.push_back(v);
  return arr;
}

bool rotates_cycle(const std::vector<int>& perm, std::size_t n) {
  if (perm.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (int v : perm) {
    if (v < 0 || static_cast<std::size_t>(v) >= n || hit[v]) return false;
    hit[v] = true;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t a = static_cast<std::size_t>(perm[i]);
    const std::size_t b = static_cast<std::size_t>(perm[(i + 1) % n]);
    if ((a + 1) % n != b && (b + 1) % n != a) return false;
  }
  std::size_t orbit = 1;
  for (int v = perm[0]; v != 0; v = perm[v]) ++orbit;
  return orbit == n;
}

}  // namespace

Report verify_anticanonical_cycle(const CyclePair& pair) {
  Report report;
  const std::size_t n = pair.classes.size();
  report.add("length", n >= 3, n);
  const bool ranks = std::all_of(pair.classes.begin(), pair.classes.end(),
                                 [&](const DivisorClass& c) { return c.rank() == pair.r; });
  report.add("rank", ranks, pair.r);
  if (n < 3 || !ranks) return report;

  DivisorClass sum{0, std::vector<std::int64_t>(static_cast<std::size_t>(pair.r), 0)};
  for (const auto& c : pair.classes) sum = sum + c;
  report.add("anticanonical", sum == -canonical_class(pair.r), class_json(sum));

  Json matrix = Json::array();
  bool adjacency = true;
  for (std::size_t i = 0; i < n; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < n; ++j) {
      const std::int64_t x = intersect(pair.classes[i], pair.classes[j]);
      row.push_back(x);
      if (i == j) continue;
      const bool adjacent = (i + 1) % n == j || (j + 1) % n == i;
      adjacency = adjacency && x == (adjacent ? 1 : 0);
    }
    matrix.push_back(std::move(row));
  }
  report.add("cycle_adjacency", adjacency, {{"intersections", matrix}});

  if (pair.action) report.add("action_rotates_cycle", rotates_cycle(*pair.action, n), *pair.action);

  if (report.overall()) report.add("dual_complex", true, complex_to_json(cycle_complex(static_cast<int>(n))));
  return report;
}

namespace {

int wrap5(int i) { return ((i - 1) % 5 + 5) % 5 + 1; }

}  // namespace

DivisorClass m05_class_of(int i, int j) {
  if (i < 1 || j < 1 || i > 7 || j > 7) throw Error(ErrorKind::BadIndices, "marked-point index out of range");
  i = wrap5(i);
  j = wrap5(j);
  if (i == j) throw Error(ErrorKind::BadIndices, "A_{i,j} needs two distinct points");
  if (i > j) std::swap(i, j);
  if (j == 5) return DivisorClass::exceptional(4, i);
  DivisorClass c = DivisorClass::line(4);
  for (int m = 1; m <= 4; ++m) {
    if (m != i && m != j) c = c - DivisorClass::exceptional(4, m);
  }
  return c;
}

Report m05_cyclic_check() {
  Report report;
  const CyclePair z5 = demo_z5();

  bool dictionary = true;
  Json dict = Json::array();
  for (int i = 1; i <= 5; ++i) {
    const DivisorClass a = m05_class_of(i, i + 2);
    dictionary = dictionary && a == z5.classes[i - 1];
    dict.push_back({{"delta", i}, {"pair", {i, wrap5(i + 2)}}, {"class", class_json(a)}});
  }
  report.add("delta_is_A_i_i+2", dictionary, dict);

  std::vector<std::pair<int, int>> pairs;
  std::map<DivisorClass, std::size_t> index;
  for (int i = 1; i <= 5; ++i) {
    for (int j = i + 1; j <= 5; ++j) {
      index.emplace(m05_class_of(i, j), pairs.size());
      pairs.emplace_back(i, j);
    }
  }
  bool curves = true;
  for (const auto& [c, idx] : index) curves = curves && is_minus_one_curve(c);
  report.add("pairs_biject_to_minus_one_curves", index.size() == 10 && curves, index.size());

  // sigma: p_i -> p_{i+1}, as a permutation of the ten classes.
  std::vector<std::size_t> sigma(pairs.size());
  for (std::size_t t = 0; t < pairs.size(); ++t) {
    sigma[t] = index.at(m05_class_of(pairs[t].first + 1, pairs[t].second + 1));
  }

  bool rotation = true;
  for (int i = 1; i <= 5; ++i) {
    const std::size_t from = index.at(z5.classes[i - 1]);
    rotation = rotation && sigma[from] == index.at(z5.classes[i % 5]);
  }
  report.add("sigma_rotates_cycle", rotation, "Delta_i -> Delta_{i+1}");

  std::vector<std::size_t> cycle_lengths;
  std::vector<bool> seen(sigma.size(), false);
  for (std::size_t t = 0; t < sigma.size(); ++t) {
    if (seen[t]) continue;
    std::size_t len = 0;
    for (std::size_t u = t; !seen[u]; u = sigma[u]) {
      seen[u] = true;
      ++len;
    }
    cycle_lengths.push_back(len);
  }
  report.add("sigma_two_five_cycles", cycle_lengths == std::vector<std::size_t>{5, 5}, cycle_lengths);

  bool order_five = true;
  for (std::size_t t = 0; t < sigma.size(); ++t) {
    std::size_t u = t;
    for (int s = 0; s < 5; ++s) u = sigma[u];
    order_five = order_five && u == t;
  }
  report.add("sigma_order_five", order_five, 5);
  return report;
}

SimplicialComplex product_dual_complex(const CyclePair& pair) {
  if (!verify_anticanonical_cycle(pair).overall()) {
    throw Error(ErrorKind::CycleCheckFailed, "classes do not form an anticanonical cycle");
  }
  const int n = static_cast<int>(pair.classes.size());
  // Strata of the product: a component pair (or adjacent pair) from each factor.
  std::vector<std::string> labels;
  for (int factor = 1; factor <= 2; ++factor) {
    for (int i = 1; i <= n; ++i) labels.push_back(mn_label(factor, i));
  }
  std::vector<Simplex> facets;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const std::int64_t left = intersect(pair.classes[i], pair.classes[(i + 1) % n]);
      const std::int64_t right = intersect(pair.classes[j], pair.classes[(j + 1) % n]);
      if (left == 1 && right == 1) facets.push_back({i, (i + 1) % n, n + j, n + (j + 1) % n});
    }
  }
  SimplicialComplex product = SimplicialComplex::from_facets(std::move(labels), std::move(facets));
  if (!(product == build_mn(n))) throw std::logic_error("product dual complex differs from M_n");
  return product;
}

CyclePair demo_z3() {
  CyclePair p;
  p.r = 0;
  p.classes.assign(3, DivisorClass::line(0));
  p.action = std::vector<int>{1, 2, 0};
  return p;
}

CyclePair demo_z5() {
  CyclePair p;
  p.r = 4;
  const auto L = DivisorClass::line(4);
  auto E = [](int i) { return DivisorClass::exceptional(4, i); };
  p.classes = {L - E(2) - E(4), L - E(1) - E(3), E(3), L - E(2) - E(3), E(2)};
  p.action = std::vector<int>{1, 2, 3, 4, 0};
  return p;
}

}  // namespace lenscx
