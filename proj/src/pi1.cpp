#include "lenscx/pi1.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <queue>

#include "lenscx/error.hpp"

namespace lenscx {

namespace {

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

// Least cyclic rotation of w or its inverse; identifies relators that
// define the same normal closure.
Word canonical(const Word& w) {
  Word best = w;
  for (const Word& base : {w, inverse(w)}) {
    Word r = base;
    for (std::size_t i = 0; i < r.size(); ++i) {
      std::rotate(r.begin(), r.begin() + 1, r.end());
      if (r < best) best = r;
    }
  }
  return best;
}

void normalize(std::vector<Word>& relators) {
  std::vector<Word> out;
  out.reserve(relators.size());
  for (auto& r : relators) {
    Word c = cyclically_reduce(std::move(r));
    if (!c.empty()) out.push_back(canonical(c));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  relators = std::move(out);
}

// Renumber after removing the generators flagged in `eliminated`.
Presentation drop_eliminated(Presentation p, const std::vector<bool>& eliminated) {
  std::vector<int> remap(static_cast<std::size_t>(p.generators) + 1, 0);
  int next = 0;
  for (int g = 1; g <= p.generators; ++g) {
    if (!eliminated[g]) remap[g] = ++next;
  }
  for (auto& r : p.relators) {
    for (int& x : r) x = x > 0 ? remap[x] : -remap[-x];
  }
  p.generators = next;
  return p;
}

// Substitute generator g (1-based) by `image` throughout.
void substitute(std::vector<Word>& relators, int g, const Word& image) {
  const Word inv = inverse(image);
  for (auto& r : relators) {
    if (std::none_of(r.begin(), r.end(), [g](int x) { return std::abs(x) == g; })) continue;
    Word out;
    for (int x : r) {
      if (x == g) out.insert(out.end(), image.begin(), image.end());
      else if (x == -g) out.insert(out.end(), inv.begin(), inv.end());
      else out.push_back(x);
    }
    r = std::move(out);
  }
}

}  // namespace

Word cyclically_reduce(Word w) {
  Word stack;
  for (int x : w) {
    if (!stack.empty() && stack.back() == -x) stack.pop_back();
    else stack.push_back(x);
  }
  std::size_t lo = 0, hi = stack.size();
  while (hi - lo >= 2 && stack[lo] == -stack[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(stack.begin() + static_cast<std::ptrdiff_t>(lo), stack.begin() + static_cast<std::ptrdiff_t>(hi));
}

Presentation edge_path_presentation(const SimplicialComplex& complex) {
  FaceLattice lattice(complex);
  const int nv = complex.num_vertices();
  if (lattice.dim() < 1) {
    if (nv > 1) throw Error(ErrorKind::Disconnected, "complex has several components");
    return {};
  }
  const auto& edges = lattice.faces(1);
  std::vector<std::vector<std::pair<int, std::size_t>>> adjacent(static_cast<std::size_t>(nv));
  for (std::size_t e = 0; e < edges.size(); ++e) {
    adjacent[edges[e][0]].emplace_back(edges[e][1], e);
    adjacent[edges[e][1]].emplace_back(edges[e][0], e);
  }
  std::vector<bool> reached(static_cast<std::size_t>(nv), false);
  std::vector<bool> tree(edges.size(), false);
  std::queue<int> todo;
  todo.push(0);
  reached[0] = true;
  int count = 1;
  while (!todo.empty()) {
    const int v = todo.front();
    todo.pop();
    for (const auto& [w, e] : adjacent[v]) {
      if (reached[w]) continue;
      reached[w] = true;
      tree[e] = true;
      ++count;
      todo.push(w);
    }
  }
  if (count != nv) throw Error(ErrorKind::Disconnected, "complex has several components");

  std::vector<int> generator_of(edges.size(), 0);
  Presentation p;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (!tree[e]) generator_of[e] = ++p.generators;
  }
  auto letter = [&](int a, int b) {
    return generator_of[static_cast<std::size_t>(lattice.index_of({a, b}))];
  };
  if (lattice.dim() >= 2) {
    for (const auto& t : lattice.faces(2)) {
      Word w;
      if (int x = letter(t[0], t[1])) w.push_back(x);
      if (int x = letter(t[1], t[2])) w.push_back(x);
      if (int x = letter(t[0], t[2])) w.push_back(-x);
      p.relators.push_back(std::move(w));
    }
  }

  // Relators of length one kill their generator.
  std::vector<bool> eliminated(static_cast<std::size_t>(p.generators) + 1, false);
  for (;;) {
    normalize(p.relators);
    auto it = std::find_if(p.relators.begin(), p.relators.end(), [](const Word& r) { return r.size() == 1; });
    if (it == p.relators.end()) break;
    const int g = std::abs((*it)[0]);
    eliminated[g] = true;
    substitute(p.relators, g, {});
  }
  return drop_eliminated(std::move(p), eliminated);
}

Presentation tietze_reduce(Presentation p) {
  normalize(p.relators);
  std::size_t budget = 0;
  for (const auto& r : p.relators) budget += r.size();
  budget = 2 * budget + 16;

  std::vector<bool> eliminated(static_cast<std::size_t>(p.generators) + 1, false);
  std::vector<int> occurrences;
  for (;;) {
    std::size_t best = p.relators.size();
    int best_gen = 0;
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
      const Word& r = p.relators[i];
      if (best < p.relators.size() && r.size() >= p.relators[best].size()) continue;
      occurrences.assign(static_cast<std::size_t>(p.generators) + 1, 0);
      for (int x : r) ++occurrences[std::abs(x)];
      for (int x : r) {
        if (occurrences[std::abs(x)] == 1) {
          best = i;
          best_gen = std::abs(x);
          break;
        }
      }
    }
    if (best == p.relators.size()) break;

    // Rotate to g^e w, so g^e = w^{-1}.
    Word r = p.relators[best];
    auto pos = std::find_if(r.begin(), r.end(), [&](int x) { return std::abs(x) == best_gen; });
    std::rotate(r.begin(), pos, r.end());
    const int sign = r[0] > 0 ? 1 : -1;
    Word rest(r.begin() + 1, r.end());
    const Word image = sign > 0 ? inverse(rest) : rest;

    std::vector<Word> next = p.relators;
    next.erase(next.begin() + static_cast<std::ptrdiff_t>(best));
    substitute(next, best_gen, image);
    normalize(next);
    std::size_t total = 0;
    for (const auto& w : next) total += w.size();
    if (total > budget) break;
    p.relators = std::move(next);
    eliminated[best_gen] = true;
  }
  return drop_eliminated(std::move(p), eliminated);
}

Abelianization abelianization(const Presentation& p) {
  std::vector<Eigen::Triplet<std::int64_t>> triplets;
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    std::map<int, std::int64_t> exponent;
    for (int x : p.relators[i]) exponent[std::abs(x) - 1] += x > 0 ? 1 : -1;
    for (const auto& [g, e] : exponent) {
      if (e != 0) triplets.emplace_back(static_cast<Eigen::Index>(i), g, e);
    }
  }
  SparseIntMatrix M(static_cast<Eigen::Index>(p.relators.size()), p.generators);
  M.setFromTriplets(triplets.begin(), triplets.end());
  SparseSmith smith(M);
  Abelianization out;
  out.free_rank = static_cast<std::size_t>(p.generators) - smith.rank();
  out.torsion = smith.torsion();
  return out;
}

namespace {

class CosetTable {
 public:
  CosetTable(int generators, std::size_t max_cosets)
      : columns_(2 * generators), max_cosets_(max_cosets) {
    add_row();
  }

  static int column(int letter) { return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1; }
  static int inverse_column(int col) { return col ^ 1; }

  bool alive(int c) const { return forward_[c] == c; }
  std::size_t defined() const { return forward_.size(); }
  std::size_t live_count() const {
    std::size_t n = 0;
    for (std::size_t c = 0; c < forward_.size(); ++c) n += alive(static_cast<int>(c));
    return n;
  }
  bool overflow() const { return overflow_; }
  int entry(int c, int col) const { return table_[c * columns_ + col]; }

  // New coset d with c.x = d.
  bool define(int c, int col) {
    if (forward_.size() >= max_cosets_) {
      overflow_ = true;
      return false;
    }
    const int d = add_row();
    set(c, col, d);
    return true;
  }

  // Scan c under w, defining cosets where the scan stalls (HLT).
  bool scan_and_fill(int c, const Word& w) {
    const int len = static_cast<int>(w.size());
    int f = c, b = c;
    int i = 0, j = len - 1;
    for (;;) {
      while (i <= j && entry(f, column(w[i])) >= 0) f = entry(f, column(w[i++]));
      if (i > j) {
        if (f != c) coincidence(f, c);
        return true;
      }
      while (j >= i && entry(b, inverse_column(column(w[j]))) >= 0) b = entry(b, inverse_column(column(w[j--])));
      if (j < i) {
        coincidence(f, b);
        return true;
      }
      if (i == j) {
        set(f, column(w[i]), b);
        return true;
      }
      if (!define(f, column(w[i]))) return false;
    }
  }

  void fill_row(int c) {
    for (int col = 0; col < columns_ && alive(c); ++col) {
      if (entry(c, col) < 0 && !define(c, col)) return;
    }
  }

 private:
  int add_row() {
    const int d = static_cast<int>(forward_.size());
    forward_.push_back(d);
    table_.resize(table_.size() + static_cast<std::size_t>(columns_), -1);
    return d;
  }

  void set(int c, int col, int d) {
    table_[c * columns_ + col] = d;
    table_[d * columns_ + inverse_column(col)] = c;
  }

  int rep(int c) {
    int r = c;
    while (forward_[r] != r) r = forward_[r];
    while (forward_[c] != r) {
      const int next = forward_[c];
      forward_[c] = r;
      c = next;
    }
    return r;
  }

  void merge(int a, int b, std::vector<int>& queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    const int lo = std::min(a, b), hi = std::max(a, b);
    forward_[hi] = lo;
    queue.push_back(hi);
  }

  void coincidence(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const int g = queue[q];
      for (int col = 0; col < columns_; ++col) {
        const int d = entry(g, col);
        if (d < 0) continue;
        table_[d * columns_ + inverse_column(col)] = -1;
        const int mu = rep(g);
        const int nu = rep(d);
        if (entry(mu, col) >= 0) {
          merge(nu, entry(mu, col), queue);
        } else if (entry(nu, inverse_column(col)) >= 0) {
          merge(mu, entry(nu, inverse_column(col)), queue);
        } else {
          set(mu, col, nu);
        }
      }
    }
  }

  int columns_;
  std::size_t max_cosets_;
  bool overflow_ = false;
  std::vector<int> table_;
  std::vector<int> forward_;
};

}  // namespace

CosetResult coset_enumeration(const Presentation& p, std::size_t max_cosets) {
  std::vector<Word> relators;
  for (const auto& r : p.relators) {
    Word c = cyclically_reduce(r);
    if (!c.empty()) relators.push_back(std::move(c));
  }
  CosetTable table(p.generators, std::max<std::size_t>(max_cosets, 1));
  CosetResult result;
  for (int c = 0; c < static_cast<int>(table.defined()); ++c) {
    for (const auto& r : relators) {
      if (!table.alive(c)) break;
      if (!table.scan_and_fill(c, r)) {
        result.cosets_defined = table.defined();
        return result;
      }
    }
    if (table.alive(c)) table.fill_row(c);
    if (table.overflow()) {
      result.cosets_defined = table.defined();
      return result;
    }
  }
  result.cosets_defined = table.defined();
  result.order = table.live_count();
  return result;
}

}  // namespace lenscx
