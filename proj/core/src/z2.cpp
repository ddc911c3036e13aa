#include "orderscope/z2.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace osc {

int SimplicialComplex::index_of_face(int k, const std::vector<int>& f) const {
  if (k < 0 || k >= static_cast<int>(faces.size())) return -1;
  auto it = std::lower_bound(faces[k].begin(), faces[k].end(), f);
  if (it == faces[k].end() || *it != f) return -1;
  return static_cast<int>(it - faces[k].begin());
}

SimplicialComplex complex_from_simplices(std::vector<std::string> vertices,
                                         const std::vector<std::vector<int>>& simplices) {
  SimplicialComplex k;
  k.vertices = std::move(vertices);
  std::set<std::vector<int>> all;
  // close downward
  for (const auto& s : simplices) {
    std::vector<int> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    size_t subsets = size_t{1} << sorted.size();
    for (size_t mask = 1; mask < subsets; ++mask) {
      std::vector<int> face;
      for (size_t i = 0; i < sorted.size(); ++i)
        if (mask & (size_t{1} << i)) face.push_back(sorted[i]);
      all.insert(std::move(face));
    }
  }
  for (const auto& f : all) {
    int dim = static_cast<int>(f.size()) - 1;
    if (dim >= static_cast<int>(k.faces.size())) k.faces.resize(dim + 1);
    k.faces[dim].push_back(f);
  }
  for (auto& level : k.faces) std::sort(level.begin(), level.end());
  return k;
}

SimplicialComplex order_complex(const Poset& p) {
  SimplicialComplex k;
  k.vertices = p.labels;
  for (const auto& chain : all_chains(p)) {
    int dim = static_cast<int>(chain.size()) - 1;
    if (dim >= static_cast<int>(k.faces.size())) k.faces.resize(dim + 1);
    std::vector<int> f = chain;
    std::sort(f.begin(), f.end());
    k.faces[dim].push_back(f);
  }
  for (auto& level : k.faces) std::sort(level.begin(), level.end());
  return k;
}

SimplicialComplex order_complex(const Preposet& p) {
  SimplicialComplex k;
  k.vertices = p.labels;
  for (const auto& chain : all_chains(p)) {
    int dim = static_cast<int>(chain.size()) - 1;
    if (dim >= static_cast<int>(k.faces.size())) k.faces.resize(dim + 1);
    std::vector<int> f = chain;
    std::sort(f.begin(), f.end());
    k.faces[dim].push_back(f);
  }
  for (auto& level : k.faces) std::sort(level.begin(), level.end());
  return k;
}

namespace {

using Row = std::vector<uint64_t>;

struct BitMatrix {
  int rows = 0, cols = 0;
  std::vector<Row> col_data;  // per column, bitset over rows

  BitMatrix(int r, int c) : rows(r), cols(c), col_data(c, Row((r + 63) / 64, 0)) {}
  void set(int r, int c) { col_data[c][r >> 6] |= uint64_t{1} << (r & 63); }
};

int lowest_set(const Row& r) {
  for (int w = static_cast<int>(r.size()) - 1; w >= 0; --w)
    if (r[w]) {
      for (int b = 63; b >= 0; --b)
        if (r[w] & (uint64_t{1} << b)) return (w << 6) | b;
    }
  return -1;
}

void xor_into(Row& a, const Row& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] ^= b[i];
}

/// Column reduction over GF(2); returns the rank. When `target` is given it
/// is reduced against the column space; on return *target_in_span says
/// whether it vanished.
int reduce_rank(BitMatrix m, Row* target = nullptr, bool* target_in_span = nullptr) {
  std::map<int, int> pivot_col;  // pivot row -> column index
  int rank = 0;
  for (int c = 0; c < m.cols; ++c) {
    Row& col = m.col_data[c];
    int low = lowest_set(col);
    while (low >= 0 && pivot_col.count(low)) {
      xor_into(col, m.col_data[pivot_col[low]]);
      low = lowest_set(col);
    }
    if (low >= 0) {
      pivot_col[low] = c;
      ++rank;
    }
  }
  if (target) {
    int low = lowest_set(*target);
    while (low >= 0 && pivot_col.count(low)) {
      xor_into(*target, m.col_data[pivot_col[low]]);
      low = lowest_set(*target);
    }
    if (target_in_span) *target_in_span = (low < 0);
  }
  return rank;
}

BitMatrix boundary_matrix(const SimplicialComplex& k, int dim) {
  // maps dim-simplices (columns) to (dim-1)-simplices (rows)
  int cols = dim < static_cast<int>(k.faces.size()) ? static_cast<int>(k.faces[dim].size()) : 0;
  int rows = (dim - 1) >= 0 && (dim - 1) < static_cast<int>(k.faces.size())
                 ? static_cast<int>(k.faces[dim - 1].size())
                 : 0;
  BitMatrix m(std::max(rows, 1), std::max(cols, 0));
  if (dim == 0 || cols == 0) return m;
  for (int c = 0; c < cols; ++c) {
    const auto& f = k.faces[dim][c];
    for (size_t drop = 0; drop < f.size(); ++drop) {
      std::vector<int> sub;
      for (size_t i = 0; i < f.size(); ++i)
        if (i != drop) sub.push_back(f[i]);
      int r = k.index_of_face(dim - 1, sub);
      if (r >= 0) m.set(r, c);
    }
  }
  return m;
}

}  // namespace

std::vector<long> betti_z2(const SimplicialComplex& k) {
  int top = k.dim();
  if (top < 0) return {};
  std::vector<long> counts(top + 1), ranks(top + 2, 0);
  for (int d = 0; d <= top; ++d) counts[d] = static_cast<long>(k.faces[d].size());
  for (int d = 1; d <= top; ++d) ranks[d] = reduce_rank(boundary_matrix(k, d));
  std::vector<long> betti(top + 1);
  for (int d = 0; d <= top; ++d) betti[d] = counts[d] - ranks[d] - ranks[d + 1];
  while (betti.size() > 1 && betti.back() == 0) betti.pop_back();
  return betti;
}

std::vector<long> reduced_betti_z2(const SimplicialComplex& k) {
  auto b = betti_z2(k);
  if (!b.empty()) b[0] -= 1;
  while (b.size() > 1 && b.back() == 0) b.pop_back();
  if (b.size() == 1 && b[0] == 0) b.clear();
  return b;
}

namespace {

Row chain_vector(const SimplicialComplex& k, int dim,
                 const std::vector<std::vector<int>>& chain) {
  int rows = static_cast<int>(k.faces[dim].size());
  Row v((rows + 63) / 64, 0);
  for (const auto& s : chain) {
    std::vector<int> f = s;
    std::sort(f.begin(), f.end());
    int idx = k.index_of_face(dim, f);
    if (idx < 0) fail(Errc::BadInput, "chain simplex missing from the complex");
    v[idx >> 6] ^= uint64_t{1} << (idx & 63);  // mod-2 multiset
  }
  return v;
}

}  // namespace

bool is_cycle_z2(const SimplicialComplex& k, int dim,
                 const std::vector<std::vector<int>>& chain) {
  if (dim == 0) return true;
  Row v = chain_vector(k, dim, chain);
  int rows = static_cast<int>(k.faces[dim - 1].size());
  Row boundary((rows + 63) / 64, 0);
  for (int idx = 0; idx < static_cast<int>(k.faces[dim].size()); ++idx) {
    if (!(v[idx >> 6] & (uint64_t{1} << (idx & 63)))) continue;
    const auto& f = k.faces[dim][idx];
    for (size_t drop = 0; drop < f.size(); ++drop) {
      std::vector<int> sub;
      for (size_t i = 0; i < f.size(); ++i)
        if (i != drop) sub.push_back(f[i]);
      int r = k.index_of_face(dim - 1, sub);
      boundary[r >> 6] ^= uint64_t{1} << (r & 63);
    }
  }
  return lowest_set(boundary) < 0;
}

bool is_boundary_z2(const SimplicialComplex& k, int dim,
                    const std::vector<std::vector<int>>& chain) {
  Row v = chain_vector(k, dim, chain);
  if (dim + 1 > k.dim()) return lowest_set(v) < 0;
  bool in_span = false;
  reduce_rank(boundary_matrix(k, dim + 1), &v, &in_span);
  return in_span;
}

}  // namespace osc
