#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <unordered_set>
#include <utility>

#include "dowling/errors.hpp"
#include "dowling/simplicial.hpp"

namespace dowling {

namespace {

using Row = std::vector<std::pair<std::uint32_t, std::int64_t>>;

bool checked_axpy(std::int64_t a, std::int64_t x, std::int64_t y, std::int64_t& out) {
  std::int64_t prod = 0;
  if (__builtin_mul_overflow(a, x, &prod)) return false;
  return !__builtin_sub_overflow(y, prod, &out);
}

// target -= factor * pivot, both sorted by column. False on overflow.
bool subtract_row(Row& target, const Row& pivot, std::int64_t factor, Row& scratch) {
  scratch.clear();
  std::size_t i = 0, j = 0;
  while (i < target.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < target.size() && target[i].first < pivot[j].first)) {
      scratch.push_back(target[i++]);
    } else if (i == target.size() || pivot[j].first < target[i].first) {
      std::int64_t v = 0;
      if (!checked_axpy(factor, pivot[j].second, 0, v)) return false;
      scratch.emplace_back(pivot[j].first, v);
      ++j;
    } else {
      std::int64_t v = 0;
      if (!checked_axpy(factor, pivot[j].second, target[i].second, v)) return false;
      if (v != 0) scratch.emplace_back(target[i].first, v);
      ++i;
      ++j;
    }
  }
  target.swap(scratch);
  return true;
}

std::vector<BigInt> invariant_chain(std::vector<BigInt> diag) {
  for (auto& d : diag) d = abs(d);
  diag.erase(std::remove(diag.begin(), diag.end(), BigInt(0)), diag.end());
  for (std::size_t i = 0; i < diag.size(); ++i) {
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      if (diag[j] % diag[i] == 0) continue;
      BigInt g = gcd(diag[i], diag[j]);
      BigInt l = diag[i] / g * diag[j];
      diag[i] = g;
      diag[j] = l;
    }
  }
  return diag;
}

// Smith diagonal of a dense matrix; returns the nonzero diagonal entries.
std::vector<BigInt> dense_smith_diagonal(std::vector<std::vector<BigInt>> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<BigInt> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      std::size_t pr = rows, pc = cols;
      BigInt best = 0;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (pr == rows || abs(a[i][j]) < best)) {
            best = abs(a[i][j]);
            pr = i;
            pc = j;
          }
      if (pr == rows) return diag;
      std::swap(a[t], a[pr]);
      for (auto& row : a) std::swap(row[t], row[pc]);
      const BigInt p = a[t][t];
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        const BigInt q = a[i][t] / p;
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        const BigInt q = a[t][j] / p;
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (clean) {
        diag.push_back(p);
        break;
      }
    }
  }
  return diag;
}

}  // namespace

SmithSummary smith_summary(std::size_t rows, std::size_t cols, const std::vector<SparseEntry>& entries) {
  std::vector<Row> r(rows);
  for (const auto& e : entries) {
    if (e.row >= rows || e.col >= cols) throw DomainError("matrix entry out of range");
    if (e.value != 0) r[e.row].emplace_back(e.col, e.value);
  }
  for (auto& row : r) {
    std::sort(row.begin(), row.end());
    Row merged;
    for (const auto& [c, v] : row) {
      if (!merged.empty() && merged.back().first == c)
        merged.back().second += v;
      else
        merged.emplace_back(c, v);
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(), [](const auto& p) { return p.second == 0; }),
                 merged.end());
    row.swap(merged);
  }

  std::vector<std::unordered_set<std::uint32_t>> in_col(cols);
  for (std::uint32_t i = 0; i < rows; ++i)
    for (const auto& [c, v] : r[i]) in_col[c].insert(i);

  SmithSummary out;
  std::vector<char> row_alive(rows, 1), col_alive(cols, 1);
  bool overflow = false;
  Row scratch;
  bool progress = true;
  while (progress && !overflow) {
    progress = false;
    for (std::uint32_t c = 0; c < cols && !overflow; ++c) {
      if (!col_alive[c] || in_col[c].empty()) continue;
      std::uint32_t pivot_row = 0;
      std::size_t best_len = 0;
      bool found = false;
      for (std::uint32_t i : in_col[c]) {
        const Row& row = r[i];
        auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(c, std::int64_t{INT64_MIN}));
        if (std::llabs(it->second) != 1) continue;
        if (!found || row.size() < best_len || (row.size() == best_len && i < pivot_row)) {
          found = true;
          best_len = row.size();
          pivot_row = i;
        }
      }
      if (!found) continue;
      const Row pivot = r[pivot_row];
      const std::int64_t pv =
          std::lower_bound(pivot.begin(), pivot.end(), std::make_pair(c, std::int64_t{INT64_MIN}))->second;
      std::vector<std::uint32_t> targets(in_col[c].begin(), in_col[c].end());
      std::sort(targets.begin(), targets.end());
      for (std::uint32_t i : targets) {
        if (i == pivot_row) continue;
        Row& row = r[i];
        const std::int64_t v =
            std::lower_bound(row.begin(), row.end(), std::make_pair(c, std::int64_t{INT64_MIN}))->second;
        Row before = row;
        if (!subtract_row(row, pivot, v * pv, scratch)) {
          row.swap(before);
          overflow = true;
          break;
        }
        for (const auto& [cc, vv] : before) in_col[cc].erase(i);
        for (const auto& [cc, vv] : row) in_col[cc].insert(i);
      }
      if (overflow) break;
      for (const auto& [cc, vv] : pivot) in_col[cc].erase(pivot_row);
      r[pivot_row].clear();
      row_alive[pivot_row] = 0;
      col_alive[c] = 0;
      ++out.rank;
      progress = true;
    }
  }

  std::vector<BigInt> residual;
  std::vector<std::uint32_t> live_rows, live_cols;
  for (std::uint32_t i = 0; i < rows; ++i)
    if (row_alive[i] && !r[i].empty()) live_rows.push_back(i);
  for (std::uint32_t c = 0; c < cols; ++c)
    if (col_alive[c] && !in_col[c].empty()) live_cols.push_back(c);
  if (!live_rows.empty()) {
    std::vector<std::int64_t> col_pos(cols, -1);
    for (std::size_t j = 0; j < live_cols.size(); ++j) col_pos[live_cols[j]] = static_cast<std::int64_t>(j);
    std::vector<std::vector<BigInt>> dense(live_rows.size(), std::vector<BigInt>(live_cols.size(), 0));
    for (std::size_t i = 0; i < live_rows.size(); ++i)
      for (const auto& [c, v] : r[live_rows[i]]) dense[i][static_cast<std::size_t>(col_pos[c])] = v;
    residual = invariant_chain(dense_smith_diagonal(std::move(dense)));
  }
  out.invariant_factors.assign(out.rank, BigInt(1));
  out.rank += residual.size();
  out.invariant_factors.insert(out.invariant_factors.end(), residual.begin(), residual.end());
  return out;
}

std::vector<SparseEntry> boundary_entries(const SimplicialComplex& k, std::size_t s) {
  std::vector<SparseEntry> out;
  if (s == 0) return out;
  const auto& faces = k.faces_of_size(s);
  out.reserve(faces.size() * s);
  Face sub;
  for (std::size_t j = 0; j < faces.size(); ++j) {
    const Face& f = faces[j];
    for (std::size_t drop = 0; drop < f.size(); ++drop) {
      sub.clear();
      for (std::size_t i = 0; i < f.size(); ++i)
        if (i != drop) sub.push_back(f[i]);
      const auto pos = k.face_position(sub);
      if (!pos) throw StructureError("boundary of a face is missing from the complex");
      out.push_back({static_cast<std::uint32_t>(*pos), static_cast<std::uint32_t>(j), drop % 2 == 0 ? 1 : -1});
    }
  }
  return out;
}

HomologyResult reduced_homology(const SimplicialComplex& k) {
  HomologyResult h;
  h.dimension = k.dimension();
  if (k.is_void()) return h;
  const std::size_t top = k.max_face_size();
  // smith[s] describes the boundary map from size-s faces to size-(s-1) faces.
  std::vector<SmithSummary> smith(top + 2);
  for (std::size_t s = 1; s <= top; ++s)
    smith[s] = smith_summary(k.faces_of_size(s - 1).size(), k.faces_of_size(s).size(), boundary_entries(k, s));
  auto betti_of_size = [&](std::size_t s) {
    const std::size_t f = k.faces_of_size(s).size();
    return static_cast<std::uint64_t>(f - smith[s].rank - smith[s + 1].rank);
  };
  h.betti_minus_one = betti_of_size(0);
  for (std::size_t s = 1; s <= top; ++s) {
    h.reduced_betti.push_back(betti_of_size(s));
    std::vector<BigInt> tors;
    for (const BigInt& d : smith[s + 1].invariant_factors)
      if (d > 1) tors.push_back(d);
    h.torsion.push_back(std::move(tors));
  }
  return h;
}

std::uint64_t HomologyResult::betti(int d) const {
  if (d == -1) return betti_minus_one;
  if (d < 0 || d >= static_cast<int>(reduced_betti.size())) return 0;
  return reduced_betti[static_cast<std::size_t>(d)];
}

bool HomologyResult::torsion_free() const {
  return std::all_of(torsion.begin(), torsion.end(), [](const auto& t) { return t.empty(); });
}

bool HomologyResult::concentrated_in(int d) const {
  if (d != -1 && betti_minus_one != 0) return false;
  for (int i = 0; i < static_cast<int>(reduced_betti.size()); ++i) {
    if (i == d) continue;
    if (reduced_betti[static_cast<std::size_t>(i)] != 0 || !torsion[static_cast<std::size_t>(i)].empty()) return false;
  }
  return true;
}

bool HomologyResult::is_wedge_of_spheres(int d, std::uint64_t count) const {
  if (!concentrated_in(d) || betti(d) != count) return false;
  return d < 0 || d >= static_cast<int>(torsion.size()) || torsion[static_cast<std::size_t>(d)].empty();
}

bool HomologyResult::same_homology(const HomologyResult& o) const {
  if (betti_minus_one != o.betti_minus_one) return false;
  const std::size_t n = std::max(reduced_betti.size(), o.reduced_betti.size());
  for (std::size_t d = 0; d < n; ++d) {
    if (betti(static_cast<int>(d)) != o.betti(static_cast<int>(d))) return false;
    static const std::vector<BigInt> kNone;
    const auto& a = d < torsion.size() ? torsion[d] : kNone;
    const auto& b = d < o.torsion.size() ? o.torsion[d] : kNone;
    if (a != b) return false;
  }
  return true;
}

}  // namespace dowling
