#pragma once

// Independent reference implementations used only by the tests. Nothing here
// calls into the library code paths it is meant to check.

#include <algorithm>
#include <bit>
#include <functional>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dowling/groups.hpp"
#include "dowling/lattice.hpp"
#include "dowling/poset.hpp"
#include "dowling/simplicial.hpp"

namespace oracle {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

inline std::vector<std::vector<int>> klein_table() {
  return {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
}

// S_3 as permutations of {0,1,2}, listed in lexicographic order; index 0 is the identity.
inline std::vector<std::vector<int>> s3_table() {
  std::vector<std::vector<int>> perms;
  std::vector<int> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  auto index = [&](const std::vector<int>& q) {
    return static_cast<int>(std::find(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::vector<int> c(3);
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      t[a][b] = index(c);
    }
  return t;
}

// Rank of a dense rational matrix by plain Gaussian elimination.
inline std::size_t rational_rank(std::vector<std::vector<cpp_rational>> m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const cpp_rational f = m[r][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

// Reduced Betti numbers (index 0 is degree -1) from face lists, via rational ranks.
inline std::vector<std::size_t> rational_betti(const std::vector<std::vector<std::vector<int>>>& by_size) {
  const std::size_t top = by_size.size();
  std::vector<std::size_t> ranks(top + 1, 0);
  for (std::size_t s = 1; s < top; ++s) {
    const auto& hi = by_size[s];
    const auto& lo = by_size[s - 1];
    std::vector<std::vector<cpp_rational>> m(lo.size(), std::vector<cpp_rational>(hi.size(), 0));
    for (std::size_t j = 0; j < hi.size(); ++j)
      for (std::size_t d = 0; d < hi[j].size(); ++d) {
        std::vector<int> sub = hi[j];
        sub.erase(sub.begin() + static_cast<long>(d));
        const auto row = std::find(lo.begin(), lo.end(), sub) - lo.begin();
        m[static_cast<std::size_t>(row)][j] = (d % 2 == 0) ? 1 : -1;
      }
    ranks[s] = rational_rank(std::move(m));
  }
  std::vector<std::size_t> betti;
  for (std::size_t s = 0; s < top; ++s) betti.push_back(by_size[s].size() - ranks[s] - ranks[s + 1]);
  return betti;
}

// Face lists of a complex grouped by size, computed by brute-force subset closure of the facets.
inline std::vector<std::vector<std::vector<int>>> closure_by_size(const std::vector<std::vector<int>>& facets) {
  std::set<std::vector<int>> all{{}};
  for (auto f : facets) {
    std::sort(f.begin(), f.end());
    for (std::uint32_t mask = 0; mask < (1U << f.size()); ++mask) {
      std::vector<int> s;
      for (std::size_t i = 0; i < f.size(); ++i)
        if (mask >> i & 1U) s.push_back(f[i]);
      all.insert(s);
    }
  }
  std::size_t top = 0;
  for (const auto& f : all) top = std::max(top, f.size());
  std::vector<std::vector<std::vector<int>>> out(top + 1);
  for (const auto& f : all) out[f.size()].push_back(f);
  return out;
}

// Order isomorphism by trying every bijection.
inline bool brute_force_isomorphic(const dowling::Poset& p, const dowling::Poset& q) {
  if (p.size() != q.size()) return false;
  std::vector<std::size_t> perm(p.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t a = 0; a < p.size() && ok; ++a)
      for (std::size_t b = 0; b < p.size() && ok; ++b) ok = p.leq(a, b) == q.leq(perm[a], perm[b]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Block containment of the decoded partitions of {0} ∪ ([n] × G).
inline bool decoded_leq(const dowling::DowlingElement& a, const dowling::DowlingElement& b, const dowling::GroupTable& g) {
  std::vector<std::set<dowling::BasePoint>> big;
  for (const auto& blk : dowling::decode(b, g)) big.emplace_back(blk.begin(), blk.end());
  for (const auto& blk : dowling::decode(a, g)) {
    const std::set<dowling::BasePoint> s(blk.begin(), blk.end());
    const bool inside = std::any_of(big.begin(), big.end(), [&](const auto& t) {
      return std::includes(t.begin(), t.end(), s.begin(), s.end());
    });
    if (!inside) return false;
  }
  return true;
}

// Random small complex: a few random facets over v vertices.
inline std::vector<std::vector<int>> random_facets(std::mt19937& rng, int v, int count, int max_size) {
  std::uniform_int_distribution<int> size_d(1, std::min(max_size, v)), vert_d(0, v - 1);
  std::vector<std::vector<int>> out;
  for (int c = 0; c < count; ++c) {
    std::set<int> f;
    const int s = size_d(rng);
    while (static_cast<int>(f.size()) < s) f.insert(vert_d(rng));
    out.emplace_back(f.begin(), f.end());
  }
  return out;
}

inline cpp_int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  cpp_int r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Q(ω) straight from the displayed product over a chain of subsets of [n] (bitmasks).
inline cpp_int q_of_chain(const std::vector<unsigned>& chain, int n, int k) {
  cpp_int q = 1;
  int prev = 0;
  auto gap = [&](int p) {
    for (int j = 1; j <= p - 1; ++j) q *= j * k - 1;
  };
  for (unsigned w : chain) {
    gap(std::popcount(w) - prev);
    prev = std::popcount(w);
  }
  gap(n - prev);
  return q;
}

// Sum of Q(ω) over every chain of proper nonempty subsets, by explicit recursion.
inline cpp_int chain_sum(int n, int k) {
  const unsigned full = (1U << n) - 1;
  cpp_int total = 0;
  std::vector<unsigned> chain;
  std::function<void(unsigned)> rec = [&](unsigned below) {
    for (unsigned w = 1; w < full; ++w) {
      if ((w & below) != below || w == below) continue;
      chain.push_back(w);
      total += q_of_chain(chain, n, k);
      rec(w);
      chain.pop_back();
    }
  };
  rec(0);
  return total;
}

// Π_{j=from}^{to} (jk + sign).
inline cpp_int shifted_product(int from, int to, int k, int sign) {
  cpp_int p = 1;
  for (int j = from; j <= to; ++j) p *= j * k + sign;
  return p;
}

// Block sizes of every set partition of [n], by growing partitions one element at a time.
inline std::vector<std::vector<int>> set_partition_shapes(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> sizes;
  std::function<void(int)> rec = [&](int i) {
    if (i > n) {
      out.push_back(sizes);
      return;
    }
    for (std::size_t b = 0; b < sizes.size(); ++b) {
      ++sizes[b];
      rec(i + 1);
      --sizes[b];
    }
    sizes.push_back(1);
    rec(i + 1);
    sizes.pop_back();
  };
  rec(1);
  return out;
}

// Σ_σ Π_j (jk-1)^{h(σ,j)}, h counting blocks of size at least j.
inline cpp_int numerology_rhs(int n, int k) {
  cpp_int total = 0;
  for (const auto& sizes : set_partition_shapes(n)) {
    cpp_int term = 1;
    for (int s : sizes)
      for (int j = 1; j <= s; ++j) term *= j * k - 1;
    total += term;
  }
  return total;
}

}  // namespace oracle

namespace dowling {
inline void PrintTo(const DowlingElement& e, std::ostream* os) { *os << e.to_string(); }
}  // namespace dowling
