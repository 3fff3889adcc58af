#include "dowling/nested.hpp"

#include <algorithm>
#include <functional>

#include "dowling/errors.hpp"

namespace dowling {

namespace {

void require_meet_semilattice(const Poset& l) {
  if (!l.bottom() || !l.is_meet_semilattice()) throw DomainError("poset is not a meet-semilattice with a bottom element");
}

// Whether the join map ∏[0̂, z_i] → [0̂, x] is an order isomorphism.
bool join_map_is_isomorphism(const Poset& l, std::size_t x, const std::vector<std::size_t>& factors) {
  const std::size_t bottom = *l.bottom();
  const std::size_t target = l.down_set(x).count();
  std::vector<std::vector<std::size_t>> ideals;
  std::size_t total = 1;
  for (std::size_t z : factors) {
    ideals.push_back(l.down_set(z).to_indices());
    total *= ideals.back().size();
    if (total > target) return false;
  }
  if (total != target) return false;
  const std::size_t r = factors.size();
  std::vector<std::vector<std::size_t>> tuples;
  std::vector<std::size_t> image;
  std::vector<char> hit(l.size(), 0);
  std::vector<std::size_t> digit(r, 0);
  for (std::size_t t = 0; t < total; ++t) {
    std::vector<std::size_t> tuple(r);
    std::size_t acc = bottom;
    for (std::size_t i = 0; i < r; ++i) {
      tuple[i] = ideals[i][digit[i]];
      const auto j = l.join(acc, tuple[i]);
      if (!j || !l.leq(*j, x)) return false;
      acc = *j;
    }
    if (hit[acc]) return false;
    hit[acc] = 1;
    tuples.push_back(std::move(tuple));
    image.push_back(acc);
    for (std::size_t i = 0; i < r; ++i) {
      if (++digit[i] < ideals[i].size()) break;
      digit[i] = 0;
    }
  }
  // The join map is monotone; it remains to check that it reflects the order.
  for (std::size_t a = 0; a < total; ++a)
    for (std::size_t b = 0; b < total; ++b) {
      if (!l.leq(image[a], image[b])) continue;
      for (std::size_t i = 0; i < r; ++i)
        if (!l.leq(tuples[a][i], tuples[b][i])) return false;
    }
  return true;
}

}  // namespace

bool BuildingSet::contains(std::size_t x) const { return std::binary_search(members.begin(), members.end(), x); }

int BuildingSet::type_of(std::size_t x) const {
  auto it = std::lower_bound(members.begin(), members.end(), x);
  if (it == members.end() || *it != x || types.empty()) return -1;
  return types[static_cast<std::size_t>(it - members.begin())];
}

BuildingSetReport check_building_set(const Poset& l, const std::vector<std::size_t>& members) {
  require_meet_semilattice(l);
  const std::size_t bottom = *l.bottom();
  DynBitset in(l.size());
  for (std::size_t m : members) {
    if (m >= l.size()) throw DomainError("building set member out of range");
    if (m == bottom) throw DomainError("building set contains the bottom element");
    in.set(m);
  }
  BuildingSetReport report;
  for (std::size_t x = 0; x < l.size(); ++x) {
    if (x == bottom) continue;
    const auto maxes = l.maximal_in(l.down_set(x) & in);
    if (maxes.empty()) {
      report = {false, x, "no member below " + l.label(x)};
      return report;
    }
    if (!join_map_is_isomorphism(l, x, maxes)) {
      report = {false, x, "interval below " + l.label(x) + " is not the product of the intervals below its maximal members"};
      return report;
    }
  }
  return report;
}

bool is_building_set(const Poset& l, const std::vector<std::size_t>& members) { return check_building_set(l, members).ok; }

std::vector<std::size_t> minimal_building_set(const Poset& l) {
  require_meet_semilattice(l);
  const std::size_t bottom = *l.bottom();
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < l.size(); ++x) {
    if (x == bottom) continue;
    bool splits = false;
    const auto below = l.down_set(x).to_indices();
    for (std::size_t a : below) {
      if (a == bottom || a == x || splits) continue;
      for (std::size_t b : below) {
        if (b <= a || b == bottom || b == x) continue;
        if (l.comparable(a, b)) continue;
        const auto j = l.join(a, b);
        if (!j || *j != x) continue;
        if (join_map_is_isomorphism(l, x, {a, b})) {
          splits = true;
          break;
        }
      }
    }
    if (!splits) out.push_back(x);
  }
  return out;
}

BuildingSet compute_IG(const DowlingLattice& q0) {
  BuildingSet b;
  for (std::size_t i = 0; i < q0.size(); ++i) {
    const auto& e = q0.element(i);
    if (!e.trivial_zero_block()) continue;
    int nonsingleton = 0;
    for (const auto& blk : e.nonzero_blocks()) nonsingleton += blk.size() >= 2 ? 1 : 0;
    if (nonsingleton == 1) {
      b.members.push_back(i);
      b.types.push_back(1);
    }
  }
  return b;
}

BuildingSet compute_JG(const DowlingLattice& q) {
  if (q.is_q0()) throw DomainError("J^G lives in the full Dowling lattice");
  BuildingSet b;
  for (std::size_t i = 0; i < q.size(); ++i) {
    const auto& e = q.element(i);
    int nonsingleton = 0;
    for (const auto& blk : e.nonzero_blocks()) nonsingleton += blk.size() >= 2 ? 1 : 0;
    if (e.trivial_zero_block() && nonsingleton == 1) {
      b.members.push_back(i);
      b.types.push_back(1);
    } else if (!e.trivial_zero_block() && nonsingleton == 0) {
      b.members.push_back(i);
      b.types.push_back(0);
    }
  }
  return b;
}

namespace {

// Every antichain of size ≥ 2 inside `base` ∪ {y} that contains y has a join outside B.
bool extension_is_nested(const Poset& l, const BuildingSet& b, const std::vector<std::size_t>& base, std::size_t y) {
  std::vector<std::size_t> free;
  for (std::size_t s : base)
    if (!l.comparable(s, y)) free.push_back(s);
  if (free.size() > 30) throw ResourceError("nested-set check over too many incomparable members", std::to_string(free.size()));
  const std::uint64_t subsets = std::uint64_t{1} << free.size();
  std::vector<std::size_t> family;
  for (std::uint64_t mask = 1; mask < subsets; ++mask) {
    family.assign(1, y);
    bool antichain = true;
    for (std::size_t i = 0; i < free.size() && antichain; ++i) {
      if (!((mask >> i) & 1U)) continue;
      for (std::size_t f : family)
        if (f != y && l.comparable(f, free[i])) antichain = false;
      family.push_back(free[i]);
    }
    if (!antichain) continue;
    const auto j = l.join_of(family);
    if (!j || b.contains(*j)) return false;
  }
  return true;
}

bool pairwise_ok(const Poset& l, const BuildingSet& b, std::size_t x, std::size_t y) {
  if (l.comparable(x, y)) return true;
  const auto j = l.join(x, y);
  return j && !b.contains(*j);
}

}  // namespace

bool is_nested(const Poset& l, const BuildingSet& b, const std::vector<std::size_t>& x) {
  for (std::size_t v : x)
    if (!b.contains(v)) throw DomainError("nested-set candidate is not inside the building set");
  std::vector<std::size_t> sorted = x;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<std::size_t> base;
  for (std::size_t v : sorted) {
    if (!extension_is_nested(l, b, base, v)) return false;
    base.push_back(v);
  }
  return true;
}

NestedEnumeration enumerate_nested_sets(const Poset& l, const BuildingSet& b, bool reduced) {
  std::vector<std::size_t> verts;
  for (std::size_t m : b.members)
    if (!(reduced && l.top() && m == *l.top())) verts.push_back(m);
  NestedEnumeration out;
  std::vector<std::size_t> current;
  std::function<void(std::size_t)> extend = [&](std::size_t start) {
    for (std::size_t i = start; i < verts.size(); ++i) {
      const std::size_t y = verts[i];
      bool ok = true;
      for (std::size_t c : current) ok = ok && pairwise_ok(l, b, c, y);
      if (!ok) continue;
      if (!extension_is_nested(l, b, current, y)) {
        ++out.pairwise_only;
        continue;
      }
      current.push_back(y);
      out.sets.push_back(current);
      extend(i + 1);
      current.pop_back();
    }
  };
  extend(0);
  std::sort(out.sets.begin(), out.sets.end());
  return out;
}

SimplicialComplex nested_complex(const Poset& l, const BuildingSet& b, bool reduced) {
  const auto nested = enumerate_nested_sets(l, b, reduced);
  std::vector<Face> faces{Face{}};
  for (const auto& s : nested.sets) {
    Face f;
    for (std::size_t v : s) f.push_back(static_cast<int>(v));
    faces.push_back(std::move(f));
  }
  return SimplicialComplex::from_faces(l.labels(), std::move(faces));
}

}  // namespace dowling
