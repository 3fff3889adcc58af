#include "dowling/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "dowling/errors.hpp"
#include "dowling/simplicial.hpp"

namespace dowling {

Poset Poset::from_relation(std::vector<std::string> labels,
                           const std::function<bool(std::size_t, std::size_t)>& leq) {
  Poset p;
  const std::size_t n = labels.size();
  p.labels_ = std::move(labels);
  p.up_.assign(n, DynBitset(n));
  p.down_.assign(n, DynBitset(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (leq(a, b)) {
        p.up_[a].set(b);
        p.down_[b].set(a);
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (!p.up_[a].test(a)) throw DomainError("relation is not reflexive at " + p.labels_[a]);
    for (std::size_t b = a + 1; b < n; ++b)
      if (p.up_[a].test(b) && p.up_[b].test(a))
        throw DomainError("relation is not antisymmetric: " + p.labels_[a] + ", " + p.labels_[b]);
    // Transitivity: every b above a has its up-set inside a's up-set.
    bool ok = true;
    p.up_[a].for_each([&](std::size_t b) {
      if (ok && !p.up_[b].is_subset_of(p.up_[a])) ok = false;
    });
    if (!ok) throw DomainError("relation is not transitive at " + p.labels_[a]);
  }
  p.finalize();
  return p;
}

void Poset::finalize() {
  const std::size_t n = size();
  upper_covers_.assign(n, {});
  lower_covers_.assign(n, {});
  hasse_.clear();
  for (std::size_t a = 0; a < n; ++a) {
    DynBitset strict = up_[a];
    strict.reset(a);
    strict.for_each([&](std::size_t b) {
      // b covers a iff the only element of (a, b] below b is b itself.
      if ((down_[b] & strict).count() == 1) {
        upper_covers_[a].push_back(b);
        lower_covers_[b].push_back(a);
        hasse_.emplace_back(a, b);
      }
    });
  }

  // |down(a)| strictly increases along <, so sorting by it is a linear extension.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return down_[x].count() < down_[y].count(); });
  height_.assign(n, 0);
  for (std::size_t x : order)
    for (std::size_t c : lower_covers_[x]) height_[x] = std::max(height_[x], height_[c] + 1);
  depth_.assign(n, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    for (std::size_t c : upper_covers_[*it]) depth_[*it] = std::max(depth_[*it], depth_[c] + 1);

  bottom_.reset();
  top_.reset();
  for (std::size_t a = 0; a < n; ++a) {
    if (up_[a].count() == n) bottom_ = a;
    if (down_[a].count() == n) top_ = a;
  }
}

std::optional<std::size_t> Poset::join_of(std::span<const std::size_t> xs) const {
  if (size() == 0) return std::nullopt;
  DynBitset ub(size());
  if (xs.empty()) return bottom_;
  ub = up_[xs[0]];
  for (std::size_t i = 1; i < xs.size(); ++i) ub &= up_[xs[i]];
  std::optional<std::size_t> result;
  ub.for_each([&](std::size_t u) {
    if (!result && ub.is_subset_of(up_[u])) result = u;
  });
  return result;
}

std::optional<std::size_t> Poset::meet_of(std::span<const std::size_t> xs) const {
  if (size() == 0) return std::nullopt;
  if (xs.empty()) return top_;
  DynBitset lb = down_[xs[0]];
  for (std::size_t i = 1; i < xs.size(); ++i) lb &= down_[xs[i]];
  std::optional<std::size_t> result;
  lb.for_each([&](std::size_t u) {
    if (!result && lb.is_subset_of(down_[u])) result = u;
  });
  return result;
}

std::optional<std::size_t> Poset::join(std::size_t a, std::size_t b) const {
  const std::size_t xs[] = {a, b};
  return join_of(xs);
}

std::optional<std::size_t> Poset::meet(std::size_t a, std::size_t b) const {
  const std::size_t xs[] = {a, b};
  return meet_of(xs);
}

std::vector<std::size_t> Poset::minimal_upper_bounds(std::span<const std::size_t> xs) const {
  DynBitset ub(size());
  for (std::size_t i = 0; i < size(); ++i) ub.set(i);
  for (std::size_t x : xs) ub &= up_[x];
  return minimal_in(ub);
}

std::vector<std::size_t> Poset::maximal_in(const DynBitset& subset) const {
  std::vector<std::size_t> out;
  subset.for_each([&](std::size_t a) {
    DynBitset above = up_[a] & subset;
    if (above.count() == 1) out.push_back(a);
  });
  return out;
}

std::vector<std::size_t> Poset::minimal_in(const DynBitset& subset) const {
  std::vector<std::size_t> out;
  subset.for_each([&](std::size_t a) {
    DynBitset below = down_[a] & subset;
    if (below.count() == 1) out.push_back(a);
  });
  return out;
}

bool Poset::is_meet_semilattice() const {
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = a + 1; b < size(); ++b)
      if (!meet(a, b)) return false;
  return true;
}

bool Poset::is_lattice() const {
  if (!is_meet_semilattice()) return false;
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = a + 1; b < size(); ++b)
      if (!join(a, b)) return false;
  return true;
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::leq_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < size(); ++a) up_[a].for_each([&](std::size_t b) { out.emplace_back(a, b); });
  return out;
}

SubPoset induced_subposet(const Poset& p, std::span<const std::size_t> elements) {
  SubPoset s;
  s.to_parent.assign(elements.begin(), elements.end());
  std::vector<std::string> labels;
  labels.reserve(elements.size());
  for (std::size_t e : elements) labels.push_back(p.label(e));
  const auto& tp = s.to_parent;
  s.poset = Poset::from_relation(std::move(labels),
                                 [&](std::size_t a, std::size_t b) { return p.leq(tp[a], tp[b]); });
  return s;
}

SubPoset interval(const Poset& p, std::size_t a, std::size_t b) {
  if (!p.leq(a, b)) throw DomainError("interval endpoints not ordered: " + p.label(a) + " vs " + p.label(b));
  const DynBitset between = p.up_set(a) & p.down_set(b);
  const auto idx = between.to_indices();
  return induced_subposet(p, idx);
}

Poset product(const Poset& p, const Poset& q) {
  const std::size_t nq = q.size();
  std::vector<std::string> labels;
  labels.reserve(p.size() * nq);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < nq; ++j) labels.push_back("(" + p.label(i) + "," + q.label(j) + ")");
  return Poset::from_relation(std::move(labels), [&](std::size_t x, std::size_t y) {
    return p.leq(x / nq, y / nq) && q.leq(x % nq, y % nq);
  });
}

Poset boolean_lattice(int m) {
  if (m < 0) throw DomainError("boolean lattice rank must be non-negative");
  const std::size_t n = std::size_t{1} << m;
  std::vector<std::string> labels;
  for (std::size_t s = 0; s < n; ++s) {
    std::string l = "{";
    for (int i = 0; i < m; ++i) {
      if ((s >> i) & 1U) {
        if (l.size() > 1) l += ",";
        l += std::to_string(i + 1);
      }
    }
    labels.push_back(l + "}");
  }
  return Poset::from_relation(std::move(labels), [](std::size_t a, std::size_t b) { return (a & ~b) == 0; });
}

Poset chain_poset(int k) {
  std::vector<std::string> labels;
  for (int i = 0; i < k; ++i) labels.push_back(std::to_string(i));
  return Poset::from_relation(std::move(labels), [](std::size_t a, std::size_t b) { return a <= b; });
}

Poset antichain_poset(int k) {
  std::vector<std::string> labels;
  for (int i = 0; i < k; ++i) labels.push_back(std::to_string(i));
  return Poset::from_relation(std::move(labels), [](std::size_t a, std::size_t b) { return a == b; });
}

bool verify_isomorphism(const Poset& p, const Poset& q, const PosetIsoWitness& w) {
  if (p.size() != q.size() || w.mapping.size() != p.size()) return false;
  std::vector<char> hit(q.size(), 0);
  for (std::size_t x : w.mapping) {
    if (x >= q.size() || hit[x]) return false;
    hit[x] = 1;
  }
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b)
      if (p.leq(a, b) != q.leq(w.mapping[a], w.mapping[b])) return false;
  return true;
}

namespace {

// Color refinement over the Hasse diagram, run jointly on both posets so
// that equal colors mean equal invariants across them.
std::pair<std::vector<int>, std::vector<int>> joint_colors(const Poset& p, const Poset& q) {
  using Sig = std::vector<long>;
  auto base = [](const Poset& x, std::size_t a) {
    return Sig{x.height(a),
               x.depth(a),
               static_cast<long>(x.up_set(a).count()),
               static_cast<long>(x.down_set(a).count()),
               static_cast<long>(x.upper_covers(a).size()),
               static_cast<long>(x.lower_covers(a).size())};
  };
  std::vector<Sig> sp(p.size()), sq(q.size());
  for (std::size_t a = 0; a < p.size(); ++a) sp[a] = base(p, a);
  for (std::size_t a = 0; a < q.size(); ++a) sq[a] = base(q, a);

  std::vector<int> cp(p.size()), cq(q.size());
  std::size_t classes = 0;
  for (int round = 0; round < 64; ++round) {
    std::map<Sig, int> ids;
    for (auto& s : sp) ids.emplace(s, 0);
    for (auto& s : sq) ids.emplace(s, 0);
    int next = 0;
    for (auto& [k, v] : ids) v = next++;
    for (std::size_t a = 0; a < p.size(); ++a) cp[a] = ids[sp[a]];
    for (std::size_t a = 0; a < q.size(); ++a) cq[a] = ids[sq[a]];
    if (ids.size() == classes) break;
    classes = ids.size();
    auto refine = [](const Poset& x, const std::vector<int>& c, std::vector<Sig>& s) {
      for (std::size_t a = 0; a < x.size(); ++a) {
        Sig up, down;
        for (std::size_t u : x.upper_covers(a)) up.push_back(c[u]);
        for (std::size_t d : x.lower_covers(a)) down.push_back(c[d]);
        std::sort(up.begin(), up.end());
        std::sort(down.begin(), down.end());
        Sig next{c[a], -1};
        next.insert(next.end(), up.begin(), up.end());
        next.push_back(-2);
        next.insert(next.end(), down.begin(), down.end());
        s[a] = std::move(next);
      }
    };
    refine(p, cp, sp);
    refine(q, cq, sq);
  }
  return {cp, cq};
}

}  // namespace

std::optional<PosetIsoWitness> is_isomorphic(const Poset& p, const Poset& q) {
  if (p.size() != q.size()) return std::nullopt;
  if (p.hasse().size() != q.hasse().size()) return std::nullopt;
  const std::size_t n = p.size();
  auto [cp, cq] = joint_colors(p, q);
  {
    std::vector<int> a = cp, b = cq;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }

  // Place elements bottom-up so each new element is constrained by mapped ones.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return p.height(x) < p.height(y); });

  std::vector<std::vector<std::size_t>> candidates(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (cp[a] == cq[b]) candidates[a].push_back(b);

  std::vector<std::size_t> map(n, n);
  std::vector<char> used(n, 0);
  std::function<bool(std::size_t)> place = [&](std::size_t depth) -> bool {
    if (depth == n) return true;
    const std::size_t a = order[depth];
    for (std::size_t b : candidates[a]) {
      if (used[b]) continue;
      bool ok = true;
      for (std::size_t i = 0; i < depth && ok; ++i) {
        const std::size_t x = order[i];
        ok = p.leq(x, a) == q.leq(map[x], b) && p.leq(a, x) == q.leq(b, map[x]);
      }
      if (!ok) continue;
      map[a] = b;
      used[b] = 1;
      if (place(depth + 1)) return true;
      used[b] = 0;
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  return PosetIsoWitness{map};
}

SimplicialComplex order_complex(const Poset& p, bool reduced) {
  std::vector<std::size_t> keep;
  for (std::size_t a = 0; a < p.size(); ++a) {
    if (reduced && (p.bottom() == a || p.top() == a)) continue;
    keep.push_back(a);
  }
  // Vertex ids follow a linear extension so chains come out sorted.
  std::stable_sort(keep.begin(), keep.end(), [&](std::size_t x, std::size_t y) {
    return p.down_set(x).count() < p.down_set(y).count();
  });
  std::vector<std::string> labels;
  std::vector<int> vid(p.size(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    labels.push_back(p.label(keep[i]));
    vid[keep[i]] = static_cast<int>(i);
  }

  std::vector<Face> faces{Face{}};
  Face current;
  std::function<void(std::size_t)> extend = [&](std::size_t from) {
    for (std::size_t j = from; j < keep.size(); ++j) {
      if (!current.empty() && !p.less(keep[static_cast<std::size_t>(current.back())], keep[j])) continue;
      current.push_back(static_cast<int>(j));
      faces.push_back(current);
      extend(j + 1);
      current.pop_back();
    }
  };
  extend(0);
  return SimplicialComplex::from_faces(labels, std::move(faces));
}

}  // namespace dowling
