#include "dowling/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "dowling/errors.hpp"

namespace dowling {

namespace {

int point_id(int index, GElem g, int k) { return index == 0 ? 0 : 1 + (index - 1) * k + g; }

BasePoint point_of(int id, int k) {
  if (id == 0) return {0, 0};
  return {1 + (id - 1) / k, (id - 1) % k};
}

void check_compatible(const DowlingElement& a, const DowlingElement& b, const GroupTable& g) {
  if (a.n != b.n || a.k != b.k || a.k != g.order()) throw IncompatibleError("elements from different Dowling lattices");
}

// Block id of every base point: 0 for the zero block, otherwise
// 1 + block * k + t where the point lies in the translate t · representative.
std::vector<int> point_owner(const DowlingElement& e, const GroupTable& g) {
  const int k = e.k;
  std::vector<int> owner(static_cast<std::size_t>(1 + e.n * k), 0);
  for (int i = 1; i <= e.n; ++i) {
    const int b = e.block[static_cast<std::size_t>(i)];
    for (GElem x = 0; x < k; ++x) {
      const int id = point_id(i, x, k);
      owner[static_cast<std::size_t>(id)] =
          b == 0 ? 0 : 1 + b * k + g.mul(x, g.inv(e.label[static_cast<std::size_t>(i)]));
    }
  }
  return owner;
}

std::vector<std::vector<BasePoint>> blocks_from_owner(const std::vector<int>& owner, int k) {
  std::map<int, std::vector<BasePoint>> groups;
  for (std::size_t id = 0; id < owner.size(); ++id) groups[owner[id]].push_back(point_of(static_cast<int>(id), k));
  std::vector<std::vector<BasePoint>> out;
  for (auto& [key, pts] : groups) out.push_back(std::move(pts));
  return out;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
};

bool rank_then_encoding(const DowlingElement& a, const DowlingElement& b) {
  const int ra = a.rank(), rb = b.rank();
  if (ra != rb) return ra < rb;
  return a < b;
}

}  // namespace

int DowlingElement::num_nonzero_blocks() const {
  int m = 0;
  for (auto b : block) m = std::max(m, static_cast<int>(b));
  return m;
}

std::vector<int> DowlingElement::zero_indices() const {
  std::vector<int> out;
  for (int i = 1; i <= n; ++i)
    if (block[static_cast<std::size_t>(i)] == 0) out.push_back(i);
  return out;
}

bool DowlingElement::trivial_zero_block() const {
  for (int i = 1; i <= n; ++i)
    if (block[static_cast<std::size_t>(i)] == 0) return false;
  return true;
}

std::vector<std::vector<int>> DowlingElement::nonzero_blocks() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(num_nonzero_blocks()));
  for (int i = 1; i <= n; ++i) {
    const int b = block[static_cast<std::size_t>(i)];
    if (b != 0) out[static_cast<std::size_t>(b - 1)].push_back(i);
  }
  return out;
}

std::string DowlingElement::to_string() const {
  std::string s = "0";
  for (int i : zero_indices()) s += " " + std::to_string(i);
  for (const auto& b : nonzero_blocks()) {
    s += '|';
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (j) s += ' ';
      s += std::to_string(b[j]);
      const GElem l = label[static_cast<std::size_t>(b[j])];
      if (l != 0) s += "~" + std::to_string(l);
    }
  }
  return s;
}

std::size_t DowlingElementHash::operator()(const DowlingElement& e) const noexcept {
  std::size_t h = static_cast<std::size_t>(e.n) * 1000003U + static_cast<std::size_t>(e.k);
  for (std::size_t i = 0; i < e.block.size(); ++i) {
    h = h * 1315423911U + e.block[i];
    h = h * 2654435761U + static_cast<std::size_t>(e.label[i]);
  }
  return h;
}

DowlingElement dowling_bottom(int n, const GroupTable& g) {
  DowlingElement e{n, g.order(), std::vector<std::uint8_t>(static_cast<std::size_t>(n + 1)),
                   std::vector<GElem>(static_cast<std::size_t>(n + 1), 0)};
  for (int i = 0; i <= n; ++i) e.block[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
  return e;
}

DowlingElement dowling_top(int n, const GroupTable& g) {
  return DowlingElement{n, g.order(), std::vector<std::uint8_t>(static_cast<std::size_t>(n + 1), 0),
                        std::vector<GElem>(static_cast<std::size_t>(n + 1), 0)};
}

DowlingElement normalize(const std::vector<std::vector<BasePoint>>& raw_blocks, int n, const GroupTable& g) {
  const int k = g.order();
  if (n < 0 || n > 250) throw DomainError("n out of range");
  const std::size_t npts = static_cast<std::size_t>(1 + n * k);
  std::vector<int> owner(npts, -1);
  for (std::size_t b = 0; b < raw_blocks.size(); ++b) {
    if (raw_blocks[b].empty()) throw StructureError("empty block");
    for (const BasePoint& p : raw_blocks[b]) {
      const bool valid = (p.index == 0 && p.g == 0) || (p.index >= 1 && p.index <= n && p.g >= 0 && p.g < k);
      if (!valid) throw StructureError("point outside the base set");
      int& o = owner[static_cast<std::size_t>(point_id(p.index, p.g, k))];
      if (o != -1) throw StructureError("point listed in two blocks");
      o = static_cast<int>(b);
    }
  }
  for (int o : owner)
    if (o == -1) throw StructureError("blocks do not cover the base set");

  for (std::size_t b = 0; b < raw_blocks.size(); ++b) {
    for (GElem x = 1; x < k; ++x) {
      int target = -1;
      for (const BasePoint& p : raw_blocks[b]) {
        const int img = owner[static_cast<std::size_t>(point_id(p.index, p.index == 0 ? 0 : g.mul(x, p.g), k))];
        if (target == -1) target = img;
        if (img != target) throw SymmetryError("partition is not G-symmetric");
      }
      if (raw_blocks[static_cast<std::size_t>(target)].size() != raw_blocks[b].size())
        throw SymmetryError("partition is not G-symmetric");
    }
  }

  const int zero = owner[0];
  for (std::size_t b = 0; b < raw_blocks.size(); ++b) {
    if (static_cast<int>(b) == zero) continue;
    std::set<int> seen;
    for (const BasePoint& p : raw_blocks[b])
      if (!seen.insert(p.index).second)
        throw StructureError("nonzero block with an orbit shorter than |G|");
  }

  DowlingElement e{n, k, std::vector<std::uint8_t>(static_cast<std::size_t>(n + 1), 0),
                   std::vector<GElem>(static_cast<std::size_t>(n + 1), 0)};
  std::map<int, int> id_of_min;
  int next = 1;
  for (int i = 1; i <= n; ++i) {
    const int b = owner[static_cast<std::size_t>(point_id(i, 0, k))];
    if (b == zero) continue;
    // The block holding (i, id); its smallest index carries label x_m.
    BasePoint mp{n + 1, 0};
    for (const BasePoint& p : raw_blocks[static_cast<std::size_t>(b)]) mp = std::min(mp, p);
    auto [it, inserted] = id_of_min.emplace(mp.index, next);
    if (inserted) ++next;
    e.block[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(it->second);
    e.label[static_cast<std::size_t>(i)] = g.inv(mp.g);
  }
  return e;
}

std::vector<std::vector<BasePoint>> decode(const DowlingElement& e, const GroupTable& g) {
  std::vector<std::vector<BasePoint>> out;
  std::vector<BasePoint> zero{{0, 0}};
  for (int i : e.zero_indices())
    for (GElem x = 0; x < e.k; ++x) zero.push_back({i, x});
  out.push_back(std::move(zero));
  for (const auto& b : e.nonzero_blocks()) {
    for (GElem h = 0; h < e.k; ++h) {
      std::vector<BasePoint> blk;
      for (int i : b) blk.push_back({i, g.mul(h, e.label[static_cast<std::size_t>(i)])});
      out.push_back(std::move(blk));
    }
  }
  return out;
}

DowlingElement parse_element(const std::string& text, int n, const GroupTable& g) {
  const int k = g.order();
  std::vector<std::vector<BasePoint>> listed;
  std::stringstream whole(text);
  std::string part;
  while (std::getline(whole, part, '|')) {
    std::stringstream entries(part);
    std::string tok;
    std::vector<BasePoint> blk;
    while (entries >> tok) {
      BasePoint p;
      const auto tilde = tok.find('~');
      try {
        std::size_t used = 0;
        p.index = std::stoi(tok.substr(0, tilde), &used);
        if (used != (tilde == std::string::npos ? tok.size() : tilde)) throw ParseError("");
        if (tilde != std::string::npos) {
          const std::string gs = tok.substr(tilde + 1);
          p.g = std::stoi(gs, &used);
          if (used != gs.size()) throw ParseError("");
        }
      } catch (const std::exception&) {
        throw ParseError("malformed entry '" + tok + "'");
      }
      if (p.index < 0 || p.index > n) throw ParseError("index out of range in '" + tok + "'");
      if (p.g < 0 || p.g >= k || (p.index == 0 && p.g != 0)) throw ParseError("group label out of range in '" + tok + "'");
      blk.push_back(p);
    }
    if (blk.empty()) throw ParseError("empty block in '" + text + "'");
    listed.push_back(std::move(blk));
  }

  std::set<std::vector<BasePoint>> closed;
  for (const auto& blk : listed) {
    const bool is_zero = std::any_of(blk.begin(), blk.end(), [](const BasePoint& p) { return p.index == 0; });
    if (is_zero) {
      std::vector<BasePoint> z{{0, 0}};
      for (const BasePoint& p : blk)
        if (p.index != 0)
          for (GElem x = 0; x < k; ++x) z.push_back({p.index, x});
      std::sort(z.begin(), z.end());
      z.erase(std::unique(z.begin(), z.end()), z.end());
      closed.insert(std::move(z));
      continue;
    }
    for (GElem x = 0; x < k; ++x) {
      std::vector<BasePoint> t;
      for (const BasePoint& p : blk) t.push_back({p.index, g.mul(x, p.g)});
      std::sort(t.begin(), t.end());
      t.erase(std::unique(t.begin(), t.end()), t.end());
      closed.insert(std::move(t));
    }
  }
  std::vector<char> covered(static_cast<std::size_t>(1 + n * k), 0);
  std::vector<std::vector<BasePoint>> blocks;
  for (const auto& blk : closed) {
    for (const BasePoint& p : blk) {
      char& c = covered[static_cast<std::size_t>(point_id(p.index, p.g, k))];
      if (c) throw ParseError("overlapping blocks in '" + text + "'");
      c = 1;
    }
    blocks.push_back(blk);
  }
  for (std::size_t id = 0; id < covered.size(); ++id)
    if (!covered[id]) blocks.push_back({point_of(static_cast<int>(id), k)});
  return normalize(blocks, n, g);
}

bool leq(const DowlingElement& a, const DowlingElement& b, const GroupTable& g) {
  check_compatible(a, b, g);
  const int na = a.num_nonzero_blocks();
  // For each nonzero block of a: its image block in b and the translating element.
  std::vector<int> image(static_cast<std::size_t>(na + 1), -1);
  std::vector<GElem> shift(static_cast<std::size_t>(na + 1), 0);
  for (int i = 1; i <= a.n; ++i) {
    const std::size_t si = static_cast<std::size_t>(i);
    const int ba = a.block[si], bb = b.block[si];
    if (ba == 0) {
      if (bb != 0) return false;
      continue;
    }
    const GElem h = bb == 0 ? 0 : g.mul(a.label[si], g.inv(b.label[si]));
    const std::size_t sa = static_cast<std::size_t>(ba);
    if (image[sa] == -1) {
      image[sa] = bb;
      shift[sa] = h;
    } else if (image[sa] != bb || shift[sa] != h) {
      return false;
    }
  }
  return true;
}

DowlingElement meet(const DowlingElement& a, const DowlingElement& b, const GroupTable& g) {
  check_compatible(a, b, g);
  const auto oa = point_owner(a, g), ob = point_owner(b, g);
  const int width = 1 + (a.n + 1) * a.k;
  std::vector<int> owner(oa.size());
  for (std::size_t i = 0; i < oa.size(); ++i) owner[i] = oa[i] * width + ob[i];
  return normalize(blocks_from_owner(owner, a.k), a.n, g);
}

DowlingElement join(const DowlingElement& a, const DowlingElement& b, const GroupTable& g) {
  check_compatible(a, b, g);
  const auto oa = point_owner(a, g), ob = point_owner(b, g);
  const std::size_t npts = oa.size();
  UnionFind uf(npts);
  std::map<int, int> first_a, first_b;
  for (std::size_t i = 0; i < npts; ++i) {
    const int p = static_cast<int>(i);
    uf.unite(p, first_a.emplace(oa[i], p).first->second);
    uf.unite(p, first_b.emplace(ob[i], p).first->second);
  }
  // Nonzero blocks meeting some index twice are not simple and fall into the zero block.
  std::map<int, std::set<int>> indices;
  std::map<int, bool> simple;
  for (std::size_t i = 1; i < npts; ++i) {
    const int r = uf.find(static_cast<int>(i));
    const int idx = point_of(static_cast<int>(i), a.k).index;
    auto [it, inserted] = simple.emplace(r, true);
    if (!indices[r].insert(idx).second) it->second = false;
  }
  for (const auto& [r, ok] : simple)
    if (!ok) uf.unite(r, 0);
  std::vector<int> owner(npts);
  for (std::size_t i = 0; i < npts; ++i) owner[i] = uf.find(static_cast<int>(i));
  return normalize(blocks_from_owner(owner, a.k), a.n, g);
}

std::optional<DowlingElement> join_in_q0(const DowlingElement& a, const DowlingElement& b, const GroupTable& g) {
  check_compatible(a, b, g);
  if (!a.trivial_zero_block() || !b.trivial_zero_block())
    throw DomainError("join_in_q0 arguments must have trivial zero block");
  DowlingElement j = join(a, b, g);
  // Any upper bound in Q_n^0 lies above the lattice join, so the join decides.
  if (!j.trivial_zero_block()) return std::nullopt;
  return j;
}

SetPartition forgetful(const DowlingElement& e) { return e.assoc(); }

namespace {

// Number of elements of Q_r^0 for group order k (all blocks simple).
std::vector<BigInt> simple_counts(int n, int k) {
  std::vector<BigInt> b(static_cast<std::size_t>(n + 1), 0);
  std::vector<std::vector<BigInt>> binom(static_cast<std::size_t>(n + 1));
  for (int r = 0; r <= n; ++r) {
    binom[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(r + 1), 1);
    for (int s = 1; s < r; ++s)
      binom[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)] =
          binom[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(s - 1)] +
          binom[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(s)];
  }
  b[0] = 1;
  for (int r = 1; r <= n; ++r) {
    BigInt power = 1;
    for (int s = 1; s <= r; ++s) {
      b[static_cast<std::size_t>(r)] +=
          binom[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(s - 1)] * power * b[static_cast<std::size_t>(r - s)];
      power *= k;
    }
  }
  return b;
}

}  // namespace

BigInt q0_size(int n, int k) { return simple_counts(n, k)[static_cast<std::size_t>(n)]; }

BigInt dowling_lattice_size(int n, int k) {
  const auto b = simple_counts(n, k);
  BigInt total = 0, choose = 1;
  for (int j = 0; j <= n; ++j) {
    total += choose * b[static_cast<std::size_t>(n - j)];
    choose = choose * (n - j) / (j + 1);
  }
  return total;
}

namespace {

std::vector<DowlingElement> enumerate(int n, const GroupTable& g, bool trivial_zero_only) {
  if (n < 0 || n > 250) throw DomainError("n out of range");
  const int k = g.order();
  std::vector<DowlingElement> out;
  for (const SetPartition& p : all_set_partitions(0, n)) {
    const auto& rgs = p.rgs();
    if (trivial_zero_only && std::count(rgs.begin(), rgs.end(), 0) != 1) continue;
    // Free positions: every nonzero-block index except the block minimum.
    std::vector<int> free;
    std::vector<char> seen(static_cast<std::size_t>(p.num_blocks()), 0);
    for (int i = 1; i <= n; ++i) {
      const auto b = rgs[static_cast<std::size_t>(i)];
      if (b == 0) continue;
      if (seen[b]) free.push_back(i);
      seen[b] = 1;
    }
    DowlingElement e{n, k, rgs, std::vector<GElem>(static_cast<std::size_t>(n + 1), 0)};
    for (;;) {
      out.push_back(e);
      std::size_t pos = 0;
      while (pos < free.size()) {
        GElem& l = e.label[static_cast<std::size_t>(free[pos])];
        if (++l < k) break;
        l = 0;
        ++pos;
      }
      if (pos == free.size()) break;
    }
  }
  std::sort(out.begin(), out.end(), rank_then_encoding);
  return out;
}

}  // namespace

std::vector<DowlingElement> enumerate_dowling_elements(int n, const GroupTable& g) { return enumerate(n, g, false); }

DowlingLattice::DowlingLattice(int n, GroupTable g, std::vector<DowlingElement> elements, bool q0)
    : n_(n), group_(std::move(g)), q0_(q0), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end(), rank_then_encoding);
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i].n != n_ || elements_[i].k != group_.order())
      throw IncompatibleError("element does not belong to this lattice");
    if (!index_.emplace(elements_[i], i).second) throw DomainError("duplicate element " + elements_[i].to_string());
  }
  std::vector<std::string> labels;
  labels.reserve(elements_.size());
  for (const auto& e : elements_) labels.push_back(e.to_string());
  std::vector<int> ranks;
  for (const auto& e : elements_) ranks.push_back(e.rank());
  poset_ = Poset::from_relation(std::move(labels), [&](std::size_t a, std::size_t b) {
    return ranks[a] <= ranks[b] && dowling::leq(elements_[a], elements_[b], group_);
  });
}

std::optional<std::size_t> DowlingLattice::index_of(const DowlingElement& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t DowlingLattice::require(const DowlingElement& e) const {
  auto i = index_of(e);
  if (!i) throw DomainError("element " + e.to_string() + " not in this poset");
  return *i;
}

std::size_t DowlingLattice::require(const std::string& text) const { return require(parse(text)); }

DowlingLattice build_dowling_lattice(int n, const GroupTable& g, std::size_t cap) {
  if (n < 0) throw DomainError("n must be non-negative");
  const BigInt projected = dowling_lattice_size(n, g.order());
  if (projected > cap) throw ResourceError("Dowling lattice exceeds size cap", projected.str());
  return DowlingLattice(n, g, enumerate(n, g, false), false);
}

DowlingLattice build_q0(int n, const GroupTable& g, std::size_t cap) {
  if (n < 0) throw DomainError("n must be non-negative");
  const BigInt projected = q0_size(n, g.order());
  if (projected > cap) throw ResourceError("Q_n^0 exceeds size cap", projected.str());
  return DowlingLattice(n, g, enumerate(n, g, true), true);
}

LowerIntervalIso lower_interval_iso_q0(const DowlingLattice& q0, const DowlingElement& sigma) {
  if (!sigma.trivial_zero_block()) throw DomainError("element " + sigma.to_string() + " is not in Q_n^0");
  const GroupTable& g = q0.group();
  const std::size_t top = q0.require(sigma);
  const std::size_t bottom = q0.require(dowling_bottom(q0.n(), g));
  LowerIntervalIso out;
  out.source = interval(q0.poset(), bottom, top);

  const int n = q0.n();
  const SetPartition under = SetPartition::from_blocks(1, n, sigma.nonzero_blocks());
  for (const SetPartition& p : all_set_partitions(1, n))
    if (p.refines(under)) out.target_parts.push_back(p);
  std::stable_sort(out.target_parts.begin(), out.target_parts.end(), [](const SetPartition& a, const SetPartition& b) {
    if (a.rank() != b.rank()) return a.rank() < b.rank();
    return a.rgs() < b.rgs();
  });
  std::vector<std::string> labels;
  for (const auto& p : out.target_parts) labels.push_back(p.to_string());
  const auto& parts = out.target_parts;
  out.target = Poset::from_relation(std::move(labels), [&](std::size_t a, std::size_t b) { return parts[a].refines(parts[b]); });

  std::map<std::size_t, std::size_t> source_pos;
  for (std::size_t i = 0; i < out.source.to_parent.size(); ++i) source_pos[out.source.to_parent[i]] = i;
  out.witness.mapping.assign(out.source.to_parent.size(), 0);
  if (parts.size() != out.source.to_parent.size())
    throw StructureError("lower interval sizes differ for " + sigma.to_string());
  for (std::size_t t = 0; t < parts.size(); ++t) {
    // The forced lift: labels relative to the block minimum, read off sigma.
    DowlingElement tau = dowling_bottom(n, g);
    for (const auto& blk : parts[t].blocks()) {
      const GElem base = g.inv(sigma.label[static_cast<std::size_t>(blk.front())]);
      for (int i : blk) {
        tau.block[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(parts[t].block_of(i) + 1);
        tau.label[static_cast<std::size_t>(i)] = g.mul(base, sigma.label[static_cast<std::size_t>(i)]);
      }
    }
    auto it = source_pos.find(q0.require(tau));
    if (it == source_pos.end()) throw StructureError("lift of " + parts[t].to_string() + " is not below " + sigma.to_string());
    out.witness.mapping[it->second] = t;
  }
  if (!verify_isomorphism(out.source.poset, out.target, out.witness))
    throw StructureError("lower interval map is not an order isomorphism");
  return out;
}

IntervalDecomposition interval_decomposition(const DowlingLattice& q, const DowlingElement& omega) {
  if (q.is_q0()) throw DomainError("interval decomposition needs the full Dowling lattice");
  const GroupTable& g = q.group();
  const std::size_t top = q.require(omega);
  const std::size_t bottom = q.require(dowling_bottom(q.n(), g));
  IntervalDecomposition out;
  out.interval = interval(q.poset(), bottom, top);

  const std::vector<int> zero = omega.zero_indices();
  out.m = static_cast<int>(zero.size());
  std::vector<std::vector<int>> simple;
  for (const auto& b : omega.nonzero_blocks())
    if (b.size() >= 2) {
      simple.push_back(b);
      out.sizes.push_back(static_cast<int>(b.size()));
    }

  std::optional<DowlingLattice> qm;
  if (out.m > 0) qm.emplace(build_dowling_lattice(out.m, g));
  Poset prod = qm ? qm->poset() : chain_poset(1);
  std::vector<PartitionLattice> pis;
  for (int s : out.sizes) {
    pis.push_back(build_partition_lattice(s));
    prod = product(prod, pis.back().poset);
  }
  out.product = std::move(prod);

  out.witness.mapping.resize(out.interval.to_parent.size());
  for (std::size_t t = 0; t < out.interval.to_parent.size(); ++t) {
    const DowlingElement& tau = q.element(out.interval.to_parent[t]);
    std::size_t idx = 0;
    if (qm) {
      DowlingElement r = dowling_bottom(out.m, g);
      std::map<int, int> renum;
      for (std::size_t j = 0; j < zero.size(); ++j) {
        const std::size_t src = static_cast<std::size_t>(zero[j]);
        const std::size_t dst = j + 1;
        const int b = tau.block[src];
        if (b == 0) {
          r.block[dst] = 0;
        } else {
          auto [it, inserted] = renum.emplace(b, static_cast<int>(renum.size()) + 1);
          r.block[dst] = static_cast<std::uint8_t>(it->second);
        }
        r.label[dst] = b == 0 ? 0 : tau.label[src];
      }
      idx = qm->require(r);
    }
    for (std::size_t j = 0; j < simple.size(); ++j) {
      const auto& blk = simple[j];
      std::map<int, std::vector<int>> by_block;
      for (std::size_t p = 0; p < blk.size(); ++p)
        by_block[tau.block[static_cast<std::size_t>(blk[p])]].push_back(static_cast<int>(p) + 1);
      std::vector<std::vector<int>> parts;
      for (auto& [b, members] : by_block) parts.push_back(members);
      const SetPartition local = SetPartition::from_blocks(1, static_cast<int>(blk.size()), parts);
      idx = idx * pis[j].parts.size() + *pis[j].index_of(local);
    }
    out.witness.mapping[t] = idx;
  }
  if (!verify_isomorphism(out.interval.poset, out.product, out.witness))
    throw StructureError("interval decomposition map is not an order isomorphism");
  return out;
}

}  // namespace dowling
