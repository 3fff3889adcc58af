#include "dowling/filtration.hpp"

#include <algorithm>
#include <functional>

#include "dowling/errors.hpp"
#include "dowling/poset.hpp"

namespace dowling {

std::vector<int> TypeZeroChain::gaps() const {
  std::vector<int> p;
  std::size_t prev = 1;
  for (const auto& w : zero_blocks) {
    p.push_back(static_cast<int>(w.size() - prev));
    prev = w.size();
  }
  p.push_back(static_cast<int>(static_cast<std::size_t>(n + 1) - prev));
  return p;
}

BigInt gap_factor(int p, int k) {
  BigInt q = 1;
  for (int j = 1; j <= p - 1; ++j) q *= BigInt(j) * k - 1;
  return q;
}

std::vector<BigInt> TypeZeroChain::factors() const {
  std::vector<BigInt> q;
  for (int p : gaps()) q.push_back(gap_factor(p, k));
  return q;
}

BigInt TypeZeroChain::product() const {
  BigInt out = 1;
  for (const auto& q : factors()) out *= q;
  return out;
}

std::string TypeZeroChain::to_string() const {
  std::string s;
  for (const auto& w : zero_blocks) {
    if (!s.empty()) s += " < ";
    s += "{";
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
    s += "}";
  }
  return s.empty() ? "{}" : s;
}

TypeZeroChain make_chain(int n, int k, std::vector<std::vector<int>> zero_blocks) {
  if (n < 1 || k < 1) throw DomainError("chain needs n >= 1 and k >= 1");
  std::size_t prev = 1;
  const std::vector<int>* last = nullptr;
  for (auto& w : zero_blocks) {
    std::sort(w.begin(), w.end());
    if (std::adjacent_find(w.begin(), w.end()) != w.end()) throw DomainError("zero block lists an index twice");
    if (w.empty() || w.front() != 0) throw DomainError("zero block must contain 0");
    if (w.back() > n) throw DomainError("zero block index out of range");
    if (w.size() <= prev) throw DomainError("zero blocks must strictly increase");
    if (static_cast<int>(w.size()) == n + 1) throw DomainError("the chain may not reach the top");
    if (last && !std::includes(w.begin(), w.end(), last->begin(), last->end())) throw DomainError("zero blocks do not form a chain");
    prev = w.size();
    last = &w;
  }
  return {n, k, std::move(zero_blocks)};
}

std::string type_name(SimplexType t) {
  switch (t) {
    case SimplexType::Type0: return "type0";
    case SimplexType::Type1: return "type1";
    case SimplexType::Mixed: return "mixed";
  }
  return "unknown";
}

int FiltrationContext::vertex_of(const DowlingElement& e) const {
  auto v = complex.vertex_index(e.to_string());
  if (!v) throw DomainError(e.to_string() + " is not a vertex of the tree complex");
  return *v;
}

DowlingElement FiltrationContext::element_of(int vertex) const { return lattice.parse(complex.label(vertex)); }

Face FiltrationContext::face_of(const std::vector<DowlingElement>& x) const {
  Face f;
  for (const auto& e : x) f.push_back(vertex_of(e));
  std::sort(f.begin(), f.end());
  f.erase(std::unique(f.begin(), f.end()), f.end());
  return f;
}

FiltrationContext make_filtration_context(int n, const GroupTable& g, std::size_t cap) {
  if (n < 1) throw DomainError("the filtration needs n >= 1");
  DowlingLattice q = build_dowling_lattice(n, g, cap);
  BuildingSet jg = compute_JG(q);
  SimplicialComplex c = nested_complex(q.poset(), jg, true);
  std::vector<char> type0(c.num_vertices(), 0);
  for (std::size_t v = 0; v < c.num_vertices(); ++v)
    type0[v] = jg.type_of(q.require(c.label(static_cast<int>(v)))) == 0 ? 1 : 0;
  return {std::move(q), std::move(jg), std::move(c), std::move(type0)};
}

namespace {

std::size_t count_type0(const FiltrationContext& ctx, const Face& f) {
  std::size_t c = 0;
  for (int v : f) c += ctx.type0[static_cast<std::size_t>(v)] ? 1 : 0;
  return c;
}

std::vector<int> with_zero(std::vector<int> idx) {
  idx.insert(idx.begin(), 0);
  return idx;
}

}  // namespace

Classification classify(const FiltrationContext& ctx, const std::vector<DowlingElement>& x) {
  if (x.empty()) throw DomainError("the empty set is not a simplex of T_J or T_n^G");
  const Face f = ctx.face_of(x);
  if (!ctx.complex.contains(f)) throw DomainError("set is not nested");
  Classification out;
  std::size_t ones = 0;
  for (int v : f) {
    if (ctx.type0[static_cast<std::size_t>(v)]) out.type0_part.push_back(ctx.element_of(v));
    else ++ones;
  }
  std::sort(out.type0_part.begin(), out.type0_part.end(), [](const DowlingElement& a, const DowlingElement& b) {
    return a.zero_indices().size() < b.zero_indices().size();
  });
  out.type = out.type0_part.empty() ? SimplexType::Type1 : ones == 0 ? SimplexType::Type0 : SimplexType::Mixed;
  std::vector<std::vector<int>> blocks;
  for (const auto& e : out.type0_part) blocks.push_back(with_zero(e.zero_indices()));
  out.chain = make_chain(ctx.n(), ctx.group().order(), std::move(blocks));
  return out;
}

SimplicialComplex build_Km(const FiltrationContext& ctx, int m) {
  if (m < 0 || m > ctx.n() - 1) throw DomainError("m must lie in [0, n - 1]");
  std::vector<Face> faces;
  for (const Face& f : ctx.complex.all_faces())
    if (count_type0(ctx, f) <= static_cast<std::size_t>(m)) faces.push_back(f);
  return SimplicialComplex::from_faces(ctx.complex.labels(), std::move(faces));
}

SimplicialComplex build_Km(int n, const GroupTable& g, int m, std::size_t cap) {
  return build_Km(make_filtration_context(n, g, cap), m);
}

std::vector<Face> type0_simplices(const FiltrationContext& ctx) {
  std::vector<Face> out;
  for (const Face& f : ctx.complex.all_faces())
    if (!f.empty() && count_type0(ctx, f) == f.size()) out.push_back(f);
  return out;
}

SimplicialComplex link_in_Km(const FiltrationContext& ctx, const std::vector<DowlingElement>& x) {
  const Classification c = classify(ctx, x);
  if (c.type != SimplexType::Type0) throw DomainError("link_in_Km needs a simplex of type 0");
  const int m = c.chain.length();
  const SimplicialComplex km = build_Km(ctx, m);
  std::vector<std::string> labels;
  for (const auto& e : c.type0_part) labels.push_back(e.to_string());
  const auto face = km.face_from_labels(labels);
  if (!face) throw DomainError("simplex is missing from K_m");
  return join(simplex_boundary(labels), link(km, *face));
}

JoinDecomposition join_decomposition(const FiltrationContext& ctx, const std::vector<DowlingElement>& x) {
  JoinDecomposition out;
  out.link = link_in_Km(ctx, x);
  out.chain = classify(ctx, x).chain;
  const int m = out.chain.length();
  std::vector<std::string> labels;
  for (int j = 1; j <= m; ++j) labels.push_back("w" + std::to_string(j));
  const GroupTable& g = ctx.group();

  SimplicialComplex factors = SimplicialComplex::empty_complex();
  int i = 0;
  for (int p : out.chain.gaps()) {
    SimplicialComplex f = SimplicialComplex::empty_complex();
    if (p >= 2) {
      const DowlingLattice q0 = build_q0(p, g);
      f = nested_complex(q0.poset(), compute_IG(q0), false);
    }
    factors = join(factors, with_label_prefix(f, "f" + std::to_string(i++) + ":"));
  }
  out.model = join(simplex_boundary(labels), factors);
  out.isomorphic = is_isomorphic_complexes(out.link, out.model).has_value();

  const SimplicialComplex boolean = with_label_prefix(order_complex(boolean_lattice(m), true), "b:");
  out.boolean_factor_homology = reduced_homology(join(boolean, factors)).same_homology(reduced_homology(out.link));
  return out;
}

bool join_decomposition_check(const FiltrationContext& ctx, const std::vector<DowlingElement>& x) {
  return join_decomposition(ctx, x).isomorphic;
}

ChainSum chain_sum(int n, int k) {
  if (n < 2 || k < 1) throw DomainError("chain_sum needs n >= 2 and k >= 1");
  ChainSum out;
  BigInt plus = 1, minus = 1;
  for (int j = 1; j <= n - 1; ++j) {
    plus *= BigInt(j) * k + 1;
    minus *= BigInt(j) * k - 1;
  }
  out.lhs = plus - minus;
  // Chains with gaps (p_0, ..., p_ℓ), ℓ ≥ 1, number n! / Π p_i!.
  std::vector<BigInt> fact(static_cast<std::size_t>(n + 1), 1);
  for (int i = 1; i <= n; ++i) fact[static_cast<std::size_t>(i)] = fact[static_cast<std::size_t>(i - 1)] * i;
  out.rhs = 0;
  std::vector<int> parts;
  std::function<void(int)> rec = [&](int left) {
    if (left == 0) {
      if (parts.size() < 2) return;
      BigInt count = fact[static_cast<std::size_t>(n)], q = 1;
      for (int p : parts) {
        count /= fact[static_cast<std::size_t>(p)];
        q *= gap_factor(p, k);
      }
      out.rhs += count * q;
      return;
    }
    for (int p = 1; p <= left; ++p) {
      parts.push_back(p);
      rec(left - p);
      parts.pop_back();
    }
  };
  rec(n);
  return out;
}

NumerologyReport numerology_report(int n, int k) {
  if (n < 2 || k < 1) throw DomainError("numerology_report needs n >= 2 and k >= 1");
  NumerologyReport r;
  r.n = n;
  r.k = k;
  BigInt plus = 1, minus = 1;
  for (int j = 1; j <= n; ++j) {
    plus *= BigInt(j) * k + 1;
    minus *= BigInt(j) * k - 1;
  }
  r.lhs = plus - minus;
  r.rhs_literal = 0;
  std::vector<BigInt> fact(static_cast<std::size_t>(n + 1), 1);
  for (int i = 1; i <= n; ++i) fact[static_cast<std::size_t>(i)] = fact[static_cast<std::size_t>(i - 1)] * i;
  std::vector<int> shape;
  std::function<void(int, int)> rec = [&](int left, int max_part) {
    if (left == 0) {
      PartitionTerm t;
      t.shape = shape;
      t.term = 1;
      for (int j = 1; j <= n; ++j) {
        const auto h = std::count_if(shape.begin(), shape.end(), [&](int s) { return s >= j; });
        for (long e = 0; e < h; ++e) t.term *= BigInt(j) * k - 1;
      }
      // n! / (Π s! · Π mult!)
      t.multiplicity = fact[static_cast<std::size_t>(n)];
      for (int s : shape) t.multiplicity /= fact[static_cast<std::size_t>(s)];
      for (std::size_t i = 0; i < shape.size();) {
        std::size_t j = i;
        while (j < shape.size() && shape[j] == shape[i]) ++j;
        t.multiplicity /= fact[j - i];
        i = j;
      }
      r.rhs_literal += t.term * t.multiplicity;
      r.per_partition_terms.push_back(std::move(t));
      return;
    }
    for (int p = std::min(left, max_part); p >= 1; --p) {
      shape.push_back(p);
      rec(left - p, p);
      shape.pop_back();
    }
  };
  rec(n, n);
  r.equal = r.lhs == r.rhs_literal;
  return r;
}

bool cm_link_check(const SimplicialComplex& k) {
  if (k.is_void()) throw DomainError("the void complex has no links");
  if (!k.is_pure()) throw DomainError("cm_link_check needs a pure complex");
  const int d = k.dimension();
  for (const Face& f : k.all_faces()) {
    const SimplicialComplex lk = f.empty() ? k : link(k, f);
    if (!reduced_homology(lk).concentrated_in(d - static_cast<int>(f.size()))) return false;
  }
  return true;
}

}  // namespace dowling
