#include "dowling/verify.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <tuple>
#include <map>
#include <random>
#include <set>

#include "dowling/errors.hpp"
#include "dowling/filtration.hpp"
#include "dowling/lattice.hpp"
#include "dowling/nested.hpp"
#include "dowling/trees.hpp"

namespace dowling {

namespace {

class Recorder {
 public:
  Recorder(std::string suite, std::vector<CheckRecord>& out) : suite_(std::move(suite)), out_(out) {}
  CheckRecord& add(std::string id, std::string anchor, bool pass, Json data = Json::object()) {
    out_.push_back({suite_, std::move(id), std::move(anchor), pass, false, std::move(data)});
    return out_.back();
  }
  void info(std::string id, std::string anchor, Json data) {
    add(std::move(id), std::move(anchor), true, std::move(data)).informational = true;
  }

 private:
  std::string suite_;
  std::vector<CheckRecord>& out_;
};

BigInt shifted_product(int n, int k, int sign) {
  BigInt p = 1;
  for (int j = 1; j <= n - 1; ++j) p *= BigInt(j) * k + sign;
  return p;
}

Json homology_json(const HomologyResult& h) {
  Json j;
  j["reduced_betti"] = h.reduced_betti;
  Json tor = Json::array();
  for (const auto& t : h.torsion) {
    Json d = Json::array();
    for (const auto& x : t) d.push_back(x.str());
    tor.push_back(std::move(d));
  }
  j["torsion"] = std::move(tor);
  if (h.betti_minus_one) j["reduced_betti_minus_one"] = h.betti_minus_one;
  return j;
}

bool wedge(const HomologyResult& h, int d, const BigInt& count) {
  return count <= BigInt(std::numeric_limits<std::uint64_t>::max()) && h.is_wedge_of_spheres(d, static_cast<std::uint64_t>(count));
}

std::string tag(const VerifyConfig& c) { return "n" + std::to_string(c.n) + "-k" + std::to_string(c.group.order()); }

std::vector<std::size_t> all_but_bottom(const Poset& p) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (!p.bottom() || i != *p.bottom()) out.push_back(i);
  return out;
}

std::set<std::string> label_set(const Poset& p, const std::vector<std::size_t>& idx) {
  std::set<std::string> s;
  for (std::size_t i : idx) s.insert(p.label(i));
  return s;
}

// ---------------------------------------------------------------- lattice

void lattice_suite(const VerifyConfig& c, std::vector<CheckRecord>& out) {
  Recorder r("lattice", out);
  const int n = c.n, k = c.group.order();
  const GroupTable& g = c.group;
  const DowlingLattice q = build_dowling_lattice(n, g, c.cap);
  const DowlingLattice q0 = build_q0(n, g, c.cap);
  const std::string t = tag(c);

  r.add(t + "/size", "Dowling lattice cardinality from the orbit count", BigInt(q.size()) == dowling_lattice_size(n, k),
        {{"enumerated", q.size()}, {"formula", dowling_lattice_size(n, k).str()}});
  r.add(t + "/q0-size", "cardinality of the trivial-zero-block subposet", BigInt(q0.size()) == q0_size(n, k),
        {{"enumerated", q0.size()}, {"formula", q0_size(n, k).str()}});

  std::size_t atoms = 0, coatoms = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q.element(i).rank() == 1) ++atoms;
    if (q.element(i).rank() == n - 1) ++coatoms;
  }
  r.add(t + "/atoms", "atoms are the n zero-block atoms plus |G| C(n,2) pair blocks",
        atoms == static_cast<std::size_t>(n + k * n * (n - 1) / 2), {{"atoms", atoms}});
  if (n == 3 && k == 2)
    r.add(t + "/q3-z2-counts", "Hasse diagram of Q_3(Z_2) and its trivial-zero-block part",
          q.size() == 24 && atoms == 9 && coatoms == 13 && q0.size() == 11,
          {{"size", q.size()}, {"atoms", atoms}, {"corank_one", coatoms}, {"q0_size", q0.size()}});

  r.add(t + "/is-lattice", "Dowling lattice is a geometric lattice", q.poset().is_lattice());
  r.add(t + "/q0-meet-semilattice", "trivial-zero-block part is a meet-semilattice", q0.poset().is_meet_semilattice());

  bool oracle = true, laws = true;
  const auto& es = q.elements();
  for (std::size_t a = 0; a < es.size() && oracle; ++a) {
    const auto da = decode(es[a], g);
    for (std::size_t b = 0; b < es.size(); ++b) {
      const auto db = decode(es[b], g);
      bool refines = true;
      for (const auto& blk : da) {
        const auto it = std::find_if(db.begin(), db.end(), [&](const auto& bb) {
          return std::find(bb.begin(), bb.end(), blk.front()) != bb.end();
        });
        for (const auto& p : blk)
          if (std::find(it->begin(), it->end(), p) == it->end()) refines = false;
      }
      if (refines != leq(es[a], es[b], g)) {
        oracle = false;
        break;
      }
      const auto m = meet(es[a], es[b], g), j = join(es[a], es[b], g);
      if (m != meet(es[b], es[a], g) || j != join(es[b], es[a], g) || join(es[a], m, g) != es[a] || meet(es[a], j, g) != es[a])
        laws = false;
    }
  }
  r.add(t + "/order-oracle", "order is refinement of G-symmetric partitions", oracle);
  r.add(t + "/lattice-laws", "meet and join commute and absorb", laws);

  bool forget = true;
  const auto parts = all_set_partitions(0, n);
  std::set<SetPartition> images;
  for (const auto& e : es) images.insert(forgetful(e));
  forget = images.size() == parts.size();
  for (std::size_t a = 0; a < es.size() && forget; ++a)
    for (std::size_t b = 0; b < es.size(); ++b)
      if (q.poset().leq(a, b) && !forgetful(es[a]).refines(forgetful(es[b]))) forget = false;
  r.add(t + "/forgetful", "forgetful map onto partitions of {0..n} is monotone and surjective", forget);

  std::size_t verified = 0;
  bool iso = true;
  for (const auto& e : es) {
    const auto d = interval_decomposition(q, e);
    iso = iso && verify_isomorphism(d.interval.poset, d.product, d.witness);
    ++verified;
  }
  for (const auto& e : q0.elements()) {
    const auto l = lower_interval_iso_q0(q0, e);
    iso = iso && verify_isomorphism(l.source.poset, l.target, l.witness);
    ++verified;
  }
  r.add(t + "/intervals", "lower intervals split as a Dowling lattice times partition lattices", iso, {{"verified", verified}});

  if (n >= 2 && k >= 2) {
    const auto a = parse_element("0|1 2", n, g), b = parse_element("0|1 2~1", n, g);
    r.add(t + "/q0-missing-join", "two pair blocks on the same indices have no join without the zero block",
          !join_in_q0(a, b, g).has_value() && !join(a, b, g).trivial_zero_block());
  }

  const auto hq = reduced_homology(order_complex(q.poset(), true));
  r.add(t + "/homotopy", "Dowling lattice is a wedge of prod (j|G|+1) spheres", wedge(hq, n - 2, shifted_product(n, k, 1)),
        {{"expected", shifted_product(n, k, 1).str()}, {"homology", homology_json(hq)}});
}

// ---------------------------------------------------------------- building

void building_suite(const VerifyConfig& c, std::vector<CheckRecord>& out) {
  Recorder r("building", out);
  const int n = c.n;
  const GroupTable& g = c.group;
  const DowlingLattice q = build_dowling_lattice(n, g, c.cap);
  const DowlingLattice q0 = build_q0(n, g, c.cap);
  const BuildingSet ig = compute_IG(q0), jg = compute_JG(q);
  const std::string t = tag(c);

  r.add(t + "/IG-building", "one-block trivial-zero partitions form a building set", is_building_set(q0.poset(), ig.members),
        {{"members", ig.members.size()}});
  r.add(t + "/JG-building", "type-1 and type-0 elements form a building set of the Dowling lattice",
        is_building_set(q.poset(), jg.members), {{"members", jg.members.size()}});
  r.add(t + "/IG-minimal", "I^G is the minimal building set", minimal_building_set(q0.poset()) == ig.members);
  r.add(t + "/JG-minimal", "J^G is the minimal building set", minimal_building_set(q.poset()) == jg.members);

  bool drop = true;
  for (std::size_t i = 0; i < ig.members.size() && drop; ++i) {
    auto s = ig.members;
    s.erase(s.begin() + static_cast<std::ptrdiff_t>(i));
    drop = !is_building_set(q0.poset(), s);
  }
  r.add(t + "/IG-irredundant", "removing any member of I^G breaks the building set axiom", drop);

  std::set<std::string> jg_trivial;
  for (std::size_t m : jg.members)
    if (q.element(m).trivial_zero_block()) jg_trivial.insert(q.element(m).to_string());
  r.add(t + "/JG-cap-Q0", "J^G meets the trivial-zero-block part in I^G", jg_trivial == label_set(q0.poset(), ig.members));

  for (int m = 2; m <= std::min(n + 1, 5); ++m) {
    const auto pl = build_partition_lattice(m, c.cap);
    std::vector<std::size_t> one_block;
    for (std::size_t i = 0; i < pl.parts.size(); ++i) {
      int big = 0;
      for (int s : pl.parts[i].block_sizes()) big += s >= 2 ? 1 : 0;
      if (big == 1) one_block.push_back(i);
    }
    r.add("Pi" + std::to_string(m) + "/minimal", "one-block partitions are the minimal building set of the partition lattice",
          minimal_building_set(pl.poset) == one_block);
  }

  const auto ni = enumerate_nested_sets(q0.poset(), ig, false);
  const auto nj = enumerate_nested_sets(q.poset(), jg, true);
  std::set<std::set<std::string>> j_sets;
  for (const auto& x : nj.sets) j_sets.insert(label_set(q.poset(), x));
  bool inc = true;
  for (const auto& x : ni.sets) inc = inc && j_sets.count(label_set(q0.poset(), x));
  bool part = true, chain = true;
  for (const auto& x : nj.sets) {
    std::vector<std::size_t> ones, zeros;
    for (std::size_t i : x) (jg.type_of(i) == 1 ? ones : zeros).push_back(i);
    std::vector<std::size_t> in_q0;
    for (std::size_t i : ones) in_q0.push_back(q0.require(q.element(i)));
    std::sort(in_q0.begin(), in_q0.end());
    if (!in_q0.empty() && !is_nested(q0.poset(), ig, in_q0)) part = false;
    for (std::size_t a : zeros)
      for (std::size_t b : zeros) chain = chain && q.poset().comparable(a, b);
  }
  r.add(t + "/minbuild-inclusion", "I^G-nested sets are J^G-nested", inc);
  r.add(t + "/minbuild-type-one", "the type-1 part of a J^G-nested set is I^G-nested", part);
  r.add(t + "/minbuild-chain", "the type-0 part of a nested set is linearly ordered", chain);
  r.add(t + "/pairwise", "pairwise nestedness agrees with the full definition on minimal building sets",
        ni.pairwise_only == 0 && nj.pairwise_only == 0, {{"IG", ni.pairwise_only}, {"JG", nj.pairwise_only}});
}

// ---------------------------------------------------------------- trees

void trees_suite(const VerifyConfig& c, std::vector<CheckRecord>& out) {
  Recorder r("trees", out);
  const int n = c.n, k = c.group.order();
  const GroupTable& g = c.group;
  const std::string t = tag(c);
  const DowlingLattice q0 = build_q0(n, g, c.cap);
  const BuildingSet ig = compute_IG(q0);
  const SimplicialComplex sym = nested_complex(q0.poset(), ig, false);

  auto check_family = [&](const std::string& name, const std::string& anchor, const DowlingLattice& l, const BuildingSet& b,
                          bool reduced, bool dowling_trees) {
    const auto sets = enumerate_nested_sets(l.poset(), b, reduced).sets;
    bool round = true;
    std::set<std::set<std::string>> faces{{}};
    for (const auto& x : sets) {
      std::vector<DowlingElement> v;
      std::set<std::string> names;
      for (std::size_t i : x) {
        v.push_back(l.element(i));
        names.insert(l.element(i).to_string());
      }
      faces.insert(names);
      const GTree tr = dowling_trees ? nested_to_dowling_tree(v, n, g) : nested_to_tree(v, n, g);
      std::set<std::string> back;
      for (const auto& e : tree_to_nested(tr, g)) back.insert(e.to_string());
      round = round && back == names && validate(tr, g).empty();
    }
    const auto trees = enumerate_trees(n, g, dowling_trees);
    std::set<std::set<std::string>> from_trees;
    std::size_t maximal = 0;
    for (const auto& tr : trees) {
      std::set<std::string> names;
      for (const auto& e : tree_to_nested(tr, g)) names.insert(e.to_string());
      if (static_cast<int>(names.size()) == n - 1) ++maximal;
      from_trees.insert(names);
    }
    const auto cx = nested_complex(l.poset(), b, reduced);
    const std::size_t facets = cx.is_void() ? 0 : cx.facets().size();
    r.add(t + "/" + name + "-roundtrip", anchor, round, {{"nested_sets", sets.size()}});
    r.add(t + "/" + name + "-enumeration", "trees and nested sets index the same faces",
          from_trees == faces && trees.size() == faces.size() && (n < 2 || maximal == facets),
          {{"trees", trees.size()}, {"faces", faces.size()}, {"tree_facets", maximal}, {"nested_facets", facets}});

    bool contraction = true;
    for (const auto& tr : trees) {
      std::set<std::string> names;
      for (const auto& e : tree_to_nested(tr, g)) names.insert(e.to_string());
      for (int v : tr.inner_vertices()) {
        auto expected = names;
        expected.erase(sigma_of_edge(tr, g, v).to_string());
        std::set<std::string> got;
        for (const auto& e : tree_to_nested(contract_orbit(tr, g, v), g)) got.insert(e.to_string());
        contraction = contraction && got == expected;
      }
    }
    r.add(t + "/" + name + "-contraction", "contracting an inner orbit deletes its element from the nested set", contraction);
  };

  check_family("symmetric", "G-symmetric trees are the I^G-nested sets", q0, ig, false, false);
  const auto hs = reduced_homology(sym);
  r.add(t + "/symmetric-homology", "tree complex is a wedge of prod (j|G|-1) spheres", wedge(hs, n - 2, shifted_product(n, k, -1)),
        {{"expected", shifted_product(n, k, -1).str()}, {"f_vector", sym.f_vector()}, {"homology", homology_json(hs)}});
  r.add(t + "/symmetric-pure", "tree complex is pure of dimension n-2", sym.is_pure() && sym.dimension() == n - 2);

  if (k >= 2) {
    const DowlingLattice q = build_dowling_lattice(n, g, c.cap);
    const BuildingSet jg = compute_JG(q);
    const SimplicialComplex dow = nested_complex(q.poset(), jg, true);
    check_family("dowling", "Dowling trees are the reduced J^G-nested sets", q, jg, true, true);
    const auto hd = reduced_homology(dow);
    r.add(t + "/dowling-homology", "Dowling tree complex is a wedge of prod (j|G|+1) spheres",
          wedge(hd, n - 2, shifted_product(n, k, 1)),
          {{"expected", shifted_product(n, k, 1).str()}, {"f_vector", dow.f_vector()}, {"homology", homology_json(hd)}});
    r.add(t + "/dowling-pure", "Dowling tree complex is pure of dimension n-2", dow.is_pure() && dow.dimension() == n - 2);
    r.add(t + "/type-one-subcomplex", "type-1 simplices form the G-symmetric tree complex", is_subcomplex(sym, dow));
  }
}

// ---------------------------------------------------------------- subdivision

SimplicialComplex random_complex(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> vd(3, 9), fd(1, 6);
  const int v = vd(rng), count = fd(rng);
  std::uniform_int_distribution<int> sd(1, std::min(4, v));
  std::vector<std::string> labels;
  for (int i = 0; i < v; ++i) labels.push_back("x" + std::to_string(i));
  std::vector<std::vector<int>> facets;
  for (int f = 0; f < count; ++f) {
    std::vector<int> all(static_cast<std::size_t>(v));
    std::iota(all.begin(), all.end(), 0);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(static_cast<std::size_t>(sd(rng)));
    std::sort(all.begin(), all.end());
    facets.push_back(all);
  }
  return SimplicialComplex::from_facets(labels, facets);
}

void subdivision_suite(const VerifyConfig& c, std::vector<CheckRecord>& out) {
  Recorder r("subdivision", out);
  const int n = c.n;
  const GroupTable& g = c.group;
  const std::string t = tag(c);
  const DowlingLattice q = build_dowling_lattice(n, g, c.cap);
  const DowlingLattice q0 = build_q0(n, g, c.cap);

  const auto hq0 = reduced_homology(order_complex(q0.poset(), true));
  const auto hsym = reduced_homology(nested_complex(q0.poset(), compute_IG(q0), false));
  r.add(t + "/Q0-vs-trees", "tree complex is PL-homeomorphic to the order complex of the trivial-zero-block part",
        hq0.same_homology(hsym), {{"order_complex", homology_json(hq0)}, {"tree_complex", homology_json(hsym)}});
  const auto hq = reduced_homology(order_complex(q.poset(), true));
  const auto hdow = reduced_homology(nested_complex(q.poset(), compute_JG(q), true));
  r.add(t + "/Q-vs-dowling-trees", "Dowling tree complex is PL-homeomorphic to the Dowling lattice",
        hq.same_homology(hdow), {{"order_complex", homology_json(hq)}, {"tree_complex", homology_json(hdow)}});

  bool torsion_free = hq0.torsion_free() && hsym.torsion_free() && hq.torsion_free() && hdow.torsion_free();

  struct Named {
    std::string name;
    const Poset* poset;
  };
  const auto pl = build_partition_lattice(n, c.cap);
  for (const Named& l : {Named{"Q", &q.poset()}, Named{"Q0", &q0.poset()}, Named{"Pi", &pl.poset}}) {
    const bool has_top = l.poset->top().has_value();
    const auto delta = order_complex(*l.poset, true);
    const auto hdelta = reduced_homology(delta);
    const BuildingSet minimal{minimal_building_set(*l.poset), {}};
    const BuildingSet maximal{all_but_bottom(*l.poset), {}};
    const auto nmin = nested_complex(*l.poset, minimal, has_top);
    const auto nmax = nested_complex(*l.poset, maximal, has_top);
    const auto hmin = reduced_homology(nmin);
    r.add(t + "/" + l.name + "-minimal", "nested set complex of the minimal building set subdivides to the order complex",
          hmin.same_homology(hdelta), {{"f_vector", nmin.f_vector()}, {"homology", homology_json(hmin)}});
    r.add(t + "/" + l.name + "-maximal", "maximal building set gives the order complex", same_complex(nmax, delta));
    const auto fm = nmin.f_vector(), fd = delta.f_vector();
    bool dom = fm.size() == fd.size();
    for (std::size_t i = 0; dom && i < fm.size(); ++i) dom = fm[i] <= fd[i];
    r.add(t + "/" + l.name + "-dominance", "subdivision only adds faces", dom, {{"nested", fm}, {"order_complex", fd}});
    torsion_free = torsion_free && hdelta.torsion_free() && hmin.torsion_free();
  }
  r.add(t + "/torsion-free", "all complexes built from these lattices are torsion-free", torsion_free);

  std::mt19937_64 rng(c.seed);
  int ok = 0;
  for (int i = 0; i < c.trials; ++i) {
    const auto k = random_complex(rng);
    const auto faces = k.all_faces();
    std::vector<Face> nonempty(faces.begin() + 1, faces.end());
    const Face& f = nonempty[std::uniform_int_distribution<std::size_t>(0, nonempty.size() - 1)(rng)];
    ok += reduced_homology(stellar_subdivide(k, f, "apex")).same_homology(reduced_homology(k)) ? 1 : 0;
  }
  r.add("random/stellar", "stellar subdivision preserves homology", ok == c.trials, {{"trials", c.trials}, {"passed", ok}, {"seed", c.seed}});
}

// ---------------------------------------------------------------- filtration

void filtration_suite(const VerifyConfig& c, std::vector<CheckRecord>& out) {
  Recorder r("filtration", out);
  const int n = c.n;
  if (n < 2) return;
  const std::string t = tag(c);
  const FiltrationContext ctx = make_filtration_context(n, c.group, c.cap);
  const auto k0 = build_Km(ctx, 0);
  const auto sym = build_tree_complex(n, c.group, c.cap);
  bool mono = true, cm = true;
  for (int m = 0; m + 1 <= n - 1; ++m) mono = mono && is_subcomplex(build_Km(ctx, m), build_Km(ctx, m + 1));
  r.add(t + "/K-endpoints", "K_0 is the type-1 subcomplex and K_{n-1} the whole complex",
        same_complex(k0, sym) && same_complex(build_Km(ctx, n - 1), ctx.complex) && mono);
  for (int m = 0; m <= n - 1; ++m) {
    const auto km = build_Km(ctx, m);
    const bool ok = cm_link_check(km);
    cm = cm && ok;
    r.add(t + "/K" + std::to_string(m) + "-cm", "K_m is Cohen-Macaulay of dimension n-2", ok, {{"f_vector", km.f_vector()}});
  }

  const auto simplices = type0_simplices(ctx);
  std::vector<std::pair<std::string, CheckRecord>> recs;
  for (std::size_t i = 0; i < simplices.size(); ++i) {
    std::vector<DowlingElement> x;
    for (int v : simplices[i]) x.push_back(ctx.element_of(v));
    const auto d = join_decomposition(ctx, x);
    const auto h = reduced_homology(d.link);
    const int m = d.chain.length();
    const bool inside = m == 0 || is_subcomplex(d.link, build_Km(ctx, m - 1));
    const bool pass = wedge(h, n - 3, d.chain.product()) && d.isomorphic && inside;
    Json data;
    Json chain = Json::array();
    for (const auto& w : d.chain.zero_blocks) chain.push_back(w);
    data["chain"] = chain;
    data["p"] = d.chain.gaps();
    Json qs = Json::array();
    for (const auto& qv : d.chain.factors()) qs.push_back(qv.str());
    data["q"] = qs;
    data["Q"] = d.chain.product().str();
    data["betti_of_link"] = homology_json(h);
    data["join_iso"] = d.isomorphic;
    data["boolean_factor_homology"] = d.boolean_factor_homology;
    data["link_in_previous_K"] = inside;
    r.add(t + "/link/" + d.chain.to_string(), "link of a type-0 simplex is a wedge of Q(omega) spheres of dimension n-3", pass,
          std::move(data));
  }
}

// ---------------------------------------------------------------- identities

void identities_suite(const VerifyConfig& c, std::vector<CheckRecord>& out) {
  Recorder r("identities", out);
  for (int n = 2; n <= c.nmax; ++n)
    for (int k = 1; k <= c.kmax; ++k) {
      const auto s = chain_sum(n, k);
      const std::string id = "n" + std::to_string(n) + "-k" + std::to_string(k);
      r.add("chain-sum/" + id, "chains of subsets count the gap between the two products", s.lhs == s.rhs,
            {{"n", n}, {"k", k}, {"lhs", s.lhs.str()}, {"rhs", s.rhs.str()}, {"equal", s.lhs == s.rhs}});
      const auto rep = numerology_report(n, k);
      r.info("numerology/" + id, "column-height formula under its literal reading",
             {{"n", n}, {"k", k}, {"lhs", rep.lhs.str()}, {"rhs", rep.rhs_literal.str()}, {"equal", rep.equal}});
    }
}

}  // namespace

std::size_t VerifyReport::failures() const {
  return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const CheckRecord& r) { return !r.pass && !r.informational; }));
}

Json VerifyReport::to_json(const VerifyConfig& config) const {
  Json j;
  j["config"] = {{"n", config.n}, {"group", config.group.table()}, {"cap", config.cap}, {"nmax", config.nmax},
                 {"kmax", config.kmax}, {"trials", config.trials}, {"seed", config.seed}};
  Json recs = Json::array();
  std::size_t passed = 0, info = 0;
  for (const auto& r : records) {
    recs.push_back({{"suite", r.suite}, {"id", r.id}, {"anchor", r.anchor}, {"pass", r.pass},
                    {"informational", r.informational}, {"data", r.data}});
    if (r.informational) ++info;
    else if (r.pass) ++passed;
  }
  j["records"] = std::move(recs);
  j["summary"] = {{"passed", passed}, {"failed", failures()}, {"informational", info}};
  return j;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"lattice", "building", "trees", "subdivision", "filtration", "identities"};
  return names;
}

VerifyReport run_suites(const VerifyConfig& config, const std::vector<std::string>& suites) {
  std::set<std::string> chosen;
  for (const auto& s : suites) {
    if (s == "all") chosen.insert(suite_names().begin(), suite_names().end());
    else if (std::find(suite_names().begin(), suite_names().end(), s) != suite_names().end()) chosen.insert(s);
    else throw DomainError("unknown suite '" + s + "'");
  }
  if (config.n < 1) throw DomainError("n must be at least 1");
  static const std::map<std::string, std::function<void(const VerifyConfig&, std::vector<CheckRecord>&)>> run{
      {"lattice", lattice_suite}, {"building", building_suite}, {"trees", trees_suite},
      {"subdivision", subdivision_suite}, {"filtration", filtration_suite}, {"identities", identities_suite}};
  VerifyReport rep;
  for (const auto& s : chosen) run.at(s)(config, rep.records);
  std::stable_sort(rep.records.begin(), rep.records.end(), [](const CheckRecord& a, const CheckRecord& b) {
    return std::tie(a.suite, a.id) < std::tie(b.suite, b.id);
  });
  return rep;
}

}  // namespace dowling
