// Command-line front end: build, homology, verify.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "dowling/errors.hpp"
#include "dowling/filtration.hpp"
#include "dowling/io.hpp"
#include "dowling/lattice.hpp"
#include "dowling/nested.hpp"
#include "dowling/trees.hpp"
#include "dowling/verify.hpp"

namespace {

using dowling::Json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  int n = 3;
  std::string group = "cyclic:2";
  Json group_json;  // from --config
  std::size_t cap = dowling::kDefaultSizeCap;
  std::string object;
  std::string format = "json";
  std::string out;
  std::vector<std::string> suites;
  int nmax = 7;
  int kmax = 5;
  int trials = 200;
  std::uint64_t seed = 1;
  std::string poset = "lattice";
  std::string building = "minimal";
  int m = 0;
  std::string face;
  std::string config;
};

dowling::GroupTable group_of(const Options& o) {
  if (!o.group_json.is_null()) return dowling::group_from_json(o.group_json);
  return dowling::parse_group_spec(o.group);
}

// Fills options not given on the command line from a JSON config file.
void apply_config(Options& o, CLI::App& app) {
  if (o.config.empty()) return;
  std::ifstream in(o.config);
  if (!in) throw UsageError("cannot read config " + o.config);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("config is not JSON: ") + e.what());
  }
  auto given = [&](const std::string& name) {
    for (CLI::App* sub : app.get_subcommands())
      if (sub->get_option_no_throw("--" + name) && sub->count("--" + name)) return true;
    return false;
  };
  try {
    if (j.contains("n") && !given("n")) o.n = j["n"].get<int>();
    if (j.contains("group") && !given("group")) {
      if (j["group"].is_string()) o.group = j["group"].get<std::string>();
      else o.group_json = j["group"];
    }
    if (j.contains("cap") && !given("cap")) o.cap = j["cap"].get<std::size_t>();
    if (j.contains("object") && !given("object")) o.object = j["object"].get<std::string>();
    if (j.contains("format") && !given("format")) o.format = j["format"].get<std::string>();
    if (j.contains("suite") && !given("suite")) {
      if (j["suite"].is_string()) o.suites = {j["suite"].get<std::string>()};
      else o.suites = j["suite"].get<std::vector<std::string>>();
    }
    if (j.contains("nmax") && !given("nmax")) o.nmax = j["nmax"].get<int>();
    if (j.contains("kmax") && !given("kmax")) o.kmax = j["kmax"].get<int>();
    if (j.contains("trials") && !given("trials")) o.trials = j["trials"].get<int>();
    if (j.contains("seed") && !given("seed")) o.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("poset") && !given("poset")) o.poset = j["poset"].get<std::string>();
    if (j.contains("building") && !given("building")) o.building = j["building"].get<std::string>();
    if (j.contains("m") && !given("m")) o.m = j["m"].get<int>();
    if (j.contains("face") && !given("face")) o.face = j["face"].get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("bad config field: ") + e.what());
  }
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw UsageError("cannot write " + o.out);
  f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

struct PosetChoice {
  std::optional<dowling::DowlingLattice> lattice;
  std::optional<dowling::PartitionLattice> partitions;
  const dowling::Poset& poset() const { return lattice ? lattice->poset() : partitions->poset; }
};

PosetChoice choose_poset(const Options& o, const dowling::GroupTable& g) {
  PosetChoice c;
  if (o.poset == "lattice") c.lattice.emplace(dowling::build_dowling_lattice(o.n, g, o.cap));
  else if (o.poset == "q0") c.lattice.emplace(dowling::build_q0(o.n, g, o.cap));
  else if (o.poset == "partition") c.partitions.emplace(dowling::build_partition_lattice(o.n, o.cap));
  else throw UsageError("--poset must be lattice, q0 or partition");
  return c;
}

dowling::BuildingSet choose_building(const Options& o, const PosetChoice& c) {
  const auto& p = c.poset();
  if (o.building == "minimal") return {dowling::minimal_building_set(p), {}};
  if (o.building == "maximal") {
    std::vector<std::size_t> all;
    for (std::size_t i = 0; i < p.size(); ++i)
      if (i != *p.bottom()) all.push_back(i);
    return {all, {}};
  }
  if (o.building == "IG") {
    if (!c.lattice || !c.lattice->is_q0()) throw UsageError("--building IG needs --poset q0");
    return dowling::compute_IG(*c.lattice);
  }
  if (o.building == "JG") {
    if (!c.lattice || c.lattice->is_q0()) throw UsageError("--building JG needs --poset lattice");
    return dowling::compute_JG(*c.lattice);
  }
  throw UsageError("--building must be minimal, maximal, IG or JG");
}

std::vector<dowling::DowlingElement> parse_face(const Options& o, const dowling::GroupTable& g) {
  std::vector<dowling::DowlingElement> x;
  for (const auto& s : split(o.face, ';')) x.push_back(dowling::parse_element(s, o.n, g));
  return x;
}

bool is_complex_object(const std::string& obj) {
  return obj == "tree-complex" || obj == "dowling-tree-complex" || obj == "nested-complex" || obj == "order-complex" ||
         obj == "km" || obj == "link";
}

dowling::SimplicialComplex build_complex(const Options& o, const dowling::GroupTable& g) {
  if (o.object == "tree-complex") return dowling::build_tree_complex(o.n, g, o.cap);
  if (o.object == "dowling-tree-complex") return dowling::build_dowling_tree_complex(o.n, g, o.cap);
  if (o.object == "nested-complex") {
    const auto c = choose_poset(o, g);
    const auto b = choose_building(o, c);
    if (!dowling::is_building_set(c.poset(), b.members)) throw UsageError("the chosen set is not a building set");
    return dowling::nested_complex(c.poset(), b, c.poset().top().has_value());
  }
  if (o.object == "order-complex") return dowling::order_complex(choose_poset(o, g).poset(), true);
  if (o.object == "km") return dowling::build_Km(dowling::make_filtration_context(o.n, g, o.cap), o.m);
  if (o.object == "link") {
    const auto ctx = dowling::make_filtration_context(o.n, g, o.cap);
    return dowling::link_in_Km(ctx, parse_face(o, g));
  }
  throw UsageError("unknown complex object '" + o.object + "'");
}

int cmd_build(const Options& o) {
  const auto g = group_of(o);
  if (o.format != "json" && o.format != "dot") throw UsageError("--format must be json or dot");
  const bool dot = o.format == "dot";
  if (o.object == "lattice" || o.object == "q0" || o.object == "partition") {
    Options p = o;
    p.poset = o.object;
    const auto c = choose_poset(p, g);
    emit(o, dot ? dowling::poset_to_dot(c.poset()) : dump(dowling::poset_to_json(c.poset())));
    std::cerr << o.object << ": " << c.poset().size() << " elements\n";
    return kExitPass;
  }
  if (o.object == "building-set") {
    const auto c = choose_poset(o, g);
    const auto b = choose_building(o, c);
    emit(o, dump(dowling::building_set_to_json(c.poset(), b)));
    std::cerr << "building set: " << b.members.size() << " members\n";
    return kExitPass;
  }
  if (o.object == "tree") {
    const auto x = parse_face(o, g);
    const bool zero = std::any_of(x.begin(), x.end(), [](const auto& e) { return !e.trivial_zero_block(); });
    const auto t = zero ? dowling::nested_to_dowling_tree(x, o.n, g) : dowling::nested_to_tree(x, o.n, g);
    emit(o, dot ? dowling::tree_to_dot(t) : dump(dowling::tree_to_json(t)));
    std::cerr << "tree: " << t.size() << " vertices\n";
    return kExitPass;
  }
  if (!is_complex_object(o.object)) throw UsageError("unknown object '" + o.object + "'");
  const auto k = build_complex(o, g);
  emit(o, dot ? dowling::complex_to_dot(k) : dump(dowling::complex_to_json(k)));
  std::cerr << o.object << ": " << k.num_vertices() << " vertices, dimension " << k.dimension() << "\n";
  return kExitPass;
}

int cmd_homology(const Options& o) {
  const auto g = group_of(o);
  if (!is_complex_object(o.object)) throw UsageError("homology needs a complex object");
  const auto k = build_complex(o, g);
  const auto h = dowling::reduced_homology(k);
  Json j;
  j["object"] = o.object;
  j["n"] = o.n;
  j.update(dowling::homology_to_json(k, h));
  emit(o, dump(j));
  std::cerr << o.object << ": reduced Betti";
  for (auto b : h.reduced_betti) std::cerr << " " << b;
  std::cerr << (h.torsion_free() ? ", torsion-free\n" : ", with torsion\n");
  return kExitPass;
}

int cmd_verify(const Options& o) {
  dowling::VerifyConfig c;
  c.n = o.n;
  c.group = group_of(o);
  c.cap = o.cap;
  c.nmax = o.nmax;
  c.kmax = o.kmax;
  c.trials = o.trials;
  c.seed = o.seed;
  if (c.nmax < 2 || c.kmax < 1 || c.trials < 0) throw UsageError("--nmax must be >= 2, --kmax >= 1, --trials >= 0");
  std::vector<std::string> suites;
  for (const auto& s : o.suites)
    for (const auto& part : split(s, ',')) suites.push_back(part);
  if (suites.empty()) suites.push_back("all");
  const auto rep = dowling::run_suites(c, suites);
  emit(o, dump(rep.to_json(c)));
  std::map<std::string, std::pair<std::size_t, std::size_t>> per_suite;
  for (const auto& r : rep.records) {
    if (r.informational) continue;
    auto& [pass, total] = per_suite[r.suite];
    ++total;
    if (r.pass) ++pass;
    if (!r.pass) std::cerr << "FAIL " << r.suite << " " << r.id << ": " << r.anchor << "\n";
  }
  for (const auto& [s, pt] : per_suite) std::cerr << s << ": " << pt.first << "/" << pt.second << " passed\n";
  return rep.failures() == 0 ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dowling lattices, nested set complexes and tree spaces"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "rank of the Dowling lattice")->check(CLI::Range(1, 12));
    sub->add_option("--group", o.group, "cyclic:M or table:FILE");
    sub->add_option("--cap", o.cap, "maximal number of enumerated elements")->check(CLI::PositiveNumber);
    sub->add_option("--out", o.out, "output file (default stdout)");
    sub->add_option("--config", o.config, "JSON file with default option values");
  };
  auto objects = [&](CLI::App* sub) {
    sub->add_option("--object", o.object,
                    "lattice | q0 | partition | building-set | tree | tree-complex | dowling-tree-complex | nested-complex | "
                    "order-complex | km | link");
    sub->add_option("--poset", o.poset, "lattice | q0 | partition");
    sub->add_option("--building", o.building, "minimal | maximal | IG | JG");
    sub->add_option("--m", o.m, "filtration index for km");
    sub->add_option("--face", o.face, "elements separated by ';', e.g. \"0|1 2~1|3;0 1 2|3\"");
  };

  CLI::App* build = app.add_subcommand("build", "export an object as JSON or DOT");
  common(build);
  objects(build);
  build->add_option("--format", o.format, "json | dot");

  CLI::App* homology = app.add_subcommand("homology", "reduced integral homology of a complex");
  common(homology);
  objects(homology);

  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  common(verify);
  verify->add_option("--suite", o.suites, "lattice, building, trees, subdivision, filtration, identities or all");
  verify->add_option("--nmax", o.nmax, "largest n for the identities");
  verify->add_option("--kmax", o.kmax, "largest group order for the identities");
  verify->add_option("--trials", o.trials, "random stellar subdivision trials");
  verify->add_option("--seed", o.seed, "seed for random trials");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    apply_config(o, app);
    if ((build->parsed() || homology->parsed()) && o.object.empty()) throw UsageError("--object is required");
    if (build->parsed()) return cmd_build(o);
    if (homology->parsed()) return cmd_homology(o);
    return cmd_verify(o);
  } catch (const dowling::ResourceError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kExitResource;
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kExitUsage;
  } catch (const dowling::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
