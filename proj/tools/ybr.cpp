#include "ybr/dims.hpp"
#include "ybr/fuse.hpp"
#include "ybr/hecke.hpp"
#include "ybr/relations.hpp"
#include "ybr/skein.hpp"
#include "ybr/tower.hpp"
#include "ybr/young.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

using namespace ybr;
using nlohmann::json;

namespace {

struct Opts {
  int N = 0;
  int boxes = 0;
  int k = 1;
  int l = 0;
  int m = 0;
  int depth = -1;
  int max_cells = 6;
  int strands = 0;
  int probes = 40;
  std::uint64_t seed = 1;
  int jobs = 1;
  std::optional<int> float_digits;
  bool dot = false;
  bool as_json = false;
  bool corrected = false;
  bool allow_four = false;
  std::string text;
  std::string suite;
};

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string error_kind(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
  if (dynamic_cast<const IndexOutOfRange*>(&e)) return "IndexOutOfRange";
  if (dynamic_cast<const MalformedLink*>(&e)) return "MalformedLink";
  if (dynamic_cast<const NonPlanarWiring*>(&e)) return "NonPlanarWiring";
  if (dynamic_cast<const NotInY*>(&e)) return "NotInY";
  if (dynamic_cast<const InvalidParams*>(&e)) return "InvalidParams";
  if (dynamic_cast<const DivisibilityViolated*>(&e)) return "DivisibilityViolated";
  if (dynamic_cast<const BoxesAboveCutoff*>(&e)) return "BoxesAboveCutoff";
  if (dynamic_cast<const RankDeficiencyUnexpected*>(&e)) return "RankDeficiencyUnexpected";
  if (dynamic_cast<const BlockSplitFailure*>(&e)) return "BlockSplitFailure";
  if (dynamic_cast<const CertificationInconclusive*>(&e)) return "CertificationInconclusive";
  if (dynamic_cast<const PoleAtRootOfUnity*>(&e)) return "PoleAtRootOfUnity";
  if (dynamic_cast<const UsageError*>(&e)) return "UsageError";
  return "Error";
}

void require(bool ok, const std::string& what) {
  if (!ok) throw UsageError(what);
}

std::string fmt(double v, int digits) {
  std::ostringstream os;
  os << std::setprecision(digits) << v;
  return os.str();
}

double theta_of(int N) { return M_PI / (2.0 * N + 2.0); }

// ---- dims, graph, orbits, indices

int run_dims(const Opts& o) {
  require(o.N >= 0, "--N must be nonnegative");
  require(o.max_cells >= 0 && o.max_cells <= 12, "--max-cells must be in 0..12");
  DimTable T = dim_table(o.max_cells, o.N, o.N > 0 ? theta_of(o.N) : 0.3);
  std::cout << (o.as_json ? T.json(o.float_digits) + "\n" : T.csv(o.float_digits));
  return 0;
}

int run_graph(const Opts& o) {
  require(o.N >= 0, "--N must be nonnegative");
  LatticeGraph G;
  if (o.N == 0) {
    int depth = o.depth < 0 ? 6 : o.depth;
    require(depth <= 20, "--depth must be at most 20");
    G = full_lattice(depth);
  } else {
    G = o.depth < 0 ? truncated_lattice(o.N) : truncated_lattice(o.N, o.depth);
  }
  if (o.as_json) std::cout << G.json() << "\n";
  else if (o.dot) std::cout << G.dot();
  else {
    for (const auto& v : G.vertices) std::cout << (v.empty() ? "0" : v.str()) << "\n";
  }
  return 0;
}

int run_orbits(const Opts& o) {
  require(o.N >= 1, "--N must be positive");
  require(o.k >= 0, "--k must be nonnegative");
  auto G = truncated_lattice(o.N);
  auto autos = graph_automorphisms(G);
  json j;
  j["N"] = o.N;
  j["k"] = o.k;
  j["automorphism_group_order"] = autos.size();
  std::set<YoungDiagram> seen;
  for (const auto& lam : G.vertices) {
    if (seen.count(lam)) continue;
    json orbit = json::array();
    YoungDiagram cur = lam;
    do {
      seen.insert(cur);
      orbit.push_back(cur.rows);
      for (int t = 0; t < o.k; ++t) cur = g_tensor(cur, o.N);
    } while (cur != lam);
    j["orbits"].push_back(orbit);
  }
  if (o.as_json) std::cout << j.dump() << "\n";
  else {
    std::cout << "automorphisms " << autos.size() << "\n";
    for (const auto& orb : j["orbits"]) {
      std::string line;
      for (const auto& r : orb) {
        YoungDiagram d(r.get<std::vector<int>>());
        line += (line.empty() ? "" : " -> ") + (d.empty() ? std::string("0") : d.str());
      }
      std::cout << line << "\n";
    }
  }
  return 0;
}

int run_indices(const Opts& o) {
  require(o.N >= 1, "--N must be positive");
  std::vector<int> ms;
  if (o.m > 0) ms.push_back(o.m);
  else
    for (int m = 1; 2 * m - 1 <= o.N + 1; ++m)
      if ((o.N + 1) % (2 * m - 1) == 0) ms.push_back(m);
  json arr = json::array();
  for (int m : ms) {
    auto S = subfactor_index(o.N, m);
    if (o.as_json) arr.push_back(json::parse(S.json()));
    else
      std::cout << "N=" << S.N << " m=" << S.m << " lambda=" << (S.lambda.empty() ? "0" : S.lambda.str())
                << " stabilizer=" << S.stabilizer_order << " index=" << S.value.str() << " ~ "
                << fmt(S.approx, o.float_digits.value_or(12)) << (S.degenerate ? " (degenerate)" : "") << "\n";
  }
  if (o.as_json) std::cout << arr.dump() << "\n";
  return 0;
}

// ---- fusion

int run_fusion(const std::string& sub, const Opts& o) {
  require(o.N >= 1, "--N must be positive");
  if (sub == "group") {
    auto G = invertible_group(o.N);
    if (o.as_json) std::cout << G.json() << "\n";
    else
      for (std::size_t a = 0; a < G.table.size(); ++a) {
        for (std::size_t b = 0; b < G.table[a].size(); ++b) std::cout << (b ? " " : "") << G.table[a][b];
        std::cout << "\n";
      }
    return G.associative() && G.cyclic() ? 0 : 1;
  }
  if (sub == "equivariant") {
    auto E = equivariantization_graph(o.N);
    if (o.as_json) std::cout << E.json() << "\n";
    else std::cout << E.dot();
    return 0;
  }
  auto Q = quotient_simples(o.N, o.k, o.l);
  if (sub == "simples") {
    if (o.as_json) std::cout << Q.json() << "\n";
    else
      for (std::size_t s = 0; s < Q.simples.size(); ++s)
        std::cout << Q.name(static_cast<int>(s)) << "," << Q.simples[s].grade << "\n";
    return 0;
  }
  auto B = graded_branching(Q);
  if (o.as_json) std::cout << B.json() << "\n";
  else if (o.dot) std::cout << B.dot();
  else
    for (std::size_t s = 0; s < Q.simples.size(); ++s) std::cout << Q.name(static_cast<int>(s)) << " x [1] = " << B.term_str(static_cast<int>(s)) << "\n";
  return 0;
}

// ---- skein

std::string field_line(const FieldElem& v, const Opts& o) {
  std::string s = v.str();
  if (o.float_digits && o.N > 0) {
    auto c = specialize(v, o.N).to_complex();
    s += "," + fmt(c.real(), *o.float_digits) + "," + fmt(c.imag(), *o.float_digits);
  }
  return s;
}

std::vector<std::vector<FieldElem>> cached_gram(const std::vector<Word>& W, int m, int jobs) {
  const char* dir = std::getenv("YBR_CACHE_DIR");
  std::filesystem::path file;
  if (dir && *dir) {
    file = std::filesystem::path(dir) / ("gram-" + std::to_string(m) + ".json");
    if (std::filesystem::is_regular_file(file)) {
      std::ifstream in(file);
      json j = json::parse(in, nullptr, false);
      if (!j.is_discarded() && j["gram"].size() == W.size()) {
        std::vector<std::vector<FieldElem>> G;
        for (const auto& row : j["gram"]) {
          G.emplace_back();
          for (const auto& x : row) G.back().push_back(FieldElem::parse(x.get<std::string>()));
        }
        return G;
      }
    }
  }
  auto G = gram(W, m, jobs);
  if (!file.empty()) {
    json j;
    for (const auto& row : G) {
      json r = json::array();
      for (const auto& x : row) r.push_back(x.str());
      j["gram"].push_back(r);
    }
    std::filesystem::create_directories(file.parent_path());
    std::ofstream(file) << j.dump() << "\n";
  }
  return G;
}

int run_skein(const std::string& sub, const Opts& o) {
  if (sub == "eval") {
    std::string text = o.text;
    if (std::filesystem::is_regular_file(text)) {
      std::ifstream in(text);
      text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    auto d = ClosedDiagram::parse(text);
    std::cout << field_line(zeta(d), o) << "\n";
    return 0;
  }
  if (sub == "homfly") {
    OrientedLink L;
    if (o.strands > 0) {
      std::vector<int> word;
      std::istringstream is(o.text);
      for (int x; is >> x;) {
        require(x != 0 && std::abs(x) < o.strands, "braid letter out of range");
        word.push_back(x);
      }
      L = OrientedLink::braid_closure(o.strands, word);
    } else {
      L = OrientedLink::parse_pd(o.text);
    }
    std::cout << field_line(homfly(L), o) << "\n";
    return 0;
  }
  require(o.boxes >= 1 && o.boxes <= 6, "--boxes must be in 1..6");
  if (sub == "parse") {
    std::cout << AlgElem::parse(o.text, o.boxes).str() << "\n";
    return 0;
  }
  if (sub == "trace") {
    std::cout << field_line(word_trace(AlgElem::parse(o.text, o.boxes)), o) << "\n";
    return 0;
  }
  if (sub == "gram") {
    require(o.boxes <= 3 || o.allow_four, "--boxes above 3 needs --allow-four-boxes");
    auto W = brauer_words(o.boxes);
    auto G = cached_gram(W, o.boxes, o.jobs);
    json j;
    for (const auto& w : W) j["words"].push_back(word_str(w));
    j["boxes"] = o.boxes;
    j["N"] = o.N;
    auto emit = [&](const auto& M) {
      for (const auto& row : M) {
        json r = json::array();
        for (const auto& x : row) r.push_back(x.str());
        j["gram"].push_back(r);
      }
    };
    if (o.N > 0) emit(specialize(G, o.N));
    else emit(G);
    std::cout << j.dump() << "\n";
    return 0;
  }
  throw UsageError("unknown skein command " + sub);
}

// ---- tower

template <class S>
void print_blocks(const BratteliData<S>& B, const Opts& o) {
  if (o.as_json) {
    std::cout << B.json() << "\n";
    return;
  }
  if (o.dot) {
    std::cout << B.dot();
    return;
  }
  std::cout << "boxes,label,size,trace";
  if (o.float_digits && o.N > 0) std::cout << ",float";
  std::cout << "\n";
  for (std::size_t m = 0; m < B.levels.size(); ++m)
    for (const auto& b : B.levels[m]) {
      std::cout << m << ",\"" << (b.label.empty() ? "0" : b.label.str()) << "\"," << b.size << ",\"" << b.trace.str() << "\"";
      if constexpr (std::is_same_v<S, CycloElem>)
        if (o.float_digits) std::cout << "," << fmt(b.trace.to_complex().real(), *o.float_digits);
      std::cout << "\n";
    }
}

int run_tower(const std::string& sub, const Opts& o) {
  require(o.boxes >= 0, "--boxes must be nonnegative");
  require(o.N >= 0, "--N must be nonnegative");
  TowerOptions opt{o.jobs, o.allow_four};
  if (sub == "build") {
    if (o.N == 0) std::cout << build_generic(o.boxes, opt).json() << "\n";
    else std::cout << build_at(o.boxes, o.N, opt).json() << "\n";
    return 0;
  }
  if (sub == "bratteli") {
    int ok = 0;
    if (o.N == 0) {
      auto B = bratteli_generic(o.boxes, opt);
      print_blocks(B, o);
      ok = B.lattice_mismatches().empty() ? 0 : 1;
    } else {
      auto B = bratteli_at(o.boxes, o.N, opt);
      print_blocks(B, o);
      ok = B.lattice_mismatches().empty() ? 0 : 1;
    }
    return ok;
  }
  if (sub == "certify") {
    require(o.N >= 1, "certify needs --N");
    auto rep = positivity_certificate(build_at(o.boxes, o.N, opt));
    std::cout << rep.json() << "\n";
    return rep.positive_definite && rep.schur_complement_zero ? 0 : 1;
  }
  throw UsageError("unknown tower command " + sub);
}

// ---- verify

struct Check {
  std::string name;
  bool pass;
  std::string detail;
};

std::vector<Check> relation_checks(const std::vector<Relation>& rels, const std::vector<Word>& probes) {
  std::vector<Check> out;
  for (const auto& r : rels) {
    bool ok = verify_relation(r.lhs, r.rhs, probes);
    std::string detail = r.corrected ? "corrected form" : "";
    if (!ok)
      if (auto w = inconsistency_witness(r, probes)) detail = w->str();
    out.push_back({r.family + ": " + r.text, ok, detail});
  }
  return out;
}

int run_verify(const Opts& o) {
  std::vector<Check> checks;
  const std::string& s = o.suite;
  bool all = s == "all";
  int boxes = o.boxes > 0 ? o.boxes : 3;
  require(boxes >= 2 && boxes <= 4, "--boxes must be in 2..4");
  require(boxes <= 3 || s == "far-commutation", "only far-commutation runs at 4 boxes");
  auto probes_for = [&](int m) {
    auto all_words = brauer_words(m);
    return m <= 3 ? all_words : sample_probes(all_words, static_cast<std::size_t>(o.probes), o.seed);
  };
  if (s == "r-squared" || all) {
    for (int m = 2; m <= boxes; ++m) {
      auto c = relation_checks(r_squared_relations(m), probes_for(m));
      checks.insert(checks.end(), c.begin(), c.end());
    }
  }
  if (s == "yang-baxter" || all) {
    require(boxes >= 3, "yang-baxter needs --boxes 3");
    auto c = relation_checks({yang_baxter_relation()}, probes_for(3));
    checks.insert(checks.end(), c.begin(), c.end());
  }
  if (s == "local" || all) {
    auto c = relation_checks(local_relations(std::min(boxes, 3), o.corrected || all), probes_for(std::min(boxes, 3)));
    checks.insert(checks.end(), c.begin(), c.end());
  }
  if (s == "far-commutation") {
    require(boxes >= 4, "far-commutation needs --boxes 4");
    auto c = relation_checks(far_commutation_relations(boxes), probes_for(boxes));
    checks.insert(checks.end(), c.begin(), c.end());
  }
  if (s == "positivity" || (all && o.N > 0)) {
    require(o.N >= 1, "positivity needs --N");
    for (int m = 1; m <= std::min(boxes, 3); ++m) {
      auto rep = positivity_certificate(build_at(m, o.N, {o.jobs, false}));
      checks.push_back({"positivity m=" + std::to_string(m) + " N=" + std::to_string(o.N),
                        rep.positive_definite && rep.schur_complement_zero,
                        "rank " + std::to_string(rep.rank) + ", kernel " + std::to_string(rep.kernel_dim)});
    }
  }
  if (checks.empty()) throw UsageError("unknown suite " + s);
  bool ok = true;
  json j = json::array();
  for (const auto& c : checks) {
    ok = ok && c.pass;
    if (o.as_json) j.push_back({{"check", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    else std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : "  [" + c.detail + "]") << "\n";
  }
  if (o.as_json) std::cout << j.dump() << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the Yang-Baxter relation planar algebra"};
  app.require_subcommand(1);
  Opts o;
  std::string sub;

  auto common = [&](CLI::App* c) {
    c->add_option("--N", o.N, "level: q = exp(i pi/(2N+2)); 0 means generic q");
    c->add_option("--seed", o.seed, "seed for probe sampling");
    c->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1, 256));
    c->add_option("--float", o.float_digits, "add numeric columns with this many digits")->check(CLI::Range(1, 40));
    c->add_flag("--dot", o.dot, "emit DOT");
    c->add_flag("--json", o.as_json, "emit JSON");
  };

  auto* dims = app.add_subcommand("dims", "quantum dimensions of Young diagrams");
  common(dims);
  dims->add_option("--max-cells", o.max_cells, "largest diagram size");

  auto* graph = app.add_subcommand("graph", "Young lattice or YL(N)");
  common(graph);
  graph->add_option("--depth", o.depth, "largest diagram size");

  auto* orbits = app.add_subcommand("orbits", "orbits of Y(N) under the grading object and Aut(YL(N))");
  common(orbits);
  orbits->add_option("--k", o.k, "power of the grading object");

  auto* indices = app.add_subcommand("indices", "subfactor indices from odd subgroups of Z_{N+1}");
  common(indices);
  indices->add_option("--m", o.m, "subgroup order 2m-1");

  auto* fusion = app.add_subcommand("fusion", "fusion combinatorics");
  fusion->alias("fuse");
  common(fusion);
  fusion->add_option("command", sub, "group | equivariant | simples | branch | indices")->required();
  fusion->add_option("--k", o.k, "power of the antisymmetrizer grading");
  fusion->add_option("--l", o.l, "power of the Jones projection");
  fusion->add_option("--m", o.m, "subgroup order 2m-1 for indices");

  auto* skein = app.add_subcommand("skein", "closed diagrams, links and box elements");
  common(skein);
  skein->add_option("command", sub, "eval | homfly | parse | trace | gram")->required();
  skein->add_option("input", o.text, "diagram (text or file), PD code, braid word or element");
  skein->add_option("--boxes", o.boxes, "box size");
  skein->add_option("--strands", o.strands, "read the input as a braid word on this many strands");
  skein->add_flag("--allow-four-boxes", o.allow_four, "permit 4-box Gram matrices");

  auto* tower = app.add_subcommand("tower", "algebra tower reconstruction");
  common(tower);
  tower->add_option("command", sub, "build | bratteli | certify")->required();
  tower->add_option("--boxes", o.boxes, "box size (largest level for bratteli)")->required();
  tower->add_flag("--allow-four-boxes", o.allow_four, "permit 4 boxes");

  auto* verify = app.add_subcommand("verify", "relation and positivity suites");
  common(verify);
  verify->add_option("suite", o.suite, "r-squared | yang-baxter | local | far-commutation | positivity | all")->required();
  verify->add_option("--boxes", o.boxes, "box size");
  verify->add_option("--probes", o.probes, "sampled probes at 4 boxes");
  verify->add_flag("--corrected", o.corrected, "check the corrected forms of families L10 to L13");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << json{{"error", "UsageError"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  }

  try {
    if (*dims) return run_dims(o);
    if (*graph) return run_graph(o);
    if (*orbits) return run_orbits(o);
    if (*indices) return run_indices(o);
    if (*fusion) {
      if (sub == "indices") return run_indices(o);
      require(sub == "group" || sub == "equivariant" || sub == "simples" || sub == "branch", "unknown fusion command " + sub);
      return run_fusion(sub, o);
    }
    if (*skein) return run_skein(sub, o);
    if (*tower) return run_tower(sub, o);
    if (*verify) return run_verify(o);
  } catch (const std::exception& e) {
    std::cerr << json{{"error", error_kind(e)}, {"message", e.what()}}.dump() << "\n";
    return dynamic_cast<const UsageError*>(&e) ? 2 : 1;
  }
  return 2;
}
