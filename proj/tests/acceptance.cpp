#include "ybr/dims.hpp"
#include "ybr/fuse.hpp"
#include "ybr/hecke.hpp"
#include "ybr/relations.hpp"
#include "ybr/skein.hpp"
#include "ybr/tower.hpp"
#include "ybr/young.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

using namespace ybr;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  bool expected_failure = false;
};

struct Tally {
  bool ok = true;
  std::ostringstream why;
  void check(bool c, const std::string& what) {
    if (!c && ok) why << what;
    ok = ok && c;
  }
};

YoungDiagram Y(std::vector<int> r) { return YoungDiagram(std::move(r)); }

Outcome criterion1() {
  Tally t;
  int n = 0;
  for (int s = 0; s <= 5; ++s)
    for (const auto& mu : partitions(s))
      for (const auto& c : mu.addable()) {
        auto lam = mu.add(c);
        t.check(dim_ratio_by_residue(mu, lam) == qdim(lam) / qdim(mu), "mismatch at " + mu.str() + " < " + lam.str());
        ++n;
      }
  return {t.ok, t.ok ? std::to_string(n) + " covering pairs agree exactly" : t.why.str()};
}

Outcome criterion2() {
  Tally t;
  const FieldElem d = params().delta;
  int n = 0, zeros = 0;
  for (int s = 0; s <= 5; ++s)
    for (const auto& mu : partitions(s)) {
      FieldElem sum;
      for (const auto& c : mu.addable()) sum += qdim(mu.add(c));
      for (const auto& c : mu.removable()) sum += qdim(mu.remove(c));
      t.check(sum == d * qdim(mu), "neighbour sum fails at " + mu.str());
      ++n;
    }
  for (int N = 2; N <= 4; ++N)
    for (const auto& k : truncated_lattice(N, 8).boundary) {
      t.check(specialize(qdim(k), N).is_zero(), "nonzero dimension at N=" + std::to_string(N) + " " + k.str());
      ++zeros;
    }
  return {t.ok, t.ok ? std::to_string(n) + " neighbour sums, " + std::to_string(zeros) + " boundary zeros" : t.why.str()};
}

Outcome criterion3() {
  Tally t;
  std::ostringstream os;
  for (const auto& r : r_squared_relations(2)) t.check(verify_relation(r.lhs, r.rhs, brauer_words(2)), "R squared fails");
  auto probes3 = brauer_words(3);
  auto yb = yang_baxter_relation();
  t.check(probes3.size() == 15 && verify_relation(yb.lhs, yb.rhs, probes3), "Yang-Baxter fails");
  auto probes4 = sample_probes(brauer_words(4), 40, 7);
  for (const auto& r : far_commutation_relations(4))
    t.check(verify_relation(r.lhs, r.rhs, probes4), "far commutation fails: " + r.text);
  if (!t.ok) return {false, t.why.str()};

  int corrected_ok = 0, corrected_total = 0;
  for (const auto& r : local_relations(3, true)) {
    ++corrected_total;
    corrected_ok += verify_relation(r.lhs, r.rhs, probes3);
  }
  std::vector<std::string> failing;
  std::map<std::string, bool> family_failed;
  for (const auto& r : local_relations(3, false)) {
    bool ok = verify_relation(r.lhs, r.rhs, probes3);
    if (!ok) {
      auto w = inconsistency_witness(r, probes3);
      failing.push_back(r.family + ": " + r.text + (w ? "  witness: " + w->str() : ""));
      family_failed[r.family] = true;
    }
  }
  bool only_known = true;
  for (const auto& [f, _] : family_failed) only_known = only_known && (f == "L10" || f == "L11" || f == "L12" || f == "L13");
  os << "R^2, Yang-Baxter (15 probes), far commutation (m=4, 40 probes) pass; printed local relations: " << failing.size()
     << " instances fail in families";
  for (const auto& [f, _] : family_failed) os << " " << f;
  os << "; corrected forms " << corrected_ok << "/" << corrected_total << " pass";
  for (const auto& f : failing) os << "\n    " << f;
  if (failing.empty()) return {true, os.str()};
  return {false, os.str(), only_known && corrected_ok == corrected_total};
}

Outcome criterion4() {
  Tally t;
  std::vector<int> gen, at2;
  for (int m = 1; m <= 3; ++m) {
    gen.push_back(build_generic(m).dim());
    at2.push_back(build_at(m, 2).dim());
  }
  int ker = build_at(3, 2).kernel_dim;
  t.check(gen == std::vector<int>{1, 3, 15}, "generic ranks wrong");
  t.check(at2 == std::vector<int>{1, 3, 9}, "N=2 ranks wrong");
  t.check(ker == 6, "kernel dimension wrong");
  std::ostringstream os;
  os << "generic ranks " << gen[0] << "," << gen[1] << "," << gen[2] << "; N=2 ranks " << at2[0] << "," << at2[1] << ","
     << at2[2] << "; kernel " << ker;
  return {t.ok, os.str()};
}

Outcome criterion5() {
  Tally t;
  auto B = bratteli_generic(3);
  t.check(B.lattice_mismatches().empty(), "generic lattice mismatch");
  std::map<YoungDiagram, int> sizes;
  for (const auto& b : B.levels[3]) sizes[b.label] = b.size;
  t.check(sizes == std::map<YoungDiagram, int>{{Y({1}), 3}, {Y({3}), 1}, {Y({2, 1}), 2}, {Y({1, 1, 1}), 1}}, "generic level 3 block sizes");
  for (int m = 0; m <= 3; ++m)
    for (const auto& [lam, tr] : B.block_traces(m)) t.check(tr == qdim(lam), "generic trace at " + lam.str());
  for (int N : {2, 3}) {
    auto BN = bratteli_at(3, N);
    t.check(BN.lattice_mismatches().empty(), "lattice mismatch at N=" + std::to_string(N));
    for (int m = 0; m <= 3; ++m)
      for (const auto& [lam, tr] : BN.block_traces(m)) t.check(tr == qdim_at(lam, N), "trace at N=" + std::to_string(N) + " " + lam.str());
  }
  return {t.ok, t.ok ? "generic level 3 sizes 1,2,1,3; YL(2), YL(3) to depth 3; block traces equal qdim exactly" : t.why.str()};
}

Outcome criterion6() {
  Tally t;
  std::ostringstream os;
  for (int m = 1; m <= 3; ++m) {
    auto rep = positivity_certificate(build_at(m, 2));
    t.check(rep.hermitian && rep.schur_complement_zero && rep.positive_definite, "not certified at m=" + std::to_string(m));
    os << (m > 1 ? "; " : "") << "m=" << m << " rank " << rep.rank << " kernel " << rep.kernel_dim;
  }
  return {t.ok, t.ok ? os.str() : t.why.str()};
}

std::vector<int> random_braid(std::mt19937_64& rng, int strands, int len) {
  std::uniform_int_distribution<int> gen(1, strands - 1);
  std::bernoulli_distribution coin(0.5);
  std::vector<int> w;
  for (int k = 0; k < len; ++k) w.push_back(coin(rng) ? gen(rng) : -gen(rng));
  return w;
}

ClosedDiagram random_r_diagram(std::mt19937_64& rng, int max_r) {
  std::uniform_int_distribution<int> pos(1, 2), len(1, 7), mk(0, 3);
  std::bernoulli_distribution coin(0.5);
  Word w;
  int rs = 0;
  int L = len(rng);
  for (int k = 0; k < L; ++k) {
    bool r = coin(rng) && rs < max_r;
    rs += r;
    w.push_back({r ? 'r' : 'h', pos(rng)});
  }
  ClosedDiagram c = word_diagram(w, 3).close();
  for (auto& x : c.mark) x = mk(rng);
  return c;
}

Outcome criterion7() {
  Tally t;
  const FieldElem d = params().delta, r = params().r;
  const FieldElem Z = FieldElem::q() - FieldElem::q(-1);
  t.check(homfly(OrientedLink::braid_closure(1, {})) == d, "unknot");
  t.check(homfly(OrientedLink::braid_closure(2, {1})) == r * d, "positive kink");
  t.check(homfly(OrientedLink::braid_closure(2, {-1})) == r.inv() * d, "negative kink");
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> strands(2, 4), len(1, 8);
  for (int s = 0; s < 50; ++s) {
    int n = strands(rng);
    OrientedLink L = OrientedLink::braid_closure(n, random_braid(rng, n, len(rng)));
    int c = std::uniform_int_distribution<int>(0, L.crossings() - 1)(rng);
    FieldElem sgn(L.signs[static_cast<std::size_t>(c)]);
    t.check(sgn * (homfly(L) - homfly(L.switched(c))) == Z * homfly(L.smoothed(c)), "skein relation fails on sample " + std::to_string(s));
  }
  int tested = 0;
  for (int s = 0; s < 25; ++s) {
    ClosedDiagram c = random_r_diagram(rng, 5);
    LocFrac z0 = zeta_value(c);
    for (int k = 0; k < 3; ++k) t.check(zeta_with_choice(c, random_choice(c, rng)) == z0, "zeta depends on orientation");
    ++tested;
  }
  return {t.ok, t.ok ? "unknot, kinks, 50 skein samples, " + std::to_string(tested) + " diagrams x 3 orientation choices" : t.why.str()};
}

Outcome criterion8() {
  Tally t;
  for (int N = 1; N <= 6; ++N) {
    auto G = invertible_group(N);
    t.check(G.associative() && G.cyclic() && static_cast<int>(G.elements.size()) == N + 1, "group at N=" + std::to_string(N));
    for (int k = 0; k <= N; ++k) t.check(qdim_at(invertible_r(k, N), N).is_one(), "qdim(r_k) != 1");
  }
  auto Q = quotient_simples(3, 1, 0);
  t.check(Q.simples.size() == 12, "(3,1,0) count");
  t.check(graded_branching(Q).term_str(Q.find(Y({1}), 0)) == "e + [1]e^2 + [1]e^5", "(3,1,0) branching");
  auto Q1 = quotient_simples(3, 1, 1);
  t.check(Q1.simples.size() == 20, "(3,1,1) count");
  t.check(graded_branching(Q1).term_str(Q1.find(Y({1}), 0)) == "e + [1]e^3 + [1]e^8", "(3,1,1) branching");
  auto E = equivariantization_graph(2);
  t.check(E.vertices.size() == 5 && E.is_path(), "equivariantization at N=2");
  return {t.ok, t.ok ? "Z_{N+1} for N<=6; 12 and 20 simples with the expected [1]x[1]; 5-vertex path" : t.why.str()};
}

Outcome criterion9() {
  Tally t;
  int branches = 0;
  for (int n = 0; n <= 3; ++n)
    for (const auto& mu : partitions(n)) {
      HeckeElem sum(n + 1);
      for (const auto& c : mu.addable()) {
        auto br = branch(mu, mu.add(c));
        sum += br.up * br.down;
      }
      HeckeElem ym = n == 0 ? HeckeElem::identity(1) : young_idempotent(mu).element.extend_right();
      t.check(sum == ym, "branching incomplete at " + mu.str());
    }
  for (int n = 0; n <= 3; ++n)
    for (const auto& mu : partitions(n))
      for (const auto& c : mu.addable()) {
        auto br = branch(mu, mu.add(c));
        t.check(br.down * murphy(n + 1) == br.down * FieldElem::q(2 * content(c)), "Murphy eigenvalue at " + mu.add(c).str());
        ++branches;
      }
  for (int l = 1; l <= 4; ++l)
    for (SymKind k : {SymKind::sym, SymKind::antisym})
      t.check(symmetrizer(l, k) == symmetrizer_left(l, k), "symmetrizer forms disagree at l=" + std::to_string(l));
  return {t.ok, t.ok ? "branching complete for |mu|<=3; Murphy eigenvalues on " + std::to_string(branches) + " branches; symmetrizer forms agree for l<=4" : t.why.str()};
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"trace formula cross-check", criterion1}, {"Perron identity and boundary zeros", criterion2},
      {"relation certification", criterion3},    {"dimension counts", criterion4},
      {"Bratteli recovery", criterion5},         {"positivity at N=2", criterion6},
      {"HOMFLY regression", criterion7},         {"fusion layer", criterion8},
      {"Hecke suite", criterion9}};
  bool unexpected = false;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << "criterion " << i + 1 << " " << (o.pass ? "PASS" : o.expected_failure ? "FAIL (expected)" : "FAIL") << " "
              << criteria[i].first << " (" << std::fixed << std::setprecision(1) << secs << "s): " << o.detail << std::endl;
    unexpected = unexpected || (!o.pass && !o.expected_failure);
  }
  return unexpected ? 1 : 0;
}
