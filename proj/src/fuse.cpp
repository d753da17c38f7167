#include "ybr/fuse.hpp"

#include "ybr/dims.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace ybr {

namespace {

std::string bracket(const YoungDiagram& d) { return d.empty() ? "0" : "[" + d.str() + "]"; }

nlohmann::json rows_json(const YoungDiagram& d) { return d.rows; }

}  // namespace

FusionData fusion_data(int N) {
  if (N < 1) throw InvalidParams("N must be positive");
  FusionData F;
  F.N = N;
  F.principal_graph = truncated_lattice(N);
  F.simples = F.principal_graph.vertices;
  for (const auto& s : F.simples) F.qdims.push_back(qdim_at(s, N));
  for (int k = 0; k <= N; ++k) F.invertibles.push_back(invertible_r(k, N));
  return F;
}

YoungDiagram tensor_invertible(const YoungDiagram& lam, int k, int N) {
  if (k < 0 || k > N) throw InvalidParams("invertible index out of range");
  YoungDiagram cur = lam;
  for (int j = 0; j < (N + 1 - k) % (N + 1); ++j) cur = g_tensor(cur, N);
  return cur;
}

std::vector<int> stabilizer(const YoungDiagram& lam, int N) {
  std::vector<int> out;
  for (int k = 0; k <= N; ++k)
    if (tensor_invertible(lam, k, N) == lam) out.push_back(k);
  return out;
}

GroupTable invertible_group(int N) {
  if (N < 1) throw InvalidParams("N must be positive");
  GroupTable G;
  G.N = N;
  for (int k = 0; k <= N; ++k) G.elements.push_back(invertible_r(k, N));
  for (int a = 0; a <= N; ++a) {
    G.table.emplace_back();
    for (int b = 0; b <= N; ++b) {
      auto p = tensor_invertible(G.elements[static_cast<std::size_t>(a)], b, N);
      auto it = std::find(G.elements.begin(), G.elements.end(), p);
      G.table.back().push_back(it == G.elements.end() ? -1 : static_cast<int>(it - G.elements.begin()));
    }
  }
  return G;
}

bool GroupTable::associative() const {
  std::size_t n = elements.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        int ab = table[a][b], bc = table[b][c];
        if (ab < 0 || bc < 0) return false;
        if (table[static_cast<std::size_t>(ab)][c] != table[a][static_cast<std::size_t>(bc)]) return false;
      }
  return true;
}

bool GroupTable::cyclic() const {
  int n = static_cast<int>(elements.size());
  for (int k = 0; k < n; ++k)
    if (table[static_cast<std::size_t>(k)][1] != (k + 1) % n) return false;
  return true;
}

std::string GroupTable::json() const {
  nlohmann::json j;
  j["N"] = N;
  for (const auto& e : elements) j["elements"].push_back(rows_json(e));
  j["table"] = table;
  j["associative"] = associative();
  j["cyclic"] = cyclic();
  return j.dump();
}

std::string EquivVertex::name() const {
  if (copy >= 0) return bracket(lambda) + "_" + std::to_string(copy);
  return "(" + bracket(lambda) + "," + bracket(transpose_sym(lambda)) + ")";
}

EquivGraph equivariantization_graph(int N) {
  if (N < 2) throw InvalidParams("N must be at least 2");
  EquivGraph E;
  E.N = N;
  LatticeGraph G = truncated_lattice(N);
  std::vector<std::vector<int>> of(G.vertices.size());
  for (std::size_t v = 0; v < G.vertices.size(); ++v) {
    const auto& lam = G.vertices[v];
    auto t = transpose_sym(lam);
    if (t == lam) {
      ++E.fixed;
      for (int c = 0; c < 2; ++c) {
        of[v].push_back(static_cast<int>(E.vertices.size()));
        E.vertices.push_back({lam, c});
      }
      continue;
    }
    ++E.paired;
    int w = G.index(t);
    if (w >= 0 && static_cast<std::size_t>(w) < v) {
      of[v] = of[static_cast<std::size_t>(w)];
      continue;
    }
    of[v].push_back(static_cast<int>(E.vertices.size()));
    E.vertices.push_back({lam, -1});
  }
  std::set<std::pair<int, int>> edges;
  for (const auto& [a, b] : G.edges) {
    const auto& A = of[static_cast<std::size_t>(a)];
    const auto& B = of[static_cast<std::size_t>(b)];
    if (A.size() == 2 && B.size() == 2) {
      for (int c = 0; c < 2; ++c) edges.insert(std::minmax(A[static_cast<std::size_t>(c)], B[static_cast<std::size_t>(c)]));
    } else {
      for (int x : A)
        for (int y : B) edges.insert(std::minmax(x, y));
    }
  }
  E.edges.assign(edges.begin(), edges.end());
  return E;
}

std::vector<int> EquivGraph::degrees() const {
  std::vector<int> d(vertices.size(), 0);
  for (const auto& [a, b] : edges) {
    ++d[static_cast<std::size_t>(a)];
    ++d[static_cast<std::size_t>(b)];
  }
  return d;
}

bool EquivGraph::is_path() const {
  std::size_t n = vertices.size();
  if (n == 1) return edges.empty();
  if (edges.size() != n - 1) return false;
  auto d = degrees();
  if (std::count(d.begin(), d.end(), 1) != 2 || std::count(d.begin(), d.end(), 2) != static_cast<long>(n - 2)) return false;
  std::vector<int> comp(n);
  std::iota(comp.begin(), comp.end(), 0);
  std::function<int(int)> root = [&](int x) { return comp[static_cast<std::size_t>(x)] == x ? x : comp[static_cast<std::size_t>(x)] = root(comp[static_cast<std::size_t>(x)]); };
  for (const auto& [a, b] : edges) comp[static_cast<std::size_t>(root(a))] = root(b);
  for (std::size_t v = 0; v < n; ++v)
    if (root(static_cast<int>(v)) != root(0)) return false;
  return true;
}

std::string EquivGraph::dot() const {
  std::ostringstream os;
  os << "graph equivariantization {\n";
  for (std::size_t v = 0; v < vertices.size(); ++v) os << "  v" << v << " [label=\"" << vertices[v].name() << "\"];\n";
  for (const auto& [a, b] : edges) os << "  v" << a << " -- v" << b << ";\n";
  os << "}\n";
  return os.str();
}

std::string EquivGraph::json() const {
  nlohmann::json j;
  j["N"] = N;
  for (const auto& v : vertices) j["vertices"].push_back({{"name", v.name()}, {"partition", rows_json(v.lambda)}, {"copy", v.copy}});
  for (const auto& [a, b] : edges) j["edges"].push_back({a, b});
  j["fixed"] = fixed;
  j["paired"] = paired;
  return j.dump();
}

namespace {

struct Phi {
  int N, k, l;
  // (lam, t) tensor g^k e^l.
  std::pair<YoungDiagram, long> operator()(YoungDiagram lam, long t) const {
    for (int j = 0; j < k; ++j) {
      YoungDiagram g = g_tensor(lam, N);
      t += (lam.size() + N - g.size()) / 2;
      lam = std::move(g);
    }
    return {lam, t + l};
  }
};

long mod(long a, long m) { return ((a % m) + m) % m; }

}  // namespace

QuotientCategory quotient_simples(int N, int k, int l) {
  if (N < 1 || k < 0 || l < 0 || (k == 0 && l == 0)) throw InvalidParams("need N >= 1, k, l >= 0, (k, l) != (0, 0)");
  QuotientCategory Q;
  Q.N = N;
  Q.k = k;
  Q.l = l;
  Q.grading_modulus = k * N + 2 * l;
  Q.periodicity = (N + 1) / std::gcd(N + 1, k);
  Phi phi{N, k, l};
  std::set<YoungDiagram> seen;
  for (const auto& lam : truncated_lattice(N).vertices) {
    if (seen.count(lam)) continue;
    int size = 0;
    YoungDiagram cur = lam;
    do {
      seen.insert(cur);
      cur = phi(cur, 0).first;
      ++size;
    } while (cur != lam);
    Q.orbit_reps.push_back(lam);
    Q.orbit_sizes.push_back(size);
  }
  for (std::size_t o = 0; o < Q.orbit_reps.size(); ++o) {
    long span = static_cast<long>(Q.orbit_sizes[o]) * Q.grading_modulus / 2;
    for (long t = 0; t < span; ++t)
      Q.simples.push_back({Q.orbit_reps[o], static_cast<int>(t), static_cast<int>(mod(Q.orbit_reps[o].size() + 2 * t, Q.grading_modulus))});
  }
  return Q;
}

long free_orbit_count(const QuotientCategory& Q) {
  return static_cast<long>(Q.orbit_reps.size()) * Q.periodicity * Q.grading_modulus / 2;
}

int QuotientCategory::find(const YoungDiagram& lam, long t) const {
  Phi phi{N, k, l};
  YoungDiagram cur = lam;
  for (int step = 0; step <= periodicity + 1; ++step) {
    auto it = std::find(orbit_reps.begin(), orbit_reps.end(), cur);
    if (it != orbit_reps.end()) {
      std::size_t o = static_cast<std::size_t>(it - orbit_reps.begin());
      long span = static_cast<long>(orbit_sizes[o]) * grading_modulus / 2;
      long tt = mod(t, span);
      int idx = 0;
      for (std::size_t p = 0; p < o; ++p) idx += orbit_sizes[p] * grading_modulus / 2;
      return idx + static_cast<int>(tt);
    }
    std::tie(cur, t) = phi(cur, t);
  }
  throw InvalidParams("diagram outside Y(N)");
}

std::string QuotientCategory::name(int s) const {
  const auto& x = simples.at(static_cast<std::size_t>(s));
  std::string e = x.t == 0 ? "" : x.t == 1 ? "e" : "e^" + std::to_string(x.t);
  if (x.rep.empty()) return e.empty() ? "1" : e;
  return bracket(x.rep) + e;
}

std::string QuotientCategory::json() const {
  nlohmann::json j;
  j["N"] = N;
  j["k"] = k;
  j["l"] = l;
  j["grading_modulus"] = grading_modulus;
  j["periodicity"] = periodicity;
  for (std::size_t o = 0; o < orbit_reps.size(); ++o)
    j["orbits"].push_back({{"rep", rows_json(orbit_reps[o])}, {"size", orbit_sizes[o]}});
  for (std::size_t s = 0; s < simples.size(); ++s)
    j["simples"].push_back({{"name", name(static_cast<int>(s))},
                            {"rep", rows_json(simples[s].rep)},
                            {"t", simples[s].t},
                            {"grade", simples[s].grade}});
  return j.dump();
}

GradedBranching graded_branching(const QuotientCategory& Q) {
  GradedBranching B;
  B.Q = Q;
  LatticeGraph G = truncated_lattice(Q.N);
  for (const auto& s : Q.simples) {
    std::map<int, int> acc;
    int v = G.index(s.rep);
    for (int w : G.adj[static_cast<std::size_t>(v)]) {
      const auto& kappa = G.vertices[static_cast<std::size_t>(w)];
      long t = kappa.size() > s.rep.size() ? s.t : s.t + 1;
      ++acc[Q.find(kappa, t)];
    }
    B.rows.emplace_back();
    for (const auto& [target, mult] : acc) B.rows.back().push_back({target, mult});
  }
  return B;
}

std::string GradedBranching::term_str(int s) const {
  std::string out;
  for (const auto& [target, mult] : rows.at(static_cast<std::size_t>(s))) {
    if (!out.empty()) out += " + ";
    if (mult > 1) out += std::to_string(mult) + " ";
    out += Q.name(target);
  }
  return out;
}

std::string GradedBranching::dot() const {
  static const char* palette[] = {"red", "blue", "green", "orange", "purple", "brown", "cyan", "magenta", "gold", "gray"};
  std::ostringstream os;
  os << "graph branching {\n";
  for (std::size_t s = 0; s < Q.simples.size(); ++s)
    os << "  s" << s << " [label=\"" << Q.name(static_cast<int>(s)) << "\", color=" << palette[Q.simples[s].grade % 10]
       << ", grade=" << Q.simples[s].grade << "];\n";
  for (std::size_t s = 0; s < rows.size(); ++s)
    for (const auto& [target, mult] : rows[s])
      if (static_cast<int>(s) <= target)
        for (int r = 0; r < mult; ++r) os << "  s" << s << " -- s" << target << ";\n";
  os << "}\n";
  return os.str();
}

std::string GradedBranching::json() const {
  nlohmann::json j = nlohmann::json::parse(Q.json());
  for (std::size_t s = 0; s < rows.size(); ++s) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& [target, mult] : rows[s]) r.push_back({{"target", Q.name(target)}, {"multiplicity", mult}});
    j["tensor_X"].push_back({{"simple", Q.name(static_cast<int>(s))}, {"decomposition", r}});
  }
  return j.dump();
}

YoungDiagram blocked_staircase(int N, int m) {
  if (N < 1 || m < 1) throw InvalidParams("need N, m >= 1");
  if ((N + 1) % (2 * m - 1) != 0) throw DivisibilityViolated(std::to_string(2 * m - 1) + " does not divide " + std::to_string(N + 1));
  int k = (N + 1) / (2 * m - 1);
  std::vector<int> rows;
  for (int i = 0; i + 1 < m; ++i)
    for (int r = 0; r < k; ++r) rows.push_back((m - 1 - i) * k);
  return YoungDiagram(rows);
}

SubfactorIndex subfactor_index(int N, int m) {
  SubfactorIndex S;
  S.N = N;
  S.m = m;
  S.lambda = blocked_staircase(N, m);
  S.k = (N + 1) / (2 * m - 1);
  S.stabilizer_order = static_cast<int>(stabilizer(S.lambda, N).size());
  CycloElem d = qdim_at(S.lambda, N);
  S.value = d * d / CycloElem(specialization_order(N), mpq_class(2 * m - 1));
  S.approx = S.value.to_complex().real();
  S.degenerate = m == 1;
  return S;
}

std::string SubfactorIndex::json() const {
  nlohmann::json j;
  j["N"] = N;
  j["m"] = m;
  j["k"] = k;
  j["lambda"] = rows_json(lambda);
  j["stabilizer_order"] = stabilizer_order;
  j["index"] = value.str();
  j["approx"] = approx;
  j["degenerate"] = degenerate;
  return j.dump();
}

}  // namespace ybr
