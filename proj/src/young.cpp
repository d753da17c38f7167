#include "ybr/young.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace ybr {

YoungDiagram::YoungDiagram(std::vector<int> r) : rows(std::move(r)) {
  while (!rows.empty() && rows.back() == 0) rows.pop_back();
  for (std::size_t k = 0; k < rows.size(); ++k)
    if (rows[k] < 0 || (k > 0 && rows[k] > rows[k - 1]))
      throw std::invalid_argument("not a partition");
}

YoungDiagram YoungDiagram::parse(const std::string& s) {
  std::string t;
  for (char c : s)
    if (c != ' ' && c != '[' && c != ']') t += c;
  if (t.empty() || t == "0" || t == "\xE2\x88\x85") return {};
  std::vector<int> r;
  std::stringstream ss(t);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad partition '" + s + "'");
    r.push_back(std::stoi(part));
  }
  return YoungDiagram(std::move(r));
}

int YoungDiagram::size() const { return std::accumulate(rows.begin(), rows.end(), 0); }

int YoungDiagram::hook(const Cell& c) const {
  int arm = row(c.first) - c.second, leg = 0;
  while (row(c.first + leg + 1) >= c.second) ++leg;
  return arm + leg + 1;
}

std::vector<Cell> YoungDiagram::cells() const {
  std::vector<Cell> out;
  for (int i = 1; i <= length(); ++i)
    for (int j = 1; j <= row(i); ++j) out.emplace_back(i, j);
  return out;
}

std::vector<Cell> YoungDiagram::addable() const {
  std::vector<Cell> out;
  for (int i = 1; i <= length() + 1; ++i)
    if (i == 1 || row(i - 1) > row(i)) out.emplace_back(i, row(i) + 1);
  return out;
}

std::vector<Cell> YoungDiagram::removable() const {
  std::vector<Cell> out;
  for (int i = 1; i <= length(); ++i)
    if (row(i) > row(i + 1)) out.emplace_back(i, row(i));
  return out;
}

YoungDiagram YoungDiagram::add(const Cell& c) const {
  std::vector<int> r = rows;
  if (c.first == length() + 1 && c.second == 1)
    r.push_back(1);
  else if (c.first <= length() && c.second == row(c.first) + 1 && (c.first == 1 || row(c.first - 1) > row(c.first)))
    ++r[static_cast<std::size_t>(c.first - 1)];
  else
    throw std::invalid_argument("cell not addable");
  return YoungDiagram(std::move(r));
}

YoungDiagram YoungDiagram::remove(const Cell& c) const {
  if (!(c.second == row(c.first) && row(c.first + 1) < row(c.first))) throw std::invalid_argument("cell not removable");
  std::vector<int> r = rows;
  --r[static_cast<std::size_t>(c.first - 1)];
  return YoungDiagram(std::move(r));
}

std::string YoungDiagram::str() const {
  if (rows.empty()) return "\xE2\x88\x85";
  std::string s;
  for (std::size_t k = 0; k < rows.size(); ++k) s += (k ? "," : "") + std::to_string(rows[k]);
  return s;
}

bool covers(const YoungDiagram& lam, const YoungDiagram& mu) {
  if (lam.size() != mu.size() + 1) return false;
  for (int i = 1; i <= lam.length(); ++i)
    if (lam.row(i) < mu.row(i)) return false;
  return mu.length() <= lam.length();
}

Cell added_cell(const YoungDiagram& mu, const YoungDiagram& lam) {
  if (!covers(lam, mu)) throw std::invalid_argument(lam.str() + " does not cover " + mu.str());
  for (int i = 1; i <= lam.length(); ++i)
    if (lam.row(i) != mu.row(i)) return {i, lam.row(i)};
  throw std::logic_error("added_cell");
}

std::vector<YoungDiagram> partitions(int n) {
  std::vector<YoungDiagram> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int maxp) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(left, maxp); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::map<Cell, int> hooks(const YoungDiagram& lam) {
  std::map<Cell, int> out;
  for (const auto& c : lam.cells()) out[c] = lam.hook(c);
  return out;
}

std::map<Cell, int> contents(const YoungDiagram& lam) {
  std::map<Cell, int> out;
  for (const auto& c : lam.cells()) out[c] = content(c);
  return out;
}

YoungDiagram transpose_sym(const YoungDiagram& lam) {
  std::vector<int> r;
  for (int j = 1; j <= lam.row(1); ++j) {
    int n = 0;
    while (lam.row(n + 1) >= j) ++n;
    r.push_back(n);
  }
  return YoungDiagram(std::move(r));
}

bool in_Y(const YoungDiagram& lam, int N) { return lam.h11() <= N; }

YoungDiagram g_tensor(const YoungDiagram& lam, int N) {
  if (!in_Y(lam, N)) throw NotInY(lam.str(), N);
  int k = lam.row(1);
  std::vector<int> r;
  for (int i = 1; i <= N - k; ++i) r.push_back(lam.row(i + 1) + 1);
  return YoungDiagram(std::move(r));
}

YoungDiagram invertible_r(int k, int N) {
  if (k < 0 || k > N) throw std::invalid_argument("invertible_r: k out of range");
  return YoungDiagram(std::vector<int>(static_cast<std::size_t>(k), N + 1 - k));
}

int LatticeGraph::index(const YoungDiagram& d) const {
  auto it = std::find(vertices.begin(), vertices.end(), d);
  return it == vertices.end() ? -1 : static_cast<int>(it - vertices.begin());
}

namespace {

bool diagram_order(const YoungDiagram& a, const YoungDiagram& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.rows > b.rows;
}

void link(LatticeGraph& G) {
  std::sort(G.vertices.begin(), G.vertices.end(), diagram_order);
  G.adj.assign(G.vertices.size(), {});
  G.edges.clear();
  for (std::size_t i = 0; i < G.vertices.size(); ++i)
    for (std::size_t j = 0; j < G.vertices.size(); ++j)
      if (covers(G.vertices[j], G.vertices[i])) {
        G.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
        G.adj[i].push_back(static_cast<int>(j));
        G.adj[j].push_back(static_cast<int>(i));
      }
  for (auto& a : G.adj) std::sort(a.begin(), a.end());
}

}  // namespace

LatticeGraph induced_lattice(std::vector<YoungDiagram> verts) {
  LatticeGraph G;
  G.vertices = std::move(verts);
  link(G);
  return G;
}

LatticeGraph full_lattice(int depth) {
  LatticeGraph G;
  G.depth = depth;
  for (int n = 0; n <= depth; ++n)
    for (auto& p : partitions(n)) G.vertices.push_back(p);
  link(G);
  return G;
}

LatticeGraph truncated_lattice(int N, int depth) {
  if (N < 1) throw std::invalid_argument("N must be positive");
  LatticeGraph G;
  G.N = N;
  G.depth = depth;
  for (int n = 0; n <= depth + 1; ++n)
    for (auto& p : partitions(n)) {
      if (in_Y(p, N)) {
        if (n <= depth) G.vertices.push_back(p);
      } else if (p.h11() == N + 1) {
        for (const auto& c : p.removable())
          if (in_Y(p.remove(c), N)) {
            G.boundary.push_back(p);
            break;
          }
      }
    }
  link(G);
  std::sort(G.boundary.begin(), G.boundary.end(), diagram_order);
  return G;
}

LatticeGraph truncated_lattice(int N) {
  // every diagram in Y(N) has at most (N+1)^2/4 cells
  return truncated_lattice(N, (N + 1) * (N + 1) / 4);
}

std::string LatticeGraph::dot() const {
  std::ostringstream os;
  os << "graph YL {\n";
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    os << "  v" << i << " [label=\"" << vertices[i].str() << "\"";
    if (vertices[i].empty()) os << ", style=filled, fillcolor=gold";
    os << "];\n";
  }
  for (auto [a, b] : edges) os << "  v" << a << " -- v" << b << ";\n";
  os << "}\n";
  return os.str();
}

std::string LatticeGraph::json() const {
  std::ostringstream os;
  auto list = [&](const std::vector<YoungDiagram>& v) {
    os << "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      os << (i ? "," : "") << "[";
      for (std::size_t k = 0; k < v[i].rows.size(); ++k) os << (k ? "," : "") << v[i].rows[k];
      os << "]";
    }
    os << "]";
  };
  os << "{\"N\":" << N << ",\"depth\":" << depth << ",\"vertices\":";
  list(vertices);
  os << ",\"edges\":[";
  for (std::size_t i = 0; i < edges.size(); ++i) os << (i ? "," : "") << "[" << edges[i].first << "," << edges[i].second << "]";
  os << "],\"boundary\":";
  list(boundary);
  os << "}";
  return os.str();
}

std::vector<std::uint64_t> path_counts(const LatticeGraph& G, int m) {
  std::vector<std::uint64_t> cur(G.vertices.size(), 0);
  int r = G.index(YoungDiagram());
  if (r < 0) return cur;
  cur[static_cast<std::size_t>(r)] = 1;
  for (int s = 0; s < m; ++s) {
    std::vector<std::uint64_t> nxt(cur.size(), 0);
    for (std::size_t v = 0; v < cur.size(); ++v)
      if (cur[v])
        for (int w : G.adj[v]) nxt[static_cast<std::size_t>(w)] += cur[v];
    cur = std::move(nxt);
  }
  return cur;
}

std::vector<OscPath> paths(const LatticeGraph& G, int m) {
  std::vector<OscPath> out;
  int r = G.index(YoungDiagram());
  if (r < 0) return out;
  std::vector<int> cur{r};
  std::function<void()> rec = [&] {
    if (static_cast<int>(cur.size()) == m + 1) {
      OscPath p;
      for (int v : cur) p.steps.push_back(G.vertices[static_cast<std::size_t>(v)]);
      out.push_back(std::move(p));
      return;
    }
    for (int w : G.adj[static_cast<std::size_t>(cur.back())]) {
      cur.push_back(w);
      rec();
      cur.pop_back();
    }
  };
  rec();
  return out;
}

std::uint64_t count_loops(const LatticeGraph& G, int m) {
  std::uint64_t s = 0;
  for (auto c : path_counts(G, m)) s += c * c;
  return s;
}

std::vector<Perm> graph_automorphisms(const LatticeGraph& G) {
  std::size_t n = G.vertices.size();
  std::vector<Perm> out;
  if (n == 0) return out;
  // assign vertices in BFS order so each new vertex has an assigned neighbour
  std::vector<int> order;
  std::vector<char> seen(n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> q{static_cast<int>(s)};
    seen[s] = 1;
    for (std::size_t h = 0; h < q.size(); ++h) {
      order.push_back(q[h]);
      for (int w : G.adj[static_cast<std::size_t>(q[h])])
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          q.push_back(w);
        }
    }
  }
  std::vector<std::vector<char>> A(n, std::vector<char>(n, 0));
  for (auto [a, b] : G.edges) A[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = A[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = 1;
  Perm img(n, -1);
  std::vector<char> used(n, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == n) {
      out.push_back(img);
      return;
    }
    std::size_t v = static_cast<std::size_t>(order[k]);
    for (std::size_t w = 0; w < n; ++w) {
      if (used[w] || G.adj[w].size() != G.adj[v].size()) continue;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) {
        std::size_t u = static_cast<std::size_t>(order[j]);
        ok = A[v][u] == A[w][static_cast<std::size_t>(img[u])];
      }
      if (!ok) continue;
      img[v] = static_cast<int>(w);
      used[w] = 1;
      rec(k + 1);
      used[w] = 0;
      img[v] = -1;
    }
  };
  rec(0);
  return out;
}

std::vector<Perm> automorphism_generators(const LatticeGraph& G) {
  auto all = graph_automorphisms(G);
  std::vector<Perm> gens;
  if (all.empty()) return gens;
  std::set<Perm> group{all.front()};
  auto compose = [](const Perm& a, const Perm& b) {
    Perm c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[static_cast<std::size_t>(b[i])];
    return c;
  };
  for (const auto& p : all) {
    if (group.count(p)) continue;
    gens.push_back(p);
    std::vector<Perm> frontier(group.begin(), group.end());
    while (!frontier.empty()) {
      std::vector<Perm> next;
      for (const auto& x : frontier)
        for (const auto& g : gens) {
          Perm y = compose(g, x);
          if (group.insert(y).second) next.push_back(y);
        }
      frontier = std::move(next);
    }
  }
  return gens;
}

}  // namespace ybr
