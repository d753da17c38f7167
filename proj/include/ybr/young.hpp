#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ybr {

// (row, column), both starting at 1.
using Cell = std::pair<int, int>;

struct NotInY : std::domain_error {
  NotInY(const std::string& lam, int N) : std::domain_error(lam + " is not in Y(" + std::to_string(N) + ")") {}
};

struct YoungDiagram {
  std::vector<int> rows;

  YoungDiagram() = default;
  explicit YoungDiagram(std::vector<int> r);
  static YoungDiagram parse(const std::string& s);  // "2,1", "" or "0" for the empty diagram

  int size() const;
  int length() const { return static_cast<int>(rows.size()); }
  bool empty() const { return rows.empty(); }
  int row(int i) const { return i >= 1 && i <= length() ? rows[static_cast<std::size_t>(i - 1)] : 0; }
  bool contains(const Cell& c) const { return c.first >= 1 && c.second >= 1 && row(c.first) >= c.second; }
  int hook(const Cell& c) const;
  int h11() const { return empty() ? 0 : hook({1, 1}); }
  std::vector<Cell> cells() const;
  std::vector<Cell> addable() const;
  std::vector<Cell> removable() const;
  YoungDiagram add(const Cell& c) const;
  YoungDiagram remove(const Cell& c) const;
  std::string str() const;

  friend auto operator<=>(const YoungDiagram&, const YoungDiagram&) = default;
};

// Cell by which lam exceeds mu; lam must cover mu.
Cell added_cell(const YoungDiagram& mu, const YoungDiagram& lam);
bool covers(const YoungDiagram& lam, const YoungDiagram& mu);
std::vector<YoungDiagram> partitions(int n);

std::map<Cell, int> hooks(const YoungDiagram& lam);
std::map<Cell, int> contents(const YoungDiagram& lam);
inline int content(const Cell& c) { return c.second - c.first; }

YoungDiagram transpose_sym(const YoungDiagram& lam);
bool in_Y(const YoungDiagram& lam, int N);
YoungDiagram g_tensor(const YoungDiagram& lam, int N);
// k rows of N+1-k cells.
YoungDiagram invertible_r(int k, int N);

struct LatticeGraph {
  int N = 0;  // 0 for the full Young lattice
  int depth = 0;
  std::vector<YoungDiagram> vertices;
  std::vector<std::pair<int, int>> edges;  // (smaller, larger) vertex indices
  std::vector<std::vector<int>> adj;
  std::vector<YoungDiagram> boundary;      // B(N) within depth+1

  int index(const YoungDiagram& d) const;  // -1 if absent
  int root() const { return 0; }
  std::string dot() const;
  std::string json() const;
};

LatticeGraph full_lattice(int depth);
LatticeGraph truncated_lattice(int N, int depth);
// All of Y(N).
LatticeGraph truncated_lattice(int N);
// Any graph on the given vertex set with its covering edges.
LatticeGraph induced_lattice(std::vector<YoungDiagram> verts);

struct OscPath {
  std::vector<YoungDiagram> steps;
};

// Number of m-step paths from the root to each vertex.
std::vector<std::uint64_t> path_counts(const LatticeGraph& G, int m);
std::vector<OscPath> paths(const LatticeGraph& G, int m);
std::uint64_t count_loops(const LatticeGraph& G, int m);

using Perm = std::vector<int>;
// Every automorphism of the underlying unrooted graph.
std::vector<Perm> graph_automorphisms(const LatticeGraph& G);
// A small generating set of the automorphism group.
std::vector<Perm> automorphism_generators(const LatticeGraph& G);

}  // namespace ybr
