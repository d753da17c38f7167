#include "doctest.h"
#include "ybr/young.hpp"

#include <set>

using namespace ybr;

namespace {

YoungDiagram Y(std::vector<int> r) { return YoungDiagram(std::move(r)); }

std::uint64_t double_factorial(int m) {
  std::uint64_t r = 1;
  for (int k = 2 * m - 1; k > 1; k -= 2) r *= static_cast<std::uint64_t>(k);
  return r;
}

// direct hook count by scanning the diagram as a 0/1 grid
int grid_hook(const YoungDiagram& d, int i, int j) {
  int h = 1;
  for (int jj = j + 1; d.contains({i, jj}); ++jj) ++h;
  for (int ii = i + 1; d.contains({ii, j}); ++ii) ++h;
  return h;
}

}  // namespace

TEST_CASE("hooks and contents") {
  CHECK(hooks(Y({2, 1})) == std::map<Cell, int>{{{1, 1}, 3}, {{1, 2}, 1}, {{2, 1}, 1}});
  CHECK(hooks(Y({1})) == std::map<Cell, int>{{{1, 1}, 1}});
  CHECK(hooks(Y({2, 2})) == std::map<Cell, int>{{{1, 1}, 3}, {{1, 2}, 2}, {{2, 1}, 2}, {{2, 2}, 1}});
  CHECK(contents(Y({2})) == std::map<Cell, int>{{{1, 1}, 0}, {{1, 2}, 1}});
  CHECK(contents(Y({1, 1})) == std::map<Cell, int>{{{1, 1}, 0}, {{2, 1}, -1}});
  CHECK(content(added_cell(Y({2}), Y({2, 1}))) == -1);
  for (int n = 1; n <= 7; ++n)
    for (const auto& p : partitions(n)) {
      int mx = 0;
      for (auto [c, h] : hooks(p)) {
        CHECK(h == grid_hook(p, c.first, c.second));
        mx = std::max(mx, h);
      }
      CHECK(mx == p.h11());
    }
}

TEST_CASE("parse and print") {
  CHECK(YoungDiagram::parse("2,1") == Y({2, 1}));
  CHECK(YoungDiagram::parse("") == YoungDiagram());
  CHECK(Y({3, 1}).str() == "3,1");
  CHECK_THROWS(YoungDiagram::parse("1,2"));
}

TEST_CASE("truncated lattice") {
  auto G = truncated_lattice(2, 2);
  CHECK(G.vertices == std::vector<YoungDiagram>{Y({}), Y({1}), Y({2}), Y({1, 1})});
  CHECK(G.edges.size() == 3);
  auto G3 = truncated_lattice(3, 4);
  CHECK(G3.vertices.size() == 8);
  std::set<YoungDiagram> want{Y({}), Y({1}), Y({2}), Y({1, 1}), Y({3}), Y({2, 1}), Y({1, 1, 1}), Y({2, 2})};
  CHECK(std::set<YoungDiagram>(G3.vertices.begin(), G3.vertices.end()) == want);
  CHECK(truncated_lattice(1, 9).vertices == std::vector<YoungDiagram>{Y({}), Y({1})});
  for (int N = 1; N <= 5; ++N) {
    auto T = truncated_lattice(N, 10);
    CHECK(T.vertices.size() == (1u << N));
    for (const auto& v : T.vertices)
      for (const auto& c : v.removable()) CHECK(T.index(v.remove(c)) >= 0);
    for (const auto& b : T.boundary) CHECK(b.h11() == N + 1);
  }
}

TEST_CASE("count loops") {
  auto full = full_lattice(8);
  for (int m = 0; m <= 7; ++m) CHECK(count_loops(full, m) == double_factorial(m));
  CHECK(count_loops(truncated_lattice(2, 4), 3) == 9);
  CHECK(count_loops(truncated_lattice(3, 4), 0) == 1);
  auto P = paths(truncated_lattice(2, 3), 3);
  CHECK(P.size() == 3);
  for (const auto& p : P) CHECK(p.steps.back() == Y({1}));
}

TEST_CASE("transpose") {
  CHECK(transpose_sym(Y({3, 1})) == Y({2, 1, 1}));
  CHECK(transpose_sym(Y({2, 2})) == Y({2, 2}));
  CHECK(transpose_sym(invertible_r(1, 3)) == invertible_r(3, 3));
  for (int n = 0; n <= 7; ++n)
    for (const auto& p : partitions(n)) CHECK(transpose_sym(transpose_sym(p)) == p);
}

TEST_CASE("g_tensor") {
  CHECK(g_tensor(Y({}), 3) == Y({1, 1, 1}));
  CHECK(g_tensor(Y({1, 1, 1}), 3) == Y({2, 2}));
  CHECK(g_tensor(Y({3}), 3) == Y({}));
  CHECK_THROWS_AS(g_tensor(Y({4}), 3), NotInY);
  for (int N = 1; N <= 5; ++N) {
    auto G = truncated_lattice(N, 12);
    for (const auto& v : G.vertices) {
      YoungDiagram w = v;
      for (int k = 0; k <= N; ++k) w = g_tensor(w, N);
      CHECK(w == v);
      CHECK(transpose_sym(g_tensor(transpose_sym(g_tensor(v, N)), N)) == v);
    }
    for (auto [a, b] : G.edges) {
      auto x = g_tensor(G.vertices[static_cast<std::size_t>(a)], N), y = g_tensor(G.vertices[static_cast<std::size_t>(b)], N);
      CHECK((covers(x, y) || covers(y, x)));
    }
  }
}

TEST_CASE("automorphisms") {
  CHECK(graph_automorphisms(truncated_lattice(2)).size() == 6);
  CHECK(graph_automorphisms(truncated_lattice(3)).size() == 8);
  CHECK(graph_automorphisms(truncated_lattice(1)).size() == 2);
  for (int N = 4; N <= 6; ++N) CHECK(graph_automorphisms(truncated_lattice(N)).size() == static_cast<std::size_t>(2 * (N + 1)));
  auto gens = automorphism_generators(truncated_lattice(4));
  CHECK(gens.size() <= 2);
}

TEST_CASE("dot and json") {
  auto G = truncated_lattice(2, 2);
  CHECK(G.dot().find("v0 -- v1") != std::string::npos);
  CHECK(G.json().find("\"vertices\":[[],[1],[2],[1,1]]") != std::string::npos);
}
