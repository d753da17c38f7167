#include "doctest.h"
#include "ybr/dims.hpp"
#include "ybr/fuse.hpp"

using namespace ybr;

namespace {

YoungDiagram Y(std::vector<int> r) { return YoungDiagram(std::move(r)); }

}  // namespace

TEST_CASE("invertible objects form a cyclic group") {
  for (int N = 1; N <= 6; ++N) {
    INFO("N=" << N);
    auto G = invertible_group(N);
    CHECK(G.associative());
    CHECK(G.cyclic());
    CHECK(G.table[static_cast<std::size_t>(N)][1] == 0);
    for (const auto& r : G.elements) CHECK(qdim_at(r, N).is_one());
  }
  auto G3 = invertible_group(3);
  CHECK(G3.elements == std::vector<YoungDiagram>{Y({}), Y({3}), Y({2, 2}), Y({1, 1, 1})});
  auto F2 = fusion_data(2);
  CHECK(F2.invertibles == std::vector<YoungDiagram>{Y({}), Y({2}), Y({1, 1})});
}

TEST_CASE("equivariantization graphs") {
  auto E2 = equivariantization_graph(2);
  CHECK(E2.vertices.size() == 5);
  CHECK(E2.is_path());
  auto d = E2.degrees();
  int pair = -1;
  for (std::size_t v = 0; v < E2.vertices.size(); ++v)
    if (E2.vertices[v].copy < 0) pair = static_cast<int>(v);
  REQUIRE(pair >= 0);
  CHECK(d[static_cast<std::size_t>(pair)] == 2);
  auto E3 = equivariantization_graph(3);
  CHECK(E3.fixed == 4);
  CHECK(E3.paired == 4);
  CHECK(E3.vertices.size() == 10);
  for (int N = 2; N <= 7; ++N) {
    auto E = equivariantization_graph(N);
    CHECK(static_cast<int>(E.vertices.size()) == 2 * E.fixed + E.paired / 2);
    CHECK(E.fixed + E.paired == static_cast<int>(truncated_lattice(N).vertices.size()));
  }
}

TEST_CASE("quotient categories") {
  auto Q = quotient_simples(3, 1, 0);
  CHECK(Q.simples.size() == 12);
  CHECK(Q.grading_modulus == 3);
  CHECK(Q.periodicity == 4);
  CHECK(Q.orbit_reps == std::vector<YoungDiagram>{Y({}), Y({1})});
  auto B = graded_branching(Q);
  CHECK(B.term_str(Q.find(Y({1}), 0)) == "e + [1]e^2 + [1]e^5");
  CHECK(B.term_str(Q.find(Y({}), 0)) == "[1]");

  auto Q11 = quotient_simples(3, 1, 1);
  CHECK(Q11.simples.size() == 20);
  CHECK(Q11.find(Y({}), 10) == Q11.find(Y({}), 0));
  CHECK(graded_branching(Q11).term_str(Q11.find(Y({1}), 0)) == "e + [1]e^3 + [1]e^8");

  auto Q201 = quotient_simples(2, 0, 1);
  CHECK(Q201.simples.size() == 4);
  CHECK_THROWS_AS(quotient_simples(3, 0, 0), InvalidParams);
}

TEST_CASE("quotient counting and dimension compatibility") {
  for (int N = 1; N <= 4; ++N)
    for (int k = 0; k <= 2; ++k)
      for (int l = 0; l <= 2; ++l) {
        if (k == 0 && l == 0) continue;
        INFO("N=" << N << " k=" << k << " l=" << l);
        auto Q = quotient_simples(N, k, l);
        long ny = static_cast<long>(truncated_lattice(N).vertices.size());
        CHECK(static_cast<long>(Q.simples.size()) * 2 == ny * Q.grading_modulus);
        bool free = true;
        for (int s : Q.orbit_sizes) free = free && s == Q.periodicity;
        if (free) CHECK(free_orbit_count(Q) == static_cast<long>(Q.simples.size()));
        auto B = graded_branching(Q);
        CycloElem delta = qdim_at(Y({1}), N);
        for (std::size_t s = 0; s < Q.simples.size(); ++s) {
          CycloElem sum(specialization_order(N));
          for (const auto& [t, mult] : B.rows[s])
            for (int r = 0; r < mult; ++r) sum += qdim_at(Q.simples[static_cast<std::size_t>(t)].rep, N);
          CHECK(sum == qdim_at(Q.simples[s].rep, N) * delta);
          int g = Q.simples[s].grade;
          for (const auto& [t, mult] : B.rows[s]) CHECK(Q.simples[static_cast<std::size_t>(t)].grade == (g + 1) % Q.grading_modulus);
        }
      }
}

TEST_CASE("subfactor indices") {
  auto S = subfactor_index(5, 2);
  CHECK(S.lambda == Y({2, 2}));
  CHECK(S.stabilizer_order == 3);
  CHECK(S.value == qdim_at(Y({2, 2}), 5) * qdim_at(Y({2, 2}), 5) / CycloElem(specialization_order(5), mpq_class(3)));
  CHECK_THROWS_AS(subfactor_index(4, 2), DivisibilityViolated);
  for (int N = 1; N <= 14; ++N)
    for (int m = 1; 2 * m - 1 <= N + 1; ++m) {
      if ((N + 1) % (2 * m - 1)) continue;
      INFO("N=" << N << " m=" << m);
      auto T = subfactor_index(N, m);
      CHECK(in_Y(T.lambda, N));
      CHECK(T.stabilizer_order == 2 * m - 1);
      CHECK((N + 1) % T.stabilizer_order == 0);
      CHECK(T.approx > 0);
    }
  CHECK(subfactor_index(3, 1).degenerate);
}
