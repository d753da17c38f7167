#include "doctest.h"
#include "ybr/dims.hpp"
#include "ybr/tower.hpp"

#include <random>

using namespace ybr;

namespace {

template <class S>
void check_associative(const StructureAlgebra<S>& A, int samples, std::uint64_t seed) {
  int n = A.dim();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  bool exhaustive = n * n * n <= samples;
  int total = exhaustive ? n * n * n : samples;
  for (int t = 0; t < total; ++t) {
    int i = exhaustive ? t / (n * n) : pick(rng);
    int j = exhaustive ? (t / n) % n : pick(rng);
    int k = exhaustive ? t % n : pick(rng);
    auto e = [&](int a) {
      auto v = A.zero_vec();
      v[static_cast<std::size_t>(a)] = A.F.one();
      return v;
    };
    CHECK(A.mul(A.mul(e(i), e(j)), e(k)) == A.mul(e(i), A.mul(e(j), e(k))));
  }
}

template <class S>
void check_trace_property(const StructureAlgebra<S>& A, int samples, std::uint64_t seed) {
  int n = A.dim();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int t = 0; t < samples; ++t) {
    auto x = A.zero_vec(), y = A.zero_vec();
    for (int k = 0; k < n; ++k) {
      x[static_cast<std::size_t>(k)] = A.F.from(FieldElem(coef(rng)));
      y[static_cast<std::size_t>(k)] = A.F.from(FieldElem(coef(rng)));
    }
    CHECK(A.tr(A.mul(x, y)) == A.tr(A.mul(y, x)));
  }
}

}  // namespace

TEST_CASE("generic structure constants") {
  auto A1 = build_generic(1);
  CHECK(A1.dim() == 1);
  CHECK(A1.trace[0] == params().delta);
  auto A2 = build_generic(2);
  CHECK(A2.dim() == 3);
  CHECK(A2.kernel_dim == 0);
  auto h = A2.coords(Word{{'h', 1}});
  auto hh = A2.mul(h, h);
  for (std::size_t k = 0; k < hh.size(); ++k) CHECK(hh[k] == params().delta * h[k]);
  auto r = A2.coords(Word{{'r', 1}});
  auto rr = A2.mul(r, r);
  auto expect = A2.unit();
  for (std::size_t k = 0; k < rr.size(); ++k) expect[k] -= h[k] / params().delta;
  CHECK(rr == expect);
  check_associative(A2, 27, 1);
  check_trace_property(A2, 5, 2);
}

TEST_CASE("root of unity ranks") {
  std::vector<int> dims;
  for (int m = 1; m <= 3; ++m) dims.push_back(build_at(m, 2).dim());
  CHECK(dims == std::vector<int>{1, 3, 9});
  auto A3 = build_at(3, 2);
  CHECK(A3.kernel_dim == 6);
  check_associative(A3, 200, 3);
  check_trace_property(A3, 10, 4);
  CHECK(build_at(3, 3).kernel_dim == 0);
  CHECK(build_at(3, 4).kernel_dim == 0);
}

TEST_CASE("cutoff") {
  CHECK_THROWS_AS(build_generic(4), BoxesAboveCutoff);
  CHECK_THROWS_AS(build_generic(5, {1, true}), BoxesAboveCutoff);
}

TEST_CASE("generic three boxes") {
  auto A3 = build_generic(3);
  CHECK(A3.dim() == 15);
  check_associative(A3, 150, 5);
  check_trace_property(A3, 4, 6);
}

TEST_CASE("generic Bratteli diagram is the Young lattice") {
  auto B = bratteli_generic(3);
  CHECK(B.lattice_mismatches().empty());
  for (const auto& s : B.lattice_mismatches()) MESSAGE(s);
  std::map<YoungDiagram, int> sizes;
  for (const auto& b : B.levels[3]) sizes[b.label] = b.size;
  CHECK(sizes == std::map<YoungDiagram, int>{{YoungDiagram({1}), 3}, {YoungDiagram({3}), 1}, {YoungDiagram({2, 1}), 2}, {YoungDiagram({1, 1, 1}), 1}});
  CHECK(B.center_dims == std::vector<int>{1, 1, 3, 4});
  auto t2 = B.block_traces(2);
  CHECK(t2.at(YoungDiagram()) == FieldElem(1));
  CHECK(t2.at(YoungDiagram({2})) == qdim(YoungDiagram({2})));
  CHECK(B.block_traces(1).at(YoungDiagram({1})) == params().delta);
  for (int m = 0; m < 3; ++m)
    for (const auto& d : B.perron_defects(m)) CHECK(d.is_zero());
}

TEST_CASE("Bratteli diagrams at roots of unity") {
  for (int N : {2, 3}) {
    auto B = bratteli_at(3, N);
    INFO("N=" << N);
    CHECK(B.lattice_mismatches().empty());
    for (const auto& s : B.lattice_mismatches()) MESSAGE(s);
    for (int m = 0; m < 3; ++m)
      for (const auto& d : B.perron_defects(m)) CHECK(d.is_zero());
  }
  auto B2 = bratteli_at(3, 2);
  REQUIRE(B2.levels[3].size() == 1);
  CHECK(B2.levels[3][0].label == YoungDiagram({1}));
  CHECK(B2.levels[3][0].size == 3);
  for (const auto& b : B2.levels[2]) CHECK(b.trace == B2.algebras[0].F.one());
}

TEST_CASE("positivity certificates") {
  for (int m = 1; m <= 3; ++m) {
    auto rep = positivity_certificate(build_at(m, 2));
    INFO("m=" << m);
    CHECK(rep.hermitian);
    CHECK(rep.schur_complement_zero);
    CHECK(rep.positive_definite);
    CHECK(rep.kernel_dim == (m == 3 ? 6 : 0));
  }
  auto rep = positivity_certificate(build_at(3, 3));
  CHECK(rep.positive_definite);
  CHECK(rep.kernel_dim == 0);
}

TEST_CASE("kernel dimension matches loop counts") {
  for (int N = 1; N <= 4; ++N)
    for (int m = 1; m <= 3; ++m) {
      long dd = 1;
      for (int k = 2 * m - 1; k > 1; k -= 2) dd *= k;
      INFO("N=" << N << " m=" << m);
      CHECK(build_at(m, N).kernel_dim == dd - static_cast<long>(count_loops(truncated_lattice(N, m), m)));
    }
}
