#include "doctest.h"
#include "ybr/dims.hpp"

#include <cmath>

using namespace ybr;

namespace {

YoungDiagram Y(std::vector<int> r) { return YoungDiagram(std::move(r)); }

double cot(double x) { return std::cos(x) / std::sin(x); }

double hook_product(const YoungDiagram& d, double theta) {
  double v = 1;
  for (auto [c, h] : hooks(d)) v *= cot(h * theta);
  return v;
}

}  // namespace

TEST_CASE("qdim examples") {
  CHECK(qdim(Y({})) == FieldElem(1));
  CHECK(qdim(Y({1})) == params().delta);
  CHECK(std::abs(qdim_at(Y({2, 2}), 3).to_complex() - 1.0) < 1e-12);
  CHECK(qdim_at(Y({2, 2}), 3).is_one());
  for (int n = 0; n <= 6; ++n)
    for (const auto& p : partitions(n)) {
      double th = 0.37;
      CHECK(std::abs(qdim(p).eval(std::polar(1.0, th)) - hook_product(p, th)) < 1e-9);
      CHECK(qdim(p) == qdim(transpose_sym(p)));
    }
}

TEST_CASE("cell eigenvalues") {
  CHECK(cell_eig({1, 2}) == FieldElem::q(2));
  CHECK(cell_eig({1, 1}) == FieldElem(1));
  CHECK(cell_eig({2, 1}) == FieldElem::q(-2));
}

TEST_CASE("Z closed form") {
  FieldElem d = params().delta, u0 = FieldElem::parse("3/7+2*I");
  ZFunction z0 = z_closed(Y({}));
  CHECK(z0.eval(u0) == d * u0 / (u0 - 1));
  ZFunction z1 = z_closed(Y({1}));
  FieldElem q2 = FieldElem::q(2), qm2 = FieldElem::q(-2);
  FieldElem want = d / 2 + d / 2 * ((u0 + q2) / (u0 - q2)) * ((u0 + qm2) / (u0 - qm2)) * ((u0 - 1) / (u0 + 1));
  CHECK(z1.eval(u0) == want);
  for (int n = 0; n <= 4; ++n)
    for (const auto& p : partitions(n)) CHECK(z_closed(p).limit_at_infinity() == d);
}

TEST_CASE("Z transfer") {
  CHECK(z_transfer(z_closed(Y({})), {1, 1}) == z_closed(Y({1})));
  CHECK(z_transfer(z_transfer(z_closed(Y({})), {1, 1}), {1, 2}) == z_closed(Y({2})));
  CHECK_THROWS_AS(z_transfer(z_closed(Y({1})), {2, 2}), InvalidCellAddition);
  for (int n = 0; n <= 4; ++n)
    for (const auto& p : partitions(n))
      for (const auto& c : p.addable()) {
        ZFunction t = z_transfer(z_closed(p), c);
        CHECK(t == z_closed(p.add(c)));
        // undo the transfer factors
        FieldElem b = cell_eig(c), q2 = FieldElem::q(2), qm2 = FieldElem::q(-2);
        t.multiply_factor(b, -2);
        t.multiply_factor(-qm2 * b, -1);
        t.multiply_factor(-q2 * b, -1);
        t.multiply_factor(-b, 2);
        t.multiply_factor(qm2 * b, 1);
        t.multiply_factor(q2 * b, 1);
        t.mu = p;
        CHECK(t == z_closed(p));
      }
}

TEST_CASE("residues") {
  CHECK(dim_ratio_by_residue(Y({}), Y({1})) == params().delta);
  CHECK(dim_ratio_by_residue(Y({1}), Y({2})) == qdim(Y({2})) / params().delta);
  CHECK(dim_ratio_by_residue(Y({1}), Y({1, 1})) == qdim(Y({1, 1})) / params().delta);
  for (int n = 0; n <= 3; ++n)
    for (const auto& mu : partitions(n))
      for (const auto& c : mu.addable()) CHECK(dim_ratio_by_residue(mu, mu.add(c)) == qdim(mu.add(c)) / qdim(mu));
}

TEST_CASE("trace identities") {
  FieldElem d = params().delta;
  CHECK(qdim(Y({2})) + qdim(Y({1, 1})) + 1 == d * d);
  for (int n = 0; n <= 4; ++n)
    for (const auto& mu : partitions(n)) {
      FieldElem s;
      for (const auto& c : mu.addable()) s += qdim(mu.add(c));
      for (const auto& c : mu.removable()) s += qdim(mu.remove(c));
      CHECK(s == d * qdim(mu));
    }
  for (int N = 1; N <= 6; ++N)
    for (int k = 0; k <= N; ++k) CHECK(qdim_at(invertible_r(k, N), N).is_one());
  for (int N = 2; N <= 3; ++N)
    for (const auto& b : truncated_lattice(N, 7).boundary) CHECK(qdim_at(b, N).is_zero());
}

TEST_CASE("tables") {
  DimTable t = dim_table(6, 3);
  CHECK(t.diagrams.size() == 8);
  std::string csv = t.csv(8);
  CHECK(csv.find("\"2,2\",4,\"1\",1") != std::string::npos);
  DimTable g = dim_table(2, 0, M_PI / 6);
  CHECK(g.json(6).find("\"partition\":\"1\"") != std::string::npos);
}
