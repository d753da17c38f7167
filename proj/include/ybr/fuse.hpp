#pragma once

#include "ybr/exactnum.hpp"
#include "ybr/young.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ybr {

struct InvalidParams : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct DivisibilityViolated : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct FusionData {
  int N = 0;
  std::vector<YoungDiagram> simples;  // Y(N)
  std::vector<CycloElem> qdims;
  LatticeGraph principal_graph;       // YL(N)
  std::vector<YoungDiagram> invertibles;  // r_0 .. r_N
};
FusionData fusion_data(int N);

// r_k tensor lam, with tensoring by r_N = [1^N] as the generator.
YoungDiagram tensor_invertible(const YoungDiagram& lam, int k, int N);
// All k in 0..N with r_k tensor lam = lam.
std::vector<int> stabilizer(const YoungDiagram& lam, int N);

struct GroupTable {
  int N = 0;
  std::vector<YoungDiagram> elements;  // r_0 .. r_N
  std::vector<std::vector<int>> table; // table[a][b] = index of r_a tensor r_b
  bool associative() const;
  // Generated by r_1 with r_k tensor r_1 = r_{k+1 mod N+1}.
  bool cyclic() const;
  std::string json() const;
};
GroupTable invertible_group(int N);

struct EquivVertex {
  YoungDiagram lambda;  // the transpose-fixed diagram, or the larger of a transpose pair
  int copy = -1;        // 0 or 1 for fixed diagrams, -1 for pairs
  std::string name() const;
};
struct EquivGraph {
  int N = 0;
  std::vector<EquivVertex> vertices;
  std::vector<std::pair<int, int>> edges;
  int fixed = 0;   // transpose-fixed diagrams of Y(N)
  int paired = 0;  // diagrams of Y(N) not fixed
  std::vector<int> degrees() const;
  bool is_path() const;
  std::string dot() const;
  std::string json() const;
};
EquivGraph equivariantization_graph(int N);

struct GradedSimple {
  YoungDiagram rep;  // orbit representative
  int t = 0;         // power of e
  int grade = 0;     // |rep| + 2t mod kN+2l
};

struct QuotientCategory {
  int N = 0, k = 0, l = 0;
  int grading_modulus = 0;  // kN + 2l
  int periodicity = 0;      // (N+1)/gcd(N+1,k)
  std::vector<YoungDiagram> orbit_reps;
  std::vector<int> orbit_sizes;
  std::vector<GradedSimple> simples;

  // Index of the simple equivalent to lam tensor e^t.
  int find(const YoungDiagram& lam, long t) const;
  std::string name(int s) const;
  std::string json() const;
};
QuotientCategory quotient_simples(int N, int k, int l);
// Orbit count times periodicity times (kN+2l)/2, the count when every orbit is free.
long free_orbit_count(const QuotientCategory& Q);

struct BranchTerm {
  int target = 0;
  int multiplicity = 0;
};
struct GradedBranching {
  QuotientCategory Q;
  std::vector<std::vector<BranchTerm>> rows;  // s tensor X
  std::string term_str(int s) const;          // "e + [1]e^2 + [1]e^5"
  std::string dot() const;
  std::string json() const;
};
GradedBranching graded_branching(const QuotientCategory& Q);

struct SubfactorIndex {
  int N = 0, m = 0, k = 0;
  YoungDiagram lambda;
  int stabilizer_order = 0;
  CycloElem value;
  double approx = 0;
  bool degenerate = false;  // m = 1
  std::string json() const;
};
// Staircase of k x k blocks with m-1, m-2, ..., 1 blocks per block row, (2m-1)k = N+1.
YoungDiagram blocked_staircase(int N, int m);
SubfactorIndex subfactor_index(int N, int m);

}  // namespace ybr
