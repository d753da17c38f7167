#pragma once

#include "ybr/exactnum.hpp"
#include "ybr/young.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ybr {

struct InvalidCellAddition : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct RepeatedPole : std::logic_error {
  using std::logic_error::logic_error;
};

FieldElem qdim(const YoungDiagram& lam);
CycloElem qdim_at(const YoungDiagram& lam, int N);
FieldElem cell_eig(const Cell& c);

// Z(mu,u) = base + scale * prod (u - root)^mult, kept factored.
struct ZFunction {
  YoungDiagram mu;
  FieldElem base;
  FieldElem scale;
  std::vector<std::pair<FieldElem, int>> factors;  // distinct roots, nonzero multiplicities

  void multiply_factor(const FieldElem& root, int mult);
  FieldElem eval(const FieldElem& u) const;
  FieldElem limit_at_infinity() const;
  // Residue of Z(mu,u)/u at a nonzero point.
  FieldElem residue_over_u(const FieldElem& at) const;
  std::string str() const;

  friend bool operator==(const ZFunction& a, const ZFunction& b);
};

ZFunction z_closed(const YoungDiagram& mu);
ZFunction z_transfer(const ZFunction& z_nu, const Cell& c);
FieldElem dim_ratio_by_residue(const YoungDiagram& mu, const YoungDiagram& lam);

struct DimTable {
  int N = 0;  // 0 for generic q
  double theta = 0;  // float column evaluates at q = exp(i theta)
  std::vector<YoungDiagram> diagrams;
  std::map<YoungDiagram, FieldElem> generic;
  std::map<YoungDiagram, CycloElem> special;

  std::string csv(std::optional<int> float_digits = std::nullopt) const;
  std::string json(std::optional<int> float_digits = std::nullopt) const;
};

// Generic table over all diagrams with at most max_cells cells, or the
// Y(N) table specialized at q = exp(i pi/(2N+2)).
DimTable dim_table(int max_cells, int N = 0, double theta = 0);

}  // namespace ybr
