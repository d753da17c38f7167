#include "ybr/dims.hpp"

#include <cmath>
#include <iomanip>
#include <mutex>
#include <sstream>

namespace ybr {

namespace {

const FieldElem& hook_factor(int h) {
  static std::mutex mu;
  static std::map<int, FieldElem> cache;
  std::lock_guard<std::mutex> lk(mu);
  auto it = cache.find(h);
  if (it == cache.end()) {
    LaurentPoly num = (LaurentPoly::q(h) + LaurentPoly::q(-h)) * GaussRat::I();
    it = cache.emplace(h, FieldElem(num, LaurentPoly::q(h) - LaurentPoly::q(-h))).first;
  }
  return it->second;
}

}  // namespace

FieldElem qdim(const YoungDiagram& lam) {
  static std::mutex mu;
  static std::map<YoungDiagram, FieldElem> cache;
  {
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(lam);
    if (it != cache.end()) return it->second;
  }
  FieldElem v(1);
  for (auto [c, h] : hooks(lam)) v *= hook_factor(h);
  std::lock_guard<std::mutex> lk(mu);
  return cache.emplace(lam, v).first->second;
}

CycloElem qdim_at(const YoungDiagram& lam, int N) { return specialize(qdim(lam), N); }

FieldElem cell_eig(const Cell& c) { return FieldElem::q(2 * content(c)); }

void ZFunction::multiply_factor(const FieldElem& root, int mult) {
  if (mult == 0) return;
  for (auto it = factors.begin(); it != factors.end(); ++it)
    if (it->first == root) {
      it->second += mult;
      if (it->second == 0) factors.erase(it);
      return;
    }
  factors.emplace_back(root, mult);
}

FieldElem ZFunction::eval(const FieldElem& u) const {
  FieldElem p = scale;
  for (const auto& [r, e] : factors) p *= (u - r).pow(e);
  return base + p;
}

FieldElem ZFunction::limit_at_infinity() const {
  int deg = 0;
  for (const auto& f : factors) deg += f.second;
  if (deg > 0) throw std::domain_error("Z has a pole at infinity");
  return deg == 0 ? base + scale : base;
}

FieldElem ZFunction::residue_over_u(const FieldElem& at) const {
  if (at.is_zero()) throw std::invalid_argument("residue at u=0");
  int e = 0;
  for (const auto& f : factors)
    if (f.first == at) e = f.second;
  if (e >= 0) return FieldElem();
  if (e < -1) throw RepeatedPole("repeated pole in Z(" + mu.str() + ",u)");
  FieldElem p = scale / at;
  for (const auto& [r, m] : factors)
    if (!(r == at)) p *= (at - r).pow(m);
  return p;
}

std::string ZFunction::str() const {
  std::string s = "(" + base.str() + ")+(" + scale.str() + ")";
  for (const auto& [r, e] : factors) s += "*(u-(" + r.str() + "))^" + std::to_string(e);
  return s;
}

bool operator==(const ZFunction& a, const ZFunction& b) {
  if (!(a.base == b.base) || !(a.scale == b.scale) || a.factors.size() != b.factors.size()) return false;
  for (const auto& f : a.factors) {
    bool found = false;
    for (const auto& g : b.factors)
      if (f.first == g.first) found = f.second == g.second;
    if (!found) return false;
  }
  return true;
}

ZFunction z_closed(const YoungDiagram& mu) {
  ZFunction z;
  z.mu = mu;
  z.base = params().delta / FieldElem(2);
  z.scale = z.base;
  for (const auto& c : mu.addable()) {
    FieldElem b = cell_eig(c);
    z.multiply_factor(-b, 1);
    z.multiply_factor(b, -1);
  }
  for (const auto& c : mu.removable()) {
    FieldElem b = cell_eig(c);
    z.multiply_factor(b, 1);
    z.multiply_factor(-b, -1);
  }
  return z;
}

ZFunction z_transfer(const ZFunction& z_nu, const Cell& c) {
  bool ok = false;
  for (const auto& a : z_nu.mu.addable()) ok = ok || a == c;
  if (!ok) throw InvalidCellAddition("cell (" + std::to_string(c.first) + "," + std::to_string(c.second) + ") not addable to " + z_nu.mu.str());
  ZFunction z = z_nu;
  z.mu = z_nu.mu.add(c);
  FieldElem b = cell_eig(c), q2 = FieldElem::q(2), qm2 = FieldElem::q(-2);
  z.multiply_factor(b, 2);
  z.multiply_factor(-qm2 * b, 1);
  z.multiply_factor(-q2 * b, 1);
  z.multiply_factor(-b, -2);
  z.multiply_factor(qm2 * b, -1);
  z.multiply_factor(q2 * b, -1);
  return z;
}

FieldElem dim_ratio_by_residue(const YoungDiagram& mu, const YoungDiagram& lam) {
  return z_closed(mu).residue_over_u(cell_eig(added_cell(mu, lam)));
}

DimTable dim_table(int max_cells, int N, double theta) {
  DimTable t;
  t.N = N;
  t.theta = N > 0 ? M_PI / (2 * N + 2) : theta;
  for (int n = 0; n <= max_cells; ++n)
    for (auto& p : partitions(n)) {
      if (N > 0 && !in_Y(p, N)) continue;
      t.diagrams.push_back(p);
      t.generic[p] = qdim(p);
      if (N > 0) t.special[p] = specialize(t.generic[p], N);
    }
  return t;
}

namespace {

std::string fmt_float(double v, int digits) {
  std::ostringstream os;
  os << std::setprecision(digits) << v;
  return os.str();
}

}  // namespace

std::string DimTable::csv(std::optional<int> float_digits) const {
  std::ostringstream os;
  os << "partition,cells,qdim";
  if (float_digits) os << ",float";
  os << "\n";
  std::complex<double> q = std::polar(1.0, theta);
  for (const auto& p : diagrams) {
    std::string exact = N > 0 ? special.at(p).str() : generic.at(p).str();
    os << "\"" << p.str() << "\"," << p.size() << ",\"" << exact << "\"";
    if (float_digits) {
      double v = N > 0 ? special.at(p).to_complex().real() : generic.at(p).eval(q).real();
      os << "," << fmt_float(v, *float_digits);
    }
    os << "\n";
  }
  return os.str();
}

std::string DimTable::json(std::optional<int> float_digits) const {
  std::ostringstream os;
  std::complex<double> q = std::polar(1.0, theta);
  os << "{\"N\":" << N << ",\"entries\":[";
  for (std::size_t k = 0; k < diagrams.size(); ++k) {
    const auto& p = diagrams[k];
    os << (k ? "," : "") << "{\"partition\":\"" << p.str() << "\",\"qdim\":\""
       << (N > 0 ? special.at(p).str() : generic.at(p).str()) << "\"";
    if (float_digits) {
      double v = N > 0 ? special.at(p).to_complex().real() : generic.at(p).eval(q).real();
      os << ",\"float\":" << fmt_float(v, *float_digits);
    }
    os << "}";
  }
  os << "]}";
  return os.str();
}

}  // namespace ybr
