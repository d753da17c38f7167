#pragma once

#include "ybr/exactnum.hpp"
#include "ybr/young.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace ybr {

struct StrandMismatch : std::invalid_argument {
  StrandMismatch() : std::invalid_argument("strand count mismatch") {}
};
struct VanishingQuantumInteger : std::domain_error {
  using std::domain_error::domain_error;
};
struct DegenerateNormalization : std::domain_error {
  using std::domain_error::domain_error;
};

// One-line notation, values 0..n-1, packed 4 bits per entry.
using PermCode = std::uint64_t;
PermCode perm_encode(const std::vector<int>& w);
std::vector<int> perm_decode(PermCode c, int n);
PermCode perm_identity(int n);

// Element of H_n in the basis T_w, with T_{s_i} = sigma_i.
class HeckeElem {
 public:
  HeckeElem() = default;
  explicit HeckeElem(int n) : n_(n) {}
  static HeckeElem identity(int n);
  static HeckeElem basis(int n, const std::vector<int>& w, FieldElem c = FieldElem(1));
  static HeckeElem sigma(int n, int i);      // 1 <= i < n
  static HeckeElem sigma_inv(int n, int i);
  static HeckeElem parse(const std::string& text, int n);  // "s1 s2 s1^-1"

  int n() const { return n_; }
  const std::map<PermCode, FieldElem>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  FieldElem coeff(const std::vector<int>& w) const;

  HeckeElem& operator+=(const HeckeElem& o);
  HeckeElem& operator-=(const HeckeElem& o);
  HeckeElem& operator*=(const FieldElem& s);
  friend HeckeElem operator+(HeckeElem a, const HeckeElem& b) { return a += b; }
  friend HeckeElem operator-(HeckeElem a, const HeckeElem& b) { return a -= b; }
  friend HeckeElem operator*(HeckeElem a, const FieldElem& s) { return a *= s; }
  friend HeckeElem operator*(const FieldElem& s, HeckeElem a) { return a *= s; }
  friend HeckeElem operator*(const HeckeElem& a, const HeckeElem& b);
  friend bool operator==(const HeckeElem& a, const HeckeElem& b) { return a.n_ == b.n_ && a.t_ == b.t_; }

  // x tensor 1^k (new strands on the right) and 1^k tensor x.
  HeckeElem extend_right(int k = 1) const;
  HeckeElem extend_left(int k = 1) const;
  // Anti-linear anti-automorphism sending sigma_i to its inverse.
  HeckeElem star() const;
  std::string json() const;

 private:
  int n_ = 0;
  std::map<PermCode, FieldElem> t_;
  void add_term(PermCode w, const FieldElem& c);
  friend HeckeElem mul_by_simple(const HeckeElem&, int);
};

HeckeElem hecke_mul(const HeckeElem& x, const HeckeElem& y);
HeckeElem hecke_pow(const HeckeElem& x, int e);
// Reduced word i_1..i_k with T_w = T_{i_1}...T_{i_k}.
std::vector<int> reduced_word(const std::vector<int>& w);

enum class SymKind { sym, antisym };
// f^(l) / g^(l) by the recursion in sigma_{l-1}; the second form uses 1 tensor f^(l-1) and sigma_1.
HeckeElem symmetrizer(int l, SymKind kind);
HeckeElem symmetrizer_left(int l, SymKind kind);

struct YoungIdem {
  YoungDiagram lambda;
  HeckeElem element;  // y_lambda
  FieldElem norm;     // m_lambda with dot-y squared = m_lambda dot-y
};
YoungIdem young_idempotent(const YoungDiagram& lam);

struct BranchMorphism {
  YoungDiagram mu, lambda;
  HeckeElem up;    // from y_mu tensor 1 to y_lambda
  HeckeElem down;  // from y_lambda to y_mu tensor 1
  FieldElem pairing_norm;
};
BranchMorphism branch(const YoungDiagram& mu, const YoungDiagram& lam);

// sigma_{n-1}...sigma_1 sigma_1...sigma_{n-1}
HeckeElem murphy(int n);

// Markov trace normalized by tr(1_n) = delta^n, tr(x sigma_{n-1} y) = r tr(xy).
FieldElem markov_trace(const HeckeElem& x);

}  // namespace ybr
