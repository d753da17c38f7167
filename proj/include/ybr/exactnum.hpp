#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ybr {

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero") {}
};

struct PoleAtRootOfUnity : std::domain_error {
  explicit PoleAtRootOfUnity(int N)
      : std::domain_error("pole at q = exp(i*pi/" + std::to_string(2 * N + 2) + ")") {}
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

// Gaussian rational re + im*I.
class GaussRat {
 public:
  GaussRat() = default;
  GaussRat(long v) : re_(v) {}
  GaussRat(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }
  static GaussRat I() { return GaussRat(0, 1); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }
  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussRat conj() const { return GaussRat(re_, -im_); }
  GaussRat inv() const;
  mpq_class norm() const { return re_ * re_ + im_ * im_; }

  GaussRat& operator+=(const GaussRat& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussRat& operator-=(const GaussRat& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussRat& operator*=(const GaussRat& o);
  GaussRat& operator/=(const GaussRat& o) { return *this *= o.inv(); }

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
  GaussRat operator-() const { return GaussRat(-re_, -im_); }
  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }
  // Lexicographic order, only for use as a map key.
  friend bool operator<(const GaussRat& a, const GaussRat& b) {
    int c = cmp(a.re_, b.re_);
    return c != 0 ? c < 0 : cmp(a.im_, b.im_) < 0;
  }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }
  std::string str() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

// Laurent polynomial in q over GaussRat, dense with an offset; zero has no terms.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(GaussRat c, int exp = 0);
  LaurentPoly(long c) : LaurentPoly(GaussRat(c)) {}
  static LaurentPoly q(int exp = 1) { return LaurentPoly(GaussRat(1), exp); }

  bool is_zero() const { return c_.empty(); }
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(c_.size()) - 1; }
  std::size_t size() const { return c_.size(); }
  const GaussRat& coeff_at_index(std::size_t k) const { return c_[k]; }
  GaussRat coeff(int exp) const;
  const GaussRat& lead() const { return c_.back(); }
  bool is_monomial() const;
  bool is_constant() const { return is_zero() || (c_.size() == 1 && low_ == 0); }

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const GaussRat& s);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const GaussRat& s) { return a *= s; }
  LaurentPoly operator-() const;
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.c_ == b.c_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  LaurentPoly shifted(int k) const;
  // q -> q^-1 and coefficients conjugated.
  LaurentPoly conj() const;
  // q -> q^-1 without touching coefficients.
  LaurentPoly reflect() const;
  GaussRat eval(const GaussRat& x) const;
  std::complex<double> eval(std::complex<double> x) const;

  // Exact division by a polynomial; throws std::logic_error if not exact.
  LaurentPoly divexact(const LaurentPoly& d) const;
  // Polynomial gcd of q^-low * this and q^-low * o, made monic with low exponent 0.
  friend LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

  std::string str() const;

 private:
  void trim();
  int low_ = 0;
  std::vector<GaussRat> c_;
};

// Element of Q(i)(q) in canonical form.
class FieldElem {
 public:
  FieldElem() : num_(), den_(1) {}
  FieldElem(long v) : num_(v), den_(1) { if (v == 0) num_ = LaurentPoly(); }
  FieldElem(const GaussRat& c) : num_(c), den_(1) {}
  FieldElem(LaurentPoly num) : num_(std::move(num)), den_(1) { normalize(); }
  FieldElem(LaurentPoly num, LaurentPoly den);

  static FieldElem q(int exp = 1) { return FieldElem(LaurentPoly::q(exp)); }
  static FieldElem I() { return FieldElem(GaussRat::I()); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_ == LaurentPoly(1) && num_ == LaurentPoly(1); }

  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  FieldElem& operator*=(const FieldElem& o);
  FieldElem& operator/=(const FieldElem& o);
  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
  friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }
  FieldElem operator-() const;
  friend bool operator==(const FieldElem& a, const FieldElem& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

  FieldElem inv() const;
  FieldElem conj() const;
  FieldElem pow(int e) const;
  GaussRat eval(const GaussRat& x) const;
  std::complex<double> eval(std::complex<double> x) const;

  std::string str() const;
  static FieldElem parse(std::string_view text);

 private:
  void normalize();
  LaurentPoly num_;
  LaurentPoly den_;
};

enum class FieldOp { add, sub, mul, div, inv, conj };
FieldElem field_arith(const FieldElem& x, const FieldElem& y, FieldOp op);

// [n] = (q^n - q^-n)/(q - q^-1).
FieldElem qint(int n);

struct Params {
  FieldElem delta, r, a, b, D;
};
const Params& params();

// Element of Q(zeta_n) in the power basis modulo the n-th cyclotomic polynomial.
class CycloElem {
 public:
  CycloElem() = default;
  explicit CycloElem(int order);
  CycloElem(int order, const mpq_class& c);
  CycloElem(int order, const GaussRat& c);  // needs 4 | order
  static CycloElem zeta(int order, int k = 1);
  // Reduces sum p[k] zeta^k.
  static CycloElem from_poly(int order, std::vector<mpq_class> p);

  int order() const { return order_; }
  int degree() const { return static_cast<int>(c_.size()); }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_one() const;

  CycloElem& operator+=(const CycloElem& o);
  CycloElem& operator-=(const CycloElem& o);
  CycloElem& operator*=(const CycloElem& o);
  CycloElem& operator/=(const CycloElem& o) { return *this *= o.inv(); }
  friend CycloElem operator+(CycloElem a, const CycloElem& b) { return a += b; }
  friend CycloElem operator-(CycloElem a, const CycloElem& b) { return a -= b; }
  friend CycloElem operator*(CycloElem a, const CycloElem& b) { return a *= b; }
  friend CycloElem operator/(CycloElem a, const CycloElem& b) { return a /= b; }
  CycloElem operator-() const;
  friend bool operator==(const CycloElem& a, const CycloElem& b) {
    return a.order_ == b.order_ && a.c_ == b.c_;
  }
  friend bool operator!=(const CycloElem& a, const CycloElem& b) { return !(a == b); }

  CycloElem inv() const;
  CycloElem conj() const;
  bool is_real() const { return *this == conj(); }
  std::complex<double> to_complex() const;
  std::string str() const;

 private:
  static std::vector<mpq_class> reduce(std::vector<mpq_class> p, int order);
  int order_ = 0;
  std::vector<mpq_class> c_;
};

// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<long>& cyclotomic_poly(int n);
int euler_phi(int n);

// q -> zeta_{4N+4}, i -> zeta^{N+1}.
int specialization_order(int N);
CycloElem specialize(const FieldElem& x, int N);
CycloElem specialize(const LaurentPoly& x, int N);

// Sign of a real cyclotomic number, decided exactly at zero and by an
// interval enclosure otherwise. Throws CertificationInconclusive.
struct CertificationInconclusive : std::runtime_error {
  CertificationInconclusive() : std::runtime_error("certification inconclusive") {}
};
int certified_sign(const CycloElem& x);
// Midpoint and radius of an enclosure of a real cyclotomic number, as decimal strings.
std::pair<std::string, std::string> enclosure(const CycloElem& x, int bits);

// Laurent polynomial over (q - q^-1)^jz (q + q^-1)^jy; the ring in which
// closed-diagram values live. Canonical: numerator not divisible by a
// denominator factor with positive exponent.
class LocFrac {
 public:
  LocFrac() = default;
  LocFrac(long v) : num_(v) { if (v == 0) num_ = LaurentPoly(); }
  LocFrac(GaussRat c) : num_(std::move(c)) {}
  LocFrac(LaurentPoly num, int jz = 0, int jy = 0);

  static LocFrac z() { return LocFrac(LaurentPoly::q(1) - LaurentPoly::q(-1)); }
  static LocFrac y() { return LocFrac(LaurentPoly::q(1) + LaurentPoly::q(-1)); }
  static LocFrac q(int e = 1) { return LocFrac(LaurentPoly::q(e)); }

  const LaurentPoly& num() const { return num_; }
  int jz() const { return jz_; }
  int jy() const { return jy_; }
  bool is_zero() const { return num_.is_zero(); }

  LocFrac& operator+=(const LocFrac& o);
  LocFrac& operator-=(const LocFrac& o);
  LocFrac& operator*=(const LocFrac& o);
  friend LocFrac operator+(LocFrac a, const LocFrac& b) { return a += b; }
  friend LocFrac operator-(LocFrac a, const LocFrac& b) { return a -= b; }
  friend LocFrac operator*(LocFrac a, const LocFrac& b) { return a *= b; }
  LocFrac operator-() const;
  friend bool operator==(const LocFrac& a, const LocFrac& b) {
    return a.jz_ == b.jz_ && a.jy_ == b.jy_ && a.num_ == b.num_;
  }
  friend bool operator!=(const LocFrac& a, const LocFrac& b) { return !(a == b); }

  LocFrac div_z(int k = 1) const;
  LocFrac div_y(int k = 1) const;
  LocFrac scaled(const GaussRat& s) const;

  FieldElem to_field() const;
  CycloElem specialize(int N) const;
  std::complex<double> eval(std::complex<double> x) const;

 private:
  void normalize();
  LaurentPoly num_;
  int jz_ = 0;
  int jy_ = 0;
};

}  // namespace ybr
