#include "ybr/exactnum.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cctype>
#include <cmath>
#include <mutex>
#include <sstream>

namespace ybr {

// ---- GaussRat

GaussRat& GaussRat::operator*=(const GaussRat& o) {
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

GaussRat GaussRat::inv() const {
  if (is_zero()) throw DivisionByZero();
  mpq_class n = norm();
  return GaussRat(re_ / n, -im_ / n);
}

std::string GaussRat::str() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string imag;
  if (im_ == 1)
    imag = "I";
  else if (im_ == -1)
    imag = "-I";
  else
    imag = im_.get_str() + "*I";
  if (sgn(re_) == 0) return imag;
  return re_.get_str() + (sgn(im_) > 0 ? "+" : "") + imag;
}

// ---- polynomial helpers (index = degree)

namespace {

using Poly = std::vector<GaussRat>;

void ptrim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

void pdivmod(Poly a, const Poly& b, Poly* quo, Poly* rem) {
  ptrim(a);
  if (b.empty()) throw DivisionByZero();
  GaussRat li = b.back().inv();
  Poly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, GaussRat());
  while (a.size() >= b.size() && !a.empty()) {
    std::size_t s = a.size() - b.size();
    GaussRat c = a.back() * li;
    for (std::size_t k = 0; k < b.size(); ++k) a[s + k] -= c * b[k];
    a.pop_back();
    q[s] = c;
    ptrim(a);
  }
  if (quo) *quo = std::move(q);
  if (rem) *rem = std::move(a);
}

void pmonic(Poly& p) {
  if (p.empty() || p.back().is_one()) return;
  GaussRat li = p.back().inv();
  for (auto& c : p) c *= li;
}

Poly pgcd(Poly a, Poly b) {
  ptrim(a);
  ptrim(b);
  while (!b.empty()) {
    Poly r;
    pdivmod(a, b, nullptr, &r);
    a = std::move(b);
    b = std::move(r);
    pmonic(b);
  }
  pmonic(a);
  return a;
}

}  // namespace

// ---- LaurentPoly

LaurentPoly::LaurentPoly(GaussRat c, int exp) {
  if (!c.is_zero()) {
    low_ = exp;
    c_.push_back(std::move(c));
  }
}

void LaurentPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  std::size_t k = 0;
  while (k < c_.size() && c_[k].is_zero()) ++k;
  if (k == c_.size()) {
    c_.clear();
    low_ = 0;
    return;
  }
  if (k > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(k));
    low_ += static_cast<int>(k);
  }
}

GaussRat LaurentPoly::coeff(int exp) const {
  if (c_.empty() || exp < low_ || exp > high()) return GaussRat();
  return c_[static_cast<std::size_t>(exp - low_)];
}

bool LaurentPoly::is_monomial() const { return c_.size() == 1; }

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.c_.empty()) return *this;
  if (c_.empty()) return *this = o;
  int lo = std::min(low_, o.low_), hi = std::max(high(), o.high());
  if (lo < low_) {
    c_.insert(c_.begin(), static_cast<std::size_t>(low_ - lo), GaussRat());
    low_ = lo;
  }
  c_.resize(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[static_cast<std::size_t>(o.low_ - lo) + k] += o.c_[k];
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const GaussRat& s) {
  if (s.is_zero()) {
    c_.clear();
    low_ = 0;
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  if (a.c_.empty() || b.c_.empty()) return r;
  r.low_ = a.low_ + b.low_;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, GaussRat());
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  r.trim();
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  if (!r.c_.empty()) r.low_ += k;
  return r;
}

LaurentPoly LaurentPoly::reflect() const {
  LaurentPoly r;
  if (c_.empty()) return r;
  r.low_ = -high();
  r.c_.assign(c_.rbegin(), c_.rend());
  return r;
}

LaurentPoly LaurentPoly::conj() const {
  LaurentPoly r = reflect();
  for (auto& c : r.c_) c = c.conj();
  return r;
}

GaussRat LaurentPoly::eval(const GaussRat& x) const {
  if (c_.empty()) return GaussRat();
  GaussRat acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  GaussRat p(1), base = low_ >= 0 ? x : x.inv();
  for (int k = 0; k < std::abs(low_); ++k) p *= base;
  return acc * p;
}

std::complex<double> LaurentPoly::eval(std::complex<double> x) const {
  std::complex<double> acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_complex();
  return acc * std::pow(x, low_);
}

LaurentPoly LaurentPoly::divexact(const LaurentPoly& d) const {
  if (d.is_zero()) throw DivisionByZero();
  if (is_zero()) return {};
  Poly q, r;
  pdivmod(c_, d.c_, &q, &r);
  if (!r.empty()) throw std::logic_error("inexact polynomial division");
  LaurentPoly out;
  out.c_ = std::move(q);
  out.low_ = low_ - d.low_;
  out.trim();
  return out;
}

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly g;
  g.c_ = pgcd(a.c_, b.c_);
  g.low_ = 0;
  g.trim();
  return g;
}

std::string LaurentPoly::str() const {
  if (c_.empty()) return "0";
  std::string out;
  for (int e = high(); e >= low_; --e) {
    const GaussRat& c = c_[static_cast<std::size_t>(e - low_)];
    if (c.is_zero()) continue;
    std::string mono = e == 0 ? "" : (e == 1 ? "q" : "q^" + std::to_string(e));
    std::string cs;
    bool neg = false;
    if (c.is_real() || sgn(c.re()) == 0) {
      GaussRat a = c;
      if (sgn(c.re()) < 0 || (sgn(c.re()) == 0 && sgn(c.im()) < 0)) {
        neg = true;
        a = -c;
      }
      if (a.is_one() && !mono.empty())
        cs = "";
      else
        cs = a.str();
    } else {
      cs = "(" + c.str() + ")";
    }
    std::string term;
    if (cs.empty())
      term = mono;
    else if (mono.empty())
      term = cs;
    else
      term = cs + "*" + mono;
    if (out.empty())
      out = (neg ? "-" : "") + term;
    else
      out += (neg ? "-" : "+") + term;
  }
  return out;
}

// ---- FieldElem

FieldElem::FieldElem(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero();
  normalize();
}

void FieldElem::normalize() {
  if (num_.is_zero()) {
    num_ = LaurentPoly();
    den_ = LaurentPoly(1);
    return;
  }
  int off = num_.low() - den_.low();
  LaurentPoly p = num_.shifted(-num_.low()), d = den_.shifted(-den_.low());
  if (!d.is_monomial()) {
    LaurentPoly g = gcd(p, d);
    if (g.size() > 1) {
      p = p.divexact(g);
      d = d.divexact(g);
    }
  }
  GaussRat li = d.lead().inv();
  num_ = (p * li).shifted(off);
  den_ = d * li;
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_constant()) normalize();
    else if (num_.is_zero()) den_ = LaurentPoly(1);
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) { return *this += -o; }

FieldElem& FieldElem::operator*=(const FieldElem& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = FieldElem();
  num_ = num_ * o.num_;
  if (o.den_.is_constant() && den_.is_constant()) return *this;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

FieldElem& FieldElem::operator/=(const FieldElem& o) { return *this *= o.inv(); }

FieldElem FieldElem::operator-() const {
  FieldElem r = *this;
  r.num_ = -r.num_;
  return r;
}

FieldElem FieldElem::inv() const {
  if (is_zero()) throw DivisionByZero();
  return FieldElem(den_, num_);
}

FieldElem FieldElem::conj() const { return FieldElem(num_.conj(), den_.conj()); }

FieldElem FieldElem::pow(int e) const {
  if (e < 0) return inv().pow(-e);
  FieldElem r(1), b = *this;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

GaussRat FieldElem::eval(const GaussRat& x) const {
  GaussRat d = den_.eval(x);
  if (d.is_zero()) throw DivisionByZero();
  return num_.eval(x) / d;
}

std::complex<double> FieldElem::eval(std::complex<double> x) const { return num_.eval(x) / den_.eval(x); }

std::string FieldElem::str() const {
  if (den_ == LaurentPoly(1)) return num_.str();
  auto wrap = [](const LaurentPoly& p) {
    std::string s = p.str();
    return p.size() > 1 || s.find_first_of("+-*/") != std::string::npos ? "(" + s + ")" : s;
  };
  return wrap(num_) + "/" + wrap(den_);
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  FieldElem run() {
    FieldElem v = expr();
    skip();
    if (p_ != s_.size()) throw ParseError("unexpected '" + std::string(1, s_[p_]) + "'", p_);
    return v;
  }

 private:
  void skip() {
    while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
  }
  bool eat(char c) {
    skip();
    if (p_ < s_.size() && s_[p_] == c) {
      ++p_;
      return true;
    }
    return false;
  }
  bool starts_primary() {
    skip();
    if (p_ >= s_.size()) return false;
    char c = s_[p_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'q' || c == 'I' || c == 'i' || c == '(';
  }
  FieldElem expr() {
    FieldElem v;
    bool first = true;
    for (;;) {
      bool neg = false;
      if (eat('-'))
        neg = true;
      else if (!first && !eat('+'))
        break;
      else if (first)
        eat('+');
      FieldElem t = term();
      v = neg ? v - t : v + t;
      first = false;
      skip();
      if (p_ >= s_.size() || (s_[p_] != '+' && s_[p_] != '-')) break;
    }
    return v;
  }
  FieldElem term() {
    FieldElem v = factor();
    for (;;) {
      if (eat('*'))
        v *= factor();
      else if (eat('/')) {
        std::size_t at = p_;
        FieldElem d = factor();
        if (d.is_zero()) throw ParseError("division by zero", at);
        v /= d;
      } else if (starts_primary())
        v *= factor();
      else
        break;
    }
    return v;
  }
  FieldElem factor() {
    FieldElem b = primary();
    if (eat('^')) {
      bool neg = eat('-');
      skip();
      std::size_t at = p_;
      long e = integer();
      if (neg) e = -e;
      if (e < 0 && b.is_zero()) throw ParseError("division by zero", at);
      b = b.pow(static_cast<int>(e));
    }
    return b;
  }
  long integer() {
    skip();
    std::size_t st = p_;
    while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
    if (st == p_) throw ParseError("expected integer", p_);
    return std::stol(std::string(s_.substr(st, p_ - st)));
  }
  FieldElem primary() {
    skip();
    if (p_ >= s_.size()) throw ParseError("unexpected end of input", p_);
    char c = s_[p_];
    if (c == '(') {
      ++p_;
      FieldElem v = expr();
      if (!eat(')')) throw ParseError("expected ')'", p_);
      return v;
    }
    if (c == 'q') {
      ++p_;
      return FieldElem::q();
    }
    if (c == 'I' || c == 'i') {
      ++p_;
      return FieldElem::I();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t st = p_;
      while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
      mpz_class z(std::string(s_.substr(st, p_ - st)));
      return FieldElem(GaussRat(mpq_class(z)));
    }
    throw ParseError("unexpected '" + std::string(1, c) + "'", p_);
  }

  std::string_view s_;
  std::size_t p_ = 0;
};

}  // namespace

FieldElem FieldElem::parse(std::string_view text) { return Parser(text).run(); }

FieldElem field_arith(const FieldElem& x, const FieldElem& y, FieldOp op) {
  switch (op) {
    case FieldOp::add: return x + y;
    case FieldOp::sub: return x - y;
    case FieldOp::mul: return x * y;
    case FieldOp::div: return x / y;
    case FieldOp::inv: return x.inv();
    case FieldOp::conj: return x.conj();
  }
  return x;
}

FieldElem qint(int n) {
  if (n < 0) throw std::invalid_argument("qint: negative argument");
  return FieldElem(LaurentPoly::q(n) - LaurentPoly::q(-n), LaurentPoly::q(1) - LaurentPoly::q(-1));
}

const Params& params() {
  static const Params p = [] {
    FieldElem q = FieldElem::q(), qi = FieldElem::q(-1), I = FieldElem::I();
    FieldElem z = q - qi, y = q + qi;
    Params r;
    r.delta = I * y / z;
    r.r = I * qi;
    r.a = z / FieldElem(2);
    r.b = z / (FieldElem(2) * I);
    r.D = y / FieldElem(2);
    return r;
  }();
  return p;
}

// ---- cyclotomic

int euler_phi(int n) {
  int r = n;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      r -= r / p;
    }
  if (n > 1) r -= r / n;
  return r;
}

const std::vector<long>& cyclotomic_poly(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<long>> cache;
  std::lock_guard<std::mutex> lk(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // x^n - 1 divided by Phi_d for proper divisors d
  std::vector<long> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d) continue;
    std::vector<long> f;
    {
      auto jt = cache.find(d);
      if (jt == cache.end()) {
        mu.unlock();
        f = cyclotomic_poly(d);
        mu.lock();
      } else {
        f = jt->second;
      }
    }
    std::vector<long> q(p.size() - f.size() + 1, 0);
    for (std::size_t k = p.size(); k-- >= f.size();) {
      long c = p[k];
      std::size_t s = k - (f.size() - 1);
      q[s] = c;
      for (std::size_t j = 0; j < f.size(); ++j) p[s + j] -= c * f[j];
      if (k == f.size() - 1) break;
    }
    p = std::move(q);
  }
  return cache.emplace(n, p).first->second;
}

CycloElem::CycloElem(int order) : order_(order), c_(static_cast<std::size_t>(euler_phi(order))) {}

CycloElem::CycloElem(int order, const mpq_class& c) : CycloElem(order) { c_[0] = c; }

CycloElem::CycloElem(int order, const GaussRat& c) : CycloElem(order) {
  if (order % 4) throw std::invalid_argument("I not in this cyclotomic field");
  std::vector<mpq_class> p(static_cast<std::size_t>(order / 4) + 1);
  p[0] = c.re();
  p[static_cast<std::size_t>(order / 4)] += c.im();
  c_ = reduce(std::move(p), order);
}

CycloElem CycloElem::from_poly(int order, std::vector<mpq_class> p) {
  CycloElem r(order);
  r.c_ = reduce(std::move(p), order);
  return r;
}

CycloElem CycloElem::zeta(int order, int k) {
  k %= order;
  if (k < 0) k += order;
  CycloElem r(order);
  std::vector<mpq_class> p(static_cast<std::size_t>(k) + 1);
  p[static_cast<std::size_t>(k)] = 1;
  r.c_ = reduce(std::move(p), order);
  return r;
}

std::vector<mpq_class> CycloElem::reduce(std::vector<mpq_class> p, int order) {
  const auto& f = cyclotomic_poly(order);
  std::size_t d = f.size() - 1;
  for (std::size_t k = p.size(); k-- > d;) {
    if (sgn(p[k]) == 0) continue;
    mpq_class c = p[k];
    std::size_t s = k - d;
    for (std::size_t j = 0; j <= d; ++j)
      if (f[j]) p[s + j] -= c * f[j];
  }
  p.resize(d);
  return p;
}

bool CycloElem::is_zero() const {
  for (const auto& c : c_)
    if (sgn(c) != 0) return false;
  return true;
}

bool CycloElem::is_one() const {
  if (c_.empty() || c_[0] != 1) return false;
  for (std::size_t k = 1; k < c_.size(); ++k)
    if (sgn(c_[k]) != 0) return false;
  return true;
}

CycloElem& CycloElem::operator+=(const CycloElem& o) {
  if (order_ == 0) return *this = o;
  if (o.order_ == 0) return *this;
  if (order_ != o.order_) throw std::invalid_argument("cyclotomic order mismatch");
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

CycloElem& CycloElem::operator-=(const CycloElem& o) { return *this += -o; }

CycloElem& CycloElem::operator*=(const CycloElem& o) {
  if (order_ != o.order_) throw std::invalid_argument("cyclotomic order mismatch");
  std::vector<mpq_class> p(2 * c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      if (sgn(o.c_[j]) != 0) p[i + j] += c_[i] * o.c_[j];
  }
  c_ = reduce(std::move(p), order_);
  return *this;
}

CycloElem CycloElem::operator-() const {
  CycloElem r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

CycloElem CycloElem::inv() const {
  if (is_zero()) throw DivisionByZero();
  // extended Euclid over Q: find s with s*a = 1 mod Phi
  using QP = std::vector<mpq_class>;
  auto trim = [](QP& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
  };
  auto divmod = [&](QP a, const QP& b, QP& q) {
    q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    while (a.size() >= b.size() && !a.empty()) {
      std::size_t s = a.size() - b.size();
      mpq_class c = a.back() / b.back();
      for (std::size_t k = 0; k < b.size(); ++k) a[s + k] -= c * b[k];
      q[s] = c;
      a.pop_back();
      trim(a);
    }
    return a;
  };
  auto sub_mul = [&](const QP& x, const QP& q, const QP& y) {
    QP r(std::max(x.size(), q.size() + y.size()), 0);
    for (std::size_t k = 0; k < x.size(); ++k) r[k] += x[k];
    for (std::size_t i = 0; i < q.size(); ++i)
      for (std::size_t j = 0; j < y.size(); ++j) r[i + j] -= q[i] * y[j];
    trim(r);
    return r;
  };
  const auto& f = cyclotomic_poly(order_);
  QP r0(f.begin(), f.end()), r1 = c_;
  trim(r1);
  QP s0, s1{1};
  while (!(r1.size() == 1)) {
    QP q;
    QP r2 = divmod(r0, r1, q);
    QP s2 = sub_mul(s0, q, s1);
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  for (auto& c : s1) c /= r1[0];
  CycloElem out(order_);
  out.c_ = reduce(std::move(s1), order_);
  return out;
}

CycloElem CycloElem::conj() const {
  std::vector<mpq_class> p(static_cast<std::size_t>(order_) + 1);
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (sgn(c_[k]) == 0) continue;
    std::size_t e = k == 0 ? 0 : static_cast<std::size_t>(order_) - k;
    p[e] += c_[k];
  }
  CycloElem out(order_);
  out.c_ = reduce(std::move(p), order_);
  return out;
}

std::complex<double> CycloElem::to_complex() const {
  std::complex<double> acc = 0;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (sgn(c_[k]) == 0) continue;
    double t = 2 * M_PI * static_cast<double>(k) / order_;
    acc += c_[k].get_d() * std::complex<double>(std::cos(t), std::sin(t));
  }
  return acc;
}

std::string CycloElem::str() const {
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (sgn(c_[k]) == 0) continue;
    mpq_class a = abs(c_[k]);
    bool neg = sgn(c_[k]) < 0;
    std::string mono = k == 0 ? "" : (k == 1 ? "z" : "z^" + std::to_string(k));
    std::string term = mono.empty() ? a.get_str() : (a == 1 ? mono : a.get_str() + "*" + mono);
    if (out.empty())
      out = (neg ? "-" : "") + term;
    else
      out += (neg ? "-" : "+") + term;
  }
  return out.empty() ? "0" : out;
}

int specialization_order(int N) { return 4 * N + 4; }

CycloElem specialize(const LaurentPoly& x, int N) {
  int n = specialization_order(N);
  std::vector<mpq_class> p(static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < x.size(); ++k) {
    const GaussRat& c = x.coeff_at_index(k);
    if (c.is_zero()) continue;
    int e = (x.low() + static_cast<int>(k)) % n;
    if (e < 0) e += n;
    p[static_cast<std::size_t>(e)] += c.re();
    p[static_cast<std::size_t>((e + N + 1) % n)] += c.im();
  }
  return CycloElem::from_poly(n, std::move(p));
}

CycloElem specialize(const FieldElem& x, int N) {
  CycloElem d = specialize(x.den(), N);
  if (d.is_zero()) throw PoleAtRootOfUnity(N);
  return specialize(x.num(), N) / d;
}

// ---- certified sign

namespace {

template <unsigned Bits>
std::pair<boost::multiprecision::number<boost::multiprecision::cpp_bin_float<Bits, boost::multiprecision::digit_base_2>>,
          boost::multiprecision::number<boost::multiprecision::cpp_bin_float<Bits, boost::multiprecision::digit_base_2>>>
ball(const CycloElem& x) {
  using F = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<Bits, boost::multiprecision::digit_base_2>>;
  F mid = 0, mag = 0;
  F tau = boost::math::constants::two_pi<F>();
  for (std::size_t k = 0; k < x.coeffs().size(); ++k) {
    const mpq_class& c = x.coeffs()[k];
    if (sgn(c) == 0) continue;
    F v = F(c.get_num().get_str()) / F(c.get_den().get_str());
    F t = cos(tau * F(static_cast<long>(k)) / F(x.order()));
    mid += v * t;
    mag += abs(v);
  }
  // each coefficient term carries a few ulps of relative error
  F rad = (mag + 1) * ldexp(F(1), -static_cast<int>(Bits) + 16);
  return {mid, rad};
}

template <unsigned Bits>
int try_sign(const CycloElem& x) {
  auto [m, r] = ball<Bits>(x);
  if (m > r) return 1;
  if (m < -r) return -1;
  return 0;
}

}  // namespace

int certified_sign(const CycloElem& x) {
  if (x.is_zero()) return 0;
  if (!x.is_real()) throw std::invalid_argument("certified_sign: not real");
  if (int s = try_sign<128>(x)) return s;
  if (int s = try_sign<256>(x)) return s;
  if (int s = try_sign<512>(x)) return s;
  throw CertificationInconclusive();
}

std::pair<std::string, std::string> enclosure(const CycloElem& x, int bits) {
  auto fmt = [](const auto& v) {
    std::ostringstream os;
    os.precision(40);
    os << v;
    return os.str();
  };
  if (bits <= 128) {
    auto [m, r] = ball<128>(x);
    return {fmt(m), fmt(r)};
  }
  if (bits <= 256) {
    auto [m, r] = ball<256>(x);
    return {fmt(m), fmt(r)};
  }
  auto [m, r] = ball<512>(x);
  return {fmt(m), fmt(r)};
}

// ---- LocFrac

namespace {

const LaurentPoly& zpoly() {
  static const LaurentPoly p = LaurentPoly::q(1) - LaurentPoly::q(-1);
  return p;
}
const LaurentPoly& ypoly() {
  static const LaurentPoly p = LaurentPoly::q(1) + LaurentPoly::q(-1);
  return p;
}

// sum of c_e * s^e for s in {1,-1}
GaussRat eval_pm1(const LaurentPoly& p, int s) {
  GaussRat acc;
  for (std::size_t k = 0; k < p.size(); ++k) {
    int e = p.low() + static_cast<int>(k);
    if (s < 0 && (e & 1))
      acc -= p.coeff_at_index(k);
    else
      acc += p.coeff_at_index(k);
  }
  return acc;
}

// value at s*I for s in {1,-1}
GaussRat eval_pmi(const LaurentPoly& p, int s) {
  GaussRat acc;
  static const GaussRat pw[4] = {GaussRat(1), GaussRat::I(), GaussRat(-1), -GaussRat::I()};
  for (std::size_t k = 0; k < p.size(); ++k) {
    int e = (p.low() + static_cast<int>(k)) * s;
    e %= 4;
    if (e < 0) e += 4;
    acc += p.coeff_at_index(k) * pw[e];
  }
  return acc;
}

LaurentPoly powpoly(const LaurentPoly& b, int e) {
  LaurentPoly r(1);
  for (int k = 0; k < e; ++k) r = r * b;
  return r;
}

}  // namespace

LocFrac::LocFrac(LaurentPoly num, int jz, int jy) : num_(std::move(num)), jz_(jz), jy_(jy) { normalize(); }

void LocFrac::normalize() {
  if (num_.is_zero()) {
    jz_ = jy_ = 0;
    return;
  }
  while (jz_ < 0) {
    num_ = num_ * zpoly();
    ++jz_;
  }
  while (jy_ < 0) {
    num_ = num_ * ypoly();
    ++jy_;
  }
  while (jz_ > 0 && eval_pm1(num_, 1).is_zero() && eval_pm1(num_, -1).is_zero()) {
    num_ = num_.divexact(zpoly());
    --jz_;
  }
  while (jy_ > 0 && eval_pmi(num_, 1).is_zero() && eval_pmi(num_, -1).is_zero()) {
    num_ = num_.divexact(ypoly());
    --jy_;
  }
}

LocFrac& LocFrac::operator+=(const LocFrac& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int jz = std::max(jz_, o.jz_), jy = std::max(jy_, o.jy_);
  LaurentPoly a = num_, b = o.num_;
  if (jz > jz_) a = a * powpoly(zpoly(), jz - jz_);
  if (jy > jy_) a = a * powpoly(ypoly(), jy - jy_);
  if (jz > o.jz_) b = b * powpoly(zpoly(), jz - o.jz_);
  if (jy > o.jy_) b = b * powpoly(ypoly(), jy - o.jy_);
  num_ = a + b;
  jz_ = jz;
  jy_ = jy;
  normalize();
  return *this;
}

LocFrac& LocFrac::operator-=(const LocFrac& o) { return *this += -o; }

LocFrac& LocFrac::operator*=(const LocFrac& o) {
  num_ = num_ * o.num_;
  jz_ += o.jz_;
  jy_ += o.jy_;
  normalize();
  return *this;
}

LocFrac LocFrac::operator-() const {
  LocFrac r = *this;
  r.num_ = -r.num_;
  return r;
}

LocFrac LocFrac::div_z(int k) const { return LocFrac(num_, jz_ + k, jy_); }
LocFrac LocFrac::div_y(int k) const { return LocFrac(num_, jz_, jy_ + k); }

LocFrac LocFrac::scaled(const GaussRat& s) const {
  LocFrac r = *this;
  r.num_ *= s;
  if (r.num_.is_zero()) r.jz_ = r.jy_ = 0;
  return r;
}

FieldElem LocFrac::to_field() const {
  return FieldElem(num_, powpoly(zpoly(), jz_) * powpoly(ypoly(), jy_));
}

CycloElem LocFrac::specialize(int N) const { return ybr::specialize(to_field(), N); }

std::complex<double> LocFrac::eval(std::complex<double> x) const {
  return num_.eval(x) / (std::pow(x - 1.0 / x, jz_) * std::pow(x + 1.0 / x, jy_));
}

}  // namespace ybr
