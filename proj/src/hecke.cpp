#include "ybr/hecke.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <tuple>

namespace ybr {

PermCode perm_encode(const std::vector<int>& w) {
  if (w.size() > 16) throw std::invalid_argument("at most 16 strands");
  PermCode c = 0;
  for (std::size_t k = 0; k < w.size(); ++k) c |= static_cast<PermCode>(w[k]) << (4 * k);
  return c;
}

std::vector<int> perm_decode(PermCode c, int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) w[static_cast<std::size_t>(k)] = static_cast<int>((c >> (4 * k)) & 15);
  return w;
}

PermCode perm_identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) w[static_cast<std::size_t>(k)] = k;
  return perm_encode(w);
}

namespace {

int entry(PermCode c, int k) { return static_cast<int>((c >> (4 * k)) & 15); }

PermCode swap_adjacent(PermCode c, int k) {
  PermCode a = (c >> (4 * k)) & 15, b = (c >> (4 * (k + 1))) & 15;
  c &= ~((PermCode(15) << (4 * k)) | (PermCode(15) << (4 * (k + 1))));
  return c | (b << (4 * k)) | (a << (4 * (k + 1)));
}

const FieldElem& zq() {
  static const FieldElem z = FieldElem::q() - FieldElem::q(-1);
  return z;
}

}  // namespace

std::vector<int> reduced_word(const std::vector<int>& w) {
  std::vector<int> v = w, swaps;
  bool again = true;
  while (again) {
    again = false;
    for (std::size_t k = 0; k + 1 < v.size(); ++k)
      if (v[k] > v[k + 1]) {
        std::swap(v[k], v[k + 1]);
        swaps.push_back(static_cast<int>(k) + 1);
        again = true;
      }
  }
  std::reverse(swaps.begin(), swaps.end());
  return swaps;
}

HeckeElem HeckeElem::identity(int n) {
  HeckeElem e(n);
  e.t_[perm_identity(n)] = FieldElem(1);
  return e;
}

HeckeElem HeckeElem::basis(int n, const std::vector<int>& w, FieldElem c) {
  if (static_cast<int>(w.size()) != n) throw StrandMismatch();
  HeckeElem e(n);
  e.add_term(perm_encode(w), c);
  return e;
}

HeckeElem HeckeElem::sigma(int n, int i) {
  if (i < 1 || i >= n) throw std::out_of_range("sigma index out of range");
  HeckeElem e(n);
  e.t_[swap_adjacent(perm_identity(n), i - 1)] = FieldElem(1);
  return e;
}

HeckeElem HeckeElem::sigma_inv(int n, int i) { return sigma(n, i) - identity(n) * zq(); }

FieldElem HeckeElem::coeff(const std::vector<int>& w) const {
  auto it = t_.find(perm_encode(w));
  return it == t_.end() ? FieldElem() : it->second;
}

void HeckeElem::add_term(PermCode w, const FieldElem& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = t_.emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

HeckeElem& HeckeElem::operator+=(const HeckeElem& o) {
  if (o.n_ != n_) throw StrandMismatch();
  for (const auto& [w, c] : o.t_) add_term(w, c);
  return *this;
}

HeckeElem& HeckeElem::operator-=(const HeckeElem& o) {
  if (o.n_ != n_) throw StrandMismatch();
  for (const auto& [w, c] : o.t_) add_term(w, -c);
  return *this;
}

HeckeElem& HeckeElem::operator*=(const FieldElem& s) {
  if (s.is_zero()) {
    t_.clear();
    return *this;
  }
  for (auto& [w, c] : t_) c *= s;
  return *this;
}

HeckeElem mul_by_simple(const HeckeElem& x, int i) {
  HeckeElem r(x.n_);
  for (const auto& [w, c] : x.t_) {
    r.add_term(swap_adjacent(w, i - 1), c);
    if (entry(w, i - 1) > entry(w, i)) r.add_term(w, c * zq());
  }
  return r;
}

namespace {

using PolyTerms = std::vector<std::pair<PermCode, LaurentPoly>>;

// T_w T_v with Laurent polynomial coefficients, cached per strand count.
const PolyTerms& basis_product(int n, PermCode w, PermCode v) {
  static std::mutex mu;
  static std::map<std::tuple<int, PermCode, PermCode>, PolyTerms> cache;
  std::lock_guard<std::mutex> lk(mu);
  auto key = std::make_tuple(n, w, v);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  static const LaurentPoly z = LaurentPoly::q(1) - LaurentPoly::q(-1);
  std::map<PermCode, LaurentPoly> cur{{w, LaurentPoly(1)}};
  for (int i : reduced_word(perm_decode(v, n))) {
    std::map<PermCode, LaurentPoly> nxt;
    for (const auto& [u, c] : cur) {
      nxt[swap_adjacent(u, i - 1)] += c;
      if (entry(u, i - 1) > entry(u, i)) nxt[u] += c * z;
    }
    cur.clear();
    for (auto& [u, c] : nxt)
      if (!c.is_zero()) cur.emplace(u, std::move(c));
  }
  return cache.emplace(key, PolyTerms(cur.begin(), cur.end())).first->second;
}

// Sum of fractions grouped by denominator, normalized once at the end.
struct FracSum {
  std::vector<std::pair<LaurentPoly, LaurentPoly>> parts;  // (den, num)
  void add(const LaurentPoly& num, const LaurentPoly& den) {
    for (auto& [d, n] : parts)
      if (d == den) {
        n += num;
        return;
      }
    parts.emplace_back(den, num);
  }
  FieldElem value() const {
    FieldElem s;
    for (const auto& [d, n] : parts)
      if (!n.is_zero()) s += FieldElem(n, d);
    return s;
  }
};

}  // namespace

HeckeElem operator*(const HeckeElem& a, const HeckeElem& b) {
  if (a.n_ != b.n_) throw StrandMismatch();
  std::map<PermCode, FracSum> acc;
  for (const auto& [w, x] : a.t_)
    for (const auto& [v, y] : b.t_) {
      LaurentPoly num = x.num() * y.num(), den = x.den() * y.den();
      for (const auto& [u, p] : basis_product(a.n_, w, v)) acc[u].add(num * p, den);
    }
  HeckeElem r(a.n_);
  for (const auto& [u, s] : acc) r.add_term(u, s.value());
  return r;
}

HeckeElem hecke_mul(const HeckeElem& x, const HeckeElem& y) { return x * y; }

HeckeElem hecke_pow(const HeckeElem& x, int e) {
  if (e < 0) throw std::invalid_argument("negative power");
  HeckeElem r = HeckeElem::identity(x.n());
  for (int k = 0; k < e; ++k) r = r * x;
  return r;
}

HeckeElem HeckeElem::extend_right(int k) const {
  HeckeElem r(n_ + k);
  for (const auto& [w, c] : t_) {
    auto v = perm_decode(w, n_);
    for (int j = 0; j < k; ++j) v.push_back(n_ + j);
    r.add_term(perm_encode(v), c);
  }
  return r;
}

HeckeElem HeckeElem::extend_left(int k) const {
  HeckeElem r(n_ + k);
  for (const auto& [w, c] : t_) {
    std::vector<int> v;
    for (int j = 0; j < k; ++j) v.push_back(j);
    for (int x : perm_decode(w, n_)) v.push_back(x + k);
    r.add_term(perm_encode(v), c);
  }
  return r;
}

HeckeElem HeckeElem::star() const {
  static std::mutex mu;
  static std::map<std::pair<int, PermCode>, HeckeElem> inverses;
  HeckeElem r(n_);
  for (const auto& [w, c] : t_) {
    // T_w^* = (T_w)^{-1}
    HeckeElem inv;
    {
      std::lock_guard<std::mutex> lk(mu);
      auto it = inverses.find({n_, w});
      if (it != inverses.end()) inv = it->second;
    }
    if (inv.n() != n_) {
      inv = identity(n_);
      auto word = reduced_word(perm_decode(w, n_));
      for (auto it = word.rbegin(); it != word.rend(); ++it) inv = inv * sigma_inv(n_, *it);
      std::lock_guard<std::mutex> lk(mu);
      inverses.emplace(std::make_pair(n_, w), inv);
    }
    r += inv * c.conj();
  }
  return r;
}

std::string HeckeElem::json() const {
  std::ostringstream os;
  os << "{\"n\":" << n_ << ",\"terms\":[";
  bool first = true;
  for (const auto& [w, c] : t_) {
    os << (first ? "" : ",") << "{\"perm\":[";
    auto v = perm_decode(w, n_);
    for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k] + 1;
    os << "],\"coeff\":\"" << c.str() << "\"}";
    first = false;
  }
  os << "]}";
  return os.str();
}

HeckeElem HeckeElem::parse(const std::string& text, int n) {
  HeckeElem r = identity(n);
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    if (tok == "1") continue;
    if (tok.size() < 2 || tok[0] != 's') throw ParseError("expected generator s<i>", static_cast<std::size_t>(is.tellg()));
    std::size_t caret = tok.find('^');
    int i = std::stoi(tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
    int e = caret == std::string::npos ? 1 : std::stoi(tok.substr(caret + 1));
    HeckeElem g = e < 0 ? sigma_inv(n, i) : sigma(n, i);
    for (int k = 0; k < std::abs(e); ++k) r = r * g;
  }
  return r;
}

namespace {

// x acting on strands offset..offset+x.n()-1 of total strands.
HeckeElem place(const HeckeElem& x, int offset, int total) {
  return x.extend_left(offset).extend_right(total - offset - x.n());
}

}  // namespace

HeckeElem symmetrizer(int l, SymKind kind) {
  if (l < 1) throw std::invalid_argument("symmetrizer size");
  HeckeElem f = HeckeElem::identity(1);
  for (int k = 2; k <= l; ++k) {
    HeckeElem prev = f.extend_right();
    FieldElem c = qint(k - 1) / qint(k);
    HeckeElem mid = kind == SymKind::sym ? HeckeElem::identity(k) * FieldElem::q() - HeckeElem::sigma(k, k - 1)
                                         : HeckeElem::identity(k) * FieldElem::q(-1) + HeckeElem::sigma(k, k - 1);
    f = prev - prev * mid * prev * c;
  }
  return f;
}

HeckeElem symmetrizer_left(int l, SymKind kind) {
  if (l < 1) throw std::invalid_argument("symmetrizer size");
  HeckeElem f = HeckeElem::identity(1);
  for (int k = 2; k <= l; ++k) {
    HeckeElem prev = f.extend_left();
    FieldElem c = qint(k - 1) / qint(k);
    HeckeElem mid = kind == SymKind::sym ? HeckeElem::identity(k) * FieldElem::q() - HeckeElem::sigma(k, 1)
                                         : HeckeElem::identity(k) * FieldElem::q(-1) + HeckeElem::sigma(k, 1);
    f = prev - prev * mid * prev * c;
  }
  return f;
}

namespace {

HeckeElem tword(int n, const std::vector<int>& w, bool inverse) {
  auto word = reduced_word(w);
  HeckeElem r = HeckeElem::identity(n);
  if (!inverse) {
    for (int i : word) r = r * HeckeElem::sigma(n, i);
  } else {
    for (auto it = word.rbegin(); it != word.rend(); ++it) r = r * HeckeElem::sigma_inv(n, *it);
  }
  return r;
}

// m with x*x = m*x, or throws if x is not a quasi-idempotent.
FieldElem square_ratio(const HeckeElem& x) {
  HeckeElem sq = x * x;
  if (sq.is_zero()) return FieldElem();
  const auto& [w, c] = *x.terms().begin();
  auto it = sq.terms().find(w);
  if (it == sq.terms().end()) throw std::logic_error("not a quasi-idempotent");
  FieldElem m = it->second / c;
  if (!(sq == x * m)) throw std::logic_error("not a quasi-idempotent");
  return m;
}

}  // namespace

YoungIdem young_idempotent(const YoungDiagram& lam) {
  static std::mutex mu;
  static std::map<YoungDiagram, YoungIdem> cache;
  {
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(lam);
    if (it != cache.end()) return it->second;
  }
  int n = lam.size();
  YoungIdem out;
  out.lambda = lam;
  if (n == 0) {
    out.element = HeckeElem::identity(0);
    out.norm = FieldElem(1);
  } else {
    YoungDiagram lt = transpose_sym(lam);
    HeckeElem F = HeckeElem::identity(n), G = HeckeElem::identity(n);
    int off = 0;
    for (int r : lam.rows) {
      F = F * place(symmetrizer(r, SymKind::sym), off, n);
      off += r;
    }
    off = 0;
    for (int c : lt.rows) {
      G = G * place(symmetrizer(c, SymKind::antisym), off, n);
      off += c;
    }
    std::vector<int> w(static_cast<std::size_t>(n)), winv(static_cast<std::size_t>(n));
    for (const auto& [i, j] : lam.cells()) {
      int pr = 0, pc = 0;
      for (int k = 1; k < i; ++k) pr += lam.row(k);
      pr += j - 1;
      for (int k = 1; k < j; ++k) pc += lt.row(k);
      pc += i - 1;
      w[static_cast<std::size_t>(pc)] = pr;
      winv[static_cast<std::size_t>(pr)] = pc;
    }
    for (const auto* perm : {&w, &winv}) {
      HeckeElem ydot = F * tword(n, *perm, false) * G * tword(n, *perm, true) * F;
      if (ydot.is_zero()) continue;
      FieldElem m = square_ratio(ydot);
      if (m.is_zero()) throw DegenerateNormalization("m_lambda vanishes for " + lam.str());
      out.element = ydot * m.inv();
      out.norm = m;
      break;
    }
    if (out.element.n() != n) throw DegenerateNormalization("Young idempotent vanishes for " + lam.str());
  }
  std::lock_guard<std::mutex> lk(mu);
  return cache.emplace(lam, out).first->second;
}

BranchMorphism branch(const YoungDiagram& mu, const YoungDiagram& lam) {
  if (!covers(lam, mu)) throw std::invalid_argument(lam.str() + " does not cover " + mu.str());
  int n = lam.size();
  HeckeElem yl = young_idempotent(lam).element;
  HeckeElem ym1 = mu.empty() ? HeckeElem::identity(1) : young_idempotent(mu).element.extend_right();
  BranchMorphism b;
  b.mu = mu;
  b.lambda = lam;
  // y_lambda H (y_mu x 1) is one-dimensional; take the first basis element that survives
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 0);
  std::vector<std::vector<int>> perms;
  do perms.push_back(w); while (std::next_permutation(w.begin(), w.end()));
  std::stable_sort(perms.begin(), perms.end(), [](const auto& a, const auto& c) { return reduced_word(a).size() < reduced_word(c).size(); });
  for (const auto& p : perms) {
    HeckeElem t = HeckeElem::basis(n, p);
    HeckeElem down = yl * t * ym1;
    if (down.is_zero()) continue;
    HeckeElem up = ym1 * t.star() * yl;
    HeckeElem s = down * up;
    const auto& [k, c0] = *yl.terms().begin();
    auto it = s.terms().find(k);
    if (it == s.terms().end()) continue;
    FieldElem c = it->second / c0;
    if (!(s == yl * c)) throw std::logic_error("branch: not proportional to y_lambda");
    b.down = down;
    b.pairing_norm = c;
    b.up = up * c.inv();
    return b;
  }
  throw DegenerateNormalization("no morphism for " + mu.str() + " < " + lam.str());
}

HeckeElem murphy(int n) {
  HeckeElem e = HeckeElem::identity(n);
  for (int i = n - 1; i >= 1; --i) e = e * HeckeElem::sigma(n, i);
  for (int i = 1; i <= n - 1; ++i) e = e * HeckeElem::sigma(n, i);
  return e;
}

namespace {

FieldElem trace_basis(int n, PermCode w) {
  static std::mutex mu;
  static std::map<std::pair<int, PermCode>, FieldElem> cache;
  if (n == 0) return FieldElem(1);
  {
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find({n, w});
    if (it != cache.end()) return it->second;
  }
  auto v = perm_decode(w, n);
  FieldElem res;
  if (v.back() == n - 1) {
    v.pop_back();
    res = params().delta * trace_basis(n - 1, perm_encode(v));
  } else {
    int p = static_cast<int>(std::find(v.begin(), v.end(), n - 1) - v.begin());
    v.erase(v.begin() + p);
    HeckeElem x = HeckeElem::basis(n - 1, v);
    for (int i = n - 2; i >= p + 1; --i) x = x * HeckeElem::sigma(n - 1, i);
    res = params().r * markov_trace(x);
  }
  std::lock_guard<std::mutex> lk(mu);
  cache.emplace(std::make_pair(n, w), res);
  return res;
}

}  // namespace

FieldElem markov_trace(const HeckeElem& x) {
  FieldElem s;
  for (const auto& [w, c] : x.terms()) s += c * trace_basis(x.n(), w);
  return s;
}

}  // namespace ybr
