#include "ybr/tower.hpp"

#include "linalg.hpp"
#include "ybr/dims.hpp"
#include "ybr/hecke.hpp"

#include <json.hpp>

#include <atomic>
#include <cmath>
#include <deque>
#include <set>
#include <sstream>
#include <thread>

namespace ybr {

FieldElem Scalars<FieldElem>::qdim(const YoungDiagram& lam) const { return ybr::qdim(lam); }
CycloElem Scalars<CycloElem>::qdim(const YoungDiagram& lam) const { return qdim_at(lam, N); }

namespace {

using linalg::Echelon;

std::vector<LocFrac> traces(const std::vector<Word>& ws, int m, int jobs) {
  std::vector<LocFrac> out(ws.size());
  if (m == 0) {
    std::fill(out.begin(), out.end(), LocFrac(1));
    return out;
  }
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t t = next++; t < ws.size(); t = next++) out[t] = word_trace_value(ws[t], m);
  };
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  return out;
}

Word concat(std::initializer_list<const Word*> parts) {
  Word w;
  for (const Word* p : parts) w.insert(w.end(), p->begin(), p->end());
  return w;
}

long double_factorial_odd(int m) {
  long v = 1;
  for (int k = 2 * m - 1; k > 1; k -= 2) v *= k;
  return v;
}

template <class S>
std::string to_str(const S& x) {
  return x.str();
}

std::string label_str(const YoungDiagram& d) { return d.empty() ? "0" : d.str(); }

}  // namespace

template <class S>
typename StructureAlgebra<S>::Mat StructureAlgebra<S>::gram() const {
  Mat g;
  for (int k : basis) {
    g.emplace_back();
    for (int l : basis) g.back().push_back(gram_full[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)]);
  }
  return g;
}

template <class S>
typename StructureAlgebra<S>::Vec StructureAlgebra<S>::unit() const {
  Vec v = zero_vec();
  v[0] = F.one();
  return v;
}

template <class S>
typename StructureAlgebra<S>::Vec StructureAlgebra<S>::coords(const Word& w) const {
  Vec v = unit();
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    auto g = generators.find(*it);
    if (g == generators.end()) throw IndexOutOfRange("letter " + std::string(1, it->kind) + std::to_string(it->index));
    v = linalg::matvec(g->second, v, F.zero());
  }
  return v;
}

template <class S>
typename StructureAlgebra<S>::Vec StructureAlgebra<S>::coords(const AlgElem& x) const {
  Vec v = zero_vec();
  for (const auto& [w, c] : x.terms()) {
    S s = F.from(c);
    Vec u = coords(w);
    for (std::size_t k = 0; k < v.size(); ++k)
      if (!u[k].is_zero()) v[k] += s * u[k];
  }
  return v;
}

template <class S>
typename StructureAlgebra<S>::Vec StructureAlgebra<S>::alpha(int i, bool inverse) const {
  return coords(AlgElem::alpha(m, i, inverse));
}

template <class S>
typename StructureAlgebra<S>::Mat StructureAlgebra<S>::left_matrix(const Vec& x) const {
  std::size_t n = basis.size();
  Mat L(n, Vec(n, F.zero()));
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (!left[i][r][c].is_zero()) L[r][c] += x[i] * left[i][r][c];
  }
  return L;
}

template <class S>
typename StructureAlgebra<S>::Mat StructureAlgebra<S>::right_matrix(const Vec& x) const {
  std::size_t n = basis.size();
  Mat R(n, Vec(n, F.zero()));
  for (std::size_t i = 0; i < n; ++i) {
    Vec col = linalg::matvec(left[i], x, F.zero());
    for (std::size_t r = 0; r < n; ++r) R[r][i] = col[r];
  }
  return R;
}

template <class S>
typename StructureAlgebra<S>::Vec StructureAlgebra<S>::mul(const Vec& x, const Vec& y) const {
  return linalg::matvec(left_matrix(x), y, F.zero());
}

template <class S>
S StructureAlgebra<S>::tr(const Vec& x) const {
  S t = F.zero();
  for (std::size_t k = 0; k < x.size(); ++k)
    if (!x[k].is_zero()) t += x[k] * trace[k];
  return t;
}

template <class S>
std::string StructureAlgebra<S>::json() const {
  nlohmann::json j;
  j["boxes"] = m;
  j["N"] = F.N;
  j["words"] = static_cast<int>(words.size());
  j["rank"] = dim();
  j["kernel_dim"] = kernel_dim;
  for (int k : basis) j["basis"].push_back(word_str(words[static_cast<std::size_t>(k)]));
  for (const auto& row : gram()) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& x : row) r.push_back(to_str(x));
    j["gram"].push_back(r);
  }
  for (const auto& t : trace) j["trace"].push_back(to_str(t));
  return j.dump();
}

template <class S>
StructureAlgebra<S> build_structure(int m, const Scalars<S>& F, const TowerOptions& opt) {
  if (m < 0) throw std::invalid_argument("negative box count");
  if (m > 4 || (m == 4 && !opt.allow_four_boxes))
    throw BoxesAboveCutoff("box count " + std::to_string(m) + " above the configured cutoff");
  StructureAlgebra<S> A;
  A.m = m;
  A.F = F;
  A.words = m == 0 ? std::vector<Word>{Word{}} : brauer_words(m);
  std::size_t K = A.words.size();

  std::vector<Word> gram_words;
  std::vector<Word> rev(K);
  for (std::size_t k = 0; k < K; ++k) rev[k] = reversed(A.words[k]);
  for (std::size_t k = 0; k < K; ++k)
    for (std::size_t l = 0; l < K; ++l) gram_words.push_back(concat({&rev[k], &A.words[l]}));
  auto gv = traces(gram_words, m, opt.jobs);
  A.gram_full.assign(K, {});
  for (std::size_t k = 0; k < K; ++k)
    for (std::size_t l = 0; l < K; ++l) A.gram_full[k].push_back(F.from(gv[k * K + l]));

  Echelon<S> ech(F.zero());
  for (std::size_t k = 0; k < K; ++k)
    if (ech.insert(A.gram_full[k])) A.basis.push_back(static_cast<int>(k));
  if (A.basis.empty() || A.basis[0] != 0) throw RankDeficiencyUnexpected("identity is in the kernel");
  if (F.N == 0 && static_cast<long>(A.basis.size()) != double_factorial_odd(m))
    throw RankDeficiencyUnexpected("generic Gram rank " + std::to_string(A.basis.size()) + " at m=" + std::to_string(m));
  A.kernel_dim = static_cast<int>(K - A.basis.size());
  std::size_t n = A.basis.size();

  std::vector<Letter> gens;
  for (int i = 1; i < m; ++i) {
    gens.push_back({'h', i});
    gens.push_back({'r', i});
  }
  std::vector<Word> gen_words;
  for (const auto& g : gens) {
    Word gw{g};
    for (int k : A.basis)
      for (int l : A.basis)
        gen_words.push_back(concat({&rev[static_cast<std::size_t>(k)], &gw, &A.words[static_cast<std::size_t>(l)]}));
  }
  auto mv = traces(gen_words, m, opt.jobs);
  auto G = A.gram();
  typename StructureAlgebra<S>::Mat rhs(n);
  for (std::size_t g = 0; g < gens.size(); ++g)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = 0; l < n; ++l) rhs[k].push_back(F.from(mv[(g * n + k) * n + l]));
  auto X = gens.empty() ? rhs : linalg::solve(G, rhs);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    typename StructureAlgebra<S>::Mat L(n);
    for (std::size_t k = 0; k < n; ++k)
      L[k].assign(X[k].begin() + static_cast<std::ptrdiff_t>(g * n), X[k].begin() + static_cast<std::ptrdiff_t>((g + 1) * n));
    A.generators.emplace(gens[g], std::move(L));
  }

  typename StructureAlgebra<S>::Mat id(n, typename StructureAlgebra<S>::Vec(n, F.zero()));
  for (std::size_t k = 0; k < n; ++k) id[k][k] = F.one();
  for (int b : A.basis) {
    auto L = id;
    for (auto it = A.words[static_cast<std::size_t>(b)].rbegin(); it != A.words[static_cast<std::size_t>(b)].rend(); ++it)
      L = linalg::matmul(A.generators.at(*it), L, F.zero());
    A.left.push_back(std::move(L));
  }
  for (int b : A.basis) A.trace.push_back(A.gram_full[0][static_cast<std::size_t>(b)]);
  return A;
}

StructureAlgebra<FieldElem> build_generic(int m, const TowerOptions& opt) {
  return build_structure(m, Scalars<FieldElem>{}, opt);
}

StructureAlgebra<CycloElem> build_at(int m, int N, const TowerOptions& opt) {
  if (N < 1) throw std::invalid_argument("N must be positive");
  Scalars<CycloElem> F;
  F.N = N;
  return build_structure(m, F, opt);
}

namespace {

template <class S>
using V = std::vector<S>;
template <class S>
using M = std::vector<std::vector<S>>;

template <class S>
struct IdealData {
  V<S> unit;
  int dim = 0;
};

// Unit of the two-sided ideal generated by x.
template <class S>
IdealData<S> ideal_unit(const StructureAlgebra<S>& A, const V<S>& x) {
  const auto& F = A.F;
  std::vector<M<S>> acts;
  for (const auto& [g, L] : A.generators) {
    acts.push_back(L);
    acts.push_back(A.right_matrix(A.coords(Word{g})));
  }
  Echelon<S> span(F.zero());
  std::vector<V<S>> gens;
  std::deque<V<S>> queue{x};
  while (!queue.empty()) {
    V<S> v = std::move(queue.front());
    queue.pop_front();
    if (!span.insert(v)) continue;
    gens.push_back(v);
    for (const auto& T : acts) queue.push_back(linalg::matvec(T, v, F.zero()));
  }
  std::size_t d = gens.size(), n = A.basis.size();
  std::vector<M<S>> Ls;
  for (const auto& b : gens) Ls.push_back(A.left_matrix(b));
  M<S> sys;
  V<S> rhs;
  for (std::size_t beta = 0; beta < d; ++beta) {
    std::vector<V<S>> prods;
    for (std::size_t a = 0; a < d; ++a) prods.push_back(linalg::matvec(Ls[a], gens[beta], F.zero()));
    for (std::size_t r = 0; r < n; ++r) {
      sys.emplace_back();
      for (std::size_t a = 0; a < d; ++a) sys.back().push_back(prods[a][r]);
      rhs.push_back(gens[beta][r]);
    }
  }
  auto c = linalg::solve_any(sys, rhs, F.zero());
  if (!c) throw BlockSplitFailure("ideal has no unit");
  V<S> e = A.zero_vec();
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t r = 0; r < n; ++r)
      if (!gens[a][r].is_zero()) e[r] += (*c)[a] * gens[a][r];
  return {e, static_cast<int>(d)};
}

template <class S>
bool equal(const V<S>& a, const V<S>& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] != b[k]) return false;
  return true;
}

template <class S>
M<S> embedding(const StructureAlgebra<S>& lower, const StructureAlgebra<S>& upper) {
  std::size_t n = upper.basis.size(), k = lower.basis.size();
  M<S> E(n, V<S>(k, upper.F.zero()));
  for (std::size_t j = 0; j < k; ++j) {
    auto c = upper.coords(lower.basis_word(static_cast<int>(j)));
    for (std::size_t i = 0; i < n; ++i) E[i][j] = c[i];
  }
  return E;
}

template <class S>
int center_dim(const StructureAlgebra<S>& A) {
  std::size_t n = A.basis.size();
  M<S> rows;
  for (const auto& [g, L] : A.generators) {
    auto R = A.right_matrix(A.coords(Word{g}));
    for (std::size_t i = 0; i < n; ++i) {
      rows.emplace_back();
      for (std::size_t j = 0; j < n; ++j) rows.back().push_back(L[i][j] - R[i][j]);
    }
  }
  if (rows.empty()) return static_cast<int>(n);
  return static_cast<int>(n - linalg::rank(rows));
}

template <class S>
V<S> young_coords(const StructureAlgebra<S>& A, const YoungDiagram& lam) {
  std::map<int, M<S>> La;
  auto y = young_idempotent(lam);
  V<S> out = A.zero_vec();
  for (const auto& [code, c] : y.element.terms()) {
    V<S> v = A.unit();
    auto w = reduced_word(perm_decode(code, A.m));
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      auto f = La.find(*it);
      if (f == La.end()) f = La.emplace(*it, A.left_matrix(A.alpha(*it))).first;
      v = linalg::matvec(f->second, v, A.F.zero());
    }
    S s = A.F.from(c);
    for (std::size_t k = 0; k < v.size(); ++k)
      if (!v[k].is_zero()) out[k] += s * v[k];
  }
  return out;
}

int isqrt_exact(int v) {
  int r = static_cast<int>(std::lround(std::sqrt(static_cast<double>(v))));
  return r * r == v ? r : -1;
}

}  // namespace

template <class S>
BratteliData<S> bratteli(int mMax, const Scalars<S>& F, const TowerOptions& opt) {
  BratteliData<S> B;
  B.N = F.N;
  for (int m = 0; m <= mMax; ++m) B.algebras.push_back(build_structure(m, F, opt));
  for (int m = 0; m <= mMax; ++m) {
    const auto& A = B.algebras[static_cast<std::size_t>(m)];
    std::vector<Block<S>> blocks;
    V<S> rest = A.unit();
    auto add_block = [&](const YoungDiagram& label, const V<S>& x, bool cup) {
      auto [e, d2] = ideal_unit(A, x);
      int d = isqrt_exact(d2);
      if (d < 0) throw BlockSplitFailure("ideal of dimension " + std::to_string(d2) + " for " + label_str(label));
      if (!equal(A.mul(e, e), e)) throw BlockSplitFailure("ideal unit is not idempotent for " + label_str(label));
      Block<S> b;
      b.label = label;
      b.size = d;
      b.trace = A.tr(e) / F.from(FieldElem(d));
      b.central = e;
      b.from_cupcap = cup;
      for (std::size_t k = 0; k < rest.size(); ++k) rest[k] -= e[k];
      blocks.push_back(std::move(b));
    };
    if (m >= 2) {
      const auto& low = B.algebras[static_cast<std::size_t>(m - 2)];
      auto E = embedding(low, A);
      auto h = A.coords(Word{{'h', m - 1}});
      for (const auto& blk : B.levels[static_cast<std::size_t>(m - 2)]) {
        auto x = A.mul(linalg::matvec(E, blk.central, F.zero()), h);
        if (linalg::is_zero(x)) throw BlockSplitFailure("basic construction lost " + label_str(blk.label));
        add_block(blk.label, x, true);
      }
    }
    V<S> rest0 = rest;
    for (const auto& lam : partitions(m)) {
      auto x = A.mul(young_coords(A, lam), rest0);
      if (linalg::is_zero(x)) continue;
      add_block(lam, x, false);
    }
    if (!linalg::is_zero(rest)) throw BlockSplitFailure("central idempotents do not sum to 1 at m=" + std::to_string(m));
    for (std::size_t a = 0; a < blocks.size(); ++a)
      for (std::size_t b = a + 1; b < blocks.size(); ++b)
        if (!linalg::is_zero(A.mul(blocks[a].central, blocks[b].central)))
          throw BlockSplitFailure("overlapping blocks at m=" + std::to_string(m));
    int zc = center_dim(A);
    if (zc != static_cast<int>(blocks.size()))
      throw BlockSplitFailure("center dimension " + std::to_string(zc) + " but " + std::to_string(blocks.size()) + " blocks");
    B.center_dims.push_back(zc);
    B.levels.push_back(std::move(blocks));

    if (m >= 1) {
      const auto& low = B.algebras[static_cast<std::size_t>(m - 1)];
      auto E = embedding(low, A);
      const auto& prev = B.levels[static_cast<std::size_t>(m - 1)];
      const auto& cur = B.levels[static_cast<std::size_t>(m)];
      std::vector<std::vector<int>> inc(prev.size(), std::vector<int>(cur.size(), 0));
      for (std::size_t a = 0; a < prev.size(); ++a) {
        auto ea = linalg::matvec(E, prev[a].central, F.zero());
        for (std::size_t b = 0; b < cur.size(); ++b) {
          auto x = A.mul(ea, cur[b].central);
          int r = static_cast<int>(linalg::rank(A.left_matrix(x)));
          int den = prev[a].size * cur[b].size;
          if (r % den != 0) throw BlockSplitFailure("non-integral inclusion multiplicity");
          inc[a][b] = r / den;
        }
      }
      B.inclusion.push_back(std::move(inc));
    }
  }
  return B;
}

BratteliData<FieldElem> bratteli_generic(int mMax, const TowerOptions& opt) {
  return bratteli(mMax, Scalars<FieldElem>{}, opt);
}

BratteliData<CycloElem> bratteli_at(int mMax, int N, const TowerOptions& opt) {
  if (N < 1) throw std::invalid_argument("N must be positive");
  Scalars<CycloElem> F;
  F.N = N;
  return bratteli(mMax, F, opt);
}

template <class S>
std::map<YoungDiagram, S> BratteliData<S>::block_traces(int m) const {
  std::map<YoungDiagram, S> out;
  for (const auto& b : levels.at(static_cast<std::size_t>(m))) out.emplace(b.label, b.trace);
  return out;
}

template <class S>
std::vector<S> BratteliData<S>::perron_defects(int m) const {
  const auto& F = algebras.at(0).F;
  S delta = F.from(params().delta);
  std::vector<S> out;
  const auto& cur = levels.at(static_cast<std::size_t>(m));
  const auto& nxt = levels.at(static_cast<std::size_t>(m + 1));
  for (std::size_t a = 0; a < cur.size(); ++a) {
    S s = -(delta * cur[a].trace);
    for (std::size_t b = 0; b < nxt.size(); ++b)
      if (inclusion[static_cast<std::size_t>(m)][a][b]) s += F.from(FieldElem(inclusion[static_cast<std::size_t>(m)][a][b])) * nxt[b].trace;
    out.push_back(s);
  }
  return out;
}

template <class S>
std::vector<std::string> BratteliData<S>::lattice_mismatches() const {
  std::vector<std::string> out;
  int mMax = static_cast<int>(levels.size()) - 1;
  LatticeGraph G = N == 0 ? full_lattice(mMax) : truncated_lattice(N, mMax);
  const auto& F = algebras.at(0).F;
  for (int m = 0; m <= mMax; ++m) {
    auto pc = path_counts(G, m);
    std::map<YoungDiagram, int> expect;
    for (std::size_t v = 0; v < G.vertices.size(); ++v)
      if (pc[v]) expect.emplace(G.vertices[v], static_cast<int>(pc[v]));
    std::map<YoungDiagram, int> got;
    for (const auto& b : levels[static_cast<std::size_t>(m)]) {
      got.emplace(b.label, b.size);
      if (b.trace != F.qdim(b.label)) out.push_back("m=" + std::to_string(m) + " trace of " + label_str(b.label));
    }
    for (const auto& [lam, d] : expect) {
      auto it = got.find(lam);
      if (it == got.end()) out.push_back("m=" + std::to_string(m) + " missing " + label_str(lam));
      else if (it->second != d)
        out.push_back("m=" + std::to_string(m) + " size of " + label_str(lam) + " is " + std::to_string(it->second) + ", expected " + std::to_string(d));
    }
    for (const auto& [lam, d] : got)
      if (!expect.count(lam)) out.push_back("m=" + std::to_string(m) + " unexpected " + label_str(lam));
    if (m == mMax) continue;
    const auto& cur = levels[static_cast<std::size_t>(m)];
    const auto& nxt = levels[static_cast<std::size_t>(m + 1)];
    for (std::size_t a = 0; a < cur.size(); ++a)
      for (std::size_t b = 0; b < nxt.size(); ++b) {
        int want = covers(nxt[b].label, cur[a].label) || covers(cur[a].label, nxt[b].label) ? 1 : 0;
        if (inclusion[static_cast<std::size_t>(m)][a][b] != want)
          out.push_back("m=" + std::to_string(m) + " inclusion " + label_str(cur[a].label) + " in " + label_str(nxt[b].label));
      }
  }
  return out;
}

template <class S>
std::string BratteliData<S>::dot() const {
  std::ostringstream os;
  os << "digraph bratteli {\n  rankdir=TB;\n";
  for (std::size_t m = 0; m < levels.size(); ++m)
    for (std::size_t a = 0; a < levels[m].size(); ++a)
      os << "  \"" << m << ":" << label_str(levels[m][a].label) << "\" [label=\"" << label_str(levels[m][a].label) << " ("
         << levels[m][a].size << ")\"];\n";
  for (std::size_t m = 0; m < inclusion.size(); ++m)
    for (std::size_t a = 0; a < inclusion[m].size(); ++a)
      for (std::size_t b = 0; b < inclusion[m][a].size(); ++b)
        for (int t = 0; t < inclusion[m][a][b]; ++t)
          os << "  \"" << m << ":" << label_str(levels[m][a].label) << "\" -> \"" << m + 1 << ":"
             << label_str(levels[m + 1][b].label) << "\";\n";
  os << "}\n";
  return os.str();
}

template <class S>
std::string BratteliData<S>::json() const {
  nlohmann::json j;
  j["N"] = N;
  for (std::size_t m = 0; m < levels.size(); ++m) {
    nlohmann::json lv;
    lv["boxes"] = m;
    lv["dim"] = algebras[m].dim();
    lv["kernel_dim"] = algebras[m].kernel_dim;
    lv["center_dim"] = center_dims[m];
    lv["blocks"] = nlohmann::json::array();
    for (const auto& b : levels[m])
      lv["blocks"].push_back({{"label", label_str(b.label)}, {"size", b.size}, {"trace", to_str(b.trace)},
                              {"basic_construction", b.from_cupcap}});
    if (m < inclusion.size()) lv["inclusion"] = inclusion[m];
    j["levels"].push_back(lv);
  }
  return j.dump();
}

PositivityReport positivity_certificate(const StructureAlgebra<CycloElem>& A) {
  PositivityReport rep;
  rep.m = A.m;
  rep.N = A.F.N;
  rep.words = static_cast<int>(A.words.size());
  rep.rank = A.dim();
  rep.kernel_dim = A.kernel_dim;
  const auto& Gf = A.gram_full;
  rep.hermitian = true;
  for (std::size_t k = 0; k < Gf.size(); ++k)
    for (std::size_t l = 0; l < Gf.size(); ++l)
      if (Gf[k][l] != Gf[l][k].conj()) rep.hermitian = false;

  std::set<int> in_basis(A.basis.begin(), A.basis.end());
  std::vector<int> rest;
  for (int k = 0; k < rep.words; ++k)
    if (!in_basis.count(k)) rest.push_back(k);
  auto G = A.gram();
  rep.schur_complement_zero = true;
  if (!rest.empty()) {
    M<CycloElem> GBN(A.basis.size());
    for (std::size_t i = 0; i < A.basis.size(); ++i)
      for (int l : rest) GBN[i].push_back(Gf[static_cast<std::size_t>(A.basis[i])][static_cast<std::size_t>(l)]);
    auto X = linalg::solve(G, GBN);
    for (std::size_t a = 0; a < rest.size(); ++a)
      for (std::size_t b = 0; b < rest.size(); ++b) {
        CycloElem s = Gf[static_cast<std::size_t>(rest[a])][static_cast<std::size_t>(rest[b])];
        for (std::size_t i = 0; i < A.basis.size(); ++i)
          s -= Gf[static_cast<std::size_t>(rest[a])][static_cast<std::size_t>(A.basis[i])] * X[i][b];
        if (!s.is_zero()) rep.schur_complement_zero = false;
      }
  }

  std::size_t n = G.size();
  auto W = G;
  rep.positive_definite = rep.hermitian;
  for (std::size_t k = 0; k < n; ++k) {
    CycloElem d = W[k][k];
    rep.pivots.push_back(d);
    int sg = 0;
    try {
      sg = certified_sign(d);
    } catch (const CertificationInconclusive&) {
      sg = 0;
    }
    rep.pivot_signs.push_back(sg);
    rep.pivot_enclosures.push_back(enclosure(d, 128));
    if (sg <= 0) {
      rep.positive_definite = false;
      break;
    }
    CycloElem inv = d.inv();
    for (std::size_t i = k + 1; i < n; ++i) {
      if (W[i][k].is_zero()) continue;
      CycloElem f = W[i][k] * inv;
      for (std::size_t j = k; j < n; ++j)
        if (!W[k][j].is_zero()) W[i][j] -= f * W[k][j];
    }
  }
  return rep;
}

std::string PositivityReport::json() const {
  nlohmann::json j;
  j["boxes"] = m;
  j["N"] = N;
  j["words"] = words;
  j["rank"] = rank;
  j["kernel_dim"] = kernel_dim;
  j["hermitian"] = hermitian;
  j["schur_complement_zero"] = schur_complement_zero;
  j["positive_definite"] = positive_definite;
  for (std::size_t k = 0; k < pivots.size(); ++k)
    j["pivots"].push_back({{"exact", pivots[k].str()},
                           {"sign", pivot_signs[k]},
                           {"midpoint", pivot_enclosures[k].first},
                           {"radius", pivot_enclosures[k].second}});
  return j.dump();
}

template struct StructureAlgebra<FieldElem>;
template struct StructureAlgebra<CycloElem>;
template StructureAlgebra<FieldElem> build_structure(int, const Scalars<FieldElem>&, const TowerOptions&);
template StructureAlgebra<CycloElem> build_structure(int, const Scalars<CycloElem>&, const TowerOptions&);
template struct BratteliData<FieldElem>;
template struct BratteliData<CycloElem>;
template BratteliData<FieldElem> bratteli(int, const Scalars<FieldElem>&, const TowerOptions&);
template BratteliData<CycloElem> bratteli(int, const Scalars<CycloElem>&, const TowerOptions&);

}  // namespace ybr
