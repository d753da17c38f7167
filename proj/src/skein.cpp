#include "ybr/skein.hpp"

#include <boost/functional/hash.hpp>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <mutex>
#include <regex>
#include <set>
#include <shared_mutex>
#include <sstream>
#include <thread>
#include <unordered_map>

namespace ybr {

namespace {

using Key = std::vector<int>;
struct KeyHash {
  std::size_t operator()(const Key& k) const { return boost::hash_range(k.begin(), k.end()); }
};

template <class V>
class SharedMemo {
 public:
  bool find(const Key& k, V& out) const {
    std::shared_lock lk(mu_);
    auto it = map_.find(k);
    if (it == map_.end()) return false;
    out = it->second;
    return true;
  }
  void put(const Key& k, const V& v) {
    std::unique_lock lk(mu_);
    map_.emplace(k, v);
  }
  void clear() {
    std::unique_lock lk(mu_);
    map_.clear();
  }
  std::size_t size() const {
    std::shared_lock lk(mu_);
    return map_.size();
  }

 private:
  mutable std::shared_mutex mu_;
  std::unordered_map<Key, V, KeyHash> map_;
};

SharedMemo<LocFrac>& zeta_memo() {
  static SharedMemo<LocFrac> m;
  return m;
}
SharedMemo<LocFrac>& homfly_memo() {
  static SharedMemo<LocFrac> m;
  return m;
}
std::atomic<bool> g_shortcuts{true};

const GaussRat I_ = GaussRat::I();

LocFrac lf_delta() { return LocFrac::y().scaled(I_).div_z(); }
LocFrac lf_r(int e) {
  // (i q^-1)^e
  GaussRat c(1);
  int k = ((e % 4) + 4) % 4;
  for (int j = 0; j < k; ++j) c *= I_;
  return LocFrac(LaurentPoly(c, -e));
}
LocFrac lf_pow(const LocFrac& x, int e) {
  LocFrac v(1);
  for (int j = 0; j < e; ++j) v *= x;
  return v;
}
GaussRat minus_i_pow(int k) {
  GaussRat c(1);
  for (int j = 0; j < ((k % 4) + 4) % 4; ++j) c *= -I_;
  return c;
}

int port(int v, int p) { return 4 * v + ((p % 4) + 4) % 4; }

void check_matching(const std::vector<int>& mate, std::size_t ends) {
  if (mate.size() != ends) throw NonPlanarWiring("wiring size mismatch");
  for (std::size_t e = 0; e < ends; ++e) {
    int f = mate[e];
    if (f < 0 || static_cast<std::size_t>(f) >= ends || f == static_cast<int>(e) || mate[static_cast<std::size_t>(f)] != static_cast<int>(e))
      throw NonPlanarWiring("wiring is not a perfect matching at end " + std::to_string(e));
  }
}

// Follows mate/glue alternations from every terminal end. glue[e] < 0 marks a terminal.
// Returns partner per terminal end and the number of closed loops among glued ends.
int stitch(const std::vector<int>& mate, const std::vector<int>& glue, std::vector<int>& partner) {
  std::size_t E = mate.size();
  partner.assign(E, -1);
  std::vector<char> seen(E, 0);
  for (std::size_t e = 0; e < E; ++e) {
    if (glue[e] >= 0) continue;
    int x = mate[e];
    seen[e] = 1;
    while (glue[static_cast<std::size_t>(x)] >= 0) {
      seen[static_cast<std::size_t>(x)] = 1;
      int y = glue[static_cast<std::size_t>(x)];
      seen[static_cast<std::size_t>(y)] = 1;
      x = mate[static_cast<std::size_t>(y)];
    }
    partner[e] = x;
  }
  int loops = 0;
  for (std::size_t e = 0; e < E; ++e) {
    if (seen[e]) continue;
    ++loops;
    int x = static_cast<int>(e);
    do {
      seen[static_cast<std::size_t>(x)] = 1;
      int y = mate[static_cast<std::size_t>(x)];
      seen[static_cast<std::size_t>(y)] = 1;
      x = glue[static_cast<std::size_t>(y)];
    } while (x != static_cast<int>(e));
  }
  return loops;
}

}  // namespace

// ---------------------------------------------------------------- ClosedDiagram

ClosedDiagram ClosedDiagram::parse(const std::string& text) {
  ClosedDiagram d;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto skip_sep = [&] {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ';' || text[pos] == ','))
      ++pos;
  };
  auto expect = [&](char c) {
    skip();
    if (pos >= text.size() || text[pos] != c) throw ParseError(std::string("expected '") + c + "'", pos);
    ++pos;
  };
  auto integer = [&] {
    skip();
    std::size_t start = pos;
    if (pos < text.size() && text[pos] == '-') ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos || (pos == start + 1 && text[start] == '-')) throw ParseError("expected integer", start);
    return std::stoi(text.substr(start, pos - start));
  };
  std::map<int, std::vector<int>> label_ports;
  skip_sep();
  if (text.compare(pos, 8, "circles=") == 0) {
    pos += 8;
    d.circles = integer();
    if (d.circles < 0) throw ParseError("negative circle count", pos);
  }
  for (;;) {
    skip_sep();
    if (pos >= text.size()) break;
    if (text[pos] != 'x') throw ParseError("expected crossing 'x('", pos);
    ++pos;
    expect('(');
    int v = d.n();
    for (int p = 0; p < 4; ++p) {
      int lab = integer();
      label_ports[lab].push_back(4 * v + p);
      if (p < 3) expect(',');
    }
    skip_sep();
    int rot = 0;
    if (text.compare(pos, 4, "rot=") == 0) {
      pos += 4;
      rot = integer();
    }
    expect(')');
    d.mark.push_back(((rot % 4) + 4) % 4);
  }
  d.mate.assign(4 * static_cast<std::size_t>(d.n()), -1);
  for (const auto& [lab, ps] : label_ports) {
    if (ps.size() != 2) throw ParseError("edge label " + std::to_string(lab) + " must occur exactly twice", 0);
    d.mate[static_cast<std::size_t>(ps[0])] = ps[1];
    d.mate[static_cast<std::size_t>(ps[1])] = ps[0];
  }
  d.validate();
  return d;
}

std::string ClosedDiagram::str() const {
  std::vector<int> lab(mate.size(), 0);
  int next = 1;
  for (std::size_t e = 0; e < mate.size(); ++e)
    if (!lab[e]) lab[e] = lab[static_cast<std::size_t>(mate[e])] = next++;
  std::ostringstream os;
  os << "circles=" << circles << ";";
  for (int v = 0; v < n(); ++v) {
    os << " x(";
    for (int p = 0; p < 4; ++p) os << (p ? "," : "") << lab[static_cast<std::size_t>(4 * v + p)];
    os << ";rot=" << mark[static_cast<std::size_t>(v)] << ")";
  }
  return os.str();
}

bool ClosedDiagram::is_planar() const {
  check_matching(mate, 4 * static_cast<std::size_t>(n()));
  // Faces of the rotation system: arrive at port q, leave through port q-1.
  std::vector<char> used(mate.size(), 0);
  long faces = 0;
  for (std::size_t e = 0; e < mate.size(); ++e) {
    if (used[e]) continue;
    ++faces;
    int x = static_cast<int>(e);
    while (!used[static_cast<std::size_t>(x)]) {
      used[static_cast<std::size_t>(x)] = 1;
      int q = mate[static_cast<std::size_t>(x)];
      x = port(q / 4, q % 4 - 1);
    }
  }
  long comps = static_cast<long>(components().size());
  long V = n(), E = 2L * n();
  return V - E + faces == 2 * comps;
}

void ClosedDiagram::validate() const {
  check_matching(mate, 4 * static_cast<std::size_t>(n()));
  for (int m : mark)
    if (m < 0 || m > 3) throw NonPlanarWiring("rotation mark out of range");
  if (circles < 0) throw NonPlanarWiring("negative circle count");
  if (!is_planar()) throw NonPlanarWiring("wiring has no planar embedding");
}

std::vector<std::vector<int>> ClosedDiagram::components() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(static_cast<std::size_t>(n()), 0);
  for (int v = 0; v < n(); ++v) {
    if (seen[static_cast<std::size_t>(v)]) continue;
    std::vector<int> st{v}, cc;
    seen[static_cast<std::size_t>(v)] = 1;
    while (!st.empty()) {
      int u = st.back();
      st.pop_back();
      cc.push_back(u);
      for (int p = 0; p < 4; ++p) {
        int w = mate[static_cast<std::size_t>(4 * u + p)] / 4;
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          st.push_back(w);
        }
      }
    }
    std::sort(cc.begin(), cc.end());
    out.push_back(std::move(cc));
  }
  return out;
}

ClosedDiagram ClosedDiagram::sub(const std::vector<int>& verts) const {
  std::vector<int> idx(static_cast<std::size_t>(n()), -1);
  for (std::size_t i = 0; i < verts.size(); ++i) idx[static_cast<std::size_t>(verts[i])] = static_cast<int>(i);
  ClosedDiagram d;
  d.mark.resize(verts.size());
  d.mate.resize(4 * verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i) {
    int v = verts[i];
    d.mark[i] = mark[static_cast<std::size_t>(v)];
    for (int p = 0; p < 4; ++p) {
      int m = mate[static_cast<std::size_t>(4 * v + p)];
      int w = idx[static_cast<std::size_t>(m / 4)];
      if (w < 0) throw NonPlanarWiring("sub-diagram is not closed");
      d.mate[4 * i + static_cast<std::size_t>(p)] = 4 * w + m % 4;
    }
  }
  return d;
}

ClosedDiagram disjoint_union(const ClosedDiagram& a, const ClosedDiagram& b) {
  ClosedDiagram d = a;
  int off = 4 * a.n();
  for (int m : b.mate) d.mate.push_back(m + off);
  d.mark.insert(d.mark.end(), b.mark.begin(), b.mark.end());
  d.circles += b.circles;
  return d;
}

// ---------------------------------------------------------------- OpenDiagram

OpenDiagram OpenDiagram::identity(int m) {
  OpenDiagram o;
  o.m = m;
  o.mate.resize(2 * static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    o.mate[static_cast<std::size_t>(j)] = 2 * m - 1 - j;
    o.mate[static_cast<std::size_t>(2 * m - 1 - j)] = j;
  }
  return o;
}

namespace {

void check_index(int m, int i, char kind) {
  if (i < 1 || i > m - 1)
    throw IndexOutOfRange(std::string(1, kind) + std::to_string(i) + " needs 1 <= index <= " + std::to_string(m - 1));
}

void link_ends(std::vector<int>& mate, int a, int b) {
  mate[static_cast<std::size_t>(a)] = b;
  mate[static_cast<std::size_t>(b)] = a;
}

}  // namespace

OpenDiagram OpenDiagram::crossing(int m, int i, int mk) {
  check_index(m, i, 'r');
  OpenDiagram o;
  o.m = m;
  o.mark = {((mk % 4) + 4) % 4};
  o.mate.resize(4 + 2 * static_cast<std::size_t>(m));
  auto bot = [&](int j) { return 4 + j - 1; };
  auto top = [&](int j) { return 4 + 2 * m - j; };
  for (int j = 1; j <= m; ++j)
    if (j != i && j != i + 1) link_ends(o.mate, bot(j), top(j));
  link_ends(o.mate, 0, bot(i));
  link_ends(o.mate, 1, bot(i + 1));
  link_ends(o.mate, 2, top(i + 1));
  link_ends(o.mate, 3, top(i));
  return o;
}

OpenDiagram OpenDiagram::cupcap(int m, int i) {
  check_index(m, i, 'h');
  OpenDiagram o = identity(m);
  auto bot = [&](int j) { return j - 1; };
  auto top = [&](int j) { return 2 * m - j; };
  link_ends(o.mate, bot(i), bot(i + 1));
  link_ends(o.mate, top(i), top(i + 1));
  return o;
}

OpenDiagram OpenDiagram::rotate(int clicks) const {
  int B = 2 * m, P = 4 * n();
  auto map = [&](int e) { return e < P ? e : P + (((e - P + clicks) % B) + B) % B; };
  OpenDiagram o = *this;
  for (std::size_t e = 0; e < mate.size(); ++e) o.mate[static_cast<std::size_t>(map(static_cast<int>(e)))] = map(mate[e]);
  return o;
}

ClosedDiagram OpenDiagram::close() const {
  int P = 4 * n();
  std::vector<int> glue(mate.size(), -1);
  for (int j = 0; j < m; ++j) {
    glue[static_cast<std::size_t>(P + j)] = P + 2 * m - 1 - j;
    glue[static_cast<std::size_t>(P + 2 * m - 1 - j)] = P + j;
  }
  std::vector<int> partner;
  int loops = stitch(mate, glue, partner);
  ClosedDiagram d;
  d.mark = mark;
  d.mate.assign(partner.begin(), partner.begin() + P);
  d.circles = circles + loops;
  return d;
}

OpenDiagram compose(const OpenDiagram& X, const OpenDiagram& Y) {
  if (X.m != Y.m) throw std::invalid_argument("box size mismatch");
  int m = X.m, nx = X.n(), ny = Y.n(), B = 2 * m;
  int bx = 4 * (nx + ny), by = bx + B, E = by + B;
  auto mx = [&](int e) { return e < 4 * nx ? e : bx + e - 4 * nx; };
  auto my = [&](int e) { return e < 4 * ny ? 4 * nx + e : by + e - 4 * ny; };
  std::vector<int> mate(static_cast<std::size_t>(E)), glue(static_cast<std::size_t>(E), -1);
  for (std::size_t e = 0; e < X.mate.size(); ++e) mate[static_cast<std::size_t>(mx(static_cast<int>(e)))] = mx(X.mate[e]);
  for (std::size_t e = 0; e < Y.mate.size(); ++e) mate[static_cast<std::size_t>(my(static_cast<int>(e)))] = my(Y.mate[e]);
  for (int j = 0; j < m; ++j) {
    int a = bx + j, b = by + B - 1 - j;
    glue[static_cast<std::size_t>(a)] = b;
    glue[static_cast<std::size_t>(b)] = a;
  }
  std::vector<int> partner;
  int loops = stitch(mate, glue, partner);
  int n = nx + ny, P = 4 * n;
  // combined end -> result end
  auto out = [&](int e) {
    if (e < P) return e;
    if (e >= by) return P + (e - by);        // Y bottom
    return P + (e - bx);                      // X top
  };
  OpenDiagram o;
  o.m = m;
  o.mark = X.mark;
  o.mark.insert(o.mark.end(), Y.mark.begin(), Y.mark.end());
  o.mate.assign(static_cast<std::size_t>(P + B), -1);
  for (int e = 0; e < E; ++e) {
    if (glue[static_cast<std::size_t>(e)] >= 0) continue;
    o.mate[static_cast<std::size_t>(out(e))] = out(partner[static_cast<std::size_t>(e)]);
  }
  o.circles = X.circles + Y.circles + loops;
  return o;
}

// ---------------------------------------------------------------- OrientedLink

int OrientedLink::writhe() const {
  int w = 0;
  for (int s : signs) w += s;
  return w;
}

void OrientedLink::validate() const {
  std::vector<int> over(signs.size(), 0), under(signs.size(), 0);
  for (const auto& c : components)
    for (const auto& v : c) {
      if (v.crossing < 0 || v.crossing >= crossings()) throw MalformedLink("crossing index out of range");
      (v.over ? over : under)[static_cast<std::size_t>(v.crossing)]++;
    }
  for (std::size_t c = 0; c < signs.size(); ++c) {
    if (over[c] != 1 || under[c] != 1)
      throw MalformedLink("crossing " + std::to_string(c) + " must be visited once over and once under");
    if (signs[c] != 1 && signs[c] != -1) throw MalformedLink("crossing sign must be +1 or -1");
  }
  if (free_loops < 0) throw MalformedLink("negative loop count");
}

OrientedLink OrientedLink::from_pd(const std::vector<std::array<int, 4>>& code) {
  struct In {
    int crossing;
    bool over;
    int out;
  };
  std::map<int, In> in_at;
  std::map<int, int> out_count;
  OrientedLink L;
  for (std::size_t c = 0; c < code.size(); ++c) {
    auto [i, j, k, l] = code[c];
    bool pos = (j - l == 1) || (l - j > 1);
    int cc = static_cast<int>(c);
    if (in_at.count(i)) throw MalformedLink("edge " + std::to_string(i) + " enters two crossings");
    in_at[i] = {cc, false, k};
    int oin = pos ? l : j, oout = pos ? j : l;
    if (in_at.count(oin)) throw MalformedLink("edge " + std::to_string(oin) + " enters two crossings");
    in_at[oin] = {cc, true, oout};
    out_count[k]++;
    out_count[oout]++;
    L.signs.push_back(pos ? 1 : -1);
  }
  for (const auto& [e, n] : out_count)
    if (n != 1 || !in_at.count(e)) throw MalformedLink("edge " + std::to_string(e) + " is not a single arc");
  std::set<int> seen;
  for (const auto& [e0, st] : in_at) {
    if (seen.count(e0)) continue;
    std::vector<LinkVisit> comp;
    int e = e0;
    while (!seen.count(e)) {
      seen.insert(e);
      const In& x = in_at.at(e);
      comp.push_back({x.crossing, x.over});
      e = x.out;
    }
    if (e != e0) throw MalformedLink("inconsistent orientation");
    L.components.push_back(std::move(comp));
  }
  L.validate();
  return L;
}

OrientedLink OrientedLink::parse_pd(const std::string& text) {
  std::regex re(R"(X\s*\[\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\])");
  std::vector<std::array<int, 4>> code;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), re); it != std::sregex_iterator(); ++it)
    code.push_back({std::stoi((*it)[1]), std::stoi((*it)[2]), std::stoi((*it)[3]), std::stoi((*it)[4])});
  if (code.empty()) throw MalformedLink("no X[i,j,k,l] entries");
  return from_pd(code);
}

OrientedLink OrientedLink::braid_closure(int strands, const std::vector<int>& word) {
  if (strands < 1) throw MalformedLink("braid needs a strand");
  OrientedLink L;
  for (int g : word) {
    if (g == 0 || std::abs(g) >= strands) throw MalformedLink("braid generator out of range");
    L.signs.push_back(g > 0 ? 1 : -1);
  }
  std::vector<char> done(static_cast<std::size_t>(strands), 0);
  for (int p0 = 0; p0 < strands; ++p0) {
    if (done[static_cast<std::size_t>(p0)]) continue;
    std::vector<LinkVisit> comp;
    int p = p0;
    do {
      done[static_cast<std::size_t>(p)] = 1;
      for (std::size_t k = 0; k < word.size(); ++k) {
        int i = std::abs(word[k]) - 1;
        if (p != i && p != i + 1) continue;
        bool left = p == i;
        comp.push_back({static_cast<int>(k), (word[k] > 0) == left});
        p = left ? i + 1 : i;
      }
    } while (p != p0);
    if (comp.empty())
      ++L.free_loops;
    else
      L.components.push_back(std::move(comp));
  }
  return L;
}

namespace {

// Relabels crossings by first appearance and moves empty components to free loops.
OrientedLink normalized(const std::vector<std::vector<LinkVisit>>& comps, const std::vector<int>& signs, int free) {
  OrientedLink L;
  L.free_loops = free;
  std::vector<int> lab(signs.size(), -1);
  for (const auto& c : comps) {
    if (c.empty()) {
      ++L.free_loops;
      continue;
    }
    std::vector<LinkVisit> nc;
    nc.reserve(c.size());
    for (const auto& v : c) {
      int& l = lab[static_cast<std::size_t>(v.crossing)];
      if (l < 0) {
        l = static_cast<int>(L.signs.size());
        L.signs.push_back(signs[static_cast<std::size_t>(v.crossing)]);
      }
      nc.push_back({l, v.over});
    }
    L.components.push_back(std::move(nc));
  }
  return L;
}

Key link_key(const OrientedLink& L) {
  Key k{L.free_loops, static_cast<int>(L.components.size())};
  for (const auto& c : L.components) {
    k.push_back(static_cast<int>(c.size()));
    for (const auto& v : c) k.push_back(2 * v.crossing + (v.over ? 1 : 0));
  }
  for (int s : L.signs) k.push_back(s);
  return k;
}

LocFrac homfly_rec(const OrientedLink& L);

}  // namespace

OrientedLink OrientedLink::switched(int c) const {
  OrientedLink L = *this;
  for (auto& comp : L.components)
    for (auto& v : comp)
      if (v.crossing == c) v.over = !v.over;
  L.signs[static_cast<std::size_t>(c)] = -L.signs[static_cast<std::size_t>(c)];
  return L;
}

OrientedLink OrientedLink::smoothed(int c) const {
  std::vector<std::pair<std::size_t, std::size_t>> at;
  for (std::size_t i = 0; i < components.size(); ++i)
    for (std::size_t j = 0; j < components[i].size(); ++j)
      if (components[i][j].crossing == c) at.emplace_back(i, j);
  if (at.size() != 2) throw MalformedLink("crossing not visited twice");
  std::vector<std::vector<LinkVisit>> nc;
  auto [i1, p1] = at[0];
  auto [i2, p2] = at[1];
  if (i1 == i2) {
    const auto& cm = components[i1];
    std::vector<LinkVisit> X(cm.begin() + static_cast<long>(p1) + 1, cm.begin() + static_cast<long>(p2));
    std::vector<LinkVisit> Y(cm.begin() + static_cast<long>(p2) + 1, cm.end());
    Y.insert(Y.end(), cm.begin(), cm.begin() + static_cast<long>(p1));
    for (std::size_t i = 0; i < components.size(); ++i)
      if (i != i1) nc.push_back(components[i]);
    nc.push_back(std::move(X));
    nc.push_back(std::move(Y));
  } else {
    const auto& c1 = components[i1];
    const auto& c2 = components[i2];
    std::vector<LinkVisit> X(c1.begin() + static_cast<long>(p1) + 1, c1.end());
    X.insert(X.end(), c1.begin(), c1.begin() + static_cast<long>(p1));
    X.insert(X.end(), c2.begin() + static_cast<long>(p2) + 1, c2.end());
    X.insert(X.end(), c2.begin(), c2.begin() + static_cast<long>(p2));
    for (std::size_t i = 0; i < components.size(); ++i)
      if (i != i1 && i != i2) nc.push_back(components[i]);
    nc.push_back(std::move(X));
  }
  return normalized(nc, signs, free_loops);
}

namespace {

LocFrac homfly_rec(const OrientedLink& L) {
  Key key = link_key(L);
  LocFrac val;
  if (homfly_memo().find(key, val)) return val;
  std::vector<char> seen(L.signs.size(), 0);
  int bad = -1;
  for (const auto& c : L.components) {
    for (const auto& v : c) {
      if (seen[static_cast<std::size_t>(v.crossing)]) continue;
      seen[static_cast<std::size_t>(v.crossing)] = 1;
      if (!v.over) {
        bad = v.crossing;
        break;
      }
    }
    if (bad >= 0) break;
  }
  if (bad < 0) {
    // descending: an unlink with kinks
    val = lf_r(L.writhe()) * lf_pow(lf_delta(), static_cast<int>(L.components.size()) + L.free_loops);
  } else {
    int s = L.signs[static_cast<std::size_t>(bad)];
    OrientedLink sw = L.switched(bad);
    LocFrac a = homfly_rec(sw), b = homfly_rec(L.smoothed(bad)) * LocFrac::z();
    val = s > 0 ? a + b : a - b;
  }
  homfly_memo().put(key, val);
  return val;
}

}  // namespace

LocFrac homfly_value(const OrientedLink& L) {
  L.validate();
  return homfly_rec(normalized(L.components, L.signs, L.free_loops));
}

FieldElem homfly(const OrientedLink& L) { return homfly_value(L).to_field(); }

// ---------------------------------------------------------------- zeta

int strand_count(const ClosedDiagram& d) {
  std::vector<char> used(d.mate.size(), 0);
  int s = 0;
  for (std::size_t p0 = 0; p0 < d.mate.size(); ++p0) {
    if (used[p0]) continue;
    ++s;
    int p = static_cast<int>(p0);
    while (!used[static_cast<std::size_t>(p)]) {
      int out = port(p / 4, p % 4 + 2);
      used[static_cast<std::size_t>(p)] = used[static_cast<std::size_t>(out)] = 1;
      p = d.mate[static_cast<std::size_t>(out)];
    }
  }
  return s;
}

StrandOrientation orient(const ClosedDiagram& d, const std::vector<bool>& flip) {
  StrandOrientation o;
  std::vector<char> used(d.mate.size(), 0);
  o.inport.assign(d.mate.size(), false);
  std::size_t s = 0;
  for (std::size_t p0 = 0; p0 < d.mate.size(); ++p0) {
    if (used[p0]) continue;
    bool f = s < flip.size() && flip[s];
    ++s;
    int p = static_cast<int>(p0);
    while (!used[static_cast<std::size_t>(p)]) {
      int out = port(p / 4, p % 4 + 2);
      used[static_cast<std::size_t>(p)] = used[static_cast<std::size_t>(out)] = 1;
      o.inport[static_cast<std::size_t>(p)] = !f;
      o.inport[static_cast<std::size_t>(out)] = f;
      p = d.mate[static_cast<std::size_t>(out)];
    }
  }
  o.frame.resize(static_cast<std::size_t>(d.n()));
  for (int v = 0; v < d.n(); ++v) {
    int g = -1;
    for (int p = 0; p < 4; ++p)
      if (o.inport[static_cast<std::size_t>(4 * v + p)] && o.inport[static_cast<std::size_t>(port(v, p + 1))]) g = p;
    o.frame[static_cast<std::size_t>(v)] = g;
  }
  return o;
}

OrientedLink braid_link(const ClosedDiagram& d, const StrandOrientation& o, const std::vector<int>& signs) {
  OrientedLink L;
  L.signs = signs;
  L.free_loops = d.circles;
  std::vector<char> used(d.mate.size(), 0);
  for (int v = 0; v < d.n(); ++v)
    for (int k = 0; k < 2; ++k) {
      int p = port(v, o.frame[static_cast<std::size_t>(v)] + k);
      if (used[static_cast<std::size_t>(p)]) continue;
      std::vector<LinkVisit> comp;
      while (!used[static_cast<std::size_t>(p)]) {
        used[static_cast<std::size_t>(p)] = 1;
        int u = p / 4;
        int kk = ((p % 4 - o.frame[static_cast<std::size_t>(u)]) % 4 + 4) % 4;
        // positive braid: the strand entering at the frame port passes over
        bool over = signs[static_cast<std::size_t>(u)] > 0 ? kk == 0 : kk == 1;
        comp.push_back({u, over});
        p = d.mate[static_cast<std::size_t>(port(u, p % 4 + 2))];
      }
      L.components.push_back(std::move(comp));
    }
  return L;
}

namespace {

enum Res : char { kR = 0, kI = 1, kE = 2 };

ClosedDiagram smooth(const ClosedDiagram& d, const std::vector<char>& choice, const std::vector<int>& frame) {
  int n = d.n();
  std::vector<int> idx(static_cast<std::size_t>(n), -1);
  int kept = 0;
  for (int v = 0; v < n; ++v)
    if (choice[static_cast<std::size_t>(v)] == kR) idx[static_cast<std::size_t>(v)] = kept++;
  std::vector<int> join(d.mate.size(), -1);
  for (int v = 0; v < n; ++v) {
    char c = choice[static_cast<std::size_t>(v)];
    if (c == kR) continue;
    int f = frame[static_cast<std::size_t>(v)];
    auto P = [&](int k) { return port(v, f + k); };
    std::pair<int, int> pr[2] = {c == kI ? std::pair{P(0), P(3)} : std::pair{P(0), P(1)},
                                 c == kI ? std::pair{P(1), P(2)} : std::pair{P(3), P(2)}};
    for (auto [x, y] : pr) {
      join[static_cast<std::size_t>(x)] = y;
      join[static_cast<std::size_t>(y)] = x;
    }
  }
  ClosedDiagram out;
  out.mark.resize(static_cast<std::size_t>(kept));
  out.mate.resize(4 * static_cast<std::size_t>(kept));
  out.circles = d.circles;
  for (int v = 0; v < n; ++v) {
    int iv = idx[static_cast<std::size_t>(v)];
    if (iv < 0) continue;
    out.mark[static_cast<std::size_t>(iv)] = d.mark[static_cast<std::size_t>(v)];
    for (int p = 0; p < 4; ++p) {
      int q = d.mate[static_cast<std::size_t>(4 * v + p)];
      while (idx[static_cast<std::size_t>(q / 4)] < 0) q = d.mate[static_cast<std::size_t>(join[static_cast<std::size_t>(q)])];
      out.mate[static_cast<std::size_t>(4 * iv + p)] = 4 * idx[static_cast<std::size_t>(q / 4)] + q % 4;
    }
  }
  std::vector<char> seen(d.mate.size(), 0);
  for (int v = 0; v < n; ++v) {
    if (idx[static_cast<std::size_t>(v)] >= 0) continue;
    for (int p = 0; p < 4; ++p) {
      int st = 4 * v + p;
      if (seen[static_cast<std::size_t>(st)]) continue;
      std::vector<int> path;
      int x = st;
      bool closed = true;
      for (;;) {
        path.push_back(x);
        int y = d.mate[static_cast<std::size_t>(x)];
        if (idx[static_cast<std::size_t>(y / 4)] >= 0) {
          closed = false;
          break;
        }
        path.push_back(y);
        x = join[static_cast<std::size_t>(y)];
        if (x == st) break;
      }
      if (closed) {
        for (int t : path) seen[static_cast<std::size_t>(t)] = 1;
        ++out.circles;
      } else {
        seen[static_cast<std::size_t>(st)] = 1;
      }
    }
  }
  return out;
}

Key canon_code(const ClosedDiagram& d) {
  int n = d.n();
  Key best;
  std::vector<int> lab(static_cast<std::size_t>(n)), off(static_cast<std::size_t>(n)), order;
  Key code;
  for (int v0 = 0; v0 < n; ++v0)
    for (int p0 = 0; p0 < 4; ++p0) {
      std::fill(lab.begin(), lab.end(), -1);
      order.assign(1, v0);
      lab[static_cast<std::size_t>(v0)] = 0;
      off[static_cast<std::size_t>(v0)] = p0;
      code.assign(1, n);
      bool worse = false;
      for (std::size_t k = 0; k < order.size() && !worse; ++k) {
        int u = order[k];
        int ou = off[static_cast<std::size_t>(u)];
        code.push_back(((d.mark[static_cast<std::size_t>(u)] - ou) % 4 + 4) % 4);
        for (int j = 0; j < 4; ++j) {
          int m = d.mate[static_cast<std::size_t>(port(u, ou + j))];
          int w = m / 4, pw = m % 4;
          if (lab[static_cast<std::size_t>(w)] < 0) {
            lab[static_cast<std::size_t>(w)] = static_cast<int>(order.size());
            off[static_cast<std::size_t>(w)] = pw;
            order.push_back(w);
          }
          code.push_back(4 * lab[static_cast<std::size_t>(w)] + ((pw - off[static_cast<std::size_t>(w)]) % 4 + 4) % 4);
        }
        if (!best.empty()) {
          // prune once the prefix exceeds the best code
          auto mm = std::mismatch(code.begin(), code.end(), best.begin());
          if (mm.first != code.end() && *mm.first > *mm.second) worse = true;
        }
      }
      if (!worse && (best.empty() || code < best)) best = code;
    }
  return best;
}

bool capped(const ClosedDiagram& d) {
  for (int v = 0; v < d.n(); ++v)
    for (int p = 0; p < 4; ++p)
      if (d.mate[static_cast<std::size_t>(4 * v + p)] == port(v, p + 1)) return true;
  return false;
}

LocFrac zeta_rec(const ClosedDiagram& d);

LocFrac zeta_formula(const ClosedDiagram& d, const StrandOrientation& o, const std::vector<int>& signs) {
  int n = d.n();
  LocFrac H = homfly_rec(normalized(braid_link(d, o, signs).components, signs, d.circles));
  if (n == 0) return H;
  const LocFrac a = LocFrac::z().scaled(GaussRat(mpq_class(1, 2)));
  const LocFrac b = LocFrac::z().scaled(GaussRat(0, mpq_class(-1, 2)));
  const LocFrac D = LocFrac::y().scaled(GaussRat(mpq_class(1, 2)));
  std::vector<LocFrac> coef[3];
  GaussRat kappa_prod(1);
  for (int v = 0; v < n; ++v) {
    GaussRat kap = minus_i_pow(o.frame[static_cast<std::size_t>(v)] - d.mark[static_cast<std::size_t>(v)]);
    kappa_prod *= kap;
    coef[kR].push_back(D.scaled(kap));
    coef[kI].push_back(signs[static_cast<std::size_t>(v)] > 0 ? a : -a);
    coef[kE].push_back(b);
  }
  std::vector<char> ch(static_cast<std::size_t>(n), kR);
  LocFrac tot;
  for (;;) {
    int v = 0;
    while (v < n && ch[static_cast<std::size_t>(v)] == kE) ch[static_cast<std::size_t>(v++)] = kR;
    if (v == n) break;
    ++ch[static_cast<std::size_t>(v)];
    LocFrac c(1);
    for (int u = 0; u < n; ++u) c *= coef[static_cast<int>(ch[static_cast<std::size_t>(u)])][static_cast<std::size_t>(u)];
    tot += c * zeta_rec(smooth(d, ch, o.frame));
  }
  mpq_class two_n = 1;
  for (int v = 0; v < n; ++v) two_n *= 2;
  return (H - tot).div_y(n).scaled(GaussRat(two_n) / kappa_prod);
}

LocFrac zeta_connected(const ClosedDiagram& d) {
  if (g_shortcuts && capped(d)) return LocFrac();
  Key key = canon_code(d);
  LocFrac val;
  if (zeta_memo().find(key, val)) return val;
  val = zeta_formula(d, orient(d), std::vector<int>(static_cast<std::size_t>(d.n()), 1));
  zeta_memo().put(key, val);
  return val;
}

LocFrac zeta_rec(const ClosedDiagram& d) {
  LocFrac val = lf_pow(lf_delta(), d.circles);
  auto comps = d.components();
  if (comps.size() == 1 && static_cast<int>(comps[0].size()) == d.n()) {
    ClosedDiagram c = d;
    c.circles = 0;
    return val * zeta_connected(c);
  }
  for (const auto& cc : comps) {
    val *= zeta_connected(d.sub(cc));
    if (val.is_zero()) break;
  }
  return val;
}

}  // namespace

LocFrac zeta_value(const ClosedDiagram& d) {
  check_matching(d.mate, 4 * static_cast<std::size_t>(d.n()));
  return zeta_rec(d);
}

FieldElem zeta(const ClosedDiagram& d) { return zeta_value(d).to_field(); }

LocFrac zeta_with_choice(const ClosedDiagram& d, const ZetaChoice& c) {
  check_matching(d.mate, 4 * static_cast<std::size_t>(d.n()));
  std::vector<int> signs = c.signs;
  signs.resize(static_cast<std::size_t>(d.n()), 1);
  return zeta_formula(d, orient(d, c.flip), signs);
}

ZetaChoice random_choice(const ClosedDiagram& d, std::mt19937_64& rng) {
  ZetaChoice c;
  std::bernoulli_distribution coin(0.5);
  for (int s = 0; s < strand_count(d); ++s) c.flip.push_back(coin(rng));
  for (int v = 0; v < d.n(); ++v) c.signs.push_back(coin(rng) ? 1 : -1);
  return c;
}

LocFrac zeta_averaged(const ClosedDiagram& d) {
  int S = strand_count(d), n = d.n();
  if (S + n > 20) throw std::invalid_argument("too many choices to average");
  LocFrac sum;
  long count = 0;
  for (long fm = 0; fm < (1L << S); ++fm)
    for (long sm = 0; sm < (1L << n); ++sm) {
      ZetaChoice c;
      for (int s = 0; s < S; ++s) c.flip.push_back((fm >> s) & 1);
      for (int v = 0; v < n; ++v) c.signs.push_back((sm >> v) & 1 ? -1 : 1);
      sum += zeta_with_choice(d, c);
      ++count;
    }
  return sum.scaled(GaussRat(mpq_class(1, count)));
}

void set_zeta_shortcuts(bool on) { g_shortcuts = on; }

void clear_skein_caches() {
  zeta_memo().clear();
  homfly_memo().clear();
}

std::size_t zeta_cache_size() { return zeta_memo().size(); }

// ---------------------------------------------------------------- words

std::string word_str(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (const auto& l : w) {
    if (!s.empty()) s += ' ';
    s += l.kind;
    s += std::to_string(l.index);
  }
  return s;
}

Word reversed(const Word& w) { return Word(w.rbegin(), w.rend()); }

OpenDiagram word_diagram(const Word& w, int m) {
  OpenDiagram d = OpenDiagram::identity(m);
  for (const auto& l : w) {
    if (l.kind == 'r')
      d = compose(d, OpenDiagram::crossing(m, l.index));
    else if (l.kind == 'h')
      d = compose(d, OpenDiagram::cupcap(m, l.index));
    else
      throw std::invalid_argument(std::string("unknown letter ") + l.kind);
  }
  return d;
}

AlgElem AlgElem::identity(int m, FieldElem c) { return word(m, {}, std::move(c)); }

AlgElem AlgElem::word(int m, const Word& w, FieldElem c) {
  for (const auto& l : w) check_index(m, l.index, l.kind);
  AlgElem x(m);
  x.add_term(w, c);
  return x;
}

AlgElem AlgElem::alpha(int m, int i, bool inverse) {
  const Params& P = params();
  return identity(m, inverse ? -P.a : P.a) + h(m, i) * P.b + r(m, i) * P.D;
}

AlgElem AlgElem::beta(int m, int i, bool inverse) {
  const Params& P = params();
  return identity(m, inverse ? -P.a : P.a) - h(m, i) * P.b + r(m, i) * P.D;
}

void AlgElem::add_term(const Word& w, const FieldElem& c) {
  if (c.is_zero()) return;
  auto it = t_.find(w);
  if (it == t_.end()) {
    t_.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) t_.erase(it);
}

AlgElem& AlgElem::operator+=(const AlgElem& o) {
  if (m_ != o.m_) throw std::invalid_argument("box size mismatch");
  for (const auto& [w, c] : o.t_) add_term(w, c);
  return *this;
}

AlgElem& AlgElem::operator-=(const AlgElem& o) {
  if (m_ != o.m_) throw std::invalid_argument("box size mismatch");
  for (const auto& [w, c] : o.t_) add_term(w, -c);
  return *this;
}

AlgElem& AlgElem::operator*=(const FieldElem& s) {
  if (s.is_zero()) {
    t_.clear();
    return *this;
  }
  for (auto& [w, c] : t_) c *= s;
  return *this;
}

AlgElem operator*(const AlgElem& a, const AlgElem& b) {
  if (a.m_ != b.m_) throw std::invalid_argument("box size mismatch");
  AlgElem x(a.m_);
  for (const auto& [w1, c1] : a.t_)
    for (const auto& [w2, c2] : b.t_) {
      Word w = w1;
      w.insert(w.end(), w2.begin(), w2.end());
      x.add_term(w, c1 * c2);
    }
  return x;
}

AlgElem AlgElem::adjoint() const {
  AlgElem x(m_);
  for (const auto& [w, c] : t_) x.add_term(reversed(w), c.conj());
  return x;
}

std::string AlgElem::str() const {
  if (t_.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : t_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.str() + ")";
    if (!w.empty()) s += " " + word_str(w);
  }
  return s;
}

namespace {

class DslParser {
 public:
  DslParser(const std::string& t, int m) : t_(t), m_(m) {}

  AlgElem run() {
    AlgElem x = element();
    skip();
    if (pos_ != t_.size()) throw ParseError("unexpected character", pos_);
    return x;
  }

 private:
  const std::string& t_;
  int m_;
  std::size_t pos_ = 0;

  void skip() {
    while (pos_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[pos_]))) ++pos_;
  }
  bool at(char c) {
    skip();
    return pos_ < t_.size() && t_[pos_] == c;
  }

  AlgElem element() {
    AlgElem x(m_);
    bool neg = false;
    if (at('+') || at('-')) neg = t_[pos_++] == '-';
    for (;;) {
      AlgElem t = term();
      if (neg)
        x -= t;
      else
        x += t;
      if (at('+') || at('-'))
        neg = t_[pos_++] == '-';
      else
        break;
    }
    return x;
  }

  std::size_t matching_paren(std::size_t open) const {
    int depth = 0;
    for (std::size_t k = open; k < t_.size(); ++k) {
      if (t_[k] == '(') ++depth;
      if (t_[k] == ')' && --depth == 0) return k;
    }
    throw ParseError("unbalanced parenthesis", open);
  }

  static bool is_letter(char c) { return c == 'r' || c == 'h' || c == 'a' || c == 'b'; }

  AlgElem term() {
    AlgElem x = AlgElem::identity(m_);
    bool any = false;
    for (;;) {
      skip();
      if (pos_ >= t_.size()) break;
      char c = t_[pos_];
      if (c == '(') {
        std::size_t close = matching_paren(pos_);
        std::string inner = t_.substr(pos_ + 1, close - pos_ - 1);
        std::size_t start = pos_;
        AlgElem f(m_);
        try {
          f = AlgElem::identity(m_, FieldElem::parse(inner));
        } catch (const ParseError&) {
          DslParser sub(inner, m_);
          try {
            f = sub.run();
          } catch (const ParseError& e) {
            throw ParseError("in group", start + 1 + e.position);
          }
        }
        pos_ = close + 1;
        if (at('*')) {
          ++pos_;
          f = f.adjoint();
        }
        x = x * f;
        any = true;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t start = pos_;
        while (pos_ < t_.size() && (std::isdigit(static_cast<unsigned char>(t_[pos_])) || t_[pos_] == '/')) ++pos_;
        x = x * AlgElem::identity(m_, FieldElem::parse(t_.substr(start, pos_ - start)));
        any = true;
      } else if (is_letter(c) && pos_ + 1 < t_.size() && std::isdigit(static_cast<unsigned char>(t_[pos_ + 1]))) {
        ++pos_;
        std::size_t start = pos_;
        while (pos_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[pos_]))) ++pos_;
        int i = std::stoi(t_.substr(start, pos_ - start));
        bool inv = false;
        if (t_.compare(pos_, 3, "^-1") == 0) {
          if (c == 'r' || c == 'h') throw ParseError("only a and b letters have inverses", pos_);
          inv = true;
          pos_ += 3;
        }
        check_index(m_, i, c);
        AlgElem f = c == 'r'   ? AlgElem::r(m_, i)
                    : c == 'h' ? AlgElem::h(m_, i)
                    : c == 'a' ? AlgElem::alpha(m_, i, inv)
                               : AlgElem::beta(m_, i, inv);
        if (at('*')) {
          ++pos_;
          f = f.adjoint();
        }
        x = x * f;
        any = true;
      } else if (c == 'I' || c == 'i' || c == 'q') {
        std::size_t start = pos_++;
        if (c == 'q' && pos_ < t_.size() && t_[pos_] == '^') {
          ++pos_;
          if (pos_ < t_.size() && t_[pos_] == '-') ++pos_;
          std::size_t digits = pos_;
          while (pos_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[pos_]))) ++pos_;
          if (digits == pos_) throw ParseError("expected exponent", pos_);
        }
        x = x * AlgElem::identity(m_, FieldElem::parse(t_.substr(start, pos_ - start)));
        any = true;
      } else if (c == '+' || c == '-' || c == ')') {
        break;
      } else {
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
      }
    }
    if (!any) throw ParseError("empty term", pos_);
    return x;
  }
};

}  // namespace

AlgElem AlgElem::parse(const std::string& text, int m) {
  if (m < 1) throw std::invalid_argument("box size must be positive");
  return DslParser(text, m).run();
}

LocFrac word_trace_value(const Word& w, int m) { return zeta_rec(word_diagram(w, m).close()); }

FieldElem word_trace(const AlgElem& x) {
  FieldElem out;
  for (const auto& [w, c] : x.terms()) {
    LocFrac v = word_trace_value(w, x.m());
    if (!v.is_zero()) out += c * v.to_field();
  }
  return out;
}

std::vector<std::vector<FieldElem>> gram(const std::vector<Word>& words, int m, int jobs) {
  std::size_t K = words.size();
  std::vector<std::vector<FieldElem>> G(K, std::vector<FieldElem>(K));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t t = next++; t < K * K; t = next++) {
      std::size_t k = t / K, l = t % K;
      Word w = reversed(words[k]);
      w.insert(w.end(), words[l].begin(), words[l].end());
      G[k][l] = word_trace_value(w, m).to_field();
    }
  };
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  return G;
}

std::vector<std::vector<CycloElem>> specialize(const std::vector<std::vector<FieldElem>>& g, int N) {
  std::vector<std::vector<CycloElem>> out;
  for (const auto& row : g) {
    out.emplace_back();
    for (const auto& x : row) out.back().push_back(specialize(x, N));
  }
  return out;
}

std::vector<FieldElem> relation_defects(const AlgElem& lhs, const AlgElem& rhs, const std::vector<Word>& probes) {
  AlgElem d = lhs - rhs;
  std::vector<FieldElem> out;
  for (const auto& p : probes) out.push_back(word_trace(d * AlgElem::word(d.m(), reversed(p))));
  return out;
}

bool verify_relation(const AlgElem& lhs, const AlgElem& rhs, const std::vector<Word>& probes) {
  for (const auto& v : relation_defects(lhs, rhs, probes))
    if (!v.is_zero()) return false;
  return true;
}

// ---------------------------------------------------------------- Brauer words

namespace {

OpenDiagram transposition(int m, int i) {
  OpenDiagram o = OpenDiagram::identity(m);
  link_ends(o.mate, i - 1, 2 * m - i - 1);
  link_ends(o.mate, i, 2 * m - i);
  return o;
}

}  // namespace

std::vector<int> brauer_shape(const Word& w, int m) {
  OpenDiagram d = OpenDiagram::identity(m);
  for (const auto& l : w) {
    check_index(m, l.index, l.kind);
    d = compose(d, l.kind == 'r' ? transposition(m, l.index) : OpenDiagram::cupcap(m, l.index));
  }
  return d.mate;
}

std::vector<Word> brauer_words(int m) {
  std::vector<Letter> letters;
  for (int i = 1; i < m; ++i) letters.push_back({'h', i});
  for (int i = 1; i < m; ++i) letters.push_back({'r', i});
  auto cost = [](const Word& w) {
    int c = 0;
    for (const auto& l : w) c += l.kind == 'r' ? 16 : 1;
    return c;
  };
  std::set<std::pair<int, Word>> queue{{0, Word{}}};
  std::set<std::vector<int>> done;
  std::vector<Word> out;
  while (!queue.empty()) {
    auto [c, w] = *queue.begin();
    queue.erase(queue.begin());
    auto shape = brauer_shape(w, m);
    if (!done.insert(shape).second) continue;
    out.push_back(w);
    for (const auto& l : letters) {
      Word w2 = w;
      w2.push_back(l);
      queue.emplace(cost(w2), w2);
    }
  }
  return out;
}

}  // namespace ybr
