#pragma once

#include "ybr/exactnum.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace ybr {

struct MalformedLink : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NonPlanarWiring : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct IndexOutOfRange : std::out_of_range {
  using std::out_of_range::out_of_range;
};

// Closed diagram of R-labeled crossings. Ports of crossing v are 4v+p with
// p = 0,1,2,3 counterclockwise; mark[v] is the port carrying the $ of R.
struct ClosedDiagram {
  std::vector<int> mate;
  std::vector<int> mark;
  int circles = 0;

  int n() const { return static_cast<int>(mark.size()); }
  // "circles=<k>; x(a,b,c,d;rot=m) ..." where a..d are edge labels, each used twice.
  static ClosedDiagram parse(const std::string& text);
  std::string str() const;
  // Throws NonPlanarWiring if the matching is invalid or the rotation system has positive genus.
  void validate() const;
  bool is_planar() const;
  std::vector<std::vector<int>> components() const;
  ClosedDiagram sub(const std::vector<int>& verts) const;
};

ClosedDiagram disjoint_union(const ClosedDiagram& a, const ClosedDiagram& b);

// m-box with 2m boundary points numbered counterclockwise from the bottom-left:
// bottom positions 1..m are 0..m-1, top position j is 2m-j. Ends 0..4n-1 are
// crossing ports, end 4n+k is boundary point k.
struct OpenDiagram {
  int m = 0;
  std::vector<int> mark;
  std::vector<int> mate;
  int circles = 0;

  int n() const { return static_cast<int>(mark.size()); }
  static OpenDiagram identity(int m);
  static OpenDiagram crossing(int m, int i, int mark = 0);  // r_i
  static OpenDiagram cupcap(int m, int i);                  // h_i
  // Counterclockwise shift of the boundary labels by the given number of clicks.
  OpenDiagram rotate(int clicks) const;
  // Markov closure: top j joined to bottom j.
  ClosedDiagram close() const;
};

// top stacked on bottom.
OpenDiagram compose(const OpenDiagram& top, const OpenDiagram& bottom);

// Visit of a link component at a crossing.
struct LinkVisit {
  int crossing;
  bool over;
  friend auto operator<=>(const LinkVisit&, const LinkVisit&) = default;
};

struct OrientedLink {
  std::vector<std::vector<LinkVisit>> components;
  std::vector<int> signs;  // +1 / -1 per crossing
  int free_loops = 0;

  int crossings() const { return static_cast<int>(signs.size()); }
  int writhe() const;
  void validate() const;
  // Planar diagram code X[i,j,k,l]: i incoming under edge, labels counterclockwise,
  // edges numbered consecutively along each component.
  static OrientedLink from_pd(const std::vector<std::array<int, 4>>& code);
  static OrientedLink parse_pd(const std::string& text);
  // Closure of a braid word; +i is sigma_i, -i its inverse.
  static OrientedLink braid_closure(int strands, const std::vector<int>& word);
  OrientedLink switched(int c) const;
  OrientedLink smoothed(int c) const;
};

LocFrac homfly_value(const OrientedLink& L);
FieldElem homfly(const OrientedLink& L);

// Orientation of every strand of a closed diagram and a braid sign per crossing.
struct ZetaChoice {
  std::vector<bool> flip;  // per strand, in order of first port
  std::vector<int> signs;
};

struct StrandOrientation {
  std::vector<int> frame;     // per crossing, the in-port g with in-ports {g, g+1}
  std::vector<bool> inport;   // per port
};
StrandOrientation orient(const ClosedDiagram& d, const std::vector<bool>& flip = {});
int strand_count(const ClosedDiagram& d);
// The oriented link obtained by replacing each R with the braid of the given sign.
OrientedLink braid_link(const ClosedDiagram& d, const StrandOrientation& o, const std::vector<int>& signs);

LocFrac zeta_value(const ClosedDiagram& d);
FieldElem zeta(const ClosedDiagram& d);
// Single top-level choice; sub-diagrams use the memoized default choice.
LocFrac zeta_with_choice(const ClosedDiagram& d, const ZetaChoice& c);
ZetaChoice random_choice(const ClosedDiagram& d, std::mt19937_64& rng);
// Mean over all orientations and braid signs at the top level.
LocFrac zeta_averaged(const ClosedDiagram& d);
// Disables the capped-R shortcut; for cross-checks.
void set_zeta_shortcuts(bool on);
void clear_skein_caches();
std::size_t zeta_cache_size();

struct Letter {
  char kind;  // 'r' or 'h'
  int index;  // 1-based
  friend auto operator<=>(const Letter&, const Letter&) = default;
};
using Word = std::vector<Letter>;
std::string word_str(const Word& w);
Word reversed(const Word& w);
OpenDiagram word_diagram(const Word& w, int m);

// Linear combination of words in r_i, h_i.
class AlgElem {
 public:
  AlgElem() = default;
  explicit AlgElem(int m) : m_(m) {}
  static AlgElem identity(int m, FieldElem c = FieldElem(1));
  static AlgElem word(int m, const Word& w, FieldElem c = FieldElem(1));
  static AlgElem r(int m, int i) { return word(m, {{'r', i}}); }
  static AlgElem h(int m, int i) { return word(m, {{'h', i}}); }
  static AlgElem alpha(int m, int i, bool inverse = false);
  static AlgElem beta(int m, int i, bool inverse = false);
  // element := term (('+'|'-') term)*; term := coeff? factor*; factor := letter | '(' element ')' ['*']
  static AlgElem parse(const std::string& text, int m);

  int m() const { return m_; }
  const std::map<Word, FieldElem>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  AlgElem& operator+=(const AlgElem& o);
  AlgElem& operator-=(const AlgElem& o);
  AlgElem& operator*=(const FieldElem& s);
  friend AlgElem operator+(AlgElem a, const AlgElem& b) { return a += b; }
  friend AlgElem operator-(AlgElem a, const AlgElem& b) { return a -= b; }
  friend AlgElem operator*(AlgElem a, const FieldElem& s) { return a *= s; }
  friend AlgElem operator*(const FieldElem& s, AlgElem a) { return a *= s; }
  friend AlgElem operator*(const AlgElem& a, const AlgElem& b);
  AlgElem adjoint() const;
  std::string str() const;

 private:
  int m_ = 0;
  std::map<Word, FieldElem> t_;
  void add_term(const Word& w, const FieldElem& c);
};

LocFrac word_trace_value(const Word& w, int m);
FieldElem word_trace(const AlgElem& x);
// G[k][l] = tr(w_k^* w_l).
std::vector<std::vector<FieldElem>> gram(const std::vector<Word>& words, int m, int jobs = 1);
std::vector<std::vector<CycloElem>> specialize(const std::vector<std::vector<FieldElem>>& g, int N);
bool verify_relation(const AlgElem& lhs, const AlgElem& rhs, const std::vector<Word>& probes);
// Traces tr((lhs - rhs) p^*) per probe.
std::vector<FieldElem> relation_defects(const AlgElem& lhs, const AlgElem& rhs, const std::vector<Word>& probes);

// One word per Brauer diagram on 2m points, fewest crossings first.
std::vector<Word> brauer_words(int m);
// Perfect matching of the 2m boundary points underlying a word, r_i read as a transposition.
std::vector<int> brauer_shape(const Word& w, int m);

}  // namespace ybr
