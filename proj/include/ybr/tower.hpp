#pragma once

#include "ybr/exactnum.hpp"
#include "ybr/skein.hpp"
#include "ybr/young.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace ybr {

struct RankDeficiencyUnexpected : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BlockSplitFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BoxesAboveCutoff : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Scalars of the generic algebra (FieldElem) or of the quotient at level N (CycloElem).
template <class S>
struct Scalars;

template <>
struct Scalars<FieldElem> {
  int N = 0;
  FieldElem zero() const { return FieldElem(); }
  FieldElem one() const { return FieldElem(1); }
  FieldElem from(const FieldElem& x) const { return x; }
  FieldElem from(const LocFrac& x) const { return x.to_field(); }
  FieldElem qdim(const YoungDiagram& lam) const;
};

template <>
struct Scalars<CycloElem> {
  int N = 2;
  CycloElem zero() const { return CycloElem(specialization_order(N)); }
  CycloElem one() const { return CycloElem(specialization_order(N), mpq_class(1)); }
  CycloElem from(const FieldElem& x) const { return specialize(x, N); }
  CycloElem from(const LocFrac& x) const { return x.specialize(N); }
  CycloElem qdim(const YoungDiagram& lam) const;
};

struct TowerOptions {
  int jobs = 1;
  bool allow_four_boxes = false;
};

// The m-box algebra modulo the kernel of the trace form, in a basis of Brauer words.
template <class S>
struct StructureAlgebra {
  using Vec = std::vector<S>;
  using Mat = std::vector<std::vector<S>>;

  int m = 0;
  Scalars<S> F;
  std::vector<Word> words;  // all Brauer words
  Mat gram_full;            // tr(w_k^* w_l) over all words
  std::vector<int> basis;   // indices into words
  int kernel_dim = 0;
  std::map<Letter, Mat> generators;  // left multiplication by r_i, h_i
  std::vector<Mat> left;             // left multiplication by basis word k
  Vec trace;                         // tr of basis words

  int dim() const { return static_cast<int>(basis.size()); }
  Word basis_word(int k) const { return words[static_cast<std::size_t>(basis[static_cast<std::size_t>(k)])]; }
  // w_i w_j = sum_k c_ij^k w_k.
  const S& structconst(int i, int j, int k) const {
    return left[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
  }
  Mat gram() const;
  Vec zero_vec() const { return Vec(basis.size(), F.zero()); }
  Vec unit() const;
  Vec coords(const Word& w) const;
  Vec coords(const AlgElem& x) const;
  Vec alpha(int i, bool inverse = false) const;
  Vec mul(const Vec& x, const Vec& y) const;
  Mat left_matrix(const Vec& x) const;
  Mat right_matrix(const Vec& x) const;
  S tr(const Vec& x) const;
  std::string json() const;
};

template <class S>
StructureAlgebra<S> build_structure(int m, const Scalars<S>& F, const TowerOptions& opt = {});
StructureAlgebra<FieldElem> build_generic(int m, const TowerOptions& opt = {});
StructureAlgebra<CycloElem> build_at(int m, int N, const TowerOptions& opt = {});

template <class S>
struct Block {
  YoungDiagram label;
  int size = 0;                // matrix size
  S trace;                     // trace of a minimal idempotent
  std::vector<S> central;      // central idempotent in basis coordinates
  bool from_cupcap = false;    // lies in the ideal generated by h_{m-1}
};

template <class S>
struct BratteliData {
  int N = 0;
  std::vector<std::vector<Block<S>>> levels;                  // levels[m]
  std::vector<std::vector<std::vector<int>>> inclusion;       // inclusion[m][a][b]: level m block a in level m+1 block b
  std::vector<int> center_dims;
  std::vector<StructureAlgebra<S>> algebras;

  // Differences from the Young lattice (N = 0) or YL(N): vertices, block sizes, inclusions, traces.
  std::vector<std::string> lattice_mismatches() const;
  // Sum over b of inclusion[m][a][b] * trace(b) minus delta * trace(a), per block.
  std::vector<S> perron_defects(int m) const;
  std::map<YoungDiagram, S> block_traces(int m) const;
  std::string dot() const;
  std::string json() const;
};

template <class S>
BratteliData<S> bratteli(int mMax, const Scalars<S>& F, const TowerOptions& opt = {});
BratteliData<FieldElem> bratteli_generic(int mMax, const TowerOptions& opt = {});
BratteliData<CycloElem> bratteli_at(int mMax, int N, const TowerOptions& opt = {});

struct PositivityReport {
  int m = 0, N = 0;
  int words = 0, rank = 0, kernel_dim = 0;
  bool hermitian = false;
  bool schur_complement_zero = false;  // full Gram is determined by the basis block
  std::vector<CycloElem> pivots;       // LDL* pivots of the quotient Gram
  std::vector<int> pivot_signs;
  std::vector<std::pair<std::string, std::string>> pivot_enclosures;
  bool positive_definite = false;
  std::string json() const;
};
PositivityReport positivity_certificate(const StructureAlgebra<CycloElem>& S);

}  // namespace ybr
