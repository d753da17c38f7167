#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ybr::linalg {

template <class S>
using Vec = std::vector<S>;
template <class S>
using Mat = std::vector<std::vector<S>>;

template <class S>
bool is_zero(const Vec<S>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

// Incremental row echelon form; every stored row has a unit pivot and zeros at earlier pivots.
template <class S>
class Echelon {
 public:
  explicit Echelon(S zero) : zero_(std::move(zero)) {}

  Vec<S> reduce(Vec<S> v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      std::size_t p = pivots_[k];
      if (v[p].is_zero()) continue;
      S c = v[p];
      for (std::size_t j = 0; j < v.size(); ++j)
        if (!rows_[k][j].is_zero()) v[j] -= c * rows_[k][j];
    }
    return v;
  }
  bool insert(const Vec<S>& v) {
    Vec<S> w = reduce(v);
    std::size_t p = 0;
    while (p < w.size() && w[p].is_zero()) ++p;
    if (p == w.size()) return false;
    S inv = S(w[p]).inv();
    for (auto& x : w)
      if (!x.is_zero()) x *= inv;
    rows_.push_back(std::move(w));
    pivots_.push_back(p);
    return true;
  }
  bool contains(const Vec<S>& v) const { return is_zero(reduce(v)); }
  std::size_t rank() const { return rows_.size(); }
  const Mat<S>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  S zero_;
  Mat<S> rows_;
  std::vector<std::size_t> pivots_;
};

// Reduced row echelon form in place; returns pivot columns.
template <class S>
std::vector<std::size_t> rref(Mat<S>& A, std::size_t ncols) {
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < A.size(); ++c) {
    std::size_t p = r;
    while (p < A.size() && A[p][c].is_zero()) ++p;
    if (p == A.size()) continue;
    std::swap(A[p], A[r]);
    S inv = A[r][c].inv();
    for (auto& x : A[r])
      if (!x.is_zero()) x *= inv;
    for (std::size_t i = 0; i < A.size(); ++i) {
      if (i == r || A[i][c].is_zero()) continue;
      S f = A[i][c];
      for (std::size_t j = 0; j < A[i].size(); ++j)
        if (!A[r][j].is_zero()) A[i][j] -= f * A[r][j];
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

template <class S>
std::size_t rank(Mat<S> A) {
  if (A.empty()) return 0;
  return rref(A, A[0].size()).size();
}

// Solves A X = B for nonsingular square A.
template <class S>
Mat<S> solve(const Mat<S>& A, const Mat<S>& B) {
  std::size_t n = A.size(), k = B.empty() ? 0 : B[0].size();
  Mat<S> M(n);
  for (std::size_t i = 0; i < n; ++i) {
    M[i] = A[i];
    M[i].insert(M[i].end(), B[i].begin(), B[i].end());
  }
  if (rref(M, n).size() != n) throw std::domain_error("singular system");
  Mat<S> X(n);
  for (std::size_t i = 0; i < n; ++i) X[i].assign(M[i].begin() + static_cast<std::ptrdiff_t>(n), M[i].begin() + static_cast<std::ptrdiff_t>(n + k));
  return X;
}

// Some x with A x = b, or nothing if inconsistent.
template <class S>
std::optional<Vec<S>> solve_any(const Mat<S>& A, const Vec<S>& b, const S& zero) {
  std::size_t n = A.empty() ? 0 : A[0].size();
  Mat<S> M = A;
  for (std::size_t i = 0; i < M.size(); ++i) M[i].push_back(b[i]);
  auto piv = rref(M, n + 1);
  if (!piv.empty() && piv.back() == n) return std::nullopt;
  Vec<S> x(n, zero);
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = M[r][n];
  return x;
}

template <class S>
Mat<S> nullspace(Mat<S> A, std::size_t ncols, const S& zero, const S& one) {
  auto piv = rref(A, ncols);
  std::vector<bool> is_piv(ncols, false);
  for (auto p : piv) is_piv[p] = true;
  Mat<S> out;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_piv[f]) continue;
    Vec<S> v(ncols, zero);
    v[f] = one;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -A[r][f];
    out.push_back(std::move(v));
  }
  return out;
}

template <class S>
Vec<S> matvec(const Mat<S>& A, const Vec<S>& x, const S& zero) {
  Vec<S> y(A.size(), zero);
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j)
      if (!x[j].is_zero() && !A[i][j].is_zero()) y[i] += A[i][j] * x[j];
  return y;
}

template <class S>
Mat<S> matmul(const Mat<S>& A, const Mat<S>& B, const S& zero) {
  std::size_t n = A.size(), k = B.size(), m = B.empty() ? 0 : B[0].size();
  Mat<S> C(n, Vec<S>(m, zero));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (A[i][t].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (!B[t][j].is_zero()) C[i][j] += A[i][t] * B[t][j];
    }
  return C;
}

}  // namespace ybr::linalg
