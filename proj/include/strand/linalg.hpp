#pragma once
#include <Eigen/Core>
#include <algorithm>
#include <optional>
#include <vector>

#include "strand/fp.hpp"
#include "strand/truncpoly.hpp"

namespace strand {

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;
using MatF = Mat<Fp>;
using VecF = Vec<Fp>;
using MatP = Mat<TruncPoly>;
using Index = Eigen::Index;

inline MatF bound(MatF m, std::int64_t p) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) m(i, j) = m(i, j).bound(p);
  return m;
}

inline MatF identity_mat(Index n, std::int64_t p) {
  return bound(MatF::Identity(n, n), p);
}

inline bool is_zero_mat(const MatF& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

inline MatF hstack(const MatF& a, const MatF& b) {
  MatF r(a.rows(), a.cols() + b.cols());
  r << a, b;
  return r;
}

inline MatF vstack(const MatF& a, const MatF& b) {
  MatF r(a.rows() + b.rows(), a.cols());
  r << a, b;
  return r;
}

/* Reduced row echelon form with deterministic first-nonzero pivoting: columns
 * are scanned left to right and the first row with a nonzero entry is the
 * pivot.  Same input, same output, independent of the entries' history. */
struct Rref {
  MatF r;                     // rank x cols, fully reduced
  std::vector<Index> pivots;  // pivot column of each row, strictly increasing
  Index rank() const { return static_cast<Index>(pivots.size()); }
};

inline Rref rref(MatF m, std::int64_t p) {
  m = bound(m, p);
  const Index nr = m.rows(), nc = m.cols();
  std::vector<Index> pivots;
  Index row = 0;
  for (Index col = 0; col < nc && row < nr; ++col) {
    Index sel = -1;
    for (Index i = row; i < nr; ++i)
      if (!m(i, col).is_zero()) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != row) m.row(sel).swap(m.row(row));
    m.row(row) *= m(row, col).inv();
    for (Index i = 0; i < nr; ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      m.row(i) -= m(i, col) * m.row(row);
    }
    pivots.push_back(col);
    ++row;
  }
  Rref out;
  out.r = m.topRows(row);
  out.pivots = std::move(pivots);
  return out;
}

inline Index rank_of(const MatF& m, std::int64_t p) { return rref(m, p).rank(); }

/* residual of a row vector against an rref basis */
inline VecF reduce_row(const Rref& rr, VecF v, std::int64_t p) {
  for (Index i = 0; i < v.size(); ++i) v(i) = v(i).bound(p);
  for (Index k = 0; k < rr.rank(); ++k) {
    const Fp c = v(rr.pivots[k]);
    if (!c.is_zero()) v -= c * rr.r.row(k).transpose();
  }
  return v;
}

/* columns form a basis of the kernel of m, ordered by free column */
inline MatF kernel_basis(const MatF& m, std::int64_t p) {
  const Index nc = m.cols();
  const Rref rr = rref(m, p);
  std::vector<bool> is_pivot(nc, false);
  for (Index c : rr.pivots) is_pivot[c] = true;
  std::vector<Index> free_cols;
  for (Index c = 0; c < nc; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  MatF k = bound(MatF::Zero(nc, static_cast<Index>(free_cols.size())), p);
  for (Index j = 0; j < k.cols(); ++j) {
    k(free_cols[j], j) = Fp(1, p);
    for (Index i = 0; i < rr.rank(); ++i) k(rr.pivots[i], j) = -rr.r(i, free_cols[j]);
  }
  return k;
}

/* one solution of a x = b if any, chosen deterministically (free vars zero) */
inline std::optional<VecF> solve_affine(const MatF& a, const VecF& b, std::int64_t p) {
  const Index nc = a.cols();
  MatF aug(a.rows(), nc + 1);
  aug << a, b;
  const Rref rr = rref(aug, p);
  for (Index c : rr.pivots)
    if (c == nc) return std::nullopt;
  VecF x = bound(MatF::Zero(nc, 1), p);
  for (Index i = 0; i < rr.rank(); ++i) x(rr.pivots[i]) = rr.r(i, nc);
  return x;
}

/* Incrementally maintained row space in reduced echelon form.  insert()
 * reports whether the row enlarged the span; reduce() returns the residual.
 * Rows live as raw residues so the elimination inner loops stay cheap; the
 * MatF view is materialized on demand and must not be held across inserts. */
class RowSpan {
 public:
  RowSpan(Index ncols, std::int64_t p) : p_(p), ncols_(ncols) {}

  Index dim() const { return static_cast<Index>(raw_.size()); }
  Index ncols() const { return ncols_; }
  const std::vector<Index>& pivots() const { return pivots_; }

  const MatF& rows() const {
    if (!cache_) {
      MatF m = bound(MatF::Zero(dim(), ncols_), p_);
      for (Index i = 0; i < dim(); ++i)
        for (Index j = 0; j < ncols_; ++j) m(i, j) = Fp(raw_[i][j], p_);
      cache_ = std::move(m);
    }
    return *cache_;
  }

  VecF reduce(VecF v) const {
    std::vector<std::int64_t> w = unpack(v);
    reduce_raw(w);
    for (Index j = 0; j < ncols_; ++j) v(j) = Fp(w[j], p_);
    return v;
  }

  bool contains(const VecF& v) const {
    std::vector<std::int64_t> w = unpack(v);
    reduce_raw(w);
    for (std::int64_t x : w)
      if (x) return false;
    return true;
  }

  bool insert(const VecF& v) {
    std::vector<std::int64_t> w = unpack(v);
    reduce_raw(w);
    Index piv = -1;
    for (Index j = 0; j < ncols_; ++j)
      if (w[j]) {
        piv = j;
        break;
      }
    if (piv < 0) return false;
    const std::int64_t inv = Fp(w[piv], p_).inv().value();
    for (auto& x : w) x = x * inv % p_;
    for (auto& row : raw_) {
      const std::int64_t c = row[piv];
      if (!c) continue;
      for (Index j = 0; j < ncols_; ++j) row[j] = ((row[j] - c * w[j]) % p_ + p_) % p_;
    }
    const auto at = std::lower_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin();
    raw_.insert(raw_.begin() + at, std::move(w));
    pivots_.insert(pivots_.begin() + at, piv);
    cache_.reset();
    return true;
  }

  void insert_all(const MatF& m) {
    for (Index i = 0; i < m.rows(); ++i) insert(m.row(i).transpose());
  }

 private:
  std::vector<std::int64_t> unpack(const VecF& v) const {
    std::vector<std::int64_t> w(ncols_);
    for (Index j = 0; j < ncols_; ++j) w[j] = v(j).bound(p_).value();
    return w;
  }

  /* rows are fully reduced, so the pivot coefficients of w never change
   * during elimination and each pivot row is applied at most once */
  void reduce_raw(std::vector<std::int64_t>& w) const {
    for (std::size_t k = 0; k < raw_.size(); ++k) {
      const std::int64_t c = w[pivots_[k]];
      if (!c) continue;
      const auto& row = raw_[k];
      for (Index j = 0; j < ncols_; ++j) w[j] = ((w[j] - c * row[j]) % p_ + p_) % p_;
    }
  }

  std::int64_t p_;
  Index ncols_ = 0;
  std::vector<std::vector<std::int64_t>> raw_;  // canonical residues in [0, p)
  std::vector<Index> pivots_;
  mutable std::optional<MatF> cache_;
};

/* flatten row-major, the convention used for all linear systems over maps */
inline VecF flatten(const MatF& m) {
  VecF v(m.rows() * m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) v(i * m.cols() + j) = m(i, j);
  return v;
}

inline MatF unflatten(const VecF& v, Index rows, Index cols) {
  MatF m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = v(i * cols + j);
  return m;
}

}  // namespace strand
