// Exact dense linear algebra over F_p: reduced row echelon form, kernels,
// images, linear solves, and canonically represented subspaces. This is the
// computational substrate for every other header; all functions are pure.
#pragma once

#include <Eigen/Core>
#include <optional>
#include <utility>
#include <vector>

#include "tautilt/field.hpp"
#include "tautilt/util.hpp"

namespace tautilt {

using Index = Eigen::Index;

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

template <class S>
bool mat_equal(const Mat<S>& a, const Mat<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

template <class S>
bool is_zero_mat(const Mat<S>& a) {
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != S(0)) return false;
  return true;
}

template <class S>
bool is_zero_vec(const Vec<S>& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (v[i] != S(0)) return false;
  return true;
}

/// Row-major flattening of a matrix into a single column vector.
template <class S>
Vec<S> vec_of(const Mat<S>& m) {
  Vec<S> v(m.rows() * m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) v[i * m.cols() + j] = m(i, j);
  return v;
}

template <class S>
Mat<S> unvec(const Vec<S>& v, Index rows, Index cols) {
  Mat<S> m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = v[i * cols + j];
  return m;
}

template <class S>
Mat<S> vstack(const std::vector<Mat<S>>& blocks, Index cols) {
  Index rows = 0;
  for (const auto& b : blocks) rows += b.rows();
  Mat<S> out(rows, cols);
  Index at = 0;
  for (const auto& b : blocks) {
    out.block(at, 0, b.rows(), cols) = b;
    at += b.rows();
  }
  return out;
}

template <class S>
Mat<S> hstack(const std::vector<Mat<S>>& blocks, Index rows) {
  Index cols = 0;
  for (const auto& b : blocks) cols += b.cols();
  Mat<S> out(rows, cols);
  Index at = 0;
  for (const auto& b : blocks) {
    out.block(0, at, rows, b.cols()) = b;
    at += b.cols();
  }
  return out;
}

template <class S>
struct Rref {
  Mat<S> mat;
  Index rank = 0;
  std::vector<Index> pivots;  // pivot column per nonzero row
};

/// Unique reduced row echelon form over F_p.
template <class S>
Rref<S> rref(Mat<S> m) {
  const Index rows = m.rows(), cols = m.cols();
  Rref<S> out;
  Index lead = 0;
  for (Index col = 0; col < cols && lead < rows; ++col) {
    Index piv = -1;
    for (Index r = lead; r < rows; ++r)
      if (m(r, col) != S(0)) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != lead) m.row(piv).swap(m.row(lead));
    const S inv = m(lead, col).inverse();
    m.row(lead) *= inv;
    for (Index r = 0; r < rows; ++r) {
      if (r == lead) continue;
      const S f = m(r, col);
      if (f != S(0)) m.row(r) -= m.row(lead) * f;
    }
    out.pivots.push_back(col);
    ++lead;
  }
  out.rank = lead;
  out.mat = std::move(m);
  return out;
}

template <class S>
Index rank_of(const Mat<S>& m) {
  return rref(m).rank;
}

template <class S>
bool is_invertible(const Mat<S>& m) {
  return m.rows() == m.cols() && rank_of(m) == m.rows();
}

template <class S>
Mat<S> inverse_of(const Mat<S>& m) {
  if (m.rows() != m.cols()) throw DimensionError("inverse_of: matrix not square");
  const Index n = m.rows();
  Mat<S> aug(n, 2 * n);
  aug.block(0, 0, n, n) = m;
  aug.block(0, n, n, n) = Mat<S>::Identity(n, n);
  auto r = rref(std::move(aug));
  if (r.rank < n || (r.rank > 0 && r.pivots[n - 1] != n - 1))
    throw DimensionError("inverse_of: matrix singular");
  return r.mat.block(0, n, n, n);
}

/// A subspace of F_p^n held as a canonical RREF row basis, so equality of
/// subspaces is entrywise equality of their representations.
template <class S>
class Subspace {
 public:
  explicit Subspace(Index ambient) : ambient_(ambient), basis_(0, ambient) {}

  static Subspace zero(Index ambient) { return Subspace(ambient); }

  static Subspace full(Index ambient) {
    Subspace s(ambient);
    s.basis_ = Mat<S>::Identity(ambient, ambient);
    for (Index i = 0; i < ambient; ++i) s.pivots_.push_back(i);
    return s;
  }

  /// Canonicalize a spanning set given as matrix rows.
  static Subspace from_rows(const Mat<S>& rows_mat) {
    Subspace s(rows_mat.cols());
    auto r = rref(rows_mat);
    s.basis_ = r.mat.topRows(r.rank);
    s.pivots_ = std::move(r.pivots);
    return s;
  }

  static Subspace from_vectors(const std::vector<Vec<S>>& vs, Index ambient) {
    Mat<S> rows_mat(static_cast<Index>(vs.size()), ambient);
    for (Index i = 0; i < rows_mat.rows(); ++i) {
      if (vs[static_cast<size_t>(i)].size() != ambient)
        throw DimensionError("Subspace::from_vectors: ambient mismatch");
      rows_mat.row(i) = vs[static_cast<size_t>(i)].transpose();
    }
    return from_rows(rows_mat);
  }

  Index ambient() const { return ambient_; }
  Index dim() const { return basis_.rows(); }
  const Mat<S>& basis() const { return basis_; }
  const std::vector<Index>& pivots() const { return pivots_; }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }

  Vec<S> basis_vector(Index i) const { return basis_.row(i).transpose(); }

  /// Remainder of v after eliminating along the basis; zero iff v lies here.
  Vec<S> reduce(Vec<S> v) const {
    if (v.size() != ambient_) throw DimensionError("Subspace::reduce: ambient mismatch");
    for (Index r = 0; r < basis_.rows(); ++r) {
      const S f = v[pivots_[static_cast<size_t>(r)]];
      if (f != S(0)) v -= basis_.row(r).transpose() * f;
    }
    return v;
  }

  bool contains(const Vec<S>& v) const { return is_zero_vec<S>(reduce(v)); }

  bool contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw DimensionError("Subspace::contains: ambient mismatch");
    for (Index r = 0; r < other.basis_.rows(); ++r)
      if (!contains(Vec<S>(other.basis_.row(r).transpose()))) return false;
    return true;
  }

  /// Coordinates of v in the RREF basis (pivot extraction). v must lie here.
  Vec<S> coords(const Vec<S>& v) const {
    if (!contains(v)) throw DimensionError("Subspace::coords: vector outside subspace");
    Vec<S> c(dim());
    for (Index r = 0; r < dim(); ++r) c[r] = v[pivots_[static_cast<size_t>(r)]];
    return c;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.dim() == b.dim() && mat_equal(a.basis_, b.basis_);
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  Index ambient_;
  Mat<S> basis_;
  std::vector<Index> pivots_;
};

template <class S>
Subspace<S> sum(const Subspace<S>& u, const Subspace<S>& v) {
  if (u.ambient() != v.ambient()) throw DimensionError("sum: ambient mismatch");
  Mat<S> stacked(u.dim() + v.dim(), u.ambient());
  stacked.topRows(u.dim()) = u.basis();
  stacked.bottomRows(v.dim()) = v.basis();
  return Subspace<S>::from_rows(stacked);
}

/// Right null space {x : m x = 0}, returned as a row-basis subspace of F^cols.
template <class S>
Subspace<S> kernel(const Mat<S>& m) {
  auto r = rref(m);
  const Index cols = m.cols();
  std::vector<Index> free_cols;
  {
    size_t pi = 0;
    for (Index c = 0; c < cols; ++c) {
      if (pi < r.pivots.size() && r.pivots[pi] == c)
        ++pi;
      else
        free_cols.push_back(c);
    }
  }
  Mat<S> basis(static_cast<Index>(free_cols.size()), cols);
  basis.setZero();
  for (Index k = 0; k < basis.rows(); ++k) {
    const Index f = free_cols[static_cast<size_t>(k)];
    basis(k, f) = S(1);
    for (Index row = 0; row < r.rank; ++row)
      basis(k, r.pivots[static_cast<size_t>(row)]) = -r.mat(row, f);
  }
  return Subspace<S>::from_rows(basis);
}

/// Column space of m, as a row-basis subspace of F^rows.
template <class S>
Subspace<S> image(const Mat<S>& m) {
  Mat<S> t = m.transpose();
  return Subspace<S>::from_rows(t);
}

/// One solution X of m X = b, if the system is consistent.
template <class S>
std::optional<Mat<S>> solve(const Mat<S>& m, const Mat<S>& b) {
  if (m.rows() != b.rows()) throw DimensionError("solve: row count mismatch");
  const Index c = m.cols(), k = b.cols();
  Mat<S> aug(m.rows(), c + k);
  aug.block(0, 0, m.rows(), c) = m;
  aug.block(0, c, m.rows(), k) = b;
  auto r = rref(std::move(aug));
  Mat<S> x(c, k);
  x.setZero();
  for (Index row = 0; row < r.rank; ++row) {
    const Index p = r.pivots[static_cast<size_t>(row)];
    if (p >= c) return std::nullopt;  // pivot in the augmented block: inconsistent
    x.row(p) = r.mat.block(row, c, 1, k);
  }
  return x;
}

/// Intersection via the kernel of the stacked coefficient system.
template <class S>
Subspace<S> intersect(const Subspace<S>& u, const Subspace<S>& v) {
  if (u.ambient() != v.ambient()) throw DimensionError("intersect: ambient mismatch");
  if (u.is_zero() || v.is_zero()) return Subspace<S>::zero(u.ambient());
  // Solve alpha^T U + beta^T V = 0; then alpha^T U spans the intersection.
  Mat<S> stacked(u.ambient(), u.dim() + v.dim());
  stacked.block(0, 0, u.ambient(), u.dim()) = u.basis().transpose();
  stacked.block(0, u.dim(), u.ambient(), v.dim()) = v.basis().transpose();
  Subspace<S> ker = kernel(stacked);
  Mat<S> rows_mat(ker.dim(), u.ambient());
  for (Index i = 0; i < ker.dim(); ++i) {
    Vec<S> z = ker.basis_vector(i);
    Vec<S> w = Vec<S>::Zero(u.ambient());
    for (Index j = 0; j < u.dim(); ++j) w += u.basis().row(j).transpose() * z[j];
    rows_mat.row(i) = w.transpose();
  }
  return Subspace<S>::from_rows(rows_mat);
}

/// Annihilator {w : B w = 0} of the row space (as row vectors).
template <class S>
Subspace<S> perp(const Subspace<S>& u) {
  return kernel(Mat<S>(u.basis()));
}

/// Linear projection/section pair for the quotient F^n / U: `proj` maps a
/// vector to its coset coordinates on the RREF-complement basis, `section`
/// embeds coset representatives back.
template <class S>
struct QuotientMaps {
  Mat<S> proj;     // (n - dim U) x n
  Mat<S> section;  // n x (n - dim U)
  std::vector<Index> free_cols;
};

template <class S>
QuotientMaps<S> quotient_maps(const Subspace<S>& u) {
  const Index n = u.ambient();
  std::vector<Index> free_cols;
  {
    size_t pi = 0;
    for (Index c = 0; c < n; ++c) {
      if (pi < u.pivots().size() && u.pivots()[pi] == c)
        ++pi;
      else
        free_cols.push_back(c);
    }
  }
  const Index q = static_cast<Index>(free_cols.size());
  QuotientMaps<S> maps;
  maps.proj = Mat<S>::Zero(q, n);
  maps.section = Mat<S>::Zero(n, q);
  for (Index t = 0; t < q; ++t) {
    const Index f = free_cols[static_cast<size_t>(t)];
    maps.proj(t, f) = S(1);
    maps.section(f, t) = S(1);
    for (Index r = 0; r < u.dim(); ++r)
      maps.proj(t, u.pivots()[static_cast<size_t>(r)]) = -u.basis()(r, f);
  }
  maps.free_cols = std::move(free_cols);
  return maps;
}

template <class S>
Mat<S> random_mat(Rng& rng, Index rows, Index cols) {
  Mat<S> m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j)
      m(i, j) = S(static_cast<unsigned>(rng.below(S::modulus)));
  return m;
}

}  // namespace tautilt
