#ifndef AXIAL_LINALG_HPP
#define AXIAL_LINALG_HPP

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "axial/scalar.hpp"

namespace Eigen {
template <>
struct NumTraits<axial::Scalar> : GenericNumTraits<axial::Scalar> {
  typedef axial::Scalar Real;
  typedef axial::Scalar NonInteger;
  typedef axial::Scalar Nested;
  typedef axial::Scalar Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 8
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen

namespace axial {

using Index = Eigen::Index;

template <class T>
using MatrixX = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
template <class T>
using VectorX = Eigen::Matrix<T, Eigen::Dynamic, 1>;

using Mat = MatrixX<Scalar>;
using Vec = VectorX<Scalar>;

template <class T>
struct Rref {
  MatrixX<T> rows;             // nonzero rows only
  std::vector<Index> pivots;   // pivot column of each row
  Index rank() const { return static_cast<Index>(pivots.size()); }
};

// Reduced row echelon form by exact Gauss-Jordan elimination.
template <class T>
Rref<T> rref(MatrixX<T> m) {
  Rref<T> out;
  const Index R = m.rows(), C = m.cols();
  Index r = 0;
  for (Index c = 0; c < C && r < R; ++c) {
    Index p = r;
    while (p < R && is_zero(m(p, c))) ++p;
    if (p == R) continue;
    if (p != r) m.row(p).swap(m.row(r));
    T inv = inverse(m(r, c));
    for (Index k = c; k < C; ++k)
      if (!is_zero(m(r, k))) m(r, k) *= inv;
    for (Index i = 0; i < R; ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      T f = m(i, c);
      for (Index k = c; k < C; ++k)
        if (!is_zero(m(r, k))) m(i, k) -= f * m(r, k);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rows = m.topRows(r);
  return out;
}

template <class T>
Index rank(const MatrixX<T>& m) {
  return rref(m).rank();
}

// Rows of the result form a basis of {x : m x = 0}.
template <class T>
MatrixX<T> kernel(const MatrixX<T>& m) {
  const Index C = m.cols();
  Rref<T> e = rref(m);
  std::vector<bool> is_pivot(C, false);
  for (Index c : e.pivots) is_pivot[c] = true;
  std::vector<Index> free;
  for (Index c = 0; c < C; ++c)
    if (!is_pivot[c]) free.push_back(c);
  MatrixX<T> basis(static_cast<Index>(free.size()), C);
  basis.setZero();
  for (Index f = 0; f < static_cast<Index>(free.size()); ++f) {
    basis(f, free[f]) = T(1);
    for (Index i = 0; i < e.rank(); ++i) basis(f, e.pivots[i]) = -e.rows(i, free[f]);
  }
  return basis;
}

// A linear subspace of T^n, stored as the RREF of a spanning set.
template <class T>
class Subspace {
 public:
  explicit Subspace(Index ambient = 0) : n_(ambient), basis_(0, ambient) {}

  static Subspace span_rows(const MatrixX<T>& rows) {
    Subspace s(rows.cols());
    Rref<T> e = rref(rows);
    s.basis_ = e.rows;
    s.pivots_ = e.pivots;
    return s;
  }
  static Subspace span(Index ambient, const std::vector<VectorX<T>>& vs) {
    MatrixX<T> m(static_cast<Index>(vs.size()), ambient);
    for (Index i = 0; i < static_cast<Index>(vs.size()); ++i) m.row(i) = vs[i].transpose();
    return span_rows(m);
  }
  static Subspace whole(Index ambient) {
    MatrixX<T> id = MatrixX<T>::Identity(ambient, ambient);
    return span_rows(id);
  }
  static Subspace kernel_of(const MatrixX<T>& m) { return span_rows(axial::kernel(m)); }

  Index ambient() const { return n_; }
  Index dim() const { return static_cast<Index>(pivots_.size()); }
  const MatrixX<T>& basis() const { return basis_; }
  const std::vector<Index>& pivots() const { return pivots_; }
  VectorX<T> vector(Index i) const { return basis_.row(i).transpose(); }
  std::vector<VectorX<T>> vectors() const {
    std::vector<VectorX<T>> out;
    for (Index i = 0; i < dim(); ++i) out.push_back(vector(i));
    return out;
  }

  // v minus its projection along the pivot columns; zero iff v is inside.
  VectorX<T> reduce(VectorX<T> v) const {
    for (Index i = 0; i < dim(); ++i) {
      T c = v(pivots_[i]);
      if (is_zero(c)) continue;
      for (Index k = pivots_[i]; k < n_; ++k)
        if (!is_zero(basis_(i, k))) v(k) -= c * basis_(i, k);
    }
    return v;
  }
  bool contains(const VectorX<T>& v) const {
    VectorX<T> r = reduce(v);
    for (Index k = 0; k < n_; ++k)
      if (!is_zero(r(k))) return false;
    return true;
  }
  bool contains(const Subspace& o) const {
    for (Index i = 0; i < o.dim(); ++i)
      if (!contains(o.vector(i))) return false;
    return true;
  }
  // Coordinates with respect to basis(); requires contains(v).
  std::optional<VectorX<T>> coordinates(const VectorX<T>& v) const {
    if (!contains(v)) return std::nullopt;
    VectorX<T> c(dim());
    for (Index i = 0; i < dim(); ++i) c(i) = v(pivots_[i]);
    return c;
  }

  // Inserts v, keeping the basis in RREF. Returns false if v was already inside.
  bool insert(const VectorX<T>& v) {
    VectorX<T> r = reduce(v);
    Index lead = 0;
    while (lead < n_ && is_zero(r(lead))) ++lead;
    if (lead == n_) return false;
    T inv = inverse(r(lead));
    for (Index k = lead; k < n_; ++k)
      if (!is_zero(r(k))) r(k) *= inv;
    for (Index i = 0; i < dim(); ++i) {
      T c = basis_(i, lead);
      if (is_zero(c)) continue;
      for (Index k = lead; k < n_; ++k)
        if (!is_zero(r(k))) basis_(i, k) -= c * r(k);
    }
    Index pos = 0;
    while (pos < dim() && pivots_[pos] < lead) ++pos;
    MatrixX<T> nb(dim() + 1, n_);
    for (Index i = 0; i < pos; ++i) nb.row(i) = basis_.row(i);
    nb.row(pos) = r.transpose();
    for (Index i = pos; i < dim(); ++i) nb.row(i + 1) = basis_.row(i);
    basis_ = nb;
    pivots_.insert(pivots_.begin() + pos, lead);
    return true;
  }

  Subspace operator+(const Subspace& o) const {
    Subspace s = *this;
    for (Index i = 0; i < o.dim(); ++i) s.insert(o.vector(i));
    return s;
  }

  // Rows c with c.x = 0 for every x in the subspace, spanning the annihilator.
  MatrixX<T> annihilator() const {
    if (dim() == 0) return MatrixX<T>::Identity(n_, n_);
    return axial::kernel(basis_);
  }

  Subspace intersect(const Subspace& o) const {
    MatrixX<T> a = annihilator(), b = o.annihilator();
    MatrixX<T> stacked(a.rows() + b.rows(), n_);
    stacked << a, b;
    return kernel_of(stacked);
  }

  friend bool operator==(const Subspace& x, const Subspace& y) {
    return x.n_ == y.n_ && x.pivots_ == y.pivots_ && x.basis_ == y.basis_;
  }
  friend bool operator!=(const Subspace& x, const Subspace& y) { return !(x == y); }

 private:
  Index n_;
  MatrixX<T> basis_;
  std::vector<Index> pivots_;
};

template <class T>
Subspace<T> eigenspace(const MatrixX<T>& m, const T& lambda) {
  MatrixX<T> shifted = m;
  for (Index i = 0; i < m.rows(); ++i) shifted(i, i) -= lambda;
  return Subspace<T>::kernel_of(shifted);
}

template <class T>
bool is_zero_vector(const VectorX<T>& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (!is_zero(v(i))) return false;
  return true;
}

// One solution of m x = b, or nothing if the system is inconsistent.
template <class T>
std::optional<VectorX<T>> solve(const MatrixX<T>& m, const VectorX<T>& b) {
  const Index C = m.cols();
  MatrixX<T> aug(m.rows(), C + 1);
  aug << m, b;
  Rref<T> e = rref(aug);
  VectorX<T> x = VectorX<T>::Zero(C);
  for (Index i = 0; i < e.rank(); ++i) {
    if (e.pivots[i] == C) return std::nullopt;
    x(e.pivots[i]) = e.rows(i, C);
  }
  return x;
}

template <class T>
std::optional<MatrixX<T>> inverse_matrix(const MatrixX<T>& m) {
  const Index n = m.rows();
  if (m.cols() != n) return std::nullopt;
  MatrixX<T> aug(n, 2 * n);
  aug << m, MatrixX<T>::Identity(n, n);
  Rref<T> e = rref(aug);
  if (e.rank() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  return MatrixX<T>(e.rows.rightCols(n));
}

// Binds every entry of an Eigen object to field f.
template <class Derived>
void bind_to(Eigen::MatrixBase<Derived>& m, const FieldSpec& f) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) m(i, j) = m(i, j).in(f);
}

inline Vec zero_vector(const FieldSpec& f, Index n) { return Vec::Constant(n, Scalar::zero(f)); }
inline Vec unit_vector(const FieldSpec& f, Index n, Index i) {
  Vec v = zero_vector(f, n);
  v(i) = Scalar::one(f);
  return v;
}

// Canonical text of a vector; used as a lookup key.
std::string vector_key(const Vec& v);

}  // namespace axial

#endif
