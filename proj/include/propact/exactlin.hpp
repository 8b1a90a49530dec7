#pragma once

// Exact linear algebra over a field scalar (in practice propact::Rational).
// Nothing here compares against a tolerance: every test is an exact
// equality, so the scalar must be an exact field type.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "propact/errors.hpp"
#include "propact/rational.hpp"

namespace propact {

template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using RatVec = Vec<Rational>;
using RatMat = Mat<Rational>;
using Index = Eigen::Index;

/// Lexicographic three-way comparison on coefficients; shorter sorts first.
template <typename DerivedA, typename DerivedB>
std::strong_ordering lex_compare(const Eigen::DenseBase<DerivedA>& a,
                                 const Eigen::DenseBase<DerivedB>& b) {
  if (a.rows() != b.rows()) return a.rows() <=> b.rows();
  if (a.cols() != b.cols()) return a.cols() <=> b.cols();
  for (Index j = 0; j < a.cols(); ++j) {
    for (Index i = 0; i < a.rows(); ++i) {
      if (a(i, j) < b(i, j)) return std::strong_ordering::less;
      if (b(i, j) < a(i, j)) return std::strong_ordering::greater;
    }
  }
  return std::strong_ordering::equal;
}

struct LexLess {
  template <typename DerivedA, typename DerivedB>
  bool operator()(const Eigen::DenseBase<DerivedA>& a, const Eigen::DenseBase<DerivedB>& b) const {
    return lex_compare(a, b) < 0;
  }
};

template <typename Derived>
bool is_zero(const Eigen::DenseBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (m(i, j) != Scalar(0)) return false;
  return true;
}

/// Builds a column vector from an initializer list of integers, the way
/// root coordinates are usually written down.
template <typename Scalar = Rational>
Vec<Scalar> vec(std::initializer_list<long> coords) {
  Vec<Scalar> v(static_cast<Index>(coords.size()));
  Index i = 0;
  for (long c : coords) v(i++) = Scalar(c);
  return v;
}

template <typename Scalar>
struct EchelonForm {
  Mat<Scalar> rows;            // nonzero rows only, pivots normalized to 1
  std::vector<Index> pivots;   // strictly increasing pivot columns
};

/// Gauss-Jordan elimination to reduced row echelon form.
template <typename Derived>
EchelonForm<typename Derived::Scalar> reduced_row_echelon(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  Mat<Scalar> m = input;
  std::vector<Index> pivots;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index pivot_row = row;
    while (pivot_row < m.rows() && m(pivot_row, col) == Scalar(0)) ++pivot_row;
    if (pivot_row == m.rows()) continue;
    if (pivot_row != row) m.row(pivot_row).swap(m.row(row));
    const Scalar inv = Scalar(1) / m(row, col);
    for (Index j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (Index i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == Scalar(0)) continue;
      const Scalar factor = m(i, col);
      for (Index j = col; j < m.cols(); ++j) m(i, j) -= factor * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {m.topRows(row), std::move(pivots)};
}

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  return static_cast<Index>(reduced_row_echelon(m).pivots.size());
}

/// Rows of the result form a basis of {x : m x = 0}.
template <typename Derived>
Mat<typename Derived::Scalar> kernel(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const auto ech = reduced_row_echelon(m);
  const Index n = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Index p : ech.pivots) is_pivot[static_cast<std::size_t>(p)] = true;

  Mat<Scalar> out(n - static_cast<Index>(ech.pivots.size()), n);
  Index k = 0;
  for (Index free = 0; free < n; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    out.row(k).setZero();
    out(k, free) = Scalar(1);
    for (std::size_t r = 0; r < ech.pivots.size(); ++r)
      out(k, ech.pivots[r]) = -ech.rows(static_cast<Index>(r), free);
    ++k;
  }
  return out;
}

/// Some x with a x = b, or nullopt when the system is inconsistent.
template <typename DerivedA, typename DerivedB>
std::optional<Vec<typename DerivedA::Scalar>> solve(const Eigen::MatrixBase<DerivedA>& a,
                                                    const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  if (a.rows() != b.rows()) throw DimensionMismatch("solve: row count mismatch");
  Mat<Scalar> aug(a.rows(), a.cols() + 1);
  aug << a, b;
  const auto ech = reduced_row_echelon(aug);
  if (!ech.pivots.empty() && ech.pivots.back() == a.cols()) return std::nullopt;
  Vec<Scalar> x = Vec<Scalar>::Zero(a.cols());
  for (std::size_t r = 0; r < ech.pivots.size(); ++r)
    x(ech.pivots[r]) = ech.rows(static_cast<Index>(r), a.cols());
  return x;
}

/// A linear subspace of Scalar^n held in canonical form: the basis is the
/// reduced row echelon form of any spanning set, so equal subspaces have
/// identical basis matrices.
template <typename Scalar>
class BasicSubspace {
 public:
  using Vector = Vec<Scalar>;
  using Matrix = Mat<Scalar>;

  BasicSubspace() : BasicSubspace(0) {}
  explicit BasicSubspace(Index ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

  static BasicSubspace zero(Index ambient_dim) { return BasicSubspace(ambient_dim); }
  static BasicSubspace full(Index ambient_dim) {
    return from_rows(Matrix::Identity(ambient_dim, ambient_dim));
  }

  /// Span of the rows of m.
  template <typename Derived>
  static BasicSubspace from_rows(const Eigen::MatrixBase<Derived>& m) {
    BasicSubspace s(m.cols());
    auto ech = reduced_row_echelon(m);
    s.basis_ = std::move(ech.rows);
    s.pivots_ = std::move(ech.pivots);
    return s;
  }

  Index ambient_dim() const { return ambient_; }
  Index dim() const { return basis_.rows(); }
  bool is_zero() const { return basis_.rows() == 0; }
  const Matrix& basis() const { return basis_; }
  const std::vector<Index>& pivots() const { return pivots_; }
  Vector basis_vector(Index i) const { return basis_.row(i).transpose(); }

  /// Remainder of v after elimination against the echelon basis; zero iff v
  /// lies in the subspace.
  template <typename Derived>
  Vector reduce(const Eigen::MatrixBase<Derived>& v) const {
    if (v.size() != ambient_) throw DimensionMismatch("reduce: vector has wrong length");
    Vector r = v;
    for (Index i = 0; i < basis_.rows(); ++i) {
      const Scalar c = r(pivots_[static_cast<std::size_t>(i)]);
      if (c != Scalar(0)) r -= c * basis_.row(i).transpose();
    }
    return r;
  }

  template <typename Derived>
  bool contains(const Eigen::MatrixBase<Derived>& v) const {
    return propact::is_zero(reduce(v));
  }

  friend bool operator==(const BasicSubspace& a, const BasicSubspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_.rows() == b.basis_.rows() &&
           lex_compare(a.basis_, b.basis_) == 0;
  }
  /// Total order (dimension first, then basis entries) for use as a set key.
  friend std::strong_ordering operator<=>(const BasicSubspace& a, const BasicSubspace& b) {
    if (auto c = a.ambient_ <=> b.ambient_; c != 0) return c;
    if (auto c = a.basis_.rows() <=> b.basis_.rows(); c != 0) return c;
    return lex_compare(a.basis_, b.basis_);
  }

 private:
  Index ambient_;
  Matrix basis_;
  std::vector<Index> pivots_;
};

using Subspace = BasicSubspace<Rational>;

namespace detail {
template <typename Scalar>
void require_same_ambient(const BasicSubspace<Scalar>& u, const BasicSubspace<Scalar>& v,
                          const char* what) {
  if (u.ambient_dim() != v.ambient_dim())
    throw DimensionMismatch(std::string(what) + ": ambient dimensions " +
                            std::to_string(u.ambient_dim()) + " and " +
                            std::to_string(v.ambient_dim()) + " differ");
}
}  // namespace detail

template <typename Scalar>
BasicSubspace<Scalar> subspace_from_spanning(std::span<const Vec<Scalar>> vectors, Index ambient_dim) {
  Mat<Scalar> m(static_cast<Index>(vectors.size()), ambient_dim);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != ambient_dim)
      throw DimensionMismatch("subspace_from_spanning: vector " + std::to_string(i) + " has length " +
                              std::to_string(vectors[i].size()) + ", expected " +
                              std::to_string(ambient_dim));
    m.row(static_cast<Index>(i)) = vectors[i].transpose();
  }
  return BasicSubspace<Scalar>::from_rows(m);
}

/// Ambient dimension taken from the first vector; an empty list needs the
/// overload with an explicit dimension.
template <typename Scalar>
BasicSubspace<Scalar> subspace_from_spanning(std::span<const Vec<Scalar>> vectors) {
  if (vectors.empty()) throw DimensionMismatch("subspace_from_spanning: empty list has no ambient dimension");
  return subspace_from_spanning(vectors, vectors.front().size());
}

inline Subspace span(std::initializer_list<RatVec> vectors) {
  std::vector<RatVec> v(vectors);
  return subspace_from_spanning(std::span<const RatVec>(v));
}

template <typename Scalar>
bool subspace_contains(const BasicSubspace<Scalar>& outer, const BasicSubspace<Scalar>& inner) {
  detail::require_same_ambient(outer, inner, "subspace_contains");
  for (Index i = 0; i < inner.dim(); ++i)
    if (!outer.contains(inner.basis_vector(i))) return false;
  return true;
}

template <typename Scalar>
BasicSubspace<Scalar> subspace_sum(const BasicSubspace<Scalar>& u, const BasicSubspace<Scalar>& v) {
  detail::require_same_ambient(u, v, "subspace_sum");
  Mat<Scalar> m(u.dim() + v.dim(), u.ambient_dim());
  m << u.basis(), v.basis();
  return BasicSubspace<Scalar>::from_rows(m);
}

/// Orthogonal complement for the standard dot product.
template <typename Scalar>
BasicSubspace<Scalar> orthogonal_complement(const BasicSubspace<Scalar>& u) {
  if (u.is_zero()) return BasicSubspace<Scalar>::full(u.ambient_dim());
  return BasicSubspace<Scalar>::from_rows(kernel(u.basis()));
}

template <typename Scalar>
BasicSubspace<Scalar> subspace_intersection(const BasicSubspace<Scalar>& u, const BasicSubspace<Scalar>& v) {
  detail::require_same_ambient(u, v, "subspace_intersection");
  // (u ∩ v)⊥ = u⊥ + v⊥, exact because the dot product is nondegenerate over Q.
  return orthogonal_complement(subspace_sum(orthogonal_complement(u), orthogonal_complement(v)));
}

/// Image of u under the linear map x -> m x.
template <typename Scalar, typename Derived>
BasicSubspace<Scalar> image(const Eigen::MatrixBase<Derived>& m, const BasicSubspace<Scalar>& u) {
  if (m.cols() != u.ambient_dim()) throw DimensionMismatch("image: matrix does not act on the subspace");
  Mat<Scalar> rows = u.basis() * m.transpose();
  return BasicSubspace<Scalar>::from_rows(rows);
}

/// Raised by covering_member when no part contains the subspace. The
/// certificate is a vector of the subspace that lies in none of the parts,
/// which shows the subspace was never covered by their union.
template <typename Scalar>
class NotCoveredError : public Error {
 public:
  explicit NotCoveredError(Vec<Scalar> certificate)
      : Error("subspace is not contained in any part; certificate vector escapes the union"),
        certificate_(std::move(certificate)) {}
  const Vec<Scalar>& certificate() const { return certificate_; }

 private:
  Vec<Scalar> certificate_;
};

using NotCovered = NotCoveredError<Rational>;

/// Finds a vector of b outside every part, or nullopt if b is covered by the
/// union. When no part contains b, each part meets b in a proper subspace,
/// and the moment-curve points sum_i t^i b_i hit a proper subspace for at
/// most dim(b) - 1 values of t, so scanning t = 0..parts*(dim b - 1) is
/// enough.
template <typename Scalar>
std::optional<Vec<Scalar>> uncovered_vector(const BasicSubspace<Scalar>& b,
                                            std::span<const BasicSubspace<Scalar>> parts) {
  const auto escapes = [&](const Vec<Scalar>& x) {
    return std::none_of(parts.begin(), parts.end(), [&](const auto& p) { return p.contains(x); });
  };
  if (b.is_zero()) {
    Vec<Scalar> zero = Vec<Scalar>::Zero(b.ambient_dim());
    return escapes(zero) ? std::optional(zero) : std::nullopt;
  }
  const auto steps = static_cast<long>(parts.size()) * static_cast<long>(b.dim() - 1);
  for (long t = 0; t <= steps; ++t) {
    Vec<Scalar> x = Vec<Scalar>::Zero(b.ambient_dim());
    Scalar power(1);
    for (Index i = 0; i < b.dim(); ++i) {
      x += power * b.basis_vector(i);
      power *= Scalar(t);
    }
    if (escapes(x)) return x;
  }
  return std::nullopt;
}

/// Least index j with b ⊆ parts[j]. Throws NotCoveredError (carrying an
/// escaping vector of b) when there is none: a union of finitely many
/// subspaces covers b only if one of them contains b.
template <typename Scalar>
std::size_t covering_member(const BasicSubspace<Scalar>& b, std::span<const BasicSubspace<Scalar>> parts) {
  for (const auto& p : parts) detail::require_same_ambient(p, b, "covering_member");
  for (std::size_t j = 0; j < parts.size(); ++j) {
    if (subspace_contains(parts[j], b)) return j;
  }
  auto certificate = uncovered_vector(b, parts);
  if (!certificate) throw ConsistencyViolation("covering_member: union covers b but no part contains it");
  throw NotCoveredError<Scalar>(std::move(*certificate));
}

// ---- formatting -----------------------------------------------------------

inline std::string format_vector(const RatVec& v) {
  std::string s = "(";
  for (Index i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += to_string(v(i));
  }
  return s + ")";
}

inline RatVec row_vector(const RatMat& m, Index i) { return m.row(i).transpose(); }

inline Rational dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot: length mismatch");
  Rational s(0);
  for (Index i = 0; i < a.size(); ++i) s += a(i) * b(i);
  return s;
}

}  // namespace propact
