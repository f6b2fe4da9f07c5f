#ifndef SIGNRANK_MATRIX_HPP
#define SIGNRANK_MATRIX_HPP

#include <cstddef>
#include <type_traits>
#include <string>
#include <vector>

#include "signrank/errors.hpp"
#include "signrank/field.hpp"
#include "signrank/polynomial.hpp"

namespace signrank {

namespace detail {

inline Scalar zero_in(const FieldContext& ctx, const Scalar*) { return Scalar::zero(ctx); }
inline Polynomial zero_in(const FieldContext& ctx, const Polynomial*) { return Polynomial(ctx.scalar_field()); }
inline Scalar one_in(const FieldContext& ctx, const Scalar*) { return Scalar::one(ctx); }
inline Polynomial one_in(const FieldContext& ctx, const Polynomial*) {
  return Polynomial::constant(Scalar::one(ctx.scalar_field()), ctx.scalar_field());
}
inline FieldContext context_of(const Scalar& x) { return x.field(); }
inline FieldContext context_of(const Polynomial& p) { return p.context(); }

}  // namespace detail

/// Dense row-major matrix over one FieldContext. Entries are Scalar (Q or
/// Q(sqrt d)) or Polynomial (context PolyOver(base)).
template <class T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const FieldContext& ctx)
      : rows_(rows), cols_(cols), ctx_(ctx), data_(rows * cols, zero_element(ctx)) {}

  /// Rows must be nonempty and rectangular; entries must share one context.
  static Matrix from_rows(const std::vector<std::vector<T>>& rows, const FieldContext& ctx) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    Matrix m(r, c, ctx);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw DimensionMismatch("ragged rows");
      for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
  }

  static Matrix identity(std::size_t n, const FieldContext& ctx) {
    Matrix m(n, n, ctx);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one_element(ctx);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const FieldContext& context() const noexcept { return ctx_; }

  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw OutOfRange("matrix index out of range");
    return (*this)(i, j);
  }

  /// Checked assignment: the entry must belong to this matrix's context.
  void set(std::size_t i, std::size_t j, const T& value) {
    if (i >= rows_ || j >= cols_) throw OutOfRange("matrix index out of range");
    if (!(detail::context_of(value) == ctx_)) {
      if constexpr (std::is_same_v<T, Scalar>) {
        (*this)(i, j) = Scalar::embed(value, ctx_);
        return;
      } else {
        throw ContextMismatch("entry context " + detail::context_of(value).name() + " in a " +
                              ctx_.name() + " matrix");
      }
    }
    (*this)(i, j) = value;
  }

  const std::vector<T>& data() const noexcept { return data_; }

  Matrix transpose() const {
    Matrix t(cols_, rows_, ctx_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix submatrix(const std::vector<std::size_t>& row_idx, const std::vector<std::size_t>& col_idx) const {
    Matrix s(row_idx.size(), col_idx.size(), ctx_);
    for (std::size_t i = 0; i < row_idx.size(); ++i)
      for (std::size_t j = 0; j < col_idx.size(); ++j) s(i, j) = at(row_idx[i], col_idx[j]);
    return s;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("product of incompatible shapes");
    if (!(a.ctx_ == b.ctx_)) throw ContextMismatch("product across contexts");
    Matrix p(a.rows_, b.cols_, a.ctx_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
      }
    return p;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("sum of incompatible shapes");
    if (!(a.ctx_ == b.ctx_)) throw ContextMismatch("sum across contexts");
    Matrix s = a;
    for (std::size_t k = 0; k < s.data_.size(); ++k) s.data_[k] += b.data_[k];
    return s;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.ctx_ == b.ctx_ && a.data_ == b.data_;
  }

  static T zero_element(const FieldContext& ctx) { return detail::zero_in(ctx, static_cast<const T*>(nullptr)); }
  static T one_element(const FieldContext& ctx) { return detail::one_in(ctx, static_cast<const T*>(nullptr)); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  FieldContext ctx_;
  std::vector<T> data_;
};

using ExactMatrix = Matrix<Scalar>;
using PolyMatrix = Matrix<Polynomial>;

}  // namespace signrank

#endif  // SIGNRANK_MATRIX_HPP
