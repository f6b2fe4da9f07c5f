#ifndef SIGNRANK_LINALG_HPP
#define SIGNRANK_LINALG_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "signrank/matrix.hpp"

namespace signrank {

namespace detail {

inline Scalar exact_quotient(const Scalar& a, const Scalar& b) { return a / b; }
inline Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) { return a.exact_div(b); }

// Rescales rational rows to integer entries so Bareiss intermediates stay
// integral. Row scaling by nonzero constants leaves rank and the zero/nonzero
// status of the determinant unchanged.
inline void clear_row_denominators(Matrix<Scalar>& m) {
  if (m.context().d() != 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).a().get_den_mpz_t());
    }
    if (l == 1) continue;
    Scalar factor{Rational(l)};
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) *= factor;
  }
}
inline void clear_row_denominators(Matrix<Polynomial>&) {}

// Fraction-free elimination with full pivoting. Returns the rank; on return
// the leading rank x rank block of `m` is upper triangular.
template <class T>
std::size_t bareiss_eliminate(Matrix<T>& m, int* swap_parity = nullptr) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  T prev = Matrix<T>::one_element(m.context());
  std::size_t rank = 0;
  int parity = 1;
  for (std::size_t k = 0; k < rows && k < cols; ++k) {
    std::optional<std::pair<std::size_t, std::size_t>> pivot;
    for (std::size_t i = k; i < rows && !pivot; ++i)
      for (std::size_t j = k; j < cols; ++j)
        if (!m(i, j).is_zero()) {
          pivot.emplace(i, j);
          break;
        }
    if (!pivot) break;
    auto [pi, pj] = *pivot;
    if (pi != k) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(pi, j), m(k, j));
      parity = -parity;
    }
    if (pj != k) {
      for (std::size_t i = 0; i < rows; ++i) std::swap(m(i, pj), m(i, k));
      parity = -parity;
    }
    for (std::size_t i = k + 1; i < rows; ++i) {
      for (std::size_t j = k + 1; j < cols; ++j) {
        T v = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        m(i, j) = exact_quotient(v, prev);
      }
      m(i, k) = Matrix<T>::zero_element(m.context());
    }
    prev = m(k, k);
    ++rank;
  }
  if (swap_parity != nullptr) *swap_parity = parity;
  return rank;
}

}  // namespace detail

/// Exact rank. Over PolyOver contexts this is the rank over the fraction
/// field base(alpha).
template <class T>
std::size_t rank(const Matrix<T>& m) {
  Matrix<T> work = m;
  detail::clear_row_denominators(work);
  return detail::bareiss_eliminate(work);
}

/// Exact determinant of a square matrix (Bareiss; the last pivot is det).
template <class T>
T determinant(const Matrix<T>& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  if (m.rows() == 0) return Matrix<T>::one_element(m.context());
  Matrix<T> work = m;
  int parity = 1;
  std::size_t r = detail::bareiss_eliminate(work, &parity);
  if (r < m.rows()) return Matrix<T>::zero_element(m.context());
  T det = work(r - 1, r - 1);
  if (parity < 0) det = -det;
  return det;
}

/// All k-subsets of {0..n-1} in lexicographic order, handed to `visit`.
/// Stops early when visit returns false.
template <class Visit>
bool for_each_combination(std::size_t n, std::size_t k, Visit&& visit) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return true;
  while (true) {
    if (!visit(idx)) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// True iff every k x k minor is zero. Enumerates minors directly; throws
/// OutOfRange unless 1 <= k <= min(rows, cols).
template <class T>
bool all_minors_vanish(const Matrix<T>& m, std::size_t k) {
  if (k == 0 || k > m.rows() || k > m.cols()) {
    throw OutOfRange("minor size " + std::to_string(k) + " out of range for " + std::to_string(m.rows()) +
                     "x" + std::to_string(m.cols()));
  }
  bool all_zero = true;
  for_each_combination(m.rows(), k, [&](const std::vector<std::size_t>& rs) {
    return for_each_combination(m.cols(), k, [&](const std::vector<std::size_t>& cs) {
      if (!determinant(m.submatrix(rs, cs)).is_zero()) {
        all_zero = false;
        return false;
      }
      return true;
    });
  });
  return all_zero;
}

/// One cell of a 2x2 block layout: a dense matrix, or a Zero/Identity fill
/// whose size is taken from the neighbouring blocks (Identity carries its own).
class Block {
 public:
  enum class Kind { Dense, Zero, Identity };

  Block(ExactMatrix m) : kind_(Kind::Dense), dense_(std::move(m)) {}  // NOLINT: implicit by intent
  static Block zero() { return Block(Kind::Zero, 0); }
  static Block identity(std::size_t n) { return Block(Kind::Identity, n); }

  Kind kind() const noexcept { return kind_; }
  const ExactMatrix& dense() const { return dense_; }
  std::size_t identity_size() const noexcept { return size_; }

 private:
  Block(Kind kind, std::size_t size) : kind_(kind), size_(size) {}

  Kind kind_;
  std::size_t size_ = 0;
  ExactMatrix dense_;
};

using BlockGrid = std::array<std::array<Block, 2>, 2>;

/// Assembles [[b00, b01], [b10, b11]]. Throws DimensionMismatch when block
/// sizes disagree or cannot be inferred.
ExactMatrix block_assemble(const BlockGrid& grid, const FieldContext& ctx);

}  // namespace signrank

#endif  // SIGNRANK_LINALG_HPP
