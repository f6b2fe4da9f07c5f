#ifndef SIGNRANK_SIGN_PATTERN_HPP
#define SIGNRANK_SIGN_PATTERN_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "signrank/matrix.hpp"

namespace signrank {

enum class Sign : signed char { Minus = -1, Zero = 0, Plus = 1 };

char to_char(Sign s);
Sign sign_from_int(int s);

/// An m x n grid over {+, -, 0}.
class SignPattern {
 public:
  SignPattern() = default;
  SignPattern(std::size_t rows, std::size_t cols, Sign fill = Sign::Zero);

  /// Each string is one row over the alphabet "+-0". Throws ParseError on
  /// ragged rows or foreign characters.
  static SignPattern parse(const std::vector<std::string>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Sign operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Sign& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  SignPattern transpose() const;
  bool is_symmetric() const;
  std::size_t count(Sign s) const;
  std::vector<std::string> to_strings() const;

  friend bool operator==(const SignPattern&, const SignPattern&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Sign> entries_;
};

/// Entrywise exact sign. Polynomial matrices throw PolynomialSignUndefined.
SignPattern sgn(const ExactMatrix& m);
SignPattern sgn(const PolyMatrix& m);

/// The matrix with entries +1, -1, 0 following the pattern, over `ctx`.
ExactMatrix unit_realization(const SignPattern& p, const FieldContext& ctx = FieldContext::rationals());

}  // namespace signrank

#endif  // SIGNRANK_SIGN_PATTERN_HPP
