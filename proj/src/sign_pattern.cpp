#include "signrank/sign_pattern.hpp"

#include "signrank/errors.hpp"

namespace signrank {

char to_char(Sign s) {
  switch (s) {
    case Sign::Plus:
      return '+';
    case Sign::Minus:
      return '-';
    case Sign::Zero:
      break;
  }
  return '0';
}

Sign sign_from_int(int s) { return s > 0 ? Sign::Plus : (s < 0 ? Sign::Minus : Sign::Zero); }

SignPattern::SignPattern(std::size_t rows, std::size_t cols, Sign fill)
    : rows_(rows), cols_(cols), entries_(rows * cols, fill) {}

SignPattern SignPattern::parse(const std::vector<std::string>& rows) {
  if (rows.empty()) throw ParseError("sign pattern needs at least one row");
  SignPattern p(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != p.cols_) throw ParseError("ragged sign pattern rows");
    for (std::size_t j = 0; j < p.cols_; ++j) {
      switch (rows[i][j]) {
        case '+':
          p(i, j) = Sign::Plus;
          break;
        case '-':
          p(i, j) = Sign::Minus;
          break;
        case '0':
          p(i, j) = Sign::Zero;
          break;
        default:
          throw ParseError(std::string("bad sign character '") + rows[i][j] + "'");
      }
    }
  }
  return p;
}

SignPattern SignPattern::transpose() const {
  SignPattern t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool SignPattern::is_symmetric() const { return rows_ == cols_ && *this == transpose(); }

std::size_t SignPattern::count(Sign s) const {
  std::size_t n = 0;
  for (Sign e : entries_) n += (e == s) ? 1 : 0;
  return n;
}

std::vector<std::string> SignPattern::to_strings() const {
  std::vector<std::string> out(rows_, std::string(cols_, '0'));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i][j] = to_char((*this)(i, j));
  return out;
}

SignPattern sgn(const ExactMatrix& m) {
  SignPattern p(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) p(i, j) = sign_from_int(sign(m(i, j)));
  return p;
}

SignPattern sgn(const PolyMatrix&) {
  throw PolynomialSignUndefined("sign pattern of a polynomial matrix needs an evaluation point");
}

ExactMatrix unit_realization(const SignPattern& p, const FieldContext& ctx) {
  ExactMatrix m(p.rows(), p.cols(), ctx);
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < p.cols(); ++j)
      m(i, j) = Scalar::embed(Rational(static_cast<int>(p(i, j))), ctx);
  return m;
}

}  // namespace signrank
