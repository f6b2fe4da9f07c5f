#ifndef SIGNRANK_POLYNOMIAL_HPP
#define SIGNRANK_POLYNOMIAL_HPP

#include <utility>
#include <vector>

#include "signrank/field.hpp"

namespace signrank {

/// Univariate polynomial over Q or Q(sqrt d). coeffs()[i] multiplies x^i.
///
/// Always canonical: no trailing zero coefficients, the zero polynomial has
/// an empty coefficient list.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(const FieldContext& base);
  Polynomial(const FieldContext& base, std::vector<Scalar> coeffs);

  static Polynomial from_rationals(const std::vector<Rational>& coeffs,
                                   const FieldContext& base = FieldContext::rationals());
  static Polynomial from_ints(std::initializer_list<long> coeffs,
                              const FieldContext& base = FieldContext::rationals());
  static Polynomial constant(const Scalar& c, const FieldContext& base);
  /// The indeterminate x.
  static Polynomial variable(const FieldContext& base = FieldContext::rationals());

  const FieldContext& base() const noexcept { return base_; }
  FieldContext context() const { return FieldContext::poly_over(base_); }
  const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  Scalar coeff(std::size_t i) const;
  const Scalar& leading() const;
  bool has_rational_coeffs() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Scalar& c);

  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
  friend Polynomial operator*(Polynomial p, const Polynomial& q) { return p *= q; }
  friend Polynomial operator*(Polynomial p, const Scalar& c) { return p *= c; }
  friend Polynomial operator*(const Scalar& c, Polynomial p) { return p *= c; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Euclidean division over the base field: *this = q*divisor + r, deg r < deg divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
  /// Quotient of a division known to be exact; throws std::logic_error otherwise.
  Polynomial exact_div(const Polynomial& divisor) const;
  Polynomial derivative() const;
  /// Divides by the leading coefficient. The zero polynomial stays zero.
  Polynomial monic() const;

  /// Horner evaluation. A rational point embeds into the base field.
  Scalar eval(const Scalar& v) const;
  Scalar eval(const Rational& v) const;

  std::string to_string(char var = 'x') const;

 private:
  void trim();
  void check_same_base(const Polynomial& o) const;

  FieldContext base_;
  std::vector<Scalar> coeffs_;
};

/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
/// Monic lcm; the lcm of anything with zero is zero.
Polynomial lcm(const Polynomial& a, const Polynomial& b);
/// p / gcd(p, p'), monic.
Polynomial squarefree_part(const Polynomial& p);

/// A polynomial over Q scaled to coprime integer coefficients with a positive
/// leading coefficient. Same roots as p.
std::vector<Integer> primitive_integer_form(const Polynomial& p);
Polynomial from_integers(const std::vector<Integer>& coeffs);

/// Sign is not defined for a polynomial without an evaluation point.
[[noreturn]] void sign(const Polynomial& p);

}  // namespace signrank

#endif  // SIGNRANK_POLYNOMIAL_HPP
