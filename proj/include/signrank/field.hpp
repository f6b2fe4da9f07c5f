#ifndef SIGNRANK_FIELD_HPP
#define SIGNRANK_FIELD_HPP

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace signrank {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p/q" or "p" (optional leading minus). The result is canonical.
Rational parse_rational(std::string_view text);
/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);

Rational make_rational(long num, long den = 1);

bool is_squarefree(long d);

/// The field that values of a given kind live in.
///
/// Q and Q(sqrt d) hold scalars. PolyOver(base) is the context of matrices
/// whose entries are polynomials over Q or Q(sqrt d); their rank is taken
/// over the fraction field base(alpha).
class FieldContext {
 public:
  enum class Kind { Rational, QuadSqrt, PolyOver };

  FieldContext() = default;

  static FieldContext rationals() { return FieldContext(Kind::Rational, 0); }
  /// Throws std::invalid_argument unless d is squarefree and >= 2.
  static FieldContext quadratic(long d);
  static FieldContext poly_over(const FieldContext& base);

  /// Accepts "q", "qsqrt:D", "poly:q" and "poly:qsqrt:D".
  static FieldContext parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  /// The radicand for Q(sqrt d) (or the base of PolyOver); 0 means Q.
  long d() const noexcept { return d_; }
  bool admits_sign() const noexcept { return kind_ != Kind::PolyOver; }
  /// Scalar field of a PolyOver context; identity otherwise.
  FieldContext scalar_field() const;

  std::string name() const;

  friend bool operator==(const FieldContext&, const FieldContext&) = default;

 private:
  FieldContext(Kind kind, long d) : kind_(kind), d_(d) {}

  Kind kind_ = Kind::Rational;
  long d_ = 0;
};

/// An element a + b*sqrt(d) of Q(sqrt d), or a rational when d == 0.
///
/// The representation is unique because d is squarefree, so equality is
/// componentwise. Arithmetic between different fields throws ContextMismatch;
/// use embed() to lift a rational into Q(sqrt d) first.
class Scalar {
 public:
  Scalar() = default;
  Scalar(const Rational& a) : a_(a) {}  // NOLINT: rationals embed implicitly
  Scalar(long a) : a_(a) {}             // NOLINT
  Scalar(const Rational& a, const Rational& b, long d);

  static Scalar zero(const FieldContext& field);
  static Scalar one(const FieldContext& field);
  static Scalar embed(const Rational& q, const FieldContext& field);
  /// Lifts a rational-field scalar into `field`; identity when already there.
  static Scalar embed(const Scalar& x, const FieldContext& field);

  const Rational& a() const noexcept { return a_; }
  const Rational& b() const noexcept { return b_; }
  long d() const noexcept { return d_; }
  FieldContext field() const;
  bool is_rational() const noexcept { return b_ == 0; }
  bool is_zero() const noexcept { return a_ == 0 && b_ == 0; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar inverse() const;
  /// a - b*sqrt(d).
  Scalar conjugate() const;

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_ == 0 || x.d_ == y.d_);
  }

  double to_double() const;
  std::string to_string() const;

 private:
  void check_same_field(const Scalar& o) const;

  Rational a_;
  Rational b_;
  long d_ = 0;
};

/// Exact sign of the real number represented: -1, 0 or +1.
int sign(const Scalar& x);
int sign(const Rational& q);

}  // namespace signrank

#endif  // SIGNRANK_FIELD_HPP
