#include "signrank/field.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include "signrank/errors.hpp"

namespace signrank {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) throw ParseError("not an integer: '" + std::string(s) + "'");
  if (s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

long parse_long(std::string_view s) {
  long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("not an integer: '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  Rational q;
  if (slash == std::string_view::npos) {
    q = Rational(parse_integer(text));
  } else {
    Integer num = parse_integer(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
      throw ParseError("denominator must be unsigned: '" + std::string(text) + "'");
    }
    Integer den = parse_integer(den_text);
    if (den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
    q = Rational(num, den);
    q.canonicalize();
  }
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational make_rational(long num, long den) {
  if (den == 0) throw DivisionByZero("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

bool is_squarefree(long d) {
  if (d < 2) return false;
  for (long p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

FieldContext FieldContext::quadratic(long d) {
  if (!is_squarefree(d)) {
    throw std::invalid_argument("radicand must be squarefree and >= 2, got " + std::to_string(d));
  }
  return FieldContext(Kind::QuadSqrt, d);
}

FieldContext FieldContext::poly_over(const FieldContext& base) {
  if (base.kind_ == Kind::PolyOver) {
    throw std::invalid_argument("nested transcendental extensions are not supported");
  }
  return FieldContext(Kind::PolyOver, base.d_);
}

FieldContext FieldContext::scalar_field() const {
  if (d_ == 0) return rationals();
  return FieldContext(Kind::QuadSqrt, d_);
}

FieldContext FieldContext::parse(std::string_view text) {
  if (text.starts_with("poly:")) return poly_over(parse(text.substr(5)));
  if (text == "q") return rationals();
  if (text.starts_with("qsqrt:")) {
    long d = parse_long(text.substr(6));
    if (!is_squarefree(d)) throw ParseError("radicand must be squarefree and >= 2");
    return quadratic(d);
  }
  throw ParseError("unknown field '" + std::string(text) + "'");
}

std::string FieldContext::name() const {
  std::string base = d_ == 0 ? "q" : "qsqrt:" + std::to_string(d_);
  return kind_ == Kind::PolyOver ? "poly:" + base : base;
}

Scalar::Scalar(const Rational& a, const Rational& b, long d) : a_(a), b_(b), d_(d) {
  if (d != 0 && !is_squarefree(d)) {
    throw std::invalid_argument("radicand must be squarefree and >= 2");
  }
  if (d == 0 && b != 0) throw ContextMismatch("irrational part in the rational field");
}

Scalar Scalar::zero(const FieldContext& field) { return embed(Rational(0), field); }

Scalar Scalar::one(const FieldContext& field) { return embed(Rational(1), field); }

Scalar Scalar::embed(const Rational& q, const FieldContext& field) {
  Scalar s(q);
  s.d_ = field.scalar_field().d();
  return s;
}

Scalar Scalar::embed(const Scalar& x, const FieldContext& field) {
  long target = field.scalar_field().d();
  if (x.d_ == target) return x;
  if (x.d_ != 0) throw ContextMismatch("cannot embed " + x.field().name() + " into " + field.name());
  Scalar s = x;
  s.d_ = target;
  return s;
}

FieldContext Scalar::field() const {
  return d_ == 0 ? FieldContext::rationals() : FieldContext::quadratic(d_);
}

void Scalar::check_same_field(const Scalar& o) const {
  if (d_ != o.d_) {
    throw ContextMismatch("arithmetic between " + field().name() + " and " + o.field().name());
  }
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.a_ = -a_;
  r.b_ = -b_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same_field(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same_field(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same_field(o);
  if (d_ == 0) {
    a_ *= o.a_;
    return *this;
  }
  Rational a = a_ * o.a_ + b_ * o.b_ * d_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  if (b_ == 0) {
    Scalar r = *this;
    r.a_ = 1 / a_;
    return r;
  }
  // (a + b r)^-1 = (a - b r) / (a^2 - d b^2); the norm is nonzero since d is not a square.
  Rational norm = a_ * a_ - b_ * b_ * d_;
  Scalar r = *this;
  r.a_ = a_ / norm;
  r.b_ = -b_ / norm;
  return r;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same_field(o);
  return *this *= o.inverse();
}

Scalar Scalar::conjugate() const {
  Scalar r = *this;
  r.b_ = -b_;
  return r;
}

double Scalar::to_double() const {
  if (b_ == 0) return a_.get_d();
  return a_.get_d() + b_.get_d() * std::sqrt(static_cast<double>(d_));
}

std::string Scalar::to_string() const {
  if (b_ == 0) return signrank::to_string(a_);
  return signrank::to_string(a_) + (b_ > 0 ? "+" : "-") + signrank::to_string(abs(b_)) + "*sqrt(" +
         std::to_string(d_) + ")";
}

int sign(const Rational& q) { return sgn(q); }

int sign(const Scalar& x) {
  int sa = sign(x.a());
  int sb = sign(x.b());
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: the larger of a^2 and b^2 d wins. Equality is impossible
  // because d is squarefree and b != 0.
  Rational lhs = x.a() * x.a();
  Rational rhs = x.b() * x.b() * x.d();
  return lhs > rhs ? sa : sb;
}

}  // namespace signrank
