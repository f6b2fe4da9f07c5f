#include "signrank/polynomial.hpp"

#include <stdexcept>

#include "signrank/errors.hpp"

namespace signrank {

Polynomial::Polynomial(const FieldContext& base) : base_(base.scalar_field()) {}

Polynomial::Polynomial(const FieldContext& base, std::vector<Scalar> coeffs)
    : base_(base.scalar_field()), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c = Scalar::embed(c, base_);
  trim();
}

Polynomial Polynomial::from_rationals(const std::vector<Rational>& coeffs, const FieldContext& base) {
  std::vector<Scalar> cs;
  cs.reserve(coeffs.size());
  for (const auto& q : coeffs) cs.push_back(Scalar::embed(q, base));
  return Polynomial(base, std::move(cs));
}

Polynomial Polynomial::from_ints(std::initializer_list<long> coeffs, const FieldContext& base) {
  std::vector<Rational> qs;
  for (long c : coeffs) qs.emplace_back(c);
  return from_rationals(qs, base);
}

Polynomial Polynomial::constant(const Scalar& c, const FieldContext& base) {
  return Polynomial(base, {c});
}

Polynomial Polynomial::variable(const FieldContext& base) {
  return from_rationals({Rational(0), Rational(1)}, base);
}

Scalar Polynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Scalar::zero(base_);
}

const Scalar& Polynomial::leading() const {
  if (coeffs_.empty()) throw ZeroPolynomial("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

bool Polynomial::has_rational_coeffs() const {
  for (const auto& c : coeffs_) {
    if (!c.is_rational()) return false;
  }
  return true;
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void Polynomial::check_same_base(const Polynomial& o) const {
  if (base_ != o.base_) {
    throw ContextMismatch("polynomials over " + base_.name() + " and " + o.base_.name());
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_same_base(o);
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar::zero(base_));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_same_base(o);
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar::zero(base_));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  check_same_base(o);
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Scalar> out(coeffs_.size() + o.coeffs_.size() - 1, Scalar::zero(base_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& c) {
  Scalar k = Scalar::embed(c, base_);
  for (auto& x : coeffs_) x *= k;
  trim();
  return *this;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  check_same_base(divisor);
  if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
  Polynomial rem = *this;
  Polynomial quot(base_);
  if (rem.degree() < divisor.degree()) return {quot, rem};
  quot.coeffs_.assign(rem.degree() - divisor.degree() + 1, Scalar::zero(base_));
  const Scalar inv_lead = divisor.leading().inverse();
  while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
    const std::size_t shift = rem.degree() - divisor.degree();
    Scalar factor = rem.leading() * inv_lead;
    for (std::size_t i = 0; i < divisor.coeffs_.size(); ++i) {
      rem.coeffs_[i + shift] -= factor * divisor.coeffs_[i];
    }
    quot.coeffs_[shift] = factor;
    rem.trim();
  }
  quot.trim();
  return {quot, rem};
}

Polynomial Polynomial::exact_div(const Polynomial& divisor) const {
  auto [q, r] = divmod(divisor);
  if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
  return q;
}

Polynomial Polynomial::derivative() const {
  Polynomial r(base_);
  if (coeffs_.size() <= 1) return r;
  r.coeffs_.reserve(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    r.coeffs_.push_back(coeffs_[i] * Scalar::embed(Rational(static_cast<long>(i)), base_));
  }
  r.trim();
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inverse();
}

Scalar Polynomial::eval(const Scalar& v) const {
  Scalar x = Scalar::embed(v, base_);
  Scalar acc = Scalar::zero(base_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Scalar Polynomial::eval(const Rational& v) const { return eval(Scalar::embed(v, base_)); }

std::string Polynomial::to_string(char var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Scalar& c = coeffs_[i];
    if (c.is_zero()) continue;
    std::string cs = c.is_rational() ? signrank::to_string(c.a()) : "(" + c.to_string() + ")";
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += cs;
    } else {
      if (!(c.is_rational() && c.a() == 1)) out += cs + "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a;
  Polynomial y = b;
  while (!y.is_zero()) {
    Polynomial r = x.divmod(y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial(a.base());
  return (a * b).exact_div(gcd(a, b)).monic();
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.is_zero()) throw ZeroPolynomial("squarefree part of the zero polynomial");
  Polynomial g = gcd(p, p.derivative());
  return p.exact_div(g).monic();
}

std::vector<Integer> primitive_integer_form(const Polynomial& p) {
  if (!p.has_rational_coeffs()) throw ContextMismatch("polynomial has irrational coefficients");
  if (p.is_zero()) return {};
  Integer den_lcm = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.a().get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(p.coeffs().size());
  Integer content = 0;
  for (const auto& c : p.coeffs()) {
    Integer v = c.a().get_num() * (den_lcm / c.a().get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    out.push_back(std::move(v));
  }
  if (out.back() < 0) content = -content;
  for (auto& v : out) v /= content;
  return out;
}

Polynomial from_integers(const std::vector<Integer>& coeffs) {
  std::vector<Rational> qs;
  qs.reserve(coeffs.size());
  for (const auto& c : coeffs) qs.emplace_back(c);
  return Polynomial::from_rationals(qs);
}

void sign(const Polynomial&) {
  throw PolynomialSignUndefined("sign of a polynomial needs an evaluation point");
}

}  // namespace signrank
