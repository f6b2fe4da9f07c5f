#include "signrank/roots.hpp"

#include <algorithm>
#include <stdexcept>

#include "signrank/errors.hpp"

namespace signrank {

namespace {

Scalar abs_value(const Scalar& x) { return sign(x) < 0 ? -x : x; }

int sign_variations(const std::vector<Polynomial>& chain, const Rational& at) {
  int variations = 0;
  int last = 0;
  for (const auto& q : chain) {
    int s = sign(q.eval(at));
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

// Positive divisors of |n|; n != 0.
std::vector<Integer> divisors(const Integer& n) {
  Integer m = abs(n);
  std::vector<Integer> small;
  std::vector<Integer> large;
  for (Integer i = 1; i * i <= m; ++i) {
    if (m % i == 0) {
      small.push_back(i);
      if (i * i != m) large.push_back(m / i);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::vector<Polynomial> sturm_sequence(const Polynomial& p) {
  if (p.is_zero()) throw ZeroPolynomial("Sturm sequence of the zero polynomial");
  std::vector<Polynomial> chain{p};
  if (p.degree() == 0) return chain;
  chain.push_back(p.derivative());
  while (true) {
    const Polynomial& a = chain[chain.size() - 2];
    const Polynomial& b = chain.back();
    Polynomial r = a.divmod(b).second;
    if (r.is_zero()) break;
    // Scale by 1/|lead| > 0: keeps the signed remainder sequence valid.
    Polynomial next = -r * abs_value(r.leading()).inverse();
    chain.push_back(std::move(next));
  }
  return chain;
}

int sturm_root_count(const Polynomial& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw ZeroPolynomial("root count of the zero polynomial");
  if (!(lo < hi)) throw std::invalid_argument("empty interval: lo must be < hi");
  if (p.eval(lo).is_zero()) throw EndpointIsRoot("lower endpoint " + to_string(lo) + " is a root");
  if (p.eval(hi).is_zero()) throw EndpointIsRoot("upper endpoint " + to_string(hi) + " is a root");
  auto chain = sturm_sequence(p);
  return sign_variations(chain, lo) - sign_variations(chain, hi);
}

std::vector<Rational> rational_roots(const Polynomial& p) {
  if (p.is_zero()) throw ZeroPolynomial("rational roots of the zero polynomial");
  std::vector<Integer> ints = primitive_integer_form(p);
  std::vector<Rational> roots;
  // Strip x^k so the constant term is nonzero.
  std::size_t low = 0;
  while (ints[low] == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  std::vector<Integer> reduced(ints.begin() + static_cast<std::ptrdiff_t>(low), ints.end());
  if (reduced.size() > 1) {
    const Polynomial q = from_integers(reduced);
    auto nums = divisors(reduced.front());
    auto dens = divisors(reduced.back());
    for (const auto& den : dens) {
      for (const auto& num : nums) {
        for (int s : {1, -1}) {
          Rational cand(num * s, den);
          cand.canonicalize();
          if (cand.get_den() != den) continue;  // seen with a smaller denominator
          if (q.eval(cand).is_zero()) roots.push_back(cand);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

bool rational_sqrt(const Rational& q, Rational* root) {
  if (q < 0) return false;
  Integer n = q.get_num();
  Integer d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  if (root != nullptr) {
    Integer rn = sqrt(n);
    Integer rd = sqrt(d);
    *root = Rational(rn, rd);
    root->canonicalize();
  }
  return true;
}

std::vector<Scalar> quadratic_field_roots(const Polynomial& p, long d) {
  const FieldContext field = FieldContext::quadratic(d);
  if (p.is_zero()) throw ZeroPolynomial("roots of the zero polynomial");
  if (!p.has_rational_coeffs()) throw ContextMismatch("quadratic_field_roots needs rational coefficients");

  Polynomial rest = squarefree_part(p);
  std::vector<Scalar> roots;
  for (const auto& r : rational_roots(rest)) {
    roots.push_back(Scalar::embed(r, field));
    rest = rest.exact_div(Polynomial::from_rationals({-r, Rational(1)}));
  }
  if (rest.degree() >= 3) throw UnresolvedFactor(rest.degree());
  if (rest.degree() == 2) {
    // rest = x^2 + b x + c (monic); roots (-b +/- sqrt(disc)) / 2.
    Polynomial m = rest.monic();
    Rational b = m.coeff(1).a();
    Rational c = m.coeff(0).a();
    Rational disc = b * b - 4 * c;
    Rational s;
    // A rational square would have produced rational roots above.
    if (rational_sqrt(disc / d, &s)) {
      Rational half(1, 2);
      roots.emplace_back(-b * half, s * half, d);
      roots.emplace_back(-b * half, -s * half, d);
    }
  }
  std::sort(roots.begin(), roots.end(), [](const Scalar& x, const Scalar& y) { return sign(x - y) < 0; });
  return roots;
}

}  // namespace signrank
