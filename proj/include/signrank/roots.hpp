#ifndef SIGNRANK_ROOTS_HPP
#define SIGNRANK_ROOTS_HPP

#include <vector>

#include "signrank/field.hpp"
#include "signrank/polynomial.hpp"

namespace signrank {

/// Sturm chain p, p', -rem(p, p'), ... built from exact remainders, each
/// rescaled by a positive constant to keep coefficients small.
std::vector<Polynomial> sturm_sequence(const Polynomial& p);

/// Number of distinct real roots of p in the open interval (lo, hi).
/// Coefficients may lie in Q or Q(sqrt d).
/// Throws ZeroPolynomial or EndpointIsRoot; std::invalid_argument if lo >= hi.
int sturm_root_count(const Polynomial& p, const Rational& lo, const Rational& hi);

/// Exactly the rational roots of p (ascending), by the rational root theorem
/// on the primitive integer form.
std::vector<Rational> rational_roots(const Polynomial& p);

/// All roots of p in Q(sqrt d) (ascending by real value). Rational roots are
/// returned embedded in Q(sqrt d). Throws UnresolvedFactor if, after removing
/// rational roots from the squarefree part, something of degree >= 3 remains.
std::vector<Scalar> quadratic_field_roots(const Polynomial& p, long d);

/// Whether q is the square of a rational; sets *root to the nonnegative root.
bool rational_sqrt(const Rational& q, Rational* root);

}  // namespace signrank

#endif  // SIGNRANK_ROOTS_HPP
