#include <doctest.h>

#include <random>

#include "signrank/errors.hpp"
#include "signrank/linalg.hpp"
#include "signrank/rationalizer.hpp"
#include "signrank/roots.hpp"
#include "support/oracles.hpp"

using namespace signrank;

namespace {
const FieldContext Q = FieldContext::rationals();
const FieldContext Q5 = FieldContext::quadratic(5);
const FieldContext PQ = FieldContext::poly_over(Q);
Rational R(long n, long d = 1) { return make_rational(n, d); }
Polynomial P(std::initializer_list<long> c) { return Polynomial::from_ints(c); }

Polynomial random_poly(std::mt19937_64& rng, const FieldContext& base, int max_degree) {
  std::uniform_int_distribution<int> deg(-1, max_degree);
  std::uniform_int_distribution<long> coef(-4, 4);
  std::vector<Scalar> cs;
  const int d = deg(rng);
  for (int i = 0; i <= d; ++i)
    cs.push_back(base.d() == 0 ? Scalar(coef(rng)) : Scalar(Rational(coef(rng)), Rational(coef(rng)), base.d()));
  return Polynomial(base, cs);
}
}  // namespace

TEST_CASE("window validation") {
  CHECK_THROWS_AS(Window(R(1), R(1)), std::invalid_argument);
  CHECK(Window(R(3, 2), R(8, 5)).midpoint() == R(31, 20));
}

TEST_CASE("golden ratio window: success and refinement") {
  const PolyMatrix m = PolyMatrix::from_rows({{P({0, 1}), P({-1, -1, 1})}}, PQ);
  const auto ok = rationalize(m, Window(R(3, 2), R(8, 5)));
  REQUIRE(std::holds_alternative<Rationalized>(ok));
  const auto& r = std::get<Rationalized>(ok);
  CHECK(r.certificate.beta == Scalar(R(31, 20)));
  CHECK(r.matrix(0, 0) == Scalar(R(31, 20)));
  const Rational beta = R(31, 20);
  CHECK(r.matrix(0, 1) == Scalar(Rational(beta * beta - beta - 1)));
  CHECK(r.matrix(0, 1) == Scalar(R(-59, 400)));
  CHECK(sgn(r.matrix).to_strings() == std::vector<std::string>{"+-"});
  CHECK(r.certificate.rank_before == 1);
  CHECK(r.certificate.rank_after == 1);

  const auto bad = rationalize(m, Window(R(8, 5), R(5, 3)));
  REQUIRE(std::holds_alternative<NeedsRefinement>(bad));
  const auto& n = std::get<NeedsRefinement>(bad);
  REQUIRE(n.entries.size() == 1);
  CHECK(n.entries[0].row == 0);
  CHECK(n.entries[0].col == 1);
  CHECK(n.entries[0].root_count == oracle::quadratic_roots_in(1, -1, -1, 1.6, 5.0 / 3));
}

TEST_CASE("endpoint roots ask for refinement") {
  const PolyMatrix m = PolyMatrix::from_rows({{P({-1, 1})}}, PQ);
  const auto r = rationalize(m, Window(R(1), R(2)));
  REQUIRE(std::holds_alternative<NeedsRefinement>(r));
  CHECK(std::get<NeedsRefinement>(r).entries[0].endpoint_root);
}

TEST_CASE("zero matrix") {
  const PolyMatrix m(2, 3, PQ);
  const auto r = rationalize(m, Window(R(0), R(1)));
  REQUIRE(std::holds_alternative<Rationalized>(r));
  CHECK(std::get<Rationalized>(r).certificate.rank_after == 0);
  CHECK(std::get<Rationalized>(r).matrix == ExactMatrix(2, 3, Q));
}

TEST_CASE("rank over the function field") {
  const Polynomial x = P({0, 1});
  CHECK(rank_over_function_field(PolyMatrix::from_rows({{x, x * x}, {P({1}), x}}, PQ)) == 1);
  CHECK(rank_over_function_field(PolyMatrix::from_rows({{x, Polynomial(Q)}, {Polynomial(Q), P({-1, 1})}}, PQ)) == 2);
}

TEST_CASE("function-field rank equals the maximum rank over evaluations") {
  // Evaluation oracle: at points beyond every root of every minor the rank
  // is maximal; take the best of several large evaluation points.
  std::mt19937_64 rng(61);
  for (int i = 0; i < 60; ++i) {
    PolyMatrix m(4, 4, PQ);
    const bool low = i % 2 == 0;
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 4; ++b) m(a, b) = random_poly(rng, Q, 2);
    if (low) {
      // Make row 3 a polynomial combination of rows 0 and 1.
      const Polynomial u = random_poly(rng, Q, 1), v = random_poly(rng, Q, 1);
      for (std::size_t b = 0; b < 4; ++b) m(3, b) = u * m(0, b) + v * m(1, b);
    }
    std::size_t best = 0;
    for (long t : {1000, 1001, 1003, 1007, 1013}) {
      ExactMatrix e(4, 4, Q);
      for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b) e(a, b) = m(a, b).eval(Rational(t));
      best = std::max(best, oracle::minor_rank(e));
    }
    CHECK(rank_over_function_field(m) == best);
  }
}

TEST_CASE("clear_denominators") {
  const Polynomial one = P({1});
  {
    const auto c = clear_denominators({{{one, P({2, 1})}}}, Q, Window(R(0), R(1)));
    CHECK(c.multiplier == P({2, 1}));
    CHECK(c.matrix(0, 0) == one);
    CHECK(c.multiplier_positive_on_window);
  }
  {
    // x/(x-3) and 1 on (0, 1): lcm x - 3 is negative there, so the
    // multiplier is 3 - x and the entries become -x and 3 - x.
    const auto c = clear_denominators({{{P({0, 1}), P({-3, 1})}, {one, one}}}, Q, Window(R(0), R(1)));
    CHECK(c.multiplier == P({3, -1}));
    CHECK(c.matrix(0, 0) == P({0, -1}));
    CHECK(c.matrix(0, 1) == P({3, -1}));
    // Sign agreement at the midpoint 1/2: x/(x-3) = -1/5 and -x = -1/2.
    const Rational half = R(1, 2);
    CHECK(sign(c.matrix(0, 0).eval(half)) == sign(Rational(half / (half - 3))));
  }
  {
    const auto c = clear_denominators({{{P({0, 1}), one}, {P({5}), one}}}, Q);
    CHECK(c.multiplier == one);
    CHECK(c.matrix(0, 1) == P({5}));
  }
  CHECK_THROWS_AS(clear_denominators({{{one, Polynomial(Q)}}}, Q), ZeroDenominator);
  {
    // The lcm x - 1/2 vanishes inside (0, 1).
    const auto c = clear_denominators({{{one, P({-1, 2})}}}, Q, Window(R(0), R(1)));
    CHECK_FALSE(c.multiplier_positive_on_window);
  }
}

TEST_CASE("rationalize postconditions on fuzzed matrices") {
  std::mt19937_64 rng(67);
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  for (int i = 0; i < 60; ++i) {
    const FieldContext base = (i % 2 == 0) ? Q : Q5;
    PolyMatrix m(dim(rng), dim(rng), FieldContext::poly_over(base));
    for (std::size_t a = 0; a < m.rows(); ++a)
      for (std::size_t b = 0; b < m.cols(); ++b) m(a, b) = random_poly(rng, base, 3);
    const Rational target = R(static_cast<long>(rng() % 2001) - 1000, 997);
    bool target_is_root = false;
    for (std::size_t a = 0; a < m.rows(); ++a)
      for (std::size_t b = 0; b < m.cols(); ++b)
        target_is_root = target_is_root || (!m(a, b).is_zero() && m(a, b).eval(target).is_zero());
    if (target_is_root) continue;
    const auto res = rationalize_with_bisection(m, Window(target - 5, target + 7), target);
    REQUIRE(std::holds_alternative<Rationalized>(res));
    const auto& r = std::get<Rationalized>(res);
    const Rational mid = r.certificate.window.midpoint();
    for (std::size_t a = 0; a < m.rows(); ++a)
      for (std::size_t b = 0; b < m.cols(); ++b) {
        CHECK(sign(r.matrix(a, b)) == sign(m(a, b).eval(mid)));
        // Root-free window: the sign at both endpoints agrees with beta's.
        if (!m(a, b).is_zero()) {
          CHECK(sign(m(a, b).eval(r.certificate.window.lo)) == sign(r.matrix(a, b)));
          CHECK(sign(m(a, b).eval(r.certificate.window.hi)) == sign(r.matrix(a, b)));
        }
      }
    CHECK(r.certificate.rank_after <= r.certificate.rank_before);
    CHECK(r.certificate.rank_before == rank_over_function_field(m));
  }
}

TEST_CASE("substitution keeps a rank drop") {
  // Rank 1 over Q(x): row 2 is (x + 1) times row 1.
  const Polynomial x = P({0, 1});
  const PolyMatrix m = PolyMatrix::from_rows({{x, P({-2, 0, 1})}, {x * P({1, 1}), P({-2, 0, 1}) * P({1, 1})}}, PQ);
  const auto r = rationalize(m, Window(R(3), R(4)));
  REQUIRE(std::holds_alternative<Rationalized>(r));
  CHECK(std::get<Rationalized>(r).certificate.rank_before == 1);
  CHECK(std::get<Rationalized>(r).certificate.rank_after == 1);
}
