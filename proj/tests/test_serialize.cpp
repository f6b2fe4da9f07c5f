#include <doctest.h>

#include <random>

#include "signrank/counterexample.hpp"
#include "signrank/errors.hpp"
#include "signrank/serialize.hpp"
#include "support/oracles.hpp"
#include "support/structures.hpp"

using namespace signrank;
namespace sj = signrank::json;

namespace {
template <class T, class Parse>
void round_trip(const T& value, Parse&& parse) {
  const std::string text = sj::dump(sj::to_json(value));
  const T back = parse(sj::parse(text));
  CHECK(back == value);
  CHECK(sj::dump(sj::to_json(back)) == text);
}
}  // namespace

TEST_CASE("scalars and rationals") {
  CHECK(sj::to_json(make_rational(-3, 6)) == "-1/2");
  CHECK(sj::rational_from_json("7/14") == make_rational(1, 2));
  const Scalar phi(make_rational(1, 2), make_rational(1, 2), 5);
  CHECK(sj::to_json(phi).dump() == R"({"a":"1/2","b":"1/2","d":5})");
  CHECK(sj::scalar_from_json(sj::to_json(phi), FieldContext::quadratic(5)) == phi);
  CHECK(sj::scalar_from_json("3", FieldContext::quadratic(5)) == Scalar::embed(Rational(3), FieldContext::quadratic(5)));
  CHECK_THROWS_AS(sj::scalar_from_json(sj::to_json(phi), FieldContext::quadratic(2)), ParseError);
  CHECK_THROWS_AS(sj::rational_from_json(1.5), ParseError);
  CHECK_THROWS_AS(sj::rational_from_json("1/0"), ParseError);
}

TEST_CASE("matrices and polynomials round-trip") {
  std::mt19937_64 rng(71);
  for (int i = 0; i < 20; ++i) round_trip(oracle::random_matrix(rng, 3, 4), sj::exact_matrix_from_json);
  round_trip(Polynomial::from_ints({1, -2, 3}), sj::polynomial_from_json);
  round_trip(Polynomial(FieldContext::quadratic(5)), sj::polynomial_from_json);
  const FieldContext pq = FieldContext::poly_over(FieldContext::quadratic(5));
  PolyMatrix m(2, 2, pq);
  m(0, 1) = Polynomial(FieldContext::quadratic(5), {Scalar(make_rational(1), make_rational(2), 5)});
  round_trip(m, sj::poly_matrix_from_json);
}

TEST_CASE("bundle artifacts round-trip") {
  const CounterexampleBundle b = build_bundle();
  round_trip(b.structure, sj::incidence_from_json);
  round_trip(b.realization, sj::realization_from_json);
  round_trip(b.A, sj::exact_matrix_from_json);
  round_trip(b.nonrealizability, sj::certificate_from_json);
  round_trip(b.realization_certificate, sj::certificate_from_json);
  round_trip(b.patterns.B, sj::sign_pattern_from_json);
  round_trip(MinrankWitness{b.patterns.B, b.B, 3}, [](const sj::Json& j) { return sj::minrank_witness_from_json(j); });
}

TEST_CASE("rationalization certificate round-trips") {
  RationalizationCertificate c;
  c.beta = Scalar(make_rational(31, 20));
  c.window = Window(make_rational(3, 2), make_rational(8, 5));
  c.per_entry = {{0, 0, 0, 1}, {0, 1, 0, -1}};
  c.rank_before = 1;
  c.rank_after = 1;
  round_trip(c, sj::rationalization_certificate_from_json);
}

TEST_CASE("rational-function matrix input") {
  const auto j = sj::parse(R"({"context":"poly:q","rows":1,"cols":2,
    "entries":[[{"num":["0","1"],"den":["-3","1"]},["1"]]]})");
  FieldContext base;
  bool has_den = false;
  const auto rows = sj::rational_function_rows_from_json(j, &base, &has_den);
  CHECK(has_den);
  CHECK(base == FieldContext::rationals());
  CHECK(rows[0][0].den == Polynomial::from_ints({-3, 1}));
  CHECK_THROWS_AS(sj::poly_matrix_from_json(j), ParseError);
}

TEST_CASE("malformed input is a ParseError") {
  CHECK_THROWS_AS(sj::parse("{"), ParseError);
  CHECK_THROWS_AS(sj::exact_matrix_from_json(sj::parse(R"({"context":"q","rows":2,"cols":1,"entries":[["1"]]})")),
                  ParseError);
  CHECK_THROWS_AS(sj::exact_matrix_from_json(sj::parse(R"({"context":"r","rows":0,"cols":0,"entries":[]})")),
                  ParseError);
  CHECK_THROWS_AS(sj::exact_matrix_from_json(sj::parse(R"({"rows":0})")), ParseError);
  CHECK_THROWS_AS(sj::sign_pattern_from_json(sj::parse(R"(["+x"])")), ParseError);
  CHECK_THROWS_AS(sj::incidence_from_json(sj::parse(R"({"points":["A"],"lines":[[1,2]]})")), ParseError);
  CHECK_THROWS_AS(sj::certificate_from_json(sj::parse(R"({"verdict":"Maybe"})")), ParseError);
  CHECK_THROWS_AS(sj::poly_matrix_from_json(sj::parse(R"({"context":"q","rows":0,"cols":0,"entries":[]})")),
                  ParseError);
}

TEST_CASE("incidence JSON layout") {
  const auto j = sj::to_json(testdata::triangle());
  CHECK(j.dump() == R"({"points":["A","B","C"],"lines":[["A","B"],["B","C"],["A","C"]]})");
}
