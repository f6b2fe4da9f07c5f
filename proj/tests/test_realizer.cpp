#include <doctest.h>

#include "signrank/errors.hpp"
#include "signrank/realizer.hpp"
#include "signrank/roots.hpp"
#include "support/oracles.hpp"
#include "support/structures.hpp"

using namespace signrank;

namespace {
const FieldContext Q = FieldContext::rationals();
const FieldContext Q5 = FieldContext::quadratic(5);

// Independent incidence check: line . point computed term by term.
bool witness_ok(const IncidenceStructure& s, const Realization& r) {
  for (std::size_t l = 0; l < s.line_count(); ++l)
    for (std::size_t p = 0; p < s.point_count(); ++p) {
      const Triple& L = r.lines[l];
      const Triple& P = r.points.at(s.points()[p]);
      const Scalar v = L[0] * P[0] + L[1] * P[1] + L[2] * P[2];
      if (v.is_zero() != s.on_line(l, p)) return false;
    }
  return true;
}

Triple t3(long a, long b, long c) { return {Scalar(a), Scalar(b), Scalar(c)}; }
}  // namespace

TEST_CASE("geometry helpers") {
  const Triple u = t3(1, 2, 3), v = t3(4, 5, 6);
  const Triple w = geometry::cross(u, v);
  CHECK(geometry::dot(w, u).is_zero());
  CHECK(geometry::dot(w, v).is_zero());
  CHECK(w == t3(-3, 6, -3));
  CHECK(geometry::proportional(u, t3(2, 4, 6)));
  CHECK_FALSE(geometry::proportional(u, v));
  CHECK(geometry::is_zero(t3(0, 0, 0)));

  const Polynomial x = Polynomial::variable();
  auto c = [](long k) { return Polynomial::from_ints({k}); };
  const PolyTriple a{x, c(1), c(0)}, b{c(0), x, c(1)}, d{c(1), c(0), x};
  // Cofactor expansion by hand: x*(x*x - 0) - 1*(0 - 1) + 0 = x^3 + 1.
  CHECK(geometry::det3(a, b, d) == x * x * x + c(1));
  Polynomial removed;
  const PolyTriple n = geometry::normalize(PolyTriple{x * c(2), x * c(4), Polynomial(Q)}, &removed);
  CHECK(n[0] == c(1));
  CHECK(n[1] == c(2));
  CHECK(removed == x);
}

TEST_CASE("the nine-point configuration has no rational realization") {
  const IncidenceStructure s = perles_structure();
  const RealizabilityCertificate c = coordinatize(s, Q);
  CHECK(c.verdict == Verdict::NonRealizable);
  REQUIRE_FALSE(c.constraints.empty());
  Polynomial g = c.constraints[0];
  for (const auto& p : c.constraints) g = gcd(g, p);
  CHECK(rational_roots(g).empty());
  // The obstruction is the golden ratio: the gcd has two real roots, both irrational.
  CHECK(sturm_root_count(g, make_rational(-100), make_rational(100)) == 2);
  CHECK(recheck_certificate(c, s));
  CHECK_FALSE(c.witness.has_value());
  CHECK(c.frame.size() == 4);
}

TEST_CASE("the nine-point configuration is realizable over Q(sqrt 5)") {
  const IncidenceStructure s = perles_structure();
  const RealizabilityCertificate c = coordinatize(s, Q5);
  REQUIRE(c.verdict == Verdict::Realizable);
  REQUIRE(c.witness.has_value());
  CHECK(validate_realization(s, *c.witness));
  CHECK(witness_ok(s, *c.witness));
  CHECK(recheck_certificate(c, s));
  REQUIRE(c.parameter.has_value());
  CHECK_FALSE(c.parameter->is_rational());
}

TEST_CASE("classical battery agrees with the grid oracle") {
  struct Case {
    const char* name;
    IncidenceStructure s;
    Verdict over_q;
    Verdict over_q5;
  };
  const std::vector<Case> cases = {
      {"triangle", testdata::triangle(), Verdict::Realizable, Verdict::Realizable},
      {"fano", testdata::fano(), Verdict::NonRealizable, Verdict::NonRealizable},
      {"non-fano", testdata::non_fano(), Verdict::Realizable, Verdict::Realizable},
      {"pappus", testdata::pappus(), Verdict::Realizable, Verdict::Realizable},
      {"quadrilateral", testdata::complete_quadrilateral(), Verdict::Realizable, Verdict::Realizable},
      {"near pencil", testdata::near_pencil(), Verdict::Realizable, Verdict::Realizable},
      {"two lines", testdata::two_lines_transversal(), Verdict::Realizable, Verdict::Realizable},
  };
  for (const auto& k : cases) {
    CAPTURE(k.name);
    const auto cq = coordinatize(k.s, Q);
    const auto c5 = coordinatize(k.s, Q5);
    CHECK(cq.verdict == k.over_q);
    CHECK(c5.verdict == k.over_q5);
    CHECK(recheck_certificate(cq, k.s));
    CHECK(recheck_certificate(c5, k.s));
    if (cq.witness) CHECK(witness_ok(k.s, *cq.witness));
    if (k.s.point_count() <= 7) {
      const bool grid = oracle::grid_realize(k.s, 2).has_value();
      if (cq.verdict == Verdict::NonRealizable) CHECK_FALSE(grid);
      if (cq.verdict == Verdict::Realizable) CHECK(grid);
    }
  }
}

TEST_CASE("frames") {
  const IncidenceStructure s = perles_structure();
  const auto frames = candidate_frames(s);
  CHECK_FALSE(frames.empty());
  CHECK(frames.size() <= kMaxFrames);
  CHECK(frames[0][0] == "I");  // the only point on four lines comes first
  for (const auto& f : frames) {
    for (std::size_t l = 0; l < s.line_count(); ++l) {
      std::size_t on = 0;
      for (const auto& p : f) on += s.on_line(l, s.index_of(p)) ? 1 : 0;
      CHECK(on <= 2);
    }
  }
  CHECK(candidate_frames(testdata::triangle()).size() == 1);
  CHECK(candidate_frames(testdata::near_pencil())[0].size() == 3);
  CHECK_THROWS_AS(coordinatize(IncidenceStructure({"A", "B"}, {{"A", "B"}}), Q), NoValidFrame);
}

TEST_CASE("tampered certificates do not recheck") {
  const IncidenceStructure s = perles_structure();
  const RealizabilityCertificate good = coordinatize(s, Q);

  auto bad_constraint = good;
  bad_constraint.constraints[0] = Polynomial::from_ints({-2, 1});  // root t = 2
  CHECK_FALSE(recheck_certificate(bad_constraint, s));

  auto bad_trace = good;
  for (auto& st : bad_trace.trace)
    if (st.kind == "line") {
      st.result[0] = st.result[0] + Polynomial::from_ints({1});
      break;
    }
  CHECK_THROWS_AS(recheck_certificate(bad_trace, s), TraceMismatch);

  auto claims_realizable = good;
  claims_realizable.verdict = Verdict::Realizable;
  CHECK_FALSE(recheck_certificate(claims_realizable, s));

  auto wrong_structure = good;
  CHECK_FALSE([&] {
    try {
      return recheck_certificate(wrong_structure, testdata::pappus());
    } catch (const Error&) {
      return false;
    }
  }());
}

TEST_CASE("validate_realization rejects broken witnesses") {
  const IncidenceStructure s = testdata::triangle();
  Realization r{Q, {{"A", t3(1, 0, 0)}, {"B", t3(0, 1, 0)}, {"C", t3(0, 0, 1)}}, {t3(0, 0, 1), t3(1, 0, 0), t3(0, 1, 0)}};
  CHECK(validate_realization(s, r));
  auto collinear = r;
  collinear.points["C"] = t3(1, 1, 0);  // now on line AB
  CHECK_FALSE(validate_realization(s, collinear));
  auto zero = r;
  zero.points["A"] = t3(0, 0, 0);
  CHECK_FALSE(validate_realization(s, zero));
  auto missing = r;
  missing.points.erase("A");
  CHECK_FALSE(validate_realization(s, missing));
  auto short_lines = r;
  short_lines.lines.pop_back();
  CHECK_FALSE(validate_realization(s, short_lines));
}

TEST_CASE("line names and verdict strings") {
  CHECK(line_name(perles_structure(), 0) == "ABEF");
  CHECK(verdict_from_string(to_string(Verdict::Inconclusive)) == Verdict::Inconclusive);
  CHECK(to_string(Verdict::NonRealizable) == "NonRealizable");
}

TEST_CASE("coordinatize is deterministic") {
  CHECK(coordinatize(perles_structure(), Q5) == coordinatize(perles_structure(), Q5));
  CHECK(coordinatize(testdata::pappus(), Q) == coordinatize(testdata::pappus(), Q));
}
