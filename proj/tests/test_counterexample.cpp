#include <doctest.h>

#include "signrank/counterexample.hpp"
#include "signrank/errors.hpp"
#include "signrank/linalg.hpp"
#include "support/oracles.hpp"
#include "support/structures.hpp"

using namespace signrank;

namespace {
Triple t3(long a, long b, long c) { return {Scalar(a), Scalar(b), Scalar(c)}; }

const CounterexampleBundle& bundle() {
  static const CounterexampleBundle b = build_bundle();
  return b;
}

ExactMatrix sub(const ExactMatrix& m, std::vector<std::size_t> r, std::vector<std::size_t> c) {
  return m.submatrix(r, c);
}
}  // namespace

TEST_CASE("normalize_affine moves points off the line at infinity") {
  const IncidenceStructure s = testdata::triangle();
  const Realization r{FieldContext::rationals(),
                      {{"A", t3(1, 0, 0)}, {"B", t3(0, 1, 0)}, {"C", t3(0, 0, 1)}},
                      {t3(0, 0, 1), t3(1, 0, 0), t3(0, 1, 0)}};
  const Realization n = normalize_affine(r);
  CHECK(validate_realization(s, n));
  for (const auto& [label, p] : n.points) CHECK(p[2] == Scalar(1));
  for (const auto& l : n.lines) {
    const Scalar& first = l[0].is_zero() ? (l[1].is_zero() ? l[2] : l[1]) : l[0];
    CHECK(first == Scalar(1));
  }
}

TEST_CASE("normalize_affine only rescales affine input") {
  const IncidenceStructure s = testdata::triangle();
  const Realization r{FieldContext::rationals(),
                      {{"A", t3(0, 0, 2)}, {"B", t3(3, 0, 3)}, {"C", t3(0, -4, 4)}},
                      {t3(0, 1, 0), t3(-1, 1, 1), t3(1, 0, 0)}};
  REQUIRE(validate_realization(s, r));
  const Realization n = normalize_affine(r);
  CHECK(n.points.at("A") == t3(0, 0, 1));
  CHECK(n.points.at("B") == t3(1, 0, 1));
  CHECK(n.points.at("C") == t3(0, -1, 1));
  CHECK(n.lines[1] == t3(1, -1, -1));
}

TEST_CASE("bundle shapes and invariants") {
  const auto& b = bundle();
  CHECK(b.D.rows() == 9);
  CHECK(b.D.cols() == 3);
  CHECK(b.C.rows() == 3);
  CHECK(b.C.cols() == 9);
  CHECK(b.B.rows() == 12);
  CHECK(b.A.rows() == 24);
  CHECK(b.E == b.D * b.C);
  CHECK(b.A == b.A.transpose());
  CHECK(b.realization.field == FieldContext::quadratic(5));

  std::size_t zeros = 0;
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t j = 0; j < 9; ++j) {
      zeros += b.E(i, j).is_zero() ? 1 : 0;
      CHECK(b.E(i, j).is_zero() == b.structure.on_line(i, j));
    }
  CHECK(zeros == 28);

  // Rank 3 for B, independently: B factors through dimension 3, and its
  // leading 3x3 block is the identity (nonzero minor by cofactor expansion).
  CHECK(rank(b.B) == 3);
  CHECK(oracle::laplace_det(oracle::rows_of(sub(b.B, {0, 1, 2}, {0, 1, 2}))) == Scalar::one(b.B.context()));
  // Rank 6 for A: a 6x6 minor built from both identity blocks is nonzero,
  // and A = [[0, B], [B^T, 0]] has rank at most rank(B) + rank(B^T).
  CHECK(rank(b.A) == 6);
  CHECK_FALSE(oracle::laplace_det(oracle::rows_of(sub(b.A, {0, 1, 2, 12, 13, 14}, {0, 1, 2, 12, 13, 14}))).is_zero());
  CHECK(all_minors_vanish(b.B, 4));
}

TEST_CASE("every bundle check passes") {
  const BundleReport r = verify_bundle(bundle());
  CHECK(r.all_passed());
  CHECK(r.checks.size() == 13);
  for (const char* name : {check::kProduct, check::kZeroPattern, check::kRankB, check::kRankA, check::kSymmetricA,
                           check::kSymmetricPattern, check::kCertificate}) {
    REQUIRE(r.find(name) != nullptr);
    CHECK(r.find(name)->passed);
  }
  CHECK(r.find("no such check") == nullptr);
}

TEST_CASE("sign patterns and the bipartite graph") {
  const auto& b = bundle();
  const SignPatternSuite p = sign_pattern_suite(b);
  CHECK(p.A.is_symmetric());
  CHECK(p.E.count(Sign::Zero) == 28);
  const BipartiteGraph g = bipartite_graph(p.A);
  CHECK(g.left == 12);
  CHECK(g.right == 12);
  CHECK(g.edges.size() == 144 - p.B.count(Sign::Zero));
}

TEST_CASE("tampering is detected") {
  {
    auto b = bundle();
    b.D(0, 0) = b.D(0, 0) + Scalar::one(b.D.context());
    const BundleReport r = verify_bundle(b);
    CHECK_FALSE(r.find(check::kProduct)->passed);
    CHECK_FALSE(r.all_passed());
  }
  {
    auto b = bundle();
    b.A(0, 23) = b.A(0, 23) + Scalar::one(b.A.context());
    const BundleReport r = verify_bundle(b);
    CHECK_FALSE(r.find(check::kSymmetricA)->passed);
  }
  {
    auto b = bundle();
    b.nonrealizability.constraints[0] = Polynomial::from_ints({-1, 1});
    CHECK_FALSE(verify_bundle(b).find(check::kCertificate)->passed);
  }
  {
    auto b = bundle();
    b.realization.points.at("A") = b.realization.points.at("B");
    CHECK_FALSE(verify_bundle(b).find(check::kRealization)->passed);
  }
}

TEST_CASE("bundle construction is deterministic") {
  const CounterexampleBundle again = build_bundle();
  CHECK(again.B == bundle().B);
  CHECK(again.realization == bundle().realization);
  CHECK(again.nonrealizability == bundle().nonrealizability);
}
