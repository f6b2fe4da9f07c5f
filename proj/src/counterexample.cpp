#include "signrank/counterexample.hpp"

#include <algorithm>
#include <stdexcept>

#include "signrank/errors.hpp"
#include "signrank/linalg.hpp"
#include "signrank/minrank.hpp"

namespace signrank {

namespace {

using Mat3 = std::array<Triple, 3>;  // rows

Triple transform_point(const Mat3& m, const Triple& p) {
  return {geometry::dot(m[0], p), geometry::dot(m[1], p), geometry::dot(m[2], p)};
}

// Row vector times matrix.
Triple apply_row(const Triple& l, const Mat3& m) {
  Triple out;
  for (std::size_t j = 0; j < 3; ++j) out[j] = l[0] * m[0][j] + l[1] * m[1][j] + l[2] * m[2][j];
  return out;
}

Mat3 inverse(const Mat3& m) {
  // Columns of the inverse come from cross products of the rows.
  Triple c0 = geometry::cross(m[1], m[2]);
  Triple c1 = geometry::cross(m[2], m[0]);
  Triple c2 = geometry::cross(m[0], m[1]);
  Scalar det = geometry::dot(m[0], c0);
  Scalar inv = det.inverse();
  Mat3 out;
  for (std::size_t i = 0; i < 3; ++i) out[i] = {c0[i] * inv, c1[i] * inv, c2[i] * inv};
  return out;
}

Triple integer_triple(long a, long b, long c, const FieldContext& f) {
  return {Scalar::embed(Rational(a), f), Scalar::embed(Rational(b), f), Scalar::embed(Rational(c), f)};
}

bool avoids_all(const Triple& line, const Realization& r) {
  for (const auto& [label, p] : r.points)
    if (geometry::dot(line, p).is_zero()) return false;
  return true;
}

std::optional<Triple> avoiding_line(const Realization& r) {
  const FieldContext& f = r.field;
  if (Triple z = integer_triple(0, 0, 1, f); avoids_all(z, r)) return z;
  for (long n = 1; n <= 10; ++n) {
    for (long a = -n; a <= n; ++a)
      for (long b = -n; b <= n; ++b)
        for (long c = -n; c <= n; ++c) {
          if (std::max({std::labs(a), std::labs(b), std::labs(c)}) != n) continue;
          Triple l = integer_triple(a, b, c, f);
          if (avoids_all(l, r)) return l;
        }
  }
  return std::nullopt;
}

Triple scale_first_nonzero(const Triple& v) {
  for (const auto& x : v) {
    if (x.is_zero()) continue;
    Scalar inv = x.inverse();
    return {v[0] * inv, v[1] * inv, v[2] * inv};
  }
  return v;
}

std::string count_text(std::size_t n) { return std::to_string(n); }

}  // namespace

Realization normalize_affine(const Realization& r) {
  auto line = avoiding_line(r);
  if (!line) throw NoAvoidingLineFound("every integer line with max-norm <= 10 meets a point");
  const FieldContext& f = r.field;
  const std::array<Triple, 3> basis{integer_triple(1, 0, 0, f), integer_triple(0, 1, 0, f), integer_triple(0, 0, 1, f)};
  Mat3 transform{};
  bool found = false;
  for (std::size_t i = 0; i < 3 && !found; ++i)
    for (std::size_t j = i + 1; j < 3 && !found; ++j) {
      transform = {basis[i], basis[j], *line};
      found = !geometry::dot(transform[0], geometry::cross(transform[1], transform[2])).is_zero();
    }
  const Mat3 back = inverse(transform);

  Realization out;
  out.field = f;
  for (const auto& [label, p] : r.points) {
    Triple q = transform_point(transform, p);
    Scalar inv = q[2].inverse();
    out.points.emplace(label, Triple{q[0] * inv, q[1] * inv, Scalar::one(f)});
  }
  for (const auto& l : r.lines) out.lines.push_back(scale_first_nonzero(apply_row(l, back)));
  return out;
}

bool BundleReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* BundleReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

SignPatternSuite sign_pattern_suite(const CounterexampleBundle& b) {
  return SignPatternSuite{sgn(b.D), sgn(b.C), sgn(b.E), sgn(b.B), sgn(b.A)};
}

CounterexampleBundle build_bundle() {
  const FieldContext field = FieldContext::quadratic(5);
  CounterexampleBundle b;
  b.structure = perles_structure();
  b.realization_certificate = coordinatize(b.structure, field);
  if (b.realization_certificate.verdict != Verdict::Realizable) {
    throw std::logic_error("no realization over " + field.name() + ": " + b.realization_certificate.reason);
  }
  b.realization = normalize_affine(*b.realization_certificate.witness);

  const auto& s = b.structure;
  b.D = ExactMatrix(s.line_count(), 3, field);
  for (std::size_t i = 0; i < s.line_count(); ++i)
    for (std::size_t k = 0; k < 3; ++k) b.D(i, k) = b.realization.lines[i][k];
  b.C = ExactMatrix(3, s.point_count(), field);
  for (std::size_t j = 0; j < s.point_count(); ++j) {
    const Triple& p = b.realization.points.at(s.points()[j]);
    for (std::size_t k = 0; k < 3; ++k) b.C(k, j) = p[k];
  }
  b.E = b.D * b.C;
  b.B = block_assemble({{{Block::identity(3), b.C}, {b.D, b.E}}}, field);
  b.A = block_assemble({{{Block::zero(), b.B}, {b.B.transpose(), Block::zero()}}}, field);
  b.patterns = sign_pattern_suite(b);
  b.nonrealizability = coordinatize(s, FieldContext::rationals());

  BundleReport report = verify_bundle(b);
  if (!report.all_passed()) {
    for (const auto& c : report.checks)
      if (!c.passed) throw std::logic_error("bundle check failed: " + c.name + " (" + c.evidence + ")");
  }
  return b;
}

BundleReport verify_bundle(const CounterexampleBundle& b) {
  BundleReport report;
  auto add = [&](const char* name, auto&& fn) {
    CheckResult r{name, false, ""};
    try {
      r.passed = fn(r.evidence);
    } catch (const std::exception& e) {
      r.passed = false;
      r.evidence = std::string("error: ") + e.what();
    }
    report.checks.push_back(std::move(r));
  };
  const auto& s = b.structure;
  const std::size_t lines = s.line_count();
  const std::size_t points = s.point_count();

  add(check::kProduct, [&](std::string& ev) {
    const ExactMatrix dc = b.D * b.C;
    std::size_t equal = 0;
    for (std::size_t i = 0; i < dc.rows(); ++i)
      for (std::size_t j = 0; j < dc.cols(); ++j)
        if (i < b.E.rows() && j < b.E.cols() && dc(i, j) == b.E(i, j)) ++equal;
    ev = count_text(equal) + " of " + count_text(dc.rows() * dc.cols()) + " entries agree";
    return dc == b.E;
  });
  add(check::kZeroPattern, [&](std::string& ev) {
    if (b.E.rows() != lines || b.E.cols() != points) {
      ev = "E has the wrong shape";
      return false;
    }
    std::size_t zeros = 0;
    std::size_t mismatches = 0;
    for (std::size_t i = 0; i < lines; ++i)
      for (std::size_t j = 0; j < points; ++j) {
        const bool zero = b.E(i, j).is_zero();
        zeros += zero ? 1 : 0;
        mismatches += (zero != s.on_line(i, j)) ? 1 : 0;
      }
    ev = count_text(zeros) + " zeros, " + count_text(IncidenceMatrix(s).incident_count()) + " incidences, " +
         count_text(mismatches) + " mismatches";
    return mismatches == 0;
  });
  add(check::kRankB, [&](std::string& ev) {
    const std::size_t r = rank(b.B);
    ev = "rank " + count_text(r);
    return r == 3;
  });
  add(check::kRankA, [&](std::string& ev) {
    const std::size_t r = rank(b.A);
    ev = "rank " + count_text(r);
    return r == 6;
  });
  add(check::kSymmetricA, [&](std::string& ev) {
    ev = count_text(b.A.rows()) + "x" + count_text(b.A.cols());
    return b.A == b.A.transpose();
  });
  add(check::kSymmetricPattern, [&](std::string& ev) {
    const SignPattern p = sgn(b.A);
    ev = count_text(p.count(Sign::Plus)) + " plus, " + count_text(p.count(Sign::Minus)) + " minus, " +
         count_text(p.count(Sign::Zero)) + " zero";
    return p.is_symmetric();
  });
  add(check::kOnesRow, [&](std::string& ev) {
    std::size_t ones = 0;
    for (std::size_t j = 0; j < b.C.cols(); ++j) ones += (b.C.rows() == 3 && b.C(2, j) == Scalar::one(b.C.context())) ? 1 : 0;
    ev = count_text(ones) + " of " + count_text(b.C.cols());
    return b.C.rows() == 3 && ones == b.C.cols();
  });
  add(check::kBlocksB, [&](std::string& ev) {
    ev = "reassembled from D, C, E";
    return b.B == block_assemble({{{Block::identity(3), b.C}, {b.D, b.E}}}, b.B.context());
  });
  add(check::kFactorB, [&](std::string& ev) {
    const FieldContext& f = b.B.context();
    const std::size_t n = b.D.rows();
    const std::size_t m = b.C.cols();
    ExactMatrix left(3 + n, 3, f);
    ExactMatrix right(3, 3 + m, f);
    for (std::size_t k = 0; k < 3; ++k) {
      left(k, k) = Scalar::one(f);
      right(k, k) = Scalar::one(f);
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < 3; ++k) left(3 + i, k) = b.D(i, k);
    for (std::size_t k = 0; k < 3; ++k)
      for (std::size_t j = 0; j < m; ++j) right(k, 3 + j) = b.C(k, j);
    ev = "inner dimension 3";
    return left * right == b.B;
  });
  add(check::kBlocksA, [&](std::string& ev) {
    ev = "reassembled from B";
    return b.A == block_assemble({{{Block::zero(), b.B}, {b.B.transpose(), Block::zero()}}}, b.A.context());
  });
  add(check::kRealization, [&](std::string& ev) {
    ev = "over " + b.realization.field.name();
    return validate_realization(s, b.realization);
  });
  add(check::kWitness, [&](std::string& ev) {
    MinrankWitness w{sgn(b.B), b.B, 3};
    ev = "sgn and rank recomputed";
    return verify_witness(w);
  });
  add(check::kCertificate, [&](std::string& ev) {
    const auto& c = b.nonrealizability;
    ev = to_string(c.verdict) + " over " + c.field.name() + ", " + count_text(c.constraints.size()) + " constraint(s)";
    return c.verdict == Verdict::NonRealizable && c.field == FieldContext::rationals() && !c.constraints.empty() &&
           recheck_certificate(c, s);
  });
  return report;
}

}  // namespace signrank
