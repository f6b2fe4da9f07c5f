#ifndef SIGNRANK_REALIZER_HPP
#define SIGNRANK_REALIZER_HPP

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "signrank/field.hpp"
#include "signrank/incidence.hpp"
#include "signrank/polynomial.hpp"

namespace signrank {

using Triple = std::array<Scalar, 3>;
/// Homogeneous triple whose coordinates are polynomials in the live parameter t.
using PolyTriple = std::array<Polynomial, 3>;

/// Exact homogeneous coordinates for every point and line of a structure.
struct Realization {
  FieldContext field;
  std::map<std::string, Triple> points;
  /// Indexed like IncidenceStructure::lines().
  std::vector<Triple> lines;

  friend bool operator==(const Realization&, const Realization&) = default;
};

/// Checks every line/point pair (incident iff the dot product vanishes),
/// that no triple is zero, and that points and lines are pairwise distinct
/// projectively. Returns false on any label or size mismatch.
bool validate_realization(const IncidenceStructure& s, const Realization& r);

enum class Verdict { Realizable, NonRealizable, Inconclusive };

std::string to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

/// One coordinatization step. `kind` is one of:
///   frame       target point gets a standard frame vector
///   line        target line = normalized cross product of source points
///   intersect   target point = normalized cross product of two source lines
///   parameter   target point = P + t*Q on source line (source: line, P, Q)
///   specialize  as parameter, with t fixed to the rational in source[3]
///   constraint  det(target, P, Q) for source line through P and Q; nonzero
///   identity    as constraint, but the determinant vanished identically
struct TraceStep {
  std::size_t step = 0;
  std::string kind;
  std::string target;
  std::vector<std::string> source;
  std::vector<Polynomial> result;

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct FrameAttempt {
  std::vector<std::string> frame;
  Verdict verdict = Verdict::Inconclusive;
  std::string note;

  friend bool operator==(const FrameAttempt&, const FrameAttempt&) = default;
};

/// Evidence produced by coordinatize(). Realizable carries a witness;
/// NonRealizable carries the constraint trace for `frame`, valid under the
/// assumption that the frame points are in general position.
struct RealizabilityCertificate {
  Verdict verdict = Verdict::Inconclusive;
  FieldContext field;
  std::vector<std::string> frame;
  std::vector<TraceStep> trace;
  /// Nonzero univariate polynomials over Q in t that must all vanish.
  std::vector<Polynomial> constraints;
  /// Polynomials in t that must not vanish (removed common factors).
  std::vector<Polynomial> side_conditions;
  std::optional<Realization> witness;
  /// Parameter value used by the witness, when one was live.
  std::optional<Scalar> parameter;
  std::string reason;
  std::vector<FrameAttempt> frames_tried;

  friend bool operator==(const RealizabilityCertificate&, const RealizabilityCertificate&) = default;
};

/// Upper limit on frames tried before a verdict.
inline constexpr std::size_t kMaxFrames = 64;

/// Decides realizability over Q or Q(sqrt d) by sequential projective
/// coordinatization from a four-point frame, keeping at most one live
/// parameter. Frames are tried in a fixed order; the first Realizable frame
/// wins, otherwise NonRealizable is reported when some frame refutes and
/// none realizes. Throws NoValidFrame, InvalidStructure.
RealizabilityCertificate coordinatize(const IncidenceStructure& s, const FieldContext& field);

/// Frames in the order coordinatize() tries them (at most kMaxFrames).
std::vector<std::vector<std::string>> candidate_frames(const IncidenceStructure& s);

/// Re-verifies a certificate without trusting the solver. Realizable:
/// validates the witness. NonRealizable: replays the trace step by step,
/// re-derives each constraint as a 3x3 determinant, and repeats the root
/// analysis. Inconclusive: true. Returns false when the claim does not hold;
/// throws TraceMismatch when a trace step does not reproduce its result.
bool recheck_certificate(const RealizabilityCertificate& c, const IncidenceStructure& s);

/// Name of line i: member labels concatenated ("ABEF"), comma-joined when
/// any label is longer than one character.
std::string line_name(const IncidenceStructure& s, std::size_t line);

namespace geometry {

Triple cross(const Triple& u, const Triple& v);
Scalar dot(const Triple& u, const Triple& v);
bool is_zero(const Triple& u);
/// u and v span the same projective point (both nonzero).
bool proportional(const Triple& u, const Triple& v);

PolyTriple cross(const PolyTriple& u, const PolyTriple& v);
Polynomial dot(const PolyTriple& u, const PolyTriple& v);
/// Determinant of the 3x3 matrix with rows u, v, w, by cofactor expansion.
Polynomial det3(const PolyTriple& u, const PolyTriple& v, const PolyTriple& w);
/// Divides out the polynomial gcd and rational content, making the first
/// nonzero coordinate's leading coefficient positive. The removed gcd (if
/// non-constant) is returned through `removed`; an all-zero triple is
/// returned unchanged with `removed` set to the zero polynomial.
PolyTriple normalize(const PolyTriple& u, Polynomial* removed);
/// Primitive integer form with positive leading coefficient, as a polynomial.
Polynomial normalize(const Polynomial& p);
Triple evaluate(const PolyTriple& u, const Scalar& t, const FieldContext& field);

}  // namespace geometry

}  // namespace signrank

#endif  // SIGNRANK_REALIZER_HPP
