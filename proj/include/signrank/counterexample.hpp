#ifndef SIGNRANK_COUNTEREXAMPLE_HPP
#define SIGNRANK_COUNTEREXAMPLE_HPP

#include <string>
#include <vector>

#include "signrank/incidence.hpp"
#include "signrank/matrix.hpp"
#include "signrank/realizer.hpp"
#include "signrank/sign_pattern.hpp"

namespace signrank {

/// Applies a projective transformation (rational, chosen by search) so that
/// no point lies on the line at infinity, then scales every point to z = 1
/// and every line to first nonzero coefficient 1. Incidences are preserved.
/// The line z = 0 is tried first, so affine inputs only get rescaled.
/// Throws NoAvoidingLineFound if every integer line with max-norm <= 10
/// passes through some point.
Realization normalize_affine(const Realization& r);

struct SignPatternSuite {
  SignPattern D;
  SignPattern C;
  SignPattern E;
  SignPattern B;
  SignPattern A;
};

/// The full chain: a Q(sqrt 5) realization of the nine-point configuration,
/// its line matrix D (9x3) and point matrix C (3x9), E = DC, the rank-3
/// B = [[I3, C], [D, E]], the symmetric A = [[0, B], [B^T, 0]], and the
/// certificate that the configuration has no rational realization.
struct CounterexampleBundle {
  IncidenceStructure structure;
  Realization realization;
  RealizabilityCertificate realization_certificate;
  ExactMatrix D;
  ExactMatrix C;
  ExactMatrix E;
  ExactMatrix B;
  ExactMatrix A;
  SignPatternSuite patterns;
  RealizabilityCertificate nonrealizability;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string evidence;
};

struct BundleReport {
  std::vector<CheckResult> checks;

  bool all_passed() const;
  const CheckResult* find(const std::string& name) const;
};

/// Builds and verifies the bundle. Throws std::logic_error if any check in
/// verify_bundle() fails on the freshly built data.
CounterexampleBundle build_bundle();

/// Recomputes every invariant from the stored matrices; never throws on a
/// failed check, which instead shows up as a report entry.
BundleReport verify_bundle(const CounterexampleBundle& b);

SignPatternSuite sign_pattern_suite(const CounterexampleBundle& b);

namespace check {
inline constexpr const char* kProduct = "E = DC";
inline constexpr const char* kZeroPattern = "zero pattern of E equals incidences";
inline constexpr const char* kRankB = "rank(B) = 3";
inline constexpr const char* kRankA = "rank(A) = 6";
inline constexpr const char* kSymmetricA = "A symmetric";
inline constexpr const char* kSymmetricPattern = "sgn(A) symmetric";
inline constexpr const char* kOnesRow = "third row of C all ones";
inline constexpr const char* kBlocksB = "B = [[I3, C], [D, E]]";
inline constexpr const char* kFactorB = "B = [I3; D][I3, C]";
inline constexpr const char* kBlocksA = "A = [[0, B], [B^T, 0]]";
inline constexpr const char* kRealization = "realization valid";
inline constexpr const char* kWitness = "B witnesses mr(sgn(B)) <= 3";
inline constexpr const char* kCertificate = "no rational realization (certificate rechecks)";
}  // namespace check

}  // namespace signrank

#endif  // SIGNRANK_COUNTEREXAMPLE_HPP
