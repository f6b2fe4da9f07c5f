#ifndef SIGNRANK_SERIALIZE_HPP
#define SIGNRANK_SERIALIZE_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "signrank/counterexample.hpp"
#include "signrank/incidence.hpp"
#include "signrank/matrix.hpp"
#include "signrank/minrank.hpp"
#include "signrank/rationalizer.hpp"
#include "signrank/realizer.hpp"
#include "signrank/sign_pattern.hpp"

// JSON forms for every artifact. Rationals are always strings ("p/q" or
// "p"); elements of Q(sqrt d) are objects {"a", "b", "d"}. Keys keep
// insertion order so output is stable. Every from_json_* throws ParseError
// on malformed input.
namespace signrank::json {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json to_json(const Scalar& x);
/// Accepts a rational string or an {a, b, d} object; lifts into `field`.
Scalar scalar_from_json(const Json& j, const FieldContext& field);

/// {"base": name, "coeffs": [scalar, ...]} (constant term first).
Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

/// {"context", "rows", "cols", "entries": [[scalar]]}.
Json to_json(const ExactMatrix& m);
ExactMatrix exact_matrix_from_json(const Json& j);

/// As ExactMatrix, context "poly:...", entries are coefficient lists.
Json to_json(const PolyMatrix& m);
PolyMatrix poly_matrix_from_json(const Json& j);

/// A polynomial matrix file whose entries may also be {"num", "den"}
/// coefficient-list pairs. Rows are returned as rational functions (plain
/// entries get denominator 1); `has_denominators` reports whether any
/// non-trivial denominator was present.
std::vector<std::vector<RationalFunction>> rational_function_rows_from_json(const Json& j, FieldContext* base,
                                                                             bool* has_denominators);

Json to_json(const SignPattern& p);
SignPattern sign_pattern_from_json(const Json& j);

Json to_json(const IncidenceStructure& s);
IncidenceStructure incidence_from_json(const Json& j);

Json to_json(const Realization& r);
Realization realization_from_json(const Json& j);

Json to_json(const TraceStep& t);
TraceStep trace_step_from_json(const Json& j);

Json to_json(const RealizabilityCertificate& c);
RealizabilityCertificate certificate_from_json(const Json& j);

Json to_json(const RationalizationCertificate& c);
RationalizationCertificate rationalization_certificate_from_json(const Json& j);

Json to_json(const NeedsRefinement& n);

Json to_json(const MinrankWitness& w);
MinrankWitness minrank_witness_from_json(const Json& j);

Json to_json(const BipartiteGraph& g);
Json to_json(const BundleReport& r);
Json to_json(const SignPatternSuite& s);

/// Two-space indent plus trailing newline.
std::string dump(const Json& j);
Json parse(const std::string& text);

}  // namespace signrank::json

#endif  // SIGNRANK_SERIALIZE_HPP
