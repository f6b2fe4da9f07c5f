#include "signrank/serialize.hpp"

#include <exception>

#include "signrank/errors.hpp"

namespace signrank::json {

namespace {

const Json& field_of(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
  return j.at(key);
}

const Json& array_of(const Json& j, const char* key) {
  const Json& v = field_of(j, key);
  if (!v.is_array()) throw ParseError(std::string("'") + key + "' must be an array");
  return v;
}

std::string string_of(const Json& j) {
  if (!j.is_string()) throw ParseError("expected a string, got " + j.dump());
  return j.get<std::string>();
}

std::size_t size_of(const Json& j) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    throw ParseError("expected a nonnegative integer, got " + j.dump());
  return j.get<std::size_t>();
}

long long integer_of(const Json& j) {
  if (!j.is_number_integer()) throw ParseError("expected an integer, got " + j.dump());
  return j.get<long long>();
}

FieldContext context_of_json(const Json& j) {
  try {
    return FieldContext::parse(string_of(j));
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad field: ") + e.what());
  }
}

std::vector<std::string> strings_of(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of strings");
  std::vector<std::string> out;
  for (const auto& x : j) out.push_back(string_of(x));
  return out;
}

Json coeff_list(const Polynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_json(c));
  return out;
}

Polynomial poly_from_coeffs(const Json& j, const FieldContext& base) {
  if (!j.is_array()) throw ParseError("polynomial coefficients must be an array");
  std::vector<Scalar> cs;
  for (const auto& c : j) cs.push_back(scalar_from_json(c, base));
  return Polynomial(base, std::move(cs));
}

template <class T, class Fn>
Json matrix_json(const Matrix<T>& m, Fn&& entry) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(entry(m(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"context", m.context().name()}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

// Checks the declared shape against the entries and returns it.
std::pair<std::size_t, std::size_t> matrix_shape(const Json& j) {
  const std::size_t rows = size_of(field_of(j, "rows"));
  const std::size_t cols = size_of(field_of(j, "cols"));
  const Json& entries = array_of(j, "entries");
  if (entries.size() != rows) throw ParseError("entries has the wrong number of rows");
  for (const auto& row : entries)
    if (!row.is_array() || row.size() != cols) throw ParseError("entries row has the wrong length");
  return {rows, cols};
}

Json triple_json(const Triple& t) { return Json::array({to_json(t[0]), to_json(t[1]), to_json(t[2])}); }

Triple triple_from_json(const Json& j, const FieldContext& f) {
  if (!j.is_array() || j.size() != 3) throw ParseError("expected a triple");
  return {scalar_from_json(j[0], f), scalar_from_json(j[1], f), scalar_from_json(j[2], f)};
}

Json polys_json(const std::vector<Polynomial>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(to_json(p));
  return out;
}

std::vector<Polynomial> polys_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of polynomials");
  std::vector<Polynomial> out;
  for (const auto& p : j) out.push_back(polynomial_from_json(p));
  return out;
}

}  // namespace

Json to_json(const Rational& q) { return signrank::to_string(q); }

Rational rational_from_json(const Json& j) {
  try {
    return parse_rational(string_of(j));
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad rational: ") + e.what());
  }
}

Json to_json(const Scalar& x) {
  if (x.d() == 0) return to_json(x.a());
  return Json{{"a", to_json(x.a())}, {"b", to_json(x.b())}, {"d", x.d()}};
}

Scalar scalar_from_json(const Json& j, const FieldContext& field) {
  const FieldContext f = field.scalar_field();
  if (j.is_string()) return Scalar::embed(rational_from_json(j), f);
  if (!j.is_object()) throw ParseError("bad scalar " + j.dump());
  const long d = static_cast<long>(integer_of(field_of(j, "d")));
  if (d != f.d()) throw ParseError("scalar radicand " + std::to_string(d) + " does not match " + f.name());
  return Scalar(rational_from_json(field_of(j, "a")), rational_from_json(field_of(j, "b")), d);
}

Json to_json(const Polynomial& p) { return Json{{"base", p.base().name()}, {"coeffs", coeff_list(p)}}; }

Polynomial polynomial_from_json(const Json& j) {
  const FieldContext base = context_of_json(field_of(j, "base"));
  if (base.kind() == FieldContext::Kind::PolyOver) throw ParseError("polynomial base must be a scalar field");
  return poly_from_coeffs(field_of(j, "coeffs"), base);
}

Json to_json(const ExactMatrix& m) {
  return matrix_json(m, [](const Scalar& x) { return to_json(x); });
}

ExactMatrix exact_matrix_from_json(const Json& j) {
  const FieldContext ctx = context_of_json(field_of(j, "context"));
  if (ctx.kind() == FieldContext::Kind::PolyOver) throw ParseError("expected a scalar matrix");
  auto [rows, cols] = matrix_shape(j);
  ExactMatrix m(rows, cols, ctx);
  const Json& entries = j.at("entries");
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar_from_json(entries[r][c], ctx);
  return m;
}

Json to_json(const PolyMatrix& m) {
  return matrix_json(m, [](const Polynomial& p) { return coeff_list(p); });
}

PolyMatrix poly_matrix_from_json(const Json& j) {
  FieldContext base;
  bool has_den = false;
  auto rows = rational_function_rows_from_json(j, &base, &has_den);
  if (has_den) throw ParseError("matrix has denominators; clear them first");
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? size_of(field_of(j, "cols")) : rows.front().size();
  PolyMatrix m(r, c, FieldContext::poly_over(base));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < c; ++k) m(i, k) = rows[i][k].num;
  return m;
}

std::vector<std::vector<RationalFunction>> rational_function_rows_from_json(const Json& j, FieldContext* base,
                                                                             bool* has_denominators) {
  const FieldContext ctx = context_of_json(field_of(j, "context"));
  if (ctx.kind() != FieldContext::Kind::PolyOver) throw ParseError("expected a poly: context");
  const FieldContext f = ctx.scalar_field();
  auto [rows, cols] = matrix_shape(j);
  const Polynomial one = Polynomial::constant(Scalar::one(f), f);
  std::vector<std::vector<RationalFunction>> out(rows);
  bool any_den = false;
  const Json& entries = j.at("entries");
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      const Json& e = entries[r][c];
      if (e.is_object()) {
        RationalFunction rf{poly_from_coeffs(field_of(e, "num"), f), poly_from_coeffs(field_of(e, "den"), f)};
        if (rf.den.is_zero()) throw ZeroDenominator("zero denominator in entry (" + std::to_string(r + 1) + "," +
                                                    std::to_string(c + 1) + ")");
        any_den = any_den || rf.den.degree() > 0 || !(rf.den == one);
        out[r].push_back(std::move(rf));
      } else {
        out[r].push_back({poly_from_coeffs(e, f), one});
      }
    }
  if (base != nullptr) *base = f;
  if (has_denominators != nullptr) *has_denominators = any_den;
  return out;
}

Json to_json(const SignPattern& p) {
  Json out = Json::array();
  for (const auto& s : p.to_strings()) out.push_back(s);
  return out;
}

SignPattern sign_pattern_from_json(const Json& j) {
  const Json& rows = j.is_object() ? array_of(j, "pattern") : j;
  return SignPattern::parse(strings_of(rows));
}

Json to_json(const IncidenceStructure& s) {
  Json lines = Json::array();
  for (const auto& l : s.lines()) lines.push_back(l);
  return Json{{"points", s.points()}, {"lines", lines}};
}

IncidenceStructure incidence_from_json(const Json& j) {
  std::vector<std::vector<std::string>> lines;
  for (const auto& l : array_of(j, "lines")) lines.push_back(strings_of(l));
  return IncidenceStructure(strings_of(array_of(j, "points")), std::move(lines));
}

Json to_json(const Realization& r) {
  Json points = Json::object();
  for (const auto& [label, p] : r.points) points[label] = triple_json(p);
  Json lines = Json::array();
  for (const auto& l : r.lines) lines.push_back(triple_json(l));
  return Json{{"field", r.field.name()}, {"points", points}, {"lines", lines}};
}

Realization realization_from_json(const Json& j) {
  Realization r;
  r.field = context_of_json(field_of(j, "field"));
  const Json& points = field_of(j, "points");
  if (!points.is_object()) throw ParseError("'points' must be an object");
  for (const auto& [label, p] : points.items()) r.points.emplace(label, triple_from_json(p, r.field));
  for (const auto& l : array_of(j, "lines")) r.lines.push_back(triple_from_json(l, r.field));
  return r;
}

Json to_json(const TraceStep& t) {
  return Json{{"step", t.step},     {"kind", t.kind},
              {"target", t.target}, {"source", t.source},
              {"result", polys_json(t.result)}};
}

TraceStep trace_step_from_json(const Json& j) {
  TraceStep t;
  t.step = size_of(field_of(j, "step"));
  t.kind = string_of(field_of(j, "kind"));
  t.target = string_of(field_of(j, "target"));
  t.source = strings_of(field_of(j, "source"));
  t.result = polys_from_json(field_of(j, "result"));
  return t;
}

Json to_json(const RealizabilityCertificate& c) {
  Json trace = Json::array();
  for (const auto& t : c.trace) trace.push_back(to_json(t));
  Json tried = Json::array();
  for (const auto& f : c.frames_tried)
    tried.push_back(Json{{"frame", f.frame}, {"verdict", to_string(f.verdict)}, {"note", f.note}});
  Json out{{"verdict", to_string(c.verdict)},
           {"field", c.field.name()},
           {"frame", c.frame},
           {"trace", trace},
           {"constraints", polys_json(c.constraints)},
           {"side_conditions", polys_json(c.side_conditions)}};
  if (c.witness) out["witness"] = to_json(*c.witness);
  if (c.parameter) out["parameter"] = to_json(*c.parameter);
  out["reason"] = c.reason;
  out["frames_tried"] = tried;
  return out;
}

RealizabilityCertificate certificate_from_json(const Json& j) {
  RealizabilityCertificate c;
  try {
    c.verdict = verdict_from_string(string_of(field_of(j, "verdict")));
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(e.what());
  }
  c.field = context_of_json(field_of(j, "field"));
  c.frame = strings_of(field_of(j, "frame"));
  for (const auto& t : array_of(j, "trace")) c.trace.push_back(trace_step_from_json(t));
  c.constraints = polys_from_json(field_of(j, "constraints"));
  c.side_conditions = polys_from_json(field_of(j, "side_conditions"));
  if (j.contains("witness")) c.witness = realization_from_json(j.at("witness"));
  if (j.contains("parameter")) c.parameter = scalar_from_json(j.at("parameter"), c.field);
  if (j.contains("reason")) c.reason = string_of(j.at("reason"));
  if (j.contains("frames_tried")) {
    for (const auto& f : j.at("frames_tried")) {
      FrameAttempt a;
      a.frame = strings_of(field_of(f, "frame"));
      a.verdict = verdict_from_string(string_of(field_of(f, "verdict")));
      a.note = string_of(field_of(f, "note"));
      c.frames_tried.push_back(std::move(a));
    }
  }
  return c;
}

Json to_json(const RationalizationCertificate& c) {
  Json entries = Json::array();
  for (const auto& e : c.per_entry)
    entries.push_back(
        Json{{"row", e.row}, {"col", e.col}, {"root_count", e.root_count}, {"sign_at_beta", e.sign_at_beta}});
  return Json{{"beta", to_json(c.beta)},
              {"window", Json{{"lo", to_json(c.window.lo)}, {"hi", to_json(c.window.hi)}}},
              {"per_entry", entries},
              {"rank_before", c.rank_before},
              {"rank_after", c.rank_after}};
}

RationalizationCertificate rationalization_certificate_from_json(const Json& j) {
  RationalizationCertificate c;
  const Json& beta = field_of(j, "beta");
  c.beta = beta.is_string() ? Scalar(rational_from_json(beta))
                            : scalar_from_json(beta, FieldContext::quadratic(static_cast<long>(
                                                         integer_of(field_of(beta, "d")))));
  const Json& w = field_of(j, "window");
  try {
    c.window = Window(rational_from_json(field_of(w, "lo")), rational_from_json(field_of(w, "hi")));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  for (const auto& e : array_of(j, "per_entry")) {
    c.per_entry.push_back({size_of(field_of(e, "row")), size_of(field_of(e, "col")),
                           static_cast<int>(integer_of(field_of(e, "root_count"))),
                           static_cast<int>(integer_of(field_of(e, "sign_at_beta")))});
  }
  c.rank_before = size_of(field_of(j, "rank_before"));
  c.rank_after = size_of(field_of(j, "rank_after"));
  return c;
}

Json to_json(const NeedsRefinement& n) {
  Json entries = Json::array();
  for (const auto& e : n.entries)
    entries.push_back(Json{{"row", e.row + 1},
                           {"col", e.col + 1},
                           {"root_count", e.root_count},
                           {"endpoint_root", e.endpoint_root}});
  return Json{{"status", "needs_refinement"},
              {"window", Json{{"lo", to_json(n.window.lo)}, {"hi", to_json(n.window.hi)}}},
              {"entries", entries}};
}

Json to_json(const MinrankWitness& w) {
  return Json{{"pattern", to_json(w.pattern)}, {"rank", w.rank}, {"witness", to_json(w.witness)}};
}

MinrankWitness minrank_witness_from_json(const Json& j) {
  return MinrankWitness{sign_pattern_from_json(field_of(j, "pattern")), exact_matrix_from_json(field_of(j, "witness")),
                        size_of(field_of(j, "rank"))};
}

Json to_json(const BipartiteGraph& g) {
  Json edges = Json::array();
  for (const auto& [l, r] : g.edges) edges.push_back(Json::array({l + 1, r + 1}));
  return Json{{"left", g.left}, {"right", g.right}, {"edges", edges}};
}

Json to_json(const BundleReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"evidence", c.evidence}});
  return Json{{"all_passed", r.all_passed()}, {"checks", checks}};
}

Json to_json(const SignPatternSuite& s) {
  return Json{{"D", to_json(s.D)}, {"C", to_json(s.C)}, {"E", to_json(s.E)}, {"B", to_json(s.B)}, {"A", to_json(s.A)}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace signrank::json
