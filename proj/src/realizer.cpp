#include "signrank/realizer.hpp"

#include <algorithm>
#include <set>

#include "signrank/errors.hpp"
#include "signrank/roots.hpp"

namespace signrank {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Realizable:
      return "Realizable";
    case Verdict::NonRealizable:
      return "NonRealizable";
    case Verdict::Inconclusive:
      break;
  }
  return "Inconclusive";
}

Verdict verdict_from_string(const std::string& s) {
  if (s == "Realizable") return Verdict::Realizable;
  if (s == "NonRealizable") return Verdict::NonRealizable;
  if (s == "Inconclusive") return Verdict::Inconclusive;
  throw ParseError("unknown verdict '" + s + "'");
}

std::string line_name(const IncidenceStructure& s, std::size_t line) {
  const auto& members = s.lines().at(line);
  bool single = std::all_of(members.begin(), members.end(), [](const std::string& l) { return l.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (!single && i > 0) out += ",";
    out += members[i];
  }
  return out;
}

namespace geometry {

Triple cross(const Triple& u, const Triple& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

Scalar dot(const Triple& u, const Triple& v) { return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]; }

bool is_zero(const Triple& u) { return u[0].is_zero() && u[1].is_zero() && u[2].is_zero(); }

bool proportional(const Triple& u, const Triple& v) { return is_zero(cross(u, v)); }

PolyTriple cross(const PolyTriple& u, const PolyTriple& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

Polynomial dot(const PolyTriple& u, const PolyTriple& v) { return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]; }

Polynomial det3(const PolyTriple& u, const PolyTriple& v, const PolyTriple& w) {
  // Expansion along the first row.
  return u[0] * (v[1] * w[2] - v[2] * w[1]) - u[1] * (v[0] * w[2] - v[2] * w[0]) +
         u[2] * (v[0] * w[1] - v[1] * w[0]);
}

Polynomial normalize(const Polynomial& p) {
  if (p.is_zero()) return p;
  return from_integers(primitive_integer_form(p));
}

PolyTriple normalize(const PolyTriple& u, Polynomial* removed) {
  if (u[0].is_zero() && u[1].is_zero() && u[2].is_zero()) {
    *removed = Polynomial();
    return u;
  }
  Polynomial g = gcd(gcd(u[0], u[1]), u[2]);
  PolyTriple out = u;
  if (g.degree() > 0) {
    for (auto& c : out) c = c.exact_div(g);
    *removed = normalize(g);
  } else {
    *removed = Polynomial::from_ints({1});
  }
  // Rational content across all three coordinates.
  Integer den_lcm = 1;
  Integer num_gcd = 0;
  for (const auto& c : out)
    for (const auto& k : c.coeffs()) {
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), k.a().get_den_mpz_t());
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), k.a().get_num_mpz_t());
    }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  for (const auto& c : out) {
    if (c.is_zero()) continue;
    if (sign(c.leading()) < 0) scale = -scale;
    break;
  }
  for (auto& c : out) c *= Scalar(scale);
  return out;
}

Triple evaluate(const PolyTriple& u, const Scalar& t, const FieldContext& field) {
  Triple out;
  const Scalar x = Scalar::embed(t, field);
  for (std::size_t i = 0; i < 3; ++i) {
    Scalar acc = Scalar::zero(field);
    const auto& cs = u[i].coeffs();
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * x + Scalar::embed(*it, field);
    out[i] = acc;
  }
  return out;
}

}  // namespace geometry

bool validate_realization(const IncidenceStructure& s, const Realization& r) {
  if (r.lines.size() != s.line_count() || r.points.size() != s.point_count()) return false;
  std::vector<Triple> pts;
  for (const auto& label : s.points()) {
    auto it = r.points.find(label);
    if (it == r.points.end()) return false;
    pts.push_back(it->second);
  }
  try {
    for (const auto& p : pts)
      if (geometry::is_zero(p)) return false;
    for (const auto& l : r.lines)
      if (geometry::is_zero(l)) return false;
    for (std::size_t i = 0; i < s.line_count(); ++i)
      for (std::size_t j = 0; j < s.point_count(); ++j)
        if (geometry::dot(r.lines[i], pts[j]).is_zero() != s.on_line(i, j)) return false;
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j)
        if (geometry::proportional(pts[i], pts[j])) return false;
    for (std::size_t i = 0; i < r.lines.size(); ++i)
      for (std::size_t j = i + 1; j < r.lines.size(); ++j)
        if (geometry::proportional(r.lines[i], r.lines[j])) return false;
  } catch (const ContextMismatch&) {
    return false;
  }
  return true;
}

namespace {

const FieldContext kQ = FieldContext::rationals();

Polynomial constant_poly(long c) { return Polynomial::from_ints({c}); }
Polynomial t_poly() { return Polynomial::variable(); }

PolyTriple constant_triple(long a, long b, long c) { return {constant_poly(a), constant_poly(b), constant_poly(c)}; }

PolyTriple frame_vector(std::size_t k) {
  switch (k) {
    case 0:
      return constant_triple(1, 0, 0);
    case 1:
      return constant_triple(0, 1, 0);
    case 2:
      return constant_triple(0, 0, 1);
    default:
      return constant_triple(1, 1, 1);
  }
}

PolyTriple along_line(const PolyTriple& p, const PolyTriple& q, const Polynomial& t) {
  return {p[0] + t * q[0], p[1] + t * q[1], p[2] + t * q[2]};
}

void add_unique(std::vector<Polynomial>& list, const Polynomial& p) {
  if (std::find(list.begin(), list.end(), p) == list.end()) list.push_back(p);
}

// Values tried for specialized or free parameters, in order.
const std::vector<Rational>& sample_values() {
  static const std::vector<Rational> values = {
      make_rational(2),    make_rational(-3),   make_rational(5, 2), make_rational(7),     make_rational(-1, 3),
      make_rational(4, 7), make_rational(11),   make_rational(-5, 4), make_rational(3, 8), make_rational(13)};
  return values;
}

// Points no three of which share a structure line.
bool in_general_position(const IncidenceStructure& s, const std::vector<std::size_t>& pts) {
  for (std::size_t l = 0; l < s.line_count(); ++l) {
    std::size_t on = 0;
    for (std::size_t p : pts) on += s.on_line(l, p) ? 1 : 0;
    if (on >= 3) return false;
  }
  return true;
}

std::vector<std::size_t> label_order(const IncidenceStructure& s) {
  std::vector<std::size_t> order(s.point_count());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return s.points()[a] < s.points()[b]; });
  return order;
}

// One coordinatization pass from a fixed frame. Parameters are numbered in
// creation order; those with an entry in `presets` are fixed to it.
struct Construction {
  std::vector<std::optional<PolyTriple>> points;
  std::vector<std::optional<PolyTriple>> lines;
  std::vector<std::pair<std::size_t, std::size_t>> line_def;
  std::vector<TraceStep> trace;
  std::vector<Polynomial> constraints;
  std::vector<Polynomial> side_conditions;
  bool live = false;
  bool specialized = false;
  bool degenerate = false;
  bool overflow = false;
};

class Coordinatizer {
 public:
  Coordinatizer(const IncidenceStructure& s, const std::vector<std::size_t>& frame, const std::vector<Rational>& presets)
      : s_(s), frame_(frame), presets_(presets), order_(label_order(s)) {
    c_.points.resize(s.point_count());
    c_.lines.resize(s.line_count());
    c_.line_def.resize(s.line_count());
    assigned_at_.assign(s.point_count(), 0);
  }

  Construction run() {
    for (std::size_t k = 0; k < frame_.size(); ++k) {
      assign(frame_[k], frame_vector(k), "frame", {});
    }
    while (true) {
      if (!determine_lines()) return c_;
      if (intersect_one()) {
        if (c_.degenerate) return c_;
        continue;
      }
      if (parametrize_one()) {
        if (c_.overflow) return c_;
        continue;
      }
      break;
    }
    for (std::size_t p = 0; p < s_.point_count(); ++p) {
      if (!c_.points[p]) {
        c_.overflow = true;  // a free point would need two more parameters
        return c_;
      }
    }
    if (!determine_lines()) return c_;
    collect_constraints();
    return c_;
  }

 private:
  void assign(std::size_t p, PolyTriple v, const std::string& kind, std::vector<std::string> source) {
    c_.points[p] = v;
    assigned_at_[p] = ++clock_;
    push_step(kind, s_.points()[p], std::move(source), {v[0], v[1], v[2]});
  }

  void push_step(const std::string& kind, const std::string& target, std::vector<std::string> source,
                 std::vector<Polynomial> result) {
    c_.trace.push_back(TraceStep{c_.trace.size() + 1, kind, target, std::move(source), std::move(result)});
  }

  // Records a removed factor; false when the triple vanished identically.
  bool note_removed(const Polynomial& removed) {
    if (removed.is_zero()) {
      c_.degenerate = true;
      add_unique(c_.side_conditions, removed);
      return false;
    }
    if (removed.degree() > 0) add_unique(c_.side_conditions, removed);
    return true;
  }

  std::vector<std::size_t> assigned_members(std::size_t line) const {
    std::vector<std::size_t> members;
    for (std::size_t p : s_.line_members(line))
      if (c_.points[p]) members.push_back(p);
    std::sort(members.begin(), members.end(),
              [&](std::size_t a, std::size_t b) { return assigned_at_[a] < assigned_at_[b]; });
    return members;
  }

  bool determine_lines() {
    for (std::size_t l = 0; l < s_.line_count(); ++l) {
      if (c_.lines[l]) continue;
      auto members = assigned_members(l);
      if (members.size() < 2) continue;
      const std::size_t p = members[0];
      const std::size_t q = members[1];
      Polynomial removed;
      PolyTriple v = geometry::normalize(geometry::cross(*c_.points[p], *c_.points[q]), &removed);
      c_.lines[l] = v;
      c_.line_def[l] = {p, q};
      push_step("line", line_name(s_, l), {s_.points()[p], s_.points()[q]}, {v[0], v[1], v[2]});
      if (!note_removed(removed)) return false;
    }
    return true;
  }

  std::vector<std::size_t> determined_lines_through(std::size_t p) const {
    std::vector<std::size_t> out;
    for (std::size_t l : s_.lines_through(p))
      if (c_.lines[l]) out.push_back(l);
    return out;
  }

  bool intersect_one() {
    for (std::size_t p : order_) {
      if (c_.points[p]) continue;
      auto lines = determined_lines_through(p);
      if (lines.size() < 2) continue;
      Polynomial removed;
      PolyTriple v = geometry::normalize(geometry::cross(*c_.lines[lines[0]], *c_.lines[lines[1]]), &removed);
      assign(p, v, "intersect", {line_name(s_, lines[0]), line_name(s_, lines[1])});
      note_removed(removed);
      return true;
    }
    return false;
  }

  bool parametrize_one() {
    for (std::size_t p : order_) {
      if (c_.points[p]) continue;
      auto lines = determined_lines_through(p);
      if (lines.size() != 1) continue;
      const std::size_t l = lines[0];
      const auto [a, b] = c_.line_def[l];
      std::vector<std::string> source{line_name(s_, l), s_.points()[a], s_.points()[b]};
      const std::size_t index = params_++;
      if (index < presets_.size()) {
        source.push_back(to_string(presets_[index]));
        c_.specialized = true;
        assign(p, along_line(*c_.points[a], *c_.points[b], Polynomial::constant(Scalar(presets_[index]), kQ)),
               "specialize", std::move(source));
        return true;
      }
      if (c_.live) {
        c_.overflow = true;
        return true;
      }
      c_.live = true;
      assign(p, along_line(*c_.points[a], *c_.points[b], t_poly()), "parameter", std::move(source));
      return true;
    }
    return false;
  }

  void collect_constraints() {
    for (std::size_t l = 0; l < s_.line_count(); ++l) {
      const auto [a, b] = c_.line_def[l];
      for (std::size_t p : s_.line_members(l)) {
        if (p == a || p == b) continue;
        Polynomial d = geometry::normalize(geometry::det3(*c_.points[p], *c_.points[a], *c_.points[b]));
        const bool vanishes = d.is_zero();
        push_step(vanishes ? "identity" : "constraint", s_.points()[p],
                  {line_name(s_, l), s_.points()[a], s_.points()[b]}, {d});
        if (!vanishes) add_unique(c_.constraints, d);
      }
    }
  }

  const IncidenceStructure& s_;
  const std::vector<std::size_t>& frame_;
  const std::vector<Rational>& presets_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> assigned_at_;
  std::size_t clock_ = 0;
  std::size_t params_ = 0;
  Construction c_;
};

struct Outcome {
  Verdict verdict = Verdict::Inconclusive;
  Construction construction;
  std::optional<Realization> witness;
  std::optional<Scalar> parameter;
  std::string reason;
};

Realization realize_at(const IncidenceStructure& s, const std::vector<std::optional<PolyTriple>>& points,
                       const std::vector<std::optional<PolyTriple>>& lines, const Scalar& t, const FieldContext& field) {
  Realization r;
  r.field = field;
  for (std::size_t p = 0; p < s.point_count(); ++p) {
    r.points.emplace(s.points()[p], geometry::evaluate(*points[p], t, field));
  }
  for (std::size_t l = 0; l < s.line_count(); ++l) {
    r.lines.push_back(geometry::evaluate(*lines[l], t, field));
  }
  return r;
}

bool side_conditions_hold(const std::vector<Polynomial>& side, const Scalar& t, const FieldContext& field) {
  for (const auto& g : side) {
    PolyTriple wrapped{g, Polynomial(), Polynomial()};
    if (geometry::evaluate(wrapped, t, field)[0].is_zero()) return false;
  }
  return true;
}

struct Candidates {
  std::vector<Scalar> values;
  bool sampled = false;       // the parameter was free; values are samples
  bool unresolved = false;    // root finding gave up
  std::string note;
};

// Parameter values worth substituting, given the constraints.
Candidates parameter_candidates(const std::vector<Polynomial>& constraints, bool live, const FieldContext& field) {
  Candidates out;
  if (!live) {
    for (const auto& c : constraints)
      if (!c.is_zero()) return out;  // nonzero constant: contradiction
    out.values.push_back(Scalar::zero(field));
    return out;
  }
  if (constraints.empty()) {
    out.sampled = true;
    for (std::size_t i = 0; i < 3; ++i) out.values.push_back(Scalar::embed(sample_values()[i], field));
    return out;
  }
  Polynomial g = constraints.front();
  for (const auto& c : constraints) g = gcd(g, c);
  if (g.degree() <= 0) return out;
  if (field.d() == 0) {
    for (const auto& r : rational_roots(g)) out.values.push_back(Scalar(r));
  } else {
    try {
      out.values = quadratic_field_roots(g, field.d());
    } catch (const UnresolvedFactor& e) {
      out.unresolved = true;
      out.note = e.what();
      // Rational roots are still exact candidates.
      for (const auto& r : rational_roots(g)) out.values.push_back(Scalar::embed(r, field));
    }
  }
  return out;
}

Outcome solve(const IncidenceStructure& s, Construction c, const FieldContext& field) {
  Outcome out;
  if (c.overflow) {
    out.reason = "parameter overflow";
  } else if (c.degenerate) {
    out.verdict = c.specialized ? Verdict::Inconclusive : Verdict::NonRealizable;
    out.reason = "construction degenerates identically";
  } else {
    Candidates cands = parameter_candidates(c.constraints, c.live, field);
    for (const auto& t : cands.values) {
      if (!side_conditions_hold(c.side_conditions, t, field)) continue;
      Realization r = realize_at(s, c.points, c.lines, t, field);
      if (validate_realization(s, r)) {
        out.verdict = Verdict::Realizable;
        out.witness = std::move(r);
        if (c.live) out.parameter = t;
        out.reason = cands.sampled ? "free parameter sampled" : "constraint root";
        break;
      }
    }
    if (!out.witness) {
      if (cands.unresolved) {
        out.reason = cands.note;
      } else if (cands.sampled) {
        out.reason = "free parameter; sampled values failed validation";
      } else if (c.specialized) {
        out.reason = "specialized parameters; no realization found";
      } else {
        out.verdict = Verdict::NonRealizable;
        out.reason = "no root over " + field.name() + " survives validation";
      }
    }
  }
  out.construction = std::move(c);
  return out;
}

Outcome attempt_frame(const IncidenceStructure& s, const std::vector<std::size_t>& frame, const FieldContext& field) {
  const std::vector<Rational> none;
  Construction first = Coordinatizer(s, frame, none).run();
  if (!first.overflow) return solve(s, std::move(first), field);
  // Too many parameters: fix the earliest ones to sample values. Only a
  // Realizable verdict can come out of a specialized run.
  const auto& samples = sample_values();
  for (std::size_t attempt = 0; attempt < 3; ++attempt) {
    std::vector<Rational> presets;
    Construction c = first;
    while (c.overflow && presets.size() < s.point_count()) {
      presets.push_back(samples[(3 * attempt + presets.size()) % samples.size()]);
      c = Coordinatizer(s, frame, presets).run();
    }
    Outcome o = solve(s, std::move(c), field);
    if (o.verdict == Verdict::Realizable) return o;
  }
  Outcome o;
  o.construction = std::move(first);
  o.reason = "parameter overflow; specializations found no realization";
  return o;
}

std::vector<std::string> labels_of(const IncidenceStructure& s, const std::vector<std::size_t>& idx) {
  std::vector<std::string> out;
  for (std::size_t i : idx) out.push_back(s.points()[i]);
  return out;
}

RealizabilityCertificate to_certificate(const IncidenceStructure& s, const std::vector<std::size_t>& frame,
                                        Outcome o, const FieldContext& field) {
  RealizabilityCertificate c;
  c.verdict = o.verdict;
  c.field = field;
  c.frame = labels_of(s, frame);
  c.trace = std::move(o.construction.trace);
  c.constraints = std::move(o.construction.constraints);
  c.side_conditions = std::move(o.construction.side_conditions);
  c.witness = std::move(o.witness);
  c.parameter = std::move(o.parameter);
  c.reason = std::move(o.reason);
  return c;
}

std::vector<std::vector<std::size_t>> frames_of_size(const IncidenceStructure& s, std::size_t size) {
  const std::size_t n = s.point_count();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto da = s.lines_through(a).size();
    const auto db = s.lines_through(b).size();
    if (da != db) return da > db;
    return s.points()[a] < s.points()[b];
  });
  std::vector<std::vector<std::size_t>> frames;
  if (n < size) return frames;
  std::vector<std::size_t> pick(size);
  for (std::size_t i = 0; i < size; ++i) pick[i] = i;
  while (frames.size() < kMaxFrames) {
    std::vector<std::size_t> pts;
    for (std::size_t i : pick) pts.push_back(order[i]);
    if (in_general_position(s, pts)) frames.push_back(pts);
    std::size_t i = size;
    while (i > 0 && pick[i - 1] == n - size + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
  }
  return frames;
}

// Four-point frames when any exist. Otherwise (fewer than four points, or
// every four contain a collinear triple) three non-collinear points.
std::vector<std::vector<std::size_t>> frame_indices(const IncidenceStructure& s) {
  auto frames = frames_of_size(s, 4);
  if (frames.empty()) frames = frames_of_size(s, 3);
  return frames;
}

}  // namespace

std::vector<std::vector<std::string>> candidate_frames(const IncidenceStructure& s) {
  std::vector<std::vector<std::string>> out;
  for (const auto& f : frame_indices(s)) out.push_back(labels_of(s, f));
  return out;
}

RealizabilityCertificate coordinatize(const IncidenceStructure& s, const FieldContext& field) {
  if (field.kind() == FieldContext::Kind::PolyOver) {
    throw ContextMismatch("realizability is decided over Q or Q(sqrt d) only");
  }
  const auto frames = frame_indices(s);
  if (frames.empty()) throw NoValidFrame("no frame of points with no three on a common line");

  std::vector<FrameAttempt> attempts;
  std::optional<RealizabilityCertificate> refutation;
  std::optional<RealizabilityCertificate> fallback;
  for (const auto& frame : frames) {
    Outcome o = attempt_frame(s, frame, field);
    attempts.push_back(FrameAttempt{labels_of(s, frame), o.verdict, o.reason});
    if (o.verdict == Verdict::Realizable) {
      auto cert = to_certificate(s, frame, std::move(o), field);
      cert.frames_tried = std::move(attempts);
      return cert;
    }
    if (o.verdict == Verdict::NonRealizable && !refutation) {
      refutation = to_certificate(s, frame, std::move(o), field);
    } else if (!fallback) {
      fallback = to_certificate(s, frame, std::move(o), field);
    }
  }
  RealizabilityCertificate cert = refutation ? std::move(*refutation) : std::move(*fallback);
  cert.frames_tried = std::move(attempts);
  return cert;
}

namespace {

// Rebuilds the construction recorded in a trace, checking each step.
class Replay {
 public:
  Replay(const IncidenceStructure& s, const RealizabilityCertificate& c) : s_(s), c_(c) {
    points_.resize(s.point_count());
    lines_.resize(s.line_count());
    line_def_.resize(s.line_count());
    covered_.assign(s.line_count(), std::vector<bool>(s.point_count(), false));
    for (std::size_t l = 0; l < s.line_count(); ++l) names_.emplace(line_name(s, l), l);
  }

  void run() {
    std::size_t frame_count = 0;
    std::size_t expected_step = 1;
    for (const auto& st : c_.trace) {
      if (st.step != expected_step++) fail(st, "step numbers out of sequence");
      if (st.kind == "frame") {
        if (frame_count >= c_.frame.size() || c_.frame[frame_count] != st.target) fail(st, "frame mismatch");
        place(st, point(st.target, st), frame_vector(frame_count++));
      } else if (st.kind == "line") {
        need_sources(st, 2);
        const std::size_t l = line(st.target, st);
        const std::size_t p = assigned(st.source[0], st);
        const std::size_t q = assigned(st.source[1], st);
        if (p == q || !s_.on_line(l, p) || !s_.on_line(l, q)) fail(st, "line sources not on line");
        Polynomial removed;
        PolyTriple v = geometry::normalize(geometry::cross(*points_[p], *points_[q]), &removed);
        note_removed(removed);
        expect(st, {v[0], v[1], v[2]});
        lines_[l] = v;
        line_def_[l] = {p, q};
      } else if (st.kind == "intersect") {
        need_sources(st, 2);
        const std::size_t p = point(st.target, st);
        const std::size_t a = determined(st.source[0], st);
        const std::size_t b = determined(st.source[1], st);
        if (a == b || !s_.on_line(a, p) || !s_.on_line(b, p)) fail(st, "point not on both lines");
        Polynomial removed;
        PolyTriple v = geometry::normalize(geometry::cross(*lines_[a], *lines_[b]), &removed);
        note_removed(removed);
        place(st, p, v);
      } else if (st.kind == "parameter" || st.kind == "specialize") {
        const bool fixed = st.kind == "specialize";
        need_sources(st, fixed ? 4 : 3);
        const std::size_t p = point(st.target, st);
        const std::size_t l = determined(st.source[0], st);
        const std::size_t a = assigned(st.source[1], st);
        const std::size_t b = assigned(st.source[2], st);
        if (!s_.on_line(l, p) || line_def_[l] != std::make_pair(a, b)) fail(st, "parameter sources");
        Polynomial t = fixed ? Polynomial::constant(Scalar(parse_rational(st.source[3])), kQ) : t_poly();
        if (fixed) specialized_ = true;
        if (!fixed) {
          if (live_) fail(st, "second live parameter");
          live_ = true;
        }
        place(st, p, along_line(*points_[a], *points_[b], t));
      } else if (st.kind == "constraint" || st.kind == "identity") {
        need_sources(st, 3);
        const std::size_t p = assigned(st.target, st);
        const std::size_t l = determined(st.source[0], st);
        const std::size_t a = assigned(st.source[1], st);
        const std::size_t b = assigned(st.source[2], st);
        if (!s_.on_line(l, p) || line_def_[l] != std::make_pair(a, b)) fail(st, "constraint sources");
        Polynomial d = geometry::normalize(geometry::det3(*points_[p], *points_[a], *points_[b]));
        if (d.is_zero() != (st.kind == "identity")) fail(st, "constraint kind");
        expect(st, {d});
        covered_[l][p] = true;
        if (!d.is_zero()) add_unique(constraints_, d);
      } else {
        fail(st, "unknown step kind");
      }
    }
    if (frame_count != c_.frame.size()) throw TraceMismatch("frame steps missing");
  }

  // Every point placed, every line determined, every incidence accounted for.
  bool complete() const {
    for (std::size_t p = 0; p < s_.point_count(); ++p)
      if (!points_[p]) return false;
    for (std::size_t l = 0; l < s_.line_count(); ++l) {
      if (!lines_[l]) return false;
      for (std::size_t p : s_.line_members(l)) {
        if (p == line_def_[l].first || p == line_def_[l].second) continue;
        if (!covered_[l][p]) return false;
      }
    }
    return true;
  }

  const std::vector<Polynomial>& constraints() const { return constraints_; }
  const std::vector<Polynomial>& side_conditions() const { return side_; }
  bool degenerate() const { return degenerate_; }
  bool live() const { return live_; }
  bool specialized() const { return specialized_; }
  const std::vector<std::optional<PolyTriple>>& points() const { return points_; }
  const std::vector<std::optional<PolyTriple>>& lines() const { return lines_; }

 private:
  [[noreturn]] void fail(const TraceStep& st, const std::string& why) const {
    throw TraceMismatch("trace step " + std::to_string(st.step) + " (" + st.kind + " " + st.target + "): " + why);
  }

  void need_sources(const TraceStep& st, std::size_t n) const {
    if (st.source.size() != n) fail(st, "expected " + std::to_string(n) + " sources");
  }

  std::size_t point(const std::string& label, const TraceStep& st) const {
    const auto& pts = s_.points();
    auto it = std::find(pts.begin(), pts.end(), label);
    if (it == pts.end()) fail(st, "unknown point " + label);
    return static_cast<std::size_t>(it - pts.begin());
  }

  std::size_t assigned(const std::string& label, const TraceStep& st) const {
    const std::size_t p = point(label, st);
    if (!points_[p]) fail(st, "point " + label + " used before it is placed");
    return p;
  }

  std::size_t line(const std::string& name, const TraceStep& st) const {
    auto it = names_.find(name);
    if (it == names_.end()) fail(st, "unknown line " + name);
    if (lines_[it->second]) fail(st, "line " + name + " determined twice");
    return it->second;
  }

  std::size_t determined(const std::string& name, const TraceStep& st) const {
    auto it = names_.find(name);
    if (it == names_.end() || !lines_[it->second]) fail(st, "line " + name + " not determined");
    return it->second;
  }

  void expect(const TraceStep& st, const std::vector<Polynomial>& got) const {
    if (st.result != got) fail(st, "recorded result differs from recomputation");
  }

  void place(const TraceStep& st, std::size_t p, const PolyTriple& v) {
    if (points_[p]) fail(st, "point placed twice");
    expect(st, {v[0], v[1], v[2]});
    points_[p] = v;
  }

  void note_removed(const Polynomial& removed) {
    if (removed.is_zero()) degenerate_ = true;
    if (removed.is_zero() || removed.degree() > 0) add_unique(side_, removed);
  }

  const IncidenceStructure& s_;
  const RealizabilityCertificate& c_;
  std::map<std::string, std::size_t> names_;
  std::vector<std::optional<PolyTriple>> points_;
  std::vector<std::optional<PolyTriple>> lines_;
  std::vector<std::pair<std::size_t, std::size_t>> line_def_;
  std::vector<std::vector<bool>> covered_;
  std::vector<Polynomial> constraints_;
  std::vector<Polynomial> side_;
  bool degenerate_ = false;
  bool live_ = false;
  bool specialized_ = false;
};

}  // namespace

bool recheck_certificate(const RealizabilityCertificate& c, const IncidenceStructure& s) {
  switch (c.verdict) {
    case Verdict::Inconclusive:
      return true;
    case Verdict::Realizable:
      return c.witness.has_value() && c.witness->field == c.field && validate_realization(s, *c.witness);
    case Verdict::NonRealizable:
      break;
  }
  if (c.field.kind() == FieldContext::Kind::PolyOver) return false;
  Replay replay(s, c);
  replay.run();
  if (replay.specialized()) return false;
  if (replay.degenerate()) {
    // A triple vanished identically; the recorded side conditions must say so.
    return std::find(c.side_conditions.begin(), c.side_conditions.end(), Polynomial()) != c.side_conditions.end();
  }
  if (!replay.complete()) throw TraceMismatch("trace does not cover every incidence");
  if (replay.constraints() != c.constraints || replay.side_conditions() != c.side_conditions) return false;
  for (const auto& k : c.constraints)
    if (k.is_zero()) return false;
  if (replay.live() && c.constraints.empty()) return false;  // free parameter refutes nothing

  Candidates cands = parameter_candidates(c.constraints, replay.live(), c.field);
  if (cands.unresolved) return false;
  for (const auto& t : cands.values) {
    if (!side_conditions_hold(c.side_conditions, t, c.field)) continue;
    if (validate_realization(s, realize_at(s, replay.points(), replay.lines(), t, c.field))) return false;
  }
  return true;
}

}  // namespace signrank
