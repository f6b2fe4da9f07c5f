#include "signrank/commands.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <variant>

#include "signrank/counterexample.hpp"
#include "signrank/errors.hpp"
#include "signrank/linalg.hpp"
#include "signrank/rationalizer.hpp"
#include "signrank/serialize.hpp"
#include "signrank/svg.hpp"

namespace signrank::cli {

namespace fs = std::filesystem;
using json::Json;

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json(const std::string& path) { return json::parse(read_file(path)); }

void write_file(const fs::path& path, const std::string& content, CommandOutcome& out) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot write " + path.string());
  f << content;
  f.close();
  if (!f) throw IoError("write failed for " + path.string());
  out.artifacts_written.push_back(path.string());
}

void ensure_directory(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) throw IoError("cannot create directory " + dir.string());
}

// Maps library exceptions onto the exit-code contract.
template <class Fn>
CommandOutcome guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const IoError& e) {
    return {kUsage, {}, std::string("io error: ") + e.what() + "\n"};
  } catch (const ParseError& e) {
    return {kUsage, {}, std::string("malformed input: ") + e.what() + "\n"};
  } catch (const Error& e) {
    return {kUsage, {}, std::string("invalid input: ") + e.what() + "\n"};
  } catch (const nlohmann::json::exception& e) {
    return {kUsage, {}, std::string("malformed input: ") + e.what() + "\n"};
  } catch (const std::invalid_argument& e) {
    return {kUsage, {}, std::string("invalid argument: ") + e.what() + "\n"};
  } catch (const std::logic_error& e) {
    return {kVerificationFailed, {}, std::string("verification failed: ") + e.what() + "\n"};
  }
}

std::string report_text(const BundleReport& r) {
  std::string s;
  for (const auto& c : r.checks) s += std::string(c.passed ? "PASS " : "FAIL ") + c.name + " (" + c.evidence + ")\n";
  return s;
}

Json graph_json(const ExactMatrix& a) {
  const BipartiteGraph g = bipartite_graph(sgn(a));
  Json j = json::to_json(g);
  j["edge_list"] = g.to_edge_list_text();
  return j;
}

}  // namespace

std::uint64_t default_seed(std::uint64_t fallback) {
  const char* env = std::getenv("SIGNRANK_SEED");
  if (env == nullptr || *env == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  return (end != nullptr && *end == '\0') ? v : fallback;
}

CommandOutcome cmd_perles_build(const std::string& out_dir) {
  return guarded([&] {
    CommandOutcome out;
    const fs::path dir(out_dir);
    ensure_directory(dir);
    CounterexampleBundle b;
    try {
      b = build_bundle();
    } catch (const std::logic_error& e) {
      out.exit_code = kVerificationFailed;
      out.summary = std::string("bundle verification failed: ") + e.what() + "\n";
      write_file(dir / "report.json", json::dump(Json{{"all_passed", false}, {"error", e.what()}}), out);
      return out;
    }
    const BundleReport report = verify_bundle(b);
    write_file(dir / "incidence.json", json::dump(json::to_json(b.structure)), out);
    write_file(dir / "realization.json", json::dump(json::to_json(b.realization)), out);
    write_file(dir / "D.json", json::dump(json::to_json(b.D)), out);
    write_file(dir / "C.json", json::dump(json::to_json(b.C)), out);
    write_file(dir / "E.json", json::dump(json::to_json(b.E)), out);
    write_file(dir / "B.json", json::dump(json::to_json(b.B)), out);
    write_file(dir / "A.json", json::dump(json::to_json(b.A)), out);
    write_file(dir / "patterns.json", json::dump(json::to_json(b.patterns)), out);
    write_file(dir / "certificate_q.json", json::dump(json::to_json(b.nonrealizability)), out);
    write_file(dir / "graph.json", json::dump(graph_json(b.A)), out);
    write_file(dir / "report.json", json::dump(json::to_json(report)), out);
    write_file(dir / "figure.svg", render_svg(b.structure, b.realization), out);
    out.exit_code = report.all_passed() ? kOk : kVerificationFailed;
    out.summary = report_text(report) + std::to_string(out.artifacts_written.size()) + " files written to " +
                  dir.string() + "\n";
    return out;
  });
}

CommandOutcome cmd_perles_verify(const std::string& bundle_dir) {
  return guarded([&] {
    const fs::path dir(bundle_dir);
    auto load = [&](const char* name) { return read_json((dir / name).string()); };
    CounterexampleBundle b;
    b.structure = json::incidence_from_json(load("incidence.json"));
    b.realization = json::realization_from_json(load("realization.json"));
    b.D = json::exact_matrix_from_json(load("D.json"));
    b.C = json::exact_matrix_from_json(load("C.json"));
    b.E = json::exact_matrix_from_json(load("E.json"));
    b.B = json::exact_matrix_from_json(load("B.json"));
    b.A = json::exact_matrix_from_json(load("A.json"));
    b.nonrealizability = json::certificate_from_json(load("certificate_q.json"));
    const Json patterns = load("patterns.json");
    const Json graph = load("graph.json");

    BundleReport report = verify_bundle(b);
    CheckResult pat{"patterns.json matches the matrices", false, ""};
    try {
      b.patterns = sign_pattern_suite(b);
      pat.passed = patterns == json::to_json(b.patterns);
    } catch (const std::exception& e) {
      pat.evidence = e.what();
    }
    report.checks.push_back(pat);
    CheckResult gr{"graph.json matches sgn(A)", false, ""};
    try {
      gr.passed = graph == graph_json(b.A);
    } catch (const std::exception& e) {
      gr.evidence = e.what();
    }
    report.checks.push_back(gr);

    CommandOutcome out;
    out.exit_code = report.all_passed() ? kOk : kVerificationFailed;
    out.summary = report_text(report);
    return out;
  });
}

CommandOutcome cmd_realize(const std::string& incidence_path, const std::string& field, const std::string& out_path) {
  return guarded([&] {
    const IncidenceStructure s = json::incidence_from_json(read_json(incidence_path));
    FieldContext f;
    try {
      f = FieldContext::parse(field);
    } catch (const std::exception& e) {
      throw ParseError(std::string("bad field '") + field + "': " + e.what());
    }
    if (f.kind() == FieldContext::Kind::PolyOver) throw ParseError("field must be q or qsqrt:D");
    const RealizabilityCertificate c = coordinatize(s, f);
    CommandOutcome out;
    write_file(out_path, json::dump(json::to_json(c)), out);
    bool rechecked = false;
    std::string note;
    try {
      rechecked = recheck_certificate(c, s);
    } catch (const TraceMismatch& e) {
      note = e.what();
    }
    out.summary = "verdict: " + to_string(c.verdict) + " over " + f.name() + "\n";
    if (!c.reason.empty()) out.summary += "reason: " + c.reason + "\n";
    if (!rechecked) {
      out.exit_code = kVerificationFailed;
      out.summary += "certificate recheck failed " + note + "\n";
    } else {
      out.exit_code = c.verdict == Verdict::Inconclusive ? kInconclusive : kOk;
      out.summary += "certificate rechecked\n";
    }
    return out;
  });
}

CommandOutcome cmd_rationalize(const std::string& matrix_path, const std::string& lo, const std::string& hi,
                               const std::string& out_path) {
  return guarded([&] {
    const Json input = read_json(matrix_path);
    const Window w(parse_rational(lo), parse_rational(hi));
    FieldContext base;
    bool has_den = false;
    const auto rows = json::rational_function_rows_from_json(input, &base, &has_den);

    Json doc;
    PolyMatrix m;
    std::optional<ClearedMatrix> cleared;
    if (has_den) {
      cleared = clear_denominators(rows, base, w);
      m = cleared->matrix;
    } else {
      const std::size_t c = rows.empty() ? json::poly_matrix_from_json(input).cols() : rows.front().size();
      m = PolyMatrix(rows.size(), c, FieldContext::poly_over(base));
      for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j].num;
    }

    CommandOutcome out;
    const RationalizeResult result = rationalize(m, w);
    if (const auto* need = std::get_if<NeedsRefinement>(&result)) {
      doc = json::to_json(*need);
      out.exit_code = kInconclusive;
      out.summary = "needs refinement:";
      for (const auto& e : need->entries) out.summary += " (" + std::to_string(e.row + 1) + "," + std::to_string(e.col + 1) + ")";
      out.summary += "\n";
    } else {
      const auto& r = std::get<Rationalized>(result);
      doc = Json{{"status", "ok"}};
      if (cleared) {
        doc["multiplier"] = json::to_json(cleared->multiplier);
        doc["multiplier_positive_on_window"] = cleared->multiplier_positive_on_window;
        doc["cleared"] = json::to_json(cleared->matrix);
      }
      doc["matrix"] = json::to_json(r.matrix);
      doc["certificate"] = json::to_json(r.certificate);
      out.exit_code = kOk;
      out.summary = "beta: " + r.certificate.beta.to_string() + "\nrank_before: " +
                    std::to_string(r.certificate.rank_before) + "\nrank_after: " +
                    std::to_string(r.certificate.rank_after) + "\n";
      if (cleared && !cleared->multiplier_positive_on_window) {
        out.exit_code = kInconclusive;
        out.summary += "multiplier changes sign on the window; refine it\n";
      }
    }
    write_file(out_path, json::dump(doc), out);
    return out;
  });
}

CommandOutcome cmd_minrank(const std::string& pattern_path, const SearchBudget& budget, const std::string& out_path) {
  return guarded([&] {
    const SignPattern p = json::sign_pattern_from_json(read_json(pattern_path));
    const std::size_t lower = triangle_lower_bound(p);
    const UpperBoundResult upper = minrank_upper_search(p, budget);
    CommandOutcome out;
    out.summary = "lower: " + std::to_string(lower) + "\nupper: " + std::to_string(upper.best.rank) + "\n";
    if (lower == upper.best.rank) out.summary += "exact: " + std::to_string(lower) + "\n";
    if (!verify_witness(upper.best)) {
      out.exit_code = kVerificationFailed;
      out.summary += "witness failed verification\n";
      return out;
    }
    if (!out_path.empty()) {
      Json doc = json::to_json(upper.best);
      doc["lower_bound"] = lower;
      doc["improved"] = upper.improved;
      doc["seed"] = budget.seed;
      write_file(out_path, json::dump(doc), out);
    }
    return out;
  });
}

CommandOutcome cmd_render(const std::string& incidence_path, const std::string& realization_path,
                          const std::string& out_path) {
  return guarded([&] {
    const IncidenceStructure s = json::incidence_from_json(read_json(incidence_path));
    const Realization r = json::realization_from_json(read_json(realization_path));
    CommandOutcome out;
    write_file(out_path, render_svg(s, r), out);
    out.summary = std::to_string(s.point_count()) + " points, " + std::to_string(s.line_count()) + " lines\n";
    return out;
  });
}

}  // namespace signrank::cli
