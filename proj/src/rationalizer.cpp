#include "signrank/rationalizer.hpp"

#include <algorithm>
#include <stdexcept>

#include "signrank/errors.hpp"
#include "signrank/linalg.hpp"
#include "signrank/roots.hpp"

namespace signrank {

Window::Window(Rational lo_, Rational hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (!(lo < hi)) throw std::invalid_argument("window needs lo < hi");
}

std::size_t rank_over_function_field(const PolyMatrix& m) { return rank(m); }

RationalizeResult rationalize(const PolyMatrix& m, const Window& w) {
  const FieldContext base = m.context().scalar_field();

  NeedsRefinement refine{w, {}};
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Polynomial& p = m(i, j);
      if (p.is_zero()) continue;
      if (p.eval(w.lo).is_zero() || p.eval(w.hi).is_zero()) {
        refine.entries.push_back({i, j, 0, true});
        continue;
      }
      const int roots = sturm_root_count(p, w.lo, w.hi);
      if (roots > 0) refine.entries.push_back({i, j, roots, false});
    }
  if (!refine.entries.empty()) return refine;

  Rationalized out;
  auto& cert = out.certificate;
  cert.window = w;
  cert.beta = Scalar::embed(w.midpoint(), base);
  out.matrix = ExactMatrix(m.rows(), m.cols(), base);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Scalar v = m(i, j).eval(cert.beta);
      out.matrix(i, j) = v;
      cert.per_entry.push_back({i, j, 0, sign(v)});
    }

  // Each nonzero entry is root-free on [lo, hi], so its sign there equals
  // its sign at beta; a nonzero value at beta confirms it is not lost.
  for (const auto& e : cert.per_entry)
    if (!m(e.row, e.col).is_zero() && e.sign_at_beta == 0)
      throw std::logic_error("substitution produced a zero for a root-free entry");

  cert.rank_before = rank_over_function_field(m);
  cert.rank_after = rank(out.matrix);
  if (cert.rank_after > cert.rank_before) throw std::logic_error("substitution increased the rank");
  const std::size_t k = cert.rank_before + 1;
  if (k <= std::min(m.rows(), m.cols()) && !all_minors_vanish(out.matrix, k))
    throw std::logic_error("a minor of size rank+1 survived substitution");
  return out;
}

ClearedMatrix clear_denominators(const std::vector<std::vector<RationalFunction>>& rows, const FieldContext& base,
                                 const std::optional<Window>& window) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  Polynomial l = Polynomial::constant(Scalar::one(base), base);
  for (const auto& row : rows) {
    if (row.size() != c) throw ShapeError("ragged rows");
    for (const auto& f : row) {
      if (f.den.is_zero()) throw ZeroDenominator("zero denominator");
      if (!(f.num.base() == base) && !f.num.is_zero()) throw ContextMismatch("numerator over another field");
      if (!(f.den.base() == base)) throw ContextMismatch("denominator over another field");
      l = lcm(l, f.den);
    }
  }

  ClearedMatrix out;
  out.multiplier = l;
  if (window) {
    // Orientation is read at the midpoint, falling back to other interior
    // points if the lcm happens to vanish there.
    int s = 0;
    for (int k : {2, 4, 3, 5, 7}) {
      const Rational t = window->lo + (window->hi - window->lo) / k;
      s = sign(l.eval(t));
      if (s != 0) break;
    }
    if (s < 0) out.multiplier = -l;
    out.multiplier_positive_on_window = !l.eval(window->lo).is_zero() && !l.eval(window->hi).is_zero() &&
                                        sturm_root_count(l, window->lo, window->hi) == 0;
  }

  out.matrix = PolyMatrix(r, c, FieldContext::poly_over(base));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      const auto& f = rows[i][j];
      if (f.num.is_zero()) continue;
      out.matrix(i, j) = f.num * out.multiplier.exact_div(f.den);
    }
  return out;
}

RationalizeResult rationalize_with_bisection(const PolyMatrix& m, Window w, const Rational& target, int max_steps) {
  if (!(w.lo < target && target < w.hi)) throw std::invalid_argument("target outside the window");
  RationalizeResult result = rationalize(m, w);
  for (int step = 0; step < max_steps && std::holds_alternative<NeedsRefinement>(result); ++step) {
    const Rational quarter = (w.hi - w.lo) / 4;
    w = Window(std::max<Rational>(w.lo, target - quarter), std::min<Rational>(w.hi, target + quarter));
    result = rationalize(m, w);
  }
  return result;
}

}  // namespace signrank
