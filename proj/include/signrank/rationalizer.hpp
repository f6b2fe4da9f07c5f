#ifndef SIGNRANK_RATIONALIZER_HPP
#define SIGNRANK_RATIONALIZER_HPP

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "signrank/field.hpp"
#include "signrank/matrix.hpp"
#include "signrank/polynomial.hpp"

namespace signrank {

/// Open rational interval (lo, hi) that the caller asserts contains the
/// transcendental alpha. Alpha itself is never represented.
struct Window {
  Rational lo;
  Rational hi;

  /// Throws std::invalid_argument unless lo < hi.
  Window(Rational lo, Rational hi);

  Rational midpoint() const { return (lo + hi) / 2; }

  friend bool operator==(const Window&, const Window&) = default;
};

struct EntryReport {
  std::size_t row = 0;
  std::size_t col = 0;
  int root_count = 0;
  int sign_at_beta = 0;

  friend bool operator==(const EntryReport&, const EntryReport&) = default;
};

struct RationalizationCertificate {
  Scalar beta;
  Window window{0, 1};
  /// One record per entry, row-major. Zero entries have sign 0 and no roots.
  std::vector<EntryReport> per_entry;
  std::size_t rank_before = 0;  // over base(alpha)
  std::size_t rank_after = 0;

  friend bool operator==(const RationalizationCertificate&, const RationalizationCertificate&) = default;
};

struct Rationalized {
  ExactMatrix matrix;
  RationalizationCertificate certificate;
};

/// Entries whose sign is not constant on the window: a root inside it
/// (root_count > 0) or at an endpoint (endpoint_root).
struct OffendingEntry {
  std::size_t row = 0;
  std::size_t col = 0;
  int root_count = 0;
  bool endpoint_root = false;

  friend bool operator==(const OffendingEntry&, const OffendingEntry&) = default;
};

/// Protocol step, not a failure: shrink the window and call again.
struct NeedsRefinement {
  Window window;
  std::vector<OffendingEntry> entries;
};

using RationalizeResult = std::variant<Rationalized, NeedsRefinement>;

/// Substitutes beta = midpoint of w into every entry once each nonzero entry
/// is root-free on the closed window. The result has the same sign pattern
/// as M on the window and rank at most rank(M) over base(alpha). Both facts
/// are rechecked before returning (std::logic_error if they ever fail).
RationalizeResult rationalize(const PolyMatrix& m, const Window& w);

/// Rank over the fraction field base(alpha).
std::size_t rank_over_function_field(const PolyMatrix& m);

struct RationalFunction {
  Polynomial num;
  Polynomial den;
};

struct ClearedMatrix {
  PolyMatrix matrix;
  Polynomial multiplier;
  /// The multiplier has no root in the closed window (when one was given).
  bool multiplier_positive_on_window = true;
};

/// Multiplies every entry by the lcm of the denominators. With a window the
/// lcm's sign is flipped if needed so that it is positive at the window
/// midpoint; without one it is monic. Throws ZeroDenominator, ShapeError
/// for ragged rows, ContextMismatch for mixed base fields.
ClearedMatrix clear_denominators(const std::vector<std::vector<RationalFunction>>& rows, const FieldContext& base,
                                 const std::optional<Window>& window = std::nullopt);

/// Shrinks w by bisection, keeping the half that contains `target`, until
/// rationalize() succeeds or `max_steps` halvings are spent. `target` must
/// lie in the open window. Returns the first success, or the last refinement
/// request.
RationalizeResult rationalize_with_bisection(const PolyMatrix& m, Window w, const Rational& target,
                                             int max_steps = 256);

}  // namespace signrank

#endif  // SIGNRANK_RATIONALIZER_HPP
