#ifndef SIGNRANK_MINRANK_HPP
#define SIGNRANK_MINRANK_HPP

#include <cstddef>
#include <cstdint>

#include "signrank/matrix.hpp"
#include "signrank/sign_pattern.hpp"

namespace signrank {

/// A matrix claimed to lie in the sign class of `pattern` with the stated
/// rank: an upper bound on the minimum rank over the witness's field.
struct MinrankWitness {
  SignPattern pattern;
  ExactMatrix witness;
  std::size_t rank = 0;

  friend bool operator==(const MinrankWitness&, const MinrankWitness&) = default;
};

/// Recomputes sgn(witness) and rank(witness); true iff both match the claims.
bool verify_witness(const MinrankWitness& w);

/// Largest k such that some k x k submatrix can be permuted to lower
/// triangular form with a nonzero diagonal. Every matrix in the sign class
/// has that minor nonzero, so the minimum rank over any field is >= k.
/// Patterns with more than 64 columns are transposed or rejected.
std::size_t triangle_lower_bound(const SignPattern& pattern);

struct SearchBudget {
  std::uint64_t seed = 1;
  /// Largest factorization rank attempted; 0 means min(rows, cols).
  std::size_t max_rank = 0;
  /// Factor entries are integers in [-entry_bound, entry_bound].
  int entry_bound = 3;
  /// Alternation rounds, summed over restarts and ranks.
  std::size_t iterations = 4000;
};

struct UpperBoundResult {
  /// Best verified witness: the search result if `improved`, otherwise the
  /// +1/-1/0 realization of the pattern.
  MinrankWitness best;
  /// False means the search did not beat the trivial witness.
  bool improved = false;
};

/// Seeded randomized search for a low-rank matrix W*H with sgn(W*H) equal to
/// the pattern. Deterministic for a given budget. Only ever an upper bound.
UpperBoundResult minrank_upper_search(const SignPattern& pattern, const SearchBudget& budget = {});

}  // namespace signrank

#endif  // SIGNRANK_MINRANK_HPP
