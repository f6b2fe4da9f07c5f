#include "signrank/minrank.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <optional>
#include <random>
#include <unordered_map>
#include <vector>

#include "signrank/linalg.hpp"

namespace signrank {

bool verify_witness(const MinrankWitness& w) {
  if (!w.witness.context().admits_sign()) return false;
  if (w.witness.rows() != w.pattern.rows() || w.witness.cols() != w.pattern.cols()) return false;
  return sgn(w.witness) == w.pattern && rank(w.witness) == w.rank;
}

namespace {

class TriangleSearch {
 public:
  explicit TriangleSearch(const SignPattern& p) : rows_(p.rows()), cols_(p.cols()), nonzero_(p.rows(), 0) {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (p(i, j) != Sign::Zero) nonzero_[i] |= std::uint64_t{1} << j;
    // Sparse columns first: taking one kills few rows, so chains run longer.
    order_.resize(cols_);
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::vector<int> degree(cols_, 0);
    for (std::size_t j = 0; j < cols_; ++j)
      for (std::size_t i = 0; i < rows_; ++i) degree[j] += (nonzero_[i] >> j) & 1U;
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t a, std::size_t b) { return degree[a] < degree[b]; });
  }

  std::size_t solve() { return best_from(0); }

 private:
  // Rows still usable once the columns in `chosen` are taken: zero on all of them.
  std::uint64_t live_columns(std::uint64_t chosen, std::size_t* live_rows) const {
    std::uint64_t cols = 0;
    std::size_t rows = 0;
    for (std::uint64_t nz : nonzero_) {
      if ((nz & chosen) != 0 || nz == 0) continue;
      ++rows;
      cols |= nz;
    }
    *live_rows = rows;
    return cols & ~chosen;
  }

  std::size_t upper_bound(std::uint64_t chosen) const {
    std::size_t live_rows = 0;
    std::uint64_t cols = live_columns(chosen, &live_rows);
    return std::min<std::size_t>(live_rows, static_cast<std::size_t>(std::popcount(cols)));
  }

  std::size_t best_from(std::uint64_t chosen) {
    if (auto it = memo_.find(chosen); it != memo_.end()) return it->second;
    std::size_t live_rows = 0;
    const std::uint64_t cols = live_columns(chosen, &live_rows);
    const std::size_t bound = std::min<std::size_t>(live_rows, static_cast<std::size_t>(std::popcount(cols)));
    std::size_t best = 0;
    for (std::size_t c : order_) {
      if (best == bound) break;
      const std::uint64_t bit = std::uint64_t{1} << c;
      if ((cols & bit) == 0) continue;
      const std::uint64_t next = chosen | bit;
      if (1 + upper_bound(next) <= best) continue;
      best = std::max(best, 1 + best_from(next));
    }
    memo_.emplace(chosen, best);
    return best;
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint64_t> nonzero_;
  std::vector<std::size_t> order_;
  std::unordered_map<std::uint64_t, std::size_t> memo_;
};

}  // namespace

std::size_t triangle_lower_bound(const SignPattern& pattern) {
  if (pattern.cols() > 64) {
    if (pattern.rows() > 64) throw OutOfRange("triangle bound supports at most 64 rows or columns");
    return triangle_lower_bound(pattern.transpose());
  }
  return TriangleSearch(pattern).solve();
}

namespace {

// Portable bounded draws: std distributions are implementation-defined.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}
  long uniform(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(engine_() % span);
  }
  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

using IntMatrix = std::vector<std::vector<long>>;

int sign_of(long v) { return (v > 0) - (v < 0); }

// Sign agreement of a candidate vector against a target sign vector, for a
// factor whose other side is fixed.
class ResponseSolver {
 public:
  ResponseSolver(std::size_t rank, int bound, Draw& draw) : rank_(rank), bound_(bound), draw_(draw) {
    std::size_t total = 1;
    bool exhaustive = true;
    for (std::size_t i = 0; i < rank; ++i) {
      total *= static_cast<std::size_t>(2 * bound + 1);
      if (total > kMaxCandidates) {
        exhaustive = false;
        break;
      }
    }
    exhaustive_ = exhaustive;
    if (exhaustive_) {
      candidates_.reserve(total);
      std::vector<long> v(rank, -bound);
      for (std::size_t n = 0; n < total; ++n) {
        candidates_.push_back(v);
        for (std::size_t i = 0; i < rank; ++i) {
          if (++v[i] <= bound) break;
          v[i] = -bound;
        }
      }
    }
  }

  // Best vector x minimizing mismatches of sign(rows_k . x) vs target_k.
  std::vector<long> best(const std::vector<const std::vector<long>*>& others, const std::vector<int>& target,
                         std::size_t* mismatches) {
    if (!exhaustive_) resample();
    std::size_t best_score = target.size() + 1;
    std::vector<std::size_t> ties;
    for (std::size_t n = 0; n < candidates_.size(); ++n) {
      const auto& x = candidates_[n];
      std::size_t score = 0;
      for (std::size_t k = 0; k < others.size() && score <= best_score; ++k) {
        long dot = 0;
        const auto& o = *others[k];
        for (std::size_t i = 0; i < rank_; ++i) dot += o[i] * x[i];
        score += sign_of(dot) != target[k] ? 1 : 0;
      }
      if (score < best_score) {
        best_score = score;
        ties.assign(1, n);
      } else if (score == best_score) {
        ties.push_back(n);
      }
    }
    *mismatches = best_score;
    return candidates_[ties[draw_.raw() % ties.size()]];
  }

 private:
  static constexpr std::size_t kMaxCandidates = 20000;

  void resample() {
    candidates_.assign(kMaxCandidates, std::vector<long>(rank_));
    for (auto& c : candidates_)
      for (auto& v : c) v = draw_.uniform(-bound_, bound_);
  }

  std::size_t rank_;
  int bound_;
  Draw& draw_;
  bool exhaustive_ = true;
  IntMatrix candidates_;
};

struct Factorization {
  IntMatrix left;   // rows x k
  IntMatrix right;  // cols x k (stored as columns of H)
};

std::optional<Factorization> search_rank(const SignPattern& p, std::size_t k, int bound, Draw& draw,
                                         std::size_t* rounds_left) {
  const std::size_t m = p.rows();
  const std::size_t n = p.cols();
  ResponseSolver solver(k, bound, draw);
  std::vector<std::vector<int>> row_targets(m, std::vector<int>(n));
  std::vector<std::vector<int>> col_targets(n, std::vector<int>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      row_targets[i][j] = static_cast<int>(p(i, j));
      col_targets[j][i] = static_cast<int>(p(i, j));
    }

  while (*rounds_left > 0) {
    Factorization f{IntMatrix(m, std::vector<long>(k)), IntMatrix(n, std::vector<long>(k))};
    for (auto& row : f.left)
      for (auto& v : row) v = draw.uniform(-bound, bound);
    std::size_t last = m * n + 1;
    std::size_t stale = 0;
    while (*rounds_left > 0) {
      --*rounds_left;
      std::vector<const std::vector<long>*> lefts;
      for (const auto& r : f.left) lefts.push_back(&r);
      for (std::size_t j = 0; j < n; ++j) {
        std::size_t miss = 0;
        f.right[j] = solver.best(lefts, col_targets[j], &miss);
      }
      std::vector<const std::vector<long>*> rights;
      for (const auto& c : f.right) rights.push_back(&c);
      std::size_t total = 0;
      for (std::size_t i = 0; i < m; ++i) {
        std::size_t miss = 0;
        f.left[i] = solver.best(rights, row_targets[i], &miss);
        total += miss;
      }
      if (total == 0) return f;
      if (total < last) {
        last = total;
        stale = 0;
      } else if (++stale >= 4) {
        break;  // restart
      }
    }
  }
  return std::nullopt;
}

ExactMatrix to_exact(const Factorization& f, std::size_t m, std::size_t n) {
  ExactMatrix out(m, n, FieldContext::rationals());
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      long v = 0;
      for (std::size_t t = 0; t < f.left[i].size(); ++t) v += f.left[i][t] * f.right[j][t];
      out(i, j) = Scalar(Rational(v));
    }
  return out;
}

}  // namespace

UpperBoundResult minrank_upper_search(const SignPattern& pattern, const SearchBudget& budget) {
  UpperBoundResult result;
  ExactMatrix trivial = unit_realization(pattern);
  result.best = MinrankWitness{pattern, trivial, rank(trivial)};
  if (pattern.rows() == 0 || pattern.cols() == 0 || result.best.rank <= 1) return result;

  std::size_t cap = std::min(pattern.rows(), pattern.cols());
  if (budget.max_rank != 0) cap = std::min(cap, budget.max_rank);
  const int bound = std::max(1, budget.entry_bound);
  Draw draw(budget.seed);
  const std::size_t ranks = std::min(cap, result.best.rank - 1);
  for (std::size_t k = 1; k <= ranks; ++k) {
    // Split the round budget evenly so low ranks cannot starve higher ones.
    std::size_t rounds = budget.iterations / ranks + (k <= budget.iterations % ranks ? 1 : 0);
    auto found = search_rank(pattern, k, bound, draw, &rounds);
    if (!found) continue;
    ExactMatrix w = to_exact(*found, pattern.rows(), pattern.cols());
    MinrankWitness cand{pattern, w, rank(w)};
    if (verify_witness(cand) && cand.rank < result.best.rank) {
      result.best = std::move(cand);
      result.improved = true;
      break;
    }
  }
  return result;
}

}  // namespace signrank
