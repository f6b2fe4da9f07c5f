#ifndef SIGNRANK_INCIDENCE_HPP
#define SIGNRANK_INCIDENCE_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "signrank/sign_pattern.hpp"

namespace signrank {

/// Points (by label) and lines (as ordered lists of point labels).
///
/// Valid when: labels are unique, every line has at least two points, all
/// line members are declared points, no duplicate lines, and two distinct
/// lines share at most one point.
class IncidenceStructure {
 public:
  IncidenceStructure() = default;
  /// Validates; throws InvalidStructure with the first violation found.
  IncidenceStructure(std::vector<std::string> points, std::vector<std::vector<std::string>> lines);

  const std::vector<std::string>& points() const noexcept { return points_; }
  const std::vector<std::vector<std::string>>& lines() const noexcept { return lines_; }
  std::size_t point_count() const noexcept { return points_.size(); }
  std::size_t line_count() const noexcept { return lines_.size(); }

  /// Position of a label in points(); throws InvalidStructure if absent.
  std::size_t index_of(const std::string& label) const;
  bool on_line(std::size_t line, std::size_t point) const;
  /// Member point indices of a line, in points() order.
  std::vector<std::size_t> line_members(std::size_t line) const;
  /// Lines through a point, ascending.
  std::vector<std::size_t> lines_through(std::size_t point) const;

  friend bool operator==(const IncidenceStructure&, const IncidenceStructure&) = default;

 private:
  std::vector<std::string> points_;
  std::vector<std::vector<std::string>> lines_;
  std::vector<std::vector<bool>> incident_;  // [line][point]
};

/// The nine-point, nine-line configuration: points A..I, lines ABEF, ADG,
/// AHI, BCH, BGI, CEG, CFI, DEI, DFH, in that order.
IncidenceStructure perles_structure();

/// Lines x points, true where the point lies on the line.
class IncidenceMatrix {
 public:
  explicit IncidenceMatrix(const IncidenceStructure& s);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool incident(std::size_t line, std::size_t point) const { return cells_[line * cols_ + point]; }
  std::size_t incident_count() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<bool> cells_;
};

struct BipartiteGraph {
  std::size_t left = 0;   // rows of the off-diagonal block
  std::size_t right = 0;  // columns of the off-diagonal block
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // (L_i, R_j), row-major order

  /// One "L_i R_j" line per edge (1-based indices), newline terminated.
  std::string to_edge_list_text() const;
};

/// Reads a pattern [[0, P], [P^T, 0]] and returns the bipartite graph of P's
/// nonzero entries. `split` is the size of the first zero block; 0 picks the
/// balanced split when it fits, otherwise the smallest one that does.
/// Throws ShapeError if no split gives that block form.
BipartiteGraph bipartite_graph(const SignPattern& a, std::size_t split = 0);

}  // namespace signrank

#endif  // SIGNRANK_INCIDENCE_HPP
