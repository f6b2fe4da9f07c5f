#include "signrank/incidence.hpp"

#include <algorithm>
#include <set>

#include "signrank/errors.hpp"

namespace signrank {

IncidenceStructure::IncidenceStructure(std::vector<std::string> points, std::vector<std::vector<std::string>> lines)
    : points_(std::move(points)), lines_(std::move(lines)) {
  std::set<std::string> seen(points_.begin(), points_.end());
  if (seen.size() != points_.size()) throw InvalidStructure("duplicate point label");
  incident_.assign(lines_.size(), std::vector<bool>(points_.size(), false));
  for (std::size_t l = 0; l < lines_.size(); ++l) {
    if (lines_[l].size() < 2) throw InvalidStructure("line " + std::to_string(l) + " has fewer than 2 points");
    for (const auto& label : lines_[l]) {
      std::size_t p = index_of(label);
      if (incident_[l][p]) throw InvalidStructure("point " + label + " repeated on line " + std::to_string(l));
      incident_[l][p] = true;
    }
  }
  for (std::size_t a = 0; a < lines_.size(); ++a) {
    for (std::size_t b = a + 1; b < lines_.size(); ++b) {
      std::size_t shared = 0;
      for (std::size_t p = 0; p < points_.size(); ++p) shared += (incident_[a][p] && incident_[b][p]) ? 1 : 0;
      if (incident_[a] == incident_[b]) {
        throw InvalidStructure("duplicate line " + std::to_string(a) + "/" + std::to_string(b));
      }
      if (shared > 1) {
        throw InvalidStructure("lines " + std::to_string(a) + " and " + std::to_string(b) + " share " +
                               std::to_string(shared) + " points");
      }
    }
  }
}

std::size_t IncidenceStructure::index_of(const std::string& label) const {
  auto it = std::find(points_.begin(), points_.end(), label);
  if (it == points_.end()) throw InvalidStructure("undeclared point '" + label + "'");
  return static_cast<std::size_t>(it - points_.begin());
}

bool IncidenceStructure::on_line(std::size_t line, std::size_t point) const { return incident_.at(line).at(point); }

std::vector<std::size_t> IncidenceStructure::line_members(std::size_t line) const {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < points_.size(); ++p)
    if (incident_.at(line)[p]) out.push_back(p);
  return out;
}

std::vector<std::size_t> IncidenceStructure::lines_through(std::size_t point) const {
  std::vector<std::size_t> out;
  for (std::size_t l = 0; l < lines_.size(); ++l)
    if (incident_[l].at(point)) out.push_back(l);
  return out;
}

IncidenceStructure perles_structure() {
  std::vector<std::string> points{"A", "B", "C", "D", "E", "F", "G", "H", "I"};
  std::vector<std::vector<std::string>> lines;
  for (const char* word : {"ABEF", "ADG", "AHI", "BCH", "BGI", "CEG", "CFI", "DEI", "DFH"}) {
    std::vector<std::string> line;
    for (const char* c = word; *c != '\0'; ++c) line.emplace_back(1, *c);
    lines.push_back(std::move(line));
  }
  return IncidenceStructure(std::move(points), std::move(lines));
}

IncidenceMatrix::IncidenceMatrix(const IncidenceStructure& s)
    : rows_(s.line_count()), cols_(s.point_count()), cells_(rows_ * cols_, false) {
  for (std::size_t l = 0; l < rows_; ++l)
    for (std::size_t p = 0; p < cols_; ++p) cells_[l * cols_ + p] = s.on_line(l, p);
}

std::size_t IncidenceMatrix::incident_count() const {
  return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), true));
}

std::string BipartiteGraph::to_edge_list_text() const {
  std::string out;
  for (const auto& [l, r] : edges) out += "L_" + std::to_string(l + 1) + " R_" + std::to_string(r + 1) + "\n";
  return out;
}

namespace {

bool fits_split(const SignPattern& a, std::size_t k) {
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const bool same_side = (i < k) == (j < k);
      if (same_side && a(i, j) != Sign::Zero) return false;
      if (!same_side && a(i, j) != a(j, i)) return false;
    }
  }
  return true;
}

}  // namespace

BipartiteGraph bipartite_graph(const SignPattern& a, std::size_t split) {
  if (a.rows() != a.cols() || a.rows() < 2) throw ShapeError("bipartite export needs a square pattern of size >= 2");
  const std::size_t n = a.rows();
  std::size_t k = 0;
  if (split != 0) {
    if (split >= n || !fits_split(a, split)) throw ShapeError("pattern is not [[0,P],[P^T,0]] at the given split");
    k = split;
  } else if (n % 2 == 0 && fits_split(a, n / 2)) {
    k = n / 2;
  } else {
    for (std::size_t c = 1; c < n && k == 0; ++c)
      if (fits_split(a, c)) k = c;
    if (k == 0) throw ShapeError("pattern is not of the form [[0,P],[P^T,0]]");
  }
  BipartiteGraph g;
  g.left = k;
  g.right = n - k;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = k; j < n; ++j)
      if (a(i, j) != Sign::Zero) g.edges.emplace_back(i, j - k);
  return g;
}

}  // namespace signrank
