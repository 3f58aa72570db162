#include "jumploci/arrangement.hpp"

#include <algorithm>
#include <map>

namespace jumploci {

namespace {

DenseMat<Rat> column_submatrix(const DenseMat<Rat>& m,
                               const std::vector<int>& cols) {
  DenseMat<Rat> s(m.rows(), static_cast<int>(cols.size()));
  for (int i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < cols.size(); ++j)
      s(i, static_cast<int>(j)) = m(i, cols[j]);
  return s;
}

void validate_columns(const DenseMat<Rat>& m) {
  for (int j = 0; j < m.cols(); ++j) {
    bool zero = true;
    for (int i = 0; i < m.rows() && zero; ++i)
      if (sgn(m(i, j)) != 0) zero = false;
    if (zero)
      fail("InvalidArrangement",
           "column " + std::to_string(j + 1) + " is the zero form");
  }
  // proportional columns define the same hyperplane
  for (int a = 0; a < m.cols(); ++a)
    for (int b = a + 1; b < m.cols(); ++b) {
      if (rank(RationalField{}, column_submatrix(m, {a, b})) < 2)
        fail("InvalidArrangement", "columns " + std::to_string(a + 1) +
                                       " and " + std::to_string(b + 1) +
                                       " define the same hyperplane");
    }
}

}  // namespace

Arrangement Arrangement::from_matrix(DenseMat<Rat> matrix) {
  if (matrix.rows() == 0 || matrix.cols() == 0)
    fail("InvalidArrangement", "the defining matrix must be nonempty");
  validate_columns(matrix);
  Arrangement A;
  A.rank = jumploci::rank(RationalField{}, matrix);
  A.essential = A.rank == matrix.rows();
  A.matrix = std::move(matrix);
  for (int j = 0; j < A.matrix.cols(); ++j)
    A.labels.push_back(std::to_string(j + 1));
  return A;
}

Arrangement Arrangement::graphic(
    const std::vector<Vertex>& vertices,
    const std::vector<std::pair<Vertex, Vertex>>& edges) {
  // validate through Graph, but keep the given edge order for the columns
  std::vector<std::pair<Vertex, Vertex>> normalized;
  for (auto [a, b] : edges)
    normalized.emplace_back(std::min(a, b), std::max(a, b));
  const Graph g = Graph::make(vertices, normalized);
  if (g.edges.size() != normalized.size())
    fail("InvalidArrangement", "repeated edge in the graphic arrangement");
  if (g.edges.empty())
    fail("InvalidArrangement", "a graphic arrangement needs at least one edge");

  // essential coordinates: drop the largest vertex of each component
  std::map<Vertex, int> coordinate;
  {
    std::vector<bool> seen(g.vertices.size(), false);
    for (size_t s = 0; s < g.vertices.size(); ++s) {
      if (seen[s]) continue;
      std::vector<Vertex> component{g.vertices[s]};
      seen[s] = true;
      for (size_t q = 0; q < component.size(); ++q)
        for (size_t t = 0; t < g.vertices.size(); ++t)
          if (!seen[t] && g.adjacent(component[q], g.vertices[t])) {
            seen[t] = true;
            component.push_back(g.vertices[t]);
          }
      std::sort(component.begin(), component.end());
      for (size_t q = 0; q + 1 < component.size(); ++q) {
        const int next = static_cast<int>(coordinate.size());
        coordinate[component[q]] = next;
      }
      coordinate[component.back()] = -1;  // pinned to zero
    }
  }
  const int rows =
      static_cast<int>(std::count_if(coordinate.begin(), coordinate.end(),
                                     [](const auto& kv) { return kv.second >= 0; }));
  DenseMat<Rat> m(rows, static_cast<int>(normalized.size()), Rat(0));
  for (size_t j = 0; j < normalized.size(); ++j) {
    const auto [a, b] = normalized[j];
    if (coordinate.at(a) >= 0) m(coordinate.at(a), static_cast<int>(j)) = 1;
    if (coordinate.at(b) >= 0) m(coordinate.at(b), static_cast<int>(j)) = -1;
  }
  Arrangement A = from_matrix(std::move(m));
  A.labels.clear();
  for (auto [a, b] : normalized)
    A.labels.push_back("x" + std::to_string(a) + "-x" + std::to_string(b));
  return A;
}

std::vector<std::vector<int>> circuits(const Arrangement& A) {
  const int m = A.size();
  std::vector<std::vector<int>> out;
  const int max_size = static_cast<int>(A.rank) + 1;
  std::vector<int> subset;
  auto contains_circuit = [&](const std::vector<int>& s) {
    for (const auto& c : out)
      if (std::includes(s.begin(), s.end(), c.begin(), c.end())) return true;
    return false;
  };
  auto rec = [&](auto&& self, int next, int remaining) -> void {
    if (remaining == 0) {
      if (contains_circuit(subset)) return;
      if (rank(RationalField{}, column_submatrix(A.matrix, subset)) <
          static_cast<long>(subset.size()))
        out.push_back(subset);
      return;
    }
    for (int j = next; j + remaining <= m; ++j) {
      subset.push_back(j);
      self(self, j + 1, remaining - 1);
      subset.pop_back();
    }
  };
  for (int size = 1; size <= max_size; ++size) rec(rec, 0, size);
  return out;
}

}  // namespace jumploci
