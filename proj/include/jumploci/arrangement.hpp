#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jumploci/algebra.hpp"
#include "jumploci/exact.hpp"
#include "jumploci/simplicial.hpp"

namespace jumploci {

/// Central arrangement of linear hyperplanes, given by the matrix whose
/// columns are the defining forms.  Graphic arrangements (one form x_a - x_b
/// per edge) are built in essentialized coordinates, dropping one coordinate
/// per connected component, so that rank equals the number of rows.
struct Arrangement {
  DenseMat<Rat> matrix;             // rows x m columns
  std::vector<std::string> labels;  // per hyperplane, 1-based default
  long rank = 0;
  bool essential = false;

  int size() const { return matrix.cols(); }

  static Arrangement from_matrix(DenseMat<Rat> matrix);
  static Arrangement graphic(const std::vector<Vertex>& vertices,
                             const std::vector<std::pair<Vertex, Vertex>>& edges);
};

/// Minimal dependent column sets (0-based indices), by increasing size then
/// lexicographically.
std::vector<std::vector<int>> circuits(const Arrangement& A);

/// Central Orlik-Solomon algebra E/I, I generated by ∂e_C over all circuits
/// C; the basis is the set of monomials surviving degreewise Gauss reduction
/// of the circuit relations (the no-broken-circuit monomials).
template <class Fd>
GradedAlgebraModel<Fd> orlik_solomon(const Fd& field, const Arrangement& A);

/// Cohomology of the Aomoto complex of the projective complement at a point
/// with Σ a_j = 0, recovered from the central complex through the deconing
/// split dim H^p(A_M, a) = dim H^p(A_U, a) + dim H^{p-1}(A_U, a).
/// Returns h^0..h^n with n = rank - 1.
template <class Fd>
std::vector<long> projective_resonance_at(
    const Fd& field, const GradedAlgebraModel<Fd>& central,
    const std::vector<typename Fd::Elem>& a);

struct PointPropagation {
  std::vector<long> h;
  bool propagates = true;
  std::optional<std::pair<int, int>> failure;  // h^p != 0 but h^q = 0, p < q
};

template <class Fd>
PointPropagation projective_propagation_at(
    const Fd& field, const GradedAlgebraModel<Fd>& central,
    const std::vector<typename Fd::Elem>& a);

// ---------------------------------------------------------------------------

template <class Fd>
GradedAlgebraModel<Fd> orlik_solomon(const Fd& field, const Arrangement& A) {
  if (!A.essential)
    fail("NotEssential", "the arrangement has rank " + std::to_string(A.rank) +
                             " in ambient dimension " +
                             std::to_string(A.matrix.rows()));
  const int m = A.size();
  const auto E = exterior_algebra(field, m);
  const auto circs = circuits(A);

  std::vector<std::vector<std::vector<typename Fd::Elem>>> relations(
      static_cast<size_t>(E.socle_degree()) + 1);
  // index of each monomial within its degree of E
  std::vector<std::map<Monomial, int>> index(static_cast<size_t>(m) + 1);
  for (int p = 0; p <= m; ++p)
    for (size_t i = 0; i < E.basis[static_cast<size_t>(p)].size(); ++i)
      index[static_cast<size_t>(p)][E.basis[static_cast<size_t>(p)][i]] =
          static_cast<int>(i);

  for (const auto& C : circs) {
    const int c = static_cast<int>(C.size());
    for (int p = c - 1; p <= E.socle_degree(); ++p) {
      // all monomial multiples e_T ∂e_C in degree p
      for (const Monomial& T : E.basis[static_cast<size_t>(p - c + 1)]) {
        std::vector<typename Fd::Elem> rel(E.basis[static_cast<size_t>(p)].size(),
                                           field.zero());
        bool nonzero = false;
        for (int drop = 0; drop < c; ++drop) {
          Monomial part;
          for (int t = 0; t < c; ++t)
            if (t != drop) part.push_back(C[static_cast<size_t>(t)]);
          Monomial merged;
          const int sign = exterior_merge(T, part, &merged);
          if (sign == 0) continue;
          const int s = (drop % 2 == 0 ? 1 : -1) * sign;
          auto& slot = rel[static_cast<size_t>(
              index[static_cast<size_t>(p)].at(merged))];
          slot = field.add(slot, s > 0 ? field.one() : field.neg(field.one()));
          nonzero = true;
        }
        if (nonzero) relations[static_cast<size_t>(p)].push_back(std::move(rel));
      }
    }
  }
  auto os = quotient_model(E, relations);
  std::vector<std::string> names;
  for (const auto& label : A.labels) names.push_back(label);
  os.generator_names = std::move(names);
  return os;
}

template <class Fd>
std::vector<long> projective_resonance_at(
    const Fd& field, const GradedAlgebraModel<Fd>& central,
    const std::vector<typename Fd::Elem>& a) {
  if (static_cast<int>(a.size()) != central.generators)
    fail("LengthMismatch", "point length disagrees with hyperplane count");
  auto sum = field.zero();
  for (const auto& v : a) sum = field.add(sum, v);
  if (!field.is_zero(sum))
    fail("NotProjectivePoint", "projective points must satisfy Σ a_j = 0");

  const auto h_central = aomoto_cohomology(central, a);
  const int n = central.socle_degree() - 1;
  std::vector<long> h(static_cast<size_t>(n) + 1, 0);
  long prev = 0;
  for (int p = 0; p <= n; ++p) {
    const long cur = h_central[static_cast<size_t>(p)] - prev;
    if (cur < 0)
      fail("InternalInvariantViolation",
           "deconing split produced a negative dimension in degree " +
               std::to_string(p));
    h[static_cast<size_t>(p)] = cur;
    prev = cur;
  }
  if (prev != h_central[static_cast<size_t>(n) + 1])
    fail("InternalInvariantViolation",
         "deconing split inconsistent at the socle degree");
  return h;
}

template <class Fd>
PointPropagation projective_propagation_at(
    const Fd& field, const GradedAlgebraModel<Fd>& central,
    const std::vector<typename Fd::Elem>& a) {
  PointPropagation out;
  out.h = projective_resonance_at(field, central, a);
  int first = -1;
  for (size_t p = 0; p < out.h.size(); ++p) {
    if (out.h[p] != 0 && first < 0) first = static_cast<int>(p);
    if (first >= 0 && out.h[p] == 0) {
      out.propagates = false;
      out.failure = {first, static_cast<int>(p)};
      break;
    }
  }
  return out;
}

}  // namespace jumploci
