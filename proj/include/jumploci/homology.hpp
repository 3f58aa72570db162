#pragma once

#include <vector>

#include "jumploci/exact.hpp"
#include "jumploci/simplicial.hpp"

namespace jumploci {

/// Reduced simplicial (co)homology in degrees -1..dim.  Over Z each degree
/// carries a Betti number and the elementary divisors > 1 of the torsion
/// subgroup; over a field `betti` is the dimension and `torsion` stays empty.
struct HomologyProfile {
  struct Group {
    long betti = 0;
    std::vector<Int> torsion;
    bool trivial() const { return betti == 0 && torsion.empty(); }
  };

  CoefficientField field;
  int top_degree = -1;        // dim of the complex
  std::vector<Group> groups;  // groups[0] is degree -1

  const Group* at(int degree) const {
    const long idx = degree + 1;
    if (idx < 0 || idx >= static_cast<long>(groups.size())) return nullptr;
    return &groups[idx];
  }
  long dim_at(int degree) const {
    const Group* g = at(degree);
    return g ? g->betti : 0;
  }
  bool trivial() const {
    for (const auto& g : groups)
      if (!g.trivial()) return false;
    return true;
  }
};

/// ∂_p : C_p -> C_{p-1} of the reduced (augmented) chain complex over Z,
/// p >= 0; C_{-1} is spanned by the empty face.
DenseMat<Int> boundary_matrix(const SimplicialComplex& L, int p);

/// Reduced homology of a nonempty complex; rejects the void complex.
HomologyProfile reduced_homology(const SimplicialComplex& L,
                                 const CoefficientField& k);

/// All reduced homology vanishes (over Z: Betti numbers and torsion).
bool is_acyclic(const SimplicialComplex& L, const CoefficientField& k);

/// Cohomology dimensions of the cochain complex with differentials
/// deltas[i] : C^i -> C^{i+1} (rows = dim C^{i+1}, cols = dim C^i).  Term
/// dimensions are inferred from the matrix shapes; consecutive maps must
/// compose to zero (NotAComplex otherwise).
std::vector<long> cochain_cohomology(const std::vector<DenseMat<Rat>>& deltas,
                                     const CoefficientField& k);

template <class Fd>
std::vector<long> cochain_cohomology_over(
    const Fd& field, const std::vector<DenseMat<typename Fd::Elem>>& deltas) {
  const int n = static_cast<int>(deltas.size());
  if (n == 0) return {};
  std::vector<long> dims(n + 1);
  for (int i = 0; i < n; ++i) dims[i] = deltas[i].cols();
  dims[n] = deltas[n - 1].rows();
  for (int i = 0; i + 1 < n; ++i) {
    if (deltas[i].rows() != deltas[i + 1].cols())
      fail("NotAComplex", "term " + std::to_string(i + 1) +
                              " has inconsistent dimensions");
    if (!is_zero_matrix(field, matmul(field, deltas[i + 1], deltas[i])))
      fail("NotAComplex", "consecutive differentials at position " +
                              std::to_string(i) + " do not compose to zero");
  }
  std::vector<long> r(n + 2, 0);  // r[i+1] = rank(deltas[i])
  for (int i = 0; i < n; ++i) r[i + 1] = rank(field, deltas[i]);
  std::vector<long> h(n + 1);
  for (int i = 0; i <= n; ++i) h[i] = dims[i] - r[i] - r[i + 1];
  return h;
}

}  // namespace jumploci
