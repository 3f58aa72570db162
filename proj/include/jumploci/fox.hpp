#pragma once

#include <array>
#include <optional>
#include <vector>

#include "jumploci/exact.hpp"
#include "jumploci/homology.hpp"

namespace jumploci {

/// Finite group presentation; relator words are sequences of signed 1-based
/// generator indices (+i for x_i, -i for x_i^{-1}), freely reduced on input.
struct GroupPresentation {
  int generators = 0;
  std::vector<std::vector<int>> relators;

  static GroupPresentation make(int generators,
                                std::vector<std::vector<int>> relators);

  long relator_count() const { return static_cast<long>(relators.size()); }
  long euler_characteristic() const {
    return 1 - generators + relator_count();
  }
  /// Exponent-sum vector of each relator (rows) in the generators (cols).
  DenseMat<Int> abelianization_matrix() const;
};

std::vector<int> free_reduce(std::vector<int> word);

/// A character assigns a nonzero field value to each generator and must kill
/// the abelianized relators; InvalidCharacter otherwise.
template <class Fd>
void validate_character(const Fd& field, const GroupPresentation& P,
                        const std::vector<typename Fd::Elem>& rho);

template <class Fd>
bool is_trivial_character(const Fd& field,
                          const std::vector<typename Fd::Elem>& rho) {
  for (const auto& v : rho)
    if (!field.eq(v, field.one())) return false;
  return true;
}

/// r x g matrix of Fox derivatives ∂r_j/∂x_i evaluated at the character,
/// using ∂(uv)/∂x = ∂u/∂x + ρ(u)·∂v/∂x.
template <class Fd>
DenseMat<typename Fd::Elem> fox_jacobian(
    const Fd& field, const GroupPresentation& P,
    const std::vector<typename Fd::Elem>& rho);

/// Cohomology of k -> k^g -> k^r with d^0 = (ρ(x_i) - 1) and d^1 the Fox
/// Jacobian; the composite-vanishing check is exactly the fundamental Fox
/// identity Σ_i (∂w/∂x_i)(ρ(x_i) - 1) = ρ(w) - 1 at each relator.
template <class Fd>
std::array<long, 3> twisted_cohomology(const Fd& field,
                                       const GroupPresentation& P,
                                       const std::vector<typename Fd::Elem>& rho);

/// Homology of the chain complex k^r -> k^g -> k at the character (the
/// transposed data); dim H_i here at ρ^{-1} matches dim H^i at ρ.
template <class Fd>
std::array<long, 3> twisted_homology(const Fd& field,
                                     const GroupPresentation& P,
                                     const std::vector<typename Fd::Elem>& rho);

template <class Fd>
std::vector<typename Fd::Elem> inverse_character(
    const Fd& field, const std::vector<typename Fd::Elem>& rho);

/// Pointwise propagation for 2-complexes with χ >= 0: at each nontrivial
/// character, h1 != 0 must force h2 != 0.  For χ < 0 the check still runs but
/// is labeled out-of-hypothesis.
struct ChiPropagationReport {
  long chi = 0;
  bool within_hypothesis = true;
  bool propagates = true;
  std::vector<std::array<long, 3>> per_point;
  std::vector<bool> trivial_point;               // ρ = 1, skipped
  std::optional<size_t> first_failure;           // index into the points
};

template <class Fd>
ChiPropagationReport chi_propagation_check(
    const Fd& field, const GroupPresentation& P,
    const std::vector<std::vector<typename Fd::Elem>>& points);

// ---------------------------------------------------------------------------

template <class Fd>
void validate_character(const Fd& field, const GroupPresentation& P,
                        const std::vector<typename Fd::Elem>& rho) {
  if (static_cast<int>(rho.size()) != P.generators)
    fail("InvalidCharacter", "expected " + std::to_string(P.generators) +
                                 " values, got " + std::to_string(rho.size()));
  for (const auto& v : rho)
    if (field.is_zero(v))
      fail("InvalidCharacter", "character values must be nonzero");
  const auto ab = P.abelianization_matrix();
  for (int r = 0; r < ab.rows(); ++r) {
    auto prod = field.one();
    for (int i = 0; i < P.generators; ++i) {
      long e = ab(r, i).get_si();
      auto base = e < 0 ? field.inv(rho[static_cast<size_t>(i)])
                        : rho[static_cast<size_t>(i)];
      for (long t = 0; t < std::abs(e); ++t) prod = field.mul(prod, base);
    }
    if (!field.eq(prod, field.one()))
      fail("InvalidCharacter",
           "the character does not kill the abelianization of relator " +
               std::to_string(r + 1));
  }
}

template <class Fd>
DenseMat<typename Fd::Elem> fox_jacobian(
    const Fd& field, const GroupPresentation& P,
    const std::vector<typename Fd::Elem>& rho) {
  validate_character(field, P, rho);
  DenseMat<typename Fd::Elem> J(static_cast<int>(P.relators.size()),
                                P.generators, field.zero());
  for (size_t r = 0; r < P.relators.size(); ++r) {
    auto prefix = field.one();
    for (int letter : P.relators[r]) {
      const int i = std::abs(letter) - 1;
      if (letter > 0) {
        J(static_cast<int>(r), i) = field.add(J(static_cast<int>(r), i), prefix);
        prefix = field.mul(prefix, rho[static_cast<size_t>(i)]);
      } else {
        const auto inv = field.inv(rho[static_cast<size_t>(i)]);
        J(static_cast<int>(r), i) =
            field.sub(J(static_cast<int>(r), i), field.mul(prefix, inv));
        prefix = field.mul(prefix, inv);
      }
    }
  }
  return J;
}

template <class Fd>
std::array<long, 3> twisted_cohomology(const Fd& field,
                                       const GroupPresentation& P,
                                       const std::vector<typename Fd::Elem>& rho) {
  DenseMat<typename Fd::Elem> d0(P.generators, 1, field.zero());
  for (int i = 0; i < P.generators; ++i)
    d0(i, 0) = field.sub(rho[static_cast<size_t>(i)], field.one());
  const auto d1 = fox_jacobian(field, P, rho);
  const auto h = cochain_cohomology_over(field, {d0, d1});
  return {h[0], h[1], h[2]};
}

template <class Fd>
std::array<long, 3> twisted_homology(const Fd& field,
                                     const GroupPresentation& P,
                                     const std::vector<typename Fd::Elem>& rho) {
  const auto J = fox_jacobian(field, P, rho);
  DenseMat<typename Fd::Elem> d2(P.generators,
                                 static_cast<int>(P.relators.size()),
                                 field.zero());
  for (int i = 0; i < d2.rows(); ++i)
    for (int j = 0; j < d2.cols(); ++j) d2(i, j) = J(j, i);
  DenseMat<typename Fd::Elem> d1(1, P.generators, field.zero());
  for (int i = 0; i < P.generators; ++i)
    d1(0, i) = field.sub(rho[static_cast<size_t>(i)], field.one());
  const long r1 = rank(field, d1);
  const long r2 = rank(field, d2);
  return {1 - r1, P.generators - r1 - r2,
          static_cast<long>(P.relators.size()) - r2};
}

template <class Fd>
std::vector<typename Fd::Elem> inverse_character(
    const Fd& field, const std::vector<typename Fd::Elem>& rho) {
  std::vector<typename Fd::Elem> inv;
  inv.reserve(rho.size());
  for (const auto& v : rho) inv.push_back(field.inv(v));
  return inv;
}

template <class Fd>
ChiPropagationReport chi_propagation_check(
    const Fd& field, const GroupPresentation& P,
    const std::vector<std::vector<typename Fd::Elem>>& points) {
  ChiPropagationReport rep;
  rep.chi = P.euler_characteristic();
  rep.within_hypothesis = rep.chi >= 0;
  for (size_t n = 0; n < points.size(); ++n) {
    const auto h = twisted_cohomology(field, P, points[n]);
    rep.per_point.push_back(h);
    rep.trivial_point.push_back(is_trivial_character(field, points[n]));
    if (rep.trivial_point.back()) continue;
    if (h[1] != 0 && h[2] == 0 && rep.propagates) {
      rep.propagates = false;
      rep.first_failure = n;
    }
  }
  return rep;
}

}  // namespace jumploci
