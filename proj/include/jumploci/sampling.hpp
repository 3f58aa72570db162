#pragma once

#include <cstdint>
#include <random>
#include <type_traits>
#include <vector>

#include "jumploci/exact.hpp"
#include "jumploci/fox.hpp"

namespace jumploci {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed0c0dedull;

/// Deterministic point source: identical seeds produce identical streams for
/// a fixed field and request sequence.
class PointSampler {
 public:
  explicit PointSampler(std::uint64_t seed) : rng_(seed) {}

  long uniform(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng_);
  }

  template <class Fd>
  typename Fd::Elem nonzero_scalar(const Fd& field) {
    if constexpr (std::is_same_v<Fd, RationalField>) {
      const long num = uniform(1, 9) * (uniform(0, 1) ? 1 : -1);
      const long den = uniform(1, 4);
      Rat q(num, den);
      q.canonicalize();
      return q;
    } else {
      return static_cast<typename Fd::Elem>(
          uniform(1, static_cast<long>(field.characteristic()) - 1));
    }
  }

  /// Point of k^m with nonzero coordinates exactly on `support` (0-based).
  template <class Fd>
  std::vector<typename Fd::Elem> supported_point(const Fd& field, int m,
                                                 const std::vector<int>& support) {
    std::vector<typename Fd::Elem> a(static_cast<size_t>(m), field.zero());
    for (int i : support) a[static_cast<size_t>(i)] = nonzero_scalar(field);
    return a;
  }

  /// Point with Σ a_j = 0 (the last coordinate balances the rest).
  template <class Fd>
  std::vector<typename Fd::Elem> projective_point(const Fd& field, int m) {
    std::vector<typename Fd::Elem> a(static_cast<size_t>(m), field.zero());
    auto sum = field.zero();
    for (int i = 0; i + 1 < m; ++i) {
      a[static_cast<size_t>(i)] = nonzero_scalar(field);
      sum = field.add(sum, a[static_cast<size_t>(i)]);
    }
    if (m > 0) a[static_cast<size_t>(m) - 1] = field.neg(sum);
    return a;
  }

  /// Characters valid for the presentation: exponent vectors are drawn from
  /// the integer kernel of the abelianization matrix, then applied to a
  /// random nonzero base, so every relator constraint holds exactly.
  template <class Fd>
  std::vector<std::vector<typename Fd::Elem>> characters(
      const Fd& field, const GroupPresentation& P, int count) {
    const auto kernel = integer_kernel(P.abelianization_matrix());
    std::vector<std::vector<typename Fd::Elem>> out;
    for (int n = 0; n < count; ++n) {
      std::vector<long> exponents(static_cast<size_t>(P.generators), 0);
      for (const auto& basis : kernel) {
        const long c = uniform(-2, 2);
        for (size_t i = 0; i < basis.size(); ++i)
          exponents[i] += c * basis[i].get_si();
      }
      typename Fd::Elem base = field.zero();
      if constexpr (std::is_same_v<Fd, RationalField>) {
        const long candidates[] = {2, 3, 5, 7};
        base = field.from_int(candidates[uniform(0, 3)]);
      } else {
        // avoid 1 so that nonzero exponents give nontrivial values
        const unsigned long p = field.characteristic();
        base = p == 2 ? field.one()
                      : static_cast<typename Fd::Elem>(
                            uniform(2, static_cast<long>(p) - 1));
      }
      std::vector<typename Fd::Elem> rho;
      rho.reserve(static_cast<size_t>(P.generators));
      for (long e : exponents) {
        auto v = field.one();
        const auto b = e < 0 ? field.inv(base) : base;
        for (long t = 0; t < std::abs(e); ++t) v = field.mul(v, b);
        rho.push_back(v);
      }
      validate_character(field, P, rho);
      out.push_back(std::move(rho));
    }
    return out;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace jumploci
