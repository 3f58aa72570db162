#include "jumploci/homology.hpp"

#include <algorithm>

namespace jumploci {

DenseMat<Int> boundary_matrix(const SimplicialComplex& L, int p) {
  if (p < 0) fail("BadDegree", "boundary matrices start at degree 0");
  const auto domain = L.faces_of_dim(p);
  const auto codomain = L.faces_of_dim(p - 1);
  DenseMat<Int> m(static_cast<int>(codomain.size()),
                  static_cast<int>(domain.size()), Int(0));
  for (size_t j = 0; j < domain.size(); ++j) {
    const Face& sigma = domain[j];
    for (size_t drop = 0; drop < sigma.size(); ++drop) {
      Face tau = sigma;
      tau.erase(tau.begin() + static_cast<long>(drop));
      const auto it =
          std::lower_bound(codomain.begin(), codomain.end(), tau);
      m(static_cast<int>(it - codomain.begin()), static_cast<int>(j)) =
          (drop % 2 == 0) ? 1 : -1;
    }
  }
  return m;
}

HomologyProfile reduced_homology(const SimplicialComplex& L,
                                 const CoefficientField& k) {
  if (L.is_void())
    fail("VoidComplex", "reduced homology of the void complex is undefined");
  const int d = L.dim();
  const auto f = L.f_vector();  // f[0] = f_{-1} = 1

  HomologyProfile out;
  out.field = k;
  out.top_degree = d;
  out.groups.resize(static_cast<size_t>(d) + 2);

  // ranks[p+1] = rank ∂_p, and over Z the divisors per boundary map
  std::vector<long> ranks(static_cast<size_t>(d) + 3, 0);
  std::vector<std::vector<Int>> divisors(static_cast<size_t>(d) + 3);
  for (int p = 0; p <= d; ++p) {
    DenseMat<Int> b = boundary_matrix(L, p);
    if (k.is_integers()) {
      SmithResult s = smith_normal_form(std::move(b));
      ranks[static_cast<size_t>(p) + 1] = s.rank;
      divisors[static_cast<size_t>(p) + 1] = std::move(s.divisors);
    } else {
      ranks[static_cast<size_t>(p) + 1] = with_field(k, [&](auto fd) {
        DenseMat<typename decltype(fd)::Elem> m(b.rows(), b.cols(), fd.zero());
        for (int i = 0; i < b.rows(); ++i)
          for (int j = 0; j < b.cols(); ++j)
            m(i, j) = fd.from_int(b(i, j).get_si());
        return rank(fd, std::move(m));
      });
    }
  }

  for (int p = -1; p <= d; ++p) {
    auto& g = out.groups[static_cast<size_t>(p) + 1];
    g.betti = f[static_cast<size_t>(p) + 1] - ranks[static_cast<size_t>(p) + 1] -
              ranks[static_cast<size_t>(p) + 2];
    if (k.is_integers())
      for (const Int& e : divisors[static_cast<size_t>(p) + 2])
        if (e > 1) g.torsion.push_back(e);
  }
  return out;
}

bool is_acyclic(const SimplicialComplex& L, const CoefficientField& k) {
  return reduced_homology(L, k).trivial();
}

std::vector<long> cochain_cohomology(const std::vector<DenseMat<Rat>>& deltas,
                                     const CoefficientField& k) {
  if (!k.is_field())
    fail("IntegerCoefficientsUnsupported",
         "cochain cohomology requires a field");
  if (k.is_rationals()) return cochain_cohomology_over(RationalField{}, deltas);
  const PrimeField fd(k.p);
  std::vector<DenseMat<unsigned long>> reduced;
  reduced.reserve(deltas.size());
  for (const auto& m : deltas) {
    DenseMat<unsigned long> r(m.rows(), m.cols(), 0);
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) {
        const Rat& q = m(i, j);
        const unsigned long den = mpz_fdiv_ui(q.get_den().get_mpz_t(), fd.p);
        if (den == 0)
          fail("BadScalar", "matrix entry has denominator divisible by " +
                                std::to_string(fd.p));
        r(i, j) = fd.div(mpz_fdiv_ui(q.get_num().get_mpz_t(), fd.p), den);
      }
    reduced.push_back(std::move(r));
  }
  return cochain_cohomology_over(fd, reduced);
}

}  // namespace jumploci
