#include <random>

#include "doctest.h"
#include "jumploci/homology.hpp"
#include "oracles.hpp"

using namespace jumploci;

namespace {

SimplicialComplex boundary_of_simplex(int m) {
  std::vector<Face> facets;
  for (int drop = 1; drop <= m; ++drop) {
    Face f;
    for (int v = 1; v <= m; ++v)
      if (v != drop) f.push_back(v);
    facets.push_back(std::move(f));
  }
  return SimplicialComplex::from_facets(facets);
}

SimplicialComplex random_complex(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nverts(1, 6), nfacets(1, 4);
  const int m = nverts(rng);
  std::uniform_int_distribution<unsigned long> mask(1, (1ul << m) - 1);
  std::vector<Face> facets;
  for (int t = 0, count = nfacets(rng); t < count; ++t) {
    Face f;
    const unsigned long bits = mask(rng);
    for (int i = 0; i < m; ++i)
      if (bits & (1ul << i)) f.push_back(i + 1);
    facets.push_back(std::move(f));
  }
  return SimplicialComplex::from_facets(facets);
}

long torsion_count_div_by(const HomologyProfile::Group& g, unsigned long p) {
  long c = 0;
  for (const auto& d : g.torsion)
    if (mpz_fdiv_ui(d.get_mpz_t(), p) == 0) ++c;
  return c;
}

}  // namespace

TEST_CASE("spheres and points") {
  const auto s2 = boundary_of_simplex(4);
  const auto h = reduced_homology(s2, CoefficientField::integers());
  CHECK(h.dim_at(-1) == 0);
  CHECK(h.dim_at(0) == 0);
  CHECK(h.dim_at(1) == 0);
  CHECK(h.dim_at(2) == 1);
  for (int d = -1; d <= 2; ++d) CHECK(h.at(d)->torsion.empty());

  const auto pt = SimplicialComplex::from_facets({{1}});
  CHECK(reduced_homology(pt, CoefficientField::integers()).trivial());
  CHECK(reduced_homology(pt, CoefficientField::prime_field(2)).trivial());

  const auto empty = SimplicialComplex::empty_complex({1, 2});
  CHECK(reduced_homology(empty, CoefficientField::rationals()).dim_at(-1) == 1);

  CHECK_THROWS_AS(
      reduced_homology(SimplicialComplex::void_complex({1}),
                       CoefficientField::rationals()),
      Error);
}

TEST_CASE("projective plane detects torsion and characteristic") {
  const auto rp2 = oracle::rp2_six();
  const auto hz = reduced_homology(rp2, CoefficientField::integers());
  CHECK(hz.dim_at(0) == 0);
  CHECK(hz.dim_at(1) == 0);
  CHECK(hz.at(1)->torsion == std::vector<Int>{2});
  CHECK(hz.dim_at(2) == 0);
  CHECK(hz.at(2)->torsion.empty());

  const auto h2 = reduced_homology(rp2, CoefficientField::prime_field(2));
  CHECK(h2.dim_at(1) == 1);
  CHECK(h2.dim_at(2) == 1);

  CHECK(reduced_homology(rp2, CoefficientField::rationals()).trivial());
  CHECK(reduced_homology(rp2, CoefficientField::prime_field(3)).trivial());
}

TEST_CASE("euler characteristic agrees with the f-vector over every field") {
  std::mt19937_64 rng(1123);
  const CoefficientField fields[] = {
      CoefficientField::rationals(), CoefficientField::prime_field(2),
      CoefficientField::prime_field(3), CoefficientField::integers()};
  for (int trial = 0; trial < 40; ++trial) {
    const auto L = random_complex(rng);
    long chi_f = 0;
    const auto f = L.f_vector();
    for (size_t i = 0; i < f.size(); ++i) chi_f += (i % 2 ? f[i] : -f[i]);
    for (const auto& k : fields) {
      const auto h = reduced_homology(L, k);
      long chi_h = 0;
      for (int d = -1; d <= h.top_degree; ++d)
        chi_h += (d % 2 == 0 ? 1 : -1) * h.dim_at(d);
      CHECK(chi_h == chi_f);  // both signed from degree -1
    }
  }
}

TEST_CASE("universal coefficients on seeded complexes") {
  std::mt19937_64 rng(5150);
  for (int trial = 0; trial < 30; ++trial) {
    const auto L = random_complex(rng);
    const auto hz = reduced_homology(L, CoefficientField::integers());
    const auto hq = reduced_homology(L, CoefficientField::rationals());
    for (unsigned long p : {2ul, 3ul, 5ul}) {
      const auto hp = reduced_homology(L, CoefficientField::prime_field(p));
      for (int d = -1; d <= hz.top_degree; ++d) {
        CHECK(hq.dim_at(d) == hz.at(d)->betti);
        const long expected = hz.at(d)->betti + torsion_count_div_by(*hz.at(d), p) +
                              (d > -1 ? torsion_count_div_by(*hz.at(d - 1), p) : 0);
        CHECK(hp.dim_at(d) == expected);
        CHECK(hp.dim_at(d) >= hq.dim_at(d));
      }
    }
  }
}

TEST_CASE("cochain cohomology on pinned examples") {
  // 0 -> k -> k -> 0 with the identity map
  DenseMat<Rat> id(1, 1, Rat(1));
  CHECK(cochain_cohomology({id}, CoefficientField::rationals()) ==
        std::vector<long>{0, 0});

  // all-zero differentials leave the term dimensions
  DenseMat<Rat> z(3, 2, Rat(0));
  DenseMat<Rat> z2(1, 3, Rat(0));
  CHECK(cochain_cohomology({z, z2}, CoefficientField::rationals()) ==
        std::vector<long>{2, 3, 1});

  // Aomoto complex of two points at a = (1,1): k -> k^2 -> 0
  DenseMat<Rat> d0(2, 1, Rat(1));
  DenseMat<Rat> d1(0, 2, Rat(0));
  CHECK(cochain_cohomology({d0, d1}, CoefficientField::rationals()) ==
        std::vector<long>{0, 1, 0});

  // failing composition is rejected
  DenseMat<Rat> a(1, 1, Rat(1));
  DenseMat<Rat> b(1, 1, Rat(1));
  CHECK_THROWS_AS(cochain_cohomology({a, b}, CoefficientField::rationals()),
                  Error);
}

TEST_CASE("sparse block homology agrees with the dense path") {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 20; ++trial) {
    const auto L = random_complex(rng);
    const int d = L.dim();
    for (unsigned long p : {0ul, 2ul, 5ul}) {
      const CoefficientField k = p == 0 ? CoefficientField::rationals()
                                        : CoefficientField::prime_field(p);
      const auto dense = reduced_homology(L, k);
      with_field(k, [&](auto fd) {
        using K = typename decltype(fd)::Elem;
        std::vector<long> terms;
        std::vector<SparseMat<K>> diffs;
        terms.push_back(1);  // C_{-1}
        diffs.push_back({0, 1, {}});
        for (int deg = 0; deg <= d; ++deg) {
          const auto b = boundary_matrix(L, deg);
          terms.push_back(b.cols());
          SparseMat<K> s{b.rows(), b.cols(), {}};
          for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j)
              if (sgn(b(i, j)) != 0)
                s.entries.emplace_back(i, j, fd.from_int(b(i, j).get_si()));
          diffs.push_back(std::move(s));
        }
        const auto h = sparse_complex_homology(fd, terms, diffs);
        for (int deg = -1; deg <= d; ++deg)
          CHECK(h[static_cast<size_t>(deg) + 1] == dense.dim_at(deg));
      });
    }
  }
}
