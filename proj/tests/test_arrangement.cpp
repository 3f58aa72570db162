#include <random>

#include "doctest.h"
#include "jumploci/arrangement.hpp"
#include "jumploci/sampling.hpp"

using namespace jumploci;

namespace {

const RationalField Q;

DenseMat<Rat> rat_matrix(int rows, int cols, const std::vector<long>& entries) {
  DenseMat<Rat> m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      m(i, j) = Rat(entries[static_cast<size_t>(i) * cols + j]);
  return m;
}

Arrangement pencil3() {
  // x, y, x - y
  return Arrangement::from_matrix(rat_matrix(2, 3, {1, 0, 1, 0, 1, -1}));
}

Arrangement example_graphic() {
  // 4-cycle on 1..4 plus the triangle 3-4-5; hyperplanes in drawing order
  return Arrangement::graphic(
      {1, 2, 3, 4, 5}, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {3, 5}, {4, 5}});
}

std::vector<Rat> rat_point(const std::vector<long>& v) {
  std::vector<Rat> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

// Whitney-number oracle: b_i = (-1)^i Σ_{S : rank S = i} (-1)^{|S|}, straight
// from the rank generating function of the column matroid.
std::vector<long> whitney_dims(const Arrangement& A) {
  const int m = A.size();
  std::vector<long> signed_sum(static_cast<size_t>(A.rank) + 1, 0);
  for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
    std::vector<int> cols;
    for (int j = 0; j < m; ++j)
      if (mask & (1ul << j)) cols.push_back(j);
    DenseMat<Rat> sub(A.matrix.rows(), static_cast<int>(cols.size()));
    for (int i = 0; i < A.matrix.rows(); ++i)
      for (size_t j = 0; j < cols.size(); ++j)
        sub(i, static_cast<int>(j)) = A.matrix(i, cols[j]);
    const long r = rank(Q, sub);
    signed_sum[static_cast<size_t>(r)] += (cols.size() % 2 ? -1 : 1);
  }
  std::vector<long> dims;
  for (size_t i = 0; i < signed_sum.size(); ++i)
    dims.push_back((i % 2 ? -1 : 1) * signed_sum[i]);
  return dims;
}

}  // namespace

TEST_CASE("circuit enumeration") {
  const auto boolean =
      Arrangement::from_matrix(rat_matrix(3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1}));
  CHECK(circuits(boolean).empty());

  CHECK(circuits(pencil3()) == std::vector<std::vector<int>>{{0, 1, 2}});

  // cycles of the graph: the square, the triangle, and their symmetric sum
  CHECK(circuits(example_graphic()) ==
        std::vector<std::vector<int>>{{2, 4, 5}, {0, 1, 2, 3}, {0, 1, 3, 4, 5}});
}

TEST_CASE("graphic arrangements are essentialized") {
  const auto A = example_graphic();
  CHECK(A.essential);
  CHECK(A.rank == 4);
  CHECK(A.matrix.rows() == 4);

  // disconnected graphs pin one coordinate per component
  const auto B = Arrangement::graphic({1, 2, 3, 4}, {{1, 2}, {3, 4}});
  CHECK(B.essential);
  CHECK(B.rank == 2);
}

TEST_CASE("arrangement validation") {
  CHECK_THROWS_AS(
      Arrangement::from_matrix(rat_matrix(2, 2, {1, 0, 0, 0})), Error);
  CHECK_THROWS_AS(
      Arrangement::from_matrix(rat_matrix(2, 2, {1, 2, 1, 2})), Error);
  const auto deficient =
      Arrangement::from_matrix(rat_matrix(3, 2, {1, 0, 0, 1, 0, 0}));
  CHECK_FALSE(deficient.essential);
  CHECK_THROWS_AS(orlik_solomon(Q, deficient), Error);
}

TEST_CASE("Orlik-Solomon dimensions match Whitney numbers") {
  const auto boolean =
      Arrangement::from_matrix(rat_matrix(3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1}));
  CHECK(orlik_solomon(Q, boolean).dims() == std::vector<long>{1, 3, 3, 1});

  CHECK(orlik_solomon(Q, pencil3()).dims() == std::vector<long>{1, 3, 2});
  CHECK(whitney_dims(pencil3()) == std::vector<long>{1, 3, 2});

  const auto A = example_graphic();
  const auto os = orlik_solomon(Q, A);
  CHECK(os.dims() == whitney_dims(A));
  CHECK(os.dims()[1] == 6);
  CHECK(os.dims() == std::vector<long>{1, 6, 14, 15, 6});
}

TEST_CASE("OS dimensions equal Whitney numbers on seeded matrices") {
  std::mt19937_64 rng(904);
  std::uniform_int_distribution<int> entry(-2, 2);
  int done = 0, attempts = 0;
  while (done < 12 && ++attempts < 500) {
    const int rows = 2 + static_cast<int>(rng() % 2);
    const int cols = rows + static_cast<int>(rng() % 3);
    DenseMat<Rat> m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m(i, j) = Rat(entry(rng));
    try {
      const auto A = Arrangement::from_matrix(m);
      if (!A.essential) continue;
      CHECK(orlik_solomon(Q, A).dims() == whitney_dims(A));
      ++done;
    } catch (const Error&) {
      continue;  // zero or repeated hyperplane: resample
    }
  }
}

TEST_CASE("projective resonance at the pinned generic points") {
  const auto os = orlik_solomon(Q, example_graphic());

  // a = 0 returns the projective Betti numbers
  const auto dims = projective_resonance_at(Q, os, rat_point({0, 0, 0, 0, 0, 0}));
  CHECK(dims == std::vector<long>{1, 5, 9, 6});
  // deconing consistency with the central dimensions
  for (size_t p = 0; p + 1 < os.dims().size(); ++p)
    CHECK(os.dims()[p] ==
          (p < dims.size() ? dims[p] : 0) + (p > 0 ? dims[p - 1] : 0));

  // generic point of the component with blocks {1},{2},{3},{4,5,6}
  const auto h456 =
      projective_propagation_at(Q, os, rat_point({0, 0, 0, 1, 1, -2}));
  CHECK(h456.h[1] >= 1);
  CHECK(h456.h[2] >= 1);
  CHECK(h456.h[3] >= 1);
  CHECK(h456.propagates);

  // generic point of the component with blocks {1,2,3,4},{5},{6}
  const auto h1234 =
      projective_propagation_at(Q, os, rat_point({1, -1, 1, -1, 0, 0}));
  CHECK(h1234.h[1] == 0);
  CHECK(h1234.h[2] >= 1);
  CHECK(h1234.h[3] >= 1);
  CHECK(h1234.propagates);

  CHECK_THROWS_AS(projective_resonance_at(Q, os, rat_point({1, 0, 0, 0, 0, 0})),
                  Error);
}

TEST_CASE("boolean arrangements are resonance-free away from zero") {
  const auto boolean = Arrangement::from_matrix(
      rat_matrix(4, 4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1}));
  const auto os = orlik_solomon(Q, boolean);
  PointSampler sampler(3);
  for (int t = 0; t < 10; ++t) {
    const auto a = sampler.projective_point(Q, 4);
    bool zero = true;
    for (const auto& x : a) zero = zero && sgn(x) == 0;
    if (zero) continue;
    const auto check = projective_propagation_at(Q, os, a);
    for (long h : check.h) CHECK(h == 0);
    CHECK(check.propagates);
  }
}

TEST_CASE("propagation holds at seeded projective points") {
  const auto os = orlik_solomon(Q, example_graphic());
  PointSampler sampler(kDefaultSeed);
  long euler = 0;
  bool euler_set = false;
  for (int t = 0; t < 25; ++t) {
    const auto a = sampler.projective_point(Q, 6);
    const auto check = projective_propagation_at(Q, os, a);
    CHECK(check.propagates);
    long chi = 0;
    for (size_t p = 0; p < check.h.size(); ++p)
      chi += (p % 2 ? -1 : 1) * check.h[p];
    if (!euler_set) {
      euler = chi;
      euler_set = true;
    }
    CHECK(chi == euler);
  }
}
