#include <random>

#include "doctest.h"
#include "jumploci/exact.hpp"

using namespace jumploci;

namespace {

DenseMat<Int> int_matrix(int rows, int cols, const std::vector<long>& entries) {
  DenseMat<Int> m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = entries[static_cast<size_t>(i) * cols + j];
  return m;
}

Rat determinant(const DenseMat<Int>& m) {
  REQUIRE(m.rows() == m.cols());
  DenseMat<Rat> a(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) a(i, j) = Rat(m(i, j));
  Rat det(1);
  for (int col = 0; col < a.cols(); ++col) {
    int pivot = -1;
    for (int i = col; i < a.rows(); ++i)
      if (sgn(a(i, col)) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) return Rat(0);
    if (pivot != col) {
      for (int j = 0; j < a.cols(); ++j) std::swap(a(pivot, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    for (int i = col + 1; i < a.rows(); ++i) {
      if (sgn(a(i, col)) == 0) continue;
      const Rat f = a(i, col) / a(col, col);
      for (int j = col; j < a.cols(); ++j) a(i, j) -= f * a(col, j);
    }
  }
  return det;
}

}  // namespace

TEST_CASE("coefficient fields parse and validate") {
  CHECK(CoefficientField::parse("Z").is_integers());
  CHECK(CoefficientField::parse("Q").is_rationals());
  CHECK(CoefficientField::parse("GF(7)").characteristic() == 7);
  CHECK(CoefficientField::parse("GF(2)").name() == "GF(2)");
  CHECK_THROWS_AS(CoefficientField::parse("GF(6)"), Error);
  CHECK_THROWS_AS(CoefficientField::parse("R"), Error);
  CHECK_THROWS_AS(CoefficientField::prime_field(1), Error);
}

TEST_CASE("rational parsing is exact and strict") {
  CHECK(parse_rational("3/4") == Rat(3, 4));
  CHECK(parse_rational("-6/4") == Rat(-3, 2));
  CHECK(parse_rational("12") == Rat(12));
  CHECK(rational_to_string(parse_rational("-6/4")) == "-3/2");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("1.5"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
}

TEST_CASE("prime field arithmetic") {
  PrimeField f(101);
  for (unsigned long a = 1; a < 101; ++a)
    CHECK(f.mul(a, f.inv(a)) == 1);
  CHECK(f.from_int(-1) == 100);
  CHECK(f.from_string("205") == 3);
  CHECK(f.from_string("1/2") == f.inv(2));
  CHECK_THROWS_AS(f.inv(0), Error);
  CHECK_THROWS_AS(PrimeField(91), Error);
}

TEST_CASE("smith normal form on pinned examples") {
  // diag(2,3) is equivalent to diag(1,6)
  auto s = smith_normal_form(int_matrix(2, 2, {2, 0, 0, 3}));
  CHECK(s.rank == 2);
  REQUIRE(s.divisors.size() == 2);
  CHECK(s.divisors[0] == 1);
  CHECK(s.divisors[1] == 6);

  s = smith_normal_form(int_matrix(2, 3, {0, 0, 0, 0, 0, 0}));
  CHECK(s.rank == 0);
  CHECK(s.divisors.empty());

  s = smith_normal_form(int_matrix(3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1}));
  CHECK(s.rank == 3);
  CHECK(s.divisors == std::vector<Int>{1, 1, 1});
}

TEST_CASE("smith normal form invariants on seeded matrices") {
  std::mt19937_64 rng(20240517);
  std::uniform_int_distribution<int> dim(1, 5), entry(-6, 6);
  for (int trial = 0; trial < 200; ++trial) {
    const int r = dim(rng), c = dim(rng);
    DenseMat<Int> m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m(i, j) = entry(rng);
    const auto s = smith_normal_form(m);
    CHECK(s.rank == rank_over_rationals(m));
    for (size_t i = 0; i + 1 < s.divisors.size(); ++i) {
      CHECK(s.divisors[i] > 0);
      CHECK(s.divisors[i + 1] % s.divisors[i] == 0);
    }
    if (r == c && s.rank == r) {
      Int prod(1);
      for (const auto& d : s.divisors) prod *= d;
      CHECK(Rat(prod) == abs(determinant(m)));
    }
    // kernel basis has the right size and is annihilated by m
    const auto kernel = integer_kernel(m);
    CHECK(static_cast<long>(kernel.size()) == c - s.rank);
    for (const auto& v : kernel) {
      bool nonzero = false;
      for (const auto& x : v) nonzero = nonzero || sgn(x) != 0;
      CHECK(nonzero);
      for (int i = 0; i < r; ++i) {
        Int acc(0);
        for (int j = 0; j < c; ++j) acc += m(i, j) * v[static_cast<size_t>(j)];
        CHECK(acc == 0);
      }
    }
  }
}

TEST_CASE("field rank bounds the modular rank") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> dim(1, 6), entry(-8, 8);
  const PrimeField f2(2);
  for (int trial = 0; trial < 100; ++trial) {
    const int r = dim(rng), c = dim(rng);
    DenseMat<Int> m(r, c);
    DenseMat<unsigned long> m2(r, c, 0);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) {
        const int e = entry(rng);
        m(i, j) = e;
        m2(i, j) = f2.from_int(e);
      }
    CHECK(rank_over_rationals(m) >= rank(f2, m2));
  }
}

TEST_CASE("sparse block homology matches dense ranks") {
  // two blocks: an exact 2-term piece and an isolated generator
  SparseMat<Rat> d0{0, 3, {}};
  SparseMat<Rat> d1{3, 2, {{0, 0, Rat(1)}, {1, 1, Rat(2)}}};
  const auto h = sparse_complex_homology(RationalField{}, {3, 2}, {d0, d1});
  REQUIRE(h.size() == 2);
  CHECK(h[0] == 1);  // the untouched generator survives
  CHECK(h[1] == 0);
}
