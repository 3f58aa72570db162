#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "jumploci/error.hpp"

namespace jumploci {

using Int = mpz_class;
using Rat = mpq_class;

/// Coefficient ring selector: Z picks Smith-normal-form paths, Q and GF(p)
/// pick field-rank paths.  p is restricted to primes below 2^31 so that
/// modular products fit in a machine word.
struct CoefficientField {
  enum class Tag { integers, rationals, prime };

  Tag tag = Tag::rationals;
  unsigned long p = 0;

  static CoefficientField integers() { return {Tag::integers, 0}; }
  static CoefficientField rationals() { return {Tag::rationals, 0}; }
  static CoefficientField prime_field(unsigned long p);

  bool is_integers() const { return tag == Tag::integers; }
  bool is_rationals() const { return tag == Tag::rationals; }
  bool is_prime() const { return tag == Tag::prime; }
  bool is_field() const { return tag != Tag::integers; }
  unsigned long characteristic() const { return is_prime() ? p : 0; }

  std::string name() const;
  /// Accepts "Z", "Q", "GF(p)" (also "Zp"/"Fp" style rejected: keep one spelling).
  static CoefficientField parse(const std::string& s);

  bool operator==(const CoefficientField& o) const {
    return tag == o.tag && p == o.p;
  }
};

bool is_prime(unsigned long n);

/// Parses "p/q" or "p" into an exact rational; throws Error("BadScalar") on
/// malformed input or zero denominator.
Rat parse_rational(const std::string& s);
std::string rational_to_string(const Rat& q);

// ---------------------------------------------------------------------------
// Field descriptors.  Algorithms are templated on a descriptor carrying the
// element type and arithmetic; PrimeField keeps the modulus once instead of
// per element.
// ---------------------------------------------------------------------------

struct RationalField {
  using Elem = Rat;

  Elem zero() const { return Rat(0); }
  Elem one() const { return Rat(1); }
  Elem from_int(long v) const { return Rat(v); }
  Elem from_string(const std::string& s) const { return parse_rational(s); }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const;
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  unsigned long characteristic() const { return 0; }
  std::string to_string(const Elem& a) const { return rational_to_string(a); }
};

struct PrimeField {
  using Elem = unsigned long;  // residue in [0, p)

  unsigned long p;

  explicit PrimeField(unsigned long prime);

  Elem zero() const { return 0; }
  Elem one() const { return p == 1 ? 0 : 1; }
  Elem from_int(long v) const {
    long r = v % static_cast<long>(p);
    return r < 0 ? static_cast<Elem>(r + static_cast<long>(p))
                 : static_cast<Elem>(r);
  }
  Elem from_string(const std::string& s) const;
  bool is_zero(const Elem& a) const { return a == 0; }
  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p ? s - p : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
  Elem mul(Elem a, Elem b) const { return (a * b) % p; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  bool eq(Elem a, Elem b) const { return a == b; }
  unsigned long characteristic() const { return p; }
  std::string to_string(Elem a) const { return std::to_string(a); }
};

/// Runs f with the field descriptor matching k.  k must be a field.
template <class F>
decltype(auto) with_field(const CoefficientField& k, F&& f) {
  if (k.is_integers())
    fail("IntegerCoefficientsUnsupported", "a field (Q or GF(p)) is required");
  if (k.is_rationals()) return f(RationalField{});
  return f(PrimeField(k.p));
}

// ---------------------------------------------------------------------------
// Dense matrices over an exact scalar type.
// ---------------------------------------------------------------------------

template <class T>
class DenseMat {
 public:
  DenseMat() = default;
  DenseMat(int rows, int cols, T fill = T())
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, fill) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  T& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const T& operator()(int i, int j) const {
    return a_[static_cast<size_t>(i) * cols_ + j];
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

template <class Fd>
long rank(const Fd& field, DenseMat<typename Fd::Elem> m) {
  const int rows = m.rows(), cols = m.cols();
  long r = 0;
  for (int col = 0; col < cols && r < rows; ++col) {
    int pivot = -1;
    for (int i = static_cast<int>(r); i < rows; ++i)
      if (!field.is_zero(m(i, col))) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = col; j < cols; ++j) std::swap(m(pivot, j), m(r, j));
    const auto pinv = field.inv(m(static_cast<int>(r), col));
    for (int i = static_cast<int>(r) + 1; i < rows; ++i) {
      if (field.is_zero(m(i, col))) continue;
      const auto factor = field.mul(m(i, col), pinv);
      m(i, col) = field.zero();
      for (int j = col + 1; j < cols; ++j)
        m(i, j) = field.sub(m(i, j), field.mul(factor, m(static_cast<int>(r), j)));
    }
    ++r;
  }
  return r;
}

template <class Fd>
DenseMat<typename Fd::Elem> matmul(const Fd& field,
                                   const DenseMat<typename Fd::Elem>& a,
                                   const DenseMat<typename Fd::Elem>& b) {
  if (a.cols() != b.rows()) fail("ShapeMismatch", "matmul dimensions disagree");
  DenseMat<typename Fd::Elem> c(a.rows(), b.cols(), field.zero());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (field.is_zero(a(i, k))) continue;
      for (int j = 0; j < b.cols(); ++j)
        c(i, j) = field.add(c(i, j), field.mul(a(i, k), b(k, j)));
    }
  return c;
}

template <class Fd>
bool is_zero_matrix(const Fd& field, const DenseMat<typename Fd::Elem>& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!field.is_zero(m(i, j))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Sparse matrices and block-split homology of complexes.  The graded pieces
// of BGG complexes are huge but decompose into many small connected blocks;
// splitting before elimination keeps the exact ranks cheap.
// ---------------------------------------------------------------------------

template <class T>
struct SparseMat {
  int rows = 0, cols = 0;
  std::vector<std::tuple<int, int, T>> entries;  // (row, col, value)
};

/// Homology dimensions of a finite chain complex of sparse matrices,
/// diffs[i] : C_i -> C_{i-1} (so diffs has size terms.size() and diffs[0] maps
/// C_0 to 0, i.e. has 0 rows).  Returns dim H_i for each i.  Composition of
/// consecutive differentials is assumed (not checked) to vanish.
template <class Fd>
std::vector<long> sparse_complex_homology(
    const Fd& field, const std::vector<long>& terms,
    const std::vector<SparseMat<typename Fd::Elem>>& diffs);

// ---------------------------------------------------------------------------
// Smith normal form over Z.
// ---------------------------------------------------------------------------

struct SmithResult {
  long rank = 0;
  std::vector<Int> divisors;  // d1 | d2 | ... | d_rank, all positive
};

/// Fraction-free integer elimination with pivoting on the entry of minimal
/// absolute value (keeps intermediate growth down on the small, numerous
/// matrices produced by link enumeration).
SmithResult smith_normal_form(DenseMat<Int> m);

/// Basis of the integer kernel of m (as columns of the accumulated column
/// transform for the zero diagonal entries).
std::vector<std::vector<Int>> integer_kernel(DenseMat<Int> m);

long rank_over_rationals(const DenseMat<Int>& m);

}  // namespace jumploci
