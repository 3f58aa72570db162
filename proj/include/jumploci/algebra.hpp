#pragma once

#include <map>
#include <string>
#include <vector>

#include "jumploci/exact.hpp"
#include "jumploci/homology.hpp"
#include "jumploci/simplicial.hpp"

namespace jumploci {

/// Square-free monomial in the generators, as a strictly increasing list of
/// 0-based generator indices.
using Monomial = std::vector<int>;

/// Sign of merging e_T into e_S (exterior convention e_i e_j = -e_j e_i with
/// basis monomials written in increasing order); returns 0 if they share a
/// generator, otherwise writes the merged monomial.
int exterior_merge(const Monomial& left, const Monomial& right, Monomial* out);

/// Exponent vectors of total degree d over m variables, lexicographic.
std::vector<std::vector<int>> exponent_vectors(int m, int d);

/// Finite-dimensional graded algebra (or cyclic module) over an exterior
/// algebra, given by a monomial basis per degree and the left-multiplication
/// matrices of the degree-1 generators.
template <class Fd>
struct GradedAlgebraModel {
  using K = typename Fd::Elem;

  Fd field;
  int generators = 0;
  std::vector<std::vector<Monomial>> basis;    // per degree 0..socle
  std::vector<std::vector<DenseMat<K>>> mult;  // mult[j][p] : A^p -> A^{p+1}
  std::vector<std::string> generator_names;

  int socle_degree() const { return static_cast<int>(basis.size()) - 1; }
  long dim(int p) const {
    return (p >= 0 && p <= socle_degree())
               ? static_cast<long>(basis[p].size())
               : 0;
  }
  std::vector<long> dims() const {
    std::vector<long> d;
    for (int p = 0; p <= socle_degree(); ++p) d.push_back(dim(p));
    return d;
  }

  /// δ^p(a) = Σ_j a_j · mult[j][p].
  DenseMat<K> aomoto_delta(const std::vector<K>& a, int p) const;

  /// Checks that every degree-1 element squares to zero, i.e. all
  /// anticommutators of the generator multiplication matrices vanish.
  void check_square_zero() const;
};

/// Exterior Stanley-Reisner ring k<L>: basis in degree p is the set of
/// (p-1)-faces; a product vanishes unless its support is a face.
template <class Fd>
GradedAlgebraModel<Fd> stanley_reisner_ring(const Fd& field,
                                            const SimplicialComplex& L);

/// Exterior algebra on m generators (the Stanley-Reisner ring of a simplex).
template <class Fd>
GradedAlgebraModel<Fd> exterior_algebra(const Fd& field, int m);

/// Quotient of a model by a graded ideal, with the ideal given per degree as
/// spans of coefficient vectors in the model basis.  The quotient basis is
/// the complement of the Gauss pivots, scanned in reverse lexicographic
/// monomial order.
template <class Fd>
GradedAlgebraModel<Fd> quotient_model(
    const GradedAlgebraModel<Fd>& A,
    const std::vector<std::vector<std::vector<typename Fd::Elem>>>& relations);

/// H^i(A, a·) for 0 <= i <= socle degree; the membership oracle
/// a ∈ R^{i,d}(A)  <=>  result[i] >= d.  Verifies that the Aomoto
/// differential squares to zero.
template <class Fd>
std::vector<long> aomoto_cohomology(const GradedAlgebraModel<Fd>& A,
                                    const std::vector<typename Fd::Elem>& a);

template <class Fd>
bool resonance_membership(const GradedAlgebraModel<Fd>& A,
                          const std::vector<typename Fd::Elem>& a, int degree,
                          int depth);

/// Cohomology ring of the diagonal Z-cover of the toric complex:
/// E/(J_L + (a)) with a = Σ e_i.  Requires L acyclic over the field.
template <class Fd>
GradedAlgebraModel<Fd> bb_quotient_ring(const Fd& field,
                                        const SimplicialComplex& L);

/// Bounded exactness check of the linear free complex attached to
/// P = A(-n), n the socle degree: assembles each graded piece (internal
/// degree t <= degree_bound) of the complex with terms A^{n-i} ⊗ S_{t-i} and
/// differential p ⊗ s -> Σ_j (e_j p) ⊗ (x_j s), and reports whether H_i
/// vanishes for all i != 0.  A clean report is "consistent with Koszulness up
/// to the bound", never an unconditional certificate.
struct BggPiece {
  int internal_degree = 0;
  int homological_index = 0;
  long dim = 0;
};

struct BggReport {
  int socle = 0;
  int degree_bound = 0;
  bool consistent = true;
  std::vector<BggPiece> failures;  // nonvanishing H_i, i != 0
  std::vector<long> h0;            // dim H_0 per internal degree 0..bound
};

/// degree_bound < 0 selects the default socle + generators.
template <class Fd>
BggReport bgg_complex_check(const GradedAlgebraModel<Fd>& A,
                            int degree_bound = -1);

// ---------------------------------------------------------------------------
// Implementation.
// ---------------------------------------------------------------------------

template <class Fd>
DenseMat<typename Fd::Elem> GradedAlgebraModel<Fd>::aomoto_delta(
    const std::vector<K>& a, int p) const {
  if (static_cast<int>(a.size()) != generators)
    fail("LengthMismatch", "point has " + std::to_string(a.size()) +
                               " coordinates, model has " +
                               std::to_string(generators) + " generators");
  DenseMat<K> d(static_cast<int>(dim(p + 1)), static_cast<int>(dim(p)),
                field.zero());
  for (int j = 0; j < generators; ++j) {
    if (field.is_zero(a[j])) continue;
    const auto& mj = mult[j][p];
    for (int r = 0; r < d.rows(); ++r)
      for (int c = 0; c < d.cols(); ++c)
        d(r, c) = field.add(d(r, c), field.mul(a[j], mj(r, c)));
  }
  return d;
}

template <class Fd>
void GradedAlgebraModel<Fd>::check_square_zero() const {
  for (int i = 0; i < generators; ++i)
    for (int j = i; j < generators; ++j)
      for (int p = 0; p + 2 <= socle_degree() + 1; ++p) {
        if (dim(p) == 0 || dim(p + 2) == 0) continue;
        auto anti = matmul(field, mult[i][p + 1], mult[j][p]);
        const auto other = matmul(field, mult[j][p + 1], mult[i][p]);
        for (int r = 0; r < anti.rows(); ++r)
          for (int c = 0; c < anti.cols(); ++c)
            anti(r, c) = field.add(anti(r, c), other(r, c));
        if (!is_zero_matrix(field, anti))
          fail("InternalInvariantViolation",
               "generators " + std::to_string(i) + "," + std::to_string(j) +
                   " do not anticommute in degree " + std::to_string(p));
      }
}

template <class Fd>
GradedAlgebraModel<Fd> stanley_reisner_ring(const Fd& field,
                                            const SimplicialComplex& L) {
  if (L.is_void())
    fail("VoidComplex", "Stanley-Reisner ring of the void complex");
  if (L.has_ghost_vertices())
    fail("UnknownVertex",
         "Stanley-Reisner construction needs every vertex to be a 0-face");

  GradedAlgebraModel<Fd> A;
  A.field = field;
  const auto& verts = L.vertices();
  A.generators = static_cast<int>(verts.size());
  for (Vertex v : verts) A.generator_names.push_back(std::to_string(v));

  const int socle = L.dim() + 1;
  std::vector<std::map<Monomial, int>> index(static_cast<size_t>(socle) + 1);
  A.basis.resize(static_cast<size_t>(socle) + 1);
  for (int p = 0; p <= socle; ++p) {
    for (const Face& f : L.faces_of_dim(p - 1)) {
      Monomial mono;
      for (Vertex v : f)
        mono.push_back(static_cast<int>(
            std::lower_bound(verts.begin(), verts.end(), v) - verts.begin()));
      index[static_cast<size_t>(p)][mono] =
          static_cast<int>(A.basis[static_cast<size_t>(p)].size());
      A.basis[static_cast<size_t>(p)].push_back(std::move(mono));
    }
  }

  A.mult.assign(static_cast<size_t>(A.generators), {});
  for (int j = 0; j < A.generators; ++j) {
    A.mult[static_cast<size_t>(j)].resize(static_cast<size_t>(socle) + 1);
    for (int p = 0; p <= socle; ++p) {
      DenseMat<typename Fd::Elem> m(static_cast<int>(A.dim(p + 1)),
                                    static_cast<int>(A.dim(p)), field.zero());
      const Monomial gen{j};
      for (size_t c = 0; c < A.basis[static_cast<size_t>(p)].size(); ++c) {
        Monomial out;
        const int sign =
            exterior_merge(gen, A.basis[static_cast<size_t>(p)][c], &out);
        if (sign == 0 || p + 1 > socle) continue;
        const auto it = index[static_cast<size_t>(p) + 1].find(out);
        if (it == index[static_cast<size_t>(p) + 1].end()) continue;  // non-face
        m(it->second, static_cast<int>(c)) =
            sign > 0 ? field.one() : field.neg(field.one());
      }
      A.mult[static_cast<size_t>(j)][static_cast<size_t>(p)] = std::move(m);
    }
  }
  A.check_square_zero();
  return A;
}

template <class Fd>
GradedAlgebraModel<Fd> exterior_algebra(const Fd& field, int m) {
  std::vector<Vertex> verts(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) verts[static_cast<size_t>(i)] = i + 1;
  return stanley_reisner_ring(field, SimplicialComplex::simplex(verts));
}

template <class Fd>
GradedAlgebraModel<Fd> quotient_model(
    const GradedAlgebraModel<Fd>& A,
    const std::vector<std::vector<std::vector<typename Fd::Elem>>>& relations) {
  using K = typename Fd::Elem;
  const Fd& field = A.field;
  const int socle = A.socle_degree();

  // Per degree: row-reduce the relation span.  Pivots are scanned from the
  // lexicographically last monomial backwards; the non-pivot monomials form
  // the quotient basis (the NBC basis, for circuit relations).
  struct Reducer {
    std::vector<std::vector<K>> rows;  // reduced echelon rows
    std::vector<int> pivot_col;        // per row
    std::vector<int> col_order;        // scan order
  };
  std::vector<Reducer> red(static_cast<size_t>(socle) + 1);
  std::vector<std::vector<int>> kept(static_cast<size_t>(socle) + 1);

  for (int p = 0; p <= socle; ++p) {
    const int n = static_cast<int>(A.dim(p));
    Reducer& r = red[static_cast<size_t>(p)];
    for (int c = n - 1; c >= 0; --c) r.col_order.push_back(c);
    auto reduce_inplace = [&](std::vector<K>& v) {
      for (size_t i = 0; i < r.rows.size(); ++i) {
        const K& coef = v[static_cast<size_t>(r.pivot_col[i])];
        if (field.is_zero(coef)) continue;
        const K factor = coef;
        for (int c = 0; c < n; ++c)
          v[static_cast<size_t>(c)] = field.sub(
              v[static_cast<size_t>(c)],
              field.mul(factor, r.rows[i][static_cast<size_t>(c)]));
      }
    };
    if (p < static_cast<int>(relations.size()))
      for (const auto& rel : relations[static_cast<size_t>(p)]) {
        std::vector<K> v = rel;
        if (static_cast<int>(v.size()) != n)
          fail("ShapeMismatch", "relation length mismatch in degree " +
                                    std::to_string(p));
        reduce_inplace(v);
        int piv = -1;
        for (int c : r.col_order)
          if (!field.is_zero(v[static_cast<size_t>(c)])) {
            piv = c;
            break;
          }
        if (piv < 0) continue;
        const K inv = field.inv(v[static_cast<size_t>(piv)]);
        for (int c = 0; c < n; ++c)
          v[static_cast<size_t>(c)] = field.mul(v[static_cast<size_t>(c)], inv);
        // back-substitute into existing rows
        for (size_t i = 0; i < r.rows.size(); ++i) {
          const K coef = r.rows[i][static_cast<size_t>(piv)];
          if (field.is_zero(coef)) continue;
          for (int c = 0; c < n; ++c)
            r.rows[i][static_cast<size_t>(c)] =
                field.sub(r.rows[i][static_cast<size_t>(c)],
                          field.mul(coef, v[static_cast<size_t>(c)]));
        }
        r.rows.push_back(std::move(v));
        r.pivot_col.push_back(piv);
      }
    std::vector<bool> is_pivot(static_cast<size_t>(n), false);
    for (int c : r.pivot_col) is_pivot[static_cast<size_t>(c)] = true;
    for (int c = 0; c < n; ++c)
      if (!is_pivot[static_cast<size_t>(c)])
        kept[static_cast<size_t>(p)].push_back(c);
  }

  GradedAlgebraModel<Fd> B;
  B.field = field;
  B.generators = A.generators;
  B.generator_names = A.generator_names;
  int top = socle;
  while (top >= 0 && kept[static_cast<size_t>(top)].empty()) --top;
  B.basis.resize(static_cast<size_t>(top) + 1);
  std::vector<std::map<int, int>> new_index(static_cast<size_t>(top) + 1);
  for (int p = 0; p <= top; ++p)
    for (int c : kept[static_cast<size_t>(p)]) {
      new_index[static_cast<size_t>(p)][c] =
          static_cast<int>(B.basis[static_cast<size_t>(p)].size());
      B.basis[static_cast<size_t>(p)].push_back(
          A.basis[static_cast<size_t>(p)][static_cast<size_t>(c)]);
    }

  B.mult.assign(static_cast<size_t>(B.generators), {});
  for (int j = 0; j < B.generators; ++j) {
    B.mult[static_cast<size_t>(j)].resize(static_cast<size_t>(top) + 1);
    for (int p = 0; p <= top; ++p) {
      DenseMat<K> m(static_cast<int>(B.dim(p + 1)), static_cast<int>(B.dim(p)),
                    field.zero());
      if (p + 1 <= top) {
        const auto& amul = A.mult[static_cast<size_t>(j)][static_cast<size_t>(p)];
        const Reducer& r = red[static_cast<size_t>(p) + 1];
        const int n1 = static_cast<int>(A.dim(p + 1));
        for (size_t bcol = 0; bcol < B.basis[static_cast<size_t>(p)].size();
             ++bcol) {
          const int acol = kept[static_cast<size_t>(p)][bcol];
          std::vector<K> v(static_cast<size_t>(n1), field.zero());
          for (int rrow = 0; rrow < n1; ++rrow) v[static_cast<size_t>(rrow)] =
              amul(rrow, acol);
          // reduce modulo the ideal in degree p+1
          for (size_t i = 0; i < r.rows.size(); ++i) {
            const K coef = v[static_cast<size_t>(r.pivot_col[i])];
            if (field.is_zero(coef)) continue;
            for (int c = 0; c < n1; ++c)
              v[static_cast<size_t>(c)] =
                  field.sub(v[static_cast<size_t>(c)],
                            field.mul(coef, r.rows[i][static_cast<size_t>(c)]));
          }
          for (const auto& [acol1, brow] : new_index[static_cast<size_t>(p) + 1])
            m(brow, static_cast<int>(bcol)) = v[static_cast<size_t>(acol1)];
        }
      }
      B.mult[static_cast<size_t>(j)][static_cast<size_t>(p)] = std::move(m);
    }
  }
  B.check_square_zero();
  return B;
}

template <class Fd>
std::vector<long> aomoto_cohomology(const GradedAlgebraModel<Fd>& A,
                                    const std::vector<typename Fd::Elem>& a) {
  const int socle = A.socle_degree();
  std::vector<DenseMat<typename Fd::Elem>> deltas;
  for (int p = 0; p < socle; ++p) deltas.push_back(A.aomoto_delta(a, p));
  if (socle == 0) return {A.dim(0)};
  return cochain_cohomology_over(A.field, deltas);
}

template <class Fd>
bool resonance_membership(const GradedAlgebraModel<Fd>& A,
                          const std::vector<typename Fd::Elem>& a, int degree,
                          int depth) {
  if (degree < 0 || degree > A.socle_degree()) return false;
  return aomoto_cohomology(A, a)[static_cast<size_t>(degree)] >= depth;
}

template <class Fd>
GradedAlgebraModel<Fd> bb_quotient_ring(const Fd& field,
                                        const SimplicialComplex& L) {
  CoefficientField k = field.characteristic() == 0
                           ? CoefficientField::rationals()
                           : CoefficientField::prime_field(field.characteristic());
  if (!is_acyclic(L, k))
    fail("NotAcyclic",
         "the diagonal cover ring needs an acyclic complex over " + k.name());
  const auto A = stanley_reisner_ring(field, L);
  std::vector<typename Fd::Elem> diag(static_cast<size_t>(A.generators),
                                      field.one());
  std::vector<std::vector<std::vector<typename Fd::Elem>>> relations(
      static_cast<size_t>(A.socle_degree()) + 1);
  for (int p = 1; p <= A.socle_degree(); ++p) {
    const auto d = A.aomoto_delta(diag, p - 1);
    for (int c = 0; c < d.cols(); ++c) {
      std::vector<typename Fd::Elem> v(static_cast<size_t>(d.rows()),
                                       field.zero());
      for (int r = 0; r < d.rows(); ++r) v[static_cast<size_t>(r)] = d(r, c);
      relations[static_cast<size_t>(p)].push_back(std::move(v));
    }
  }
  auto B = quotient_model(A, relations);
  // short exact sequence 0 -> B(1) -> A -> B -> 0 forces the dimension
  // recursion; a violation would mean the diagonal class is resonant
  long prev = 0;
  for (int p = 0; p <= A.socle_degree(); ++p) {
    const long expected = A.dim(p) - prev;
    if (B.dim(p) != expected)
      fail("InternalInvariantViolation",
           "quotient dimension recursion fails in degree " + std::to_string(p));
    prev = expected;
  }
  return B;
}

template <class Fd>
BggReport bgg_complex_check(const GradedAlgebraModel<Fd>& A, int degree_bound) {
  using K = typename Fd::Elem;
  const Fd& field = A.field;
  const int n = A.socle_degree();
  const int m = A.generators;
  BggReport rep;
  rep.socle = n;
  rep.degree_bound = degree_bound < 0 ? n + m : degree_bound;
  if (rep.degree_bound < 1) fail("BadDegree", "degree bound must be >= 1");

  for (int t = 0; t <= rep.degree_bound; ++t) {
    const int top = std::min(n, t);
    std::vector<long> terms(static_cast<size_t>(top) + 1);
    std::vector<std::vector<std::vector<int>>> monos(static_cast<size_t>(top) +
                                                     1);
    std::vector<std::map<std::vector<int>, int>> mono_index(
        static_cast<size_t>(top) + 1);
    for (int i = 0; i <= top; ++i) {
      monos[static_cast<size_t>(i)] = exponent_vectors(m, t - i);
      for (size_t s = 0; s < monos[static_cast<size_t>(i)].size(); ++s)
        mono_index[static_cast<size_t>(i)][monos[static_cast<size_t>(i)][s]] =
            static_cast<int>(s);
      terms[static_cast<size_t>(i)] =
          A.dim(n - i) * static_cast<long>(monos[static_cast<size_t>(i)].size());
    }

    std::vector<SparseMat<K>> diffs(static_cast<size_t>(top) + 1);
    for (int i = 0; i <= top; ++i) {
      diffs[static_cast<size_t>(i)].rows =
          i == 0 ? 0 : static_cast<int>(terms[static_cast<size_t>(i) - 1]);
      diffs[static_cast<size_t>(i)].cols =
          static_cast<int>(terms[static_cast<size_t>(i)]);
      if (i == 0) continue;
      const long scount =
          static_cast<long>(monos[static_cast<size_t>(i)].size());
      for (int j = 0; j < m; ++j) {
        const auto& mj = A.mult[static_cast<size_t>(j)][static_cast<size_t>(
            n - i)];  // A^{n-i} -> A^{n-i+1}
        for (long s = 0; s < scount; ++s) {
          std::vector<int> beta = monos[static_cast<size_t>(i)][static_cast<size_t>(s)];
          ++beta[static_cast<size_t>(j)];
          const int s_out = mono_index[static_cast<size_t>(i) - 1].at(beta);
          for (int r = 0; r < mj.rows(); ++r)
            for (int c = 0; c < mj.cols(); ++c) {
              if (field.is_zero(mj(r, c))) continue;
              diffs[static_cast<size_t>(i)].entries.emplace_back(
                  static_cast<int>(r +
                                   static_cast<long>(s_out) * mj.rows()),
                  static_cast<int>(c + s * mj.cols()), mj(r, c));
            }
        }
      }
    }
    const auto h = sparse_complex_homology(field, terms, diffs);
    rep.h0.push_back(h[0]);
    for (int i = 1; i <= top; ++i)
      if (h[static_cast<size_t>(i)] != 0) {
        rep.consistent = false;
        rep.failures.push_back({t, i, h[static_cast<size_t>(i)]});
      }
  }
  return rep;
}

}  // namespace jumploci
