#include "jumploci/exact.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>

namespace jumploci {

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (unsigned long d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

CoefficientField CoefficientField::prime_field(unsigned long p) {
  if (p >= (1ul << 31))
    fail("BadField", "prime moduli must be below 2^31, got " + std::to_string(p));
  if (!jumploci::is_prime(p)) fail("BadField", std::to_string(p) + " is not prime");
  return {Tag::prime, p};
}

std::string CoefficientField::name() const {
  switch (tag) {
    case Tag::integers:
      return "Z";
    case Tag::rationals:
      return "Q";
    case Tag::prime:
      return "GF(" + std::to_string(p) + ")";
  }
  return "?";
}

CoefficientField CoefficientField::parse(const std::string& s) {
  if (s == "Z") return integers();
  if (s == "Q") return rationals();
  if (s.size() > 4 && s.rfind("GF(", 0) == 0 && s.back() == ')') {
    const std::string digits = s.substr(3, s.size() - 4);
    if (!digits.empty() &&
        std::all_of(digits.begin(), digits.end(),
                    [](unsigned char c) { return std::isdigit(c); })) {
      unsigned long p = std::strtoul(digits.c_str(), nullptr, 10);
      return prime_field(p);
    }
  }
  fail("BadField", "expected Z, Q, or GF(p); got \"" + s + "\"");
}

namespace {

bool valid_integer_literal(const std::string& s) {
  size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i >= s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rat parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  const std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_integer_literal(num) || !valid_integer_literal(den))
    fail("BadScalar", "expected an integer or \"p/q\", got \"" + s + "\"");
  Rat q;
  if (mpq_set_str(q.get_mpq_t(), (num + "/" + den).c_str(), 10) != 0)
    fail("BadScalar", "cannot parse rational \"" + s + "\"");
  if (sgn(q.get_den()) == 0) fail("BadScalar", "zero denominator in \"" + s + "\"");
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rat& q) { return q.get_str(); }

RationalField::Elem RationalField::inv(const Elem& a) const {
  if (sgn(a) == 0) fail("DivisionByZero", "inverse of 0 over Q");
  return Rat(1) / a;
}

PrimeField::PrimeField(unsigned long prime) : p(prime) {
  if (p >= (1ul << 31) || !jumploci::is_prime(p))
    fail("BadField", "PrimeField modulus must be a prime below 2^31");
}

PrimeField::Elem PrimeField::from_string(const std::string& s) const {
  const auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!valid_integer_literal(s))
      fail("BadScalar", "expected a residue mod " + std::to_string(p) +
                            ", got \"" + s + "\"");
    Int z(s);
    return mpz_fdiv_ui(z.get_mpz_t(), p);
  }
  const Rat q = parse_rational(s);
  const Elem den = mpz_fdiv_ui(q.get_den().get_mpz_t(), p);
  if (den == 0)
    fail("BadScalar", "denominator of \"" + s + "\" vanishes mod " +
                          std::to_string(p));
  const Elem num = mpz_fdiv_ui(q.get_num().get_mpz_t(), p);
  return div(num, den);
}

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a == 0) fail("DivisionByZero", "inverse of 0 in GF(" + std::to_string(p) + ")");
  // extended Euclid on (a, p)
  long long t = 0, newt = 1;
  long long r = static_cast<long long>(p), newr = static_cast<long long>(a);
  while (newr != 0) {
    const long long q = r / newr;
    t = std::exchange(newt, t - q * newt);
    r = std::exchange(newr, r - q * newr);
  }
  return static_cast<Elem>(newt < 0 ? newt + static_cast<long long>(p) : newt);
}

// ---------------------------------------------------------------------------
// Smith normal form.
// ---------------------------------------------------------------------------

namespace {

struct SnfState {
  DenseMat<Int>& m;
  DenseMat<Int>* colops;  // optional cols x cols accumulator

  int rows() const { return m.rows(); }
  int cols() const { return m.cols(); }

  void swap_rows(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < cols(); ++j) std::swap(m(a, j), m(b, j));
  }
  void swap_cols(int a, int b) {
    if (a == b) return;
    for (int i = 0; i < rows(); ++i) std::swap(m(i, a), m(i, b));
    if (colops)
      for (int i = 0; i < cols(); ++i) std::swap((*colops)(i, a), (*colops)(i, b));
  }
  void add_row_multiple(int dst, int src, const Int& c) {
    for (int j = 0; j < cols(); ++j) m(dst, j) += c * m(src, j);
  }
  void add_col_multiple(int dst, int src, const Int& c) {
    for (int i = 0; i < rows(); ++i) m(i, dst) += c * m(i, src);
    if (colops)
      for (int i = 0; i < cols(); ++i) (*colops)(i, dst) += c * (*colops)(i, src);
  }
};

Int floor_quotient(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

SmithResult snf_in_place(SnfState st) {
  auto& m = st.m;
  SmithResult out;
  int t = 0;
  while (t < st.rows() && t < st.cols()) {
    // pivot on the minimal nonzero absolute value in the trailing block
    int pi = -1, pj = -1;
    Int best;
    for (int i = t; i < st.rows(); ++i)
      for (int j = t; j < st.cols(); ++j) {
        if (sgn(m(i, j)) == 0) continue;
        Int a = abs(m(i, j));
        if (pi < 0 || a < best) {
          best = a;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    st.swap_rows(t, pi);
    st.swap_cols(t, pj);

    // clear row and column t; a nonzero remainder has smaller absolute value
    // than the pivot, so swapping it in makes progress
    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < st.rows() && clean; ++i) {
        if (sgn(m(i, t)) == 0) continue;
        st.add_row_multiple(i, t, -floor_quotient(m(i, t), m(t, t)));
        if (sgn(m(i, t)) != 0) {
          st.swap_rows(t, i);
          clean = false;
        }
      }
      if (!clean) continue;
      for (int j = t + 1; j < st.cols() && clean; ++j) {
        if (sgn(m(t, j)) == 0) continue;
        st.add_col_multiple(j, t, -floor_quotient(m(t, j), m(t, t)));
        if (sgn(m(t, j)) != 0) {
          st.swap_cols(t, j);
          clean = false;
        }
      }
    }

    // enforce the divisibility chain: fold a non-multiple into the pivot row
    bool redo = false;
    for (int i = t + 1; i < st.rows() && !redo; ++i)
      for (int j = t + 1; j < st.cols() && !redo; ++j)
        if (sgn(m(i, j) % m(t, t)) != 0) {
          st.add_row_multiple(t, i, Int(1));
          redo = true;
        }
    if (redo) continue;

    ++t;
  }
  out.rank = t;
  out.divisors.reserve(t);
  for (int i = 0; i < t; ++i) out.divisors.push_back(abs(m(i, i)));
  return out;
}

}  // namespace

SmithResult smith_normal_form(DenseMat<Int> m) {
  return snf_in_place({m, nullptr});
}

std::vector<std::vector<Int>> integer_kernel(DenseMat<Int> m) {
  const int cols = m.cols();
  DenseMat<Int> v(cols, cols, Int(0));
  for (int i = 0; i < cols; ++i) v(i, i) = 1;
  const SmithResult res = snf_in_place({m, &v});
  std::vector<std::vector<Int>> basis;
  for (int j = static_cast<int>(res.rank); j < cols; ++j) {
    std::vector<Int> col(cols);
    for (int i = 0; i < cols; ++i) col[i] = v(i, j);
    basis.push_back(std::move(col));
  }
  return basis;
}

long rank_over_rationals(const DenseMat<Int>& m) {
  DenseMat<Rat> q(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) q(i, j) = Rat(m(i, j));
  return rank(RationalField{}, std::move(q));
}

// ---------------------------------------------------------------------------
// Block-split homology of sparse complexes.
// ---------------------------------------------------------------------------

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

template <class Fd>
std::vector<long> sparse_complex_homology(
    const Fd& field, const std::vector<long>& terms,
    const std::vector<SparseMat<typename Fd::Elem>>& diffs) {
  const int n = static_cast<int>(terms.size());
  if (static_cast<int>(diffs.size()) != n)
    fail("ShapeMismatch", "one differential per term expected");
  for (int i = 0; i < n; ++i) {
    if (diffs[i].cols != terms[i] || diffs[i].rows != (i == 0 ? 0 : terms[i - 1]))
      fail("ShapeMismatch", "differential " + std::to_string(i) +
                                " inconsistent with term dimensions");
  }

  std::vector<size_t> offset(n + 1, 0);
  for (int i = 0; i < n; ++i) offset[i + 1] = offset[i] + terms[i];
  UnionFind uf(offset[n]);
  for (int i = 1; i < n; ++i)
    for (const auto& [r, c, val] : diffs[i].entries) {
      if (!field.is_zero(val))
        uf.unite(static_cast<int>(offset[i - 1] + r),
                 static_cast<int>(offset[i] + c));
    }

  // local index of each cell inside its component, per term
  std::vector<int> local(offset[n]);
  struct Block {
    std::vector<long> sizes;  // per term
  };
  std::vector<int> block_of_root(offset[n], -1);
  std::vector<Block> blocks;
  for (int i = 0; i < n; ++i)
    for (long c = 0; c < terms[i]; ++c) {
      const int cell = static_cast<int>(offset[i] + c);
      const int root = uf.find(cell);
      if (block_of_root[root] < 0) {
        block_of_root[root] = static_cast<int>(blocks.size());
        blocks.push_back(Block{std::vector<long>(n, 0)});
      }
      Block& b = blocks[block_of_root[root]];
      local[cell] = static_cast<int>(b.sizes[i]++);
    }

  std::vector<long> h(n, 0);
  // ranks accumulated per block, then combined with dim counts
  std::vector<std::vector<long>> block_rank(blocks.size(),
                                            std::vector<long>(n + 1, 0));
  for (int i = 1; i < n; ++i) {
    // group entries of diffs[i] by block
    std::vector<std::vector<std::tuple<int, int, typename Fd::Elem>>> per_block(
        blocks.size());
    for (const auto& [r, c, val] : diffs[i].entries) {
      if (field.is_zero(val)) continue;
      const int cell = static_cast<int>(offset[i] + c);
      const int b = block_of_root[uf.find(cell)];
      per_block[b].emplace_back(local[offset[i - 1] + r], local[cell], val);
    }
    for (size_t b = 0; b < blocks.size(); ++b) {
      if (per_block[b].empty()) continue;
      DenseMat<typename Fd::Elem> m(static_cast<int>(blocks[b].sizes[i - 1]),
                                    static_cast<int>(blocks[b].sizes[i]),
                                    field.zero());
      for (const auto& [r, c, val] : per_block[b]) m(r, c) = val;
      block_rank[b][i] = rank(field, std::move(m));
    }
  }
  for (size_t b = 0; b < blocks.size(); ++b)
    for (int i = 0; i < n; ++i)
      h[i] += blocks[b].sizes[i] - block_rank[b][i] -
              (i + 1 < n ? block_rank[b][i + 1] : 0);
  return h;
}

template std::vector<long> sparse_complex_homology<RationalField>(
    const RationalField&, const std::vector<long>&,
    const std::vector<SparseMat<Rat>>&);
template std::vector<long> sparse_complex_homology<PrimeField>(
    const PrimeField&, const std::vector<long>&,
    const std::vector<SparseMat<unsigned long>>&);

}  // namespace jumploci
