#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jumploci/homology.hpp"
#include "jumploci/simplicial.hpp"

namespace jumploci {

struct LinkRecord {
  Face sigma;
  int expected_degree = 0;  // n - |sigma|
  HomologyProfile profile;
  bool ok = true;
  std::string reason;
};

/// Reisner-style certificate: L is Cohen-Macaulay over k when the reduced
/// homology of every link lk(σ) is concentrated in degree dim(L) - |σ| and,
/// over Z, torsion-free.
struct CMCertificate {
  CoefficientField field;
  int n = -1;  // dim L
  bool pure = true;
  std::pair<int, int> facet_size_range{0, 0};  // impurity witness (min, max)
  bool verdict = false;
  std::optional<Face> witness;  // first violating σ in (size, lex) order
  int witness_degree = 0;
  std::string witness_reason;
  std::vector<LinkRecord> table;  // all links when full_table, else up to the
                                  // first violation
};

CMCertificate is_cohen_macaulay(const SimplicialComplex& L,
                                const CoefficientField& k,
                                bool full_table = false);

/// Certification chain for toric complexes: Cohen-Macaulayness of L is
/// equivalent to the toric complex T_L being an abelian duality space of
/// dimension n+1, and to its cohomology ring having the EPY property.
struct DualityVerdict {
  bool abelian_duality = false;
  bool epy = false;
  int dimension = -1;  // n+1 for toric, dim of the flag complex for BB
  CMCertificate cm;
  std::optional<bool> acyclic;  // Bestvina-Brady sub-verdict
  std::vector<std::string> chain;
};

DualityVerdict certify_toric(const SimplicialComplex& L,
                             const CoefficientField& k,
                             bool full_table = false);

/// Bestvina-Brady group of Γ: abelian duality iff the flag complex is
/// acyclic and Cohen-Macaulay over k.
DualityVerdict certify_bestvina_brady(const Graph& G, const CoefficientField& k,
                                      bool full_table = false);

/// Betti-number inequalities satisfied by a certified complex, with
/// b_p(T_L) = f_{p-1}(L): componentwise b_p >= C(n+1, p), b_p > 0 for
/// 0 <= p <= n+1, and b_1 >= n+1.
struct BettiBoundsReport {
  long socle = 0;              // n+1
  std::vector<long> betti;     // b_0..b_{n+1}
  std::vector<long> binomial;  // C(n+1, p)
  std::vector<long> margin;    // b_p - C(n+1, p)
  bool binomial_ok = true;
  bool positivity_ok = true;
  bool b1_ok = true;
  bool ok() const { return binomial_ok && positivity_ok && b1_ok; }
};

BettiBoundsReport betti_bounds_check(const SimplicialComplex& L,
                                     const CMCertificate& certificate);

long binomial(long n, long k);

}  // namespace jumploci
