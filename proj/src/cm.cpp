#include "jumploci/cm.hpp"

#include <algorithm>

namespace jumploci {

long binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace {

// Violation of concentration/torsion-freeness, if any: returns the offending
// degree and a reason.
std::optional<std::pair<int, std::string>> link_violation(
    const HomologyProfile& profile, int expected, bool integral) {
  for (int deg = -1; deg <= profile.top_degree; ++deg) {
    const auto* g = profile.at(deg);
    if (!g) continue;
    if (deg != expected && g->betti != 0)
      return {{deg, "nonzero reduced homology in degree " +
                        std::to_string(deg) + " (expected concentration in " +
                        std::to_string(expected) + ")"}};
    if (integral && !g->torsion.empty())
      return {{deg, "torsion in degree " + std::to_string(deg)}};
  }
  return std::nullopt;
}

}  // namespace

CMCertificate is_cohen_macaulay(const SimplicialComplex& L,
                                const CoefficientField& k, bool full_table) {
  if (L.is_void())
    fail("VoidComplex", "Cohen-Macaulayness is undefined for the void complex");

  CMCertificate cert;
  cert.field = k;
  cert.n = L.dim();

  // Cohen-Macaulay complexes are pure; report the facet sizes otherwise.
  int min_size = -1, max_size = -1;
  for (const auto& f : L.facets()) {
    const int s = static_cast<int>(f.size());
    min_size = min_size < 0 ? s : std::min(min_size, s);
    max_size = std::max(max_size, s);
  }
  cert.facet_size_range = {min_size, max_size};
  cert.pure = (min_size == max_size);
  if (!cert.pure) {
    cert.verdict = false;
    cert.witness_reason = "not pure: facets of sizes " +
                          std::to_string(min_size) + " and " +
                          std::to_string(max_size);
    return cert;
  }

  cert.verdict = true;
  for (const Face& sigma : L.all_faces()) {  // (size, lex) order
    LinkRecord rec;
    rec.sigma = sigma;
    rec.expected_degree = cert.n - static_cast<int>(sigma.size());
    rec.profile = reduced_homology(link(L, sigma), k);
    const auto violation =
        link_violation(rec.profile, rec.expected_degree, k.is_integers());
    rec.ok = !violation.has_value();
    if (violation) rec.reason = violation->second;
    if (!rec.ok && cert.verdict) {
      cert.verdict = false;
      cert.witness = sigma;
      cert.witness_degree = violation->first;
      cert.witness_reason = violation->second;
    }
    cert.table.push_back(std::move(rec));
    if (!cert.verdict && !full_table) break;
  }
  return cert;
}

DualityVerdict certify_toric(const SimplicialComplex& L,
                             const CoefficientField& k, bool full_table) {
  DualityVerdict v;
  v.cm = is_cohen_macaulay(L, k, full_table);
  v.abelian_duality = v.cm.verdict;
  v.epy = v.cm.verdict;
  v.dimension = v.cm.verdict ? v.cm.n + 1 : -1;
  v.chain = {
      "Cohen-Macaulay over " + k.name() +
          (v.cm.verdict ? ": yes" : ": no (see witness)"),
      "equivalence: L Cohen-Macaulay over k  <=>  T_L abelian duality space "
      "of dimension dim(L)+1",
      "equivalence: L Cohen-Macaulay over k  <=>  H^*(T_L,k) has the EPY "
      "property (Eagon-Reiner linearity)",
  };
  return v;
}

DualityVerdict certify_bestvina_brady(const Graph& G, const CoefficientField& k,
                                      bool full_table) {
  const SimplicialComplex delta = flag_complex(G);
  DualityVerdict v;
  v.acyclic = is_acyclic(delta, k);
  v.cm = is_cohen_macaulay(delta, k, full_table);
  const bool verdict = *v.acyclic && v.cm.verdict;
  v.abelian_duality = verdict;
  v.epy = verdict;
  v.dimension = verdict ? v.cm.n : -1;
  v.chain = {
      std::string("flag complex acyclic over ") + k.name() + ": " +
          (*v.acyclic ? "yes" : "no"),
      "flag complex Cohen-Macaulay: " + std::string(v.cm.verdict ? "yes" : "no"),
      "Bestvina-Brady group is an abelian duality group  <=>  flag complex "
      "acyclic and Cohen-Macaulay",
      "EPY property of its cohomology follows when the verdict is positive",
  };
  return v;
}

BettiBoundsReport betti_bounds_check(const SimplicialComplex& L,
                                     const CMCertificate& certificate) {
  if (!certificate.verdict)
    fail("PreconditionNotCertified",
         "betti_bounds_check requires a positive Cohen-Macaulay certificate");
  BettiBoundsReport rep;
  rep.socle = certificate.n + 1;
  const auto f = L.f_vector();  // b_p = f_{p-1}
  for (long p = 0; p <= rep.socle; ++p) {
    const long b =
        p < static_cast<long>(f.size()) ? f[static_cast<size_t>(p)] : 0;
    const long c = binomial(rep.socle, p);
    rep.betti.push_back(b);
    rep.binomial.push_back(c);
    rep.margin.push_back(b - c);
    if (b < c) rep.binomial_ok = false;
    if (b <= 0) rep.positivity_ok = false;
  }
  if (rep.socle >= 1 && rep.betti[1] < rep.socle) rep.b1_ok = false;
  return rep;
}

}  // namespace jumploci
