#pragma once

#include <optional>
#include <vector>

#include "jumploci/exact.hpp"
#include "jumploci/simplicial.hpp"

namespace jumploci {

enum class LocusKind { resonance, characteristic };

/// One cohomological degree of a jump locus of a toric complex: a union of
/// coordinate subspaces k^W (resonance) or subtori (k*)^W (characteristic),
/// stored as the antichain of maximal nonempty W, plus a separate flag for
/// the degenerate point (origin resp. trivial character), which the union
/// formula leaves implicit when no nonempty W qualifies.
struct LocusLayer {
  int degree = 0;
  bool origin = false;
  std::vector<std::vector<Vertex>> components;
};

struct SubspaceArrangementLocus {
  LocusKind kind = LocusKind::resonance;
  CoefficientField field;
  int depth = 1;
  int top_degree = 0;             // dim(L) + 1
  std::vector<Vertex> ambient;    // vertex set of L
  std::vector<LocusLayer> layers; // degrees 0..top_degree
};

struct PropagationVerdict {
  bool propagates = true;
  /// Failing degree i plus the component of layer i contained in no component
  /// of layer i+1; an empty witness means the origin/trivial character.
  std::optional<std::pair<int, std::vector<Vertex>>> first_failure;
};

/// Σ_{σ ∈ L_{V∖W}} dim_k H̃_{degree-1-|σ|}(lk_{L_W}(σ), k); the subset W
/// contributes the subspace k^W to the degree-d locus iff this is >= d.
long toric_layer_sum(const SimplicialComplex& L, const std::vector<Vertex>& W,
                     int degree, const CoefficientField& k);

SubspaceArrangementLocus toric_resonance(const SimplicialComplex& L,
                                         const CoefficientField& k, int depth);
SubspaceArrangementLocus toric_characteristic(const SimplicialComplex& L,
                                              const CoefficientField& k,
                                              int depth);

/// Degree-1 layer for a right-angled Artin group: the maximal vertex subsets
/// inducing a disconnected subgraph.  Coincides with the i=1, d=1 layer of
/// toric_resonance(flag_complex(G)).
std::vector<std::vector<Vertex>> raag_degree1(const Graph& G);

/// Layer-by-layer nestedness: every component of layer i must be contained in
/// a component of layer i+1 (exact for unions of coordinate subspaces or
/// subtori), and the degenerate point must persist.
PropagationVerdict check_propagation(const SubspaceArrangementLocus& locus,
                                     int top_degree);

/// Point membership by support: the degenerate point iff `support` is empty,
/// otherwise containment of the support in some component.
bool locus_membership(const SubspaceArrangementLocus& locus, int degree,
                      const std::vector<Vertex>& support);

/// 2^|V| enumeration guard; default 20, overridden by JUMPLOCI_VERTEX_CAP.
int vertex_budget_cap();

}  // namespace jumploci
