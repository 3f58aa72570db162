#include "jumploci/toric.hpp"

#include <algorithm>
#include <cstdlib>

#include "jumploci/homology.hpp"

namespace jumploci {

int vertex_budget_cap() {
  if (const char* env = std::getenv("JUMPLOCI_VERTEX_CAP")) {
    const int cap = std::atoi(env);
    if (cap > 0) return cap;
  }
  return 20;
}

long toric_layer_sum(const SimplicialComplex& L, const std::vector<Vertex>& W,
                     int degree, const CoefficientField& k) {
  if (L.is_void()) fail("VoidComplex", "jump loci of the void complex");
  const Face Wf = sorted_face(W);
  const Face V(L.vertices().begin(), L.vertices().end());
  const SimplicialComplex outside = induced_subcomplex(L, face_difference(V, Wf));
  long sum = 0;
  for (const Face& sigma : outside.all_faces()) {
    const int j = degree - 1 - static_cast<int>(sigma.size());
    if (j < -1) continue;
    const SimplicialComplex lk = induced_subcomplex(link(L, sigma), Wf);
    sum += reduced_homology(lk, k).dim_at(j);
  }
  return sum;
}

namespace {

std::vector<Vertex> subset_of_mask(const std::vector<Vertex>& verts,
                                   unsigned long mask) {
  std::vector<Vertex> out;
  for (size_t i = 0; i < verts.size(); ++i)
    if (mask & (1ul << i)) out.push_back(verts[i]);
  return out;
}

bool contained_in_some(const std::vector<Vertex>& W,
                       const std::vector<std::vector<Vertex>>& components) {
  for (const auto& c : components)
    if (std::includes(c.begin(), c.end(), W.begin(), W.end())) return true;
  return false;
}

SubspaceArrangementLocus toric_locus(const SimplicialComplex& L,
                                     const CoefficientField& k, int depth,
                                     LocusKind kind) {
  if (!k.is_field())
    fail("IntegerCoefficientsUnsupported", "jump loci are defined over fields");
  if (L.is_void()) fail("VoidComplex", "jump loci of the void complex");
  if (L.has_ghost_vertices())
    fail("UnknownVertex",
         "jump loci need every vertex of the ambient set to be a 0-face");
  if (depth < 1) fail("BadDepth", "depth must be >= 1");
  const int m = static_cast<int>(L.vertices().size());
  if (m > vertex_budget_cap())
    fail("VertexBudgetExceeded",
         "2^" + std::to_string(m) + " subsets exceed the cap of 2^" +
             std::to_string(vertex_budget_cap()) +
             " (set JUMPLOCI_VERTEX_CAP to override)");

  SubspaceArrangementLocus locus;
  locus.kind = kind;
  locus.field = k;
  locus.depth = depth;
  locus.top_degree = L.dim() + 1;
  locus.ambient = L.vertices();
  locus.layers.resize(static_cast<size_t>(locus.top_degree) + 1);
  for (int i = 0; i <= locus.top_degree; ++i)
    locus.layers[static_cast<size_t>(i)].degree = i;

  // subsets by decreasing size (and ascending mask within a size): maximal
  // components are found first and proper subsets are pruned on sight
  std::vector<unsigned long> masks;
  for (unsigned long mask = 0; mask < (1ul << m); ++mask) masks.push_back(mask);
  std::stable_sort(masks.begin(), masks.end(),
                   [](unsigned long a, unsigned long b) {
                     return __builtin_popcountl(a) > __builtin_popcountl(b);
                   });

  for (unsigned long mask : masks) {
    const auto W = subset_of_mask(L.vertices(), mask);
    // skip the sum when every layer already absorbs this subset
    bool needed = false;
    for (int i = 0; i <= locus.top_degree && !needed; ++i)
      if (!contained_in_some(W, locus.layers[static_cast<size_t>(i)].components))
        needed = true;
    if (!needed && !W.empty()) continue;

    std::vector<long> sums(static_cast<size_t>(locus.top_degree) + 1, 0);
    { // one sweep over σ computes the sum for every degree
      const Face V(L.vertices().begin(), L.vertices().end());
      const Face Wf(W.begin(), W.end());
      const SimplicialComplex outside =
          induced_subcomplex(L, face_difference(V, Wf));
      for (const Face& sigma : outside.all_faces()) {
        const SimplicialComplex lk = induced_subcomplex(link(L, sigma), Wf);
        const HomologyProfile profile = reduced_homology(lk, k);
        for (int i = 0; i <= locus.top_degree; ++i) {
          const int j = i - 1 - static_cast<int>(sigma.size());
          sums[static_cast<size_t>(i)] += profile.dim_at(j);
        }
      }
    }
    for (int i = 0; i <= locus.top_degree; ++i) {
      if (sums[static_cast<size_t>(i)] < depth) continue;
      auto& layer = locus.layers[static_cast<size_t>(i)];
      if (W.empty())
        layer.origin = true;
      else if (!contained_in_some(W, layer.components))
        layer.components.push_back(W);
    }
  }
  for (auto& layer : locus.layers)
    std::sort(layer.components.begin(), layer.components.end());
  return locus;
}

}  // namespace

SubspaceArrangementLocus toric_resonance(const SimplicialComplex& L,
                                         const CoefficientField& k, int depth) {
  return toric_locus(L, k, depth, LocusKind::resonance);
}

SubspaceArrangementLocus toric_characteristic(const SimplicialComplex& L,
                                              const CoefficientField& k,
                                              int depth) {
  return toric_locus(L, k, depth, LocusKind::characteristic);
}

std::vector<std::vector<Vertex>> raag_degree1(const Graph& G) {
  const int m = static_cast<int>(G.vertices.size());
  if (m > vertex_budget_cap())
    fail("VertexBudgetExceeded",
         "2^" + std::to_string(m) + " subsets exceed the enumeration cap");
  std::vector<unsigned long> masks;
  for (unsigned long mask = 1; mask < (1ul << m); ++mask) masks.push_back(mask);
  std::stable_sort(masks.begin(), masks.end(),
                   [](unsigned long a, unsigned long b) {
                     return __builtin_popcountl(a) > __builtin_popcountl(b);
                   });
  std::vector<std::vector<Vertex>> out;
  for (unsigned long mask : masks) {
    const auto W = subset_of_mask(G.vertices, mask);
    if (contained_in_some(W, out)) continue;
    if (G.component_count(W) >= 2) out.push_back(W);
  }
  std::sort(out.begin(), out.end());
  return out;
}

PropagationVerdict check_propagation(const SubspaceArrangementLocus& locus,
                                     int top_degree) {
  if (top_degree > locus.top_degree)
    fail("BadDegree", "locus layers are only populated through degree " +
                          std::to_string(locus.top_degree));
  PropagationVerdict v;
  for (int i = 0; i < top_degree; ++i) {
    const auto& cur = locus.layers[static_cast<size_t>(i)];
    const auto& next = locus.layers[static_cast<size_t>(i) + 1];
    for (const auto& W : cur.components)
      if (!contained_in_some(W, next.components)) {
        v.propagates = false;
        v.first_failure = {i, W};
        return v;
      }
    const bool next_nonempty = next.origin || !next.components.empty();
    if ((cur.origin || !cur.components.empty()) && !next_nonempty) {
      v.propagates = false;
      v.first_failure = {i, std::vector<Vertex>{}};
      return v;
    }
  }
  return v;
}

bool locus_membership(const SubspaceArrangementLocus& locus, int degree,
                      const std::vector<Vertex>& support) {
  if (degree < 0 || degree > locus.top_degree) return false;
  const auto& layer = locus.layers[static_cast<size_t>(degree)];
  if (support.empty()) return layer.origin;
  return contained_in_some(sorted_face(support), layer.components);
}

}  // namespace jumploci
