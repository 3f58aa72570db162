#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jumploci/error.hpp"

namespace jumploci {

using Vertex = int;
/// A face is a strictly increasing vertex sequence; the empty face is {}.
using Face = std::vector<Vertex>;

Face sorted_face(Face f);
bool face_subset(const Face& a, const Face& b);
Face face_union(const Face& a, const Face& b);
Face face_difference(const Face& a, const Face& b);
bool faces_disjoint(const Face& a, const Face& b);
std::string face_to_string(const Face& f);

/// Finite abstract simplicial complex, stored by its facets (maximal faces)
/// over an explicit ambient vertex set.  Values are immutable after
/// construction; all operations are pure functions.
///
/// Degenerate cases: facets == {{}} is the complex {∅} (dimension -1), an
/// empty facet list is the void complex (no faces at all; its dimension is
/// undefined and homology-type operations reject it).  A vertex listed in the
/// ambient set but absent from every facet ("ghost") is meaningful only as
/// part of an Alexander-duality ambient set.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;  // void complex on the empty vertex set

  static SimplicialComplex from_facets(std::vector<Face> facets);
  static SimplicialComplex from_facets(std::vector<Face> facets,
                                       std::vector<Vertex> ambient_vertices);
  /// Full simplex on the given vertices ({∅} when the list is empty).
  static SimplicialComplex simplex(std::vector<Vertex> vertices);
  /// The complex {∅} on the given ambient set.
  static SimplicialComplex empty_complex(std::vector<Vertex> ambient_vertices);
  static SimplicialComplex void_complex(std::vector<Vertex> ambient_vertices);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Face>& facets() const { return facets_; }

  bool is_void() const { return facets_.empty(); }
  /// Dimension (max facet size - 1); throws VoidComplex for the void complex.
  int dim() const;
  bool has_face(const Face& f) const;
  bool has_vertex(Vertex v) const;
  /// Vertices that actually occur in some facet (the 0-faces).
  std::vector<Vertex> support() const;
  bool has_ghost_vertices() const;

  /// Faces of dimension d, sorted lexicographically (d = -1 gives {∅}).
  std::vector<Face> faces_of_dim(int d) const;
  /// All faces including ∅, ordered by (size, lex).
  std::vector<Face> all_faces() const;
  /// (f_{-1}, f_0, ..., f_dim); f_{-1} = 1.
  std::vector<long> f_vector() const;
  long face_count(int d) const;
  bool is_pure() const;

  bool operator==(const SimplicialComplex& o) const {
    return vertices_ == o.vertices_ && facets_ == o.facets_;
  }

 private:
  std::vector<Vertex> vertices_;  // sorted, distinct, non-negative
  std::vector<Face> facets_;      // canonical: sorted faces, lex-sorted list, antichain
};

struct Graph {
  std::vector<Vertex> vertices;
  std::vector<std::pair<Vertex, Vertex>> edges;  // a < b, sorted, distinct

  static Graph make(std::vector<Vertex> vertices,
                    std::vector<std::pair<Vertex, Vertex>> edges);
  bool adjacent(Vertex a, Vertex b) const;
  /// Number of connected components of the induced subgraph on W.
  int component_count(const std::vector<Vertex>& W) const;
};

/// lk_L(σ) = {τ : τ ∩ σ = ∅ and τ ∪ σ ∈ L} on the vertex set V(L) \ σ.
SimplicialComplex link(const SimplicialComplex& L, const Face& sigma);

/// Faces of L contained in W, on vertex set W.
SimplicialComplex induced_subcomplex(const SimplicialComplex& L,
                                     const std::vector<Vertex>& W);

/// Maximal simplicial complex whose 1-skeleton is G (faces = cliques).
SimplicialComplex flag_complex(const Graph& G);

/// Faces {σ ⊆ V : V \ σ ∉ L}, on the same ambient vertex set.  An involution.
SimplicialComplex alexander_dual(const SimplicialComplex& L);

/// Result of a composition; output vertices are relabeled to 1..N and
/// vertex_origin[v-1] records (vertex of L, original vertex of that K).
struct Composition {
  SimplicialComplex complex;
  std::vector<std::pair<Vertex, Vertex>> vertex_origin;
};

/// L ∘ (K_1, ..., K_m): faces are the unions ∪_{i∈τ} σ_i over τ ∈ L with
/// nonempty σ_i ∈ K_i; equivalently the union of joins K_{i_1} ⋆ ... ⋆ K_{i_k}
/// over simplices τ = {i_1, ..., i_k} of L.  ks follows the sorted vertex
/// order of L.
Composition compose(const SimplicialComplex& L,
                    const std::vector<SimplicialComplex>& ks);

/// Simplicial wedge L(J), computed as the Alexander dual of
/// L* ∘ (Δ^{j_1 - 1}, ..., Δ^{j_m - 1}).
Composition simplicial_wedge(const SimplicialComplex& L,
                             const std::vector<int>& J);

}  // namespace jumploci
