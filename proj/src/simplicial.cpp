#include "jumploci/simplicial.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace jumploci {

Face sorted_face(Face f) {
  std::sort(f.begin(), f.end());
  for (size_t i = 0; i + 1 < f.size(); ++i)
    if (f[i] == f[i + 1])
      fail("BadFace", "repeated vertex " + std::to_string(f[i]) + " in a face");
  return f;
}

bool face_subset(const Face& a, const Face& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Face face_union(const Face& a, const Face& b) {
  Face u;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
  return u;
}

Face face_difference(const Face& a, const Face& b) {
  Face d;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(d));
  return d;
}

bool faces_disjoint(const Face& a, const Face& b) {
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return false;
    a[i] < b[j] ? ++i : ++j;
  }
  return true;
}

std::string face_to_string(const Face& f) {
  std::string s = "{";
  for (size_t i = 0; i < f.size(); ++i)
    s += (i ? "," : "") + std::to_string(f[i]);
  return s + "}";
}

namespace {

std::vector<Face> canonicalize_facets(std::vector<Face> facets) {
  for (auto& f : facets) f = sorted_face(std::move(f));
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  // drop faces properly contained in another facet
  std::vector<Face> out;
  for (size_t i = 0; i < facets.size(); ++i) {
    bool maximal = true;
    for (size_t j = 0; j < facets.size() && maximal; ++j)
      if (i != j && facets[i].size() < facets[j].size() &&
          face_subset(facets[i], facets[j]))
        maximal = false;
    if (maximal) out.push_back(facets[i]);
  }
  return out;
}

std::vector<Vertex> sorted_vertex_set(std::vector<Vertex> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  for (Vertex x : v)
    if (x < 0) fail("BadVertex", "vertices must be non-negative integers");
  return v;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(std::vector<Face> facets) {
  std::vector<Vertex> verts;
  for (const auto& f : facets) verts.insert(verts.end(), f.begin(), f.end());
  return from_facets(std::move(facets), sorted_vertex_set(std::move(verts)));
}

SimplicialComplex SimplicialComplex::from_facets(
    std::vector<Face> facets, std::vector<Vertex> ambient_vertices) {
  SimplicialComplex c;
  c.vertices_ = sorted_vertex_set(std::move(ambient_vertices));
  c.facets_ = canonicalize_facets(std::move(facets));
  for (const auto& f : c.facets_)
    for (Vertex v : f)
      if (!std::binary_search(c.vertices_.begin(), c.vertices_.end(), v))
        fail("UnknownVertex", "facet vertex " + std::to_string(v) +
                                  " is not in the vertex set");
  return c;
}

SimplicialComplex SimplicialComplex::simplex(std::vector<Vertex> vertices) {
  auto v = sorted_vertex_set(std::move(vertices));
  return from_facets({Face(v.begin(), v.end())}, v);
}

SimplicialComplex SimplicialComplex::empty_complex(
    std::vector<Vertex> ambient_vertices) {
  return from_facets({Face{}}, std::move(ambient_vertices));
}

SimplicialComplex SimplicialComplex::void_complex(
    std::vector<Vertex> ambient_vertices) {
  return from_facets({}, std::move(ambient_vertices));
}

int SimplicialComplex::dim() const {
  if (is_void())
    fail("VoidComplex", "the void complex has no dimension");
  size_t top = 0;
  for (const auto& f : facets_) top = std::max(top, f.size());
  return static_cast<int>(top) - 1;
}

bool SimplicialComplex::has_face(const Face& f) const {
  for (const auto& g : facets_)
    if (face_subset(f, g)) return true;
  return false;
}

bool SimplicialComplex::has_vertex(Vertex v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::vector<Vertex> SimplicialComplex::support() const {
  std::vector<Vertex> s;
  for (const auto& f : facets_) s.insert(s.end(), f.begin(), f.end());
  return sorted_vertex_set(std::move(s));
}

bool SimplicialComplex::has_ghost_vertices() const {
  return support().size() != vertices_.size();
}

std::vector<Face> SimplicialComplex::faces_of_dim(int d) const {
  if (d < -1 || is_void()) return {};
  if (d == -1) return {Face{}};
  const size_t k = static_cast<size_t>(d) + 1;
  std::set<Face> out;
  std::vector<Vertex> pick(k);
  for (const auto& f : facets_) {
    if (f.size() < k) continue;
    // enumerate k-subsets of the facet
    std::vector<size_t> idx(k);
    for (size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      for (size_t i = 0; i < k; ++i) pick[i] = f[idx[i]];
      out.insert(pick);
      size_t i = k;
      while (i > 0 && idx[i - 1] == f.size() - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return {out.begin(), out.end()};
}

std::vector<Face> SimplicialComplex::all_faces() const {
  std::vector<Face> out;
  if (is_void()) return out;
  for (int d = -1; d <= dim(); ++d) {
    auto fs = faces_of_dim(d);
    out.insert(out.end(), fs.begin(), fs.end());
  }
  return out;
}

std::vector<long> SimplicialComplex::f_vector() const {
  if (is_void()) fail("VoidComplex", "the void complex has no f-vector");
  std::vector<long> f;
  for (int d = -1; d <= dim(); ++d)
    f.push_back(static_cast<long>(faces_of_dim(d).size()));
  return f;
}

long SimplicialComplex::face_count(int d) const {
  return static_cast<long>(faces_of_dim(d).size());
}

bool SimplicialComplex::is_pure() const {
  if (is_void()) fail("VoidComplex", "purity is undefined for the void complex");
  for (const auto& f : facets_)
    if (static_cast<int>(f.size()) != dim() + 1) return false;
  return true;
}

// ---------------------------------------------------------------------------

Graph Graph::make(std::vector<Vertex> vertices,
                  std::vector<std::pair<Vertex, Vertex>> edges) {
  Graph g;
  g.vertices = sorted_vertex_set(std::move(vertices));
  for (auto& [a, b] : edges) {
    if (a == b) fail("BadGraph", "loop at vertex " + std::to_string(a));
    if (a > b) std::swap(a, b);
    for (Vertex v : {a, b})
      if (!std::binary_search(g.vertices.begin(), g.vertices.end(), v))
        fail("UnknownVertex",
             "edge endpoint " + std::to_string(v) + " is not a vertex");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  g.edges = std::move(edges);
  return g;
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(a, b));
}

int Graph::component_count(const std::vector<Vertex>& W) const {
  std::map<Vertex, int> comp;
  for (Vertex v : W) comp[v] = -1;
  int count = 0;
  for (Vertex v : W) {
    if (comp[v] >= 0) continue;
    // BFS within W
    std::vector<Vertex> queue{v};
    comp[v] = count;
    while (!queue.empty()) {
      Vertex u = queue.back();
      queue.pop_back();
      for (Vertex w : W)
        if (comp[w] < 0 && adjacent(u, w)) {
          comp[w] = count;
          queue.push_back(w);
        }
    }
    ++count;
  }
  return count;
}

// ---------------------------------------------------------------------------

SimplicialComplex link(const SimplicialComplex& L, const Face& sigma_in) {
  const Face sigma = sorted_face(sigma_in);
  if (!L.has_face(sigma))
    fail("NotAFace", face_to_string(sigma) + " is not a face of the complex");
  std::vector<Face> facets;
  for (const auto& f : L.facets())
    if (face_subset(sigma, f)) facets.push_back(face_difference(f, sigma));
  return SimplicialComplex::from_facets(
      std::move(facets), face_difference(Face(L.vertices().begin(),
                                              L.vertices().end()),
                                         sigma));
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& L,
                                     const std::vector<Vertex>& W_in) {
  const Face W = sorted_face(W_in);
  for (Vertex v : W)
    if (!L.has_vertex(v))
      fail("UnknownVertex",
           "vertex " + std::to_string(v) + " is not in the complex");
  std::vector<Face> facets;
  for (const auto& f : L.facets()) {
    Face g;
    std::set_intersection(f.begin(), f.end(), W.begin(), W.end(),
                          std::back_inserter(g));
    facets.push_back(std::move(g));
  }
  if (L.is_void()) return SimplicialComplex::void_complex(W);
  return SimplicialComplex::from_facets(std::move(facets), W);
}

namespace {

// Bron–Kerbosch with pivoting; cliques come out in deterministic order after
// canonicalization.
void max_cliques(const Graph& g, std::vector<Vertex>& R, std::vector<Vertex> P,
                 std::vector<Vertex> X, std::vector<Face>& out) {
  if (P.empty() && X.empty()) {
    out.push_back(sorted_face(R));
    return;
  }
  Vertex pivot = -1;
  size_t best = 0;
  for (const auto& cand : {P, X})
    for (Vertex u : cand) {
      size_t deg = 0;
      for (Vertex v : P)
        if (g.adjacent(u, v)) ++deg;
      if (pivot < 0 || deg > best) {
        pivot = u;
        best = deg;
      }
    }
  std::vector<Vertex> ext;
  for (Vertex v : P)
    if (pivot < 0 || !g.adjacent(pivot, v)) ext.push_back(v);
  for (Vertex v : ext) {
    std::vector<Vertex> P2, X2;
    for (Vertex w : P)
      if (g.adjacent(v, w)) P2.push_back(w);
    for (Vertex w : X)
      if (g.adjacent(v, w)) X2.push_back(w);
    R.push_back(v);
    max_cliques(g, R, std::move(P2), std::move(X2), out);
    R.pop_back();
    P.erase(std::find(P.begin(), P.end(), v));
    X.push_back(v);
  }
}

}  // namespace

SimplicialComplex flag_complex(const Graph& G) {
  if (G.vertices.empty()) return SimplicialComplex::empty_complex({});
  std::vector<Face> cliques;
  std::vector<Vertex> R;
  max_cliques(G, R, G.vertices, {}, cliques);
  return SimplicialComplex::from_facets(std::move(cliques), G.vertices);
}

SimplicialComplex alexander_dual(const SimplicialComplex& L) {
  const std::vector<Vertex>& V = L.vertices();
  const Face Vface(V.begin(), V.end());
  if (L.is_void()) return SimplicialComplex::simplex(V);

  // facets of the dual are complements of the minimal non-faces of L
  const int max_size = std::min<int>(L.dim() + 2, static_cast<int>(V.size()));
  std::vector<Face> min_nonfaces;
  std::vector<Face> candidates{Face{}};  // faces of size s-1, grown level by level
  for (int s = 1; s <= max_size; ++s) {
    // candidate s-sets: extensions of (s-1)-faces; a minimal non-face has all
    // proper subsets faces, so growing faces by one vertex reaches all of them
    std::set<Face> level;
    for (const auto& f : candidates)
      for (Vertex v : V) {
        if (!f.empty() && v <= f.back()) continue;
        Face g = f;
        g.push_back(v);
        level.insert(std::move(g));
      }
    candidates.clear();
    for (const auto& g : level) {
      bool all_proper_faces = true;
      for (size_t drop = 0; drop < g.size() && all_proper_faces; ++drop) {
        Face sub = g;
        sub.erase(sub.begin() + static_cast<long>(drop));
        if (!L.has_face(sub)) all_proper_faces = false;
      }
      if (!all_proper_faces) continue;
      if (L.has_face(g))
        candidates.push_back(g);
      else
        min_nonfaces.push_back(g);
    }
  }

  std::vector<Face> facets;
  for (const auto& n : min_nonfaces)
    facets.push_back(face_difference(Vface, n));
  if (facets.empty()) return SimplicialComplex::void_complex(V);
  return SimplicialComplex::from_facets(std::move(facets), V);
}

Composition compose(const SimplicialComplex& L,
                    const std::vector<SimplicialComplex>& ks) {
  if (ks.size() != L.vertices().size())
    fail("ArityMismatch", "expected one complex per vertex of the base (" +
                              std::to_string(L.vertices().size()) + "), got " +
                              std::to_string(ks.size()));
  std::set<Vertex> seen;
  for (const auto& k : ks) {
    if (k.is_void()) fail("VoidComplex", "void complex among the arguments");
    for (Vertex v : k.vertices())
      if (!seen.insert(v).second)
        fail("OverlappingVertexSets",
             "vertex " + std::to_string(v) + " occurs in two arguments");
  }

  // relabel all argument vertices to 1..N in (position, vertex) order
  Composition out;
  std::map<std::pair<int, Vertex>, Vertex> relabel;
  for (size_t i = 0; i < ks.size(); ++i)
    for (Vertex v : ks[i].vertices()) {
      const Vertex fresh = static_cast<Vertex>(out.vertex_origin.size()) + 1;
      relabel[{static_cast<int>(i), v}] = fresh;
      out.vertex_origin.emplace_back(L.vertices()[i], v);
    }

  std::vector<Face> facets;
  for (const auto& tau : L.facets()) {
    // positions of tau's vertices in the sorted vertex order of L
    std::vector<int> pos;
    for (Vertex v : tau)
      pos.push_back(static_cast<int>(
          std::lower_bound(L.vertices().begin(), L.vertices().end(), v) -
          L.vertices().begin()));
    // Cartesian product of facet choices per position
    std::vector<size_t> choice(pos.size(), 0);
    while (true) {
      Face u;
      for (size_t t = 0; t < pos.size(); ++t)
        for (Vertex v : ks[pos[t]].facets()[choice[t]])
          u.push_back(relabel.at({pos[t], v}));
      facets.push_back(sorted_face(std::move(u)));
      size_t t = 0;
      while (t < pos.size() && ++choice[t] == ks[pos[t]].facets().size()) {
        choice[t] = 0;
        ++t;
      }
      if (t == pos.size()) break;
    }
  }

  std::vector<Vertex> ambient(out.vertex_origin.size());
  for (size_t i = 0; i < ambient.size(); ++i)
    ambient[i] = static_cast<Vertex>(i) + 1;
  out.complex =
      SimplicialComplex::from_facets(std::move(facets), std::move(ambient));
  return out;
}

Composition simplicial_wedge(const SimplicialComplex& L,
                             const std::vector<int>& J) {
  if (L.is_void()) fail("VoidComplex", "wedge of the void complex");
  if (J.size() != L.vertices().size())
    fail("ArityMismatch", "expected one multiplicity per vertex (" +
                              std::to_string(L.vertices().size()) + "), got " +
                              std::to_string(J.size()));
  for (int j : J)
    if (j < 1) fail("ArityMismatch", "multiplicities must be positive");

  std::vector<SimplicialComplex> simplices;
  Vertex next = 1;
  for (int j : J) {
    std::vector<Vertex> vs(static_cast<size_t>(j));
    for (int t = 0; t < j; ++t) vs[static_cast<size_t>(t)] = next++;
    simplices.push_back(SimplicialComplex::simplex(std::move(vs)));
  }
  Composition comp = compose(alexander_dual(L), simplices);
  comp.complex = alexander_dual(comp.complex);
  return comp;
}

}  // namespace jumploci
