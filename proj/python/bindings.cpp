#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "jumploci/algebra.hpp"
#include "jumploci/arrangement.hpp"
#include "jumploci/cm.hpp"
#include "jumploci/exact.hpp"
#include "jumploci/fox.hpp"
#include "jumploci/homology.hpp"
#include "jumploci/simplicial.hpp"
#include "jumploci/toric.hpp"

namespace py = pybind11;
using namespace jumploci;

namespace {

CoefficientField parse_field(const std::string& s) {
  return CoefficientField::parse(s);
}

template <class Fd>
std::vector<typename Fd::Elem> parse_point(const Fd& fd,
                                           const std::vector<std::string>& v) {
  std::vector<typename Fd::Elem> out;
  out.reserve(v.size());
  for (const auto& s : v) out.push_back(fd.from_string(s));
  return out;
}

py::dict homology_dict(const HomologyProfile& h) {
  py::dict out;
  py::list groups;
  for (int d = -1; d <= h.top_degree; ++d) {
    py::dict g;
    g["degree"] = d;
    g["betti"] = h.dim_at(d);
    py::list tors;
    for (const auto& t : h.at(d)->torsion) tors.append(t.get_str());
    g["torsion"] = tors;
    groups.append(g);
  }
  out["field"] = h.field.name();
  out["groups"] = groups;
  return out;
}

py::dict cm_dict(const CMCertificate& c) {
  py::dict out;
  out["field"] = c.field.name();
  out["dim"] = c.n;
  out["pure"] = c.pure;
  out["verdict"] = c.verdict;
  if (c.witness) out["witness"] = *c.witness;
  if (!c.witness_reason.empty()) out["reason"] = c.witness_reason;
  return out;
}

py::dict locus_dict(const SubspaceArrangementLocus& locus) {
  py::dict out;
  out["kind"] = locus.kind == LocusKind::resonance ? "resonance"
                                                   : "characteristic";
  out["field"] = locus.field.name();
  out["depth"] = locus.depth;
  py::list layers;
  for (const auto& layer : locus.layers) {
    py::dict l;
    l["degree"] = layer.degree;
    l["origin"] = layer.origin;
    l["components"] = layer.components;
    layers.append(l);
  }
  out["layers"] = layers;
  const auto prop = check_propagation(locus, locus.top_degree);
  out["propagates"] = prop.propagates;
  if (prop.first_failure) {
    out["failure_degree"] = prop.first_failure->first;
    out["failure_component"] = prop.first_failure->second;
  }
  return out;
}

Arrangement arrangement_from_args(
    const std::optional<std::vector<std::vector<std::string>>>& matrix,
    const std::optional<std::pair<std::vector<Vertex>,
                                  std::vector<std::pair<Vertex, Vertex>>>>&
        graph) {
  if (matrix.has_value() == graph.has_value())
    fail("BadArrangement", "provide exactly one of matrix= or graph=");
  if (matrix) {
    const int rows = static_cast<int>(matrix->size());
    const int cols = rows ? static_cast<int>((*matrix)[0].size()) : 0;
    DenseMat<Rat> m(rows, cols);
    for (int i = 0; i < rows; ++i) {
      if (static_cast<int>((*matrix)[static_cast<size_t>(i)].size()) != cols)
        fail("BadArrangement", "ragged matrix");
      for (int j = 0; j < cols; ++j)
        m(i, j) = parse_rational((*matrix)[static_cast<size_t>(i)]
                                          [static_cast<size_t>(j)]);
    }
    return Arrangement::from_matrix(std::move(m));
  }
  return Arrangement::graphic(graph->first, graph->second);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Exact-arithmetic certification of Cohen-Macaulayness, duality, and "
      "cohomology jump loci for simplicial, toric, and arrangement data";

  py::register_exception<Error>(m, "JumplociError");

  py::class_<SimplicialComplex>(m, "SimplicialComplex")
      .def(py::init([](std::vector<Face> facets,
                       std::optional<std::vector<Vertex>> vertices) {
             return vertices ? SimplicialComplex::from_facets(
                                   std::move(facets), std::move(*vertices))
                             : SimplicialComplex::from_facets(std::move(facets));
           }),
           py::arg("facets"), py::arg("vertices") = std::nullopt)
      .def_property_readonly("vertices", &SimplicialComplex::vertices)
      .def_property_readonly("facets", &SimplicialComplex::facets)
      .def("dim", &SimplicialComplex::dim)
      .def("f_vector", &SimplicialComplex::f_vector)
      .def("is_pure", &SimplicialComplex::is_pure)
      .def("has_face", &SimplicialComplex::has_face)
      .def("__eq__",
           [](const SimplicialComplex& a, const SimplicialComplex& b) {
             return a == b;
           })
      .def("__repr__", [](const SimplicialComplex& L) {
        return "SimplicialComplex(" + std::to_string(L.vertices().size()) +
               " vertices, " + std::to_string(L.facets().size()) + " facets)";
      });

  m.def("link", &link, py::arg("complex"), py::arg("simplex"));
  m.def("induced_subcomplex", &induced_subcomplex, py::arg("complex"),
        py::arg("vertices"));
  m.def(
      "flag_complex",
      [](const std::vector<Vertex>& vertices,
         const std::vector<std::pair<Vertex, Vertex>>& edges) {
        return flag_complex(Graph::make(vertices, edges));
      },
      py::arg("vertices"), py::arg("edges"));
  m.def("alexander_dual", &alexander_dual, py::arg("complex"));
  m.def(
      "compose",
      [](const SimplicialComplex& L, const std::vector<SimplicialComplex>& ks) {
        const auto c = compose(L, ks);
        return py::make_tuple(c.complex, c.vertex_origin);
      },
      py::arg("base"), py::arg("pieces"));
  m.def(
      "simplicial_wedge",
      [](const SimplicialComplex& L, const std::vector<int>& J) {
        return simplicial_wedge(L, J).complex;
      },
      py::arg("complex"), py::arg("multiplicities"));

  m.def(
      "reduced_homology",
      [](const SimplicialComplex& L, const std::string& field) {
        return homology_dict(reduced_homology(L, parse_field(field)));
      },
      py::arg("complex"), py::arg("field") = "Z");
  m.def(
      "is_cohen_macaulay",
      [](const SimplicialComplex& L, const std::string& field) {
        return cm_dict(is_cohen_macaulay(L, parse_field(field)));
      },
      py::arg("complex"), py::arg("field") = "Z");
  m.def(
      "certify_toric",
      [](const SimplicialComplex& L, const std::string& field) {
        const auto v = certify_toric(L, parse_field(field));
        py::dict out;
        out["abelian_duality"] = v.abelian_duality;
        out["epy"] = v.epy;
        out["dimension"] = v.dimension;
        out["cm"] = cm_dict(v.cm);
        return out;
      },
      py::arg("complex"), py::arg("field") = "Z");
  m.def(
      "certify_bestvina_brady",
      [](const std::vector<Vertex>& vertices,
         const std::vector<std::pair<Vertex, Vertex>>& edges,
         const std::string& field) {
        const auto v = certify_bestvina_brady(Graph::make(vertices, edges),
                                              parse_field(field));
        py::dict out;
        out["abelian_duality"] = v.abelian_duality;
        out["acyclic"] = *v.acyclic;
        out["dimension"] = v.dimension;
        out["cm"] = cm_dict(v.cm);
        return out;
      },
      py::arg("vertices"), py::arg("edges"), py::arg("field") = "Z");

  m.def(
      "toric_resonance",
      [](const SimplicialComplex& L, const std::string& field, int depth) {
        return locus_dict(toric_resonance(L, parse_field(field), depth));
      },
      py::arg("complex"), py::arg("field") = "Q", py::arg("depth") = 1);
  m.def(
      "toric_characteristic",
      [](const SimplicialComplex& L, const std::string& field, int depth) {
        return locus_dict(toric_characteristic(L, parse_field(field), depth));
      },
      py::arg("complex"), py::arg("field") = "Q", py::arg("depth") = 1);
  m.def(
      "raag_degree1",
      [](const std::vector<Vertex>& vertices,
         const std::vector<std::pair<Vertex, Vertex>>& edges) {
        return raag_degree1(Graph::make(vertices, edges));
      },
      py::arg("vertices"), py::arg("edges"));

  m.def(
      "aomoto_cohomology",
      [](const SimplicialComplex& L, const std::vector<std::string>& point,
         const std::string& field) {
        return with_field(parse_field(field), [&](auto fd) {
          const auto A = stanley_reisner_ring(fd, L);
          return aomoto_cohomology(A, parse_point(fd, point));
        });
      },
      py::arg("complex"), py::arg("point"), py::arg("field") = "Q");
  m.def(
      "stanley_reisner_dims",
      [](const SimplicialComplex& L, const std::string& field) {
        return with_field(parse_field(field), [&](auto fd) {
          return stanley_reisner_ring(fd, L).dims();
        });
      },
      py::arg("complex"), py::arg("field") = "Q");
  m.def(
      "bgg_check",
      [](const SimplicialComplex& L, const std::string& field,
         int degree_bound) {
        return with_field(parse_field(field), [&](auto fd) {
          const auto rep =
              bgg_complex_check(stanley_reisner_ring(fd, L), degree_bound);
          py::dict out;
          out["socle"] = rep.socle;
          out["degree_bound"] = rep.degree_bound;
          out["consistent"] = rep.consistent;
          py::list fails;
          for (const auto& f : rep.failures)
            fails.append(py::make_tuple(f.internal_degree, f.homological_index,
                                        f.dim));
          out["failures"] = fails;
          return out;
        });
      },
      py::arg("complex"), py::arg("field") = "Q", py::arg("degree_bound") = -1);

  m.def(
      "circuits",
      [](const std::optional<std::vector<std::vector<std::string>>>& matrix,
         const std::optional<std::pair<std::vector<Vertex>,
                                       std::vector<std::pair<Vertex, Vertex>>>>&
             graph) {
        return circuits(arrangement_from_args(matrix, graph));
      },
      py::arg("matrix") = std::nullopt, py::arg("graph") = std::nullopt);
  m.def(
      "orlik_solomon_dims",
      [](const std::optional<std::vector<std::vector<std::string>>>& matrix,
         const std::optional<std::pair<std::vector<Vertex>,
                                       std::vector<std::pair<Vertex, Vertex>>>>&
             graph,
         const std::string& field) {
        const auto A = arrangement_from_args(matrix, graph);
        return with_field(parse_field(field), [&](auto fd) {
          return orlik_solomon(fd, A).dims();
        });
      },
      py::arg("matrix") = std::nullopt, py::arg("graph") = std::nullopt,
      py::arg("field") = "Q");
  m.def(
      "projective_resonance",
      [](const std::optional<std::vector<std::vector<std::string>>>& matrix,
         const std::optional<std::pair<std::vector<Vertex>,
                                       std::vector<std::pair<Vertex, Vertex>>>>&
             graph,
         const std::vector<std::string>& point, const std::string& field) {
        const auto A = arrangement_from_args(matrix, graph);
        return with_field(parse_field(field), [&](auto fd) {
          const auto os = orlik_solomon(fd, A);
          const auto check =
              projective_propagation_at(fd, os, parse_point(fd, point));
          py::dict out;
          out["h"] = check.h;
          out["propagates"] = check.propagates;
          return out;
        });
      },
      py::arg("matrix") = std::nullopt, py::arg("graph") = std::nullopt,
      py::arg("point") = std::vector<std::string>{}, py::arg("field") = "Q");

  m.def(
      "fox_twisted_cohomology",
      [](int generators, const std::vector<std::vector<int>>& relators,
         const std::vector<std::string>& character, const std::string& field) {
        const auto P = GroupPresentation::make(generators, relators);
        return with_field(parse_field(field), [&](auto fd) {
          const auto h = twisted_cohomology(fd, P, parse_point(fd, character));
          return py::make_tuple(h[0], h[1], h[2]);
        });
      },
      py::arg("generators"), py::arg("relators"), py::arg("character"),
      py::arg("field") = "Q");
  m.def(
      "fox_jacobian",
      [](int generators, const std::vector<std::vector<int>>& relators,
         const std::vector<std::string>& character, const std::string& field) {
        const auto P = GroupPresentation::make(generators, relators);
        return with_field(parse_field(field), [&](auto fd) {
          const auto J = fox_jacobian(fd, P, parse_point(fd, character));
          std::vector<std::vector<std::string>> out;
          for (int i = 0; i < J.rows(); ++i) {
            std::vector<std::string> row;
            for (int j = 0; j < J.cols(); ++j)
              row.push_back(fd.to_string(J(i, j)));
            out.push_back(std::move(row));
          }
          return out;
        });
      },
      py::arg("generators"), py::arg("relators"), py::arg("character"),
      py::arg("field") = "Q");
}
