#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "vca/borel.hpp"
#include "vca/classify.hpp"
#include "vca/cli.hpp"
#include "vca/complex.hpp"
#include "vca/cover.hpp"
#include "vca/error.hpp"
#include "vca/io.hpp"
#include "vca/poset.hpp"

namespace py = pybind11;
using namespace vca;

namespace {

using Labels = std::vector<int>;

std::vector<FaceSet> toFaces(const std::vector<Labels>& sets) {
    std::vector<FaceSet> out;
    out.reserve(sets.size());
    for (const Labels& s : sets) out.emplace_back(s);
    return out;
}

std::vector<Labels> toLabels(const std::vector<FaceSet>& faces) {
    std::vector<Labels> out;
    out.reserve(faces.size());
    for (FaceSet f : faces) out.push_back(f.labels());
    return out;
}

std::vector<Labels> exponents(const MonomialIdeal& ideal) {
    std::vector<Labels> out;
    for (const Monomial& m : ideal.generators()) out.push_back(m.exponents());
    return out;
}

py::dict verdictDict(const GradedVerdict& v) {
    py::dict d;
    d["property"] = toString(v.property);
    d["holds"] = v.holds;
    d["kind"] = toString(v.kind);
    d["bound"] = v.bound;
    d["witness"] = v.witness ? py::cast(v.witness->entries()) : py::none();
    d["witness_degree"] = v.witnessDegree;
    d["note"] = v.note;
    return d;
}

SearchOptions threads(int n) {
    SearchOptions o;
    o.threads = n;
    return o;
}

}  // namespace

PYBIND11_MODULE(vca, m) {
    m.doc() = "Vertex cover algebras of simplicial complexes";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<VerificationError>(m, "VerificationError", PyExc_RuntimeError);

    py::class_<SimplicialComplex>(m, "Complex")
        .def(py::init([](int n, const std::vector<Labels>& facets) { return SimplicialComplex(n, toFaces(facets)); }),
             py::arg("n"), py::arg("facets"))
        .def_static("parse", &parseComplex, py::arg("text"), "From JSON or the plain text format.")
        .def_property_readonly("n", &SimplicialComplex::vertexCount)
        .def_property_readonly("facets", [](const SimplicialComplex& c) { return toLabels(c.facets()); })
        .def_property_readonly("dimension", &SimplicialComplex::dimension)
        .def_property_readonly("is_pure", &SimplicialComplex::isPure)
        .def("to_json", &complexToJson)
        .def("__eq__", [](const SimplicialComplex& a, const SimplicialComplex& b) { return a == b; })
        .def("__repr__", [](const SimplicialComplex& c) {
            std::ostringstream s;
            s << "Complex(n=" << c.vertexCount() << ", facets=[";
            for (std::size_t i = 0; i < c.facets().size(); ++i) s << (i ? ", " : "") << "{" << c.facets()[i].toString() << "}";
            s << "])";
            return s.str();
        });

    m.def("skeleton", &skeleton, py::arg("complex"), py::arg("q"));
    m.def(
        "restriction",
        [](const SimplicialComplex& c, const Labels& w) { return restriction(c, FaceSet(w)); },
        py::arg("complex"), py::arg("vertices"));

    // covers
    m.def(
        "cover_order", [](const SimplicialComplex& c, const Labels& v) { return coverOrder(c, v); }, py::arg("complex"),
        py::arg("cover"));
    m.def(
        "decompose_cover",
        [](const SimplicialComplex& c, const Labels& v, int k) -> py::object {
            const auto d = decomposeCover(c, CoverVector(v), k);
            if (!d) return py::none();
            return py::make_tuple(d->a.entries(), d->aOrder, d->b.entries(), d->bOrder);
        },
        py::arg("complex"), py::arg("cover"), py::arg("k"),
        "(a, i, b, j) with a + b = cover, or None when indecomposable.");
    m.def(
        "indecomposable_covers",
        [](const SimplicialComplex& c, int maxDegree, int n) {
            std::vector<std::pair<Labels, int>> out;
            for (const GradedCover& g : indecomposableCovers(c, maxDegree, threads(n))) {
                out.emplace_back(g.cover.entries(), g.degree);
            }
            return out;
        },
        py::arg("complex"), py::arg("max_degree"), py::arg("threads") = 1);
    m.def(
        "jk", [](const SimplicialComplex& c, int k) { return exponents(jk(c, k)); }, py::arg("complex"), py::arg("k"));
    m.def(
        "lk", [](const SimplicialComplex& c, int k) { return exponents(lk(c, k)); }, py::arg("complex"), py::arg("k"));
    m.def(
        "lk_sq", [](const SimplicialComplex& c, int k) { return toLabels(lkSq(c, k).supports()); }, py::arg("complex"),
        py::arg("k"), "Supports of the minimal squarefree k-covers.");
    m.def("default_max_degree", &defaultMaxDegree, py::arg("complex"));
    m.def(
        "is_standard_graded_b", [](const SimplicialComplex& c) { return verdictDict(isStandardGradedB(c)); },
        py::arg("complex"));
    m.def(
        "is_standard_graded_a",
        [](const SimplicialComplex& c, int maxDegree, int n) { return verdictDict(isStandardGradedA(c, maxDegree, threads(n))); },
        py::arg("complex"), py::arg("max_degree"), py::arg("threads") = 1);
    m.def(
        "equals_ab",
        [](const SimplicialComplex& c, int maxDegree, int n) { return verdictDict(equalsAB(c, maxDegree, threads(n))); },
        py::arg("complex"), py::arg("max_degree"), py::arg("threads") = 1);
    m.def(
        "verify_duality",
        [](const SimplicialComplex& c) {
            const DualityReport r = verifyDuality(c);
            py::dict d;
            d["d"] = r.d;
            d["pure"] = r.pure;
            py::list rows;
            for (const DualityRow& row : r.rows) rows.append(py::make_tuple(row.k, row.inclusion, row.equality));
            d["rows"] = rows;
            d["grid_symmetric"] = r.gridSymmetric;
            d["skeleton_duals_are_powers"] = r.skeletonDualsArePowers;
            d["standard_graded_b"] = r.standardGradedB;
            d["violations"] = r.violations;
            return d;
        },
        py::arg("complex"));

    // Borel sets
    m.def(
        "borel_expand",
        [](int n, const std::vector<Labels>& gens) { return toLabels(borelExpand(makeBorelSpec(n, toFaces(gens)))); },
        py::arg("n"), py::arg("generators"));
    m.def(
        "borel_complex",
        [](int n, const std::vector<Labels>& gens) { return complexOf(makeBorelSpec(n, toFaces(gens))); }, py::arg("n"),
        py::arg("generators"));
    m.def(
        "dual_borel_gens", [](const Labels& f, int n) { return toLabels(dualBorelGens(FaceSet(f), n).generators); },
        py::arg("generator"), py::arg("n") = 0);
    m.def(
        "skeleton_borel_gens",
        [](int n, const std::vector<Labels>& gens, int q) {
            return toLabels(skeletonBorelGens(makeBorelSpec(n, toFaces(gens)), q).generators);
        },
        py::arg("n"), py::arg("generators"), py::arg("q"));
    m.def(
        "cover_generators_principal",
        [](const Labels& f, int k, int n) {
            const CoverGenerators g = coverGeneratorsPrincipal(FaceSet(f), k, n);
            return py::make_tuple(toLabels(g.stated.generators), toLabels(g.minimal.generators));
        },
        py::arg("generator"), py::arg("k"), py::arg("n") = 0, "(stated, minimal) Borel generators.");
    m.def(
        "decompose_principal",
        [](const Labels& f, const Labels& c, int k) {
            const PrincipalDecomposition d = decomposePrincipal(FaceSet(f), CoverVector(c), k);
            return py::make_tuple(d.a.entries(), d.r, d.b.entries());
        },
        py::arg("generator"), py::arg("cover"), py::arg("k"));
    m.def(
        "has_top_degree_generator", [](const Labels& f) { return hasTopDegreeGenerator(FaceSet(f)); },
        py::arg("generator"));
    m.def(
        "is_squarefree_borel",
        [](int n, const std::vector<Labels>& supports) -> py::object {
            const auto spec = isSquarefreeBorelIdeal(MonomialIdeal::fromSupports(n, toFaces(supports)));
            if (!spec) return py::none();
            return py::cast(toLabels(spec->generators));
        },
        py::arg("n"), py::arg("supports"), "Borel generators of the ideal, or None.");

    // posets
    m.def(
        "build_delta_r",
        [](int mSize, const std::vector<std::pair<int, int>>& covers, int r) {
            return buildDeltaR(Poset::fromCovers(mSize, covers), r);
        },
        py::arg("m"), py::arg("covers"), py::arg("r"));
    m.def(
        "decompose_poset_cover",
        [](int mSize, const std::vector<std::pair<int, int>>& covers, int r, const Labels& entries, int k) {
            const GridDecomposition d = decomposePosetCover(Poset::fromCovers(mSize, covers), r, GridCover(r, mSize, entries), k);
            return py::make_tuple(d.a.entries(), d.b.entries());
        },
        py::arg("m"), py::arg("covers"), py::arg("r"), py::arg("cover"), py::arg("k"),
        "Row-major r x m cover split as a 1-cover plus a (k-1)-cover.");

    // classification
    m.def(
        "special_odd_cycles",
        [](const SimplicialComplex& c, int maxLen) {
            std::vector<std::pair<Labels, std::vector<std::size_t>>> out;
            for (const SpecialCycle& s : specialOddCycles(c, maxLen)) out.emplace_back(s.vertices, s.facets);
            return out;
        },
        py::arg("complex"), py::arg("max_len") = 0, "(vertices, 0-based facet indices) per cycle.");
    m.def(
        "is_bipartite",
        [](int n, const std::vector<std::pair<int, int>>& edges) { return isBipartite(Graph(n, edges)).bipartite; },
        py::arg("n"), py::arg("edges"));
    m.def(
        "intersection_graph", [](const SimplicialComplex& c) { return intersectionGraph(c).edges(); },
        py::arg("complex"));
    m.def(
        "cover_ideal_complex",
        [](int n, const std::vector<std::pair<int, int>>& edges) { return coverIdealComplex(Graph(n, edges)); },
        py::arg("n"), py::arg("edges"));

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out;
            std::ostringstream err;
            const int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "(exit code, stdout, stderr) of the command-line tool.");
}
