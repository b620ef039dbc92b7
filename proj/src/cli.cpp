#include "vca/cli.hpp"

#include <chrono>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "vca/borel.hpp"
#include "vca/classify.hpp"
#include "vca/cover.hpp"
#include "vca/error.hpp"
#include "vca/io.hpp"
#include "vca/poset.hpp"

namespace vca::cli {

namespace {

using ojson = nlohmann::ordered_json;

/// Graphs above this size need --force for the odd-cycle enumeration.
constexpr int kGraphForceLimit = 8;

struct Report {
    std::string digestSource;
    ojson results = ojson::object();
    std::vector<std::string> caveats;
    int exitCode = kExitOk;
};

struct Flags {
    bool json = false;
    int threads = 1;
    int maxDegree = 0;
    int maxCycleLen = 0;
    bool force = false;
    bool timing = false;
};

// ---------------------------------------------------------------- rendering

std::string scalarText(const ojson& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "none";
    return v.dump();
}

bool isScalar(const ojson& v) { return !v.is_object() && !v.is_array(); }

void renderText(const ojson& v, int indent, std::string& out) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    for (const auto& [key, value] : v.items()) {
        if (isScalar(value)) {
            out += pad + key + ": " + scalarText(value) + "\n";
        } else if (value.empty()) {
            out += pad + key + (value.is_array() ? ": []\n" : ": {}\n");
        } else if (value.is_object()) {
            out += pad + key + ":\n";
            renderText(value, indent + 2, out);
        } else {
            out += pad + key + ":\n";
            for (const ojson& item : value) {
                if (isScalar(item)) {
                    out += pad + "  - " + scalarText(item) + "\n";
                } else if (item.is_object()) {
                    out += pad + "  -\n";
                    renderText(item, indent + 4, out);
                } else {
                    std::string row;
                    for (const ojson& x : item) row += (row.empty() ? "" : " ") + scalarText(x);
                    out += pad + "  - [" + row + "]\n";
                }
            }
        }
    }
}

std::string commandEcho(const std::vector<std::string>& args) {
    std::string out;
    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a == "--json" || a == "--timing" || a.rfind("--threads=", 0) == 0) continue;
        if (a == "--threads") {
            ++i;
            continue;
        }
        out += (out.empty() ? "" : " ") + a;
    }
    return out;
}

// ------------------------------------------------------------------ helpers

ojson faceStrings(const std::vector<FaceSet>& faces) {
    ojson arr = ojson::array();
    for (FaceSet f : faces) arr.push_back(f.toString());
    return arr;
}

ojson complexJson(const SimplicialComplex& complex) {
    ojson doc;
    doc["n"] = complex.vertexCount();
    doc["facets"] = faceStrings(complex.facets());
    return doc;
}

ojson verdictJson(const GradedVerdict& v) {
    ojson doc;
    doc["property"] = toString(v.property);
    doc["verdict"] = v.holds;
    doc["kind"] = toString(v.kind);
    doc["bound"] = v.bound;
    doc["witness"] = v.witness ? ojson(v.witness->toString()) : ojson(nullptr);
    doc["witness_degree"] = v.witness ? ojson(v.witnessDegree) : ojson(nullptr);
    if (!v.note.empty()) doc["note"] = v.note;
    return doc;
}

void boundCaveat(Report& report, const GradedVerdict& v) {
    if (v.holds && v.kind == VerdictKind::UpToBound) {
        report.caveats.push_back(toString(v.property) + " holds up to degree " + std::to_string(v.bound) +
                                 "; higher degrees were not searched");
    }
}

SimplicialComplex loadComplex(const std::string& path, Report& report) {
    SimplicialComplex complex = parseComplex(readFile(path));
    report.digestSource += "complex:" + complexToJson(complex) + "\n";
    if (complex.normalized()) report.caveats.push_back("input faces were normalized to their inclusion-maximal facets");
    return complex;
}

Graph loadGraph(const std::string& path, Report& report) {
    Graph g = parseGraph(readFile(path));
    report.digestSource += "graph:" + graphToJson(g) + "\n";
    return g;
}

Poset loadPoset(const std::string& path, Report& report) {
    Poset p = parsePoset(readFile(path));
    report.digestSource += "poset:" + posetToJson(p) + "\n";
    return p;
}

void writeComplex(const std::string& path, const SimplicialComplex& complex) {
    if (path.empty()) return;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << complexToJson(complex) << "\n";
}

int maxDegreeOr(const Flags& flags, const SimplicialComplex& complex) {
    if (flags.maxDegree < 0) throw InputError("--max-degree must be positive");
    return flags.maxDegree > 0 ? flags.maxDegree : defaultMaxDegree(complex);
}

// ----------------------------------------------------------------- commands

void cmdInfo(const SimplicialComplex& c, Report& r) {
    r.results["n"] = c.vertexCount();
    r.results["facets"] = c.facetCount();
    r.results["dim"] = c.dimension();
    r.results["pure"] = c.isPure();
    r.results["min_facet_size"] = c.minFacetSize();
    r.results["isolated_vertices"] = c.isolatedVertices().labels();
    r.results["normalized"] = c.normalized();
    r.results["facet_list"] = faceStrings(c.facets());
}

void cmdDual(const SimplicialComplex& c, Report& r) {
    const MonomialIdeal dual = alexanderDual(facetIdeal(c));
    ojson gens = ojson::array();
    for (const Monomial& m : dual.generators()) gens.push_back(m.toString());
    r.results["generators"] = gens;
    r.results["minimal_vertex_covers"] = faceStrings(dual.supports());
}

void cmdCovers(const SimplicialComplex& c, int k, bool squarefree, Report& r) {
    if (k < 1) throw InputError("--k must be at least 1");
    const MonomialIdeal ideal = squarefree ? lkSq(c, k) : jk(c, k);
    std::vector<CoverVector> covers;
    for (const Monomial& m : ideal.generators()) covers.push_back(CoverVector::fromMonomial(m));
    std::sort(covers.begin(), covers.end());
    r.results["k"] = k;
    r.results["squarefree"] = squarefree;
    r.results["count"] = covers.size();
    ojson list = ojson::array();
    for (const CoverVector& cv : covers) list.push_back(cv.toString());
    r.results["minimal_covers"] = list;
}

void cmdIndecomposable(const SimplicialComplex& c, const Flags& flags, Report& r) {
    const int bound = maxDegreeOr(flags, c);
    const auto gens = indecomposableCovers(c, bound, SearchOptions{flags.threads});
    r.results["max_degree"] = bound;
    ojson degrees = ojson::array();
    for (int k = 1; k <= bound; ++k) {
        ojson list = ojson::array();
        for (const GradedCover& g : gens) {
            if (g.degree == k) list.push_back(g.cover.toString());
        }
        ojson entry;
        entry["degree"] = k;
        entry["covers"] = list;
        degrees.push_back(entry);
    }
    r.results["by_degree"] = degrees;
    r.caveats.push_back("indecomposable covers of degree above " + std::to_string(bound) + " were not searched");
}

void cmdDecompose(const SimplicialComplex& c, const std::string& coverText, int k, Report& r) {
    const CoverVector cover = parseCoverVector(coverText);
    const int order = coverOrder(c, cover);
    if (k <= 0) k = order;
    r.results["cover"] = cover.toString();
    r.results["order"] = order;
    r.results["k"] = k;
    const auto split = decomposeCover(c, cover, k);
    r.results["decomposable"] = split.has_value();
    if (split) {
        r.results["a"] = split->a.toString();
        r.results["i"] = split->aOrder;
        r.results["b"] = split->b.toString();
        r.results["j"] = split->bOrder;
    } else {
        r.exitCode = kExitFalse;
    }
}

void cmdCheck(const std::string& mode, const SimplicialComplex& c, const Flags& flags, Report& r) {
    GradedVerdict v;
    if (mode == "std-b") {
        v = isStandardGradedB(c);
    } else if (mode == "std-a") {
        v = isStandardGradedA(c, maxDegreeOr(flags, c), SearchOptions{flags.threads});
    } else {
        v = equalsAB(c, maxDegreeOr(flags, c), SearchOptions{flags.threads});
    }
    r.results = verdictJson(v);
    boundCaveat(r, v);
    if (!v.holds) r.exitCode = kExitFalse;
}

ojson cycleJson(const SpecialCycle& cycle, const SimplicialComplex& c) {
    ojson doc;
    doc["length"] = cycle.length();
    doc["cycle"] = cycle.toString();
    std::vector<FaceSet> faces;
    for (std::size_t f : cycle.facets) faces.push_back(c.facets()[f]);
    doc["facets"] = faceStrings(faces);
    return doc;
}

void cmdClassifyGraph(const Graph& g, const Flags& flags, Report& r) {
    if (g.vertexCount() > kGraphForceLimit && !flags.force) {
        throw InputError("odd-cycle enumeration on more than " + std::to_string(kGraphForceLimit) +
                         " vertices is exponential; pass --force to run it");
    }
    r.results["n"] = g.vertexCount();
    ojson edges = ojson::array();
    for (auto [u, v] : g.edges()) edges.push_back(std::to_string(u) + "," + std::to_string(v));
    r.results["edges"] = edges;
    const BipartiteResult bip = isBipartite(g);
    r.results["bipartite"] = bip.bipartite;
    if (!bip.bipartite) r.results["odd_cycle"] = FaceSet(bip.oddCycle).toString();

    const GraphEqualityReport eq = graphEqualityAB(g);
    ojson e;
    e["equal"] = eq.equal;
    e["odd_cycles_checked"] = eq.oddCyclesChecked;
    if (!eq.equal) {
        e["cycle"] = eq.cycle->toString();
        e["vertex"] = eq.vertex;
    }
    if (eq.engine) e["engine"] = verdictJson(*eq.engine);
    r.results["a_equals_b"] = e;

    if (!g.edges().empty()) {
        const SimplicialComplex complex = g.toComplex();
        const GradedVerdict b = isStandardGradedB(complex);
        const GradedVerdict a = isStandardGradedA(complex, maxDegreeOr(flags, complex), SearchOptions{flags.threads});
        if (b.holds != bip.bipartite || a.holds != bip.bipartite) {
            throw VerificationError("standard gradedness of the graph disagrees with bipartiteness");
        }
        ojson sg;
        sg["b"] = verdictJson(b);
        sg["a"] = verdictJson(a);
        r.results["standard_graded"] = sg;
        boundCaveat(r, a);
    }
}

void cmdClassifyComplex(const SimplicialComplex& c, const Flags& flags, Report& r) {
    const int facetCount = static_cast<int>(c.facetCount());
    const int maxLen = flags.maxCycleLen > 0 ? flags.maxCycleLen : facetCount;
    const int maxDegree = maxDegreeOr(flags, c);
    r.results["max_cycle_len"] = maxLen;
    r.results["max_degree"] = maxDegree;

    const auto cycles = specialOddCycles(c, maxLen);
    ojson list = ojson::array();
    for (const SpecialCycle& s : cycles) list.push_back(cycleJson(s, c));
    r.results["special_odd_cycles"] = list;

    if (maxLen >= facetCount && maxDegree >= defaultMaxDegree(c)) {
        const NoOddReport no = noOddVerdict(c, maxLen, maxDegree);
        ojson doc;
        doc["predicts_standard_graded"] = no.predictsStandardGraded;
        doc["subcomplexes_checked"] = no.subcomplexesChecked;
        if (no.witnessCover) {
            doc["witness_facets"] = faceStrings(no.witnessSubcomplex->facets());
            doc["witness_cover"] = no.witnessCover->toString();
            doc["splits_into_two_covers"] = false;
        }
        r.results["no_odd"] = doc;
        if (no.predictsStandardGraded && no.subcomplexesChecked == 0) {
            r.caveats.push_back("subcomplex cross-check skipped above " + std::to_string(kSubcomplexSweepLimit) +
                                " facets");
        }
    } else {
        r.caveats.push_back("special-cycle verdict skipped: it needs max-cycle-len >= facet count and max-degree >= dim + 2");
    }

    const StrictIntersection strict = strictIntersection(c);
    ojson si;
    si["holds"] = strict.holds;
    si["pairwise"] = strict.pairwise;
    si["triple"] = strict.triple;
    if (!strict.holds) {
        std::vector<FaceSet> faces;
        for (std::size_t f : strict.violation) faces.push_back(c.facets()[f]);
        si["violation"] = faceStrings(faces);
    }
    r.results["strict_intersection"] = si;
    if (!strict.holds) return;

    const StrIntersecReport sr = strIntersecVerdict(c, std::max(maxDegree, 2), flags.maxCycleLen);
    ojson doc;
    ojson edges = ojson::array();
    for (auto [u, v] : sr.graph.edges()) edges.push_back("v" + std::to_string(u) + "-v" + std::to_string(v));
    doc["intersection_graph"] = edges;
    doc["cycle_cap"] = sr.cycleCap;
    doc["cycles_enumerated"] = sr.cyclesEnumerated;
    doc["hypothesis_holds"] = sr.hypothesisHolds;
    if (sr.sharedPair) {
        auto render = [&](const std::vector<int>& ids) {
            std::string out;
            for (int id : ids) {
                auto [u, v] = sr.graph.edges()[static_cast<std::size_t>(id)];
                out += (out.empty() ? "" : " ") + ("v" + std::to_string(u) + "-v" + std::to_string(v));
            }
            return out;
        };
        doc["shared_two_edges"] = ojson::array({render(sr.sharedPair->first), render(sr.sharedPair->second)});
    }
    ojson comps = ojson::array();
    for (const ComponentInfo& info : sr.components) {
        ojson ci;
        std::string verts;
        for (int v : info.vertices.labels()) verts += (verts.empty() ? "v" : ",v") + std::to_string(v);
        ci["vertices"] = verts;
        ci["shape"] = toString(info.shape);
        if (info.oddCycleShape) ci["generated_in_degrees_1_2"] = *info.oddCycleShape;
        comps.push_back(ci);
    }
    doc["components"] = comps;
    doc["components_bipartite_or_odd_cycle"] = sr.componentsBipartiteOrOddCycle;
    doc["predicted_equal"] = sr.predictedEqual ? ojson(*sr.predictedEqual) : ojson(nullptr);
    doc["engine"] = verdictJson(sr.engine);
    r.results["str_intersec"] = doc;
    if (!sr.hypothesisHolds) r.caveats.push_back("two cycles of the intersection graph share exactly two edges; theorem not applicable, cover engine used");
    if (sr.hypothesisHolds && sr.cycleCap < sr.graph.vertexCount()) {
        r.caveats.push_back("cycle-pair hypothesis certified only for cycles up to length " + std::to_string(sr.cycleCap));
    }
    boundCaveat(r, sr.engine);
}

void cmdCoverIdeal(const Graph& g, const Flags& flags, const std::string& output, Report& r) {
    const CoverIdealReport rep = coverIdealVerdict(g, flags.maxDegree);
    r.results["complex"] = complexJson(rep.complex);
    r.results["bipartite"] = rep.bipartite;
    r.results["b"] = verdictJson(rep.b);
    r.results["a"] = verdictJson(rep.a);
    if (rep.witness) {
        r.results["odd_cycle_cover"] = rep.witness->toString();
        r.results["odd_cycle_cover_order"] = rep.witnessOrder;
    }
    boundCaveat(r, rep.a);
    writeComplex(output, rep.complex);
}

BorelSpec borelInput(const std::string& file, const std::vector<std::string>& gens, int n, Report& r) {
    BorelSpec spec;
    if (!file.empty()) {
        if (!gens.empty()) throw InputError("give either a Borel spec file or --gen, not both");
        spec = parseBorelSpec(readFile(file));
    } else {
        if (gens.empty()) throw InputError("a Borel spec file or at least one --gen is required");
        std::vector<FaceSet> faces;
        int top = 0;
        for (const std::string& g : gens) {
            faces.push_back(parseFaceSet(g));
            top = std::max(top, faces.back().maxLabel());
        }
        spec = makeBorelSpec(n > 0 ? n : top, faces);
    }
    r.digestSource += "borel:" + borelSpecToJson(spec) + "\n";
    return spec;
}

FaceSet principal(const BorelSpec& spec) {
    if (!spec.isPrincipal()) throw InputError("this command needs a principal Borel set (one generator)");
    return spec.generators.front();
}

void cmdBorel(const std::string& mode, const BorelSpec& spec, int q, int k, const std::string& coverText,
              Report& r) {
    r.results["n"] = spec.n;
    r.results["borel_generators"] = faceStrings(spec.generators);
    if (mode == "expand") {
        const auto sets = borelExpand(spec);
        r.results["count"] = sets.size();
        r.results["sets"] = faceStrings(sets);
        r.results["facets"] = faceStrings(complexOf(spec).facets());
    } else if (mode == "dual") {
        const BorelSpec dual = dualBorelGens(principal(spec), spec.n);
        std::string summary;
        for (std::size_t i = 0; i < dual.generators.size(); ++i) {
            summary += (i ? " ; H_" : "H_") + std::to_string(i + 1) + "=" + dual.generators[i].toString();
        }
        r.results["dual_generators"] = summary;
    } else if (mode == "skeleton") {
        if (q < 0) throw InputError("--q is required");
        r.results["q"] = q;
        r.results["skeleton_generators"] = faceStrings(skeletonBorelGens(spec, q).generators);
    } else if (mode == "cover-gens") {
        if (k < 1) throw InputError("--k is required");
        const CoverGenerators gens = coverGeneratorsPrincipal(principal(spec), k, spec.n);
        r.results["k"] = k;
        r.results["stated"] = faceStrings(gens.stated.generators);
        r.results["minimal"] = faceStrings(gens.minimal.generators);
    } else if (mode == "decompose") {
        const FaceSet f = principal(spec);
        const CoverVector c = parseCoverVector(coverText);
        if (c.ambient() != spec.n) throw InputError("cover length must equal n");
        if (k <= 0) k = coverOrder(complexOf(BorelSpec{spec.n, {f}}), c);
        const PrincipalDecomposition d = decomposePrincipal(f, c, k);
        r.results["cover"] = c.toString();
        r.results["k"] = k;
        r.results["a"] = d.a.toString();
        r.results["r"] = d.r;
        r.results["b"] = d.b.toString();
    } else {
        r.results["has_top_degree_generator"] = hasTopDegreeGenerator(principal(spec));
    }
}

void cmdPoset(const std::string& mode, const Poset& p, int rows, int k, const std::string& matrix,
              const std::string& output, const Flags& flags, Report& r) {
    if (rows < 1) throw InputError("--r must be at least 1");
    r.results["m"] = p.size();
    r.results["r"] = rows;
    if (mode == "build") {
        const SimplicialComplex c = buildDeltaR(p, rows);
        r.results["complex"] = complexJson(c);
        writeComplex(output, c);
    } else if (mode == "decompose") {
        const GridCover c = parseGridCover(matrix);
        const SimplicialComplex complex = buildDeltaR(p, rows);
        if (k <= 0) k = coverOrder(complex, c.entries());
        const GridDecomposition d = decomposePosetCover(p, rows, c, k);
        r.results["cover"] = c.toString();
        r.results["k"] = k;
        r.results["a"] = d.a.toString();
        r.results["b"] = d.b.toString();
        r.results["b_order"] = coverOrder(complex, d.b.entries());
    } else {
        const int bound = flags.maxDegree > 0 ? flags.maxDegree : rows + 1;
        const GradedVerdict v = verifyStandardGradedDeltaR(p, rows, std::max(bound, 2));
        r.results["verdict"] = verdictJson(v);
        if (!v.holds) r.exitCode = kExitFalse;
    }
}

void cmdDuality(const SimplicialComplex& c, Report& r) {
    const DualityReport d = verifyDuality(c);
    r.results["d"] = d.d;
    r.results["pure"] = d.pure;
    ojson rows = ojson::array();
    for (const DualityRow& row : d.rows) {
        ojson x;
        x["k"] = row.k;
        x["inclusion"] = row.inclusion;
        x["equality"] = row.equality;
        rows.push_back(x);
    }
    r.results["rows"] = rows;
    r.results["grid_symmetric"] = d.gridSymmetric ? ojson(*d.gridSymmetric) : ojson(nullptr);
    r.results["skeleton_duals_are_powers"] = d.skeletonDualsArePowers ? ojson(*d.skeletonDualsArePowers) : ojson(nullptr);
    r.results["standard_graded_b"] = d.standardGradedB;
    ojson violations = ojson::array();
    for (const std::string& v : d.violations) violations.push_back(v);
    r.results["violations"] = violations;
    if (!d.ok()) r.exitCode = kExitFalse;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Vertex cover algebras of simplicial complexes", "vca"};
    app.fallthrough();
    app.require_subcommand(1);

    Flags flags;
    app.add_flag("--json", flags.json, "Emit the report as JSON");
    app.add_option("--threads", flags.threads, "Worker threads for cover searches")->check(CLI::Range(1, 256));
    app.add_option("--max-degree", flags.maxDegree, "Degree bound for A-side searches (default dim + 2)");
    app.add_option("--max-cycle-len", flags.maxCycleLen, "Cycle length cap (default: number of facets)");
    app.add_flag("--force", flags.force, "Run exponential enumerations on large inputs");
    app.add_flag("--timing", flags.timing, "Append wall-clock time (breaks byte determinism)");

    std::string file;
    std::string output;
    std::string coverText;
    std::string matrix;
    std::vector<std::string> gens;
    int q = -1;
    int k = 0;
    int n = 0;
    int rows = 0;
    bool squarefree = false;
    std::function<void(Report&)> action;

    auto fileArg = [&](CLI::App* sub) { sub->add_option("file", file, "Input file")->required(); };

    auto* info = app.add_subcommand("info", "Summary of a complex");
    fileArg(info);
    info->callback([&] { action = [&](Report& r) { cmdInfo(loadComplex(file, r), r); }; });

    auto* skel = app.add_subcommand("skeleton", "q-skeleton of a complex");
    fileArg(skel);
    skel->add_option("--q", q, "Skeleton dimension")->required();
    skel->add_option("-o,--output", output, "Write the skeleton as JSON");
    skel->callback([&] {
        action = [&](Report& r) {
            const SimplicialComplex s = skeleton(loadComplex(file, r), q);
            r.results["q"] = q;
            r.results["complex"] = complexJson(s);
            writeComplex(output, s);
        };
    });

    auto* dual = app.add_subcommand("dual", "Alexander dual of the facet ideal");
    fileArg(dual);
    dual->callback([&] { action = [&](Report& r) { cmdDual(loadComplex(file, r), r); }; });

    auto* covers = app.add_subcommand("covers", "Minimal k-covers (generators of J_k or L_k^sq)");
    fileArg(covers);
    covers->add_option("--k", k, "Cover order")->required();
    covers->add_flag("--squarefree", squarefree, "Squarefree covers only");
    covers->callback([&] { action = [&](Report& r) { cmdCovers(loadComplex(file, r), k, squarefree, r); }; });

    auto* indec = app.add_subcommand("indecomposable", "Indecomposable covers up to a degree bound");
    fileArg(indec);
    indec->callback([&] { action = [&](Report& r) { cmdIndecomposable(loadComplex(file, r), flags, r); }; });

    auto* decomp = app.add_subcommand("decompose", "Split a cover into an i-cover and a j-cover");
    fileArg(decomp);
    decomp->add_option("--cover", coverText, "Cover vector, e.g. 1,0,2")->required();
    decomp->add_option("--k", k, "Order to decompose at (default: the cover's order)");
    decomp->callback([&] { action = [&](Report& r) { cmdDecompose(loadComplex(file, r), coverText, k, r); }; });

    auto* check = app.add_subcommand("check", "Standard gradedness and A = B verdicts");
    check->require_subcommand(1);
    const std::vector<std::pair<const char*, const char*>> checkModes = {
        {"equal", "Is A(Delta) = B(Delta)?"},
        {"std-b", "Is B(Delta) standard graded? (exact)"},
        {"std-a", "Is A(Delta) standard graded? (up to --max-degree)"},
    };
    for (const auto& entry : checkModes) {
        const char* mode = entry.first;
        auto* sub = check->add_subcommand(mode, entry.second);
        fileArg(sub);
        sub->callback([&, mode] {
            action = [&, mode](Report& r) { cmdCheck(mode, loadComplex(file, r), flags, r); };
        });
    }

    auto* classify = app.add_subcommand("classify", "Graph and complex classifiers");
    classify->require_subcommand(1);
    auto* cg = classify->add_subcommand("graph", "Bipartiteness, odd-cycle test and algebra verdicts of a graph");
    fileArg(cg);
    cg->callback([&] { action = [&](Report& r) { cmdClassifyGraph(loadGraph(file, r), flags, r); }; });
    auto* cc = classify->add_subcommand("complex", "Special odd cycles and the strict intersection property");
    fileArg(cc);
    cc->callback([&] { action = [&](Report& r) { cmdClassifyComplex(loadComplex(file, r), flags, r); }; });
    auto* ci = classify->add_subcommand("cover-ideal", "Complex of the cover ideal of a graph");
    fileArg(ci);
    ci->add_option("-o,--output", output, "Write the complex as JSON");
    ci->callback([&] { action = [&](Report& r) { cmdCoverIdeal(loadGraph(file, r), flags, output, r); }; });

    auto* borel = app.add_subcommand("borel", "Squarefree Borel constructions");
    borel->require_subcommand(1);
    const std::vector<std::pair<const char*, const char*>> borelModes = {
        {"expand", "Every set of the Borel set and the facets of its complex"},
        {"dual", "Generators H_q of the Alexander dual (principal)"},
        {"skeleton", "Borel generators of the q-skeleton"},
        {"cover-gens", "Borel generators of the squarefree k-covers (principal)"},
        {"decompose", "Split a non-squarefree cover (principal)"},
        {"top-gen", "Whether x_1...x_{i_d} t^d is a minimal generator (principal)"},
    };
    for (const auto& entry : borelModes) {
        const char* mode = entry.first;
        auto* sub = borel->add_subcommand(mode, entry.second);
        sub->add_option("file", file, "Borel spec file");
        sub->add_option("--gen", gens, "Borel generator, e.g. 1,4,5 (repeatable)");
        sub->add_option("--n", n, "Ambient vertex count (default: largest generator label)");
        if (std::string(mode) == "skeleton") sub->add_option("--q", q, "Skeleton dimension")->required();
        if (std::string(mode) == "cover-gens") sub->add_option("--k", k, "Cover order")->required();
        if (std::string(mode) == "decompose") {
            sub->add_option("--cover", coverText, "Cover vector")->required();
            sub->add_option("--k", k, "Cover order (default: the cover's order)");
        }
        sub->callback([&, mode] {
            action = [&, mode](Report& r) { cmdBorel(mode, borelInput(file, gens, n, r), q, k, coverText, r); };
        });
    }

    auto* poset = app.add_subcommand("poset", "Multichain complexes of finite posets");
    poset->require_subcommand(1);
    const std::vector<std::pair<const char*, const char*>> posetModes = {
        {"build", "Facets of Delta_r(P)"},
        {"decompose", "Split a grid k-cover into a 1-cover and a (k-1)-cover"},
        {"verify", "Check that every k-cover splits, up to a degree bound"},
    };
    for (const auto& entry : posetModes) {
        const char* mode = entry.first;
        auto* sub = poset->add_subcommand(mode, entry.second);
        fileArg(sub);
        sub->add_option("--r", rows, "Chain length r")->required();
        if (std::string(mode) == "build") sub->add_option("-o,--output", output, "Write the complex as JSON");
        if (std::string(mode) == "decompose") {
            sub->add_option("--matrix", matrix, "Grid cover, rows separated by ';'")->required();
            sub->add_option("--k", k, "Cover order (default: the cover's order)");
        }
        sub->callback([&, mode] {
            action = [&, mode](Report& r) { cmdPoset(mode, loadPoset(file, r), rows, k, matrix, output, flags, r); };
        });
    }

    auto* duality = app.add_subcommand("verify-duality", "Skeleton duality checks");
    fileArg(duality);
    duality->callback([&] { action = [&](Report& r) { cmdDuality(loadComplex(file, r), r); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    Report report;
    const auto start = std::chrono::steady_clock::now();
    try {
        action(report);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const VerificationError& e) {
        err << "internal check failed: " << e.what() << "\n";
        return kExitInternalError;
    }
    const auto elapsed = std::chrono::steady_clock::now() - start;

    ojson doc;
    doc["schema"] = kReportSchema;
    doc["command"] = commandEcho(args);
    doc["inputs_digest"] = "fnv1a64:" + fnv1a64(report.digestSource);
    doc["results"] = report.results;
    doc["caveats"] = report.caveats;
    if (flags.timing) doc["timing_ms"] = std::chrono::duration<double, std::milli>(elapsed).count();

    if (flags.json) {
        out << doc.dump(2) << "\n";
    } else {
        std::string text;
        renderText(doc, 0, text);
        out << text;
    }
    return report.exitCode;
}

}  // namespace vca::cli
