#include "vca/classify.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "vca/error.hpp"

namespace vca {

// ------------------------------------------------------------------- Graph

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
    if (n < 1 || n > kMaxVertices) throw InputError("graph vertex count must lie in 1.." + std::to_string(kMaxVertices));
    adjacency_.assign(static_cast<std::size_t>(n), FaceSet{});
    for (auto& [u, v] : edges) {
        if (u < 1 || u > n || v < 1 || v > n) {
            throw InputError("edge {" + std::to_string(u) + "," + std::to_string(v) + "} outside 1.." + std::to_string(n));
        }
        if (u == v) throw InputError("loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (adjacency_[static_cast<std::size_t>(u - 1)].contains(v)) {
            throw InputError("repeated edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
        }
        adjacency_[static_cast<std::size_t>(u - 1)] = adjacency_[static_cast<std::size_t>(u - 1)].with(v);
        adjacency_[static_cast<std::size_t>(v - 1)] = adjacency_[static_cast<std::size_t>(v - 1)].with(u);
    }
    edges_ = std::move(edges);
    std::sort(edges_.begin(), edges_.end());
}

Graph Graph::fromComplex(const SimplicialComplex& complex) {
    std::vector<std::pair<int, int>> edges;
    for (FaceSet f : complex.facets()) {
        if (f.size() > 2) throw InputError("facet {" + f.toString() + "} is not an edge");
        if (f.size() == 2) edges.emplace_back(f.minLabel(), f.maxLabel());
    }
    return Graph(complex.vertexCount(), std::move(edges));
}

FaceSet Graph::isolatedVertices() const {
    FaceSet out;
    for (int v = 1; v <= n_; ++v) {
        if (neighbors(v).empty()) out = out.with(v);
    }
    return out;
}

Graph Graph::induced(FaceSet keep) const {
    const auto labels = keep.labels();
    if (labels.empty()) throw InputError("induced subgraph needs at least one vertex");
    std::vector<int> position(static_cast<std::size_t>(n_) + 1, 0);
    for (std::size_t i = 0; i < labels.size(); ++i) position[static_cast<std::size_t>(labels[i])] = static_cast<int>(i) + 1;
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : edges_) {
        if (keep.contains(u) && keep.contains(v)) {
            edges.emplace_back(position[static_cast<std::size_t>(u)], position[static_cast<std::size_t>(v)]);
        }
    }
    return Graph(static_cast<int>(labels.size()), std::move(edges));
}

std::vector<FaceSet> Graph::components() const {
    std::vector<FaceSet> out;
    FaceSet seen;
    for (int s = 1; s <= n_; ++s) {
        if (seen.contains(s)) continue;
        FaceSet comp = FaceSet{s};
        FaceSet frontier = comp;
        while (!frontier.empty()) {
            FaceSet next;
            for (int v : frontier.labels()) next = next | neighbors(v);
            frontier = next - comp;
            comp = comp | next;
        }
        seen = seen | comp;
        out.push_back(comp);
    }
    return out;
}

SimplicialComplex Graph::toComplex() const {
    if (edges_.empty()) throw InputError("a graph without edges is not a complex");
    std::vector<FaceSet> facets;
    for (auto [u, v] : edges_) facets.push_back(FaceSet{u, v});
    return SimplicialComplex(n_, facets);
}

BipartiteResult isBipartite(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.vertexCount());
    std::vector<int> colour(n + 1, -1);
    std::vector<int> parent(n + 1, 0);
    std::vector<int> depth(n + 1, 0);
    BipartiteResult out;
    for (int s = 1; s <= g.vertexCount(); ++s) {
        if (colour[static_cast<std::size_t>(s)] >= 0) continue;
        colour[static_cast<std::size_t>(s)] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (int v : g.neighbors(u).labels()) {
                const auto vi = static_cast<std::size_t>(v);
                const auto ui = static_cast<std::size_t>(u);
                if (colour[vi] < 0) {
                    colour[vi] = 1 - colour[ui];
                    parent[vi] = u;
                    depth[vi] = depth[ui] + 1;
                    queue.push_back(v);
                } else if (colour[vi] == colour[ui]) {
                    std::vector<int> left{u};
                    std::vector<int> right{v};
                    int a = u;
                    int b = v;
                    while (a != b) {
                        if (depth[static_cast<std::size_t>(a)] >= depth[static_cast<std::size_t>(b)]) {
                            a = parent[static_cast<std::size_t>(a)];
                            left.push_back(a);
                        } else {
                            b = parent[static_cast<std::size_t>(b)];
                            right.push_back(b);
                        }
                    }
                    right.pop_back();
                    left.insert(left.end(), right.rbegin(), right.rend());
                    out.oddCycle = std::move(left);
                    return out;
                }
            }
        }
    }
    out.bipartite = true;
    for (int v = 1; v <= g.vertexCount(); ++v) {
        if (colour[static_cast<std::size_t>(v)] == 0) out.side = out.side.with(v);
    }
    return out;
}

namespace {

/// Simple cycles as vertex sequences starting at their smallest vertex,
/// each reported once (second vertex smaller than the last).
template <typename Visit>
void forEachSimpleCycle(const Graph& g, int maxLen, Visit&& visit) {
    std::vector<int> path;
    auto extend = [&](auto&& self, FaceSet used) -> void {
        const int s = path.front();
        const int u = path.back();
        const int len = static_cast<int>(path.size());
        if (len >= 3 && g.adjacent(u, s) && path[1] < u) visit(path);
        if (len == maxLen) return;
        for (int v : g.neighbors(u).labels()) {
            if (v <= s || used.contains(v)) continue;
            path.push_back(v);
            self(self, used.with(v));
            path.pop_back();
        }
    };
    for (int s = 1; s <= g.vertexCount(); ++s) {
        path.assign(1, s);
        extend(extend, FaceSet{s});
    }
}

}  // namespace

std::vector<FaceSet> oddCycleVertexSets(const Graph& g, int maxLen) {
    if (maxLen <= 0) maxLen = g.vertexCount();
    std::set<FaceSet> found;
    forEachSimpleCycle(g, maxLen, [&](const std::vector<int>& cycle) {
        if (cycle.size() % 2 == 1) found.insert(FaceSet(cycle));
    });
    return {found.begin(), found.end()};
}

// ----------------------------------------------------------- special cycles

FaceSet SpecialCycle::vertexSet() const { return FaceSet(vertices); }

std::string SpecialCycle::toString() const {
    std::string out;
    for (std::size_t j = 0; j < vertices.size(); ++j) {
        out += std::to_string(vertices[j]) + ",F" + std::to_string(facets[j] + 1) + ",";
    }
    return out + std::to_string(vertices.front());
}

std::vector<SpecialCycle> specialOddCycles(const SimplicialComplex& complex, int maxLen) {
    const auto& facets = complex.facets();
    if (maxLen <= 0) maxLen = static_cast<int>(facets.size());
    std::vector<SpecialCycle> out;
    std::vector<int> verts;
    std::vector<std::size_t> used;
    std::vector<char> facetUsed(facets.size(), 0);

    auto extend = [&](auto&& self, FaceSet vset) -> void {
        const int s = verts.front();
        const int u = verts.back();
        const int len = static_cast<int>(verts.size());
        for (std::size_t f = 0; f < facets.size(); ++f) {
            if (facetUsed[f] || !facets[f].contains(u)) continue;
            const FaceSet meet = facets[f] & vset;
            if (len >= 3 && len % 2 == 1 && meet == FaceSet{s, u} && verts[1] < u) {
                SpecialCycle c{verts, used};
                c.facets.push_back(f);
                out.push_back(std::move(c));
            }
            if (meet != FaceSet{u} || len == maxLen) continue;
            facetUsed[f] = 1;
            used.push_back(f);
            for (int w : (facets[f] - vset).labels()) {
                if (w <= s) continue;
                bool clash = false;
                for (std::size_t g : used) {
                    if (g != f && facets[g].contains(w)) {
                        clash = true;
                        break;
                    }
                }
                if (clash) continue;
                verts.push_back(w);
                self(self, vset.with(w));
                verts.pop_back();
            }
            used.pop_back();
            facetUsed[f] = 0;
        }
    };
    for (int s = 1; s <= complex.vertexCount(); ++s) {
        verts.assign(1, s);
        extend(extend, FaceSet{s});
    }
    std::sort(out.begin(), out.end());
    return out;
}

NoOddReport noOddVerdict(const SimplicialComplex& complex, int maxLen, int maxDegree) {
    const auto facetCount = static_cast<int>(complex.facetCount());
    if (maxLen < facetCount) throw InputError("special-cycle length bound must be at least the facet count");
    if (maxDegree < defaultMaxDegree(complex)) throw InputError("maxDegree must be at least dim + 2");
    NoOddReport report;
    report.maxLen = maxLen;
    report.cycles = specialOddCycles(complex, maxLen);

    if (report.cycles.empty()) {
        report.predictsStandardGraded = true;
        if (complex.facetCount() > kSubcomplexSweepLimit) return report;
        const std::size_t subsets = std::size_t{1} << complex.facetCount();
        for (std::size_t mask = 1; mask < subsets; ++mask) {
            std::vector<std::size_t> indices;
            for (std::size_t f = 0; f < complex.facetCount(); ++f) {
                if (mask >> f & 1U) indices.push_back(f);
            }
            const SimplicialComplex gamma = subcomplex(complex, indices);
            if (!isStandardGradedB(gamma).holds || !isStandardGradedA(gamma, maxDegree).holds) {
                throw VerificationError("subcomplex " + gamma.toString() +
                                        " is not standard graded although no special odd cycle exists");
            }
            ++report.subcomplexesChecked;
        }
        return report;
    }

    const SpecialCycle& cycle = *std::max_element(
        report.cycles.begin(), report.cycles.end(),
        [](const SpecialCycle& a, const SpecialCycle& b) { return a.length() < b.length(); });
    SimplicialComplex gamma = subcomplex(complex, cycle.facets);
    CoverVector c = CoverVector::indicator(complex.vertexCount(), cycle.vertexSet());
    if (coverOrder(gamma, c) != 2 || partitionIntoVertexCovers(gamma, cycle.vertexSet(), 2)) {
        throw VerificationError("special odd cycle " + cycle.toString() + " does not give a non-splitting 2-cover");
    }
    if (isStandardGradedB(gamma).holds) {
        throw VerificationError("B is standard graded on the facets of special odd cycle " + cycle.toString());
    }
    report.witnessSubcomplex = std::move(gamma);
    report.witnessCover = std::move(c);
    return report;
}

// ------------------------------------------------------------------ graphs

GraphEqualityReport graphEqualityAB(const Graph& g) {
    GraphEqualityReport report;
    report.equal = true;
    const FaceSet active = FaceSet::interval(g.vertexCount()) - g.isolatedVertices();
    for (FaceSet cycle : oddCycleVertexSets(g)) {
        ++report.oddCyclesChecked;
        if (!report.equal) continue;
        for (int i : active.labels()) {
            if (!g.neighbors(i).intersects(cycle)) {
                report.equal = false;
                report.cycle = cycle;
                report.vertex = i;
                break;
            }
        }
    }
    if (!g.edges().empty()) {
        report.engine = equalsAB(g.toComplex(), 3);
        if (report.engine->holds != report.equal) {
            throw VerificationError("odd-cycle neighbourhood test and cover engine disagree on A = B");
        }
    }
    return report;
}

SimplicialComplex coverIdealComplex(const Graph& g) {
    const FaceSet isolated = g.isolatedVertices();
    if (!isolated.empty()) throw InputError("graph has isolated vertices {" + isolated.toString() + "}");
    std::vector<FaceSet> edges;
    for (auto [u, v] : g.edges()) edges.push_back(FaceSet{u, v});
    return SimplicialComplex(g.vertexCount(), minimalTransversals(edges));
}

CoverIdealReport coverIdealVerdict(const Graph& g, int maxDegree) {
    SimplicialComplex complex = coverIdealComplex(g);
    if (maxDegree <= 0) maxDegree = defaultMaxDegree(complex);
    const BipartiteResult bip = isBipartite(g);
    CoverIdealReport report{complex, bip.bipartite, isStandardGradedB(complex), isStandardGradedA(complex, maxDegree),
                            std::nullopt, 0};
    if (report.b.holds != bip.bipartite || report.a.holds != bip.bipartite) {
        throw VerificationError("cover-ideal complex verdicts disagree with bipartiteness");
    }
    if (!bip.bipartite) {
        const FaceSet cycle(bip.oddCycle);
        const int parts = (cycle.size() + 1) / 2;
        CoverVector c = CoverVector::indicator(g.vertexCount(), cycle);
        report.witnessOrder = coverOrder(complex, c);
        if (report.witnessOrder < parts || partitionIntoVertexCovers(complex, cycle, parts)) {
            throw VerificationError("odd cycle {" + cycle.toString() + "} splits into disjoint vertex covers");
        }
        report.witness = std::move(c);
    }
    return report;
}

// ---------------------------------------------------- strict intersection

StrictIntersection strictIntersection(const SimplicialComplex& complex) {
    const auto& f = complex.facets();
    StrictIntersection out;
    for (std::size_t i = 0; i < f.size() && out.pairwise; ++i) {
        for (std::size_t j = i + 1; j < f.size(); ++j) {
            if ((f[i] & f[j]).size() > 1) {
                out.pairwise = false;
                out.violation = {i, j};
                break;
            }
        }
    }
    for (std::size_t i = 0; i < f.size() && out.triple; ++i) {
        for (std::size_t j = i + 1; j < f.size() && out.triple; ++j) {
            const FaceSet ij = f[i] & f[j];
            if (ij.empty()) continue;
            for (std::size_t k = j + 1; k < f.size(); ++k) {
                if (ij.intersects(f[k])) {
                    out.triple = false;
                    if (out.pairwise) out.violation = {i, j, k};
                    break;
                }
            }
        }
    }
    out.holds = out.pairwise && out.triple;
    return out;
}

Graph intersectionGraph(const SimplicialComplex& complex) {
    if (!strictIntersection(complex).holds) throw InputError("complex lacks the strict intersection property");
    const auto& f = complex.facets();
    if (f.size() > static_cast<std::size_t>(kMaxVertices)) throw InputError("too many facets for an intersection graph");
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < f.size(); ++i) {
        for (std::size_t j = i + 1; j < f.size(); ++j) {
            if (f[i].intersects(f[j])) edges.emplace_back(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
        }
    }
    return Graph(static_cast<int>(f.size()), std::move(edges));
}

std::string toString(ComponentShape shape) {
    switch (shape) {
        case ComponentShape::Bipartite:
            return "bipartite";
        case ComponentShape::OddCycle:
            return "odd-cycle";
        case ComponentShape::Other:
            break;
    }
    return "other";
}

namespace {

std::size_t sharedCount(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t count = 0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j) {
            ++i;
        } else if (*j < *i) {
            ++j;
        } else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

bool hasOddCycleShape(const SimplicialComplex& complex, FaceSet componentVertices, int maxDegree) {
    std::vector<std::size_t> indices;
    for (int v : componentVertices.labels()) indices.push_back(static_cast<std::size_t>(v - 1));
    const SimplicialComplex sub = subcomplex(complex, indices);
    FaceSet meeting;
    for (std::size_t i = 0; i < sub.facets().size(); ++i) {
        for (std::size_t j = i + 1; j < sub.facets().size(); ++j) meeting = meeting | (sub.facets()[i] & sub.facets()[j]);
    }
    const CoverVector expected = CoverVector::indicator(complex.vertexCount(), meeting);
    int degreeTwo = 0;
    for (const GradedCover& g : indecomposableCovers(sub, std::max(maxDegree, 2))) {
        if (g.degree > 2) return false;
        if (g.degree == 2) {
            if (g.cover != expected) return false;
            ++degreeTwo;
        }
    }
    return degreeTwo == 1;
}

}  // namespace

StrIntersecReport strIntersecVerdict(const SimplicialComplex& complex, int maxDegree, int maxCycleLen) {
    if (maxDegree < 2) throw InputError("maxDegree must be at least 2");
    StrIntersecReport report{intersectionGraph(complex), 0, 0, true, std::nullopt, {}, false, std::nullopt, {}};
    const Graph& g = report.graph;
    report.cycleCap = maxCycleLen > 0 ? maxCycleLen : g.vertexCount();

    std::vector<std::vector<int>> cycles;
    const auto& edges = g.edges();
    auto edgeIndex = [&](int u, int v) {
        if (u > v) std::swap(u, v);
        return static_cast<int>(std::lower_bound(edges.begin(), edges.end(), std::make_pair(u, v)) - edges.begin());
    };
    forEachSimpleCycle(g, report.cycleCap, [&](const std::vector<int>& cycle) {
        std::vector<int> ids;
        for (std::size_t i = 0; i < cycle.size(); ++i) ids.push_back(edgeIndex(cycle[i], cycle[(i + 1) % cycle.size()]));
        std::sort(ids.begin(), ids.end());
        cycles.push_back(std::move(ids));
    });
    report.cyclesEnumerated = cycles.size();
    for (std::size_t a = 0; a < cycles.size() && report.hypothesisHolds; ++a) {
        for (std::size_t b = a + 1; b < cycles.size(); ++b) {
            if (sharedCount(cycles[a], cycles[b]) == 2) {
                report.hypothesisHolds = false;
                report.sharedPair = std::make_pair(cycles[a], cycles[b]);
                break;
            }
        }
    }

    bool allGood = true;
    bool anyOddCycle = false;
    for (FaceSet comp : g.components()) {
        ComponentInfo info;
        info.vertices = comp;
        const Graph sub = g.induced(comp);
        if (isBipartite(sub).bipartite) {
            info.shape = ComponentShape::Bipartite;
        } else {
            bool cycle = true;
            for (int v = 1; v <= sub.vertexCount(); ++v) cycle = cycle && sub.degree(v) == 2;
            info.shape = cycle ? ComponentShape::OddCycle : ComponentShape::Other;
        }
        if (info.shape == ComponentShape::OddCycle) {
            info.oddCycleShape = hasOddCycleShape(complex, comp, maxDegree);
            if (!*info.oddCycleShape) {
                throw VerificationError("odd-cycle component {" + comp.toString() +
                                        "} has generators outside degrees 1 and 2");
            }
        }
        allGood = allGood && info.shape != ComponentShape::Other;
        anyOddCycle = anyOddCycle || info.shape == ComponentShape::OddCycle;
        report.components.push_back(info);
    }

    report.componentsBipartiteOrOddCycle = allGood;
    report.engine = equalsAB(complex, maxDegree);
    if (report.hypothesisHolds) {
        const bool predicted = allGood && (!anyOddCycle || report.components.size() == 1);
        report.predictedEqual = predicted;
        if (report.engine.holds != predicted) {
            throw VerificationError("strict-intersection prediction disagrees with the cover engine");
        }
    }
    return report;
}

}  // namespace vca
