#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vca/complex.hpp"
#include "vca/cover.hpp"

namespace vca {

/// Simple graph on [n].
class Graph {
public:
    /// Rejects loops, repeated edges and labels outside 1..n.
    Graph(int n, std::vector<std::pair<int, int>> edges);

    /// Edges of a complex whose facets all have at most two vertices.
    static Graph fromComplex(const SimplicialComplex& complex);

    int vertexCount() const { return n_; }
    /// Sorted pairs (u, v) with u < v.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    FaceSet neighbors(int v) const { return adjacency_[static_cast<std::size_t>(v - 1)]; }
    bool adjacent(int u, int v) const { return neighbors(u).contains(v); }
    int degree(int v) const { return neighbors(v).size(); }
    FaceSet isolatedVertices() const;
    /// Induced subgraph on `keep`, relabelled 1..|keep| in increasing order.
    Graph induced(FaceSet keep) const;
    /// Vertex sets of the connected components, ordered by smallest vertex.
    std::vector<FaceSet> components() const;

    /// The graph as a 1-dimensional complex; vertices without edges stay
    /// in [n] but lie in no facet. Requires at least one edge.
    SimplicialComplex toComplex() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<FaceSet> adjacency_;
};

struct BipartiteResult {
    bool bipartite = false;
    /// Colour class of vertex 1 in each component when bipartite.
    FaceSet side;
    /// Closed walk v_1, ..., v_r (v_{r+1} = v_1) of odd length when not.
    std::vector<int> oddCycle;
};

BipartiteResult isBipartite(const Graph& g);

/// Vertex sets of all simple odd cycles, sorted.
std::vector<FaceSet> oddCycleVertexSets(const Graph& g, int maxLen = 0);

/// v_1, F_1, v_2, ..., F_r, v_{r+1} = v_1 with v_j, v_{j+1} in F_j and each
/// F_j meeting the cycle's vertices in exactly {v_j, v_{j+1}}. Facets are
/// 0-based indices into the complex's canonical facet list.
struct SpecialCycle {
    std::vector<int> vertices;
    std::vector<std::size_t> facets;

    int length() const { return static_cast<int>(vertices.size()); }
    FaceSet vertexSet() const;
    /// "1,F1,2,F2,3,1" with 1-based facet indices.
    std::string toString() const;
    friend bool operator==(const SpecialCycle&, const SpecialCycle&) = default;
    friend auto operator<=>(const SpecialCycle& a, const SpecialCycle& b) {
        if (a.vertices.size() != b.vertices.size()) return a.vertices.size() <=> b.vertices.size();
        if (a.vertices != b.vertices) return a.vertices <=> b.vertices;
        return a.facets <=> b.facets;
    }
};

/// Special cycles of odd length 3 <= r <= maxLen, rotated to start at the
/// smallest vertex and reflected to the smaller orientation. maxLen = 0
/// means the number of facets.
std::vector<SpecialCycle> specialOddCycles(const SimplicialComplex& complex, int maxLen = 0);

struct NoOddReport {
    int maxLen = 0;
    std::vector<SpecialCycle> cycles;
    /// No special odd cycle: A(Gamma) and B(Gamma) are standard graded for
    /// every subcomplex.
    bool predictsStandardGraded = false;
    /// Number of facet subsets checked with the cover engine (0 when skipped).
    std::size_t subcomplexesChecked = 0;
    /// With a cycle (the longest found): the subcomplex of its facets and the
    /// indicator of its vertices, a squarefree 2-cover that is no union of
    /// two disjoint covers.
    std::optional<SimplicialComplex> witnessSubcomplex;
    std::optional<CoverVector> witnessCover;
};

/// Largest facet count for which every subcomplex is checked.
inline constexpr std::size_t kSubcomplexSweepLimit = 12;

NoOddReport noOddVerdict(const SimplicialComplex& complex, int maxLen, int maxDegree);

struct GraphEqualityReport {
    bool equal = false;
    /// Odd cycle C and vertex i with no neighbour on C.
    std::optional<FaceSet> cycle;
    int vertex = 0;
    std::size_t oddCyclesChecked = 0;
    /// Cover-engine verdict on the graph (absent for edgeless graphs).
    std::optional<GradedVerdict> engine;
};

/// A(G) = B(G) iff every odd cycle has a neighbour of every vertex; isolated
/// vertices are ignored since they change neither algebra.
GraphEqualityReport graphEqualityAB(const Graph& g);

/// Complex whose facets are the minimal vertex covers of G, so that its
/// facet ideal is the cover ideal J(G). Rejects isolated vertices.
SimplicialComplex coverIdealComplex(const Graph& g);

struct CoverIdealReport {
    SimplicialComplex complex;
    bool bipartite = false;
    GradedVerdict b;
    GradedVerdict a;
    /// Non-bipartite: the indicator of an odd cycle, an (r+1)/2-cover that
    /// does not split into disjoint vertex covers.
    std::optional<CoverVector> witness;
    int witnessOrder = 0;
};

CoverIdealReport coverIdealVerdict(const Graph& g, int maxDegree = 0);

struct StrictIntersection {
    bool holds = false;
    /// First violating facet indices (0-based): a pair for (I1), a triple for (I2).
    std::vector<std::size_t> violation;
    bool pairwise = true;  // (I1)
    bool triple = true;    // (I2)
};

StrictIntersection strictIntersection(const SimplicialComplex& complex);

/// G_Delta on vertices 1..m for the facets in canonical order.
Graph intersectionGraph(const SimplicialComplex& complex);

enum class ComponentShape { Bipartite, OddCycle, Other };
std::string toString(ComponentShape shape);

struct ComponentInfo {
    FaceSet vertices;  // of G_Delta
    ComponentShape shape = ComponentShape::Other;
    /// Odd cycles: degree-2 indecomposables equal the indicator of the
    /// intersection vertices, and nothing is indecomposable above degree 2.
    std::optional<bool> oddCycleShape;
};

struct StrIntersecReport {
    Graph graph;
    int cycleCap = 0;
    std::size_t cyclesEnumerated = 0;
    bool hypothesisHolds = false;
    /// Cycles (edge lists of G_Delta) sharing exactly two edges.
    std::optional<std::pair<std::vector<int>, std::vector<int>>> sharedPair;
    std::vector<ComponentInfo> components;
    /// Every component is bipartite or an odd cycle.
    bool componentsBipartiteOrOddCycle = false;
    /// Absent when the hypothesis fails. True iff every component is
    /// bipartite or G_Delta is one odd cycle.
    std::optional<bool> predictedEqual;
    GradedVerdict engine;
};

/// maxCycleLen = 0 means the number of facets.
StrIntersecReport strIntersecVerdict(const SimplicialComplex& complex, int maxDegree, int maxCycleLen = 0);

}  // namespace vca
