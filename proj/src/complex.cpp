#include "vca/complex.hpp"

#include <algorithm>

#include "vca/error.hpp"

namespace vca {

SimplicialComplex::SimplicialComplex(int n, std::vector<FaceSet> faces) : n_(n) {
    if (n < 1 || n > kMaxVertices) {
        throw InputError("vertex count must lie in 1.." + std::to_string(kMaxVertices));
    }
    if (faces.empty()) throw InputError("a complex needs at least one facet");
    for (FaceSet f : faces) {
        if (f.empty()) throw InputError("empty face in facet list");
        if (f.maxLabel() > n) {
            throw InputError("face {" + f.toString() + "} uses a vertex outside 1.." + std::to_string(n));
        }
    }
    const std::size_t given = faces.size();
    facets_ = maximalSets(std::move(faces));
    normalized_ = facets_.size() != given;
}

int SimplicialComplex::dimension() const {
    int best = 0;
    for (FaceSet f : facets_) best = std::max(best, f.size());
    return best - 1;
}

bool SimplicialComplex::isPure() const {
    return std::all_of(facets_.begin(), facets_.end(),
                       [&](FaceSet f) { return f.size() == facets_.front().size(); });
}

int SimplicialComplex::minFacetSize() const {
    // Canonical order puts the smallest facet first.
    return facets_.front().size();
}

FaceSet SimplicialComplex::isolatedVertices() const {
    FaceSet used;
    for (FaceSet f : facets_) used = used | f;
    return vertexSet() - used;
}

std::string SimplicialComplex::toString() const {
    std::string out = "n=" + std::to_string(n_) + " facets:";
    for (FaceSet f : facets_) out += " {" + f.toString() + "}";
    return out;
}

SimplicialComplex skeleton(const SimplicialComplex& complex, int q) {
    if (q < 0 || q > complex.dimension()) {
        throw InputError("skeleton dimension " + std::to_string(q) + " outside 0.." +
                         std::to_string(complex.dimension()));
    }
    std::vector<FaceSet> faces;
    for (FaceSet f : complex.facets()) {
        if (f.size() <= q + 1) {
            faces.push_back(f);
        } else {
            auto sub = subsetsOfSize(f, q + 1);
            faces.insert(faces.end(), sub.begin(), sub.end());
        }
    }
    return SimplicialComplex(complex.vertexCount(), std::move(faces));
}

std::optional<SimplicialComplex> restriction(const SimplicialComplex& complex, FaceSet w) {
    std::vector<FaceSet> kept;
    for (FaceSet f : complex.facets()) {
        if (f.isSubsetOf(w)) kept.push_back(f);
    }
    if (kept.empty()) return std::nullopt;
    return SimplicialComplex(complex.vertexCount(), std::move(kept));
}

SimplicialComplex subcomplex(const SimplicialComplex& complex, const std::vector<std::size_t>& facetIndices) {
    std::vector<FaceSet> kept;
    for (std::size_t i : facetIndices) {
        if (i >= complex.facetCount()) throw InputError("facet index out of range");
        kept.push_back(complex.facets()[i]);
    }
    return SimplicialComplex(complex.vertexCount(), std::move(kept));
}

MonomialIdeal facetIdeal(const SimplicialComplex& complex) {
    return MonomialIdeal::fromSupports(complex.vertexCount(), complex.facets());
}

SimplicialComplex complexOfIdeal(const MonomialIdeal& ideal) {
    if (ideal.isZero()) throw InputError("the zero ideal is not the facet ideal of a complex");
    return SimplicialComplex(ideal.ambient(), ideal.supports());
}

std::vector<FaceSet> minimalVertexCovers(const SimplicialComplex& complex) {
    return minimalTransversals(complex.facets());
}

}  // namespace vca
