#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vca/face_set.hpp"
#include "vca/ideal.hpp"

namespace vca {

/// A simplicial complex on [n] given by its facets.
///
/// Immutable after construction. Facets form an antichain stored in
/// canonical order (by size, then lexicographic), so two complexes built
/// from permuted face lists compare equal.
class SimplicialComplex {
public:
    /// Keeps the inclusion-maximal members of `faces`. `normalized()` is
    /// true when some input face was dropped or repeated.
    SimplicialComplex(int n, std::vector<FaceSet> faces);

    int vertexCount() const { return n_; }
    const std::vector<FaceSet>& facets() const { return facets_; }
    std::size_t facetCount() const { return facets_.size(); }
    bool normalized() const { return normalized_; }

    /// max |F| - 1
    int dimension() const;
    bool isPure() const;
    /// min |F|
    int minFacetSize() const;
    /// Vertices of [n] lying in no facet.
    FaceSet isolatedVertices() const;
    FaceSet vertexSet() const { return FaceSet::interval(n_); }

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.n_ == b.n_ && a.facets_ == b.facets_;
    }

    std::string toString() const;

private:
    int n_;
    std::vector<FaceSet> facets_;
    bool normalized_ = false;
};

/// The q-skeleton: maximal faces of dimension <= q. Requires 0 <= q <= dim.
SimplicialComplex skeleton(const SimplicialComplex& complex, int q);

/// Facets contained in `w`; std::nullopt when no facet fits.
std::optional<SimplicialComplex> restriction(const SimplicialComplex& complex, FaceSet w);

/// Subcomplex on the same vertex set spanned by the facets with the given
/// (0-based, canonical) indices.
SimplicialComplex subcomplex(const SimplicialComplex& complex, const std::vector<std::size_t>& facetIndices);

/// I(complex) = (x_F : F facet)
MonomialIdeal facetIdeal(const SimplicialComplex& complex);

/// Complex whose facets are the supports of the generators of a squarefree ideal.
SimplicialComplex complexOfIdeal(const MonomialIdeal& ideal);

/// Minimal vertex covers (minimal transversals of the facets).
std::vector<FaceSet> minimalVertexCovers(const SimplicialComplex& complex);

}  // namespace vca
