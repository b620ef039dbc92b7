#pragma once

#include <optional>
#include <vector>

#include "vca/complex.hpp"
#include "vca/cover.hpp"
#include "vca/face_set.hpp"
#include "vca/ideal.hpp"

namespace vca {

/// Borel generators F_1..F_m of a Borel set inside 2^[n].
struct BorelSpec {
    int n = 0;
    std::vector<FaceSet> generators;

    bool isPrincipal() const { return generators.size() == 1; }
    friend bool operator==(const BorelSpec&, const BorelSpec&) = default;
};

/// Validates n and generator ranges; generators are kept in given order.
BorelSpec makeBorelSpec(int n, std::vector<FaceSet> generators);

/// Borel order: equal size and the s-th smallest element of `lower` is at
/// most the s-th smallest element of `upper` for every s.
bool precedes(FaceSet lower, FaceSet upper);

/// Every set preceding some generator, canonically ordered.
std::vector<FaceSet> borelExpand(const BorelSpec& spec);

/// True when `family` is closed under (F \ {j}) u {i} for i < j, i not in F.
bool isBorelClosed(const std::vector<FaceSet>& family);

/// Complex whose facets are the inclusion-maximal members of the expansion.
SimplicialComplex complexOf(const BorelSpec& spec);

/// Borel generators of the facets of the q-skeleton: the top q+1 elements
/// of every generator with more than q+1 elements, the others unchanged.
BorelSpec skeletonBorelGens(const BorelSpec& spec, int q);

/// Generators H_q = {q, ..., i_q} of the Alexander dual of the squarefree
/// principal Borel ideal generated by x_F. Ambient n defaults to max F.
BorelSpec dualBorelGens(FaceSet f, int n = 0);

struct CoverGenerators {
    /// {q, ..., i_{k+q-1}} for q = 1..d-k+1, as listed by the formula.
    BorelSpec stated;
    /// The same Borel set with redundant generators removed.
    BorelSpec minimal;
};

/// Borel generators of the squarefree k-covers of the complex B(F),
/// 1 <= k <= |F|.
CoverGenerators coverGeneratorsPrincipal(FaceSet f, int k, int n = 0);

struct PrincipalDecomposition {
    CoverVector a;  // squarefree r-cover
    int r = 0;
    CoverVector b;  // (k - r)-cover
};

/// Splits a non-squarefree k-cover c of the complex B(F) (k the maximal
/// order of c) as a + b with a squarefree r-cover taken from the level-r
/// cover-generator set for the largest r admitting a subset of supp(c).
/// Ties are broken by the lexicographically smallest sorted support.
PrincipalDecomposition decomposePrincipal(FaceSet f, const CoverVector& c, int k);

/// x_1...x_{i_d} t^d is a minimal generator of A(B(F)) iff min F != 1 or |F| = 1.
bool hasTopDegreeGenerator(FaceSet f);

/// If the squarefree ideal is squarefree Borel, its Borel generators (the
/// Borel-maximal generator supports); std::nullopt otherwise.
std::optional<BorelSpec> isSquarefreeBorelIdeal(const MonomialIdeal& ideal);

}  // namespace vca
