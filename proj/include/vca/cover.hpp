#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vca/complex.hpp"
#include "vca/ideal.hpp"

namespace vca {

/// A nonzero vector of nonnegative integers indexed by the vertices.
class CoverVector {
public:
    explicit CoverVector(std::vector<int> entries);

    /// Indicator vector of `support` in [n].
    static CoverVector indicator(int n, FaceSet support);
    static CoverVector fromMonomial(const Monomial& m) { return CoverVector(m.exponents()); }

    int ambient() const { return static_cast<int>(entries_.size()); }
    const std::vector<int>& entries() const { return entries_; }
    int operator[](std::size_t i) const { return entries_[i]; }

    bool isSquarefree() const;
    FaceSet support() const;
    Monomial monomial() const { return Monomial(entries_); }

    /// "1,0,2,0,1"
    std::string toString() const;

    friend bool operator==(const CoverVector&, const CoverVector&) = default;
    friend auto operator<=>(const CoverVector& a, const CoverVector& b) { return a.entries_ <=> b.entries_; }

private:
    std::vector<int> entries_;
};

/// Parses "1,0,2,0,1,0,1".
CoverVector parseCoverVector(const std::string& text);

/// Largest k such that c is a k-cover: min over facets F of sum_{i in F} c_i.
int coverOrder(const SimplicialComplex& complex, const CoverVector& c);
/// Same, on a raw entry vector (zero vectors allowed; the result is then 0).
int coverOrder(const SimplicialComplex& complex, const std::vector<int>& entries);

struct CoverDecomposition {
    CoverVector a;
    int aOrder;  // i, with a an i-cover
    CoverVector b;
    int bOrder;  // j, with b a j-cover and i + j = k
};

/// Splits the k-cover c as a + b with a an i-cover, b a j-cover, i + j = k
/// and both parts nonzero. Candidates are tried first among indicator
/// vectors of minimal vertex covers inside supp(c), then over every a < c
/// in lexicographic order. Returns std::nullopt when c is indecomposable.
std::optional<CoverDecomposition> decomposeCover(const SimplicialComplex& complex, const CoverVector& c, int k);

struct GradedCover {
    CoverVector cover;
    int degree;  // the cover's order
    friend bool operator==(const GradedCover&, const GradedCover&) = default;
};

struct SearchOptions {
    int threads = 1;
};

/// dim + 2, the default degree bound for A-side checks.
int defaultMaxDegree(const SimplicialComplex& complex);

/// Indecomposable k-covers for 1 <= k <= maxDegree, i.e. the exponent
/// vectors of the minimal algebra generators of A(complex) up to that
/// degree. Ordered by degree, then lexicographically on the entries.
std::vector<GradedCover> indecomposableCovers(const SimplicialComplex& complex, int maxDegree,
                                              const SearchOptions& options = {});

/// J_k = intersection of P_F^k over the facets: spanned by x^c, c a k-cover.
MonomialIdeal jk(const SimplicialComplex& complex, int k);

/// L_k^sq, the ideal of squarefree k-covers, computed as the intersection
/// of the squarefree powers P_F^<k> and cross-checked against direct
/// enumeration when n is small. Zero when k exceeds the smallest facet.
MonomialIdeal lkSq(const SimplicialComplex& complex, int k);
MonomialIdeal lkSqByIntersection(const SimplicialComplex& complex, int k);
/// Minimal vertex sets meeting every facet in at least k vertices; n <= 24.
MonomialIdeal lkSqByEnumeration(const SimplicialComplex& complex, int k);

/// L_k, the degree-k component of B(complex).
MonomialIdeal lk(const SimplicialComplex& complex, int k);

enum class GradedProperty { AStandardGraded, BStandardGraded, AEqualsB };
enum class VerdictKind { Exact, UpToBound };

std::string toString(GradedProperty property);
std::string toString(VerdictKind kind);

struct GradedVerdict {
    GradedProperty property = GradedProperty::AStandardGraded;
    bool holds = false;
    VerdictKind kind = VerdictKind::Exact;
    int bound = 0;
    std::optional<CoverVector> witness;  // present iff !holds
    int witnessDegree = 0;
    std::string note;
};

/// Exact: B is generated in degree <= min facet size, and it is standard
/// graded iff L_k^sq = (I^v)^<k> for k = 2..r.
GradedVerdict isStandardGradedB(const SimplicialComplex& complex);

/// False (exact) with the first indecomposable k-cover, 2 <= k <= maxDegree;
/// otherwise true up to the bound.
GradedVerdict isStandardGradedA(const SimplicialComplex& complex, int maxDegree,
                                const SearchOptions& options = {});

/// Compares L_k with J_k for k = 1..maxDegree. The witness is an
/// indecomposable non-squarefree cover, i.e. a generator of J_k outside L_k.
GradedVerdict equalsAB(const SimplicialComplex& complex, int maxDegree, const SearchOptions& options = {});

/// k pairwise disjoint vertex covers with union C, or std::nullopt.
std::optional<std::vector<FaceSet>> partitionIntoVertexCovers(const SimplicialComplex& complex, FaceSet support,
                                                              int k);

struct DualityRow {
    int k = 0;
    bool inclusion = false;  // L_k^sq inside I(skeleton(d-k))^v
    bool equality = false;
};

struct DualityReport {
    int d = 0;  // dim + 1
    bool pure = false;
    std::vector<DualityRow> rows;
    /// Pure complexes only: whether L_j(skel(d-i))^sq = L_i(skel(d-j))^sq for all i, j.
    std::optional<bool> gridSymmetric;
    /// Pure complexes only: I(skel(k))^v = (I^v)^<d-k> for every k.
    std::optional<bool> skeletonDualsArePowers;
    bool standardGradedB = false;
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

/// Checks the skeleton duality between squarefree covers and Alexander
/// duals of skeleton facet ideals. Every statement checked is a theorem;
/// a nonempty `violations` list means an engine bug.
DualityReport verifyDuality(const SimplicialComplex& complex);

}  // namespace vca
