#pragma once

#include <string>
#include <utility>
#include <vector>

#include "vca/complex.hpp"
#include "vca/cover.hpp"

namespace vca {

/// Finite poset on p_1..p_m stored as its full order relation.
class Poset {
public:
    /// `relation[i][j]` is p_{i+1} <= p_{j+1}; must be a partial order.
    explicit Poset(std::vector<std::vector<bool>> relation);

    /// Closes the strict relations (a, b), meaning p_a < p_b, transitively.
    static Poset fromCovers(int m, const std::vector<std::pair<int, int>>& covers);
    static Poset chain(int m);
    static Poset antichain(int m);

    int size() const { return static_cast<int>(relation_.size()); }
    /// p_a <= p_b, 1-based.
    bool leq(int a, int b) const { return relation_[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)]; }
    const std::vector<std::vector<bool>>& relation() const { return relation_; }
    /// Pairs (a, b) with p_a covered by p_b, in lexicographic order.
    std::vector<std::pair<int, int>> coverRelations() const;

    friend bool operator==(const Poset&, const Poset&) = default;

private:
    std::vector<std::vector<bool>> relation_;
};

/// r x m matrix of nonnegative integers, not all zero. Entry (i, j) is
/// vertex (i - 1) * m + j of the complex built by buildDeltaR.
class GridCover {
public:
    GridCover(int r, int m, std::vector<int> entries);

    static GridCover fromCoverVector(int r, int m, const CoverVector& c);

    int rows() const { return r_; }
    int cols() const { return m_; }
    int at(int i, int j) const { return entries_[static_cast<std::size_t>((i - 1) * m_ + (j - 1))]; }
    const std::vector<int>& entries() const { return entries_; }
    CoverVector toCoverVector() const { return CoverVector(entries_); }

    /// Rows separated by ';', entries by ','.
    std::string toString() const;

    friend bool operator==(const GridCover&, const GridCover&) = default;

private:
    int r_;
    int m_;
    std::vector<int> entries_;
};

/// Parses "0,0;2,2".
GridCover parseGridCover(const std::string& text);

/// Vertex label of grid position (i, j).
inline int gridVertex(int m, int i, int j) { return (i - 1) * m + j; }

/// Delta_r(P): one facet {(1,j_1), ..., (r,j_r)} per multichain
/// p_{j_1} <= ... <= p_{j_r}, constant multichains included.
SimplicialComplex buildDeltaR(const Poset& poset, int r);

struct GridDecomposition {
    GridCover a;  // squarefree 1-cover
    GridCover b;  // (k - 1)-cover
};

/// For a k-cover c, k >= 2: a is the indicator of the vertices (i, j) with
/// c_ij != 0 reachable through a chain of zero entries in rows 1..i-1
/// ending below p_j. Every step is verified; a failure is a VerificationError.
GridDecomposition decomposePosetCover(const Poset& poset, int r, const GridCover& c, int k);

/// Splits every k-cover (2 <= k <= maxDegree) into 1-covers with
/// decomposePosetCover and checks that the cover engine finds no
/// indecomposable cover either.
GradedVerdict verifyStandardGradedDeltaR(const Poset& poset, int r, int maxDegree);

}  // namespace vca
