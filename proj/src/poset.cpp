#include "vca/poset.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "vca/error.hpp"

namespace vca {

// ------------------------------------------------------------------- Poset

Poset::Poset(std::vector<std::vector<bool>> relation) : relation_(std::move(relation)) {
    const std::size_t m = relation_.size();
    if (m == 0) throw InputError("a poset needs at least one element");
    for (const auto& row : relation_) {
        if (row.size() != m) throw InputError("poset relation must be a square matrix");
    }
    for (std::size_t a = 0; a < m; ++a) {
        if (!relation_[a][a]) throw InputError("poset relation is not reflexive at " + std::to_string(a + 1));
        for (std::size_t b = 0; b < m; ++b) {
            if (a != b && relation_[a][b] && relation_[b][a]) {
                throw InputError("poset relation is not antisymmetric: " + std::to_string(a + 1) + " and " +
                                 std::to_string(b + 1));
            }
            for (std::size_t c = 0; c < m; ++c) {
                if (relation_[a][b] && relation_[b][c] && !relation_[a][c]) {
                    throw InputError("poset relation is not transitive");
                }
            }
        }
    }
}

Poset Poset::fromCovers(int m, const std::vector<std::pair<int, int>>& covers) {
    if (m < 1) throw InputError("a poset needs at least one element");
    const auto size = static_cast<std::size_t>(m);
    std::vector<std::vector<bool>> rel(size, std::vector<bool>(size, false));
    for (std::size_t a = 0; a < size; ++a) rel[a][a] = true;
    for (auto [a, b] : covers) {
        if (a < 1 || a > m || b < 1 || b > m) throw InputError("poset relation element out of range 1.." + std::to_string(m));
        if (a == b) throw InputError("cover relation " + std::to_string(a) + " < " + std::to_string(b) + " is not strict");
        rel[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] = true;
    }
    for (std::size_t k = 0; k < size; ++k) {
        for (std::size_t a = 0; a < size; ++a) {
            if (!rel[a][k]) continue;
            for (std::size_t b = 0; b < size; ++b) {
                if (rel[k][b]) rel[a][b] = true;
            }
        }
    }
    for (std::size_t a = 0; a < size; ++a) {
        for (std::size_t b = a + 1; b < size; ++b) {
            if (rel[a][b] && rel[b][a]) throw InputError("cover relations contain a cycle");
        }
    }
    return Poset(std::move(rel));
}

Poset Poset::chain(int m) {
    std::vector<std::pair<int, int>> covers;
    for (int a = 1; a < m; ++a) covers.emplace_back(a, a + 1);
    return fromCovers(m, covers);
}

Poset Poset::antichain(int m) { return fromCovers(m, {}); }

std::vector<std::pair<int, int>> Poset::coverRelations() const {
    std::vector<std::pair<int, int>> out;
    const int m = size();
    for (int a = 1; a <= m; ++a) {
        for (int b = 1; b <= m; ++b) {
            if (a == b || !leq(a, b)) continue;
            bool covered = true;
            for (int c = 1; c <= m && covered; ++c) {
                if (c != a && c != b && leq(a, c) && leq(c, b)) covered = false;
            }
            if (covered) out.emplace_back(a, b);
        }
    }
    return out;
}

// --------------------------------------------------------------- GridCover

GridCover::GridCover(int r, int m, std::vector<int> entries) : r_(r), m_(m), entries_(std::move(entries)) {
    if (r < 1 || m < 1) throw InputError("grid dimensions must be positive");
    if (entries_.size() != static_cast<std::size_t>(r) * static_cast<std::size_t>(m)) {
        throw InputError("grid has " + std::to_string(entries_.size()) + " entries, expected " +
                         std::to_string(r) + "x" + std::to_string(m));
    }
    for (int e : entries_) {
        if (e < 0) throw InputError("grid entries must be nonnegative");
    }
    if (std::all_of(entries_.begin(), entries_.end(), [](int e) { return e == 0; })) {
        throw InputError("a grid cover is a nonzero matrix");
    }
}

GridCover GridCover::fromCoverVector(int r, int m, const CoverVector& c) { return GridCover(r, m, c.entries()); }

std::string GridCover::toString() const {
    std::string out;
    for (int i = 1; i <= r_; ++i) {
        if (i > 1) out += ';';
        for (int j = 1; j <= m_; ++j) {
            if (j > 1) out += ',';
            out += std::to_string(at(i, j));
        }
    }
    return out;
}

GridCover parseGridCover(const std::string& text) {
    std::vector<int> entries;
    int rows = 0;
    int cols = -1;
    std::istringstream in(text);
    std::string row;
    while (std::getline(in, row, ';')) {
        std::istringstream cells(row);
        std::string cell;
        int count = 0;
        while (std::getline(cells, cell, ',')) {
            std::size_t used = 0;
            try {
                entries.push_back(std::stoi(cell, &used));
            } catch (const std::exception&) {
                throw InputError("grid entry is not an integer: '" + cell + "'");
            }
            if (cell.find_first_not_of(" \t", used) != std::string::npos) {
                throw InputError("grid entry is not an integer: '" + cell + "'");
            }
            ++count;
        }
        if (cols < 0) cols = count;
        if (count != cols) throw InputError("grid rows have different lengths");
        ++rows;
    }
    if (rows == 0 || cols <= 0) throw InputError("empty grid");
    return GridCover(rows, cols, std::move(entries));
}

// ---------------------------------------------------------------- Delta_r

namespace {

/// Index sequences j_1..j_r with p_{j_1} <= ... <= p_{j_r}, lexicographic.
std::vector<std::vector<int>> multichains(const Poset& poset, int r) {
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    const int m = poset.size();
    auto extend = [&](auto&& self) -> void {
        if (static_cast<int>(current.size()) == r) {
            out.push_back(current);
            return;
        }
        for (int j = 1; j <= m; ++j) {
            if (!current.empty() && !poset.leq(current.back(), j)) continue;
            current.push_back(j);
            self(self);
            current.pop_back();
        }
    };
    extend(extend);
    return out;
}

void requireGrid(const Poset& poset, int r) {
    if (r < 1) throw InputError("r must be at least 1");
    if (r * poset.size() > kMaxVertices) {
        throw InputError("grid " + std::to_string(r) + "x" + std::to_string(poset.size()) + " exceeds " +
                         std::to_string(kMaxVertices) + " vertices");
    }
}

}  // namespace

SimplicialComplex buildDeltaR(const Poset& poset, int r) {
    requireGrid(poset, r);
    const int m = poset.size();
    std::vector<FaceSet> facets;
    for (const auto& chain : multichains(poset, r)) {
        FaceSet f;
        for (int i = 1; i <= r; ++i) f = f.with(gridVertex(m, i, chain[static_cast<std::size_t>(i - 1)]));
        facets.push_back(f);
    }
    return SimplicialComplex(r * m, facets);
}

GridDecomposition decomposePosetCover(const Poset& poset, int r, const GridCover& c, int k) {
    requireGrid(poset, r);
    const int m = poset.size();
    if (c.rows() != r || c.cols() != m) throw InputError("grid shape does not match r x m");
    if (k < 2) throw InputError("decomposePosetCover needs k >= 2");
    const SimplicialComplex complex = buildDeltaR(poset, r);
    if (coverOrder(complex, c.entries()) < k) {
        throw InputError("(" + c.toString() + ") is not a " + std::to_string(k) + "-cover");
    }

    const auto rows = static_cast<std::size_t>(r);
    const auto cols = static_cast<std::size_t>(m);
    // zeroChain[i][j]: some multichain through rows 1..i ends at j with c = 0 all along.
    std::vector<std::vector<bool>> zeroChain(rows, std::vector<bool>(cols, false));
    std::vector<int> a(rows * cols, 0);
    for (int i = 1; i <= r; ++i) {
        for (int j = 1; j <= m; ++j) {
            bool reach = i == 1;
            bool zero = c.at(i, j) == 0 && i == 1;
            for (int jp = 1; jp <= m && i > 1; ++jp) {
                if (!poset.leq(jp, j) || !zeroChain[static_cast<std::size_t>(i - 2)][static_cast<std::size_t>(jp - 1)])
                    continue;
                reach = true;
                zero = c.at(i, j) == 0;
            }
            zeroChain[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = zero;
            if (c.at(i, j) != 0 && reach) a[static_cast<std::size_t>((i - 1) * m + (j - 1))] = 1;
        }
    }
    GridCover aCover(r, m, a);

    for (const auto& chain : multichains(poset, r)) {
        int tail = 0;
        for (int t = r; t >= 1; --t) {
            const int j = chain[static_cast<std::size_t>(t - 1)];
            tail += c.at(t, j);
            if (aCover.at(t, j) > 0 && tail < k) {
                throw VerificationError("chain-tail bound fails for (" + c.toString() + ")");
            }
        }
    }

    std::vector<int> rest(c.entries());
    for (std::size_t v = 0; v < rest.size(); ++v) rest[v] -= a[v];
    GridCover bCover(r, m, std::move(rest));
    if (coverOrder(complex, aCover.entries()) < 1 || coverOrder(complex, bCover.entries()) < k - 1) {
        throw VerificationError("poset decomposition of (" + c.toString() + ") failed verification");
    }
    return {std::move(aCover), std::move(bCover)};
}

namespace {

constexpr double kLiteralLimit = 1 << 16;

/// Peels 1-covers off c until a 1-cover remains.
void reduceToOneCovers(const Poset& poset, int r, GridCover c, int k) {
    for (; k >= 2; --k) c = decomposePosetCover(poset, r, c, k).b;
}

}  // namespace

GradedVerdict verifyStandardGradedDeltaR(const Poset& poset, int r, int maxDegree) {
    if (maxDegree < 2) throw InputError("maxDegree must be at least 2");
    const SimplicialComplex complex = buildDeltaR(poset, r);
    const int m = poset.size();
    const int n = r * m;

    bool literal = true;
    for (int k = 2; k <= maxDegree; ++k) {
        const MonomialIdeal ideal = jk(complex, k);
        for (const Monomial& g : ideal.generators()) {
            reduceToOneCovers(poset, r, GridCover(r, m, g.exponents()), k);
        }
        if (std::pow(static_cast<double>(k + 1), n) > kLiteralLimit) {
            literal = false;
            continue;
        }
        std::vector<int> entries(static_cast<std::size_t>(n), 0);
        while (true) {
            std::size_t pos = 0;
            while (pos < entries.size() && entries[pos] == k) entries[pos++] = 0;
            if (pos == entries.size()) break;
            ++entries[pos];
            if (coverOrder(complex, entries) >= k) reduceToOneCovers(poset, r, GridCover(r, m, entries), k);
        }
    }

    GradedVerdict brute = isStandardGradedA(complex, maxDegree);
    if (!brute.holds) {
        throw VerificationError("cover engine found indecomposable (" + brute.witness->toString() +
                                ") on a multichain complex");
    }
    GradedVerdict v;
    v.property = GradedProperty::AStandardGraded;
    v.holds = true;
    v.kind = VerdictKind::Exact;
    v.bound = maxDegree;
    v.note = literal ? "theorem-backed; every k-cover with entries <= k decomposed"
                     : "theorem-backed; minimal k-covers decomposed";
    return v;
}

}  // namespace vca
