#include "vca/cover.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "parallel.hpp"
#include "vca/error.hpp"

namespace vca {

// ------------------------------------------------------------- CoverVector

CoverVector::CoverVector(std::vector<int> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw InputError("cover vector must have at least one entry");
    if (static_cast<int>(entries_.size()) > kMaxVertices) throw InputError("cover vector too long");
    bool nonzero = false;
    for (int e : entries_) {
        if (e < 0) throw InputError("cover vector entries must be nonnegative");
        nonzero = nonzero || e != 0;
    }
    if (!nonzero) throw InputError("a cover is a nonzero vector");
}

CoverVector CoverVector::indicator(int n, FaceSet support) {
    return CoverVector(Monomial::squarefree(n, support).exponents());
}

bool CoverVector::isSquarefree() const {
    return std::all_of(entries_.begin(), entries_.end(), [](int e) { return e <= 1; });
}

FaceSet CoverVector::support() const { return monomial().support(); }

std::string CoverVector::toString() const {
    std::string out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(entries_[i]);
    }
    return out;
}

CoverVector parseCoverVector(const std::string& text) {
    std::vector<int> entries;
    std::istringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw InputError("cover entry is not an integer: '" + token + "'");
        }
        if (token.find_first_not_of(" \t", used) != std::string::npos) {
            throw InputError("cover entry is not an integer: '" + token + "'");
        }
        entries.push_back(value);
    }
    return CoverVector(std::move(entries));
}

// ------------------------------------------------------------------ orders

namespace {

int faceSum(FaceSet f, const std::vector<int>& entries) {
    int sum = 0;
    for (std::uint64_t m = f.mask(); m != 0; m &= m - 1) {
        sum += entries[static_cast<std::size_t>(std::countr_zero(m))];
    }
    return sum;
}

void requireAmbient(const SimplicialComplex& complex, int ambient) {
    if (ambient != complex.vertexCount()) {
        throw InputError("vector has " + std::to_string(ambient) + " entries but the complex has " +
                         std::to_string(complex.vertexCount()) + " vertices");
    }
}

bool isZero(const std::vector<int>& v) {
    return std::all_of(v.begin(), v.end(), [](int e) { return e == 0; });
}

}  // namespace

int coverOrder(const SimplicialComplex& complex, const std::vector<int>& entries) {
    requireAmbient(complex, static_cast<int>(entries.size()));
    int best = -1;
    for (FaceSet f : complex.facets()) {
        const int s = faceSum(f, entries);
        if (best < 0 || s < best) best = s;
    }
    return best;
}

int coverOrder(const SimplicialComplex& complex, const CoverVector& c) { return coverOrder(complex, c.entries()); }

int defaultMaxDegree(const SimplicialComplex& complex) { return complex.dimension() + 2; }

// ----------------------------------------------------------- decomposition

std::optional<CoverDecomposition> decomposeCover(const SimplicialComplex& complex, const CoverVector& c, int k) {
    requireAmbient(complex, c.ambient());
    if (k < 0) throw InputError("cover order must be nonnegative");
    const int order = coverOrder(complex, c);
    if (order < k) {
        throw InputError("(" + c.toString() + ") is a " + std::to_string(order) + "-cover, not a " +
                         std::to_string(k) + "-cover");
    }
    const auto& ce = c.entries();
    const std::size_t n = ce.size();

    auto attempt = [&](const std::vector<int>& a) -> std::optional<CoverDecomposition> {
        if (isZero(a) || a == ce) return std::nullopt;
        std::vector<int> b(n);
        for (std::size_t i = 0; i < n; ++i) b[i] = ce[i] - a[i];
        const int oa = coverOrder(complex, a);
        const int ob = coverOrder(complex, b);
        if (oa + ob < k) return std::nullopt;
        const int i = std::min(oa, k);
        return CoverDecomposition{CoverVector(a), i, CoverVector(std::move(b)), k - i};
    };

    // Any split with a positive-order part dominates a minimal vertex cover.
    const FaceSet supp = c.support();
    for (FaceSet cover : minimalVertexCovers(complex)) {
        if (!cover.isSubsetOf(supp)) continue;
        if (auto d = attempt(Monomial::squarefree(complex.vertexCount(), cover).exponents())) return d;
    }

    std::vector<int> a(n, 0);
    auto next = [&] {
        for (std::size_t pos = n; pos-- > 0;) {
            if (a[pos] < ce[pos]) {
                ++a[pos];
                std::fill(a.begin() + static_cast<std::ptrdiff_t>(pos) + 1, a.end(), 0);
                return true;
            }
        }
        return false;
    };
    while (next()) {
        if (auto d = attempt(a)) return d;
    }
    return std::nullopt;
}

// ------------------------------------------------------------------ J_k

MonomialIdeal jk(const SimplicialComplex& complex, int k) {
    if (k < 1) throw InputError("J_k needs k >= 1");
    const int n = complex.vertexCount();
    MonomialIdeal result = MonomialIdeal::unit(n);
    for (FaceSet f : complex.facets()) {
        result = intersect(result, power(MonomialIdeal::prime(n, f), k));
    }
    return result;
}

namespace {

/// Lazily computed J_1, J_2, ... for one complex.
class JkTower {
public:
    explicit JkTower(const SimplicialComplex& complex) : complex_(complex) {}

    const MonomialIdeal& at(int k) {
        while (static_cast<int>(levels_.size()) < k) {
            levels_.push_back(jk(complex_, static_cast<int>(levels_.size()) + 1));
        }
        return levels_[static_cast<std::size_t>(k - 1)];
    }

private:
    const SimplicialComplex& complex_;
    std::vector<MonomialIdeal> levels_;
};

bool lexLessEntries(const Monomial& a, const Monomial& b) { return a.exponents() < b.exponents(); }

/// Minimal generators of J_k that do not factor through J_i * J_{k-i}.
std::vector<Monomial> indecomposableInDegree(const SimplicialComplex& complex, JkTower& tower, int k,
                                             const SearchOptions& options) {
    std::vector<Monomial> candidates = tower.at(k).generators();
    if (k == 1) return candidates;
    for (int i = 1; i <= k / 2; ++i) tower.at(i);
    for (int i = 1; i <= k / 2; ++i) tower.at(k - i);

    std::vector<char> decomposable(candidates.size(), 0);
    detail::parallelFor(candidates.size(), options.threads, [&](std::size_t idx) {
        const Monomial& c = candidates[idx];
        const auto& ce = c.exponents();
        std::vector<int> rest(ce.size());
        // The lower-order part of any split has order <= k/2.
        for (int i = 1; i <= k / 2 && !decomposable[idx]; ++i) {
            for (const Monomial& a : tower.at(i).generators()) {
                if (!a.divides(c) || a == c) continue;
                for (std::size_t t = 0; t < ce.size(); ++t) rest[t] = ce[t] - a[t];
                if (coverOrder(complex, rest) >= k - i) {
                    decomposable[idx] = 1;
                    break;
                }
            }
        }
    });
    std::vector<Monomial> out;
    for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
        if (!decomposable[idx]) out.push_back(candidates[idx]);
    }
    return out;
}

}  // namespace

std::vector<GradedCover> indecomposableCovers(const SimplicialComplex& complex, int maxDegree,
                                              const SearchOptions& options) {
    if (maxDegree < 1) throw InputError("maxDegree must be >= 1");
    JkTower tower(complex);
    std::vector<GradedCover> out;
    for (int k = 1; k <= maxDegree; ++k) {
        auto gens = indecomposableInDegree(complex, tower, k, options);
        std::sort(gens.begin(), gens.end(), lexLessEntries);
        for (auto& g : gens) out.push_back({CoverVector::fromMonomial(g), k});
    }
    return out;
}

// ------------------------------------------------------------------ L_k^sq

MonomialIdeal lkSqByIntersection(const SimplicialComplex& complex, int k) {
    if (k < 1) throw InputError("L_k needs k >= 1");
    const int n = complex.vertexCount();
    if (k > complex.minFacetSize()) return MonomialIdeal::zero(n);
    // Squarefree monomial ideals intersect by unions of supports.
    std::vector<FaceSet> current{FaceSet{}};
    for (FaceSet f : complex.facets()) {
        const std::vector<FaceSet> local = subsetsOfSize(f, k);
        std::vector<FaceSet> next;
        for (FaceSet g : current) {
            if ((g & f).size() >= k) {
                next.push_back(g);
                continue;
            }
            for (FaceSet h : local) next.push_back(g | h);
        }
        current = minimalSets(std::move(next));
    }
    return MonomialIdeal::fromSupports(n, current);
}

MonomialIdeal lkSqByEnumeration(const SimplicialComplex& complex, int k) {
    if (k < 1) throw InputError("L_k needs k >= 1");
    const int n = complex.vertexCount();
    if (n > 24) throw InputError("direct enumeration of squarefree covers is limited to n <= 24");
    const auto& facets = complex.facets();
    auto isCover = [&](std::uint64_t mask) {
        return std::all_of(facets.begin(), facets.end(),
                           [&](FaceSet f) { return std::popcount(f.mask() & mask) >= k; });
    };
    std::vector<FaceSet> minimal;
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t mask = 1; mask < limit; ++mask) {
        if (!isCover(mask)) continue;
        bool isMinimal = true;
        for (std::uint64_t m = mask; m != 0 && isMinimal; m &= m - 1) {
            if (isCover(mask & ~(m & (~m + 1)))) isMinimal = false;
        }
        if (isMinimal) minimal.push_back(FaceSet::fromMask(mask));
    }
    return MonomialIdeal::fromSupports(n, minimal);
}

MonomialIdeal lkSq(const SimplicialComplex& complex, int k) {
    MonomialIdeal viaPrimes = lkSqByIntersection(complex, k);
    if (complex.vertexCount() <= 12) {
        MonomialIdeal direct = lkSqByEnumeration(complex, k);
        if (!equalsIdeal(viaPrimes, direct)) {
            throw VerificationError("L_" + std::to_string(k) + "^sq mismatch: intersection " +
                                    viaPrimes.toString() + " vs enumeration " + direct.toString());
        }
    }
    return viaPrimes;
}

// -------------------------------------------------------------------- L_k

namespace {

/// L_0 = S, L_k = sum_{j=1..min(k,r)} L_j^sq * L_{k-j}.
class LkTower {
public:
    explicit LkTower(const SimplicialComplex& complex) : complex_(complex) {
        levels_.push_back(MonomialIdeal::unit(complex.vertexCount()));
    }

    const MonomialIdeal& at(int k) {
        const int r = complex_.minFacetSize();
        while (static_cast<int>(levels_.size()) <= k) {
            const int level = static_cast<int>(levels_.size());
            MonomialIdeal sum = MonomialIdeal::zero(complex_.vertexCount());
            for (int j = 1; j <= std::min(level, r); ++j) {
                sum = add(sum, multiply(squarefree(j), levels_[static_cast<std::size_t>(level - j)]));
            }
            levels_.push_back(std::move(sum));
        }
        return levels_[static_cast<std::size_t>(k)];
    }

    const MonomialIdeal& squarefree(int j) {
        while (static_cast<int>(sq_.size()) < j) sq_.push_back(lkSq(complex_, static_cast<int>(sq_.size()) + 1));
        return sq_[static_cast<std::size_t>(j - 1)];
    }

private:
    const SimplicialComplex& complex_;
    std::vector<MonomialIdeal> levels_;
    std::vector<MonomialIdeal> sq_;
};

}  // namespace

MonomialIdeal lk(const SimplicialComplex& complex, int k) {
    if (k < 1) throw InputError("L_k needs k >= 1");
    LkTower tower(complex);
    return tower.at(k);
}

// ---------------------------------------------------------------- verdicts

std::string toString(GradedProperty property) {
    switch (property) {
        case GradedProperty::AStandardGraded:
            return "A-standard-graded";
        case GradedProperty::BStandardGraded:
            return "B-standard-graded";
        case GradedProperty::AEqualsB:
            return "A-equals-B";
    }
    return "?";
}

std::string toString(VerdictKind kind) { return kind == VerdictKind::Exact ? "exact" : "up-to-bound"; }

GradedVerdict isStandardGradedB(const SimplicialComplex& complex) {
    GradedVerdict v;
    v.property = GradedProperty::BStandardGraded;
    const int r = complex.minFacetSize();
    v.bound = r;
    v.kind = VerdictKind::Exact;
    const MonomialIdeal dual = alexanderDual(facetIdeal(complex));
    for (int k = 2; k <= r; ++k) {
        const MonomialIdeal covers = lkSq(complex, k);
        const MonomialIdeal products = squarefreePower(dual, k);
        if (equalsIdeal(covers, products)) continue;
        std::vector<Monomial> missing;
        for (const auto& g : covers.generators()) {
            if (!products.contains(g)) missing.push_back(g);
        }
        std::sort(missing.begin(), missing.end(), lexLessEntries);
        v.holds = false;
        v.witness = CoverVector::fromMonomial(missing.front());
        v.witnessDegree = k;
        return v;
    }
    v.holds = true;
    return v;
}

GradedVerdict isStandardGradedA(const SimplicialComplex& complex, int maxDegree, const SearchOptions& options) {
    if (maxDegree < 2) throw InputError("maxDegree must be >= 2");
    GradedVerdict v;
    v.property = GradedProperty::AStandardGraded;
    v.bound = maxDegree;
    JkTower tower(complex);
    for (int k = 2; k <= maxDegree; ++k) {
        auto gens = indecomposableInDegree(complex, tower, k, options);
        if (gens.empty()) continue;
        std::sort(gens.begin(), gens.end(), lexLessEntries);
        v.holds = false;
        v.kind = VerdictKind::Exact;
        v.witness = CoverVector::fromMonomial(gens.front());
        v.witnessDegree = k;
        return v;
    }
    v.holds = true;
    v.kind = VerdictKind::UpToBound;
    return v;
}

GradedVerdict equalsAB(const SimplicialComplex& complex, int maxDegree, const SearchOptions& /*options*/) {
    if (maxDegree < 1) throw InputError("maxDegree must be >= 1");
    GradedVerdict v;
    v.property = GradedProperty::AEqualsB;
    v.bound = maxDegree;
    JkTower jt(complex);
    LkTower lt(complex);
    for (int k = 1; k <= maxDegree; ++k) {
        const MonomialIdeal& full = jt.at(k);
        const MonomialIdeal& squarefreeGenerated = lt.at(k);
        if (equalsIdeal(full, squarefreeGenerated)) continue;
        std::vector<Monomial> missing;
        for (const auto& g : full.generators()) {
            if (!squarefreeGenerated.contains(g)) missing.push_back(g);
        }
        // J_i = L_i below k, so every such generator is indecomposable.
        std::sort(missing.begin(), missing.end(), lexLessEntries);
        v.holds = false;
        v.kind = VerdictKind::Exact;
        v.witness = CoverVector::fromMonomial(missing.front());
        v.witnessDegree = k;
        return v;
    }
    v.holds = true;
    v.kind = VerdictKind::UpToBound;
    return v;
}

// ------------------------------------------------------------- partitions

std::optional<std::vector<FaceSet>> partitionIntoVertexCovers(const SimplicialComplex& complex, FaceSet support,
                                                              int k) {
    if (k < 1) throw InputError("number of parts must be >= 1");
    if (support.maxLabel() > complex.vertexCount()) throw InputError("support exceeds the vertex set");
    for (FaceSet f : complex.facets()) {
        if ((f & support).size() < k) {
            throw InputError("{" + support.toString() + "} is not the support of a squarefree " +
                             std::to_string(k) + "-cover");
        }
    }
    const std::vector<int> verts = support.labels();
    const auto& facets = complex.facets();
    std::vector<FaceSet> parts(static_cast<std::size_t>(k));

    // Each facet must still be able to receive every missing part from its
    // unassigned vertices.
    auto feasible = [&](std::size_t assigned) {
        FaceSet open;
        for (std::size_t i = assigned; i < verts.size(); ++i) open = open.with(verts[i]);
        for (FaceSet f : facets) {
            int missing = 0;
            for (FaceSet p : parts) missing += p.intersects(f) ? 0 : 1;
            if (missing > (f & open).size()) return false;
        }
        return true;
    };

    auto search = [&](auto&& self, std::size_t idx, int used) -> bool {
        if (!feasible(idx)) return false;
        if (idx == verts.size()) return used == k;
        // Symmetry breaking: a vertex may open at most one new part.
        const int limit = std::min(used + 1, k);
        for (int p = 0; p < limit; ++p) {
            auto& part = parts[static_cast<std::size_t>(p)];
            const FaceSet before = part;
            part = part.with(verts[idx]);
            if (self(self, idx + 1, std::max(used, p + 1))) return true;
            part = before;
        }
        return false;
    };

    if (!search(search, 0, 0)) return std::nullopt;
    return parts;
}

// ---------------------------------------------------------------- duality

DualityReport verifyDuality(const SimplicialComplex& complex) {
    DualityReport report;
    report.d = complex.dimension() + 1;
    report.pure = complex.isPure();
    const int d = report.d;

    bool allEqual = true;
    for (int k = 1; k <= d; ++k) {
        const MonomialIdeal covers = lkSq(complex, k);
        const MonomialIdeal dual = alexanderDual(facetIdeal(skeleton(complex, d - k)));
        DualityRow row{k, dual.containsIdeal(covers), equalsIdeal(covers, dual)};
        if (!row.inclusion) {
            report.violations.push_back("k=" + std::to_string(k) + ": L_k^sq " + covers.toString() +
                                        " not contained in " + dual.toString());
        }
        if (!row.equality) {
            allEqual = false;
            if (report.pure) {
                report.violations.push_back("k=" + std::to_string(k) +
                                            ": pure complex but L_k^sq differs from the skeleton dual");
            }
        } else if (!report.pure && k != 1) {
            report.violations.push_back("k=" + std::to_string(k) +
                                        ": equality for k != 1 on a non-pure complex");
        }
        report.rows.push_back(row);
    }
    if (allEqual != report.pure) {
        report.violations.push_back("equality for all k does not match purity");
    }

    report.standardGradedB = isStandardGradedB(complex).holds;
    if (report.pure) {
        std::vector<std::vector<MonomialIdeal>> grid(static_cast<std::size_t>(d + 1));
        for (int i = 1; i <= d; ++i) {
            const SimplicialComplex skel = skeleton(complex, d - i);
            grid[static_cast<std::size_t>(i)].push_back(MonomialIdeal::zero(complex.vertexCount()));
            for (int j = 1; j <= d; ++j) grid[static_cast<std::size_t>(i)].push_back(lkSq(skel, j));
        }
        bool symmetric = true;
        for (int i = 1; i <= d; ++i) {
            for (int j = i + 1; j <= d; ++j) {
                const auto& lhs = grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                const auto& rhs = grid[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
                if (!equalsIdeal(lhs, rhs)) {
                    symmetric = false;
                    report.violations.push_back("duality grid asymmetric at (i,j)=(" + std::to_string(i) + "," +
                                                std::to_string(j) + ")");
                }
            }
        }
        report.gridSymmetric = symmetric;

        const MonomialIdeal dual = alexanderDual(facetIdeal(complex));
        bool powers = true;
        for (int k = 0; k < d; ++k) {
            const MonomialIdeal lhs = alexanderDual(facetIdeal(skeleton(complex, k)));
            if (!equalsIdeal(lhs, squarefreePower(dual, d - k))) powers = false;
        }
        report.skeletonDualsArePowers = powers;
        if (powers != report.standardGradedB) {
            report.violations.push_back("skeleton duals are squarefree powers iff B standard graded: failed");
        }
    }
    return report;
}

}  // namespace vca
