#include "vca/borel.hpp"

#include <algorithm>

#include "vca/error.hpp"

namespace vca {

BorelSpec makeBorelSpec(int n, std::vector<FaceSet> generators) {
    if (n < 1 || n > kMaxVertices) throw InputError("Borel ambient must lie in 1.." + std::to_string(kMaxVertices));
    if (generators.empty()) throw InputError("a Borel spec needs at least one generator");
    for (FaceSet g : generators) {
        if (g.empty()) throw InputError("empty Borel generator");
        if (g.maxLabel() > n) throw InputError("Borel generator {" + g.toString() + "} exceeds n");
    }
    return BorelSpec{n, std::move(generators)};
}

bool precedes(FaceSet lower, FaceSet upper) {
    if (lower.size() != upper.size()) return false;
    const auto lo = lower.labels();
    const auto up = upper.labels();
    for (std::size_t s = 0; s < lo.size(); ++s) {
        if (lo[s] > up[s]) return false;
    }
    return true;
}

namespace {

std::vector<FaceSet> expandOne(FaceSet generator) {
    std::vector<FaceSet> out;
    for (FaceSet s : subsetsOfSize(FaceSet::interval(generator.maxLabel()), generator.size())) {
        if (precedes(s, generator)) out.push_back(s);
    }
    return out;
}

std::vector<FaceSet> sortedUnique(std::vector<FaceSet> sets) {
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    return sets;
}

int ambientFor(FaceSet f, int n) {
    if (f.empty()) throw InputError("Borel generator must be nonempty");
    if (n == 0) return f.maxLabel();
    if (n < f.maxLabel()) throw InputError("ambient n is smaller than max F");
    return n;
}

/// {q, ..., i_{k+q-1}} for q = 1..d-k+1.
std::vector<FaceSet> coverGeneratorSets(FaceSet f, int k) {
    const auto labels = f.labels();
    const int d = static_cast<int>(labels.size());
    std::vector<FaceSet> out;
    for (int q = 1; q <= d - k + 1; ++q) {
        out.push_back(FaceSet::range(q, labels[static_cast<std::size_t>(k + q - 2)]));
    }
    return out;
}

std::vector<FaceSet> borelMaximal(const std::vector<FaceSet>& family) {
    std::vector<FaceSet> out;
    for (FaceSet g : family) {
        const bool dominated = std::any_of(family.begin(), family.end(),
                                           [&](FaceSet h) { return h != g && precedes(g, h); });
        if (!dominated) out.push_back(g);
    }
    return sortedUnique(std::move(out));
}

}  // namespace

std::vector<FaceSet> borelExpand(const BorelSpec& spec) {
    std::vector<FaceSet> all;
    for (FaceSet g : spec.generators) {
        auto part = expandOne(g);
        all.insert(all.end(), part.begin(), part.end());
    }
    all = sortedUnique(std::move(all));
    if (!isBorelClosed(all)) throw VerificationError("Borel expansion is not closed under exchange moves");
    return all;
}

bool isBorelClosed(const std::vector<FaceSet>& family) {
    const std::vector<FaceSet> sorted = sortedUnique(family);
    auto member = [&](FaceSet s) { return std::binary_search(sorted.begin(), sorted.end(), s); };
    for (FaceSet f : sorted) {
        for (int j : f.labels()) {
            for (int i = 1; i < j; ++i) {
                if (f.contains(i)) continue;
                if (!member(f.without(j).with(i))) return false;
            }
        }
    }
    return true;
}

SimplicialComplex complexOf(const BorelSpec& spec) { return SimplicialComplex(spec.n, borelExpand(spec)); }

BorelSpec skeletonBorelGens(const BorelSpec& spec, int q) {
    if (q < 0) throw InputError("skeleton dimension must be >= 0");
    std::vector<FaceSet> gens;
    for (FaceSet g : spec.generators) {
        if (g.size() > q + 1) {
            const auto labels = g.labels();
            gens.push_back(FaceSet(std::vector<int>(labels.end() - (q + 1), labels.end())));
        } else {
            gens.push_back(g);
        }
    }
    BorelSpec out{spec.n, std::move(gens)};

    const SimplicialComplex full = complexOf(spec);
    if (q <= full.dimension()) {
        const SimplicialComplex viaFaces = skeleton(full, q);
        if (SimplicialComplex(spec.n, borelExpand(out)) != viaFaces) {
            throw VerificationError("skeleton Borel generators disagree with the skeleton of the complex");
        }
    }
    return out;
}

BorelSpec dualBorelGens(FaceSet f, int n) {
    n = ambientFor(f, n);
    const auto labels = f.labels();
    std::vector<FaceSet> gens;
    for (int q = 1; q <= static_cast<int>(labels.size()); ++q) {
        gens.push_back(FaceSet::range(q, labels[static_cast<std::size_t>(q - 1)]));
    }
    BorelSpec out{n, std::move(gens)};

    const MonomialIdeal viaFormula = MonomialIdeal::fromSupports(n, borelExpand(out));
    const MonomialIdeal viaTransversals = alexanderDual(facetIdeal(complexOf(BorelSpec{n, {f}})));
    if (!equalsIdeal(viaFormula, viaTransversals)) {
        throw VerificationError("dual Borel generators of {" + f.toString() + "} disagree with the Alexander dual");
    }
    return out;
}

CoverGenerators coverGeneratorsPrincipal(FaceSet f, int k, int n) {
    n = ambientFor(f, n);
    if (k < 1 || k > f.size()) {
        throw InputError("cover degree " + std::to_string(k) + " outside 1.." + std::to_string(f.size()));
    }
    BorelSpec stated{n, coverGeneratorSets(f, k)};
    const MonomialIdeal ideal = MonomialIdeal::fromSupports(n, borelExpand(stated));
    const MonomialIdeal expected = lkSq(complexOf(BorelSpec{n, {f}}), k);
    if (!equalsIdeal(ideal, expected)) {
        throw VerificationError("cover generators of {" + f.toString() + "} at k=" + std::to_string(k) +
                                " disagree with L_k^sq");
    }
    auto minimal = isSquarefreeBorelIdeal(ideal);
    if (!minimal) throw VerificationError("L_k^sq of a principal Borel complex is not squarefree Borel");
    return {std::move(stated), std::move(*minimal)};
}

PrincipalDecomposition decomposePrincipal(FaceSet f, const CoverVector& c, int k) {
    const int n = c.ambient();
    ambientFor(f, n);
    const SimplicialComplex complex = complexOf(BorelSpec{n, {f}});
    if (c.isSquarefree()) throw InputError("decomposePrincipal expects a non-squarefree cover");
    const int order = coverOrder(complex, c);
    if (order != k) {
        throw InputError("k=" + std::to_string(k) + " is not the maximal order of (" + c.toString() +
                         "), which is " + std::to_string(order));
    }
    if (k < 1) throw InputError("cover must have positive order");

    // Step 1: the largest level r with a cover-generator set inside supp(c).
    const FaceSet supp = c.support();
    const int d = f.size();
    for (int level = d; level >= 1; --level) {
        std::vector<FaceSet> candidates;
        for (FaceSet gen : coverGeneratorSets(f, level)) {
            for (FaceSet h : subsetsOfSize(supp, gen.size())) {
                if (precedes(h, gen)) candidates.push_back(h);
            }
        }
        if (candidates.empty()) continue;
        const FaceSet chosen = *std::min_element(candidates.begin(), candidates.end(), lexLess);
        if (level > k) throw VerificationError("cover-generator level exceeds the cover order");

        CoverVector a = CoverVector::indicator(n, chosen);
        std::vector<int> rest(c.entries());
        for (int v : chosen.labels()) rest[static_cast<std::size_t>(v - 1)] -= 1;
        CoverVector b(std::move(rest));
        if (coverOrder(complex, a) < level || coverOrder(complex, b) < k - level) {
            throw VerificationError("principal Borel decomposition of (" + c.toString() + ") failed verification");
        }
        return {std::move(a), level, std::move(b)};
    }
    throw VerificationError("no cover-generator set inside supp(c); c is not a cover of positive order");
}

bool hasTopDegreeGenerator(FaceSet f) {
    if (f.empty()) throw InputError("Borel generator must be nonempty");
    // Degree 1: x_1...x_{i_1} t is the only minimal 1-cover.
    return f.size() == 1 || f.minLabel() != 1;
}

std::optional<BorelSpec> isSquarefreeBorelIdeal(const MonomialIdeal& ideal) {
    if (!ideal.isSquarefree()) throw InputError("squarefree Borel test needs a squarefree ideal");
    if (ideal.isZero()) return std::nullopt;
    const int n = ideal.ambient();
    const std::vector<FaceSet> supports = ideal.supports();
    for (FaceSet f : supports) {
        for (int j : f.labels()) {
            for (int i = 1; i < j; ++i) {
                if (f.contains(i)) continue;
                if (!ideal.contains(Monomial::squarefree(n, f.without(j).with(i)))) return std::nullopt;
            }
        }
    }
    return BorelSpec{n, borelMaximal(supports)};
}

}  // namespace vca
