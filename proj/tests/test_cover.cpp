#include <doctest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "vca/cover.hpp"
#include "vca/error.hpp"

using namespace vca;

namespace {

CoverVector cv(const std::string& text) { return parseCoverVector(text); }

std::vector<oracle::Vec> entryLists(const MonomialIdeal& ideal) {
    std::vector<oracle::Vec> out;
    for (const Monomial& m : ideal.generators()) out.push_back(m.exponents());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("cover vectors parse and render") {
    CHECK(cv("1,0,2").toString() == "1,0,2");
    CHECK(cv(" 1, 0 ,2 ").entries() == std::vector<int>{1, 0, 2});
    CHECK_THROWS_AS(cv("0,0"), InputError);
    CHECK_THROWS_AS(cv("1,-1"), InputError);
    CHECK_THROWS_AS(cv("1,,2"), InputError);
    CHECK(CoverVector::indicator(4, {2, 4}).toString() == "0,1,0,1");
}

TEST_CASE("cover order") {
    CHECK(coverOrder(fixtures::villarreal(), cv("1,1,1,1,2,0,1,1")) == 2);
    CHECK(coverOrder(fixtures::villarreal(), cv("1,1,1,1,1,1,1,1")) == 2);
    CHECK(coverOrder(fixtures::figure2(), cv("1,1,1,1,1,1")) == 3);
    CHECK(coverOrder(fixtures::figure1(), cv("1,0,2,0,1,0,1")) == 2);
    CHECK_THROWS_AS(coverOrder(fixtures::figure1(), cv("1,0,2")), InputError);
}

TEST_CASE("decomposeCover") {
    CHECK_FALSE(decomposeCover(fixtures::villarreal(), cv("1,1,1,1,2,0,1,1"), 2).has_value());
    CHECK_FALSE(decomposeCover(fixtures::figure3b(), cv("1,0,2,0,1,1"), 2).has_value());

    const SimplicialComplex edge(2, {{1, 2}});
    const auto d = decomposeCover(edge, cv("1,1"), 2);
    REQUIRE(d.has_value());
    CHECK(d->a.toString() == "1,0");
    CHECK(d->aOrder == 1);
    CHECK(d->b.toString() == "0,1");
    CHECK(d->bOrder == 1);

    CHECK_THROWS_AS(decomposeCover(edge, cv("1,0"), 2), InputError);
}

TEST_CASE("indecomposable covers") {
    const SimplicialComplex edge(2, {{1, 2}});
    const auto gens = indecomposableCovers(edge, 3);
    REQUIRE(gens.size() == 2);
    CHECK(gens[0] == GradedCover{cv("0,1"), 1});
    CHECK(gens[1] == GradedCover{cv("1,0"), 1});

    const auto f1 = indecomposableCovers(fixtures::figure1(), 2);
    CHECK(std::find(f1.begin(), f1.end(), GradedCover{cv("1,0,2,0,1,0,1"), 2}) != f1.end());

    for (const GradedCover& g : indecomposableCovers(fixtures::figure2(), 3)) CHECK(g.cover.isSquarefree());

    // The thread count never changes the output.
    CHECK(indecomposableCovers(fixtures::figure3b(), 4, {1}) == indecomposableCovers(fixtures::figure3b(), 4, {4}));
}

TEST_CASE("J_k") {
    const SimplicialComplex edge(2, {{1, 2}});
    CHECK(jk(edge, 2).toString() == "(x1^2, x1*x2, x2^2)");
    CHECK(jk(fixtures::figure2(), 1) == alexanderDual(facetIdeal(fixtures::figure2())));
    CHECK(jk(fixtures::villarreal(), 2).contains(cv("1,1,1,1,2,0,1,1").monomial()));
}

TEST_CASE("L_k^sq") {
    CHECK(lkSq(fixtures::borel145(), 2).toString() ==
          "(x1*x2*x3*x4, x1*x2*x3*x5, x1*x2*x4*x5, x1*x3*x4*x5, x2*x3*x4*x5)");
    CHECK(lkSq(fixtures::borel234(), 2).toString() == "(x1*x2*x3, x1*x2*x4, x1*x3*x4, x2*x3*x4)");
    CHECK(lkSq(SimplicialComplex(4, {{1, 4}, {1, 2, 3}}), 2).toString() == "(x1*x2*x4, x1*x3*x4)");
    CHECK(lkSq(fixtures::figure1(), 3).isZero());
}

TEST_CASE("L_k") {
    CHECK(lk(fixtures::figure2(), 1) == lkSq(fixtures::figure2(), 1));
    const SimplicialComplex edge(2, {{1, 2}});
    CHECK(lk(edge, 2).toString() == "(x1^2, x1*x2, x2^2)");
    CHECK(lk(edge, 2) == jk(edge, 2));
    const Monomial c = cv("2,1,1,1,0").monomial();
    CHECK_FALSE(lk(fixtures::borelBoth(), 3).contains(c));
    CHECK(jk(fixtures::borelBoth(), 3).contains(c));
}

TEST_CASE("standard gradedness of B") {
    CHECK(isStandardGradedB(fixtures::villarreal()).holds);
    const GradedVerdict f1 = isStandardGradedB(fixtures::figure1());
    CHECK_FALSE(f1.holds);
    CHECK((f1.kind == VerdictKind::Exact));
    REQUIRE(f1.witness.has_value());
    CHECK(f1.witness->toString() == "1,1,1,1,1,0,0");
    CHECK(f1.witnessDegree == 2);
    CHECK(isStandardGradedB(SimplicialComplex(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}})).holds);
}

TEST_CASE("standard gradedness of A") {
    const GradedVerdict v = isStandardGradedA(fixtures::villarreal(), 2);
    CHECK_FALSE(v.holds);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->toString() == "1,1,1,1,2,0,1,1");

    const GradedVerdict f3 = isStandardGradedA(fixtures::figure3a(), 4);
    CHECK(f3.holds);
    CHECK((f3.kind == VerdictKind::UpToBound));
    CHECK(f3.bound == 4);
    CHECK_FALSE(f3.witness.has_value());

    CHECK(isStandardGradedA(SimplicialComplex(3, {{1, 2}, {2, 3}}), 4).holds);
    CHECK_THROWS_AS(isStandardGradedA(fixtures::figure2(), 1), InputError);
}

TEST_CASE("A = B") {
    const GradedVerdict f2 = equalsAB(fixtures::figure2(), 3);
    CHECK(f2.holds);
    CHECK((f2.kind == VerdictKind::UpToBound));

    const GradedVerdict f1 = equalsAB(fixtures::figure1(), 2);
    CHECK_FALSE(f1.holds);
    CHECK((f1.kind == VerdictKind::Exact));
    CHECK(f1.witness->toString() == "1,0,2,0,1,0,1");

    const GradedVerdict b = equalsAB(fixtures::borelBoth(), 3);
    CHECK_FALSE(b.holds);
    CHECK(b.witness->toString() == "2,1,1,1,0");
    CHECK(b.witnessDegree == 3);
}

TEST_CASE("partition into vertex covers") {
    const SimplicialComplex square(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
    const auto p = partitionIntoVertexCovers(square, {1, 2, 3, 4}, 2);
    REQUIRE(p.has_value());
    CHECK(*p == std::vector<FaceSet>{{1, 3}, {2, 4}});
    CHECK_FALSE(partitionIntoVertexCovers(fixtures::figure1(), {1, 2, 3, 4, 5}, 2).has_value());
    const auto t = partitionIntoVertexCovers(SimplicialComplex(3, {{1, 2, 3}}), {1, 2, 3}, 3);
    REQUIRE(t.has_value());
    CHECK(*t == std::vector<FaceSet>{{1}, {2}, {3}});
    CHECK_THROWS_AS(partitionIntoVertexCovers(square, {1, 2}, 2), InputError);
}

TEST_CASE("duality report") {
    const DualityReport pure = verifyDuality(fixtures::borel145());
    CHECK(pure.ok());
    CHECK(pure.pure);
    for (const DualityRow& row : pure.rows) {
        CHECK(row.inclusion);
        CHECK(row.equality);
    }
    CHECK(pure.gridSymmetric == true);

    const DualityReport mixed = verifyDuality(SimplicialComplex(4, {{1, 4}, {1, 2, 3}}));
    CHECK(mixed.ok());
    CHECK_FALSE(mixed.pure);
    CHECK(std::any_of(mixed.rows.begin(), mixed.rows.end(), [](const DualityRow& r) { return !r.equality; }));
    CHECK(mixed.rows.front().equality);

    for (int d = 1; d <= 5; ++d) {
        const DualityReport full = verifyDuality(SimplicialComplex(5, subsetsOfSize(FaceSet::interval(5), d)));
        CHECK(full.ok());
        CHECK(full.gridSymmetric == true);
    }
}

TEST_CASE("cover engine against brute force on random complexes") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);
        const SimplicialComplex c = gen::randomComplex(rng, n, 5, 3);
        const auto facets = oracle::facetMasks(c);
        const int maxDegree = std::min(3, c.dimension() + 2);
        INFO(c.toString());

        for (int k = 1; k <= 3; ++k) {
            // x^c in J_k iff coverOrder(c) >= k, over entries <= 3.
            const MonomialIdeal j = jk(c, k);
            oracle::forEachBelow(oracle::Vec(static_cast<std::size_t>(n), 3), [&](const oracle::Vec& v) {
                if (oracle::isZero(v)) return;
                CHECK(j.contains(Monomial(v)) == (oracle::order(facets, v) >= k));
            });
            CHECK(entryLists(j) == oracle::minimalCovers(facets, n, k));

            CHECK(lkSqByIntersection(c, k) == lkSqByEnumeration(c, k));
            CHECK(oracle::supports(lkSq(c, k)) == oracle::minimalHitting(facets, n, k));
            CHECK(jk(c, k).containsIdeal(lk(c, k)));
        }

        // Indecomposable covers: the library reports each at its order.
        std::vector<std::pair<oracle::Vec, int>> expected;
        for (int k = 1; k <= maxDegree; ++k) {
            for (const oracle::Vec& v : oracle::generatorsInDegree(facets, n, k)) expected.emplace_back(v, k);
        }
        std::sort(expected.begin(), expected.end(),
                  [](const auto& x, const auto& y) { return std::tie(x.second, x.first) < std::tie(y.second, y.first); });
        std::vector<std::pair<oracle::Vec, int>> actual;
        for (const GradedCover& g : indecomposableCovers(c, maxDegree)) actual.emplace_back(g.cover.entries(), g.degree);
        CHECK(actual == expected);

        for (const auto& [v, k] : expected) {
            for (int x : v) CHECK(x <= k);
            CHECK_FALSE(decomposeCover(c, CoverVector(v), k).has_value());
        }
        for (const oracle::Vec& v : oracle::minimalCovers(facets, n, 2)) {
            const auto d = decomposeCover(c, CoverVector(v), 2);
            CHECK(d.has_value() == oracle::decomposable(facets, v, 2));
            if (d) {
                CHECK(d->aOrder + d->bOrder == 2);
                CHECK(oracle::order(facets, d->a.entries()) >= d->aOrder);
                CHECK(oracle::order(facets, d->b.entries()) >= d->bOrder);
                for (int i = 0; i < n; ++i) CHECK(d->a[static_cast<std::size_t>(i)] + d->b[static_cast<std::size_t>(i)] == v[static_cast<std::size_t>(i)]);
            }
        }

        CHECK(isStandardGradedB(c).holds == oracle::bStandardGraded(facets, n));
        CHECK(isStandardGradedA(c, std::max(2, maxDegree)).holds ==
              oracle::aStandardGradedUpTo(facets, n, std::max(2, maxDegree)));
        CHECK(equalsAB(c, maxDegree).holds == oracle::aEqualsBUpTo(facets, n, maxDegree));
    }
}

TEST_CASE("entry cap and the full-product clause") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 6);
        const SimplicialComplex c = gen::randomComplex(rng, n, 6, 4);
        const auto facets = oracle::facetMasks(c);

        // Capping an entry above k at k keeps a k-cover a k-cover.
        std::uniform_int_distribution<int> entry(0, 6);
        oracle::Vec v(static_cast<std::size_t>(n));
        for (int& x : v) x = entry(rng);
        if (oracle::isZero(v)) v[0] = 1;
        const int k = oracle::order(facets, v);
        oracle::Vec capped = v;
        for (int& x : capped) x = std::min(x, k);
        if (k > 0) CHECK(oracle::order(facets, capped) >= k);

        // L_r^sq is the full product iff every vertex lies in a facet of size r.
        const int r = c.minFacetSize();
        bool everyVertex = true;
        for (int i = 1; i <= n; ++i) {
            everyVertex = everyVertex && std::any_of(c.facets().begin(), c.facets().end(), [&](FaceSet f) {
                              return f.size() == r && f.contains(i);
                          });
        }
        CHECK((lkSq(c, r) == MonomialIdeal::fromSupports(n, {FaceSet::interval(n)})) == everyVertex);
    }
}

TEST_CASE("restrictions keep A = B") {
    for (const SimplicialComplex& c : {fixtures::figure2(), fixtures::figure3a(), fixtures::borel145()}) {
        REQUIRE(equalsAB(c, 3).holds);
        for (std::uint64_t w = 1; w < (std::uint64_t{1} << c.vertexCount()); ++w) {
            const auto r = restriction(c, FaceSet::fromMask(w));
            if (r) CHECK(equalsAB(*r, 3).holds);
        }
    }
}
