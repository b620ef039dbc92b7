#include <doctest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "vca/complex.hpp"
#include "vca/error.hpp"

using namespace vca;

TEST_CASE("face sets render, parse and order canonically") {
    const FaceSet f{1, 3, 4};
    CHECK(f.toString() == "1,3,4");
    CHECK(f.size() == 3);
    CHECK(f.minLabel() == 1);
    CHECK(f.maxLabel() == 4);
    CHECK(parseFaceSet(" 4, 1 ,3") == f);
    CHECK(FaceSet{1, 2} < FaceSet{1, 2, 3});
    CHECK(FaceSet{1, 4} < FaceSet{2, 3});
    CHECK_THROWS_AS(parseFaceSet("1,1"), InputError);
    CHECK_THROWS_AS(parseFaceSet("0,2"), InputError);
    CHECK_THROWS_AS(parseFaceSet("1,x"), InputError);
    CHECK(subsetsOfSize(FaceSet::interval(4), 2).size() == 6);
}

TEST_CASE("construction keeps the maximal faces") {
    const SimplicialComplex c(3, {{1, 2}, {1}});
    CHECK(c.facets() == std::vector<FaceSet>{{1, 2}});
    CHECK(c.normalized());

    const SimplicialComplex v = fixtures::villarreal();
    CHECK(v.facetCount() == 10);
    CHECK_FALSE(v.normalized());

    const SimplicialComplex full(5, subsetsOfSize(FaceSet::interval(5), 3));
    CHECK(full.facetCount() == 10);
    CHECK(full.isPure());
    CHECK(full.dimension() == 2);
}

TEST_CASE("construction rejects bad input") {
    CHECK_THROWS_AS(SimplicialComplex(3, {}), InputError);
    CHECK_THROWS_AS(SimplicialComplex(3, {{1, 4}}), InputError);
    CHECK_THROWS_AS(SimplicialComplex(0, {{1}}), InputError);
    CHECK_THROWS_AS(SimplicialComplex(3, {FaceSet{}}), InputError);
}

TEST_CASE("dimension and purity") {
    const SimplicialComplex v = fixtures::villarreal();
    CHECK(v.dimension() == 3);
    CHECK_FALSE(v.isPure());
    const SimplicialComplex path(3, {{1, 2}, {2, 3}});
    CHECK(path.dimension() == 1);
    CHECK(path.isPure());
    CHECK(fixtures::borel145().dimension() == 2);
    CHECK(fixtures::borel145().isPure());
}

TEST_CASE("skeletons") {
    const SimplicialComplex simplex(3, {{1, 2, 3}});
    CHECK(skeleton(simplex, 1).facets() == std::vector<FaceSet>{{1, 2}, {1, 3}, {2, 3}});

    const SimplicialComplex s = skeleton(fixtures::borel145(), 1);
    std::vector<FaceSet> expected;
    for (FaceSet f : subsetsOfSize(FaceSet::interval(5), 2)) {
        const auto l = f.labels();
        if (l[0] <= 4 && l[1] <= 5) expected.push_back(f);
    }
    CHECK(s.facets() == expected);

    const SimplicialComplex points = skeleton(fixtures::villarreal(), 0);
    CHECK(points.facetCount() == 8);
    CHECK(points.dimension() == 0);

    CHECK_THROWS_AS(skeleton(simplex, 3), InputError);
    CHECK_THROWS_AS(skeleton(simplex, -1), InputError);
}

TEST_CASE("restriction") {
    const SimplicialComplex path(3, {{1, 2}, {2, 3}});
    const auto r = restriction(path, FaceSet{1, 2});
    REQUIRE(r.has_value());
    CHECK(r->facets() == std::vector<FaceSet>{{1, 2}});
    const auto f2 = restriction(fixtures::figure2(), FaceSet{1, 2, 4, 5, 6});
    REQUIRE(f2.has_value());
    CHECK(f2->facets() == std::vector<FaceSet>{{1, 2, 6}, {4, 5, 6}});
    CHECK_FALSE(restriction(fixtures::figure2(), FaceSet{1, 3, 5}).has_value());
    CHECK(*restriction(fixtures::villarreal(), FaceSet::interval(8)) == fixtures::villarreal());
}

TEST_CASE("facet ideals") {
    CHECK(facetIdeal(SimplicialComplex(3, {{1, 2}, {2, 3}})).toString() == "(x1*x2, x2*x3)");
    CHECK(facetIdeal(fixtures::figure1()) ==
          MonomialIdeal::fromSupports(7, {{1, 2, 7}, {2, 3}, {3, 4}, {4, 5, 7}, {1, 5, 6}}));
    CHECK(facetIdeal(fixtures::borel234()).toString() == "(x1*x2*x3, x1*x2*x4, x1*x3*x4, x2*x3*x4)");
}

TEST_CASE("complex invariants on random instances") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 6);
        const SimplicialComplex c = gen::randomComplex(rng, n, 6, n);
        const int dim = c.dimension();

        // Canonical storage: permuting the input does not change the value.
        std::vector<FaceSet> faces = c.facets();
        std::shuffle(faces.begin(), faces.end(), rng);
        CHECK(SimplicialComplex(n, faces) == c);

        for (int q = 0; q <= dim; ++q) {
            const SimplicialComplex s = skeleton(c, q);
            CHECK(oracle::toMasks(s.facets()) == oracle::sorted(oracle::skeleton(oracle::facetMasks(c), q)));
            for (int p = 0; p <= q; ++p) CHECK(skeleton(s, p) == skeleton(c, p));
            if (c.isPure()) CHECK(s.isPure());
        }

        const FaceSet w = FaceSet::fromMask(rng() & ((1U << n) - 1));
        const auto r = restriction(c, w);
        if (r) {
            CHECK(restriction(*r, w) == r);
            for (FaceSet f : r->facets()) CHECK(f.isSubsetOf(w));
        } else {
            for (FaceSet f : c.facets()) CHECK_FALSE(f.isSubsetOf(w));
        }
    }
}
