#include <doctest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "vca/complex.hpp"
#include "vca/error.hpp"
#include "vca/ideal.hpp"

using namespace vca;

namespace {

Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }

MonomialIdeal sq(int n, std::vector<FaceSet> supports) { return MonomialIdeal::fromSupports(n, supports); }

/// Squarefree products of k generators, by literal enumeration of k-tuples.
std::vector<oracle::Mask> literalSquarefreePower(const std::vector<oracle::Mask>& gens, int k) {
    std::vector<oracle::Mask> out;
    std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
    while (true) {
        oracle::Mask product = 0;
        bool squarefree = true;
        for (std::size_t i : idx) {
            if (product & gens[i]) squarefree = false;
            product |= gens[i];
        }
        if (squarefree) out.push_back(product);
        std::size_t pos = idx.size();
        while (pos > 0 && idx[pos - 1] + 1 == gens.size()) --pos;
        if (pos == 0) break;
        ++idx[pos - 1];
        std::fill(idx.begin() + static_cast<long>(pos), idx.end(), 0);
    }
    return oracle::minimalMasks(out);
}

}  // namespace

TEST_CASE("monomials") {
    const Monomial m = mono({1, 0, 2});
    CHECK(m.toString() == "x1*x3^2");
    CHECK(m.toVectorString() == "[1,0,2]");
    CHECK(m.degree() == 3);
    CHECK_FALSE(m.isSquarefree());
    CHECK(mono({0, 0}).toString() == "1");
    CHECK(mono({1, 0}).divides(mono({1, 1})));
    CHECK(lcm(mono({2, 0, 1}), mono({1, 1, 1})) == mono({2, 1, 1}));
}

TEST_CASE("minimalize") {
    CHECK(MonomialIdeal::minimalize(2, {mono({1, 0}), mono({1, 1})}).toString() == "(x1)");
    CHECK(MonomialIdeal::minimalize(4, {mono({1, 1, 0, 1}), mono({1, 0, 1, 1}), mono({1, 1, 1, 1})}).toString() ==
          "(x1*x2*x4, x1*x3*x4)");
    CHECK(MonomialIdeal::minimalize(2, {mono({0, 2}), mono({1, 1}), mono({2, 0})}).toString() ==
          "(x1^2, x1*x2, x2^2)");
    CHECK_THROWS_AS(MonomialIdeal::minimalize(2, {mono({0, 0})}), InputError);
    CHECK_THROWS_AS(MonomialIdeal::minimalize(2, {mono({1, 0, 0})}), InputError);
}

TEST_CASE("intersection, product and power") {
    CHECK(intersect(sq(2, {{1}}), sq(2, {{2}})).toString() == "(x1*x2)");
    const MonomialIdeal l1 = sq(5, {{1, 2, 3, 4}, {1, 2, 3, 5}, {1, 2, 4, 5}, {1, 3, 4, 5}, {2, 3, 4, 5}});
    const MonomialIdeal l2 = sq(5, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
    CHECK(intersect(l1, l2).toString() ==
          "(x1*x2*x3*x4, x1*x2*x3*x5, x1*x2*x4*x5, x1*x3*x4*x5, x2*x3*x4*x5)");
    CHECK(power(MonomialIdeal::prime(2, {1, 2}), 2).toString() == "(x1^2, x1*x2, x2^2)");
    CHECK(multiply(sq(2, {{1}}), sq(2, {{2}})).toString() == "(x1*x2)");
    CHECK_THROWS_AS(intersect(sq(2, {{1}}), sq(3, {{1}})), InputError);
}

TEST_CASE("squarefree part and squarefree powers") {
    CHECK(squarefreePart(MonomialIdeal::minimalize(3, {mono({2, 0, 0}), mono({0, 1, 1})})).toString() == "(x2*x3)");
    CHECK(squarefreePart(MonomialIdeal::minimalize(1, {mono({2})})).isZero());
    CHECK(squarefreePower(MonomialIdeal::prime(2, {1, 2}), 2).toString() == "(x1*x2)");
    CHECK(squarefreePower(MonomialIdeal::prime(3, {1, 2, 3}), 2).toString() == "(x1*x2, x1*x3, x2*x3)");
    CHECK(squarefreePower(sq(2, {{1, 2}}), 2).isZero());
    CHECK(squarefreePower(sq(2, {{1, 2}}), 2).toString() == "(0)");
}

TEST_CASE("Alexander duals") {
    CHECK(alexanderDual(sq(3, {{1, 2}, {2, 3}})).toString() == "(x2, x1*x3)");
    const MonomialIdeal i = facetIdeal(fixtures::figure2());
    CHECK(alexanderDual(alexanderDual(i)) == i);
    // Facets of B({2,4}) are {1,2},{1,3},{1,4},{2,3},{2,4}; the dual is B({1,2},{2,3,4}).
    const MonomialIdeal borel = sq(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
    CHECK(alexanderDual(borel).toString() == "(x1*x2, x1*x3*x4, x2*x3*x4)");
    CHECK_THROWS_AS(alexanderDual(MonomialIdeal::minimalize(1, {mono({2})})), InputError);
}

TEST_CASE("membership and equality") {
    CHECK(sq(3, {{1, 2}}).contains(mono({1, 1, 1})));
    CHECK_FALSE(sq(3, {{1, 2}}).contains(mono({1, 0, 0})));
    CHECK(equalsIdeal(intersect(MonomialIdeal::prime(3, {1, 2}), MonomialIdeal::prime(3, {2, 3})),
                      sq(3, {{2}, {1, 3}})));
}

TEST_CASE("ideal laws on random squarefree ideals") {
    std::mt19937 rng(7);
    auto randomIdeal = [&](int n) {
        std::vector<FaceSet> supports;
        const int m = 1 + static_cast<int>(rng() % 4);
        for (int i = 0; i < m; ++i) {
            oracle::Mask s = 0;
            while (s == 0) s = rng() & ((1U << n) - 1);
            supports.push_back(FaceSet::fromMask(s));
        }
        return MonomialIdeal::fromSupports(n, supports);
    };
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 6);
        const MonomialIdeal a = randomIdeal(n);
        const MonomialIdeal b = randomIdeal(n);
        const MonomialIdeal c = randomIdeal(n);
        CHECK(intersect(a, b) == intersect(b, a));
        CHECK(multiply(a, b) == multiply(b, a));
        CHECK(intersect(intersect(a, b), c) == intersect(a, intersect(b, c)));
        CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
        CHECK(alexanderDual(alexanderDual(a)) == a);
        CHECK(alexanderDual(add(a, b)) == intersect(alexanderDual(a), alexanderDual(b)));

        // Minimal transversals against exhaustive search.
        CHECK(oracle::supports(alexanderDual(a)) == oracle::minimalHitting(oracle::supports(a), n));

        // Squarefree powers against literal k-fold products.
        for (int k = 1; k <= 3; ++k) {
            CHECK(oracle::supports(squarefreePower(a, k)) ==
                  oracle::sorted(literalSquarefreePower(oracle::supports(a), k)));
            CHECK(squarefreePower(a, k) == squarefreePart(power(a, k)));
        }

        std::vector<Monomial> gens = multiply(a, b).generators();
        std::shuffle(gens.begin(), gens.end(), rng);
        CHECK(MonomialIdeal::minimalize(n, gens) == multiply(a, b));
    }
}
