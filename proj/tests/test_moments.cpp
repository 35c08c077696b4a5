#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gue/moments.hpp"

#include <cmath>
#include <vector>

using namespace gue;

namespace {

BivariatePolynomial gammaNu(int g, int v) { return BivariatePolynomial::monomial(1, g, v); }

// All multisets of positive integers summing to exactly `total`.
std::vector<std::vector<int>> partitionsOf(int total, int maxPart) {
    if (total == 0) return {{}};
    std::vector<std::vector<int>> out;
    for (int part = std::min(total, maxPart); part >= 1; --part)
        for (auto rest : partitionsOf(total - part, part)) {
            rest.insert(rest.begin(), part);
            out.push_back(std::move(rest));
        }
    return out;
}

} // namespace

TEST_CASE("index multisets canonicalize") {
    CHECK(IndexMultiset({1, 3}) == IndexMultiset({3, 1}));
    CHECK(IndexMultiset({3, 1}).indices() == std::vector<int>{3, 1});
    CHECK(IndexMultiset({0, 2, 0}).zeroCount() == 2);
    CHECK(IndexMultiset({0, 2, 0}).withoutZeros() == IndexMultiset({2}));
    CHECK(IndexMultiset({2, 3, 5}).evenCount() == 1);
    CHECK(IndexMultiset({2, 3, 5}).halfTotal() == 5);
    CHECK(IndexMultiset::merged(IndexMultiset({1}), IndexMultiset({3})) == IndexMultiset({1, 3}));
    CHECK_THROWS_AS(IndexMultiset(std::vector<int>{-1}), std::invalid_argument);
    CHECK_THROWS_AS(IndexMultiset({3}).halfTotal(), std::invalid_argument);
}

TEST_CASE("enumeration route on the worked examples") {
    CHECK(momentByEnumeration(IndexMultiset({3})).isZero());
    CHECK(momentByEnumeration(IndexMultiset({4})) == gammaNu(0, 3).scale(2) + gammaNu(1, 1));
    CHECK(momentByEnumeration(IndexMultiset({2, 2})) == gammaNu(0, 4) + gammaNu(1, 2).scale(2));
    CHECK(momentByEnumeration(IndexMultiset{}) == BivariatePolynomial::constant(1));
    CHECK(momentByEnumeration(IndexMultiset({0, 0})) == gammaNu(0, 2));
}

TEST_CASE("recursion route on the worked examples") {
    CHECK(momentByRecursion(IndexMultiset({2})) == gammaNu(0, 2));
    CHECK(momentByRecursion(IndexMultiset({1, 3})) == gammaNu(1, 2).scale(3));
    CHECK(momentByRecursion(IndexMultiset({3, 3})) ==
          gammaNu(1, 3).scale(12) + gammaNu(2, 1).scale(3));

    // p_{2,2,2} = v^2 (v^2 + 2g) (v^2 + 4g) expanded.
    const auto expected =
        gammaNu(0, 2) * (gammaNu(0, 2) + gammaNu(1, 0).scale(2)) *
        (gammaNu(0, 2) + gammaNu(1, 0).scale(4));
    CHECK(momentByRecursion(IndexMultiset({2, 2, 2})) == expected);
}

TEST_CASE("the recursion agrees with enumeration up to sum 10") {
    MomentCache cache;
    for (int total = 0; total <= 10; ++total) {
        for (const auto& parts : partitionsOf(total, total)) {
            const IndexMultiset ks(parts);
            CHECK(momentByRecursion(ks, cache) == momentByEnumeration(ks));
        }
    }
}

TEST_CASE("zero indices contribute one boundary factor each") {
    MomentCache cache;
    const std::vector<std::vector<int>> bases = {{2}, {4}, {2, 2}, {1, 3}, {3, 3}};
    for (const auto& base : bases) {
        std::vector<int> padded = base;
        padded.push_back(0);
        CHECK(momentByRecursion(IndexMultiset(padded), cache) ==
              momentByRecursion(IndexMultiset(base), cache).shiftNu(1));
        CHECK(momentByEnumeration(IndexMultiset(padded)) ==
              momentByEnumeration(IndexMultiset(base)).shiftNu(1));
    }
}

TEST_CASE("structural invariants over a sweep") {
    MomentCache cache;
    for (int total = 2; total <= 10; total += 2) {
        for (const auto& parts : partitionsOf(total, total)) {
            const IndexMultiset ks(parts);
            const auto p = momentByRecursion(ks, cache);
            const auto pNu = p.setGammaOne();

            const int n = ks.count();
            const int l = ks.halfTotal();

            // Every coefficient counts diagrams: positive, on the 2g+b = n+l line.
            BigInt total2 = 0;
            for (const auto& [key, coeff] : p.terms()) {
                CHECK(coeff > 0);
                CHECK(2 * key.gammaExp + key.nuExp == n + l);
                total2 += coeff;
            }
            CHECK(total2 == doubleFactorialOdd(l));

            // Degree and parity of the boundary polynomial.
            const int expectedDegree = ks.halfTotal() + ks.evenCount();
            CHECK(pNu.degree() == expectedDegree);
            for (const auto& [e, c] : pNu.coeffs()) CHECK((expectedDegree - e) % 2 == 0);
        }
    }
}

TEST_CASE("expectations at small rank") {
    CHECK(expectation(IndexMultiset({2}), 7) == 49);
    CHECK(expectation(IndexMultiset({1, 1, 1, 1}), 3) == 27);
    CHECK(expectation(IndexMultiset({6}), 1) == 15);
    CHECK(expectation(IndexMultiset({3}), 9) == 0);
    CHECK_THROWS_AS(expectation(IndexMultiset({2}), 0), std::invalid_argument);
}

TEST_CASE("finite-N statistics of the worked pairs") {
    MomentCache cache;

    SUBCASE("identical variables have correlation one") {
        for (const BigInt& n : {BigInt(1), BigInt(5), BigInt(100)}) {
            const auto stats =
                finiteNStatistics(IndexMultiset({2}), IndexMultiset({2}), n, cache);
            REQUIRE(stats.correlationDefined);
            CHECK(stats.correlationSquared == 1);
            CHECK(stats.correlationSign == 1);
            CHECK(stats.correlation == doctest::Approx(1.0));
        }
    }

    SUBCASE("Tr X against Tr X^3 at N = 2") {
        const auto stats = finiteNStatistics(IndexMultiset({1}), IndexMultiset({3}), 2, cache);
        CHECK(stats.covariance == 12);
        CHECK(stats.varianceF == 2);
        CHECK(stats.varianceG == 102);
        REQUIRE(stats.correlationDefined);
        CHECK(stats.correlationSquared == Rational(144, 204));
        CHECK(stats.correlation == doctest::Approx(12.0 / std::sqrt(204.0)));
    }

    SUBCASE("opposite parities are uncorrelated at every N") {
        for (const BigInt& n : {BigInt(1), BigInt(3), BigInt(10)}) {
            const auto stats =
                finiteNStatistics(IndexMultiset({1}), IndexMultiset({2}), n, cache);
            REQUIRE(stats.correlationDefined);
            CHECK(stats.covariance == 0);
            CHECK(stats.correlationSign == 0);
            CHECK(stats.correlation == 0.0);
        }
    }

    SUBCASE("constant variables have no correlation") {
        const auto stats = finiteNStatistics(IndexMultiset({0}), IndexMultiset({2}), 5, cache);
        CHECK(stats.varianceF == 0);
        CHECK_FALSE(stats.correlationDefined);
    }
}
