#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gue/chords.hpp"

#include <set>
#include <stdexcept>

using namespace gue;

TEST_CASE("counts are odd double factorials") {
    CHECK(chordDiagramCount(0) == 1);
    CHECK(chordDiagramCount(1) == 1);
    CHECK(chordDiagramCount(2) == 3);
    CHECK(chordDiagramCount(5) == 945);
    CHECK(chordDiagramCount(10) == BigInt("654729075"));
}

TEST_CASE("enumeration yields the canonical order for l = 2") {
    const auto diagrams = enumerateChordDiagrams(2);
    REQUIRE(diagrams.size() == 3);
    CHECK(diagrams[0].mate == std::vector<int>{1, 0, 3, 2});
    CHECK(diagrams[1].mate == std::vector<int>{2, 3, 0, 1});
    CHECK(diagrams[2].mate == std::vector<int>{3, 2, 1, 0});
}

TEST_CASE("enumeration is duplicate-free and complete up to 10 points") {
    for (int l = 0; l <= 5; ++l) {
        std::set<std::vector<int>> seen;
        std::size_t visits = 0;
        forEachChordDiagram(l, [&](const ChordDiagram& c) {
            CHECK(c.valid());
            seen.insert(c.mate);
            ++visits;
        });
        CHECK(BigInt(visits) == chordDiagramCount(l));
        CHECK(seen.size() == visits);
    }
}

TEST_CASE("the partner partition covers the enumeration") {
    const int l = 3;
    std::set<std::vector<int>> fromParts;
    for (int partner = 1; partner <= 2 * l - 1; ++partner)
        forEachChordDiagramWithFirstPartner(
            l, partner, [&](const ChordDiagram& c) { fromParts.insert(c.mate); });
    std::set<std::vector<int>> fromFull;
    forEachChordDiagram(l, [&](const ChordDiagram& c) { fromFull.insert(c.mate); });
    CHECK(fromParts == fromFull);
    CHECK(BigInt(fromFull.size()) == chordDiagramCount(l));
}

TEST_CASE("the cap guards enumeration") {
    CHECK_THROWS_AS(forEachChordDiagram(11, [](const ChordDiagram&) {}), CapExceededError);
    EnumerationLimits tight{.maxPoints = 4};
    CHECK_THROWS_AS(forEachChordDiagram(3, [](const ChordDiagram&) {}, tight), CapExceededError);
    EnumerationLimits wide{.maxPoints = 6};
    CHECK_NOTHROW(forEachChordDiagram(3, [](const ChordDiagram&) {}, wide));
}

TEST_CASE("profile validation") {
    CHECK_THROWS_AS(VertexProfile({2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(VertexProfile({3}), std::invalid_argument);
    CHECK_NOTHROW(VertexProfile({3, 1}));
}

TEST_CASE("built graphs match the hand computations") {
    const VertexProfile single2({2});
    const auto g1 = buildGraph(ChordDiagram::of({1, 0}), single2).invariants();
    CHECK(g1.boundaries == 2);
    CHECK(g1.genus == 0);

    const VertexProfile single4({4});
    const auto g2 = buildGraph(ChordDiagram::of({2, 3, 0, 1}), single4).invariants();
    CHECK(g2.boundaries == 1);
    CHECK(g2.genus == 1);

    const VertexProfile ones({1, 1});
    const auto g3 = buildGraph(ChordDiagram::of({1, 0}), ones).invariants();
    CHECK(g3.vertices == 2);
    CHECK(g3.edges == 1);
    CHECK(g3.boundaries == 1);
    CHECK(g3.genus == 1);

    CHECK_THROWS_AS(buildGraph(ChordDiagram::of({1, 0}), single4), std::invalid_argument);
}

TEST_CASE("eta tables of the worked profiles") {
    const EtaTable t2 = etaTable(VertexProfile({2}));
    CHECK(t2.counts == std::map<std::pair<int, int>, BigInt>{{{0, 2}, 1}});

    const EtaTable t4 = etaTable(VertexProfile({4}));
    CHECK(t4.counts == std::map<std::pair<int, int>, BigInt>{{{0, 3}, 2}, {{1, 1}, 1}});

    const EtaTable tOnes = etaTable(VertexProfile({1, 1, 1, 1}));
    CHECK(tOnes.counts == std::map<std::pair<int, int>, BigInt>{{{2, 2}, 3}});
}

TEST_CASE("eta table totals and the topological constraint") {
    const std::vector<std::vector<int>> profiles = {{2}, {4}, {2, 2}, {3, 1}, {4, 2}, {3, 3, 2}};
    for (const auto& ks : profiles) {
        const VertexProfile profile(ks);
        const EtaTable table = etaTable(profile);
        const int n = profile.vertexCount();
        const int l = profile.totalPoints() / 2;
        CHECK(table.total() == chordDiagramCount(l));
        for (const auto& [gb, count] : table.counts) {
            CHECK(count > 0);
            CHECK(2 * gb.first + gb.second == n + l);
        }
    }
}

TEST_CASE("eta tables are invariant under profile reordering") {
    const EtaTable a = etaTable(VertexProfile({3, 1, 2, 2}));
    const EtaTable b = etaTable(VertexProfile({2, 3, 2, 1}));
    CHECK(a.counts == b.counts);
}

TEST_CASE("parallel and serial tables agree") {
    const VertexProfile profile({3, 3, 2});
    const EtaTable serial = etaTable(profile, {}, 1);
    const EtaTable parallel = etaTable(profile, {}, 4);
    CHECK(serial.counts == parallel.counts);
}

TEST_CASE("diagram validation") {
    CHECK_THROWS_AS(ChordDiagram::of({0, 1}), std::invalid_argument);  // fixed points
    CHECK_THROWS_AS(ChordDiagram::of({1, 0, 3}), std::invalid_argument);
    CHECK(ChordDiagram::of({}).valid());
}
