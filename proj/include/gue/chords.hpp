#pragma once

#include "gue/bigint.hpp"
#include "gue/ribbon_graph.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gue {

/// Thrown when an enumeration would exceed the configured cap on the number
/// of points (and hence on the (2l-1)!! diagrams to visit).
class CapExceededError : public std::runtime_error {
public:
    CapExceededError(int requestedPoints, int maxPoints);
    int requestedPoints() const { return requestedPoints_; }
    int maxPoints() const { return maxPoints_; }

private:
    int requestedPoints_;
    int maxPoints_;
};

/// Guard for chord-diagram enumeration. The default cap of 20 points allows
/// 19!! = 654,729,075 diagrams; raise it deliberately for larger runs.
struct EnumerationLimits {
    int maxPoints = 20;
};

/// A perfect matching of {0,...,points-1}: mate[i] is the partner of i.
struct ChordDiagram {
    int points = 0;
    std::vector<int> mate;

    /// Validating factory; throws unless mate is a fixed-point-free involution.
    static ChordDiagram of(std::vector<int> mate);

    bool valid() const;
};

/// Cyclic vertex valencies (k_1,...,k_n): every entry positive, sum even.
/// Zero exponents never reach this layer; the moments module strips them and
/// accounts a boundary factor per zero.
class VertexProfile {
public:
    explicit VertexProfile(std::vector<int> ks);

    const std::vector<int>& ks() const { return ks_; }
    int vertexCount() const { return static_cast<int>(ks_.size()); }
    int totalPoints() const { return totalPoints_; }

    bool operator==(const VertexProfile&) const = default;

private:
    std::vector<int> ks_;
    int totalPoints_ = 0;
};

/// Count of chord diagrams per (genus, boundary) class of the graphs built
/// on a fixed vertex profile. Populated cells satisfy 2g + b = n + l and the
/// counts sum to (2l-1)!!.
struct EtaTable {
    std::vector<int> profile;
    std::map<std::pair<int, int>, BigInt> counts; // (g, b) -> diagram count

    BigInt total() const;
};

/// Number of chord diagrams on 2l points, (2l-1)!!.
BigInt chordDiagramCount(int l);

/// Visits every chord diagram on 2l points exactly once, in the canonical
/// order: the smallest unmatched point is always paired next, and its partner
/// runs over the remaining points in increasing order. The diagram passed to
/// the visitor is reused between calls; copy it to keep it.
void forEachChordDiagram(int l, const std::function<void(const ChordDiagram&)>& visit,
                         const EnumerationLimits& limits = {});

/// Sub-stream of forEachChordDiagram restricted to diagrams pairing point 0
/// with `firstPartner` (1 <= firstPartner <= 2l-1). The 2l-1 sub-streams
/// partition the full enumeration and may run concurrently.
void forEachChordDiagramWithFirstPartner(int l, int firstPartner,
                                         const std::function<void(const ChordDiagram&)>& visit);

/// Materialized enumeration; intended for small l.
std::vector<ChordDiagram> enumerateChordDiagrams(int l, const EnumerationLimits& limits = {});

/// The ribbon graph whose vertices are consecutive cycles of the profile
/// lengths on half-edges 0..2l-1 and whose edges are the chords of c.
RibbonGraph buildGraph(const ChordDiagram& c, const VertexProfile& profile);

/// Tabulates (g, b) classes over all chord diagrams of the profile.
/// With threads > 1 the enumeration is partitioned on the partner of point 0
/// and the per-worker tables are merged; the result is identical to the
/// single-threaded table.
EtaTable etaTable(const VertexProfile& profile, const EnumerationLimits& limits = {},
                  int threads = 1);

/// Default worker count: the GUE_THREADS environment variable (clamped to
/// [1,64]) or 1 when unset.
int defaultThreadCount();

} // namespace gue
