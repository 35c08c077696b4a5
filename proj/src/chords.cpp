#include "gue/chords.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <string>
#include <thread>

namespace gue {

CapExceededError::CapExceededError(int requestedPoints, int maxPoints)
    : std::runtime_error("chord enumeration over " + std::to_string(requestedPoints) +
                         " points exceeds the cap of " + std::to_string(maxPoints) +
                         " (raise it with --cap)"),
      requestedPoints_(requestedPoints),
      maxPoints_(maxPoints) {}

ChordDiagram ChordDiagram::of(std::vector<int> mate) {
    ChordDiagram c;
    c.points = static_cast<int>(mate.size());
    c.mate = std::move(mate);
    if (!c.valid()) throw std::invalid_argument("ChordDiagram: not a perfect matching");
    return c;
}

bool ChordDiagram::valid() const {
    if (points % 2 != 0 || static_cast<int>(mate.size()) != points) return false;
    for (int i = 0; i < points; ++i) {
        const int j = mate[static_cast<std::size_t>(i)];
        if (j < 0 || j >= points || j == i) return false;
        if (mate[static_cast<std::size_t>(j)] != i) return false;
    }
    return true;
}

VertexProfile::VertexProfile(std::vector<int> ks) : ks_(std::move(ks)) {
    for (int k : ks_)
        if (k < 1) throw std::invalid_argument("VertexProfile: entries must be positive");
    totalPoints_ = std::accumulate(ks_.begin(), ks_.end(), 0);
    if (totalPoints_ % 2 != 0)
        throw std::invalid_argument("VertexProfile: sum of valencies must be even");
}

BigInt EtaTable::total() const {
    BigInt t = 0;
    for (const auto& [key, count] : counts) t += count;
    return t;
}

BigInt chordDiagramCount(int l) {
    if (l < 0) throw std::invalid_argument("chordDiagramCount: negative l");
    return doubleFactorialOdd(l);
}

namespace {

// Depth-first matching: always pair the smallest unmatched point, trying its
// partner in increasing order. The diagram object is reused between visits.
void enumerate(ChordDiagram& c, int from, const std::function<void(const ChordDiagram&)>& visit) {
    int i = from;
    while (i < c.points && c.mate[static_cast<std::size_t>(i)] != -1) ++i;
    if (i == c.points) {
        visit(c);
        return;
    }
    for (int j = i + 1; j < c.points; ++j) {
        if (c.mate[static_cast<std::size_t>(j)] != -1) continue;
        c.mate[static_cast<std::size_t>(i)] = j;
        c.mate[static_cast<std::size_t>(j)] = i;
        enumerate(c, i + 1, visit);
        c.mate[static_cast<std::size_t>(i)] = -1;
        c.mate[static_cast<std::size_t>(j)] = -1;
    }
}

ChordDiagram blankDiagram(int points) {
    ChordDiagram c;
    c.points = points;
    c.mate.assign(static_cast<std::size_t>(points), -1);
    return c;
}

} // namespace

void forEachChordDiagram(int l, const std::function<void(const ChordDiagram&)>& visit,
                         const EnumerationLimits& limits) {
    if (l < 0) throw std::invalid_argument("forEachChordDiagram: negative l");
    if (2 * l > limits.maxPoints) throw CapExceededError(2 * l, limits.maxPoints);
    ChordDiagram c = blankDiagram(2 * l);
    if (l == 0) {
        visit(c);
        return;
    }
    enumerate(c, 0, visit);
}

void forEachChordDiagramWithFirstPartner(int l, int firstPartner,
                                         const std::function<void(const ChordDiagram&)>& visit) {
    if (l < 1 || firstPartner < 1 || firstPartner > 2 * l - 1)
        throw std::invalid_argument("forEachChordDiagramWithFirstPartner: bad arguments");
    ChordDiagram c = blankDiagram(2 * l);
    c.mate[0] = firstPartner;
    c.mate[static_cast<std::size_t>(firstPartner)] = 0;
    enumerate(c, 1, visit);
}

std::vector<ChordDiagram> enumerateChordDiagrams(int l, const EnumerationLimits& limits) {
    std::vector<ChordDiagram> out;
    forEachChordDiagram(
        l, [&](const ChordDiagram& c) { out.push_back(c); }, limits);
    return out;
}

RibbonGraph buildGraph(const ChordDiagram& c, const VertexProfile& profile) {
    if (profile.totalPoints() != c.points)
        throw std::invalid_argument("buildGraph: profile sum does not match diagram size");
    std::vector<int> sigma(static_cast<std::size_t>(c.points));
    int start = 0;
    for (int k : profile.ks()) {
        for (int i = 0; i < k; ++i)
            sigma[static_cast<std::size_t>(start + i)] = start + (i + 1) % k;
        start += k;
    }
    return RibbonGraph(Permutation(std::move(sigma)), Permutation(c.mate));
}

namespace {

// (g, b) of the graph built on a diagram, without constructing the graph:
// beta(x) = sigma[mate[x]], vertices = n, edges = l.
struct TopologyCounter {
    const std::vector<int>& sigma;
    std::vector<char> seen;

    explicit TopologyCounter(const std::vector<int>& sigmaImages)
        : sigma(sigmaImages), seen(sigmaImages.size(), 0) {}

    std::pair<int, int> genusBoundary(const ChordDiagram& c, int vertexCount) {
        std::fill(seen.begin(), seen.end(), 0);
        int boundaries = 0;
        for (int startPoint = 0; startPoint < c.points; ++startPoint) {
            if (seen[static_cast<std::size_t>(startPoint)]) continue;
            ++boundaries;
            int x = startPoint;
            do {
                seen[static_cast<std::size_t>(x)] = 1;
                x = sigma[static_cast<std::size_t>(c.mate[static_cast<std::size_t>(x)])];
            } while (x != startPoint);
        }
        const int edges = c.points / 2;
        const int genus = (vertexCount + edges - boundaries) / 2;
        return {genus, boundaries};
    }
};

std::vector<int> sigmaImagesOf(const VertexProfile& profile) {
    std::vector<int> sigma(static_cast<std::size_t>(profile.totalPoints()));
    int start = 0;
    for (int k : profile.ks()) {
        for (int i = 0; i < k; ++i)
            sigma[static_cast<std::size_t>(start + i)] = start + (i + 1) % k;
        start += k;
    }
    return sigma;
}

using RawCounts = std::map<std::pair<int, int>, std::uint64_t>;

RawCounts countPartition(const std::vector<int>& sigma, int vertexCount, int l, int firstPartner) {
    RawCounts counts;
    TopologyCounter counter(sigma);
    forEachChordDiagramWithFirstPartner(l, firstPartner, [&](const ChordDiagram& c) {
        ++counts[counter.genusBoundary(c, vertexCount)];
    });
    return counts;
}

} // namespace

EtaTable etaTable(const VertexProfile& profile, const EnumerationLimits& limits, int threads) {
    const int points = profile.totalPoints();
    if (points > limits.maxPoints) throw CapExceededError(points, limits.maxPoints);

    EtaTable table;
    table.profile = profile.ks();
    if (points == 0) return table;

    const int l = points / 2;
    const int n = profile.vertexCount();
    const std::vector<int> sigma = sigmaImagesOf(profile);

    std::vector<RawCounts> partials(static_cast<std::size_t>(2 * l - 1));
    if (threads <= 1 || 2 * l - 1 == 1) {
        for (int p = 1; p <= 2 * l - 1; ++p)
            partials[static_cast<std::size_t>(p - 1)] = countPartition(sigma, n, l, p);
    } else {
        const int workerCount = std::min(threads, 2 * l - 1);
        std::vector<std::thread> workers;
        workers.reserve(static_cast<std::size_t>(workerCount));
        std::atomic<int> nextPartner{1};
        for (int w = 0; w < workerCount; ++w) {
            workers.emplace_back([&]() {
                for (;;) {
                    const int p = nextPartner.fetch_add(1);
                    if (p > 2 * l - 1) return;
                    partials[static_cast<std::size_t>(p - 1)] = countPartition(sigma, n, l, p);
                }
            });
        }
        for (auto& w : workers) w.join();
    }

    for (const auto& partial : partials)
        for (const auto& [key, count] : partial) table.counts[key] += count;
    return table;
}

int defaultThreadCount() {
    const char* env = std::getenv("GUE_THREADS");
    if (env == nullptr) return 1;
    const long parsed = std::strtol(env, nullptr, 10);
    if (parsed < 1) return 1;
    if (parsed > 64) return 64;
    return static_cast<int>(parsed);
}

} // namespace gue
