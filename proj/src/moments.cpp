#include "gue/moments.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace gue {

IndexMultiset::IndexMultiset(std::vector<int> ks) : ks_(std::move(ks)) {
    for (int k : ks_)
        if (k < 0) throw std::invalid_argument("IndexMultiset: negative index");
    std::sort(ks_.begin(), ks_.end(), std::greater<int>());
}

int IndexMultiset::total() const {
    return std::accumulate(ks_.begin(), ks_.end(), 0);
}

int IndexMultiset::halfTotal() const {
    const int t = total();
    if (t % 2 != 0) throw std::invalid_argument("IndexMultiset: odd total");
    return t / 2;
}

int IndexMultiset::evenCount() const {
    int q = 0;
    for (int k : ks_)
        if (k % 2 == 0) ++q;
    return q;
}

int IndexMultiset::zeroCount() const {
    int z = 0;
    for (int k : ks_)
        if (k == 0) ++z;
    return z;
}

IndexMultiset IndexMultiset::withoutZeros() const {
    std::vector<int> kept;
    kept.reserve(ks_.size());
    for (int k : ks_)
        if (k != 0) kept.push_back(k);
    return IndexMultiset(std::move(kept));
}

IndexMultiset IndexMultiset::merged(const IndexMultiset& a, const IndexMultiset& b) {
    std::vector<int> all = a.ks_;
    all.insert(all.end(), b.ks_.begin(), b.ks_.end());
    return IndexMultiset(std::move(all));
}

const BivariatePolynomial* MomentCache::find(const IndexMultiset& key) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? nullptr : &it->second;
}

void MomentCache::insert(const IndexMultiset& key, BivariatePolynomial value) {
    entries_.emplace(key, std::move(value));
}

BivariatePolynomial momentByEnumeration(const IndexMultiset& ks, const EnumerationLimits& limits,
                                        int threads) {
    if (!ks.totalIsEven()) return BivariatePolynomial{};
    const IndexMultiset positive = ks.withoutZeros();
    const int nuFactor = ks.zeroCount();
    if (positive.empty())
        return BivariatePolynomial::monomial(1, 0, nuFactor);

    const EtaTable table = etaTable(VertexProfile(positive.indices()), limits, threads);
    BivariatePolynomial p;
    for (const auto& [gb, count] : table.counts) p.addTerm(gb.first, gb.second, count);
    return p.shiftNu(nuFactor);
}

namespace {

BivariatePolynomial recurse(const std::vector<int>& sortedPositive, MomentCache& cache) {
    // sortedPositive: descending, all entries >= 1, even total.
    if (sortedPositive.empty()) return BivariatePolynomial::constant(1);

    const IndexMultiset key(sortedPositive);
    if (const BivariatePolynomial* hit = cache.find(key)) return *hit;

    const int k1 = sortedPositive.front();
    const std::vector<int> rest(sortedPositive.begin() + 1, sortedPositive.end());

    auto normalizedCall = [&cache](std::vector<int> indices) {
        int nuFactor = 0;
        std::erase_if(indices, [&](int k) {
            if (k == 0) ++nuFactor;
            return k == 0;
        });
        std::sort(indices.begin(), indices.end(), std::greater<int>());
        return recurse(indices, cache).shiftNu(nuFactor);
    };

    BivariatePolynomial total;

    // Splitting term: cut k1 at each interior position.
    for (int r = 1; r <= k1 - 1; ++r) {
        std::vector<int> sub = rest;
        sub.push_back(r - 1);
        sub.push_back(k1 - r - 1);
        total += normalizedCall(std::move(sub));
    }

    // Joining term: fuse k1 with each other index, weight k_r, degree in g.
    for (std::size_t r = 0; r < rest.size(); ++r) {
        std::vector<int> sub;
        sub.reserve(rest.size());
        for (std::size_t s = 0; s < rest.size(); ++s)
            if (s != r) sub.push_back(rest[s]);
        sub.push_back(k1 + rest[r] - 2);
        total += normalizedCall(std::move(sub)).scale(rest[r]) *
                 BivariatePolynomial::monomial(1, 1, 0);
    }

    cache.insert(key, total);
    return total;
}

} // namespace

BivariatePolynomial momentByRecursion(const IndexMultiset& ks, MomentCache& cache) {
    if (!ks.totalIsEven()) return BivariatePolynomial{};
    const IndexMultiset positive = ks.withoutZeros();
    return recurse(positive.indices(), cache).shiftNu(ks.zeroCount());
}

BivariatePolynomial momentByRecursion(const IndexMultiset& ks) {
    MomentCache cache;
    return momentByRecursion(ks, cache);
}

BigInt expectation(const IndexMultiset& ks, const BigInt& N, MomentCache& cache) {
    if (N < 1) throw std::invalid_argument("expectation: N must be positive");
    return momentByRecursion(ks, cache).setGammaOne().evalAt(N);
}

BigInt expectation(const IndexMultiset& ks, const BigInt& N) {
    MomentCache cache;
    return expectation(ks, N, cache);
}

FiniteNStatistics finiteNStatistics(const IndexMultiset& f, const IndexMultiset& g,
                                    const BigInt& N, MomentCache& cache) {
    const BigInt meanF = expectation(f, N, cache);
    const BigInt meanG = expectation(g, N, cache);

    FiniteNStatistics stats;
    stats.covariance = expectation(IndexMultiset::merged(f, g), N, cache) - meanF * meanG;
    stats.varianceF = expectation(IndexMultiset::merged(f, f), N, cache) - meanF * meanF;
    stats.varianceG = expectation(IndexMultiset::merged(g, g), N, cache) - meanG * meanG;

    if (stats.varianceF > 0 && stats.varianceG > 0) {
        stats.correlationDefined = true;
        stats.correlationSign = stats.covariance == 0 ? 0 : (stats.covariance > 0 ? 1 : -1);
        stats.correlationSquared =
            Rational(stats.covariance * stats.covariance, stats.varianceF * stats.varianceG);
        stats.correlation =
            stats.correlationSign * std::sqrt(toDouble(stats.correlationSquared));
    }
    return stats;
}

FiniteNStatistics finiteNStatistics(const IndexMultiset& f, const IndexMultiset& g,
                                    const BigInt& N) {
    MomentCache cache;
    return finiteNStatistics(f, g, N, cache);
}

} // namespace gue
