#include "gue/mc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

namespace gue {

HermitianMatrix::HermitianMatrix(int dimension) : dimension_(dimension) {
    if (dimension < 1) throw std::invalid_argument("HermitianMatrix: dimension must be >= 1");
    entries_.assign(static_cast<std::size_t>(dimension) * static_cast<std::size_t>(dimension),
                    {0.0, 0.0});
}

bool HermitianMatrix::isHermitian(double tolerance) const {
    for (int i = 0; i < dimension_; ++i)
        for (int j = 0; j <= i; ++j) {
            const std::complex<double> d = entry(i, j) - std::conj(entry(j, i));
            if (std::abs(d) > tolerance) return false;
        }
    return true;
}

std::vector<double> HermitianMatrix::tracePowers(int maxPower) const {
    std::vector<double> traces;
    traces.reserve(static_cast<std::size_t>(maxPower));
    if (maxPower < 1) return traces;

    const int n = dimension_;
    std::vector<std::complex<double>> power = entries_;
    std::vector<std::complex<double>> next(entries_.size());

    auto traceOf = [&](const std::vector<std::complex<double>>& m) {
        std::complex<double> t = 0.0;
        for (int i = 0; i < n; ++i)
            t += m[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                   static_cast<std::size_t>(i)];
        return t.real();
    };

    traces.push_back(traceOf(power));
    for (int k = 2; k <= maxPower; ++k) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                std::complex<double> sum = 0.0;
                for (int t = 0; t < n; ++t)
                    sum += power[static_cast<std::size_t>(i * n + t)] *
                           entries_[static_cast<std::size_t>(t * n + j)];
                next[static_cast<std::size_t>(i * n + j)] = sum;
            }
        }
        power.swap(next);
        traces.push_back(traceOf(power));
    }
    return traces;
}

std::uint64_t sampleStreamSeed(std::uint64_t seed, std::uint64_t sampleIndex) {
    // splitmix64 finalizer applied to seed + (sampleIndex + 1).
    std::uint64_t z = seed + (sampleIndex + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double NormalSampler::next() {
    if (hasCached_) {
        hasCached_ = false;
        return cached_;
    }
    // Box-Muller on explicitly constructed uniforms; u1 in (0,1], u2 in [0,1).
    const double u1 = 1.0 - static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    const double u2 = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::acos(-1.0) * u2;
    cached_ = radius * std::sin(angle);
    hasCached_ = true;
    return radius * std::cos(angle);
}

HermitianMatrix sampleGue(int dimension, std::uint64_t streamSeed) {
    NormalSampler normals(streamSeed);
    HermitianMatrix x(dimension);
    const double offDiagonalScale = 1.0 / std::sqrt(2.0); // Var(Re) = Var(Im) = 1/2
    for (int i = 0; i < dimension; ++i) {
        x.entry(i, i) = {normals.next(), 0.0};
        for (int j = i + 1; j < dimension; ++j) {
            const double re = normals.next() * offDiagonalScale;
            const double im = normals.next() * offDiagonalScale;
            x.entry(i, j) = {re, im};
            x.entry(j, i) = {re, -im};
        }
    }
    return x;
}

namespace {

double productStatistic(const IndexMultiset& ks, int dimension, std::uint64_t streamSeed) {
    const HermitianMatrix x = sampleGue(dimension, streamSeed);
    int maxPower = 0;
    for (int k : ks.indices()) maxPower = std::max(maxPower, k);
    const std::vector<double> traces = x.tracePowers(maxPower);
    double product = 1.0;
    for (int k : ks.indices())
        product *= (k == 0) ? static_cast<double>(dimension)
                            : traces[static_cast<std::size_t>(k - 1)];
    return product;
}

} // namespace

McEstimate estimateMultiTrace(const IndexMultiset& ks, int dimension, std::int64_t samples,
                              std::uint64_t seed, int threads) {
    if (samples < 2) throw std::invalid_argument("estimateMultiTrace: need at least 2 samples");
    if (dimension < 1) throw std::invalid_argument("estimateMultiTrace: dimension must be >= 1");

    std::vector<double> values(static_cast<std::size_t>(samples));
    auto fillRange = [&](std::int64_t begin, std::int64_t end) {
        for (std::int64_t s = begin; s < end; ++s)
            values[static_cast<std::size_t>(s)] = productStatistic(
                ks, dimension, sampleStreamSeed(seed, static_cast<std::uint64_t>(s)));
    };

    if (threads <= 1) {
        fillRange(0, samples);
    } else {
        const int workerCount = static_cast<int>(std::min<std::int64_t>(threads, samples));
        std::vector<std::thread> workers;
        workers.reserve(static_cast<std::size_t>(workerCount));
        for (int w = 0; w < workerCount; ++w) {
            const std::int64_t begin = samples * w / workerCount;
            const std::int64_t end = samples * (w + 1) / workerCount;
            workers.emplace_back(fillRange, begin, end);
        }
        for (auto& worker : workers) worker.join();
    }

    // Sequential reduction in sample order keeps the result independent of
    // the thread count.
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(samples);
    double sumSq = 0.0;
    for (double v : values) sumSq += (v - mean) * (v - mean);
    const double variance = sumSq / static_cast<double>(samples - 1);

    McEstimate est;
    est.mean = mean;
    est.stdError = std::sqrt(variance / static_cast<double>(samples));
    est.samples = samples;
    est.seed = seed;
    return est;
}

MomentReport crossCheck(const IndexMultiset& ks, int dimension, std::int64_t samples,
                        std::uint64_t seed, double sigmaBound, int threads) {
    if (sigmaBound <= 0) throw std::invalid_argument("crossCheck: sigmaBound must be positive");

    MomentReport report;
    report.ks = ks;
    report.dimension = dimension;
    report.exact = expectation(ks, dimension);
    report.estimate = estimateMultiTrace(ks, dimension, samples, seed, threads);
    report.sigmaBound = sigmaBound;

    const double gap = std::abs(report.estimate.mean - toDouble(report.exact));
    if (report.estimate.stdError > 0)
        report.zScore = gap / report.estimate.stdError;
    else
        report.zScore = gap == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    report.pass = gap <= sigmaBound * report.estimate.stdError;
    return report;
}

} // namespace gue
