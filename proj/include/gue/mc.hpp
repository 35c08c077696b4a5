#pragma once

#include "gue/bigint.hpp"
#include "gue/moments.hpp"

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace gue {

/// Dense N x N complex matrix with Hermitian content: entry(j,i) is kept as
/// the conjugate of entry(i,j) by the sampler. Powers are taken by repeated
/// multiplication.
class HermitianMatrix {
public:
    explicit HermitianMatrix(int dimension);

    int dimension() const { return dimension_; }
    std::complex<double>& entry(int i, int j) { return entries_[index(i, j)]; }
    const std::complex<double>& entry(int i, int j) const { return entries_[index(i, j)]; }

    bool isHermitian(double tolerance = 0.0) const;

    /// Real parts of Tr(X^k) for k = 1..maxPower, by iterated multiplication.
    std::vector<double> tracePowers(int maxPower) const;

private:
    std::size_t index(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(dimension_) +
               static_cast<std::size_t>(j);
    }

    int dimension_;
    std::vector<std::complex<double>> entries_;
};

/// Deterministic per-sample stream seed: sample s of a run seeded with `seed`
/// draws from an mt19937_64 engine seeded with splitmix64(seed + (s+1)).
/// Serial and parallel runs therefore consume identical random numbers.
std::uint64_t sampleStreamSeed(std::uint64_t seed, std::uint64_t sampleIndex);

/// Standard normal generator on top of mt19937_64 via Box-Muller. The
/// uniform stream is fully specified by the seed; no implementation-defined
/// distribution machinery is involved.
class NormalSampler {
public:
    explicit NormalSampler(std::uint64_t engineSeed) : engine_(engineSeed) {}
    double next();

private:
    std::mt19937_64 engine_;
    double cached_ = 0.0;
    bool hasCached_ = false;
};

/// One GUE draw with density proportional to exp(-Tr(X^2)/2): diagonal
/// entries are standard normal, off-diagonal real and imaginary parts are
/// independent normals of variance 1/2 (so E|X_ij|^2 = 1).
HermitianMatrix sampleGue(int dimension, std::uint64_t streamSeed);

struct McEstimate {
    double mean = 0.0;
    double stdError = 0.0;
    std::int64_t samples = 0;
    std::uint64_t seed = 0;
};

/// Monte Carlo mean and standard error of prod_r Tr(X^{k_r}) over independent
/// GUE draws. Deterministic given the seed; per-sample values are stored and
/// reduced in index order, so any thread count produces the identical result.
McEstimate estimateMultiTrace(const IndexMultiset& ks, int dimension, std::int64_t samples,
                              std::uint64_t seed, int threads = 1);

struct MomentReport {
    IndexMultiset ks;
    int dimension = 0;
    BigInt exact;
    McEstimate estimate;
    double sigmaBound = 0.0;
    double zScore = 0.0;
    bool pass = false;
};

/// Compares the Monte Carlo estimate against the exact polynomial value:
/// passes iff |mean - exact| <= sigmaBound * stdError.
MomentReport crossCheck(const IndexMultiset& ks, int dimension, std::int64_t samples,
                        std::uint64_t seed, double sigmaBound, int threads = 1);

} // namespace gue
