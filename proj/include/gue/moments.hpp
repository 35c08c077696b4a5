#pragma once

#include "gue/bigint.hpp"
#include "gue/bipoly.hpp"
#include "gue/chords.hpp"

#include <compare>
#include <map>
#include <vector>

namespace gue {

/// Canonical multiset of nonnegative trace exponents (k_1,...,k_n), stored
/// sorted descending so that equal multisets compare equal.
class IndexMultiset {
public:
    IndexMultiset() = default;
    explicit IndexMultiset(std::vector<int> ks);

    const std::vector<int>& indices() const { return ks_; }
    int count() const { return static_cast<int>(ks_.size()); }
    bool empty() const { return ks_.empty(); }

    int total() const;
    bool totalIsEven() const { return total() % 2 == 0; }

    /// m = (sum of indices)/2; requires an even total.
    int halfTotal() const;

    /// q = number of even indices (zeros included).
    int evenCount() const;

    int zeroCount() const;
    IndexMultiset withoutZeros() const;

    /// Disjoint union f and g, re-canonicalized.
    static IndexMultiset merged(const IndexMultiset& a, const IndexMultiset& b);

    std::strong_ordering operator<=>(const IndexMultiset&) const = default;

private:
    std::vector<int> ks_;
};

/// Memo table for the moment recursion. Keys carry no zero indices (they are
/// normalized away before keying). Not synchronized: use one cache per
/// thread, or share only behind external exclusion.
class MomentCache {
public:
    const BivariatePolynomial* find(const IndexMultiset& key) const;
    void insert(const IndexMultiset& key, BivariatePolynomial value);
    std::size_t size() const { return entries_.size(); }

private:
    std::map<IndexMultiset, BivariatePolynomial> entries_;
};

/// The moment polynomial by direct chord-diagram enumeration: sum of
/// g^genus * v^boundaries over all diagrams of the profile. Zero indices each
/// contribute a factor v; an odd total gives the zero polynomial; the empty
/// multiset gives 1.
BivariatePolynomial momentByEnumeration(const IndexMultiset& ks,
                                        const EnumerationLimits& limits = {}, int threads = 1);

/// The same polynomial by the integration-by-parts recursion, memoized.
/// Always recurses on the largest index.
BivariatePolynomial momentByRecursion(const IndexMultiset& ks, MomentCache& cache);
BivariatePolynomial momentByRecursion(const IndexMultiset& ks);

/// Exact multi-trace expectation at rank N: the boundary polynomial of the
/// moment, evaluated at v = N.
BigInt expectation(const IndexMultiset& ks, const BigInt& N, MomentCache& cache);
BigInt expectation(const IndexMultiset& ks, const BigInt& N);

/// Exact finite-N covariance/variances of two multi-trace variables, plus
/// their correlation. The correlation is kept exact as a signed square:
/// corr = sign * sqrt(correlationSquared). It is undefined when either
/// variance vanishes.
struct FiniteNStatistics {
    BigInt covariance;
    BigInt varianceF;
    BigInt varianceG;
    bool correlationDefined = false;
    int correlationSign = 0;
    Rational correlationSquared;
    double correlation = 0.0;
};

FiniteNStatistics finiteNStatistics(const IndexMultiset& f, const IndexMultiset& g,
                                    const BigInt& N, MomentCache& cache);
FiniteNStatistics finiteNStatistics(const IndexMultiset& f, const IndexMultiset& g,
                                    const BigInt& N);

} // namespace gue
