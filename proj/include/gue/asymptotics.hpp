#pragma once

#include "gue/bigint.hpp"
#include "gue/moments.hpp"

#include <string>
#include <vector>

namespace gue {

/// n-th Catalan number, (2n)! / (n! (n+1)!).
BigInt catalan(int n);

/// Degree in v of the moment polynomial: m + q, where m is half the index sum
/// and q counts even indices. Throws std::invalid_argument on an odd total.
int degreeFormula(const IndexMultiset& ks);

/// Leading coefficient of the all-even moment with exponents (2*i_r): the
/// product of Catalan numbers C_{i_r}. Empty list gives 1.
BigInt leadingEven(const std::vector<int>& is);

/// Leading pair coefficient for two odd traces (exponents 2i+1, 2j+1):
/// (2i+1)(2j+1)/(i+j+1) * binom(2i,i) * binom(2j,j). Always an integer.
BigInt aPair(int i, int j);

/// The same coefficient via the Catalan convolution
/// (2j+1) * sum_{r=0}^{i} (r+1) C_r C_{i+j-r}; kept as an independent route.
BigInt aPairBySum(int i, int j);

/// Chord-diagram sum of products 1/(j_r + j_s + 1) over all pairings of the
/// list (even length required). Exact rational.
Rational muMulti(const std::vector<int>& js);

/// Leading coefficient of the all-odd moment with exponents (2*j_k + 1),
/// computed two ways (chord sum of pair coefficients, and
/// mu * prod (2j_k+1)!/(j_k!)^2) and cross-asserted. Throws std::logic_error
/// if the two routes disagree.
BigInt aMulti(const std::vector<int>& js);

/// Leading coefficient of the mixed moment with even exponents (2*i_r) and
/// odd exponents (2*j_k + 1): leadingEven(is) * aMulti(js).
BigInt leadingGeneral(const std::vector<int>& is, const std::vector<int>& js);

/// Subleading (degree - 2) coefficient of the single even trace moment
/// p_{2i}: binom(2i-1, 3) * C_{i-2} for i >= 2, else 0.
BigInt subleadingSingle(int i);

/// Connected two-trace subleading coefficient:
/// i*j/(i+j) * binom(2i,i) * binom(2j,j) for i+j > 0, else 0.
BigInt cTilde1(int i, int j);

/// Subleading (degree - 2) coefficient of the all-even moment with exponents
/// (2*i_r), assembled from the single-trace and connected two-trace parts.
BigInt subleadingMulti(const std::vector<int>& is);

/// A multi-trace variable Tr(X^{2i_1})...Tr(X^{2j_1+1})...: even exponents are
/// recorded by their i-values, odd exponents by their j-values.
struct TraceVariableSpec {
    std::vector<int> evens;
    std::vector<int> odds;

    TraceVariableSpec() = default;
    TraceVariableSpec(std::vector<int> evens, std::vector<int> odds);

    /// The exponent multiset 2i_1,...,2j_1+1,...
    IndexMultiset exponents() const;
};

/// Exact large-N correlation limit: value = numerator / sqrt(varianceF *
/// varianceG), with a float approximation and a rendered symbolic form such
/// as "sqrt(3)/2". theoremCase records which of the five parity cases fired.
/// defined is false when a variable is constant (all indices zero after
/// stripping even zeros), in which case no correlation exists.
struct CorrelationLimitResult {
    int theoremCase = 0;
    bool defined = false;
    Rational numerator;
    Rational varianceF = 1;
    Rational varianceG = 1;
    double approx = 0.0;
    std::string symbolic = "undefined";
};

CorrelationLimitResult correlationLimit(const TraceVariableSpec& f, const TraceVariableSpec& g);

/// Exact large-N covariance of Tr f(X/sqrt(N)) and Tr g(X/sqrt(N)) for
/// polynomials given by ascending coefficient lists.
Rational covarianceLimit(const std::vector<Rational>& fCoeffs,
                         const std::vector<Rational>& gCoeffs);

/// Moment of the semicircle density sqrt(4-x^2)/(2 pi) on [-2,2] for a
/// polynomial given by its ascending coefficient list: even powers x^{2i}
/// contribute C_i, odd powers contribute nothing.
Rational semicircleMoment(const std::vector<Rational>& coeffs);

/// Adaptive-quadrature value of (1/2pi) * integral of q(x) sqrt(4-x^2) over
/// [-2,2] to within the requested tolerance. Throws std::runtime_error if the
/// refinement budget is exhausted first.
double numericSemicircleQuadrature(const std::vector<Rational>& coeffs, double tolerance);

/// Renders p / sqrt(q) exactly, pulling square factors out of the radical:
/// e.g. (4, 18) -> "2*sqrt(2)/3". q must be positive.
std::string renderOverSqrt(const Rational& p, const Rational& q);

} // namespace gue
