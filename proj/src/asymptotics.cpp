#include "gue/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace gue {

BigInt catalan(int n) {
    if (n < 0) throw std::invalid_argument("catalan: negative index");
    BigInt c = binomial(2 * n, n);
    c /= (n + 1); // exact
    return c;
}

int degreeFormula(const IndexMultiset& ks) {
    return ks.halfTotal() + ks.evenCount();
}

BigInt leadingEven(const std::vector<int>& is) {
    BigInt p = 1;
    for (int i : is) p *= catalan(i);
    return p;
}

BigInt aPair(int i, int j) {
    if (i < 0 || j < 0) throw std::invalid_argument("aPair: negative index");
    BigInt num = BigInt(2 * i + 1) * (2 * j + 1) * binomial(2 * i, i) * binomial(2 * j, j);
    const BigInt den = i + j + 1;
    if (num % den != 0) throw std::logic_error("aPair: closed form is not integral");
    return num / den;
}

BigInt aPairBySum(int i, int j) {
    if (i < 0 || j < 0) throw std::invalid_argument("aPairBySum: negative index");
    BigInt sum = 0;
    for (int r = 0; r <= i; ++r) sum += BigInt(r + 1) * catalan(r) * catalan(i + j - r);
    return BigInt(2 * j + 1) * sum;
}

namespace {

// Pairing recursion over the list as given: pair the front element with each
// later position and recurse on the remainder. Memoized on the exact
// subsequence so the permutation symmetry of the result stays a testable
// fact rather than an input normalization.
template <typename Value, typename PairTerm>
Value pairingSum(const std::vector<int>& js, const PairTerm& pairTerm,
                 std::map<std::vector<int>, Value>& memo) {
    if (js.empty()) return Value(1);
    if (auto it = memo.find(js); it != memo.end()) return it->second;
    Value total(0);
    for (std::size_t k = 1; k < js.size(); ++k) {
        std::vector<int> rest;
        rest.reserve(js.size() - 2);
        for (std::size_t s = 1; s < js.size(); ++s)
            if (s != k) rest.push_back(js[s]);
        total += pairTerm(js[0], js[k]) * pairingSum(rest, pairTerm, memo);
    }
    memo.emplace(js, total);
    return total;
}

} // namespace

Rational muMulti(const std::vector<int>& js) {
    if (js.size() % 2 != 0) throw std::invalid_argument("muMulti: odd list length");
    std::map<std::vector<int>, Rational> memo;
    return pairingSum<Rational>(
        js, [](int a, int b) { return Rational(1, a + b + 1); }, memo);
}

BigInt aMulti(const std::vector<int>& js) {
    if (js.size() % 2 != 0) throw std::invalid_argument("aMulti: odd list length");

    std::map<std::vector<int>, BigInt> memo;
    const BigInt byChordSum =
        pairingSum<BigInt>(js, [](int a, int b) { return aPair(a, b); }, memo);

    Rational byMu = muMulti(js);
    for (int j : js) {
        BigInt factor = factorial(2 * j + 1);
        factor /= factorial(j) * factorial(j); // (2j+1)!/(j!)^2 is integral
        byMu *= factor;
    }
    if (denominator(byMu) != 1 || numerator(byMu) != byChordSum)
        throw std::logic_error("aMulti: chord-sum and mu-product routes disagree");
    return byChordSum;
}

BigInt leadingGeneral(const std::vector<int>& is, const std::vector<int>& js) {
    return leadingEven(is) * aMulti(js);
}

BigInt subleadingSingle(int i) {
    if (i < 0) throw std::invalid_argument("subleadingSingle: negative index");
    if (i < 2) return 0;
    return binomial(2 * i - 1, 3) * catalan(i - 2);
}

BigInt cTilde1(int i, int j) {
    if (i < 0 || j < 0) throw std::invalid_argument("cTilde1: negative index");
    if (i + j == 0) return 0;
    BigInt num = BigInt(i) * j * binomial(2 * i, i) * binomial(2 * j, j);
    const BigInt den = i + j;
    if (num % den != 0) throw std::logic_error("cTilde1: closed form is not integral");
    return num / den;
}

BigInt subleadingMulti(const std::vector<int>& is) {
    auto catalanProductExcept = [&](std::size_t skipA, std::size_t skipB) {
        BigInt p = 1;
        for (std::size_t t = 0; t < is.size(); ++t)
            if (t != skipA && t != skipB) p *= catalan(is[t]);
        return p;
    };

    BigInt total = 0;
    for (std::size_t r = 0; r < is.size(); ++r)
        total += subleadingSingle(is[r]) * catalanProductExcept(r, r);
    for (std::size_t r = 0; r < is.size(); ++r)
        for (std::size_t s = r + 1; s < is.size(); ++s)
            total += cTilde1(is[r], is[s]) * catalanProductExcept(r, s);
    return total;
}

TraceVariableSpec::TraceVariableSpec(std::vector<int> evensIn, std::vector<int> oddsIn)
    : evens(std::move(evensIn)), odds(std::move(oddsIn)) {
    for (int i : evens)
        if (i < 0) throw std::invalid_argument("TraceVariableSpec: negative even index");
    for (int j : odds)
        if (j < 0) throw std::invalid_argument("TraceVariableSpec: negative odd index");
    std::sort(evens.begin(), evens.end());
    std::sort(odds.begin(), odds.end());
}

IndexMultiset TraceVariableSpec::exponents() const {
    std::vector<int> ks;
    ks.reserve(evens.size() + odds.size());
    for (int i : evens) ks.push_back(2 * i);
    for (int j : odds) ks.push_back(2 * j + 1);
    return IndexMultiset(std::move(ks));
}

namespace {

std::vector<int> positiveEntries(const std::vector<int>& xs) {
    std::vector<int> out;
    out.reserve(xs.size());
    for (int x : xs)
        if (x > 0) out.push_back(x);
    return out;
}

std::vector<int> concat(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

// Case 5 double sum: sum over pairs of i*i'*(i+1)*(i'+1)/(i+i').
Rational evenPairSum(const std::vector<int>& a, const std::vector<int>& b) {
    Rational total = 0;
    for (int r : a)
        for (int s : b)
            total += Rational(BigInt(r) * s * (r + 1) * (s + 1), BigInt(r + s));
    return total;
}

// R = s * t^2 with s kept square-free (up to a trial-division bound that is
// ample for the values arising here).
std::pair<BigInt, BigInt> extractSquarePart(BigInt r) {
    BigInt squareFree = 1;
    BigInt root = 1;
    for (BigInt p = 2; p * p <= r && p < 1000000; ++p) {
        while (r % (p * p) == 0) {
            r /= p * p;
            root *= p;
        }
        if (r % p == 0) {
            r /= p;
            squareFree *= p;
        }
    }
    const BigInt residualRoot = sqrt(r);
    if (residualRoot * residualRoot == r)
        root *= residualRoot;
    else
        squareFree *= r;
    return {squareFree, root};
}

} // namespace

std::string renderOverSqrt(const Rational& p, const Rational& q) {
    if (q <= 0) throw std::invalid_argument("renderOverSqrt: radicand must be positive");
    if (p == 0) return "0";

    // p / sqrt(c/d) = (a t / (b c)) * sqrt(s) where c*d = s*t^2.
    const BigInt a = numerator(p), b = denominator(p);
    const BigInt c = numerator(q), d = denominator(q);
    const auto [squareFree, root] = extractSquarePart(c * d);
    const Rational ratio(a * root, b * c);

    std::ostringstream os;
    if (squareFree == 1) {
        os << ratio.str();
        return os.str();
    }
    const BigInt u = numerator(ratio), v = denominator(ratio);
    if (u == -1)
        os << "-";
    else if (u != 1)
        os << u.str() << "*";
    os << "sqrt(" << squareFree.str() << ")";
    if (v != 1) os << "/" << v.str();
    return os.str();
}

CorrelationLimitResult correlationLimit(const TraceVariableSpec& f, const TraceVariableSpec& g) {
    // Tr(X^0) is the constant N: even zero indices scale the variable and are
    // stripped, which leaves every correlation unchanged.
    const std::vector<int> fEvens = positiveEntries(f.evens);
    const std::vector<int> gEvens = positiveEntries(g.evens);

    CorrelationLimitResult result;
    if (f.odds.empty() && fEvens.empty()) return result; // constant variable
    if (g.odds.empty() && gEvens.empty()) return result;

    const std::size_t l = f.odds.size();
    const std::size_t lPrime = g.odds.size();

    result.defined = true;
    if (l % 2 != lPrime % 2) {
        result.theoremCase = 1;
        result.numerator = 0;
    } else if (l % 2 == 1) {
        result.theoremCase = 2;
        result.numerator = muMulti(concat(f.odds, g.odds));
        result.varianceF = muMulti(concat(f.odds, f.odds));
        result.varianceG = muMulti(concat(g.odds, g.odds));
    } else if (l > 0 && lPrime > 0) {
        result.theoremCase = 3;
        const Rational muF = muMulti(f.odds);
        const Rational muG = muMulti(g.odds);
        result.numerator = muMulti(concat(f.odds, g.odds)) - muF * muG;
        result.varianceF = muMulti(concat(f.odds, f.odds)) - muF * muF;
        result.varianceG = muMulti(concat(g.odds, g.odds)) - muG * muG;
    } else if (l > 0 || lPrime > 0) {
        result.theoremCase = 4;
        result.numerator = 0;
    } else {
        result.theoremCase = 5;
        result.numerator = evenPairSum(fEvens, gEvens);
        result.varianceF = evenPairSum(fEvens, fEvens);
        result.varianceG = evenPairSum(gEvens, gEvens);
    }

    const Rational radicand = result.varianceF * result.varianceG;
    result.symbolic = renderOverSqrt(result.numerator, radicand);
    result.approx = toDouble(result.numerator) / std::sqrt(toDouble(radicand));
    return result;
}

Rational covarianceLimit(const std::vector<Rational>& fCoeffs,
                         const std::vector<Rational>& gCoeffs) {
    auto coeffAt = [](const std::vector<Rational>& cs, std::size_t r) {
        return r < cs.size() ? cs[r] : Rational(0);
    };
    const int fDeg = static_cast<int>(fCoeffs.size()) - 1;
    const int gDeg = static_cast<int>(gCoeffs.size()) - 1;

    Rational total = 0;
    // Even-derivative part: f^(2i)(0) g^(2j)(0) / ((i+j) i! (i-1)! j! (j-1)!).
    for (int i = 1; 2 * i <= fDeg; ++i) {
        for (int j = 1; 2 * j <= gDeg; ++j) {
            const Rational derivs = coeffAt(fCoeffs, static_cast<std::size_t>(2 * i)) *
                                    coeffAt(gCoeffs, static_cast<std::size_t>(2 * j)) *
                                    factorial(2 * i) * factorial(2 * j);
            total += derivs / Rational(BigInt(i + j) * factorial(i) * factorial(i - 1) *
                                       factorial(j) * factorial(j - 1));
        }
    }
    // Odd-derivative part: f^(2i+1)(0) g^(2j+1)(0) / ((i+j+1) (i!)^2 (j!)^2).
    for (int i = 0; 2 * i + 1 <= fDeg; ++i) {
        for (int j = 0; 2 * j + 1 <= gDeg; ++j) {
            const Rational derivs = coeffAt(fCoeffs, static_cast<std::size_t>(2 * i + 1)) *
                                    coeffAt(gCoeffs, static_cast<std::size_t>(2 * j + 1)) *
                                    factorial(2 * i + 1) * factorial(2 * j + 1);
            total += derivs / Rational(BigInt(i + j + 1) * factorial(i) * factorial(i) *
                                       factorial(j) * factorial(j));
        }
    }
    return total;
}

Rational semicircleMoment(const std::vector<Rational>& coeffs) {
    Rational total = 0;
    for (std::size_t e = 0; e < coeffs.size(); e += 2)
        total += coeffs[e] * catalan(static_cast<int>(e / 2));
    return total;
}

namespace {

struct DepthExhausted {};

// minDepth forces a few refinements before the error estimate is trusted;
// symmetric integrands can make the first refined estimate coincide with the
// coarse one and fool the acceptance test otherwise.
double adaptiveSimpson(const std::function<double(double)>& h, double a, double b, double fa,
                       double fm, double fb, double whole, double tol, int depth, int minDepth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = h(lm);
    const double frm = h(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double refined = left + right;
    if (minDepth <= 0 && std::abs(refined - whole) <= 15.0 * tol)
        return refined + (refined - whole) / 15.0;
    if (depth <= 0) throw DepthExhausted{};
    return adaptiveSimpson(h, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, minDepth - 1) +
           adaptiveSimpson(h, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, minDepth - 1);
}

} // namespace

double numericSemicircleQuadrature(const std::vector<Rational>& coeffs, double tolerance) {
    if (tolerance <= 0) throw std::invalid_argument("quadrature: tolerance must be positive");

    std::vector<double> cs;
    cs.reserve(coeffs.size());
    for (const Rational& c : coeffs) cs.push_back(toDouble(c));

    // Substituting x = 2 sin(theta) turns the weight sqrt(4-x^2) dx into the
    // smooth 4 cos^2(theta) d(theta), removing the endpoint derivative
    // singularities.
    const double pi = std::acos(-1.0);
    std::function<double(double)> integrand = [&](double theta) {
        const double x = 2.0 * std::sin(theta);
        double q = 0.0;
        for (std::size_t e = cs.size(); e-- > 0;) q = q * x + cs[e];
        const double c = std::cos(theta);
        return q * 4.0 * c * c / (2.0 * pi);
    };

    const double lo = -pi / 2.0;
    const double hi = pi / 2.0;
    const int panels = 8;
    double total = 0.0;
    try {
        for (int p = 0; p < panels; ++p) {
            const double a = lo + (hi - lo) * p / panels;
            const double b = lo + (hi - lo) * (p + 1) / panels;
            const double fa = integrand(a);
            const double fm = integrand(0.5 * (a + b));
            const double fb = integrand(b);
            const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
            total += adaptiveSimpson(integrand, a, b, fa, fm, fb, whole, tolerance / panels, 48, 2);
        }
    } catch (const DepthExhausted&) {
        throw std::runtime_error("quadrature: refinement budget exhausted before convergence");
    }
    return total;
}

} // namespace gue
