#pragma once

#include "gue/bigint.hpp"

#include <map>
#include <optional>
#include <string>

#include "json.hpp"

namespace gue {

class UnivariatePolynomial;

/// Exact sparse polynomial in the genus variable g and the boundary variable
/// v, with arbitrary-precision integer coefficients. Zero coefficients are
/// never stored. Terms iterate in canonical output order: descending power of
/// v, then ascending power of g.
class BivariatePolynomial {
public:
    struct Key {
        int gammaExp = 0;
        int nuExp = 0;
        bool operator==(const Key&) const = default;
    };
    struct KeyOrder {
        bool operator()(const Key& a, const Key& b) const {
            if (a.nuExp != b.nuExp) return a.nuExp > b.nuExp;
            return a.gammaExp < b.gammaExp;
        }
    };
    using TermMap = std::map<Key, BigInt, KeyOrder>;

    BivariatePolynomial() = default; // zero polynomial

    static BivariatePolynomial constant(BigInt c);
    static BivariatePolynomial monomial(BigInt c, int gammaExp, int nuExp);

    bool isZero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    /// Adds c * g^gammaExp * v^nuExp, erasing the term if it cancels.
    void addTerm(int gammaExp, int nuExp, const BigInt& c);

    BigInt coeff(int gammaExp, int nuExp) const;

    BivariatePolynomial operator+(const BivariatePolynomial& rhs) const;
    BivariatePolynomial operator-(const BivariatePolynomial& rhs) const;
    BivariatePolynomial operator*(const BivariatePolynomial& rhs) const;
    BivariatePolynomial& operator+=(const BivariatePolynomial& rhs);

    BivariatePolynomial scale(const BigInt& c) const;

    /// Multiplication by v^d.
    BivariatePolynomial shiftNu(int d) const;

    /// Sums coefficients over the genus exponent for each power of v.
    UnivariatePolynomial setGammaOne() const;

    BigInt evalAt(const BigInt& gamma, const BigInt& nu) const;

    /// Canonical text, e.g. "2*v^3 + g*v"; the zero polynomial prints "0".
    std::string toString() const;

    /// JSON list of {"g": int, "v": int, "c": decimal string}.
    nlohmann::json toJson() const;

    bool operator==(const BivariatePolynomial&) const = default;

private:
    TermMap terms_;
};

/// Exact sparse polynomial in the boundary variable v alone.
class UnivariatePolynomial {
public:
    using CoeffMap = std::map<int, BigInt, std::greater<int>>;

    UnivariatePolynomial() = default; // zero polynomial

    static UnivariatePolynomial constant(BigInt c);
    static UnivariatePolynomial monomial(BigInt c, int nuExp);

    bool isZero() const { return coeffs_.empty(); }
    const CoeffMap& coeffs() const { return coeffs_; }

    void addTerm(int nuExp, const BigInt& c);

    UnivariatePolynomial operator+(const UnivariatePolynomial& rhs) const;
    UnivariatePolynomial operator*(const UnivariatePolynomial& rhs) const;

    /// Exact evaluation by Horner's rule on the sparse exponent gaps.
    BigInt evalAt(const BigInt& nu) const;

    /// Degree in v; std::nullopt for the zero polynomial.
    std::optional<int> degree() const;

    /// Throws std::domain_error on the zero polynomial.
    BigInt leadingCoeff() const;

    /// Coefficient of v^e; 0 when absent (including e < 0).
    BigInt coeff(int e) const;

    std::string toString() const;
    nlohmann::json toJson() const;

    bool operator==(const UnivariatePolynomial&) const = default;

private:
    CoeffMap coeffs_;
};

} // namespace gue
