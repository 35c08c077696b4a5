#include "gue/bipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace gue {

namespace {

// Shared term renderer: coefficient then the variable powers, "*"-joined.
// The unit coefficient is suppressed unless the monomial is constant.
void appendTerm(std::ostream& os, const BigInt& absCoeff, int gammaExp, int nuExp) {
    bool needStar = false;
    if (absCoeff != 1 || (gammaExp == 0 && nuExp == 0)) {
        os << absCoeff.str();
        needStar = true;
    }
    auto power = [&](const char* name, int e) {
        if (e == 0) return;
        if (needStar) os << "*";
        os << name;
        if (e > 1) os << "^" << e;
        needStar = true;
    };
    power("g", gammaExp);
    power("v", nuExp);
}

} // namespace

BivariatePolynomial BivariatePolynomial::constant(BigInt c) {
    return monomial(std::move(c), 0, 0);
}

BivariatePolynomial BivariatePolynomial::monomial(BigInt c, int gammaExp, int nuExp) {
    BivariatePolynomial p;
    p.addTerm(gammaExp, nuExp, c);
    return p;
}

void BivariatePolynomial::addTerm(int gammaExp, int nuExp, const BigInt& c) {
    if (c == 0) return;
    if (gammaExp < 0 || nuExp < 0)
        throw std::invalid_argument("BivariatePolynomial: negative exponent");
    const Key key{gammaExp, nuExp};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

BigInt BivariatePolynomial::coeff(int gammaExp, int nuExp) const {
    auto it = terms_.find(Key{gammaExp, nuExp});
    return it == terms_.end() ? BigInt(0) : it->second;
}

BivariatePolynomial BivariatePolynomial::operator+(const BivariatePolynomial& rhs) const {
    BivariatePolynomial out = *this;
    out += rhs;
    return out;
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& rhs) {
    for (const auto& [key, c] : rhs.terms_) addTerm(key.gammaExp, key.nuExp, c);
    return *this;
}

BivariatePolynomial BivariatePolynomial::operator-(const BivariatePolynomial& rhs) const {
    BivariatePolynomial out = *this;
    for (const auto& [key, c] : rhs.terms_) out.addTerm(key.gammaExp, key.nuExp, -c);
    return out;
}

BivariatePolynomial BivariatePolynomial::operator*(const BivariatePolynomial& rhs) const {
    BivariatePolynomial out;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : rhs.terms_)
            out.addTerm(ka.gammaExp + kb.gammaExp, ka.nuExp + kb.nuExp, ca * cb);
    return out;
}

BivariatePolynomial BivariatePolynomial::scale(const BigInt& c) const {
    BivariatePolynomial out;
    if (c == 0) return out;
    for (const auto& [key, coeff] : terms_) out.terms_.emplace(key, coeff * c);
    return out;
}

BivariatePolynomial BivariatePolynomial::shiftNu(int d) const {
    if (d < 0) throw std::invalid_argument("shiftNu: negative shift");
    BivariatePolynomial out;
    for (const auto& [key, coeff] : terms_)
        out.terms_.emplace(Key{key.gammaExp, key.nuExp + d}, coeff);
    return out;
}

UnivariatePolynomial BivariatePolynomial::setGammaOne() const {
    UnivariatePolynomial out;
    for (const auto& [key, coeff] : terms_) out.addTerm(key.nuExp, coeff);
    return out;
}

BigInt BivariatePolynomial::evalAt(const BigInt& gamma, const BigInt& nu) const {
    BigInt total = 0;
    for (const auto& [key, coeff] : terms_) {
        BigInt term = coeff;
        for (int i = 0; i < key.gammaExp; ++i) term *= gamma;
        for (int i = 0; i < key.nuExp; ++i) term *= nu;
        total += term;
    }
    return total;
}

std::string BivariatePolynomial::toString() const {
    if (isZero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, coeff] : terms_) {
        if (first) {
            if (coeff < 0) os << "-";
            first = false;
        } else {
            os << (coeff < 0 ? " - " : " + ");
        }
        appendTerm(os, abs(coeff), key.gammaExp, key.nuExp);
    }
    return os.str();
}

nlohmann::json BivariatePolynomial::toJson() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [key, coeff] : terms_)
        arr.push_back({{"g", key.gammaExp}, {"v", key.nuExp}, {"c", coeff.str()}});
    return arr;
}

UnivariatePolynomial UnivariatePolynomial::constant(BigInt c) {
    return monomial(std::move(c), 0);
}

UnivariatePolynomial UnivariatePolynomial::monomial(BigInt c, int nuExp) {
    UnivariatePolynomial p;
    p.addTerm(nuExp, c);
    return p;
}

void UnivariatePolynomial::addTerm(int nuExp, const BigInt& c) {
    if (c == 0) return;
    if (nuExp < 0) throw std::invalid_argument("UnivariatePolynomial: negative exponent");
    auto it = coeffs_.find(nuExp);
    if (it == coeffs_.end()) {
        coeffs_.emplace(nuExp, c);
        return;
    }
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
}

UnivariatePolynomial UnivariatePolynomial::operator+(const UnivariatePolynomial& rhs) const {
    UnivariatePolynomial out = *this;
    for (const auto& [e, c] : rhs.coeffs_) out.addTerm(e, c);
    return out;
}

UnivariatePolynomial UnivariatePolynomial::operator*(const UnivariatePolynomial& rhs) const {
    UnivariatePolynomial out;
    for (const auto& [ea, ca] : coeffs_)
        for (const auto& [eb, cb] : rhs.coeffs_) out.addTerm(ea + eb, ca * cb);
    return out;
}

BigInt UnivariatePolynomial::evalAt(const BigInt& nu) const {
    // coeffs_ iterates in descending exponent order.
    BigInt acc = 0;
    int lastExp = 0;
    bool started = false;
    for (const auto& [e, c] : coeffs_) {
        if (started)
            for (int i = 0; i < lastExp - e; ++i) acc *= nu;
        acc += c;
        lastExp = e;
        started = true;
    }
    for (int i = 0; i < lastExp; ++i) acc *= nu;
    return acc;
}

std::optional<int> UnivariatePolynomial::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.begin()->first;
}

BigInt UnivariatePolynomial::leadingCoeff() const {
    if (coeffs_.empty()) throw std::domain_error("leadingCoeff: zero polynomial");
    return coeffs_.begin()->second;
}

BigInt UnivariatePolynomial::coeff(int e) const {
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? BigInt(0) : it->second;
}

std::string UnivariatePolynomial::toString() const {
    if (isZero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        appendTerm(os, abs(c), 0, e);
    }
    return os.str();
}

nlohmann::json UnivariatePolynomial::toJson() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [e, c] : coeffs_) arr.push_back({{"v", e}, {"c", c.str()}});
    return arr;
}

} // namespace gue
