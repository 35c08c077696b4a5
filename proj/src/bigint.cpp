#include "gue/bigint.hpp"

#include <stdexcept>

namespace gue {

BigInt factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i; // always exact: r is binomial(n-k+i, i) after each step
    }
    return r;
}

BigInt doubleFactorialOdd(int l) {
    if (l < 0) throw std::invalid_argument("doubleFactorialOdd: negative argument");
    BigInt r = 1;
    for (int i = 3; i <= 2 * l - 1; i += 2) r *= i;
    return r;
}

} // namespace gue
