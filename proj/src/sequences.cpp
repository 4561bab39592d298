#include "hkrr/sequences.hpp"

#include <stdexcept>
#include <vector>

namespace hkrr {

UniPoly chebyshev_t(int k) {
    if (k < 0) throw std::invalid_argument("chebyshev_t: negative index");
    UniPoly prev = UniPoly::constant(1);
    if (k == 0) return prev;
    UniPoly cur = UniPoly::variable();
    const UniPoly two_y = UniPoly::monomial(2, 1);
    for (int m = 1; m < k; ++m) {
        UniPoly next = two_y * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Rational bernoulli(int m) {
    if (m < 0) throw std::invalid_argument("bernoulli: negative index");
    // sum_{j=0}^{k} binom(k+1, j) B_j = 0 for k >= 1
    std::vector<Rational> b(static_cast<std::size_t>(m) + 1);
    b[0] = 1;
    for (int k = 1; k <= m; ++k) {
        Rational acc(0);
        for (int j = 0; j < k; ++j) acc += binomial(k + 1, j) * b[static_cast<std::size_t>(j)];
        b[static_cast<std::size_t>(k)] = -acc / Rational(k + 1);
    }
    return b.back();
}

Rational modified_bernoulli(int two_k) {
    if (two_k < 0 || two_k % 2 != 0) {
        throw std::invalid_argument("modified_bernoulli: index must be even and nonnegative");
    }
    if (two_k == 0) return 1;
    return bernoulli(two_k) / (Rational(2 * two_k) * factorial(two_k));
}

}  // namespace hkrr
