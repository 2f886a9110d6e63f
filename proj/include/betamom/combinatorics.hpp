#pragma once

#include "betamom/rational.hpp"

#include <stdexcept>
#include <vector>

namespace betamom {

/// Binomial coefficient, 0 outside 0 <= k <= n. Exact at every size.
inline BigInt binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return BigInt(0);
    if (k > n - k) k = n - k;
    BigInt r(1);
    for (long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;  // exact: r is binomial(n-k+i, i) after this step
    }
    return r;
}

/// n-th Catalan number C_n = binomial(2n, n) / (n+1).
inline BigInt catalan(long n) {
    if (n < 0) throw std::invalid_argument("catalan requires n >= 0");
    BigInt r = binomial(2 * n, n);
    r /= (n + 1);
    return r;
}

/// Number of Motzkin paths of length n with exactly m rising steps:
/// binomial(n, 2m) * C_m. Zero when 2m > n.
inline BigInt motzkin_count(long n, long m) {
    if (n < 0 || m < 0) throw std::invalid_argument("motzkin_count requires n, m >= 0");
    if (2 * m > n) return BigInt(0);
    return binomial(n, 2 * m) * catalan(m);
}

/// n-th large Schroeder number: paths from (0,0) to (2n,0) over steps
/// (1,1), (1,-1), (2,0) staying at or above the x axis. Computed by the
/// convolution recurrence R_0 = 1, R_n = R_{n-1} + sum_k R_k R_{n-1-k}.
inline BigInt schroder(long n) {
    if (n < 0) throw std::invalid_argument("schroder requires n >= 0");
    std::vector<BigInt> r;
    r.reserve(static_cast<std::size_t>(n) + 1);
    r.emplace_back(1);
    for (long i = 1; i <= n; ++i) {
        BigInt next = r[static_cast<std::size_t>(i) - 1];
        for (long k = 0; k <= i - 1; ++k)
            next += r[static_cast<std::size_t>(k)] * r[static_cast<std::size_t>(i - 1 - k)];
        r.push_back(std::move(next));
    }
    return r.back();
}

}  // namespace betamom
