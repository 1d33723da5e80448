#pragma once

#include <cstdint>
#include <stdexcept>

namespace detrep {

// C(n, k) as int64, exact; throws on overflow. Good far beyond every grid
// used here (n up to ~60).
inline long long binom(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    __int128 r = 1;
    for (long long i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > (__int128)INT64_MAX) throw std::overflow_error("binom: int64 overflow");
    }
    return (long long)r;
}

} // namespace detrep
