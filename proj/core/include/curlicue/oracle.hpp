#pragma once

// Trial-division ground truth. Slow on purpose: every acceptance check is
// anchored here, so the code stays trivially auditable.

#include <cstdint>
#include <vector>

namespace curlicue {

struct PrimePower {
    std::int64_t prime;
    int exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
    std::int64_t n;
    std::vector<PrimePower> prime_powers;

    bool is_prime() const noexcept {
        return prime_powers.size() == 1 && prime_powers.front().exponent == 1;
    }
    /// All positive divisors, ascending.
    std::vector<std::int64_t> divisors() const;
};

/// Complete factorization of 2 <= n < 2^63. Throws OutOfRange otherwise.
Factorization trial_division(std::int64_t n);

/// Every d in [lo, hi] dividing n, ascending. Throws OutOfRange unless
/// n >= 1 and 1 <= lo <= hi.
std::vector<std::int64_t> divisors_in_window(std::int64_t n, std::int64_t lo, std::int64_t hi);

bool is_prime(std::int64_t n);

}  // namespace curlicue
