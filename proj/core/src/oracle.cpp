#include "curlicue/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "curlicue/errors.hpp"

namespace curlicue {

namespace {

// Divides out every power of p; returns whether p divided n.
bool take_factor(std::uint64_t& n, std::uint64_t p, std::vector<PrimePower>& out) {
    int exponent = 0;
    while (n % p == 0) {
        n /= p;
        ++exponent;
    }
    if (exponent == 0) return false;
    out.push_back({static_cast<std::int64_t>(p), exponent});
    return true;
}

std::uint64_t isqrt(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r > n / r) --r;
    while ((r + 1) <= n / (r + 1)) ++r;
    return r;
}

}  // namespace

std::vector<std::int64_t> Factorization::divisors() const {
    std::vector<std::int64_t> result{1};
    for (const auto& [p, e] : prime_powers) {
        const std::size_t existing = result.size();
        std::int64_t power = 1;
        for (int k = 0; k < e; ++k) {
            power *= p;
            for (std::size_t i = 0; i < existing; ++i) result.push_back(result[i] * power);
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

Factorization trial_division(std::int64_t n) {
    if (n < 2) throw OutOfRange("trial division needs 2 <= N < 2^63, got " + std::to_string(n));
    Factorization f{n, {}};
    auto rest = static_cast<std::uint64_t>(n);
    take_factor(rest, 2, f.prime_powers);
    take_factor(rest, 3, f.prime_powers);
    // 6k +/- 1 wheel; the bound only shrinks when a factor comes out.
    std::uint64_t limit = isqrt(rest);
    for (std::uint64_t p = 5; p <= limit; p += 6) {
        const bool a = take_factor(rest, p, f.prime_powers);
        const bool b = take_factor(rest, p + 2, f.prime_powers);
        if (a || b) limit = isqrt(rest);
    }
    if (rest > 1) f.prime_powers.push_back({static_cast<std::int64_t>(rest), 1});
    return f;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (std::int64_t p = 5; p <= n / p; p += 6) {
        if (n % p == 0 || n % (p + 2) == 0) return false;
    }
    return true;
}

std::vector<std::int64_t> divisors_in_window(std::int64_t n, std::int64_t lo, std::int64_t hi) {
    if (n < 1 || lo < 1 || lo > hi) {
        throw OutOfRange("divisor window requires N >= 1 and 1 <= lo <= hi");
    }
    std::vector<std::int64_t> result;
    const std::int64_t stop = std::min(hi, n);
    for (std::int64_t d = lo; d <= stop; ++d) {
        if (n % d == 0) result.push_back(d);
    }
    return result;
}

}  // namespace curlicue
