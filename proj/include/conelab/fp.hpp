#pragma once

/**
 * @file fp.hpp
 * @brief Arithmetic modulo a runtime prime p < 2^62 in Montgomery form.
 *
 * Matrix elimination spends nearly all of its time in fused multiply-subtract
 * steps, so field elements are kept in Montgomery representation (x * 2^64
 * mod p) and reduced with a single 64x64 REDC per product.  Values are plain
 * uint64_t; the field object carries the constants.
 */

#include <cstdint>
#include <stdexcept>

namespace conelab {

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % mod);
}

inline std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    std::uint64_t r = 1 % mod;
    base %= mod;
    while (exp) {
        if (exp & 1) r = mulmod_u64(r, base, mod);
        base = mulmod_u64(base, base, mod);
        exp >>= 1;
    }
    return r;
}

}  // namespace detail

/// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = detail::powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 0; i < r - 1; ++i) {
            x = detail::mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

class PrimeField {
public:
    explicit PrimeField(std::uint64_t prime) : p_(prime) {
        if (prime < 3 || (prime & 1) == 0 || prime >= (1ULL << 62))
            throw std::invalid_argument("PrimeField: prime must be odd and < 2^62");
        // -p^{-1} mod 2^64 by Newton iteration.
        std::uint64_t inv = prime;
        for (int i = 0; i < 5; ++i) inv *= 2 - prime * inv;
        ninv_ = ~inv + 1;
        one_ = (~std::uint64_t(0)) % prime + 1;  // 2^64 mod p
        // 2^128 mod p: double 2^64 mod p sixty-four times.
        std::uint64_t r2 = one_;
        for (int i = 0; i < 64; ++i) r2 = add(r2, r2);
        r2_ = r2;
    }

    std::uint64_t prime() const { return p_; }
    std::uint64_t zero() const { return 0; }
    std::uint64_t one() const { return one_; }

    std::uint64_t to_mont(std::uint64_t x) const { return mul(x % p_, r2_); }
    std::uint64_t from_mont(std::uint64_t a) const { return redc(a); }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }

    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
        return a >= b ? a - b : a + p_ - b;
    }

    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return redc(static_cast<unsigned __int128>(a) * b);
    }

    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
        std::uint64_t r = one_;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    std::uint64_t inv(std::uint64_t a) const {
        if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
        return pow(a, p_ - 2);
    }

private:
    std::uint64_t redc(unsigned __int128 t) const {
        std::uint64_t m = static_cast<std::uint64_t>(t) * ninv_;
        std::uint64_t r = static_cast<std::uint64_t>(
            (t + static_cast<unsigned __int128>(m) * p_) >> 64);
        return r >= p_ ? r - p_ : r;
    }

    std::uint64_t p_;
    std::uint64_t ninv_;
    std::uint64_t r2_;
    std::uint64_t one_;
};

}  // namespace conelab
