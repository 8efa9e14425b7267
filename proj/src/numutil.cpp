#include "sdc/numutil.hpp"

#include "sdc/error.hpp"

namespace sdc {

std::vector<std::pair<std::uint64_t, unsigned>> factor_u64(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        unsigned e = 0;
        while (n % p == 0) { n /= p; ++e; }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % n);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t n) {
    std::uint64_t r = 1 % n;
    a %= n;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, n);
        a = mulmod_u64(a, a, n);
        e >>= 1;
    }
    return r;
}

unsigned multiplicative_order(std::uint64_t q, std::uint64_t n) {
    if (n == 1) return 1;
    std::uint64_t cur = q % n;
    if (cur == 0) fail(errc::bad_argument, "multiplicative_order: q divisible by n");
    unsigned t = 1;
    while (cur != 1) {
        cur = mulmod_u64(cur, q % n, n);
        ++t;
        if (t > n) fail(errc::bad_argument, "multiplicative_order: gcd(q, n) != 1");
    }
    return t;
}

int f2_degree(std::uint64_t a) {
    if (a == 0) return -1;
    return 63 - __builtin_clzll(a);
}

std::uint64_t f2_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    while (b) {
        if (b & 1) r ^= a;
        a <<= 1;
        b >>= 1;
    }
    return r;
}

std::uint64_t f2_mod(std::uint64_t a, std::uint64_t mod) {
    const int dm = f2_degree(mod);
    int da = f2_degree(a);
    while (da >= dm) {
        a ^= mod << (da - dm);
        da = f2_degree(a);
    }
    return a;
}

std::uint64_t f2_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
    return f2_mod(f2_mul(a, b), mod);
}

std::uint64_t f2_gcd(std::uint64_t a, std::uint64_t b) {
    while (b) {
        a = f2_mod(a, b);
        std::swap(a, b);
    }
    return a;
}

std::uint64_t f2_powmod(std::uint64_t a, std::uint64_t e, std::uint64_t mod) {
    std::uint64_t r = f2_mod(1, mod);
    a = f2_mod(a, mod);
    while (e) {
        if (e & 1) r = f2_mulmod(r, a, mod);
        a = f2_mulmod(a, a, mod);
        e >>= 1;
    }
    return r;
}

bool f2_is_irreducible(std::uint64_t f) {
    const int d = f2_degree(f);
    if (d < 1) return false;
    if (d == 1) return true;
    if ((f & 1) == 0) return false;  // x divides
    // t = x^(2^k) mod f by repeated squaring of x
    std::uint64_t t = 2;
    for (int k = 0; k < d; ++k) t = f2_mulmod(t, t, f);
    if (t != 2) return false;
    for (auto [p, e] : factor_u64(static_cast<std::uint64_t>(d))) {
        std::uint64_t u = 2;
        for (unsigned k = 0; k < d / p; ++k) u = f2_mulmod(u, u, f);
        if (f2_gcd(u ^ 2ULL, f) != 1) return false;
    }
    return true;
}

std::uint64_t f2_least_irreducible(unsigned d) {
    if (d < 1 || d > 32) fail(errc::unsupported_degree, "degree out of range for modulus table");
    if (d == 1) return 0b11;  // x + 1
    const std::uint64_t lo = 1ULL << d, hi = 1ULL << (d + 1);
    for (std::uint64_t c = lo | 1; c < hi; c += 2)
        if (f2_is_irreducible(c)) return c;
    fail(errc::internal, "no irreducible of requested degree");
}

}  // namespace sdc
