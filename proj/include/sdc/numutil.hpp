#ifndef SDC_NUMUTIL_HPP
#define SDC_NUMUTIL_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace sdc {

// Prime factorization by trial division. Intended for n up to ~2^44
// (orders of small binary extension fields); not a general factorizer.
std::vector<std::pair<std::uint64_t, unsigned>> factor_u64(std::uint64_t n);

// Smallest t >= 1 with q^t = 1 (mod n); requires gcd(q, n) = 1.
unsigned multiplicative_order(std::uint64_t q, std::uint64_t n);

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t n);
std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t n);

// --- F_2[y] on bitmasks, bit i = coefficient of y^i ---

int f2_degree(std::uint64_t a);  // -1 for zero
std::uint64_t f2_mul(std::uint64_t a, std::uint64_t b);  // carry-less, deg sum < 64
std::uint64_t f2_mod(std::uint64_t a, std::uint64_t mod);
std::uint64_t f2_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t mod);
std::uint64_t f2_gcd(std::uint64_t a, std::uint64_t b);
std::uint64_t f2_powmod(std::uint64_t a, std::uint64_t e, std::uint64_t mod);

// Irreducibility of a degree-d mask polynomial over F_2 (d >= 1):
// x^(2^d) = x (mod f) together with gcd(x^(2^(d/p)) - x, f) = 1 for primes p | d.
bool f2_is_irreducible(std::uint64_t f);

// Lexicographically least irreducible mask of degree d (1 <= d <= 32).
std::uint64_t f2_least_irreducible(unsigned d);

}  // namespace sdc

#endif
