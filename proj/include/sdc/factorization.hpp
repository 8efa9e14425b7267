#ifndef SDC_FACTORIZATION_HPP
#define SDC_FACTORIZATION_HPP

#include <vector>

#include "sdc/field.hpp"
#include "sdc/poly.hpp"

namespace sdc {

enum class FactorClass { self_reciprocal, pair_first, pair_second };

const char* factor_class_name(FactorClass c);

struct FactorRec {
    Poly f;                        // monic irreducible
    unsigned degree = 0;
    FactorClass cls = FactorClass::self_reciprocal;
    unsigned partner = 0;          // 1-based factor index of the reciprocal mate, 0 = self
    felem delta = 1;               // reciprocal(f) = delta * f_partner
    std::vector<unsigned> coset;   // backing 2^m-cyclotomic coset mod n, sorted
};

// Factorization of x^n - 1 over F_{2^m}, classified and deterministically ordered:
// index 0 holds f_1 = x - 1; self-reciprocal factors follow sorted by (degree,
// coefficients); reciprocal pairs come last, the lexicographically smaller mate
// first within rho+1..rho+epsilon and its partner at the mirrored position.
struct FactorData {
    unsigned n = 0, s = 0, N = 0;  // N = 2^s * n
    std::vector<FactorRec> factors;
    unsigned rho = 0, epsilon = 0;  // rho counts j = 1 as self-reciprocal
    std::vector<Poly> idempotents;  // eps_j(x) mod x^N - 1, parallel to factors
};

// Orbits of multiplication by q on Z/nZ, ordered by least representative.
std::vector<std::vector<unsigned>> cyclotomic_cosets(std::uint64_t q, unsigned n);

// Distinct monic irreducible factors of x^n - 1 (n odd), each with its coset,
// unordered beyond coset least-representative order. Errors on even n.
std::vector<FactorRec> factor_xn_minus_1(const Field& F, unsigned n);

// Assigns classes, partners and deltas, reorders per the deterministic layout,
// and checks delta = 1 / even degree for self-reciprocal factors beyond x - 1.
void classify_reciprocal(const Field& F, std::vector<FactorRec>& factors,
                         unsigned& rho, unsigned& epsilon);

// CRT idempotents eps_j(x) = (v_j F_j)^(2^s) mod x^(2^s n) - 1.
std::vector<Poly> idempotents(const Field& F, const std::vector<FactorRec>& factors,
                              unsigned n, unsigned s);

// Full pipeline: factor, classify, idempotents.
FactorData factor_system(const Field& F, unsigned n, unsigned s);

}  // namespace sdc

#endif
