#ifndef SDC_OMEGA_HPP
#define SDC_OMEGA_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "sdc/bigint.hpp"
#include "sdc/chain.hpp"
#include "sdc/field.hpp"
#include "sdc/poly.hpp"

namespace sdc {

// One W-set produced while stepping through the digit recursion: the prefix of
// digits already fixed and the set of admissible next digits (sorted, in F_j).
struct WSetEntry {
    std::vector<Poly> prefix;
    std::vector<Poly> choices;
};

// Omega_{j,nu} = { beta mod f^nu : beta(x) + x^(-nu d) beta(x^(-1)) = 0 }, for a
// self-reciprocal irreducible f of even degree d. Elements carry their f-adic
// digit trail; ordering is lexicographic on digit keys.
struct OmegaSet {
    unsigned nu = 0;
    std::shared_ptr<const QuotRing> ring;       // F[x]/(f^nu)
    std::vector<Poly> elements;
    std::vector<std::vector<Poly>> trails;      // parallel to elements, nu digits each
    std::vector<WSetEntry> w_sets;              // DFS lineage, step-0 entry first
};

// The defining congruence, evaluated exactly in F[x]/(f^nu).
bool omega_membership(const Field& F, const Poly& f, unsigned nu, const Poly& beta);

// Digit-by-digit construction: seed the first digit from x^(-nu d/2) Tr^(-1)(0),
// then derive each later admissible-digit set from the exact f-adic division of
// the accumulated defect. Every emitted element passes omega_membership.
OmegaSet omega_enumerate(const Field& F, const Poly& f, unsigned nu);

// Independent referee: kernel of the F_{2^m}-linear map
// beta -> beta + x^(-nu d) beta(x^(-1)) on coefficient vectors, enumerated from a
// Gaussian-elimination basis. Same ordering as omega_enumerate.
std::vector<Poly> omega_kernel_oracle(const Field& F, const Poly& f, unsigned nu);

// --- Kronecker-product matrices and nullspace slices ---

// Square F_2 matrix, row bitmasks. Sized for l <= 63.
struct BitMatrix {
    unsigned n = 0;
    std::vector<std::uint64_t> rows;
    bool at(unsigned r, unsigned c) const { return (rows[r] >> c) & 1; }
};

// Upper-left l x l block of I + G, where G doubles by the Kronecker square of
// [[1,0],[1,1]]. Independent of the chosen power-of-two ambient size.
BitMatrix kronecker_M(unsigned l);

// Solutions of M_l B = 0 over F_{2^m} whose first delta coordinates vanish,
// presented through the tail coordinates (b_delta, ..., b_{l-1}). The basis is
// an F_2 reduced-echelon basis; the F_{2^m} solutions are its field-coefficient
// combinations, decoded arithmetically by index.
struct SolutionSpace {
    unsigned l = 0, delta = 0;
    std::vector<std::vector<std::uint8_t>> basis;  // each of length l - delta

    unsigned dim() const { return static_cast<unsigned>(basis.size()); }
    BigUInt cardinality(const Field& F) const {
        return BigUInt::pow(BigUInt(F.size()), dim());
    }
    // idx in [0, (2^m)^dim): base-2^m digits are the basis coefficients.
    std::vector<felem> element(const Field& F, std::uint64_t idx) const;
};

SolutionSpace solution_space(unsigned l, unsigned delta);

}  // namespace sdc

#endif
