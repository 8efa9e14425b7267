#ifndef SDC_CHAIN_HPP
#define SDC_CHAIN_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "sdc/field.hpp"
#include "sdc/poly.hpp"

namespace sdc {

// F_{2^m}[x]/(f^k) for monic irreducible f. Values are reduced Polys of degree
// < k*deg(f). Immutable after construction; safe for concurrent reads.
class QuotRing {
public:
    QuotRing(const Field& F, Poly f, unsigned k);

    const Field& field() const { return *field_; }
    const Poly& base() const { return f_; }
    unsigned exponent() const { return k_; }
    unsigned base_degree() const { return d_; }
    const Poly& modulus() const { return mod_; }

    Poly reduce(const Poly& p) const { return poly_mod(*field_, p, mod_); }
    Poly mul(const Poly& a, const Poly& b) const { return reduce(poly_mul(*field_, a, b)); }
    Poly pow(const Poly& a, std::uint64_t e) const { return poly_powmod(*field_, a, e, mod_); }

    // Multiplicative inverse of x mod f^k (extended gcd); requires f(0) != 0.
    const Poly& x_inverse() const { return x_inv_; }
    Poly x_inverse_pow(std::uint64_t e) const { return pow(x_inv_, e); }

    // b evaluated at x^{-1}: sum c_i * (x^{-1})^i, F_{2^m}-linear in the c_i.
    Poly substitute_x_inverse(const Poly& b) const;

    // Unique f-adic digits (b_0, ..., b_{k-1}), each of degree < deg(f), with
    // value = sum b_i f^i. fadic_assemble is the inverse.
    std::vector<Poly> fadic_expand(const Poly& value) const;
    Poly fadic_assemble(const std::vector<Poly>& digits) const;

    // Power f^e for 0 <= e <= k, cached.
    const Poly& base_power(unsigned e) const;

private:
    const Field* field_;
    Poly f_;
    unsigned k_, d_;
    Poly mod_;
    Poly x_inv_;
    std::vector<Poly> f_pows_;
};

// Packed coefficient key of an element of F[x]/(f): sum coeff_i * 2^(m*i).
// Canonical order for subfield/preimage/Omega listings; requires m*deg < 64.
std::uint64_t elem_key(const Field& F, const Poly& p, unsigned d);
Poly elem_from_key(const Field& F, std::uint64_t key, unsigned d);

// Trace tower over F_j = F[x]/(f) with deg(f) = d even: the index-2 subfield
// H = {h : h^q' = h}, q' = 2^(m d/2), and Tr(xi) = xi + xi^q'.
class TraceCtx {
public:
    TraceCtx(const Field& F, Poly f);

    const QuotRing& ring() const { return *ring_; }
    unsigned d() const { return ring_->base_degree(); }

    Poly frob_half(const Poly& xi) const;  // xi^(2^(m d/2))
    Poly trace(const Poly& xi) const;      // xi + frob_half(xi); lies in H
    bool in_subfield(const Poly& xi) const;

    const Poly& zeta() const { return zeta_; }            // primitive element of F_j
    const std::vector<Poly>& subfield() const { return H_; }  // sorted by elem_key

    // All 2^(m d/2) preimages of alpha under Tr, sorted by elem_key.
    // alpha must lie in H (checked); one solution comes from the F_2-linear
    // system for Tr, the rest are its coset by H.
    std::vector<Poly> trace_preimage(const Poly& alpha) const;

private:
    std::shared_ptr<const QuotRing> ring_;
    unsigned md2_;           // m*d/2, number of squarings for frob_half
    Poly zeta_;
    std::vector<Poly> H_;
    // RREF solver state for the F_2-linear map xi -> Tr(xi) on md basis bits
    unsigned nbits_;
    std::vector<std::uint64_t> rref_rows_;   // [Tr-matrix row | solution-transform row]
    std::vector<int> pivot_col_;
};

}  // namespace sdc

#endif
