#ifndef SDC_TESTSUPPORT_HPP
#define SDC_TESTSUPPORT_HPP

// Test-only helpers: single-payload mutations that provably leave the
// enumerated families, for negative verification tests.

#include <algorithm>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>

#include "sdc/enumerate.hpp"
#include "sdc/omega.hpp"

namespace sdc::testsupport {

struct Mutation {
    std::size_t slot_index = 0;
    IdealSpec mutated;
    std::string note;
};

inline Poly random_residue(std::mt19937_64& rng, const Field& F, const Poly& f,
                           unsigned digit_count) {
    // element of the quotient mod f^digit_count through its f-adic digits
    const unsigned d = static_cast<unsigned>(f.degree());
    Poly b;
    for (unsigned i = 0; i < digit_count; ++i) {
        const std::uint64_t key = rng() & ((1ULL << (F.degree() * d)) - 1);
        b = poly_add(b, poly_mul(F, elem_from_key(F, key, d), poly_pow(F, f, i)));
    }
    return b;
}

// dual-condition congruence b + delta x^(-d) b(x^(-1)) = 0 (mod f^(t-1))
inline bool dual_congruence_holds(const Field& F, const Poly& f, felem delta,
                                  unsigned t, const Poly& b) {
    if (t < 2) return true;
    QuotRing R(F, f, t - 1);
    const Poly lhs = poly_add(
        R.reduce(b),
        poly_scale(F,
                   R.mul(R.x_inverse_pow(static_cast<std::uint64_t>(f.degree())),
                         R.substitute_x_inverse(b)),
                   delta));
    return lhs.is_zero();
}

inline bool digits_supported_in(const Field&, const QuotRing& digit_ring,
                                const Poly& b, unsigned lo) {
    auto digits = digit_ring.fadic_expand(b);
    for (unsigned i = 0; i < lo && i < digits.size(); ++i)
        if (!digits[i].is_zero()) return false;
    return true;
}

// Payload residue shape of each two-sided family: (t, lo) of
// b in f^lo * (quotient mod f^(t-1)); nullopt when the family has no payload
// freedom to violate.
inline std::optional<std::pair<unsigned, unsigned>> payload_shape(const System& sys,
                                                                  const IdealSpec& spec) {
    const unsigned E = sys.two_s();
    switch (spec.tag) {
        case CaseTag::I_s2_b:
        case CaseTag::I_s3_b:
        case CaseTag::II_2:
            return std::make_pair(E, E / 2 - 1);  // b in f^(2^(s-1)-1) (quot mod f^(2^s-1))
        case CaseTag::I_s3_d:
            return std::make_pair(4u * static_cast<unsigned>(spec.h),
                                  2u * static_cast<unsigned>(spec.h) - 1);
        case CaseTag::I_s3_e:
            return std::make_pair(4u * static_cast<unsigned>(spec.h) + 2,
                                  2u * static_cast<unsigned>(spec.h));
        case CaseTag::II_3:
            return std::make_pair(2u * static_cast<unsigned>(spec.nu),
                                  static_cast<unsigned>(spec.nu) - 1);
        case CaseTag::III_1:
            return std::make_pair(E, E / 2 - 1);
        case CaseTag::III_2: {
            const unsigned t = E - static_cast<unsigned>(spec.k);
            return std::make_pair(t, (t + 1) / 2 - 1);
        }
        case CaseTag::III_4:
        case CaseTag::III_5: {
            const unsigned t = static_cast<unsigned>(spec.t);
            return std::make_pair(t, (t + 1) / 2 - 1);
        }
        default:
            return std::nullopt;
    }
}

// Try to deform the payload of choices[slot_index] outside its prescribed set.
inline std::optional<Mutation> try_mutate(const System& sys,
                                          const std::vector<IdealSpec>& choices,
                                          std::size_t slot_index, std::mt19937_64& rng) {
    const IdealSpec& spec = choices[slot_index];
    const Field& F = sys.field();
    const FactorRec& rec = sys.factors().factors[spec.j - 1];
    const Poly& f = rec.f;
    const bool is_pair = rec.cls == FactorClass::pair_first;

    // reciprocal pairs: a mismatched chain pair is always out of the family lists
    auto misaligned_pair = [&]() {
        Mutation mu;
        mu.slot_index = slot_index;
        IdealSpec bad;
        bad.j = spec.j;
        bad.tag = CaseTag::III_3;
        bad.k = 0;
        const QuotRing& Kj = sys.K(spec.j);
        const QuotRing& Kp = sys.K(rec.partner);
        bad.gens = {GenPair{Kj.reduce(Poly::one()), Poly()}};
        bad.partner_gens = {GenPair{Kp.reduce(Poly::one()), Poly()}};
        mu.mutated = std::move(bad);
        mu.note = "pair chain exponents no longer complementary";
        return mu;
    };

    // payload-free or full-space families: synthesize a payload-bearing family
    // of the same slot and hand it an out-of-set payload
    auto synthesize = [&]() -> std::optional<Mutation> {
        if (is_pair) return misaligned_pair();
        const unsigned E = sys.two_s();
        IdealSpec tmpl;
        tmpl.j = spec.j;
        if (spec.j == 1) {
            if (E < 4) return std::nullopt;  // s = 1 lists every payload
            tmpl.tag = (E == 4) ? CaseTag::I_s2_b : CaseTag::I_s3_b;
        } else {
            tmpl.tag = CaseTag::II_2;
            tmpl.nu = static_cast<int>(E / 2);
        }
        const unsigned t = E, lo = E / 2 - 1;
        QuotRing digit_ring2(F, f, t - 1);
        for (int tries = 0; tries < 500; ++tries) {
            Poly b = random_residue(rng, F, f, t - 1);
            if (digits_supported_in(F, digit_ring2, b, lo) &&
                dual_congruence_holds(F, f, rec.delta, t, b))
                continue;
            Mutation mu;
            mu.slot_index = slot_index;
            mu.mutated = sys.respec(tmpl, std::move(b));
            mu.note = "slot ideal replaced by a same-slot shape with an out-of-set payload";
            return mu;
        }
        return std::nullopt;
    };

    auto shape = payload_shape(sys, spec);
    if (!shape) return synthesize();
    auto [t, lo] = *shape;
    if (t < 2) return synthesize();
    const unsigned digit_count = t - 1;
    QuotRing digit_ring(F, f, digit_count);

    // allowed = prescribed coset support, and (self-reciprocal slots only) the
    // dual-condition congruence; pair payloads carry no congruence constraint
    auto allowed = [&](const Poly& b) {
        if (!digits_supported_in(F, digit_ring, b, lo)) return false;
        if (is_pair) return true;
        return dual_congruence_holds(F, f, rec.delta, t, b);
    };
    if (is_pair && lo == 0) return misaligned_pair();  // whole coset set is prescribed

    for (int tries = 0; tries < 500; ++tries) {
        Poly b = random_residue(rng, F, f, digit_count);
        if (allowed(b)) continue;
        if (b == spec.b) continue;
        Mutation mu;
        mu.slot_index = slot_index;
        mu.mutated = sys.respec(spec, std::move(b));
        mu.note = "payload outside the prescribed set";
        return mu;
    }
    return std::nullopt;
}

inline Mutation random_mutation(const System& sys, const std::vector<IdealSpec>& choices,
                                std::mt19937_64& rng) {
    std::vector<std::size_t> order(choices.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t idx : order)
        if (auto mu = try_mutate(sys, choices, idx, rng)) return *mu;
    throw std::runtime_error("no mutable slot in this record");
}

}  // namespace sdc::testsupport

#endif
