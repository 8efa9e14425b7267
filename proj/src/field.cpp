#include "sdc/field.hpp"

#include "sdc/error.hpp"
#include "sdc/numutil.hpp"

namespace sdc {

std::uint32_t Field::default_modulus(unsigned m) {
    if (m < 1 || m > 16) fail(errc::unsupported_degree, "field degree must be in [1, 16]");
    return static_cast<std::uint32_t>(f2_least_irreducible(m));
}

Field::Field(unsigned m) { init(m, default_modulus(m)); }

Field::Field(unsigned m, std::uint32_t modulus_bits) { init(m, modulus_bits); }

void Field::init(unsigned m, std::uint32_t modulus_bits) {
    if (m < 1 || m > 16) fail(errc::unsupported_degree, "field degree must be in [1, 16]");
    if (f2_degree(modulus_bits) != static_cast<int>(m) || (modulus_bits & 1) == 0)
        fail(errc::bad_argument, "modulus must have degree m and nonzero constant term");
    if (!f2_is_irreducible(modulus_bits))
        fail(errc::modulus_not_irreducible, "modulus is reducible over F_2");
    m_ = m;
    mod_ = modulus_bits;
    if (m_ <= 8) {
        // log/antilog tables on a primitive element (x itself need not be one)
        const std::uint64_t order = size() - 1;
        auto ofac = factor_u64(order);
        felem gen = 0;
        for (felem c = 1; c <= max_elem(); ++c) {
            bool primitive = order == 1;
            if (order > 1) {
                primitive = true;
                for (auto [p, e] : ofac)
                    if (f2_powmod(c, order / p, mod_) == 1) { primitive = false; break; }
            }
            if (primitive) { gen = c; break; }
        }
        log_.assign(size(), 0);
        exp_.assign(2 * order, 0);
        felem cur = 1;
        for (std::uint64_t i = 0; i < order; ++i) {
            exp_[i] = cur;
            exp_[i + order] = cur;
            log_[cur] = static_cast<felem>(i);
            cur = mul_slow(cur, gen);
        }
        if (order == 1) exp_.assign(2, 1);  // F_2: exp table of the trivial group
    }
}

felem Field::mul_slow(felem a, felem b) const {
    // shift-and-reduce carry-less multiply
    std::uint64_t acc = 0, aa = a;
    while (b) {
        if (b & 1) acc ^= aa;
        aa <<= 1;
        b >>= 1;
    }
    return static_cast<felem>(f2_mod(acc, mod_));
}

felem Field::inv(felem a) const {
    if (a == 0) fail(errc::bad_argument, "inverse of zero");
    if (m_ <= 8) {
        const std::uint64_t order = size() - 1;
        return exp_[(order - log_[a]) % order];
    }
    return pow(a, size() - 2);
}

felem Field::pow(felem a, std::uint64_t e) const {
    felem r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

}  // namespace sdc
