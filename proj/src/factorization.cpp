#include "sdc/factorization.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "sdc/error.hpp"
#include "sdc/numutil.hpp"

namespace sdc {

const char* factor_class_name(FactorClass c) {
    switch (c) {
        case FactorClass::self_reciprocal: return "self_reciprocal";
        case FactorClass::pair_first: return "pair_first";
        case FactorClass::pair_second: return "pair_second";
    }
    return "?";
}

std::vector<std::vector<unsigned>> cyclotomic_cosets(std::uint64_t q, unsigned n) {
    std::vector<bool> seen(n, false);
    std::vector<std::vector<unsigned>> cosets;
    for (unsigned a = 0; a < n; ++a) {
        if (seen[a]) continue;
        std::vector<unsigned> orbit;
        std::uint64_t cur = a;
        do {
            orbit.push_back(static_cast<unsigned>(cur));
            seen[cur] = true;
            cur = mulmod_u64(cur, q % n, n);
        } while (cur != a);
        std::sort(orbit.begin(), orbit.end());
        cosets.push_back(std::move(orbit));
    }
    return cosets;
}

namespace {

// F_{2^D} on uint64 masks, D <= 32; the splitting field of x^n - 1.
struct BinaryExt {
    unsigned D;
    std::uint64_t mod;

    explicit BinaryExt(unsigned degree) : D(degree), mod(f2_least_irreducible(degree)) {}

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return f2_mulmod(a, b, mod); }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const { return f2_powmod(a, e, mod); }
    std::uint64_t order() const { return (D == 64) ? ~0ULL : (1ULL << D) - 1; }

    std::uint64_t least_primitive() const {
        const std::uint64_t ord = order();
        auto fac = factor_u64(ord);
        for (std::uint64_t c = 2;; ++c) {
            bool ok = true;
            for (auto [p, e] : fac)
                if (pow(c, ord / p) == 1) { ok = false; break; }
            if (ok) return c;
        }
    }
};

}  // namespace

std::vector<FactorRec> factor_xn_minus_1(const Field& F, unsigned n) {
    if (n == 0 || n % 2 == 0)
        fail(errc::even_length, "n must be odd and positive");
    const unsigned m = F.degree();
    const std::uint64_t q = F.size();
    const auto cosets = cyclotomic_cosets(q, n);

    std::vector<FactorRec> out;
    if (n == 1) {
        FactorRec rec;
        rec.f = Poly({1, 1});
        rec.degree = 1;
        rec.coset = {0};
        out.push_back(std::move(rec));
        return out;
    }

    const unsigned t = multiplicative_order(q, n);
    if (static_cast<std::uint64_t>(m) * t > 32)
        fail(errc::too_large, "splitting field degree " + std::to_string(m * t) +
                                  " exceeds the supported desk scale (32)");
    const unsigned D = m * t;
    BinaryExt E(D);
    const std::uint64_t w = E.least_primitive();
    const std::uint64_t zeta = E.pow(w, E.order() / n);  // primitive n-th root of unity

    // Embed F_{2^m} into F_{2^D}: send the base generator to the least root of the
    // base modulus inside the subfield of size 2^m.
    std::vector<std::uint64_t> embed(F.size(), 0);
    if (m == 1) {
        embed[1] = 1;
    } else {
        const std::uint64_t sub_ord = F.size() - 1;
        const std::uint64_t gamma = E.pow(w, E.order() / sub_ord);
        std::uint64_t alpha_img = 0;
        std::uint64_t best = ~0ULL;
        for (std::uint64_t l = 0; l < sub_ord; ++l) {
            const std::uint64_t cand = E.pow(gamma, l);
            // evaluate the base modulus (an F_2 polynomial) at cand
            std::uint64_t acc = 0;
            for (int bit = f2_degree(F.modulus_bits()); bit >= 0; --bit) {
                acc = E.mul(acc, cand);
                if ((F.modulus_bits() >> bit) & 1) acc ^= 1;
            }
            if (acc == 0 && cand < best) best = cand;
        }
        if (best == ~0ULL) fail(errc::internal, "no root of base modulus in splitting field");
        alpha_img = best;
        for (felem a = 0; a < F.size(); ++a) {
            std::uint64_t acc = 0;
            for (int bit = static_cast<int>(m) - 1; bit >= 0; --bit) {
                acc = E.mul(acc, alpha_img);
                if ((a >> bit) & 1) acc ^= 1;
            }
            embed[a] = acc;
        }
    }
    std::map<std::uint64_t, felem> unembed;
    for (felem a = 0; a < F.size(); ++a) unembed[embed[a]] = a;

    for (const auto& coset : cosets) {
        // f_J(x) = prod_{i in J} (x - zeta^i), computed in the splitting field
        std::vector<std::uint64_t> fc{1};  // monic, coefficients high-to-low build
        for (unsigned i : coset) {
            const std::uint64_t root = E.pow(zeta, i);
            std::vector<std::uint64_t> nxt(fc.size() + 1, 0);
            for (std::size_t k = 0; k < fc.size(); ++k) {
                nxt[k] ^= E.mul(fc[k], root);  // char 2: -root = root
                nxt[k + 1] ^= fc[k];
            }
            fc = std::move(nxt);
        }
        std::vector<felem> down(fc.size());
        for (std::size_t k = 0; k < fc.size(); ++k) {
            auto it = unembed.find(fc[k]);
            if (it == unembed.end())
                fail(errc::internal, "factor coefficient not in base field image");
            down[k] = it->second;
        }
        FactorRec rec;
        rec.f = Poly(std::move(down));
        rec.degree = static_cast<unsigned>(coset.size());
        rec.coset = coset;
        if (static_cast<unsigned>(rec.f.degree()) != rec.degree)
            fail(errc::internal, "factor degree does not match its coset size");
        out.push_back(std::move(rec));
    }

    // product must reproduce x^n - 1 bit-exactly
    Poly prod = Poly::one();
    for (const auto& rec : out) prod = poly_mul(F, prod, rec.f);
    Poly xn1 = poly_add(Poly::monomial(n), Poly::one());
    if (prod != xn1) fail(errc::internal, "factor product does not reproduce x^n - 1");
    return out;
}

void classify_reciprocal(const Field& F, std::vector<FactorRec>& factors,
                         unsigned& rho, unsigned& epsilon) {
    const Poly x_minus_1({1, 1});
    std::vector<FactorRec> selfrec, first_of_pair;
    std::vector<std::pair<FactorRec, FactorRec>> pairs;
    std::vector<bool> used(factors.size(), false);

    auto find_factor = [&](const Poly& p) -> std::size_t {
        for (std::size_t i = 0; i < factors.size(); ++i)
            if (factors[i].f == p) return i;
        fail(errc::classification_broken, "reciprocal mate is not a factor");
    };

    FactorRec unit;
    bool unit_seen = false;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (used[i]) continue;
        FactorRec& rec = factors[i];
        const Poly recip = poly_reciprocal(rec.f);
        const Poly recip_monic = poly_monic(F, recip);
        const felem delta = poly_eval(F, rec.f, 0);  // monic-to-monic scaling
        if (poly_scale(F, recip_monic, delta) != recip)
            fail(errc::classification_broken, "delta does not rescale the reciprocal");
        if (recip_monic == rec.f) {
            rec.cls = FactorClass::self_reciprocal;
            rec.delta = delta;
            used[i] = true;
            if (rec.f == x_minus_1) {
                unit = rec;
                unit_seen = true;
            } else {
                if (delta != 1)
                    fail(errc::classification_broken, "self-reciprocal factor with delta != 1");
                if (rec.degree % 2 != 0)
                    fail(errc::classification_broken, "self-reciprocal factor of odd degree");
                selfrec.push_back(rec);
            }
        } else {
            const std::size_t mate = find_factor(recip_monic);
            if (mate == i || used[mate])
                fail(errc::classification_broken, "pair partner mismatch");
            used[i] = used[mate] = true;
            FactorRec a = rec, b = factors[mate];
            if (Poly::compare(b.f, a.f) < 0) std::swap(a, b);
            a.cls = FactorClass::pair_first;
            b.cls = FactorClass::pair_second;
            a.delta = poly_eval(F, a.f, 0);
            b.delta = poly_eval(F, b.f, 0);
            pairs.emplace_back(std::move(a), std::move(b));
        }
    }
    if (!unit_seen) fail(errc::classification_broken, "x - 1 missing from factorization");
    if (unit.delta != 1) fail(errc::classification_broken, "delta of x - 1 must be 1");

    auto rec_less = [](const FactorRec& a, const FactorRec& b) {
        return Poly::compare(a.f, b.f) < 0;
    };
    std::sort(selfrec.begin(), selfrec.end(), rec_less);
    std::sort(pairs.begin(), pairs.end(),
              [&](const auto& a, const auto& b) { return rec_less(a.first, b.first); });

    rho = 1 + static_cast<unsigned>(selfrec.size());
    epsilon = static_cast<unsigned>(pairs.size());

    std::vector<FactorRec> ordered;
    ordered.reserve(factors.size());
    ordered.push_back(std::move(unit));
    for (auto& r : selfrec) ordered.push_back(std::move(r));
    for (auto& pr : pairs) ordered.push_back(std::move(pr.first));
    for (auto& pr : pairs) ordered.push_back(std::move(pr.second));

    for (unsigned j = 1; j <= ordered.size(); ++j) {
        FactorRec& rec = ordered[j - 1];
        if (rec.cls == FactorClass::self_reciprocal) rec.partner = 0;
        else if (rec.cls == FactorClass::pair_first) rec.partner = j + epsilon;
        else rec.partner = j - epsilon;
    }
    // delta assertion: reciprocal(f_j) = delta_j * f_partner exactly
    for (unsigned j = 1; j <= ordered.size(); ++j) {
        const FactorRec& rec = ordered[j - 1];
        const Poly& mate = rec.partner ? ordered[rec.partner - 1].f : rec.f;
        if (poly_reciprocal(rec.f) != poly_scale(F, mate, rec.delta))
            fail(errc::classification_broken, "reciprocal/partner/delta inconsistency");
    }
    factors = std::move(ordered);
}

std::vector<Poly> idempotents(const Field& F, const std::vector<FactorRec>& factors,
                              unsigned n, unsigned s) {
    if (s < 1) fail(errc::bad_argument, "s must be >= 1");
    const unsigned N = (1u << s) * n;
    const Poly xN1 = poly_add(Poly::monomial(N), Poly::one());
    const Poly xn1 = poly_add(Poly::monomial(n), Poly::one());
    std::vector<Poly> eps;
    eps.reserve(factors.size());
    for (const auto& rec : factors) {
        const Poly Fj = poly_divmod(F, xn1, rec.f).first;
        const auto x = poly_xgcd(F, Fj, rec.f);
        if (x.g != Poly::one()) fail(errc::internal, "F_j and f_j are not coprime");
        // eps_j = (v_j F_j)^(2^s) mod x^N - 1, by repeated squaring
        Poly e = poly_mod(F, poly_mul(F, x.v, Fj), xN1);
        for (unsigned k = 0; k < s; ++k) e = poly_mod(F, poly_mul(F, e, e), xN1);
        eps.push_back(std::move(e));
    }
    return eps;
}

FactorData factor_system(const Field& F, unsigned n, unsigned s) {
    if (s < 1) fail(errc::bad_argument, "s must be >= 1");
    FactorData fd;
    fd.n = n;
    fd.s = s;
    fd.N = (1u << s) * n;
    fd.factors = factor_xn_minus_1(F, n);
    classify_reciprocal(F, fd.factors, fd.rho, fd.epsilon);
    fd.idempotents = idempotents(F, fd.factors, n, s);
    return fd;
}

}  // namespace sdc
