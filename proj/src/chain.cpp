#include "sdc/chain.hpp"

#include <algorithm>
#include <bit>

#include "sdc/error.hpp"
#include "sdc/numutil.hpp"

namespace sdc {

QuotRing::QuotRing(const Field& F, Poly f, unsigned k)
    : field_(&F), f_(std::move(f)), k_(k) {
    if (f_.degree() < 1 || f_.lead() != 1)
        fail(errc::bad_argument, "quotient base must be monic of degree >= 1");
    if (k_ < 1) fail(errc::bad_argument, "quotient exponent must be >= 1");
    d_ = static_cast<unsigned>(f_.degree());
    f_pows_.reserve(k_ + 1);
    f_pows_.push_back(Poly::one());
    for (unsigned e = 1; e <= k_; ++e) f_pows_.push_back(poly_mul(F, f_pows_.back(), f_));
    mod_ = f_pows_[k_];
    if (f_.coeff(0) != 0) {
        auto x = poly_xgcd(F, Poly::x(), mod_);
        if (x.g != Poly::one()) fail(errc::internal, "x not invertible despite f(0) != 0");
        x_inv_ = reduce(x.v);
    } else {
        fail(errc::x_not_invertible, "x is not invertible: f(0) = 0");
    }
}

const Poly& QuotRing::base_power(unsigned e) const {
    if (e > k_) fail(errc::bad_argument, "base power beyond modulus exponent");
    return f_pows_[e];
}

Poly QuotRing::substitute_x_inverse(const Poly& b) const {
    Poly acc;
    // Horner from the top coefficient: acc = acc * xinv + c_i
    for (int i = b.degree(); i >= 0; --i) {
        acc = mul(acc, x_inv_);
        acc = poly_add(acc, Poly::constant(b.coeff(static_cast<std::size_t>(i))));
    }
    return reduce(acc);
}

std::vector<Poly> QuotRing::fadic_expand(const Poly& value) const {
    std::vector<Poly> digits;
    digits.reserve(k_);
    Poly rest = reduce(value);
    for (unsigned i = 0; i < k_; ++i) {
        auto [q, r] = poly_divmod(*field_, rest, f_);
        digits.push_back(std::move(r));
        rest = std::move(q);
    }
    if (!rest.is_zero()) fail(errc::internal, "f-adic expansion left a remainder");
    return digits;
}

Poly QuotRing::fadic_assemble(const std::vector<Poly>& digits) const {
    Poly acc;
    for (std::size_t i = digits.size(); i-- > 0;)
        acc = poly_add(poly_mul(*field_, acc, f_), digits[i]);
    return reduce(acc);
}

std::uint64_t elem_key(const Field& F, const Poly& p, unsigned d) {
    const unsigned m = F.degree();
    if (static_cast<std::uint64_t>(m) * d >= 64)
        fail(errc::too_large, "element key exceeds 64 bits");
    std::uint64_t key = 0;
    for (unsigned i = 0; i < d; ++i)
        key |= static_cast<std::uint64_t>(p.coeff(i)) << (m * i);
    return key;
}

Poly elem_from_key(const Field& F, std::uint64_t key, unsigned d) {
    const unsigned m = F.degree();
    std::vector<felem> c(d, 0);
    for (unsigned i = 0; i < d; ++i)
        c[i] = static_cast<felem>((key >> (m * i)) & F.max_elem());
    return Poly(std::move(c));
}

TraceCtx::TraceCtx(const Field& F, Poly f) {
    ring_ = std::make_shared<QuotRing>(F, std::move(f), 1);
    const unsigned d = ring_->base_degree();
    const unsigned m = F.degree();
    if (d % 2 != 0) fail(errc::trace_undefined, "trace tower needs even base degree");
    md2_ = m * d / 2;
    nbits_ = m * d;
    if (nbits_ > 48) fail(errc::too_large, "trace tower beyond desk scale");

    // least primitive element of F_j, deterministic scan by element key
    const std::uint64_t ord = (1ULL << nbits_) - 1;
    const auto ofac = factor_u64(ord);
    for (std::uint64_t key = 2;; ++key) {
        if (key > ord + 1) fail(errc::internal, "no primitive element found");
        Poly cand = elem_from_key(F, key, d);
        bool ok = true;
        for (auto [p, e] : ofac)
            if (ring_->pow(cand, ord / p) == Poly::one()) { ok = false; break; }
        if (ok) { zeta_ = std::move(cand); break; }
    }

    // H = {0} union powers of eta = zeta^(q'+1), sorted canonically
    const std::uint64_t qp = 1ULL << md2_;
    const Poly eta = ring_->pow(zeta_, qp + 1);
    H_.push_back(Poly::zero());
    Poly cur = Poly::one();
    for (std::uint64_t l = 0; l + 1 < qp; ++l) {
        H_.push_back(cur);
        cur = ring_->mul(cur, eta);
    }
    std::sort(H_.begin(), H_.end(), [&](const Poly& a, const Poly& b) {
        return elem_key(F, a, d) < elem_key(F, b, d);
    });
    if (H_.size() != qp) fail(errc::internal, "subfield has wrong cardinality");

    // RREF of the F_2-linear map xi -> Tr(xi), with solution transform
    std::vector<std::uint64_t> cols(nbits_);
    for (unsigned c = 0; c < nbits_; ++c) {
        Poly basis = elem_from_key(F, 1ULL << c, d);
        cols[c] = elem_key(F, trace(basis), d);
    }
    std::vector<std::uint64_t> mrows(nbits_, 0), trows(nbits_, 0);
    for (unsigned r = 0; r < nbits_; ++r) {
        for (unsigned c = 0; c < nbits_; ++c)
            if ((cols[c] >> r) & 1) mrows[r] |= 1ULL << c;
        trows[r] = 1ULL << r;
    }
    unsigned rank = 0;
    for (unsigned c = 0; c < nbits_ && rank < nbits_; ++c) {
        unsigned sel = rank;
        while (sel < nbits_ && !((mrows[sel] >> c) & 1)) ++sel;
        if (sel == nbits_) continue;
        std::swap(mrows[sel], mrows[rank]);
        std::swap(trows[sel], trows[rank]);
        for (unsigned r = 0; r < nbits_; ++r) {
            if (r != rank && ((mrows[r] >> c) & 1)) {
                mrows[r] ^= mrows[rank];
                trows[r] ^= trows[rank];
            }
        }
        pivot_col_.push_back(static_cast<int>(c));
        ++rank;
    }
    rref_rows_ = std::move(trows);
    if (rank != md2_) fail(errc::internal, "trace map has unexpected rank");
}

Poly TraceCtx::frob_half(const Poly& xi) const {
    Poly r = ring_->reduce(xi);
    for (unsigned i = 0; i < md2_; ++i) r = ring_->mul(r, r);
    return r;
}

Poly TraceCtx::trace(const Poly& xi) const {
    Poly t = poly_add(ring_->reduce(xi), frob_half(xi));
    return t;
}

bool TraceCtx::in_subfield(const Poly& xi) const {
    return frob_half(xi) == ring_->reduce(xi);
}

std::vector<Poly> TraceCtx::trace_preimage(const Poly& alpha) const {
    const Field& F = ring_->field();
    const unsigned d = ring_->base_degree();
    const Poly a = ring_->reduce(alpha);
    if (!in_subfield(a)) fail(errc::not_in_subfield, "trace preimage target not in subfield");
    const std::uint64_t abits = elem_key(F, a, d);
    // transformed rhs, then read solution off the pivots (free coordinates 0)
    std::uint64_t xi_bits = 0;
    for (unsigned r = 0; r < nbits_; ++r) {
        const int y = std::popcount(rref_rows_[r] & abits) & 1;
        if (r < pivot_col_.size()) {
            if (y) xi_bits |= 1ULL << pivot_col_[r];
        } else if (y) {
            fail(errc::not_in_subfield, "trace preimage system inconsistent");
        }
    }
    const Poly hat = elem_from_key(F, xi_bits, d);
    if (trace(hat) != a) fail(errc::internal, "trace preimage solution check failed");
    std::vector<Poly> out;
    out.reserve(H_.size());
    for (const Poly& h : H_) out.push_back(poly_add(hat, h));
    std::sort(out.begin(), out.end(), [&](const Poly& p, const Poly& q) {
        return elem_key(F, p, d) < elem_key(F, q, d);
    });
    return out;
}

}  // namespace sdc
