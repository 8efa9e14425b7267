#include "sdc/bigint.hpp"

#include <algorithm>

#include "sdc/error.hpp"

namespace sdc {

BigUInt::BigUInt(std::uint64_t v) {
    if (v) limbs_.push_back(static_cast<std::uint32_t>(v));
    if (v >> 32) limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
}

std::uint64_t BigUInt::to_u64() const {
    if (!fits_u64()) fail(errc::too_large, "count does not fit in 64 bits");
    std::uint64_t v = 0;
    if (limbs_.size() > 0) v |= limbs_[0];
    if (limbs_.size() > 1) v |= static_cast<std::uint64_t>(limbs_[1]) << 32;
    return v;
}

int BigUInt::compare(const BigUInt& a, const BigUInt& b) {
    if (a.limbs_.size() != b.limbs_.size())
        return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (std::size_t i = a.limbs_.size(); i-- > 0;)
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    return 0;
}

BigUInt BigUInt::operator+(const BigUInt& o) const {
    BigUInt r;
    const std::size_t n = std::max(limbs_.size(), o.limbs_.size());
    r.limbs_.resize(n, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t s = carry;
        if (i < limbs_.size()) s += limbs_[i];
        if (i < o.limbs_.size()) s += o.limbs_[i];
        r.limbs_[i] = static_cast<std::uint32_t>(s);
        carry = s >> 32;
    }
    if (carry) r.limbs_.push_back(static_cast<std::uint32_t>(carry));
    return r;
}

BigUInt BigUInt::operator-(const BigUInt& o) const {
    if (compare(*this, o) < 0) fail(errc::internal, "BigUInt underflow");
    BigUInt r;
    r.limbs_.resize(limbs_.size(), 0);
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::int64_t s = static_cast<std::int64_t>(limbs_[i]) - borrow -
                         (i < o.limbs_.size() ? o.limbs_[i] : 0);
        borrow = 0;
        if (s < 0) { s += (1LL << 32); borrow = 1; }
        r.limbs_[i] = static_cast<std::uint32_t>(s);
    }
    r.trim();
    return r;
}

BigUInt BigUInt::operator*(const BigUInt& o) const {
    if (is_zero() || o.is_zero()) return BigUInt();
    BigUInt r;
    r.limbs_.assign(limbs_.size() + o.limbs_.size(), 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < o.limbs_.size(); ++j) {
            std::uint64_t s = static_cast<std::uint64_t>(limbs_[i]) * o.limbs_[j] +
                              r.limbs_[i + j] + carry;
            r.limbs_[i + j] = static_cast<std::uint32_t>(s);
            carry = s >> 32;
        }
        std::size_t k = i + o.limbs_.size();
        while (carry) {
            std::uint64_t s = static_cast<std::uint64_t>(r.limbs_[k]) + carry;
            r.limbs_[k] = static_cast<std::uint32_t>(s);
            carry = s >> 32;
            ++k;
        }
    }
    r.trim();
    return r;
}

std::pair<BigUInt, BigUInt> BigUInt::divmod(const BigUInt& a, const BigUInt& b) {
    if (b.is_zero()) fail(errc::bad_argument, "BigUInt division by zero");
    if (compare(a, b) < 0) return {BigUInt(), a};
    const std::size_t bits = a.limbs_.size() * 32;
    BigUInt q, r;
    q.limbs_.assign(a.limbs_.size(), 0);
    for (std::size_t i = bits; i-- > 0;) {
        // r = 2r + bit_i(a)
        std::uint32_t carry = (a.limbs_[i / 32] >> (i % 32)) & 1u;
        for (std::size_t k = 0; k < r.limbs_.size(); ++k) {
            const std::uint32_t nxt = r.limbs_[k] >> 31;
            r.limbs_[k] = (r.limbs_[k] << 1) | carry;
            carry = nxt;
        }
        if (carry) r.limbs_.push_back(carry);
        if (compare(r, b) >= 0) {
            r = r - b;
            q.limbs_[i / 32] |= 1u << (i % 32);
        }
    }
    q.trim();
    r.trim();
    return {q, r};
}

BigUInt BigUInt::pow(const BigUInt& base, std::uint64_t e) {
    BigUInt r(1), b = base;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

BigUInt BigUInt::pow2(std::uint64_t e) {
    BigUInt r;
    r.limbs_.assign(e / 32 + 1, 0);
    r.limbs_.back() = 1u << (e % 32);
    return r;
}

BigUInt BigUInt::from_decimal(std::string_view s) {
    if (s.empty()) fail(errc::bad_argument, "empty decimal string");
    BigUInt r;
    for (char ch : s) {
        if (ch < '0' || ch > '9') fail(errc::bad_argument, "bad decimal digit");
        r = r * BigUInt(10) + BigUInt(static_cast<std::uint64_t>(ch - '0'));
    }
    return r;
}

std::string BigUInt::to_decimal() const {
    if (is_zero()) return "0";
    std::string out;
    BigUInt cur = *this;
    const BigUInt base(1000000000ULL);
    std::vector<std::uint32_t> chunks;
    while (!cur.is_zero()) {
        auto [q, r] = divmod(cur, base);
        chunks.push_back(r.is_zero() ? 0 : static_cast<std::uint32_t>(r.to_u64()));
        cur = q;
    }
    out = std::to_string(chunks.back());
    for (std::size_t i = chunks.size() - 1; i-- > 0;) {
        std::string part = std::to_string(chunks[i]);
        out += std::string(9 - part.size(), '0') + part;
    }
    return out;
}

}  // namespace sdc
