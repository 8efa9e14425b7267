#ifndef SDC_FIELD_HPP
#define SDC_FIELD_HPP

#include <cstdint>
#include <vector>

namespace sdc {

// Field element: m-bit mask, little-endian in the power basis (bit i = coeff of a^i).
using felem = std::uint32_t;

// F_{2^m} for 1 <= m <= 16. Immutable after construction; safe for concurrent reads.
class Field {
public:
    // Default modulus: lexicographically least irreducible of degree m.
    explicit Field(unsigned m);
    // Modulus override: bits of a degree-m polynomial over F_2 (bit m must be set,
    // constant term must be 1). Verified irreducible at construction.
    Field(unsigned m, std::uint32_t modulus_bits);

    unsigned degree() const { return m_; }
    std::uint32_t modulus_bits() const { return mod_; }
    std::uint64_t size() const { return 1ULL << m_; }
    felem max_elem() const { return static_cast<felem>((1ULL << m_) - 1); }

    felem add(felem a, felem b) const { return a ^ b; }
    felem mul(felem a, felem b) const {
        if (m_ <= 8) {
            if (a == 0 || b == 0) return 0;
            return exp_[log_[a] + log_[b]];
        }
        return mul_slow(a, b);
    }
    felem inv(felem a) const;
    felem pow(felem a, std::uint64_t e) const;
    felem frobenius(felem a) const { return mul(a, a); }

    bool operator==(const Field& o) const { return m_ == o.m_ && mod_ == o.mod_; }

    static std::uint32_t default_modulus(unsigned m);

private:
    void init(unsigned m, std::uint32_t modulus_bits);
    felem mul_slow(felem a, felem b) const;

    unsigned m_ = 0;
    std::uint32_t mod_ = 0;
    std::vector<felem> exp_, log_;  // filled for m <= 8; exp_ doubled to skip the fold
};

}  // namespace sdc

#endif
