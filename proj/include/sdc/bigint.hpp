#ifndef SDC_BIGINT_HPP
#define SDC_BIGINT_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sdc {

// Minimal unsigned big integer for exact code counting. Little-endian 32-bit limbs.
class BigUInt {
public:
    BigUInt() = default;
    BigUInt(std::uint64_t v);

    static BigUInt from_decimal(std::string_view s);
    std::string to_decimal() const;

    bool is_zero() const { return limbs_.empty(); }
    bool fits_u64() const { return limbs_.size() <= 2; }
    std::uint64_t to_u64() const;  // fails if too large

    static int compare(const BigUInt& a, const BigUInt& b);
    bool operator==(const BigUInt& o) const { return limbs_ == o.limbs_; }
    bool operator!=(const BigUInt& o) const { return limbs_ != o.limbs_; }
    bool operator<(const BigUInt& o) const { return compare(*this, o) < 0; }
    bool operator<=(const BigUInt& o) const { return compare(*this, o) <= 0; }

    BigUInt operator+(const BigUInt& o) const;
    BigUInt operator-(const BigUInt& o) const;  // requires *this >= o
    BigUInt operator*(const BigUInt& o) const;
    // Quotient and remainder; divisor must be nonzero.
    static std::pair<BigUInt, BigUInt> divmod(const BigUInt& a, const BigUInt& b);

    BigUInt& operator+=(const BigUInt& o) { return *this = *this + o; }
    BigUInt& operator*=(const BigUInt& o) { return *this = *this * o; }

    static BigUInt pow(const BigUInt& base, std::uint64_t e);
    static BigUInt pow2(std::uint64_t e);  // 2^e

private:
    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    }
    std::vector<std::uint32_t> limbs_;
};

}  // namespace sdc

#endif
