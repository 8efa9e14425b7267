#ifndef SDC_POLY_HPP
#define SDC_POLY_HPP

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sdc/field.hpp"

namespace sdc {

// Dense univariate polynomial over F_{2^m}. coeffs[i] is the coefficient of x^i;
// the representation is normalized so the last entry is nonzero (empty = zero).
// Degree of the zero polynomial is reported as -1 (sentinel for -infinity).
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<felem> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static Poly zero() { return Poly(); }
    static Poly constant(felem c) { return Poly({c}); }
    static Poly one() { return constant(1); }
    static Poly x() { return Poly({0, 1}); }
    static Poly monomial(std::size_t k, felem c = 1);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    felem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    felem lead() const { return c_.empty() ? 0 : c_.back(); }
    std::span<const felem> coeffs() const { return c_; }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return c_ != o.c_; }

    // Ordering: by degree, then coefficients compared from the leading term down.
    // Equivalent to comparing sum coeff_i * (2^m)^i as integers.
    static int compare(const Poly& a, const Poly& b);

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<felem> c_;
};

struct PolyLess {
    bool operator()(const Poly& a, const Poly& b) const { return Poly::compare(a, b) < 0; }
};

Poly poly_add(const Poly& a, const Poly& b);  // characteristic 2: also subtraction
Poly poly_mul(const Field& F, const Poly& a, const Poly& b);
Poly poly_scale(const Field& F, const Poly& a, felem c);
// Quotient and remainder; b must be nonzero.
std::pair<Poly, Poly> poly_divmod(const Field& F, const Poly& a, const Poly& b);
Poly poly_mod(const Field& F, const Poly& a, const Poly& b);
Poly poly_monic(const Field& F, const Poly& a);
felem poly_eval(const Field& F, const Poly& a, felem x);
Poly poly_pow(const Field& F, Poly base, std::uint64_t e);
Poly poly_powmod(const Field& F, Poly base, std::uint64_t e, const Poly& mod);

struct PolyXgcd {
    Poly g, v, w;  // g = gcd(a, b) monic, with v*a + w*b = g
};
PolyXgcd poly_xgcd(const Field& F, const Poly& a, const Poly& b);

// x^(deg f) * f(1/x); requires f(0) != 0. Involution on such polynomials.
Poly poly_reciprocal(const Poly& f);

// Text form: terms joined by "+" in ascending exponent order; for m = 1 a term is
// "1", "x" or "x^k"; for m > 1 every term carries its coefficient as a lowercase
// hex mask ("2", "1*x", "3*x^2"). The zero polynomial prints as "0".
std::string poly_to_text(const Field& F, const Poly& p);
Poly poly_from_text(const Field& F, std::string_view text);

}  // namespace sdc

#endif
