#include "sdc/poly.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <utility>

#include "sdc/error.hpp"

namespace sdc {

Poly Poly::monomial(std::size_t k, felem c) {
    if (c == 0) return Poly();
    std::vector<felem> v(k + 1, 0);
    v[k] = c;
    return Poly(std::move(v));
}

int Poly::compare(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (int i = a.degree(); i >= 0; --i) {
        const felem ca = a.c_[static_cast<std::size_t>(i)];
        const felem cb = b.c_[static_cast<std::size_t>(i)];
        if (ca != cb) return ca < cb ? -1 : 1;
    }
    return 0;
}

Poly poly_add(const Poly& a, const Poly& b) {
    const std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
    std::vector<felem> v(n, 0);
    for (std::size_t i = 0; i < n; ++i) v[i] = a.coeff(i) ^ b.coeff(i);
    return Poly(std::move(v));
}

Poly poly_mul(const Field& F, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<felem> v(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        const felem ai = a.coeff(i);
        if (ai == 0) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            v[i + j] ^= F.mul(ai, b.coeff(j));
    }
    return Poly(std::move(v));
}

Poly poly_scale(const Field& F, const Poly& a, felem c) {
    if (c == 0) return Poly();
    std::vector<felem> v(a.coeffs().begin(), a.coeffs().end());
    for (auto& e : v) e = F.mul(e, c);
    return Poly(std::move(v));
}

std::pair<Poly, Poly> poly_divmod(const Field& F, const Poly& a, const Poly& b) {
    if (b.is_zero()) fail(errc::bad_argument, "polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<felem> rem(a.coeffs().begin(), a.coeffs().end());
    std::vector<felem> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1, 0);
    const felem inv_lead = F.inv(b.lead());
    for (int i = a.degree(); i >= b.degree(); --i) {
        const felem c = rem[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        const felem q = F.mul(c, inv_lead);
        quo[static_cast<std::size_t>(i - b.degree())] = q;
        for (int j = 0; j <= b.degree(); ++j)
            rem[static_cast<std::size_t>(i - b.degree() + j)] ^=
                F.mul(q, b.coeff(static_cast<std::size_t>(j)));
    }
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly poly_mod(const Field& F, const Poly& a, const Poly& b) {
    return poly_divmod(F, a, b).second;
}

Poly poly_monic(const Field& F, const Poly& a) {
    if (a.is_zero() || a.lead() == 1) return a;
    return poly_scale(F, a, F.inv(a.lead()));
}

felem poly_eval(const Field& F, const Poly& a, felem x) {
    felem r = 0;
    for (int i = a.degree(); i >= 0; --i)
        r = F.mul(r, x) ^ a.coeff(static_cast<std::size_t>(i));
    return r;
}

Poly poly_pow(const Field& F, Poly base, std::uint64_t e) {
    Poly r = Poly::one();
    while (e) {
        if (e & 1) r = poly_mul(F, r, base);
        base = poly_mul(F, base, base);
        e >>= 1;
    }
    return r;
}

Poly poly_powmod(const Field& F, Poly base, std::uint64_t e, const Poly& mod) {
    Poly r = poly_mod(F, Poly::one(), mod);
    base = poly_mod(F, base, mod);
    while (e) {
        if (e & 1) r = poly_mod(F, poly_mul(F, r, base), mod);
        base = poly_mod(F, poly_mul(F, base, base), mod);
        e >>= 1;
    }
    return r;
}

PolyXgcd poly_xgcd(const Field& F, const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) fail(errc::zero_gcd, "gcd(0, 0) is undefined");
    Poly r0 = a, r1 = b;
    Poly v0 = Poly::one(), v1 = Poly::zero();
    Poly w0 = Poly::zero(), w1 = Poly::one();
    while (!r1.is_zero()) {
        auto [q, r] = poly_divmod(F, r0, r1);
        r0 = std::exchange(r1, r);
        v0 = std::exchange(v1, poly_add(v0, poly_mul(F, q, v1)));
        w0 = std::exchange(w1, poly_add(w0, poly_mul(F, q, w1)));
    }
    const felem lc = r0.lead();
    if (lc != 1) {
        const felem ilc = F.inv(lc);
        r0 = poly_scale(F, r0, ilc);
        v0 = poly_scale(F, v0, ilc);
        w0 = poly_scale(F, w0, ilc);
    }
    return {r0, v0, w0};
}

Poly poly_reciprocal(const Poly& f) {
    if (f.is_zero() || f.coeff(0) == 0)
        fail(errc::zero_constant_term, "reciprocal requires nonzero constant term");
    std::vector<felem> v(f.coeffs().rbegin(), f.coeffs().rend());
    return Poly(std::move(v));
}

std::string poly_to_text(const Field& F, const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i <= static_cast<std::size_t>(p.degree()); ++i) {
        const felem c = p.coeff(i);
        if (c == 0) continue;
        if (!first) os << '+';
        first = false;
        if (F.degree() == 1) {
            if (i == 0) os << '1';
            else if (i == 1) os << 'x';
            else os << "x^" << i;
        } else {
            os << std::hex << c << std::dec;
            if (i == 1) os << "*x";
            else if (i >= 2) os << "*x^" << i;
        }
    }
    return os.str();
}

namespace {

felem parse_hex_mask(const Field& F, std::string_view s) {
    if (s.empty()) fail(errc::bad_argument, "empty coefficient");
    std::uint32_t v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v, 16);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        fail(errc::bad_argument, "bad coefficient mask: " + std::string(s));
    if (v >= F.size()) fail(errc::bad_argument, "coefficient mask out of field range");
    return v;
}

std::size_t parse_exponent(std::string_view s) {
    std::size_t k = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), k, 10);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        fail(errc::bad_argument, "bad exponent: " + std::string(s));
    return k;
}

}  // namespace

Poly poly_from_text(const Field& F, std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) fail(errc::bad_argument, "empty polynomial text");
    if (s == "0") return Poly();
    std::vector<felem> coeffs;
    auto put = [&](std::size_t k, felem c) {
        if (coeffs.size() <= k) coeffs.resize(k + 1, 0);
        coeffs[k] ^= c;
    };
    std::size_t pos = 0;
    while (pos <= s.size()) {
        const std::size_t plus = std::min(s.find('+', pos), s.size());
        std::string_view term(s.data() + pos, plus - pos);
        if (term.empty()) fail(errc::bad_argument, "empty term in polynomial text");
        const std::size_t star = term.find('*');
        const std::size_t xp = term.find('x');
        felem c = 1;
        std::size_t k = 0;
        if (xp == std::string_view::npos) {
            c = parse_hex_mask(F, term);
        } else {
            if (star != std::string_view::npos) {
                c = parse_hex_mask(F, term.substr(0, star));
                if (star + 1 != xp) fail(errc::bad_argument, "malformed term: " + std::string(term));
            } else if (xp != 0) {
                fail(errc::bad_argument, "malformed term: " + std::string(term));
            }
            if (xp + 1 == term.size()) k = 1;
            else if (term[xp + 1] == '^') k = parse_exponent(term.substr(xp + 2));
            else fail(errc::bad_argument, "malformed term: " + std::string(term));
        }
        put(k, c);
        if (plus == s.size()) break;
        pos = plus + 1;
    }
    return Poly(std::move(coeffs));
}

}  // namespace sdc
