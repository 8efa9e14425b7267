#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "sdc/bigint.hpp"
#include "sdc/error.hpp"
#include "sdc/field.hpp"
#include "sdc/numutil.hpp"
#include "sdc/poly.hpp"

using namespace sdc;

namespace {
std::mt19937_64 rng(0x5dc0de01ULL);

felem rand_elem(const Field& F) {
    return static_cast<felem>(rng() & F.max_elem());
}

Poly rand_poly(const Field& F, int max_deg) {
    std::vector<felem> c(static_cast<std::size_t>(rng() % (max_deg + 1)) + 1);
    for (auto& e : c) e = rand_elem(F);
    return Poly(std::move(c));
}
}  // namespace

TEST_CASE("field construction and modulus table") {
    Field f2(1);
    CHECK(f2.modulus_bits() == 0b11u);  // x + 1
    Field f4(2);
    CHECK(f4.modulus_bits() == 0b111u);  // x^2 + x + 1 (unique irreducible of degree 2)
    // In F_4 with modulus x^2+x+1: x * x = x + 1
    CHECK(f4.mul(0b10, 0b10) == 0b11);

    CHECK_THROWS_AS(Field(3, 0b1010), error);  // x^3 + x = x(x+1)^2
    try {
        Field bad(3, 0b1011 ^ 0b10);  // x^3 + 1 = (x+1)(x^2+x+1)
        CHECK(false);
    } catch (const error& e) {
        CHECK(e.code() == errc::modulus_not_irreducible);
    }
    CHECK_THROWS_AS(Field(0), error);
    CHECK_THROWS_AS(Field(17), error);
}

TEST_CASE("field axioms on random elements") {
    for (unsigned m : {1u, 2u, 3u, 5u, 8u, 11u, 16u}) {
        Field F(m);
        for (int it = 0; it < 200; ++it) {
            felem a = rand_elem(F), b = rand_elem(F), c = rand_elem(F);
            CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
            CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
            CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
            if (a != 0) CHECK(F.mul(a, F.inv(a)) == 1);
            CHECK(F.frobenius(a) == F.mul(a, a));
            // Frobenius closure: a^(2^m) = a
            CHECK(F.pow(a, F.size()) == a);
        }
    }
}

TEST_CASE("log-table multiply agrees with shift-and-reduce") {
    for (unsigned m : {2u, 4u, 7u, 8u}) {
        Field F(m);
        Field wide(m, F.modulus_bits());
        for (felem a = 0; a <= F.max_elem(); ++a)
            for (int it = 0; it < 8; ++it) {
                felem b = rand_elem(F);
                felem ab = F.mul(a, b);
                // recompute via the 16-bit-path multiply of a field with no tables
                felem slow = 0;
                for (unsigned i = 0; i < m; ++i)
                    if ((b >> i) & 1) {
                        std::uint64_t sh = static_cast<std::uint64_t>(a) << i;
                        slow ^= static_cast<felem>(f2_mod(sh, F.modulus_bits()));
                    }
                CHECK(ab == slow);
                CHECK(wide.mul(a, b) == ab);
            }
    }
}

TEST_CASE("poly_xgcd identity and examples") {
    Field F(1);
    // a = x+1, b = x^2+x+1: gcd 1
    Poly a({1, 1}), b({1, 1, 1});
    auto r = poly_xgcd(F, a, b);
    CHECK(r.g == Poly::one());
    CHECK(poly_add(poly_mul(F, r.v, a), poly_mul(F, r.w, b)) == r.g);

    auto same = poly_xgcd(F, a, a);
    CHECK(same.g == a);  // gcd with itself, monic

    // x^3 - 1 and x+1 share the factor x+1
    Poly x3m1({1, 0, 0, 1});
    CHECK(poly_xgcd(F, x3m1, a).g == a);

    CHECK_THROWS_AS(poly_xgcd(F, Poly(), Poly()), error);
}

TEST_CASE("poly_xgcd identity holds for randomized inputs") {
    for (unsigned m : {1u, 2u, 4u}) {
        Field F(m);
        for (int it = 0; it < 200; ++it) {
            Poly a = rand_poly(F, 9), b = rand_poly(F, 9);
            if (a.is_zero() && b.is_zero()) continue;
            auto r = poly_xgcd(F, a, b);
            CHECK(!r.g.is_zero());
            CHECK(r.g.lead() == 1);
            CHECK(poly_add(poly_mul(F, r.v, a), poly_mul(F, r.w, b)) == r.g);
            if (!a.is_zero()) CHECK(poly_divmod(F, a, r.g).second.is_zero());
            if (!b.is_zero()) CHECK(poly_divmod(F, b, r.g).second.is_zero());
        }
    }
}

TEST_CASE("reciprocal examples and properties") {
    Field F(1);
    Poly f({1, 1, 1});  // x^2+x+1 is self-reciprocal
    CHECK(poly_reciprocal(f) == f);
    Poly xp1({1, 1});
    CHECK(poly_reciprocal(xp1) == xp1);
    Poly g({1, 1, 0, 1});  // x^3+x+1 -> x^3+x^2+1
    CHECK(poly_reciprocal(g) == Poly({1, 0, 1, 1}));

    CHECK_THROWS_AS(poly_reciprocal(Poly({0, 1})), error);

    for (unsigned m : {1u, 3u}) {
        Field K(m);
        for (int it = 0; it < 100; ++it) {
            Poly p = rand_poly(K, 8), q = rand_poly(K, 8);
            if (p.is_zero() || p.coeff(0) == 0 || q.is_zero() || q.coeff(0) == 0) continue;
            CHECK(poly_reciprocal(poly_reciprocal(p)) == p);
            CHECK(poly_reciprocal(poly_mul(K, p, q)) ==
                  poly_mul(K, poly_reciprocal(p), poly_reciprocal(q)));
        }
    }
}

TEST_CASE("divmod and eval") {
    Field F(2);
    for (int it = 0; it < 200; ++it) {
        Poly a = rand_poly(F, 12), b = rand_poly(F, 6);
        if (b.is_zero()) continue;
        auto [q, r] = poly_divmod(F, a, b);
        CHECK(poly_add(poly_mul(F, q, b), r) == a);
        CHECK(r.degree() < b.degree());
        felem pt = rand_elem(F);
        CHECK(poly_eval(F, a, pt) ==
              F.add(F.mul(poly_eval(F, q, pt), poly_eval(F, b, pt)), poly_eval(F, r, pt)));
    }
}

TEST_CASE("polynomial text form round-trips") {
    Field F1(1);
    CHECK(poly_to_text(F1, Poly()) == "0");
    CHECK(poly_to_text(F1, Poly({1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1})) ==
          "1+x^8+x^16");
    CHECK(poly_to_text(F1, Poly({1, 1})) == "1+x");
    CHECK(poly_from_text(F1, "1+x^8+x^16") ==
          Poly({1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1}));

    Field F4(2);
    CHECK(poly_to_text(F4, Poly({2, 1, 3})) == "2+1*x+3*x^2");
    CHECK(poly_from_text(F4, "3*x^2+1*x+2") == Poly({2, 1, 3}));

    for (unsigned m : {1u, 2u, 5u}) {
        Field F(m);
        for (int it = 0; it < 100; ++it) {
            Poly p = rand_poly(F, 20);
            CHECK(poly_from_text(F, poly_to_text(F, p)) == p);
        }
    }
}

TEST_CASE("poly ordering comparator") {
    // x^3+x+1 sorts before x^3+x^2+1 (leading coefficients down)
    Poly a({1, 1, 0, 1}), b({1, 0, 1, 1});
    CHECK(Poly::compare(a, b) < 0);
    CHECK(Poly::compare(a, a) == 0);
    CHECK(Poly::compare(Poly(), a) < 0);
}

TEST_CASE("numutil basics") {
    auto f = factor_u64(2ULL * 2 * 3 * 3 * 3 * 17);
    REQUIRE(f.size() == 3);
    CHECK(f[0] == std::pair<std::uint64_t, unsigned>{2, 2});
    CHECK(f[1] == std::pair<std::uint64_t, unsigned>{3, 3});
    CHECK(f[2] == std::pair<std::uint64_t, unsigned>{17, 1});
    CHECK(multiplicative_order(2, 7) == 3);
    CHECK(multiplicative_order(2, 15) == 4);
    CHECK(multiplicative_order(4, 9) == 3);
    CHECK(f2_least_irreducible(3) == 0b1011u);
    CHECK(f2_is_irreducible(0b10011));       // x^4+x+1
    CHECK_FALSE(f2_is_irreducible(0b11111 ^ 0b01000));  // x^4+x^2+x+1 = (x+1)(x^3+x^2+1)
}

TEST_CASE("big integer arithmetic against a 128-bit reference") {
    for (int it = 0; it < 500; ++it) {
        const std::uint64_t a = rng() >> (rng() % 40);
        const std::uint64_t b = (rng() >> (rng() % 40)) | 1;
        const BigUInt A(a), B(b);
        CHECK((A + B).to_u64() == a + b);
        if (a >= b) CHECK((A - B).to_u64() == a - b);
        const unsigned __int128 prod = static_cast<unsigned __int128>(a) * b;
        const BigUInt P = A * B;
        auto [q, r] = BigUInt::divmod(P, B);
        CHECK(q == A);
        CHECK(r.is_zero());
        auto [q2, r2] = BigUInt::divmod(P + BigUInt(b - 1), B);
        CHECK(q2 == A);
        CHECK(r2.to_u64() == b - 1);
        if (prod <= UINT64_MAX) CHECK(P.to_u64() == static_cast<std::uint64_t>(prod));
        CHECK(BigUInt::from_decimal(P.to_decimal()) == P);
    }
    CHECK(BigUInt::pow2(100).to_decimal() == "1267650600228229401496703205376");
    CHECK(BigUInt::pow(BigUInt(3), 40).to_decimal() == "12157665459056928801");
    CHECK(BigUInt(0).to_decimal() == "0");
    CHECK(BigUInt::compare(BigUInt(5), BigUInt(7)) < 0);
    CHECK_THROWS_AS(BigUInt::divmod(BigUInt(1), BigUInt(0)), error);
    CHECK_THROWS_AS(BigUInt::pow2(100).to_u64(), error);
}
