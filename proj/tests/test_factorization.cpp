#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "sdc/error.hpp"
#include "sdc/factorization.hpp"

using namespace sdc;

namespace {
Poly xn_minus_1(unsigned n) {
    return poly_add(Poly::monomial(n), Poly::one());
}
}  // namespace

TEST_CASE("factor x^3 - 1 and x^1 - 1 over F_2") {
    Field F(1);
    auto f3 = factor_xn_minus_1(F, 3);
    REQUIRE(f3.size() == 2);
    std::set<std::string> polys;
    for (auto& r : f3) polys.insert(poly_to_text(F, r.f));
    CHECK(polys == std::set<std::string>{"1+x", "1+x+x^2"});

    auto f1 = factor_xn_minus_1(F, 1);
    REQUIRE(f1.size() == 1);
    CHECK(f1[0].f == Poly({1, 1}));

    CHECK_THROWS_AS(factor_xn_minus_1(F, 6), error);
}

TEST_CASE("factor x^7 - 1 over F_2") {
    Field F(1);
    auto fs = factor_xn_minus_1(F, 7);
    REQUIRE(fs.size() == 3);
    Poly prod = Poly::one();
    for (auto& r : fs) prod = poly_mul(F, prod, r.f);
    CHECK(prod == xn_minus_1(7));
    std::set<std::string> polys;
    for (auto& r : fs) polys.insert(poly_to_text(F, r.f));
    CHECK(polys == std::set<std::string>{"1+x", "1+x+x^3", "1+x^2+x^3"});
}

TEST_CASE("classification fixtures") {
    Field F(1);

    auto fd3 = factor_system(F, 3, 1);
    CHECK(fd3.rho == 2);
    CHECK(fd3.epsilon == 0);
    CHECK(fd3.factors[0].f == Poly({1, 1}));
    CHECK(fd3.factors[0].delta == 1);
    CHECK(fd3.factors[1].delta == 1);

    auto fd7 = factor_system(F, 7, 1);
    CHECK(fd7.rho == 1);
    CHECK(fd7.epsilon == 1);
    REQUIRE(fd7.factors.size() == 3);
    CHECK(fd7.factors[1].f == Poly({1, 1, 0, 1}));  // x^3+x+1 is the lex-smaller mate
    CHECK(fd7.factors[2].f == Poly({1, 0, 1, 1}));
    CHECK(fd7.factors[1].cls == FactorClass::pair_first);
    CHECK(fd7.factors[2].cls == FactorClass::pair_second);
    CHECK(fd7.factors[1].partner == 3);
    CHECK(fd7.factors[2].partner == 2);

    // n = 15: factors x+1, x^2+x+1, x^4+x^3+x^2+x+1 self-reciprocal,
    // pair {x^4+x+1, x^4+x^3+1}; the count 355005 in the length-60 row pins this
    // shape (three self-reciprocal blocks, one pair).
    auto fd15 = factor_system(F, 15, 1);
    CHECK(fd15.factors.size() == 5);
    CHECK(fd15.rho == 3);
    CHECK(fd15.epsilon == 1);
    CHECK(fd15.factors[1].f == Poly({1, 1, 1}));
    CHECK(fd15.factors[2].f == Poly({1, 1, 1, 1, 1}));
    CHECK(fd15.factors[3].f == Poly({1, 1, 0, 0, 1}));
}

TEST_CASE("factorization invariants across a grid") {
    for (unsigned m : {1u, 2u}) {
        Field F(m);
        for (unsigned n : {1u, 3u, 5u, 7u, 9u, 15u, 21u}) {
            auto fs = factor_xn_minus_1(F, n);
            Poly prod = Poly::one(), rprod = Poly::one();
            std::set<unsigned> covered;
            std::size_t coset_total = 0;
            for (auto& r : fs) {
                prod = poly_mul(F, prod, r.f);
                rprod = poly_mul(F, rprod, poly_monic(F, poly_reciprocal(r.f)));
                for (unsigned c : r.coset) covered.insert(c);
                coset_total += r.coset.size();
                CHECK(r.coset.size() == r.degree);
            }
            CHECK(prod == xn_minus_1(n));
            CHECK(rprod == xn_minus_1(n));
            CHECK(covered.size() == n);
            CHECK(coset_total == n);

            unsigned rho = 0, eps = 0;
            classify_reciprocal(F, fs, rho, eps);
            CHECK(fs.size() == rho + 2 * eps);
            for (unsigned j = 1; j <= fs.size(); ++j) {
                const auto& rec = fs[j - 1];
                if (j <= rho) {
                    CHECK(rec.cls == FactorClass::self_reciprocal);
                    CHECK(rec.delta == 1);
                    if (j >= 2) CHECK(rec.degree % 2 == 0);
                } else {
                    CHECK(rec.partner >= 1);
                    const auto& mate = fs[rec.partner - 1];
                    CHECK(poly_reciprocal(rec.f) == poly_scale(F, mate.f, rec.delta));
                    CHECK(rec.delta == poly_eval(F, rec.f, 0));
                }
            }
        }
    }
}

TEST_CASE("idempotent fixture at m=1, n=3, s=3") {
    Field F(1);
    auto fd = factor_system(F, 3, 3);
    REQUIRE(fd.idempotents.size() == 2);
    CHECK(poly_to_text(F, fd.idempotents[0]) == "1+x^8+x^16");
    CHECK(poly_to_text(F, fd.idempotents[1]) == "x^8+x^16");
}

TEST_CASE("idempotent identities on a grid") {
    for (unsigned m : {1u, 2u}) {
        Field F(m);
        for (unsigned n : {1u, 3u, 5u, 7u, 9u}) {
            for (unsigned s : {1u, 2u, 3u}) {
                auto fd = factor_system(F, n, s);
                const Poly xN1 = poly_add(Poly::monomial(fd.N), Poly::one());
                Poly sum;
                for (std::size_t j = 0; j < fd.idempotents.size(); ++j) {
                    const Poly& e = fd.idempotents[j];
                    sum = poly_add(sum, e);
                    CHECK(poly_mod(F, poly_mul(F, e, e), xN1) == e);
                    for (std::size_t l = j + 1; l < fd.idempotents.size(); ++l)
                        CHECK(poly_mod(F, poly_mul(F, e, fd.idempotents[l]), xN1).is_zero());
                }
                CHECK(sum == Poly::one());
            }
        }
    }
}

TEST_CASE("single factor idempotent is 1") {
    Field F(1);
    auto fd = factor_system(F, 1, 2);
    REQUIRE(fd.idempotents.size() == 1);
    CHECK(fd.idempotents[0] == Poly::one());
}
