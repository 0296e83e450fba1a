#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "fhs/poly.hpp"
#include "oracles.hpp"

using namespace fhs;

TEST_CASE("construction reduces and trims") {
    Poly a(3, {4, 0, 6, 0});
    CHECK(a.degree() == 0);
    CHECK(a.coeff(0) == 1);
    CHECK(Poly(2, {0, 0}).is_zero());
    CHECK(Poly::zero(5).degree() == -1);
    CHECK_THROWS_AS(Poly(1, {1}), std::invalid_argument);
}

TEST_CASE("labels and strings round-trip") {
    Poly f(2, {1, 1, 1});
    CHECK(f.str() == "1,1,1");
    CHECK(f.label() == 7);
    CHECK(Poly::from_label(2, 7) == f);
    CHECK(Poly::parse(2, "1,1,1") == f);
    CHECK(Poly::zero(3).str() == "0");
    CHECK(Poly::from_label(5, 0).is_zero());
}

TEST_CASE("divmod identity on random inputs") {
    std::mt19937 rng(7);
    for (int p : {2, 3, 5}) {
        std::uniform_int_distribution<int> coef(0, p - 1);
        for (int iter = 0; iter < 200; ++iter) {
            std::vector<int> ac(static_cast<std::size_t>(rng() % 8), 0);
            std::vector<int> bc(static_cast<std::size_t>(rng() % 5 + 1), 0);
            for (auto& v : ac) v = coef(rng);
            for (auto& v : bc) v = coef(rng);
            bc.push_back(1);  // keep the divisor nonzero
            Poly a(p, ac), b(p, bc);
            auto [q, r] = divmod(a, b);
            CHECK(add(mul(q, b), r) == a);
            CHECK(r.degree() < b.degree());
        }
    }
}

TEST_CASE("powmod matches repeated multiplication") {
    Poly f(3, {1, 0, 1});  // 1 + x^2
    Poly x = Poly::xpow(3, 1);
    Poly acc = Poly::one(3);
    for (int e = 0; e < 20; ++e) {
        CHECK(powmod(x, e, f) == acc);
        acc = mod(mul(acc, x), f);
    }
}

TEST_CASE("irreducibility of small named cases") {
    CHECK(is_irreducible(Poly(2, {1, 1, 1})));
    CHECK_FALSE(is_irreducible(Poly(2, {1, 0, 1})));  // (x+1)^2
    CHECK(is_irreducible(Poly(3, {0, 1})));
    CHECK_THROWS_AS(is_irreducible(Poly(3, {1, 2})), std::invalid_argument);  // not monic
    CHECK_THROWS_AS(is_irreducible(Poly::one(2)), std::invalid_argument);     // degree 0
}

TEST_CASE("irreducibility agrees with trial division") {
    auto sweep = [](int p, int dmax) {
        for (int d = 1; d <= dmax; ++d) {
            long long span = 1;
            for (int i = 0; i < d; ++i) span *= p;
            for (long long t = 0; t < span; ++t) {
                Poly f = add(Poly::from_label(p, t), Poly::xpow(p, d));
                CAPTURE(p);
                CAPTURE(f.str());
                CHECK(is_irreducible(f) == fhs::testing::trial_division_irreducible(f));
            }
        }
    };
    sweep(2, 6);
    sweep(3, 4);
    sweep(5, 3);
}

TEST_CASE("find_irreducible returns the smallest by label") {
    CHECK(find_irreducible(2, 1).str() == "0,1");
    CHECK(find_irreducible(2, 2).str() == "1,1,1");
    CHECK(find_irreducible(2, 3).str() == "1,1,0,1");
    CHECK(find_irreducible(3, 2).str() == "1,0,1");
    for (int p : {2, 3, 5}) {
        for (int d = 1; d <= 4; ++d) {
            Poly best = find_irreducible(p, d);
            for (long long t = 0; t < best.label(); ++t) {
                Poly f = Poly::from_label(p, t);
                if (f.degree() == d && f.is_monic()) CHECK_FALSE(is_irreducible(f));
            }
        }
    }
}
