#include "doctest.h"

#include <random>

#include "fastchase/poly.hpp"
#include "oracles.hpp"

using namespace fastchase;

namespace {
const FieldContext F(4);

Polynomial P(std::initializer_list<int> coeffs) {
    std::vector<FieldElement> v;
    for (int c : coeffs) v.push_back({static_cast<std::uint16_t>(c)});
    return Polynomial(std::move(v));
}
}  // namespace

TEST_CASE("degree convention") {
    CHECK(Polynomial{}.degree() == kZeroPolyDegree);
    CHECK(Polynomial{}.is_zero());
    CHECK(P({0, 0, 0}).is_zero());
    CHECK(P({1, 0, 3}).degree() == 2);
}

TEST_CASE("horner evaluation") {
    CHECK(eval(F, Polynomial{}, F.gamma()) == F.zero());
    CHECK(eval(F, P({1, 1}), F.one()) == F.zero());  // X+1 at 1

    std::mt19937_64 rng(17);
    for (int i = 0; i < 200; ++i) {
        Polynomial f = oracles::random_poly(F, 5, rng);
        FieldElement x{static_cast<std::uint16_t>(rng() % 16)};
        CHECK(eval(F, f, x) == oracles::naive_eval(F, f, x));
    }
}

TEST_CASE("evaluation charges exactly deg(f) multiplications") {
    Polynomial f = P({3, 1, 0, 7});
    reset_mul_ops();
    eval(F, f, F.gamma());
    CHECK(mul_ops() == 3);
    reset_mul_ops();
    eval(F, Polynomial{}, F.gamma());
    CHECK(mul_ops() == 0);
    reset_mul_ops();
    scalar_mul(F, f, F.gamma());
    CHECK(mul_ops() == 4);  // deg + 1
}

TEST_CASE("ring operations") {
    Polynomial f = P({1, 2, 3});
    CHECK(mul(F, f, Polynomial::constant(F.one())) == f);
    CHECK(mod_xk(P({1, 1, 1}), 2) == P({1, 1}));
    CHECK(mod_xk(P({1, 1, 1}), 0).is_zero());

    std::mt19937_64 rng(23);
    for (int i = 0; i < 100; ++i) {
        Polynomial a = oracles::random_poly(F, 1 + int(rng() % 6), rng);
        Polynomial b = oracles::random_poly(F, 1 + int(rng() % 6), rng);
        CHECK(divide_exact(F, mul(F, a, b), b) == a);
        // distributivity
        Polynomial c = oracles::random_poly(F, 3, rng);
        CHECK(mul(F, add(a, b), c) == add(mul(F, a, c), mul(F, b, c)));
    }
    CHECK_THROWS_AS(divide_exact(F, P({1, 1, 1}), P({1, 1})), std::domain_error);
}

TEST_CASE("formal derivative kills even powers") {
    CHECK(formal_derivative(P({0, 0, 1})).is_zero());             // (X^2)' = 0
    CHECK(formal_derivative(P({1, 1, 0, 1})) == P({1, 0, 1}));    // (X^3+X+1)' = X^2+1

    std::mt19937_64 rng(29);
    for (int i = 0; i < 100; ++i) {
        Polynomial f = oracles::random_poly(F, int(rng() % 9), rng);
        CHECK(formal_derivative(f) == mu(Polynomial{}, odd_part(f)));  // f' = odd(f) at X^2
    }
}

TEST_CASE("odd/even split reconstructs the polynomial") {
    CHECK(odd_part(P({1, 1, 1, 1})) == P({1, 1}));
    CHECK(even_part(P({1, 1, 1, 1})) == P({1, 1}));
    CHECK(even_part(Polynomial{}).is_zero());

    std::mt19937_64 rng(31);
    for (int i = 0; i < 1000; ++i) {
        Polynomial f = oracles::random_poly(F, int(rng() % 12), rng);
        CHECK(mu(odd_part(f), even_part(f)) == f);
    }
}

TEST_CASE("mu and its inverse") {
    CHECK(mu(Polynomial{}, Polynomial::constant(F.one())) == P({1}));
    CHECK(mu(Polynomial::constant(F.one()), Polynomial{}) == P({0, 1}));
    CHECK(mu_inverse(P({0, 1})) == std::pair{P({1}), Polynomial{}});
    CHECK(mu_inverse(P({1})) == std::pair{Polynomial{}, P({1})});

    std::mt19937_64 rng(37);
    for (int i = 0; i < 200; ++i) {
        Polynomial f = oracles::random_poly(F, int(rng() % 10), rng);
        auto [u, v] = mu_inverse(f);
        CHECK(mu(u, v) == f);
        // order/gluing relation: max(deg odd + 1, deg even) = ceil(deg/2)
        if (!f.is_zero()) {
            int expect = (f.degree() + 1) / 2;
            int got = u.is_zero() ? v.degree()
                                  : (v.is_zero() ? u.degree() + 1
                                                 : std::max(u.degree() + 1, v.degree()));
            CHECK(got == expect);
        }
    }
}

TEST_CASE("mu is a module homomorphism for the twisted scalar action") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 200; ++i) {
        Polynomial a = oracles::random_poly(F, int(rng() % 4), rng);
        Polynomial u = oracles::random_poly(F, int(rng() % 5), rng);
        Polynomial v = oracles::random_poly(F, int(rng() % 5), rng);
        // mu(a u, a v) = a(X^2) mu(u, v)
        Polynomial lhs = mu(mul(F, a, u), mul(F, a, v));
        Polynomial a_sq = mu(Polynomial{}, a);  // a(X^2)
        CHECK(lhs == mul(F, a_sq, mu(u, v)));
    }
}

TEST_CASE("gcd") {
    std::mt19937_64 rng(43);
    Polynomial f = oracles::random_poly(F, 4, rng);
    CHECK(gcd(F, f, Polynomial{}) == monic(F, f));
    CHECK(gcd(F, f, Polynomial::constant(F.gamma())) == Polynomial::constant(F.one()));
    CHECK_THROWS_AS(gcd(F, Polynomial{}, Polynomial{}), std::domain_error);

    // gcd((X+a)(X+b), (X+a)(X+c)) = X+a for distinct a, b, c
    FieldElement a = F.exp(3), b = F.exp(7), c = F.exp(11);
    Polynomial xa({a, F.one()});
    Polynomial xb({b, F.one()});
    Polynomial xc({c, F.one()});
    CHECK(gcd(F, mul(F, xa, xb), mul(F, xa, xc)) == xa);
}

TEST_CASE("fixture format round trip") {
    std::mt19937_64 rng(47);
    FieldContext F8(8);
    for (int i = 0; i < 50; ++i) {
        Polynomial f = oracles::random_poly(F8, int(rng() % 10), rng);
        CHECK(poly_from_string(to_string(f)) == f);
    }
    CHECK(poly_from_string("") == Polynomial{});
    CHECK(poly_from_string("1,0,b") == P({1, 0, 11}));
}
