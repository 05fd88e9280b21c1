#include "doctest.h"

#include <random>
#include <vector>

#include "fastchase/modorder.hpp"
#include "oracles.hpp"

using namespace fastchase;

namespace {
const FieldContext F(4);

Polynomial P(std::initializer_list<int> coeffs) {
    std::vector<FieldElement> v;
    for (int c : coeffs) v.push_back({static_cast<std::uint16_t>(c)});
    return Polynomial(std::move(v));
}

std::vector<Monomial2> all_monomials(int max_degree) {
    std::vector<Monomial2> out;
    for (int d = 0; d <= max_degree; ++d) {
        out.push_back({Side::Left, d});
        out.push_back({Side::Right, d});
    }
    return out;
}
}  // namespace

TEST_CASE("weighted degree of pairs") {
    CHECK(wdeg2({P({1}), Polynomial{}}, Weight2::integer(5)) == 0);
    CHECK(wdeg2({Polynomial{}, P({1})}, Weight2::integer(-1)) == -2);
    // (X^2, X) at w = -1/2: max(2, 1 - 1/2) = 2
    CHECK(wdeg2({P({0, 0, 1}), P({0, 1})}, Weight2::halves(-1)) == 4);
    CHECK_THROWS_AS(wdeg2(ModulePair{}, Weight2::integer(0)), std::domain_error);
}

TEST_CASE("cross-side comparison instantiates the order rule") {
    // left j=0 vs right j=0 at w=-1: 0 <= -1 fails, so right < left
    Weight2 w = Weight2::integer(-1);
    CHECK(compare_monomials({Side::Left, 0}, {Side::Right, 0}, w) == std::strong_ordering::greater);
    CHECK(compare_monomials({Side::Left, 1}, {Side::Left, 3}, w) == std::strong_ordering::less);
}

TEST_CASE("compare_monomials is a total multiplicative order") {
    for (int tw : {-2, -1, 3}) {  // w in {-1, -1/2, 3/2}
        Weight2 w = Weight2::halves(tw);
        auto ms = all_monomials(6);
        for (auto a : ms) {
            CHECK(compare_monomials(a, a, w) == std::strong_ordering::equal);
            for (auto b : ms) {
                auto ab = compare_monomials(a, b, w);
                auto ba = compare_monomials(b, a, w);
                if (a == b) CHECK(ab == std::strong_ordering::equal);
                else CHECK(ab != ba);  // antisymmetry
                // multiplicativity: a < b implies X a < X b
                if (ab == std::strong_ordering::less) {
                    Monomial2 xa{a.side, a.degree + 1};
                    Monomial2 xb{b.side, b.degree + 1};
                    CHECK(compare_monomials(xa, xb, w) == std::strong_ordering::less);
                }
                for (auto c : ms) {  // transitivity
                    if (ab == std::strong_ordering::less &&
                        compare_monomials(b, c, w) == std::strong_ordering::less)
                        CHECK(compare_monomials(a, c, w) == std::strong_ordering::less);
                }
            }
        }
    }
}

TEST_CASE("half-integer weights never tie across sides") {
    Weight2 w = Weight2::halves(-1);
    for (auto a : all_monomials(8))
        for (auto b : all_monomials(8))
            if (a.side != b.side) CHECK(wdeg2(a, w) != wdeg2(b, w));
}

TEST_CASE("leading monomial") {
    Weight2 w = Weight2::halves(-1);  // w = -1/2
    CHECK(leading_monomial({P({1}), Polynomial{}}, w) == Monomial2{Side::Left, 0});
    CHECK(leading_monomial({P({0, 0, 1}), P({0, 1})}, w) == Monomial2{Side::Left, 2});
    // integer weight, tie on weighted degree: the right side wins
    CHECK(leading_monomial({P({0, 1}), P({0, 0, 1})}, Weight2::integer(-1)) ==
          Monomial2{Side::Right, 2});
    CHECK_THROWS_AS(leading_monomial(ModulePair{}, w), std::domain_error);
}

TEST_CASE("ord of pairs") {
    CHECK(ord({P({1}), Polynomial{}}) == 1);
    CHECK(ord({Polynomial{}, P({1})}) == 0);
    std::mt19937_64 rng(13);
    for (int i = 0; i < 200; ++i) {
        Polynomial f = oracles::random_poly(F, int(rng() % 10), rng);
        if (f.is_zero()) continue;
        auto [u, v] = mu_inverse(f);
        CHECK(ord({u, v}) == (f.degree() + 1) / 2);
    }
}

TEST_CASE("adjacent integer weights disagree only on equal weighted degree") {
    for (int w = -3; w <= 3; ++w) {
        Weight2 lo = Weight2::integer(w);
        Weight2 hi = Weight2::integer(w + 1);
        for (auto a : all_monomials(8)) {
            for (auto b : all_monomials(8)) {
                bool lt_hi = compare_monomials(a, b, hi) == std::strong_ordering::less;
                bool gt_lo = compare_monomials(a, b, lo) == std::strong_ordering::greater;
                if (lt_hi && gt_lo) CHECK(wdeg2(a, hi) == wdeg2(b, hi));
            }
        }
    }
}
