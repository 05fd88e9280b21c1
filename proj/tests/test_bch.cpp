#include "doctest.h"

#include <random>

#include "fastchase/bch.hpp"
#include "oracles.hpp"

using namespace fastchase;

TEST_CASE("code construction from cyclotomic cosets") {
    CodeParams hamming(FieldContext(4), 1);
    CHECK(hamming.n() == 15);
    CHECK(hamming.k() == 11);
    CHECK(hamming.d() == 3);
    CHECK(hamming.generator().degree() == 4);

    CodeParams bch2(FieldContext(4), 2);
    CHECK(bch2.k() == 7);
    CHECK(bch2.generator().degree() == 8);

    // generator vanishes at gamma^j for j = 1..2t
    const auto& F = bch2.field();
    for (unsigned j = 1; j <= 4; ++j)
        CHECK(eval(F, bch2.generator(), F.exp(j)) == F.zero());

    // generator divides X^n - 1
    std::vector<FieldElement> xn(16);
    xn[0] = F.one();
    xn[15] = F.one();
    auto [q, r] = divmod(F, Polynomial(std::move(xn)), bch2.generator());
    CHECK(r.is_zero());

    CHECK_THROWS_AS(CodeParams(FieldContext(4), 8), std::invalid_argument);
    CHECK_THROWS_AS(CodeParams(FieldContext(4), 0), std::invalid_argument);
}

TEST_CASE("systematic encoding produces codewords") {
    CodeParams params(FieldContext(4), 2);
    BitVector zero_msg(params.k(), 0);
    BitVector zero_cw = encode(params, zero_msg);
    CHECK(zero_cw == BitVector(params.n(), 0));

    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        BitVector msg(params.k());
        for (auto& b : msg) b = rng() & 1;
        BitVector cw = encode(params, msg);
        CHECK(syndrome(params, cw).all_zero());
        // systematic: message bits sit in the high coordinates
        for (unsigned j = 0; j < params.k(); ++j)
            CHECK(cw[params.n() - params.k() + j] == msg[j]);
    }
    CHECK_THROWS_AS(encode(params, BitVector(3, 0)), std::invalid_argument);
}

TEST_CASE("syndrome values are evaluations at gamma powers") {
    CodeParams params(FieldContext(4), 2);
    const auto& F = params.field();

    BitVector single(params.n(), 0);
    single[5] = 1;
    Syndrome S = syndrome(params, single);
    for (unsigned j = 1; j <= 4; ++j) CHECK(S.values[j - 1] == F.exp(5 * j));

    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) {
        BitVector y(params.n());
        for (auto& b : y) b = rng() & 1;
        Syndrome s = syndrome(params, y);
        Polynomial ypoly = [&] {
            std::vector<FieldElement> c;
            for (auto b : y) c.push_back({b});
            return Polynomial(std::move(c));
        }();
        for (unsigned j = 1; j <= 4; ++j)
            CHECK(s.values[j - 1] == oracles::naive_eval(F, ypoly, F.exp(j)));
        // conjugacy
        CHECK(s.values[1] == F.mul(s.values[0], s.values[0]));
        CHECK(s.values[3] == F.mul(s.values[1], s.values[1]));
    }
}

TEST_CASE("syndrome is linear over codewords") {
    CodeParams params(FieldContext(5), 3);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 20; ++i) {
        BitVector msg(params.k());
        for (auto& b : msg) b = rng() & 1;
        BitVector cw = encode(params, msg);
        BitVector e = oracles::random_error(params.n(), 1 + rng() % 6, rng);
        BitVector y(params.n());
        for (unsigned j = 0; j < params.n(); ++j) y[j] = cw[j] ^ e[j];
        Syndrome sy = syndrome(params, y);
        Syndrome se = syndrome(params, e);
        CHECK(sy.values == se.values);
        CHECK(se.values == syndrome_of_support(params, oracles::support_of(e)).values);
    }
}

TEST_CASE("error locator polynomial and the key equation") {
    CodeParams params(FieldContext(4), 2);
    const auto& F = params.field();

    BitVector e1(params.n(), 0);
    e1[3] = 1;
    CHECK(elp_of_error(params, e1) == Polynomial({F.one(), F.exp(3)}));

    BitVector e2 = e1;
    e2[9] = 1;
    FieldElement a = F.exp(3), b = F.exp(9);
    CHECK(elp_of_error(params, e2) ==
          Polynomial({F.one(), F.add(a, b), F.mul(a, b)}));

    // sigma' = S sigma mod X^2t for all error weights up to 2t
    std::mt19937_64 rng(11);
    for (unsigned eps = 1; eps <= 2 * params.t(); ++eps) {
        for (int i = 0; i < 25; ++i) {
            BitVector e = oracles::random_error(params.n(), eps, rng);
            Polynomial sigma = elp_of_error(params, e);
            Polynomial S = syndrome(params, e).poly();
            CHECK(mod_xk(formal_derivative(sigma), 2 * params.t()) ==
                  mod_xk(mul(F, S, sigma), 2 * params.t()));
        }
    }
}

TEST_CASE("hex serialization") {
    CodeParams params(FieldContext(4), 2);
    std::mt19937_64 rng(13);
    for (int i = 0; i < 50; ++i) {
        BitVector y(params.n());
        for (auto& b : y) b = rng() & 1;
        CHECK(hex_to_bits(bits_to_hex(y), params.n()) == y);
    }
    CHECK(bits_to_hex(BitVector(15, 0)) == "0000");
    BitVector low(15, 0);
    low[0] = 1;
    CHECK(bits_to_hex(low) == "0001");
    CHECK_THROWS_AS(hex_to_bits("8000", 15), std::invalid_argument);
    CHECK_THROWS_AS(hex_to_bits("zz", 15), std::invalid_argument);
}
