#include "fastchase/keysolve.hpp"

#include <cassert>
#include <stdexcept>

namespace fastchase {

ModifiedSyndrome modified_syndrome(const FieldContext& F, const Syndrome& S, unsigned t) {
    if (S.values.size() < 2 * t) throw std::invalid_argument("syndrome too short for t");
    if (t == 0) return {Polynomial{}};
    // a_0 = b_0, a_i = b_i + a_{i-1} c_0 + ... + a_0 c_{i-1},
    // with b_i = S_{2i+1} and c_i = S_{2(i+1)}
    std::vector<FieldElement> a(t);
    a[0] = S.values[0];
    for (unsigned i = 1; i < t; ++i) {
        FieldElement acc = S.values[2 * i];  // b_i
        for (unsigned m = 1; m <= i; ++m) {
            FieldElement c = S.values[2 * m - 1];  // c_{m-1} = S_{2m}
            acc = F.add(acc, F.mul(a[i - m], c));
        }
        a[i] = acc;
    }
    return {Polynomial(std::move(a))};
}

KoetterBasis koetter_constraint_step(const FieldContext& F, const KoetterBasis& G,
                                     const std::function<FieldElement(const ModulePair&)>& D,
                                     Weight2 w) {
    const ModulePair* g[2] = {&G.g1, &G.g2};
    FieldElement delta[2] = {D(G.g1), D(G.g2)};

    if (delta[0].is_zero() && delta[1].is_zero()) return G;

    int jstar;
    if (delta[0].is_zero()) jstar = 1;
    else if (delta[1].is_zero()) jstar = 0;
    else {
        auto lm1 = leading_monomial(G.g1, w);
        auto lm2 = leading_monomial(G.g2, w);
        jstar = compare_monomials(lm1, lm2, w) == std::strong_ordering::less ? 0 : 1;
    }

    ModulePair out[2];
    for (int j = 0; j < 2; ++j) {
        if (delta[j].is_zero()) {
            out[j] = *g[j];
        } else if (j != jstar) {
            // g+_j = g_j - (Delta_j / Delta_{j*}) g_{j*}
            out[j] = pair_add(*g[j], pair_scale(F, *g[jstar], F.div(delta[j], delta[jstar])));
        }
    }
    // g+_{j*} = (X - D(X g_{j*}) / Delta_{j*}) g_{j*}
    ModulePair shifted = pair_shift(*g[jstar]);
    FieldElement ratio = F.div(D(shifted), delta[jstar]);
    out[jstar] = pair_add(shifted, pair_scale(F, *g[jstar], ratio));
    return {out[0], out[1]};
}

namespace {

// coefficient of X^k in (u - shat*v), a convolution over at most k+1 terms
FieldElement key_functional(const FieldContext& F, const Polynomial& shat, unsigned k,
                            const ModulePair& p) {
    FieldElement acc = p.g0.coeff(static_cast<int>(k));
    const int top = std::min<int>(static_cast<int>(k), shat.degree());
    for (int i = 0; i <= top; ++i)
        acc = F.add(acc, F.mul(shat.coeff(i), p.g1.coeff(static_cast<int>(k) - i)));
    return acc;
}

}  // namespace

KeyBasis solve_key_basis(const FieldContext& F, const ModifiedSyndrome& ms, unsigned t) {
    const Weight2 order = Weight2::integer(-1);
    KoetterBasis G{{Polynomial::constant(F.one()), Polynomial{}},
                   {Polynomial{}, Polynomial::constant(F.one())}};
    for (unsigned k = 0; k < t; ++k) {
        auto D = [&F, &ms, k](const ModulePair& p) { return key_functional(F, ms.shat, k, p); };
        G = koetter_constraint_step(F, G, D, order);
        assert(leading_monomial(G.g1, order).side == Side::Left);
        assert(leading_monomial(G.g2, order).side == Side::Right);
    }
    KeyBasis out;
    out.h1 = G.g1;
    out.h2 = G.g2;
    out.hhat1 = mu(out.h1.g0, out.h1.g1);
    out.hhat2 = mu(out.h2.g0, out.h2.g1);
    // w = 2 deg(h21) - t - 1/2, doubled
    out.w = Weight2::halves(4 * out.h2.g1.degree() - 2 * static_cast<int>(t) - 1);
    return out;
}

std::optional<BitVector> hd_decode(const CodeParams& params, const Syndrome& S) {
    const auto& F = params.field();
    if (S.all_zero()) return BitVector(params.n(), 0);

    auto ms = modified_syndrome(F, S, params.t());
    auto basis = solve_key_basis(F, ms, params.t());

    const Weight2 order = Weight2::integer(-1);
    auto lm1 = leading_monomial(basis.h1, order);
    auto lm2 = leading_monomial(basis.h2, order);
    bool first = compare_monomials(lm1, lm2, order) == std::strong_ordering::less;
    const Polynomial& sigma = first ? basis.hhat1 : basis.hhat2;

    if (sigma.degree() > static_cast<int>(params.t())) return std::nullopt;

    // exhaustive substitution over F*; roots are inverse locators
    BitVector error(params.n(), 0);
    int roots = 0;
    for (unsigned i = 0; i < params.n(); ++i) {
        FieldElement x = F.exp(i);
        if (eval(F, sigma, x).is_zero()) {
            ++roots;
            error[(params.n() - i) % params.n()] = 1;
        }
    }
    if (roots != sigma.degree()) return std::nullopt;
    return error;
}

}  // namespace fastchase
