// Test-only reference implementations, kept independent of the library
// code paths they check.
#ifndef FASTCHASE_TESTS_ORACLES_HPP
#define FASTCHASE_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "fastchase/bch.hpp"
#include "fastchase/modorder.hpp"
#include "fastchase/poly.hpp"

namespace oracles {

using namespace fastchase;

// carry-less shift-and-xor multiply reduced mod the primitive polynomial
inline FieldElement clmul_reduce(const FieldContext& F, FieldElement a, FieldElement b) {
    std::uint32_t prod = 0;
    for (unsigned i = 0; i < F.s(); ++i)
        if ((b.value >> i) & 1) prod ^= static_cast<std::uint32_t>(a.value) << i;
    for (int d = 2 * static_cast<int>(F.s()) - 2; d >= static_cast<int>(F.s()); --d)
        if ((prod >> d) & 1) prod ^= F.prim_poly() << (d - static_cast<int>(F.s()));
    return {static_cast<std::uint16_t>(prod)};
}

// power-sum evaluation, no Horner
inline FieldElement naive_eval(const FieldContext& F, const Polynomial& f, FieldElement x) {
    FieldElement acc{};
    for (int i = 0; i <= f.degree(); ++i) acc = F.add(acc, F.mul(f.coeff(i), F.pow(x, i)));
    return acc;
}

// power-series inverse of g mod X^k (g must have nonzero constant term)
inline Polynomial series_inverse(const FieldContext& F, const Polynomial& g, int k) {
    std::vector<FieldElement> inv(static_cast<std::size_t>(k));
    FieldElement c0 = F.inv(g.coeff(0));
    inv[0] = c0;
    for (int i = 1; i < k; ++i) {
        FieldElement acc{};
        for (int j = 1; j <= i; ++j) acc = F.add(acc, F.mul(g.coeff(j), inv[i - j]));
        inv[static_cast<std::size_t>(i)] = F.mul(acc, c0);
    }
    return Polynomial(std::move(inv));
}

inline Polynomial random_poly(const FieldContext& F, int degree, std::mt19937_64& rng) {
    if (degree < 0) return {};
    std::vector<FieldElement> c(static_cast<std::size_t>(degree) + 1);
    for (auto& v : c) v = {static_cast<std::uint16_t>(rng() % (F.n() + 1))};
    if (c.back().is_zero()) c.back() = F.one();
    return Polynomial(std::move(c));
}

inline BitVector random_error(unsigned n, unsigned weight, std::mt19937_64& rng) {
    BitVector e(n, 0);
    unsigned placed = 0;
    while (placed < weight) {
        unsigned p = static_cast<unsigned>(rng() % n);
        if (!e[p]) {
            e[p] = 1;
            ++placed;
        }
    }
    return e;
}

inline std::vector<unsigned> support_of(const BitVector& bits) {
    std::vector<unsigned> s;
    for (unsigned i = 0; i < bits.size(); ++i)
        if (bits[i]) s.push_back(i);
    return s;
}

// Exhaustive bounded-distance decoder: precomputes the syndrome ->
// coset-leader map over all error patterns of weight <= t. Only feasible
// for small codes.
class BruteForceHdDecoder {
  public:
    explicit BruteForceHdDecoder(const CodeParams& params) : params_(params) {
        BitVector pattern(params.n(), 0);
        enumerate(pattern, 0, 0);
    }

    std::optional<BitVector> decode_error(const Syndrome& S) const {
        auto it = table_.find(key_of(S));
        if (it == table_.end()) return std::nullopt;
        return it->second;
    }

  private:
    std::vector<std::uint16_t> key_of(const Syndrome& S) const {
        std::vector<std::uint16_t> k;
        for (auto v : S.values) k.push_back(v.value);
        return k;
    }

    void enumerate(BitVector& pattern, unsigned from, unsigned weight) {
        table_.emplace(key_of(syndrome_of_support(params_, support_of(pattern))), pattern);
        if (weight == params_.t()) return;
        for (unsigned p = from; p < params_.n(); ++p) {
            pattern[p] = 1;
            enumerate(pattern, p + 1, weight + 1);
            pattern[p] = 0;
        }
    }

    const CodeParams& params_;
    std::map<std::vector<std::uint16_t>, BitVector> table_;
};

// ---- dense linear algebra over GF(2^s) for the bounded-degree module
// oracle: solutions of linear constraints on (g0, g1) coefficient vectors.

struct LinearSystem {
    // rows of coefficients, one per constraint; columns index the unknowns
    std::vector<std::vector<FieldElement>> rows;
};

// kernel basis of the system in column space dimension `cols`
inline std::vector<std::vector<FieldElement>> kernel_basis(const FieldContext& F,
                                                           LinearSystem sys, std::size_t cols) {
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < sys.rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < sys.rows.size() && sys.rows[pivot][col].is_zero()) ++pivot;
        if (pivot == sys.rows.size()) continue;
        std::swap(sys.rows[rank], sys.rows[pivot]);
        FieldElement inv = F.inv(sys.rows[rank][col]);
        for (auto& v : sys.rows[rank]) v = F.mul(v, inv);
        for (std::size_t r = 0; r < sys.rows.size(); ++r) {
            if (r == rank || sys.rows[r][col].is_zero()) continue;
            FieldElement factor = sys.rows[r][col];
            for (std::size_t c = 0; c < cols; ++c)
                sys.rows[r][c] = F.add(sys.rows[r][c], F.mul(factor, sys.rows[rank][c]));
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_col) is_pivot[c] = true;

    std::vector<std::vector<FieldElement>> basis;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<FieldElement> v(cols);
        v[free_col] = F.one();
        for (std::size_t r = 0; r < rank; ++r)
            v[pivot_col[r]] = sys.rows[r][free_col];  // char 2: negation is identity
        basis.push_back(std::move(v));
    }
    return basis;
}

// coefficient vector layout for bounded-degree pairs: g0 coeffs 0..B then
// g1 coeffs 0..B
inline ModulePair vector_to_pair(const std::vector<FieldElement>& v, int bound) {
    std::vector<FieldElement> c0(v.begin(), v.begin() + bound + 1);
    std::vector<FieldElement> c1(v.begin() + bound + 1, v.end());
    return {Polynomial(std::move(c0)), Polynomial(std::move(c1))};
}

// Echelonize a set of pairs by <_w-leading monomial (largest first). The
// resulting rows have pairwise distinct leading monomials, so per-side
// minima over the span can be read off directly.
inline std::vector<ModulePair> lm_echelon(const FieldContext& F, std::vector<ModulePair> vecs,
                                          Weight2 w) {
    std::vector<ModulePair> rows;
    for (auto& v : vecs) {
        ModulePair cur = v;
        bool reduced = true;
        while (reduced && !cur.is_zero()) {
            reduced = false;
            Monomial2 lm = leading_monomial(cur, w);
            for (const auto& row : rows) {
                if (leading_monomial(row, w) == lm) {
                    FieldElement lc = lm.side == Side::Left ? cur.g0.leading() : cur.g1.leading();
                    FieldElement rc = lm.side == Side::Left ? row.g0.leading() : row.g1.leading();
                    cur = pair_add(cur, pair_scale(F, row, F.div(lc, rc)));
                    reduced = true;
                    break;
                }
            }
        }
        if (!cur.is_zero()) rows.push_back(cur);
    }
    return rows;
}

// module division: reduce p by the basis until no leading monomial of the
// remainder is a shifted leading monomial of a basis vector
inline ModulePair reduce_by_basis(const FieldContext& F, ModulePair p, const ModulePair& b1,
                                  const ModulePair& b2, Weight2 w) {
    bool changed = true;
    while (changed && !p.is_zero()) {
        changed = false;
        Monomial2 lm = leading_monomial(p, w);
        for (const ModulePair* b : {&b1, &b2}) {
            Monomial2 blm = leading_monomial(*b, w);
            if (blm.side != lm.side || blm.degree > lm.degree) continue;
            FieldElement pc = lm.side == Side::Left ? p.g0.leading() : p.g1.leading();
            FieldElement bc = lm.side == Side::Left ? b->g0.leading() : b->g1.leading();
            Polynomial factor = Polynomial::monomial(lm.degree - blm.degree, F.div(pc, bc));
            p = pair_add(p, pair_poly_mul(F, factor, *b));
            changed = true;
            break;
        }
    }
    return p;
}

}  // namespace oracles

#endif
