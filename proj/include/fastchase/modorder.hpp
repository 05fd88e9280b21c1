// Pairs in F[X]^2 under the (1,w)-weighted monomial order,
// with w a possibly half-integer weight held as a doubled integer so all
// comparisons stay exact.
#ifndef FASTCHASE_MODORDER_HPP
#define FASTCHASE_MODORDER_HPP

#include <compare>

#include "fastchase/poly.hpp"

namespace fastchase {

// Weight w stored as 2w. Odd twice_w means a genuine half-integer, for
// which no cross-side weighted-degree tie can ever occur.
struct Weight2 {
    int twice_w = 0;
    static Weight2 integer(int w) { return {2 * w}; }
    static Weight2 halves(int twice) { return {twice}; }
    bool is_half_integer() const noexcept { return twice_w % 2 != 0; }
    friend bool operator==(Weight2, Weight2) = default;
};

enum class Side { Left, Right };  // Left = (X^j, 0), Right = (0, X^j)

struct Monomial2 {
    Side side = Side::Left;
    int degree = 0;
    friend bool operator==(Monomial2, Monomial2) = default;
};

// Element (g0, g1) of F[X]^2.
struct ModulePair {
    Polynomial g0;
    Polynomial g1;
    bool is_zero() const noexcept { return g0.is_zero() && g1.is_zero(); }
    friend bool operator==(const ModulePair&, const ModulePair&) = default;
};

ModulePair pair_add(const ModulePair& a, const ModulePair& b);
ModulePair pair_scale(const FieldContext& F, const ModulePair& p, FieldElement c);
ModulePair pair_shift(const ModulePair& p);  // multiply by X
ModulePair pair_poly_mul(const FieldContext& F, const Polynomial& f, const ModulePair& p);

// doubled weighted degree: max(2*deg g0, 2*deg g1 + twice_w); p != (0,0)
int wdeg2(const ModulePair& p, Weight2 w);
int wdeg2(Monomial2 m, Weight2 w);

// Total order: same side by degree; across sides (X^j1,0) < (0,X^j2) iff
// j1 <= j2 + w, i.e. on a weighted-degree tie the right side is larger
// (lex with Y > X). Ties across sides only exist for integer w.
std::strong_ordering compare_monomials(Monomial2 a, Monomial2 b, Weight2 w);

// the <_w-largest monomial appearing in p; p != (0,0)
Monomial2 leading_monomial(const ModulePair& p, Weight2 w);

// ord(p) = max(deg g0 + 1, deg g1); p != (0,0)
int ord(const ModulePair& p);

}  // namespace fastchase

#endif
