#include "fastchase/modorder.hpp"

#include <stdexcept>

namespace fastchase {

ModulePair pair_add(const ModulePair& a, const ModulePair& b) {
    return {add(a.g0, b.g0), add(a.g1, b.g1)};
}

ModulePair pair_scale(const FieldContext& F, const ModulePair& p, FieldElement c) {
    return {scalar_mul(F, p.g0, c), scalar_mul(F, p.g1, c)};
}

ModulePair pair_shift(const ModulePair& p) {
    return {shift_up(p.g0, 1), shift_up(p.g1, 1)};
}

ModulePair pair_poly_mul(const FieldContext& F, const Polynomial& f, const ModulePair& p) {
    return {mul(F, f, p.g0), mul(F, f, p.g1)};
}

int wdeg2(const ModulePair& p, Weight2 w) {
    if (p.is_zero()) throw std::domain_error("wdeg of (0, 0)");
    if (p.g0.is_zero()) return 2 * p.g1.degree() + w.twice_w;
    if (p.g1.is_zero()) return 2 * p.g0.degree();
    return std::max(2 * p.g0.degree(), 2 * p.g1.degree() + w.twice_w);
}

int wdeg2(Monomial2 m, Weight2 w) {
    return m.side == Side::Left ? 2 * m.degree : 2 * m.degree + w.twice_w;
}

std::strong_ordering compare_monomials(Monomial2 a, Monomial2 b, Weight2 w) {
    if (a.side == b.side) return a.degree <=> b.degree;
    int da = wdeg2(a, w);
    int db = wdeg2(b, w);
    if (da != db) return da <=> db;
    // weighted-degree tie (integer w only): lex with Y > X puts the right
    // side above the left
    return a.side == Side::Left ? std::strong_ordering::less : std::strong_ordering::greater;
}

Monomial2 leading_monomial(const ModulePair& p, Weight2 w) {
    if (p.is_zero()) throw std::domain_error("leading monomial of (0, 0)");
    if (p.g0.is_zero()) return {Side::Right, p.g1.degree()};
    if (p.g1.is_zero()) return {Side::Left, p.g0.degree()};
    Monomial2 left{Side::Left, p.g0.degree()};
    Monomial2 right{Side::Right, p.g1.degree()};
    return compare_monomials(left, right, w) == std::strong_ordering::less ? right : left;
}

int ord(const ModulePair& p) {
    if (p.is_zero()) throw std::domain_error("ord of (0, 0)");
    if (p.g0.is_zero()) return p.g1.degree();
    if (p.g1.is_zero()) return p.g0.degree() + 1;
    return std::max(p.g0.degree() + 1, p.g1.degree());
}

}  // namespace fastchase
