// Dense univariate polynomials over GF(2^s), with the
// odd/even split and the gluing map (u,v) -> v(X^2) + X*u(X^2).
#ifndef FASTCHASE_POLY_HPP
#define FASTCHASE_POLY_HPP

#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fastchase/field.hpp"

namespace fastchase {

// Degree sentinel for the zero polynomial. Deliberately not -1: code that
// compares degrees must branch on is_zero() first, never do arithmetic on
// this value.
inline constexpr int kZeroPolyDegree = std::numeric_limits<int>::min();

// Coefficients ascending by degree; either empty (zero polynomial) or the
// last coefficient is nonzero. Immutable value type.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<FieldElement> coeffs) : coeffs_(std::move(coeffs)) {
        trim();
    }

    static Polynomial constant(FieldElement c) { return Polynomial({c}); }
    static Polynomial monomial(int degree, FieldElement c);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    int degree() const noexcept {
        return coeffs_.empty() ? kZeroPolyDegree : static_cast<int>(coeffs_.size()) - 1;
    }
    FieldElement coeff(int i) const noexcept {
        if (i < 0 || i >= static_cast<int>(coeffs_.size())) return {};
        return coeffs_[static_cast<std::size_t>(i)];
    }
    FieldElement leading() const;
    std::span<const FieldElement> coeffs() const noexcept { return coeffs_; }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
    std::vector<FieldElement> coeffs_;
};

// Horner evaluation; charges exactly deg(f) multiplications.
FieldElement eval(const FieldContext& F, const Polynomial& f, FieldElement x);

Polynomial add(const Polynomial& a, const Polynomial& b);  // characteristic 2
Polynomial mul(const FieldContext& F, const Polynomial& a, const Polynomial& b);
// charges deg(f)+1 multiplications (one per stored coefficient slot)
Polynomial scalar_mul(const FieldContext& F, const Polynomial& f, FieldElement c);
Polynomial shift_up(const Polynomial& f, int k);  // multiply by X^k
// quotient and remainder
std::pair<Polynomial, Polynomial> divmod(const FieldContext& F, const Polynomial& a,
                                         const Polynomial& b);
// throws std::domain_error if the remainder is nonzero
Polynomial divide_exact(const FieldContext& F, const Polynomial& a, const Polynomial& b);
// truncation to degree < k
Polynomial mod_xk(const Polynomial& f, int k);

// characteristic-2 formal derivative: f' = odd_part(f) at X^2
Polynomial formal_derivative(const Polynomial& f);

// f(X) = even_part(f)(X^2) + X * odd_part(f)(X^2)
Polynomial odd_part(const Polynomial& f);
Polynomial even_part(const Polynomial& f);

// mu(u, v) = v(X^2) + X*u(X^2)
Polynomial mu(const Polynomial& u, const Polynomial& v);
// (odd_part(f), even_part(f))
std::pair<Polynomial, Polynomial> mu_inverse(const Polynomial& f);

Polynomial monic(const FieldContext& F, const Polynomial& f);
// monic gcd via the Euclidean algorithm; gcd(0,0) is a domain error
Polynomial gcd(const FieldContext& F, Polynomial a, Polynomial b);

// fixture format: comma-separated coefficient hex values, ascending degree
std::string to_string(const Polynomial& f);
Polynomial poly_from_string(const std::string& text);

}  // namespace fastchase

#endif
