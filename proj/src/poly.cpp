#include "fastchase/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace fastchase {

Polynomial Polynomial::monomial(int degree, FieldElement c) {
    if (degree < 0) throw std::invalid_argument("monomial degree must be >= 0");
    if (c.is_zero()) return {};
    std::vector<FieldElement> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return Polynomial(std::move(v));
}

FieldElement Polynomial::leading() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

FieldElement eval(const FieldContext& F, const Polynomial& f, FieldElement x) {
    if (f.is_zero()) return {};
    auto cs = f.coeffs();
    FieldElement acc = cs.back();
    for (std::size_t i = cs.size() - 1; i-- > 0;) acc = F.add(F.mul(acc, x), cs[i]);
    return acc;
}

Polynomial add(const Polynomial& a, const Polynomial& b) {
    const auto& longer = a.degree() >= b.degree() ? a : b;
    const auto& shorter = a.degree() >= b.degree() ? b : a;
    std::vector<FieldElement> out(longer.coeffs().begin(), longer.coeffs().end());
    for (std::size_t i = 0; i < shorter.coeffs().size(); ++i)
        out[i].value ^= shorter.coeffs()[i].value;
    return Polynomial(std::move(out));
}

Polynomial mul(const FieldContext& F, const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<FieldElement> out(a.coeffs().size() + b.coeffs().size() - 1);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            out[i + j] = F.add(out[i + j], F.mul(a.coeffs()[i], b.coeffs()[j]));
    return Polynomial(std::move(out));
}

Polynomial scalar_mul(const FieldContext& F, const Polynomial& f, FieldElement c) {
    std::vector<FieldElement> out(f.coeffs().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.mul(f.coeffs()[i], c);
    return Polynomial(std::move(out));
}

Polynomial shift_up(const Polynomial& f, int k) {
    if (f.is_zero()) return {};
    std::vector<FieldElement> out(f.coeffs().size() + static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < f.coeffs().size(); ++i)
        out[i + static_cast<std::size_t>(k)] = f.coeffs()[i];
    return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> divmod(const FieldContext& F, const Polynomial& a,
                                         const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {Polynomial{}, a};
    std::vector<FieldElement> rem(a.coeffs().begin(), a.coeffs().end());
    std::vector<FieldElement> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
    const FieldElement lead_inv = F.inv(b.leading());
    for (int i = a.degree(); i >= b.degree(); --i) {
        FieldElement q = F.mul(rem[static_cast<std::size_t>(i)], lead_inv);
        quot[static_cast<std::size_t>(i - b.degree())] = q;
        if (q.is_zero()) continue;
        for (int j = 0; j <= b.degree(); ++j) {
            auto& r = rem[static_cast<std::size_t>(i - b.degree() + j)];
            r = F.add(r, F.mul(q, b.coeff(j)));
        }
    }
    rem.resize(static_cast<std::size_t>(std::max(b.degree(), 0)));
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial divide_exact(const FieldContext& F, const Polynomial& a, const Polynomial& b) {
    auto [q, r] = divmod(F, a, b);
    if (!r.is_zero()) throw std::domain_error("divide_exact: nonzero remainder");
    return q;
}

Polynomial mod_xk(const Polynomial& f, int k) {
    if (k <= 0) return {};
    if (f.degree() < k) return f;
    std::vector<FieldElement> out(f.coeffs().begin(), f.coeffs().begin() + k);
    return Polynomial(std::move(out));
}

Polynomial formal_derivative(const Polynomial& f) {
    if (f.is_zero()) return {};
    std::vector<FieldElement> out(f.coeffs().size() - 1);
    for (std::size_t i = 1; i < f.coeffs().size(); ++i)
        if (i % 2 == 1) out[i - 1] = f.coeffs()[i];
    return Polynomial(std::move(out));
}

Polynomial odd_part(const Polynomial& f) {
    std::vector<FieldElement> out;
    for (std::size_t i = 1; i < f.coeffs().size(); i += 2) out.push_back(f.coeffs()[i]);
    return Polynomial(std::move(out));
}

Polynomial even_part(const Polynomial& f) {
    std::vector<FieldElement> out;
    for (std::size_t i = 0; i < f.coeffs().size(); i += 2) out.push_back(f.coeffs()[i]);
    return Polynomial(std::move(out));
}

Polynomial mu(const Polynomial& u, const Polynomial& v) {
    std::size_t len = std::max(u.coeffs().size() * 2, v.coeffs().size() * 2);
    if (len == 0) return {};
    std::vector<FieldElement> out(len);
    for (std::size_t i = 0; i < v.coeffs().size(); ++i) out[2 * i] = v.coeffs()[i];
    for (std::size_t i = 0; i < u.coeffs().size(); ++i) out[2 * i + 1] = u.coeffs()[i];
    return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> mu_inverse(const Polynomial& f) {
    return {odd_part(f), even_part(f)};
}

Polynomial monic(const FieldContext& F, const Polynomial& f) {
    if (f.is_zero()) return {};
    if (f.leading() == F.one()) return f;
    return scalar_mul(F, f, F.inv(f.leading()));
}

Polynomial gcd(const FieldContext& F, Polynomial a, Polynomial b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0, 0)");
    while (!b.is_zero()) {
        auto [q, r] = divmod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(F, a);
}

std::string to_string(const Polynomial& f) {
    std::ostringstream os;
    os << std::hex;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (i) os << ',';
        os << f.coeffs()[i].value;
    }
    return os.str();
}

Polynomial poly_from_string(const std::string& text) {
    std::vector<FieldElement> out;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) continue;
        unsigned long v = std::stoul(tok, nullptr, 16);
        if (v > 0xFFFF) throw std::invalid_argument("coefficient out of range");
        out.push_back({static_cast<std::uint16_t>(v)});
    }
    return Polynomial(std::move(out));
}

}  // namespace fastchase
