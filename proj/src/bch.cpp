#include "fastchase/bch.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace fastchase {

namespace {

// minimal polynomial of gamma^j: prod over the cyclotomic coset of j
Polynomial minimal_polynomial(const FieldContext& F, unsigned j) {
    std::set<unsigned> coset;
    unsigned e = j % F.n();
    while (coset.insert(e).second) e = (2 * e) % F.n();
    Polynomial m = Polynomial::constant(F.one());
    for (unsigned exp : coset) {
        // multiply by (X + gamma^exp)
        Polynomial factor({F.exp(exp), F.one()});
        m = mul(F, m, factor);
    }
    for (auto c : m.coeffs())
        if (c.value > 1) throw std::logic_error("minimal polynomial not over GF(2)");
    return m;
}

}  // namespace

CodeParams::CodeParams(FieldContext ctx, unsigned t) : ctx_(std::move(ctx)), t_(t) {
    if (t < 1) throw std::invalid_argument("designed radius t must be >= 1");
    std::set<unsigned> covered;
    Polynomial g = Polynomial::constant(ctx_.one());
    for (unsigned j = 1; j + 1 <= 2 * t; j += 2) {
        if (covered.count(j % ctx_.n())) continue;
        unsigned e = j % ctx_.n();
        while (covered.insert(e).second) e = (2 * e) % ctx_.n();
        g = mul(ctx_, g, minimal_polynomial(ctx_, j));
    }
    generator_ = g;
    int redundancy = g.degree();
    if (redundancy >= static_cast<int>(ctx_.n()))
        throw std::invalid_argument("designed radius t leaves no information bits");
    k_ = ctx_.n() - static_cast<unsigned>(redundancy);
}

BitVector encode(const CodeParams& params, const BitVector& message) {
    if (message.size() != params.k()) throw std::invalid_argument("message length must equal k");
    const unsigned n = params.n();
    const unsigned deg_g = n - params.k();
    // c(X) = m(X) X^(n-k) + (m(X) X^(n-k) mod g(X)), long division over GF(2)
    BitVector work(n, 0);
    for (unsigned i = 0; i < params.k(); ++i) work[deg_g + i] = message[i];
    BitVector rem = work;
    const auto& g = params.generator();
    for (int i = static_cast<int>(n) - 1; i >= static_cast<int>(deg_g); --i) {
        if (!rem[static_cast<std::size_t>(i)]) continue;
        for (int j = 0; j <= static_cast<int>(deg_g); ++j)
            rem[static_cast<std::size_t>(i - static_cast<int>(deg_g) + j)] ^= g.coeff(j).value;
    }
    BitVector codeword = work;
    for (unsigned i = 0; i < deg_g; ++i) codeword[i] = rem[i];
    return codeword;
}

Syndrome syndrome(const CodeParams& params, const BitVector& y) {
    if (y.size() != params.n()) throw std::invalid_argument("received word length must equal n");
    const auto& F = params.field();
    Syndrome S;
    S.values.assign(2 * params.t(), FieldElement{});
    for (unsigned j = 1; j <= 2 * params.t(); ++j) {
        if (j % 2 == 0) {
            FieldElement half = S.values[j / 2 - 1];
            S.values[j - 1] = F.mul(half, half);
            continue;
        }
        FieldElement gj = F.exp(j);
        FieldElement acc{y.back()};
        for (std::size_t i = y.size() - 1; i-- > 0;)
            acc = F.add(F.mul(acc, gj), FieldElement{y[i]});
        S.values[j - 1] = acc;
    }
    return S;
}

Syndrome syndrome_of_support(const CodeParams& params, const std::vector<unsigned>& positions) {
    const auto& F = params.field();
    Syndrome S;
    S.values.assign(2 * params.t(), FieldElement{});
    for (unsigned j = 1; j <= 2 * params.t(); j += 2) {
        FieldElement acc{};
        for (unsigned pos : positions)
            acc = F.add(acc, F.exp(static_cast<long long>(pos) * j));
        S.values[j - 1] = acc;
    }
    for (unsigned j = 2; j <= 2 * params.t(); j += 2) {
        FieldElement half = S.values[j / 2 - 1];
        S.values[j - 1] = F.mul(half, half);
    }
    return S;
}

bool odd_syndromes_equal(const Syndrome& a, const Syndrome& b) {
    if (a.values.size() != b.values.size()) return false;
    for (std::size_t j = 0; j < a.values.size(); j += 2)
        if (a.values[j] != b.values[j]) return false;
    return true;
}

Polynomial elp_of_error(const CodeParams& params, const BitVector& error) {
    const auto& F = params.field();
    Polynomial sigma = Polynomial::constant(F.one());
    for (unsigned i = 0; i < error.size(); ++i) {
        if (!error[i]) continue;
        Polynomial factor({F.one(), F.exp(i)});  // 1 + gamma^i X
        sigma = mul(F, sigma, factor);
    }
    return sigma;
}

std::string bits_to_hex(const BitVector& bits) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    const std::size_t n = bits.size();
    const std::size_t nibbles = (n + 3) / 4;
    out.reserve(nibbles);
    for (std::size_t nib = nibbles; nib-- > 0;) {
        unsigned v = 0;
        for (unsigned b = 0; b < 4; ++b) {
            std::size_t idx = nib * 4 + b;
            if (idx < n && bits[idx]) v |= 1u << b;
        }
        out.push_back(digits[v]);
    }
    return out;
}

BitVector hex_to_bits(const std::string& hex, unsigned n) {
    BitVector bits(n, 0);
    std::size_t bit = 0;
    for (std::size_t i = hex.size(); i-- > 0; bit += 4) {
        char c = hex[i];
        unsigned v;
        if (c >= '0' && c <= '9') v = static_cast<unsigned>(c - '0');
        else if (c >= 'a' && c <= 'f') v = static_cast<unsigned>(c - 'a') + 10;
        else if (c >= 'A' && c <= 'F') v = static_cast<unsigned>(c - 'A') + 10;
        else throw std::invalid_argument("invalid hex digit");
        for (unsigned b = 0; b < 4; ++b) {
            if (!((v >> b) & 1)) continue;
            if (bit + b >= n) throw std::invalid_argument("hex word does not fit in n bits");
            bits[bit + b] = 1;
        }
    }
    return bits;
}

}  // namespace fastchase
