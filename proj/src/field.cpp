#include "fastchase/field.hpp"

#include <stdexcept>
#include <string>

namespace fastchase {

namespace detail {
thread_local std::uint64_t g_mul_ops = 0;
}

std::uint32_t FieldContext::default_primitive_poly(unsigned s) {
    // conventional primitive polynomial per extension degree
    switch (s) {
        case 2: return 0x7;        // x^2+x+1
        case 3: return 0xB;        // x^3+x+1
        case 4: return 0x13;       // x^4+x+1
        case 5: return 0x25;       // x^5+x^2+1
        case 6: return 0x43;       // x^6+x+1
        case 7: return 0x89;       // x^7+x^3+1
        case 8: return 0x11D;      // x^8+x^4+x^3+x^2+1
        case 9: return 0x211;      // x^9+x^4+1
        case 10: return 0x409;     // x^10+x^3+1
        case 11: return 0x805;     // x^11+x^2+1
        case 12: return 0x1053;    // x^12+x^6+x^4+x+1
        case 13: return 0x201B;    // x^13+x^4+x^3+x+1
        case 14: return 0x4443;    // x^14+x^10+x^6+x+1
        case 15: return 0x8003;    // x^15+x+1
        case 16: return 0x1100B;   // x^16+x^12+x^3+x+1
        default:
            throw std::invalid_argument("extension degree must be in [2, 16]");
    }
}

FieldContext::FieldContext(unsigned s, std::uint32_t prim_poly) : s_(s) {
    if (s < 2 || s > 16) throw std::invalid_argument("extension degree must be in [2, 16]");
    prim_poly_ = prim_poly == 0 ? default_primitive_poly(s) : prim_poly;
    const std::uint32_t size = 1u << s;
    if (prim_poly_ < size || prim_poly_ >= 2 * size)
        throw std::invalid_argument("primitive polynomial must have degree exactly s");
    n_ = size - 1;

    log_.assign(size, 0xFFFF);
    antilog_.assign(2 * static_cast<std::size_t>(n_) - 1, 0);

    std::uint32_t b = 1;
    for (std::uint32_t j = 0; j < n_; ++j) {
        if (log_[b] != 0xFFFF) throw std::invalid_argument("polynomial is not primitive");
        log_[b] = static_cast<std::uint16_t>(j);
        antilog_[j] = static_cast<std::uint16_t>(b);
        b <<= 1;
        if (b & size) b ^= prim_poly_;
    }
    if (b != 1)  // gamma must have order exactly n
        throw std::invalid_argument("polynomial is not primitive");
    for (std::uint32_t j = n_; j < 2 * n_ - 1; ++j) antilog_[j] = antilog_[j - n_];
}

unsigned FieldContext::log(FieldElement a) const {
    if (a.value == 0) throw std::domain_error("log of zero");
    return log_[a.value];
}

FieldElement FieldContext::div(FieldElement a, FieldElement b) const {
    ++detail::g_mul_ops;
    if (b.value == 0) throw std::domain_error("division by zero");
    if (a.value == 0) return {};
    std::uint32_t e = log_[a.value] + n_ - static_cast<std::uint32_t>(log_[b.value]);
    if (e >= n_) e -= n_;
    return {antilog_[e]};
}

FieldElement FieldContext::inv(FieldElement a) const {
    ++detail::g_mul_ops;
    if (a.value == 0) throw std::domain_error("inverse of zero");
    return {antilog_[n_ - static_cast<std::uint32_t>(log_[a.value])]};
}

FieldElement FieldContext::pow(FieldElement a, long long k) const {
    ++detail::g_mul_ops;
    if (a.value == 0) {
        if (k == 0) return one();
        if (k < 0) throw std::domain_error("negative power of zero");
        return {};
    }
    long long e = (static_cast<long long>(log_[a.value]) * (k % n_)) % n_;
    if (e < 0) e += n_;
    return {antilog_[static_cast<std::size_t>(e)]};
}

FieldElement FieldContext::sqrt(FieldElement a) const {
    ++detail::g_mul_ops;
    if (a.value == 0) return {};
    // a^(2^(s-1)): halve the discrete log mod n (n odd, so 2 is invertible)
    std::uint32_t la = log_[a.value];
    std::uint32_t e = (la % 2 == 0) ? la / 2 : (la + n_) / 2;
    return {antilog_[e]};
}

}  // namespace fastchase
