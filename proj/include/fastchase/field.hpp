// Arithmetic in GF(2^s) via log/antilog tables, 2 <= s <= 16.
#ifndef FASTCHASE_FIELD_HPP
#define FASTCHASE_FIELD_HPP

#include <cstdint>
#include <vector>

namespace fastchase {

// One element of GF(2^s), stored canonically as a polynomial residue
// bitmask with value < 2^s.
struct FieldElement {
    std::uint16_t value = 0;
    friend bool operator==(FieldElement, FieldElement) = default;
    bool is_zero() const noexcept { return value == 0; }
};

namespace detail {
// Per-thread count of table multiplications (mul/div/inv/pow/sqrt each
// charge per table access, additions are free). Every call is charged,
// even with a zero operand, so structural counts like Horner's deg(f)
// match the cost model exactly.
extern thread_local std::uint64_t g_mul_ops;
}

inline std::uint64_t mul_ops() noexcept { return detail::g_mul_ops; }
inline void reset_mul_ops() noexcept { detail::g_mul_ops = 0; }

// Immutable tables for one field; safe to share across threads.
// All operations are pure.
class FieldContext {
  public:
    // prim_poly is the full bitmask of the irreducible polynomial
    // (bit s set). prim_poly = 0 selects a built-in default for s.
    explicit FieldContext(unsigned s, std::uint32_t prim_poly = 0);

    unsigned s() const noexcept { return s_; }
    std::uint32_t prim_poly() const noexcept { return prim_poly_; }
    // multiplicative group order, n = 2^s - 1
    std::uint32_t n() const noexcept { return n_; }

    FieldElement zero() const noexcept { return {}; }
    FieldElement one() const noexcept { return {1}; }
    // primitive element gamma = antilog[1]
    FieldElement gamma() const noexcept { return {antilog_[1]}; }

    // gamma^k for any integer k (reduced mod n); not charged as a
    // multiplication, this is plain table indexing.
    FieldElement exp(long long k) const noexcept {
        long long r = k % n_;
        if (r < 0) r += n_;
        return {antilog_[static_cast<std::size_t>(r)]};
    }
    // discrete log base gamma; a must be nonzero
    unsigned log(FieldElement a) const;

    FieldElement add(FieldElement a, FieldElement b) const noexcept {
        return {static_cast<std::uint16_t>(a.value ^ b.value)};
    }

    FieldElement mul(FieldElement a, FieldElement b) const noexcept {
        ++detail::g_mul_ops;
        if (a.value == 0 || b.value == 0) return {};
        return {antilog_[log_[a.value] + static_cast<std::uint32_t>(log_[b.value])]};
    }

    // a / b; one table access, charged as one multiplication
    FieldElement div(FieldElement a, FieldElement b) const;

    FieldElement inv(FieldElement a) const;

    // a^k for any integer k; pow(0, 0) = 1 by convention
    FieldElement pow(FieldElement a, long long k) const;

    // the unique square root, a^(2^(s-1))
    FieldElement sqrt(FieldElement a) const;

    static std::uint32_t default_primitive_poly(unsigned s);

  private:
    unsigned s_;
    std::uint32_t prim_poly_;
    std::uint32_t n_;
    std::vector<std::uint16_t> log_;      // size 2^s; log_[0] unused
    std::vector<std::uint16_t> antilog_;  // size 2n-1 so mul needs no mod
};

}  // namespace fastchase

#endif
