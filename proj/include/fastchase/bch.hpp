// Primitive narrow-sense binary BCH codes: construction from cyclotomic
// cosets, systematic encoding, syndrome computation.
#ifndef FASTCHASE_BCH_HPP
#define FASTCHASE_BCH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "fastchase/field.hpp"
#include "fastchase/poly.hpp"

namespace fastchase {

using BitVector = std::vector<std::uint8_t>;  // entries 0/1

// Code of length n = 2^s - 1 with zeroes gamma^1, gamma^3, ..., gamma^(2t-1)
// and their conjugates. Coordinate i carries the locator gamma^i.
class CodeParams {
  public:
    // throws if the designed radius leaves no information bits
    CodeParams(FieldContext ctx, unsigned t);

    const FieldContext& field() const noexcept { return ctx_; }
    unsigned t() const noexcept { return t_; }
    unsigned n() const noexcept { return ctx_.n(); }
    unsigned k() const noexcept { return k_; }
    unsigned d() const noexcept { return 2 * t_ + 1; }
    const Polynomial& generator() const noexcept { return generator_; }

  private:
    FieldContext ctx_;
    unsigned t_;
    unsigned k_;
    Polynomial generator_;  // coefficients in {0, 1}
};

struct Syndrome {
    // values[j-1] = S_j = y(gamma^j), j = 1 .. 2t
    std::vector<FieldElement> values;
    bool all_zero() const noexcept {
        for (auto v : values)
            if (!v.is_zero()) return false;
        return true;
    }
    // S(X) = S_1 + S_2 X + ... + S_2t X^(2t-1)
    Polynomial poly() const { return Polynomial(values); }
};

// systematic encoding; message length must equal k
BitVector encode(const CodeParams& params, const BitVector& message);

// S_j = y(gamma^j); odd j by Horner evaluation, even j by squaring
Syndrome syndrome(const CodeParams& params, const BitVector& y);

// syndrome of the error vector with the given support, given as coordinate
// indexes; odd values come from log/antilog indexing (no field
// multiplications), even values by squaring
Syndrome syndrome_of_support(const CodeParams& params, const std::vector<unsigned>& positions);

// equality of the odd-indexed values; by conjugacy (S_2i = S_i^2) this is
// full equality for syndromes built by this module
bool odd_syndromes_equal(const Syndrome& a, const Syndrome& b);

// error locator polynomial prod(1 + alpha_i X) over the error positions;
// reference constructor used by tests and the harness
Polynomial elp_of_error(const CodeParams& params, const BitVector& error);

// hex serialization, most significant bit = coefficient of X^(n-1)
std::string bits_to_hex(const BitVector& bits);
BitVector hex_to_bits(const std::string& hex, unsigned n);

}  // namespace fastchase

#endif
