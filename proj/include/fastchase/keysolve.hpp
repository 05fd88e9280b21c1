// Modified syndrome, Groebner basis of the halved-dimension
// solution module N = {(u,v): u = shat*v mod X^t} under <_{-1}, and
// hard-decision decoding through the gluing map.
#ifndef FASTCHASE_KEYSOLVE_HPP
#define FASTCHASE_KEYSOLVE_HPP

#include <functional>
#include <optional>

#include "fastchase/bch.hpp"
#include "fastchase/modorder.hpp"

namespace fastchase {

// shat = evenS / (1 + X*oddS) mod X^t, degree < t
struct ModifiedSyndrome {
    Polynomial shat;
};

// Groebner basis {h1, h2} of N under <_{-1}, h1 with leading monomial on
// the left, h2 on the right, plus the glued polynomials and the Chase
// order weight w = 2*deg(h21) - t - 1/2 (stored doubled).
struct KeyBasis {
    ModulePair h1;
    ModulePair h2;
    Polynomial hhat1;  // mu(h1) = h11(X^2) + X*h10(X^2)
    Polynomial hhat2;  // mu(h2)
    Weight2 w;
};

// Recursive expansion of evenS/(1 + X*oddS) mod X^t; charges exactly
// t(t-1)/2 multiplications.
ModifiedSyndrome modified_syndrome(const FieldContext& F, const Syndrome& S, unsigned t);

struct KoetterBasis {
    ModulePair g1;  // leading monomial on the left
    ModulePair g2;  // leading monomial on the right
};

// One Koetter iteration: converts a Groebner basis of a module M into one
// of M intersect ker(D), keeping leading-monomial sides. D must be a linear
// functional whose kernel intersects M in a module.
KoetterBasis koetter_constraint_step(const FieldContext& F, const KoetterBasis& G,
                                     const std::function<FieldElement(const ModulePair&)>& D,
                                     Weight2 w);

// t Koetter steps from {(1,0),(0,1)} with D_k(u,v) = [X^k](u - shat*v)
KeyBasis solve_key_basis(const FieldContext& F, const ModifiedSyndrome& ms, unsigned t);

// Bounded-distance decoding: sigma = mu of the <_{-1}-minimal basis vector;
// succeeds iff deg(sigma) <= t and sigma splits over F* with distinct
// roots. Returns the error vector on success.
std::optional<BitVector> hd_decode(const CodeParams& params, const Syndrome& S);

}  // namespace fastchase

#endif
