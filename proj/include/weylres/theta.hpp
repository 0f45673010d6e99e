#pragma once

#include <cstdint>

#include "weylres/gfq.hpp"
#include "weylres/poly.hpp"

namespace weylres {

using Poly = UniPoly<FieldElement>;

/// theta(f) = f^p + d^{p-1}f/dx^{p-1}, a bijection K[x] -> K[x^p] over a
/// perfect field. Defined over any coefficient ring of characteristic p.
template <class C>
UniPoly<C> theta(const UniPoly<C>& f) {
  return f.frobenius() + derivative(f, static_cast<std::uint64_t>(f.field().p() - 1));
}

/// F^{-1} on K[x^p]: p-th root of each coefficient, exponents divided by p.
/// Throws precondition_error if some exponent is not divisible by p.
Poly inv_frobenius_poly(const Poly& g);

/// Component a_i of g = sum_{i<p} a_i x^{pi} with a_i in K[x^{p^2}].
/// Requires 0 <= i < p and g in K[x^p].
Poly pi(std::uint64_t i, const Poly& g);

/// Delta = d^{[(p-1)p]} F^{-1} on K[x^{p^2}]:
/// sum a_i x^{p^2 i} -> sum a_{p-1+pi}^{1/p} x^{p^2 i}.
Poly delta(const Poly& g);

/// Delta applied n times.
Poly delta_power(const Poly& g, unsigned n);

/// sum_{j>=0} Delta^j(g), summed until the iterate vanishes. Delta is
/// locally nilpotent, so the sum is finite; the number of nonzero iterates
/// is checked against 1 + log_p(1 + deg_{x^{p^2}} g).
Poly delta_geometric(const Poly& g);

/// Closed-form inverse of theta: with g = sum mu_i x^{pi},
///   lambda_i     = F^{-1}(mu_i) + F^{-1} pi_i F^{-1} S        (i < p-1)
///   lambda_{p-1} = sum_{i<p-1} x^{pi} pi_i F^{-1} S + x^{p(p-1)} (S - mu_{p-1})
/// where S = delta_geometric(mu_{p-1}), and f = sum lambda_i x^i.
/// Only available over perfect fields (FieldElement coefficients).
Poly theta_inverse(const Poly& g);

/// Solves theta(f) = g from the top degree down: the leading term of f is
/// the p-th root of the leading term of g.
Poly theta_inverse_oracle(const Poly& g);

}  // namespace weylres
