#pragma once

#include <array>
#include <cstdint>
#include <random>

#include "weylres/autgrp.hpp"
#include "weylres/gfq.hpp"
#include "weylres/poly.hpp"

namespace weylres {

/// The single generator used by every randomized suite. Draws go through
/// `below` instead of <random> distributions so that a seed reproduces the
/// same inputs on every standard library.
using Rng = std::mt19937_64;

inline std::uint64_t below(Rng& rng, std::uint64_t bound) { return bound == 0 ? 0 : rng() % bound; }

FieldElement random_element(const FieldSpec& f, Rng& rng);
FieldElement random_nonzero(const FieldSpec& f, Rng& rng);

/// Degree drawn uniformly from [0, max_degree], nonzero leading coefficient.
UniPoly<FieldElement> random_poly(const FieldSpec& f, std::uint64_t max_degree, Rng& rng);
/// Like random_poly, but only exponents divisible by `step` (so the result
/// lies in K[x^step]); max_degree bounds the actual x-degree.
UniPoly<FieldElement> random_poly_in(const FieldSpec& f, std::uint64_t step, std::uint64_t max_degree, Rng& rng);
/// Element of F_p[t] with deg_t <= max_t_degree; may be zero.
UniPoly<FieldElement> random_t_poly(const FieldSpec& prime, std::uint64_t max_t_degree, Rng& rng);
/// Polynomial in x over F_p[t]; nonzero leading coefficient.
UniPoly<UniPoly<FieldElement>> random_ring_poly(const FieldSpec& prime, std::uint64_t max_degree,
                                                std::uint64_t max_t_degree, Rng& rng);
/// Total degree <= max_degree.
BiPoly<FieldElement> random_bipoly(const FieldSpec& f, std::uint32_t max_degree, Rng& rng);

/// Random element of SL_2(K) (row-major a, b, c, d).
std::array<FieldElement, 4> random_sl2(const FieldSpec& f, Rng& rng);
Affine random_sl2_affine(const FieldSpec& f, Rng& rng);

/// Random word of 1..max_length generators over {s, t, phi, affine} for a
/// Weyl-algebra target, or {s, t, phi} for the centre; phi payloads have
/// degree <= max_phi_degree.
AutWord random_word(Target target, const FieldSpec& f, std::size_t max_length, std::uint64_t max_phi_degree,
                    Rng& rng);

/// Random symplectic 4x4 matrix (row-major), as a product of block
/// generators diag(A, A^{-T}), [[I,B],[0,I]], [[I,0],[B,I]] with B symmetric,
/// and the standard form J.
std::array<FieldElement, 16> random_symplectic4(const FieldSpec& f, Rng& rng);

}  // namespace weylres
