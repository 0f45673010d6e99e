#pragma once

#include <cstddef>
#include <string_view>

#include "weylres/autgrp.hpp"

namespace weylres {

// Text grammar shared by every reader:
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := '-' factor | atom ['^' uint]
//   atom   := uint | symbol | '(' expr ')'
// Which symbols are allowed depends on the reader. `offset` shifts the
// positions reported in parse_error, for text embedded in a larger input.

using RingPoly = UniPoly<UniPoly<FieldElement>>;

/// "p=<int>[,n=<int>][,mod=<poly in g>]". With n > 1 and no modulus the
/// default irreducible is used; a modulus alone fixes n by its degree.
const FieldSpec& parse_field(std::string_view text);

/// Integers and g.
FieldElement parse_scalar(const FieldSpec& f, std::string_view text, std::size_t offset = 0);
/// K[x]; `var` renames the variable (phi payloads on Z use X).
Poly parse_x_poly(const FieldSpec& f, std::string_view text, std::string_view var = "x", std::size_t offset = 0);
/// K[X, Y].
ZPoly parse_z_poly(const FieldSpec& f, std::string_view text, std::size_t offset = 0);
/// K[x1, x2], commuting.
BiPoly<FieldElement> parse_x12_poly(const FieldSpec& f, std::string_view text, std::size_t offset = 0);
/// F_p[t][x]; `f` must be a prime field.
RingPoly parse_ring_poly(const FieldSpec& f, std::string_view text, std::size_t offset = 0);
/// A_1 (x, d) or A_2 (x1, x2, d1, d2), normal-ordered on input.
Weyl parse_weyl(const FieldSpec& f, std::string_view text, int n = 1, std::size_t offset = 0);

/// Whitespace-separated generators: s, t[c], gamma[c], phi[f],
/// aff[a,b,c,d,e,f], or the single word "id". phi payloads are in X for
/// the centre and in x for A_1.
AutWord parse_word(Target target, const FieldSpec& f, std::string_view text);
/// "(imgX ; imgY)".
CenterAut parse_center_aut(const FieldSpec& f, std::string_view text);
/// "(imgx ; imgd)".
WeylAut parse_weyl_aut(const FieldSpec& f, std::string_view text);

/// A word or an image pair, realized on Z.
CenterAut parse_center_input(const FieldSpec& f, std::string_view text);
/// A word or an image pair, realized on A_1.
WeylAut parse_weyl_input(const FieldSpec& f, std::string_view text);

/// Renders F_p[t][x] as parse_ring_poly reads it.
std::string ring_poly_text(const RingPoly& f);

}  // namespace weylres
