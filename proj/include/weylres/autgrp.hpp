#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "weylres/gfq.hpp"
#include "weylres/poly.hpp"
#include "weylres/theta.hpp"
#include "weylres/weyl.hpp"

namespace weylres {

using ZPoly = BiPoly<FieldElement>;
using Weyl = WeylElement<FieldElement>;

/// Which algebra a word acts on: A_1 = K<x, d> or its centre Z = K[X, Y].
enum class Target { weyl, center };

// Generators. Images are given for the centre; on A_1 read x, d for X, Y.
/// s: X -> Y, Y -> -X.
struct GenS {
  friend bool operator==(const GenS&, const GenS&) = default;
};
/// t_mu: X -> mu X, Y -> mu^{-1} Y.
struct GenT {
  FieldElement mu;
  friend bool operator==(const GenT&, const GenT&) = default;
};
/// gamma_mu: X -> mu X, Y -> Y. Centre only.
struct GenGamma {
  FieldElement mu;
  friend bool operator==(const GenGamma&, const GenGamma&) = default;
};
/// phi_f: X -> X, Y -> Y + f(X).
struct GenPhi {
  Poly f;
  friend bool operator==(const GenPhi&, const GenPhi&) = default;
};
/// sigma_{A,a}: (X, Y)^t -> A (X, Y)^t + a, with A row-major.
struct Affine {
  std::array<FieldElement, 4> m;
  std::array<FieldElement, 2> v;
  FieldElement det() const { return m[0] * m[3] - m[1] * m[2]; }
  friend bool operator==(const Affine&, const Affine&) = default;
};

using Generator = std::variant<GenS, GenT, GenGamma, GenPhi, Affine>;

/// A product g_1 g_2 ... g_k of generators, acting as g_1 after g_2 after
/// ... g_k on elements: (sigma tau)(v) = sigma(tau(v)).
struct AutWord {
  Target target = Target::center;
  const FieldSpec* field = nullptr;
  std::vector<Generator> gens;
};

/// Automorphism of Z given by the images of X and Y.
struct CenterAut {
  ZPoly x;
  ZPoly y;
  const FieldSpec& field() const { return x.field(); }
  friend bool operator==(const CenterAut&, const CenterAut&) = default;
};

/// Automorphism of A_1 given by the images of x and d.
struct WeylAut {
  Weyl x;
  Weyl d;
  const FieldSpec& field() const { return x.field(); }
  friend bool operator==(const WeylAut&, const WeylAut&) = default;
};

CenterAut identity_center(const FieldSpec& f);
WeylAut identity_weyl(const FieldSpec& f);

/// Throws invalid_word_error for zero t/gamma payloads, singular affine
/// parts, gamma or non-SL_2 affine parts in A_1 words, and payloads from a
/// different field.
void validate(const AutWord& w);

CenterAut realize_center(const AutWord& w);
WeylAut realize_weyl(const AutWord& w);

/// a after b: X -> a(b(X)).
CenterAut compose(const CenterAut& a, const CenterAut& b);
WeylAut compose(const WeylAut& a, const WeylAut& b);

ZPoly apply(const CenterAut& a, const ZPoly& z);
Weyl apply(const WeylAut& a, const Weyl& z);

/// max of the total degrees of the two images.
std::int64_t degree(const CenterAut& a);
std::int64_t degree(const WeylAut& a);

ZPoly jacobian(const CenterAut& a);
bool in_gamma(const CenterAut& a);
/// [sigma(d), sigma(x)] = 1.
bool preserves_weyl_relation(const WeylAut& a);

/// Tame decomposition into gamma_mu t_nu phi_{f_1} s phi_{f_2} s ... with
/// gamma and t omitted when trivial. Throws not_automorphism_error when the
/// images define an endomorphism that is not invertible.
AutWord decompose(const CenterAut& a);

/// Moves every t and gamma to the front, merges neighbouring phi's, drops
/// phi_0 and rewrites s s as t_{-1}. Image-preserving.
AutWord normalize(const AutWord& w);

/// Generator-wise inverse: s^{-1} = t_{-1} s, phi_f^{-1} = phi_{-f},
/// t_mu^{-1} = t_{mu^{-1}}, gamma_mu^{-1} = gamma_{mu^{-1}}.
AutWord inverse_word(const AutWord& w);
CenterAut inverse(const CenterAut& a);

std::string to_string(const AutWord& w);
/// "(imgX ; imgY)".
std::string to_string(const CenterAut& a);
std::string to_string(const WeylAut& a);

}  // namespace weylres
