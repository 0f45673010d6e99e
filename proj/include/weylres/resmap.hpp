#pragma once

#include <array>
#include <cstdint>

#include "weylres/autgrp.hpp"
#include "weylres/parallel.hpp"

namespace weylres {

/// Restriction of an automorphism of A_1 to the centre Z.
struct ResResult {
  CenterAut image;
  FieldElement jacobian_value;
  std::int64_t degree_in;
  std::int64_t degree_out;
};

/// sigma -> sigma|_Z, computed by raising sigma(x), sigma(d) to the p-th
/// power by brute force and reading off centre coordinates. Checks that the
/// result has Jacobian 1 and the same degree as sigma; a failure there (or a
/// non-central power) raises an error, since it cannot happen for a genuine
/// automorphism.
ResResult res(const WeylAut& sigma, Execution ex = Execution::automatic);

/// Closed-form restriction of the affine automorphism sigma_{A,a}, det A = 1:
/// entrywise p-th powers for p > 2; for p = 2 squares with translation
/// (e^2 + ab, f^2 + cd).
CenterAut res_affine(const Affine& a);

/// Image of the A_1 word that restricts to the given centre word:
/// t_nu -> t_{nu^{1/p}}, phi_f -> phi_{theta^{-1}(f(x^p))}, s -> s.
AutWord res_inverse_word(const AutWord& center_word);

/// Inverse of res on Gamma, through the tame decomposition of g.
/// Throws not_in_gamma_error when J(g) != 1.
WeylAut res_inverse(const CenterAut& g);

/// Affine automorphism x -> A x + a of A_2 with generators ordered
/// (x1, x2, d1, d2), or of Z_2 with (X1, X2, Y1, Y2). A is row-major.
struct Affine4 {
  std::array<FieldElement, 16> m;
  std::array<FieldElement, 4> v;
  const FieldElement& at(int r, int c) const { return m[static_cast<std::size_t>(r * 4 + c)]; }
  friend bool operator==(const Affine4&, const Affine4&) = default;
};

/// A^t J A = J for J = [[0, I], [-I, 0]].
bool is_symplectic(const std::array<FieldElement, 16>& m);

/// Closed-form restriction for A_2: entrywise p-th powers for p > 2; for
/// p = 2 squares with translation a_i^2 + sum_j a_{ij} a_{i,2+j}.
/// Throws precondition_error for a non-symplectic matrix.
Affine4 res_n_affine(const Affine4& a);

/// The same restriction by brute force: p-th powers of the four images in
/// A_2, read back as an affine map of Z_2.
Affine4 res_n_affine_brute_force(const Affine4& a);

}  // namespace weylres
