#include <gtest/gtest.h>

#include "weylres/parse.hpp"
#include "weylres/random.hpp"

using namespace weylres;

namespace {

ZPoly pz(const FieldSpec& f, const char* text) { return parse_z_poly(f, text); }
CenterAut pair(const FieldSpec& f, const char* x, const char* y) { return {pz(f, x), pz(f, y)}; }
CenterAut word(const FieldSpec& f, std::vector<Generator> gens) {
  return realize_center(AutWord{Target::center, &f, std::move(gens)});
}

// Random element of Gamma as a word over s, t, phi.
AutWord gamma_word(const FieldSpec& f, Rng& rng) { return random_word(Target::center, f, 6, 4, rng); }

}  // namespace

TEST(Realize, Examples) {
  const auto& f = FieldSpec::prime(5);
  EXPECT_EQ(word(f, {GenS{}}), pair(f, "Y", "-X"));
  const Poly a = parse_x_poly(f, "X^2+1", "X");
  const Poly b = parse_x_poly(f, "3*X", "X");
  EXPECT_EQ(word(f, {GenPhi{a}, GenPhi{b}}), word(f, {GenPhi{a + b}}));
  EXPECT_EQ(word(f, {}), identity_center(f));
  EXPECT_EQ(word(f, {GenT{fp(f, 2)}}), pair(f, "2*X", "3*Y"));
  EXPECT_EQ(word(f, {GenGamma{fp(f, 2)}}), pair(f, "2*X", "Y"));
}

TEST(Compose, IdentityAndSquareOfS) {
  const auto& f = FieldSpec::prime(3);
  const CenterAut b = pair(f, "X+Y^2", "Y");
  EXPECT_EQ(compose(identity_center(f), b), b);
  EXPECT_EQ(compose(b, identity_center(f)), b);
  EXPECT_EQ(compose(word(f, {GenS{}}), word(f, {GenS{}})), pair(f, "-X", "-Y"));
}

TEST(Compose, AffineConventionMatchesMatrixProduct) {
  Rng rng(61);
  for (int p : {2, 3, 5}) {
    const auto& f = FieldSpec::prime(p);
    for (int trial = 0; trial < 20; ++trial) {
      const Affine A = random_sl2_affine(f, rng);
      const Affine B = random_sl2_affine(f, rng);
      // sigma_{A,a} sigma_{B,b} = sigma_{BA, Ba+b}
      Affine C = A;
      C.m = {B.m[0] * A.m[0] + B.m[1] * A.m[2], B.m[0] * A.m[1] + B.m[1] * A.m[3],
             B.m[2] * A.m[0] + B.m[3] * A.m[2], B.m[2] * A.m[1] + B.m[3] * A.m[3]};
      C.v = {B.m[0] * A.v[0] + B.m[1] * A.v[1] + B.v[0], B.m[2] * A.v[0] + B.m[3] * A.v[1] + B.v[1]};
      EXPECT_EQ(compose(word(f, {A}), word(f, {B})), word(f, {C}));
    }
  }
}

TEST(Compose, ConjugatingATranslation) {
  Rng rng(67);
  const auto& f = FieldSpec::prime(7);
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = random_sl2(f, rng);
    const Affine A{m, {fp(f, 0), fp(f, 0)}};
    const Affine T{{fp(f, 1), fp(f, 0), fp(f, 0), fp(f, 1)}, {random_element(f, rng), random_element(f, rng)}};
    // A^{-1} for det 1.
    const std::array<FieldElement, 4> inv{m[3], -m[1], -m[2], m[0]};
    const Affine Ainv{inv, {fp(f, 0), fp(f, 0)}};
    const Affine expected{{fp(f, 1), fp(f, 0), fp(f, 0), fp(f, 1)},
                          {inv[0] * T.v[0] + inv[1] * T.v[1], inv[2] * T.v[0] + inv[3] * T.v[1]}};
    EXPECT_EQ(compose(compose(word(f, {A}), word(f, {T})), word(f, {Ainv})), word(f, {expected}));
  }
}

TEST(Realize, IsHomomorphism) {
  Rng rng(71);
  for (int p : {2, 3}) {
    const auto& f = FieldSpec::prime(p);
    for (int trial = 0; trial < 30; ++trial) {
      const AutWord a = random_word(Target::center, f, 3, 3, rng);
      const AutWord b = random_word(Target::center, f, 3, 3, rng);
      AutWord ab = a;
      ab.gens.insert(ab.gens.end(), b.gens.begin(), b.gens.end());
      EXPECT_EQ(realize_center(ab), compose(realize_center(a), realize_center(b)));
      const AutWord wa = random_word(Target::weyl, f, 3, 2, rng);
      const AutWord wb = random_word(Target::weyl, f, 3, 2, rng);
      AutWord wab = wa;
      wab.gens.insert(wab.gens.end(), wb.gens.begin(), wb.gens.end());
      EXPECT_EQ(realize_weyl(wab), compose(realize_weyl(wa), realize_weyl(wb)));
    }
  }
}

TEST(Realize, WeylImagesKeepTheRelation) {
  Rng rng(73);
  for (int p : {2, 3, 5}) {
    const auto& f = FieldSpec::prime(p);
    for (int trial = 0; trial < 30; ++trial)
      EXPECT_TRUE(preserves_weyl_relation(realize_weyl(random_word(Target::weyl, f, 6, 4, rng))));
  }
}

TEST(Degree, Examples) {
  const auto& f = FieldSpec::prime(3);
  EXPECT_EQ(degree(identity_center(f)), 1);
  EXPECT_EQ(degree(pair(f, "X", "Y+X^2")), 2);
  Rng rng(79);
  for (int trial = 0; trial < 10; ++trial) EXPECT_EQ(degree(word(f, {random_sl2_affine(f, rng)})), 1);
}

TEST(InGamma, Examples) {
  const auto& f = FieldSpec::prime(5);
  EXPECT_TRUE(in_gamma(word(f, {GenS{}})));
  EXPECT_FALSE(in_gamma(word(f, {GenGamma{fp(f, 3)}})));
  EXPECT_EQ(jacobian(word(f, {GenGamma{fp(f, 3)}})), pz(f, "3"));
  EXPECT_TRUE(in_gamma(pair(f, "X", "Y+X^4+2")));
}

TEST(Apply, Examples) {
  const auto& f = FieldSpec::prime(5);
  const ZPoly z = pz(f, "X*Y+Y^2+3");
  EXPECT_EQ(apply(identity_center(f), z), z);
  EXPECT_EQ(apply(word(f, {GenS{}}), pz(f, "X*Y")), pz(f, "-X*Y"));
  EXPECT_EQ(apply(pair(f, "X", "Y+X^3"), pz(f, "X")), pz(f, "X"));
}

TEST(Relations, HoldOnImages) {
  Rng rng(83);
  for (const FieldSpec* f : {&FieldSpec::prime(3), &FieldSpec::prime(5), &FieldSpec::extension(2, 2)}) {
    for (int trial = 0; trial < 20; ++trial) {
      const FieldElement mu = random_nonzero(*f, rng);
      const FieldElement lambda = random_nonzero(*f, rng);
      const std::uint64_t i = below(rng, 5);
      const FieldElement mi = mu.inverse();
      auto phi = [&](const FieldElement& c) { return GenPhi{Poly::monomial(c, i)}; };
      EXPECT_EQ(word(*f, {GenS{}, GenT{mu}}), word(*f, {GenT{mi}, GenS{}}));
      EXPECT_EQ(word(*f, {GenS{}, GenGamma{mu}}), word(*f, {GenGamma{mu}, GenT{mi}, GenS{}}));
      EXPECT_EQ(word(*f, {phi(lambda), GenT{mu}}), word(*f, {GenT{mu}, phi(lambda * mi.pow(i + 1))}));
      EXPECT_EQ(word(*f, {phi(lambda), GenGamma{mu}}), word(*f, {GenGamma{mu}, phi(lambda * mi.pow(i))}));
      EXPECT_EQ(word(*f, {GenS{}, GenS{}}), word(*f, {GenT{-FieldElement::one(*f)}}));
      // s^{-1} = t_{-1} s: X -> -Y, Y -> X
      EXPECT_EQ(word(*f, {GenT{-FieldElement::one(*f)}, GenS{}}), (CenterAut{-ZPoly::var_y(*f), ZPoly::var_x(*f)}));
    }
  }
}

TEST(Decompose, Examples) {
  const auto& f = FieldSpec::prime(3);
  EXPECT_EQ(to_string(decompose(identity_center(f))), "id");
  EXPECT_EQ(to_string(decompose(pair(f, "X", "Y+X^2"))), "phi[X^2]");
}

TEST(Decompose, RoundTripOnRandomWords) {
  Rng rng(89);
  for (const FieldSpec* f : {&FieldSpec::prime(2), &FieldSpec::prime(3), &FieldSpec::prime(5),
                             &FieldSpec::extension(2, 2), &FieldSpec::extension(3, 2)}) {
    for (int trial = 0; trial < 40; ++trial) {
      AutWord w = gamma_word(*f, rng);
      if (trial % 2 == 1) {
        w.gens.insert(w.gens.begin(), GenGamma{random_nonzero(*f, rng)});
        w.gens.push_back(random_sl2_affine(*f, rng));
      }
      const CenterAut a = realize_center(w);
      const AutWord d = decompose(a);
      EXPECT_EQ(realize_center(d), a) << to_string(w);
      // Canonical shape: gamma and t only at the front, no s s.
      bool seen_other = false;
      bool gamma_present = false;
      for (std::size_t k = 0; k < d.gens.size(); ++k) {
        const auto& g = d.gens[k];
        const bool scalar = std::holds_alternative<GenT>(g) || std::holds_alternative<GenGamma>(g);
        if (scalar) EXPECT_FALSE(seen_other) << to_string(d);
        seen_other = seen_other || !scalar;
        gamma_present = gamma_present || std::holds_alternative<GenGamma>(g);
        EXPECT_FALSE(std::holds_alternative<Affine>(g));
        if (k > 0) EXPECT_FALSE(std::holds_alternative<GenS>(g) && std::holds_alternative<GenS>(d.gens[k - 1]));
      }
      EXPECT_EQ(gamma_present, !in_gamma(a)) << to_string(d);
    }
  }
}

TEST(Decompose, RejectsNonAutomorphisms) {
  const auto& f = FieldSpec::prime(3);
  const std::vector<CenterAut> bad{
      pair(f, "X^2", "Y"),         pair(f, "X", "Y^2"),         pair(f, "X+Y^2", "Y^2"),
      pair(f, "X^2+Y", "X^2"),     pair(f, "X*Y", "Y"),         pair(f, "X+Y", "X+Y"),
      pair(f, "X", "1"),           pair(f, "X^3", "Y+X"),       pair(f, "X+Y^3", "Y+X^2"),
      pair(f, "X+X^3", "Y"),
  };
  for (const auto& a : bad) EXPECT_THROW(decompose(a), not_automorphism_error) << to_string(a);
  // Constant Jacobian alone does not make an automorphism.
  EXPECT_TRUE(in_gamma(pair(f, "X+X^3", "Y")));
}

TEST(Inverse, WordAndImages) {
  Rng rng(97);
  for (int p : {2, 3, 5}) {
    const auto& f = FieldSpec::prime(p);
    for (int trial = 0; trial < 30; ++trial) {
      AutWord w = gamma_word(f, rng);
      w.gens.emplace_back(GenGamma{random_nonzero(f, rng)});
      const CenterAut a = realize_center(w);
      EXPECT_EQ(compose(a, realize_center(inverse_word(w))), identity_center(f));
      EXPECT_EQ(compose(inverse(a), a), identity_center(f));
    }
  }
}

TEST(Normalize, PreservesImages) {
  Rng rng(101);
  const auto& f = FieldSpec::prime(5);
  for (int trial = 0; trial < 30; ++trial) {
    AutWord w = gamma_word(f, rng);
    w.gens.emplace_back(GenGamma{random_nonzero(f, rng)});
    w.gens.emplace_back(GenS{});
    w.gens.emplace_back(GenS{});
    EXPECT_EQ(realize_center(normalize(w)), realize_center(w));
  }
}

TEST(Words, Validation) {
  const auto& f = FieldSpec::prime(3);
  EXPECT_THROW(realize_center(AutWord{Target::center, &f, {GenT{fp(f, 0)}}}), invalid_word_error);
  EXPECT_THROW(realize_weyl(AutWord{Target::weyl, &f, {GenGamma{fp(f, 2)}}}), invalid_word_error);
  const Affine singular{{fp(f, 1), fp(f, 1), fp(f, 1), fp(f, 1)}, {fp(f, 0), fp(f, 0)}};
  EXPECT_THROW(realize_center(AutWord{Target::center, &f, {singular}}), invalid_word_error);
  const Affine det2{{fp(f, 2), fp(f, 0), fp(f, 0), fp(f, 1)}, {fp(f, 0), fp(f, 0)}};
  EXPECT_NO_THROW(realize_center(AutWord{Target::center, &f, {det2}}));
  EXPECT_THROW(realize_weyl(AutWord{Target::weyl, &f, {det2}}), invalid_word_error);
  EXPECT_THROW(realize_center(AutWord{Target::center, &f, {GenT{fp(FieldSpec::prime(5), 1)}}}), invalid_word_error);
  EXPECT_THROW(compose(identity_center(f), identity_center(FieldSpec::prime(5))), mismatch_error);
}
