#include <gtest/gtest.h>

#include "oracles.hpp"
#include "weylres/autgrp.hpp"
#include "weylres/parse.hpp"
#include "weylres/random.hpp"

using namespace weylres;

namespace {

Poly px(const FieldSpec& f, const char* text) { return parse_x_poly(f, text); }
ZPoly pz(const FieldSpec& f, const char* text) { return parse_z_poly(f, text); }

}  // namespace

TEST(Binomial, LucasMatchesPascal) {
  for (int p : {2, 3, 5, 7, 13})
    for (unsigned m = 0; m < 60; ++m)
      for (unsigned k = 0; k <= m + 1; ++k)
        ASSERT_EQ(binomial_mod(m, k, p), oracle::pascal_binomial(m, k, p)) << p << " " << m << " " << k;
}

TEST(Binomial, FallingFactorialMatchesProduct) {
  for (int p : {2, 3, 5, 7})
    for (std::uint64_t i = 0; i < 30; ++i)
      for (std::uint64_t k = 0; k <= 6; ++k) {
        long long v = 1;
        for (std::uint64_t j = 0; j < k; ++j) v = v * static_cast<long long>(i >= j ? i - j : 0) % p;
        if (k > i) v = 0;
        EXPECT_EQ(falling_factorial_mod(i, k, p), v);
      }
}

TEST(BiPoly, SubstituteExamples) {
  const auto& f = FieldSpec::prime(5);
  EXPECT_EQ(pz(f, "X+Y").substitute(pz(f, "Y"), pz(f, "-X")), pz(f, "Y-X"));
  EXPECT_EQ(pz(f, "X*Y").substitute(pz(f, "X"), pz(f, "Y+X^2")), pz(f, "X*Y+X^3"));
  EXPECT_EQ(pz(f, "X*Y").substitute(pz(f, "X"), pz(f, "Y+X^2")).to_string(), "X*Y+X^3");
}

TEST(UniPoly, FreshmansDream) {
  const auto& f2 = FieldSpec::prime(2);
  EXPECT_EQ(px(f2, "(x+1)^2"), px(f2, "x^2+1"));
  EXPECT_EQ(px(f2, "(x+1)^2").to_string(), "x^2+1");
}

TEST(UniPoly, DerivativeExamples) {
  EXPECT_EQ(derivative(px(FieldSpec::prime(3), "x^2"), 2), px(FieldSpec::prime(3), "2"));
  EXPECT_EQ(derivative(px(FieldSpec::prime(2), "x"), 1), px(FieldSpec::prime(2), "1"));
  EXPECT_EQ(derivative(px(FieldSpec::prime(5), "x^4"), 4), px(FieldSpec::prime(5), "4"));
}

TEST(UniPoly, DividedPowerExamples) {
  const auto& f2 = FieldSpec::prime(2);
  EXPECT_EQ(divided_power(px(f2, "x^2"), 2), px(f2, "1"));
  EXPECT_EQ(divided_power(px(f2, "x^3"), 2), px(f2, "x"));
  EXPECT_EQ(divided_power(px(FieldSpec::prime(3), "x^3"), 3), px(FieldSpec::prime(3), "1"));
}

TEST(UniPoly, DerivativeIsFactorialTimesDividedPower) {
  Rng rng(3);
  for (int p : {2, 3, 5, 7}) {
    const auto& f = FieldSpec::prime(p);
    for (int trial = 0; trial < 30; ++trial) {
      const Poly g = random_poly(f, 40, rng);
      for (std::uint64_t k = 0; k < static_cast<std::uint64_t>(p); ++k) {
        long long fact = 1;
        for (std::uint64_t j = 2; j <= k; ++j) fact *= static_cast<long long>(j);
        EXPECT_EQ(derivative(g, k), fp(f, fact) * divided_power(g, k));
      }
    }
  }
}

TEST(UniPoly, PDecomposeExamples) {
  const auto& f2 = FieldSpec::prime(2);
  auto parts = p_decompose(px(f2, "x^3+x^2"));
  EXPECT_EQ(parts[0], px(f2, "x"));
  EXPECT_EQ(parts[1], px(f2, "x"));
  parts = p_decompose(px(f2, "x^4+x"));
  EXPECT_EQ(parts[0], px(f2, "x^2"));
  EXPECT_EQ(parts[1], px(f2, "1"));
  const auto& f3 = FieldSpec::prime(3);
  parts = p_decompose(px(f3, "1"));
  EXPECT_EQ(parts[0], px(f3, "1"));
  EXPECT_TRUE(parts[1].is_zero());
  EXPECT_TRUE(parts[2].is_zero());
}

TEST(UniPoly, PDecomposeRoundTrip) {
  Rng rng(8);
  for (int p : {2, 3, 5}) {
    const auto& f = FieldSpec::extension(p, 2);
    for (int trial = 0; trial < 50; ++trial) {
      const Poly g = random_poly(f, 60, rng);
      EXPECT_EQ(p_recompose(p_decompose(g), f), g);
    }
  }
}

TEST(UniPoly, LeadingTerm) {
  const auto& f2 = FieldSpec::prime(2);
  EXPECT_EQ(leading_term(px(f2, "x^2+x")), std::make_pair(std::uint64_t{2}, fp(f2, 1)));
  const auto& f5 = FieldSpec::prime(5);
  EXPECT_EQ(leading_term(px(f5, "3*x^5")), std::make_pair(std::uint64_t{5}, fp(f5, 3)));
  EXPECT_THROW(leading_term(Poly(f5)), precondition_error);
  EXPECT_EQ(Poly(f5).degree(), neg_inf_degree);
}

TEST(UniPoly, LeadingTermIsMultiplicative) {
  Rng rng(4);
  const auto& f = FieldSpec::extension(3, 2);
  for (int trial = 0; trial < 50; ++trial) {
    const Poly a = random_poly(f, 10, rng);
    const Poly b = random_poly(f, 10, rng);
    const auto [da, ca] = leading_term(a);
    const auto [db, cb] = leading_term(b);
    const auto [dp, cp] = leading_term(a * b);
    EXPECT_EQ(dp, da + db);
    EXPECT_EQ(cp, ca * cb);
  }
}

TEST(UniPoly, ComposeStretchShrink) {
  const auto& f3 = FieldSpec::prime(3);
  EXPECT_EQ(px(f3, "x^2+1").compose(px(f3, "x+1")), px(f3, "x^2+2*x+2"));
  EXPECT_EQ(px(f3, "x^2+1").stretch(3), px(f3, "x^6+1"));
  EXPECT_EQ(px(f3, "x^6+1").shrink(3), px(f3, "x^2+1"));
  EXPECT_THROW(px(f3, "x^2").shrink(3), precondition_error);
}

TEST(UniPoly, OverRingOfPolynomialsInT) {
  const auto& f2 = FieldSpec::prime(2);
  const RingPoly a = parse_ring_poly(f2, "t*x+1");
  EXPECT_EQ(a * a, parse_ring_poly(f2, "t^2*x^2+1"));
  EXPECT_EQ(ring_poly_text(parse_ring_poly(f2, "(t+1)*x^2+t")), "(t+1)*x^2+t");
}

TEST(Jacobian, Examples) {
  const auto& f = FieldSpec::prime(3);
  const ZPoly one = ZPoly::from_int(f, 1);
  EXPECT_EQ(jacobian(pz(f, "X"), pz(f, "Y")), one);
  EXPECT_EQ(jacobian(pz(f, "Y"), pz(f, "-X")), one);
  EXPECT_EQ(jacobian(pz(f, "X"), pz(f, "Y+X^2")), one);
  EXPECT_EQ(jacobian(pz(f, "X^2"), pz(f, "Y")), pz(f, "2*X"));
}

TEST(Jacobian, ChainRule) {
  Rng rng(21);
  for (int p : {2, 3, 5}) {
    const auto& f = FieldSpec::prime(p);
    for (int trial = 0; trial < 30; ++trial) {
      AutWord wa = random_word(Target::center, f, 4, 3, rng);
      AutWord wb = random_word(Target::center, f, 4, 3, rng);
      wa.gens.emplace_back(GenGamma{random_nonzero(f, rng)});
      const CenterAut a = realize_center(wa);
      const CenterAut b = realize_center(wb);
      EXPECT_EQ(jacobian(compose(a, b)), jacobian(a) * apply(a, jacobian(b)));
    }
  }
}

TEST(Printing, CanonicalOrder) {
  const auto& f = FieldSpec::prime(5);
  EXPECT_EQ(pz(f, "1+X+Y").to_string(), "Y+X+1");
  EXPECT_EQ(pz(f, "X^3+X*Y").to_string(), "X*Y+X^3");
  EXPECT_EQ(px(f, "1+x+x^2").to_string(), "x^2+x+1");
  EXPECT_EQ(px(f, "0").to_string(), "0");
  const auto& f9 = FieldSpec::extension(3, 2);
  EXPECT_EQ(px(f9, "(g+1)*x^2+g*x+2").to_string(), "(1+g)*x^2+g*x+2");
}

TEST(Poly, RingMismatchThrows) {
  EXPECT_THROW(px(FieldSpec::prime(2), "x") + px(FieldSpec::prime(3), "x"), mismatch_error);
  EXPECT_THROW(pz(FieldSpec::prime(2), "X") * pz(FieldSpec::prime(3), "X"), mismatch_error);
}
