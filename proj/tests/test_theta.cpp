#include <gtest/gtest.h>

#include "oracles.hpp"
#include "weylres/parse.hpp"
#include "weylres/random.hpp"

using namespace weylres;

namespace {

Poly px(const FieldSpec& f, const char* text) { return parse_x_poly(f, text); }

// theta_inverse exists only where p-th roots do.
template <class P>
concept HasThetaInverse = requires(const P& g) { theta_inverse(g); };
static_assert(HasThetaInverse<Poly>);
static_assert(!HasThetaInverse<RingPoly>);

}  // namespace

TEST(Theta, Examples) {
  const auto& f2 = FieldSpec::prime(2);
  const auto& f3 = FieldSpec::prime(3);
  EXPECT_EQ(theta(px(f2, "x")), px(f2, "x^2+1"));
  EXPECT_EQ(theta(px(f3, "x")), px(f3, "x^3"));
  EXPECT_EQ(theta(px(f3, "1")), px(f3, "1"));
}

TEST(Theta, DefinedOverRingOfPolynomialsInT) {
  const auto& f2 = FieldSpec::prime(2);
  EXPECT_EQ(theta(parse_ring_poly(f2, "t*x")), parse_ring_poly(f2, "t^2*x^2+t"));
}

TEST(Pi, Examples) {
  const auto& f2 = FieldSpec::prime(2);
  EXPECT_EQ(pi(0, px(f2, "x^4+x^2")), px(f2, "x^4"));
  EXPECT_EQ(pi(1, px(f2, "x^4+x^2")), px(f2, "1"));
  const auto& f3 = FieldSpec::prime(3);
  const Poly g = px(f3, "x^9+2*x^3");
  EXPECT_EQ(pi(0, g), px(f3, "x^9"));
  EXPECT_EQ(pi(1, g), px(f3, "2"));
  EXPECT_TRUE(pi(2, g).is_zero());
  for (std::uint64_t i = 0; i < 3; ++i) EXPECT_TRUE(pi(i, Poly(f3)).is_zero());
}

TEST(Pi, Preconditions) {
  const auto& f3 = FieldSpec::prime(3);
  EXPECT_THROW(pi(3, px(f3, "x^3")), precondition_error);
  EXPECT_THROW(pi(0, px(f3, "x^2")), precondition_error);
}

TEST(Pi, AgreesWithOperatorFormula) {
  Rng rng(51);
  for (int p : {2, 3, 5}) {
    const auto P = static_cast<std::uint64_t>(p);
    for (const FieldSpec* f : {&FieldSpec::prime(p), &FieldSpec::extension(p, 2)})
      for (int trial = 0; trial < 20; ++trial) {
        const Poly g = random_poly_in(*f, P, 3 * P * P * P, rng);
        for (std::uint64_t i = 0; i < P; ++i) EXPECT_EQ(pi(i, g), oracle::pi_operator(i, g)) << g.to_string();
      }
  }
}

TEST(Delta, Examples) {
  const auto& f2 = FieldSpec::prime(2);
  EXPECT_EQ(delta(px(f2, "x^4")), px(f2, "1"));
  EXPECT_EQ(delta(px(f2, "x^12")), px(f2, "x^4"));
  const auto& f3 = FieldSpec::prime(3);
  EXPECT_TRUE(delta(px(f3, "2")).is_zero());
  EXPECT_THROW(delta(px(f2, "x^2")), precondition_error);
}

TEST(Delta, IteratesMatchClosedForm) {
  Rng rng(53);
  for (int p : {2, 3, 5}) {
    const auto P = static_cast<std::uint64_t>(p);
    for (const FieldSpec* f : {&FieldSpec::prime(p), &FieldSpec::extension(p, 2)})
      for (int trial = 0; trial < 20; ++trial) {
        const Poly g = random_poly_in(*f, P * P, P * P * 4 * P * P * P, rng);
        for (unsigned n = 1; n <= 3; ++n) EXPECT_EQ(delta_power(g, n), oracle::delta_closed_form(g, n));
      }
  }
}

TEST(DeltaGeometric, Examples) {
  const auto& f2 = FieldSpec::prime(2);
  EXPECT_EQ(delta_geometric(px(f2, "x^4")), px(f2, "x^4+1"));
  EXPECT_EQ(delta_geometric(px(f2, "1")), px(f2, "1"));
  EXPECT_TRUE(delta_geometric(Poly(f2)).is_zero());
}

TEST(ThetaInverse, Examples) {
  const auto& f2 = FieldSpec::prime(2);
  const auto& f3 = FieldSpec::prime(3);
  const auto& f4 = FieldSpec::extension(2, 2);
  const FieldElement c = FieldElement::generator(f4);
  for (auto* inv : {&theta_inverse, &theta_inverse_oracle}) {
    EXPECT_EQ((*inv)(px(f2, "x^2")), px(f2, "x+1"));
    EXPECT_EQ((*inv)(Poly::constant(c.frobenius())), Poly::constant(c));
    EXPECT_EQ((*inv)(px(f3, "x^3")), px(f3, "x"));
    EXPECT_EQ((*inv)(px(f2, "x^4")), px(f2, "x^2"));
    EXPECT_TRUE((*inv)(Poly(f3)).is_zero());
    EXPECT_THROW((*inv)(px(f3, "x")), precondition_error);
  }
}

TEST(Theta, AdditiveAndFiltered) {
  Rng rng(57);
  for (int p : {2, 3, 5}) {
    const auto P = static_cast<std::uint64_t>(p);
    const auto& f = FieldSpec::extension(p, 2);
    for (int trial = 0; trial < 30; ++trial) {
      const Poly a = random_poly(f, 3 * P * P, rng);
      const Poly b = random_poly(f, 3 * P * P, rng);
      EXPECT_EQ(theta(a + b), theta(a) + theta(b));
      const Poly t = theta(a);
      EXPECT_TRUE(t.all_exponents_divisible_by(P));
      EXPECT_EQ(t.degree(), static_cast<std::int64_t>(P) * a.degree());
      EXPECT_EQ(leading_term(t).second, leading_term(a).second.frobenius());
    }
  }
}

TEST(ThetaInverse, RoundTripsAndOracle) {
  Rng rng(59);
  for (int p : {2, 3, 5}) {
    const auto P = static_cast<std::uint64_t>(p);
    for (const FieldSpec* f : {&FieldSpec::prime(p), &FieldSpec::extension(p, 2)})
      for (int trial = 0; trial < 30; ++trial) {
        const Poly a = random_poly(*f, 3 * P * P, rng);
        EXPECT_EQ(theta_inverse(theta(a)), a);
        const Poly g = random_poly_in(*f, P, 3 * P * P * P, rng);
        const Poly inv = theta_inverse(g);
        EXPECT_EQ(theta(inv), g);
        EXPECT_EQ(theta_inverse_oracle(g), inv);
      }
  }
}

TEST(InverseFrobenius, OnPolynomials) {
  const auto& f4 = FieldSpec::extension(2, 2);
  const Poly g = parse_x_poly(f4, "g*x^4+x^2");
  EXPECT_EQ(inv_frobenius_poly(g).frobenius(), g);
  EXPECT_THROW(inv_frobenius_poly(parse_x_poly(f4, "x")), precondition_error);
}
