#include "weylres/fuzz.hpp"

#include <functional>
#include <stdexcept>

#include "weylres/parse.hpp"
#include "weylres/random.hpp"
#include "weylres/resmap.hpp"
#include "weylres/theta.hpp"
#include "weylres/weyl.hpp"

namespace weylres {

namespace {

template <class Case, class Check, class Text>
FuzzReport evaluate(const std::vector<Case>& cases, const Check& check, const Text& text, Execution ex) {
  const auto outcomes = run_batch(cases, check, ex);
  FuzzReport r;
  r.total = cases.size();
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (outcomes[i].ok) {
      ++r.passed;
    } else if (!r.first_failure) {
      r.first_failure = FuzzFailure{i, text(cases[i]), outcomes[i].error};
    }
  }
  return r;
}

template <class Case>
std::vector<Case> generate(std::size_t count, std::uint64_t seed, const std::function<Case(Rng&)>& make) {
  Rng rng(seed);
  std::vector<Case> cases;
  cases.reserve(count);
  for (std::size_t i = 0; i < count; ++i) cases.push_back(make(rng));
  return cases;
}

std::string list_text(const std::vector<FieldElement>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].to_string();
  return s + "]";
}

FuzzReport thm17(const FieldSpec& f, std::size_t count, std::uint64_t seed, Execution ex) {
  const auto p = static_cast<std::uint64_t>(f.p());
  const auto cases = generate<Poly>(count, seed, [&](Rng& rng) { return random_poly(f, 3 * p, rng); });
  return evaluate(
      cases, [](const Poly& g) { return verify_power_identity(g, Execution::serial); },
      [](const Poly& g) { return g.to_string(); }, ex);
}

FuzzReport thm17_ring(const FieldSpec& f, std::size_t count, std::uint64_t seed, Execution ex) {
  const FieldSpec& prime = FieldSpec::prime(f.p());
  const auto p = static_cast<std::uint64_t>(f.p());
  const auto cases = generate<RingPoly>(count, seed, [&](Rng& rng) { return random_ring_poly(prime, 3 * p, 3, rng); });
  return evaluate(
      cases, [](const RingPoly& g) { return verify_power_identity(g, Execution::serial); },
      [](const RingPoly& g) { return ring_poly_text(g); }, ex);
}

struct Cor22Case {
  BiPoly<FieldElement> f;
  int i;
};

FuzzReport cor22(const FieldSpec& f, std::size_t count, std::uint64_t seed, Execution ex) {
  const auto cases = generate<Cor22Case>(count, seed, [&](Rng& rng) {
    auto g = random_bipoly(f, 6, rng);
    const int i = 1 + static_cast<int>(below(rng, 2));
    return Cor22Case{std::move(g), i};
  });
  return evaluate(
      cases, [](const Cor22Case& c) { return verify_power_identity_a2(c.f, c.i); },
      [](const Cor22Case& c) { return "i=" + std::to_string(c.i) + " f=" + c.f.to_string("x1", "x2"); }, ex);
}

FuzzReport theta_rt(const FieldSpec& f, std::size_t count, std::uint64_t seed, Execution ex) {
  const auto p = static_cast<std::uint64_t>(f.p());
  const auto cases = generate<Poly>(count, seed, [&](Rng& rng) { return random_poly(f, 3 * p * p, rng); });
  return evaluate(
      cases,
      [](const Poly& g) {
        const Poly image = theta(g);
        const Poly back = theta_inverse(image);
        const auto [dg, cg] = leading_term(g);
        const auto [di, ci] = leading_term(image);
        return back == g && theta_inverse_oracle(image) == back &&
               di == dg * static_cast<std::int64_t>(g.field().p()) && ci == cg.frobenius();
      },
      [](const Poly& g) { return g.to_string(); }, ex);
}

FuzzReport res_rt(const FieldSpec& f, std::size_t count, std::uint64_t seed, Execution ex) {
  const auto cases = generate<AutWord>(count, seed, [&](Rng& rng) { return random_word(Target::weyl, f, 6, 4, rng); });
  return evaluate(
      cases,
      [](const AutWord& w) {
        const WeylAut sigma = realize_weyl(w);
        const ResResult r = res(sigma, Execution::serial);
        if (!r.jacobian_value.is_one() || r.degree_in != r.degree_out || !in_gamma(r.image)) return false;
        const WeylAut back = res_inverse(r.image);
        return back == sigma && res(back, Execution::serial).image == r.image;
      },
      [](const AutWord& w) { return to_string(w); }, ex);
}

FuzzReport res2_affine(const FieldSpec& f, std::size_t count, std::uint64_t seed, Execution ex) {
  const auto cases = generate<Affine>(count, seed, [&](Rng& rng) { return random_sl2_affine(f, rng); });
  return evaluate(
      cases,
      [&](const Affine& a) {
        const WeylAut sigma = realize_weyl(AutWord{Target::weyl, &f, {a}});
        return res_affine(a) == res(sigma, Execution::serial).image;
      },
      [&](const Affine& a) { return to_string(AutWord{Target::weyl, &f, {a}}); }, ex);
}

FuzzReport resn_affine(const FieldSpec& f, std::size_t count, std::uint64_t seed, Execution ex) {
  const auto cases = generate<Affine4>(count, seed, [&](Rng& rng) {
    const auto m = random_symplectic4(f, rng);
    return Affine4{m, {random_element(f, rng), random_element(f, rng), random_element(f, rng), random_element(f, rng)}};
  });
  return evaluate(
      cases, [](const Affine4& a) { return res_n_affine(a) == res_n_affine_brute_force(a); },
      [](const Affine4& a) {
        return "A=" + list_text({a.m.begin(), a.m.end()}) + " a=" + list_text({a.v.begin(), a.v.end()});
      },
      ex);
}

struct RelationCase {
  FieldElement mu;
  FieldElement lambda;
  std::uint64_t i;
};

FuzzReport relations(const FieldSpec& f, std::size_t count, std::uint64_t seed, Execution ex) {
  const auto cases = generate<RelationCase>(count, seed, [&](Rng& rng) {
    const FieldElement mu = random_nonzero(f, rng);
    const FieldElement lambda = random_nonzero(f, rng);
    return RelationCase{mu, lambda, below(rng, 5)};
  });
  return evaluate(
      cases,
      [&](const RelationCase& c) {
        auto word = [&](std::vector<Generator> gens) { return realize_center(AutWord{Target::center, &f, gens}); };
        auto phi = [&](const FieldElement& coef) { return GenPhi{Poly::monomial(coef, c.i)}; };
        const FieldElement mu_inv = c.mu.inverse();
        const bool r1 = word({GenS{}, GenT{c.mu}}) == word({GenT{mu_inv}, GenS{}});
        const bool r2 = word({GenS{}, GenGamma{c.mu}}) == word({GenGamma{c.mu}, GenT{mu_inv}, GenS{}});
        const bool r3 = word({phi(c.lambda), GenT{c.mu}}) == word({GenT{c.mu}, phi(c.lambda * mu_inv.pow(c.i + 1))});
        const bool r4 = word({phi(c.lambda), GenGamma{c.mu}}) == word({GenGamma{c.mu}, phi(c.lambda * mu_inv.pow(c.i))});
        const bool r5 = word({GenS{}, GenS{}}) == word({GenT{-FieldElement::one(f)}});
        return r1 && r2 && r3 && r4 && r5;
      },
      [](const RelationCase& c) {
        return "mu=" + c.mu.to_string() + " lambda=" + c.lambda.to_string() + " i=" + std::to_string(c.i);
      },
      ex);
}

}  // namespace

std::string FuzzReport::summary() const {
  std::string s = std::to_string(passed) + "/" + std::to_string(total) + " OK";
  if (first_failure) {
    s += "\nfirst failure (case " + std::to_string(first_failure->index) + "): " + first_failure->input;
    if (!first_failure->reason.empty()) s += "\nreason: " + first_failure->reason;
  }
  return s;
}

const std::vector<std::string>& fuzz_suites() {
  static const std::vector<std::string> names{"thm17",       "thm17-ring",  "cor22",      "theta-rt",
                                              "res-rt",      "res2-affine", "resn-affine", "relations"};
  return names;
}

FuzzReport run_fuzz(std::string_view suite, const FieldSpec& f, std::size_t count, std::uint64_t seed, Execution ex) {
  if (suite == "thm17") return thm17(f, count, seed, ex);
  if (suite == "thm17-ring") return thm17_ring(f, count, seed, ex);
  if (suite == "cor22") return cor22(f, count, seed, ex);
  if (suite == "theta-rt") return theta_rt(f, count, seed, ex);
  if (suite == "res-rt") return res_rt(f, count, seed, ex);
  if (suite == "res2-affine") return res2_affine(f, count, seed, ex);
  if (suite == "resn-affine") return resn_affine(f, count, seed, ex);
  if (suite == "relations") return relations(f, count, seed, ex);
  throw precondition_error("unknown fuzz suite '" + std::string(suite) + "'");
}

}  // namespace weylres
