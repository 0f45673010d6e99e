#include "weylres/theta.hpp"

#include <string>

namespace weylres {

namespace {

std::uint64_t prime_of(const Poly& g) { return static_cast<std::uint64_t>(g.field().p()); }

void require_support(const Poly& g, std::uint64_t step, const char* ring) {
  if (!g.all_exponents_divisible_by(step))
    throw precondition_error("polynomial " + g.to_string() + " is not in " + ring);
}

}  // namespace

Poly inv_frobenius_poly(const Poly& g) {
  const auto p = prime_of(g);
  require_support(g, p, "K[x^p]");
  Poly r(g.field());
  for (const auto& [e, c] : g.terms()) r.add_term(e / p, c.inv_frobenius());
  return r;
}

Poly pi(std::uint64_t i, const Poly& g) {
  const auto p = prime_of(g);
  if (i >= p) throw precondition_error("projection index " + std::to_string(i) + " out of range [0, p)");
  require_support(g, p, "K[x^p]");
  Poly r(g.field());
  for (const auto& [e, c] : g.terms())
    if ((e / p) % p == i) r.add_term(e - p * i, c);
  return r;
}

Poly delta(const Poly& g) {
  const auto p = prime_of(g);
  const auto p2 = p * p;
  require_support(g, p2, "K[x^{p^2}]");
  Poly r(g.field());
  for (const auto& [e, c] : g.terms()) {
    const std::uint64_t i = e / p2;
    if (i + 1 < p || (i + 1 - p) % p != 0) continue;
    r.add_term(p2 * ((i + 1 - p) / p), c.inv_frobenius());
  }
  return r;
}

Poly delta_power(const Poly& g, unsigned n) {
  Poly r = g;
  for (unsigned j = 0; j < n; ++j) r = delta(r);
  return r;
}

Poly delta_geometric(const Poly& g) {
  const auto p = prime_of(g);
  require_support(g, p * p, "K[x^{p^2}]");
  Poly sum(g.field());
  if (g.is_zero()) return sum;
  // 1 + floor(log_p(1 + D)) with D the degree in x^{p^2}.
  const std::uint64_t top = static_cast<std::uint64_t>(g.degree()) / (p * p) + 1;
  std::uint64_t bound = 1;
  for (std::uint64_t pw = p; pw <= top; pw *= p) ++bound;

  std::uint64_t nonzero = 0;
  for (Poly term = g; !term.is_zero(); term = delta(term)) {
    sum += term;
    ++nonzero;
  }
  if (nonzero > bound)
    throw std::logic_error("Delta iteration exceeded its nilpotency bound on " + g.to_string());
  return sum;
}

Poly theta_inverse(const Poly& g) {
  const auto p = prime_of(g);
  require_support(g, p, "K[x^p]");
  const auto& field = g.field();

  std::vector<Poly> mu;
  mu.reserve(p);
  for (std::uint64_t i = 0; i < p; ++i) mu.push_back(pi(i, g));

  const Poly geometric = delta_geometric(mu[p - 1]);  // sum_{j>=0} Delta^j(mu_{p-1})
  const Poly root = inv_frobenius_poly(geometric);    // F^{-1} of it, in K[x^p]

  Poly f(field);
  Poly last(field);  // lambda_{p-1}
  for (std::uint64_t i = 0; i + 1 < p; ++i) {
    const Poly component = pi(i, root);
    const Poly lambda = inv_frobenius_poly(mu[i]) + inv_frobenius_poly(component);
    f += lambda * Poly::monomial(FieldElement::one(field), i);
    last += Poly::monomial(FieldElement::one(field), p * i) * component;
  }
  last += Poly::monomial(FieldElement::one(field), p * (p - 1)) * (geometric - mu[p - 1]);
  f += last * Poly::monomial(FieldElement::one(field), p - 1);
  return f;
}

Poly theta_inverse_oracle(const Poly& g) {
  const auto p = prime_of(g);
  require_support(g, p, "K[x^p]");
  Poly f(g.field());
  Poly rest = g;
  while (!rest.is_zero()) {
    const auto [deg, lead] = leading_term(rest);
    const Poly term = Poly::monomial(lead.inv_frobenius(), deg / p);
    f += term;
    rest -= theta(term);
  }
  return f;
}

}  // namespace weylres
