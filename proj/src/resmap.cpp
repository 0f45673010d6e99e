#include "weylres/resmap.hpp"

namespace weylres {

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

BiPoly<FieldElement> restrict_power(const Weyl& image, std::uint64_t p, Execution ex) {
  Weyl power = Weyl::from_int(image.field(), 1);
  // Repeated squaring keeps the operands balanced for the dense kernel.
  Weyl base = image;
  for (std::uint64_t k = p; k > 0; k >>= 1U) {
    if (k & 1U) power = Weyl::multiply(power, base, ex);
    if (k > 1) base = Weyl::multiply(base, base, ex);
  }
  if (!is_central(power)) throw non_central_error("p-th power of " + image.to_string() + " is not central");
  return to_center(power);
}

FieldElement sqrt_char2(const FieldElement& a) { return a.inv_frobenius(); }

}  // namespace

ResResult res(const WeylAut& sigma, Execution ex) {
  const FieldSpec& f = sigma.field();
  if (!preserves_weyl_relation(sigma))
    throw precondition_error("images do not satisfy [d, x] = 1: " + to_string(sigma));
  const auto p = static_cast<std::uint64_t>(f.p());
  CenterAut image{restrict_power(sigma.x, p, ex), restrict_power(sigma.d, p, ex)};
  const ZPoly jac = jacobian(image);
  if (!jac.is_constant() || !jac.constant_term().is_one())
    throw precondition_error("restriction has Jacobian " + jac.to_string() + ", input is not an automorphism");
  ResResult r{std::move(image), jac.constant_term(), degree(sigma), 0};
  r.degree_out = degree(r.image);
  if (r.degree_in != r.degree_out)
    throw precondition_error("restriction changed the degree, input is not an automorphism");
  return r;
}

CenterAut res_affine(const Affine& a) {
  const FieldSpec& f = a.m[0].field();
  if (!a.det().is_one()) throw precondition_error("affine automorphism of A_1 needs det = 1");
  Affine r = a;
  for (auto& c : r.m) c = c.frobenius();
  if (f.p() == 2) {
    r.v[0] = a.v[0] * a.v[0] + a.m[0] * a.m[1];
    r.v[1] = a.v[1] * a.v[1] + a.m[2] * a.m[3];
  } else {
    for (auto& c : r.v) c = c.frobenius();
  }
  return realize_center(AutWord{Target::center, &f, {r}});
}

AutWord res_inverse_word(const AutWord& center_word) {
  validate(center_word);
  if (center_word.target != Target::center) throw mismatch_error("res_inverse_word expects a centre word");
  const FieldSpec& f = *center_word.field;
  const auto p = static_cast<std::uint64_t>(f.p());
  AutWord out{Target::weyl, &f, {}};
  for (const auto& g : center_word.gens) {
    out.gens.push_back(std::visit(
        overloaded{
            [](const GenS&) -> Generator { return GenS{}; },
            [](const GenT& t) -> Generator { return GenT{t.mu.inv_frobenius()}; },
            [](const GenGamma&) -> Generator {
              throw not_in_gamma_error("gamma factor has no preimage under res");
            },
            [&](const GenPhi& phi) -> Generator { return GenPhi{theta_inverse(phi.f.stretch(p))}; },
            [&](const Affine& a) -> Generator {
              if (!a.det().is_one()) throw not_in_gamma_error("affine factor with det != 1 is not in Gamma");
              Affine r = a;
              for (auto& c : r.m) c = c.inv_frobenius();
              if (p == 2) {
                r.v[0] = sqrt_char2(a.v[0] - r.m[0] * r.m[1]);
                r.v[1] = sqrt_char2(a.v[1] - r.m[2] * r.m[3]);
              } else {
                for (auto& c : r.v) c = c.inv_frobenius();
              }
              return r;
            },
        },
        g));
  }
  return out;
}

WeylAut res_inverse(const CenterAut& g) {
  if (!in_gamma(g)) throw not_in_gamma_error("Jacobian is " + jacobian(g).to_string() + ", not 1");
  return realize_weyl(res_inverse_word(decompose(g)));
}

bool is_symplectic(const std::array<FieldElement, 16>& m) {
  const FieldSpec& f = m[0].field();
  auto J = [&](int r, int c) {
    if (c == r + 2) return FieldElement::one(f);
    if (r == c + 2) return -FieldElement::one(f);
    return FieldElement::zero(f);
  };
  // (A^t J A)_{rc} = sum_{k,l} A_{kr} J_{kl} A_{lc}
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      FieldElement s = FieldElement::zero(f);
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) s += m[k * 4 + r] * J(k, l) * m[l * 4 + c];
      if (!(s == J(r, c))) return false;
    }
  return true;
}

Affine4 res_n_affine(const Affine4& a) {
  if (!is_symplectic(a.m)) throw precondition_error("matrix is not symplectic");
  const int p = a.m[0].field().p();
  Affine4 r = a;
  for (auto& c : r.m) c = c.frobenius();
  for (int i = 0; i < 4; ++i) {
    if (p == 2) {
      FieldElement t = a.v[i] * a.v[i];
      for (int j = 0; j < 2; ++j) t += a.at(i, j) * a.at(i, 2 + j);
      r.v[i] = t;
    } else {
      r.v[i] = a.v[i].frobenius();
    }
  }
  return r;
}

Affine4 res_n_affine_brute_force(const Affine4& a) {
  if (!is_symplectic(a.m)) throw precondition_error("matrix is not symplectic");
  const FieldSpec& f = a.m[0].field();
  const auto p = static_cast<std::uint32_t>(f.p());
  const std::array<Weyl, 4> gens{Weyl::x(f, 1, 2), Weyl::x(f, 2, 2), Weyl::d(f, 1, 2), Weyl::d(f, 2, 2)};
  Affine4 r = a;
  for (int i = 0; i < 4; ++i) {
    Weyl image = Weyl::constant(a.v[i], 2);
    for (int j = 0; j < 4; ++j) image += a.at(i, j) * gens[static_cast<std::size_t>(j)];
    const Weyl power = image.pow(p);
    if (!is_central(power)) throw non_central_error("p-th power of an affine image is not central");
    std::size_t seen = 0;
    for (int j = 0; j < 4; ++j) {
      WeylKey key{};
      key[static_cast<std::size_t>(j)] = p;
      r.m[static_cast<std::size_t>(i * 4 + j)] = power.coeff(key);
      if (!power.coeff(key).is_zero()) ++seen;
    }
    r.v[i] = power.coeff(WeylKey{});
    if (!r.v[i].is_zero()) ++seen;
    if (seen != power.size()) throw std::logic_error("p-th power of an affine image is not affine in the centre");
  }
  return r;
}

}  // namespace weylres
