#include "weylres/autgrp.hpp"

#include <algorithm>
#include <optional>

namespace weylres {

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

FieldElement one(const FieldSpec& f) { return FieldElement::one(f); }

ZPoly zx(const FieldSpec& f) { return ZPoly::var_x(f); }
ZPoly zy(const FieldSpec& f) { return ZPoly::var_y(f); }
ZPoly zc(const FieldElement& c) { return ZPoly::constant(c); }

CenterAut center_images(const Generator& g, const FieldSpec& f) {
  return std::visit(
      overloaded{
          [&](const GenS&) { return CenterAut{zy(f), -zx(f)}; },
          [&](const GenT& t) { return CenterAut{t.mu * zx(f), t.mu.inverse() * zy(f)}; },
          [&](const GenGamma& t) { return CenterAut{t.mu * zx(f), zy(f)}; },
          [&](const GenPhi& phi) { return CenterAut{zx(f), zy(f) + ZPoly::from_uni(phi.f)}; },
          [&](const Affine& a) {
            return CenterAut{a.m[0] * zx(f) + a.m[1] * zy(f) + zc(a.v[0]),
                             a.m[2] * zx(f) + a.m[3] * zy(f) + zc(a.v[1])};
          },
      },
      g);
}

WeylAut weyl_images(const Generator& g, const FieldSpec& f) {
  const Weyl x = Weyl::x(f);
  const Weyl d = Weyl::d(f);
  return std::visit(
      overloaded{
          [&](const GenS&) { return WeylAut{d, -x}; },
          [&](const GenT& t) { return WeylAut{t.mu * x, t.mu.inverse() * d}; },
          [&](const GenGamma&) -> WeylAut { throw invalid_word_error("gamma is not an automorphism of A_1"); },
          [&](const GenPhi& phi) { return WeylAut{x, d + Weyl::from_x_poly(phi.f)}; },
          [&](const Affine& a) {
            return WeylAut{a.m[0] * x + a.m[1] * d + Weyl::constant(a.v[0]),
                           a.m[2] * x + a.m[3] * d + Weyl::constant(a.v[1])};
          },
      },
      g);
}

void check_field(const FieldElement& c, const FieldSpec& f) {
  if (&c.field() != &f) throw invalid_word_error("generator payload from a different field");
}

// Diagonal automorphism X -> alpha X, Y -> beta Y as gamma_{alpha beta} t_{beta^{-1}}.
void push_diagonal(std::vector<Generator>& out, const FieldElement& alpha, const FieldElement& beta) {
  const FieldElement mu = alpha * beta;
  const FieldElement nu = beta.inverse();
  if (!mu.is_one()) out.emplace_back(GenGamma{mu});
  if (!nu.is_one()) out.emplace_back(GenT{nu});
}

// f(X) -> c^{-1} f(X / c), the payload change when t_c moves left past phi:
// phi_f t_c = t_c phi_{f'} with lambda_i -> lambda_i c^{-i-1}.
Poly twist_by_t(const Poly& f, const FieldElement& c) {
  const FieldElement ci = c.inverse();
  Poly r(f.field());
  for (const auto& [e, coef] : f.terms()) r.add_term(e, coef * ci.pow(e + 1));
  return r;
}

// phi_f gamma_mu = gamma_mu phi_{f'} with lambda_i -> lambda_i mu^{-i}.
Poly twist_by_gamma(const Poly& f, const FieldElement& mu) {
  const FieldElement mi = mu.inverse();
  Poly r(f.field());
  for (const auto& [e, coef] : f.terms()) r.add_term(e, coef * mi.pow(e));
  return r;
}

// Single pass: push all t/gamma to the left end. Affine generators act as
// barriers (pending t/gamma are emitted to their right).
std::vector<Generator> push_scalars_left(const std::vector<Generator>& gens, const FieldSpec& f) {
  std::vector<Generator> rev;
  FieldElement t = one(f);
  FieldElement gamma = one(f);
  auto flush = [&] {
    if (!t.is_one()) rev.emplace_back(GenT{t});
    if (!gamma.is_one()) rev.emplace_back(GenGamma{gamma});
    t = one(f);
    gamma = one(f);
  };
  for (auto it = gens.rbegin(); it != gens.rend(); ++it) {
    std::visit(overloaded{
                   [&](const GenT& g) { t = g.mu * t; },
                   [&](const GenGamma& g) { gamma = g.mu * gamma; },
                   [&](const GenS&) {
                     // s gamma_m t_c = gamma_m t_{m^{-1}} s t_c = gamma_m t_{m^{-1} c^{-1}} s
                     t = (gamma * t).inverse();
                     rev.emplace_back(GenS{});
                   },
                   [&](const GenPhi& g) {
                     // phi_f gamma_m t_c = gamma_m t_c phi_{f''}
                     rev.emplace_back(GenPhi{twist_by_t(twist_by_gamma(g.f, gamma), t)});
                   },
                   [&](const Affine& a) {
                     flush();
                     rev.emplace_back(a);
                   },
               },
               *it);
  }
  // gamma before t at the front.
  if (!t.is_one()) rev.emplace_back(GenT{t});
  if (!gamma.is_one()) rev.emplace_back(GenGamma{gamma});
  return {rev.rbegin(), rev.rend()};
}

std::vector<Generator> merge_phis(const std::vector<Generator>& gens) {
  std::vector<Generator> out;
  for (const auto& g : gens) {
    if (const auto* phi = std::get_if<GenPhi>(&g)) {
      if (!out.empty())
        if (auto* prev = std::get_if<GenPhi>(&out.back())) {
          prev->f += phi->f;
          if (prev->f.is_zero()) out.pop_back();
          continue;
        }
      if (!phi->f.is_zero()) out.push_back(g);
      continue;
    }
    out.push_back(g);
  }
  return out;
}

// Reads an affine image a X + b Y + e; nullopt if the degree exceeds 1.
struct AffineRow {
  FieldElement a, b, e;
};
AffineRow affine_row(const ZPoly& z) {
  return {z.coeff(1, 0), z.coeff(0, 1), z.coeff(0, 0)};
}

}  // namespace

CenterAut identity_center(const FieldSpec& f) { return {zx(f), zy(f)}; }
WeylAut identity_weyl(const FieldSpec& f) { return {Weyl::x(f), Weyl::d(f)}; }

void validate(const AutWord& w) {
  if (w.field == nullptr) throw invalid_word_error("word has no field");
  const FieldSpec& f = *w.field;
  for (const auto& g : w.gens) {
    std::visit(overloaded{
                   [](const GenS&) {},
                   [&](const GenT& t) {
                     check_field(t.mu, f);
                     if (t.mu.is_zero()) throw invalid_word_error("t payload must be nonzero");
                   },
                   [&](const GenGamma& t) {
                     check_field(t.mu, f);
                     if (w.target == Target::weyl) throw invalid_word_error("gamma is not an automorphism of A_1");
                     if (t.mu.is_zero()) throw invalid_word_error("gamma payload must be nonzero");
                   },
                   [&](const GenPhi& phi) {
                     if (&phi.f.field() != &f) throw invalid_word_error("phi payload from a different field");
                   },
                   [&](const Affine& a) {
                     for (const auto& c : a.m) check_field(c, f);
                     for (const auto& c : a.v) check_field(c, f);
                     const FieldElement det = a.det();
                     if (det.is_zero()) throw invalid_word_error("affine matrix is singular");
                     if (w.target == Target::weyl && !det.is_one())
                       throw invalid_word_error("affine automorphisms of A_1 need det = 1");
                   },
               },
               g);
  }
}

CenterAut realize_center(const AutWord& w) {
  validate(w);
  if (w.target != Target::center) throw mismatch_error("word acts on A_1, not on the centre");
  CenterAut r = identity_center(*w.field);
  // Fold from the right: r = g_i r.
  for (auto it = w.gens.rbegin(); it != w.gens.rend(); ++it) r = compose(center_images(*it, *w.field), r);
  return r;
}

WeylAut realize_weyl(const AutWord& w) {
  validate(w);
  if (w.target != Target::weyl) throw mismatch_error("word acts on the centre, not on A_1");
  WeylAut r = identity_weyl(*w.field);
  for (auto it = w.gens.rbegin(); it != w.gens.rend(); ++it) r = compose(weyl_images(*it, *w.field), r);
  return r;
}

CenterAut compose(const CenterAut& a, const CenterAut& b) {
  return {b.x.substitute(a.x, a.y), b.y.substitute(a.x, a.y)};
}

WeylAut compose(const WeylAut& a, const WeylAut& b) {
  return {b.x.substitute(a.x, a.d), b.d.substitute(a.x, a.d)};
}

ZPoly apply(const CenterAut& a, const ZPoly& z) { return z.substitute(a.x, a.y); }
Weyl apply(const WeylAut& a, const Weyl& z) { return z.substitute(a.x, a.d); }

std::int64_t degree(const CenterAut& a) { return std::max(a.x.degree(), a.y.degree()); }
std::int64_t degree(const WeylAut& a) { return std::max(a.x.degree(), a.d.degree()); }

ZPoly jacobian(const CenterAut& a) { return jacobian(a.x, a.y); }

bool in_gamma(const CenterAut& a) { return jacobian(a) == ZPoly::from_int(a.field(), 1); }

bool preserves_weyl_relation(const WeylAut& a) {
  return commutator(a.d, a.x) == Weyl::from_int(a.field(), 1);
}

AutWord decompose(const CenterAut& input) {
  const FieldSpec& f = input.field();
  if (&input.y.field() != &f) throw mismatch_error("images live in different fields");
  ZPoly P = input.x;
  ZPoly Q = input.y;
  // sigma = sigma' g for each peeled g, so the word is sigma' followed by the
  // peeled generators in reverse order of peeling.
  std::vector<Generator> peeled;

  auto swap = [&] {
    ZPoly np = -Q;
    Q = std::move(P);
    P = std::move(np);
    peeled.emplace_back(GenS{});
  };

  for (;;) {
    const auto dp = P.degree();
    const auto dq = Q.degree();
    if (dp < 1 || dq < 1) throw not_automorphism_error("an image is constant");
    if (std::max(dp, dq) <= 1) break;
    if (dp >= dq) swap();
    Poly f_acc(f);
    while (Q.degree() > 1 && Q.degree() >= P.degree()) {
      const auto deg_q = Q.degree();
      const auto deg_p = P.degree();
      if (deg_q % deg_p != 0)
        throw not_automorphism_error("degree reduction stalls: deg " + std::to_string(deg_q) +
                                     " is not a multiple of deg " + std::to_string(deg_p));
      const auto k = static_cast<std::uint64_t>(deg_q / deg_p);
      const ZPoly top_q = Q.top_form();
      const ZPoly top_pk = P.top_form().pow(k);
      const auto& [mono, lead] = *top_pk.terms().begin();
      const FieldElement c = top_q.coeff(mono.x, mono.y) * lead.inverse();
      if (c.is_zero() || !(top_q == c * top_pk))
        throw not_automorphism_error("degree reduction stalls: leading forms are not proportional");
      Q -= c * P.pow(k);
      f_acc.add_term(k, c);
    }
    peeled.emplace_back(GenPhi{f_acc});
  }

  // Affine part P = aX + bY + e, Q = cX + dY + f.
  {
    const AffineRow rp = affine_row(P);
    const AffineRow rq = affine_row(Q);
    if ((rp.a * rq.b - rp.b * rq.a).is_zero()) throw not_automorphism_error("affine part is singular");
  }
  if (affine_row(P).a.is_zero()) swap();
  {
    // Clear X and the constant from Q: Q - (g1 P + g0).
    const AffineRow rp = affine_row(P);
    const AffineRow rq = affine_row(Q);
    const FieldElement g1 = rq.a * rp.a.inverse();
    const FieldElement g0 = rq.e - g1 * rp.e;
    Poly g(f);
    g.add_term(1, g1);
    g.add_term(0, g0);
    Q -= g1 * P + zc(g0);
    if (!g.is_zero()) peeled.emplace_back(GenPhi{g});
  }
  {
    const AffineRow rp = affine_row(P);
    if (!rp.b.is_zero() || !rp.e.is_zero()) {
      swap();  // P = -d'Y, Q = aX + bY + e
      const AffineRow np = affine_row(P);
      const AffineRow nq = affine_row(Q);
      const FieldElement g1 = nq.b * np.b.inverse();
      const FieldElement g0 = nq.e;
      Poly g(f);
      g.add_term(1, g1);
      g.add_term(0, g0);
      Q -= g1 * P + zc(g0);
      if (!g.is_zero()) peeled.emplace_back(GenPhi{g});
      swap();
    }
  }
  const FieldElement alpha = affine_row(P).a;
  const FieldElement beta = affine_row(Q).b;

  AutWord w{Target::center, &f, {}};
  push_diagonal(w.gens, alpha, beta);
  w.gens.insert(w.gens.end(), peeled.rbegin(), peeled.rend());
  return normalize(w);
}

AutWord normalize(const AutWord& w) {
  if (w.field == nullptr) throw invalid_word_error("word has no field");
  std::vector<Generator> gens = w.gens;
  for (;;) {
    gens = merge_phis(push_scalars_left(gens, *w.field));
    auto it = std::adjacent_find(gens.begin(), gens.end(), [](const Generator& a, const Generator& b) {
      return std::holds_alternative<GenS>(a) && std::holds_alternative<GenS>(b);
    });
    if (it == gens.end()) break;
    // s s = t_{-1}
    *it = GenT{FieldElement::from_int(*w.field, -1)};
    gens.erase(it + 1);
  }
  return {w.target, w.field, std::move(gens)};
}

AutWord inverse_word(const AutWord& w) {
  validate(w);
  const FieldSpec& f = *w.field;
  AutWord r{w.target, w.field, {}};
  for (auto it = w.gens.rbegin(); it != w.gens.rend(); ++it) {
    std::visit(overloaded{
                   [&](const GenS&) {
                     r.gens.emplace_back(GenT{FieldElement::from_int(f, -1)});
                     r.gens.emplace_back(GenS{});
                   },
                   [&](const GenT& g) { r.gens.emplace_back(GenT{g.mu.inverse()}); },
                   [&](const GenGamma& g) { r.gens.emplace_back(GenGamma{g.mu.inverse()}); },
                   [&](const GenPhi& g) { r.gens.emplace_back(GenPhi{-g.f}); },
                   [&](const Affine& a) {
                     const FieldElement di = a.det().inverse();
                     Affine inv{{a.m[3] * di, -a.m[1] * di, -a.m[2] * di, a.m[0] * di},
                                {FieldElement::zero(f), FieldElement::zero(f)}};
                     inv.v[0] = -(inv.m[0] * a.v[0] + inv.m[1] * a.v[1]);
                     inv.v[1] = -(inv.m[2] * a.v[0] + inv.m[3] * a.v[1]);
                     r.gens.emplace_back(inv);
                   },
               },
               *it);
  }
  return r;
}

CenterAut inverse(const CenterAut& a) { return realize_center(inverse_word(decompose(a))); }

std::string to_string(const AutWord& w) {
  if (w.gens.empty()) return "id";
  const char* var = w.target == Target::center ? "X" : "x";
  std::string s;
  for (const auto& g : w.gens) {
    if (!s.empty()) s += ' ';
    s += std::visit(overloaded{
                        [](const GenS&) -> std::string { return "s"; },
                        [](const GenT& t) { return "t[" + t.mu.to_string() + "]"; },
                        [](const GenGamma& t) { return "gamma[" + t.mu.to_string() + "]"; },
                        [&](const GenPhi& phi) { return "phi[" + phi.f.to_string(var) + "]"; },
                        [](const Affine& a) {
                          return "aff[" + a.m[0].to_string() + "," + a.m[1].to_string() + "," + a.m[2].to_string() +
                                 "," + a.m[3].to_string() + "," + a.v[0].to_string() + "," + a.v[1].to_string() + "]";
                        },
                    },
                    g);
  }
  return s;
}

std::string to_string(const CenterAut& a) { return "(" + a.x.to_string() + " ; " + a.y.to_string() + ")"; }
std::string to_string(const WeylAut& a) { return "(" + a.x.to_string() + " ; " + a.d.to_string() + ")"; }

}  // namespace weylres
