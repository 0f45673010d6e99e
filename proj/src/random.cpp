#include "weylres/random.hpp"

#include <utility>

namespace weylres {

namespace {

using Mat4 = std::array<FieldElement, 16>;

template <std::size_t... I>
Mat4 filled(const FieldElement& v, std::index_sequence<I...>) {
  return {((void)I, v)...};
}

Mat4 zero4(const FieldSpec& f) { return filled(FieldElement::zero(f), std::make_index_sequence<16>{}); }

Mat4 identity4(const FieldSpec& f) {
  Mat4 m = zero4(f);
  for (std::size_t i = 0; i < 4; ++i) m[i * 5] = FieldElement::one(f);
  return m;
}

Mat4 mul4(const Mat4& a, const Mat4& b) {
  Mat4 r = zero4(a[0].field());
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t k = 0; k < 4; ++k)
      for (std::size_t j = 0; j < 4; ++j) r[i * 4 + j] += a[i * 4 + k] * b[k * 4 + j];
  return r;
}

std::array<FieldElement, 4> random_gl2(const FieldSpec& f, Rng& rng) {
  for (;;) {
    std::array<FieldElement, 4> m{random_element(f, rng), random_element(f, rng), random_element(f, rng),
                                  random_element(f, rng)};
    if (!(m[0] * m[3] - m[1] * m[2]).is_zero()) return m;
  }
}

}  // namespace

FieldElement random_element(const FieldSpec& f, Rng& rng) { return FieldElement::from_index(f, below(rng, f.order())); }

FieldElement random_nonzero(const FieldSpec& f, Rng& rng) {
  return FieldElement::from_index(f, 1 + below(rng, f.order() - 1));
}

UniPoly<FieldElement> random_poly(const FieldSpec& f, std::uint64_t max_degree, Rng& rng) {
  return random_poly_in(f, 1, max_degree, rng);
}

UniPoly<FieldElement> random_poly_in(const FieldSpec& f, std::uint64_t step, std::uint64_t max_degree, Rng& rng) {
  const std::uint64_t top = below(rng, max_degree / step + 1);
  UniPoly<FieldElement> r(f);
  r.add_term(top * step, random_nonzero(f, rng));
  for (std::uint64_t i = 0; i < top; ++i) r.add_term(i * step, random_element(f, rng));
  return r;
}

UniPoly<FieldElement> random_t_poly(const FieldSpec& prime, std::uint64_t max_t_degree, Rng& rng) {
  UniPoly<FieldElement> r(prime);
  for (std::uint64_t i = 0; i <= max_t_degree; ++i) r.add_term(i, random_element(prime, rng));
  return r;
}

UniPoly<UniPoly<FieldElement>> random_ring_poly(const FieldSpec& prime, std::uint64_t max_degree,
                                                std::uint64_t max_t_degree, Rng& rng) {
  const std::uint64_t top = below(rng, max_degree + 1);
  UniPoly<UniPoly<FieldElement>> r(prime);
  UniPoly<FieldElement> lead(prime);
  while (lead.is_zero()) lead = random_t_poly(prime, max_t_degree, rng);
  r.add_term(top, lead);
  for (std::uint64_t i = 0; i < top; ++i) r.add_term(i, random_t_poly(prime, max_t_degree, rng));
  return r;
}

BiPoly<FieldElement> random_bipoly(const FieldSpec& f, std::uint32_t max_degree, Rng& rng) {
  BiPoly<FieldElement> r(f);
  for (std::uint32_t total = 0; total <= max_degree; ++total)
    for (std::uint32_t y = 0; y <= total; ++y)
      if (below(rng, 2) == 0) r.add_term(Mono2{total - y, y}, random_element(f, rng));
  return r;
}

std::array<FieldElement, 4> random_sl2(const FieldSpec& f, Rng& rng) {
  auto m = random_gl2(f, rng);
  const FieldElement inv = (m[0] * m[3] - m[1] * m[2]).inverse();
  m[0] *= inv;
  m[1] *= inv;
  return m;
}

Affine random_sl2_affine(const FieldSpec& f, Rng& rng) {
  return Affine{random_sl2(f, rng), {random_element(f, rng), random_element(f, rng)}};
}

AutWord random_word(Target target, const FieldSpec& f, std::size_t max_length, std::uint64_t max_phi_degree,
                    Rng& rng) {
  AutWord w{target, &f, {}};
  const std::size_t length = 1 + below(rng, max_length);
  const std::uint64_t kinds = target == Target::weyl ? 4 : 3;
  for (std::size_t i = 0; i < length; ++i) {
    switch (below(rng, kinds)) {
      case 0:
        w.gens.emplace_back(GenS{});
        break;
      case 1:
        w.gens.emplace_back(GenT{random_nonzero(f, rng)});
        break;
      case 2:
        w.gens.emplace_back(GenPhi{random_poly(f, max_phi_degree, rng)});
        break;
      default:
        w.gens.emplace_back(random_sl2_affine(f, rng));
        break;
    }
  }
  return w;
}

std::array<FieldElement, 16> random_symplectic4(const FieldSpec& f, Rng& rng) {
  Mat4 m = identity4(f);
  const std::size_t factors = 2 + below(rng, 4);
  for (std::size_t step = 0; step < factors; ++step) {
    Mat4 g = identity4(f);
    switch (below(rng, 4)) {
      case 0: {
        // diag(A, A^{-T})
        const auto a = random_gl2(f, rng);
        const FieldElement inv = (a[0] * a[3] - a[1] * a[2]).inverse();
        g[0] = a[0], g[1] = a[1], g[4] = a[2], g[5] = a[3];
        g[10] = a[3] * inv, g[11] = -a[2] * inv, g[14] = -a[1] * inv, g[15] = a[0] * inv;
        break;
      }
      case 1:
      case 2: {
        const FieldElement b00 = random_element(f, rng);
        const FieldElement b01 = random_element(f, rng);
        const FieldElement b11 = random_element(f, rng);
        const std::size_t off = below(rng, 2) == 0 ? 2 : 8;  // upper or lower block
        g[off] = b00, g[off + 1] = b01, g[off + 4] = b01, g[off + 5] = b11;
        break;
      }
      default:
        g.fill(FieldElement::zero(f));
        g[2] = g[7] = FieldElement::one(f);
        g[8] = g[13] = -FieldElement::one(f);
        break;
    }
    m = mul4(m, g);
  }
  return m;
}

}  // namespace weylres
