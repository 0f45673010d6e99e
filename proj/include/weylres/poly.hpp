#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "weylres/gfq.hpp"

namespace weylres {

/// Degree of the zero polynomial.
inline constexpr std::int64_t neg_inf_degree = std::numeric_limits<std::int64_t>::min();

/// binomial(m, k) mod p by Lucas' theorem; exact even when k! = 0 mod p.
inline int binomial_mod(std::uint64_t m, std::uint64_t k, int p) {
  const auto up = static_cast<std::uint64_t>(p);
  long long r = 1;
  while (k > 0 || m > 0) {
    const auto mi = static_cast<int>(m % up);
    const auto ki = static_cast<int>(k % up);
    if (ki > mi) return 0;
    // small binomial via Pascal-free product; mi < p <= 13
    long long num = 1;
    long long den = 1;
    for (int j = 0; j < ki; ++j) {
      num = num * (mi - j) % p;
      den = den * (j + 1) % p;
    }
    // den is a unit since ki < p
    long long inv = 1;
    for (int e = 0; e < p - 2; ++e) inv = inv * den % p;
    r = r * num % p * inv % p;
    m /= up;
    k /= up;
  }
  return static_cast<int>(r);
}

/// i (i-1) ... (i-k+1) reduced mod p at every step.
inline int falling_factorial_mod(std::uint64_t i, std::uint64_t k, int p) {
  if (k > i) return 0;
  const auto up = static_cast<std::uint64_t>(p);
  long long r = 1;
  for (std::uint64_t j = 0; j < k; ++j) {
    r = r * static_cast<long long>((i - j) % up) % p;
    if (r == 0) return 0;
  }
  return static_cast<int>(r);
}

inline FieldElement times_int(const FieldElement& c, long long k) {
  const int p = c.field().p();
  const auto r = static_cast<int>(((k % p) + p) % p);
  return c.times_small(r);
}

template <class C>
C times_int(const C& c, long long k) {
  return c * C::from_int(c.field(), k);
}

inline std::string to_text(const FieldElement& c) { return c.to_string(); }

/// Univariate polynomial with sparse exponent map and no stored zeros.
///
/// The coefficient ring is FieldElement or, for computations over the
/// reduced ring F_p[t], UniPoly<FieldElement>. Both expose `field()`,
/// `is_zero()`, ring operators, `frobenius()` and `from_int`.
template <class C>
class UniPoly {
 public:
  using coefficient_type = C;
  using exponent_type = std::uint64_t;
  using term_map = std::map<exponent_type, C, std::greater<>>;

  explicit UniPoly(const FieldSpec& f) : field_(&f) {}

  static UniPoly constant(const C& c) { return monomial(c, 0); }
  static UniPoly monomial(const C& c, exponent_type e) {
    UniPoly r(c.field());
    if (!c.is_zero()) r.terms_.emplace(e, c);
    return r;
  }
  static UniPoly variable(const FieldSpec& f) { return monomial(C::from_int(f, 1), 1); }
  static UniPoly from_int(const FieldSpec& f, long long v) { return constant(C::from_int(f, v)); }

  const FieldSpec& field() const noexcept { return *field_; }
  const term_map& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  std::int64_t degree() const noexcept {
    return terms_.empty() ? neg_inf_degree : static_cast<std::int64_t>(terms_.begin()->first);
  }

  C coeff(exponent_type e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? C::from_int(*field_, 0) : it->second;
  }

  void add_term(exponent_type e, const C& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  bool all_exponents_divisible_by(exponent_type m) const {
    for (const auto& [e, c] : terms_)
      if (e % m != 0) return false;
    return true;
  }

  UniPoly operator-() const {
    UniPoly r(*field_);
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, -c);
    return r;
  }

  UniPoly& operator+=(const UniPoly& o) {
    check_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    check_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    a.check_same(b);
    UniPoly r(*a.field_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  friend UniPoly operator*(const C& s, const UniPoly& a) {
    UniPoly r(*a.field_);
    if (s.is_zero()) return r;
    for (const auto& [e, c] : a.terms_) r.add_term(e, s * c);
    return r;
  }

  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.field_ == b.field_ && a.terms_ == b.terms_;
  }

  UniPoly pow(std::uint64_t k) const {
    UniPoly result = from_int(*field_, 1);
    UniPoly base = *this;
    while (k > 0) {
      if (k & 1U) result = result * base;
      k >>= 1U;
      if (k > 0) base = base * base;
    }
    return result;
  }

  /// f^p in characteristic p: coefficients raised to p, exponents scaled.
  UniPoly frobenius() const {
    const auto p = static_cast<exponent_type>(field_->p());
    UniPoly r(*field_);
    for (const auto& [e, c] : terms_) r.add_term(e * p, c.frobenius());
    return r;
  }

  /// this(q(x)).
  UniPoly compose(const UniPoly& q) const {
    check_same(q);
    UniPoly r(*field_);
    if (terms_.empty()) return r;
    // Horner over the sparse exponents, highest first.
    exponent_type prev = terms_.begin()->first;
    for (const auto& [e, c] : terms_) {
      r = r * q.pow(prev - e);
      r += constant(c);
      prev = e;
    }
    return r * q.pow(prev);
  }

  /// Exponent map e -> e * m.
  UniPoly stretch(exponent_type m) const {
    UniPoly r(*field_);
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e * m, c);
    return r;
  }

  /// Exponent map e -> e / m; throws precondition_error unless m | e for all
  /// terms.
  UniPoly shrink(exponent_type m) const {
    if (!all_exponents_divisible_by(m))
      throw precondition_error("polynomial is not in K[x^" + std::to_string(m) + "]");
    UniPoly r(*field_);
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e / m, c);
    return r;
  }

  /// Descending exponents; "0" for the zero polynomial.
  std::string to_string(std::string_view var = "x") const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : terms_) {
      if (!s.empty()) s += '+';
      std::string mono;
      if (e > 0) {
        mono = std::string(var);
        if (e > 1) mono += '^' + std::to_string(e);
      }
      s += term_text(to_text(c), c.is_one(), mono);
    }
    return s;
  }

  bool is_one() const { return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second.is_one(); }

  /// Joins a coefficient and a monomial ("3*x^2", "(1+g)*x", "x", "2").
  static std::string term_text(const std::string& coeff, bool coeff_is_one, const std::string& mono) {
    if (mono.empty()) return coeff;
    if (coeff_is_one) return mono;
    if (coeff.find('+') != std::string::npos) return "(" + coeff + ")*" + mono;
    return coeff + "*" + mono;
  }

 private:
  void check_same(const UniPoly& o) const {
    if (field_ != o.field_) throw mismatch_error("polynomial ring mismatch");
  }

  const FieldSpec* field_;
  term_map terms_;
};

template <class C>
std::string to_text(const UniPoly<C>& c) {
  return c.to_string("t");
}

/// Monomial X^x Y^y of a bivariate polynomial.
struct Mono2 {
  std::uint32_t x = 0;
  std::uint32_t y = 0;
  friend bool operator==(const Mono2&, const Mono2&) = default;
};

/// Canonical order: Y-exponent most significant, both descending.
struct Mono2Greater {
  bool operator()(const Mono2& a, const Mono2& b) const noexcept {
    return a.y != b.y ? a.y > b.y : a.x > b.x;
  }
};

/// Commutative polynomial in two variables, used for the centre
/// Z = K[X,Y] and for K[x1,x2].
template <class C>
class BiPoly {
 public:
  using coefficient_type = C;
  using term_map = std::map<Mono2, C, Mono2Greater>;

  explicit BiPoly(const FieldSpec& f) : field_(&f) {}

  static BiPoly constant(const C& c) { return monomial(c, 0, 0); }
  static BiPoly monomial(const C& c, std::uint32_t ex, std::uint32_t ey) {
    BiPoly r(c.field());
    if (!c.is_zero()) r.terms_.emplace(Mono2{ex, ey}, c);
    return r;
  }
  static BiPoly from_int(const FieldSpec& f, long long v) { return constant(C::from_int(f, v)); }
  static BiPoly var_x(const FieldSpec& f) { return monomial(C::from_int(f, 1), 1, 0); }
  static BiPoly var_y(const FieldSpec& f) { return monomial(C::from_int(f, 1), 0, 1); }
  /// u(X) (or u(Y) when `in_y`).
  static BiPoly from_uni(const UniPoly<C>& u, bool in_y = false) {
    BiPoly r(u.field());
    for (const auto& [e, c] : u.terms()) {
      const auto ex = static_cast<std::uint32_t>(e);
      r.terms_.emplace(in_y ? Mono2{0, ex} : Mono2{ex, 0}, c);
    }
    return r;
  }

  const FieldSpec& field() const noexcept { return *field_; }
  const term_map& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  C coeff(std::uint32_t ex, std::uint32_t ey) const {
    auto it = terms_.find(Mono2{ex, ey});
    return it == terms_.end() ? C::from_int(*field_, 0) : it->second;
  }

  void add_term(Mono2 m, const C& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// Total degree; neg_inf_degree for zero.
  std::int64_t degree() const noexcept {
    std::int64_t d = neg_inf_degree;
    for (const auto& [m, c] : terms_) d = std::max<std::int64_t>(d, static_cast<std::int64_t>(m.x) + m.y);
    return d;
  }

  /// Homogeneous component of top total degree.
  BiPoly top_form() const {
    const auto d = degree();
    BiPoly r(*field_);
    for (const auto& [m, c] : terms_)
      if (static_cast<std::int64_t>(m.x) + m.y == d) r.terms_.emplace(m, c);
    return r;
  }

  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Mono2{}); }
  C constant_term() const { return coeff(0, 0); }

  /// The polynomial as u(X) if Y does not occur.
  UniPoly<C> to_uni_x() const {
    UniPoly<C> r(*field_);
    for (const auto& [m, c] : terms_) {
      if (m.y != 0) throw precondition_error("polynomial depends on the second variable");
      r.add_term(m.x, c);
    }
    return r;
  }

  BiPoly operator-() const {
    BiPoly r(*field_);
    for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, -c);
    return r;
  }
  BiPoly& operator+=(const BiPoly& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  BiPoly& operator-=(const BiPoly& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    a.check_same(b);
    BiPoly r(*a.field_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(Mono2{ma.x + mb.x, ma.y + mb.y}, ca * cb);
    return r;
  }
  friend BiPoly operator*(const C& s, const BiPoly& a) {
    BiPoly r(*a.field_);
    if (s.is_zero()) return r;
    for (const auto& [m, c] : a.terms_) r.add_term(m, s * c);
    return r;
  }
  friend bool operator==(const BiPoly& a, const BiPoly& b) {
    return a.field_ == b.field_ && a.terms_ == b.terms_;
  }

  BiPoly pow(std::uint64_t k) const {
    BiPoly result = from_int(*field_, 1);
    BiPoly base = *this;
    while (k > 0) {
      if (k & 1U) result = result * base;
      k >>= 1U;
      if (k > 0) base = base * base;
    }
    return result;
  }

  /// Ring homomorphism X -> image_x, Y -> image_y.
  BiPoly substitute(const BiPoly& image_x, const BiPoly& image_y) const {
    check_same(image_x);
    check_same(image_y);
    std::map<std::uint32_t, BiPoly> px;
    std::map<std::uint32_t, BiPoly> py;
    auto power = [](std::map<std::uint32_t, BiPoly>& cache, const BiPoly& base, std::uint32_t e) -> const BiPoly& {
      auto it = cache.find(e);
      if (it != cache.end()) return it->second;
      return cache.emplace(e, base.pow(e)).first->second;
    };
    BiPoly r(*field_);
    for (const auto& [m, c] : terms_) r += c * (power(px, image_x, m.x) * power(py, image_y, m.y));
    return r;
  }

  /// d/dX (or d/dY when `in_y`), applied k times.
  BiPoly partial(bool in_y, std::uint32_t k = 1) const {
    const int p = field_->p();
    BiPoly r(*field_);
    for (const auto& [m, c] : terms_) {
      const std::uint32_t e = in_y ? m.y : m.x;
      const int f = falling_factorial_mod(e, k, p);
      if (f == 0) continue;
      const Mono2 nm = in_y ? Mono2{m.x, m.y - k} : Mono2{m.x - k, m.y};
      r.add_term(nm, times_int(c, f));
    }
    return r;
  }

  std::string to_string(std::string_view vx = "X", std::string_view vy = "Y") const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
      if (!s.empty()) s += '+';
      std::string mono;
      auto append = [&mono](std::string_view v, std::uint32_t e) {
        if (e == 0) return;
        if (!mono.empty()) mono += '*';
        mono += v;
        if (e > 1) mono += '^' + std::to_string(e);
      };
      append(vx, m.x);
      append(vy, m.y);
      s += UniPoly<C>::term_text(to_text(c), c.is_one(), mono);
    }
    return s;
  }

 private:
  void check_same(const BiPoly& o) const {
    if (field_ != o.field_) throw mismatch_error("polynomial ring mismatch");
  }

  const FieldSpec* field_;
  term_map terms_;
};

/// k-th formal derivative.
template <class C>
UniPoly<C> derivative(const UniPoly<C>& f, std::uint64_t k) {
  const int p = f.field().p();
  UniPoly<C> r(f.field());
  for (const auto& [e, c] : f.terms()) {
    const int ff = falling_factorial_mod(e, k, p);
    if (ff != 0) r.add_term(e - k, times_int(c, ff));
  }
  return r;
}

/// d^{[k]} = d^k / k!: x^m -> binomial(m, k) x^{m-k}.
template <class C>
UniPoly<C> divided_power(const UniPoly<C>& f, std::uint64_t k) {
  const int p = f.field().p();
  UniPoly<C> r(f.field());
  for (const auto& [e, c] : f.terms()) {
    if (e < k) continue;
    const int b = binomial_mod(e, k, p);
    if (b != 0) r.add_term(e - k, times_int(c, b));
  }
  return r;
}

/// (a_0, ..., a_{p-1}) with f = sum_i a_i(x^p) x^i; each a_i is returned
/// as a polynomial in the single variable u = x^p.
template <class C>
std::vector<UniPoly<C>> p_decompose(const UniPoly<C>& f) {
  const auto p = static_cast<std::uint64_t>(f.field().p());
  std::vector<UniPoly<C>> parts(p, UniPoly<C>(f.field()));
  for (const auto& [e, c] : f.terms()) parts[e % p].add_term(e / p, c);
  return parts;
}

template <class C>
UniPoly<C> p_recompose(const std::vector<UniPoly<C>>& parts, const FieldSpec& field) {
  const auto p = static_cast<std::uint64_t>(field.p());
  if (parts.size() != p) throw precondition_error("expected p components");
  UniPoly<C> r(field);
  for (std::uint64_t i = 0; i < p; ++i)
    for (const auto& [e, c] : parts[i].terms()) r.add_term(e * p + i, c);
  return r;
}

/// (degree, coefficient) of the highest monomial.
template <class C>
std::pair<std::uint64_t, C> leading_term(const UniPoly<C>& f) {
  if (f.is_zero()) throw precondition_error("leading term of the zero polynomial");
  const auto& [e, c] = *f.terms().begin();
  return {e, c};
}

/// det of the 2x2 matrix of formal partials of (P, Q).
template <class C>
BiPoly<C> jacobian(const BiPoly<C>& P, const BiPoly<C>& Q) {
  return P.partial(false) * Q.partial(true) - P.partial(true) * Q.partial(false);
}

}  // namespace weylres
