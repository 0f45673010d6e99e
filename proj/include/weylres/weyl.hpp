#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <omp.h>

#include "weylres/parallel.hpp"
#include "weylres/poly.hpp"

namespace weylres {

/// Exponents (i1, i2, j1, j2) of x1^i1 x2^i2 d1^j1 d2^j2; A_1 uses only
/// i1 and j1.
using WeylKey = std::array<std::uint32_t, 4>;

/// Printing order: d-exponents before x-exponents, each descending, so
/// d^2+x^2+1 rather than x^2+d^2+1.
struct WeylKeyGreater {
  bool operator()(const WeylKey& a, const WeylKey& b) const noexcept {
    if (a[2] != b[2]) return a[2] > b[2];
    if (a[3] != b[3]) return a[3] > b[3];
    if (a[0] != b[0]) return a[0] > b[0];
    return a[1] > b[1];
  }
};

namespace detail {

/// T[(r*p + s)*p + k] = binomial(r, k) * s(s-1)...(s-k+1) mod p, the
/// coefficient of x^{i-k} d^{j-k} in d^j x^i when j = r, i = s (mod p).
/// Higher base-p digits of j and i do not change either factor for k < p.
inline const std::vector<int>& commutation_table(int p) {
  static const std::array<std::vector<int>, FieldSpec::max_prime + 1> tables = [] {
    std::array<std::vector<int>, FieldSpec::max_prime + 1> t;
    for (int q = 2; q <= FieldSpec::max_prime; ++q) {
      if (!is_prime(q)) continue;
      t[static_cast<std::size_t>(q)].resize(static_cast<std::size_t>(q) * q * q);
      for (int r = 0; r < q; ++r)
        for (int s = 0; s < q; ++s)
          for (int k = 0; k < q; ++k)
            t[static_cast<std::size_t>(q)][static_cast<std::size_t>((r * q + s) * q + k)] = binomial_mod(r, k, q) * falling_factorial_mod(s, k, q) % q;
    }
    return t;
  }();
  return tables[static_cast<std::size_t>(p)];
}

}  // namespace detail

/// Element of the Weyl algebra A_n (n = 1 or 2) over a commutative ring of
/// characteristic p, stored in normal order (every x left of every d).
template <class C>
class WeylElement {
 public:
  using coefficient_type = C;
  using term_map = std::map<WeylKey, C, WeylKeyGreater>;

  WeylElement(const FieldSpec& f, int n) : field_(&f), n_(n) {
    if (n != 1 && n != 2) throw precondition_error("Weyl algebra A_n supported for n = 1, 2");
  }

  static WeylElement constant(const C& c, int n = 1) { return monomial(c, WeylKey{}, n); }
  static WeylElement from_int(const FieldSpec& f, long long v, int n = 1) {
    return constant(C::from_int(f, v), n);
  }
  static WeylElement monomial(const C& c, const WeylKey& key, int n = 1) {
    WeylElement r(c.field(), n);
    r.check_key(key);
    if (!c.is_zero()) r.terms_.emplace(key, c);
    return r;
  }
  /// x_i (x when n = 1).
  static WeylElement x(const FieldSpec& f, int i = 1, int n = 1) {
    WeylKey k{};
    k[static_cast<std::size_t>(i - 1)] = 1;
    return monomial(C::from_int(f, 1), k, n);
  }
  /// d_i (d when n = 1).
  static WeylElement d(const FieldSpec& f, int i = 1, int n = 1) {
    WeylKey k{};
    k[static_cast<std::size_t>(i + 1)] = 1;
    return monomial(C::from_int(f, 1), k, n);
  }
  /// f(x) in A_1.
  static WeylElement from_x_poly(const UniPoly<C>& f) {
    WeylElement r(f.field(), 1);
    for (const auto& [e, c] : f.terms()) r.terms_.emplace(WeylKey{static_cast<std::uint32_t>(e), 0, 0, 0}, c);
    return r;
  }
  /// f(x1, x2) in A_2, reading the BiPoly variables as x1, x2.
  static WeylElement from_x_bipoly(const BiPoly<C>& f) {
    WeylElement r(f.field(), 2);
    for (const auto& [m, c] : f.terms()) r.terms_.emplace(WeylKey{m.x, m.y, 0, 0}, c);
    return r;
  }
  /// z(X, Y) with X = x^p, Y = d^p; already in normal order.
  static WeylElement from_center(const BiPoly<C>& z) {
    const auto p = static_cast<std::uint32_t>(z.field().p());
    WeylElement r(z.field(), 1);
    for (const auto& [m, c] : z.terms()) r.terms_.emplace(WeylKey{m.x * p, 0, m.y * p, 0}, c);
    return r;
  }

  const FieldSpec& field() const noexcept { return *field_; }
  int arity() const noexcept { return n_; }
  const term_map& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  C coeff(const WeylKey& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? C::from_int(*field_, 0) : it->second;
  }

  /// Total degree in all generators.
  std::int64_t degree() const noexcept {
    std::int64_t deg = neg_inf_degree;
    for (const auto& [k, c] : terms_)
      deg = std::max<std::int64_t>(deg, std::int64_t{k[0]} + k[1] + k[2] + k[3]);
    return deg;
  }

  void add_term(const WeylKey& k, const C& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  WeylElement operator-() const {
    WeylElement r(*field_, n_);
    for (const auto& [k, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), k, -c);
    return r;
  }
  WeylElement& operator+=(const WeylElement& o) {
    check_same(o);
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  WeylElement& operator-=(const WeylElement& o) {
    check_same(o);
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
  friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }
  friend WeylElement operator*(const C& s, const WeylElement& a) {
    WeylElement r(*a.field_, a.n_);
    if (s.is_zero()) return r;
    for (const auto& [k, c] : a.terms_) r.add_term(k, s * c);
    return r;
  }
  friend WeylElement operator*(const WeylElement& a, const WeylElement& b) {
    return multiply(a, b, Execution::automatic);
  }
  WeylElement& operator*=(const WeylElement& o) { return *this = *this * o; }

  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.field_ == b.field_ && a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  /// Normal-ordered product using d^j x^i = sum_k binom(j,k) i!/(i-k)!
  /// x^{i-k} d^{j-k}; only k < p contribute in characteristic p.
  static WeylElement multiply(const WeylElement& a, const WeylElement& b, Execution ex) {
    a.check_same(b);
    if (a.is_zero() || b.is_zero()) return WeylElement(*a.field_, a.n_);
    const bool parallel = use_parallel(ex, a.size() * b.size());
    if (a.n_ == 1) {
      WeylKey ma{};
      WeylKey mb{};
      for (const auto& [k, c] : a.terms_) ma = {std::max(ma[0], k[0]), 0, std::max(ma[2], k[2]), 0};
      for (const auto& [k, c] : b.terms_) mb = {std::max(mb[0], k[0]), 0, std::max(mb[2], k[2]), 0};
      const std::size_t rows = std::size_t{ma[0]} + mb[0] + 1;
      const std::size_t cols = std::size_t{ma[2]} + mb[2] + 1;
      if (rows * cols <= dense_limit) return parallel ? dense_parallel(a, b, rows, cols) : dense_serial(a, b, rows, cols);
    }
    return sparse_product(a, b);
  }

  WeylElement pow(std::uint64_t k) const {
    WeylElement result = from_int(*field_, 1, n_);
    WeylElement base = *this;
    while (k > 0) {
      if (k & 1U) result = result * base;
      k >>= 1U;
      if (k > 0) base = base * base;
    }
    return result;
  }

  /// Algebra homomorphism of A_1 given by x -> img_x, d -> img_d.
  WeylElement substitute(const WeylElement& img_x, const WeylElement& img_d) const {
    check_same(img_x);
    check_same(img_d);
    if (n_ != 1) throw precondition_error("substitution is implemented for A_1");
    std::map<std::uint32_t, WeylElement> px;
    std::map<std::uint32_t, WeylElement> pd;
    auto power = [](std::map<std::uint32_t, WeylElement>& cache, const WeylElement& base,
                    std::uint32_t e) -> const WeylElement& {
      auto it = cache.find(e);
      if (it != cache.end()) return it->second;
      return cache.emplace(e, base.pow(e)).first->second;
    };
    WeylElement r(*field_, 1);
    for (const auto& [k, c] : terms_) r += c * (power(px, img_x, k[0]) * power(pd, img_d, k[2]));
    return r;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    static constexpr std::array<const char*, 4> names1{"x", "", "d", ""};
    static constexpr std::array<const char*, 4> names2{"x1", "x2", "d1", "d2"};
    const auto& names = n_ == 1 ? names1 : names2;
    std::string s;
    for (const auto& [k, c] : terms_) {
      if (!s.empty()) s += '+';
      std::string mono;
      for (std::size_t v = 0; v < 4; ++v) {
        if (k[v] == 0) continue;
        if (!mono.empty()) mono += '*';
        mono += names[v];
        if (k[v] > 1) mono += '^' + std::to_string(k[v]);
      }
      s += UniPoly<C>::term_text(to_text(c), c.is_one(), mono);
    }
    return s;
  }

 private:
  static constexpr std::size_t dense_limit = std::size_t{1} << 22;

  void check_same(const WeylElement& o) const {
    if (field_ != o.field_) throw mismatch_error("Weyl algebra coefficient ring mismatch");
    if (n_ != o.n_) throw mismatch_error("Weyl algebra arity mismatch");
  }
  void check_key(const WeylKey& k) const {
    if (n_ == 1 && (k[1] != 0 || k[3] != 0)) throw precondition_error("x2/d2 used in A_1");
  }

  using TermVec = std::vector<std::pair<WeylKey, C>>;

  static TermVec flatten(const WeylElement& a) { return TermVec(a.terms_.begin(), a.terms_.end()); }

  // Adds the product of one left term and every right term into a dense
  // (x-exponent, d-exponent) grid.
  static void accumulate_row(const std::pair<WeylKey, C>& lt, const TermVec& right, std::vector<C>& grid,
                             std::size_t cols, int p, const std::vector<int>& table) {
    const auto& [ka, ca] = lt;
    const auto up = static_cast<std::uint32_t>(p);
    const std::uint32_t jr = ka[2] % up;
    for (const auto& [kb, cb] : right) {
      const C prod = ca * cb;
      const std::uint32_t kmax = std::min({ka[2], kb[0], up - 1});
      const std::size_t base = ((jr * up) + kb[0] % up) * up;
      for (std::uint32_t k = 0; k <= kmax; ++k) {
        const int t = table[base + k];
        if (t == 0) continue;
        C& cell = grid[std::size_t{ka[0] + kb[0] - k} * cols + (ka[2] + kb[2] - k)];
        cell += times_int(prod, t);
      }
    }
  }

  static WeylElement from_grid(const FieldSpec& f, const std::vector<C>& grid, std::size_t cols) {
    WeylElement r(f, 1);
    for (std::size_t idx = 0; idx < grid.size(); ++idx) {
      if (grid[idx].is_zero()) continue;
      r.terms_.emplace(WeylKey{static_cast<std::uint32_t>(idx / cols), 0, static_cast<std::uint32_t>(idx % cols), 0},
                       grid[idx]);
    }
    return r;
  }

  static WeylElement dense_serial(const WeylElement& a, const WeylElement& b, std::size_t rows, std::size_t cols) {
    const int p = a.field_->p();
    const auto& table = detail::commutation_table(p);
    std::vector<C> grid(rows * cols, C::from_int(*a.field_, 0));
    const TermVec right = flatten(b);
    for (const auto& lt : a.terms_) accumulate_row({lt.first, lt.second}, right, grid, cols, p, table);
    return from_grid(*a.field_, grid, cols);
  }

  // Each thread owns a grid for its share of the left terms; the grids are
  // then summed cell-wise in parallel.
  static WeylElement dense_parallel(const WeylElement& a, const WeylElement& b, std::size_t rows, std::size_t cols) {
    const int p = a.field_->p();
    const auto& table = detail::commutation_table(p);
    const TermVec left = flatten(a);
    const TermVec right = flatten(b);
    const C zero = C::from_int(*a.field_, 0);
    const int threads = omp_get_max_threads();
    std::vector<std::vector<C>> grids(static_cast<std::size_t>(threads));
    const auto nleft = static_cast<std::ptrdiff_t>(left.size());
#pragma omp parallel num_threads(threads)
    {
      auto& grid = grids[static_cast<std::size_t>(omp_get_thread_num())];
      grid.assign(rows * cols, zero);
#pragma omp for schedule(dynamic, 4)
      for (std::ptrdiff_t i = 0; i < nleft; ++i)
        accumulate_row(left[static_cast<std::size_t>(i)], right, grid, cols, p, table);
    }
    std::vector<C>& total = grids[0];
    const auto ncells = static_cast<std::ptrdiff_t>(total.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t idx = 0; idx < ncells; ++idx)
      for (std::size_t t = 1; t < grids.size(); ++t)
        if (!grids[t].empty()) total[static_cast<std::size_t>(idx)] += grids[t][static_cast<std::size_t>(idx)];
    return from_grid(*a.field_, total, cols);
  }

  // General path (A_2, or A_1 products too sparse for a grid).
  static WeylElement sparse_product(const WeylElement& a, const WeylElement& b) {
    const int p = a.field_->p();
    const auto up = static_cast<std::uint32_t>(p);
    const auto& table = detail::commutation_table(p);
    auto factor = [&](std::uint32_t j, std::uint32_t i, std::uint32_t k) {
      return table[((j % up) * up + i % up) * up + k];
    };
    WeylElement r(*a.field_, a.n_);
    for (const auto& [ka, ca] : a.terms_) {
      for (const auto& [kb, cb] : b.terms_) {
        const C prod = ca * cb;
        const std::uint32_t k1max = std::min({ka[2], kb[0], up - 1});
        const std::uint32_t k2max = std::min({ka[3], kb[1], up - 1});
        for (std::uint32_t k1 = 0; k1 <= k1max; ++k1) {
          const int t1 = factor(ka[2], kb[0], k1);
          if (t1 == 0) continue;
          for (std::uint32_t k2 = 0; k2 <= k2max; ++k2) {
            const int t2 = factor(ka[3], kb[1], k2);
            if (t2 == 0) continue;
            const WeylKey key{ka[0] + kb[0] - k1, ka[1] + kb[1] - k2, ka[2] + kb[2] - k1, ka[3] + kb[3] - k2};
            r.add_term(key, times_int(prod, t1 * t2 % p));
          }
        }
      }
    }
    return r;
  }

  const FieldSpec* field_;
  int n_;
  term_map terms_;
};

template <class C>
WeylElement<C> commutator(const WeylElement<C>& a, const WeylElement<C>& b) {
  return a * b - b * a;
}

/// Central iff every exponent is divisible by p.
template <class C>
bool is_central_by_support(const WeylElement<C>& a) {
  const auto p = static_cast<std::uint32_t>(a.field().p());
  for (const auto& [k, c] : a.terms())
    for (auto e : k)
      if (e % p != 0) return false;
  return true;
}

/// Central iff a commutes with every generator x_i, d_i.
template <class C>
bool is_central_by_commutators(const WeylElement<C>& a) {
  const auto& f = a.field();
  const int n = a.arity();
  for (int i = 1; i <= n; ++i) {
    if (!commutator(a, WeylElement<C>::x(f, i, n)).is_zero()) return false;
    if (!commutator(a, WeylElement<C>::d(f, i, n)).is_zero()) return false;
  }
  return true;
}

/// Evaluates both centrality criteria; a disagreement is an arithmetic bug
/// and raises std::logic_error.
template <class C>
bool is_central(const WeylElement<C>& a) {
  const bool by_support = is_central_by_support(a);
  if (by_support != is_central_by_commutators(a))
    throw std::logic_error("centrality criteria disagree for " + a.to_string());
  return by_support;
}

/// Coordinates in Z = K[X,Y] of a central element of A_1.
template <class C>
BiPoly<C> to_center(const WeylElement<C>& a) {
  if (a.arity() != 1) throw precondition_error("to_center expects an element of A_1");
  if (!is_central_by_support(a)) throw non_central_error("element is not central: " + a.to_string());
  const auto p = static_cast<std::uint32_t>(a.field().p());
  BiPoly<C> r(a.field());
  for (const auto& [k, c] : a.terms()) r.add_term(Mono2{k[0] / p, k[2] / p}, c);
  return r;
}

/// Both sides of (d + f)^p = d^p + f^{(p-1)} + f^p.
template <class C>
struct PowerIdentity {
  WeylElement<C> brute_force;       // (d + f)^p by repeated multiplication
  WeylElement<C> derivative_form;   // d^p + f^{(p-1)} + f^p
  WeylElement<C> coefficient_form;  // d^p - a_{p-1}(x^p) + f^p
  bool holds() const { return brute_force == derivative_form && brute_force == coefficient_form; }
};

template <class C>
PowerIdentity<C> power_identity(const UniPoly<C>& f, Execution ex = Execution::automatic) {
  using W = WeylElement<C>;
  const auto& field = f.field();
  const auto p = static_cast<std::uint64_t>(field.p());
  const W d = W::d(field);
  const W base = d + W::from_x_poly(f);
  W lhs = W::from_int(field, 1);
  for (std::uint64_t i = 0; i < p; ++i) lhs = W::multiply(lhs, base, ex);
  const W dp = d.pow(p);
  const W fp = W::from_x_poly(f.pow(p));
  W deriv_form = dp + W::from_x_poly(derivative(f, p - 1)) + fp;
  const auto parts = p_decompose(f);
  W coefficient_form = dp - W::from_x_poly(parts[p - 1].stretch(p)) + fp;
  return {std::move(lhs), std::move(deriv_form), std::move(coefficient_form)};
}

/// Brute-force check of (d + f)^p = d^p + d^{p-1}f/dx^{p-1} + f^p together
/// with the equivalent form d^p - a_{p-1}(x^p) + f^p, where a_{p-1} is the
/// last component of p_decompose(f).
template <class C>
bool verify_power_identity(const UniPoly<C>& f, Execution ex = Execution::automatic) {
  const auto parts = p_decompose(f);
  const auto p = static_cast<std::uint64_t>(f.field().p());
  if (!(derivative(f, p - 1) == -parts[p - 1].stretch(p))) return false;
  return power_identity(f, ex).holds();
}

/// (d_i + f)^p = d_i^p + d^{p-1}f/dx_i^{p-1} + f^p in A_2 for f in K[x1,x2].
template <class C>
bool verify_power_identity_a2(const BiPoly<C>& f, int i) {
  using W = WeylElement<C>;
  if (i != 1 && i != 2) throw precondition_error("index must be 1 or 2");
  const auto& field = f.field();
  const auto p = static_cast<std::uint64_t>(field.p());
  const W di = W::d(field, i, 2);
  const W base = di + W::from_x_bipoly(f);
  const W lhs = base.pow(p);
  const W rhs = di.pow(p) + W::from_x_bipoly(f.partial(i == 2, static_cast<std::uint32_t>(p - 1))) +
                W::from_x_bipoly(f.pow(p));
  return lhs == rhs;
}

}  // namespace weylres
