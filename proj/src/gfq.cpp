#include "weylres/gfq.hpp"

#include <algorithm>
#include <deque>
#include <memory>
#include <mutex>
#include <tuple>

namespace weylres {

bool is_prime(int v) noexcept {
  if (v < 2) return false;
  for (int d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

namespace {

int mod(long long v, int p) {
  long long r = v % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

// Remainder of `a` modulo the monic `b` over F_p, coefficients ascending.
std::vector<int> poly_rem(std::vector<int> a, const std::vector<int>& b, int p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const int lead = a.back();
    if (lead != 0) {
      const std::size_t shift = a.size() - 1 - db;
      for (std::size_t i = 0; i <= db; ++i)
        a[shift + i] = mod(a[shift + i] - static_cast<long long>(lead) * b[i], p);
    }
    a.pop_back();
  }
  return a;
}

}  // namespace

bool is_irreducible(int p, const std::vector<int>& poly) {
  const int deg = static_cast<int>(poly.size()) - 1;
  if (deg < 1) return false;
  if (deg == 1) return true;
  // Enumerate monic divisors of degree 1..deg/2.
  for (int d = 1; d <= deg / 2; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long idx = 0; idx < count; ++idx) {
      std::vector<int> div(d + 1, 0);
      long long v = idx;
      for (int i = 0; i < d; ++i) {
        div[i] = static_cast<int>(v % p);
        v /= p;
      }
      div[d] = 1;
      auto r = poly_rem(poly, div, p);
      if (std::all_of(r.begin(), r.end(), [](int c) { return c == 0; })) return false;
    }
  }
  return true;
}

FieldSpec::FieldSpec(int p, int n, std::vector<int> modulus)
    : p_(p), n_(n), order_(1), modulus_(std::move(modulus)) {
  for (int i = 0; i < n; ++i) order_ *= static_cast<std::uint64_t>(p);
}

struct FieldRegistry {
  std::mutex mu;
  std::deque<std::unique_ptr<FieldSpec>> specs;

  const FieldSpec& intern(int p, int n, std::vector<int> modulus) {
    std::lock_guard lock(mu);
    for (const auto& s : specs)
      if (s->p_ == p && s->n_ == n && s->modulus_ == modulus) return *s;
    specs.push_back(std::unique_ptr<FieldSpec>(new FieldSpec(p, n, std::move(modulus))));
    return *specs.back();
  }

  static FieldRegistry& instance() {
    static FieldRegistry r;
    return r;
  }
};

const FieldSpec& FieldSpec::get(int p, int n, const std::vector<int>& modulus) {
  if (!is_prime(p) || p > max_prime)
    throw precondition_error("unsupported characteristic " + std::to_string(p) +
                             " (need a prime 2 <= p <= 13)");
  if (n < 1 || n > max_degree)
    throw precondition_error("unsupported extension degree " + std::to_string(n) +
                             " (need 1 <= n <= 4)");
  std::vector<int> m;
  m.reserve(modulus.size());
  for (int c : modulus) m.push_back(mod(c, p));
  while (!m.empty() && m.back() == 0) m.pop_back();
  if (static_cast<int>(m.size()) != n + 1)
    throw precondition_error("modulus must have degree " + std::to_string(n));
  if (m.back() != 1) throw precondition_error("modulus must be monic");
  if (!is_irreducible(p, m)) throw precondition_error("modulus is reducible over F_" + std::to_string(p));
  return FieldRegistry::instance().intern(p, n, std::move(m));
}

const FieldSpec& FieldSpec::prime(int p) { return get(p, 1, {0, 1}); }

std::vector<int> FieldSpec::default_modulus(int p, int n) {
  if (!is_prime(p) || p > max_prime || n < 1 || n > max_degree)
    throw precondition_error("unsupported field p=" + std::to_string(p) + ",n=" + std::to_string(n));
  if (n == 1) return {0, 1};
  long long count = 1;
  for (int i = 0; i < n; ++i) count *= p;
  for (long long idx = 0; idx < count; ++idx) {
    std::vector<int> m(n + 1, 0);
    long long v = idx;
    for (int i = 0; i < n; ++i) {
      m[i] = static_cast<int>(v % p);
      v /= p;
    }
    m[n] = 1;
    if (is_irreducible(p, m)) return m;
  }
  throw precondition_error("no irreducible modulus found");  // unreachable for finite fields
}

const FieldSpec& FieldSpec::extension(int p, int n) { return get(p, n, default_modulus(p, n)); }

std::string FieldSpec::to_string() const {
  std::string s = "p=" + std::to_string(p_);
  if (n_ == 1) return s;
  s += ",n=" + std::to_string(n_) + ",mod=";
  bool first = true;
  for (int e = n_; e >= 0; --e) {
    const int c = modulus_[e];
    if (c == 0) continue;
    if (!first) s += '+';
    first = false;
    if (e == 0) {
      s += std::to_string(c);
    } else {
      if (c != 1) s += std::to_string(c) + "*";
      s += "g";
      if (e > 1) s += "^" + std::to_string(e);
    }
  }
  return s;
}

FieldElement FieldElement::from_int(const FieldSpec& f, long long v) {
  FieldElement r(f);
  r.c_[0] = static_cast<std::uint8_t>(mod(v, f.p()));
  return r;
}

FieldElement FieldElement::generator(const FieldSpec& f) {
  if (f.is_prime_field()) throw precondition_error("symbol 'g' is not valid in a prime field");
  FieldElement r(f);
  r.c_[1] = 1;
  return r;
}

FieldElement FieldElement::from_coeffs(const FieldSpec& f, const std::vector<long long>& coeffs) {
  if (static_cast<int>(coeffs.size()) > f.n())
    throw precondition_error("too many coefficients for F_" + std::to_string(f.order()));
  FieldElement r(f);
  for (std::size_t i = 0; i < coeffs.size(); ++i) r.c_[i] = static_cast<std::uint8_t>(mod(coeffs[i], f.p()));
  return r;
}

FieldElement FieldElement::from_index(const FieldSpec& f, std::uint64_t index) {
  FieldElement r(f);
  for (int i = 0; i < f.n(); ++i) {
    r.c_[i] = static_cast<std::uint8_t>(index % static_cast<std::uint64_t>(f.p()));
    index /= static_cast<std::uint64_t>(f.p());
  }
  return r;
}

std::uint64_t FieldElement::index() const noexcept {
  std::uint64_t v = 0;
  for (int i = spec_->n() - 1; i >= 0; --i) v = v * static_cast<std::uint64_t>(spec_->p()) + c_[i];
  return v;
}

bool FieldElement::is_zero() const noexcept {
  return std::all_of(c_.begin(), c_.end(), [](std::uint8_t c) { return c == 0; });
}

bool FieldElement::is_one() const noexcept {
  return c_[0] == 1 && std::all_of(c_.begin() + 1, c_.end(), [](std::uint8_t c) { return c == 0; });
}

bool FieldElement::in_prime_field() const noexcept {
  return std::all_of(c_.begin() + 1, c_.end(), [](std::uint8_t c) { return c == 0; });
}

void FieldElement::check_same(const FieldElement& o) const {
  if (spec_ != o.spec_)
    throw mismatch_error("field mismatch: " + spec_->to_string() + " vs " + o.spec_->to_string());
}

FieldElement FieldElement::operator-() const {
  FieldElement r(*spec_);
  const int p = spec_->p();
  for (int i = 0; i < spec_->n(); ++i) r.c_[i] = static_cast<std::uint8_t>(c_[i] == 0 ? 0 : p - c_[i]);
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  check_same(o);
  const int p = spec_->p();
  for (int i = 0; i < spec_->n(); ++i) {
    int v = c_[i] + o.c_[i];
    c_[i] = static_cast<std::uint8_t>(v >= p ? v - p : v);
  }
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  check_same(o);
  const int p = spec_->p();
  for (int i = 0; i < spec_->n(); ++i) {
    int v = c_[i] - o.c_[i];
    c_[i] = static_cast<std::uint8_t>(v < 0 ? v + p : v);
  }
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  check_same(o);
  const int p = spec_->p();
  const int n = spec_->n();
  if (n == 1) {
    c_[0] = static_cast<std::uint8_t>((c_[0] * o.c_[0]) % p);
    return *this;
  }
  std::array<int, 2 * FieldSpec::max_degree - 1> prod{};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) prod[i + j] += c_[i] * o.c_[j];
  for (auto& v : prod) v %= p;
  // g^n = -(m_0 + m_1 g + ... + m_{n-1} g^{n-1})
  const auto& m = spec_->modulus();
  for (int k = 2 * n - 2; k >= n; --k) {
    const int lead = prod[k];
    if (lead == 0) continue;
    prod[k] = 0;
    for (int i = 0; i < n; ++i) prod[k - n + i] = mod(prod[k - n + i] - lead * m[i], p);
  }
  for (int i = 0; i < n; ++i) c_[i] = static_cast<std::uint8_t>(prod[i]);
  return *this;
}

FieldElement FieldElement::times_small(int k) const {
  FieldElement r(*spec_);
  const int p = spec_->p();
  for (int i = 0; i < spec_->n(); ++i) r.c_[i] = static_cast<std::uint8_t>((c_[i] * k) % p);
  return r;
}

FieldElement FieldElement::pow(std::uint64_t e) const {
  FieldElement result = one(*spec_);
  FieldElement base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    base *= base;
    e >>= 1U;
  }
  return result;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw division_by_zero_error();
  return pow(spec_->order() - 2);
}

FieldElement FieldElement::frobenius() const { return pow(static_cast<std::uint64_t>(spec_->p())); }

FieldElement FieldElement::inv_frobenius() const {
  FieldElement r = *this;
  for (int i = 1; i < spec_->n(); ++i) r = r.frobenius();
  return r;
}

std::string FieldElement::to_string() const {
  std::string s;
  for (int i = 0; i < spec_->n(); ++i) {
    const int c = c_[i];
    if (c == 0) continue;
    if (!s.empty()) s += '+';
    if (i == 0) {
      s += std::to_string(c);
      continue;
    }
    if (c != 1) s += std::to_string(c) + "*";
    s += 'g';
    if (i > 1) s += '^' + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

}  // namespace weylres
