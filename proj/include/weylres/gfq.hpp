#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "weylres/error.hpp"

namespace weylres {

/// The finite field F_{p^n} = F_p[g]/(modulus).
///
/// Specs are interned: `FieldSpec::get` hands out a reference that stays
/// valid for the life of the process, and two elements belong to the same
/// field exactly when their spec pointers are equal. Supported range is
/// 2 <= p <= 13 and 1 <= n <= 4.
class FieldSpec {
 public:
  static constexpr int max_prime = 13;
  static constexpr int max_degree = 4;

  /// `modulus` lists the n+1 coefficients of a monic polynomial in g,
  /// ascending. Throws precondition_error unless p is a supported prime and
  /// the modulus is monic, of degree n and irreducible over F_p.
  static const FieldSpec& get(int p, int n, const std::vector<int>& modulus);
  static const FieldSpec& prime(int p);
  /// F_{p^n} with the first monic irreducible modulus in the order
  /// enumerated by `default_modulus`.
  static const FieldSpec& extension(int p, int n);
  /// Smallest monic irreducible of degree n, comparing coefficient vectors
  /// from the constant term upward.
  static std::vector<int> default_modulus(int p, int n);

  int p() const noexcept { return p_; }
  int n() const noexcept { return n_; }
  /// Field size p^n.
  std::uint64_t order() const noexcept { return order_; }
  const std::vector<int>& modulus() const noexcept { return modulus_; }
  bool is_prime_field() const noexcept { return n_ == 1; }

  /// Canonical text: "p=3" or "p=2,n=2,mod=g^2+g+1".
  std::string to_string() const;

  FieldSpec(const FieldSpec&) = delete;
  FieldSpec& operator=(const FieldSpec&) = delete;

 private:
  FieldSpec(int p, int n, std::vector<int> modulus);
  friend struct FieldRegistry;

  int p_;
  int n_;
  std::uint64_t order_;
  std::vector<int> modulus_;
};

bool is_prime(int v) noexcept;
/// Brute-force irreducibility over F_p for degree <= 4 (trial division by
/// every monic polynomial of degree <= deg/2).
bool is_irreducible(int p, const std::vector<int>& poly);

/// An element of F_{p^n} in the polynomial basis 1, g, ..., g^{n-1}.
class FieldElement {
 public:
  using digits = std::array<std::uint8_t, FieldSpec::max_degree>;

  static FieldElement zero(const FieldSpec& f) { return FieldElement(f); }
  static FieldElement one(const FieldSpec& f) { return from_int(f, 1); }
  static FieldElement from_int(const FieldSpec& f, long long v);
  /// The class of g. Prime fields have no generator symbol and throw
  /// precondition_error.
  static FieldElement generator(const FieldSpec& f);
  /// `coeffs` ascending in g, each reduced mod p; at most n entries.
  static FieldElement from_coeffs(const FieldSpec& f, const std::vector<long long>& coeffs);
  /// The element whose base-p digits (constant term least significant)
  /// spell `index`, for enumeration.
  static FieldElement from_index(const FieldSpec& f, std::uint64_t index);

  explicit FieldElement(const FieldSpec& f) : spec_(&f) {}

  const FieldSpec& field() const noexcept { return *spec_; }
  const digits& coeffs() const noexcept { return c_; }
  std::uint64_t index() const noexcept;

  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  /// True when the element lies in the prime subfield.
  bool in_prime_field() const noexcept;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  /// Multiplication by an integer already reduced mod p.
  FieldElement times_small(int k) const;

  FieldElement inverse() const;
  FieldElement pow(std::uint64_t e) const;
  /// a^p.
  FieldElement frobenius() const;
  /// The unique b with b^p = a, computed as a^{p^{n-1}}.
  FieldElement inv_frobenius() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
    return a.spec_ == b.spec_ && a.c_ == b.c_;
  }

  /// Ascending powers of g ("1+2*g", "g^2"); prime-field elements print as
  /// bare integers in [0, p).
  std::string to_string() const;

 private:
  void check_same(const FieldElement& o) const;

  const FieldSpec* spec_;
  digits c_{};
};

/// Convenience for the prime field.
inline FieldElement fp(const FieldSpec& f, long long v) { return FieldElement::from_int(f, v); }

}  // namespace weylres
