#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <vector>

namespace twistalg {

std::int64_t mod(std::int64_t a, std::int64_t n);
std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);
/// Inverse of a modulo n; nullopt when gcd(a, n) != 1.
std::optional<std::int64_t> inverse_mod(std::int64_t a, std::int64_t n);
std::int64_t pow_mod(std::int64_t base, std::uint64_t exp, std::int64_t n);
bool is_prime(std::int64_t n);
std::vector<std::int64_t> prime_factors(std::int64_t n);
/// Multiplicative order of a modulo n (requires gcd(a, n) = 1).
std::int64_t multiplicative_order(std::int64_t a, std::int64_t n);

/// A root of unity zeta_order^exponent, carried exactly.
///
/// `order` is the carrier order; the true multiplicative order divides it.
/// Two scalars compare equal when they denote the same complex root.
class RootScalar {
 public:
  RootScalar() = default;
  RootScalar(std::int64_t order, std::int64_t exponent);

  static RootScalar one() { return {}; }

  std::int64_t order() const { return order_; }
  std::int64_t exponent() const { return exponent_; }
  std::int64_t true_order() const;

  /// Same root with the smallest carrier order.
  RootScalar reduced() const;
  /// Same root re-expressed with carrier `n`; requires true_order() | n.
  RootScalar with_order(std::int64_t n) const;

  RootScalar inverse() const { return {order_, -exponent_}; }
  RootScalar pow(std::int64_t k) const;
  bool is_one() const { return exponent_ == 0; }

  friend RootScalar operator*(const RootScalar& a, const RootScalar& b);
  friend bool operator==(const RootScalar& a, const RootScalar& b);

 private:
  std::int64_t order_ = 1;
  std::int64_t exponent_ = 0;
};

/// mu -> mu^{1/q}: exponent times q^{-1} mod order. Throws NotInvertible.
RootScalar frobenius_inverse_power(const RootScalar& z, std::int64_t q);

struct FieldElement {
  std::uint32_t code = 0;
  friend bool operator==(FieldElement, FieldElement) = default;
  friend auto operator<=>(FieldElement, FieldElement) = default;
};

/// F_{p^e} with elements encoded as sum c_i p^i over the polynomial basis
/// 1, x, ..., x^{e-1} modulo a fixed monic irreducible polynomial.
///
/// Tables are built once and shared; copies are cheap and immutable.
class FieldSpec {
 public:
  /// Builds F_{p^e} with the lexicographically least irreducible modulus and
  /// the least primitive element as generator.
  FieldSpec(std::int64_t p, int e);

  std::int64_t characteristic() const { return t_->p; }
  int degree() const { return t_->e; }
  std::int64_t size() const { return t_->q; }
  /// Coefficients c_0..c_{e-1} of x^e + sum c_i x^i.
  const std::vector<std::int64_t>& modulus() const { return t_->modulus; }
  FieldElement generator() const { return t_->exp[1]; }
  std::vector<std::int64_t> coordinates(FieldElement a) const;
  FieldElement from_coordinates(const std::vector<std::int64_t>& c) const;

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }
  FieldElement from_int(std::int64_t n) const { return {static_cast<std::uint32_t>(mod(n, t_->p))}; }

  FieldElement add(FieldElement a, FieldElement b) const {
    if (t_->p == 2) return {a.code ^ b.code};
    if (!t_->add.empty()) return {t_->add[a.code * t_->q + b.code]};
    return add_slow(a, b);
  }
  FieldElement neg(FieldElement a) const { return {t_->neg[a.code]}; }
  FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }
  FieldElement mul(FieldElement a, FieldElement b) const {
    if (a.code == 0 || b.code == 0) return {0};
    return t_->exp[t_->log[a.code] + t_->log[b.code]];
  }
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
  FieldElement pow(FieldElement a, std::int64_t k) const;
  /// lambda -> lambda^p.
  FieldElement frobenius(FieldElement a) const { return pow(a, t_->p); }

  /// generator^((q-1)/n * k) for zeta_n^k. Throws OrderNotSupported.
  FieldElement embed(const RootScalar& z) const;
  bool supports_order(std::int64_t n) const { return n > 0 && (t_->q - 1) % n == 0; }
  /// Discrete logarithm to base generator; a must be nonzero.
  std::int64_t log(FieldElement a) const { return t_->log[a.code]; }

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.t_->p == b.t_->p && a.t_->e == b.t_->e;
  }

 private:
  struct Tables {
    std::int64_t p = 0;
    int e = 0;
    std::int64_t q = 0;
    std::vector<std::int64_t> modulus;
    std::vector<FieldElement> exp;  // length 2(q-1), wraps
    std::vector<std::int64_t> log;  // log[0] unused
    std::vector<std::uint32_t> add;  // q*q table when q is small
    std::vector<std::uint32_t> neg;
  };
  FieldElement add_slow(FieldElement a, FieldElement b) const;

  std::shared_ptr<const Tables> t_;
};

/// Smallest F_{p^e} containing the n-th roots of unity for every n in
/// `orders`. Throws CompositeCharacteristic / OrderDivisibleByP.
FieldSpec field_make(std::int64_t p, const std::set<std::int64_t>& orders);

}  // namespace twistalg
