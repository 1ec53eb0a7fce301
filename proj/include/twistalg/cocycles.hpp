#pragma once

#include <cstdint>
#include <vector>

#include "twistalg/abelian.hpp"
#include "twistalg/scalars.hpp"

namespace twistalg {

/// Alternating bicharacter on L, stored by its values t_{jl} (j < l) on
/// generator pairs in exterior_square order.
class AlternatingForm {
 public:
  AlternatingForm() = default;
  /// Throws BadFormOrder unless every t_{jl} has order dividing gcd(d_j, d_l).
  AlternatingForm(FinAbGroup l, std::vector<RootScalar> values);
  static AlternatingForm trivial(const FinAbGroup& l);

  const FinAbGroup& l() const { return l_; }
  const std::vector<RootScalar>& values() const { return t_; }
  /// t_{jl} for arbitrary j, l (t_{lj} = t_{jl}^{-1}, t_{jj} = 1).
  RootScalar t(std::size_t j, std::size_t l) const;
  /// tau(x ^ y).
  RootScalar evaluate(const AbElement& x, const AbElement& y) const;
  /// tau(y ^ .) as a character of L.
  AbCharacter pairing(const AbElement& y) const;
  /// lcm of the orders of the t_{jl}.
  std::int64_t value_order() const;
  bool is_trivial() const;

  friend bool operator==(const AlternatingForm& a, const AlternatingForm& b) { return a.t_ == b.t_; }

 private:
  FinAbGroup l_;
  std::vector<RootScalar> t_;
};

/// A normalized 2-cocycle L x L -> mu_N stored as a table of exponents.
class Cocycle2 {
 public:
  Cocycle2() = default;
  Cocycle2(FinAbGroup l, std::int64_t order, std::vector<std::int64_t> exponents);
  static Cocycle2 trivial(const FinAbGroup& l);

  const FinAbGroup& l() const { return l_; }
  std::int64_t order() const { return n_; }
  /// log_{zeta_N} alpha(x, y).
  std::int64_t exponent(std::int64_t x, std::int64_t y) const { return e_[x * l_.order() + y]; }
  RootScalar value(const AbElement& x, const AbElement& y) const {
    return {n_, exponent(l_.index(x), l_.index(y))};
  }
  /// Same cocycle with every exponent re-expressed over mu_n (N | n required).
  Cocycle2 with_order(std::int64_t n) const;
  Cocycle2 operator*(const Cocycle2& other) const;
  Cocycle2 inverse() const;

  bool satisfies_cocycle_identity() const;
  bool is_normalized() const;

  friend bool operator==(const Cocycle2& a, const Cocycle2& b);

 private:
  FinAbGroup l_;
  std::int64_t n_ = 1;
  std::vector<std::int64_t> e_;
};

/// An automorphism of L given by the images of the generators.
class LAutomorphism {
 public:
  /// Throws NotAnAutomorphism when the images do not define a bijective
  /// homomorphism.
  LAutomorphism(const FinAbGroup& l, std::vector<AbElement> images);
  /// x -> x^k; requires gcd(k, exp L) = 1.
  static LAutomorphism power(const FinAbGroup& l, std::int64_t k);

  AbElement apply(const AbElement& x) const;
  AbElement apply_inverse(const AbElement& x) const { return inverse_[l_.index(x)]; }

 private:
  FinAbGroup l_;
  std::vector<AbElement> images_;
  std::vector<AbElement> inverse_;
};

AlternatingForm form_from_cocycle(const Cocycle2& alpha);
/// Standard representative alpha(x, y) = prod_{j > l} t_{jl}^{x_j y_l}.
Cocycle2 cocycle_from_form(const AlternatingForm& tau);

Cocycle2 twist_by_automorphism(const Cocycle2& alpha, const LAutomorphism& phi);
AlternatingForm twist_form(const AlternatingForm& tau, const LAutomorphism& phi);
/// Every value raised to q^{-1} modulo its order. Throws NotInvertible.
Cocycle2 frobenius_twist_class(const Cocycle2& alpha, std::int64_t q);
AlternatingForm frobenius_twist_form(const AlternatingForm& tau, std::int64_t q);

struct AutFrobWitness {
  bool holds = false;
  AlternatingForm twisted;    // form of the x -> x^p twist
  AlternatingForm frobenius;  // form of the p^2 Frobenius twist
};
AutFrobWitness verify_autfrob(const Cocycle2& alpha, std::int64_t p);

/// Coboundary of beta: (d beta)(x, y) = beta(x) beta(y) beta(x + y)^{-1}.
/// `beta` holds exponents over mu_order indexed by element of L.
Cocycle2 coboundary(const FinAbGroup& l, std::int64_t order, const std::vector<std::int64_t>& beta);

struct Cochain1 {
  std::int64_t order = 1;
  std::vector<std::int64_t> exponents;  // indexed by element of L
  RootScalar value(std::int64_t index) const { return {order, exponents[index]}; }
};

/// beta with d beta = alpha1 / alpha2. Throws NotCohomologous.
Cochain1 solve_coboundary(const Cocycle2& alpha1, const Cocycle2& alpha2);

}  // namespace twistalg
