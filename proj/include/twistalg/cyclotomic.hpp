#pragma once

#include <cstdint>
#include <vector>

#include "twistalg/scalars.hpp"

namespace twistalg {

/// Element of Z[zeta_N] as an integer combination of zeta_N^0 .. zeta_N^{N-1}.
///
/// The representation is not unique; equality reduces both sides modulo the
/// N-th cyclotomic polynomial.
class Cyclotomic {
 public:
  Cyclotomic() = default;
  explicit Cyclotomic(std::int64_t n) : c_(static_cast<std::size_t>(n), 0) {}
  static Cyclotomic root(std::int64_t n, std::int64_t k);
  static Cyclotomic integer(std::int64_t n, std::int64_t v);

  std::int64_t conductor() const { return static_cast<std::int64_t>(c_.size()); }
  const std::vector<std::int64_t>& coefficients() const { return c_; }

  void add_root(std::int64_t k, std::int64_t times = 1);
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic operator*(const Cyclotomic& o) const;
  /// Complex conjugate: zeta^k -> zeta^{-k}.
  Cyclotomic conj() const;

  /// Coefficients modulo Phi_N, length phi(N).
  std::vector<std::int64_t> reduced() const;
  bool is_zero() const;
  /// The rational integer this element equals, if it is one.
  bool is_integer(std::int64_t* value) const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

 private:
  std::vector<std::int64_t> c_;
};

/// Integer coefficients of Phi_n, lowest degree first.
std::vector<std::int64_t> cyclotomic_polynomial(std::int64_t n);

}  // namespace twistalg
