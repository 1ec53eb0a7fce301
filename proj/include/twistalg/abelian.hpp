#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "twistalg/modlinalg.hpp"
#include "twistalg/scalars.hpp"

namespace twistalg {

/// Exponent vector of an element of a FinAbGroup, reduced per factor.
struct AbElement {
  IntVec x;
  friend bool operator==(const AbElement&, const AbElement&) = default;
  friend auto operator<=>(const AbElement&, const AbElement&) = default;
};

/// Linear character given by its exponent vector c: chi(x) = zeta_E^{sum c_j x_j E/d_j}
/// where E is the group exponent.
struct AbCharacter {
  IntVec c;
  friend bool operator==(const AbCharacter&, const AbCharacter&) = default;
  friend auto operator<=>(const AbCharacter&, const AbCharacter&) = default;
};

/// Product of cyclic groups C_{d_1} x ... x C_{d_s}.
///
/// Elements are enumerated lexicographically (last coordinate fastest); the
/// same order is used for the dual group.
class FinAbGroup {
 public:
  FinAbGroup() = default;
  explicit FinAbGroup(IntVec orders);

  const IntVec& orders() const { return orders_; }
  std::size_t rank() const { return orders_.size(); }
  std::int64_t order() const { return size_; }
  std::int64_t exponent() const { return exponent_; }

  AbElement identity() const { return {IntVec(orders_.size(), 0)}; }
  AbElement generator(std::size_t j) const;
  AbElement reduce(IntVec x) const;
  AbElement add(const AbElement& a, const AbElement& b) const;
  AbElement neg(const AbElement& a) const;
  AbElement scale(const AbElement& a, std::int64_t k) const;
  std::int64_t element_order(const AbElement& a) const;

  std::int64_t index(const AbElement& a) const;
  AbElement element(std::int64_t index) const;
  std::vector<AbElement> elements() const;

  RootScalar evaluate(const AbCharacter& chi, const AbElement& x) const;
  AbCharacter char_mul(const AbCharacter& a, const AbCharacter& b) const;
  AbCharacter char_inv(const AbCharacter& a) const;
  AbCharacter trivial_character() const { return {IntVec(orders_.size(), 0)}; }
  /// Character with prescribed values on the generators; each value must lie
  /// in mu_{d_j}.
  AbCharacter character_from_generator_values(const std::vector<RootScalar>& values) const;
  std::int64_t character_order(const AbCharacter& a) const;

 private:
  IntVec orders_;
  std::int64_t size_ = 1;
  std::int64_t exponent_ = 1;
};

/// All |G| characters in lexicographic order.
std::vector<AbCharacter> dual_group(const FinAbGroup& g);

/// Lambda^2 of G: one factor C_{gcd(d_j,d_l)} per pair j < l, labels "a_j^a_l".
struct ExteriorSquare {
  FinAbGroup group;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::string> labels;
};
ExteriorSquare exterior_square(const FinAbGroup& l);

/// A subgroup S <= G given by a direct-sum basis b_k of orders o_k.
struct SubgroupBasis {
  std::vector<AbElement> basis;
  IntVec orders;
  std::int64_t order() const;
};

/// Cyclic decomposition of the subgroup generated by `gens`.
SubgroupBasis subgroup_basis(const FinAbGroup& g, const std::vector<AbElement>& gens);

/// Enumerates the subgroup generated by `gens` (sorted by index).
std::vector<AbElement> subgroup_elements(const FinAbGroup& g, const std::vector<AbElement>& gens);

/// Lexicographically least character of G whose value on each gens[k] is
/// values[k]. Throws NoExtension when the prescribed values are inconsistent.
AbCharacter solve_character_extension(const FinAbGroup& g, const std::vector<AbElement>& gens,
                                      const std::vector<RootScalar>& values);

// ---------------------------------------------------------------------------
// P and the action of L on it.

struct HomocyclicComponent {
  int n = 1;     // exponent p^n
  int rank = 1;  // number of cyclic factors
};

/// P = product of homocyclic components (Z/p^{n_c})^{r_c}, n_c non-increasing.
class PGroupData {
 public:
  PGroupData() = default;
  PGroupData(std::int64_t p, std::vector<HomocyclicComponent> components);

  std::int64_t p() const { return p_; }
  const std::vector<HomocyclicComponent>& components() const { return components_; }
  /// Frattini rank r.
  int frattini_rank() const { return static_cast<int>(coord_component_.size()); }
  std::int64_t order() const { return group_.order(); }
  /// P as an abstract product of cyclic groups, one coordinate per factor.
  const FinAbGroup& group() const { return group_; }
  int component_of(int coord) const { return coord_component_[coord]; }
  int offset(int component) const { return offsets_[component]; }
  std::int64_t modulus(int component) const;

 private:
  std::int64_t p_ = 2;
  std::vector<HomocyclicComponent> components_;
  FinAbGroup group_;
  std::vector<int> coord_component_;
  std::vector<int> offsets_;
};

/// Per L-generator, per component: an invertible matrix mod p^{n_c}.
/// Matrices act on column vectors of component coordinates.
class LAction {
 public:
  LAction() = default;
  /// Validates commutation, invertibility, orders and faithfulness; throws
  /// InvalidAction otherwise.
  LAction(const PGroupData& p, const FinAbGroup& l, std::vector<std::vector<IntMat>> matrices);

  const std::vector<std::vector<IntMat>>& matrices() const { return mats_; }
  /// Block matrices of an arbitrary y in L, per component.
  const std::vector<IntMat>& of(const AbElement& y) const { return cache_[l_.index(y)]; }
  /// y . x for x in P.
  AbElement act(const AbElement& y, const AbElement& x) const;
  const FinAbGroup& l() const { return l_; }
  const PGroupData& p_group() const { return p_; }

 private:
  PGroupData p_;
  FinAbGroup l_;
  std::vector<std::vector<IntMat>> mats_;
  std::vector<std::vector<IntMat>> cache_;  // indexed by element of L
};

IntMat mat_mul_mod(const IntMat& a, const IntMat& b, std::int64_t n);
IntMat mat_identity(std::size_t n);
IntMat mat_pow_mod(const IntMat& a, std::int64_t k, std::int64_t n);

/// Per generator, the block-diagonal reduction mod p of its action (r x r).
std::vector<IntMat> action_on_frattini(const PGroupData& p, const LAction& act);

}  // namespace twistalg
