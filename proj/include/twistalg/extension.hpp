#pragma once

#include <cstdint>
#include <vector>

#include "twistalg/abelian.hpp"
#include "twistalg/cocycles.hpp"
#include "twistalg/cyclotomic.hpp"

namespace twistalg {

/// Element (z, x) of H: z mod m, x in L.
struct HElement {
  std::int64_t z = 0;
  AbElement x;
  friend bool operator==(const HElement&, const HElement&) = default;
};

/// Central extension 1 -> Z = mu_m -> H -> L -> 1 defined by the standard
/// cocycle of an alternating form, with (z1,x1)(z2,x2) = (z1+z2+log alpha(x1,x2), x1x2).
///
/// Elements are enumerated with the L-index major and z minor.
class ExtGroup {
 public:
  ExtGroup() = default;
  ExtGroup(FinAbGroup l, AlternatingForm tau);

  const FinAbGroup& l() const { return l_; }
  const AlternatingForm& form() const { return tau_; }
  const Cocycle2& cocycle() const { return alpha_; }
  /// Order of Z.
  std::int64_t m() const { return m_; }
  std::int64_t order() const { return m_ * l_.order(); }
  /// Whether the form values generate mu_m, i.e. [H, H] = Z.
  bool commutator_is_z() const { return commutator_is_z_; }

  HElement mul(const HElement& a, const HElement& b) const;
  HElement inv(const HElement& a) const;
  HElement pow(const HElement& a, std::int64_t k) const;
  /// g h g^{-1} h^{-1}.
  HElement commutator(const HElement& g, const HElement& h) const;
  HElement identity() const { return {0, l_.identity()}; }
  HElement lift(const AbElement& x) const { return {0, x}; }
  HElement central(std::int64_t z) const { return {mod(z, m_), l_.identity()}; }

  std::int64_t index(const HElement& h) const { return l_.index(h.x) * m_ + h.z; }
  HElement element(std::int64_t i) const { return {i % m_, l_.element(i / m_)}; }
  std::vector<HElement> elements() const;

  /// The faithful character chi of Z with chi(1) = zeta_m.
  RootScalar chi(std::int64_t z) const { return {m_, z}; }

  /// Radical of the form; Z(H) is its full preimage.
  const SubgroupBasis& radical() const { return rad_; }
  const std::vector<AbElement>& radical_elements() const { return rad_elems_; }
  bool in_radical(const AbElement& x) const { return in_rad_[l_.index(x)]; }
  bool is_central(const HElement& h) const { return in_radical(h.x); }
  std::vector<HElement> center() const;
  /// sqrt(|H : Z(H)|).
  std::int64_t degree() const { return degree_; }

  /// rho(g): h -> chi([g, h]), as a character of L = H/Z.
  AbCharacter rho(const HElement& g) const;

  /// z with (0, r_k)^{e_k} = (c_k, 0) for the radical basis r_k.
  const IntVec& radical_power_offsets() const { return c_; }
  /// Coordinates a of x in the radical basis and the offset c' with
  /// prod (0, r_k)^{a_k} = (c', x).
  const IntVec& radical_coords(const AbElement& x) const { return rad_coords_[l_.index(x)]; }
  std::int64_t radical_offset(const AbElement& x) const { return rad_offset_[l_.index(x)]; }

 private:
  FinAbGroup l_;
  AlternatingForm tau_;
  Cocycle2 alpha_;
  std::int64_t m_ = 1;
  bool commutator_is_z_ = true;
  SubgroupBasis rad_;
  std::vector<AbElement> rad_elems_;
  std::vector<bool> in_rad_;
  IntVec c_;
  std::vector<IntVec> rad_coords_;
  std::vector<std::int64_t> rad_offset_;
  std::int64_t degree_ = 1;
};

/// A character phi of Z(H) over chi, indexed by j in prod [0, e_k):
/// phi_j(0, r_k) = zeta_{m e_k}^{c_k + m j_k}.
struct PhiIndex {
  IntVec j;
  friend bool operator==(const PhiIndex&, const PhiIndex&) = default;
  friend auto operator<=>(const PhiIndex&, const PhiIndex&) = default;
};

class PhiFamily {
 public:
  PhiFamily() = default;
  explicit PhiFamily(const ExtGroup& h);

  const std::vector<PhiIndex>& members() const { return phis_; }
  std::size_t size() const { return phis_.size(); }
  std::size_t position(const PhiIndex& phi) const;

  /// phi(h) for central h; throws ZNotCentral otherwise.
  RootScalar value(const PhiIndex& phi, const HElement& h) const;
  /// Extension xi_phi of phi phi_0^{-1} to H, trivial on Z, as a character of L.
  const AbCharacter& xi(const PhiIndex& phi) const { return xi_[position(phi)]; }
  RootScalar xi_value(const PhiIndex& phi, const HElement& h) const;
  /// phi * (psi restricted to Z(H)) for a character psi of L.
  PhiIndex shift(const PhiIndex& phi, const AbCharacter& psi) const;
  /// Orders of all values taken by characters in the family.
  std::int64_t value_order() const;

 private:
  ExtGroup h_;
  std::vector<PhiIndex> phis_;
  std::vector<AbCharacter> xi_;
};

/// Maximal abelian subgroup A = preimage of a greedily chosen maximal
/// isotropic subgroup I of L containing the radical.
struct MaxAbelian {
  std::vector<AbElement> isotropic;  // elements of I
  std::vector<HElement> elements;
};
MaxAbelian max_abelian_subgroup(const ExtGroup& h);

/// A class function of H stored as one cyclotomic value per element index.
using ClassFunction = std::vector<Cyclotomic>;

/// tau_phi = psi induced from A, psi any linear extension of phi.
ClassFunction induced_irreducible(const ExtGroup& h, const PhiFamily& fam, const PhiIndex& phi);
/// <f, g> * |H| as an exact integer; throws if it is not rational.
std::int64_t inner_product_times_order(const ExtGroup& h, const ClassFunction& f, const ClassFunction& g);
/// Conductor used for class-function values.
std::int64_t class_function_conductor(const ExtGroup& h, const PhiFamily& fam);

/// Checks tau_{eta|Z(H) phi} = eta tau_phi and that eta tau_phi = tau_phi iff
/// eta is trivial on Z(H).
bool verify_class2_action(const ExtGroup& h, const PhiFamily& fam, const AbCharacter& eta, const PhiIndex& phi);

}  // namespace twistalg
