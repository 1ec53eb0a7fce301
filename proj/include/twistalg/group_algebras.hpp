#pragma once

#include <vector>

#include "twistalg/abelian.hpp"
#include "twistalg/algebra.hpp"
#include "twistalg/extension.hpp"

namespace twistalg {

/// Eigenbasis w_1..w_r of an L-invariant complement W of J^2(kP) in J(kP).
struct EigenBasisW {
  std::vector<FVec> w;              // coordinates in the group basis of kP
  std::vector<AbCharacter> psi;     // y w_i y^{-1} = psi_i(y) w_i
  std::vector<int> component;       // homocyclic component containing w_i
  std::vector<int> n;               // w_i^{p^{n_i}} = 0
  std::vector<FVec> frattini;       // image of w_i in J/J^2 (length r)
};

struct KPData {
  StructAlgebra algebra;
  EigenBasisW w;
};

/// kP on the group-element basis (P enumerated lexicographically) and its
/// eigenbasis W. Throws EigenvaluesNotInField when the field is too small.
KPData build_kP(const LAction& act, const FieldSpec& f);

/// Value of a character of L embedded in the field.
FieldElement embed_character(const FieldSpec& f, const FinAbGroup& l, const AbCharacter& chi, const AbElement& y);

/// The cut algebra k(P x| H)e on the basis [x, y] = x (0, y) e, indexed
/// x-major: index = index_P(x) |L| + index_L(y).
class TwistedAlgebra {
 public:
  TwistedAlgebra(const LAction& act, const ExtGroup& h, const FieldSpec& f);

  const StructAlgebra& algebra() const { return alg_; }
  const FieldSpec& field() const { return alg_.field(); }
  const ExtGroup& ext() const { return h_; }
  const LAction& action() const { return act_; }
  std::size_t index(const AbElement& x, const AbElement& y) const;

  /// Image of a kP element (group-basis coordinates).
  FVec from_p(const FVec& kp) const;
  /// Image of h = (z, y): chi(z) [0, y].
  FVec from_h(const HElement& h) const;
  /// Image of the group element (x, h) of P x| H.
  FVec from_group(const AbElement& x, const HElement& h) const;
  /// e_phi = |Z(H)|^{-1} sum_{h in Z(H)} phi(h^{-1}) h.
  FVec e_phi(const PhiFamily& fam, const PhiIndex& phi) const;

 private:
  LAction act_;
  ExtGroup h_;
  StructAlgebra alg_;
};

/// The span M of {sum_phi xi_phi(h)^{-1} e_phi h : h = (0, y), y in L}.
struct MatSubalgebra {
  EchelonBasis span;
  std::vector<FVec> elements;  // M_h for h = (0, y), y in L order
};

/// Builds M and checks closure, dimension |H : Z(H)| and that it contains e.
/// Throws DimensionMismatch otherwise.
MatSubalgebra build_mat_subalgebra(const TwistedAlgebra& a, const PhiFamily& fam);

}  // namespace twistalg
