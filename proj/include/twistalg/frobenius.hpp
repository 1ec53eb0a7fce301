#pragma once

#include <cstdint>
#include <vector>

#include "twistalg/group_algebras.hpp"
#include "twistalg/instance.hpp"
#include "twistalg/quiver.hpp"

namespace twistalg {

/// Per component, an invertible tau mod p^n with tau M_y = M_y^p tau for
/// every L-generator. Throws NoInvertibleSolution.
std::vector<IntMat> solve_tau(const LAction& act, std::uint64_t seed);

/// The automorphism (x, y) -> (tau x, y^p) of P x| L.
class SemidirectAutomorphism {
 public:
  SemidirectAutomorphism(const LAction& act, std::vector<IntMat> tau);
  AbElement apply_p(const AbElement& x) const;
  AbElement apply_l(const AbElement& y) const;
  const std::vector<IntMat>& tau() const { return tau_; }
  /// phi(g s) = phi(g) phi(s) for all g and generators s, and bijectivity.
  bool verify() const;

 private:
  LAction act_;
  std::vector<IntMat> tau_;
};

/// sigma([x, y]) = c(y) [tau x, y^p] extended p^2-semilinearly, where
/// c(y) = beta0(y^p)^{p^2}. Stored as a scaled permutation of the basis.
struct FrobWitness {
  std::vector<IntMat> tau;
  Cochain1 beta0;
  std::vector<RootScalar> c;  // per element of L
  std::vector<std::size_t> perm;
  std::vector<FieldElement> scale;
  /// Whether the form identity also holds for the single twist (x -> x^p vs alpha^{(p)}).
  bool single_twist_holds = false;
};

FrobWitness build_twist_isomorphism(const Instance& in, const TwistedAlgebra& ta, Fault fault = Fault::None);

/// sigma applied to an arbitrary element.
FVec apply_sigma(const FrobWitness& w, const FieldSpec& f, const FVec& v);

/// Intertwining, automorphism of P x| L, autfrob form identity, coboundary,
/// multiplicativity on all basis pairs, bijectivity and semilinearity.
std::vector<CheckResult> verify_twist(const Instance& in, const TwistedAlgebra& ta, const FrobWitness& w);

}  // namespace twistalg
