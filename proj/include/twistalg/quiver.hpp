#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twistalg/error.hpp"
#include "twistalg/group_algebras.hpp"
#include "twistalg/instance.hpp"

namespace twistalg {

/// Arrow [source] -> [target = source * psi_i] realised by g_i w_i e_source.
struct Arrow {
  std::size_t i = 0;
  PhiIndex source;
  PhiIndex target;
  HElement g;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// a_{j, phi psi_i} a_{i, phi} = q a_{i, phi psi_j} a_{j, phi}.
struct CommutationRelation {
  std::size_t i = 0;
  std::size_t j = 0;
  PhiIndex phi;
  RootScalar q;
  /// phi(z) alone, without the correction from moving w past g.
  RootScalar phi_of_z;
  HElement z;
  friend bool operator==(const CommutationRelation&, const CommutationRelation&) = default;
};

/// The composable path of `length` i-arrows starting at [phi] is zero.
struct PowerRelation {
  std::size_t i = 0;
  PhiIndex phi;
  std::int64_t length = 1;
  friend bool operator==(const PowerRelation&, const PowerRelation&) = default;
};

struct QuiverPresentation {
  std::int64_t p = 2;
  std::vector<PhiIndex> vertices;
  std::vector<AbCharacter> psi;  // per arrow type i
  std::vector<int> n;            // per arrow type i
  std::vector<Arrow> arrows;     // ordered by (i, source)
  std::vector<CommutationRelation> commutations;
  std::vector<PowerRelation> powers;

  std::size_t vertex_position(const PhiIndex& phi) const;
  const Arrow& arrow(std::size_t i, const PhiIndex& source) const;
  std::string vertex_label(const PhiIndex& phi) const;
  friend bool operator==(const QuiverPresentation&, const QuiverPresentation&) = default;
};

/// Least g in H (enumeration order) with rho(g) = psi_i xi_phi xi_{phi psi_i}^{-1},
/// the condition for g w_i e_phi to commute with M. Throws NoSolution.
HElement choose_g(const ExtGroup& h, const PhiFamily& fam, const AbCharacter& psi, const PhiIndex& phi);

/// z_{i,j,phi} = (g_{i,phi psi_j} g_{j,phi})^{-1} g_{j,phi psi_i} g_{i,phi} and the
/// scalar of the corresponding relation. Throws ZNotCentral.
CommutationRelation compute_q(const Instance& in, const QuiverPresentation& q, std::size_t i, std::size_t j,
                              const PhiIndex& phi);

/// Builds the presentation: arrows, commutation scalars and power relations.
QuiverPresentation emit_presentation(const Instance& in, const EigenBasisW& w);

/// Normal-form count: vertices times the product of power-relation lengths.
/// Returns nullopt when some arrow type has no power relation at some vertex.
std::optional<std::int64_t> presentation_dimension(const QuiverPresentation& q);

enum class Fault { None, QPerturbation, DropPower, CorruptBeta };
Fault parse_fault(const std::string& name);
const char* to_string(Fault f);
/// Applies a presentation-level fault: multiplies the first commutation
/// scalar by a root of unity that is nontrivial in the field, or drops the
/// first power relation. Returns false when the fault cannot be expressed
/// for this presentation (no relation of that kind, or F_2 for q).
bool inject_fault(QuiverPresentation& q, Fault fault, const FieldSpec& f);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  Errc code = Errc::ValidationError;
};

/// The algebra elements of a presentation inside k(P x| H)e.
struct RealizedQuiver {
  std::vector<FVec> idempotents;  // per vertex
  std::vector<FVec> arrows;       // parallel to QuiverPresentation::arrows
  EchelonBasis a_span;            // span of the algebra generated by both
};

RealizedQuiver realize(const QuiverPresentation& q, const TwistedAlgebra& ta, const PhiFamily& fam,
                       const EigenBasisW& w);

/// Checks source/target laws, both relation families, dim A and commuting
/// with M.
std::vector<CheckResult> verify_in_algebra(const QuiverPresentation& q, const RealizedQuiver& rq,
                                           const TwistedAlgebra& ta, const MatSubalgebra& m);

/// dim A * dim M = dim k(P x| H)e and products a m span it.
CheckResult verify_tensor_decomposition(const RealizedQuiver& rq, const MatSubalgebra& m, const TwistedAlgebra& ta);

}  // namespace twistalg
