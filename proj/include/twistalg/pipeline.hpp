#pragma once

#include <cstdint>
#include <vector>

#include "twistalg/frobenius.hpp"
#include "twistalg/oracle.hpp"
#include "twistalg/quiver.hpp"

namespace twistalg {

/// All objects built for one problem, in dependency order.
struct Pipeline {
  Instance in;
  KPData kp;
  TwistedAlgebra ta;
  MatSubalgebra m;
  QuiverPresentation q;
  RealizedQuiver rq;
  Fault fault = Fault::None;
  /// False when the requested presentation fault has nothing to act on.
  bool fault_applied = true;
};

/// Presentation-level faults are injected after emit_presentation, before
/// the quiver is realized. CorruptBeta is left for build_twist_isomorphism.
Pipeline run_pipeline(const ProblemSpec& spec, Fault fault = Fault::None);

enum class Level { Quick, Full };

/// Character checks for every phi: tau_phi(1)^2 = |H:Z(H)|, tau_phi vanishes
/// off Z(H), <tau_phi, tau_phi> = 1, phi induced to H equals m tau_phi, and
/// eta tau_phi = tau_{eta phi}. Quick level samples at most 8 characters eta
/// (seeded); full level uses all of them.
std::vector<CheckResult> class2_checks(const ExtGroup& h, const PhiFamily& fam, Level level, std::uint64_t seed);

/// verify_in_algebra, the tensor decomposition, the dimension formulas and
/// the character checks.
std::vector<CheckResult> verify_all(const Pipeline& pl, Level level, std::uint64_t seed);

/// Wedderburn numerology of kHe, radicals of A and M, the center of A and
/// the three-way dimension agreement.
OracleReport run_oracle(const Pipeline& pl);

FVec vertex_identity_sum(const Pipeline& pl);

}  // namespace twistalg
