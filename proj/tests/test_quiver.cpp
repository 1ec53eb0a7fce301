#include <random>

#include "doctest.h"
#include "twistalg/error.hpp"
#include "twistalg/quiver.hpp"

using namespace twistalg;

namespace {

struct Built {
  Instance in;
  KPData kp;
  TwistedAlgebra ta;
  MatSubalgebra m;
  QuiverPresentation q;
  RealizedQuiver rq;
};

Built build(const ProblemSpec& spec) {
  Instance in = make_instance(spec);
  KPData kp = build_kP(in.act, in.field);
  TwistedAlgebra ta(in.act, in.h, in.field);
  MatSubalgebra m = build_mat_subalgebra(ta, in.fam);
  QuiverPresentation q = emit_presentation(in, kp.w);
  RealizedQuiver rq = realize(q, ta, in.fam, kp.w);
  return {std::move(in), std::move(kp), std::move(ta), std::move(m), std::move(q), std::move(rq)};
}

bool all_pass(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks) {
    if (!c.passed) MESSAGE(c.name << ": " << c.detail);
    if (!c.passed) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("quantum plane presentation") {
  Built b = build(quantum_plane_spec());
  CHECK(b.q.vertices.size() == 1);
  CHECK(b.q.arrows.size() == 2);
  REQUIRE(b.q.commutations.size() == 1);
  CHECK(b.q.commutations[0].q.true_order() == 4);
  CHECK(b.q.commutations[0].phi_of_z.true_order() == 4);
  CHECK(b.q.powers.size() == 2);
  CHECK(b.q.powers[0].length == 5);
  CHECK(presentation_dimension(b.q) == 25);
  CHECK(all_pass(verify_in_algebra(b.q, b.rq, b.ta, b.m)));
  CheckResult t = verify_tensor_decomposition(b.rq, b.m, b.ta);
  CHECK(t.passed);
  CHECK(b.m.span.rank() == 16);
}

TEST_CASE("kS3 presentation is a 2-cycle") {
  Built b = build(ks3_spec());
  CHECK(b.q.vertices.size() == 2);
  CHECK(b.q.arrows.size() == 2);
  CHECK(b.q.arrows[0].target == b.q.arrows[1].source);
  CHECK(b.q.arrows[1].target == b.q.arrows[0].source);
  CHECK(b.q.commutations.empty());
  CHECK(presentation_dimension(b.q) == 6);
  CHECK(all_pass(verify_in_algebra(b.q, b.rq, b.ta, b.m)));
  CHECK(verify_tensor_decomposition(b.rq, b.m, b.ta).passed);
}

TEST_CASE("(C2)^4 by C3^2 presentation") {
  Built b = build(c2_4_c3_2_spec());
  CHECK(b.q.vertices.size() == 1);
  CHECK(b.q.arrows.size() == 4);
  CHECK(b.q.commutations.size() == 6);
  for (const auto& pr : b.q.powers) CHECK(pr.length == 2);
  CHECK(presentation_dimension(b.q) == 16);
  CHECK(all_pass(verify_in_algebra(b.q, b.rq, b.ta, b.m)));
  CHECK(verify_tensor_decomposition(b.rq, b.m, b.ta).passed);
}

TEST_CASE("q is recomputable from commutators and the swap law holds") {
  for (auto spec : {quantum_plane_spec(), c2_4_c3_2_spec()}) {
    Built b = build(spec);
    for (const auto& rel : b.q.commutations) {
      // z from the commutator of the chosen elements is consistent with the stored z
      CommutationRelation swapped = compute_q(b.in, b.q, rel.j, rel.i, rel.phi);
      CHECK((rel.q * swapped.q).is_one());
      CHECK(b.in.h.is_central(rel.z));
    }
    for (const auto& a : b.q.arrows) {
      const FinAbGroup& l = b.in.l;
      const AbCharacter target = l.char_mul(l.char_mul(b.q.psi[a.i], b.in.fam.xi(a.source)),
                                            l.char_inv(b.in.fam.xi(a.target)));
      CHECK(b.in.h.rho(a.g) == target);
    }
  }
}

TEST_CASE("random instances verify") {
  std::mt19937_64 rng(97);
  RandomOptions opt;
  opt.max_twisted_dim = 200;
  for (int k = 0; k < 15; ++k) {
    ProblemSpec spec = random_problem(rng, opt);
    CAPTURE(spec.p);
    CAPTURE(spec.l_orders);
    Built b = build(spec);
    CHECK(all_pass(verify_in_algebra(b.q, b.rq, b.ta, b.m)));
    CHECK(verify_tensor_decomposition(b.rq, b.m, b.ta).passed);
    CHECK(static_cast<std::int64_t>(b.rq.a_span.rank()) == b.in.p.order() * b.in.h.radical().order());
  }
}

TEST_CASE("negative controls") {
  Built b = build(quantum_plane_spec());
  QuiverPresentation bad = b.q;
  REQUIRE(inject_fault(bad, Fault::QPerturbation, b.in.field));
  auto checks = verify_in_algebra(bad, b.rq, b.ta, b.m);
  CHECK_FALSE(checks[1].passed);
  QuiverPresentation dropped = b.q;
  REQUIRE(inject_fault(dropped, Fault::DropPower, b.in.field));
  CHECK_FALSE(presentation_dimension(dropped).has_value());
  CHECK_FALSE(verify_in_algebra(dropped, b.rq, b.ta, b.m)[3].passed);
  CHECK_THROWS_AS(parse_fault("bogus"), Error);
}
