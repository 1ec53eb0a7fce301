#include <random>

#include "doctest.h"
#include "twistalg/frobenius.hpp"

using namespace twistalg;

namespace {

FVec random_vector(const FieldSpec& f, std::size_t n, std::mt19937_64& rng) {
  FVec v(n);
  for (auto& c : v) c = FieldElement{static_cast<std::uint32_t>(rng() % f.size())};
  return v;
}

// Multiplicativity through the dense product on random elements, independent of
// the monomial tables used by verify_twist.
bool dense_multiplicative(const TwistedAlgebra& ta, const FrobWitness& w, int samples, std::uint64_t seed) {
  const StructAlgebra& a = ta.algebra();
  const FieldSpec& f = a.field();
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    const FVec u = random_vector(f, a.dim(), rng);
    const FVec v = random_vector(f, a.dim(), rng);
    if (apply_sigma(w, f, a.mul(u, v)) != a.mul(apply_sigma(w, f, u), apply_sigma(w, f, v))) return false;
  }
  return true;
}

bool permutes_idempotents(const Instance& in, const TwistedAlgebra& ta, const FrobWitness& w) {
  std::vector<FVec> es;
  for (const auto& phi : in.fam.members()) es.push_back(ta.e_phi(in.fam, phi));
  std::vector<bool> hit(es.size(), false);
  for (const auto& e : es) {
    const FVec img = apply_sigma(w, in.field, e);
    bool found = false;
    for (std::size_t k = 0; k < es.size(); ++k)
      if (!hit[k] && es[k] == img) {
        hit[k] = found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

bool all_pass(const std::vector<CheckResult>& checks) {
  bool ok = true;
  for (const auto& c : checks)
    if (!c.passed) {
      MESSAGE(c.name << ": " << c.detail);
      ok = false;
    }
  return ok;
}

}  // namespace

TEST_CASE("tau for the quantum plane is diagonal-compatible") {
  Instance in = make_instance(quantum_plane_spec());
  auto tau = solve_tau(in.act, 7);
  REQUIRE(tau.size() == 1);
  SemidirectAutomorphism phi(in.act, tau);
  CHECK(phi.verify());
}

TEST_CASE("tau exists for the companion action over F_2") {
  Instance in = make_instance(c2_4_c3_2_spec());
  auto tau = solve_tau(in.act, 1);
  REQUIRE(tau.size() == 1);
  CHECK(SemidirectAutomorphism(in.act, tau).verify());
}

TEST_CASE("a wrong tau is rejected") {
  Instance in = make_instance(c2_4_c3_2_spec());
  std::vector<IntMat> bad{{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}};
  CHECK_FALSE(SemidirectAutomorphism(in.act, bad).verify());
  std::vector<IntMat> wrong_shape{{{1, 0}, {0, 1}}};
  CHECK_THROWS_AS(SemidirectAutomorphism(in.act, wrong_shape), Error);
}

TEST_CASE("twist isomorphism on the shipped examples") {
  for (const auto& spec : {quantum_plane_spec(), ks3_spec(), c2_4_c3_2_spec()}) {
    CAPTURE(spec.name);
    Instance in = make_instance(spec);
    TwistedAlgebra ta(in.act, in.h, in.field);
    FrobWitness w = build_twist_isomorphism(in, ta);
    CHECK(all_pass(verify_twist(in, ta, w)));
    CHECK(dense_multiplicative(ta, w, 20, 3));
    CHECK(permutes_idempotents(in, ta, w));
  }
}

TEST_CASE("corrupting beta0 breaks multiplicativity") {
  Instance in = make_instance(c2_4_c3_2_spec());
  TwistedAlgebra ta(in.act, in.h, in.field);
  FrobWitness w = build_twist_isomorphism(in, ta, Fault::CorruptBeta);
  auto checks = verify_twist(in, ta, w);
  bool mult_failed = false;
  for (const auto& c : checks)
    if (c.code == Errc::MultiplicativityFails && !c.passed) mult_failed = true;
  CHECK(mult_failed);
  CHECK_FALSE(dense_multiplicative(ta, w, 20, 3));
}

TEST_CASE("random instances admit the twist") {
  std::mt19937_64 rng(2024);
  RandomOptions opt;
  opt.max_twisted_dim = 200;
  for (int k = 0; k < 8; ++k) {
    ProblemSpec spec = random_problem(rng, opt);
    CAPTURE(spec.name);
    Instance in = make_instance(spec);
    TwistedAlgebra ta(in.act, in.h, in.field);
    FrobWitness w = build_twist_isomorphism(in, ta);
    CHECK(all_pass(verify_twist(in, ta, w)));
    CHECK(dense_multiplicative(ta, w, 4, k));
  }
}
