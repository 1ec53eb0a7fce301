#include <random>

#include "doctest.h"
#include "twistalg/error.hpp"
#include "twistalg/group_algebras.hpp"
#include "twistalg/instance.hpp"

using namespace twistalg;

namespace {

std::vector<Instance> fixtures() {
  std::vector<Instance> out{make_instance(quantum_plane_spec()), make_instance(ks3_spec()),
                            make_instance(c2_4_c3_2_spec())};
  std::mt19937_64 rng(71);
  RandomOptions opt;
  opt.max_twisted_dim = 160;
  for (int i = 0; i < 12; ++i) out.push_back(make_instance(random_problem(rng, opt)));
  return out;
}

}  // namespace

TEST_CASE("worked examples pick the expected fields") {
  CHECK(make_instance(quantum_plane_spec()).field.size() == 5);
  CHECK(make_instance(ks3_spec()).field.size() == 3);
  CHECK(make_instance(c2_4_c3_2_spec()).field.size() == 4);
}

TEST_CASE("kS3: w spans the inversion eigenline") {
  Instance in = make_instance(ks3_spec());
  KPData kp = build_kP(in.act, in.field);
  REQUIRE(kp.w.w.size() == 1);
  const FieldSpec& f = in.field;
  // averaged section of b - 1 is ((b - 1) - (b^2 - 1)) / 2 = 2 (b - b^2) over F_3
  CHECK(kp.w.w[0] == FVec{f.zero(), f.from_int(2), f.from_int(1)});
  CHECK(embed_character(f, in.l, kp.w.psi[0], in.l.generator(0)) == f.from_int(-1));
  CHECK(is_zero(kp.algebra.pow(kp.w.w[0], 3)));
  CHECK_FALSE(is_zero(kp.algebra.pow(kp.w.w[0], 2)));
}

TEST_CASE("quantum plane: diagonal action gives coordinate eigenvectors") {
  Instance in = make_instance(quantum_plane_spec());
  KPData kp = build_kP(in.act, in.field);
  REQUIRE(kp.w.w.size() == 2);
  const FieldSpec& f = in.field;
  // psi_1 = (2 on s, 1 on t), psi_2 = (1 on s, 2 on t)
  CHECK(embed_character(f, in.l, kp.w.psi[0], in.l.generator(0)) == f.from_int(2));
  CHECK(embed_character(f, in.l, kp.w.psi[0], in.l.generator(1)) == f.one());
  CHECK(embed_character(f, in.l, kp.w.psi[1], in.l.generator(0)) == f.one());
  CHECK(embed_character(f, in.l, kp.w.psi[1], in.l.generator(1)) == f.from_int(2));
  TwistedAlgebra ta(in.act, in.h, in.field);
  CHECK(ta.algebra().dim() == 400);
  MatSubalgebra m = build_mat_subalgebra(ta, in.fam);
  CHECK(m.span.rank() == 16);
}

TEST_CASE("eigenbasis invariants") {
  for (const auto& in : fixtures()) {
    CAPTURE(in.spec.p);
    CAPTURE(in.l.orders());
    KPData kp = build_kP(in.act, in.field);
    const FieldSpec& f = in.field;
    const StructAlgebra& a = kp.algebra;
    CHECK(a.check_associative(1));
    REQUIRE(static_cast<int>(kp.w.w.size()) == in.p.frattini_rank());
    TwistedAlgebra ta(in.act, in.h, f);
    for (std::size_t i = 0; i < kp.w.w.size(); ++i) {
      std::int64_t pn = 1;
      for (int k = 0; k < kp.w.n[i]; ++k) pn *= in.spec.p;
      CHECK(is_zero(a.pow(kp.w.w[i], pn)));
      CHECK_FALSE(is_zero(a.pow(kp.w.w[i], pn / in.spec.p)));
      const FVec wi = ta.from_p(kp.w.w[i]);
      for (const auto& g : in.h.elements()) {
        const FVec lhs = ta.algebra().mul(ta.algebra().mul(ta.from_h(g), wi), ta.from_h(in.h.inv(g)));
        CHECK(lhs == ta.algebra().scale(embed_character(f, in.l, kp.w.psi[i], g.x), wi));
      }
    }
    // monomials in the w_i span kP
    std::vector<std::int64_t> bounds;
    for (auto n : kp.w.n) {
      std::int64_t pn = 1;
      for (int k = 0; k < n; ++k) pn *= in.spec.p;
      bounds.push_back(pn);
    }
    EchelonBasis span(f, a.dim());
    for (const auto& e : FinAbGroup(bounds).elements()) {
      FVec mono = a.one();
      for (std::size_t i = 0; i < e.x.size(); ++i) mono = a.mul(mono, a.pow(kp.w.w[i], e.x[i]));
      span.add(mono);
    }
    CHECK(static_cast<std::int64_t>(span.rank()) == in.p.order());
  }
}

TEST_CASE("twisted algebra, idempotents and the matrix subalgebra") {
  for (const auto& in : fixtures()) {
    CAPTURE(in.l.orders());
    TwistedAlgebra ta(in.act, in.h, in.field);
    const StructAlgebra& a = ta.algebra();
    CHECK(static_cast<std::int64_t>(a.dim()) == in.p.order() * in.l.order());
    CHECK(a.check_associative(2, 40, 20000));
    std::vector<FVec> idem;
    FVec sum = a.zero();
    for (const auto& phi : in.fam.members()) {
      idem.push_back(ta.e_phi(in.fam, phi));
      sum = a.add(sum, idem.back());
    }
    CHECK(sum == a.one());
    for (std::size_t i = 0; i < idem.size(); ++i)
      for (std::size_t j = 0; j < idem.size(); ++j)
        CHECK(a.mul(idem[i], idem[j]) == (i == j ? idem[i] : a.zero()));
    MatSubalgebra m = build_mat_subalgebra(ta, in.fam);
    CHECK(static_cast<std::int64_t>(m.span.rank()) == in.h.degree() * in.h.degree());
    // the center of M is the scalars
    std::size_t central = 0;
    FMat eqs;
    const auto& rows = m.span.rows();
    const std::size_t d = rows.size();
    for (const auto& u : rows) {
      std::vector<FVec> cols;
      for (const auto& v : rows) cols.push_back(a.sub(a.mul(v, u), a.mul(u, v)));
      for (std::size_t k = 0; k < a.dim(); ++k) {
        FVec eq(d);
        for (std::size_t j = 0; j < d; ++j) eq[j] = cols[j][k];
        eqs.push_back(std::move(eq));
      }
    }
    central = nullspace(in.field, eqs, d).size();
    CHECK(central == 1);
  }
}
