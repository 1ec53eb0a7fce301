#include "doctest.h"
#include "twistalg/oracle.hpp"

using namespace twistalg;

namespace {

// Matrix units E_ij (index i n + j) restricted to the pairs allowed by keep.
template <class Keep>
ConstantTable matrix_units(const FieldSpec& f, std::size_t n, Keep keep) {
  std::vector<std::pair<std::size_t, std::size_t>> units;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (keep(i, j)) units.emplace_back(i, j);
  const std::size_t d = units.size();
  std::vector<std::vector<ConstantTable::Term>> prods(d * d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      if (units[a].second == units[b].first)
        for (std::size_t c = 0; c < d; ++c)
          if (units[c] == std::make_pair(units[a].first, units[b].second)) prods[a * d + b].emplace_back(c, f.one());
  FVec one(d, f.zero());
  for (std::size_t c = 0; c < d; ++c)
    if (units[c].first == units[c].second) one[c] = f.one();
  return ConstantTable(f, d, std::move(prods), std::move(one));
}

// k[x]/(x^n) in the basis 1, x, ..., x^{n-1}.
ConstantTable truncated(const FieldSpec& f, std::size_t n) {
  std::vector<std::vector<ConstantTable::Term>> prods(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; a + b < n; ++b) prods[a * n + b].emplace_back(a + b, f.one());
  FVec one(n, f.zero());
  one[0] = f.one();
  return ConstantTable(f, n, std::move(prods), std::move(one));
}

// Group algebra of C_n.
ConstantTable cyclic_group_algebra(const FieldSpec& f, std::size_t n) {
  std::vector<std::vector<ConstantTable::Term>> prods(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) prods[a * n + b].emplace_back((a + b) % n, f.one());
  FVec one(n, f.zero());
  one[0] = f.one();
  return ConstantTable(f, n, std::move(prods), std::move(one));
}

struct Built {
  Instance in;
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
  return {std::move(in), std::move(ta), std::move(m), std::move(q), std::move(rq)};
}

ConstantTable table_of(const EchelonBasis& span, const TwistedAlgebra& ta, const FVec& identity) {
  return ConstantTable::from_algebra(Subalgebra{span}.intrinsic(ta.algebra(), identity));
}

FVec sum_of(const FieldSpec& f, const std::vector<FVec>& vs) {
  FVec s(vs.front().size(), f.zero());
  for (const auto& v : vs) axpy(f, s, f.one(), v);
  return s;
}

}  // namespace

TEST_CASE("center of a commutative algebra is everything") {
  FieldSpec f(3, 1);
  CHECK(center_of(truncated(f, 4)).rank() == 4);
  CHECK(center_of(cyclic_group_algebra(f, 5)).rank() == 5);
}

TEST_CASE("center and radical of matrix algebras") {
  FieldSpec f2(2, 1);
  auto full = matrix_units(f2, 2, [](auto, auto) { return true; });
  CHECK(center_of(full).rank() == 1);
  // The trace form of M_2 over F_2 vanishes identically, so a trace-form
  // radical would wrongly be everything.
  RadicalInfo r = radical_and_semisimple_rank(full);
  CHECK(r.radical_dim == 0);
  CHECK(r.semisimple_dim == 4);
  CHECK_FALSE(r.quotient_commutative);

  auto upper = matrix_units(FieldSpec(5, 1), 3, [](auto i, auto j) { return i <= j; });
  RadicalInfo u = radical_and_semisimple_rank(upper);
  CHECK(u.radical_dim == 3);
  CHECK(u.semisimple_dim == 3);
  CHECK(u.nilpotency_index == 3);
  CHECK(u.quotient_commutative);
}

TEST_CASE("radicals in characteristic p") {
  RadicalInfo t = radical_and_semisimple_rank(truncated(FieldSpec(7, 1), 3));
  CHECK(t.radical_dim == 2);
  CHECK(t.nilpotency_index == 3);
  // F_p C_p is local; F_p C_q with q coprime to p is semisimple.
  CHECK(radical_and_semisimple_rank(cyclic_group_algebra(FieldSpec(3, 1), 3)).radical_dim == 2);
  CHECK(radical_and_semisimple_rank(cyclic_group_algebra(FieldSpec(2, 1), 4)).radical_dim == 3);
  CHECK(radical_and_semisimple_rank(cyclic_group_algebra(FieldSpec(2, 2), 3)).radical_dim == 0);
  CHECK(radical_and_semisimple_rank(cyclic_group_algebra(FieldSpec(2, 2), 6)).radical_dim == 3);
}

TEST_CASE("Wedderburn numerology of kHe") {
  for (const auto& spec : {quantum_plane_spec(), ks3_spec(), c2_4_c3_2_spec()}) {
    CAPTURE(spec.name);
    Instance in = make_instance(spec);
    OracleReport rep = wedderburn_check(in.h, in.fam, in.field);
    for (const auto& c : rep.checks) {
      CAPTURE(c.name);
      CHECK(c.passed);
    }
  }
  Instance qp = make_instance(quantum_plane_spec());
  CHECK(khe_table(qp.h, qp.field).dim() == 16);
  CHECK(center_of(khe_table(qp.h, qp.field)).rank() == 1);
  Instance s3 = make_instance(ks3_spec());
  CHECK(center_of(khe_table(s3.h, s3.field)).rank() == 2);
}

TEST_CASE("radical of the basic algebra") {
  Built qp = build(quantum_plane_spec());
  const FVec e = sum_of(qp.in.field, qp.rq.idempotents);
  RadicalInfo a = radical_and_semisimple_rank(table_of(qp.rq.a_span, qp.ta, e));
  CHECK(a.radical_dim == 24);
  CHECK(a.semisimple_dim == 1);
  CHECK(a.quotient_commutative);
  RadicalInfo m = radical_and_semisimple_rank(table_of(qp.m.span, qp.ta, e));
  CHECK(m.radical_dim == 0);
  CHECK(m.semisimple_dim == 16);

  Built s3 = build(ks3_spec());
  RadicalInfo b = radical_and_semisimple_rank(table_of(s3.rq.a_span, s3.ta, sum_of(s3.in.field, s3.rq.idempotents)));
  CHECK(b.radical_dim == 4);
  CHECK(b.semisimple_dim == 2);
}

TEST_CASE("independent dimension count") {
  Built qp = build(quantum_plane_spec());
  CHECK(independent_dimension_count(qp.q, qp.in.field, 100) == 25);
  Built s3 = build(ks3_spec());
  CHECK(independent_dimension_count(s3.q, s3.in.field, 24) == 6);
  Built c2 = build(c2_4_c3_2_spec());
  CHECK(independent_dimension_count(c2.q, c2.in.field, 4 * *presentation_dimension(c2.q)) ==
        static_cast<std::int64_t>(c2.rq.a_span.rank()));
}

TEST_CASE("single loop with w^2 = 0") {
  QuiverPresentation q;
  q.p = 2;
  q.vertices = {PhiIndex{{}}};
  q.psi = {AbCharacter{}};
  q.n = {1};
  q.arrows = {Arrow{0, PhiIndex{{}}, PhiIndex{{}}, HElement{}}};
  q.powers = {PowerRelation{0, PhiIndex{{}}, 2}};
  FieldSpec f(2, 1);
  CHECK(independent_dimension_count(q, f, 8) == 2);
  q.powers.clear();
  CHECK_THROWS_AS(independent_dimension_count(q, f, 8), Error);
}
