#include "twistalg/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <random>

namespace twistalg {

Pipeline run_pipeline(const ProblemSpec& spec, Fault fault) {
  Instance in = make_instance(spec);
  KPData kp = build_kP(in.act, in.field);
  TwistedAlgebra ta(in.act, in.h, in.field);
  MatSubalgebra m = build_mat_subalgebra(ta, in.fam);
  QuiverPresentation q = emit_presentation(in, kp.w);
  bool applied = true;
  if (fault == Fault::QPerturbation || fault == Fault::DropPower) applied = inject_fault(q, fault, in.field);
  if (fault == Fault::CorruptBeta) applied = in.l.order() > 1;
  RealizedQuiver rq = realize(q, ta, in.fam, kp.w);
  return {std::move(in), std::move(kp), std::move(ta), std::move(m), std::move(q), std::move(rq), fault, applied};
}

namespace {

CheckResult make_check(std::string name, Errc code) {
  CheckResult c;
  c.name = std::move(name);
  c.passed = true;
  c.code = code;
  return c;
}

void fail(CheckResult& c, const std::string& detail) {
  if (c.passed) c.detail = detail;
  c.passed = false;
}

}  // namespace

std::vector<CheckResult> class2_checks(const ExtGroup& h, const PhiFamily& fam, Level level, std::uint64_t seed) {
  const std::int64_t n = class_function_conductor(h, fam);
  const std::int64_t deg = h.degree();
  const std::int64_t id = h.index(h.identity());

  CheckResult degree = make_check("tau_phi(1)^2 = |H:Z(H)|", Errc::DimensionMismatch);
  CheckResult support = make_check("tau_phi vanishes off Z(H)", Errc::DimensionMismatch);
  CheckResult norm = make_check("<tau_phi, tau_phi> = 1", Errc::DimensionMismatch);
  CheckResult induced = make_check("phi induced to H = m tau_phi", Errc::DimensionMismatch);
  CheckResult action = make_check("eta tau_phi = tau_{eta phi}", Errc::DimensionMismatch);

  const std::int64_t index_hz = h.order() / static_cast<std::int64_t>(h.center().size());
  for (const auto& phi : fam.members()) {
    const ClassFunction t = induced_irreducible(h, fam, phi);
    const std::string at = "at phi " + std::to_string(fam.position(phi));
    std::int64_t t1 = 0;
    if (!t[static_cast<std::size_t>(id)].is_integer(&t1) || t1 * t1 != index_hz) fail(degree, at);
    if (inner_product_times_order(h, t, t) != h.order()) fail(norm, at);
    for (std::int64_t i = 0; i < h.order(); ++i) {
      const HElement g = h.element(i);
      Cyclotomic ind(n);
      if (h.is_central(g)) {
        ind.add_root(fam.value(phi, g).with_order(n).exponent(), index_hz);
      } else if (!t[static_cast<std::size_t>(i)].is_zero()) {
        fail(support, at);
      }
      Cyclotomic scaled(n);
      for (std::int64_t k = 0; k < deg; ++k) scaled += t[static_cast<std::size_t>(i)];
      if (!(scaled == ind)) fail(induced, at);
    }
  }

  std::vector<AbCharacter> etas = dual_group(h.l());
  if (level == Level::Quick && etas.size() > 8) {
    std::mt19937_64 rng(seed);
    std::shuffle(etas.begin() + 1, etas.end(), rng);
    etas.resize(8);
  }
  for (const auto& eta : etas)
    for (const auto& phi : fam.members())
      if (!verify_class2_action(h, fam, eta, phi)) fail(action, "at phi " + std::to_string(fam.position(phi)));
  return {degree, support, norm, induced, action};
}

std::vector<CheckResult> verify_all(const Pipeline& pl, Level level, std::uint64_t seed) {
  std::vector<CheckResult> out = verify_in_algebra(pl.q, pl.rq, pl.ta, pl.m);
  out.push_back(verify_tensor_decomposition(pl.rq, pl.m, pl.ta));

  const std::int64_t rad = static_cast<std::int64_t>(pl.in.h.radical_elements().size());
  const std::int64_t order_p = pl.in.p.group().order();
  const std::int64_t dim_a = static_cast<std::int64_t>(pl.rq.a_span.rank());
  const std::int64_t dim_m = static_cast<std::int64_t>(pl.m.span.rank());
  CheckResult formula = make_check("dim A = |Z(H):Z| |P|", Errc::DimensionMismatch);
  if (dim_a != rad * order_p)
    fail(formula, "dim A = " + std::to_string(dim_a) + ", expected " + std::to_string(rad * order_p));
  out.push_back(formula);
  CheckResult product = make_check("dim A dim M = |P| |L|", Errc::DimensionMismatch);
  if (dim_a * dim_m != order_p * pl.in.l.order() ||
      static_cast<std::int64_t>(pl.ta.algebra().dim()) != order_p * pl.in.l.order())
    fail(product, std::to_string(dim_a) + " * " + std::to_string(dim_m));
  out.push_back(product);

  for (auto& c : class2_checks(pl.in.h, pl.in.fam, level, seed)) out.push_back(std::move(c));
  return out;
}

FVec vertex_identity_sum(const Pipeline& pl) {
  FVec s = pl.ta.algebra().zero();
  for (const auto& e : pl.rq.idempotents) axpy(pl.in.field, s, pl.in.field.one(), e);
  return s;
}

namespace {

using Clock = std::chrono::steady_clock;

OracleCheck numeric(std::string name, std::string validates, Clock::time_point t0, std::int64_t expected,
                    std::int64_t computed) {
  OracleCheck c;
  c.name = std::move(name);
  c.validates = std::move(validates);
  c.expected = std::to_string(expected);
  c.computed = std::to_string(computed);
  c.passed = expected == computed;
  c.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  return c;
}

}  // namespace

OracleReport run_oracle(const Pipeline& pl) {
  OracleReport rep = wedderburn_check(pl.in.h, pl.in.fam, pl.in.field);
  rep.instance = pl.in.spec.name;
  const StructAlgebra& amb = pl.ta.algebra();
  const FVec e = vertex_identity_sum(pl);
  const std::int64_t nv = static_cast<std::int64_t>(pl.q.vertices.size());

  auto t0 = Clock::now();
  const ConstantTable a = ConstantTable::from_algebra(Subalgebra{pl.rq.a_span}.intrinsic(amb, e));
  const RadicalInfo ra = radical_and_semisimple_rank(a);
  rep.checks.push_back(numeric("dim A/J(A)", "A is basic with one simple module per vertex", t0, nv,
                               static_cast<std::int64_t>(ra.semisimple_dim)));
  OracleCheck comm = numeric("A/J(A) commutative", "A is basic with one simple module per vertex", t0, 1,
                             ra.quotient_commutative ? 1 : 0);
  rep.checks.push_back(comm);

  t0 = Clock::now();
  OracleCheck ca = numeric("center of A", "recorded only", t0, 0, static_cast<std::int64_t>(center_of(a).rank()));
  ca.expected = "-";
  ca.asserted = false;
  ca.passed = true;
  rep.checks.push_back(ca);

  t0 = Clock::now();
  const ConstantTable m = ConstantTable::from_algebra(Subalgebra{pl.m.span}.intrinsic(amb, e));
  const RadicalInfo rm = radical_and_semisimple_rank(m);
  rep.checks.push_back(numeric("radical of M", "M is a full matrix algebra", t0, 0, static_cast<std::int64_t>(rm.radical_dim)));
  t0 = Clock::now();
  rep.checks.push_back(numeric("center of M", "M is a full matrix algebra", t0, 1, static_cast<std::int64_t>(center_of(m).rank())));

  t0 = Clock::now();
  const auto normal_form = presentation_dimension(pl.q);
  const std::int64_t rank = static_cast<std::int64_t>(pl.rq.a_span.rank());
  const std::int64_t cap = 4 * normal_form.value_or(rank);
  OracleCheck closure;
  try {
    closure = numeric("rewriting closure = rank of A", "the relations present A", t0, rank,
                      independent_dimension_count(pl.q, pl.in.field, cap));
  } catch (const Error& err) {
    closure = numeric("rewriting closure = rank of A", "the relations present A", t0, rank, -1);
    closure.computed = err.what();
  }
  rep.checks.push_back(closure);
  rep.checks.push_back(numeric("normal form count = rank of A", "the relations present A", t0, rank, normal_form.value_or(-1)));
  return rep;
}

}  // namespace twistalg
