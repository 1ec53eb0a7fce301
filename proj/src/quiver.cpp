#include "twistalg/quiver.hpp"

#include <algorithm>

#include "twistalg/error.hpp"

namespace twistalg {

std::size_t QuiverPresentation::vertex_position(const PhiIndex& phi) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), phi);
  if (it == vertices.end() || !(*it == phi)) throw Error(Errc::DimensionMismatch, "unknown vertex");
  return static_cast<std::size_t>(it - vertices.begin());
}

const Arrow& QuiverPresentation::arrow(std::size_t i, const PhiIndex& source) const {
  return arrows[i * vertices.size() + vertex_position(source)];
}

std::string QuiverPresentation::vertex_label(const PhiIndex& phi) const {
  std::string s = "[phi";
  for (auto v : phi.j) s += "_" + std::to_string(v);
  return s + "]";
}

HElement choose_g(const ExtGroup& h, const PhiFamily& fam, const AbCharacter& psi, const PhiIndex& phi) {
  const FinAbGroup& l = h.l();
  const AbCharacter target =
      l.char_mul(l.char_mul(psi, fam.xi(phi)), l.char_inv(fam.xi(fam.shift(phi, psi))));
  for (const auto& r : h.radical().basis)
    if (!l.evaluate(target, r).is_one())
      throw Error(Errc::NoSolution, "target character is not trivial on Z(H)");
  for (std::int64_t k = 0; k < h.order(); ++k) {
    const HElement g = h.element(k);
    if (h.rho(g) == target) return g;
  }
  throw Error(Errc::NoSolution, "no element of H has the required commutator character");
}

CommutationRelation compute_q(const Instance& in, const QuiverPresentation& q, std::size_t i, std::size_t j,
                              const PhiIndex& phi) {
  const ExtGroup& h = in.h;
  const FinAbGroup& l = in.l;
  const PhiIndex phi_i = in.fam.shift(phi, q.psi[i]);
  const PhiIndex phi_j = in.fam.shift(phi, q.psi[j]);
  const HElement g_i = q.arrow(i, phi).g, g_j = q.arrow(j, phi).g;
  const HElement lhs = h.mul(q.arrow(j, phi_i).g, g_i);
  const HElement rhs = h.mul(q.arrow(i, phi_j).g, g_j);
  const HElement z = h.mul(h.inv(rhs), lhs);
  if (!h.is_central(z)) throw Error(Errc::ZNotCentral, "z_{i,j,phi} is not central");
  CommutationRelation rel;
  rel.i = i;
  rel.j = j;
  rel.phi = phi;
  rel.z = z;
  rel.phi_of_z = in.fam.value(phi, z);
  // moving w_i, w_j past g and z contributes psi-values
  rel.q = rel.phi_of_z * l.evaluate(q.psi[i], z.x) * l.evaluate(q.psi[j], z.x) * l.evaluate(q.psi[i], g_j.x) *
          l.evaluate(q.psi[j], g_i.x).inverse();
  rel.q = rel.q.reduced();
  return rel;
}

QuiverPresentation emit_presentation(const Instance& in, const EigenBasisW& w) {
  QuiverPresentation q;
  q.p = in.spec.p;
  q.vertices = in.fam.members();
  q.psi = w.psi;
  q.n = w.n;
  for (std::size_t i = 0; i < w.psi.size(); ++i)
    for (const auto& phi : q.vertices)
      q.arrows.push_back({i, phi, in.fam.shift(phi, w.psi[i]), choose_g(in.h, in.fam, w.psi[i], phi)});
  for (std::size_t i = 0; i < w.psi.size(); ++i)
    for (std::size_t j = i + 1; j < w.psi.size(); ++j)
      for (const auto& phi : q.vertices) q.commutations.push_back(compute_q(in, q, i, j, phi));
  for (std::size_t i = 0; i < w.psi.size(); ++i) {
    std::int64_t len = 1;
    for (int k = 0; k < w.n[i]; ++k) len *= q.p;
    for (const auto& phi : q.vertices) q.powers.push_back({i, phi, len});
  }
  return q;
}

std::optional<std::int64_t> presentation_dimension(const QuiverPresentation& q) {
  std::int64_t total = 0;
  for (const auto& v : q.vertices) {
    std::int64_t count = 1;
    for (std::size_t i = 0; i < q.psi.size(); ++i) {
      std::int64_t len = -1;
      for (const auto& pr : q.powers)
        if (pr.i == i && pr.phi == v) len = pr.length;
      if (len < 0) return std::nullopt;
      count *= len;
    }
    total += count;
  }
  return total;
}

Fault parse_fault(const std::string& name) {
  if (name.empty() || name == "none") return Fault::None;
  if (name == "q-perturbation") return Fault::QPerturbation;
  if (name == "drop-power") return Fault::DropPower;
  if (name == "corrupt-beta") return Fault::CorruptBeta;
  throw Error(Errc::ValidationError, "unknown fault '" + name + "'");
}

const char* to_string(Fault f) {
  switch (f) {
    case Fault::None: return "none";
    case Fault::QPerturbation: return "q-perturbation";
    case Fault::DropPower: return "drop-power";
    case Fault::CorruptBeta: return "corrupt-beta";
  }
  return "none";
}

bool inject_fault(QuiverPresentation& q, Fault fault, const FieldSpec& f) {
  switch (fault) {
    case Fault::QPerturbation: {
      if (q.commutations.empty() || f.size() == 2) return false;
      // smallest prime order of a nontrivial root in the field
      const std::int64_t o = prime_factors(f.size() - 1).front();
      q.commutations.front().q = (q.commutations.front().q * RootScalar(o, 1)).reduced();
      return true;
    }
    case Fault::DropPower:
      if (q.powers.empty()) return false;
      q.powers.erase(q.powers.begin());
      return true;
    default:
      return false;
  }
}

RealizedQuiver realize(const QuiverPresentation& q, const TwistedAlgebra& ta, const PhiFamily& fam,
                       const EigenBasisW& w) {
  const StructAlgebra& alg = ta.algebra();
  RealizedQuiver rq{{}, {}, EchelonBasis(ta.field(), alg.dim())};
  for (const auto& v : q.vertices) rq.idempotents.push_back(ta.e_phi(fam, v));
  for (const auto& a : q.arrows)
    rq.arrows.push_back(alg.mul(alg.mul(ta.from_h(a.g), ta.from_p(w.w[a.i])), rq.idempotents[q.vertex_position(a.source)]));
  // Paths from the vertices: p e_s = p, so p a is nonzero only for arrows a
  // ending at s, and the product starts at the source of a. Idempotents add
  // nothing beyond the empty paths.
  std::vector<std::pair<FVec, std::size_t>> queue;
  for (std::size_t v = 0; v < q.vertices.size(); ++v)
    if (rq.a_span.add(rq.idempotents[v])) queue.emplace_back(rq.idempotents[v], v);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto [path, start] = queue[head];
    for (std::size_t k = 0; k < q.arrows.size(); ++k) {
      const Arrow& a = q.arrows[k];
      if (q.vertex_position(a.target) != start) continue;
      FVec next = alg.mul(path, rq.arrows[k]);
      if (rq.a_span.add(next)) queue.emplace_back(std::move(next), q.vertex_position(a.source));
    }
  }
  return rq;
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

std::vector<CheckResult> verify_in_algebra(const QuiverPresentation& q, const RealizedQuiver& rq,
                                           const TwistedAlgebra& ta, const MatSubalgebra& m) {
  const StructAlgebra& alg = ta.algebra();
  const FieldSpec& f = ta.field();
  auto arrow_vec = [&](std::size_t i, const PhiIndex& src) -> const FVec& {
    return rq.arrows[i * q.vertices.size() + q.vertex_position(src)];
  };
  std::vector<CheckResult> out;

  CheckResult st = make_check("source/target idempotents", Errc::RelationFails);
  for (std::size_t k = 0; k < q.arrows.size(); ++k) {
    const Arrow& a = q.arrows[k];
    const FVec& t = rq.idempotents[q.vertex_position(a.target)];
    const FVec& s = rq.idempotents[q.vertex_position(a.source)];
    if (alg.mul(alg.mul(t, rq.arrows[k]), s) != rq.arrows[k])
      fail(st, "arrow " + std::to_string(a.i + 1) + " at " + q.vertex_label(a.source));
    if (is_zero(rq.arrows[k])) fail(st, "arrow " + std::to_string(a.i + 1) + " vanishes");
  }
  out.push_back(st);

  CheckResult comm = make_check("commutation relations", Errc::RelationFails);
  for (const auto& rel : q.commutations) {
    const Arrow& ai = q.arrow(rel.i, rel.phi);
    const Arrow& aj = q.arrow(rel.j, rel.phi);
    const FVec lhs = alg.mul(arrow_vec(rel.j, ai.target), arrow_vec(rel.i, rel.phi));
    const FVec rhs = alg.scale(f.embed(rel.q), alg.mul(arrow_vec(rel.i, aj.target), arrow_vec(rel.j, rel.phi)));
    if (lhs != rhs)
      fail(comm, "relation (" + std::to_string(rel.i + 1) + "," + std::to_string(rel.j + 1) + ") at " +
                     q.vertex_label(rel.phi));
  }
  out.push_back(comm);

  CheckResult pw = make_check("power relations", Errc::RelationFails);
  for (const auto& pr : q.powers) {
    PhiIndex cur = pr.phi;
    FVec path = rq.idempotents[q.vertex_position(cur)];
    for (std::int64_t k = 0; k < pr.length; ++k) {
      const Arrow& a = q.arrow(pr.i, cur);
      path = alg.mul(arrow_vec(pr.i, cur), path);
      cur = a.target;
    }
    if (!is_zero(path)) fail(pw, "power relation of arrow " + std::to_string(pr.i + 1) + " at " + q.vertex_label(pr.phi));
  }
  out.push_back(pw);

  CheckResult dim = make_check("dim A matches the presentation", Errc::DimensionMismatch);
  const auto expected = presentation_dimension(q);
  if (!expected) {
    fail(dim, "presentation has an arrow type without power relation; normal form is infinite");
  } else if (static_cast<std::int64_t>(rq.a_span.rank()) != *expected) {
    fail(dim, "span has dimension " + std::to_string(rq.a_span.rank()) + ", presentation predicts " +
                  std::to_string(*expected));
  } else {
    dim.detail = "dim A = " + std::to_string(*expected);
  }
  out.push_back(dim);

  CheckResult cm = make_check("arrows commute with M", Errc::CommutationFails);
  for (std::size_t k = 0; k < q.arrows.size(); ++k)
    for (const auto& mv : m.span.rows())
      if (alg.mul(rq.arrows[k], mv) != alg.mul(mv, rq.arrows[k])) {
        fail(cm, "arrow " + std::to_string(q.arrows[k].i + 1) + " at " + q.vertex_label(q.arrows[k].source));
        break;
      }
  out.push_back(cm);
  return out;
}

CheckResult verify_tensor_decomposition(const RealizedQuiver& rq, const MatSubalgebra& m, const TwistedAlgebra& ta) {
  const StructAlgebra& alg = ta.algebra();
  CheckResult c = make_check("A (x) M -> k(P x| H)e is onto", Errc::SpanDeficient);
  const std::size_t da = rq.a_span.rank(), dm = m.span.rank();
  if (da * dm != alg.dim()) {
    fail(c, "dim A * dim M = " + std::to_string(da * dm) + " but the algebra has dimension " + std::to_string(alg.dim()));
    return c;
  }
  EchelonBasis prod(ta.field(), alg.dim());
  for (const auto& a : rq.a_span.rows())
    for (const auto& mv : m.span.rows()) {
      prod.add(alg.mul(a, mv));
      if (prod.rank() == alg.dim()) break;
    }
  if (prod.rank() != alg.dim())
    fail(c, "products span only " + std::to_string(prod.rank()) + " of " + std::to_string(alg.dim()));
  else
    c.detail = std::to_string(da) + " * " + std::to_string(dm) + " = " + std::to_string(alg.dim());
  return c;
}

}  // namespace twistalg
