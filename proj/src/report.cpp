#include "twistalg/report.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "twistalg/problem_file.hpp"

namespace twistalg {

using json = nlohmann::ordered_json;

namespace {

std::string vec_text(const IntVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + ")";
}

std::string h_text(const HElement& g) { return "(z=" + std::to_string(g.z) + ", x=" + vec_text(g.x.x) + ")"; }

std::string group_text(const IntVec& orders) {
  if (orders.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < orders.size(); ++i) s += (i ? " x C" : "C") + std::to_string(orders[i]);
  return s;
}

json scalar_json(const RootScalar& z, const FieldSpec& f) {
  json j;
  j["order"] = z.order();
  j["exponent"] = z.exponent();
  j["field_log"] = f.log(f.embed(z));
  return j;
}

json h_json(const HElement& g) { return json{{"z", g.z}, {"x", g.x.x}}; }

HElement h_from(const json& j) { return {j.at("z").get<std::int64_t>(), AbElement{j.at("x").get<IntVec>()}}; }

RootScalar scalar_from(const json& j) { return {j.at("order").get<std::int64_t>(), j.at("exponent").get<std::int64_t>()}; }

json check_json(const CheckResult& c) {
  return json{{"name", c.name}, {"passed", c.passed}, {"code", to_string(c.code)}, {"detail", c.detail}};
}

json presentation_json(const QuiverPresentation& q, const FieldSpec* f) {
  json j;
  j["p"] = q.p;
  j["vertices"] = json::array();
  for (const auto& v : q.vertices) j["vertices"].push_back(json{{"label", q.vertex_label(v)}, {"phi", v.j}});
  j["arrow_types"] = json::array();
  for (std::size_t i = 0; i < q.psi.size(); ++i)
    j["arrow_types"].push_back(json{{"name", "w" + std::to_string(i + 1)}, {"psi", q.psi[i].c}, {"n", q.n[i]}});
  j["arrows"] = json::array();
  for (const auto& a : q.arrows)
    j["arrows"].push_back(json{{"type", a.i + 1}, {"source", a.source.j}, {"target", a.target.j}, {"g", h_json(a.g)}});
  j["commutations"] = json::array();
  for (const auto& c : q.commutations) {
    json r{{"i", c.i + 1}, {"j", c.j + 1}, {"phi", c.phi.j}};
    if (f) {
      r["q"] = scalar_json(c.q, *f);
      r["phi_of_z"] = scalar_json(c.phi_of_z, *f);
    } else {
      r["q"] = json{{"order", c.q.order()}, {"exponent", c.q.exponent()}};
      r["phi_of_z"] = json{{"order", c.phi_of_z.order()}, {"exponent", c.phi_of_z.exponent()}};
    }
    r["z"] = h_json(c.z);
    j["commutations"].push_back(std::move(r));
  }
  j["powers"] = json::array();
  for (const auto& pr : q.powers) j["powers"].push_back(json{{"type", pr.i + 1}, {"phi", pr.phi.j}, {"length", pr.length}});
  return j;
}

std::string verdict_line(const CheckResult& c) {
  std::string s = c.passed ? "  PASS  " : "  FAIL  ";
  s += c.name;
  if (!c.passed) s += "  [" + std::string(to_string(c.code)) + "]";
  if (!c.detail.empty()) s += "  (" + c.detail + ")";
  return s;
}

}  // namespace

std::string field_text(const FieldSpec& f) {
  std::string s = "F_" + std::to_string(f.size());
  if (f.degree() > 1) {
    s += " = F_" + std::to_string(f.characteristic()) + "[a]/(a^" + std::to_string(f.degree());
    const auto& m = f.modulus();  // lower coefficients of the monic modulus
    for (std::size_t k = m.size(); k-- > 0;) {
      if (m[k] == 0) continue;
      s += " + ";
      if (m[k] != 1 || k == 0) s += std::to_string(m[k]);
      if (k > 0) s += k == 1 ? "a" : "a^" + std::to_string(k);
    }
    s += ")";
  }
  return s;
}

std::string scalar_text(const RootScalar& z, const FieldSpec& f) {
  const RootScalar r = z.reduced();
  if (r.is_one()) return "1";
  std::string s = "zeta_" + std::to_string(r.order()) + "^" + std::to_string(r.exponent());
  const FieldElement e = f.embed(r);
  if (f.degree() == 1) return s + " = " + std::to_string(e.code);
  return s + " = g^" + std::to_string(f.log(e));
}

std::string report_text(const PresentationReport& r) {
  const Pipeline& pl = *r.pl;
  const Instance& in = pl.in;
  const ExtGroup& h = in.h;
  const QuiverPresentation& q = pl.q;
  std::ostringstream o;
  o << "problem " << (in.spec.name.empty() ? "(unnamed)" : in.spec.name) << ", p = " << in.spec.p << ", seed "
    << r.seed << "\n";
  o << "field " << field_text(in.field) << "\n";
  o << "verification field: all identities are checked exactly over this finite field; Witt-vector lifts are not computed\n";
  o << "P = ";
  for (std::size_t c = 0; c < in.spec.components.size(); ++c) {
    const auto& comp = in.spec.components[c];
    o << (c ? " x " : "") << "(Z/" << in.p.modulus(static_cast<int>(c)) << ")^" << comp.rank;
  }
  o << ", L = " << group_text(in.spec.l_orders) << "\n";
  o << "H: |H| = " << h.order() << ", m = " << h.m() << ", |Z(H)| = " << h.center().size()
    << ", |Z(H):Z| = " << h.radical_elements().size() << ", degree " << h.degree() << "\n";
  o << "form:";
  if (in.spec.form.empty()) o << " trivial";
  for (const auto& e : in.spec.form)
    o << " t(" << e.i + 1 << "," << e.j + 1 << ") = " << scalar_text(RootScalar(e.order, e.exponent), in.field);
  o << "\n\n";

  o << "vertices (" << q.vertices.size() << "), phi_0 = " << q.vertex_label(in.fam.members().front()) << ":\n";
  for (const auto& v : q.vertices) o << "  " << q.vertex_label(v) << "  xi = " << vec_text(in.fam.xi(v).c) << "\n";
  o << "arrows (" << q.arrows.size() << "):\n";
  for (const auto& a : q.arrows)
    o << "  w" << a.i + 1 << ": " << q.vertex_label(a.source) << " -> " << q.vertex_label(a.target) << "  g = " << h_text(a.g)
      << "\n";
  for (std::size_t i = 0; i < q.psi.size(); ++i)
    o << "  psi_" << i + 1 << " = " << vec_text(q.psi[i].c) << ", n_" << i + 1 << " = " << q.n[i] << "\n";
  o << "commutation relations w_j w_i = q w_i w_j:\n";
  if (q.commutations.empty()) o << "  none\n";
  for (const auto& c : q.commutations)
    o << "  (" << c.i + 1 << "," << c.j + 1 << ") at " << q.vertex_label(c.phi) << ": q = " << scalar_text(c.q, in.field)
      << ", phi(z) = " << scalar_text(c.phi_of_z, in.field) << ", z = " << h_text(c.z) << "\n";
  o << "power relations:\n";
  if (q.powers.empty()) o << "  none\n";
  for (const auto& pr : q.powers)
    o << "  w" << pr.i + 1 << "^" << pr.length << " = 0 from " << q.vertex_label(pr.phi) << "\n";
  const auto nf = presentation_dimension(q);
  o << "\ndimensions: dim A = " << pl.rq.a_span.rank() << " (normal forms " << (nf ? std::to_string(*nf) : "unbounded")
    << "), dim M = " << pl.m.span.rank() << ", dim k(P x| H)e = " << pl.ta.algebra().dim() << "\n";
  if (pl.fault != Fault::None)
    o << "fault injected: " << to_string(pl.fault) << (pl.fault_applied ? "" : " (not applicable here)") << "\n";

  if (!r.verdicts.empty()) {
    o << "\nverdicts:\n";
    for (const auto& c : r.verdicts) o << verdict_line(c) << "\n";
  }
  if (r.frobenius) {
    const FrobWitness& w = r.frobenius->witness;
    o << "\nFrobenius twist k_alpha(P x| L) -> k_alpha(P x| L)^(p^2):\n";
    for (std::size_t c = 0; c < w.tau.size(); ++c) {
      o << "  tau on component " << c + 1 << ":";
      for (const auto& row : w.tau[c]) o << " " << vec_text(row);
      o << "\n";
    }
    o << "  beta0 values (order " << w.beta0.order << "): " << vec_text(w.beta0.exponents) << "\n";
    o << "  single p-twist identity: " << (w.single_twist_holds ? "holds" : "fails") << "\n";
    for (const auto& c : r.frobenius->checks) o << verdict_line(c) << "\n";
  }
  return o.str();
}

std::string report_json(const PresentationReport& r) {
  const Pipeline& pl = *r.pl;
  const Instance& in = pl.in;
  json j;
  j["problem"] = in.spec.name;
  j["p"] = in.spec.p;
  j["seed"] = r.seed;
  j["field"] = json{{"order", in.field.size()},
                    {"characteristic", in.field.characteristic()},
                    {"degree", in.field.degree()},
                    {"modulus", in.field.modulus()},
                    {"text", field_text(in.field)}};
  j["verification_field"] = "finite field above; Witt-vector lifts not computed";
  j["H"] = json{{"order", in.h.order()},
                {"m", in.h.m()},
                {"center_order", in.h.center().size()},
                {"center_index_over_Z", in.h.radical_elements().size()},
                {"degree", in.h.degree()}};
  json xi = json::array();
  for (const auto& v : pl.q.vertices) xi.push_back(json{{"phi", v.j}, {"xi", in.fam.xi(v).c}});
  j["choices"] = json{{"phi0", in.fam.members().front().j}, {"xi", xi}};
  j["presentation"] = presentation_json(pl.q, &in.field);
  const auto nf = presentation_dimension(pl.q);
  j["dimensions"] = json{{"A", pl.rq.a_span.rank()},
                         {"normal_forms", nf ? json(*nf) : json(nullptr)},
                         {"M", pl.m.span.rank()},
                         {"twisted_group_algebra", pl.ta.algebra().dim()}};
  j["fault"] = to_string(pl.fault);
  j["verdicts"] = json::array();
  for (const auto& c : r.verdicts) j["verdicts"].push_back(check_json(c));
  if (r.frobenius) {
    const FrobWitness& w = r.frobenius->witness;
    json fr;
    fr["tau"] = w.tau;
    fr["beta0"] = json{{"order", w.beta0.order}, {"exponents", w.beta0.exponents}};
    fr["single_twist_holds"] = w.single_twist_holds;
    fr["checks"] = json::array();
    for (const auto& c : r.frobenius->checks) fr["checks"].push_back(check_json(c));
    j["frobenius"] = std::move(fr);
  }
  return j.dump(2) + "\n";
}

std::string quiver_dot(const QuiverPresentation& q) {
  std::ostringstream o;
  o << "digraph Q {\n  rankdir=LR;\n  node [shape=circle];\n";
  for (std::size_t v = 0; v < q.vertices.size(); ++v)
    o << "  v" << v << " [label=\"" << q.vertex_label(q.vertices[v]) << "\"];\n";
  for (const auto& a : q.arrows)
    o << "  v" << q.vertex_position(a.source) << " -> v" << q.vertex_position(a.target) << " [label=\"w" << a.i + 1
      << "\"];\n";
  o << "}\n";
  return o.str();
}

std::string presentation_to_json(const QuiverPresentation& q) { return presentation_json(q, nullptr).dump(2) + "\n"; }

QuiverPresentation presentation_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    // nlohmann reports a byte offset; convert it to a line.
    int line = 1;
    for (std::size_t k = 0; k < e.byte && k < text.size(); ++k) line += text[k] == '\n';
    throw ParseError(line, e.what());
  }
  try {
    QuiverPresentation q;
    q.p = j.at("p").get<std::int64_t>();
    for (const auto& v : j.at("vertices")) q.vertices.push_back(PhiIndex{v.at("phi").get<IntVec>()});
    for (const auto& t : j.at("arrow_types")) {
      q.psi.push_back(AbCharacter{t.at("psi").get<IntVec>()});
      q.n.push_back(t.at("n").get<int>());
    }
    for (const auto& a : j.at("arrows"))
      q.arrows.push_back(Arrow{a.at("type").get<std::size_t>() - 1, PhiIndex{a.at("source").get<IntVec>()},
                               PhiIndex{a.at("target").get<IntVec>()}, h_from(a.at("g"))});
    for (const auto& c : j.at("commutations"))
      q.commutations.push_back(CommutationRelation{c.at("i").get<std::size_t>() - 1, c.at("j").get<std::size_t>() - 1,
                                                   PhiIndex{c.at("phi").get<IntVec>()}, scalar_from(c.at("q")),
                                                   scalar_from(c.at("phi_of_z")), h_from(c.at("z"))});
    for (const auto& pr : j.at("powers"))
      q.powers.push_back(PowerRelation{pr.at("type").get<std::size_t>() - 1, PhiIndex{pr.at("phi").get<IntVec>()},
                                       pr.at("length").get<std::int64_t>()});
    return q;
  } catch (const json::exception& e) {
    throw ParseError(1, std::string("presentation JSON: ") + e.what());
  }
}

std::string oracle_text(const OracleReport& r) {
  std::ostringstream o;
  o << "oracle for " << (r.instance.empty() ? "(unnamed)" : r.instance) << "\n";
  for (const auto& c : r.checks) {
    o << (c.asserted ? (c.passed ? "  PASS  " : "  FAIL  ") : "  NOTE  ") << c.name << ": expected " << c.expected
      << ", computed " << c.computed << "  {" << c.validates << "}\n";
  }
  return o.str();
}

std::string oracle_json(const OracleReport& r, bool timings) {
  json j;
  j["instance"] = r.instance;
  j["passed"] = r.passed();
  j["checks"] = json::array();
  for (const auto& c : r.checks) {
    json e{{"name", c.name},     {"validates", c.validates}, {"expected", c.expected},
           {"computed", c.computed}, {"passed", c.passed},       {"asserted", c.asserted}};
    if (timings) e["elapsed_ms"] = c.elapsed_ms;
    j["checks"].push_back(std::move(e));
  }
  return j.dump(2) + "\n";
}

}  // namespace twistalg
