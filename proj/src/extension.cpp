#include "twistalg/extension.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "twistalg/error.hpp"
#include "twistalg/modlinalg.hpp"

namespace twistalg {

ExtGroup::ExtGroup(FinAbGroup l, AlternatingForm tau)
    : l_(std::move(l)), tau_(std::move(tau)), alpha_(cocycle_from_form(tau_)), m_(tau_.value_order()) {
  if (!(tau_.l().orders() == l_.orders())) throw Error(Errc::BadForm, "form is defined on a different group");
  std::int64_t g = m_;
  for (const auto& t : tau_.values()) g = std::gcd(g, t.with_order(m_).exponent());
  commutator_is_z_ = g == 1 || m_ == 1;

  const std::size_t s = l_.rank();
  const std::int64_t e = l_.exponent();
  if (s > 0) {
    IntMat rows(s, IntVec(s, 0));
    for (std::size_t k = 0; k < s; ++k)
      for (std::size_t j = 0; j < s; ++j) rows[k][j] = tau_.t(j, k).with_order(e).exponent();
    std::vector<AbElement> gens;
    for (auto& v : kernel_mod(rows, s, e)) gens.push_back(l_.reduce(v));
    rad_ = subgroup_basis(l_, gens);
  }
  rad_elems_ = subgroup_elements(l_, rad_.basis);
  in_rad_.assign(static_cast<std::size_t>(l_.order()), false);
  for (const auto& x : rad_elems_) in_rad_[l_.index(x)] = true;

  for (std::size_t k = 0; k < rad_.basis.size(); ++k) {
    const HElement p = pow(lift(rad_.basis[k]), rad_.orders[k]);
    if (!(p.x == l_.identity())) throw Error(Errc::DimensionMismatch, "radical basis element has wrong order");
    c_.push_back(p.z);
  }
  rad_coords_.assign(static_cast<std::size_t>(l_.order()), IntVec{});
  rad_offset_.assign(static_cast<std::size_t>(l_.order()), 0);
  FinAbGroup coords(rad_.orders);
  for (const auto& a : coords.elements()) {
    HElement h = identity();
    for (std::size_t k = 0; k < a.x.size(); ++k) h = mul(h, pow(lift(rad_.basis[k]), a.x[k]));
    rad_coords_[l_.index(h.x)] = a.x;
    rad_offset_[l_.index(h.x)] = h.z;
  }

  const std::int64_t index = l_.order() / rad_.order();
  degree_ = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(index))));
  if (degree_ * degree_ != index) throw Error(Errc::NotIntegralM, "|H : Z(H)| is not a perfect square");
}

HElement ExtGroup::mul(const HElement& a, const HElement& b) const {
  return {mod(a.z + b.z + alpha_.exponent(l_.index(a.x), l_.index(b.x)) * (m_ / alpha_.order()), m_),
          l_.add(a.x, b.x)};
}

HElement ExtGroup::inv(const HElement& a) const {
  const AbElement nx = l_.neg(a.x);
  return {mod(-a.z - alpha_.exponent(l_.index(a.x), l_.index(nx)) * (m_ / alpha_.order()), m_), nx};
}

HElement ExtGroup::pow(const HElement& a, std::int64_t k) const {
  HElement base = k < 0 ? inv(a) : a;
  std::int64_t n = k < 0 ? -k : k;
  HElement r = identity();
  while (n > 0) {
    if (n & 1) r = mul(r, base);
    base = mul(base, base);
    n >>= 1;
  }
  return r;
}

HElement ExtGroup::commutator(const HElement& g, const HElement& h) const {
  return mul(mul(g, h), inv(mul(h, g)));
}

std::vector<HElement> ExtGroup::elements() const {
  std::vector<HElement> out;
  out.reserve(static_cast<std::size_t>(order()));
  for (std::int64_t i = 0; i < order(); ++i) out.push_back(element(i));
  return out;
}

std::vector<HElement> ExtGroup::center() const {
  std::vector<HElement> out;
  for (const auto& x : rad_elems_)
    for (std::int64_t z = 0; z < m_; ++z) out.push_back({z, x});
  std::sort(out.begin(), out.end(), [&](const HElement& a, const HElement& b) { return index(a) < index(b); });
  return out;
}

AbCharacter ExtGroup::rho(const HElement& g) const { return tau_.pairing(g.x); }

// ---------------------------------------------------------------------------

PhiFamily::PhiFamily(const ExtGroup& h) : h_(h) {
  const auto& rad = h_.radical();
  FinAbGroup index(rad.orders);
  for (const auto& a : index.elements()) {
    PhiIndex phi{a.x};
    std::vector<RootScalar> values;
    for (std::size_t k = 0; k < rad.basis.size(); ++k) values.emplace_back(rad.orders[k], a.x[k]);
    xi_.push_back(solve_character_extension(h_.l(), rad.basis, values));
    phis_.push_back(std::move(phi));
  }
}

std::size_t PhiFamily::position(const PhiIndex& phi) const {
  auto it = std::lower_bound(phis_.begin(), phis_.end(), phi);
  if (it == phis_.end() || !(*it == phi)) throw Error(Errc::DimensionMismatch, "character is not in the family");
  return static_cast<std::size_t>(it - phis_.begin());
}

RootScalar PhiFamily::value(const PhiIndex& phi, const HElement& h) const {
  if (!h_.is_central(h)) throw Error(Errc::ZNotCentral, "phi evaluated off Z(H)");
  const std::int64_t m = h_.m();
  const auto& rad = h_.radical();
  const IntVec& a = h_.radical_coords(h.x);
  RootScalar v(m, h.z - h_.radical_offset(h.x));
  for (std::size_t k = 0; k < a.size(); ++k) {
    const std::int64_t ek = rad.orders[k];
    v = v * RootScalar(m * ek, a[k] * (h_.radical_power_offsets()[k] + m * phi.j[k]));
  }
  return v;
}

RootScalar PhiFamily::xi_value(const PhiIndex& phi, const HElement& h) const {
  return h_.l().evaluate(xi(phi), h.x);
}

PhiIndex PhiFamily::shift(const PhiIndex& phi, const AbCharacter& psi) const {
  const auto& rad = h_.radical();
  PhiIndex out = phi;
  for (std::size_t k = 0; k < rad.basis.size(); ++k) {
    const RootScalar v = h_.l().evaluate(psi, rad.basis[k]);
    out.j[k] = mod(out.j[k] + v.with_order(rad.orders[k]).exponent(), rad.orders[k]);
  }
  return out;
}

std::int64_t PhiFamily::value_order() const {
  std::int64_t n = h_.m();
  for (auto e : h_.radical().orders) n = lcm64(n, h_.m() * e);
  return n;
}

// ---------------------------------------------------------------------------

MaxAbelian max_abelian_subgroup(const ExtGroup& h) {
  const FinAbGroup& l = h.l();
  std::vector<AbElement> gens = h.radical().basis;
  std::vector<bool> in_span(static_cast<std::size_t>(l.order()), false);
  auto refresh = [&] {
    for (const auto& x : subgroup_elements(l, gens)) in_span[l.index(x)] = true;
  };
  refresh();
  for (const auto& x : l.elements()) {
    if (in_span[l.index(x)]) continue;
    bool isotropic = true;
    for (const auto& g : gens) isotropic = isotropic && h.form().evaluate(x, g).is_one();
    if (!isotropic) continue;
    gens.push_back(x);
    refresh();
  }
  MaxAbelian out;
  out.isotropic = subgroup_elements(l, gens);
  for (const auto& x : out.isotropic)
    for (std::int64_t z = 0; z < h.m(); ++z) out.elements.push_back({z, x});
  return out;
}

namespace {

// A as an abstract abelian group via the presentation on (1,0), (0,i_k).
struct AbstractA {
  FinAbGroup group;
  SubgroupBasis basis;      // basis of I
  IntMat v;                 // smith column transform
  std::vector<std::size_t> kept;  // nontrivial smith factors
  std::vector<IntVec> coords;     // per L-index: coordinates in basis of I
  std::vector<std::int64_t> offset;
};

AbstractA abstract_a(const ExtGroup& h, const MaxAbelian& a) {
  const FinAbGroup& l = h.l();
  AbstractA out;
  out.basis = subgroup_basis(l, a.isotropic);
  const std::size_t k = out.basis.basis.size();
  const std::int64_t m = h.m();
  std::int64_t big = m;
  for (auto f : out.basis.orders) big = lcm64(big, m * f);
  IntMat rel;
  IntVec r0(k + 1, 0);
  r0[0] = m;
  rel.push_back(r0);
  for (std::size_t i = 0; i < k; ++i) {
    const HElement p = h.pow(h.lift(out.basis.basis[i]), out.basis.orders[i]);
    IntVec r(k + 1, 0);
    r[0] = -p.z;
    r[i + 1] = out.basis.orders[i];
    rel.push_back(r);
  }
  ModSmith s = smith_mod(rel, k + 1, big);
  IntVec orders;
  for (std::size_t i = 0; i <= k; ++i) {
    const std::int64_t o = i < s.diag.size() ? std::gcd(s.diag[i], big) : big;
    if (o > 1) {
      orders.push_back(o);
      out.kept.push_back(i);
    }
  }
  out.group = FinAbGroup(orders);
  if (out.group.order() != m * out.basis.order())
    throw Error(Errc::DimensionMismatch, "abstract model of A has the wrong order");
  out.v = s.v;
  out.coords.assign(static_cast<std::size_t>(l.order()), IntVec{});
  out.offset.assign(static_cast<std::size_t>(l.order()), 0);
  for (const auto& b : FinAbGroup(out.basis.orders).elements()) {
    HElement p = h.identity();
    for (std::size_t i = 0; i < k; ++i) p = h.mul(p, h.pow(h.lift(out.basis.basis[i]), b.x[i]));
    out.coords[l.index(p.x)] = b.x;
    out.offset[l.index(p.x)] = p.z;
  }
  return out;
}

AbElement to_abstract(const ExtGroup& h, const AbstractA& a, const HElement& g) {
  const std::size_t li = static_cast<std::size_t>(h.l().index(g.x));
  IntVec u;
  u.push_back(g.z - a.offset[li]);
  for (auto c : a.coords[li]) u.push_back(c);
  IntVec out;
  for (auto col : a.kept) {
    std::int64_t v = 0;
    for (std::size_t r = 0; r < u.size(); ++r) v += u[r] * a.v[r][col];
    out.push_back(v);
  }
  return a.group.reduce(out);
}

Cyclotomic rotate(const Cyclotomic& c, std::int64_t k) {
  Cyclotomic out(c.conductor());
  const auto& co = c.coefficients();
  for (std::int64_t i = 0; i < c.conductor(); ++i)
    if (co[i] != 0) out.add_root(i + k, co[i]);
  return out;
}

}  // namespace

std::int64_t class_function_conductor(const ExtGroup& h, const PhiFamily& fam) {
  return lcm64(h.m() * h.l().exponent(), fam.value_order());
}

ClassFunction induced_irreducible(const ExtGroup& h, const PhiFamily& fam, const PhiIndex& phi) {
  const FinAbGroup& l = h.l();
  const MaxAbelian a = max_abelian_subgroup(h);
  const AbstractA abs = abstract_a(h, a);
  std::vector<AbElement> gens{to_abstract(h, abs, h.central(1))};
  std::vector<RootScalar> values{fam.value(phi, h.central(1))};
  for (const auto& r : h.radical().basis) {
    gens.push_back(to_abstract(h, abs, h.lift(r)));
    values.push_back(fam.value(phi, h.lift(r)));
  }
  const AbCharacter psi = solve_character_extension(abs.group, gens, values);

  const std::int64_t n = class_function_conductor(h, fam);
  std::vector<bool> in_i(static_cast<std::size_t>(l.order()), false);
  for (const auto& x : a.isotropic) in_i[l.index(x)] = true;
  std::vector<AbElement> reps;
  std::vector<bool> covered(static_cast<std::size_t>(l.order()), false);
  for (const auto& x : l.elements()) {
    if (covered[l.index(x)]) continue;
    reps.push_back(x);
    for (const auto& y : a.isotropic) covered[l.index(l.add(x, y))] = true;
  }
  ClassFunction out;
  for (const auto& g : h.elements()) {
    Cyclotomic v(n);
    if (in_i[l.index(g.x)])
      for (const auto& x : reps) {
        const HElement t = h.lift(x);
        const HElement c = h.mul(h.mul(t, g), h.inv(t));
        v.add_root(abs.group.evaluate(psi, to_abstract(h, abs, c)).with_order(n).exponent());
      }
    out.push_back(std::move(v));
  }
  if (!(out[0] == Cyclotomic::integer(n, h.degree())))
    throw Error(Errc::NotIntegralM, "induced character has the wrong degree");
  return out;
}

std::int64_t inner_product_times_order(const ExtGroup& h, const ClassFunction& f, const ClassFunction& g) {
  Cyclotomic sum(f.front().conductor());
  for (std::int64_t i = 0; i < h.order(); ++i) sum += f[i] * g[i].conj();
  std::int64_t v = 0;
  if (!sum.is_integer(&v)) throw Error(Errc::DimensionMismatch, "inner product is not rational");
  return v;
}

bool verify_class2_action(const ExtGroup& h, const PhiFamily& fam, const AbCharacter& eta, const PhiIndex& phi) {
  const FinAbGroup& l = h.l();
  const ClassFunction tau = induced_irreducible(h, fam, phi);
  const ClassFunction lhs = induced_irreducible(h, fam, fam.shift(phi, eta));
  const std::int64_t n = tau.front().conductor();
  bool same_as_lhs = true, same_as_tau = true;
  for (std::int64_t i = 0; i < h.order(); ++i) {
    const HElement g = h.element(i);
    const Cyclotomic rhs = rotate(tau[i], l.evaluate(eta, g.x).with_order(n).exponent());
    same_as_lhs = same_as_lhs && rhs == lhs[i];
    same_as_tau = same_as_tau && rhs == tau[i];
  }
  bool trivial_on_center = true;
  for (const auto& r : h.radical().basis) trivial_on_center = trivial_on_center && l.evaluate(eta, r).is_one();
  return same_as_lhs && same_as_tau == trivial_on_center;
}

}  // namespace twistalg
