#include "twistalg/cocycles.hpp"

#include <numeric>

#include "twistalg/error.hpp"
#include "twistalg/modlinalg.hpp"

namespace twistalg {

AlternatingForm::AlternatingForm(FinAbGroup l, std::vector<RootScalar> values) : l_(std::move(l)), t_(std::move(values)) {
  const auto pairs = exterior_square(l_).pairs;
  if (t_.size() != pairs.size()) throw Error(Errc::BadForm, "need one form value per generator pair");
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const std::int64_t g = std::gcd(l_.orders()[pairs[k].first], l_.orders()[pairs[k].second]);
    if (g % t_[k].true_order() != 0)
      throw Error(Errc::BadFormOrder, "form value order must divide gcd(d_j, d_l) for pair " +
                                          std::to_string(pairs[k].first + 1) + "," +
                                          std::to_string(pairs[k].second + 1));
    t_[k] = t_[k].with_order(g);
  }
}

AlternatingForm AlternatingForm::trivial(const FinAbGroup& l) {
  return {l, std::vector<RootScalar>(exterior_square(l).pairs.size())};
}

RootScalar AlternatingForm::t(std::size_t j, std::size_t l) const {
  if (j == l) return RootScalar::one();
  const bool swap = j > l;
  if (swap) std::swap(j, l);
  // index of (j, l) in exterior_square order
  const std::size_t s = l_.rank();
  const std::size_t k = j * s - j * (j + 1) / 2 + (l - j - 1);
  return swap ? t_[k].inverse() : t_[k];
}

std::int64_t AlternatingForm::value_order() const {
  std::int64_t n = 1;
  for (const auto& v : t_) n = lcm64(n, v.true_order());
  return n;
}

bool AlternatingForm::is_trivial() const {
  for (const auto& v : t_)
    if (!v.is_one()) return false;
  return true;
}

RootScalar AlternatingForm::evaluate(const AbElement& x, const AbElement& y) const {
  const std::int64_t n = value_order();
  std::int64_t e = 0;
  for (std::size_t j = 0; j < l_.rank(); ++j)
    for (std::size_t l = j + 1; l < l_.rank(); ++l) {
      const std::int64_t tl = t(j, l).with_order(n).exponent();
      e = mod(e + tl * mod(x.x[j] * y.x[l] - x.x[l] * y.x[j], n), n);
    }
  return {n, e};
}

AbCharacter AlternatingForm::pairing(const AbElement& y) const {
  AbCharacter chi = l_.trivial_character();
  for (std::size_t k = 0; k < l_.rank(); ++k) {
    RootScalar v;
    for (std::size_t j = 0; j < l_.rank(); ++j) v = v * t(j, k).pow(y.x[j]);
    chi.c[k] = v.with_order(l_.orders()[k]).exponent();
  }
  return chi;
}

// ---------------------------------------------------------------------------

Cocycle2::Cocycle2(FinAbGroup l, std::int64_t order, std::vector<std::int64_t> exponents)
    : l_(std::move(l)), n_(order), e_(std::move(exponents)) {
  if (static_cast<std::int64_t>(e_.size()) != l_.order() * l_.order())
    throw Error(Errc::DimensionMismatch, "cocycle table has wrong size");
  for (auto& v : e_) v = mod(v, n_);
}

Cocycle2 Cocycle2::trivial(const FinAbGroup& l) {
  return {l, 1, std::vector<std::int64_t>(static_cast<std::size_t>(l.order() * l.order()), 0)};
}

Cocycle2 Cocycle2::with_order(std::int64_t n) const {
  if (n % n_ != 0) throw Error(Errc::OrderNotSupported, "cocycle order must divide the new carrier order");
  std::vector<std::int64_t> e = e_;
  for (auto& v : e) v *= n / n_;
  return {l_, n, std::move(e)};
}

Cocycle2 Cocycle2::operator*(const Cocycle2& other) const {
  const std::int64_t n = lcm64(n_, other.n_);
  Cocycle2 a = with_order(n), b = other.with_order(n);
  for (std::size_t i = 0; i < a.e_.size(); ++i) a.e_[i] = mod(a.e_[i] + b.e_[i], n);
  return a;
}

Cocycle2 Cocycle2::inverse() const {
  Cocycle2 a = *this;
  for (auto& v : a.e_) v = mod(-v, n_);
  return a;
}

bool Cocycle2::satisfies_cocycle_identity() const {
  const std::int64_t s = l_.order();
  for (std::int64_t x = 0; x < s; ++x)
    for (std::int64_t y = 0; y < s; ++y) {
      const std::int64_t xy = l_.index(l_.add(l_.element(x), l_.element(y)));
      for (std::int64_t z = 0; z < s; ++z) {
        const std::int64_t yz = l_.index(l_.add(l_.element(y), l_.element(z)));
        if (mod(exponent(x, y) + exponent(xy, z) - exponent(y, z) - exponent(x, yz), n_) != 0) return false;
      }
    }
  return true;
}

bool Cocycle2::is_normalized() const {
  for (std::int64_t x = 0; x < l_.order(); ++x)
    if (exponent(0, x) != 0 || exponent(x, 0) != 0) return false;
  return true;
}

bool operator==(const Cocycle2& a, const Cocycle2& b) {
  const std::int64_t n = lcm64(a.n_, b.n_);
  return a.with_order(n).e_ == b.with_order(n).e_;
}

// ---------------------------------------------------------------------------

LAutomorphism::LAutomorphism(const FinAbGroup& l, std::vector<AbElement> images) : l_(l), images_(std::move(images)) {
  if (images_.size() != l_.rank()) throw Error(Errc::NotAnAutomorphism, "need one image per generator");
  for (std::size_t j = 0; j < l_.rank(); ++j) {
    images_[j] = l_.reduce(images_[j].x);
    if (l_.scale(images_[j], l_.orders()[j]) != l_.identity())
      throw Error(Errc::NotAnAutomorphism, "generator image order does not divide the generator order");
  }
  inverse_.assign(static_cast<std::size_t>(l_.order()), AbElement{});
  std::vector<bool> hit(static_cast<std::size_t>(l_.order()), false);
  for (const auto& x : l_.elements()) {
    const std::int64_t k = l_.index(apply(x));
    if (hit[k]) throw Error(Errc::NotAnAutomorphism, "map is not injective");
    hit[k] = true;
    inverse_[k] = x;
  }
}

LAutomorphism LAutomorphism::power(const FinAbGroup& l, std::int64_t k) {
  std::vector<AbElement> images;
  for (std::size_t j = 0; j < l.rank(); ++j) images.push_back(l.scale(l.generator(j), k));
  return {l, std::move(images)};
}

AbElement LAutomorphism::apply(const AbElement& x) const {
  AbElement y = l_.identity();
  for (std::size_t j = 0; j < l_.rank(); ++j) y = l_.add(y, l_.scale(images_[j], x.x[j]));
  return y;
}

// ---------------------------------------------------------------------------

AlternatingForm form_from_cocycle(const Cocycle2& alpha) {
  const FinAbGroup& l = alpha.l();
  std::vector<RootScalar> t;
  for (auto [j, k] : exterior_square(l).pairs) {
    const AbElement a = l.generator(j), b = l.generator(k);
    t.push_back(alpha.value(a, b) * alpha.value(b, a).inverse());
  }
  return {l, std::move(t)};
}

Cocycle2 cocycle_from_form(const AlternatingForm& tau) {
  const FinAbGroup& l = tau.l();
  const std::int64_t n = tau.value_order();
  const std::int64_t s = l.order();
  std::vector<std::int64_t> lt(l.rank() * l.rank(), 0);
  for (std::size_t j = 0; j < l.rank(); ++j)
    for (std::size_t k = 0; k < l.rank(); ++k) lt[j * l.rank() + k] = tau.t(j, k).with_order(n).exponent();
  std::vector<std::int64_t> e(static_cast<std::size_t>(s * s), 0);
  for (std::int64_t xi = 0; xi < s; ++xi) {
    const AbElement x = l.element(xi);
    for (std::int64_t yi = 0; yi < s; ++yi) {
      const AbElement y = l.element(yi);
      std::int64_t v = 0;
      for (std::size_t j = 0; j < l.rank(); ++j)
        for (std::size_t k = 0; k < j; ++k) v = mod(v + lt[j * l.rank() + k] * mod(x.x[j] * y.x[k], n), n);
      e[xi * s + yi] = v;
    }
  }
  return {l, n, std::move(e)};
}

Cocycle2 twist_by_automorphism(const Cocycle2& alpha, const LAutomorphism& phi) {
  const FinAbGroup& l = alpha.l();
  const std::int64_t s = l.order();
  std::vector<std::int64_t> inv(static_cast<std::size_t>(s));
  for (std::int64_t x = 0; x < s; ++x) inv[x] = l.index(phi.apply_inverse(l.element(x)));
  std::vector<std::int64_t> e(static_cast<std::size_t>(s * s));
  for (std::int64_t x = 0; x < s; ++x)
    for (std::int64_t y = 0; y < s; ++y) e[x * s + y] = alpha.exponent(inv[x], inv[y]);
  return {l, alpha.order(), std::move(e)};
}

AlternatingForm twist_form(const AlternatingForm& tau, const LAutomorphism& phi) {
  const FinAbGroup& l = tau.l();
  std::vector<RootScalar> t;
  for (auto [j, k] : exterior_square(l).pairs)
    t.push_back(tau.evaluate(phi.apply_inverse(l.generator(j)), phi.apply_inverse(l.generator(k))));
  return {l, std::move(t)};
}

Cocycle2 frobenius_twist_class(const Cocycle2& alpha, std::int64_t q) {
  const std::int64_t n = alpha.order();
  auto inv = inverse_mod(q, n);
  if (!inv) throw Error(Errc::NotInvertible, "q is not invertible modulo the cocycle value order");
  const std::int64_t s = alpha.l().order();
  std::vector<std::int64_t> e(static_cast<std::size_t>(s * s));
  for (std::int64_t x = 0; x < s; ++x)
    for (std::int64_t y = 0; y < s; ++y) e[x * s + y] = mod(alpha.exponent(x, y) * *inv, n);
  return {alpha.l(), n, std::move(e)};
}

AlternatingForm frobenius_twist_form(const AlternatingForm& tau, std::int64_t q) {
  std::vector<RootScalar> t;
  for (const auto& v : tau.values()) t.push_back(frobenius_inverse_power(v, q));
  return {tau.l(), std::move(t)};
}

AutFrobWitness verify_autfrob(const Cocycle2& alpha, std::int64_t p) {
  AutFrobWitness w;
  const auto phi = LAutomorphism::power(alpha.l(), p);
  w.twisted = form_from_cocycle(twist_by_automorphism(alpha, phi));
  w.frobenius = form_from_cocycle(frobenius_twist_class(alpha, p * p));
  w.holds = w.twisted == w.frobenius;
  return w;
}

Cocycle2 coboundary(const FinAbGroup& l, std::int64_t order, const std::vector<std::int64_t>& beta) {
  const std::int64_t s = l.order();
  std::vector<std::int64_t> e(static_cast<std::size_t>(s * s));
  for (std::int64_t x = 0; x < s; ++x)
    for (std::int64_t y = 0; y < s; ++y) {
      const std::int64_t xy = l.index(l.add(l.element(x), l.element(y)));
      e[x * s + y] = beta[x] + beta[y] - beta[xy];
    }
  return {l, order, std::move(e)};
}

Cochain1 solve_coboundary(const Cocycle2& alpha1, const Cocycle2& alpha2) {
  if (!(form_from_cocycle(alpha1) == form_from_cocycle(alpha2)))
    throw Error(Errc::NotCohomologous, "cocycles have different alternating forms");
  const FinAbGroup& l = alpha1.l();
  const Cocycle2 delta = alpha1 * alpha2.inverse();
  const std::int64_t n = delta.order();
  // square roots of delta-values may be needed, so solve over mu_{N exp(L)}
  const std::int64_t big = n * l.exponent();
  const std::int64_t s = l.order();
  IntMat rows;
  IntVec rhs;
  for (std::int64_t x = 0; x < s; ++x)
    for (std::int64_t y = x; y < s; ++y) {
      IntVec row(static_cast<std::size_t>(s), 0);
      const std::int64_t xy = l.index(l.add(l.element(x), l.element(y)));
      row[x] += 1;
      row[y] += 1;
      row[xy] -= 1;
      for (auto& v : row) v = mod(v, big);
      rows.push_back(std::move(row));
      rhs.push_back(delta.exponent(x, y) * (big / n));
    }
  auto sol = solve_mod(rows, static_cast<std::size_t>(s), rhs, big);
  if (!sol) throw Error(Errc::NotCohomologous, "no cochain has the required coboundary");
  Cochain1 beta{big, sol->particular};
  // shrink to the smallest carrier order
  std::int64_t ord = 1;
  for (auto v : beta.exponents) ord = lcm64(ord, RootScalar(big, v).true_order());
  for (auto& v : beta.exponents) v = RootScalar(big, v).with_order(ord).exponent();
  beta.order = ord;
  if (!(coboundary(l, ord, beta.exponents) == delta))
    throw Error(Errc::NotCohomologous, "coboundary solution failed verification");
  return beta;
}

}  // namespace twistalg
