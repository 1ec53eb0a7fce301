#include "twistalg/abelian.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "twistalg/error.hpp"

namespace twistalg {

FinAbGroup::FinAbGroup(IntVec orders) : orders_(std::move(orders)) {
  for (auto d : orders_) {
    if (d < 1) throw Error(Errc::ValidationError, "cyclic factor orders must be positive");
    size_ *= d;
    exponent_ = lcm64(exponent_, d);
  }
}

AbElement FinAbGroup::generator(std::size_t j) const {
  AbElement e = identity();
  e.x[j] = 1 % orders_[j];
  return e;
}

AbElement FinAbGroup::reduce(IntVec x) const {
  x.resize(orders_.size(), 0);
  for (std::size_t j = 0; j < orders_.size(); ++j) x[j] = mod(x[j], orders_[j]);
  return {std::move(x)};
}

AbElement FinAbGroup::add(const AbElement& a, const AbElement& b) const {
  IntVec x(orders_.size());
  for (std::size_t j = 0; j < orders_.size(); ++j) x[j] = mod(a.x[j] + b.x[j], orders_[j]);
  return {std::move(x)};
}

AbElement FinAbGroup::neg(const AbElement& a) const {
  IntVec x(orders_.size());
  for (std::size_t j = 0; j < orders_.size(); ++j) x[j] = mod(-a.x[j], orders_[j]);
  return {std::move(x)};
}

AbElement FinAbGroup::scale(const AbElement& a, std::int64_t k) const {
  IntVec x(orders_.size());
  for (std::size_t j = 0; j < orders_.size(); ++j) x[j] = mod(a.x[j] * mod(k, orders_[j]), orders_[j]);
  return {std::move(x)};
}

std::int64_t FinAbGroup::element_order(const AbElement& a) const {
  std::int64_t o = 1;
  for (std::size_t j = 0; j < orders_.size(); ++j) o = lcm64(o, orders_[j] / std::gcd(orders_[j], a.x[j]));
  return o;
}

std::int64_t FinAbGroup::index(const AbElement& a) const {
  std::int64_t idx = 0;
  for (std::size_t j = 0; j < orders_.size(); ++j) idx = idx * orders_[j] + a.x[j];
  return idx;
}

AbElement FinAbGroup::element(std::int64_t index) const {
  IntVec x(orders_.size());
  for (std::size_t j = orders_.size(); j-- > 0;) {
    x[j] = index % orders_[j];
    index /= orders_[j];
  }
  return {std::move(x)};
}

std::vector<AbElement> FinAbGroup::elements() const {
  std::vector<AbElement> out;
  out.reserve(static_cast<std::size_t>(size_));
  for (std::int64_t i = 0; i < size_; ++i) out.push_back(element(i));
  return out;
}

RootScalar FinAbGroup::evaluate(const AbCharacter& chi, const AbElement& x) const {
  std::int64_t e = 0;
  for (std::size_t j = 0; j < orders_.size(); ++j)
    e = mod(e + chi.c[j] * x.x[j] % exponent_ * (exponent_ / orders_[j]), exponent_);
  return {exponent_, e};
}

AbCharacter FinAbGroup::char_mul(const AbCharacter& a, const AbCharacter& b) const {
  return {add({a.c}, {b.c}).x};
}

AbCharacter FinAbGroup::char_inv(const AbCharacter& a) const { return {neg({a.c}).x}; }

AbCharacter FinAbGroup::character_from_generator_values(const std::vector<RootScalar>& values) const {
  AbCharacter chi = trivial_character();
  for (std::size_t j = 0; j < orders_.size(); ++j) chi.c[j] = values[j].with_order(orders_[j]).exponent();
  return chi;
}

std::int64_t FinAbGroup::character_order(const AbCharacter& a) const { return element_order({a.c}); }

std::vector<AbCharacter> dual_group(const FinAbGroup& g) {
  std::vector<AbCharacter> out;
  out.reserve(static_cast<std::size_t>(g.order()));
  for (std::int64_t i = 0; i < g.order(); ++i) out.push_back({g.element(i).x});
  return out;
}

ExteriorSquare exterior_square(const FinAbGroup& l) {
  ExteriorSquare out;
  IntVec orders;
  for (std::size_t j = 0; j < l.rank(); ++j)
    for (std::size_t k = j + 1; k < l.rank(); ++k) {
      orders.push_back(std::gcd(l.orders()[j], l.orders()[k]));
      out.pairs.emplace_back(j, k);
      out.labels.push_back("a" + std::to_string(j + 1) + "^a" + std::to_string(k + 1));
    }
  out.group = FinAbGroup(orders);
  return out;
}

std::int64_t SubgroupBasis::order() const {
  std::int64_t o = 1;
  for (auto d : orders) o *= d;
  return o;
}

namespace {

// Rows: for each coordinate j, sum_i (E/d_j) gens[i][j] a_i = 0 (mod E).
IntMat relation_rows(const FinAbGroup& g, const std::vector<AbElement>& gens) {
  const std::int64_t e = g.exponent();
  IntMat rows(g.rank(), IntVec(gens.size(), 0));
  for (std::size_t j = 0; j < g.rank(); ++j)
    for (std::size_t i = 0; i < gens.size(); ++i) rows[j][i] = mod(gens[i].x[j] * (e / g.orders()[j]), e);
  return rows;
}

}  // namespace

SubgroupBasis subgroup_basis(const FinAbGroup& g, const std::vector<AbElement>& gens) {
  SubgroupBasis out;
  const std::int64_t e = g.exponent();
  if (gens.empty() || e == 1) return out;
  const std::size_t t = gens.size();
  IntMat kernel = kernel_mod(relation_rows(g, gens), t, e);
  ModSmith s = smith_mod(kernel, t, e);
  for (std::size_t i = 0; i < t; ++i) {
    const std::int64_t o = i < s.diag.size() ? std::gcd(s.diag[i], e) : e;
    AbElement b = g.identity();
    for (std::size_t k = 0; k < t; ++k) b = g.add(b, g.scale(gens[k], s.v_inv[i][k]));
    const std::int64_t actual = g.element_order(b);
    if (actual != o && !(o == e && actual == 1 && i >= s.diag.size()))
      throw Error(Errc::DimensionMismatch, "subgroup basis element has unexpected order");
    if (actual > 1) {
      out.basis.push_back(b);
      out.orders.push_back(actual);
    }
  }
  std::int64_t check = static_cast<std::int64_t>(subgroup_elements(g, gens).size());
  if (check != out.order()) throw Error(Errc::DimensionMismatch, "subgroup basis does not span the subgroup");
  return out;
}

std::vector<AbElement> subgroup_elements(const FinAbGroup& g, const std::vector<AbElement>& gens) {
  std::set<std::int64_t> seen{g.index(g.identity())};
  std::vector<AbElement> frontier{g.identity()};
  while (!frontier.empty()) {
    std::vector<AbElement> next;
    for (const auto& x : frontier)
      for (const auto& s : gens) {
        AbElement y = g.add(x, s);
        if (seen.insert(g.index(y)).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  std::vector<AbElement> out;
  for (auto i : seen) out.push_back(g.element(i));
  return out;
}

AbCharacter solve_character_extension(const FinAbGroup& g, const std::vector<AbElement>& gens,
                                      const std::vector<RootScalar>& values) {
  const std::int64_t e = g.exponent();
  const std::size_t s = g.rank();
  IntMat a(gens.size(), IntVec(s, 0));
  IntVec b(gens.size(), 0);
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (e % values[k].true_order() != 0)
      throw Error(Errc::NoExtension, "prescribed value order does not divide the group exponent");
    for (std::size_t j = 0; j < s; ++j) a[k][j] = mod(gens[k].x[j] * (e / g.orders()[j]), e);
    b[k] = values[k].with_order(e).exponent();
  }
  AbCharacter chi = g.trivial_character();
  if (s > 0) {
    auto sol = solve_mod(a, s, b, e);
    if (!sol) throw Error(Errc::NoExtension, "no character of G restricts to the prescribed values");
    chi.c = lex_least_in_coset(sol->particular, sol->kernel, g.orders());
  }
  for (std::size_t k = 0; k < gens.size(); ++k)
    if (!(g.evaluate(chi, gens[k]) == values[k]))
      throw Error(Errc::NoExtension, "prescribed values are not a character of the subgroup");
  return chi;
}

// ---------------------------------------------------------------------------

IntMat mat_identity(std::size_t n) {
  IntMat m(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMat mat_mul_mod(const IntMat& a, const IntMat& b, std::int64_t n) {
  const std::size_t r = a.size(), k = b.size(), c = b.empty() ? 0 : b[0].size();
  IntMat out(r, IntVec(c, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < c; ++j) out[i][j] = (out[i][j] + a[i][l] * b[l][j]) % n;
    }
  for (auto& row : out)
    for (auto& x : row) x = mod(x, n);
  return out;
}

IntMat mat_pow_mod(const IntMat& a, std::int64_t k, std::int64_t n) {
  IntMat r = mat_identity(a.size()), b = a;
  for (auto& row : r)
    for (auto& x : row) x = mod(x, n);
  while (k > 0) {
    if (k & 1) r = mat_mul_mod(r, b, n);
    b = mat_mul_mod(b, b, n);
    k >>= 1;
  }
  return r;
}

namespace {

bool invertible_mod_p(IntMat m, std::int64_t p) {
  const std::size_t n = m.size();
  for (auto& row : m)
    for (auto& x : row) x = mod(x, p);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = n;
    for (std::size_t r = c; r < n; ++r)
      if (m[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv == n) return false;
    std::swap(m[piv], m[c]);
    const std::int64_t inv = *inverse_mod(m[c][c], p);
    for (std::size_t r = c + 1; r < n; ++r) {
      const std::int64_t f = m[r][c] * inv % p;
      for (std::size_t k = c; k < n; ++k) m[r][k] = mod(m[r][k] - f * m[c][k], p);
    }
  }
  return true;
}

bool is_identity_mod(const IntMat& m, std::int64_t n) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (mod(m[i][j], n) != (i == j ? 1 % n : 0)) return false;
  return true;
}

}  // namespace

PGroupData::PGroupData(std::int64_t p, std::vector<HomocyclicComponent> components)
    : p_(p), components_(std::move(components)) {
  if (!is_prime(p)) throw Error(Errc::CompositeCharacteristic, "p must be prime");
  IntVec orders;
  for (std::size_t c = 0; c < components_.size(); ++c) {
    const auto& comp = components_[c];
    if (comp.n < 1 || comp.rank < 1) throw Error(Errc::ValidationError, "component exponent and rank must be >= 1");
    if (c > 0 && comp.n > components_[c - 1].n)
      throw Error(Errc::ValidationError, "components must be listed with non-increasing exponent n");
    offsets_.push_back(static_cast<int>(orders.size()));
    std::int64_t q = 1;
    for (int i = 0; i < comp.n; ++i) q *= p;
    for (int i = 0; i < comp.rank; ++i) {
      orders.push_back(q);
      coord_component_.push_back(static_cast<int>(c));
    }
  }
  group_ = FinAbGroup(orders);
}

std::int64_t PGroupData::modulus(int component) const {
  std::int64_t q = 1;
  for (int i = 0; i < components_[component].n; ++i) q *= p_;
  return q;
}

LAction::LAction(const PGroupData& p, const FinAbGroup& l, std::vector<std::vector<IntMat>> matrices)
    : p_(p), l_(l), mats_(std::move(matrices)) {
  auto fail = [](const std::string& msg) { throw Error(Errc::InvalidAction, msg); };
  const auto& comps = p.components();
  if (mats_.size() != l.rank()) fail("need one action entry per L-generator");
  for (std::size_t g = 0; g < l.rank(); ++g) {
    if (std::gcd(l.orders()[g], p.p()) != 1) fail("L-generator order is divisible by p");
    if (mats_[g].size() != comps.size()) fail("need one matrix per component for every L-generator");
    for (std::size_t c = 0; c < comps.size(); ++c) {
      auto& m = mats_[g][c];
      const std::size_t r = static_cast<std::size_t>(comps[c].rank);
      if (m.size() != r) fail("action matrix has wrong size");
      for (auto& row : m) {
        if (row.size() != r) fail("action matrix has wrong size");
        for (auto& x : row) x = mod(x, p.modulus(static_cast<int>(c)));
      }
      if (!invertible_mod_p(m, p.p())) fail("action matrix is not invertible");
    }
  }
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const std::int64_t q = p.modulus(static_cast<int>(c));
    for (std::size_t g = 0; g < l.rank(); ++g)
      for (std::size_t h = g + 1; h < l.rank(); ++h)
        if (mat_mul_mod(mats_[g][c], mats_[h][c], q) != mat_mul_mod(mats_[h][c], mats_[g][c], q))
          fail("action matrices of distinct generators do not commute");
  }
  auto identity_on_all = [&](std::size_t g, std::int64_t k) {
    for (std::size_t c = 0; c < comps.size(); ++c) {
      const std::int64_t q = p.modulus(static_cast<int>(c));
      if (!is_identity_mod(mat_pow_mod(mats_[g][c], k, q), q)) return false;
    }
    return true;
  };
  for (std::size_t g = 0; g < l.rank(); ++g) {
    const std::int64_t d = l.orders()[g];
    if (!identity_on_all(g, d)) fail("generator matrix order does not divide the L-generator order");
    for (std::int64_t k = 1; k < d; ++k)
      if (d % k == 0 && identity_on_all(g, k)) fail("generator matrix order is smaller than the L-generator order");
  }
  cache_.resize(static_cast<std::size_t>(l.order()));
  for (std::int64_t i = 0; i < l.order(); ++i) {
    AbElement y = l.element(i);
    std::vector<IntMat> blocks;
    bool trivial = true;
    for (std::size_t c = 0; c < comps.size(); ++c) {
      const std::int64_t q = p.modulus(static_cast<int>(c));
      IntMat m = mat_identity(static_cast<std::size_t>(comps[c].rank));
      for (std::size_t g = 0; g < l.rank(); ++g) m = mat_mul_mod(m, mat_pow_mod(mats_[g][c], y.x[g], q), q);
      trivial = trivial && is_identity_mod(m, q);
      blocks.push_back(std::move(m));
    }
    if (i != 0 && trivial) fail("action of L is not faithful");
    cache_[i] = std::move(blocks);
  }
}

AbElement LAction::act(const AbElement& y, const AbElement& x) const {
  const auto& blocks = of(y);
  IntVec out(x.x.size(), 0);
  const auto& comps = p_.components();
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const int off = p_.offset(static_cast<int>(c));
    const std::int64_t q = p_.modulus(static_cast<int>(c));
    const auto& m = blocks[c];
    for (int i = 0; i < comps[c].rank; ++i) {
      std::int64_t v = 0;
      for (int j = 0; j < comps[c].rank; ++j) v = (v + m[i][j] * x.x[off + j]) % q;
      out[off + i] = v;
    }
  }
  return {std::move(out)};
}

std::vector<IntMat> action_on_frattini(const PGroupData& p, const LAction& act) {
  const int r = p.frattini_rank();
  std::vector<IntMat> out;
  for (const auto& per_gen : act.matrices()) {
    IntMat m(r, IntVec(r, 0));
    for (std::size_t c = 0; c < p.components().size(); ++c) {
      const int off = p.offset(static_cast<int>(c));
      for (int i = 0; i < p.components()[c].rank; ++i)
        for (int j = 0; j < p.components()[c].rank; ++j) m[off + i][off + j] = mod(per_gen[c][i][j], p.p());
    }
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace twistalg
