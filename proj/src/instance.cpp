#include "twistalg/instance.hpp"

#include <algorithm>
#include <map>

#include "twistalg/error.hpp"

namespace twistalg {

namespace {

AlternatingForm build_form(const FinAbGroup& l, const std::vector<FormEntry>& entries) {
  const auto sq = exterior_square(l);
  std::vector<RootScalar> t(sq.pairs.size());
  std::vector<bool> seen(sq.pairs.size(), false);
  for (const auto& e : entries) {
    if (e.i >= e.j || e.j >= l.rank())
      throw Error(Errc::ValidationError, "form entry (" + std::to_string(e.i + 1) + "," + std::to_string(e.j + 1) +
                                             ") must satisfy 1 <= i < j <= rank(L)");
    if (e.order < 1) throw Error(Errc::ValidationError, "form value order must be positive");
    const auto it = std::find(sq.pairs.begin(), sq.pairs.end(), std::make_pair(e.i, e.j));
    const std::size_t k = static_cast<std::size_t>(it - sq.pairs.begin());
    if (seen[k]) throw Error(Errc::ValidationError, "form entry given twice");
    seen[k] = true;
    t[k] = RootScalar(e.order, e.exponent);
  }
  return {l, std::move(t)};
}

}  // namespace

Instance make_instance(const ProblemSpec& spec) {
  PGroupData p(spec.p, spec.components);
  FinAbGroup l(spec.l_orders);
  for (auto d : spec.l_orders)
    if (d % spec.p == 0) throw Error(Errc::OrderDivisibleByP, "L-generator order " + std::to_string(d) + " is divisible by p");
  LAction act(p, l, spec.action);
  AlternatingForm tau = build_form(l, spec.form);
  ExtGroup h(l, tau);
  PhiFamily fam(h);
  const Cocycle2& alpha = h.cocycle();
  Cochain1 beta0 = solve_coboundary(twist_by_automorphism(alpha, LAutomorphism::power(l, spec.p)),
                                    frobenius_twist_class(alpha, spec.p * spec.p));
  std::set<std::int64_t> orders{l.exponent(), h.m(), fam.value_order(), beta0.order};
  FieldSpec field = field_make(spec.p, orders);
  return Instance{spec, p, l, act, tau, h, fam, beta0, orders, field};
}

ProblemSpec quantum_plane_spec() {
  ProblemSpec s;
  s.name = "quantum_plane";
  s.p = 5;
  s.l_orders = {4, 4};
  s.components = {{1, 2}};
  s.action = {{IntMat{{2, 0}, {0, 1}}}, {IntMat{{1, 0}, {0, 2}}}};
  s.form = {{0, 1, 4, 1}};
  return s;
}

ProblemSpec ks3_spec() {
  ProblemSpec s;
  s.name = "kS3";
  s.p = 3;
  s.l_orders = {2};
  s.components = {{1, 1}};
  s.action = {{IntMat{{2}}}};
  return s;
}

ProblemSpec c2_4_c3_2_spec() {
  ProblemSpec s;
  s.name = "c2_4_c3_2";
  s.p = 2;
  s.l_orders = {3, 3};
  s.components = {{1, 4}};
  s.action = {{IntMat{{0, 1, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}},
              {IntMat{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 1}}}};
  s.form = {{0, 1, 3, 1}};
  return s;
}

// ---------------------------------------------------------------------------

namespace {

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Order of an invertible block-diagonal tuple, or 0 when it exceeds `cap`.
std::int64_t tuple_order(const std::vector<IntMat>& blocks, const PGroupData& pd, std::int64_t cap) {
  std::vector<IntMat> cur = blocks;
  for (std::int64_t k = 1; k <= cap; ++k) {
    bool id = true;
    for (std::size_t c = 0; c < cur.size() && id; ++c) {
      const std::int64_t q = pd.modulus(static_cast<int>(c));
      for (std::size_t i = 0; i < cur[c].size() && id; ++i)
        for (std::size_t j = 0; j < cur[c].size() && id; ++j) id = mod(cur[c][i][j], q) == (i == j ? 1 : 0);
    }
    if (id) return k;
    for (std::size_t c = 0; c < cur.size(); ++c)
      cur[c] = mat_mul_mod(cur[c], blocks[c], pd.modulus(static_cast<int>(c)));
  }
  return 0;
}

// Random p'-element of the centralizer-friendly kind: diagonal with
// Teichmuller-type entries, or the p'-part of a random invertible matrix.
IntMat random_block(std::mt19937_64& rng, std::int64_t p, int n, int rank, bool diagonal) {
  const std::int64_t q = ipow(p, n);
  IntMat m(rank, IntVec(rank, 0));
  if (diagonal) {
    for (int i = 0; i < rank; ++i) {
      std::int64_t a = 0;
      while (a % p == 0) a = static_cast<std::int64_t>(rng() % q);
      m[i][i] = pow_mod(a, static_cast<std::uint64_t>(ipow(p, n - 1)), q);
    }
    return m;
  }
  for (;;) {
    for (auto& row : m)
      for (auto& x : row) x = static_cast<std::int64_t>(rng() % q);
    PGroupData one(p, {{n, rank}});
    const std::int64_t o = tuple_order({m}, one, 200000);
    if (o == 0) continue;
    std::int64_t pp = 1, r = o;
    while (r % p == 0) {
      r /= p;
      pp *= p;
    }
    return mat_pow_mod(m, pp, q);
  }
}

}  // namespace

ProblemSpec random_problem(std::mt19937_64& rng, const RandomOptions& opt) {
  for (;;) {
    ProblemSpec s;
    s.p = opt.primes[rng() % opt.primes.size()];
    std::vector<std::vector<HomocyclicComponent>> shapes;
    const std::int64_t p = s.p;
    const std::vector<std::vector<HomocyclicComponent>> all{
        {{1, 1}}, {{1, 2}}, {{2, 1}}, {{1, 3}}, {{2, 1}, {1, 1}}, {{1, 4}}, {{2, 2}}, {{3, 1}}, {{1, 2}, {1, 1}}};
    for (const auto& sh : all) {
      std::int64_t order = 1;
      for (const auto& c : sh) order *= ipow(p, c.n * c.rank);
      if (order <= opt.max_p_order && order > 1) shapes.push_back(sh);
    }
    s.components = shapes[rng() % shapes.size()];
    PGroupData pd(p, s.components);
    const bool diagonal = rng() % 2 == 0;
    const std::size_t gens = diagonal ? 1 + rng() % 2 : 1;
    std::vector<std::vector<IntMat>> tuples;
    for (std::size_t g = 0; g < gens; ++g) {
      std::vector<IntMat> t;
      for (const auto& c : s.components) t.push_back(random_block(rng, p, c.n, c.rank, diagonal || c.rank == 1));
      tuples.push_back(std::move(t));
    }
    IntVec orders;
    std::vector<std::vector<IntMat>> kept;
    for (auto& t : tuples) {
      const std::int64_t o = tuple_order(t, pd, 100000);
      if (o > 1) {
        orders.push_back(o);
        kept.push_back(t);
      }
    }
    if (orders.empty()) continue;
    std::int64_t lorder = 1;
    for (auto o : orders) lorder *= o;
    if (lorder > opt.max_l_order || lorder * pd.order() > opt.max_twisted_dim) continue;
    s.l_orders = orders;
    s.action = kept;
    if (orders.size() == 2) {
      const std::int64_t g = std::gcd(orders[0], orders[1]);
      if (g > 1 && rng() % 4 != 0) s.form = {{0, 1, g, static_cast<std::int64_t>(rng() % g)}};
    }
    s.seed = rng();
    try {
      LAction check(pd, FinAbGroup(orders), kept);
    } catch (const Error&) {
      continue;  // not faithful or orders inconsistent
    }
    s.name = "random";
    return s;
  }
}

}  // namespace twistalg
