#include <random>

#include "doctest.h"
#include "twistalg/cocycles.hpp"
#include "twistalg/error.hpp"

using namespace twistalg;

namespace {

AlternatingForm random_form(const FinAbGroup& l, std::mt19937_64& rng) {
  std::vector<RootScalar> t;
  for (auto [j, k] : exterior_square(l).pairs) {
    const std::int64_t g = std::gcd(l.orders()[j], l.orders()[k]);
    t.emplace_back(g, static_cast<std::int64_t>(rng() % g));
  }
  return {l, std::move(t)};
}

FinAbGroup random_l(std::mt19937_64& rng) {
  static const std::vector<IntVec> shapes{{2, 2}, {3, 3}, {4, 2}, {4, 4}, {2, 2, 2}, {6, 2}, {3, 6}, {2, 4, 2}, {5, 5}};
  return FinAbGroup(shapes[rng() % shapes.size()]);
}

}  // namespace

TEST_CASE("standard cocycle of a form") {
  FinAbGroup l({4, 4});
  AlternatingForm tau(l, {RootScalar(4, 1)});
  Cocycle2 alpha = cocycle_from_form(tau);
  CHECK(alpha.satisfies_cocycle_identity());
  CHECK(alpha.is_normalized());
  for (auto& x : l.elements())
    for (auto& y : l.elements()) CHECK(alpha.value(x, y) == RootScalar(4, -x.x[1] * y.x[0]));
  CHECK(form_from_cocycle(alpha) == tau);
  CHECK(form_from_cocycle(Cocycle2::trivial(l)).is_trivial());
  CHECK_THROWS_AS(AlternatingForm(FinAbGroup({4, 2}), {RootScalar(4, 1)}), Error);
}

TEST_CASE("round trip and invariance under coboundaries") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    FinAbGroup l = random_l(rng);
    AlternatingForm tau = random_form(l, rng);
    Cocycle2 alpha = cocycle_from_form(tau);
    CHECK(alpha.satisfies_cocycle_identity());
    CHECK(form_from_cocycle(alpha) == tau);
    std::vector<std::int64_t> gamma(static_cast<std::size_t>(l.order()));
    const std::int64_t n = 12;
    for (std::size_t i = 1; i < gamma.size(); ++i) gamma[i] = static_cast<std::int64_t>(rng() % n);
    Cocycle2 dg = coboundary(l, n, gamma);
    Cocycle2 moved = alpha * dg;
    CHECK(form_from_cocycle(moved) == tau);
    Cochain1 beta = solve_coboundary(moved, alpha);
    CHECK(coboundary(l, beta.order, beta.exponents) == dg);
  }
}

TEST_CASE("solve_coboundary may need roots beyond the value group") {
  FinAbGroup l({2});
  // delta(1,1) = -1 is d(beta) for beta(1) = zeta_4
  Cocycle2 delta(l, 2, {0, 0, 0, 1});
  Cochain1 beta = solve_coboundary(delta, Cocycle2::trivial(l));
  CHECK(beta.value(1).true_order() == 4);
  AlternatingForm a(FinAbGroup({3, 3}), {RootScalar(3, 1)});
  CHECK_THROWS_AS(solve_coboundary(cocycle_from_form(a), Cocycle2::trivial(a.l())), Error);
}

TEST_CASE("twists commute with taking forms") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    FinAbGroup l = random_l(rng);
    AlternatingForm tau = random_form(l, rng);
    Cocycle2 alpha = cocycle_from_form(tau);
    for (std::int64_t k : {-1, 5, 7}) {
      if (std::gcd(k, l.exponent()) != 1) continue;
      auto phi = LAutomorphism::power(l, k);
      CHECK(form_from_cocycle(twist_by_automorphism(alpha, phi)) == twist_form(tau, phi));
    }
    for (std::int64_t q : {5, 7, 25, 49}) {
      if (std::gcd(q, alpha.order()) != 1) continue;
      CHECK(form_from_cocycle(frobenius_twist_class(alpha, q)) == frobenius_twist_form(tau, q));
    }
  }
  FinAbGroup c3({3, 3});
  AlternatingForm tau(c3, {RootScalar(3, 1)});
  CHECK(twist_form(tau, LAutomorphism::power(c3, 2)) == AlternatingForm(c3, {RootScalar(3, 4)}));
  CHECK(twist_form(tau, LAutomorphism::power(c3, -1)) == tau);
  CHECK(frobenius_twist_class(cocycle_from_form(tau), 4) == cocycle_from_form(tau));
  CHECK_THROWS_AS(LAutomorphism(c3, {c3.generator(0), c3.generator(0)}), Error);
}

TEST_CASE("autfrob holds on random instances") {
  std::mt19937_64 rng(29);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    FinAbGroup l = random_l(rng);
    for (std::int64_t p : {2, 3, 5, 7}) {
      if (l.exponent() % p == 0) continue;
      Cocycle2 alpha = cocycle_from_form(random_form(l, rng));
      auto w = verify_autfrob(alpha, p);
      CHECK(w.holds);
      ++checked;
    }
  }
  CHECK(checked > 50);
  FinAbGroup c4({4, 4});
  auto w = verify_autfrob(cocycle_from_form(AlternatingForm(c4, {RootScalar(4, 1)})), 5);
  CHECK(w.holds);
  CHECK(w.twisted == AlternatingForm(c4, {RootScalar(4, 1)}));
}
