#include <random>
#include <set>

#include "doctest.h"
#include "twistalg/error.hpp"
#include "twistalg/extension.hpp"

using namespace twistalg;

namespace {

ExtGroup make(IntVec orders, std::vector<RootScalar> t) {
  FinAbGroup l(std::move(orders));
  return {l, AlternatingForm(l, std::move(t))};
}

std::vector<HElement> brute_center(const ExtGroup& h) {
  std::vector<HElement> out;
  for (const auto& g : h.elements()) {
    bool central = true;
    for (const auto& k : h.elements()) central = central && h.mul(g, k) == h.mul(k, g);
    if (central) out.push_back(g);
  }
  return out;
}

std::set<std::int64_t> brute_commutators(const ExtGroup& h) {
  std::set<std::int64_t> out;
  for (const auto& g : h.elements())
    for (const auto& k : h.elements()) out.insert(h.index(h.commutator(g, k)));
  return out;
}

std::vector<ExtGroup> random_instances(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  static const std::vector<IntVec> shapes{{2, 2}, {3, 3}, {4, 2}, {4, 4}, {2, 2, 2}, {6, 2}, {3, 6}, {2, 4, 2}, {4}, {2, 2, 2, 2}};
  std::vector<ExtGroup> out;
  for (int i = 0; i < count; ++i) {
    FinAbGroup l(shapes[rng() % shapes.size()]);
    std::vector<RootScalar> t;
    for (auto [j, k] : exterior_square(l).pairs) {
      const std::int64_t g = std::gcd(l.orders()[j], l.orders()[k]);
      t.emplace_back(g, static_cast<std::int64_t>(rng() % g));
    }
    out.emplace_back(l, AlternatingForm(l, t));
  }
  return out;
}

}  // namespace

TEST_CASE("extension of C4 x C4 by the primitive form") {
  ExtGroup h = make({4, 4}, {RootScalar(4, 1)});
  CHECK(h.order() == 64);
  CHECK(h.m() == 4);
  CHECK(h.commutator_is_z());
  CHECK(brute_commutators(h).size() == 4);
  CHECK(brute_center(h) == h.center());
  CHECK(h.center().size() == 4);
  CHECK(h.degree() == 4);
  AbCharacter r = h.rho(h.lift(h.l().generator(0)));
  CHECK(h.l().character_order(r) == 4);
  CHECK(h.l().evaluate(r, h.l().generator(0)).is_one());
  PhiFamily fam(h);
  CHECK(fam.size() == 1);
  CHECK(fam.xi(fam.members()[0]) == h.l().trivial_character());
}

TEST_CASE("small extraspecial and degenerate examples") {
  ExtGroup h3 = make({3, 3}, {RootScalar(3, 1)});
  CHECK(h3.order() == 27);
  CHECK(brute_center(h3).size() == 3);
  CHECK(h3.degree() == 3);

  ExtGroup hd = make({4, 2}, {RootScalar(2, 1)});
  CHECK(hd.radical().order() == 2);
  CHECK(hd.degree() == 2);
  CHECK(PhiFamily(hd).size() == 2);
  CHECK(brute_center(hd).size() == 4);

  ExtGroup ht = make({2}, {});
  CHECK(ht.m() == 1);
  CHECK(ht.order() == 2);
  CHECK(PhiFamily(ht).size() == 2);
}

TEST_CASE("center, commutators and rho agree with enumeration") {
  for (const auto& h : random_instances(41, 25)) {
    CAPTURE(h.l().orders());
    CHECK(brute_center(h) == h.center());
    std::set<std::int64_t> z;
    for (std::int64_t k = 0; k < h.m(); ++k) z.insert(h.index(h.central(k)));
    CHECK(brute_commutators(h) == z);
    std::set<AbCharacter> image;
    for (const auto& g : h.elements()) {
      AbCharacter r = h.rho(g);
      for (const auto& k : h.elements())
        CHECK(h.l().evaluate(r, k.x) == h.chi(h.commutator(g, k).z));
      CHECK((r == h.l().trivial_character()) == h.is_central(g));
      image.insert(r);
    }
    CHECK(static_cast<std::int64_t>(image.size()) * h.radical().order() == h.l().order());
    CHECK(h.degree() * h.degree() * h.radical().order() == h.l().order());
  }
}

TEST_CASE("phi family restricts to chi and xi extends phi phi0^-1") {
  for (const auto& h : random_instances(43, 25)) {
    PhiFamily fam(h);
    CHECK(static_cast<std::int64_t>(fam.size()) == h.radical().order());
    const auto center = h.center();
    std::set<std::vector<std::int64_t>> tables;
    for (const auto& phi : fam.members()) {
      for (std::int64_t z = 0; z < h.m(); ++z) CHECK(fam.value(phi, h.central(z)) == h.chi(z));
      std::vector<std::int64_t> table;
      for (const auto& a : center) {
        for (const auto& b : center) CHECK(fam.value(phi, h.mul(a, b)) == fam.value(phi, a) * fam.value(phi, b));
        table.push_back(fam.value(phi, a).with_order(fam.value_order()).exponent());
        CHECK(fam.xi_value(phi, a) == fam.value(phi, a) * fam.value(fam.members()[0], a).inverse());
      }
      tables.insert(table);
      for (std::int64_t z = 0; z < h.m(); ++z) CHECK(fam.xi_value(phi, h.central(z)).is_one());
    }
    CHECK(tables.size() == fam.size());
    CHECK(fam.xi(fam.members()[0]) == h.l().trivial_character());
  }
}

TEST_CASE("maximal abelian subgroups are self-centralizing") {
  for (const auto& h : random_instances(47, 20)) {
    MaxAbelian a = max_abelian_subgroup(h);
    std::set<std::int64_t> in_a;
    for (const auto& g : a.elements) in_a.insert(h.index(g));
    for (const auto& g : h.elements()) {
      bool centralizes = true;
      for (const auto& k : a.elements) centralizes = centralizes && h.mul(g, k) == h.mul(k, g);
      CHECK(centralizes == (in_a.count(h.index(g)) == 1));
    }
    CHECK(static_cast<std::int64_t>(a.elements.size()) == h.m() * h.radical().order() * h.degree());
  }
}

TEST_CASE("induced characters are the irreducibles over chi") {
  for (const auto& h : random_instances(53, 20)) {
    PhiFamily fam(h);
    const std::int64_t n = class_function_conductor(h, fam);
    std::vector<ClassFunction> all;
    for (const auto& phi : fam.members()) {
      ClassFunction t = induced_irreducible(h, fam, phi);
      CHECK(inner_product_times_order(h, t, t) == h.order());
      for (std::int64_t i = 0; i < h.order(); ++i) {
        const HElement g = h.element(i);
        if (!h.is_central(g)) {
          CHECK(t[i].is_zero());
        } else {
          Cyclotomic expect(n);
          expect.add_root(fam.value(phi, g).with_order(n).exponent(), h.degree());
          CHECK(t[i] == expect);
        }
      }
      for (const auto& other : all) CHECK(inner_product_times_order(h, t, other) == 0);
      all.push_back(t);
    }
  }
}

TEST_CASE("twisting by characters of H/Z permutes the irreducibles") {
  std::mt19937_64 rng(59);
  for (const auto& h : random_instances(61, 15)) {
    PhiFamily fam(h);
    auto dual = dual_group(h.l());
    for (int k = 0; k < 3; ++k) {
      const AbCharacter eta = dual[rng() % dual.size()];
      const PhiIndex phi = fam.members()[rng() % fam.size()];
      CHECK(verify_class2_action(h, fam, eta, phi));
    }
    CHECK(verify_class2_action(h, fam, h.l().trivial_character(), fam.members()[0]));
  }
}
