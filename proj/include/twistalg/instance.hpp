#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "twistalg/abelian.hpp"
#include "twistalg/cocycles.hpp"
#include "twistalg/extension.hpp"

namespace twistalg {

/// Value t_{ij} = zeta_order^exponent of the form on generators i < j (0-based).
struct FormEntry {
  std::size_t i = 0;
  std::size_t j = 1;
  std::int64_t order = 1;
  std::int64_t exponent = 0;
};

/// Raw problem data as read from a problem file.
struct ProblemSpec {
  std::string name;
  std::int64_t p = 2;
  std::uint64_t seed = 0;
  IntVec l_orders;
  std::vector<HomocyclicComponent> components;
  /// action[g][c]: matrix of L-generator g on component c.
  std::vector<std::vector<IntMat>> action;
  std::vector<FormEntry> form;
};

/// Everything derived from a ProblemSpec up to the choice of field.
struct Instance {
  ProblemSpec spec;
  PGroupData p;
  FinAbGroup l;
  LAction act;
  AlternatingForm tau;
  ExtGroup h;
  PhiFamily fam;
  /// beta_0 with d beta_0 = (x -> x^p twist of alpha) / alpha^{(p^2)}.
  Cochain1 beta0;
  std::set<std::int64_t> root_orders;
  FieldSpec field;
};

/// Validates the problem and builds the instance; throws ValidationError or a
/// more specific code.
Instance make_instance(const ProblemSpec& spec);

/// The three worked examples shipped in problems/.
ProblemSpec quantum_plane_spec();
ProblemSpec ks3_spec();
ProblemSpec c2_4_c3_2_spec();

struct RandomOptions {
  std::vector<std::int64_t> primes{2, 3, 5};
  std::int64_t max_p_order = 25;
  std::int64_t max_l_order = 16;
  std::int64_t max_twisted_dim = 320;
};

/// A random valid problem (faithful commuting action, random form).
ProblemSpec random_problem(std::mt19937_64& rng, const RandomOptions& opt = {});

}  // namespace twistalg
