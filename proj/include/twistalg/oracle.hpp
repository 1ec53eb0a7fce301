#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "twistalg/algebra.hpp"
#include "twistalg/extension.hpp"
#include "twistalg/flinalg.hpp"
#include "twistalg/quiver.hpp"

namespace twistalg {

/// Sparse structure constants e_i e_j = sum_k c_ijk e_k, detached from the
/// algebra they were read from. Everything in this header works on these
/// tables and plain linear algebra only.
class ConstantTable {
 public:
  using Term = std::pair<std::size_t, FieldElement>;

  ConstantTable(FieldSpec f, std::size_t dim, std::vector<std::vector<Term>> products, FVec one);
  static ConstantTable from_algebra(const StructAlgebra& a);

  const FieldSpec& field() const { return f_; }
  std::size_t dim() const { return n_; }
  const FVec& one() const { return one_; }
  const std::vector<Term>& product(std::size_t i, std::size_t j) const { return products_[i * n_ + j]; }
  FVec mul(const FVec& a, const FVec& b) const;
  FVec pow(const FVec& a, std::int64_t k) const;

 private:
  FieldSpec f_;
  std::size_t n_;
  std::vector<std::vector<Term>> products_;
  FVec one_;
};

EchelonBasis center_of(const ConstantTable& a);
/// Span of all commutators e_i e_j - e_j e_i.
EchelonBasis commutator_space(const ConstantTable& a);

struct RadicalInfo {
  EchelonBasis radical;
  std::size_t radical_dim = 0;
  std::size_t semisimple_dim = 0;
  /// Least k with J^k = 0.
  std::size_t nilpotency_index = 0;
  /// Whether A/J is commutative, i.e. [A, A] lies in J.
  bool quotient_commutative = false;
};

/// J = {x : x A lies in T}, where T is the preimage of the nil part of the
/// p-power map on A/[A, A]. The result is checked to be a nilpotent two-sided
/// ideal; RadicalUndetermined is thrown otherwise.
RadicalInfo radical_and_semisimple_rank(const ConstantTable& a);

struct OracleCheck {
  std::string name;
  std::string validates;
  std::string expected;
  std::string computed;
  bool passed = false;
  bool asserted = true;
  double elapsed_ms = 0.0;
};

struct OracleReport {
  std::string instance;
  std::vector<OracleCheck> checks;
  bool passed() const;
};

/// Structure constants of kHe, e the central idempotent of chi: basis [x]
/// for x in L with [x][y] = chi(c) [xy] where (0,x)(0,y) = (c, xy).
ConstantTable khe_table(const ExtGroup& h, const FieldSpec& f);

/// dim kHe = |Z(H):Z| m^2, the e_phi form a complete set of orthogonal
/// central idempotents and each corner e_phi kHe e_phi has dimension m^2.
OracleReport wedderburn_check(const ExtGroup& h, const PhiFamily& fam, const FieldSpec& f);

/// Dimension of the path algebra of q modulo its relations, by graded
/// linear closure. Throws NonTerminating when the running total exceeds cap.
std::int64_t independent_dimension_count(const QuiverPresentation& q, const FieldSpec& f, std::int64_t cap);

}  // namespace twistalg
