#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "twistalg/flinalg.hpp"
#include "twistalg/scalars.hpp"

namespace twistalg {

/// Finite-dimensional associative algebra over a finite field, given by a
/// basis and structure constants.
///
/// Monomial algebras (group-like bases, where every basis product is a scalar
/// multiple of one basis element) use a flat n x n table; general algebras
/// store dense n x n x n constants.
class StructAlgebra {
 public:
  /// Monomial algebra: e_a e_b = coeff[a n + b] * e_{target[a n + b]}
  /// (target -1 means the product is zero).
  static StructAlgebra monomial(FieldSpec f, std::vector<std::string> labels, std::vector<std::int32_t> target,
                                std::vector<FieldElement> coeff, FVec identity);
  /// General algebra: e_a e_b = sum_c constants[(a n + b) n + c] e_c.
  static StructAlgebra dense(FieldSpec f, std::vector<std::string> labels, std::vector<FieldElement> constants,
                             FVec identity);

  const FieldSpec& field() const { return f_; }
  std::size_t dim() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const FVec& one() const { return one_; }
  FVec zero() const { return FVec(n_, f_.zero()); }
  FVec basis_vector(std::size_t i) const;

  FVec mul(const FVec& a, const FVec& b) const;
  bool is_monomial() const { return monomial_; }
  /// For monomial algebras: e_a e_b = coefficient * e_target (target -1 for zero).
  std::int32_t monomial_target(std::size_t a, std::size_t b) const { return target_[a * n_ + b]; }
  FieldElement monomial_coefficient(std::size_t a, std::size_t b) const { return coeff_[a * n_ + b]; }
  FVec add(const FVec& a, const FVec& b) const;
  FVec sub(const FVec& a, const FVec& b) const;
  FVec scale(FieldElement c, const FVec& a) const { return scaled(f_, c, a); }
  FVec pow(const FVec& a, std::int64_t k) const;

  /// Left-regular matrix of a: entry (i, j) is the e_i-coefficient of a e_j.
  FMat left_matrix(const FVec& a) const;
  /// Trace of x -> a x.
  FieldElement trace(const FVec& a) const;

  /// Checks associativity on all basis triples when dim <= full_limit,
  /// otherwise on `samples` seeded random triples; and the identity law.
  bool check_associative(std::uint64_t seed, std::size_t full_limit = 40, std::size_t samples = 100000) const;

 private:
  StructAlgebra(FieldSpec f) : f_(std::move(f)) {}
  void accumulate_product(FVec& out, std::size_t a, std::size_t b, FieldElement c) const;

  FieldSpec f_;
  std::size_t n_ = 0;
  std::vector<std::string> labels_;
  bool monomial_ = true;
  std::vector<std::int32_t> target_;
  std::vector<FieldElement> coeff_;
  std::vector<FieldElement> dense_;
  FVec one_;
};

/// A subspace of an algebra spanned by an echelon basis, with its own
/// structure constants when it is closed under multiplication.
struct Subalgebra {
  EchelonBasis basis;
  /// Builds the intrinsic algebra (coordinates w.r.t. basis.rows()); throws
  /// DimensionMismatch if the span is not closed under products.
  StructAlgebra intrinsic(const StructAlgebra& ambient, const FVec& identity) const;
};

/// Two-sided ideal generated by `generators` when `ideal` is true, otherwise
/// the (non-unital) subalgebra they generate.
EchelonBasis generated_subspace(const StructAlgebra& ambient, const std::vector<FVec>& generators, bool ideal);

}  // namespace twistalg
