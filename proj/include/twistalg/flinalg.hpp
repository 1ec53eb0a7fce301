#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "twistalg/scalars.hpp"

namespace twistalg {

using FVec = std::vector<FieldElement>;
using FMat = std::vector<FVec>;  // row-major

bool is_zero(const FVec& v);
/// y += c * x
void axpy(const FieldSpec& f, FVec& y, FieldElement c, const FVec& x);
FVec scaled(const FieldSpec& f, FieldElement c, FVec x);

/// Incrementally built row echelon basis of a subspace of F^n.
///
/// Rows are stored in insertion order with pivot entry 1; each row vanishes
/// at the pivots of all earlier rows, so reducing against them in order gives
/// unique coordinates.
class EchelonBasis {
 public:
  EchelonBasis(FieldSpec f, std::size_t dim);

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  const FMat& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Adds v if independent; returns whether the rank grew.
  bool add(const FVec& v);
  /// Remainder of v after reduction (zero iff v is in the span).
  FVec reduce(FVec v) const;
  bool contains(const FVec& v) const { return is_zero(reduce(v)); }
  /// Coefficients of v in terms of rows(); nullopt when v is not in the span.
  std::optional<FVec> coordinates(const FVec& v) const;

 private:
  FieldSpec f_;
  std::size_t dim_;
  FMat rows_;
  std::vector<std::size_t> pivots_;
};

std::size_t rank_of(const FieldSpec& f, const FMat& rows, std::size_t cols);
/// Basis of {x : A x = 0}.
FMat nullspace(const FieldSpec& f, const FMat& a, std::size_t cols);
/// Some x with A x = b, or nullopt.
std::optional<FVec> solve(const FieldSpec& f, const FMat& a, std::size_t cols, const FVec& b);
FieldElement determinant(const FieldSpec& f, FMat a);
FMat mat_mul(const FieldSpec& f, const FMat& a, const FMat& b);
FVec mat_vec(const FieldSpec& f, const FMat& a, const FVec& x);

}  // namespace twistalg
