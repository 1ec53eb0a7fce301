#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace twistalg {

using IntVec = std::vector<std::int64_t>;
using IntMat = std::vector<IntVec>;  // row-major

/// Diagonal form U*A*V = D over Z/N with U, V invertible mod N.
///
/// U is never materialised; it is applied to the optional right-hand side
/// columns instead. `diag[i]` is the i-th diagonal entry for i < rank.
struct ModSmith {
  std::int64_t modulus = 1;
  std::size_t rows = 0;
  std::size_t cols = 0;
  IntVec diag;
  IntMat v;      // cols x cols
  IntMat v_inv;  // cols x cols
  IntMat rhs;    // rows x k, transformed by U
};

ModSmith smith_mod(IntMat a, std::size_t cols, std::int64_t modulus, IntMat rhs = {});

/// A particular solution of A x = b (mod N) plus generators of the solution
/// module of A x = 0.
struct ModSolution {
  IntVec particular;
  IntMat kernel;
};

std::optional<ModSolution> solve_mod(const IntMat& a, std::size_t cols, const IntVec& b, std::int64_t modulus);

IntMat kernel_mod(const IntMat& a, std::size_t cols, std::int64_t modulus);

/// Lexicographically least element of c + <gens> + sum moduli_j Z e_j, with
/// coordinates reduced into [0, moduli_j).
IntVec lex_least_in_coset(const IntVec& c, const IntMat& gens, const IntVec& moduli);

}  // namespace twistalg
