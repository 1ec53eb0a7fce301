#include "twistalg/flinalg.hpp"

#include "twistalg/error.hpp"

namespace twistalg {

bool is_zero(const FVec& v) {
  for (auto x : v)
    if (x.code != 0) return false;
  return true;
}

void axpy(const FieldSpec& f, FVec& y, FieldElement c, const FVec& x) {
  if (c.code == 0) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (x[i].code != 0) y[i] = f.add(y[i], f.mul(c, x[i]));
}

FVec scaled(const FieldSpec& f, FieldElement c, FVec x) {
  for (auto& v : x) v = f.mul(c, v);
  return x;
}

EchelonBasis::EchelonBasis(FieldSpec f, std::size_t dim) : f_(std::move(f)), dim_(dim) {}

FVec EchelonBasis::reduce(FVec v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const FieldElement c = v[pivots_[i]];
    if (c.code != 0) axpy(f_, v, f_.neg(c), rows_[i]);
  }
  return v;
}

bool EchelonBasis::add(const FVec& v) {
  if (v.size() != dim_) throw Error(Errc::DimensionMismatch, "vector length does not match the ambient dimension");
  FVec r = reduce(v);
  std::size_t piv = dim_;
  for (std::size_t i = 0; i < dim_; ++i)
    if (r[i].code != 0) {
      piv = i;
      break;
    }
  if (piv == dim_) return false;
  const FieldElement inv = f_.inv(r[piv]);
  rows_.push_back(scaled(f_, inv, std::move(r)));
  pivots_.push_back(piv);
  return true;
}

std::optional<FVec> EchelonBasis::coordinates(const FVec& v) const {
  FVec r = v;
  FVec c(rows_.size(), f_.zero());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const FieldElement x = r[pivots_[i]];
    if (x.code == 0) continue;
    c[i] = x;
    axpy(f_, r, f_.neg(x), rows_[i]);
  }
  if (!is_zero(r)) return std::nullopt;
  return c;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(const FieldSpec& f, FMat& a, std::size_t cols) {
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t k = r;
    while (k < a.size() && a[k][c].code == 0) ++k;
    if (k == a.size()) continue;
    std::swap(a[k], a[r]);
    a[r] = scaled(f, f.inv(a[r][c]), a[r]);
    for (std::size_t i = 0; i < a.size(); ++i)
      if (i != r && a[i][c].code != 0) axpy(f, a[i], f.neg(a[i][c]), a[r]);
    piv.push_back(c);
    ++r;
  }
  return piv;
}

}  // namespace

std::size_t rank_of(const FieldSpec& f, const FMat& rows, std::size_t cols) {
  EchelonBasis e(f, cols);
  for (const auto& r : rows) e.add(r);
  return e.rank();
}

FMat nullspace(const FieldSpec& f, const FMat& a, std::size_t cols) {
  FMat m = a;
  const auto piv = rref(f, m, cols);
  std::vector<bool> is_piv(cols, false);
  for (auto c : piv) is_piv[c] = true;
  FMat out;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_piv[free]) continue;
    FVec x(cols, f.zero());
    x[free] = f.one();
    for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = f.neg(m[i][free]);
    out.push_back(std::move(x));
  }
  return out;
}

std::optional<FVec> solve(const FieldSpec& f, const FMat& a, std::size_t cols, const FVec& b) {
  FMat m = a;
  for (std::size_t i = 0; i < m.size(); ++i) m[i].push_back(b[i]);
  const auto piv = rref(f, m, cols + 1);
  if (!piv.empty() && piv.back() == cols) return std::nullopt;
  FVec x(cols, f.zero());
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = m[i][cols];
  return x;
}

FieldElement determinant(const FieldSpec& f, FMat a) {
  const std::size_t n = a.size();
  FieldElement det = f.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t k = c;
    while (k < n && a[k][c].code == 0) ++k;
    if (k == n) return f.zero();
    if (k != c) {
      std::swap(a[k], a[c]);
      det = f.neg(det);
    }
    det = f.mul(det, a[c][c]);
    const FieldElement inv = f.inv(a[c][c]);
    for (std::size_t i = c + 1; i < n; ++i)
      if (a[i][c].code != 0) axpy(f, a[i], f.neg(f.mul(a[i][c], inv)), a[c]);
  }
  return det;
}

FMat mat_mul(const FieldSpec& f, const FMat& a, const FMat& b) {
  const std::size_t cols = b.empty() ? 0 : b[0].size();
  FMat out(a.size(), FVec(cols, f.zero()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) axpy(f, out[i], a[i][k], b[k]);
  return out;
}

FVec mat_vec(const FieldSpec& f, const FMat& a, const FVec& x) {
  FVec out(a.size(), f.zero());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j)
      if (a[i][j].code != 0 && x[j].code != 0) out[i] = f.add(out[i], f.mul(a[i][j], x[j]));
  return out;
}

}  // namespace twistalg
