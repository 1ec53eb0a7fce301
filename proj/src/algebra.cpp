#include "twistalg/algebra.hpp"

#include <deque>
#include <random>

#include "twistalg/error.hpp"

namespace twistalg {

StructAlgebra StructAlgebra::monomial(FieldSpec f, std::vector<std::string> labels, std::vector<std::int32_t> target,
                                      std::vector<FieldElement> coeff, FVec identity) {
  StructAlgebra a(std::move(f));
  a.n_ = labels.size();
  if (target.size() != a.n_ * a.n_ || coeff.size() != a.n_ * a.n_ || identity.size() != a.n_)
    throw Error(Errc::DimensionMismatch, "monomial structure table has the wrong size");
  a.labels_ = std::move(labels);
  a.target_ = std::move(target);
  a.coeff_ = std::move(coeff);
  a.one_ = std::move(identity);
  return a;
}

StructAlgebra StructAlgebra::dense(FieldSpec f, std::vector<std::string> labels, std::vector<FieldElement> constants,
                                   FVec identity) {
  StructAlgebra a(std::move(f));
  a.n_ = labels.size();
  if (constants.size() != a.n_ * a.n_ * a.n_ || identity.size() != a.n_)
    throw Error(Errc::DimensionMismatch, "structure constants have the wrong size");
  a.monomial_ = false;
  a.labels_ = std::move(labels);
  a.dense_ = std::move(constants);
  a.one_ = std::move(identity);
  return a;
}

FVec StructAlgebra::basis_vector(std::size_t i) const {
  FVec v = zero();
  v[i] = f_.one();
  return v;
}

void StructAlgebra::accumulate_product(FVec& out, std::size_t a, std::size_t b, FieldElement c) const {
  const std::size_t ab = a * n_ + b;
  if (monomial_) {
    const std::int32_t t = target_[ab];
    if (t >= 0) out[t] = f_.add(out[t], f_.mul(c, coeff_[ab]));
    return;
  }
  const FieldElement* row = &dense_[ab * n_];
  for (std::size_t k = 0; k < n_; ++k)
    if (row[k].code != 0) out[k] = f_.add(out[k], f_.mul(c, row[k]));
}

FVec StructAlgebra::mul(const FVec& a, const FVec& b) const {
  FVec out = zero();
  std::vector<std::size_t> nb;
  for (std::size_t j = 0; j < n_; ++j)
    if (b[j].code != 0) nb.push_back(j);
  for (std::size_t i = 0; i < n_; ++i) {
    if (a[i].code == 0) continue;
    for (auto j : nb) accumulate_product(out, i, j, f_.mul(a[i], b[j]));
  }
  return out;
}

FVec StructAlgebra::add(const FVec& a, const FVec& b) const {
  FVec out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i] = f_.add(a[i], b[i]);
  return out;
}

FVec StructAlgebra::sub(const FVec& a, const FVec& b) const {
  FVec out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i] = f_.sub(a[i], b[i]);
  return out;
}

FVec StructAlgebra::pow(const FVec& a, std::int64_t k) const {
  FVec r = one_, base = a;
  while (k > 0) {
    if (k & 1) r = mul(r, base);
    k >>= 1;
    if (k > 0) base = mul(base, base);
  }
  return r;
}

FMat StructAlgebra::left_matrix(const FVec& a) const {
  FMat m(n_, FVec(n_, f_.zero()));
  for (std::size_t j = 0; j < n_; ++j) {
    FVec col = zero();
    for (std::size_t i = 0; i < n_; ++i)
      if (a[i].code != 0) accumulate_product(col, i, j, a[i]);
    for (std::size_t i = 0; i < n_; ++i) m[i][j] = col[i];
  }
  return m;
}

FieldElement StructAlgebra::trace(const FVec& a) const {
  FieldElement t = f_.zero();
  for (std::size_t j = 0; j < n_; ++j) {
    FVec col = zero();
    for (std::size_t i = 0; i < n_; ++i)
      if (a[i].code != 0) accumulate_product(col, i, j, a[i]);
    t = f_.add(t, col[j]);
  }
  return t;
}

bool StructAlgebra::check_associative(std::uint64_t seed, std::size_t full_limit, std::size_t samples) const {
  auto triple = [&](std::size_t a, std::size_t b, std::size_t c) {
    const FVec ea = basis_vector(a), eb = basis_vector(b), ec = basis_vector(c);
    return mul(mul(ea, eb), ec) == mul(ea, mul(eb, ec));
  };
  if (n_ <= full_limit) {
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b)
        for (std::size_t c = 0; c < n_; ++c)
          if (!triple(a, b, c)) return false;
  } else {
    std::mt19937_64 rng(seed);
    for (std::size_t s = 0; s < samples; ++s)
      if (!triple(rng() % n_, rng() % n_, rng() % n_)) return false;
  }
  for (std::size_t a = 0; a < n_; ++a) {
    const FVec ea = basis_vector(a);
    if (mul(one_, ea) != ea || mul(ea, one_) != ea) return false;
  }
  return true;
}

StructAlgebra Subalgebra::intrinsic(const StructAlgebra& ambient, const FVec& identity) const {
  const FieldSpec& f = ambient.field();
  const std::size_t d = basis.rank();
  std::vector<FieldElement> c(d * d * d, f.zero());
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      auto coords = basis.coordinates(ambient.mul(basis.rows()[a], basis.rows()[b]));
      if (!coords) throw Error(Errc::DimensionMismatch, "subspace is not closed under multiplication");
      for (std::size_t k = 0; k < d; ++k) c[(a * d + b) * d + k] = (*coords)[k];
    }
  auto one = basis.coordinates(identity);
  if (!one) throw Error(Errc::DimensionMismatch, "identity is not in the subspace");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < d; ++i) labels.push_back("s" + std::to_string(i));
  return StructAlgebra::dense(f, std::move(labels), std::move(c), *one);
}

EchelonBasis generated_subspace(const StructAlgebra& ambient, const std::vector<FVec>& generators, bool ideal) {
  EchelonBasis span(ambient.field(), ambient.dim());
  std::deque<FVec> queue;
  auto push = [&](const FVec& v) {
    if (span.add(v)) queue.push_back(v);
  };
  for (const auto& g : generators) push(g);
  while (!queue.empty()) {
    const FVec v = queue.front();
    queue.pop_front();
    if (ideal) {
      for (std::size_t i = 0; i < ambient.dim(); ++i) {
        const FVec e = ambient.basis_vector(i);
        push(ambient.mul(e, v));
        push(ambient.mul(v, e));
      }
    } else {
      for (const auto& g : generators) push(ambient.mul(v, g));
    }
  }
  return span;
}

}  // namespace twistalg
