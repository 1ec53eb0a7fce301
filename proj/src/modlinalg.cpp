#include "twistalg/modlinalg.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "twistalg/scalars.hpp"

namespace twistalg {

namespace {

struct ExtGcd {
  std::int64_t g, s, t;  // g = s*a + t*b
};

ExtGcd ext_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t n) {
  return mod(static_cast<std::int64_t>(static_cast<__int128>(a) * b % n), n);
}

// rows i, j <- [[s, t], [u, w]] * (row i, row j), entries mod n
void combine_rows(IntMat& m, std::size_t i, std::size_t j, std::int64_t s, std::int64_t t, std::int64_t u,
                  std::int64_t w, std::int64_t n) {
  for (std::size_t k = 0; k < m[i].size(); ++k) {
    std::int64_t x = m[i][k], y = m[j][k];
    m[i][k] = mod(mulmod(s, x, n) + mulmod(t, y, n), n);
    m[j][k] = mod(mulmod(u, x, n) + mulmod(w, y, n), n);
  }
}

// cols i, j <- (col i, col j) * [[s, u], [t, w]]: new i = s*ci + t*cj, new j = u*ci + w*cj
void combine_cols(IntMat& m, std::size_t i, std::size_t j, std::int64_t s, std::int64_t t, std::int64_t u,
                  std::int64_t w, std::int64_t n) {
  for (auto& row : m) {
    std::int64_t x = row[i], y = row[j];
    row[i] = mod(mulmod(s, x, n) + mulmod(t, y, n), n);
    row[j] = mod(mulmod(u, x, n) + mulmod(w, y, n), n);
  }
}

}  // namespace

ModSmith smith_mod(IntMat a, std::size_t cols, std::int64_t n, IntMat rhs) {
  ModSmith out;
  out.modulus = n;
  out.rows = a.size();
  out.cols = cols;
  for (auto& row : a) {
    row.resize(cols, 0);
    for (auto& x : row) x = mod(x, n);
  }
  for (auto& row : rhs)
    for (auto& x : row) x = mod(x, n);
  out.v.assign(cols, IntVec(cols, 0));
  out.v_inv.assign(cols, IntVec(cols, 0));
  for (std::size_t i = 0; i < cols; ++i) out.v[i][i] = out.v_inv[i][i] = 1 % n;

  const std::size_t rows = a.size();
  const std::size_t steps = std::min(rows, cols);
  for (std::size_t t = 0; t < steps; ++t) {
    // pivot: entry with the smallest gcd with n
    std::size_t pi = rows, pj = cols;
    std::int64_t best = n;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a[i][j] != 0) {
          std::int64_t g = std::gcd(a[i][j], n);
          if (g < best) {
            best = g;
            pi = i;
            pj = j;
          }
        }
    if (pi == rows) break;
    if (pi != t) {
      std::swap(a[pi], a[t]);
      if (!rhs.empty()) std::swap(rhs[pi], rhs[t]);
    }
    if (pj != t) {
      for (auto& row : a) std::swap(row[pj], row[t]);
      for (auto& row : out.v) std::swap(row[pj], row[t]);
      std::swap(out.v_inv[pj], out.v_inv[t]);
    }
    for (;;) {
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        const std::int64_t x = a[t][t], y = a[i][t];
        if (y % x == 0) {
          const std::int64_t f = mod(-(y / x), n);
          for (std::size_t k = t; k < cols; ++k) a[i][k] = mod(a[i][k] + mulmod(f, a[t][k], n), n);
          if (!rhs.empty())
            for (std::size_t k = 0; k < rhs[i].size(); ++k) rhs[i][k] = mod(rhs[i][k] + mulmod(f, rhs[t][k], n), n);
          continue;
        }
        auto [g, s, u] = ext_gcd(x, y);
        combine_rows(a, t, i, mod(s, n), mod(u, n), mod(-(y / g), n), mod(x / g, n), n);
        if (!rhs.empty()) combine_rows(rhs, t, i, mod(s, n), mod(u, n), mod(-(y / g), n), mod(x / g, n), n);
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        const std::int64_t x = a[t][t], y = a[t][j];
        std::int64_t g = x, s = 1, u = 0;
        if (y % x != 0) {
          auto e = ext_gcd(x, y);
          g = e.g;
          s = e.s;
          u = e.t;
        }
        const std::int64_t cu = mod(-(y / g), n), cw = mod(x / g, n);
        // new col t = s*ct + u*cj, new col j = -(y/g)*ct + (x/g)*cj
        combine_cols(a, t, j, mod(s, n), mod(u, n), cu, cw, n);
        combine_cols(out.v, t, j, mod(s, n), mod(u, n), cu, cw, n);
        // inverse acts on rows t, j of v_inv by [[x/g, y/g], [-u, s]]
        combine_rows(out.v_inv, t, j, mod(x / g, n), mod(y / g, n), mod(-u, n), mod(s, n), n);
      }
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) clean = clean && a[i][t] == 0;
      if (clean) break;
    }
    out.diag.push_back(a[t][t]);
  }
  out.rhs = std::move(rhs);
  return out;
}

namespace {

IntVec apply_v(const IntMat& v, const IntVec& y, std::int64_t n) {
  IntVec x(v.size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) x[i] = mod(x[i] + mulmod(v[i][j], y[j], n), n);
  return x;
}

IntMat kernel_from(const ModSmith& s) {
  const std::int64_t n = s.modulus;
  IntMat gens;
  for (std::size_t i = 0; i < s.cols; ++i) {
    IntVec y(s.cols, 0);
    if (i < s.diag.size()) {
      std::int64_t g = std::gcd(s.diag[i], n);
      if (g == n) {
        y[i] = 1;
      } else {
        y[i] = n / g;
      }
    } else {
      y[i] = 1;
    }
    IntVec x = apply_v(s.v, y, n);
    bool zero = true;
    for (auto c : x) zero = zero && c == 0;
    if (!zero) gens.push_back(std::move(x));
  }
  return gens;
}

}  // namespace

std::optional<ModSolution> solve_mod(const IntMat& a, std::size_t cols, const IntVec& b, std::int64_t n) {
  IntMat rhs(a.size(), IntVec(1, 0));
  for (std::size_t i = 0; i < a.size(); ++i) rhs[i][0] = b[i];
  ModSmith s = smith_mod(a, cols, n, rhs);
  IntVec y(cols, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::int64_t c = s.rhs[i][0];
    if (i < s.diag.size()) {
      const std::int64_t d = s.diag[i];
      const std::int64_t g = std::gcd(d, n);
      if (c % g != 0) return std::nullopt;
      const std::int64_t ng = n / g;
      y[i] = ng == 1 ? 0 : mulmod(c / g, *inverse_mod(d / g, ng), ng);
    } else if (c != 0) {
      return std::nullopt;
    }
  }
  ModSolution out;
  out.particular = apply_v(s.v, y, n);
  out.kernel = kernel_from(s);
  return out;
}

IntMat kernel_mod(const IntMat& a, std::size_t cols, std::int64_t n) { return kernel_from(smith_mod(a, cols, n)); }

IntVec lex_least_in_coset(const IntVec& c, const IntMat& gens, const IntVec& moduli) {
  const std::size_t s = moduli.size();
  IntMat pool = gens;
  for (auto& row : pool)
    for (std::size_t j = 0; j < s; ++j) row[j] = mod(row[j], moduli[j]);
  for (std::size_t j = 0; j < s; ++j) {
    IntVec row(s, 0);
    row[j] = moduli[j];
    pool.push_back(row);
  }

  IntMat pivots(s);
  std::vector<bool> have(s, false);
  for (std::size_t j = 0; j < s; ++j) {
    // fold every remaining row into one pivot row for column j
    IntVec piv;
    std::vector<IntVec> rest;
    for (auto& row : pool) {
      if (row[j] == 0) {
        rest.push_back(row);
        continue;
      }
      if (piv.empty()) {
        piv = row;
        continue;
      }
      auto [g, a, b] = ext_gcd(piv[j], row[j]);
      const std::int64_t x = piv[j] / g, y = row[j] / g;
      IntVec np(s), nr(s);
      for (std::size_t k = 0; k < s; ++k) {
        np[k] = mod(a * piv[k] + b * row[k], moduli[k]);
        nr[k] = mod(-y * piv[k] + x * row[k], moduli[k]);
      }
      np[j] = g;  // exact gcd in the pivot column
      nr[j] = 0;
      piv = np;
      if (std::any_of(nr.begin(), nr.end(), [](std::int64_t v) { return v != 0; })) rest.push_back(nr);
    }
    if (!piv.empty()) {
      pivots[j] = piv;
      have[j] = true;
    }
    pool = std::move(rest);
  }

  IntVec out(s);
  for (std::size_t j = 0; j < s; ++j) out[j] = mod(c[j], moduli[j]);
  for (std::size_t j = 0; j < s; ++j) {
    if (!have[j]) {
      out[j] = 0;
      continue;
    }
    const std::int64_t g = pivots[j][j];
    const std::int64_t q = out[j] / g;
    if (q != 0)
      for (std::size_t k = j; k < s; ++k) out[k] = mod(out[k] - q * pivots[j][k], moduli[k]);
  }
  return out;
}

}  // namespace twistalg
