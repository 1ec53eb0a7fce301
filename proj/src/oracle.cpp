#include "twistalg/oracle.hpp"

#include <algorithm>
#include <chrono>

namespace twistalg {

ConstantTable::ConstantTable(FieldSpec f, std::size_t dim, std::vector<std::vector<Term>> products, FVec one)
    : f_(std::move(f)), n_(dim), products_(std::move(products)), one_(std::move(one)) {
  if (products_.size() != n_ * n_ || one_.size() != n_)
    throw Error(Errc::DimensionMismatch, "constant table has the wrong shape");
}

ConstantTable ConstantTable::from_algebra(const StructAlgebra& a) {
  const std::size_t n = a.dim();
  std::vector<std::vector<Term>> prods(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto& out = prods[i * n + j];
      if (a.is_monomial()) {
        const std::int32_t t = a.monomial_target(i, j);
        if (t >= 0 && a.monomial_coefficient(i, j).code != 0)
          out.emplace_back(static_cast<std::size_t>(t), a.monomial_coefficient(i, j));
      } else {
        const FVec v = a.mul(a.basis_vector(i), a.basis_vector(j));
        for (std::size_t k = 0; k < n; ++k)
          if (v[k].code != 0) out.emplace_back(k, v[k]);
      }
    }
  return ConstantTable(a.field(), n, std::move(prods), a.one());
}

FVec ConstantTable::mul(const FVec& a, const FVec& b) const {
  FVec out(n_, f_.zero());
  for (std::size_t i = 0; i < n_; ++i) {
    if (a[i].code == 0) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (b[j].code == 0) continue;
      const FieldElement c = f_.mul(a[i], b[j]);
      for (const auto& [k, v] : products_[i * n_ + j]) out[k] = f_.add(out[k], f_.mul(c, v));
    }
  }
  return out;
}

FVec ConstantTable::pow(const FVec& a, std::int64_t k) const {
  FVec result = one_;
  FVec base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    k >>= 1;
    if (k > 0) base = mul(base, base);
  }
  return result;
}

namespace {

FVec basis_vec(const ConstantTable& a, std::size_t i) {
  FVec v(a.dim(), a.field().zero());
  v[i] = a.field().one();
  return v;
}

// Rows of the linear conditions "x e_j reduces to zero modulo s" (right = true)
// or "e_j x - x e_j = 0" (right = false), one block of rows per j.
FMat annihilator_rows(const ConstantTable& a, const EchelonBasis* s) {
  const FieldSpec& f = a.field();
  const std::size_t n = a.dim();
  FMat rows;
  for (std::size_t j = 0; j < n; ++j) {
    FMat block(n, FVec(n, f.zero()));  // block[k][i]: coordinate k of the image of e_i
    for (std::size_t i = 0; i < n; ++i) {
      FVec img(n, f.zero());
      for (const auto& [k, c] : a.product(i, j)) img[k] = f.add(img[k], c);
      if (s) {
        img = s->reduce(std::move(img));
      } else {
        for (const auto& [k, c] : a.product(j, i)) img[k] = f.sub(img[k], c);
      }
      for (std::size_t k = 0; k < n; ++k) block[k][i] = img[k];
    }
    for (auto& r : block)
      if (!is_zero(r)) rows.push_back(std::move(r));
  }
  return rows;
}

EchelonBasis span_of(const FieldSpec& f, std::size_t n, const FMat& vs) {
  EchelonBasis b(f, n);
  for (const auto& v : vs) b.add(v);
  return b;
}

}  // namespace

EchelonBasis center_of(const ConstantTable& a) {
  return span_of(a.field(), a.dim(), nullspace(a.field(), annihilator_rows(a, nullptr), a.dim()));
}

EchelonBasis commutator_space(const ConstantTable& a) {
  const FieldSpec& f = a.field();
  EchelonBasis c(f, a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j) {
      FVec v(a.dim(), f.zero());
      for (const auto& [k, x] : a.product(i, j)) v[k] = f.add(v[k], x);
      for (const auto& [k, x] : a.product(j, i)) v[k] = f.sub(v[k], x);
      if (!is_zero(v)) c.add(v);
    }
  return c;
}

RadicalInfo radical_and_semisimple_rank(const ConstantTable& a) {
  const FieldSpec& f = a.field();
  const std::size_t n = a.dim();
  const std::int64_t p = f.characteristic();
  const std::int64_t root_exp = f.size() / p;  // x -> x^(q/p) inverts x -> x^p

  const EchelonBasis comm = commutator_space(a);
  std::vector<std::size_t> complement;
  {
    std::vector<bool> piv(n, false);
    for (auto k : comm.pivots()) piv[k] = true;
    for (std::size_t k = 0; k < n; ++k)
      if (!piv[k]) complement.push_back(k);
  }
  FMat powers;
  for (auto k : complement) powers.push_back(a.pow(basis_vec(a, k), p));

  EchelonBasis t = comm;
  for (;;) {
    const std::size_t r = complement.size();
    FMat m(n, FVec(r, f.zero()));
    for (std::size_t i = 0; i < r; ++i) {
      const FVec res = t.reduce(powers[i]);
      for (std::size_t k = 0; k < n; ++k) m[k][i] = res[k];
    }
    EchelonBasis next = comm;
    for (const auto& mu : nullspace(f, m, r)) {
      FVec x(n, f.zero());
      for (std::size_t i = 0; i < r; ++i) x[complement[i]] = f.pow(mu[i], root_exp);
      next.add(x);
    }
    if (next.rank() == t.rank()) break;
    t = std::move(next);
  }

  RadicalInfo info{EchelonBasis(f, n)};
  info.radical = span_of(f, n, nullspace(f, annihilator_rows(a, &t), n));
  info.radical_dim = info.radical.rank();
  info.semisimple_dim = n - info.radical_dim;

  const FMat& jrows = info.radical.rows();
  for (const auto& x : jrows)
    for (std::size_t i = 0; i < n; ++i) {
      const FVec e = basis_vec(a, i);
      if (!info.radical.contains(a.mul(x, e)) || !info.radical.contains(a.mul(e, x)))
        throw Error(Errc::RadicalUndetermined, "candidate radical is not a two-sided ideal");
    }
  // J^k by rank iteration: J^{k+1} = J^k J.
  FMat cur = jrows;
  info.nilpotency_index = 1;
  while (!cur.empty()) {
    if (info.nilpotency_index > n + 1) throw Error(Errc::RadicalUndetermined, "candidate radical is not nilpotent");
    EchelonBasis nxt(f, n);
    for (const auto& u : cur)
      for (const auto& v : jrows) nxt.add(a.mul(u, v));
    cur = nxt.rows();
    ++info.nilpotency_index;
  }
  if (info.radical_dim == 0) info.nilpotency_index = 1;
  info.quotient_commutative = true;
  for (const auto& c : comm.rows())
    if (!info.radical.contains(c)) info.quotient_commutative = false;
  return info;
}

bool OracleReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const OracleCheck& c) { return c.passed || !c.asserted; });
}

ConstantTable khe_table(const ExtGroup& h, const FieldSpec& f) {
  const FinAbGroup& l = h.l();
  const std::size_t n = static_cast<std::size_t>(l.order());
  std::vector<std::vector<ConstantTable::Term>> prods(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const HElement g = h.mul(h.lift(l.element(static_cast<std::int64_t>(i))), h.lift(l.element(static_cast<std::int64_t>(j))));
      prods[i * n + j].emplace_back(static_cast<std::size_t>(l.index(g.x)), f.embed(h.chi(g.z)));
    }
  FVec one(n, f.zero());
  one[static_cast<std::size_t>(l.index(l.identity()))] = f.one();
  return ConstantTable(f, n, std::move(prods), std::move(one));
}

namespace {

using Clock = std::chrono::steady_clock;

OracleCheck timed(std::string name, std::string validates, Clock::time_point start, std::int64_t expected,
                  std::int64_t computed) {
  OracleCheck c;
  c.name = std::move(name);
  c.validates = std::move(validates);
  c.expected = std::to_string(expected);
  c.computed = std::to_string(computed);
  c.passed = expected == computed;
  c.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return c;
}

}  // namespace

OracleReport wedderburn_check(const ExtGroup& h, const PhiFamily& fam, const FieldSpec& f) {
  OracleReport rep;
  const FinAbGroup& l = h.l();
  const std::int64_t rad = static_cast<std::int64_t>(h.radical_elements().size());
  const std::int64_t deg = h.degree();

  auto t0 = Clock::now();
  const ConstantTable a = khe_table(h, f);
  rep.checks.push_back(timed("dim kHe", "kHe is |Z(H):Z| copies of an m x m matrix algebra", t0, rad * deg * deg,
                             static_cast<std::int64_t>(a.dim())));

  t0 = Clock::now();
  const EchelonBasis z = center_of(a);
  rep.checks.push_back(timed("center of kHe", "the center of kHe has one dimension per block", t0, rad,
                             static_cast<std::int64_t>(z.rank())));

  t0 = Clock::now();
  const FieldElement inv_rad = f.inv(f.from_int(rad));
  std::vector<FVec> es;
  for (const auto& phi : fam.members()) {
    FVec e(a.dim(), f.zero());
    for (const auto& x : h.radical_elements())
      e[static_cast<std::size_t>(l.index(x))] = f.mul(inv_rad, f.embed(fam.value(phi, h.lift(x)).inverse()));
    es.push_back(std::move(e));
  }
  bool idem_ok = static_cast<std::int64_t>(es.size()) == rad;
  FVec sum(a.dim(), f.zero());
  for (std::size_t i = 0; i < es.size() && idem_ok; ++i) {
    axpy(f, sum, f.one(), es[i]);
    if (!z.contains(es[i])) idem_ok = false;
    for (std::size_t j = 0; j < es.size() && idem_ok; ++j) {
      const FVec prod = a.mul(es[i], es[j]);
      if (i == j ? prod != es[i] : !is_zero(prod)) idem_ok = false;
    }
  }
  idem_ok = idem_ok && sum == a.one();
  OracleCheck ic = timed("block idempotents", "the e_phi are orthogonal central idempotents summing to e", t0, 1,
                         idem_ok ? 1 : 0);
  ic.expected = "complete orthogonal central";
  ic.computed = idem_ok ? "complete orthogonal central" : "fails";
  rep.checks.push_back(ic);

  t0 = Clock::now();
  std::int64_t bad_corner = -1;
  for (std::size_t i = 0; i < es.size(); ++i) {
    EchelonBasis corner(f, a.dim());
    for (std::size_t k = 0; k < a.dim(); ++k) corner.add(a.mul(a.mul(es[i], basis_vec(a, k)), es[i]));
    if (static_cast<std::int64_t>(corner.rank()) != deg * deg) {
      bad_corner = static_cast<std::int64_t>(corner.rank());
      break;
    }
  }
  rep.checks.push_back(timed("corner dimensions", "each block e_phi kHe e_phi has dimension m^2", t0, deg * deg,
                             bad_corner < 0 ? deg * deg : bad_corner));

  t0 = Clock::now();
  const RadicalInfo ri = radical_and_semisimple_rank(a);
  rep.checks.push_back(timed("radical of kHe", "kHe is semisimple", t0, 0, static_cast<std::int64_t>(ri.radical_dim)));
  return rep;
}

// ---------------------------------------------------------------------------
// Graded closure of the path algebra.
//
// A_0 is spanned by the vertices. Given a basis B_{L-1} of A_{L-1}, the
// products b w_k span A_L; S_L has one coordinate per pair (b, k), and A_L is
// S_L modulo the images u r of every relation r, with u running over
// B_{L-|r|}. Everything stays bounded by the size of the quotient.

namespace {

struct GradedLevel {
  std::vector<std::size_t> end;          // end vertex of each basis path
  std::vector<std::size_t> basis;        // S-coordinates not hit by a pivot
  std::vector<std::ptrdiff_t> basis_of;  // S-coordinate -> basis position or -1
  EchelonBasis relations;
};

struct RelationTerm {
  std::vector<std::size_t> word;  // arrow types in order of traversal
  FieldElement coeff;
};

struct GradedRelation {
  std::size_t vertex;
  std::vector<RelationTerm> terms;
};

}  // namespace

std::int64_t independent_dimension_count(const QuiverPresentation& q, const FieldSpec& f, std::int64_t cap) {
  const std::size_t nv = q.vertices.size();
  const std::size_t r = q.psi.size();
  std::vector<std::vector<std::size_t>> target(r, std::vector<std::size_t>(nv, 0));
  for (const auto& a : q.arrows) target[a.i][q.vertex_position(a.source)] = q.vertex_position(a.target);

  std::vector<GradedRelation> rels;
  for (const auto& c : q.commutations)
    rels.push_back({q.vertex_position(c.phi), {{{c.i, c.j}, f.one()}, {{c.j, c.i}, f.neg(f.embed(c.q))}}});
  for (const auto& pr : q.powers)
    rels.push_back({q.vertex_position(pr.phi),
                    {{std::vector<std::size_t>(static_cast<std::size_t>(pr.length), pr.i), f.one()}}});

  std::vector<GradedLevel> levels;
  {
    GradedLevel zero{{}, {}, {}, EchelonBasis(f, nv)};
    for (std::size_t v = 0; v < nv; ++v) {
      zero.end.push_back(v);
      zero.basis.push_back(v);
      zero.basis_of.push_back(static_cast<std::ptrdiff_t>(v));
    }
    levels.push_back(std::move(zero));
  }
  std::int64_t total = static_cast<std::int64_t>(nv);
  if (r == 0) return total;

  // x over B_{L-1} times w_k, as a vector over S_L.
  auto append = [&](const FVec& x, std::size_t k) {
    FVec s(x.size() * r, f.zero());
    for (std::size_t b = 0; b < x.size(); ++b) s[b * r + k] = x[b];
    return s;
  };
  auto to_basis = [&](const GradedLevel& lv, const FVec& s) {
    const FVec rem = lv.relations.reduce(s);
    FVec x(lv.basis.size(), f.zero());
    for (std::size_t t = 0; t < lv.basis.size(); ++t) x[t] = rem[lv.basis[t]];
    return x;
  };

  for (std::size_t len = 1;; ++len) {
    const GradedLevel& prev = levels.back();
    const std::size_t ns = prev.basis.size() * r;
    GradedLevel cur{{}, {}, std::vector<std::ptrdiff_t>(ns, -1), EchelonBasis(f, ns)};
    for (const auto& g : rels) {
      const std::size_t l = g.terms.front().word.size();
      if (l > len) continue;
      const GradedLevel& start = levels[len - l];
      for (std::size_t u = 0; u < start.basis.size(); ++u) {
        if (start.end[u] != g.vertex) continue;
        FVec image(ns, f.zero());
        for (const auto& term : g.terms) {
          FVec x(start.basis.size(), f.zero());
          x[u] = f.one();
          for (std::size_t step = 0; step < term.word.size(); ++step) {
            const std::size_t lvl = len - l + step + 1;
            FVec s = append(x, term.word[step]);
            if (step + 1 == term.word.size()) {
              axpy(f, image, term.coeff, s);
            } else {
              x = to_basis(levels[lvl], s);
            }
          }
        }
        if (!is_zero(image)) cur.relations.add(image);
      }
    }
    std::vector<bool> pivot(ns, false);
    for (auto pv : cur.relations.pivots()) pivot[pv] = true;
    for (std::size_t s = 0; s < ns; ++s)
      if (!pivot[s]) {
        cur.basis_of[s] = static_cast<std::ptrdiff_t>(cur.basis.size());
        cur.basis.push_back(s);
        cur.end.push_back(target[s % r][prev.end[s / r]]);
      }
    total += static_cast<std::int64_t>(cur.basis.size());
    if (total > cap)
      throw Error(Errc::NonTerminating,
                  "path closure exceeded " + std::to_string(cap) + " at length " + std::to_string(len));
    // A_{L+1} is spanned by A_L times arrows, so a zero level ends the count.
    if (cur.basis.empty()) return total;
    levels.push_back(std::move(cur));
  }
}

}  // namespace twistalg
