#include "twistalg/group_algebras.hpp"

#include <algorithm>

#include "twistalg/error.hpp"

namespace twistalg {

namespace {

std::string coord_label(const char* prefix, const AbElement& x) {
  std::string s = prefix;
  s += "(";
  for (std::size_t i = 0; i < x.x.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(x.x[i]);
  }
  return s + ")";
}

}  // namespace

FieldElement embed_character(const FieldSpec& f, const FinAbGroup& l, const AbCharacter& chi, const AbElement& y) {
  return f.embed(l.evaluate(chi, y));
}

KPData build_kP(const LAction& act, const FieldSpec& f) {
  const PGroupData& pd = act.p_group();
  const FinAbGroup& p = pd.group();
  const FinAbGroup& l = act.l();
  const std::size_t n = static_cast<std::size_t>(p.order());

  std::vector<std::string> labels;
  std::vector<std::int32_t> target(n * n);
  std::vector<FieldElement> coeff(n * n, f.one());
  const auto elems = p.elements();
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back(coord_label("b", elems[a]));
    for (std::size_t b = 0; b < n; ++b) target[a * n + b] = static_cast<std::int32_t>(p.index(p.add(elems[a], elems[b])));
  }
  FVec one(n, f.zero());
  one[0] = f.one();
  StructAlgebra alg = StructAlgebra::monomial(f, std::move(labels), std::move(target), std::move(coeff), one);

  const int r = pd.frattini_rank();
  const FieldElement inv_l = f.inv(f.from_int(l.order()));
  // Averaged section sbar(e_k) of J/J^2 -> J.
  std::vector<FVec> section(static_cast<std::size_t>(r), FVec(n, f.zero()));
  for (const auto& y : l.elements()) {
    const auto& minus = act.of(l.neg(y));
    for (int k = 0; k < r; ++k) {
      const int c = pd.component_of(k), off = pd.offset(c);
      for (int li = off; li < off + pd.components()[c].rank; ++li) {
        const FieldElement coef = f.mul(inv_l, f.from_int(minus[c][li - off][k - off]));
        if (coef.code == 0) continue;
        const std::size_t img = static_cast<std::size_t>(p.index(act.act(y, p.generator(li))));
        section[k][img] = f.add(section[k][img], coef);
        section[k][0] = f.sub(section[k][0], coef);
      }
    }
  }

  EigenBasisW w;
  const auto dual = dual_group(l);
  for (std::size_t c = 0; c < pd.components().size(); ++c) {
    const int rc = pd.components()[c].rank, off = pd.offset(static_cast<int>(c));
    struct Found {
      std::size_t lead;
      AbCharacter psi;
      FVec v;
    };
    std::vector<Found> vectors;
    for (const auto& psi : dual) {
      FMat rows;
      for (std::size_t g = 0; g < l.rank(); ++g) {
        const IntMat& m = act.matrices()[g][c];
        const FieldElement ev = embed_character(f, l, psi, l.generator(g));
        for (int i = 0; i < rc; ++i) {
          FVec row(static_cast<std::size_t>(rc));
          for (int j = 0; j < rc; ++j) row[j] = f.from_int(m[i][j]);
          row[i] = f.sub(row[i], ev);
          rows.push_back(std::move(row));
        }
      }
      FMat kernel;
      if (l.rank() > 0) {
        kernel = nullspace(f, rows, static_cast<std::size_t>(rc));
      } else if (psi == l.trivial_character()) {
        for (int i = 0; i < rc; ++i) {
          FVec e(static_cast<std::size_t>(rc), f.zero());
          e[i] = f.one();
          kernel.push_back(e);
        }
      }
      for (auto& v : kernel) {
        std::size_t lead = 0;
        while (v[lead].code == 0) ++lead;
        v = scaled(f, f.inv(v[lead]), v);
        vectors.push_back({lead, psi, v});
      }
    }
    // leading coordinate first, so a diagonal action yields w_i = b_i - 1 in order
    std::stable_sort(vectors.begin(), vectors.end(),
                     [](const Found& a, const Found& b) { return a.lead < b.lead; });
    const std::size_t found = vectors.size();
    for (const auto& fv : vectors) {
      FVec frat(static_cast<std::size_t>(r), f.zero());
      FVec wv(n, f.zero());
      for (int i = 0; i < rc; ++i) {
        frat[off + i] = fv.v[i];
        axpy(f, wv, fv.v[i], section[off + i]);
      }
      w.w.push_back(std::move(wv));
      w.frattini.push_back(std::move(frat));
      w.psi.push_back(fv.psi);
      w.component.push_back(static_cast<int>(c));
      w.n.push_back(pd.components()[c].n);
    }
    if (found != static_cast<std::size_t>(rc))
      throw Error(Errc::EigenvaluesNotInField, "L-action is not diagonalizable over F_" + std::to_string(f.size()));
  }
  return {std::move(alg), std::move(w)};
}

// ---------------------------------------------------------------------------

TwistedAlgebra::TwistedAlgebra(const LAction& act, const ExtGroup& h, const FieldSpec& f)
    : act_(act), h_(h), alg_(StructAlgebra::dense(f, {}, {}, {})) {
  const FinAbGroup& p = act.p_group().group();
  const FinAbGroup& l = h.l();
  const std::size_t np = static_cast<std::size_t>(p.order()), nl = static_cast<std::size_t>(l.order());
  const std::size_t n = np * nl;
  std::vector<FieldElement> chi(static_cast<std::size_t>(h.m()));
  for (std::int64_t z = 0; z < h.m(); ++z) chi[z] = f.embed(h.chi(z));

  std::vector<std::string> labels(n);
  std::vector<std::int32_t> target(n * n);
  std::vector<FieldElement> coeff(n * n);
  const auto pe = p.elements();
  const auto le = l.elements();
  for (std::size_t xi = 0; xi < np; ++xi)
    for (std::size_t yi = 0; yi < nl; ++yi) labels[xi * nl + yi] = coord_label("x", pe[xi]) + coord_label("h", le[yi]);
  for (std::size_t y1 = 0; y1 < nl; ++y1) {
    // M_{y1} x2 for every x2
    std::vector<AbElement> moved(np);
    for (std::size_t x2 = 0; x2 < np; ++x2) moved[x2] = act.act(le[y1], pe[x2]);
    for (std::size_t y2 = 0; y2 < nl; ++y2) {
      const HElement prod = h.mul(h.lift(le[y1]), h.lift(le[y2]));
      const std::size_t yi = static_cast<std::size_t>(l.index(prod.x));
      const FieldElement c = chi[prod.z];
      for (std::size_t x1 = 0; x1 < np; ++x1)
        for (std::size_t x2 = 0; x2 < np; ++x2) {
          const std::size_t a = x1 * nl + y1, b = x2 * nl + y2;
          const std::size_t xi = static_cast<std::size_t>(p.index(p.add(pe[x1], moved[x2])));
          target[a * n + b] = static_cast<std::int32_t>(xi * nl + yi);
          coeff[a * n + b] = c;
        }
    }
  }
  FVec one(n, f.zero());
  one[0] = f.one();
  alg_ = StructAlgebra::monomial(f, std::move(labels), std::move(target), std::move(coeff), one);
}

std::size_t TwistedAlgebra::index(const AbElement& x, const AbElement& y) const {
  return static_cast<std::size_t>(act_.p_group().group().index(x) * h_.l().order() + h_.l().index(y));
}

FVec TwistedAlgebra::from_p(const FVec& kp) const {
  FVec v = alg_.zero();
  const std::size_t nl = static_cast<std::size_t>(h_.l().order());
  for (std::size_t i = 0; i < kp.size(); ++i) v[i * nl] = kp[i];
  return v;
}

FVec TwistedAlgebra::from_h(const HElement& h) const { return from_group(act_.p_group().group().identity(), h); }

FVec TwistedAlgebra::from_group(const AbElement& x, const HElement& h) const {
  FVec v = alg_.zero();
  v[index(x, h.x)] = field().embed(h_.chi(h.z));
  return v;
}

FVec TwistedAlgebra::e_phi(const PhiFamily& fam, const PhiIndex& phi) const {
  const FieldSpec& f = field();
  FVec v = alg_.zero();
  const auto center = h_.center();
  const FieldElement scale = f.inv(f.from_int(static_cast<std::int64_t>(center.size())));
  for (const auto& g : center) axpy(f, v, f.mul(scale, f.embed(fam.value(phi, h_.inv(g)))), from_h(g));
  return v;
}

MatSubalgebra build_mat_subalgebra(const TwistedAlgebra& a, const PhiFamily& fam) {
  const ExtGroup& h = a.ext();
  const FieldSpec& f = a.field();
  const StructAlgebra& alg = a.algebra();
  std::vector<FVec> idem;
  for (const auto& phi : fam.members()) idem.push_back(a.e_phi(fam, phi));
  MatSubalgebra out{EchelonBasis(f, alg.dim()), {}};
  for (const auto& y : h.l().elements()) {
    const HElement g = h.lift(y);
    const FVec hv = a.from_h(g);
    FVec m = alg.zero();
    for (std::size_t k = 0; k < idem.size(); ++k) {
      const FieldElement c = f.embed(fam.xi_value(fam.members()[k], g).inverse());
      axpy(f, m, c, alg.mul(idem[k], hv));
    }
    out.span.add(m);
    out.elements.push_back(std::move(m));
  }
  const std::int64_t expected = h.degree() * h.degree();
  if (static_cast<std::int64_t>(out.span.rank()) != expected)
    throw Error(Errc::DimensionMismatch, "matrix subalgebra has dimension " + std::to_string(out.span.rank()) +
                                             ", expected " + std::to_string(expected));
  if (!out.span.contains(alg.one())) throw Error(Errc::DimensionMismatch, "matrix subalgebra does not contain e");
  for (const auto& u : out.span.rows())
    for (const auto& v : out.span.rows())
      if (!out.span.contains(alg.mul(u, v)))
        throw Error(Errc::DimensionMismatch, "matrix subalgebra is not closed under multiplication");
  return out;
}

}  // namespace twistalg
