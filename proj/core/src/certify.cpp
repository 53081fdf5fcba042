#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "liaison/linkage.hpp"
#include "liaison/oracle.hpp"

namespace liaison {

namespace {

// Monomial basis of (F/G)_d: the m * e_c of degree d whose leading term is
// outside the leading-term module of G.
struct StdBasis {
  std::vector<std::pair<int, Monomial>> elems;
  std::map<std::pair<int, std::vector<int>>, int> index;

  int size() const { return static_cast<int>(elems.size()); }
  int find(int c, const Monomial& m) const {
    auto it = index.find({c, m.e});
    return it == index.end() ? -1 : it->second;
  }
};

std::vector<LeadRef> lead_refs(const ModuleGB& G) {
  std::vector<LeadRef> out;
  for (const auto& g : G.gens) out.push_back(lead(g, G.order));
  return out;
}

StdBasis standard_basis(const GradedFreeModule& F,
                        const std::vector<LeadRef>& leads, int d) {
  StdBasis B;
  const int n = F.ring->nvars;
  for (int c = 0; c < F.rank(); ++c) {
    const int md = d - F.twists[c];
    if (md < 0) continue;
    for (const Monomial& m : monomials_of_degree(n, md)) {
      bool reducible = false;
      for (const auto& L : leads)
        if (L.c == c && L.t.m.divides(m)) {
          reducible = true;
          break;
        }
      if (reducible) continue;
      B.index[{c, m.e}] = B.size();
      B.elems.push_back({c, m});
    }
  }
  return B;
}

// Coordinates of a G-reduced vector over the standard basis of its degree.
std::vector<std::uint32_t> coordinates(const VecPoly& v, const StdBasis& B) {
  std::vector<std::uint32_t> out(B.size(), 0);
  for (int c = 0; c < v.rank(); ++c)
    for (const Term& t : v.comp[c].terms()) {
      const int idx = B.find(c, t.m);
      if (idx < 0)
        fail(ErrorCode::BadArgument,
             "a reduced vector escaped the standard monomial basis");
      out[idx] = t.c;
    }
  return out;
}

// Nullspace basis of m over F via reduced row echelon form.
std::vector<std::vector<std::uint32_t>> nullspace(FpMat m,
                                                  const PrimeField& F) {
  std::vector<int> pivots;
  const int rank = row_reduce(m, F, &pivots);
  std::vector<bool> is_pivot(m.cols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<std::vector<std::uint32_t>> out;
  for (int j = 0; j < m.cols; ++j) {
    if (is_pivot[j]) continue;
    std::vector<std::uint32_t> v(m.cols, 0);
    v[j] = 1;
    for (int r = 0; r < rank; ++r) v[pivots[r]] = F.neg(m.at(r, j));
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

CheckReport certify_graded_iso(const ResolvedModule& M,
                               const ResolvedModule& N, int shift,
                               const Window& w) {
  CheckReport r;
  r.check_id = "certify.iso";
  if (M.is_zero() && N.is_zero()) {
    r.status = CheckStatus::Pass;
    r.note = "zero modules";
    return r;
  }
  if (M.is_zero() != N.is_zero()) {
    r.status = CheckStatus::Fail;
    r.note = "exactly one side is the zero module";
    return r;
  }
  const RingPtr& ring = M.ring();
  require_same_ring(ring, N.ring());
  const PrimeField F(ring->characteristic());

  const Window ew = effective_window(w, {&M, &N});
  HilbertSum rhs;
  rhs.add(1, N.series(), 1, shift);
  CheckReport hf = hf_identity("certify.iso", M.series(), rhs, ew);
  if (!hf.passed()) {
    hf.note = "Hilbert functions differ: " + hf.note;
    return hf;
  }

  const GradedFreeModule& FM = M.pm.gens;
  const GradedFreeModule& FN = N.pm.gens;
  const ModuleGB GM = module_groebner(FM, ModuleOrder::top(ring, FM.rank()),
                                      M.pm.relations.cols);
  const ModuleGB GN = module_groebner(FN, ModuleOrder::top(ring, FN.rank()),
                                      N.pm.relations.cols);
  const std::vector<LeadRef> LM = lead_refs(GM);
  const std::vector<LeadRef> LN = lead_refs(GN);

  // Unknowns: coefficients of each candidate image of an M-generator over
  // the standard basis of N in the matching degree.
  const int g = FM.rank();
  std::vector<StdBasis> image_basis(g);
  std::vector<int> offset(g + 1, 0);
  for (int i = 0; i < g; ++i) {
    image_basis[i] = standard_basis(FN, LN, FM.twists[i] + shift);
    offset[i + 1] = offset[i] + image_basis[i].size();
  }
  const int unknowns = offset[g];
  if (unknowns == 0) {
    r.status = CheckStatus::Fail;
    r.note = "no graded homomorphism of degree zero exists";
    return r;
  }

  // One block of constraint rows per relation of M: the image of the
  // relation must reduce to zero in N.
  std::vector<std::vector<std::uint32_t>> rows;
  for (int col = 0; col < M.pm.relations.ncols(); ++col) {
    const VecPoly& rel = M.pm.relations.cols[col];
    const int dtgt = M.pm.relations.source_twists[col] + shift;
    const StdBasis target = standard_basis(FN, LN, dtgt);
    if (target.size() == 0) continue;
    std::vector<std::vector<std::uint32_t>> block(
        target.size(), std::vector<std::uint32_t>(unknowns, 0));
    for (int i = 0; i < g; ++i) {
      if (rel.comp[i].is_zero()) continue;
      for (int b = 0; b < image_basis[i].size(); ++b) {
        VecPoly cand(ring, FN.rank());
        const auto& e = image_basis[i].elems[b];
        cand.comp[e.first] = Polynomial::constant(ring, 1)
                                 .times_monomial(e.second);
        const VecPoly red = module_nf(cand.times_poly(rel.comp[i]), GN);
        const std::vector<std::uint32_t> co = coordinates(red, target);
        for (int t = 0; t < target.size(); ++t)
          block[t][offset[i] + b] = co[t];
      }
    }
    for (auto& br : block) rows.push_back(std::move(br));
  }

  FpMat sys(static_cast<int>(rows.size()), unknowns);
  for (int i = 0; i < sys.rows; ++i)
    for (int j = 0; j < unknowns; ++j) sys.at(i, j) = rows[i][j];
  const std::vector<std::vector<std::uint32_t>> homs = nullspace(sys, F);
  if (homs.empty()) {
    r.status = CheckStatus::Fail;
    r.note = "no graded homomorphism of degree zero exists";
    return r;
  }

  auto images = [&](const std::vector<std::uint32_t>& x) {
    std::vector<VecPoly> img(g, VecPoly(ring, FN.rank()));
    for (int i = 0; i < g; ++i)
      for (int b = 0; b < image_basis[i].size(); ++b) {
        const std::uint32_t c = x[offset[i] + b];
        if (c == 0) continue;
        const auto& e = image_basis[i].elems[b];
        VecPoly term(ring, FN.rank());
        term.comp[e.first] =
            Polynomial::constant(ring, c).times_monomial(e.second);
        img[i] = img[i] + term;
      }
    return img;
  };

  auto bijective = [&](const std::vector<VecPoly>& img) {
    for (int d = ew.lo; d <= ew.hi; ++d) {
      const long long h = M.series().value_at(d);
      if (h <= 0) continue;
      const StdBasis bm = standard_basis(FM, LM, d);
      const StdBasis bn = standard_basis(FN, LN, d + shift);
      if (bm.size() != h || bn.size() != h)
        fail(ErrorCode::BadArgument,
             "standard monomial count disagrees with the Hilbert function");
      FpMat mat(bm.size(), bn.size());
      for (int row = 0; row < bm.size(); ++row) {
        const auto& e = bm.elems[row];
        const VecPoly red =
            module_nf(img[e.first].times_monomial(e.second), GN);
        const std::vector<std::uint32_t> co = coordinates(red, bn);
        for (int j = 0; j < bn.size(); ++j) mat.at(row, j) = co[j];
      }
      if (row_reduce(mat, F) != static_cast<int>(h)) return false;
    }
    return true;
  };

  std::mt19937 rng(20259u);
  std::uniform_int_distribution<std::uint32_t> coef(
      0, ring->characteristic() - 1);
  const int extra_trials = 32;
  for (int trial = 0;
       trial < static_cast<int>(homs.size()) + extra_trials; ++trial) {
    std::vector<std::uint32_t> x(unknowns, 0);
    if (trial < static_cast<int>(homs.size())) {
      x = homs[trial];
    } else {
      for (const auto& h : homs) {
        const std::uint32_t c = coef(rng);
        if (c == 0) continue;
        for (int j = 0; j < unknowns; ++j)
          x[j] = F.add(x[j], F.mul(c, h[j]));
      }
    }
    bool zero = true;
    for (std::uint32_t v : x)
      if (v) {
        zero = false;
        break;
      }
    if (zero) continue;
    if (bijective(images(x))) {
      r.status = CheckStatus::Pass;
      r.lhs = static_cast<long long>(homs.size());
      r.note = "isomorphism certified through degree " +
               std::to_string(ew.hi) + "; lhs is the homomorphism space "
               "dimension";
      return r;
    }
  }
  r.status = CheckStatus::Inconclusive;
  r.lhs = static_cast<long long>(homs.size());
  r.note = "homomorphisms exist but none of the sampled candidates is an "
           "isomorphism";
  return r;
}

}  // namespace liaison
