#include "liaison/resolution.hpp"

#include <algorithm>

namespace liaison {

std::map<int, std::map<int, int>> FreeResolution::betti() const {
  std::map<int, std::map<int, int>> b;
  for (int t : F0.twists) b[0][t]++;
  for (int k = 0; k < length(); ++k)
    for (int t : d[k].source_twists) b[k + 1][t]++;
  return b;
}

FreeResolution free_resolution(const GradedFreeModule& F0,
                               const std::vector<VecPoly>& gens,
                               bool minimal) {
  FreeResolution res{F0, {}};
  ModuleGB G = module_groebner(
      F0, ModuleOrder::top(F0.ring, F0.rank()), gens);
  if (!G.gens.empty()) {
    GradedMatrix d0;
    d0.target = F0;
    for (const auto& g : G.gens) {
      auto deg = column_degree(F0, g);
      d0.source_twists.push_back(deg ? *deg : 0);
      d0.cols.push_back(g);
    }
    res.d.push_back(std::move(d0));

    ModuleGB cur = G;
    const int cap = F0.ring->nvars + 2;
    for (int level = 1; ; ++level) {
      SchreyerStep step = schreyer_syzygies(cur);
      if (step.syzygies.ncols() == 0) break;
      if (level > cap)
        fail(ErrorCode::BadArgument,
             "internal error: syzygy computation did not terminate");
      res.d.push_back(step.syzygies);
      cur = ModuleGB{res.d.back().target, std::move(step.induced),
                     res.d.back().cols};
    }
  }
  if (minimal) minimize_resolution(res);
  return res;
}

FreeResolution resolve_cyclic(const RingPtr& ring,
                              const std::vector<Polynomial>& gens,
                              bool minimal) {
  GradedFreeModule F0{ring, {0}};
  std::vector<VecPoly> vecs;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (!g.is_homogeneous())
      fail(ErrorCode::NotHomogeneous,
           "generator is not homogeneous: " + to_string(g));
    VecPoly v(ring, 1);
    v.comp[0] = g;
    vecs.push_back(std::move(v));
  }
  return free_resolution(F0, vecs, minimal);
}

namespace {

// Invertible entry: nonzero constant (degree-zero homogeneous entry).
bool find_unit(const GradedMatrix& m, int* out_i, int* out_j) {
  for (int j = 0; j < m.ncols(); ++j)
    for (int i = 0; i < m.rows(); ++i) {
      const Polynomial& f = m.at(i, j);
      if (!f.is_zero() && f.degree() == 0) {
        *out_i = i;
        *out_j = j;
        return true;
      }
    }
  return false;
}

void erase_row(GradedMatrix& m, int i) {
  m.target.twists.erase(m.target.twists.begin() + i);
  for (auto& col : m.cols) col.comp.erase(col.comp.begin() + i);
}

void erase_col(GradedMatrix& m, int j) {
  m.source_twists.erase(m.source_twists.begin() + j);
  m.cols.erase(m.cols.begin() + j);
}

// Split off the trivial subcomplex generated by the unit at (rho, gamma) of
// d[k]: in the pruned basis, d[k] picks up the correction term
// -(column gamma) u^{-1} (row rho); the neighbouring maps only lose the
// corresponding column / row.
void prune_unit(FreeResolution& res, int k, int rho, int gamma) {
  GradedMatrix& A = res.d[k];
  const RingPtr& ring = A.target.ring;
  std::uint32_t uinv = ring->field.inv(A.at(rho, gamma).lc());

  GradedMatrix B;
  B.target.ring = ring;
  for (int i = 0; i < A.rows(); ++i)
    if (i != rho) B.target.twists.push_back(A.target.twists[i]);
  for (int j = 0; j < A.ncols(); ++j) {
    if (j == gamma) continue;
    B.source_twists.push_back(A.source_twists[j]);
    VecPoly col(ring, B.target.rank());
    const Polynomial& arj = A.at(rho, j);
    int out = 0;
    for (int i = 0; i < A.rows(); ++i) {
      if (i == rho) continue;
      Polynomial v = A.at(i, j);
      if (!arj.is_zero() && !A.at(i, gamma).is_zero())
        v = v - (A.at(i, gamma) * arj).scaled(uinv);
      col.comp[out++] = std::move(v);
    }
    B.cols.push_back(std::move(col));
  }
  res.d[k] = std::move(B);

  if (k > 0) erase_col(res.d[k - 1], rho);
  else res.F0 = res.d[k].target;
  if (k + 1 < res.length()) erase_row(res.d[k + 1], gamma);
}

}  // namespace

void minimize_resolution(FreeResolution& res) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int k = 0; k < res.length(); ++k) {
      int i, j;
      if (find_unit(res.d[k], &i, &j)) {
        prune_unit(res, k, i, j);
        changed = true;
        break;
      }
    }
  }
  if (res.F0.rank() == 0) {
    res.d.clear();
    return;
  }
  while (!res.d.empty() && res.d.back().ncols() == 0) res.d.pop_back();
}

HomologicalInvariants homological_invariants(const FreeResolution& res,
                                             const HilbertSeries& series) {
  if (res.F0.rank() == 0 || series.is_zero())
    fail(ErrorCode::ZeroModule, "invariants of the zero module");
  HomologicalInvariants inv;
  int n = res.F0.ring->nvars;
  inv.pd = res.length();
  inv.depth = n - inv.pd;
  inv.regularity = std::numeric_limits<int>::min();
  for (int k = 0; k <= res.length(); ++k)
    for (int t : res.module_at(k).twists)
      inv.regularity = std::max(inv.regularity, t - k);
  inv.dim = series.dimension();
  inv.degree = series.degree();
  inv.codim = n - inv.dim;
  inv.cohen_macaulay = inv.depth == inv.dim;
  inv.gorenstein =
      inv.cohen_macaulay && res.module_at(res.length()).rank() == 1;
  return inv;
}

PresentedModule presented_module(const GradedFreeModule& F0,
                                 const std::vector<VecPoly>& relations) {
  FreeResolution tmp{F0, {}};
  GradedMatrix d0;
  d0.target = F0;
  for (const auto& v : relations) {
    if (v.is_zero()) continue;
    auto deg = column_degree(F0, v);
    d0.source_twists.push_back(deg ? *deg : 0);
    d0.cols.push_back(v);
  }
  if (d0.ncols() > 0) tmp.d.push_back(std::move(d0));
  minimize_resolution(tmp);

  PresentedModule M;
  M.gens = tmp.F0;
  M.relations = tmp.d.empty() ? GradedMatrix::zero_from(tmp.F0) : tmp.d[0];
  if (M.gens.rank() == 0) {
    M.series = HilbertSeries::zero();
    return M;
  }
  ModuleGB G = module_groebner(
      M.gens, ModuleOrder::top(M.gens.ring, M.gens.rank()), M.relations.cols);
  M.series = quotient_series(G);
  return M;
}

}  // namespace liaison
