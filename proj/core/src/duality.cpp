#include "liaison/duality.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "liaison/ideal.hpp"

namespace liaison {

ResolvedModule resolve_module(PresentedModule pm) {
  ResolvedModule r;
  r.res = free_resolution(pm.gens, pm.relations.cols, true);
  r.pm = std::move(pm);
  return r;
}

ResolvedModule resolve_quotient(const RingPtr& ring,
                                const std::vector<Polynomial>& gens) {
  GradedFreeModule F0{ring, {0}};
  std::vector<VecPoly> rels;
  for (const auto& g : gens) {
    require_same_ring(ring, g.ring());
    VecPoly v(ring, 1);
    v.comp[0] = g;
    rels.push_back(std::move(v));
  }
  return resolve_module(presented_module(F0, rels));
}

ResolvedModule zero_module(const RingPtr& ring) {
  return resolve_module(presented_module(GradedFreeModule{ring, {}}, {}));
}

// Hom(L_j, A[-n]): generator twists n - t.
static GradedFreeModule dual_free(const FreeResolution& res, int j) {
  const RingPtr& ring = res.F0.ring;
  std::vector<int> tw;
  for (int t : res.module_at(j).twists) tw.push_back(ring->nvars - t);
  return GradedFreeModule{ring, tw};
}

PresentedModule ext_dual(const FreeResolution& res, int k) {
  const RingPtr& ring = res.F0.ring;
  const int n = ring->nvars;
  const int len = res.length();
  if (k < 0 || k > len)
    return presented_module(GradedFreeModule{ring, {}}, {});

  if (k == len) {
    // Top of the dualized complex: everything is a cycle, the relations are
    // literally the columns of the last dualized map.
    GradedFreeModule Ek = dual_free(res, k);
    std::vector<VecPoly> rels;
    if (k > 0) rels = transpose(res.d[k - 1], n).cols;
    return presented_module(Ek, rels);
  }

  // Cycles: generators of ker(tau_{k+1}: E_k -> E_{k+1}).
  GradedMatrix tau_next = transpose(res.d[k], n);
  std::vector<VecPoly> cycles = kernel_generators(tau_next);
  if (cycles.empty())
    return presented_module(GradedFreeModule{ring, {}}, {});

  GradedFreeModule Ek = dual_free(res, k);
  GradedMatrix cm;
  cm.target = Ek;
  for (const auto& v : cycles) {
    cm.source_twists.push_back(*column_degree(Ek, v));
    cm.cols.push_back(v);
  }
  ImageSolver cycle_span(cm);

  // Relations among the cycle generators: their syzygies plus the lifts of
  // the boundaries (columns of tau_k, which land in the cycles since the
  // dualized complex is still a complex).
  std::vector<VecPoly> rels = cycle_span.kernel();
  if (k > 0) {
    GradedMatrix tau = transpose(res.d[k - 1], n);
    for (const auto& col : tau.cols) {
      if (col.is_zero()) continue;
      auto lift = cycle_span.solve(col);
      if (!lift)
        fail(ErrorCode::BadArgument,
             "ext: a boundary escaped the cycle module");
      rels.push_back(std::move(*lift));
    }
  }
  return presented_module(GradedFreeModule{ring, cm.source_twists}, rels);
}

ResolvedModule deficiency_module(const ResolvedModule& M, int i) {
  const int n = M.ring()->nvars;
  if (M.is_zero() || i < 0 || i > n) return zero_module(M.ring());
  return resolve_module(ext_dual(M.res, n - i));
}

ResolvedModule iterated_deficiency(const ResolvedModule& M,
                                   const std::vector<int>& word) {
  ResolvedModule cur = M;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    cur = deficiency_module(cur, *it);
  return cur;
}

ResolvedModule canonical_module(const ResolvedModule& M) {
  if (M.is_zero())
    fail(ErrorCode::ZeroModule, "canonical module of the zero module");
  return deficiency_module(M, M.dim());
}

HilbertSeries local_cohomology_series(const ResolvedModule& M, int i) {
  return reflect(deficiency_module(M, i).series());
}

HilbertSum& HilbertSum::add(long long sign, HilbertSeries s, int a, int b) {
  if (sign != 0 && !s.is_zero()) parts.push_back({sign, a, b, std::move(s)});
  return *this;
}

HilbertSum& HilbertSum::append(const HilbertSum& o, long long sign,
                               bool dualize) {
  for (const auto& p : o.parts)
    add(sign * p.sign, p.s, dualize ? -p.a : p.a, p.b);
  return *this;
}

long long HilbertSum::value_at(int mu) const {
  long long v = 0;
  for (const auto& p : parts) v += p.sign * p.s.value_at(p.a * mu + p.b);
  return v;
}

std::optional<HilbertSeries> HilbertSum::materialize() const {
  HilbertSeries acc = HilbertSeries::zero();
  try {
    for (const auto& p : parts) {
      HilbertSeries s =
          p.a == -1 ? reflect(p.s).twisted(-p.b) : p.s.twisted(p.b);
      acc = acc + s.scaled(p.sign);
    }
  } catch (const LiaisonError&) {
    return std::nullopt;
  }
  return acc;
}

HilbertSum gamma_series(const ResolvedModule& M) {
  HilbertSum g;
  g.add(1, M.series());
  g.add(-1, deficiency_module(M, 0).series(), -1, 0);
  g.add(1, deficiency_module(M, 1).series(), -1, 0);
  return g;
}

ResolvedModule gamma_saturation(const RingPtr& ring,
                                const std::vector<Polynomial>& gens) {
  Ideal sat = saturate_irrelevant(make_ideal(ring, gens));
  return resolve_quotient(ring, sat.gens);
}

bool is_unmixed_s1(const ResolvedModule& M) {
  if (M.is_zero()) return false;
  const int d = M.dim();
  if (!deficiency_module(M, 0).is_zero()) return false;
  for (int i = 1; i < d; ++i) {
    const ResolvedModule Di = deficiency_module(M, i);
    if (!Di.is_zero() && Di.dim() >= i) return false;
  }
  return true;
}

bool DeficiencyDiagram::sheaf_s(int ell) const {
  return !sheaf_s_witness(ell).has_value();
}

std::optional<std::pair<int, int>> DeficiencyDiagram::sheaf_s_witness(
    int ell) const {
  for (int j = 0; j < dim; ++j)
    for (int i = std::max(0, j - ell) + 1; i <= j; ++i)
      if (!entry[j][i].is_zero()) return std::make_pair(j, i);
  return std::nullopt;
}

DeficiencyDiagram deficiency_diagram(const ResolvedModule& M) {
  if (M.is_zero())
    fail(ErrorCode::ZeroModule, "deficiency diagram of the zero module");
  if (!is_unmixed_s1(M))
    fail(ErrorCode::NotEquidimensional,
         "deficiency diagram requires an unmixed S_1 module "
         "(D_0 = 0 and dim D_i < i for 0 < i < dim)");

  DeficiencyDiagram dg;
  dg.dim = M.dim();
  dg.depth = M.invariants().depth;

  for (int j = 0; j <= dg.dim; ++j)
    dg.deficiency.push_back(deficiency_module(M, j));

  dg.depth_class = dg.dim;
  for (int j = 0; j <= dg.dim; ++j)
    if (!dg.deficiency[j].is_zero()) {
      dg.depth_class = j;
      break;
    }
  if (dg.depth_class != dg.depth)
    fail(ErrorCode::BadArgument,
         "deficiency vanishing disagrees with the resolution depth");

  dg.entry.resize(dg.dim);
  for (int j = 0; j < dg.dim; ++j)
    for (int i = 0; i <= j; ++i)
      dg.entry[j].push_back(deficiency_module(dg.deficiency[j], i));

  dg.cm_codim = dg.dim;
  for (int j = 0; j < dg.dim; ++j) {
    const ResolvedModule& Dj = dg.deficiency[j];
    if (!Dj.is_zero())
      dg.cm_codim = std::min(dg.cm_codim, dg.dim - 1 - Dj.dim());
  }

  dg.s_module = dg.dim;
  for (int j = 0; j < dg.dim; ++j)
    for (int i = 0; i <= j; ++i)
      if (!dg.entry[j][i].is_zero())
        dg.s_module = std::min(dg.s_module, j - i);

  return dg;
}

Window effective_window(Window w,
                        std::initializer_list<const ResolvedModule*> mods) {
  // Beyond |regularity| + nvars every participating Hilbert function is in
  // its polynomial regime, so pointwise agreement on the widened window
  // decides each identity.
  for (const ResolvedModule* m : mods) {
    if (m == nullptr || m->is_zero()) continue;
    const int reg = m->invariants().regularity;
    w = w.widened(std::abs(reg) + m->ring()->nvars);
  }
  return w;
}

CheckReport hf_identity(std::string id, const HilbertSum& lhs,
                        const HilbertSum& rhs, const Window& w) {
  CheckReport r;
  r.check_id = std::move(id);
  for (int mu = w.lo; mu <= w.hi; ++mu) {
    const long long l = lhs.value_at(mu);
    const long long q = rhs.value_at(mu);
    if (l != q) {
      r.status = CheckStatus::Fail;
      r.witness_degree = mu;
      r.lhs = l;
      r.rhs = q;
      return r;
    }
  }
  auto ls = lhs.materialize();
  auto rs = rhs.materialize();
  if (ls && rs && comparable(*ls, *rs)) {
    if (!ls->equals(*rs)) {
      r.status = CheckStatus::Fail;
      r.note = "rational forms differ beyond the window";
      for (int radius = 1; radius <= 256 && !r.witness_degree; ++radius)
        for (int mu : {w.hi + radius, w.lo - radius}) {
          const long long l = lhs.value_at(mu);
          const long long q = rhs.value_at(mu);
          if (l != q) {
            r.witness_degree = mu;
            r.lhs = l;
            r.rhs = q;
            break;
          }
        }
      return r;
    }
    r.note = "exact";
  } else {
    r.note = "window";
  }
  r.status = CheckStatus::Pass;
  return r;
}

CheckReport hf_dominates(std::string id, const HilbertSum& lhs,
                         const HilbertSum& rhs, const Window& w) {
  CheckReport r;
  r.check_id = std::move(id);
  for (int mu = w.lo; mu <= w.hi; ++mu) {
    const long long l = lhs.value_at(mu);
    const long long q = rhs.value_at(mu);
    if (l < q) {
      r.status = CheckStatus::Fail;
      r.witness_degree = mu;
      r.lhs = l;
      r.rhs = q;
      return r;
    }
  }
  r.status = CheckStatus::Pass;
  r.note = "window";
  return r;
}

std::vector<CheckReport> check_biduality_euler(const ResolvedModule& M,
                                               const Window& w) {
  std::vector<CheckReport> out;
  if (M.is_zero()) {
    out.push_back({"biduality.euler", CheckStatus::Pass, std::nullopt,
                   std::nullopt, std::nullopt, "zero module"});
    return out;
  }
  const int d = M.dim();
  HilbertSum lhs;
  std::vector<ResolvedModule> keep;
  for (int j = 0; j <= d; ++j) {
    ResolvedModule Dj = deficiency_module(M, j);
    for (int i = 0; i <= j; ++i) {
      ResolvedModule Dij = deficiency_module(Dj, i);
      lhs.add(((j - i) % 2 == 0) ? 1 : -1, Dij.series());
      keep.push_back(std::move(Dij));
    }
    keep.push_back(std::move(Dj));
  }
  Window ew = effective_window(w, {&M});
  for (const auto& m : keep) ew = effective_window(ew, {&m});
  out.push_back(hf_identity("biduality.euler", lhs, M.series(), ew));
  return out;
}

std::vector<CheckReport> check_duality_d3(const ResolvedModule& M,
                                          const Window& w) {
  if (M.is_zero() || M.dim() != 3)
    fail(ErrorCode::WrongDimension, "threefold duality requires dim M = 3");
  std::vector<CheckReport> out;

  const ResolvedModule D2 = deficiency_module(M, 2);
  const ResolvedModule W = deficiency_module(M, 3);
  const ResolvedModule D02 = deficiency_module(D2, 0);
  const ResolvedModule D12 = deficiency_module(D2, 1);
  const ResolvedModule Dw2 = deficiency_module(W, 2);
  const ResolvedModule Dw3 = deficiency_module(W, 3);
  const ResolvedModule D0 = deficiency_module(M, 0);
  const ResolvedModule D1 = deficiency_module(M, 1);

  Window ew = effective_window(
      w, {&M, &D2, &W, &D02, &D12, &Dw2, &Dw3, &D0, &D1});

  out.push_back(
      hf_identity("duality3.socle", D02.series(), Dw2.series(), ew));

  if (!is_unmixed_s1(M)) {
    out.push_back({"duality3.sequence", CheckStatus::PreconditionFailed,
                   std::nullopt, std::nullopt, std::nullopt,
                   "requires an unmixed S_1 module"});
    return out;
  }
  HilbertSum rhs = gamma_series(M);
  rhs.add(1, D12.series());
  out.push_back(hf_identity("duality3.sequence", Dw3.series(), rhs, ew));
  return out;
}

std::vector<CheckReport> check_duality_d4(const ResolvedModule& M,
                                          const Window& w) {
  if (M.is_zero() || M.dim() != 4)
    fail(ErrorCode::WrongDimension, "fourfold duality requires dim M = 4");
  std::vector<CheckReport> out;

  const ResolvedModule D2 = deficiency_module(M, 2);
  const ResolvedModule D3 = deficiency_module(M, 3);
  const ResolvedModule W = deficiency_module(M, 4);
  const ResolvedModule D03 = deficiency_module(D3, 0);
  const ResolvedModule D13 = deficiency_module(D3, 1);
  const ResolvedModule D23 = deficiency_module(D3, 2);
  const ResolvedModule D02 = deficiency_module(D2, 0);
  const ResolvedModule D12 = deficiency_module(D2, 1);
  const ResolvedModule Dw2 = deficiency_module(W, 2);
  const ResolvedModule Dw3 = deficiency_module(W, 3);
  const ResolvedModule Dw4 = deficiency_module(W, 4);
  const ResolvedModule D0 = deficiency_module(M, 0);
  const ResolvedModule D1 = deficiency_module(M, 1);

  Window ew = effective_window(w, {&M, &D2, &D3, &W, &D03, &D13, &D23, &D02,
                                   &D12, &Dw2, &Dw3, &Dw4, &D0, &D1});

  out.push_back(
      hf_identity("duality4.socle", D03.series(), Dw2.series(), ew));

  if (!is_unmixed_s1(M)) {
    out.push_back({"duality4.euler", CheckStatus::PreconditionFailed,
                   std::nullopt, std::nullopt, std::nullopt,
                   "requires an unmixed S_1 module"});
    return out;
  }
  // Six-term sequence H^1(D_3) -> H^3(w) -> H^0(D_2) -> H^2(D_3) -> H^4(w)
  // -> C with 0 -> H^1(D_2) -> C -> (Gamma M)^dual -> 0, written on the
  // deficiency side.
  HilbertSum lhs;
  lhs.add(1, D13.series());
  lhs.add(-1, Dw3.series());
  lhs.add(1, D02.series());
  lhs.add(-1, D23.series());
  lhs.add(1, Dw4.series());
  lhs.add(-1, D12.series());
  lhs.append(gamma_series(M), -1, false);
  out.push_back(hf_identity("duality4.euler", lhs, HilbertSum(), ew));
  return out;
}

std::vector<CheckReport> check_s_ell_duality(const ResolvedModule& M, int ell,
                                             const Window& w) {
  if (ell < 1) fail(ErrorCode::BadArgument, "Serre level must be >= 1");
  if (M.is_zero() || M.dim() < 1)
    fail(ErrorCode::WrongDimension,
         "Serre-condition duality requires dim M >= 1");
  std::vector<CheckReport> out;
  if (!is_unmixed_s1(M)) {
    out.push_back({"s_ell.gate", CheckStatus::PreconditionFailed,
                   std::nullopt, std::nullopt, std::nullopt,
                   "unmixedness gate failed (D_0 = 0 and dim D_i < i "
                   "required)"});
    return out;
  }
  const DeficiencyDiagram dg = deficiency_diagram(M);
  if (auto bad = dg.sheaf_s_witness(ell)) {
    out.push_back({"s_ell.gate", CheckStatus::PreconditionFailed,
                   std::nullopt, std::nullopt, std::nullopt,
                   "sheaf-level S_" + std::to_string(ell) +
                       " fails: H^" + std::to_string(bad->second) +
                       " of D_" + std::to_string(bad->first) +
                       " is nonzero"});
    return out;
  }
  out.push_back({"s_ell.gate", CheckStatus::Pass, std::nullopt, std::nullopt,
                 std::nullopt,
                 "sheaf-level S_" + std::to_string(ell) + " certified"});

  const int d = dg.dim;
  const ResolvedModule& W = dg.deficiency[d];
  Window ew = effective_window(w, {&M, &W});
  for (const auto& Dj : dg.deficiency) ew = effective_window(ew, {&Dj});

  // The comparison maps H^(d+1-i)(w_M) -> D_i(M) live in the deficiency
  // range i <= d - 1: isomorphisms below level ell, a surjection at it.
  for (int i = 2; i <= std::min(ell - 1, d - 1); ++i) {
    ResolvedModule Dw = deficiency_module(W, d + 1 - i);
    ew = effective_window(ew, {&Dw});
    HilbertSum rhs;
    rhs.add(1, Dw.series(), -1, 0);
    out.push_back(hf_identity("s_ell.iso." + std::to_string(i),
                              dg.deficiency[i].series(), rhs, ew));
  }
  if (ell >= 2 && ell <= d - 1) {
    ResolvedModule Dsur = deficiency_module(W, d + 1 - ell);
    ew = effective_window(ew, {&Dsur});
    HilbertSum lhs;
    lhs.add(1, Dsur.series(), -1, 0);
    out.push_back(hf_dominates("s_ell.surjection", lhs,
                               dg.deficiency[ell].series(), ew));
  }
  if (ell >= 2) {
    ResolvedModule Dtop = deficiency_module(W, d);
    ew = effective_window(ew, {&Dtop});
    out.push_back(
        hf_identity("s_ell.gamma", Dtop.series(), gamma_series(M), ew));
  } else {
    ResolvedModule Dtop = deficiency_module(W, d);
    ew = effective_window(ew, {&Dtop});
    HilbertSum lhs;
    lhs.add(1, Dtop.series(), -1, 0);
    out.push_back(
        hf_dominates("s_ell.injection", lhs, dg.deficiency[1].series(), ew));
  }
  return out;
}

std::vector<CheckReport> check_generalized_serre_duality(
    const ResolvedModule& M, const Window& w) {
  if (M.is_zero() || M.dim() < 3)
    fail(ErrorCode::WrongDimension,
         "generalized Serre duality requires dim M >= 3");
  std::vector<CheckReport> out;
  if (!is_unmixed_s1(M)) {
    out.push_back({"serre_general.gate", CheckStatus::PreconditionFailed,
                   std::nullopt, std::nullopt, std::nullopt,
                   "unmixedness gate failed"});
    return out;
  }
  const int d = M.dim();
  std::vector<ResolvedModule> D;
  for (int i = 0; i <= d; ++i) D.push_back(deficiency_module(M, i));
  for (int i = 0; i <= d - 2; ++i)
    if (!D[i].is_zero() && D[i].dim() > 0) {
      out.push_back({"serre_general.gate", CheckStatus::PreconditionFailed,
                     std::nullopt, std::nullopt, std::nullopt,
                     "finite-length lower deficiency certificate failed: "
                     "dim D_" +
                         std::to_string(i) + "(M) = " +
                         std::to_string(D[i].dim()) + " > 0"});
      return out;
    }
  out.push_back({"serre_general.gate", CheckStatus::Pass, std::nullopt,
                 std::nullopt, std::nullopt,
                 "finite-length lower deficiencies certified (dim D_i(M) "
                 "<= 0 for all i < dim - 1)"});

  const ResolvedModule& F = D[d - 1];
  const ResolvedModule& W = D[d];
  const ResolvedModule D0F = deficiency_module(F, 0);
  const ResolvedModule Dw2 = deficiency_module(W, 2);

  Window ew = effective_window(w, {&M, &F, &W, &D0F, &Dw2});
  for (const auto& Di : D) ew = effective_window(ew, {&Di});

  out.push_back(
      hf_identity("serre_general.socle", D0F.series(), Dw2.series(), ew));

  // 0 -> H^1(F) -> H^3(w) -> D_{d-2} -> H^2(F) -> H^4(w) -> D_{d-3} -> ...
  // -> H^{d-2}(F) -> H^d(w) -> (Gamma M)^dual -> 0, alternating sum zero.
  HilbertSum seq;
  int pos = 0;
  auto sign = [&pos]() { return (pos++ % 2 == 0) ? 1 : -1; };
  for (int r = 1; r <= d - 2; ++r) {
    ResolvedModule DrF = deficiency_module(F, r);
    ResolvedModule Drw = deficiency_module(W, r + 2);
    ew = effective_window(ew, {&DrF, &Drw});
    seq.add(sign(), DrF.series(), -1, 0);
    seq.add(sign(), Drw.series(), -1, 0);
    if (r < d - 2)
      seq.add(sign(), D[d - 1 - r].series());
    else
      seq.append(gamma_series(M), sign(), true);
  }
  out.push_back(hf_identity("serre_general.sequence", seq, HilbertSum(), ew));
  return out;
}

}  // namespace liaison
