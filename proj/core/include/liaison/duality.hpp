#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liaison/report.hpp"
#include "liaison/resolution.hpp"

namespace liaison {

// A module together with its minimal free resolution: the working currency
// of the duality layer.
struct ResolvedModule {
  PresentedModule pm;
  FreeResolution res;

  bool is_zero() const { return pm.is_zero(); }
  const RingPtr& ring() const { return pm.gens.ring; }
  const HilbertSeries& series() const { return pm.series; }
  int dim() const { return pm.series.dimension(); }
  // Requires a nonzero module.
  HomologicalInvariants invariants() const {
    return homological_invariants(res, pm.series);
  }
};

ResolvedModule resolve_module(PresentedModule pm);
// A / <gens>.
ResolvedModule resolve_quotient(const RingPtr& ring,
                                const std::vector<Polynomial>& gens);
ResolvedModule zero_module(const RingPtr& ring);

// Ext^k(M, w) for the dualizing module w = A[-n], presented by generators
// and relations (computed as homology of the dualized resolution).
PresentedModule ext_dual(const FreeResolution& res, int k);

// i-th deficiency module D_i(M) = Ext^(n-i)(M, A[-n]): the graded dual of
// the i-th local cohomology of M.  Out-of-range i gives the zero module.
ResolvedModule deficiency_module(const ResolvedModule& M, int i);

// word = {i, j, ..., l} computes D_i(D_j(...(D_l(M)))), rightmost first.
ResolvedModule iterated_deficiency(const ResolvedModule& M,
                                   const std::vector<int>& word);

// Canonical module w_M = D_dim(M).  Rejects the zero module (ZeroModule).
ResolvedModule canonical_module(const ResolvedModule& M);

// Hilbert series of the i-th local cohomology module H^i_m(M): the graded
// dual (reflection) of the series of D_i(M).
HilbertSeries local_cohomology_series(const ResolvedModule& M, int i);

// Signed sum of Hilbert-function terms.  Each part contributes
// sign * HF(s, a*mu + b), so graded duals (a = -1) and degree shifts (b)
// combine pointwise even when the individual expansions live at opposite
// ends (a sum that is not representable as a single rational series).
struct HilbertSum {
  struct Part {
    long long sign = 1;
    int a = 1;
    int b = 0;
    HilbertSeries s;
  };
  std::vector<Part> parts;

  HilbertSum() = default;
  HilbertSum(const HilbertSeries& s) { add(1, s); }

  HilbertSum& add(long long sign, HilbertSeries s, int a = 1, int b = 0);
  // Appends o with every part scaled by sign; with dualize the appended
  // parts are evaluated at -mu instead of mu.
  HilbertSum& append(const HilbertSum& o, long long sign = 1,
                     bool dualize = false);
  long long value_at(int mu) const;
  // Exact rational-function form when all parts live in one expansion.
  std::optional<HilbertSeries> materialize() const;
};

// Hilbert function of the saturation Gamma(M) = H^0_*(proj M), from the
// four-term sequence 0 -> H^0_m(M) -> M -> Gamma(M) -> H^1_m(M) -> 0.
HilbertSum gamma_series(const ResolvedModule& M);

// Gamma(A/I) computed directly as A/sat(I); zero when dim A/I = 0.
ResolvedModule gamma_saturation(const RingPtr& ring,
                                const std::vector<Polynomial>& gens);

// Operational unmixedness gate: D_0(M) = 0 and dim D_i(M) < i for every
// 0 < i < dim M.  Saturated equidimensional S_1 modules satisfy this, and
// every diagram-level statement below requires it.
bool is_unmixed_s1(const ResolvedModule& M);

// Deficiency diagram: the grid H^i_m(D_j(M)) for 0 <= i <= j <= dim M - 1
// (realized as the iterated deficiency modules D_i(D_j(M))) together with
// the classification it encodes.  Requires the unmixedness gate
// (NotEquidimensional otherwise) and a nonzero module (ZeroModule).
struct DeficiencyDiagram {
  int dim = 0;
  int depth = 0;
  std::vector<ResolvedModule> deficiency;          // D_j(M), j = 0..dim
  std::vector<std::vector<ResolvedModule>> entry;  // entry[j][i] = D_i(D_j)

  // Largest l such that diagram columns 1..l vanish (equals depth).
  int depth_class = 0;
  // Largest l such that the scheme is Cohen-Macaulay in codimension l
  // (diagram rows 1..l vanish; dim when the module is Cohen-Macaulay).
  int cm_codim = 0;
  // Largest l such that diagram diagonals 1..l vanish: the module-level
  // Serre condition S_l.
  int s_module = 0;

  // Sheaf-level Serre condition S_l: H^i_m(D_j(M)) = 0 for every j < dim
  // and every i > max(0, j - l).
  bool sheaf_s(int ell) const;
  // First entry (j, i) violating sheaf_s(ell), if any.
  std::optional<std::pair<int, int>> sheaf_s_witness(int ell) const;
};

DeficiencyDiagram deficiency_diagram(const ResolvedModule& M);

// Widen the window so it covers [-(reg + nvars), reg + nvars] for every
// listed module (zero modules contribute nothing).
Window effective_window(Window w,
                        std::initializer_list<const ResolvedModule*> mods);

// Compare two Hilbert-function sums pointwise on the window; additionally
// attempts an exact rational-function comparison when both sides
// materialize in a single expansion.
CheckReport hf_identity(std::string id, const HilbertSum& lhs,
                        const HilbertSum& rhs, const Window& w);
// Degreewise inequality lhs >= rhs on the window.
CheckReport hf_dominates(std::string id, const HilbertSum& lhs,
                         const HilbertSum& rhs, const Window& w);

// Euler characteristic of the biduality spectral sequence: the signed sum
// of HF(D_i(D_j(M))) over 0 <= i <= j <= dim recovers HF(M) degreewise.
std::vector<CheckReport> check_biduality_euler(const ResolvedModule& M,
                                               const Window& w);

// Duality for threefolds (dim M = 3): the socle identity
// HF(D_0(D_2)) = HF(D_2(w_M)) and, under the unmixedness gate, the series
// identity HF(D_3(w_M)) = HF(D_12(M)) + HF(Gamma M).
std::vector<CheckReport> check_duality_d3(const ResolvedModule& M,
                                          const Window& w);

// Duality for fourfolds (dim M = 4): the socle identity plus the six-term
// Euler identity tying D_13, D_3(w), D_02, D_2(D_3), D_4(w) to
// D_12 + Gamma M.
std::vector<CheckReport> check_duality_d4(const ResolvedModule& M,
                                          const Window& w);

// Serre-condition duality: under sheaf-level S_l the pairs
// (D_i(M), D_(d+1-i)(w_M)) are dual for 1 < i < l, the comparison at i = l
// is a surjection, and for l >= 2 the top deficiency of w_M computes
// Gamma M (for l = 1 only an injection into it survives).
std::vector<CheckReport> check_s_ell_duality(const ResolvedModule& M, int ell,
                                             const Window& w);

// Generalized Serre duality for unmixed M of dim >= 3 with finite-length
// lower deficiencies (dim D_i(M) <= 0 for all i < dim - 1): the socle
// identity for F = D_(dim-1)(M) and the long-exact-sequence Euler identity
// down to Gamma M.
std::vector<CheckReport> check_generalized_serre_duality(
    const ResolvedModule& M, const Window& w);

}  // namespace liaison
