#pragma once

#include <map>

#include "liaison/modgb.hpp"

namespace liaison {

// Complex of free modules L_len -> ... -> L_1 -> L_0 with d[k]: L_{k+1} ->
// L_k (so d[0] presents the resolved module over F0 = L_0).
struct FreeResolution {
  GradedFreeModule F0;
  std::vector<GradedMatrix> d;

  int length() const { return static_cast<int>(d.size()); }
  GradedFreeModule module_at(int k) const {
    return k == 0 ? F0 : d[k - 1].source();
  }
  // betti[i][j] = number of generators of L_i in degree j.
  std::map<int, std::map<int, int>> betti() const;
};

// Free resolution of F0 / <gens> by iterated Schreyer syzygy steps,
// minimized by default.
FreeResolution free_resolution(const GradedFreeModule& F0,
                               const std::vector<VecPoly>& gens,
                               bool minimal = true);

// Resolution of A / <gens> (cyclic case).
FreeResolution resolve_cyclic(const RingPtr& ring,
                              const std::vector<Polynomial>& gens,
                              bool minimal = true);

// Prune all invertible entries from the complex, in place.
void minimize_resolution(FreeResolution& res);

// Homological invariants of the resolved module (requires a minimal
// resolution of a nonzero module).
struct HomologicalInvariants {
  int pd = 0;
  int depth = 0;
  int regularity = 0;
  int dim = 0;
  long long degree = 0;
  int codim = 0;
  bool cohen_macaulay = false;
  bool gorenstein = false;  // meaningful for cyclic modules A/I
};
HomologicalInvariants homological_invariants(const FreeResolution& res,
                                             const HilbertSeries& series);

// Finitely presented graded module with a minimized presentation and its
// exact Hilbert series.
struct PresentedModule {
  GradedFreeModule gens;
  GradedMatrix relations;  // relations.target == gens
  HilbertSeries series;

  bool is_zero() const { return gens.rank() == 0; }
};

PresentedModule presented_module(const GradedFreeModule& F0,
                                 const std::vector<VecPoly>& relations);

}  // namespace liaison
