#pragma once

#include <optional>

#include "liaison/module.hpp"

namespace liaison {

// Groebner basis of a submodule of `ambient` under `order`.  Elements are
// monic (leading coefficient 1) and sorted with decreasing leading terms.
struct ModuleGB {
  GradedFreeModule ambient;
  ModuleOrder order;
  std::vector<VecPoly> gens;

  bool is_zero_submodule() const { return gens.empty(); }
};

// Buchberger with the chain criterion (and the coprime criterion in the
// rank-one case); returns the reduced basis.
ModuleGB module_groebner(const GradedFreeModule& F, const ModuleOrder& ord,
                         const std::vector<VecPoly>& gens);

// Full normal form of f modulo G.  With cof != nullptr the division is
// recorded: f = sum_i (*cof)[i] * G.gens[i] + result.
VecPoly module_nf(VecPoly f, const ModuleGB& G,
                  std::vector<Polynomial>* cof = nullptr);

bool submodule_contains(const ModuleGB& G, const VecPoly& v);

// Hilbert series of ambient/<gens> read off the leading-term module.
HilbertSeries quotient_series(const ModuleGB& G);

// Hilbert series of A/<monomial ideal> (numerator over (1-t)^nvars).
HilbertSeries monomial_quotient_series(std::vector<Monomial> gens, int nvars);

// One Schreyer step: the same-component S-pair syzygies of G form a Groebner
// basis of Syz(G.gens) under the induced order on the free module over
// G.gens.  The returned matrix has that free module as source-of-next-level
// (its target twists are the degrees of G.gens); columns are minimalized
// (no leading term divides another) but not tail-reduced.
struct SchreyerStep {
  GradedMatrix syzygies;
  ModuleOrder induced;
};
SchreyerStep schreyer_syzygies(const ModuleGB& G);

// Membership and kernel computations for an arbitrary graded matrix via one
// augmented elimination basis (target block dominating source block).
class ImageSolver {
 public:
  explicit ImageSolver(GradedMatrix m);

  const GradedMatrix& matrix() const { return m_; }
  // x with m x = v, or nullopt when v is outside the column span.
  std::optional<VecPoly> solve(const VecPoly& v) const;
  // Generators of ker(m) (a Groebner basis of it, minimalized).
  std::vector<VecPoly> kernel() const;

 private:
  GradedMatrix m_;
  ModuleGB aug_;
};

std::vector<VecPoly> kernel_generators(const GradedMatrix& m);

}  // namespace liaison
