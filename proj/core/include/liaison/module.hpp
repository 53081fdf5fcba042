#pragma once

#include <optional>
#include <vector>

#include "liaison/hilbert.hpp"
#include "liaison/poly.hpp"

namespace liaison {

// Graded free module F = (+)_j A[-twists[j]]: generator j sits in degree
// twists[j].
struct GradedFreeModule {
  RingPtr ring;
  std::vector<int> twists;

  int rank() const { return static_cast<int>(twists.size()); }
  HilbertSeries series() const {
    return HilbertSeries::free_module(twists, ring->nvars);
  }
  bool operator==(const GradedFreeModule& o) const {
    return twists == o.twists && ring->same_as(*o.ring);
  }
};

// Element of a free module, stored one polynomial per component.  Every
// component carries the ring handle, including zero ones.
struct VecPoly {
  std::vector<Polynomial> comp;

  VecPoly() = default;
  VecPoly(const RingPtr& ring, int rank)
      : comp(rank, Polynomial::zero(ring)) {}
  static VecPoly unit(const RingPtr& ring, int rank, int c) {
    VecPoly v(ring, rank);
    v.comp[c] = Polynomial::constant(ring, 1);
    return v;
  }

  int rank() const { return static_cast<int>(comp.size()); }
  bool is_zero() const {
    for (const auto& f : comp)
      if (!f.is_zero()) return false;
    return true;
  }

  VecPoly operator+(const VecPoly& o) const;
  VecPoly operator-(const VecPoly& o) const;
  VecPoly scaled(std::uint32_t c) const;
  VecPoly times_term(const Term& t) const;
  VecPoly times_monomial(const Monomial& m) const;
  VecPoly times_poly(const Polynomial& f) const;
  // this - c * m * o
  VecPoly reduce_once(std::uint32_t c, const Monomial& m,
                      const VecPoly& o) const;
  bool operator==(const VecPoly& o) const { return comp == o.comp; }
};

// Module monomial order.  Component c is weighted by a ring monomial label
// (the product of leading monomials down a resolution path for Schreyer
// orders; trivial for the base order) plus a dense integer rank for ties.
// Comparison: grevlex on m * label first; on equal products the component
// with the smaller rank is the larger basis vector.
struct ModuleOrder {
  std::vector<Monomial> labels;
  std::vector<int> ranks;
  // Elimination blocks: everything in a lower block beats everything in a
  // higher block.  All-zero for ordinary orders.
  std::vector<int> blocks;

  static ModuleOrder top(const RingPtr& ring, int ncomp);

  int ncomp() const { return static_cast<int>(labels.size()); }
  int cmp(const Monomial& ma, int ca, const Monomial& mb, int cb) const {
    if (blocks[ca] != blocks[cb]) return blocks[ca] < blocks[cb] ? 1 : -1;
    int c = grevlex_cmp(ma * labels[ca], mb * labels[cb]);
    if (c != 0) return c;
    if (ranks[ca] != ranks[cb]) return ranks[ca] < ranks[cb] ? 1 : -1;
    return 0;
  }
};

// Leading (component, term) of a nonzero vector under ord.
struct LeadRef {
  int c = -1;
  Term t;
};
LeadRef lead(const VecPoly& v, const ModuleOrder& ord);

// Graded matrix: columns are elements of `target`; column j is homogeneous
// of degree source_twists[j].
struct GradedMatrix {
  GradedFreeModule target;
  std::vector<int> source_twists;
  std::vector<VecPoly> cols;

  GradedFreeModule source() const { return {target.ring, source_twists}; }
  int rows() const { return target.rank(); }
  int ncols() const { return static_cast<int>(cols.size()); }
  const Polynomial& at(int i, int j) const { return cols[j].comp[i]; }

  // Zero map out of the zero module.
  static GradedMatrix zero_from(const GradedFreeModule& target) {
    return {target, {}, {}};
  }
};

// Degree of a nonzero homogeneous column of `target`; nullopt for the zero
// vector.  Throws NotHomogeneous when entry degrees are inconsistent.
std::optional<int> column_degree(const GradedFreeModule& target,
                                 const VecPoly& v);

// Checks homogeneity of all columns against source_twists.
void validate_graded(const GradedMatrix& m);

GradedMatrix transpose(const GradedMatrix& m, int dual_shift);
VecPoly apply(const GradedMatrix& m, const VecPoly& v);
// a after b (columns of b rewritten through a); requires b.target == a.source
// ranks.
GradedMatrix compose(const GradedMatrix& a, const GradedMatrix& b);
bool is_zero(const GradedMatrix& m);

}  // namespace liaison
