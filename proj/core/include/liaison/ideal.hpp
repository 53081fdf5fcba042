#pragma once

#include "liaison/modgb.hpp"

namespace liaison {

// Homogeneous ideal given by generators.
struct Ideal {
  RingPtr ring;
  std::vector<Polynomial> gens;
};

// Validates ring agreement and homogeneity; drops zero generators.
Ideal make_ideal(const RingPtr& ring, std::vector<Polynomial> gens);

// Reduced Groebner basis: monic elements, decreasing leading terms.
struct IdealGB {
  RingPtr ring;
  std::vector<Polynomial> gens;

  bool is_zero_ideal() const { return gens.empty(); }
  bool is_unit_ideal() const {
    return gens.size() == 1 && gens[0].degree() == 0;
  }
};

IdealGB groebner(const Ideal& I);
Polynomial normal_form(const Polynomial& f, const IdealGB& G);
bool contains(const IdealGB& G, const Polynomial& f);
bool contains(const IdealGB& G, const Ideal& J);
bool same_ideal(const IdealGB& a, const IdealGB& b);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_intersection(const Ideal& a, const Ideal& b);
// I : J; throws DegenerateQuotient when J is the zero ideal.
Ideal ideal_quotient(const Ideal& I, const Ideal& J);
// I : (x_0, ..., x_{n-1})^infinity.
Ideal saturate_irrelevant(const Ideal& I);

// Hilbert data of A/I.
HilbertSeries quotient_series(const IdealGB& G);
int dimension(const IdealGB& G);
long long multiplicity(const IdealGB& G);

std::vector<Polynomial> minimal_generators(const Ideal& I);

// Exact division h / g for h in <g>.
Polynomial exact_divide(const Polynomial& h, const Polynomial& g);

}  // namespace liaison
