#include "liaison/ideal.hpp"

#include <algorithm>

namespace liaison {

namespace {

VecPoly wrap(const Polynomial& f) {
  VecPoly v(f.ring(), 1);
  v.comp[0] = f;
  return v;
}

ModuleGB rank_one_gb(const RingPtr& ring, const std::vector<Polynomial>& gens) {
  GradedFreeModule F{ring, {0}};
  std::vector<VecPoly> vecs;
  for (const auto& g : gens)
    if (!g.is_zero()) vecs.push_back(wrap(g));
  return module_groebner(F, ModuleOrder::top(ring, 1), vecs);
}

ModuleGB as_module_gb(const IdealGB& G) {
  GradedFreeModule F{G.ring, {0}};
  ModuleGB M{F, ModuleOrder::top(G.ring, 1), {}};
  for (const auto& g : G.gens) M.gens.push_back(wrap(g));
  return M;
}

}  // namespace

Ideal make_ideal(const RingPtr& ring, std::vector<Polynomial> gens) {
  Ideal I{ring, {}};
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    require_same_ring(ring, g.ring());
    if (!g.is_homogeneous())
      fail(ErrorCode::NotHomogeneous,
           "ideal generator is not homogeneous: " + to_string(g));
    I.gens.push_back(std::move(g));
  }
  return I;
}

IdealGB groebner(const Ideal& I) {
  ModuleGB G = rank_one_gb(I.ring, I.gens);
  IdealGB out{I.ring, {}};
  for (const auto& v : G.gens) out.gens.push_back(v.comp[0]);
  return out;
}

Polynomial normal_form(const Polynomial& f, const IdealGB& G) {
  require_same_ring(f.ring(), G.ring);
  ModuleGB M = as_module_gb(G);
  return module_nf(wrap(f), M).comp[0];
}

bool contains(const IdealGB& G, const Polynomial& f) {
  return normal_form(f, G).is_zero();
}

bool contains(const IdealGB& G, const Ideal& J) {
  ModuleGB M = as_module_gb(G);
  for (const auto& g : J.gens)
    if (!module_nf(wrap(g), M).is_zero()) return false;
  return true;
}

bool same_ideal(const IdealGB& a, const IdealGB& b) {
  // Reduced bases are canonical.
  if (a.gens.size() != b.gens.size()) return false;
  for (size_t i = 0; i < a.gens.size(); ++i)
    if (a.gens[i] != b.gens[i]) return false;
  return true;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring, b.ring);
  std::vector<Polynomial> gens = a.gens;
  gens.insert(gens.end(), b.gens.begin(), b.gens.end());
  return make_ideal(a.ring, std::move(gens));
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring, b.ring);
  const RingPtr& ring = a.ring;
  if (a.gens.empty() || b.gens.empty()) return Ideal{ring, {}};
  // Syzygies of the row [a_1 .. a_r  b_1 .. b_s]: for each syzygy
  // (p, q) with sum p_i a_i + sum q_j b_j = 0, the element sum p_i a_i
  // lies in the intersection, and these generate it.
  GradedMatrix row;
  row.target = {ring, {0}};
  for (const auto& f : a.gens) {
    row.source_twists.push_back(f.degree());
    row.cols.push_back(wrap(f));
  }
  for (const auto& g : b.gens) {
    row.source_twists.push_back(g.degree());
    row.cols.push_back(wrap(g));
  }
  std::vector<Polynomial> gens;
  int r = static_cast<int>(a.gens.size());
  for (const auto& syz : kernel_generators(row)) {
    Polynomial h = Polynomial::zero(ring);
    for (int i = 0; i < r; ++i) h = h + syz.comp[i] * a.gens[i];
    if (!h.is_zero()) gens.push_back(std::move(h));
  }
  // Canonicalize through the reduced basis.
  IdealGB G = groebner(make_ideal(ring, std::move(gens)));
  return Ideal{ring, G.gens};
}

Polynomial exact_divide(const Polynomial& h, const Polynomial& g) {
  if (g.is_zero()) fail(ErrorCode::DegenerateQuotient, "division by zero");
  const RingPtr& ring = h.ring();
  if (h.is_zero()) return h;
  // {g} is a Groebner basis of <g>, so division of any member is exact.
  GradedFreeModule F{ring, {0}};
  ModuleGB G{F, ModuleOrder::top(ring, 1), {wrap(g.monic())}};
  std::vector<Polynomial> cof;
  VecPoly r = module_nf(wrap(h), G, &cof);
  if (!r.is_zero())
    fail(ErrorCode::BadArgument, "exact division with nonzero remainder");
  return cof[0].scaled(ring->field.inv(g.lc()));
}

Ideal ideal_quotient(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring, J.ring);
  if (J.gens.empty())
    fail(ErrorCode::DegenerateQuotient, "ideal quotient by the zero ideal");
  std::optional<Ideal> acc;
  for (const auto& g : J.gens) {
    // I : g = (I meet <g>) / g.
    Ideal meet = ideal_intersection(I, make_ideal(I.ring, {g}));
    std::vector<Polynomial> gens;
    for (const auto& h : meet.gens) gens.push_back(exact_divide(h, g));
    Ideal part = make_ideal(I.ring, std::move(gens));
    acc = acc ? ideal_intersection(*acc, part) : part;
  }
  IdealGB G = groebner(*acc);
  return Ideal{I.ring, G.gens};
}

Ideal saturate_irrelevant(const Ideal& I) {
  const RingPtr& ring = I.ring;
  std::vector<Polynomial> vars;
  for (int i = 0; i < ring->nvars; ++i)
    vars.push_back(Polynomial::variable(ring, i));
  Ideal irrelevant = make_ideal(ring, vars);

  Ideal cur = I;
  IdealGB cur_gb = groebner(cur);
  for (;;) {
    if (cur_gb.is_zero_ideal()) return cur;
    Ideal next = ideal_quotient(cur, irrelevant);
    IdealGB next_gb = groebner(next);
    if (same_ideal(cur_gb, next_gb)) return Ideal{ring, cur_gb.gens};
    cur = std::move(next);
    cur_gb = std::move(next_gb);
  }
}

HilbertSeries quotient_series(const IdealGB& G) {
  std::vector<Monomial> lts;
  for (const auto& g : G.gens) lts.push_back(g.lm());
  return monomial_quotient_series(std::move(lts), G.ring->nvars);
}

int dimension(const IdealGB& G) { return quotient_series(G).dimension(); }

long long multiplicity(const IdealGB& G) {
  return quotient_series(G).degree();
}

std::vector<Polynomial> minimal_generators(const Ideal& I) {
  std::vector<Polynomial> sorted = I.gens;
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return poly_less(a, b);
  });
  std::vector<Polynomial> kept;
  for (const auto& f : sorted) {
    if (kept.empty()) {
      kept.push_back(f);
      continue;
    }
    IdealGB G = groebner(make_ideal(I.ring, kept));
    if (!contains(G, f)) kept.push_back(f);
  }
  return kept;
}

}  // namespace liaison
