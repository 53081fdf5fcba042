#include "liaison/modgb.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace liaison {

namespace {

VecPoly make_monic(const VecPoly& v, const ModuleOrder& ord,
                   const PrimeField& F) {
  LeadRef L = lead(v, ord);
  if (L.t.c == 1) return v;
  return v.scaled(F.inv(L.t.c));
}

struct Pair {
  int i, j;       // indices into the basis, i < j
  Monomial u;     // lcm of the leading monomials
  int deg;        // degree of u (selection key)
};

}  // namespace

VecPoly module_nf(VecPoly f, const ModuleGB& G,
                  std::vector<Polynomial>* cof) {
  const RingPtr& ring = G.ambient.ring;
  if (cof) cof->assign(G.gens.size(), Polynomial::zero(ring));
  VecPoly r(ring, f.rank());
  // Cached leading data of the basis.
  while (!f.is_zero()) {
    LeadRef L = lead(f, G.order);
    bool reduced = false;
    for (size_t k = 0; k < G.gens.size(); ++k) {
      const VecPoly& g = G.gens[k];
      LeadRef Lg = lead(g, G.order);
      if (Lg.c != L.c || !Lg.t.m.divides(L.t.m)) continue;
      Monomial q = L.t.m.quotient(Lg.t.m);
      // g is monic, so the multiplier is the leading coefficient itself.
      f = f.reduce_once(L.t.c, q, g);
      if (cof)
        (*cof)[k] =
            (*cof)[k] + Polynomial::monomial(ring, q, 1).scaled(L.t.c);
      reduced = true;
      break;
    }
    if (!reduced) {
      // Move the leading term into the remainder.
      Polynomial t = Polynomial::monomial(ring, L.t.m, 1).scaled(L.t.c);
      r.comp[L.c] = r.comp[L.c] + t;
      f.comp[L.c] = f.comp[L.c] - t;
    }
  }
  return r;
}

bool submodule_contains(const ModuleGB& G, const VecPoly& v) {
  return module_nf(v, G).is_zero();
}

ModuleGB module_groebner(const GradedFreeModule& F, const ModuleOrder& ord,
                         const std::vector<VecPoly>& gens) {
  const PrimeField& field = F.ring->field;
  ModuleGB G{F, ord, {}};
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (g.rank() != F.rank())
      fail(ErrorCode::BadArgument, "generator rank disagrees with module");
    G.gens.push_back(make_monic(g, ord, field));
  }

  const bool rank_one = F.rank() == 1;
  std::vector<LeadRef> leads;
  for (const auto& g : G.gens) leads.push_back(lead(g, ord));

  auto key = [](int i, int j) { return std::make_pair(i, j); };
  std::set<std::pair<int, int>> done;
  // Pair queue ordered by (lcm degree, j, i) for a deterministic normal
  // selection strategy.
  auto cmp_pair = [](const Pair& a, const Pair& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  };
  std::vector<Pair> queue;
  auto push_pairs_for = [&](int j) {
    for (int i = 0; i < j; ++i) {
      if (leads[i].c != leads[j].c) continue;
      Monomial u = lcm(leads[i].t.m, leads[j].t.m);
      queue.push_back({i, j, u, u.degree()});
    }
    std::sort(queue.begin(), queue.end(), cmp_pair);
  };
  for (int j = 0; j < static_cast<int>(G.gens.size()); ++j) push_pairs_for(j);

  while (!queue.empty()) {
    Pair p = queue.front();
    queue.erase(queue.begin());
    done.insert(key(p.i, p.j));

    // Coprime criterion (ideals only).
    if (rank_one && leads[p.i].t.m.coprime(leads[p.j].t.m)) continue;
    // Chain criterion: some k with lt_k | lcm and both subpairs handled.
    bool skip = false;
    for (int k = 0; k < static_cast<int>(G.gens.size()) && !skip; ++k) {
      if (k == p.i || k == p.j || leads[k].c != leads[p.i].c) continue;
      if (!leads[k].t.m.divides(p.u)) continue;
      auto a = key(std::min(p.i, k), std::max(p.i, k));
      auto b = key(std::min(k, p.j), std::max(k, p.j));
      if (done.count(a) && done.count(b)) skip = true;
    }
    if (skip) continue;

    VecPoly s = G.gens[p.i]
                    .times_monomial(p.u.quotient(leads[p.i].t.m))
                    .operator-(G.gens[p.j].times_monomial(
                        p.u.quotient(leads[p.j].t.m)));
    VecPoly r = module_nf(std::move(s), G);
    if (r.is_zero()) continue;
    G.gens.push_back(make_monic(r, ord, field));
    leads.push_back(lead(G.gens.back(), ord));
    push_pairs_for(static_cast<int>(G.gens.size()) - 1);
  }

  // Minimalize: drop elements whose leading term is divisible by another
  // kept element's leading term (no two leading terms are equal).
  std::vector<int> idx(G.gens.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    return ord.cmp(leads[a].t.m, leads[a].c, leads[b].t.m, leads[b].c) < 0;
  });
  std::vector<VecPoly> kept;
  std::vector<LeadRef> kept_leads;
  for (int i : idx) {
    bool dominated = false;
    for (const auto& L : kept_leads)
      if (L.c == leads[i].c && L.t.m.divides(leads[i].t.m)) {
        dominated = true;
        break;
      }
    if (!dominated) {
      kept.push_back(G.gens[i]);
      kept_leads.push_back(leads[i]);
    }
  }

  // Tail-reduce each kept element against the others for the reduced basis.
  ModuleGB R{F, ord, kept};
  for (size_t i = 0; i < R.gens.size(); ++i) {
    VecPoly g = R.gens[i];
    ModuleGB others{F, ord, {}};
    for (size_t j = 0; j < R.gens.size(); ++j)
      if (j != i) others.gens.push_back(R.gens[j]);
    R.gens[i] = make_monic(module_nf(std::move(g), others), ord, field);
  }

  // Canonical order: decreasing leading terms.
  std::sort(R.gens.begin(), R.gens.end(),
            [&](const VecPoly& a, const VecPoly& b) {
              LeadRef la = lead(a, ord), lb = lead(b, ord);
              return ord.cmp(la.t.m, la.c, lb.t.m, lb.c) > 0;
            });
  return R;
}

HilbertSeries monomial_quotient_series(std::vector<Monomial> gens,
                                       int nvars) {
  // Minimalize.
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) {
              return a.degree() < b.degree();
            });
  std::vector<Monomial> min;
  for (const auto& m : gens) {
    bool dominated = false;
    for (const auto& k : min)
      if (k.divides(m)) {
        dominated = true;
        break;
      }
    if (!dominated) min.push_back(m);
  }

  HilbertSeries h;
  h.den_pow = nvars;
  h.expansion = Expansion::AtZero;

  // Unit ideal: the quotient is zero.
  if (min.size() == 1 && min[0].is_one()) {
    h.num = {};
    h.den_pow = 0;
    return h;
  }

  // Base case: pairwise coprime generators form a regular sequence, so the
  // numerator is a product of (1 - t^deg).
  bool coprime = true;
  for (size_t i = 0; i < min.size() && coprime; ++i)
    for (size_t j = i + 1; j < min.size() && coprime; ++j)
      if (!min[i].coprime(min[j])) coprime = false;
  if (coprime) {
    LaurentPoly num = LaurentPoly::monomial(0);
    for (const auto& m : min) {
      LaurentPoly f = LaurentPoly::monomial(0) +
                      LaurentPoly::monomial(m.degree(), -1);
      num = num * f;
    }
    h.num = num;
    return h;
  }

  // Pivot on a variable occurring in at least two generators:
  // HS(A/I) = HS(A/(I + x)) + t * HS(A/(I : x)).
  int pivot = -1;
  {
    std::vector<int> count(nvars, 0);
    for (const auto& m : min)
      for (int v = 0; v < nvars; ++v)
        if (m.e[v] > 0) ++count[v];
    int best = 0;
    for (int v = 0; v < nvars; ++v)
      if (count[v] > best) {
        best = count[v];
        pivot = v;
      }
  }

  std::vector<Monomial> plus;   // I + <x_pivot>
  std::vector<Monomial> colon;  // I : x_pivot
  plus.push_back(Monomial::var(nvars, pivot));
  for (const auto& m : min) {
    if (m.e[pivot] == 0) plus.push_back(m);
    Monomial q = m;
    if (q.e[pivot] > 0) --q.e[pivot];
    colon.push_back(q);
  }
  HilbertSeries a = monomial_quotient_series(std::move(plus), nvars);
  HilbertSeries b = monomial_quotient_series(std::move(colon), nvars);
  return a + b.twisted(-1);
}

HilbertSeries quotient_series(const ModuleGB& G) {
  // in(N) = (+)_c I_c e_c with I_c the monomial ideal of leading terms in
  // component c, so HS(F/N) = sum_c t^twist_c HS(A/I_c).
  int n = G.ambient.ring->nvars;
  std::map<int, std::vector<Monomial>> lt_by_comp;
  for (const auto& g : G.gens) {
    LeadRef L = lead(g, G.order);
    lt_by_comp[L.c].push_back(L.t.m);
  }
  HilbertSeries h;
  for (int c = 0; c < G.ambient.rank(); ++c) {
    HilbertSeries hc;
    auto it = lt_by_comp.find(c);
    if (it == lt_by_comp.end())
      hc = HilbertSeries::free_module({0}, n);
    else
      hc = monomial_quotient_series(it->second, n);
    h = h + hc.twisted(-G.ambient.twists[c]);
  }
  return h;
}

SchreyerStep schreyer_syzygies(const ModuleGB& G) {
  const RingPtr& ring = G.ambient.ring;
  int s = static_cast<int>(G.gens.size());
  std::vector<LeadRef> leads;
  for (const auto& g : G.gens) leads.push_back(lead(g, G.order));

  // Free module on the basis elements: twists are their degrees.
  GradedFreeModule L1{ring, {}};
  for (const auto& g : G.gens) {
    auto d = column_degree(G.ambient, g);
    L1.twists.push_back(d ? *d : 0);
  }

  // Induced Schreyer order: flat label = parent label * leading monomial;
  // ranks ordered by (parent rank, position); blocks inherited.
  ModuleOrder ind;
  ind.labels.reserve(s);
  ind.blocks.reserve(s);
  for (int i = 0; i < s; ++i) {
    ind.labels.push_back(G.order.labels[leads[i].c] * leads[i].t.m);
    ind.blocks.push_back(G.order.blocks[leads[i].c]);
  }
  std::vector<int> perm(s);
  for (int i = 0; i < s; ++i) perm[i] = i;
  std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) {
    return G.order.ranks[leads[a].c] < G.order.ranks[leads[b].c];
  });
  ind.ranks.assign(s, 0);
  for (int r = 0; r < s; ++r) ind.ranks[perm[r]] = r;

  GradedMatrix syz;
  syz.target = L1;
  struct Col {
    VecPoly v;
    Monomial lt;  // leading monomial (component = i of the pair)
    int comp;
  };
  std::vector<Col> cols;
  std::vector<Polynomial> cof;
  for (int j = 0; j < s; ++j) {
    for (int i = 0; i < j; ++i) {
      if (leads[i].c != leads[j].c) continue;
      Monomial u = lcm(leads[i].t.m, leads[j].t.m);
      Monomial qi = u.quotient(leads[i].t.m);
      Monomial qj = u.quotient(leads[j].t.m);
      VecPoly spair =
          G.gens[i].times_monomial(qi) - G.gens[j].times_monomial(qj);
      VecPoly r = module_nf(std::move(spair), G, &cof);
      if (!r.is_zero())
        fail(ErrorCode::BadArgument,
             "internal error: S-pair of a Groebner basis did not vanish");
      VecPoly col(ring, s);
      col.comp[i] = Polynomial::monomial(ring, qi, 1);
      col.comp[j] = col.comp[j] - Polynomial::monomial(ring, qj, 1);
      for (int k = 0; k < s; ++k) col.comp[k] = col.comp[k] - cof[k];
      // Schreyer: the leading term of this syzygy is qi * E_i.
      cols.push_back({std::move(col), qi, i});
    }
  }

  // Minimalize leading terms (they form a Groebner basis of the syzygy
  // module; dropping dominated ones keeps that property).
  std::stable_sort(cols.begin(), cols.end(),
                   [&](const Col& a, const Col& b) {
                     return ind.cmp(a.lt, a.comp, b.lt, b.comp) < 0;
                   });
  std::vector<Col> kept;
  for (auto& c : cols) {
    bool dominated = false;
    for (const auto& k : kept)
      if (k.comp == c.comp && k.lt.divides(c.lt)) {
        dominated = true;
        break;
      }
    if (!dominated) kept.push_back(std::move(c));
  }
  for (auto& c : kept) {
    auto d = column_degree(L1, c.v);
    syz.source_twists.push_back(d ? *d : 0);
    syz.cols.push_back(make_monic(c.v, ind, ring->field));
  }
  return {std::move(syz), std::move(ind)};
}

ImageSolver::ImageSolver(GradedMatrix m) : m_(std::move(m)) {
  const RingPtr& ring = m_.target.ring;
  int r = m_.rows(), s = m_.ncols();
  GradedFreeModule aug{ring, m_.target.twists};
  for (int d : m_.source_twists) aug.twists.push_back(d);
  ModuleOrder ord = ModuleOrder::top(ring, r + s);
  for (int c = r; c < r + s; ++c) ord.blocks[c] = 1;
  std::vector<VecPoly> gens;
  gens.reserve(s);
  for (int j = 0; j < s; ++j) {
    VecPoly v(ring, r + s);
    for (int i = 0; i < r; ++i) v.comp[i] = m_.cols[j].comp[i];
    v.comp[r + j] = Polynomial::constant(ring, 1);
    gens.push_back(std::move(v));
  }
  aug_ = module_groebner(aug, ord, gens);
}

std::optional<VecPoly> ImageSolver::solve(const VecPoly& v) const {
  const RingPtr& ring = m_.target.ring;
  int r = m_.rows(), s = m_.ncols();
  VecPoly lifted(ring, r + s);
  for (int i = 0; i < r; ++i) lifted.comp[i] = v.comp[i];
  VecPoly nf = module_nf(std::move(lifted), aug_);
  for (int i = 0; i < r; ++i)
    if (!nf.comp[i].is_zero()) return std::nullopt;
  VecPoly x(ring, s);
  for (int j = 0; j < s; ++j) x.comp[j] = -nf.comp[r + j];
  return x;
}

std::vector<VecPoly> ImageSolver::kernel() const {
  const RingPtr& ring = m_.target.ring;
  int r = m_.rows(), s = m_.ncols();
  std::vector<VecPoly> out;
  for (const auto& g : aug_.gens) {
    bool in_kernel = true;
    for (int i = 0; i < r && in_kernel; ++i)
      if (!g.comp[i].is_zero()) in_kernel = false;
    if (!in_kernel) continue;
    VecPoly v(ring, s);
    for (int j = 0; j < s; ++j) v.comp[j] = g.comp[r + j];
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<VecPoly> kernel_generators(const GradedMatrix& m) {
  return ImageSolver(m).kernel();
}

}  // namespace liaison
