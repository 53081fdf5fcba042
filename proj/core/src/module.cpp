#include "liaison/module.hpp"

namespace liaison {

VecPoly VecPoly::operator+(const VecPoly& o) const {
  VecPoly r = *this;
  for (int i = 0; i < rank(); ++i) r.comp[i] = r.comp[i] + o.comp[i];
  return r;
}

VecPoly VecPoly::operator-(const VecPoly& o) const {
  VecPoly r = *this;
  for (int i = 0; i < rank(); ++i) r.comp[i] = r.comp[i] - o.comp[i];
  return r;
}

VecPoly VecPoly::scaled(std::uint32_t c) const {
  VecPoly r = *this;
  for (auto& f : r.comp) f = f.scaled(c);
  return r;
}

VecPoly VecPoly::times_term(const Term& t) const {
  VecPoly r = *this;
  for (auto& f : r.comp) f = f.times_term(t);
  return r;
}

VecPoly VecPoly::times_monomial(const Monomial& m) const {
  VecPoly r = *this;
  for (auto& f : r.comp) f = f.times_monomial(m);
  return r;
}

VecPoly VecPoly::times_poly(const Polynomial& f) const {
  VecPoly r = *this;
  for (auto& g : r.comp) g = g * f;
  return r;
}

VecPoly VecPoly::reduce_once(std::uint32_t c, const Monomial& m,
                             const VecPoly& o) const {
  VecPoly r = *this;
  for (int i = 0; i < rank(); ++i)
    r.comp[i] = r.comp[i].reduce_once(c, m, o.comp[i]);
  return r;
}

ModuleOrder ModuleOrder::top(const RingPtr& ring, int ncomp) {
  ModuleOrder ord;
  ord.labels.assign(ncomp, Monomial::one(ring->nvars));
  ord.ranks.resize(ncomp);
  for (int i = 0; i < ncomp; ++i) ord.ranks[i] = i;
  ord.blocks.assign(ncomp, 0);
  return ord;
}

LeadRef lead(const VecPoly& v, const ModuleOrder& ord) {
  LeadRef best;
  for (int c = 0; c < v.rank(); ++c) {
    if (v.comp[c].is_zero()) continue;
    if (best.c < 0 ||
        ord.cmp(v.comp[c].lm(), c, best.t.m, best.c) > 0) {
      best.c = c;
      best.t = v.comp[c].lt();
    }
  }
  if (best.c < 0) fail(ErrorCode::ZeroModule, "leading term of zero vector");
  return best;
}

std::optional<int> column_degree(const GradedFreeModule& target,
                                 const VecPoly& v) {
  std::optional<int> deg;
  for (int i = 0; i < v.rank(); ++i) {
    const Polynomial& f = v.comp[i];
    if (f.is_zero()) continue;
    if (!f.is_homogeneous())
      fail(ErrorCode::NotHomogeneous, "matrix entry is not homogeneous");
    int d = f.degree() + target.twists[i];
    if (deg && *deg != d)
      fail(ErrorCode::NotHomogeneous,
           "column entries have inconsistent degrees");
    deg = d;
  }
  return deg;
}

void validate_graded(const GradedMatrix& m) {
  if (m.ncols() != static_cast<int>(m.source_twists.size()))
    fail(ErrorCode::BadArgument, "column count disagrees with source twists");
  for (int j = 0; j < m.ncols(); ++j) {
    if (m.cols[j].rank() != m.rows())
      fail(ErrorCode::BadArgument, "column rank disagrees with target");
    auto d = column_degree(m.target, m.cols[j]);
    if (d && *d != m.source_twists[j])
      fail(ErrorCode::NotHomogeneous,
           "column degree disagrees with source twist");
  }
}

GradedMatrix transpose(const GradedMatrix& m, int dual_shift) {
  GradedMatrix t;
  t.target.ring = m.target.ring;
  for (int d : m.source_twists) t.target.twists.push_back(dual_shift - d);
  for (int d : m.target.twists) t.source_twists.push_back(dual_shift - d);
  t.cols.reserve(m.rows());
  for (int i = 0; i < m.rows(); ++i) {
    VecPoly col(m.target.ring, m.ncols());
    for (int j = 0; j < m.ncols(); ++j) col.comp[j] = m.at(i, j);
    t.cols.push_back(std::move(col));
  }
  return t;
}

VecPoly apply(const GradedMatrix& m, const VecPoly& v) {
  VecPoly r(m.target.ring, m.rows());
  for (int j = 0; j < m.ncols(); ++j) {
    if (v.comp[j].is_zero()) continue;
    r = r + m.cols[j].times_poly(v.comp[j]);
  }
  return r;
}

GradedMatrix compose(const GradedMatrix& a, const GradedMatrix& b) {
  if (a.ncols() != b.rows())
    fail(ErrorCode::BadArgument, "composition rank mismatch");
  GradedMatrix r;
  r.target = a.target;
  r.source_twists = b.source_twists;
  r.cols.reserve(b.ncols());
  for (const auto& col : b.cols) r.cols.push_back(apply(a, col));
  return r;
}

bool is_zero(const GradedMatrix& m) {
  for (const auto& col : m.cols)
    if (!col.is_zero()) return false;
  return true;
}

}  // namespace liaison
