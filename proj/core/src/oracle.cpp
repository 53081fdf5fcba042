#include "liaison/oracle.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace liaison {

namespace {

void guard(long long rows, long long cols, const OracleOptions& opt) {
  if (rows * cols > opt.max_entries)
    fail(ErrorCode::CostLimit,
         "oracle slice of " + std::to_string(rows) + "x" +
             std::to_string(cols) + " entries exceeds the cost guard of " +
             std::to_string(opt.max_entries));
}

// Basis of the degree-mu slice of a graded free module: components in
// ascending order, monomials in decreasing grevlex order within each.
struct SliceBasis {
  std::vector<std::pair<int, Monomial>> elems;
  std::vector<std::map<std::vector<int>, int>> index;  // per component

  int size() const { return static_cast<int>(elems.size()); }
  int find(int comp, const Monomial& m) const {
    auto it = index[comp].find(m.e);
    return it == index[comp].end() ? -1 : it->second;
  }
};

SliceBasis slice_basis(const GradedFreeModule& F, int mu) {
  SliceBasis b;
  b.index.resize(F.rank());
  for (int c = 0; c < F.rank(); ++c) {
    for (auto& m : monomials_of_degree(F.ring->nvars, mu - F.twists[c])) {
      b.index[c][m.e] = b.size();
      b.elems.emplace_back(c, std::move(m));
    }
  }
  return b;
}

// Dense matrix of the degree-mu slice of a graded map.
FpMat slice_matrix(const GradedMatrix& A, const SliceBasis& target,
                   const SliceBasis& source, int mu,
                   const OracleOptions& opt) {
  (void)mu;
  guard(target.size(), source.size(), opt);
  FpMat m(target.size(), source.size());
  for (int j = 0; j < source.size(); ++j) {
    const auto& [c, mono] = source.elems[j];
    for (int i = 0; i < A.rows(); ++i) {
      const Polynomial& f = A.at(i, c);
      for (const Term& t : f.terms()) {
        int row = target.find(i, t.m * mono);
        if (row < 0)
          fail(ErrorCode::NotHomogeneous,
               "matrix entry leaves the degree slice");
        m.at(row, j) = f.ring()->field.add(m.at(row, j), t.c);
      }
    }
  }
  return m;
}

FpMat multiply(const FpMat& a, const FpMat& b, const PrimeField& F) {
  FpMat r(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      std::uint32_t aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols; ++j)
        if (b.at(k, j) != 0)
          r.at(i, j) = F.add(r.at(i, j), F.mul(aik, b.at(k, j)));
    }
  return r;
}

bool is_zero_mat(const FpMat& m) {
  for (std::uint32_t v : m.a)
    if (v != 0) return false;
  return true;
}

void enumerate_monomials(int nvars, int var, int left, std::vector<int>& e,
                         std::vector<Monomial>& out) {
  if (var == nvars - 1) {
    e[var] = left;
    Monomial m(nvars);
    m.e = e;
    out.push_back(std::move(m));
    e[var] = 0;
    return;
  }
  for (int k = left; k >= 0; --k) {
    e[var] = k;
    enumerate_monomials(nvars, var + 1, left - k, e, out);
  }
  e[var] = 0;
}

// Rows spanning the degree-mu slice of <gens> in the monomial coordinates
// `cols` (with lookup map `where`).
FpMat ideal_slice_rows(const RingPtr& ring,
                       const std::vector<Polynomial>& gens, int mu,
                       const std::map<std::vector<int>, int>& where,
                       int ncols, const OracleOptions& opt) {
  long long nrows = 0;
  std::vector<std::pair<const Polynomial*, std::vector<Monomial>>> blocks;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (!g.is_homogeneous())
      fail(ErrorCode::NotHomogeneous, "oracle requires homogeneous input");
    if (g.degree() > mu) continue;
    blocks.emplace_back(&g, monomials_of_degree(ring->nvars, mu - g.degree()));
    nrows += static_cast<long long>(blocks.back().second.size());
  }
  guard(nrows, ncols, opt);
  FpMat m(static_cast<int>(nrows), ncols);
  int r = 0;
  for (const auto& [g, mults] : blocks)
    for (const auto& mono : mults) {
      for (const Term& t : g->terms())
        m.at(r, where.at((t.m * mono).e)) = t.c;
      ++r;
    }
  return m;
}

// Reduced coset basis of (A/<gens>)_d: the non-pivot monomials of the RREF
// of the ideal slice, with enough bookkeeping to reduce vectors into coset
// coordinates.
struct CosetBasis {
  std::vector<Monomial> cols;
  std::map<std::vector<int>, int> where;
  FpMat rref;
  std::vector<int> pivots;
  std::vector<int> basis_cols;

  int dim() const { return static_cast<int>(basis_cols.size()); }

  // Reduces a full coordinate vector modulo the row space, then restricts
  // to the coset coordinates.
  std::vector<std::uint32_t> reduce(std::vector<std::uint32_t> v,
                                    const PrimeField& F) const {
    for (size_t r = 0; r < pivots.size(); ++r) {
      std::uint32_t c = v[pivots[r]];
      if (c == 0) continue;
      for (int j = 0; j < rref.cols; ++j)
        if (rref.at(static_cast<int>(r), j) != 0)
          v[j] = F.sub(v[j], F.mul(c, rref.at(static_cast<int>(r), j)));
    }
    std::vector<std::uint32_t> out(basis_cols.size());
    for (size_t i = 0; i < basis_cols.size(); ++i) out[i] = v[basis_cols[i]];
    return out;
  }
};

CosetBasis coset_basis(const RingPtr& ring,
                       const std::vector<Polynomial>& gens, int d,
                       const OracleOptions& opt) {
  CosetBasis b;
  b.cols = monomials_of_degree(ring->nvars, d);
  for (size_t i = 0; i < b.cols.size(); ++i)
    b.where[b.cols[i].e] = static_cast<int>(i);
  b.rref = ideal_slice_rows(ring, gens, d, b.where,
                            static_cast<int>(b.cols.size()), opt);
  int rank = row_reduce(b.rref, ring->field, &b.pivots);
  b.rref.rows = rank;  // drop the zero rows
  b.rref.a.resize(static_cast<size_t>(rank) * b.rref.cols);
  std::vector<char> is_pivot(b.cols.size(), 0);
  for (int p : b.pivots) is_pivot[p] = 1;
  for (size_t i = 0; i < b.cols.size(); ++i)
    if (!is_pivot[i]) b.basis_cols.push_back(static_cast<int>(i));
  return b;
}

// Matrix of multiplication by x_l from the degree-d coset basis to the
// degree-(d+1) one.
FpMat mult_matrix(const RingPtr& ring, const CosetBasis& src,
                  const CosetBasis& tgt, int l, const OracleOptions& opt) {
  guard(tgt.dim(), src.dim(), opt);
  FpMat m(tgt.dim(), src.dim());
  for (int j = 0; j < src.dim(); ++j) {
    Monomial prod = src.cols[src.basis_cols[j]] * Monomial::var(ring->nvars, l);
    std::vector<std::uint32_t> v(tgt.cols.size(), 0);
    v[tgt.where.at(prod.e)] = 1;
    auto coords = tgt.reduce(std::move(v), ring->field);
    for (int i = 0; i < tgt.dim(); ++i) m.at(i, j) = coords[i];
  }
  return m;
}

void combinations(int n, int k, std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  cur.reserve(k);
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v < n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

// Slice of the Koszul differential from exterior degree i to i - 1, acting
// on coset coordinates: sends e_S (x) m to sum_t (-1)^t e_{S \ S[t]} (x)
// x_{S[t]} m.
FpMat koszul_slice(const RingPtr& ring, int i, const CosetBasis& src,
                   const CosetBasis& tgt,
                   const std::vector<FpMat>& mult_by_var,
                   const OracleOptions& opt) {
  int n = ring->nvars;
  std::vector<std::vector<int>> srcsets, tgtsets;
  combinations(n, i, srcsets);
  combinations(n, i - 1, tgtsets);
  std::map<std::vector<int>, int> tgtwhere;
  for (size_t s = 0; s < tgtsets.size(); ++s)
    tgtwhere[tgtsets[s]] = static_cast<int>(s);
  long long rows = static_cast<long long>(tgtsets.size()) * tgt.dim();
  long long cols = static_cast<long long>(srcsets.size()) * src.dim();
  guard(rows, cols, opt);
  FpMat m(static_cast<int>(rows), static_cast<int>(cols));
  const PrimeField& F = ring->field;
  for (size_t s = 0; s < srcsets.size(); ++s) {
    const auto& S = srcsets[s];
    for (size_t t = 0; t < S.size(); ++t) {
      std::vector<int> T = S;
      T.erase(T.begin() + static_cast<long>(t));
      int block = tgtwhere.at(T);
      const FpMat& mul = mult_by_var[S[t]];
      bool negative = (t % 2) == 1;
      for (int r = 0; r < mul.rows; ++r)
        for (int c = 0; c < mul.cols; ++c) {
          std::uint32_t v = mul.at(r, c);
          if (v == 0) continue;
          if (negative) v = F.neg(v);
          int row = block * tgt.dim() + r;
          int col = static_cast<int>(s) * src.dim() + c;
          m.at(row, col) = F.add(m.at(row, col), v);
        }
    }
  }
  return m;
}

}  // namespace

int row_reduce(FpMat& m, const PrimeField& F, std::vector<int>* pivot_cols) {
  if (pivot_cols) pivot_cols->clear();
  int rank = 0;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int piv = -1;
    for (int r = rank; r < m.rows; ++r)
      if (m.at(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(rank, j));
    std::uint32_t s = F.inv(m.at(rank, col));
    for (int j = col; j < m.cols; ++j)
      m.at(rank, j) = F.mul(m.at(rank, j), s);
    for (int r = 0; r < m.rows; ++r) {
      if (r == rank) continue;
      std::uint32_t c = m.at(r, col);
      if (c == 0) continue;
      for (int j = col; j < m.cols; ++j)
        m.at(r, j) = F.sub(m.at(r, j), F.mul(c, m.at(rank, j)));
    }
    if (pivot_cols) pivot_cols->push_back(col);
    ++rank;
  }
  return rank;
}

std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  std::vector<int> e(nvars, 0);
  enumerate_monomials(nvars, 0, degree, e, out);
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) {
              return grevlex_cmp(a, b) > 0;
            });
  return out;
}

long long oracle_ideal_hf(const RingPtr& ring,
                          const std::vector<Polynomial>& gens, int mu,
                          const OracleOptions& opt) {
  if (mu < 0) return 0;
  for (const auto& g : gens)
    if (!g.is_zero()) require_same_ring(ring, g.ring());
  auto cols = monomials_of_degree(ring->nvars, mu);
  std::map<std::vector<int>, int> where;
  for (size_t i = 0; i < cols.size(); ++i)
    where[cols[i].e] = static_cast<int>(i);
  FpMat m = ideal_slice_rows(ring, gens, mu, where,
                             static_cast<int>(cols.size()), opt);
  return static_cast<long long>(cols.size()) - row_reduce(m, ring->field);
}

bool oracle_membership(const Polynomial& f,
                       const std::vector<Polynomial>& gens,
                       const OracleOptions& opt) {
  if (f.is_zero()) return true;
  const RingPtr& ring = f.ring();
  std::map<int, std::vector<Term>> parts;
  for (const Term& t : f.terms()) parts[t.m.degree()].push_back(t);
  for (const auto& [d, terms] : parts) {
    auto cols = monomials_of_degree(ring->nvars, d);
    std::map<std::vector<int>, int> where;
    for (size_t i = 0; i < cols.size(); ++i)
      where[cols[i].e] = static_cast<int>(i);
    FpMat m = ideal_slice_rows(ring, gens, d, where,
                               static_cast<int>(cols.size()), opt);
    FpMat with = m;
    with.rows += 1;
    with.a.resize(with.a.size() + cols.size(), 0);
    for (const Term& t : terms)
      with.at(with.rows - 1, where.at(t.m.e)) = t.c;
    if (row_reduce(with, ring->field) != row_reduce(m, ring->field))
      return false;
  }
  return true;
}

long long oracle_homology_hf(const GradedMatrix& A, const GradedMatrix& B,
                             int mu, const OracleOptions& opt) {
  require_same_ring(A.target.ring, B.target.ring);
  if (!(A.target.twists == B.source_twists))
    fail(ErrorCode::DimensionMismatch,
         "homology slice: maps are not composable");
  const RingPtr& ring = A.target.ring;
  SliceBasis L = slice_basis(A.source(), mu);
  SliceBasis M = slice_basis(A.target, mu);
  SliceBasis N = slice_basis(B.target, mu);
  FpMat a = slice_matrix(A, M, L, mu, opt);
  FpMat b = slice_matrix(B, N, M, mu, opt);
  if (!is_zero_mat(multiply(b, a, ring->field)))
    fail(ErrorCode::BadArgument,
         "homology slice: composite map is nonzero in degree " +
             std::to_string(mu));
  int rank_a = row_reduce(a, ring->field);
  int rank_b = row_reduce(b, ring->field);
  return static_cast<long long>(M.size()) - rank_b - rank_a;
}

long long oracle_ext_hf(const FreeResolution& res, int k, int mu,
                        const OracleOptions& opt) {
  if (k < 0 || k > res.length()) return 0;
  const RingPtr& ring = res.F0.ring;
  int n = ring->nvars;
  // Dual complex E_j with maps tau_j : E_{j-1} -> E_j for 1 <= j <= length.
  auto dual = [&](int j) {
    GradedFreeModule E{ring, {}};
    for (int d : res.module_at(j).twists) E.twists.push_back(n - d);
    return E;
  };
  GradedMatrix into = k == 0 ? GradedMatrix::zero_from(dual(0))
                             : transpose(res.d[k - 1], n);
  if (k == res.length()) {
    // Homology at the end of the dual complex: ker is everything.
    SliceBasis E = slice_basis(dual(k), mu);
    FpMat a = slice_matrix(into, E, slice_basis(into.source(), mu), mu, opt);
    return static_cast<long long>(E.size()) - row_reduce(a, ring->field);
  }
  return oracle_homology_hf(into, transpose(res.d[k], n), mu, opt);
}

long long oracle_tor_betti(const RingPtr& ring,
                           const std::vector<Polynomial>& gens, int i, int j,
                           const OracleOptions& opt) {
  int n = ring->nvars;
  if (i < 0 || i > n) return 0;
  // Koszul slices need the coset bases in degrees j-i-1, j-i, j-i+1 and the
  // multiplication maps between consecutive ones.
  CosetBasis below = coset_basis(ring, gens, j - i - 1, opt);
  CosetBasis mid = coset_basis(ring, gens, j - i, opt);
  CosetBasis above = coset_basis(ring, gens, j - i + 1, opt);
  std::vector<FpMat> mul_up(n), mul_in(n);
  for (int l = 0; l < n; ++l) {
    mul_in[l] = mult_matrix(ring, below, mid, l, opt);
    mul_up[l] = mult_matrix(ring, mid, above, l, opt);
  }
  long long ker;
  if (i == 0) {
    ker = mid.dim();
  } else {
    FpMat d_i = koszul_slice(ring, i, mid, above, mul_up, opt);
    ker = static_cast<long long>(d_i.cols) - row_reduce(d_i, ring->field);
  }
  if (i == n) return ker;
  FpMat d_next = koszul_slice(ring, i + 1, below, mid, mul_in, opt);
  if (i >= 1) {
    // Slice-level check that consecutive differentials compose to zero.
    FpMat d_i = koszul_slice(ring, i, mid, above, mul_up, opt);
    if (!is_zero_mat(multiply(d_i, d_next, ring->field)))
      fail(ErrorCode::BadArgument, "Koszul slice differential fails d^2 = 0");
  }
  return ker - row_reduce(d_next, ring->field);
}

}  // namespace liaison
