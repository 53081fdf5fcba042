#pragma once

#include "liaison/resolution.hpp"

namespace liaison {

// The oracle recomputes degreewise dimensions by dense row reduction over
// F_p, with no Groebner machinery, so its answers are independent of the
// engine proper.  Every entry point enforces a cost guard on the dense
// matrices it is willing to build.
struct OracleOptions {
  long long max_entries = 200000;
};

struct FpMat {
  int rows = 0, cols = 0;
  std::vector<std::uint32_t> a;

  FpMat() = default;
  FpMat(int r, int c)
      : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}
  std::uint32_t& at(int i, int j) {
    return a[static_cast<size_t>(i) * cols + j];
  }
  std::uint32_t at(int i, int j) const {
    return a[static_cast<size_t>(i) * cols + j];
  }
};

// In-place reduced row echelon form; returns the rank and optionally the
// pivot column of each nonzero row.
int row_reduce(FpMat& m, const PrimeField& F,
               std::vector<int>* pivot_cols = nullptr);

// All monomials of the given total degree, decreasing grevlex order.
std::vector<Monomial> monomials_of_degree(int nvars, int degree);

// dim_k (A/<gens>)_mu.
long long oracle_ideal_hf(const RingPtr& ring,
                          const std::vector<Polynomial>& gens, int mu,
                          const OracleOptions& opt = {});

// Ideal membership decided degreewise by rank comparison.
bool oracle_membership(const Polynomial& f,
                       const std::vector<Polynomial>& gens,
                       const OracleOptions& opt = {});

// dim_k of the degree-mu slice of ker(B)/im(A) for composable graded maps
// with B(A(x)) = 0; the vanishing of the composite is re-verified on the
// slice.  Pass A with no columns for homology at the start of a complex.
long long oracle_homology_hf(const GradedMatrix& A, const GradedMatrix& B,
                             int mu, const OracleOptions& opt = {});

// dim_k Ext^k(M, A[-n])_mu from a free resolution of M, by dualizing the
// matrices and running slice homology.
long long oracle_ext_hf(const FreeResolution& res, int k, int mu,
                        const OracleOptions& opt = {});

// dim_k Tor_i(A/<gens>, k)_j via Koszul slices on reduced coset bases; an
// independent check of graded Betti numbers.
long long oracle_tor_betti(const RingPtr& ring,
                           const std::vector<Polynomial>& gens, int i, int j,
                           const OracleOptions& opt = {});

}  // namespace liaison
