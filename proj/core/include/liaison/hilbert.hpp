#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "liaison/errors.hpp"

namespace liaison {

// Dimension sentinel for the zero module.
constexpr int kDimMinusInfinity = std::numeric_limits<int>::min();

// Integer Laurent polynomial: c[i] is the coefficient of t^(lo+i).
// Normalized form has nonzero first and last coefficients (or is empty).
struct LaurentPoly {
  int lo = 0;
  std::vector<long long> c;

  static LaurentPoly monomial(int e, long long coeff = 1) {
    LaurentPoly p;
    if (coeff) {
      p.lo = e;
      p.c = {coeff};
    }
    return p;
  }

  bool is_zero() const { return c.empty(); }
  int min_exp() const { return lo; }
  int max_exp() const { return lo + static_cast<int>(c.size()) - 1; }
  long long coeff(int e) const {
    if (e < lo || e > max_exp()) return 0;
    return c[e - lo];
  }
  long long eval_at_one() const {
    long long s = 0;
    for (long long x : c) s += x;
    return s;
  }

  void normalize();
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly scaled(long long k) const;
  LaurentPoly shifted(int e) const;   // t^e * this
  LaurentPoly reversed() const;       // this(1/t)
  bool operator==(const LaurentPoly& o) const {
    return lo == o.lo && c == o.c;
  }
};

// Which formal expansion of num/(1-t)^k is meant: the power-series expansion
// at t=0 (coefficients supported below-bounded, the case for finitely
// generated modules) or the expansion at t=infinity (above-bounded support,
// the case for graded duals of modules of positive dimension).
enum class Expansion { AtZero, AtInfinity };

// Hilbert series num(t) / (1-t)^den_pow with a chosen expansion.
struct HilbertSeries {
  LaurentPoly num;
  int den_pow = 0;
  Expansion expansion = Expansion::AtZero;

  static HilbertSeries zero() { return {}; }
  // Series of the free module with the given generator twists over a
  // polynomial ring in nvars variables: sum of t^d / (1-t)^nvars.
  static HilbertSeries free_module(const std::vector<int>& generator_degrees,
                                   int nvars);

  bool is_zero() const { return num.is_zero(); }

  // Coefficient of t^mu in the chosen expansion.
  long long value_at(int mu) const;

  // Cancel all common (1-t) factors.
  HilbertSeries reduced() const;

  // Krull dimension: order of the pole at t=1 (kDimMinusInfinity when zero).
  int dimension() const;
  // Multiplicity: reduced numerator evaluated at t=1 (0 for the zero series).
  long long degree() const;
  // Largest exponent with nonzero coefficient in the expansion of the
  // reduced series when it is a Laurent polynomial or has a finite top;
  // defined as max_exp(reduced num) - reduced den_pow for AtZero series
  // (the a-invariant of the module when applied to its own series).
  int a_invariant() const;

  HilbertSeries operator+(const HilbertSeries& o) const;
  HilbertSeries operator-(const HilbertSeries& o) const;
  HilbertSeries scaled(long long k) const;
  // Series of M[s] (degree shift: value_at(mu) of the result equals
  // value_at(mu + s) of the input).
  HilbertSeries twisted(int s) const;

  // Exact equality as rational functions; requires compatible expansions
  // (equal, or either side reducing to a Laurent polynomial).
  bool equals(const HilbertSeries& o) const;
};

// Series of the graded dual: value_at(mu) of the result equals
// value_at(-mu) of the input.  Flips the expansion when den_pow > 0.
HilbertSeries reflect(const HilbertSeries& h);

// Whether two series can be compared exactly as rational functions.
bool comparable(const HilbertSeries& a, const HilbertSeries& b);

std::vector<std::pair<int, long long>> tabulate(const HilbertSeries& h,
                                                int lo, int hi);

// C(n, k) for k >= 0 (0 when n < k or n < 0).
long long binomial(long long n, int k);

std::string to_string(const LaurentPoly& p);
std::string to_string(const HilbertSeries& h);

}  // namespace liaison
