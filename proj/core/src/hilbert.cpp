#include "liaison/hilbert.hpp"

#include <algorithm>
#include <sstream>

namespace liaison {

long long binomial(long long n, int k) {
  if (k < 0 || n < 0 || n < k) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void LaurentPoly::normalize() {
  size_t a = 0, b = c.size();
  while (a < b && c[a] == 0) ++a;
  while (b > a && c[b - 1] == 0) --b;
  if (a == b) {
    lo = 0;
    c.clear();
    return;
  }
  lo += static_cast<int>(a);
  c = std::vector<long long>(c.begin() + a, c.begin() + b);
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  int nlo = std::min(lo, o.lo);
  int nhi = std::max(max_exp(), o.max_exp());
  LaurentPoly r;
  r.lo = nlo;
  r.c.assign(nhi - nlo + 1, 0);
  for (size_t i = 0; i < c.size(); ++i) r.c[lo + i - nlo] += c[i];
  for (size_t i = 0; i < o.c.size(); ++i) r.c[o.lo + i - nlo] += o.c[i];
  r.normalize();
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  return *this + o.scaled(-1);
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  LaurentPoly r;
  r.lo = lo + o.lo;
  r.c.assign(c.size() + o.c.size() - 1, 0);
  for (size_t i = 0; i < c.size(); ++i)
    for (size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
  r.normalize();
  return r;
}

LaurentPoly LaurentPoly::scaled(long long k) const {
  if (k == 0) return {};
  LaurentPoly r = *this;
  for (auto& x : r.c) x *= k;
  return r;
}

LaurentPoly LaurentPoly::shifted(int e) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.lo += e;
  return r;
}

LaurentPoly LaurentPoly::reversed() const {
  LaurentPoly r;
  if (is_zero()) return r;
  r.lo = -max_exp();
  r.c.assign(c.rbegin(), c.rend());
  return r;
}

// Exact division by (1 - t); caller guarantees eval_at_one() == 0.
static LaurentPoly divide_by_one_minus_t(const LaurentPoly& p) {
  LaurentPoly q;
  if (p.is_zero()) return q;
  q.lo = p.lo;
  q.c.assign(p.c.size() - 1, 0);
  long long run = 0;
  for (size_t i = 0; i + 1 < p.c.size(); ++i) {
    run += p.c[i];
    q.c[i] = run;
  }
  q.normalize();
  return q;
}

HilbertSeries HilbertSeries::free_module(
    const std::vector<int>& generator_degrees, int nvars) {
  HilbertSeries h;
  h.den_pow = nvars;
  h.expansion = Expansion::AtZero;
  for (int d : generator_degrees) h.num = h.num + LaurentPoly::monomial(d);
  return h;
}

long long HilbertSeries::value_at(int mu) const {
  if (num.is_zero()) return 0;
  if (den_pow == 0) return num.coeff(mu);
  long long v = 0;
  const int k = den_pow;
  if (expansion == Expansion::AtZero) {
    for (size_t i = 0; i < num.c.size(); ++i)
      v += num.c[i] * binomial(mu - (num.lo + static_cast<int>(i)) + k - 1,
                               k - 1);
  } else {
    long long sign = (k % 2 == 0) ? 1 : -1;
    for (size_t i = 0; i < num.c.size(); ++i)
      v += sign * num.c[i] *
           binomial((num.lo + static_cast<int>(i)) - mu - 1, k - 1);
  }
  return v;
}

HilbertSeries HilbertSeries::reduced() const {
  HilbertSeries h = *this;
  h.num.normalize();
  if (h.num.is_zero()) {
    h.den_pow = 0;
    return h;
  }
  while (h.den_pow > 0 && h.num.eval_at_one() == 0) {
    h.num = divide_by_one_minus_t(h.num);
    --h.den_pow;
  }
  return h;
}

int HilbertSeries::dimension() const {
  HilbertSeries h = reduced();
  if (h.num.is_zero()) return kDimMinusInfinity;
  return h.den_pow;
}

long long HilbertSeries::degree() const {
  HilbertSeries h = reduced();
  return h.num.eval_at_one();
}

int HilbertSeries::a_invariant() const {
  HilbertSeries h = reduced();
  if (h.num.is_zero())
    fail(ErrorCode::ZeroModule, "a-invariant of the zero module");
  return h.num.max_exp() - h.den_pow;
}

static LaurentPoly times_power_of_one_minus_t(LaurentPoly p, int k) {
  LaurentPoly one_minus_t;
  one_minus_t.lo = 0;
  one_minus_t.c = {1, -1};
  for (int i = 0; i < k; ++i) p = p * one_minus_t;
  return p;
}

HilbertSeries HilbertSeries::operator+(const HilbertSeries& o) const {
  if (num.is_zero()) return o;
  if (o.num.is_zero()) return *this;
  HilbertSeries a = *this, b = o;
  if (a.den_pow > 0 && b.den_pow > 0 && a.expansion != b.expansion) {
    // A Laurent polynomial expands identically at 0 and at infinity, so a
    // mixed sum is only meaningful if one side reduces to one.
    a = a.reduced();
    b = b.reduced();
    if (a.den_pow > 0 && b.den_pow > 0)
      fail(ErrorCode::BadArgument,
           "cannot add series expanded at 0 and at infinity");
    if (a.den_pow == 0) a.expansion = b.expansion;
    else b.expansion = a.expansion;
  }
  HilbertSeries r;
  r.expansion = a.den_pow > 0 ? a.expansion : b.expansion;
  r.den_pow = std::max(a.den_pow, b.den_pow);
  r.num = times_power_of_one_minus_t(a.num, r.den_pow - a.den_pow) +
          times_power_of_one_minus_t(b.num, r.den_pow - b.den_pow);
  r.num.normalize();
  if (r.num.is_zero()) r.den_pow = 0;
  return r;
}

HilbertSeries HilbertSeries::operator-(const HilbertSeries& o) const {
  return *this + o.scaled(-1);
}

HilbertSeries HilbertSeries::scaled(long long k) const {
  HilbertSeries r = *this;
  r.num = r.num.scaled(k);
  if (r.num.is_zero()) r.den_pow = 0;
  return r;
}

HilbertSeries HilbertSeries::twisted(int s) const {
  HilbertSeries r = *this;
  r.num = r.num.shifted(-s);
  return r;
}

bool comparable(const HilbertSeries& a, const HilbertSeries& b) {
  HilbertSeries ra = a.reduced(), rb = b.reduced();
  if (ra.den_pow == 0 || rb.den_pow == 0) return true;
  return ra.expansion == rb.expansion;
}

bool HilbertSeries::equals(const HilbertSeries& o) const {
  HilbertSeries a = reduced(), b = o.reduced();
  if (a.den_pow == 0 && b.den_pow == 0) return a.num == b.num;
  if (a.den_pow > 0 && b.den_pow > 0 && a.expansion != b.expansion)
    return false;  // below-bounded vs above-bounded support never agree
  if ((a.den_pow == 0) != (b.den_pow == 0)) return false;
  return times_power_of_one_minus_t(a.num, b.den_pow) ==
         times_power_of_one_minus_t(b.num, a.den_pow);
}

HilbertSeries reflect(const HilbertSeries& h) {
  HilbertSeries r;
  r.den_pow = h.den_pow;
  int sign = (h.den_pow % 2 == 0) ? 1 : -1;
  r.num = h.num.reversed().shifted(h.den_pow).scaled(sign);
  if (h.den_pow == 0) {
    r.expansion = h.expansion;
  } else {
    r.expansion = h.expansion == Expansion::AtZero ? Expansion::AtInfinity
                                                   : Expansion::AtZero;
  }
  return r;
}

std::vector<std::pair<int, long long>> tabulate(const HilbertSeries& h,
                                                int lo, int hi) {
  std::vector<std::pair<int, long long>> out;
  for (int mu = lo; mu <= hi; ++mu) out.emplace_back(mu, h.value_at(mu));
  return out;
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < p.c.size(); ++i) {
    if (p.c[i] == 0) continue;
    int e = p.lo + static_cast<int>(i);
    long long v = p.c[i];
    if (!first) os << (v > 0 ? " + " : " - ");
    else if (v < 0) os << "-";
    long long a = v > 0 ? v : -v;
    if (a != 1 || e == 0) os << a;
    if (e != 0) {
      if (a != 1) os << "*";
      os << "t";
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

std::string to_string(const HilbertSeries& h) {
  std::ostringstream os;
  os << "(" << to_string(h.num) << ") / (1-t)^" << h.den_pow
     << (h.expansion == Expansion::AtZero ? " @0" : " @inf");
  return os.str();
}

}  // namespace liaison
