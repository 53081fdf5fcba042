#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "liaison/fp.hpp"

namespace liaison {

// A standard-graded polynomial ring F_p[x_0, ..., x_{n-1}] with the graded
// reverse lexicographic order (x_0 > x_1 > ... > x_{n-1}).
struct RingDescriptor {
  PrimeField field;
  int nvars = 0;
  std::vector<std::string> var_names;

  std::uint32_t characteristic() const { return field.characteristic(); }
  bool same_as(const RingDescriptor& o) const {
    return characteristic() == o.characteristic() && nvars == o.nvars &&
           var_names == o.var_names;
  }
};

using RingPtr = std::shared_ptr<const RingDescriptor>;

// Variable names default to x0..x{n-1}.
RingPtr make_ring(std::uint32_t p, int nvars);
RingPtr make_ring(std::uint32_t p, std::vector<std::string> var_names);

inline void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (a.get() != b.get() && !(a && b && a->same_as(*b)))
    fail(ErrorCode::RingMismatch, "operands live in different rings");
}

// Dense exponent vector.  The engine targets small numbers of variables
// (n <= 8 or so), so value semantics are fine.
struct Monomial {
  std::vector<int> e;

  explicit Monomial(int n = 0) : e(n, 0) {}
  static Monomial one(int n) { return Monomial(n); }
  static Monomial var(int n, int i, int power = 1) {
    Monomial m(n);
    m.e[i] = power;
    return m;
  }

  int nvars() const { return static_cast<int>(e.size()); }
  int degree() const {
    int d = 0;
    for (int x : e) d += x;
    return d;
  }
  bool is_one() const {
    for (int x : e)
      if (x) return false;
    return true;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r = *this;
    for (int i = 0; i < nvars(); ++i) r.e[i] += o.e[i];
    return r;
  }
  bool divides(const Monomial& o) const {
    for (int i = 0; i < nvars(); ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }
  // Exact quotient; caller guarantees divisibility.
  Monomial quotient(const Monomial& by) const {
    Monomial r = *this;
    for (int i = 0; i < nvars(); ++i) r.e[i] -= by.e[i];
    return r;
  }
  bool coprime(const Monomial& o) const {
    for (int i = 0; i < nvars(); ++i)
      if (e[i] && o.e[i]) return false;
    return true;
  }
  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator!=(const Monomial& o) const { return e != o.e; }
};

Monomial lcm(const Monomial& a, const Monomial& b);

// Graded reverse lexicographic comparison: higher total degree wins; on equal
// degree the monomial with the *smaller* exponent in the last variable where
// they differ is the larger one.  Returns <0, 0, >0 like strcmp.
int grevlex_cmp(const Monomial& a, const Monomial& b);

inline bool grevlex_less(const Monomial& a, const Monomial& b) {
  return grevlex_cmp(a, b) < 0;
}

}  // namespace liaison
