#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "liaison/ring.hpp"

namespace liaison {

struct Term {
  std::uint32_t c = 0;  // in [0, p), never 0 in a stored polynomial
  Monomial m;
};

// Homogeneous-capable polynomial over a fixed ring.  Terms are kept sorted in
// strictly decreasing grevlex order with nonzero coefficients, so equality is
// structural and the leading term is terms.front().
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial zero(const RingPtr& ring) { return Polynomial(ring); }
  static Polynomial constant(const RingPtr& ring, long long v);
  static Polynomial monomial(const RingPtr& ring, Monomial m,
                             long long coeff = 1);
  static Polynomial variable(const RingPtr& ring, int i);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  const Term& lt() const;          // leading term
  const Monomial& lm() const;      // leading monomial
  std::uint32_t lc() const;        // leading coefficient

  // Degree of the leading term; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : terms_.front().m.degree(); }
  bool is_homogeneous() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;

  Polynomial scaled(std::uint32_t c) const;            // c * this
  Polynomial times_term(const Term& t) const;          // t * this
  Polynomial times_monomial(const Monomial& m) const;  // m * this
  // this - c * m * o, the reduction workhorse.
  Polynomial reduce_once(std::uint32_t c, const Monomial& m,
                         const Polynomial& o) const;

  Polynomial monic() const;  // scale so lc == 1

  bool operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
      if (terms_[i].c != o.terms_[i].c || terms_[i].m != o.terms_[i].m)
        return false;
    return true;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // Builds from an arbitrary term soup: sorts, merges, drops zeros.
  static Polynomial from_terms(const RingPtr& ring, std::vector<Term> terms);

 private:
  RingPtr ring_;
  std::vector<Term> terms_;

  friend Polynomial merge_scaled(const Polynomial& a, std::uint32_t cb,
                                 const Monomial* mb, const Polynomial& b);
};

// a + cb * mb * b on sorted term lists (mb may be null for the identity).
Polynomial merge_scaled(const Polynomial& a, std::uint32_t cb,
                        const Monomial* mb, const Polynomial& b);

// Total grevlex comparison of polynomials by leading terms then recursively;
// used only for canonical sorting of basis lists (zero sorts first).
bool poly_less(const Polynomial& a, const Polynomial& b);

// Parses "x0^2*x1 + 3*x2^3 - x0*x1*x2" style input.  Accepts optional '*'
// between factors, '^' powers, integer coefficients (reduced mod p), and the
// variable names of the ring.  Throws LiaisonError(ParseError) with a
// position-annotated message on bad input.
Polynomial parse_polynomial(const RingPtr& ring, const std::string& text);

// Canonical form: terms in decreasing grevlex order, coefficients in [1, p),
// explicit '*' and '^', e.g. "x0^2*x1 + 32002*x2^3".  Zero prints as "0".
std::string to_string(const Polynomial& f);
std::string to_string(const RingPtr& ring, const Monomial& m);

}  // namespace liaison
