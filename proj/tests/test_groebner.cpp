#include <doctest.h>

#include <random>

#include "liaison/ideal.hpp"

using namespace liaison;

namespace {

RingPtr R4() {
  static RingPtr r = make_ring(32003, {"x", "y", "z", "w"});
  return r;
}

Polynomial P(const RingPtr& r, const std::string& s) {
  return parse_polynomial(r, s);
}

Ideal twisted_cubic() {
  auto r = R4();
  return make_ideal(r, {P(r, "y^2 - x*z"), P(r, "y*z - x*w"),
                        P(r, "z^2 - y*w")});
}

}  // namespace

TEST_CASE("twisted cubic reduced basis") {
  auto r = R4();
  IdealGB G = groebner(twisted_cubic());
  REQUIRE(G.gens.size() == 3);
  // Decreasing leading terms y^2 > y*z > z^2.
  CHECK(to_string(G.gens[0]) == "y^2 + 32002*x*z");
  CHECK(to_string(G.gens[1]) == "y*z + 32002*x*w");
  CHECK(to_string(G.gens[2]) == "z^2 + 32002*y*w");

  // Same basis from a redundant, scrambled generating set.
  Ideal J = make_ideal(
      r, {P(r, "3*y*z - 3*x*w"), P(r, "z^2 - y*w"), P(r, "y^2 - x*z"),
          P(r, "y^3 - x^2*w"), P(r, "y*z^2 - x*z*w")});
  IdealGB GJ = groebner(J);
  CHECK(same_ideal(G, GJ));
}

TEST_CASE("twisted cubic normal forms") {
  auto r = R4();
  IdealGB G = groebner(twisted_cubic());
  CHECK(to_string(normal_form(P(r, "y^3"), G)) == "x^2*w");
  CHECK(to_string(normal_form(P(r, "x*z*w"), G)) == "x*z*w");
  CHECK(to_string(normal_form(P(r, "y^2"), G)) == "x*z");
  CHECK(contains(G, P(r, "y^3 - x^2*w")));
  CHECK_FALSE(contains(G, P(r, "x*z*w")));
  CHECK_FALSE(contains(G, P(r, "x^2 - y*w")));
  // Normal form is idempotent and linear over the field.
  Polynomial f = P(r, "y^4 + x*y*z*w - 3*z^3");
  Polynomial nf = normal_form(f, G);
  CHECK(normal_form(nf, G) == nf);
  CHECK(contains(G, f - nf));
}

TEST_CASE("twisted cubic hilbert data") {
  IdealGB G = groebner(twisted_cubic());
  HilbertSeries h = quotient_series(G);
  CHECK(h.value_at(0) == 1);
  for (int mu = 1; mu <= 10; ++mu) CHECK(h.value_at(mu) == 3 * mu + 1);
  CHECK(dimension(G) == 2);
  CHECK(multiplicity(G) == 3);
}

TEST_CASE("groebner property checks on random ideals") {
  auto r = make_ring(32003, 3);
  std::mt19937 rng(2024);
  auto random_homog = [&](int deg) {
    std::vector<Term> ts;
    for (int a = 0; a <= deg; ++a)
      for (int b = 0; a + b <= deg; ++b) {
        Monomial m(3);
        m.e = {a, b, deg - a - b};
        if (rng() % 3 == 0)
          ts.push_back({static_cast<std::uint32_t>(1 + rng() % 32002), m});
      }
    return Polynomial::from_terms(r, std::move(ts));
  };
  for (int trial = 0; trial < 12; ++trial) {
    std::vector<Polynomial> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(random_homog(2 + (int)(rng() % 2)));
    Ideal I = make_ideal(r, gens);
    IdealGB G = groebner(I);
    // Generators reduce to zero, basis elements are monic with decreasing
    // leading terms, and every S-pair reduces to zero.
    for (const auto& f : I.gens) CHECK(contains(G, f));
    for (size_t i = 0; i < G.gens.size(); ++i) {
      CHECK(G.gens[i].lc() == 1);
      if (i + 1 < G.gens.size())
        CHECK(grevlex_cmp(G.gens[i].lm(), G.gens[i + 1].lm()) > 0);
    }
    const auto& F = r->field;
    for (size_t i = 0; i < G.gens.size(); ++i)
      for (size_t j = i + 1; j < G.gens.size(); ++j) {
        Monomial u = lcm(G.gens[i].lm(), G.gens[j].lm());
        Polynomial s =
            G.gens[i].times_monomial(u.quotient(G.gens[i].lm())) -
            G.gens[j].times_monomial(u.quotient(G.gens[j].lm()));
        (void)F;
        CHECK(normal_form(s, G).is_zero());
      }
    // Groebner basis of the basis reproduces itself.
    CHECK(same_ideal(G, groebner(make_ideal(r, G.gens))));
  }
}

TEST_CASE("two planes meeting at a point") {
  auto r = make_ring(32003, 5);
  Ideal I = make_ideal(r, {P(r, "x0*x2"), P(r, "x0*x3"), P(r, "x1*x2"),
                           P(r, "x1*x3")});
  IdealGB G = groebner(I);
  CHECK(G.gens.size() == 4);  // monomial ideal is its own basis
  HilbertSeries h = quotient_series(G);
  CHECK(h.value_at(0) == 1);
  CHECK(h.value_at(1) == 5);
  CHECK(h.value_at(2) == 11);
  for (int mu = 0; mu <= 8; ++mu)
    CHECK(h.value_at(mu) == (mu + 2) * (mu + 1) - 1);
  CHECK(dimension(G) == 3);
  CHECK(multiplicity(G) == 2);

  // The same ideal as an intersection of the two planes.
  Ideal p1 = make_ideal(r, {P(r, "x0"), P(r, "x1")});
  Ideal p2 = make_ideal(r, {P(r, "x2"), P(r, "x3")});
  Ideal meet = ideal_intersection(p1, p2);
  CHECK(same_ideal(G, groebner(meet)));
}

TEST_CASE("ideal quotient and saturation") {
  auto r = make_ring(32003, 5);
  Ideal I = make_ideal(r, {P(r, "x0*x2"), P(r, "x0*x3"), P(r, "x1*x2"),
                           P(r, "x1*x3")});
  Ideal x0 = make_ideal(r, {P(r, "x0")});
  Ideal q = ideal_quotient(I, x0);
  CHECK(same_ideal(groebner(q),
                   groebner(make_ideal(r, {P(r, "x2"), P(r, "x3")}))));

  // Quotient by a non-zerodivisor leaves a saturated ideal unchanged.
  Ideal q2 = ideal_quotient(I, make_ideal(r, {P(r, "x0 + x2")}));
  CHECK(same_ideal(groebner(q2), groebner(I)));

  CHECK_THROWS_AS(ideal_quotient(I, Ideal{r, {}}), LiaisonError);

  // Saturation strips an irrelevant-primary component.
  auto r2 = make_ring(32003, 2);
  Ideal J = make_ideal(r2, {P(r2, "x0^2"), P(r2, "x0*x1")});
  Ideal Jsat = saturate_irrelevant(J);
  CHECK(same_ideal(groebner(Jsat), groebner(make_ideal(r2, {P(r2, "x0")}))));
  // An irrelevant-primary ideal saturates to the unit ideal.
  Ideal K = make_ideal(r2, {P(r2, "x0^2"), P(r2, "x0*x1"), P(r2, "x1^2")});
  CHECK(groebner(saturate_irrelevant(K)).is_unit_ideal());
  // A saturated ideal is a fixed point.
  Ideal I2 = make_ideal(r, {P(r, "x0*x2")});
  CHECK(same_ideal(groebner(saturate_irrelevant(I2)), groebner(I2)));
}

TEST_CASE("intersection against membership oracle") {
  auto r = make_ring(32003, 4);
  Ideal a = make_ideal(r, {P(r, "x0^2 - x1*x2"), P(r, "x3^2")});
  Ideal b = make_ideal(r, {P(r, "x0*x3"), P(r, "x1 - x2")});
  Ideal meet = ideal_intersection(a, b);
  IdealGB Ga = groebner(a), Gb = groebner(b), Gm = groebner(meet);
  for (const auto& f : meet.gens) {
    CHECK(contains(Ga, f));
    CHECK(contains(Gb, f));
  }
  // Random elements of the intersection land in the computed ideal.
  std::mt19937 rng(7);
  for (int t = 0; t < 20; ++t) {
    // product of one generator from each side is in the intersection
    const Polynomial& fa = a.gens[rng() % a.gens.size()];
    const Polynomial& fb = b.gens[rng() % b.gens.size()];
    CHECK(contains(Gm, fa * fb));
  }
  // Sum/intersection Hilbert identity:
  // HF(A/(a meet b)) = HF(A/a) + HF(A/b) - HF(A/(a+b)).
  IdealGB Gs = groebner(ideal_sum(a, b));
  auto lhs = quotient_series(Gm);
  auto rhs = quotient_series(Ga) + quotient_series(Gb) - quotient_series(Gs);
  CHECK(lhs.equals(rhs));
}

TEST_CASE("exact division") {
  auto r = make_ring(32003, 3);
  Polynomial g = P(r, "x0 + 2*x1");
  Polynomial q = P(r, "x0^2 - x1*x2 + 3*x2^2");
  CHECK(exact_divide(g * q, g) == q);
  CHECK(exact_divide(Polynomial::zero(r), g).is_zero());
  CHECK_THROWS_AS(exact_divide(P(r, "x0"), Polynomial::zero(r)),
                  LiaisonError);
}

TEST_CASE("minimal generators") {
  auto r = make_ring(32003, 3);
  Ideal I = make_ideal(
      r, {P(r, "x0"), P(r, "x0^2"), P(r, "x1"), P(r, "x0 + x1"),
          P(r, "x0*x1 + x2^2")});
  auto min = minimal_generators(I);
  REQUIRE(min.size() == 3);
  CHECK(min[0].degree() == 1);
  CHECK(min[1].degree() == 1);
  CHECK(min[2].degree() == 2);
}

TEST_CASE("unit and zero ideals") {
  auto r = make_ring(32003, 3);
  IdealGB unit = groebner(make_ideal(r, {P(r, "5")}));
  CHECK(unit.is_unit_ideal());
  CHECK(quotient_series(unit).is_zero());
  CHECK(dimension(unit) == kDimMinusInfinity);
  IdealGB zero = groebner(Ideal{r, {}});
  CHECK(zero.is_zero_ideal());
  CHECK(dimension(zero) == 3);
  CHECK(quotient_series(zero).equals(HilbertSeries::free_module({0}, 3)));
}
