#include <doctest.h>

#include <vector>

#include "liaison/duality.hpp"
#include "liaison/ideal.hpp"
#include "liaison/oracle.hpp"

using namespace liaison;

namespace {

Polynomial P(const RingPtr& r, const std::string& s) {
  return parse_polynomial(r, s);
}

std::vector<Polynomial> parse_all(const RingPtr& r,
                                  const std::vector<std::string>& ss) {
  std::vector<Polynomial> out;
  for (const auto& s : ss) out.push_back(P(r, s));
  return out;
}

std::vector<long long> vals(const HilbertSeries& h, int lo, int hi) {
  std::vector<long long> v;
  for (int mu = lo; mu <= hi; ++mu) v.push_back(h.value_at(mu));
  return v;
}

// Every deficiency module of A/I agrees degreewise with the independent
// dense-slice Ext oracle.
void cross_check_deficiencies(const ResolvedModule& M, int lo, int hi) {
  const int n = M.ring()->nvars;
  for (int i = 0; i <= n; ++i) {
    ResolvedModule Di = deficiency_module(M, i);
    for (int mu = lo; mu <= hi; ++mu) {
      CAPTURE(i);
      CAPTURE(mu);
      CHECK(Di.series().value_at(mu) == oracle_ext_hf(M.res, n - i, mu));
    }
  }
}

RingPtr p3() { return make_ring(32003, {"x", "y", "z", "w"}); }
RingPtr p4() { return make_ring(32003, {"x0", "x1", "x2", "x3", "x4"}); }
RingPtr p5() {
  return make_ring(32003, {"x0", "x1", "x2", "x3", "x4", "x5"});
}

ResolvedModule twisted_cubic() {
  auto r = p3();
  return resolve_quotient(
      r, parse_all(r, {"y^2 - x*z", "y*z - x*w", "z^2 - y*w"}));
}

ResolvedModule meeting_planes() {
  auto r = p4();
  return resolve_quotient(
      r, parse_all(r, {"x0*x2", "x0*x3", "x1*x2", "x1*x3"}));
}

ResolvedModule disjoint_planes() {
  auto r = p5();
  std::vector<std::string> gens;
  for (const char* a : {"x0", "x1", "x2"})
    for (const char* b : {"x3", "x4", "x5"})
      gens.push_back(std::string(a) + "*" + b);
  return resolve_quotient(r, parse_all(r, gens));
}

ResolvedModule cone_planes() {
  auto r = p5();
  return resolve_quotient(
      r, parse_all(r, {"x0*x2", "x0*x3", "x1*x2", "x1*x3"}));
}

}  // namespace

TEST_CASE("deficiency modules of the twisted cubic") {
  ResolvedModule M = twisted_cubic();
  CHECK(M.dim() == 2);

  CHECK(deficiency_module(M, 0).is_zero());
  CHECK(deficiency_module(M, 1).is_zero());
  CHECK(deficiency_module(M, 3).is_zero());
  CHECK(deficiency_module(M, -1).is_zero());
  CHECK(deficiency_module(M, 7).is_zero());

  ResolvedModule W = canonical_module(M);
  CHECK_FALSE(W.is_zero());
  CHECK(W.dim() == 2);
  // HF(w, mu) = 3 mu - 1 for mu >= 1.
  CHECK(vals(W.series(), -1, 5) ==
        std::vector<long long>{0, 0, 2, 5, 8, 11, 14});
  auto winv = W.invariants();
  CHECK(winv.cohen_macaulay);
  CHECK(winv.depth == 2);

  // Biduality: the canonical module of the canonical module is M again.
  ResolvedModule WW = deficiency_module(W, 2);
  CHECK(WW.series().equals(M.series()));

  // H^2_m(M) is the graded dual of the canonical module.
  HilbertSeries h2 = local_cohomology_series(M, 2);
  CHECK(h2.value_at(-1) == 2);
  CHECK(h2.value_at(-4) == 11);
  CHECK(h2.value_at(0) == 0);

  cross_check_deficiencies(M, -6, 6);
}

TEST_CASE("deficiency modules of a pair of planes meeting in a point") {
  ResolvedModule M = meeting_planes();
  CHECK(M.dim() == 3);
  CHECK(M.invariants().depth == 2);

  CHECK(deficiency_module(M, 0).is_zero());
  CHECK(deficiency_module(M, 1).is_zero());

  // D_2 = k[x4] shifted: HF = 1 in degrees >= 1.
  ResolvedModule D2 = deficiency_module(M, 2);
  CHECK(D2.dim() == 1);
  CHECK(vals(D2.series(), -1, 4) ==
        std::vector<long long>{0, 0, 1, 1, 1, 1});

  // w = R_1(-3) + R_2(-3): HF(w, mu) = 2 C(mu - 1, 2).
  ResolvedModule W = deficiency_module(M, 3);
  CHECK(vals(W.series(), 2, 6) == std::vector<long long>{0, 2, 6, 12, 20});
  CHECK(W.invariants().cohen_macaulay);

  // Iterated deficiencies of D_2.
  CHECK(iterated_deficiency(M, {0, 2}).is_zero());
  ResolvedModule D12 = iterated_deficiency(M, {1, 2});
  CHECK(vals(D12.series(), -1, 3) == std::vector<long long>{0, 1, 1, 1, 1});

  cross_check_deficiencies(M, -4, 5);
}

TEST_CASE("gamma of a non-saturated ideal and of a point") {
  auto r = make_ring(32003, {"x", "y"});
  // <x^2, x y> saturates to <x>.
  ResolvedModule sat = gamma_saturation(r, parse_all(r, {"x^2", "x*y"}));
  CHECK(vals(sat.series(), -1, 3) == std::vector<long long>{0, 1, 1, 1, 1});

  // The section module of the point x = 0 in P^1 is k[y, 1/y]: its Hilbert
  // function is 1 in every degree, unlike the saturated quotient k[y].
  ResolvedModule M = resolve_quotient(r, parse_all(r, {"x^2", "x*y"}));
  HilbertSum g = gamma_series(M);
  for (int mu = -5; mu <= 5; ++mu) CHECK(g.value_at(mu) == 1);

  // dim 0 quotient saturates to zero.
  ResolvedModule pt =
      gamma_saturation(r, parse_all(r, {"x^2", "x*y", "y^2"}));
  CHECK(pt.is_zero());
}

TEST_CASE("gamma bookkeeping for depth >= 2 collapses to the module") {
  ResolvedModule M = meeting_planes();
  HilbertSum g = gamma_series(M);
  for (int mu = -4; mu <= 6; ++mu)
    CHECK(g.value_at(mu) == M.series().value_at(mu));
  auto mat = g.materialize();
  REQUIRE(mat.has_value());
  CHECK(mat->equals(M.series()));
}

TEST_CASE("gamma of disjoint planes gains the separating section") {
  ResolvedModule M = disjoint_planes();
  CHECK(M.dim() == 3);
  CHECK(M.invariants().depth == 1);

  ResolvedModule D1 = deficiency_module(M, 1);
  CHECK(vals(D1.series(), -2, 2) == std::vector<long long>{0, 0, 1, 0, 0});
  CHECK(deficiency_module(M, 2).is_zero());

  // Gamma = R_1 + R_2: HF = 2 C(mu + 2, 2) for mu >= 0 (2 at mu = 0).
  HilbertSum g = gamma_series(M);
  CHECK(g.value_at(-1) == 0);
  CHECK(g.value_at(0) == 2);
  CHECK(g.value_at(1) == 6);
  CHECK(g.value_at(3) == 20);
}

TEST_CASE("deficiency diagram classifications") {
  SUBCASE("arithmetically Cohen-Macaulay curve") {
    DeficiencyDiagram dg = deficiency_diagram(twisted_cubic());
    CHECK(dg.dim == 2);
    CHECK(dg.depth_class == 2);
    CHECK(dg.cm_codim == 2);
    CHECK(dg.s_module == 2);
    CHECK(dg.sheaf_s(1));
    CHECK(dg.sheaf_s(3));
  }
  SUBCASE("planes meeting in a point") {
    DeficiencyDiagram dg = deficiency_diagram(meeting_planes());
    CHECK(dg.dim == 3);
    CHECK(dg.depth_class == 2);
    CHECK(dg.cm_codim == 1);
    CHECK(dg.s_module == 1);
    CHECK(dg.sheaf_s(1));
    CHECK_FALSE(dg.sheaf_s(2));
    auto bad = dg.sheaf_s_witness(2);
    REQUIRE(bad.has_value());
    CHECK(bad->first == 2);
    CHECK(bad->second == 1);
  }
  SUBCASE("disjoint planes: locally CM, globally not S_2") {
    DeficiencyDiagram dg = deficiency_diagram(disjoint_planes());
    CHECK(dg.dim == 3);
    CHECK(dg.depth_class == 1);
    CHECK(dg.cm_codim == 2);
    CHECK(dg.s_module == 1);
    CHECK(dg.sheaf_s(2));
    CHECK(dg.sheaf_s(5));
  }
}

TEST_CASE("mixed-dimension quotient is rejected by the diagram gate") {
  auto r = p3();
  // <x> meet <y, z>^2: a plane plus an embedded-free double line of smaller
  // dimension.
  ResolvedModule M =
      resolve_quotient(r, parse_all(r, {"x*y^2", "x*y*z", "x*z^2"}));
  CHECK_FALSE(is_unmixed_s1(M));
  CHECK_THROWS_AS(deficiency_diagram(M), LiaisonError);
  try {
    deficiency_diagram(M);
  } catch (const LiaisonError& e) {
    CHECK(e.code() == ErrorCode::NotEquidimensional);
  }

  auto checks = check_s_ell_duality(M, 2, Window{});
  REQUIRE(checks.size() == 1);
  CHECK(checks[0].check_id == "s_ell.gate");
  CHECK(checks[0].status == CheckStatus::PreconditionFailed);
}

TEST_CASE("biduality Euler characteristic recovers the Hilbert function") {
  Window w{-8, 8};
  for (ResolvedModule M :
       {twisted_cubic(), meeting_planes(), disjoint_planes(),
        cone_planes()}) {
    auto checks = check_biduality_euler(M, w);
    REQUIRE(checks.size() == 1);
    CAPTURE(checks[0].note);
    CHECK(checks[0].status == CheckStatus::Pass);
  }
  // The free module A itself.
  ResolvedModule A = resolve_quotient(p3(), {});
  auto checks = check_biduality_euler(A, w);
  CHECK(checks[0].status == CheckStatus::Pass);
}

TEST_CASE("threefold duality on the meeting planes") {
  auto checks = check_duality_d3(meeting_planes(), Window{});
  REQUIRE(checks.size() == 2);
  CHECK(checks[0].check_id == "duality3.socle");
  CHECK(checks[0].status == CheckStatus::Pass);
  CHECK(checks[1].check_id == "duality3.sequence");
  CHECK(checks[1].status == CheckStatus::Pass);
}

TEST_CASE("threefold duality on the disjoint planes") {
  auto checks = check_duality_d3(disjoint_planes(), Window{});
  REQUIRE(checks.size() == 2);
  CHECK(checks[0].status == CheckStatus::Pass);
  CHECK(checks[1].status == CheckStatus::Pass);
}

TEST_CASE("threefold duality rejects wrong dimensions") {
  CHECK_THROWS_AS(check_duality_d3(twisted_cubic(), Window{}), LiaisonError);
}

TEST_CASE("fourfold duality on the cone over the meeting planes") {
  ResolvedModule M = cone_planes();
  CHECK(M.dim() == 4);

  // The cone transports the plane-pair deficiency up one step:
  // D_3 = k[x4, x5](-2), everything below vanishes.
  CHECK(deficiency_module(M, 1).is_zero());
  CHECK(deficiency_module(M, 2).is_zero());
  ResolvedModule D3 = deficiency_module(M, 3);
  CHECK(vals(D3.series(), 1, 5) == std::vector<long long>{0, 1, 2, 3, 4});
  ResolvedModule D23 = iterated_deficiency(M, {2, 3});
  CHECK(vals(D23.series(), -1, 3) == std::vector<long long>{0, 1, 2, 3, 4});

  auto checks = check_duality_d4(M, Window{});
  REQUIRE(checks.size() == 2);
  CHECK(checks[0].check_id == "duality4.socle");
  CHECK(checks[0].status == CheckStatus::Pass);
  CHECK(checks[1].check_id == "duality4.euler");
  CHECK(checks[1].status == CheckStatus::Pass);

  cross_check_deficiencies(M, -2, 4);
}

TEST_CASE("Serre-condition duality") {
  SUBCASE("meeting planes fail sheaf S_2 with a named witness") {
    auto checks = check_s_ell_duality(meeting_planes(), 2, Window{});
    REQUIRE(checks.size() == 1);
    CHECK(checks[0].status == CheckStatus::PreconditionFailed);
    CHECK(checks[0].note.find("H^1 of D_2") != std::string::npos);
  }
  SUBCASE("meeting planes at level 1") {
    auto checks = check_s_ell_duality(meeting_planes(), 1, Window{});
    REQUIRE(checks.size() == 2);
    CHECK(checks[0].check_id == "s_ell.gate");
    CHECK(checks[0].status == CheckStatus::Pass);
    CHECK(checks[1].check_id == "s_ell.injection");
    CHECK(checks[1].status == CheckStatus::Pass);
  }
  SUBCASE("disjoint planes pass sheaf S_2 and the gamma identity") {
    auto checks = check_s_ell_duality(disjoint_planes(), 2, Window{});
    REQUIRE(checks.size() == 3);
    CHECK(checks[0].check_id == "s_ell.gate");
    CHECK(checks[0].status == CheckStatus::Pass);
    CHECK(checks[1].check_id == "s_ell.surjection");
    CHECK(checks[1].status == CheckStatus::Pass);
    CHECK(checks[2].check_id == "s_ell.gamma");
    CHECK(checks[2].status == CheckStatus::Pass);
  }
  SUBCASE("Cohen-Macaulay curve passes every level") {
    auto checks = check_s_ell_duality(twisted_cubic(), 3, Window{});
    for (const auto& c : checks) {
      CAPTURE(c.check_id);
      CHECK(c.status == CheckStatus::Pass);
    }
  }
}

TEST_CASE("generalized Serre duality") {
  SUBCASE("meeting planes carry finite-length lower deficiencies") {
    auto checks =
        check_generalized_serre_duality(meeting_planes(), Window{});
    REQUIRE(checks.size() == 3);
    CHECK(checks[0].check_id == "serre_general.gate");
    CHECK(checks[0].status == CheckStatus::Pass);
    CHECK(checks[0].note.find("finite-length") != std::string::npos);
    CHECK(checks[1].check_id == "serre_general.socle");
    CHECK(checks[1].status == CheckStatus::Pass);
    CHECK(checks[2].check_id == "serre_general.sequence");
    CHECK(checks[2].status == CheckStatus::Pass);
  }
  SUBCASE("disjoint planes") {
    auto checks =
        check_generalized_serre_duality(disjoint_planes(), Window{});
    for (const auto& c : checks) {
      CAPTURE(c.check_id);
      CHECK(c.status == CheckStatus::Pass);
    }
  }
  SUBCASE("cone over the meeting planes") {
    auto checks = check_generalized_serre_duality(cone_planes(), Window{});
    for (const auto& c : checks) {
      CAPTURE(c.check_id);
      CHECK(c.status == CheckStatus::Pass);
    }
  }
}

TEST_CASE("hf_identity reports a witness degree on failure") {
  auto r = make_ring(32003, {"x", "y"});
  ResolvedModule ky = resolve_quotient(r, parse_all(r, {"x"}));
  HilbertSum lhs(ky.series());
  HilbertSum rhs;
  rhs.add(1, ky.series(), 1, -1);  // shifted copy
  CheckReport rep = hf_identity("t", lhs, rhs, Window{-3, 3});
  CHECK(rep.status == CheckStatus::Fail);
  REQUIRE(rep.witness_degree.has_value());
  CHECK(*rep.witness_degree == 0);
  CHECK(*rep.lhs == 1);
  CHECK(*rep.rhs == 0);
}

TEST_CASE("canonical module of the zero module is rejected") {
  auto r = make_ring(32003, {"x", "y"});
  ResolvedModule z = zero_module(r);
  CHECK_THROWS_AS(canonical_module(z), LiaisonError);
  CHECK(deficiency_module(z, 1).is_zero());
}
