#include "doctest.h"
#include "gammacf/colored.hpp"
#include "gammacf/verify.hpp"
#include "helpers.hpp"

using namespace gammacf;
using gammacf::testing::V;

namespace {

bool has_note_containing(const VerificationReport& r, const std::string& needle) {
  for (const auto& n : r.notes)
    if (n.find(needle) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("coefficient tables") {
  CHECK(gamma2_row(6) == V({0, 1, 53, 184, 95, 15, 1}));
  CHECK(hatgamma2_row(6) == V({0, 1, 63, 648, 2551, 4379, 2763}));
  CHECK(hatgamma2_row(4) == V({0, 1, 15, 54, 57}));
  const std::vector<IntPoly> g = gamma_q_row(4);
  REQUIRE(g.size() == 2);
  CHECK(g[0] == IntPoly(1));
  const std::vector<std::vector<Integer>> nij = gamma_nij(2);
  CHECK(nij[1][0] == 0);
  CHECK(nij[0][1] == 1);
  CHECK(nij[2][0] == 1);
}

TEST_CASE("derangement polynomials agree between enumeration and continued fraction") {
  VerifyConfig cfg;
  const DerangementPolys small = derangement_polys(4, 2, cfg);
  CHECK(small.enumerated);
  CHECK(small.D.coeffs() == V({0, 1, 15, 57, 87, 57, 15, 1}));
  cfg.max_wreath = 10;
  const DerangementPolys big = derangement_polys(4, 2, cfg);
  CHECK_FALSE(big.enumerated);
  CHECK(big.D == small.D);
  CHECK(big.d == small.d);
}

TEST_CASE("tables render as csv and json") {
  const std::string csv = emit_table("gamma2", 6, 1, "csv");
  CHECK(csv.rfind("n,k0,k1", 0) == 0);
  CHECK(csv.find("\n6,0,1,53,184,95,15,1\n") != std::string::npos);
  const std::string js = emit_table("D_poly", 2, 2, "json");
  CHECK(js.find("\"table\":\"D_poly\"") != std::string::npos);
  CHECK(js.find("{\"n\":2,\"values\":[0,1,3,1,0]}") != std::string::npos);
  CHECK_THROWS_AS(emit_table("nope", 3, 1, "csv"), std::invalid_argument);
  CHECK_THROWS_AS(emit_table("gamma2", 3, 1, "xml"), std::invalid_argument);
}

TEST_CASE("type A identities") {
  const VerifyConfig cfg;
  CHECK(verify_eulerian(6, cfg).pass);
  CHECK(verify_thm1(6, cfg).pass);
  CHECK(verify_thm2(4, cfg).pass);
  CHECK(verify_eq_inv(6, cfg).pass);
  CHECK(verify_lemma_b_equidist(6, cfg).pass);
  CHECK(verify_vincular(6, cfg).pass);
  CHECK(verify_lemma_a(5, cfg).pass);
  CHECK(verify_lemmaB(5, cfg).pass);
}

TEST_CASE("colored identities") {
  const VerifyConfig cfg;
  const VerificationReport t6 = verify_thm6(4, 2, cfg);
  CHECK(t6.pass);
  CHECK(has_note_containing(t6, "144 = 57 + 87"));
  const VerificationReport t8 = verify_thm8(4, cfg);
  CHECK(t8.pass);
  CHECK(has_note_containing(t8, "(0,1,15,54,57)"));
  CHECK(verify_cor4(4, 3, cfg).pass);
  CHECK(verify_cor5(5, cfg).pass);
  CHECK(verify_spiral(12, 2, cfg).pass);
  CHECK(verify_eq_pet(5, cfg).pass);
}

TEST_CASE("positivity clause for gamma_{n,i,j} fails at n = 2") {
  const VerificationReport r = verify_thm3(3, 2, VerifyConfig{});
  CHECK_FALSE(r.pass);
  CHECK(r.witness.find("gamma_{2,1,0}") != std::string::npos);
  CHECK(has_note_containing(r, "both expansions hold"));
  CHECK(has_note_containing(r, "(i,j) = (n,0): holds"));
}

TEST_CASE("continued fractions and series") {
  const VerifyConfig cfg;
  CHECK(verify_cf("SZ12_A", 5, 1, cfg).pass);
  CHECK(verify_cf("B_FULL", 5, 1, cfg).pass);
  CHECK(verify_cf("DERANGE_D", 4, 3, cfg).pass);
  CHECK(verify_cf("DERANGE_d", 4, 3, cfg).pass);
  CHECK(verify_cf("WREATH", 3, 2, cfg).pass);
  CHECK(verify_jr(8, cfg).pass);
  for (const char* e : {"DB", "ctz09", "dn", "anbn"})
    for (int r = 1; r <= 3; ++r) CHECK(verify_egf(e, 8, r, cfg).pass);
  CHECK(verify_egf("equiv", 8, 2, cfg).pass);
  CHECK_THROWS_AS(verify_cf("nope", 3, 1, cfg), std::invalid_argument);
}

TEST_CASE("bijection") {
  CHECK(verify_bijection(4, 2, VerifyConfig{}).pass);
  const VerificationReport r = verify_bijection(3, 3, VerifyConfig{});
  CHECK(r.pass);
}

TEST_CASE("budgets and dispatch") {
  VerifyConfig cfg;
  cfg.max_sn = 100;
  CHECK_THROWS_AS(verify_thm1(6, cfg), BudgetExceeded);
  CHECK(run_identity("thm2", 4, 1, VerifyConfig{}).identity == "thm2");
  CHECK(run_identity("cf:DERANGE_D", 3, 2, VerifyConfig{}).identity == "cf:DERANGE_D");
  CHECK_THROWS_AS(run_identity("nope", 3, 1, VerifyConfig{}), std::invalid_argument);
  for (const std::string& n : identity_names()) CHECK_NOTHROW(run_identity(n, 3, 2, VerifyConfig{}));
}

TEST_CASE("report formatting") {
  VerificationReport r;
  r.identity = "thm2";
  r.range = "1 <= n <= 4";
  r.notes = {"ok"};
  CHECK(report_line(r).rfind("PASS thm2 (1 <= n <= 4)", 0) == 0);
  CHECK(to_json(r).find("\"status\":\"pass\"") != std::string::npos);
  r.pass = false;
  r.witness = "w";
  CHECK(to_json(r).find("\"witness\":\"w\"") != std::string::npos);
  CHECK(to_json(std::vector<VerificationReport>{r}).find("\"failures\": 1") != std::string::npos);
}
