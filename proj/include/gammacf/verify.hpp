#pragma once

// Brute-force verifiers for the gamma-positivity, continued-fraction and
// bijective identities, the coefficient tables they rest on, and the
// aggregate run used by the command line tool.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "gammacf/poly.hpp"

namespace gammacf {

struct VerifyConfig {
  std::uint64_t max_sn = 400000;        // largest |S_n| a verifier may enumerate
  std::uint64_t max_wreath = 1000000;   // largest |Z_r wr S_n|
  std::uint64_t seed = 0;               // random parameter points
  int points = 20;
  int series_order = 10;

  // Defaults, with the seed taken from GAMMACF_SEED when set.
  static VerifyConfig from_env();
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct VerificationReport {
  std::string identity;
  std::string range;
  bool pass = true;
  // First counterexample; empty when pass.
  std::string witness;
  std::vector<std::string> notes;
  double elapsed_seconds = 0;
};

std::string to_json(const VerificationReport& r);
std::string to_json(const std::vector<VerificationReport>& reports);
// "PASS thm1 (n <= 8) 0.41s", followed by the witness on failure.
std::string report_line(const VerificationReport& r);

// ---------------------------------------------------------------------------
// Coefficient tables.

// gamma_{n,k}(q) = sum over DD_{n,k} of q^{2 res + les}, k = 0..floor((n-1)/2).
std::vector<IntPoly> gamma_q_row(int n);
// sum over DE_{n,k} of q^inv, k = 0..floor(n/2).
std::vector<IntPoly> inv_DE_row(int n);
// gamma_{n,i,j}: fix = i, exc = j, cda = 0; indexed [i][j].
std::vector<std::vector<Integer>> gamma_nij(int n);
// Permutations without double excedance counted by weak excedances, k = 0..n.
std::vector<Integer> gamma2_row(int n);
// Drop-colored permutations (two drop colors) without double excedance,
// counted by weak excedances plus colored drops, k = 0..n.
std::vector<Integer> hatgamma2_row(int n);

struct DerangementPolys {
  IntPoly D;  // fexc distribution
  IntPoly d;  // friends-order excedance distribution
  bool enumerated = true;  // false when taken from the continued fractions
};

// By enumeration when r^n n! fits the budget, otherwise from the
// continued fractions for D and d.
DerangementPolys derangement_polys(int n, int r, const VerifyConfig& cfg);

// name in {gamma_q, inv_DE, gamma2, hatgamma2, D_poly, d_poly}, format in
// {csv, json}. Throws std::invalid_argument on an unknown name or format.
std::string emit_table(const std::string& name, int n_max, int r, const std::string& format);

// ---------------------------------------------------------------------------
// Verifiers. Each checks every size from the smallest meaningful one up to n
// and throws BudgetExceeded if an enumeration would pass the configured cap.

VerificationReport verify_eulerian(int n, const VerifyConfig& cfg);
VerificationReport verify_thm1(int n, const VerifyConfig& cfg);
VerificationReport verify_thm2(int n, const VerifyConfig& cfg);
VerificationReport verify_thm3(int n, int r, const VerifyConfig& cfg);
VerificationReport verify_cor4(int n, int r, const VerifyConfig& cfg);
VerificationReport verify_cor5(int n, const VerifyConfig& cfg);
VerificationReport verify_thm6(int n, int r, const VerifyConfig& cfg);
VerificationReport verify_spiral(int n, int r, const VerifyConfig& cfg);
VerificationReport verify_thm8(int n, const VerifyConfig& cfg);
VerificationReport verify_lemma_a(int n, const VerifyConfig& cfg);
VerificationReport verify_lemmaB(int n, const VerifyConfig& cfg);
VerificationReport verify_eq_pet(int n, const VerifyConfig& cfg);
VerificationReport verify_eq_inv(int n, const VerifyConfig& cfg);
VerificationReport verify_lemma_b_equidist(int n, const VerifyConfig& cfg);
VerificationReport verify_vincular(int n, const VerifyConfig& cfg);
// family in {SZ12_A, B_FULL, DERANGE_D, DERANGE_d, WREATH}; r is ignored by
// the first two.
VerificationReport verify_cf(const std::string& family, int n, int r, const VerifyConfig& cfg);
// Jacobi-Rogers against the path transfer on seeded random families, and the
// n! r^n family for r <= 4.
VerificationReport verify_jr(int n, const VerifyConfig& cfg);
// name in {equiv, DB, ctz09, dn, anbn}; identities checked to the given order.
VerificationReport verify_egf(const std::string& name, int order, int r, const VerifyConfig& cfg);
VerificationReport verify_bijection(int n, int r, const VerifyConfig& cfg);

// Names accepted by run_identity.
std::vector<std::string> identity_names();
// Dispatch by name. Family and series names are written "cf:WREATH" and
// "egf:DB". Throws std::invalid_argument on an unknown name.
VerificationReport run_identity(const std::string& name, int n, int r, const VerifyConfig& cfg);

// The full suite at the default ranges, sorted by identity name.
std::vector<VerificationReport> verify_all(const VerifyConfig& cfg);

}  // namespace gammacf
