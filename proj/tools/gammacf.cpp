#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gammacf/cfrac.hpp"
#include "gammacf/colored.hpp"
#include "gammacf/expand.hpp"
#include "gammacf/laguerre.hpp"
#include "gammacf/perm.hpp"
#include "gammacf/verify.hpp"
#include "json.hpp"

using namespace gammacf;
using nlohmann::ordered_json;

namespace {

std::vector<Integer> parse_int_list(const std::string& text) {
  std::vector<Integer> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const auto b = tok.find_first_not_of(" \t");
    const auto e = tok.find_last_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("empty entry in list '" + text + "'");
    Integer v;
    if (v.set_str(tok.substr(b, e - b + 1), 10) != 0) throw std::invalid_argument("not an integer: '" + tok + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

bool looks_colored(const std::string& text) {
  return text.find('^') != std::string::npos || text.find('-') != std::string::npos;
}

int cmd_stats(const std::string& perm, int r) {
  ordered_json j;
  if (r > 1 || looks_colored(perm)) {
    const int radix = r > 0 ? r : 2;
    const ColoredPermutation s = ColoredPermutation::parse(perm, radix);
    const ColoredStats st = colored_stats(s);
    const BExcedanceStats b = b_excedance_stats(s);
    j["perm"] = s.to_string();
    j["r"] = radix;
    j["exc"] = st.exc_friends;
    j["fexc"] = st.fexc;
    j["exca"] = st.exca;
    j["wexa"] = st.wexa;
    j["wexc"] = st.wexc;
    j["fixa"] = st.fixa;
    j["fixc"] = st.fixc;
    j["dropa"] = st.dropa;
    j["dropc"] = st.dropc;
    j["csum"] = st.csum;
    j["csumw"] = st.csumw;
    j["csumd"] = st.csumd;
    j["cros"] = cros_colored(s);
    j["derangement"] = is_colored_derangement(s);
    if (radix == 2) {
      j["exc_B"] = b.exc_B;
      j["des_B"] = b.des_B;
    }
  } else {
    const Permutation p = Permutation::parse(perm);
    const LinearStats ls = linear_stats(p);
    const CrossingStats cs = crossing_stats(p);
    const CyclicStats cy = cyclic_stats(p);
    const PatternStats ps = pattern_stats(p);
    const VincularCounts vc = vincular_counts(p);
    j["perm"] = p.to_string();
    j["des"] = ls.des;
    j["maj"] = ls.maj;
    j["inv"] = ls.inv;
    j["exc"] = ls.exc;
    j["drop"] = ls.drop;
    j["fix"] = ls.fix;
    j["wex"] = ls.wex;
    j["cros"] = cs.cros;
    j["nest"] = cs.nest;
    j["cpeak"] = cy.cpeak;
    j["cvalley"] = cy.cvalley;
    j["cda"] = cy.cda;
    j["cdd"] = cy.cdd;
    j["res"] = ps.res;
    j["res2"] = ps.res2;
    j["les"] = ps.les;
    j["les2"] = ps.les2;
    j["fmax"] = fmax(p);
    j["p132"] = vc.p132;
    j["p231"] = vc.p231;
    const std::pair<const char*, BoundaryConvention> convs[] = {{"pad_zero_zero", BoundaryConvention::PadZeroZero},
                                                                {"pad_zero_np1", BoundaryConvention::PadZeroNp1}};
    for (const auto& [name, conv] : convs) {
      const BoundaryStats bs = boundary_stats(p, conv);
      j[name] = {{"peak", bs.peak}, {"valley", bs.valley}, {"da", bs.da}, {"dd", bs.dd}};
    }
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_verify(bool all, const std::string& identity, int n, int r, bool json, std::uint64_t budget) {
  VerifyConfig cfg = VerifyConfig::from_env();
  if (budget > 0) {
    cfg.max_sn = budget;
    cfg.max_wreath = budget;
  }
  std::vector<VerificationReport> reports;
  if (all) {
    reports = verify_all(cfg);
  } else {
    if (identity.empty()) throw CLI::ValidationError("verify", "either --all or --identity is required");
    reports.push_back(run_identity(identity, n, r, cfg));
  }
  std::size_t failures = 0;
  for (const auto& rep : reports) failures += !rep.pass;
  if (json) {
    std::cout << to_json(reports) << "\n";
  } else {
    for (const auto& rep : reports) std::cout << report_line(rep) << "\n";
    std::cout << reports.size() - failures << " passed, " << failures << " failed\n";
  }
  return failures == 0 ? 0 : 1;
}

int cmd_expand(const std::string& coeffs, const std::string& basis, int d) {
  const IntPoly p(parse_int_list(coeffs));
  ordered_json j;
  j["basis"] = basis;
  j["d"] = d;
  if (basis == "gamma") {
    const GammaVector<Integer> g = gamma_expand(p, static_cast<unsigned>(d));
    j["gammas"] = ordered_json::parse(json_int_array(g.gammas));
  } else if (basis == "sz") {
    j["coeffs"] = ordered_json::parse(json_int_array(expand_SZ_basis(p, static_cast<unsigned>(d))));
  } else {
    throw CLI::ValidationError("--basis", "must be gamma or sz");
  }
  std::cout << j.dump() << "\n";
  return 0;
}

int cmd_cfrac(const std::string& family, int r, int order, const std::string& custom_b, const std::string& custom_lam) {
  if (order < 0) throw CLI::ValidationError("--order", "must be non-negative");
  const std::size_t N = static_cast<std::size_t>(order);
  const std::size_t H = height_for_order(N);
  std::vector<std::string> out;
  if (!custom_b.empty() || !custom_lam.empty()) {
    JFraction<Integer> jf;
    jf.b = parse_int_list(custom_b.empty() ? "0" : custom_b);
    if (!custom_lam.empty()) jf.lam = parse_int_list(custom_lam);
    if (jf.b.size() < jf_b_needed(N) || jf.lam.size() < jf_lam_needed(N))
      throw CLI::ValidationError("cfrac", "order " + std::to_string(order) + " needs " + std::to_string(jf_b_needed(N)) +
                                              " b values and " + std::to_string(jf_lam_needed(N)) + " lambda values");
    std::cout << json_int_array(jf_moments(jf, N)) << "\n";
    return 0;
  }
  if (family == "derange-D" || family == "derange-d") {
    const IntPoly t = IntPoly::var();
    const CFFamily<IntPoly> fam = family == "derange-D" ? CFFamily<IntPoly>(DerangeDParams<IntPoly>{r, t})
                                                        : CFFamily<IntPoly>(DerangeSmallDParams<IntPoly>{r, t});
    for (const IntPoly& m : family_moments(fam, N)) out.push_back(to_json(m, "t"));
  } else if (family == "b-exc") {
    for (const IntPoly& m : jf_moments(b_exc_jfraction(H), N)) out.push_back(to_json(m, "t"));
  } else if (family == "r-euler") {
    std::cout << json_int_array(jf_moments(r_euler_jfraction(r, H), N)) << "\n";
    return 0;
  } else {
    throw CLI::ValidationError("--family", "unknown family '" + family + "' (derange-D, derange-d, b-exc, r-euler)");
  }
  std::cout << "[";
  for (std::size_t i = 0; i < out.size(); ++i) std::cout << (i ? "," : "") << out[i];
  std::cout << "]\n";
  return 0;
}

int cmd_bijection(int r, const std::string& perm, bool invert, const std::string& history_file, bool ascii) {
  if (invert) {
    std::ifstream in(history_file);
    if (!in) throw std::runtime_error("cannot read " + history_file);
    std::stringstream buf;
    buf << in.rdbuf();
    const LaguerreHistory h = history_from_json(buf.str());
    std::cout << phi_inverse(h).to_string() << "\n";
    return 0;
  }
  if (perm.empty()) throw CLI::ValidationError("bijection", "--perm is required unless --invert is given");
  const ColoredPermutation s = ColoredPermutation::parse(perm, r);
  const LaguerreHistory h = phi(s);
  std::cout << to_json(h) << "\n";
  std::cout << format_weight(history_weight(h, symbolic_weight_params())) << "\n";
  if (ascii) std::cout << ascii_dump(h);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Permutation statistics, gamma expansions, continued fractions and identity checks"};
  app.require_subcommand(1);

  std::string perm;
  int r = 1;
  auto* stats = app.add_subcommand("stats", "Statistics of a permutation or colored permutation");
  stats->add_option("--perm", perm, "Space-separated values, colored tokens as v^c")->required();
  stats->add_option("--r", r, "Number of colors");

  std::string table_name, table_format = "csv";
  int n = 0;
  auto* table = app.add_subcommand("table", "Coefficient tables");
  table->add_option("--name", table_name, "gamma_q, inv_DE, gamma2, hatgamma2, D_poly or d_poly")->required();
  table->add_option("--n", n, "Largest n")->required();
  table->add_option("--r", r, "Number of colors (D_poly, d_poly)");
  table->add_option("--format", table_format, "csv or json");

  std::string identity;
  bool all = false, json = false;
  std::uint64_t budget = 0;
  auto* verify = app.add_subcommand("verify", "Check identities by enumeration");
  verify->add_option("--identity", identity, "Identity name, e.g. thm1, cf:WREATH, egf:DB");
  verify->add_option("--n", n, "Largest size (series order for egf:*)");
  verify->add_option("--r", r, "Number of colors");
  verify->add_flag("--all", all, "Run the full suite at default ranges");
  verify->add_flag("--json", json, "JSON report");
  verify->add_option("--budget,--max-cardinality", budget, "Cap on the number of enumerated elements");
  verify->add_flag_callback("--list", [] {
    for (const auto& name : identity_names()) std::cout << name << "\n";
    std::exit(0);
  }, "List identity names");

  std::string coeffs, basis = "gamma";
  int d = 0;
  auto* expand = app.add_subcommand("expand", "Expand a polynomial in the gamma or t^k(1+t^2)^(n-k) basis");
  expand->add_option("--coeffs", coeffs, "c0,c1,...")->required();
  expand->add_option("--basis", basis, "gamma or sz");
  expand->add_option("--d", d, "Degree of symmetry (gamma) or n (sz)")->required();

  std::string family, custom_b, custom_lam;
  int order = 8;
  auto* cfrac = app.add_subcommand("cfrac", "Moments of a Jacobi continued fraction");
  cfrac->add_option("--family", family, "derange-D, derange-d, b-exc or r-euler");
  cfrac->add_option("--r", r, "Number of colors");
  cfrac->add_option("--order", order, "Largest moment index");
  cfrac->add_option("--custom-b", custom_b, "b_0,b_1,... (integers)");
  cfrac->add_option("--custom-lam", custom_lam, "lambda_1,lambda_2,... (integers)");

  bool invert = false, ascii = false;
  std::string history_file;
  auto* bij = app.add_subcommand("bijection", "Colored permutation to Laguerre history and back");
  bij->add_option("--r", r, "Number of colors");
  bij->add_option("--perm", perm, "Colored permutation, e.g. \"4 7^1 2 5^1 1^2 6 3\"");
  bij->add_flag("--invert", invert, "Read a history and print its preimage");
  bij->add_option("--history", history_file, "History JSON file for --invert");
  bij->add_flag("--ascii", ascii, "Also print the path step by step");

  CLI11_PARSE(app, argc, argv);

  try {
    if (r < 1) throw CLI::ValidationError("--r", "must be at least 1");
    if (*stats) return cmd_stats(perm, stats->count("--r") ? r : 0);
    if (*table) {
      std::cout << emit_table(table_name, n, r, table_format);
      return 0;
    }
    if (*verify) return cmd_verify(all, identity, n, r, json, budget);
    if (*expand) return cmd_expand(coeffs, basis, d);
    if (*cfrac) return cmd_cfrac(family, r, order, custom_b, custom_lam);
    if (*bij) return cmd_bijection(r, perm, invert, history_file, ascii);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
