// Command-line front end: every computation of the library behind one binary,
// emitting deterministic JSON/CSV. Exit codes: 0 success, 1 check failure,
// 2 bad command/flags, 3 IO failure.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "spin7spec/report.hpp"

namespace fs = std::filesystem;
using namespace spin7spec;

namespace {

struct OutputSink {
  std::string path;  // empty = stdout

  int write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return 0;
    }
    fs::path p = path;
    if (const char* dir = std::getenv("SPIN7SPEC_OUTPUT_DIR"); dir && p.is_relative())
      p = fs::path(dir) / p;
    std::ofstream f(p);
    if (!f) {
      std::cerr << "cannot open output file " << p << "\n";
      return 3;
    }
    f << text;
    return f.good() ? 0 : 3;
  }
};

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Spin7Weight parse_weight(const std::string& s) {
  Spin7Weight w;
  if (std::sscanf(s.c_str(), "%d,%d,%d", &w.a, &w.b, &w.c) != 3 || w.a < 0 || w.b < 0 || w.c < 0)
    throw CLI::ValidationError("--rep expects a,b,c with nonnegative integers");
  return w;
}

std::pair<double, double> parse_window(const std::string& s) {
  double lo, hi;
  if (std::sscanf(s.c_str(), "%lf,%lf", &lo, &hi) != 2 || lo > hi)
    throw CLI::ValidationError("--window expects lo,hi with lo <= hi");
  return {lo, hi};
}

// ---------------------------------------------------------------------------

Json run_identities() {
  Json checks = Json::array();
  auto add = [&](const std::string& name, bool pass) {
    checks.push_back(Json{{"name", name}, {"pass", pass}});
  };
  const Multivector &phi = phi7(), &psi = psi7();

  bool ok = true;
  for (int a = 1; a <= 7 && ok; ++a) {
    Multivector u = Multivector::basis(7, {a});
    ok = ok && contract(contract(u, phi), phi) == rat(3) * u;
    ok = ok && contract(contract(u, psi), psi) == rat(-4) * u;
    ok = ok && contract(contract(u, phi), psi) == rat(2) * contract(u, phi);
    ok = ok && contract(contract(u, psi), phi).is_zero();
    ok = ok && hodge(wedge(psi, u)) == contract(u, phi);
    ok = ok && hodge(wedge(phi, u)) == contract(u, psi);
    ok = ok && wedge(phi, contract(u, phi)) == rat(2) * wedge(psi, u);
  }
  add("one-form contraction identities", ok);

  ok = true;
  for (int a = 1; a <= 7 && ok; ++a)
    for (int b = 1; b <= 7 && ok; ++b)
      ok = hodge(wedge(phi, wedge(Multivector::basis(7, {a}), Multivector::basis(7, {b})))) ==
           contract(Multivector::basis(7, {b}), contract(Multivector::basis(7, {a}), psi));
  add("star(phi^u^v) = v.(u.psi)", ok);

  ok = true;
  for (Mask m : form_basis(2, 7)) {
    Multivector w = Multivector::from_mask(7, m, rat(1));
    ok = ok && contract(contract(w, phi), phi) == w + hodge(wedge(phi, w));
    ok = ok && contract(contract(w, psi), psi) == rat(2) * w + hodge(wedge(phi, w));
  }
  add("two-form contraction identities", ok);

  add("phi ^ psi = 7 vol", wedge(phi, psi) == rat(7) * vol7());

  auto d = [](int i, int j) { return Rational(i == j ? 1 : 0); };
  ok = true;
  for (int i = 1; i <= 7 && ok; ++i)
    for (int j = 1; j <= 7 && ok; ++j)
      for (int a = 1; a <= 7 && ok; ++a)
        for (int b = 1; b <= 7 && ok; ++b) {
          Rational s1 = 0, s3 = 0;
          for (int k = 1; k <= 7; ++k) s1 += phi_abc(i, j, k) * phi_abc(a, b, k);
          ok = ok && s1 == d(i, a) * d(j, b) - d(i, b) * d(j, a) + psi_abcd(i, j, a, b);
          for (int k = 1; k <= 7; ++k)
            for (int l = 1; l <= 7; ++l) s3 += psi_abcd(i, j, k, l) * psi_abcd(a, b, k, l);
          ok = ok && s3 == rat(4) * d(i, a) * d(j, b) - rat(4) * d(i, b) * d(j, a) +
                               rat(2) * psi_abcd(i, j, a, b);
        }
  add("phi phi and psi psi contractions", ok);

  ok = true;
  for (int i = 1; i <= 7 && ok; ++i)
    for (int j = 1; j <= 7 && ok; ++j)
      for (int a = 1; a <= 7 && ok; ++a)
        for (int b = 1; b <= 7 && ok; ++b)
          for (int c = 1; c <= 7 && ok; ++c) {
            Rational s = 0;
            for (int k = 1; k <= 7; ++k) s += phi_abc(i, j, k) * psi_abcd(a, b, c, k);
            ok = s == -d(i, a) * phi_abc(j, b, c) - d(i, b) * phi_abc(a, j, c) -
                          d(i, c) * phi_abc(a, b, j) + d(j, a) * phi_abc(i, b, c) +
                          d(j, b) * phi_abc(a, i, c) + d(j, c) * phi_abc(a, b, i);
          }
  add("phi psi contraction", ok);

  ok = true;
  for (const auto& label : all_form_type_labels()) {
    const ExactMat& P = projector(label);
    ok = ok && P * P == P && P.rank() == label.component;
  }
  add("projectors idempotent with stated ranks", ok);

  const auto& L = lie();
  ok = true;
  for (int a = 0; a < 7; ++a)
    for (int b = 0; b < 7; ++b) ok = ok && L.gram.at(a, b) == (a == b ? 1 : 0);
  add("normalized metric orthonormal on m", ok);

  ok = true;
  for (int a = 0; a < 7; ++a)
    for (int b = 0; b < 7; ++b)
      for (int c = 0; c < 7; ++c)
        ok = ok && L.f(c, a, b) == rat(-2, 3) * phi_abc(a + 1, b + 1, c + 1);
  add("f_abc = -(2/3) phi_abc", ok);

  add("volume form acts as -Id", volume_action_matrix() == rat(-1) * ExactMat::identity(8));
  ok = true;
  for (int a = 1; a <= 7; ++a)
    ok = ok && clifford_matrices()[a - 1] == rho_delta(a) + rat(2) * rho_delta_tilde(a);
  add("I_a = rho + 2 rho~", ok);
  add("M^2 = Id", involution_M() * involution_M() == ExactMat::identity(8));

  bool all = true;
  for (const auto& c : checks) all = all && c["pass"].get<bool>();
  Json out;
  out["schema_version"] = kSchemaVersion;
  out["command"] = "identities";
  out["checks"] = checks;
  out["all_pass"] = all;
  return out;
}

Json run_basis() {
  const auto& L = lie();
  Json j;
  j["schema_version"] = kSchemaVersion;
  Json mb = Json::array(), gb = Json::array();
  for (const auto& x : L.m_basis) mb.push_back(multivector_json(x));
  for (const auto& x : L.g2_basis7) gb.push_back(multivector_json(x));
  j["m_basis"] = mb;
  j["g2_basis"] = gb;
  j["gram"] = matrix_json(L.gram);
  j["killing"] = matrix_json(L.killing);
  Json f = Json::array();
  for (int c = 0; c < 7; ++c)
    for (int a = 0; a < 7; ++a)
      for (int b = 0; b < 7; ++b)
        if (L.f(c, a, b) != 0)
          f.push_back(Json::array({a + 1, b + 1, c + 1, rat_str(L.f(c, a, b))}));
  j["f_m"] = f;
  return j;
}

Json run_casimir() {
  Json j;
  j["schema_version"] = kSchemaVersion;
  Json g2 = Json::object();
  for (const auto& w : std::vector<G2Weight>{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}})
    g2[w.str()] = rat_str(casimir_eigenvalue(w));
  j["g2"] = g2;
  Json s7 = Json::object(), models = Json::object();
  for (const auto& w : certified_weights()) {
    s7[w.str()] = rat_str(casimir_eigenvalue(w));
    const RepModel& m = model(w);
    ExactMat expected = ExactMat::identity(m.dim);
    expected *= casimir_eigenvalue(w);
    models[w.str()] = m.casimir_spin7_sub == expected;
  }
  j["spin7"] = s7;
  j["model_casimir_is_scalar"] = models;
  return j;
}

Json run_admissible(double threshold) {
  Rational thr(threshold);
  thr.canonicalize();
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["threshold"] = fmt_double(threshold);
  Json reps = Json::array();
  for (const auto& w : admissible_reps(thr)) {
    Json r;
    r["weight"] = weight_json(w);
    r["casimir"] = rat_str(casimir_eigenvalue(w));
    auto b = eigenvalue_bound(w);
    r["bound"] = b ? Json(fmt_double(b->value)) : Json(nullptr);
    r["in_tabulated_six"] =
        std::find(tabulated_six().begin(), tabulated_six().end(), w) !=
        tabulated_six().end();
    reps.push_back(r);
  }
  j["admissible"] = reps;
  return j;
}

Json block_json(const Spin7Weight& gamma, const Rational& t, bool with_eigs) {
  const DiracBlock& b = dirac_block(gamma);
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["gamma"] = weight_json(gamma);
  j["t"] = rat_str(t);
  j["hom_dim"] = b.hom_dim;
  j["matrix"] = matrix_json(b.dirac_t(t));
  j["matrix_const"] = matrix_json(b.d_const);
  j["matrix_t_coeff"] = matrix_json(b.d_lin);
  Json mdiag = Json::array(), pdiag = Json::array(), norms = Json::array();
  for (int i = 0; i < b.hom_dim; ++i) {
    mdiag.push_back(rat_str(b.m_gamma.at(i, i)));
    pdiag.push_back(rat_str(b.phi_mat.at(i, i)));
    norms.push_back(rat_str(b.gram.at(i, i)));
  }
  j["m_gamma_diag"] = mdiag;
  j["phi_diag"] = pdiag;
  j["q_norms"] = norms;
  Json labels = Json::array();
  for (const auto& q : b.q)
    labels.push_back(Json::array(
        {gweight_json(q.delta_type), gweight_json(q.source_type), gweight_json(q.target_type)}));
  j["q_factor_labels"] = labels;
  if (with_eigs) {
    std::vector<double> eigs = gram_selfadjoint_eigenvalues(b.dirac_t(t), b.gram);
    Json ev = Json::array();
    for (double v : eigs) ev.push_back(fmt_double(v));
    j["eigenvalues_numeric"] = ev;
  }
  try {
    j["p_basis_rows"] = matrix_json(p_basis_change(gamma));
  } catch (const std::invalid_argument&) {
    j["p_basis_rows"] = Json(nullptr);  // trivial block or no table
  }
  return j;
}

Json run_spectrum(double lo, double hi) {
  Json j = spectral_result_json(eigenvalues_in_window(lo, hi));
  j["window"] = Json::array({fmt_double(lo), fmt_double(hi)});
  return j;
}

Json run_critical_rates(double lo, double hi) {
  CriticalRateSet rs = critical_rates(lo, hi);
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["window"] = Json::array({fmt_double(lo), fmt_double(hi)});
  Json inside = Json::array(), ends = Json::array();
  for (const auto& r : rs.rates) inside.push_back(critical_rate_json(r));
  for (const auto& r : rs.endpoints) ends.push_back(critical_rate_json(r));
  j["rates"] = inside;
  j["endpoints"] = ends;
  return j;
}

Json run_moduli_dim(double rate) {
  ModuliDimension d = virtual_dimension(rate);
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["rate"] = fmt_double(d.rate);
  j["virtual_dim"] = d.virtual_dim;
  j["base_index"] = d.base_index;
  Json cr = Json::array();
  for (const auto& c : d.crossings) cr.push_back(critical_rate_json(c));
  j["crossings"] = cr;
  return j;
}

std::string flow_csv(const Spin7Weight& gamma, int steps) {
  FlowResult r = spectral_flow(gamma, steps);
  std::ostringstream os;
  os << "s";
  for (size_t i = 0; i < r.curves.size(); ++i) os << ",lambda_" << i + 1;
  os << "\n";
  for (size_t k = 0; k < r.s_grid.size(); ++k) {
    os << fmt_double(r.s_grid[k]);
    for (const auto& c : r.curves) os << "," << fmt_double(c[k]);
    os << "\n";
  }
  return os.str();
}

Json run_flow(const Spin7Weight& gamma, int steps) {
  FlowResult r = spectral_flow(gamma, steps);
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["gamma"] = weight_json(gamma);
  j["steps"] = steps;
  j["flow"] = r.flow;
  Json start = Json::array(), end = Json::array();
  for (const auto& c : r.curves) {
    start.push_back(fmt_double(c.front()));
    end.push_back(fmt_double(c.back()));
  }
  j["eigenvalues_flat_endpoint"] = start;
  j["eigenvalues_canonical_endpoint"] = end;
  j["endpoint_on_round_lattice"] = endpoint_round_spectrum_check(gamma);
  return j;
}

Json run_instanton(double C, int samples) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["C"] = fmt_double(C);
  bool ode_ok = true, asd_ok = true;
  for (int k = 1; k <= samples; ++k) {
    ExactProfilePoint p = exact_profile_point(rat(k, 3));
    ode_ok = ode_ok && ode_residual_exact(p) == 0;
    asd_ok = asd_ok && asd_residual(p.phi, p.phi_dot).is_zero();
  }
  j["ode_exact_zero"] = ode_ok;
  j["asd_exact_zero"] = asd_ok;
  ProfileFunction prof(C);
  double worst = 0;
  for (double t = -6; t <= 6; t += 0.5) worst = std::max(worst, ode_residual(prof, t));
  j["ode_float_residual_max"] = fmt_double(worst);
  j["flat_limit_asd_zero"] = asd_residual(rat(1), rat(0)).is_zero();
  j["off_shell_witness_nonzero"] = !asd_residual(rat(1, 2), rat(0)).is_zero();
  j["all_pass"] = ode_ok && asd_ok && worst < 1e-12;
  return j;
}

Json run_chern_weil(double C) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["C"] = fmt_double(C);
  double v = chern_weil_integral(C);
  double oracle = chern_weil_integral(C, 10);
  double other = chern_weil_integral(10 * C);
  j["value"] = fmt_double(v);
  j["oracle_10x"] = fmt_double(oracle);
  j["value_10C"] = fmt_double(other);
  j["exact_closed_form"] = rat_str(chern_weil_exact());
  j["oracle_agreement"] = std::abs(v - oracle) < 1e-6;
  j["modulus_invariance"] = std::abs(v - other) < 1e-6;
  return j;
}

// Regenerates every reference table and diffs against the committed
// fixtures; --write refreshes them instead.
int run_paper_tables(const std::string& out_dir, const std::string& fixtures_dir, bool write) {
  std::map<std::string, Json> tables;

  Json casimir = run_casimir();
  casimir.erase("schema_version");
  tables["casimir_values"] = casimir;

  Json hom;
  for (const auto& w : certified_weights()) hom[w.str()] = hom_dimension(w);
  tables["hom_dims"] = hom;

  Json norms;
  for (const auto& w : std::vector<Spin7Weight>{{0, 1, 0}, {1, 0, 1}}) {
    Json l = Json::array();
    for (const auto& n : q_norms(w)) l.push_back(rat_str(n));
    norms[w.str()] = l;
  }
  tables["q_norms"] = norms;

  Json blocks;
  for (const auto& w : tabulated_six()) {
    Json b;
    const DiracBlock& blk = dirac_block(w);
    b["matrix_const"] = matrix_json(blk.d_const);
    b["matrix_t_coeff"] = matrix_json(blk.d_lin);
    ExactMat d13 = blk.dirac_t(rat(1, 3));
    ExactMat sq = d13 * d13;
    Json diag = Json::array();
    for (int i = 0; i < sq.rows(); ++i) diag.push_back(rat_str(sq.at(i, i)));
    b["d13_squared_diag"] = diag;
    blocks[w.str()] = b;
  }
  tables["dirac_blocks"] = blocks;

  Json pbasis;
  for (const auto& w :
       std::vector<Spin7Weight>{{1, 0, 0}, {0, 0, 1}, {0, 1, 0}, {2, 0, 0}, {1, 0, 1}})
    pbasis[w.str()] = matrix_json(p_basis_change(w));
  tables["p_basis"] = pbasis;

  Json spectra;
  for (const auto& w : tabulated_six()) {
    Json entries = Json::array();
    for (const auto& e : spectrum_t0(w).entries) entries.push_back(spectral_entry_json(e));
    spectra[w.str()] = entries;
  }
  tables["spectra_t0"] = spectra;

  tables["window_spectrum"] = spectral_result_json(eigenvalues_in_window(-2.5, 2.5));

  Json eaia = Json::array();
  for (const auto& e : eaIa_table())
    eaia.push_back(Json{{"eigenvalue", e.eigenvalue.str()},
                        {"value", fmt_double(e.eigenvalue.value())},
                        {"multiplicity", e.multiplicity}});
  tables["eaia_spectrum"] = eaia;

  Json cr = run_critical_rates(-2.0, 0.0);
  cr.erase("schema_version");
  tables["critical_rates"] = cr;

  Json moduli;
  for (double nu : {-1.9, -1.5, -1.1, -0.9, -0.5, -0.1}) {
    Json m = run_moduli_dim(nu);
    m.erase("schema_version");
    moduli[fmt_double(nu)] = m;
  }
  tables["moduli_dims"] = moduli;

  fs::path out = out_dir.empty() ? fs::path("paper-tables") : fs::path(out_dir);
  if (const char* dir = std::getenv("SPIN7SPEC_OUTPUT_DIR"); dir && out.is_relative())
    out = fs::path(dir) / out;
  fs::path fixtures = fixtures_dir;
  std::error_code ec;
  fs::create_directories(write ? fixtures : out, ec);
  if (ec) {
    std::cerr << "cannot create output directory\n";
    return 3;
  }

  bool all_match = true;
  for (const auto& [name, body] : tables) {
    Json wrapped;
    wrapped["schema_version"] = kSchemaVersion;
    wrapped["table"] = name;
    wrapped["data"] = body;
    std::string text = dump(wrapped);
    fs::path target = (write ? fixtures : out) / (name + ".json");
    std::ofstream f(target);
    if (!f) {
      std::cerr << "cannot write " << target << "\n";
      return 3;
    }
    f << text;
    f.close();
    if (write) continue;
    fs::path ref = fixtures / (name + ".json");
    std::ifstream rf(ref);
    if (!rf) {
      std::cerr << "missing fixture " << ref << "\n";
      all_match = false;
      continue;
    }
    std::stringstream buf;
    buf << rf.rdbuf();
    if (buf.str() != text) {
      std::cerr << "fixture mismatch: " << name << "\n";
      all_match = false;
    }
  }
  if (write) return 0;
  std::cout << (all_match ? "paper-tables: all fixtures match\n"
                          : "paper-tables: FIXTURE MISMATCH\n");
  return all_match ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spin7spec: spectral computations for Spin(7)-instanton deformations on R^8"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string output, rep_str = "0,0,0", window_str = "-2.5,2.5", format = "json";
  double rate = -0.5, C = 1.0, threshold = 2.5;
  std::string t_str = "0";
  int steps = 200, samples = 20;
  bool total = false, write_fixtures = false;
  std::string out_dir, fixtures_dir = "fixtures";

  app.add_option("--output", output, "output file (default stdout)");

  CLI::App* c_id = app.add_subcommand("identities", "run the exact identity suite");
  CLI::App* c_basis = app.add_subcommand("basis", "dump Lie bases and Gram matrices");
  CLI::App* c_cas = app.add_subcommand("casimir", "Casimir eigenvalues and model checks");
  CLI::App* c_adm = app.add_subcommand("admissible", "representations passing the bound filter");
  c_adm->add_option("--threshold", threshold, "filter threshold")->capture_default_str();
  CLI::App* c_blk = app.add_subcommand("dirac-block", "Dirac block matrices for one weight");
  c_blk->add_option("--rep", rep_str, "weight a,b,c")->required();
  c_blk->add_option("--t", t_str, "connection parameter t (rational)")->capture_default_str();
  CLI::App* c_spec = app.add_subcommand("spectrum", "aggregated eigenvalues in a window");
  c_spec->add_option("--window", window_str, "window lo,hi")->capture_default_str();
  CLI::App* c_cr = app.add_subcommand("critical-rates", "critical decay rates in a window");
  c_cr->add_option("--window", window_str, "rate window lo,hi")->required();
  CLI::App* c_md = app.add_subcommand("moduli-dim", "virtual moduli dimension at a rate");
  c_md->add_option("--rate", rate, "decay rate in (-5/2, 0)")->required();
  CLI::App* c_fl = app.add_subcommand("spectral-flow", "eigenvalue curves of the Dirac family");
  c_fl->add_option("--rep", rep_str, "weight a,b,c");
  c_fl->add_option("--steps", steps, "sweep resolution")->capture_default_str();
  c_fl->add_option("--format", format, "json or csv")->capture_default_str();
  c_fl->add_flag("--total", total, "weighted total flow over all certified blocks");
  CLI::App* c_inst = app.add_subcommand("instanton", "ODE and ASD checks for the profile");
  c_inst->add_option("--C", C, "scale modulus")->capture_default_str();
  c_inst->add_option("--samples", samples, "number of exact sample points")->capture_default_str();
  CLI::App* c_cw = app.add_subcommand("chern-weil", "tr F^4 characteristic integral");
  c_cw->add_option("--C", C, "scale modulus")->capture_default_str();
  CLI::App* c_pt = app.add_subcommand("paper-tables", "regenerate tables and diff fixtures");
  c_pt->add_option("--out", out_dir, "directory for regenerated tables");
  c_pt->add_option("--fixtures", fixtures_dir, "committed fixtures directory")
      ->capture_default_str();
  c_pt->add_flag("--write", write_fixtures, "rewrite the fixtures instead of diffing");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  OutputSink sink{output};
  try {
    if (*c_id) {
      Json j = run_identities();
      int rc = sink.write(dump(j));
      return rc ? rc : (j["all_pass"].get<bool>() ? 0 : 1);
    }
    if (*c_basis) return sink.write(dump(run_basis()));
    if (*c_cas) return sink.write(dump(run_casimir()));
    if (*c_adm) return sink.write(dump(run_admissible(threshold)));
    if (*c_blk)
      return sink.write(dump(block_json(parse_weight(rep_str), rat_parse(t_str), true)));
    if (*c_spec) {
      auto [lo, hi] = parse_window(window_str);
      return sink.write(dump(run_spectrum(lo, hi)));
    }
    if (*c_cr) {
      auto [lo, hi] = parse_window(window_str);
      return sink.write(dump(run_critical_rates(lo, hi)));
    }
    if (*c_md) return sink.write(dump(run_moduli_dim(rate)));
    if (*c_fl) {
      if (total) {
        Json j;
        j["schema_version"] = kSchemaVersion;
        j["steps"] = steps;
        int tf = total_spectral_flow(steps);
        j["total_flow"] = tf;
        int rc = sink.write(dump(j));
        return rc ? rc : (tf == 0 ? 0 : 1);
      }
      Spin7Weight g = parse_weight(rep_str);
      if (format == "csv") return sink.write(flow_csv(g, steps));
      return sink.write(dump(run_flow(g, steps)));
    }
    if (*c_inst) {
      Json j = run_instanton(C, samples);
      int rc = sink.write(dump(j));
      return rc ? rc : (j["all_pass"].get<bool>() ? 0 : 1);
    }
    if (*c_cw) {
      Json j = run_chern_weil(C);
      int rc = sink.write(dump(j));
      return rc ? rc : ((j["oracle_agreement"].get<bool>() && j["modulus_invariance"].get<bool>())
                            ? 0
                            : 1);
    }
    if (*c_pt) return run_paper_tables(out_dir, fixtures_dir, write_fixtures);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
