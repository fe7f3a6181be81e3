#include "starkdirac/cli.hpp"

#include "starkdirac/csv_format.hpp"
#include "starkdirac/model.hpp"
#include "starkdirac/nu_engine.hpp"
#include "starkdirac/reference_data.hpp"
#include "starkdirac/spectra.hpp"
#include "starkdirac/wavefunctions.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace starkdirac {

namespace {

using json = nlohmann::ordered_json;

struct ModelFlags {
  std::string symmetry = "spin";
  double M = 1.5;
  double omega0 = 1.0 / 2.4;
  std::optional<double> omega0_inv;
  double q = 1.0;
  double eps = 0.0;
  double C = 0.0;

  ModelParams params() const {
    ModelParams p;
    p.sym = symmetry_from_string(symmetry);
    p.M = M;
    p.omega0 = omega0_inv ? 1.0 / *omega0_inv : omega0;
    p.q = q;
    p.eps = eps;
    p.C = C;
    p.validate();
    return p;
  }
};

struct RunConfig {
  ModelFlags model;
  int n_max = 10;
  int n = 0;
  std::vector<double> eps_list;
  double r_min = 0.0;
  std::optional<double> r_max;
  int samples = 0;
  std::string format = "csv";
  std::string output;
  std::string kind = "F";
  bool raw = false;
  std::string table = "all";
  std::optional<double> tolerance;
  std::string data_dir = default_data_dir();
};

class FlagError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

void add_model_flags(CLI::App *cmd, ModelFlags &m, bool with_symmetry = true) {
  if (with_symmetry)
    cmd->add_option("--symmetry", m.symmetry, "spin | pseudospin")
        ->check(CLI::IsMember({"spin", "pseudospin"}))
        ->capture_default_str();
  cmd->add_option("--M", m.M, "mass (hbar = c = 1)")->capture_default_str();
  auto *om = cmd->add_option("--omega0", m.omega0, "oscillator frequency")->capture_default_str();
  cmd->add_option("--omega0-inv", m.omega0_inv, "set omega0 = 1/value exactly")->excludes(om);
  cmd->add_option("--q", m.q, "charge")->capture_default_str();
  cmd->add_option("--C", m.C, "symmetry constant C_s or C_ps")->capture_default_str();
}

void add_output_flags(CLI::App *cmd, RunConfig &cfg) {
  cmd->add_option("--format", cfg.format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--output,-o", cfg.output, "output file (default: stdout)");
}

void emit(const RunConfig &cfg, const std::string &text, std::ostream &out) {
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.output, std::ios::binary);
  if (!f)
    throw FlagError("cannot open output file " + cfg.output);
  f << text;
}

std::string alt_field(const EnergyLevel &lv, std::size_t i) {
  if (i >= lv.alternates.size())
    return "";
  const auto z = lv.alternates[i].value;
  if (z.imag() != 0.0)
    return fmt17(z.real()) + (z.imag() < 0 ? "-" : "+") + fmt17(std::abs(z.imag())) + "i";
  return fmt17(z.real());
}

json level_json(const EnergyLevel &lv) {
  json j;
  j["symmetry"] = to_string(lv.params.sym);
  j["n"] = lv.n;
  j["kappa"] = lv.kappa;
  j["M"] = lv.params.M;
  j["omega0"] = lv.params.omega0;
  j["q"] = lv.params.q;
  j["eps"] = lv.params.eps;
  j["C"] = lv.params.C;
  j["E"] = lv.bound() ? json(lv.E) : json(nullptr);
  j["residual"] = lv.bound() ? json(lv.residual) : json(nullptr);
  j["status"] = to_string(lv.status);
  auto &alts = j["alternates"] = json::array();
  for (const auto &a : lv.alternates) {
    json e;
    e["re"] = a.value.real();
    e["im"] = a.value.imag();
    e["reason"] = to_string(a.reason);
    alts.push_back(e);
  }
  j["root_alt1"] = alt_field(lv, 0);
  j["root_alt2"] = alt_field(lv, 1);
  j["discriminant_flag"] = lv.casus_irreducibilis;
  j["on_boundary"] = lv.on_boundary;
  return j;
}

int cmd_spectrum(const RunConfig &cfg, std::ostream &out) {
  const ModelParams p = cfg.model.params();
  std::vector<double> eps_list = cfg.eps_list.empty() ? std::vector<double>{p.eps} : cfg.eps_list;
  for (double e : eps_list)
    if (e < 0.0)
      throw FlagError("eps values must be non-negative");
  const auto grid = spectrum_grid(p, cfg.n_max, eps_list);

  std::string text;
  if (cfg.format == "json") {
    json arr = json::array();
    for (const auto &c : grid)
      arr.push_back(level_json(c.level));
    text = arr.dump(2) + "\n";
  } else {
    text = "symmetry,n,kappa,M,omega0,q,eps,C,E,residual,status,root_alt1,root_alt2,discriminant_flag\n";
    for (const auto &c : grid) {
      const auto &lv = c.level;
      text += csv_join({to_string(lv.params.sym), std::to_string(lv.n), std::to_string(lv.kappa),
                        fmt17(lv.params.M), fmt17(lv.params.omega0), fmt17(lv.params.q),
                        fmt17(lv.params.eps), fmt17(lv.params.C), fmt17(lv.E),
                        fmt17(lv.residual), to_string(lv.status), alt_field(lv, 0),
                        alt_field(lv, 1), lv.casus_irreducibilis ? "1" : "0"}) +
              "\n";
    }
  }
  emit(cfg, text, out);
  return 0;
}

int cmd_potential(const RunConfig &cfg, std::ostream &out) {
  const ModelParams p = cfg.model.params();
  const double r_max = cfg.r_max.value_or(kDefaultCurveRMax);
  const int samples = cfg.samples > 0 ? cfg.samples : kDefaultCurveSamples;
  const auto curve = potential_curve(p, r_max, samples);
  std::string text;
  if (cfg.format == "json") {
    json arr = json::array();
    for (const auto &pt : curve)
      arr.push_back({{"r", pt.r}, {"V", pt.V}});
    text = arr.dump(2) + "\n";
  } else {
    text = "r,V\n";
    for (const auto &pt : curve)
      text += fmt17(pt.r) + "," + fmt17(pt.V) + "\n";
  }
  emit(cfg, text, out);
  return 0;
}

int cmd_figure2(const RunConfig &cfg, std::ostream &out) {
  ModelParams p = cfg.model.params();
  const std::vector<double> eps_list =
      cfg.eps_list.empty() ? std::vector<double>{0.0, 0.5, 1.0, 2.0} : cfg.eps_list;
  std::string text;
  json arr = json::array();
  if (cfg.format == "csv")
    text = "symmetry,eps,n,E\n";
  for (double e : eps_list) {
    if (e < 0.0)
      throw FlagError("eps values must be non-negative");
    p.eps = e;
    for (int n = 0; n <= cfg.n_max; ++n) {
      const double E = p.sym == SymmetryKind::Spin ? nr_spin_level(p, n) : nr_pseudospin_level(p, n);
      if (cfg.format == "json")
        arr.push_back({{"symmetry", to_string(p.sym)}, {"eps", e}, {"n", n}, {"E", E}});
      else
        text += to_string(p.sym) + "," + fmt17(e) + "," + std::to_string(n) + "," + fmt17(E) + "\n";
    }
  }
  if (cfg.format == "json")
    text = arr.dump(2) + "\n";
  emit(cfg, text, out);
  return 0;
}

int cmd_wavefunction(const RunConfig &cfg, std::ostream &out) {
  ModelParams p = cfg.model.params();
  const bool normalize = !cfg.raw;
  SampleGrid g = default_grid(p, cfg.samples > 0 ? cfg.samples : 2001);
  g.r_lo = cfg.r_min;
  if (cfg.r_max)
    g.r_hi = *cfg.r_max;
  if (!(g.r_hi > g.r_lo))
    throw FlagError("--r-max must exceed --r-min");

  RadialFunction f;
  if (cfg.kind == "R") {
    f = sample_nr_R(p, cfg.n, g, normalize);
  } else {
    if (cfg.kind == "Gps")
      p.sym = SymmetryKind::Pseudospin;
    else
      p.sym = SymmetryKind::Spin;
    const auto lv = solve_level(p, cfg.n);
    if (!lv.bound())
      throw FlagError("no bound level at n = " + std::to_string(cfg.n) + " for these parameters");
    if (cfg.kind == "F")
      f = sample_upper_F(lv, g, normalize);
    else if (cfg.kind == "G")
      f = sample_lower_G(lv, g, normalize);
    else
      f = sample_pseudo_G(lv, g, normalize);
  }

  std::string text;
  if (cfg.format == "json") {
    json arr = json::array();
    for (const auto &s : f.samples)
      arr.push_back({{"kind", to_string(f.kind)},
                     {"n", f.n},
                     {"r", s.r},
                     {"value_real", s.value.real()},
                     {"value_imag", s.value.imag()},
                     {"normalized", f.normalized}});
    text = arr.dump(2) + "\n";
  } else {
    text = "kind,n,r,value_real,value_imag,normalized\n";
    for (const auto &s : f.samples)
      text += csv_join({to_string(f.kind), std::to_string(f.n), fmt17(s.r), fmt17(s.value.real()),
                        fmt17(s.value.imag()), f.normalized ? "1" : "0"}) +
              "\n";
  }
  emit(cfg, text, out);
  return 0;
}

json cplx_json(cplx z) { return json::array({z.real(), z.imag()}); }

json reduction_json(const std::string &name, const Poly2 &sigma_tilde) {
  json inst;
  inst["instance"] = name;
  inst["sigma"] = json::array({1.0, 0.0, 0.0});
  inst["tau_tilde"] = json::array({0.0, 0.0});
  inst["sigma_tilde"] = json::array({sigma_tilde.c0, sigma_tilde.c1, sigma_tilde.c2});
  auto &branches = inst["branches"] = json::array();
  for (const auto &red : enumerate_branches(kUnitSigma, sigma_tilde, kZeroTau)) {
    json b;
    b["branch"] = red.branch_label();
    b["admissible"] = red.admissible;
    b["real"] = red.is_real();
    b["pi"] = json::array({cplx_json(red.pi.c0), cplx_json(red.pi.c1)});
    b["k"] = cplx_json(red.k);
    b["tau"] = json::array({cplx_json(red.tau.c0), cplx_json(red.tau.c1)});
    b["tau_slope"] = cplx_json(red.tau_slope);
    b["lambda"] = cplx_json(red.lambda);
    auto &ln = b["lambda_n"] = json::array();
    for (int n = 0; n <= 3; ++n)
      ln.push_back(cplx_json(red.lambda_n(n)));
    branches.push_back(b);
  }
  return inst;
}

int cmd_nu_check(const RunConfig &cfg, std::ostream &out) {
  json j = json::array();
  // spin form -v^2 r^2 + beta r - alpha with v = 2, beta = 4, alpha = 1
  j.push_back(reduction_json("spin(v=2,beta=4,alpha=1)", Poly2{-1.0, 4.0, -4.0}));
  j.push_back(reduction_json("oscillator(v=1,beta=0,alpha=0)", Poly2{0.0, 0.0, -1.0}));
  // pseudospin form v^2 r^2 - beta r - alpha with v = 1, beta = 2, alpha = 0.5
  j.push_back(reduction_json("pseudospin(v=1,beta=2,alpha=0.5)", Poly2{-0.5, -2.0, 1.0}));
  emit(cfg, j.dump(2) + "\n", out);
  return 0;
}

int cmd_verify(const RunConfig &cfg, std::ostream &out) {
  std::vector<TableId> ids;
  if (cfg.table == "all")
    ids = {TableId::GevSequence, TableId::Table2, TableId::Table1};
  else
    ids = {table_from_string(cfg.table)};

  bool ok = true;
  std::string text;
  json arr = json::array();
  for (auto id : ids) {
    double tol = id == TableId::GevSequence ? 1e-6 : 5e-3;
    if (cfg.tolerance)
      tol = *cfg.tolerance;
    const auto rep = compare(id, tol, cfg.data_dir);
    ok = ok && rep.ok();
    if (cfg.format == "json")
      arr.push_back(json::parse(report_json(rep)));
    else
      text += report_text(rep);
  }
  if (cfg.format == "json")
    text = arr.dump(2) + "\n";
  text += cfg.format == "json" ? "" : std::string("verify: ") + (ok ? "PASS" : "FAIL") + "\n";
  emit(cfg, text, out);
  return ok ? 0 : 1;
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Dirac s-wave levels of a charged oscillator in a uniform electric field"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto *spectrum = app.add_subcommand("spectrum", "energy levels over n and eps");
  add_model_flags(spectrum, cfg.model);
  spectrum->add_option("--eps", cfg.model.eps, "field strength")->capture_default_str();
  spectrum->add_option("--eps-list", cfg.eps_list, "comma-separated field strengths")
      ->delimiter(',');
  spectrum->add_option("--n-max", cfg.n_max, "highest level index")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  add_output_flags(spectrum, cfg);

  auto *potential = app.add_subcommand("potential", "V(r) curve");
  add_model_flags(potential, cfg.model, false);
  potential->add_option("--eps", cfg.model.eps, "field strength")->capture_default_str();
  potential->add_option("--r-max", cfg.r_max, "curve end (default 15)");
  potential->add_option("--samples", cfg.samples, "number of samples (default 600)");
  add_output_flags(potential, cfg);

  auto *figure2 = app.add_subcommand("figure2", "non-relativistic spectra versus n");
  add_model_flags(figure2, cfg.model);
  figure2->add_option("--eps-list", cfg.eps_list, "comma-separated field strengths")
      ->delimiter(',');
  figure2->add_option("--n-max", cfg.n_max, "highest level index")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  add_output_flags(figure2, cfg);

  auto *wave = app.add_subcommand("wavefunction", "radial samples of a spinor component");
  add_model_flags(wave, cfg.model, false);
  wave->add_option("--eps", cfg.model.eps, "field strength")->capture_default_str();
  wave->add_option("--kind", cfg.kind, "F | G | R | Gps")
      ->check(CLI::IsMember({"F", "G", "R", "Gps"}))
      ->capture_default_str();
  wave->add_option("--n", cfg.n, "level index")->check(CLI::NonNegativeNumber)->capture_default_str();
  wave->add_option("--r-min", cfg.r_min, "grid start")->capture_default_str();
  wave->add_option("--r-max", cfg.r_max, "grid end (default r0 + 20/lambda)");
  wave->add_option("--samples", cfg.samples, "grid points (default 2001)");
  wave->add_flag("--raw", cfg.raw, "skip numeric normalization");
  add_output_flags(wave, cfg);

  auto *nu = app.add_subcommand("nu-check", "NU reduction table for the built-in instances (JSON)");
  nu->add_option("--output,-o", cfg.output, "output file (default: stdout)");

  auto *verify = app.add_subcommand("verify", "compare against the bundled reference tables");
  verify->add_option("--table", cfg.table, "table1 | table2 | gev | all")
      ->check(CLI::IsMember({"table1", "table2", "gev", "all"}))
      ->capture_default_str();
  verify->add_option("--tolerance", cfg.tolerance, "absolute tolerance (default 1e-6 gev, 5e-3 tables)");
  verify->add_option("--format", cfg.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--data-dir", cfg.data_dir, "reference data directory")->capture_default_str();
  verify->add_option("--output,-o", cfg.output, "output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    if (e.get_exit_code() == 0)
      return app.exit(e, out, err);
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (verify->parsed() && verify->count("--format") == 0)
      cfg.format = "text";
    if (spectrum->parsed())
      return cmd_spectrum(cfg, out);
    if (potential->parsed())
      return cmd_potential(cfg, out);
    if (figure2->parsed())
      return cmd_figure2(cfg, out);
    if (wave->parsed())
      return cmd_wavefunction(cfg, out);
    if (nu->parsed())
      return cmd_nu_check(cfg, out);
    if (verify->parsed())
      return cmd_verify(cfg, out);
  } catch (const InvalidParams &e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const FlagError &e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

} // namespace starkdirac
