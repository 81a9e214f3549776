// opineq: numerical verification and exploration of asymmetric Choi-Davis /
// Kadison operator inequalities on concrete finite-dimensional instances.
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "opineq/explorer.hpp"
#include "opineq/io.hpp"
#include "opineq/suite.hpp"

using namespace opineq;

namespace {

// exit codes: 0 all theorem checks passed; 1 violation where a theorem
// predicts none; 2 usage/config error; 3 numerical non-convergence
constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNonConvergence = 3;

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream out(output_path);
    if (!out) throw parse_error("cannot open output file: " + output_path);
    out << text << "\n";
  }
}

std::vector<Family> parse_families(const std::string& csv) {
  std::vector<Family> fams;
  if (csv == "all" || csv.empty()) {
    for (Family f : kAllFamilies)
      if (theorem_family(f)) fams.push_back(f);
    return fams;
  }
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const auto f = parse_family(tok);
    if (!f) throw parse_error("unknown family name: " + tok);
    fams.push_back(*f);
  }
  return fams;
}

std::vector<int> parse_dims(const std::string& csv) {
  std::vector<int> dims;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const int d = std::stoi(tok);
    if (d < 2 || d > 16) throw parse_error("dims must lie in [2, 16]");
    dims.push_back(d);
  }
  if (dims.empty()) throw parse_error("at least one dimension required");
  return dims;
}

std::vector<double> parse_grid(const std::string& csv) {
  std::vector<double> g;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) g.push_back(std::stod(tok));
  if (g.empty()) throw parse_error("empty grid");
  return g;
}

// key=value tokens for the constants subcommand
double kv_get(const std::vector<std::string>& kvs, const std::string& key) {
  for (const auto& kv : kvs) {
    const auto eq = kv.find('=');
    if (eq != std::string::npos && kv.substr(0, eq) == key) return std::stod(kv.substr(eq + 1));
  }
  throw parse_error("missing " + key + "= argument");
}

std::string kv_get_str(const std::vector<std::string>& kvs, const std::string& key) {
  for (const auto& kv : kvs) {
    const auto eq = kv.find('=');
    if (eq != std::string::npos && kv.substr(0, eq) == key) return kv.substr(eq + 1);
  }
  throw parse_error("missing " + key + "= argument");
}

bool kv_has(const std::vector<std::string>& kvs, const std::string& key) {
  for (const auto& kv : kvs)
    if (kv.rfind(key + "=", 0) == 0) return true;
  return false;
}

std::string render_suite_text(const SuiteReport& rep) {
  std::ostringstream os;
  os << "family                 trials  passes  skips  failures  worst_gap\n";
  for (const auto& st : rep.stats) {
    char line[160];
    std::snprintf(line, sizeof(line), "%-22s %6d  %6d  %5d  %8d  %.3e\n",
                  family_name(st.family), st.trials, st.passes, st.skips, st.failures,
                  st.worst_gap);
    os << line;
  }
  os << (rep.theorem_failures() == 0 ? "all theorem families passed"
                                     : "THEOREM FAMILY FAILURES PRESENT");
  return os.str();
}

struct CommonFlags {
  std::uint64_t seed = 1;
  double atol = 1e-10;
  double rtol = 1e-9;
  std::string output;
  std::string format = "json";
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--seed", flags.seed, "base seed; all randomness derives from it");
  cmd->add_option("--atol", flags.atol, "absolute order-check tolerance");
  cmd->add_option("--rtol", flags.rtol, "relative order-check tolerance");
  cmd->add_option("--output", flags.output, "write the report to this path");
  cmd->add_option("--format", flags.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
}

int run_verify(const CommonFlags& flags, const std::string& families_csv,
               const std::string& dims_csv, int trials, const std::string& mode,
               const std::string& input_path, const std::string& config_echo) {
  SuiteConfig cfg;
  cfg.families = parse_families(families_csv);
  cfg.dims = parse_dims(dims_csv);
  cfg.trials = trials;
  cfg.seed = flags.seed;
  cfg.tol = ToleranceConfig{flags.atol, flags.rtol};
  cfg.mode = mode == "dominance" ? IsometryMode::Dominance : IsometryMode::Constructive;
  if (cfg.trials < 1) throw parse_error("trials must be >= 1");

  SuiteReport rep;
  if (!input_path.empty()) {
    // single explicit instance: run each listed family once on it
    std::ifstream in(input_path);
    if (!in) throw parse_error("cannot open input file: " + input_path);
    nlohmann::json j;
    in >> j;
    const Instance inst = parse_instance(j);
    for (Family fam : cfg.families) {
      FamilyStats st;
      st.family = fam;
      st.trials = 1;
      const CheckResult res = check_family(fam, inst, cfg.tol, cfg.mode);
      if (res.status == CheckStatus::Skipped) {
        st.skips = 1;
      } else {
        st.worst_gap = res.verdict.gap_min_eig;
        if (res.verdict.holds)
          st.passes = 1;
        else {
          st.failures = 1;
          st.example_witness = inst;
        }
      }
      rep.stats.push_back(std::move(st));
    }
  } else {
    rep = run_suite(cfg);
  }

  JsonWriter w;
  w.begin_object();
  write_envelope(w, "verify", config_echo, flags.seed, cfg.tol);
  // the introduction's Kadison display contains an evident typo; the engine
  // checks the standard Phi(A)^2 <= Phi(A^2)
  w.key("banner").value("kadison variance form checked as Phi(A)^2 <= Phi(A^2)");
  w.key("families").begin_array();
  for (const auto& st : rep.stats) {
    w.begin_object();
    w.key("family").value(family_name(st.family));
    w.key("trials").value(st.trials);
    w.key("passes").value(st.passes);
    w.key("skips").value(st.skips);
    w.key("failures").value(st.failures);
    if (st.passes + st.failures > 0) w.key("worst_gap").value(st.worst_gap);
    if (st.example_witness) {
      w.key("example_witness");
      write_instance(w, *st.example_witness);
    }
    w.end_object();
  }
  w.end_array();
  w.key("theorem_failures").value(rep.theorem_failures());
  w.end_object();

  emit(flags.format == "text" ? render_suite_text(rep) : w.str(), flags.output);
  return rep.theorem_failures() == 0 ? kExitOk : kExitViolation;
}

int run_counterexample(const CommonFlags& flags, const std::string& config_echo) {
  const CounterexampleReport rep = reproduce_counterexamples();
  JsonWriter w;
  w.begin_object();
  write_envelope(w, "counterexample", config_echo, flags.seed,
                 ToleranceConfig{flags.atol, flags.rtol});
  w.key("map").value("compression of M3 to the leading 2x2 block");
  w.key("A");
  write_matrix(w, rep.A);
  w.key("B");
  write_matrix(w, rep.B);
  w.key("refutations").begin_array();
  w.begin_object();
  w.key("claim").value("abs(Phi(B) Phi(A)) <= Phi(A^{1/2} B A^{1/2})");
  w.key("lhs");
  write_matrix(w, rep.abs_phiB_phiA);
  w.key("rhs");
  write_matrix(w, rep.phi_sandwich);
  w.key("gap_min_eig").value(rep.ch_op1_gap_min_eig);
  w.key("violated").value(rep.ch_op1_gap_min_eig < 0.0);
  w.end_object();
  w.begin_object();
  w.key("claim").value("Phi(A) Phi(B) Phi(A) <= Phi(A B A)");
  w.key("lhs");
  write_matrix(w, rep.phiA_phiB_phiA);
  w.key("rhs");
  write_matrix(w, rep.phi_ABA);
  w.key("gap_min_eig").value(rep.ch_op2_gap_min_eig);
  w.key("violated").value(rep.ch_op2_gap_min_eig < 0.0);
  w.end_object();
  w.end_array();
  w.end_object();

  if (flags.format == "text") {
    std::ostringstream os;
    auto print2 = [&](const char* label, const HermitianMatrix& m) {
      os << label << " = [[" << m(0, 0).real() << ", " << m(0, 1).real() << "], ["
         << m(1, 0).real() << ", " << m(1, 1).real() << "]]\n";
    };
    os << "Phi = compression of M3 to the leading 2x2 block\n";
    print2("abs(Phi(B)Phi(A))", rep.abs_phiB_phiA);
    print2("Phi(A^{1/2}BA^{1/2})", rep.phi_sandwich);
    os << "  difference min eigenvalue: " << rep.ch_op1_gap_min_eig << " -> order fails\n";
    print2("Phi(A)Phi(B)Phi(A)", rep.phiA_phiB_phiA);
    print2("Phi(ABA)", rep.phi_ABA);
    os << "  difference min eigenvalue: " << rep.ch_op2_gap_min_eig << " -> order fails";
    emit(os.str(), flags.output);
  } else {
    emit(w.str(), flags.output);
  }
  return kExitOk;
}

int run_constants(const CommonFlags& flags, const std::vector<std::string>& kappa_kv,
                  const std::vector<std::string>& kpower_kv,
                  const std::vector<std::string>& k1_kv, const std::vector<std::string>& k2_kv,
                  const std::vector<std::string>& krev_kv,
                  const std::vector<std::string>& nak_kv, const std::vector<std::string>& m4_kv,
                  const std::vector<std::string>& three_kv,
                  const std::vector<std::string>& omega_kv, const std::string& input_path,
                  const std::string& config_echo) {
  JsonWriter w;
  w.begin_object();
  write_envelope(w, "constants", config_echo, flags.seed,
                 ToleranceConfig{flags.atol, flags.rtol});
  w.key("constants").begin_array();
  std::ostringstream text;

  auto record = [&](const std::string& name, const std::vector<std::string>& kvs, double value) {
    w.begin_object();
    w.key("name").value(name);
    w.key("inputs").begin_object();
    for (const auto& kv : kvs) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) throw parse_error("expected key=value, got: " + kv);
      const std::string key = kv.substr(0, eq);
      if (key == "fn")
        w.key(key).value(kv.substr(eq + 1));
      else
        w.key(key).value(std::stod(kv.substr(eq + 1)));
    }
    w.end_object();
    w.key("value").value(value);
    w.end_object();
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    text << name << " = " << buf << "\n";
  };

  if (!kappa_kv.empty())
    record("kappa", kappa_kv, kappa(kv_get(kappa_kv, "h"), kv_get(kappa_kv, "p")));
  if (!kpower_kv.empty())
    record("k_power", kpower_kv,
           k_power(SpectralBounds(kv_get(kpower_kv, "m"), kv_get(kpower_kv, "M")),
                   kv_get(kpower_kv, "p")));
  if (!k1_kv.empty())
    record("k1", k1_kv,
           k1(SpectralBounds(kv_get(k1_kv, "m"), kv_get(k1_kv, "M")),
              ScalarFn::parse(kv_get_str(k1_kv, "fn"))));
  if (!k2_kv.empty())
    record("k2", k2_kv,
           k2(SpectralBounds(kv_get(k2_kv, "m"), kv_get(k2_kv, "M")),
              ScalarFn::parse(kv_get_str(k2_kv, "fn"))));
  if (!krev_kv.empty())
    record("k_reverse", krev_kv,
           k_reverse_theorem(SpectralBounds(kv_get(krev_kv, "m"), kv_get(krev_kv, "M")),
                             ScalarFn::parse(kv_get_str(krev_kv, "fn"))));
  if (!nak_kv.empty())
    record("k_nakamoto", nak_kv, k_nakamoto(kv_get(nak_kv, "h"), kv_get(nak_kv, "gamma")));
  if (!m4_kv.empty())
    record("k_m4", m4_kv,
           k_m4(kv_get(m4_kv, "h"), kv_get(m4_kv, "alpha"), kv_get(m4_kv, "beta")));
  if (!three_kv.empty())
    record("k_three", three_kv,
           k_three(kv_get(three_kv, "h"), kv_get(three_kv, "alpha"), kv_get(three_kv, "beta"),
                   kv_get(three_kv, "gamma")));
  if (!omega_kv.empty()) {
    if (input_path.empty()) throw parse_error("--omega needs --input with a (phi, A) instance");
    std::ifstream in(input_path);
    if (!in) throw parse_error("cannot open input file: " + input_path);
    nlohmann::json j;
    in >> j;
    const Instance inst = parse_instance(j);
    const double r = kv_has(omega_kv, "r") ? kv_get(omega_kv, "r")
                                           : inst.params.r.value_or(0.5);
    const OmegaResult res = omega(inst.phi, inst.A, r);
    w.begin_object();
    w.key("name").value("omega");
    w.key("inputs").begin_object();
    w.key("r").value(r);
    w.end_object();
    w.key("value").value(res.value);
    w.key("infimum").value(res.infimum);
    w.key("sequence_tail").begin_array();
    for (double c : res.sequence_tail) w.value(c);
    w.end_array();
    w.end_object();
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", res.value);
    text << "omega = " << buf << "\n";
  }
  w.end_array();
  w.end_object();
  emit(flags.format == "text" ? text.str() : w.str(), flags.output);
  return kExitOk;
}

int run_search(const CommonFlags& flags, const std::string& family_name_arg, int dim,
               int samples, int climb_steps, double step_scale, bool indefinite,
               const std::string& map_kind, const std::vector<std::string>& params_kv,
               const std::string& emit_path, bool sharpness, const std::string& param_name,
               const std::string& grid_csv, int trials, const std::string& config_echo) {
  const auto fam = parse_family(family_name_arg);
  if (!fam) throw parse_error("unknown family name: " + family_name_arg);

  if (sharpness) {
    const SharpnessReport rep = sharpness_scan(*fam, param_name, parse_grid(grid_csv), trials,
                                               flags.seed,
                                               ToleranceConfig{flags.atol, flags.rtol});
    JsonWriter w;
    w.begin_object();
    write_envelope(w, "search", config_echo, flags.seed,
                   ToleranceConfig{flags.atol, flags.rtol});
    w.key("mode").value("sharpness");
    w.key("family").value(family_name(rep.family));
    w.key("param").value(rep.param_name);
    w.key("points").begin_array();
    for (const auto& pt : rep.points) {
      w.begin_object();
      w.key("value").value(pt.param);
      w.key("trials").value(pt.trials);
      w.key("min_relative_gap").value(pt.min_relative_gap);
      if (pt.scalar_probe_relative_gap)
        w.key("scalar_probe_relative_gap").value(*pt.scalar_probe_relative_gap);
      w.end_object();
    }
    w.end_array();
    w.end_object();
    emit(w.str(), flags.output);
    return kExitOk;
  }

  SearchSpace space;
  space.dim = dim;
  space.allow_indefinite = indefinite;
  if (!map_kind.empty()) space.map_kind = map_kind;
  for (const auto& kv : params_kv) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw parse_error("expected key=value, got: " + kv);
    const std::string key = kv.substr(0, eq);
    const double v = std::stod(kv.substr(eq + 1));
    if (key == "p") space.p = v;
    else if (key == "r") space.r = v;
    else if (key == "alpha") space.alpha = v;
    else if (key == "beta") space.beta = v;
    else if (key == "gamma") space.gamma = v;
    else throw parse_error("unknown search parameter: " + key);
  }
  SearchBudget budget;
  budget.max_samples = samples;
  budget.hill_climb_steps = climb_steps;
  budget.step_scale = step_scale;
  budget.seed = flags.seed;

  const auto cert = search_violation(*fam, space, budget,
                                     ToleranceConfig{flags.atol, flags.rtol});
  JsonWriter w;
  w.begin_object();
  write_envelope(w, "search", config_echo, flags.seed, ToleranceConfig{flags.atol, flags.rtol});
  w.key("mode").value("violation");
  w.key("family").value(family_name(*fam));
  w.key("found").value(cert.has_value());
  if (cert) {
    w.key("violation_eig").value(cert->violation_eig);
    w.key("revalidates").value(revalidate(*cert));
    w.key("certificate");
    write_instance(w, cert->instance);
  }
  w.end_object();
  emit(w.str(), flags.output);
  if (cert && !emit_path.empty()) {
    JsonWriter cw;
    write_instance(cw, cert->instance);
    std::ofstream out(emit_path);
    if (!out) throw parse_error("cannot open certificate path: " + emit_path);
    out << cw.str() << "\n";
  }
  return kExitOk;
}

int run_certify(const CommonFlags& flags, const std::string& fn_text,
                const std::string& property, int dim, int trials, bool lfmps,
                const std::string& config_echo) {
  const ScalarFn f = ScalarFn::parse(fn_text);
  JsonWriter w;
  w.begin_object();
  write_envelope(w, "certify", config_echo, flags.seed, ToleranceConfig{flags.atol, flags.rtol});
  w.key("fn").value(fn_text);
  std::ostringstream text;

  auto write_cert = [&](const ConvexityCertificate& c) {
    w.begin_object();
    w.key("property").value(property_name(c.property));
    w.key("trials").value(c.trials);
    w.key("max_violation").value(c.max_violation);
    w.key("verdict").value(c.verdict());
    if (c.witness) {
      w.key("witness").begin_object();
      w.key("A");
      write_matrix(w, c.witness->A);
      w.key("B");
      write_matrix(w, c.witness->B);
      w.key("lambda").value(c.witness->lambda);
      w.end_object();
    }
    w.end_object();
    text << property_name(c.property) << ": " << c.verdict() << "\n";
  };

  if (lfmps) {
    const LfmpsReport rep =
        lfmps_crosscheck(f, dim, trials, flags.seed, ToleranceConfig{flags.atol, flags.rtol});
    w.key("crosscheck").begin_array();
    write_cert(rep.f_concave);
    write_cert(rep.f_monotone);
    write_cert(rep.t_over_f_monotone);
    write_cert(rep.t_times_f_convex);
    w.end_array();
    w.key("consistent").value(rep.consistent);
    text << (rep.consistent ? "verdicts agree" : "VERDICTS DISAGREE") << "\n";
  } else {
    OperatorProperty prop = OperatorProperty::Convex;
    if (property == "operator-concave") prop = OperatorProperty::Concave;
    else if (property == "operator-monotone") prop = OperatorProperty::Monotone;
    else if (property != "operator-convex") throw parse_error("unknown property: " + property);
    w.key("result");
    write_cert(certify(f, prop, dim, trials, flags.seed,
                       ToleranceConfig{flags.atol, flags.rtol}));
  }
  w.end_object();
  emit(flags.format == "text" ? text.str() : w.str(), flags.output);
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical checks for asymmetric Choi-Davis and Kadison operator inequalities"};
  app.require_subcommand(1);

  std::ostringstream echo;
  for (int i = 1; i < argc; ++i) echo << (i > 1 ? " " : "") << argv[i];
  const std::string config_echo = echo.str();

  // verify
  auto* verify = app.add_subcommand("verify", "run property suites over random instances");
  CommonFlags vf;
  std::string v_families = "all", v_dims = "2,3,4", v_mode = "constructive", v_input;
  int v_trials = 200;
  add_common(verify, vf);
  verify->add_option("--families", v_families, "comma-separated family list, or 'all'");
  verify->add_option("--dims", v_dims, "comma-separated dimensions in [2,16]");
  verify->add_option("--trials", v_trials, "instances per family");
  verify->add_option("--mode", v_mode, "constructive or dominance")
      ->check(CLI::IsMember({"constructive", "dominance"}));
  verify->add_option("--input", v_input, "run the listed families on one explicit instance");

  // counterexample
  auto* counter = app.add_subcommand("counterexample", "reproduce the two explicit refutations");
  CommonFlags cf;
  bool paper = false;
  add_common(counter, cf);
  counter->add_flag("--paper", paper, "use the built-in refuting instances (default)");

  // constants
  auto* consts = app.add_subcommand("constants", "evaluate reverse-inequality constants");
  CommonFlags kf;
  std::vector<std::string> kv_kappa, kv_kpower, kv_k1, kv_k2, kv_krev, kv_nak, kv_m4, kv_three,
      kv_omega;
  std::string k_input;
  add_common(consts, kf);
  consts->add_option("--kappa", kv_kappa, "h= p=")->expected(-1);
  consts->add_option("--k-power", kv_kpower, "m= M= p=")->expected(-1);
  consts->add_option("--k1", kv_k1, "m= M= fn=")->expected(-1);
  consts->add_option("--k2", kv_k2, "m= M= fn=")->expected(-1);
  consts->add_option("--k-reverse", kv_krev, "m= M= fn=")->expected(-1);
  consts->add_option("--nakamoto", kv_nak, "h= gamma=")->expected(-1);
  consts->add_option("--m4", kv_m4, "h= alpha= beta=")->expected(-1);
  consts->add_option("--three", kv_three, "h= alpha= beta= gamma=")->expected(-1);
  consts->add_option("--omega", kv_omega, "r= (with --input instance)")->expected(-1);
  consts->add_option("--input", k_input, "instance file supplying (phi, A)");

  // search
  auto* search = app.add_subcommand("search", "look for violations or scan sharpness");
  CommonFlags sf;
  std::string s_family, s_map, s_param_name = "gamma", s_grid = "0,0.25,0.5,0.75,1", s_emit;
  std::vector<std::string> s_params;
  int s_dim = 3, s_samples = 100000, s_climb = 60, s_trials = 50;
  double s_step = 0.25;
  bool s_indefinite = false, s_sharp = false;
  add_common(search, sf);
  search->add_option("--family", s_family, "family to probe")->required();
  search->add_option("--dim", s_dim, "instance dimension");
  search->add_option("--samples", s_samples, "random restarts");
  search->add_option("--climb-steps", s_climb, "hill-climb steps per restart");
  search->add_option("--step-scale", s_step, "initial perturbation scale");
  search->add_flag("--indefinite", s_indefinite, "sample indefinite Hermitian operands");
  search->add_option("--map", s_map, "compression | trace | pinching | kraus");
  search->add_option("--param", s_params, "fix exponents, e.g. p=3")->expected(-1);
  search->add_option("--emit-certificate", s_emit, "write the found instance to this path");
  search->add_flag("--sharpness", s_sharp, "scan minimal relative gaps over a grid");
  search->add_option("--param-name", s_param_name, "grid parameter for --sharpness");
  search->add_option("--grid", s_grid, "comma-separated grid for --sharpness");
  search->add_option("--trials", s_trials, "trials per grid point for --sharpness");

  // certify
  auto* cert = app.add_subcommand("certify", "randomized operator convexity certification");
  CommonFlags xf;
  std::string x_fn, x_prop = "operator-convex";
  int x_dim = 3, x_trials = 500;
  bool x_lfmps = false;
  add_common(cert, xf);
  cert->add_option("--fn", x_fn, "scalar function, e.g. pow(t,0.5)")->required();
  cert->add_option("--property", x_prop, "operator-convex | operator-concave | operator-monotone");
  cert->add_option("--dim", x_dim, "matrix dimension");
  cert->add_option("--trials", x_trials, "random trials");
  cert->add_flag("--lfmps", x_lfmps, "run the four-way equivalence crosscheck");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*verify)
      return run_verify(vf, v_families, v_dims, v_trials, v_mode, v_input, config_echo);
    if (*counter) return run_counterexample(cf, config_echo);
    if (*consts)
      return run_constants(kf, kv_kappa, kv_kpower, kv_k1, kv_k2, kv_krev, kv_nak, kv_m4,
                           kv_three, kv_omega, k_input, config_echo);
    if (*search)
      return run_search(sf, s_family, s_dim, s_samples, s_climb, s_step, s_indefinite, s_map,
                        s_params, s_emit, s_sharp, s_param_name, s_grid, s_trials, config_echo);
    if (*cert) return run_certify(xf, x_fn, x_prop, x_dim, x_trials, x_lfmps, config_echo);
  } catch (const convergence_error& e) {
    std::cerr << "numerical non-convergence: " << e.what() << "\n";
    return kExitNonConvergence;
  } catch (const parse_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
