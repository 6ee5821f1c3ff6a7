// Command-line front end: identity-suite runner, regularity reports,
// localization/Berezin computations, Arveson spectra, and the continuum
// bridge, with text/CSV/JSON outputs.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qha/continuum.hpp"
#include "qha/io.hpp"
#include "qha/localization.hpp"
#include "qha/rng.hpp"
#include "qha/suites.hpp"
#include "qha/tauberian.hpp"

namespace {

using namespace qha;

struct GlobalOpts {
  std::string config_path;
  std::uint64_t seed = 1;
  bool seed_given = false;
  std::string out_dir;
  bool json = false;
};

SuiteConfig load_suite_config(const GlobalOpts& g) {
  SuiteConfig cfg;
  if (!g.config_path.empty()) {
    cfg = SuiteConfig::from_key_values(KeyValueConfig::parse_file(g.config_path));
  }
  if (g.seed_given) cfg.seed = g.seed;
  if (!g.out_dir.empty()) cfg.output_dir = g.out_dir;
  return cfg;
}

void emit_results(const GlobalOpts& g, const std::vector<CheckResult>& results,
                  const std::string& json_name) {
  if (g.json) {
    std::cout << results_json(results) << "\n";
  } else {
    std::cout << results_table(results);
  }
  if (!g.out_dir.empty()) {
    std::filesystem::create_directories(g.out_dir);
    std::ofstream out(g.out_dir + "/" + json_name);
    out << results_json(results) << "\n";
  }
}

Signal load_window(const std::string& spec, int n_hint) {
  // Either a QHA-SIG file path or one of the built-in window names.
  if (spec == "e0" || spec == "gauss" || spec == "flat") {
    if (n_hint <= 0) throw Error("window '" + spec + "' needs --N");
    GroupParams p(n_hint);
    if (spec == "e0") return basis_delta(p, 0);
    Signal s(p);
    if (spec == "flat") {
      s.values.setOnes();
      return s;
    }
    // periodized Gaussian bump centered at 0
    for (int t = 0; t < p.n; ++t) {
      const int d = std::min(t, p.n - t);
      s.values(t) = std::exp(-kPi * d * d / static_cast<double>(p.n));
    }
    return s;
  }
  return read_signal_file(spec);
}

int cmd_verify(const GlobalOpts& g, const std::vector<int>& n_override, int ensemble_override) {
  SuiteConfig cfg = load_suite_config(g);
  if (!n_override.empty()) cfg.n_list = n_override;
  if (ensemble_override > 0) cfg.ensemble_size = ensemble_override;
  cfg.validate();
  const auto results = run_verify_suite(cfg);
  emit_results(g, results, "verify.json");
  return all_passed(results) ? 0 : 1;
}

int cmd_continuum(const GlobalOpts& g, int n_override, double l_override) {
  SuiteConfig cfg = load_suite_config(g);
  if (n_override > 0) cfg.continuum_n = n_override;
  if (l_override > 0) cfg.continuum_half_width = l_override;
  if (cfg.output_dir.empty() && !g.out_dir.empty()) cfg.output_dir = g.out_dir;
  const auto results = run_continuum_suite(cfg);
  emit_results(g, results, "continuum.json");
  return all_passed(results) ? 0 : 1;
}

int cmd_regularity(const GlobalOpts& g, const std::string& input, const std::string& win1,
                   const std::string& win2, int n_hint, double tol) {
  RegularityReport rep;
  if (!input.empty()) {
    rep = regularity_report(read_operator_file(input), tol);
  } else {
    const Signal w1 = load_window(win1, n_hint);
    const Signal w2 = load_window(win2, n_hint);
    rep = localization_density_check(w1, w2, tol);
    if (!g.out_dir.empty()) {
      std::filesystem::create_directories(g.out_dir);
      const PhaseFunction amb = ambiguity(w2, w1);
      write_heatmap_csv_file(g.out_dir + "/ambiguity_abs.csv", amb.values.cwiseAbs());
    }
  }
  const std::string json = regularity_report_to_json(rep);
  std::cout << json << "\n";
  if (!g.json) {
    std::cout << "N=" << rep.params.n << " zero_set=" << rep.zero_set.size()
              << " support=" << rep.support_size << " translate_rank=" << rep.translate_rank
              << " ker(A)=" << rep.kernel_dim_A << " ker(B)=" << rep.kernel_dim_B
              << " regular=" << (rep.regular ? "yes" : "no")
              << (rep.degenerate ? " (degenerate)" : "") << "\n";
  }
  if (!g.out_dir.empty()) {
    std::filesystem::create_directories(g.out_dir);
    std::ofstream out(g.out_dir + "/regularity.json");
    out << json << "\n";
  }
  return 0;
}

int cmd_localize(const GlobalOpts& g, const std::string& symbol_path, const std::string& win1,
                 const std::string& win2, int n_hint, const std::vector<double>& p_list) {
  const PhaseFunction f = read_phase_function_file(symbol_path);
  const Signal w1 = load_window(win1, n_hint > 0 ? n_hint : f.params.n);
  const Signal w2 = load_window(win2, n_hint > 0 ? n_hint : f.params.n);
  const OperatorMatrix a = localization_operator(f, w1, w2);

  const OperatorMatrix via_conv = conv_fun_op(f, rank_one(w2, w1));
  const double residual = op_max_abs_diff(a, via_conv);

  std::vector<double> ps = p_list;
  if (ps.empty()) ps = {1.0, 2.0, kInf};
  const SchattenReport rep = schatten_report(a, ps);

  std::cout << schatten_report_to_json(rep) << "\n";
  std::cout << "convolution_identity_residual=" << format_float(residual) << "\n";
  if (!g.out_dir.empty()) {
    std::filesystem::create_directories(g.out_dir);
    write_operator_file(g.out_dir + "/locop.qhamat", a);
    std::ofstream out(g.out_dir + "/locop_schatten.json");
    out << schatten_report_to_json(rep) << "\n";
  }
  return 0;
}

int cmd_berezin(const GlobalOpts& g, const std::string& input, const std::string& win1,
                const std::string& win2, int n_hint) {
  const OperatorMatrix t = read_operator_file(input);
  const Signal w1 = load_window(win1, n_hint > 0 ? n_hint : t.params.n);
  const Signal w2 = load_window(win2, n_hint > 0 ? n_hint : t.params.n);
  const PhaseFunction b = berezin_transform(t, w1, w2);
  write_phase_function(std::cout, b);
  if (!g.out_dir.empty()) {
    std::filesystem::create_directories(g.out_dir);
    write_phase_function_file(g.out_dir + "/berezin.qhafun", b);
    write_heatmap_csv_file(g.out_dir + "/berezin_abs.csv", b.values.cwiseAbs());
  }
  return 0;
}

int cmd_spectrum(const GlobalOpts& g, const std::string& input, double tol) {
  const OperatorMatrix s = read_operator_file(input);
  const auto support = arveson_spectrum(s, tol);
  std::cout << "[";
  for (size_t i = 0; i < support.size(); ++i) {
    std::cout << (i ? "," : "") << "[" << support[i].x << "," << support[i].w << "]";
  }
  std::cout << "]\n";
  if (!g.out_dir.empty()) {
    std::filesystem::create_directories(g.out_dir);
    std::ofstream out(g.out_dir + "/spectrum.json");
    out << "[";
    for (size_t i = 0; i < support.size(); ++i) {
      out << (i ? "," : "") << "[" << support[i].x << "," << support[i].w << "]";
    }
    out << "]\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum harmonic analysis on Z_N x Z_N: convolutions, Fourier-Wigner "
               "transform, localization operators, Tauberian diagnostics, and a "
               "sampled-continuum bridge"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--config", g.config_path, "flat key = value config file");
  app.add_option("--seed", g.seed, "RNG seed")->each([&](const std::string&) {
    g.seed_given = true;
  });
  app.add_option("--out", g.out_dir, "output directory for reports/CSV");
  app.add_flag("--json", g.json, "emit JSON instead of the human table");

  auto* verify = app.add_subcommand("verify", "run the finite-model identity suites");
  verify->fallthrough();
  std::vector<int> n_override;
  int ensemble_override = 0;
  verify->add_option("--N", n_override, "override N list (odd integers >= 3)");
  verify->add_option("--ensemble", ensemble_override, "override ensemble size");

  auto* continuum = app.add_subcommand("continuum", "run the sampled-continuum checks");
  continuum->fallthrough();
  int cont_n = 0;
  double cont_l = 0.0;
  continuum->add_option("-n", cont_n, "grid points (power of two)");
  continuum->add_option("-L", cont_l, "grid half-width");

  auto* regularity = app.add_subcommand("regularity", "zero set / rank / kernel report");
  regularity->fallthrough();
  std::string reg_input, reg_w1, reg_w2;
  int reg_n = 0;
  double reg_tol = kZeroSetDefaultTol;
  regularity->add_option("--input", reg_input, "QHA-MAT operator file");
  regularity->add_option("--window1", reg_w1, "QHA-SIG file or e0|gauss|flat");
  regularity->add_option("--window2", reg_w2, "QHA-SIG file or e0|gauss|flat");
  regularity->add_option("--N", reg_n, "modulus for built-in windows");
  regularity->add_option("--tol", reg_tol, "relative zero threshold");

  auto* localize = app.add_subcommand("localize", "assemble a localization operator");
  localize->fallthrough();
  std::string loc_symbol, loc_w1, loc_w2;
  int loc_n = 0;
  std::vector<double> loc_ps;
  localize->add_option("--symbol", loc_symbol, "QHA-FUN mask file")->required();
  localize->add_option("--window1", loc_w1, "QHA-SIG file or e0|gauss|flat")->required();
  localize->add_option("--window2", loc_w2, "QHA-SIG file or e0|gauss|flat")->required();
  localize->add_option("--N", loc_n, "modulus for built-in windows");
  localize->add_option("--p", loc_ps, "Schatten exponents to report");

  auto* berezin = app.add_subcommand("berezin", "Berezin transform of an operator");
  berezin->fallthrough();
  std::string ber_input, ber_w1, ber_w2;
  int ber_n = 0;
  berezin->add_option("--input", ber_input, "QHA-MAT operator file")->required();
  berezin->add_option("--window1", ber_w1, "QHA-SIG file or e0|gauss|flat")->required();
  berezin->add_option("--window2", ber_w2, "QHA-SIG file or e0|gauss|flat")->required();
  berezin->add_option("--N", ber_n, "modulus for built-in windows");

  auto* spectrum = app.add_subcommand("spectrum", "Arveson spectrum support");
  spectrum->fallthrough();
  std::string spec_input;
  double spec_tol = kZeroSetDefaultTol;
  spectrum->add_option("--input", spec_input, "QHA-MAT operator file")->required();
  spectrum->add_option("--tol", spec_tol, "relative support threshold");

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) return cmd_verify(g, n_override, ensemble_override);
    if (continuum->parsed()) return cmd_continuum(g, cont_n, cont_l);
    if (regularity->parsed()) {
      if (reg_input.empty() && (reg_w1.empty() || reg_w2.empty())) {
        std::cerr << "regularity: need --input or both --window1/--window2\n";
        return 2;
      }
      return cmd_regularity(g, reg_input, reg_w1, reg_w2, reg_n, reg_tol);
    }
    if (localize->parsed()) return cmd_localize(g, loc_symbol, loc_w1, loc_w2, loc_n, loc_ps);
    if (berezin->parsed()) return cmd_berezin(g, ber_input, ber_w1, ber_w2, ber_n);
    if (spectrum->parsed()) return cmd_spectrum(g, spec_input, spec_tol);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
