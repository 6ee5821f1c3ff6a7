#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qha/io.hpp"

namespace qha {

struct SuiteConfig {
  std::vector<int> n_list = {3, 5, 7, 9};
  std::uint64_t seed = 1;
  int ensemble_size = 8;
  std::map<std::string, double> tolerances;  // check name -> override
  int continuum_n = 256;
  double continuum_half_width = 8.0;
  int lab_m = 32;  // matched plane-lab resolution for mod-space ratios
  std::string output_dir;

  static SuiteConfig from_key_values(const KeyValueConfig& kv);
  void validate() const;
  double tol_or(const std::string& name, double fallback) const;
};

enum class CheckStatus { kPass, kFail, kReportOnly };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::kPass;
  double measured = 0.0;
  double threshold = 0.0;
  double runtime_s = 0.0;  // shown in the table, excluded from JSON
  std::string note;
};

CheckResult thresholded(const std::string& name, double measured, double threshold,
                        const std::string& note = "");
CheckResult report_only(const std::string& name, double measured,
                        const std::string& note = "");

bool all_passed(const std::vector<CheckResult>& results);

// All finite-model identity checks (Moyal, trace formula, product formulas,
// convolution algebra, localization/Berezin, Hausdorff-Young, adjoint
// pairing, Tauberian rank law, ...), in a fixed declared order.
std::vector<CheckResult> run_verify_suite(const SuiteConfig& cfg);

// Continuum-bridge checks; when output_dir is nonempty, |V_phi phi| and
// |F_W(phi x phi)| heatmap CSVs and the plane samples are written there.
std::vector<CheckResult> run_continuum_suite(const SuiteConfig& cfg);

std::string results_table(const std::vector<CheckResult>& results);
std::string results_json(const std::vector<CheckResult>& results);

}  // namespace qha
