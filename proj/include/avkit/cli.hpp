#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace avkit {

/// Parameter defaults shared by every subcommand. Each is overridable by a
/// flag; `--help` prints these values.
struct RunConfig {
  double tau_s = 0.5;
  double gamma = 20.0;
  std::string penalty = "sine";
  double lambda = 5.0;
  std::size_t k = 6;
  std::size_t m = 75;
  double dedupe_iou = 0.7;
  std::string recall_ks = "1,3,5";
  std::string recall_denominator = "capped";
  std::string cider_variant = "d";
  double agent_threshold = 0.1;
  std::size_t max_windows = 3;
  std::size_t workers = 1;
};

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kDataError = 1;
inline constexpr int kUsage = 2;
}  // namespace exit_code

/// Runs the toolkit CLI. Reports go to `out` unless --out is given;
/// diagnostics and errors go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace avkit
