#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "mactin/sweep.hpp"

namespace mactin {

/// Flat experiment manifest. Every field maps to one `key = value` line of the
/// config file; defaults reproduce the reference experiment.
struct RunConfig {
  double snr1_db = 12.0;
  double snr2_db = 24.0;
  double p1 = 1.0;
  double p2 = 1.0;
  long blocklength1 = 150;
  long blocklength2 = 200;
  double eps1 = 1e-6;
  double eps2 = 1e-5;
  std::vector<ModTuple> tuples = reference_tuples();
  std::size_t samples = 1'000'000;
  std::uint64_t seed = 1;
  std::vector<Scheme> schemes{Scheme::ProposedQamTin, Scheme::GaussianSic, Scheme::Orthogonal,
                              Scheme::GaussianTin};
  ExponentMode exponent_mode = ExponentMode::ExactLog;
  std::size_t sic_grid = 33;
  std::vector<double> tin_power_fractions{1.0};
  std::string out = "region.csv";
  int verbosity = 1;

  /// Throws ConfigError when the channel part is invalid.
  ChannelConfig channel() const;
  SweepSpec sweep() const;
};

/// Sets one field from its textual value. Unknown keys and unparsable values
/// throw ConfigError.
void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value);

/// Parses `key = value` lines; '#' starts a comment. `origin` labels errors.
RunConfig parse_run_config(std::istream& is, const std::string& origin = "<config>");

/// Loads a config file; a missing or unreadable file throws ConfigError.
RunConfig load_run_config(const std::filesystem::path& path);

/// Serialises every field in the file format.
std::string format_run_config(const RunConfig& cfg);

std::vector<ModTuple> parse_tuples(std::string_view text);
std::vector<Scheme> parse_schemes(std::string_view text);
ExponentMode parse_exponent_mode(std::string_view text);
std::string_view exponent_mode_name(ExponentMode m) noexcept;

}  // namespace mactin
