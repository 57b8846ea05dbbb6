#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "mactin/channel.hpp"
#include "mactin/design.hpp"
#include "mactin/fbl.hpp"

namespace mactin {

struct SweepSpec {
  ChannelConfig cfg;
  std::vector<ModTuple> tuples;
  std::size_t samples = 1'000'000;
  std::uint64_t seed = 1;
  std::vector<Scheme> schemes;
  ExponentMode exponent_mode = ExponentMode::ExactLog;
  std::size_t sic_grid = 33;
  std::vector<double> tin_power_fractions{1.0};
};

/// (0,8,8), (2,6,8), (4,4,8), (4,2,8), (4,0,8), (4,0,0).
std::vector<ModTuple> reference_tuples();

/// Reference channel, the six reference tuples and all four schemes.
SweepSpec reference_sweep();

struct TupleError {
  ModTuple tuple;
  std::string message;
};

struct SweepResult {
  std::vector<RatePoint> points;
  std::vector<TupleError> errors;
};

/// Proposed-scheme point for one design: MI/dispersion of lambda1 against
/// lambda21, lambda21 against lambda1, and the clean lambda22.
RatePoint proposed_rate_point(const ChannelConfig& cfg, const SignalingDesign& design, const ModTuple& tuple,
                              const EstimatorSettings& est, std::size_t point_index);

/// Runs every requested scheme. Proposed points come out in tuple order;
/// a tuple that cannot be built is recorded in `errors` and skipped.
SweepResult run_sweep(const SweepSpec& spec);

/// CSV column header (no trailing newline).
std::string_view csv_header() noexcept;

void write_csv(std::ostream& os, std::span<const RatePoint> points);

/// Writes the CSV file; throws IoError naming the path on failure.
void emit_csv(std::span<const RatePoint> points, const std::filesystem::path& path);

/// Parses CSV produced by write_csv. Throws ConfigError on malformed input.
std::vector<RatePoint> read_csv(std::istream& is);

/// Standard errors of (r1, r2) by the delta method over the MI and dispersion
/// estimates. Zero for clamped rates.
struct RateErrors {
  double r1 = 0.0;
  double r2 = 0.0;
};
RateErrors rate_std_errors(const RatePoint& p, const ChannelConfig& cfg);

/// True when `q` beats `p` in both rates by more than `k` combined standard errors.
bool dominated_by(const RatePoint& p, const RatePoint& q, const ChannelConfig& cfg, double k = 3.0);

/// True when `p` lies in the pentagon spanned by the SIC decode-order corners,
/// after moving it toward the origin by `k` combined standard errors per axis.
/// `sic` is the output of benchmark_gaussian_sic (first and last entries are
/// the corners).
bool inside_sic_region(const RatePoint& p, std::span<const RatePoint> sic, const ChannelConfig& cfg,
                       double k = 3.0);

/// SIC point whose user-1 rate matches `p` (clamped to the corner range),
/// with all statistics interpolated along the segment.
RatePoint sic_point_at_r1(std::span<const RatePoint> sic, double r1);

/// Effective user-2 dispersion (N1 V21 + (N2-N1) V22) / N2 and its standard error.
std::pair<double, double> user2_dispersion(const RatePoint& p, const ChannelConfig& cfg);

}  // namespace mactin
