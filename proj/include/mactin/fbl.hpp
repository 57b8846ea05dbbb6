#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "mactin/channel.hpp"
#include "mactin/density.hpp"

namespace mactin {

/// Inverse of the Gaussian tail Q(x) = P[N(0,1) > x]. Throws DomainError
/// unless 0 < eps < 1.
double q_inv(double eps);

/// Normal approximation for user 1: max(0, I - sqrt(V / N1) Q^{-1}(eps1)).
double rate_user1(double mi, double v, long n1, double eps1);

/// Normal approximation for user 2, whose N2 symbols see interference only on
/// the first N1:
///   max(0, [N1 I21 + (N2-N1) I22] / N2 - sqrt(N1 V21 + (N2-N1) V22) / N2 * Q^{-1}(eps2)).
double rate_user2(double mi21, double mi22, double v21, double v22, long n1, long n2, double eps2);

enum class Scheme { ProposedQamTin, GaussianSic, Orthogonal, GaussianTin };

std::string_view scheme_tag(Scheme s) noexcept;
std::optional<Scheme> parse_scheme(std::string_view tag) noexcept;

/// Deterministic-model rates (m1, m21, m22), which double as QAM bit orders.
struct ModTuple {
  int m1 = 0;
  int m21 = 0;
  int m22 = 0;
  bool operator==(const ModTuple&) const = default;
};

/// One achievable rate pair with the statistics behind it.
struct RatePoint {
  Scheme scheme = Scheme::ProposedQamTin;
  std::optional<ModTuple> mod;
  double r1 = 0.0;
  double r2 = 0.0;
  MiDispersion u1;   ///< user 1
  MiDispersion u21;  ///< user 2, overlapping sub-block
  MiDispersion u22;  ///< user 2, clean sub-block
  std::size_t samples = 0;
  std::uint64_t seed = 0;
};

struct EstimatorSettings {
  std::size_t samples = 1'000'000;
  std::uint64_t seed = 1;
};

/// Fills r1/r2 of a point from its per-sub-block statistics.
RatePoint make_rate_point(Scheme scheme, const ChannelConfig& cfg, const MiDispersion& u1,
                          const MiDispersion& u21, const MiDispersion& u22);

/// Substream seed for estimate `slot` of design point `point` of a scheme.
std::uint64_t stream_seed(std::uint64_t root, Scheme scheme, std::uint64_t point, std::uint64_t slot) noexcept;

/// Gaussian inputs with perfect successive cancellation. The two decode-order
/// corners are convexly combined at `grid` evenly spaced weights, ordered from
/// the user-1-first corner to the user-2-first corner. This is a hypothetical
/// outer bound: cancellation never fails and time sharing is free.
std::vector<RatePoint> benchmark_gaussian_sic(const ChannelConfig& cfg, const EstimatorSettings& est,
                                              std::size_t grid = 33);

/// User 2 stays silent on the overlapping symbols; both users use Gaussian inputs.
RatePoint benchmark_orthogonal(const ChannelConfig& cfg, const EstimatorSettings& est);

/// Gaussian inputs decoded with TIN. Each entry of `user2_power_fractions`
/// scales user 2's power on the overlapping sub-block; user 1 and user 2's
/// clean sub-block use full power.
std::vector<RatePoint> benchmark_gaussian_tin(const ChannelConfig& cfg, const EstimatorSettings& est,
                                              const std::vector<double>& user2_power_fractions = {1.0});

}  // namespace mactin
