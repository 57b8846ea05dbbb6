#include "mactin/fbl.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include <boost/math/special_functions/erf.hpp>

#include "mactin/errors.hpp"
#include "mactin/rng.hpp"

namespace mactin {

double q_inv(double eps) {
  if (!(eps > 0.0 && eps < 1.0)) throw DomainError("q_inv: probability must lie in (0, 1)");
  return std::numbers::sqrt2 * boost::math::erfc_inv(2.0 * eps);
}

double rate_user1(double mi, double v, long n1, double eps1) {
  if (n1 < 1) throw DomainError("rate_user1: blocklength must be positive");
  return std::max(0.0, mi - std::sqrt(std::max(0.0, v) / static_cast<double>(n1)) * q_inv(eps1));
}

double rate_user2(double mi21, double mi22, double v21, double v22, long n1, long n2, double eps2) {
  if (n1 < 1 || n2 < n1) throw DomainError("rate_user2: need 1 <= N1 <= N2");
  const auto head = static_cast<double>(n1);
  const auto tail = static_cast<double>(n2 - n1);
  const auto total = static_cast<double>(n2);
  const double mean = (head * mi21 + tail * mi22) / total;
  const double spread = std::sqrt(std::max(0.0, head * v21 + tail * v22)) / total;
  return std::max(0.0, mean - spread * q_inv(eps2));
}

std::string_view scheme_tag(Scheme s) noexcept {
  switch (s) {
    case Scheme::ProposedQamTin: return "proposed-qam-tin";
    case Scheme::GaussianSic: return "gaussian-sic";
    case Scheme::Orthogonal: return "orthogonal";
    case Scheme::GaussianTin: return "gaussian-tin";
  }
  return "unknown";
}

std::optional<Scheme> parse_scheme(std::string_view tag) noexcept {
  for (Scheme s : {Scheme::ProposedQamTin, Scheme::GaussianSic, Scheme::Orthogonal, Scheme::GaussianTin})
    if (scheme_tag(s) == tag) return s;
  return std::nullopt;
}

RatePoint make_rate_point(Scheme scheme, const ChannelConfig& cfg, const MiDispersion& u1,
                          const MiDispersion& u21, const MiDispersion& u22) {
  RatePoint p;
  p.scheme = scheme;
  p.u1 = u1;
  p.u21 = u21;
  p.u22 = u22;
  p.samples = std::max({u1.samples, u21.samples, u22.samples});
  p.r1 = rate_user1(u1.mi, u1.dispersion, cfg.blocklength1, cfg.eps1);
  p.r2 = rate_user2(u21.mi, u22.mi, u21.dispersion, u22.dispersion, cfg.blocklength1, cfg.blocklength2,
                    cfg.eps2);
  return p;
}

std::uint64_t stream_seed(std::uint64_t root, Scheme scheme, std::uint64_t point, std::uint64_t slot) noexcept {
  return derive_seed(root, static_cast<std::uint64_t>(scheme), point, slot);
}

namespace {

MiDispersion gaussian_estimate(const ChannelConfig& cfg, Role own_role, double own_var,
                               std::optional<InputSpec> interferer, const EstimatorSettings& est,
                               std::uint64_t seed) {
  return estimate_mi_dispersion(cfg, InputSpec::gaussian(own_var, own_role), interferer, est.samples, seed);
}

MiDispersion blend(const MiDispersion& a, const MiDispersion& b, double w) {
  MiDispersion out;
  out.mi = w * a.mi + (1.0 - w) * b.mi;
  out.dispersion = w * a.dispersion + (1.0 - w) * b.dispersion;
  out.std_error = w * a.std_error + (1.0 - w) * b.std_error;
  out.dispersion_std_error = w * a.dispersion_std_error + (1.0 - w) * b.dispersion_std_error;
  out.samples = std::max(a.samples, b.samples);
  return out;
}

}  // namespace

std::vector<RatePoint> benchmark_gaussian_sic(const ChannelConfig& cfg, const EstimatorSettings& est,
                                              std::size_t grid) {
  cfg.validate();
  if (grid < 2) throw DomainError("benchmark_gaussian_sic: grid needs at least two points");
  const auto seed = [&](std::uint64_t slot) { return stream_seed(est.seed, Scheme::GaussianSic, 0, slot); };
  const auto g1 = InputSpec::gaussian(cfg.p1, Role::User1);
  const auto g21 = InputSpec::gaussian(cfg.p2, Role::User2Sub1);

  const MiDispersion u1_tin = gaussian_estimate(cfg, Role::User1, cfg.p1, g21, est, seed(0));
  const MiDispersion u1_clean = gaussian_estimate(cfg, Role::User1, cfg.p1, std::nullopt, est, seed(1));
  const MiDispersion u21_tin = gaussian_estimate(cfg, Role::User2Sub1, cfg.p2, g1, est, seed(2));
  const MiDispersion u21_clean = gaussian_estimate(cfg, Role::User2Sub1, cfg.p2, std::nullopt, est, seed(3));
  const MiDispersion u22 = gaussian_estimate(cfg, Role::User2Sub2, cfg.p2, std::nullopt, est, seed(4));

  // Corner A decodes user 1 first (against user 2's interference), corner B user 2 first.
  const RatePoint a = make_rate_point(Scheme::GaussianSic, cfg, u1_tin, u21_clean, u22);
  const RatePoint b = make_rate_point(Scheme::GaussianSic, cfg, u1_clean, u21_tin, u22);

  std::vector<RatePoint> out;
  out.reserve(grid);
  for (std::size_t k = 0; k < grid; ++k) {
    const double w = 1.0 - static_cast<double>(k) / static_cast<double>(grid - 1);
    RatePoint p;
    p.scheme = Scheme::GaussianSic;
    p.r1 = w * a.r1 + (1.0 - w) * b.r1;
    p.r2 = w * a.r2 + (1.0 - w) * b.r2;
    p.u1 = blend(a.u1, b.u1, w);
    p.u21 = blend(a.u21, b.u21, w);
    p.u22 = blend(a.u22, b.u22, w);
    p.samples = est.samples;
    p.seed = est.seed;
    out.push_back(p);
  }
  return out;
}

RatePoint benchmark_orthogonal(const ChannelConfig& cfg, const EstimatorSettings& est) {
  cfg.validate();
  const auto seed = [&](std::uint64_t slot) { return stream_seed(est.seed, Scheme::Orthogonal, 0, slot); };
  const MiDispersion u1 = gaussian_estimate(cfg, Role::User1, cfg.p1, std::nullopt, est, seed(0));
  MiDispersion silent;
  silent.samples = est.samples;
  const MiDispersion u22 = gaussian_estimate(cfg, Role::User2Sub2, cfg.p2, std::nullopt, est, seed(2));
  RatePoint p = make_rate_point(Scheme::Orthogonal, cfg, u1, silent, u22);
  p.seed = est.seed;
  return p;
}

std::vector<RatePoint> benchmark_gaussian_tin(const ChannelConfig& cfg, const EstimatorSettings& est,
                                              const std::vector<double>& user2_power_fractions) {
  cfg.validate();
  std::vector<RatePoint> out;
  out.reserve(user2_power_fractions.size());
  for (std::size_t i = 0; i < user2_power_fractions.size(); ++i) {
    const double frac = user2_power_fractions[i];
    if (!(frac >= 0.0 && frac <= 1.0))
      throw DomainError("benchmark_gaussian_tin: power fractions must lie in [0, 1]");
    const auto seed = [&](std::uint64_t slot) { return stream_seed(est.seed, Scheme::GaussianTin, i, slot); };
    const double var21 = frac * cfg.p2;
    const auto g1 = InputSpec::gaussian(cfg.p1, Role::User1);
    const auto g21 = InputSpec::gaussian(var21, Role::User2Sub1);
    const MiDispersion u1 = gaussian_estimate(cfg, Role::User1, cfg.p1, g21, est, seed(0));
    const MiDispersion u21 = gaussian_estimate(cfg, Role::User2Sub1, var21, g1, est, seed(1));
    const MiDispersion u22 = gaussian_estimate(cfg, Role::User2Sub2, cfg.p2, std::nullopt, est, seed(2));
    RatePoint p = make_rate_point(Scheme::GaussianTin, cfg, u1, u21, u22);
    p.seed = est.seed;
    out.push_back(p);
  }
  return out;
}

}  // namespace mactin
