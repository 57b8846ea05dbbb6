#include "mactin/density.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "mactin/errors.hpp"
#include "mactin/parallel.hpp"
#include "mactin/rng.hpp"

namespace mactin {

namespace {

constexpr double kLn2 = std::numbers::ln2;
// exp(-60) is below double resolution relative to the leading term.
constexpr double kPruneBelow = -60.0;
constexpr std::size_t kChunk = 4096;

template <class Fn>
double log_sum_exp(std::size_t n, Fn&& exponent) {
  thread_local std::vector<double> scratch;
  scratch.resize(n);
  double peak = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < n; ++k) {
    scratch[k] = exponent(k);
    peak = std::max(peak, scratch[k]);
  }
  double sum = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double e = scratch[k] - peak;
    if (e > kPruneBelow) sum += std::exp(e);
  }
  return peak + std::log(sum);
}

std::vector<Point> received(const InputSpec* in, double gain) {
  if (in == nullptr || in->is_gaussian()) return {Point{}};
  const auto& c = std::get<Constellation>(in->kind);
  std::vector<Point> out(c.points().begin(), c.points().end());
  for (auto& p : out) p *= gain;
  return out;
}

}  // namespace

User user_of(Role r) noexcept { return r == Role::User1 ? User::One : User::Two; }

double InputSpec::energy() const noexcept {
  if (const auto* g = std::get_if<GaussianInput>(&kind)) return g->variance;
  return std::get<Constellation>(kind).mean_energy();
}

bool InputSpec::is_degenerate() const noexcept {
  if (const auto* g = std::get_if<GaussianInput>(&kind)) return g->variance == 0.0;
  return std::get<Constellation>(kind).size() == 1;
}

TinDensity::TinDensity(const InputSpec& own, double h_own, const InputSpec* interferer, double h_int)
    : own_discrete_(!own.is_gaussian()), h_own_(h_own), interferer_rx_(received(interferer, h_int)) {
  if (interferer != nullptr && interferer->is_gaussian())
    noise_var_ += h_int * h_int * std::get<GaussianInput>(interferer->kind).variance;
  const auto n_int = static_cast<double>(interferer_rx_.size());
  log_norm_num_ = -std::log(n_int) - std::log(std::numbers::pi * noise_var_);
  if (own_discrete_) {
    const auto own_rx = received(&own, h_own);
    joint_rx_.reserve(own_rx.size() * interferer_rx_.size());
    for (const auto& o : own_rx)
      for (const auto& i : interferer_rx_) joint_rx_.push_back(o + i);
    log_norm_den_ = -std::log(static_cast<double>(joint_rx_.size())) - std::log(std::numbers::pi * noise_var_);
  } else {
    own_gauss_power_ = h_own * h_own * std::get<GaussianInput>(own.kind).variance;
    log_norm_den_ = -std::log(n_int) - std::log(std::numbers::pi * (noise_var_ + own_gauss_power_));
  }
}

double TinDensity::operator()(Point y, Point x_own) const {
  const Point centre = y - h_own_ * x_own;
  const double inv_var = 1.0 / noise_var_;
  const double log_num = log_norm_num_ + log_sum_exp(interferer_rx_.size(), [&](std::size_t k) {
                           return -std::norm(centre - interferer_rx_[k]) * inv_var;
                         });
  double log_den = log_norm_den_;
  if (own_discrete_) {
    log_den += log_sum_exp(joint_rx_.size(),
                           [&](std::size_t k) { return -std::norm(y - joint_rx_[k]) * inv_var; });
  } else {
    const double inv_total = 1.0 / (noise_var_ + own_gauss_power_);
    log_den += log_sum_exp(interferer_rx_.size(),
                           [&](std::size_t k) { return -std::norm(y - interferer_rx_[k]) * inv_total; });
  }
  return (log_num - log_den) / kLn2;
}

double info_density_tin(Point y, Point x_own, const Constellation& own, const Constellation* interferer,
                        double h_own, double h_int) {
  const InputSpec own_spec = InputSpec::discrete(own, Role::User1);
  if (interferer == nullptr) return TinDensity(own_spec, h_own, nullptr, h_int)(y, x_own);
  const InputSpec int_spec = InputSpec::discrete(*interferer, Role::User2Sub1);
  return TinDensity(own_spec, h_own, &int_spec, h_int)(y, x_own);
}

namespace {

void check_power(const ChannelConfig& cfg, const InputSpec& in) {
  const double budget = cfg.power(user_of(in.role));
  const double e = in.energy();
  if (!(e >= 0.0) || e > budget * (1.0 + 1e-9) + 1e-12)
    throw DomainError("input energy " + std::to_string(e) + " exceeds the power budget " +
                      std::to_string(budget));
}

void check_pairing(const InputSpec& own, const std::optional<InputSpec>& interferer) {
  if (!interferer) return;
  const bool ok = (own.role == Role::User1 && interferer->role == Role::User2Sub1) ||
                  (own.role == Role::User2Sub1 && interferer->role == Role::User1);
  if (!ok) throw DomainError("interferer must occupy the overlapping sub-block of the other user");
}

Point draw_input(const InputSpec& in, const SampleStream& rng, std::uint64_t sample, std::size_t index,
                 std::uint32_t draw) {
  if (const auto* g = std::get_if<GaussianInput>(&in.kind)) {
    const auto [re, im] = rng.normal_pair(sample, draw);
    const double s = std::sqrt(g->variance / 2.0);
    return {s * re, s * im};
  }
  return std::get<Constellation>(in.kind)[index];
}

std::size_t cardinality(const InputSpec* in) {
  if (in == nullptr || in->is_gaussian()) return 1;
  return std::get<Constellation>(in->kind).size();
}

}  // namespace

MiDispersion estimate_mi_dispersion(const ChannelConfig& cfg, const InputSpec& own,
                                    const std::optional<InputSpec>& interferer, std::size_t samples,
                                    std::uint64_t seed) {
  cfg.validate();
  if (samples < 2) throw DomainError("estimate_mi_dispersion: need at least two samples");
  check_pairing(own, interferer);
  check_power(cfg, own);
  if (interferer) check_power(cfg, *interferer);

  MiDispersion out;
  out.samples = samples;
  if (own.is_degenerate()) return out;

  const double h_own = cfg.gain(user_of(own.role));
  const double h_int = interferer ? cfg.gain(user_of(interferer->role)) : 0.0;
  const InputSpec* int_ptr = interferer ? &*interferer : nullptr;
  const TinDensity density(own, h_own, int_ptr, h_int);
  const SampleStream rng(seed);
  const std::size_t n_own = cardinality(&own);
  const std::size_t n_int = cardinality(int_ptr);

  std::vector<double> values(samples);
  const std::size_t chunks = (samples + kChunk - 1) / kChunk;
  parallel_for(chunks, [&](std::size_t chunk) {
    const std::size_t end = std::min(samples, (chunk + 1) * kChunk);
    for (std::size_t s = chunk * kChunk; s < end; ++s) {
      const auto [zr, zi] = rng.normal_pair(s, 0);
      const auto [io, ii] = rng.index_pair(s, 1, n_own, n_int);
      const Point x_own = draw_input(own, rng, s, io, 2);
      const Point x_int = int_ptr ? draw_input(*int_ptr, rng, s, ii, 3) : Point{};
      const Point y = h_own * x_own + h_int * x_int + Point{zr, zi} * std::numbers::sqrt2 * 0.5;
      values[s] = density(y, x_own);
    }
  });

  const auto n = static_cast<double>(samples);
  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / n;
  double m2 = 0.0;
  double m4 = 0.0;
  for (double v : values) {
    const double d2 = (v - mean) * (v - mean);
    m2 += d2;
    m4 += d2 * d2;
  }
  out.mi = mean;
  out.dispersion = m2 / (n - 1.0);
  out.std_error = std::sqrt(out.dispersion / n);
  const double central4 = m4 / n;
  const double biased_var = m2 / n;
  out.dispersion_std_error = std::sqrt(std::max(0.0, central4 - biased_var * biased_var) / n);
  return out;
}

double constant_gap_bits() noexcept { return std::log2(5.0 * std::numbers::pi * std::numbers::e / 6.0); }

std::array<double, 3> mi_lower_bound(const DetModelParams& p) noexcept {
  const double c = constant_gap_bits();
  return {std::max(0.0, p.m1 - c), std::max(0.0, p.m21 - c), std::max(0.0, p.m22 - c)};
}

}  // namespace mactin
