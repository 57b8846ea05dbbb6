#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "mactin/channel.hpp"
#include "mactin/constellation.hpp"
#include "mactin/detmodel.hpp"

namespace mactin {

/// Which transmitted stream an input describes.
enum class Role {
  User1,      ///< user 1, overlapping symbols 1..N1
  User2Sub1,  ///< user 2, symbols 1..N1 (overlapping)
  User2Sub2,  ///< user 2, symbols N1+1..N2 (clean)
};

User user_of(Role r) noexcept;

/// i.i.d. circularly-symmetric complex Gaussian input with the given variance.
struct GaussianInput {
  double variance = 0.0;
};

struct InputSpec {
  std::variant<Constellation, GaussianInput> kind;
  Role role = Role::User1;

  static InputSpec discrete(Constellation c, Role r) { return {std::move(c), r}; }
  static InputSpec gaussian(double variance, Role r) { return {GaussianInput{variance}, r}; }

  bool is_gaussian() const noexcept { return std::holds_alternative<GaussianInput>(kind); }
  /// Mean transmit energy per symbol.
  double energy() const noexcept;
  /// True when the input is deterministic (singleton or zero variance).
  bool is_degenerate() const noexcept;
};

struct MiDispersion {
  double mi = 0.0;                    ///< bits per symbol
  double dispersion = 0.0;            ///< bits^2 per symbol
  double std_error = 0.0;             ///< standard error of `mi`
  double dispersion_std_error = 0.0;  ///< standard error of `dispersion`
  std::size_t samples = 0;
};

/// TIN information density log2 p(y|x_own) / p(y) for y = h_own x_own +
/// h_int x_int + z, z ~ CN(0,1), with the interferer (if any) folded into the
/// noise. Gaussian interference widens the noise variance; discrete inputs are
/// averaged uniformly. All mixtures are evaluated with max-shifted log-sum-exp.
class TinDensity {
 public:
  TinDensity(const InputSpec& own, double h_own, const InputSpec* interferer, double h_int);

  /// Density in bits for received y and transmitted own symbol x_own.
  double operator()(Point y, Point x_own) const;

 private:
  bool own_discrete_ = true;
  double h_own_ = 0.0;
  double noise_var_ = 1.0;
  double own_gauss_power_ = 0.0;
  double log_norm_num_ = 0.0;
  double log_norm_den_ = 0.0;
  std::vector<Point> interferer_rx_;
  std::vector<Point> joint_rx_;
};

/// Density with discrete own input; `interferer == nullptr` gives the
/// point-to-point case.
double info_density_tin(Point y, Point x_own, const Constellation& own, const Constellation* interferer,
                        double h_own, double h_int);

/// Monte-Carlo mean and variance of the TIN information density.
///
/// The interferer must share the overlapping sub-block with `own` (user 1 with
/// user 2's first sub-block); the clean sub-block takes no interferer. Every
/// random draw is a function of (seed, sample index) only, so the result is
/// identical for any MACTIN_THREADS setting.
MiDispersion estimate_mi_dispersion(const ChannelConfig& cfg, const InputSpec& own,
                                    const std::optional<InputSpec>& interferer, std::size_t samples,
                                    std::uint64_t seed);

/// log2(5 pi e / 6), the gap between a sub-constellation's bit count and its
/// mutual information lower bound.
double constant_gap_bits() noexcept;

/// (m1 - c, m21 - c, m22 - c) with c = constant_gap_bits(), floored at 0.
std::array<double, 3> mi_lower_bound(const DetModelParams& p) noexcept;

}  // namespace mactin
