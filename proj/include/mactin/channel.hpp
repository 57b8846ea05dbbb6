#pragma once

#include "mactin/detmodel.hpp"

namespace mactin {

/// Two-user uplink with real (phase-compensated) gains. User 1 occupies the
/// first `blocklength1` symbols; user 2 spans `blocklength2 >= blocklength1`.
struct ChannelConfig {
  double h1 = 1.0;
  double h2 = 1.0;
  double p1 = 1.0;
  double p2 = 1.0;
  long blocklength1 = 1;
  long blocklength2 = 1;
  double eps1 = 0.5;
  double eps2 = 0.5;

  /// Builds a config from SNRs in dB; gains follow from SNR_k = P_k h_k^2.
  static ChannelConfig from_snr_db(double snr1_db, double snr2_db, long blocklength1,
                                   long blocklength2, double eps1, double eps2, double p1 = 1.0,
                                   double p2 = 1.0);

  double snr1() const noexcept { return p1 * h1 * h1; }
  double snr2() const noexcept { return p2 * h2 * h2; }
  double snr(User u) const noexcept { return u == User::One ? snr1() : snr2(); }
  double gain(User u) const noexcept { return u == User::One ? h1 : h2; }
  double power(User u) const noexcept { return u == User::One ? p1 : p2; }

  /// User with more deterministic bit-levels (ties resolve to user 1). Away
  /// from ties this is the user with the larger received SNR.
  User strong_user() const;

  /// Throws ConfigError on non-positive powers/SNRs, N1 > N2 or eps outside (0,1).
  void validate() const;
};

double db_to_linear(double db) noexcept;

/// (SNR1, SNR2) = (12, 24) dB, (eps1, eps2) = (1e-6, 1e-5), (N1, N2) = (150, 200).
ChannelConfig reference_config();

}  // namespace mactin
