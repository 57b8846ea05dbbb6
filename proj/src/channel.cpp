#include "mactin/channel.hpp"

#include <cmath>

#include "mactin/errors.hpp"

namespace mactin {

double db_to_linear(double db) noexcept { return std::pow(10.0, db / 10.0); }

ChannelConfig ChannelConfig::from_snr_db(double snr1_db, double snr2_db, long blocklength1,
                                         long blocklength2, double eps1, double eps2, double p1,
                                         double p2) {
  if (!(p1 > 0.0) || !(p2 > 0.0)) throw ConfigError("powers must be positive");
  ChannelConfig cfg;
  cfg.p1 = p1;
  cfg.p2 = p2;
  cfg.h1 = std::sqrt(db_to_linear(snr1_db) / p1);
  cfg.h2 = std::sqrt(db_to_linear(snr2_db) / p2);
  cfg.blocklength1 = blocklength1;
  cfg.blocklength2 = blocklength2;
  cfg.eps1 = eps1;
  cfg.eps2 = eps2;
  cfg.validate();
  return cfg;
}

User ChannelConfig::strong_user() const {
  return bit_levels(snr1()) >= bit_levels(snr2()) ? User::One : User::Two;
}

void ChannelConfig::validate() const {
  if (!(p1 > 0.0) || !(p2 > 0.0) || !std::isfinite(p1) || !std::isfinite(p2))
    throw ConfigError("powers must be positive and finite");
  if (!(snr1() > 0.0) || !(snr2() > 0.0) || !std::isfinite(snr1()) || !std::isfinite(snr2()))
    throw ConfigError("SNRs must be positive and finite");
  if (blocklength1 < 1 || blocklength2 < blocklength1)
    throw ConfigError("blocklengths must satisfy 1 <= N1 <= N2");
  if (!(eps1 > 0.0 && eps1 < 1.0) || !(eps2 > 0.0 && eps2 < 1.0))
    throw ConfigError("error probabilities must lie in (0, 1)");
}

ChannelConfig reference_config() { return ChannelConfig::from_snr_db(12.0, 24.0, 150, 200, 1e-6, 1e-5); }

}  // namespace mactin
