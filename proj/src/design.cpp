#include "mactin/design.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mactin/errors.hpp"

namespace mactin {

double strong_layer_energy(int n_weak, int top, int bottom) noexcept {
  return (std::exp2(bottom) - 1.0 + std::exp2(n_weak) * (std::exp2(top) - 1.0)) / 6.0;
}

double weak_layer_energy(double exponent, int m_weak) noexcept {
  return std::exp2(exponent) * (std::exp2(m_weak) - 1.0) / 6.0;
}

namespace {

void require_even(int bits, const char* what) {
  if (bits % 2 != 0)
    throw UnsupportedOrder(std::string("odd bit order for ") + what + " (" + std::to_string(bits) +
                           "); only square QAM layers are supported");
}

}  // namespace

SignalingDesign build_design(const ChannelConfig& cfg, const DetModelParams& p, ExponentMode mode) {
  cfg.validate();
  if (p.n1 != bit_levels(cfg.snr1()) || p.n2 != bit_levels(cfg.snr2()))
    throw ConfigError("design point bit-levels do not match the channel SNRs");
  if (p.strong != cfg.strong_user())
    throw ConfigError("design point role assignment does not match the channel gains");

  const User s = p.strong;
  const User w = other(s);
  const int nw = p.n_weak();
  const int mw = p.m_weak();
  require_even(nw, "the weak user's level count");
  require_even(p.strong_top, "the strong user's top layer");
  require_even(p.strong_bottom, "the strong user's bottom layer");
  require_even(mw, "the weak user's overlapping sub-block");
  require_even(p.m22, "user 2's clean sub-block");

  const double log_snr_s = mode == ExponentMode::ExactLog ? std::log2(cfg.snr(s)) : p.n_strong();
  const double log_snr_w = mode == ExponentMode::ExactLog ? std::log2(cfg.snr(w)) : nw;

  SignalingDesign d;
  d.strong = s;
  d.strong_energy = strong_layer_energy(nw, p.strong_top, p.strong_bottom);
  d.weak_exponent = log_snr_s - mw + nw - log_snr_w;
  d.weak_energy = weak_layer_energy(d.weak_exponent, mw);
  const double peak = std::max(d.strong_energy, d.weak_energy);
  d.eta = peak > 0.0 ? 1.0 / std::sqrt(peak) : 1.0;

  Constellation strong_c = superimpose(regular_qam(p.strong_bottom, 1.0),
                                       regular_qam(p.strong_top, 1.0), std::exp2(nw / 2));
  if (strong_c.size() != (std::size_t{1} << p.m_strong()))
    throw DomainError("strong user's layers collide; split does not fit the level layout");
  strong_c = strong_c.scaled(d.eta * std::sqrt(cfg.power(s)));
  Constellation weak_c = regular_qam(mw, 1.0).scaled(d.eta * std::sqrt(cfg.power(w)) *
                                                     std::exp2(d.weak_exponent / 2.0));

  const double clean_energy = (std::exp2(p.m22) - 1.0) / 6.0;
  d.eta_prime = p.m22 > 0 ? 1.0 / std::sqrt(clean_energy) : 1.0;
  d.lambda22 = regular_qam(p.m22, 1.0).scaled(d.eta_prime * std::sqrt(cfg.p2));

  if (s == User::One) {
    d.lambda1 = std::move(strong_c);
    d.lambda21 = std::move(weak_c);
  } else {
    d.lambda1 = std::move(weak_c);
    d.lambda21 = std::move(strong_c);
  }
  return d;
}

double min_distance_check(const SignalingDesign& design, const ChannelConfig& cfg) {
  const Constellation received = superimpose(design.lambda1.scaled(cfg.h1), design.lambda21, cfg.h2);
  if (received.size() != design.lambda1.size() * design.lambda21.size()) return 0.0;
  return received.min_distance();
}

namespace {

void append_symbols(std::span<const std::uint8_t> bits, const Constellation& c, long count,
                    std::vector<Point>& out) {
  const int m = c.bits();
  if (m < 0) throw DomainError("constellation cardinality is not a power of two");
  std::size_t pos = 0;
  for (long k = 0; k < count; ++k) {
    std::size_t label = 0;
    for (int b = 0; b < m; ++b) label = (label << 1) | (bits[pos++] & 1U);
    out.push_back(c[label]);
  }
}

}  // namespace

std::vector<Point> map_bits_to_symbols(std::span<const std::uint8_t> bits,
                                       const SignalingDesign& design, long n1, long n2, User user) {
  if (n1 < 0 || n2 < n1) throw DomainError("map_bits_to_symbols: need 0 <= N1 <= N2");
  std::vector<Point> out;
  if (user == User::One) {
    const auto need = static_cast<std::size_t>(n1) * static_cast<std::size_t>(design.lambda1.bits());
    if (design.lambda1.bits() < 0 || bits.size() != need)
      throw DomainError("map_bits_to_symbols: expected " + std::to_string(need) + " bits for user 1, got " +
                        std::to_string(bits.size()));
    out.reserve(static_cast<std::size_t>(n1));
    append_symbols(bits, design.lambda1, n1, out);
    return out;
  }
  const int m21 = design.lambda21.bits();
  const int m22 = design.lambda22.bits();
  if (m21 < 0 || m22 < 0) throw DomainError("constellation cardinality is not a power of two");
  const std::size_t head = static_cast<std::size_t>(n1) * static_cast<std::size_t>(m21);
  const std::size_t need = head + static_cast<std::size_t>(n2 - n1) * static_cast<std::size_t>(m22);
  if (bits.size() != need)
    throw DomainError("map_bits_to_symbols: expected " + std::to_string(need) + " bits for user 2, got " +
                      std::to_string(bits.size()));
  out.reserve(static_cast<std::size_t>(n2));
  append_symbols(bits.first(head), design.lambda21, n1, out);
  append_symbols(bits.subspan(head), design.lambda22, n2 - n1, out);
  return out;
}

}  // namespace mactin
