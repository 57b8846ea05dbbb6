#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mactin/channel.hpp"
#include "mactin/constellation.hpp"
#include "mactin/detmodel.hpp"

namespace mactin {

/// How log2(SNR) enters the weak user's power coefficient.
enum class ExponentMode {
  ExactLog,  ///< un-rounded log2 SNR_k
  Ceiled,    ///< bit-level counts n_k in place of log2 SNR_k
};

/// Transmit constellations of the QAM/TIN scheme.
///
/// `lambda1` is user 1's constellation over its N1 symbols; user 2 uses
/// `lambda21` while it overlaps user 1 and `lambda22` on its clean tail. The
/// strong user's overlapping constellation is a two-layer superposition, the
/// weak user's is a single scaled QAM placed between those layers at the
/// receiver.
struct SignalingDesign {
  Constellation lambda1;
  Constellation lambda21;
  Constellation lambda22;
  User strong = User::One;
  double eta = 1.0;        ///< shared normalisation of the overlapping sub-block
  double eta_prime = 1.0;  ///< normalisation of the clean tail
  double strong_energy = 0.0;  ///< E|F_bottom + 2^{n_weak/2} F_top|^2
  double weak_energy = 0.0;    ///< E|2^{weak_exponent/2} F_weak|^2
  double weak_exponent = 0.0;  ///< log2 SNR_s - m_w + n_w - log2 SNR_w (or its ceiled form)
};

/// Unit-spacing layered energy of the strong user:
/// ((2^bottom - 1) + 2^{n_weak} (2^top - 1)) / 6.
double strong_layer_energy(int n_weak, int top, int bottom) noexcept;

/// Energy of the weak user's scaled unit QAM: 2^{exponent} (2^{m_weak} - 1) / 6.
double weak_layer_energy(double exponent, int m_weak) noexcept;

/// Builds the three constellations for the channel and deterministic design
/// point. Throws ConfigError when `p` disagrees with the bit-levels or roles
/// implied by `cfg`, UnsupportedOrder when any layer would need an odd order.
SignalingDesign build_design(const ChannelConfig& cfg, const DetModelParams& p,
                             ExponentMode mode = ExponentMode::ExactLog);

/// Minimum distance of the noiseless received overlap {h1 x1 + h2 x21}.
/// Returns 0 if two label pairs land on the same point.
double min_distance_check(const SignalingDesign& design, const ChannelConfig& cfg);

/// Maps interleaved code bits (one bit per byte, MSB first within a symbol) to
/// symbols. User 1 takes N1 symbols from lambda1; user 2 takes its first N1
/// symbols from lambda21 and the remaining N2 - N1 from lambda22.
std::vector<Point> map_bits_to_symbols(std::span<const std::uint8_t> bits,
                                       const SignalingDesign& design, long n1, long n2, User user);

}  // namespace mactin
