#include "mactin/rng.hpp"

#include <cmath>
#include <numbers>

namespace mactin {

namespace {

constexpr std::uint32_t kWeylA = 0x9E3779B9;
constexpr std::uint32_t kWeylB = 0xBB67AE85;
constexpr std::uint32_t kMulA = 0xD2511F53;
constexpr std::uint32_t kMulB = 0xCD9E8D57;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& lo, std::uint32_t& hi) {
  const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
  lo = static_cast<std::uint32_t>(p);
  hi = static_cast<std::uint32_t>(p >> 32);
}

inline std::uint64_t join(std::uint32_t hi, std::uint32_t lo) {
  return (static_cast<std::uint64_t>(hi) << 32) | lo;
}

// (0, 1]: never zero, so log() in Box-Muller stays finite.
inline double unit_open(std::uint64_t bits) {
  return (static_cast<double>(bits >> 11) + 1.0) * 0x1.0p-53;
}

// Multiply-shift onto [0, n) using the top 32 bits; n never exceeds 2^32 here.
inline std::size_t bounded(std::uint64_t bits, std::size_t n) {
  return static_cast<std::size_t>(((bits >> 32) * static_cast<std::uint64_t>(n)) >> 32);
}

}  // namespace

Philox4x32::Counter Philox4x32::generate(Counter ctr, Key key) noexcept {
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      key[0] += kWeylA;
      key[1] += kWeylB;
    }
    std::uint32_t lo0, hi0, lo1, hi1;
    mulhilo(kMulA, ctr[0], lo0, hi0);
    mulhilo(kMulB, ctr[2], lo1, hi1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
  }
  return ctr;
}

SampleStream::SampleStream(std::uint64_t seed) noexcept
    : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)} {}

Philox4x32::Counter SampleStream::block(std::uint64_t sample, std::uint32_t draw) const noexcept {
  return Philox4x32::generate({static_cast<std::uint32_t>(sample), static_cast<std::uint32_t>(sample >> 32),
                               draw, 0x6d616374U},
                              key_);
}

std::pair<double, double> SampleStream::normal_pair(std::uint64_t sample, std::uint32_t draw) const noexcept {
  const auto w = block(sample, draw);
  const double u1 = unit_open(join(w[0], w[1]));
  const double u2 = unit_open(join(w[2], w[3]));
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  return {r * std::cos(theta), r * std::sin(theta)};
}

std::pair<std::size_t, std::size_t> SampleStream::index_pair(std::uint64_t sample, std::uint32_t draw,
                                                             std::size_t n_a, std::size_t n_b) const noexcept {
  const auto w = block(sample, draw);
  return {bounded(join(w[0], w[1]), n_a), bounded(join(w[2], w[3]), n_b)};
}

std::uint64_t derive_seed(std::uint64_t root, std::uint64_t a, std::uint64_t b, std::uint64_t c) noexcept {
  Philox4x32::Key key{static_cast<std::uint32_t>(root), static_cast<std::uint32_t>(root >> 32)};
  auto w = Philox4x32::generate({static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                                 static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(c)},
                                key);
  // Fold the high halves of b and c in with a second keyed round.
  key = {w[0], w[1]};
  w = Philox4x32::generate({w[2], w[3], static_cast<std::uint32_t>(b >> 32), static_cast<std::uint32_t>(c >> 32)},
                           key);
  return join(w[0], w[1]);
}

}  // namespace mactin
