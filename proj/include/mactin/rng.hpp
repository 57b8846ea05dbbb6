#pragma once

#include <array>
#include <cstdint>
#include <utility>

namespace mactin {

/// Philox4x32-10 counter-based generator (Salmon et al., SC'11): a keyed
/// bijection of a 128-bit counter. Any sample can be regenerated from
/// (key, counter) alone, independent of evaluation order.
struct Philox4x32 {
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static Counter generate(Counter ctr, Key key) noexcept;
};

/// Random draws for Monte-Carlo sample `index` of one substream.
///
/// Each (sample, draw) pair maps to its own Philox block, so the values do
/// not depend on how samples are partitioned across workers.
class SampleStream {
 public:
  explicit SampleStream(std::uint64_t seed) noexcept;

  /// Four independent 32-bit words for draw slot `draw` (< 256) of `sample`.
  Philox4x32::Counter block(std::uint64_t sample, std::uint32_t draw) const noexcept;

  /// Two independent N(0,1) variates (Box-Muller on 53-bit uniforms).
  std::pair<double, double> normal_pair(std::uint64_t sample, std::uint32_t draw) const noexcept;

  /// Two independent uniform indices in [0, n_a) and [0, n_b).
  std::pair<std::size_t, std::size_t> index_pair(std::uint64_t sample, std::uint32_t draw,
                                                  std::size_t n_a, std::size_t n_b) const noexcept;

 private:
  Philox4x32::Key key_;
};

/// Seed of an independent substream keyed by a root seed and a path of up to
/// three labels, e.g. (scheme, design point, sub-block).
std::uint64_t derive_seed(std::uint64_t root, std::uint64_t a, std::uint64_t b = 0,
                          std::uint64_t c = 0) noexcept;

}  // namespace mactin
