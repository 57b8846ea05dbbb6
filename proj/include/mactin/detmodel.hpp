#pragma once

#include "mactin/gf2.hpp"

namespace mactin {

enum class User { One = 1, Two = 2 };

constexpr User other(User u) noexcept { return u == User::One ? User::Two : User::One; }

/// Number of deterministic bit-levels for a linear SNR: max(0, ceil(log2 snr)).
int bit_levels(double snr_linear);

/// Parameters of the two-user deterministic MAC with a clean tail sub-block.
///
/// m21 is user 2's rate on the sub-block that overlaps user 1; m22 is its rate
/// on the interference-free tail. The user with more bit-levels is "strong";
/// its message is split into a top part (above the weak user's levels) and a
/// bottom part (below the levels occupied by the weak user's bits).
struct DetModelParams {
  int n1 = 0;
  int n2 = 0;
  int q = 0;
  int m1 = 0;
  int m21 = 0;
  int m22 = 0;
  User strong = User::One;
  int strong_top = 0;
  int strong_bottom = 0;

  /// Resolves roles (ties go to user 1), computes the canonical split and
  /// checks region membership. Throws DomainError outside the region.
  static DetModelParams make(int n1, int n2, int m1, int m21, int m22);

  /// Boundary point: the sum-rate and clean-tail constraints hold with equality.
  /// `m_weak` is the weak user's sub-block-1 rate.
  static DetModelParams boundary(int n1, int n2, int m_weak);

  int n_strong() const noexcept { return strong == User::One ? n1 : n2; }
  int n_weak() const noexcept { return strong == User::One ? n2 : n1; }
  int m_strong() const noexcept { return strong == User::One ? m1 : m21; }
  int m_weak() const noexcept { return strong == User::One ? m21 : m1; }

  bool is_boundary() const noexcept { return m1 + m21 == q && m22 == n2; }
};

/// Region of achievable (m1, m21, m22): m1 + m21 <= max(n1, n2), the weak
/// user's rate <= its own level count, m22 <= n2, everything non-negative.
bool in_det_region(int n1, int n2, int m1, int m21, int m22) noexcept;

struct Generators {
  BinaryMatrix g1;   ///< q x m1
  BinaryMatrix g21;  ///< q x m21
  BinaryMatrix g22;  ///< n2 x m22
};

/// Stacked generator matrices with identity F blocks. Throws DomainError when
/// the split in `p` does not fit the level layout.
Generators build_generators(const DetModelParams& p);

struct DetMutualInfo {
  int i1 = 0;
  int i21 = 0;
  int i22 = 0;
  bool operator==(const DetMutualInfo&) const = default;
};

/// Rank-based TIN mutual information of each message part:
///   I1  = rank([S^{q-n1} G1, S^{q-n2} G21]) - rank(S^{q-n2} G21)
///   I21 = rank([S^{q-n1} G1, S^{q-n2} G21]) - rank(S^{q-n1} G1)
///   I22 = rank(G22)
DetMutualInfo det_tin_mi(const DetModelParams& p, const Generators& g);
DetMutualInfo det_tin_mi(const DetModelParams& p);

}  // namespace mactin
