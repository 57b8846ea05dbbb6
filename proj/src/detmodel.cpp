#include "mactin/detmodel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mactin/errors.hpp"

namespace mactin {

int bit_levels(double snr_linear) {
  if (!(snr_linear > 0.0) || !std::isfinite(snr_linear))
    throw DomainError("bit_levels: SNR must be positive and finite");
  return std::max(0, static_cast<int>(std::ceil(std::log2(snr_linear))));
}

bool in_det_region(int n1, int n2, int m1, int m21, int m22) noexcept {
  if (n1 < 0 || n2 < 0 || m1 < 0 || m21 < 0 || m22 < 0) return false;
  const bool one_strong = n1 >= n2;
  const int n_weak = one_strong ? n2 : n1;
  const int m_weak = one_strong ? m21 : m1;
  return m1 + m21 <= std::max(n1, n2) && m_weak <= n_weak && m22 <= n2;
}

DetModelParams DetModelParams::make(int n1, int n2, int m1, int m21, int m22) {
  if (!in_det_region(n1, n2, m1, m21, m22)) {
    throw DomainError("tuple (" + std::to_string(m1) + "," + std::to_string(m21) + "," +
                      std::to_string(m22) + ") violates the deterministic region for (n1,n2)=(" +
                      std::to_string(n1) + "," + std::to_string(n2) + ")");
  }
  DetModelParams p;
  p.n1 = n1;
  p.n2 = n2;
  p.q = std::max(n1, n2);
  p.m1 = m1;
  p.m21 = m21;
  p.m22 = m22;
  p.strong = n1 >= n2 ? User::One : User::Two;
  const int ns = p.n_strong();
  const int nw = p.n_weak();
  const int ms = p.m_strong();
  const int mw = p.m_weak();
  p.strong_top = std::min(std::max(ms + mw - nw, 0), ns - nw);
  p.strong_bottom = std::min(ms, nw - mw);
  return p;
}

DetModelParams DetModelParams::boundary(int n1, int n2, int m_weak) {
  const int q = std::max(n1, n2);
  return n1 >= n2 ? make(n1, n2, q - m_weak, m_weak, n2) : make(n1, n2, m_weak, q - m_weak, n2);
}

namespace {

void place_identity(BinaryMatrix& m, int row0, int col0, int n) {
  for (int i = 0; i < n; ++i) m.set(static_cast<std::size_t>(row0 + i), static_cast<std::size_t>(col0 + i));
}

}  // namespace

Generators build_generators(const DetModelParams& p) {
  if (!in_det_region(p.n1, p.n2, p.m1, p.m21, p.m22) || p.q != std::max(p.n1, p.n2))
    throw DomainError("build_generators: parameters outside the deterministic region");
  const int ns = p.n_strong();
  const int nw = p.n_weak();
  const int ms = p.m_strong();
  const int mw = p.m_weak();
  if ((p.strong == User::One) != (p.n1 >= p.n2))
    throw DomainError("build_generators: strong-user flag disagrees with level counts");
  if (p.strong_top < 0 || p.strong_bottom < 0 || p.strong_top + p.strong_bottom != ms ||
      p.strong_top > ns - nw || p.strong_bottom > nw - mw) {
    throw DomainError("build_generators: inconsistent split of the strong user's message");
  }

  // Strong user: F_top, zeros, (rows aligned with the weak user's bits), zeros, F_bottom.
  BinaryMatrix strong(static_cast<std::size_t>(ns), static_cast<std::size_t>(ms));
  place_identity(strong, 0, 0, p.strong_top);
  place_identity(strong, ns - p.strong_bottom, p.strong_top, p.strong_bottom);

  // Weak user: F on its top levels, zero below.
  BinaryMatrix weak(static_cast<std::size_t>(ns), static_cast<std::size_t>(mw));
  place_identity(weak, 0, 0, mw);

  BinaryMatrix clean(static_cast<std::size_t>(p.n2), static_cast<std::size_t>(p.m22));
  place_identity(clean, 0, 0, p.m22);

  if (p.strong == User::One) return {std::move(strong), std::move(weak), std::move(clean)};
  return {std::move(weak), std::move(strong), std::move(clean)};
}

DetMutualInfo det_tin_mi(const DetModelParams& p, const Generators& g) {
  const auto q = static_cast<std::size_t>(p.q);
  const BinaryMatrix a = down_shift(q, q - static_cast<std::size_t>(p.n1)) * g.g1;
  const BinaryMatrix b = down_shift(q, q - static_cast<std::size_t>(p.n2)) * g.g21;
  const auto joint = static_cast<int>(rank_f2(hconcat(a, b)));
  return {joint - static_cast<int>(rank_f2(b)), joint - static_cast<int>(rank_f2(a)),
          static_cast<int>(rank_f2(g.g22))};
}

DetMutualInfo det_tin_mi(const DetModelParams& p) { return det_tin_mi(p, build_generators(p)); }

}  // namespace mactin
