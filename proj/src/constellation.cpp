#include "mactin/constellation.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <limits>
#include <ostream>
#include <set>
#include <string>
#include <utility>

#include "mactin/errors.hpp"

namespace mactin {

namespace {

using GridKey = std::pair<std::int64_t, std::int64_t>;

// Points from scaled QAM grids are exact dyadic multiples of the pitch in
// most uses; the 1e-9 relative quantum absorbs the rest.
double snap_quantum(std::span<const Point> points) {
  double extent = 0.0;
  for (const auto& p : points) extent = std::max({extent, std::abs(p.real()), std::abs(p.imag())});
  return 1e-9 * std::max(extent, 1e-300);
}

GridKey snap(const Point& p, double quantum) {
  return {std::llround(p.real() / quantum), std::llround(p.imag() / quantum)};
}

unsigned gray_decode(unsigned g) {
  unsigned b = g;
  for (unsigned shift = 1; shift < 32; shift <<= 1) b ^= b >> shift;
  return b;
}

}  // namespace

Constellation::Constellation() : Constellation(std::vector<Point>{Point{}}) {}

Constellation::Constellation(std::vector<Point> points) : points_(std::move(points)) {
  if (points_.empty()) throw DomainError("constellation must contain at least one point");
  double energy = 0.0;
  for (const auto& p : points_) energy += std::norm(p);
  mean_energy_ = energy / static_cast<double>(points_.size());
  min_distance_ = min_pairwise_distance(points_);
}

Point Constellation::mean() const noexcept {
  Point sum{};
  for (const auto& p : points_) sum += p;
  return sum / static_cast<double>(points_.size());
}

int Constellation::bits() const noexcept {
  const auto n = points_.size();
  if (!std::has_single_bit(n)) return -1;
  return std::countr_zero(n);
}

Constellation Constellation::scaled(double factor) const {
  std::vector<Point> out(points_.begin(), points_.end());
  for (auto& p : out) p *= factor;
  return Constellation(std::move(out));
}

Constellation regular_qam(int m_bits, double d_min) {
  if (m_bits < 0 || m_bits % 2 != 0)
    throw UnsupportedOrder("regular_qam: only even bit orders form a square QAM (got " +
                           std::to_string(m_bits) + ")");
  if (!(d_min > 0.0)) throw DomainError("regular_qam: minimum distance must be positive");
  if (m_bits > 30) throw UnsupportedOrder("regular_qam: order too large");
  const unsigned half = static_cast<unsigned>(m_bits / 2);
  const unsigned levels = 1U << half;
  const double centre = (static_cast<double>(levels) - 1.0) / 2.0;
  std::vector<Point> pts(std::size_t{1} << m_bits);
  for (std::size_t label = 0; label < pts.size(); ++label) {
    const auto li = static_cast<unsigned>(label >> half);
    const auto lq = static_cast<unsigned>(label & (levels - 1));
    pts[label] = {(gray_decode(li) - centre) * d_min, (gray_decode(lq) - centre) * d_min};
  }
  return Constellation(std::move(pts));
}

Constellation superimpose(const Constellation& a, const Constellation& b, double scale_b) {
  std::vector<Point> sum;
  sum.reserve(a.size() * b.size());
  for (const auto& y : b.points())
    for (const auto& x : a.points()) sum.push_back(x + scale_b * y);

  const double quantum = snap_quantum(sum);
  std::set<GridKey> seen;
  std::vector<Point> unique;
  unique.reserve(sum.size());
  for (const auto& p : sum)
    if (seen.insert(snap(p, quantum)).second) unique.push_back(p);
  return Constellation(std::move(unique));
}

double min_pairwise_distance(std::span<const Point> points) {
  if (points.size() < 2) return std::numeric_limits<double>::infinity();
  std::vector<Point> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end(), [](const Point& l, const Point& r) {
    return l.real() < r.real() || (l.real() == r.real() && l.imag() < r.imag());
  });
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      if (sorted[j].real() - sorted[i].real() >= best) break;
      best = std::min(best, std::abs(sorted[j] - sorted[i]));
    }
  }
  return best;
}

std::size_t distinct_count(std::span<const Point> points) {
  const double quantum = snap_quantum(points);
  std::set<GridKey> keys;
  for (const auto& p : points) keys.insert(snap(p, quantum));
  return keys.size();
}

void write_points_csv(std::ostream& os, const Constellation& c) {
  os << "re,im\n" << std::setprecision(12);
  for (const auto& p : c.points()) os << p.real() << ',' << p.imag() << '\n';
}

}  // namespace mactin
