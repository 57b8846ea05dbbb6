#pragma once

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

namespace mactin {

using Point = std::complex<double>;

/// Finite set of complex points indexed by bit label.
///
/// The point stored at index `l` is the symbol carrying label `l`; regular QAM
/// constellations use per-axis Gray labels. Min distance and mean energy are
/// computed once at construction. A singleton has no pairs, so its min
/// distance is +infinity.
class Constellation {
 public:
  /// The singleton {0}.
  Constellation();
  explicit Constellation(std::vector<Point> points);

  std::span<const Point> points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  const Point& operator[](std::size_t label) const { return points_.at(label); }

  double min_distance() const noexcept { return min_distance_; }
  double mean_energy() const noexcept { return mean_energy_; }
  Point mean() const noexcept;

  /// Number of label bits when the cardinality is a power of two, else -1.
  int bits() const noexcept;

  Constellation scaled(double factor) const;

 private:
  std::vector<Point> points_;
  double min_distance_ = 0.0;
  double mean_energy_ = 0.0;
};

/// Zero-mean square QAM with 2^m_bits points and spacing d_min on each axis.
/// Odd m_bits throws UnsupportedOrder; d_min must be positive.
Constellation regular_qam(int m_bits, double d_min);

/// Minkowski sum {x + scale_b * y}. Label of the sum is label(y) * |a| + label(x);
/// coincident points keep the first label and drop the rest.
Constellation superimpose(const Constellation& a, const Constellation& b, double scale_b);

/// Smallest distance between two entries of `points` (coincident entries give 0).
/// Sort-and-sweep; +infinity for fewer than two points.
double min_pairwise_distance(std::span<const Point> points);

/// Number of distinct points after snapping to a fine grid relative to the
/// constellation's extent.
std::size_t distinct_count(std::span<const Point> points);

/// Writes `re,im` rows with a header line.
void write_points_csv(std::ostream& os, const Constellation& c);

}  // namespace mactin
