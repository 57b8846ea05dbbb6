#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace mactin {

/// Dense matrix over F2. Rows are packed into 64-bit words; padding bits are
/// kept at zero so that equality is a plain word comparison.
class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  BinaryMatrix(std::size_t rows, std::size_t cols);

  static BinaryMatrix identity(std::size_t n);

  /// Parses rows of '0'/'1' characters, e.g. {"101", "010"}.
  static BinaryMatrix from_strings(const std::vector<std::string>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  bool get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, bool value = true);

  /// Matrix product with all arithmetic mod 2.
  BinaryMatrix operator*(const BinaryMatrix& rhs) const;

  bool operator==(const BinaryMatrix&) const = default;

  bool is_zero() const noexcept;

  /// One line per row, '0'/'1' characters separated by spaces.
  std::string to_string() const;

 private:
  friend std::size_t rank_f2(BinaryMatrix m);

  std::uint64_t* row_words(std::size_t r) { return bits_.data() + r * words_; }
  const std::uint64_t* row_words(std::size_t r) const { return bits_.data() + r * words_; }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// [a, b]; row counts must agree.
BinaryMatrix hconcat(const BinaryMatrix& a, const BinaryMatrix& b);

/// [a; b]; column counts must agree.
BinaryMatrix vconcat(const BinaryMatrix& a, const BinaryMatrix& b);

/// Exact rank over F2 by Gaussian elimination.
std::size_t rank_f2(BinaryMatrix m);

/// S^s for the q x q down-shift matrix S: ones on the s-th subdiagonal.
/// Shifting by s >= q leaves the zero matrix.
BinaryMatrix down_shift(std::size_t q, std::size_t s);

}  // namespace mactin
