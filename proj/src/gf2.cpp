#include "mactin/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <utility>

namespace mactin {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t cols) { return (cols + kWordBits - 1) / kWordBits; }

}  // namespace

BinaryMatrix::BinaryMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_(words_for(cols)), bits_(rows * words_for(cols), 0) {}

BinaryMatrix BinaryMatrix::identity(std::size_t n) {
  BinaryMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BinaryMatrix BinaryMatrix::from_strings(const std::vector<std::string>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  BinaryMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged bit-matrix rows");
    for (std::size_t c = 0; c < cols; ++c) {
      const char ch = rows[r][c];
      if (ch != '0' && ch != '1') throw std::invalid_argument("bit-matrix entries must be 0 or 1");
      m.set(r, c, ch == '1');
    }
  }
  return m;
}

bool BinaryMatrix::get(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("bit-matrix index");
  return (row_words(r)[c / kWordBits] >> (c % kWordBits)) & 1U;
}

void BinaryMatrix::set(std::size_t r, std::size_t c, bool value) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("bit-matrix index");
  const std::uint64_t mask = std::uint64_t{1} << (c % kWordBits);
  auto& w = row_words(r)[c / kWordBits];
  w = value ? (w | mask) : (w & ~mask);
}

BinaryMatrix BinaryMatrix::operator*(const BinaryMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("bit-matrix product: shape mismatch");
  BinaryMatrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t* dst = out.row_words(r);
    for (std::size_t k = 0; k < cols_; ++k) {
      if (!get(r, k)) continue;
      const std::uint64_t* src = rhs.row_words(k);
      for (std::size_t w = 0; w < out.words_; ++w) dst[w] ^= src[w];
    }
  }
  return out;
}

bool BinaryMatrix::is_zero() const noexcept {
  return std::all_of(bits_.begin(), bits_.end(), [](std::uint64_t w) { return w == 0; });
}

std::string BinaryMatrix::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out += ' ';
      out += get(r, c) ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

BinaryMatrix hconcat(const BinaryMatrix& a, const BinaryMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hconcat: row counts differ");
  BinaryMatrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (a.get(r, c)) out.set(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c)
      if (b.get(r, c)) out.set(r, a.cols() + c);
  }
  return out;
}

BinaryMatrix vconcat(const BinaryMatrix& a, const BinaryMatrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vconcat: column counts differ");
  BinaryMatrix out(a.rows() + b.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (a.get(r, c)) out.set(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c)
      if (b.get(r, c)) out.set(a.rows() + r, c);
  return out;
}

std::size_t rank_f2(BinaryMatrix m) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols_ && rank < m.rows_; ++col) {
    const std::size_t w = col / kWordBits;
    const std::uint64_t mask = std::uint64_t{1} << (col % kWordBits);
    std::size_t pivot = rank;
    while (pivot < m.rows_ && !(m.row_words(pivot)[w] & mask)) ++pivot;
    if (pivot == m.rows_) continue;
    if (pivot != rank)
      std::swap_ranges(m.row_words(pivot), m.row_words(pivot) + m.words_, m.row_words(rank));
    const std::uint64_t* prow = m.row_words(rank);
    for (std::size_t r = rank + 1; r < m.rows_; ++r) {
      std::uint64_t* row = m.row_words(r);
      if (!(row[w] & mask)) continue;
      for (std::size_t k = w; k < m.words_; ++k) row[k] ^= prow[k];
    }
    ++rank;
  }
  return rank;
}

BinaryMatrix down_shift(std::size_t q, std::size_t s) {
  BinaryMatrix m(q, q);
  for (std::size_t c = 0; c + s < q; ++c) m.set(c + s, c);
  return m;
}

}  // namespace mactin
