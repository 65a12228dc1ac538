#include "cygoppa/linbin.hpp"

#include <algorithm>
#include <bit>

namespace cygoppa {

void BitVector::operator^=(const BitVector& o) {
  if (n_ != o.n_) fail("length_mismatch", "xor of vectors with different lengths");
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
}

std::size_t BitVector::weight() const {
  std::size_t s = 0;
  for (std::uint64_t x : w_) s += static_cast<std::size_t>(std::popcount(x));
  return s;
}

bool BitVector::is_zero() const {
  return std::all_of(w_.begin(), w_.end(), [](std::uint64_t x) { return x == 0; });
}

BitVector BitVector::rotated_right(std::size_t k) const {
  BitVector out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    if (get(i)) out.set((i + k) % n_, true);
  return out;
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BitMatrix BitMatrix::vstack(const BitMatrix& top, const BitMatrix& bottom) {
  if (top.cols() != bottom.cols()) fail("length_mismatch", "stacking matrices of unequal width");
  BitMatrix m(top.rows() + bottom.rows(), top.cols());
  std::copy(top.data_.begin(), top.data_.end(), m.data_.begin());
  std::copy(bottom.data_.begin(), bottom.data_.end(),
            m.data_.begin() + static_cast<std::ptrdiff_t>(top.rows() * top.wr_));
  return m;
}

void BitMatrix::xor_rows(std::size_t dst, std::size_t src) {
  std::uint64_t* d = data_.data() + dst * wr_;
  const std::uint64_t* s = data_.data() + src * wr_;
  for (std::size_t i = 0; i < wr_; ++i) d[i] ^= s[i];
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(a * wr_),
                   data_.begin() + static_cast<std::ptrdiff_t>((a + 1) * wr_),
                   data_.begin() + static_cast<std::ptrdiff_t>(b * wr_));
}

BitVector BitMatrix::row(std::size_t r) const {
  BitVector v(cols_);
  for (std::size_t c = 0; c < cols_; ++c)
    if (get(r, c)) v.set(c, true);
  return v;
}

void BitMatrix::set_row(std::size_t r, const BitVector& v) {
  if (v.size() != cols_) fail("length_mismatch", "row width mismatch");
  std::copy(v.words().begin(), v.words().end(),
            data_.begin() + static_cast<std::ptrdiff_t>(r * wr_));
}

std::size_t BitMatrix::rref() {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
    std::size_t pivot = rows_;
    for (std::size_t r = rank; r < rows_; ++r) {
      if (get(r, c)) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows_) continue;
    swap_rows(rank, pivot);
    for (std::size_t r = 0; r < rows_; ++r)
      if (r != rank && get(r, c)) xor_rows(r, rank);
    ++rank;
  }
  return rank;
}

std::size_t BitMatrix::rank() const {
  BitMatrix copy = *this;
  return copy.rref();
}

BitMatrix BitMatrix::null_space() const {
  BitMatrix red = *this;
  red.rref();
  std::vector<std::size_t> pivot_row(cols_, SIZE_MAX);
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    if (red.get(r, c)) {
      pivot_row[c] = r;
      pivots.push_back(c);
      ++r;
    }
  }
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < cols_; ++c)
    if (pivot_row[c] == SIZE_MAX) free_cols.push_back(c);

  BitMatrix basis(free_cols.size(), cols_);
  for (std::size_t i = 0; i < free_cols.size(); ++i) {
    const std::size_t fc = free_cols[i];
    basis.set(i, fc, true);
    for (std::size_t pc : pivots)
      if (red.get(pivot_row[pc], fc)) basis.set(i, pc, true);
  }
  return basis;
}

bool BitMatrix::multiplies_to_zero(const BitVector& x) const {
  if (x.size() != cols_) fail("length_mismatch", "vector length does not match matrix width");
  for (std::size_t r = 0; r < rows_; ++r) {
    const std::uint64_t* row = data_.data() + r * wr_;
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < wr_; ++i) acc ^= row[i] & x.words()[i];
    if (std::popcount(acc) & 1) return false;
  }
  return true;
}

std::string BitMatrix::row_hex(std::size_t r) const {
  std::string digits;
  for (std::size_t c = 0; c < cols_; c += 4) {
    unsigned nib = 0;
    for (unsigned b = 0; b < 4 && c + b < cols_; ++b) nib |= unsigned(get(r, c + b)) << b;
    digits += "0123456789ABCDEF"[nib];
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  std::reverse(digits.begin(), digits.end());
  return "0x" + digits;
}

BinaryCode BinaryCode::from_parity_bits(const BitMatrix& parity) {
  BitMatrix gen = parity.null_space();
  gen.rref();
  BitMatrix check = gen.rows() == 0 ? BitMatrix::identity(parity.cols()) : gen.null_space();
  check.rref();
  return BinaryCode(parity.cols(), gen.rows(), std::move(gen), std::move(check));
}

BinaryCode BinaryCode::from_generator(const BitMatrix& rows) {
  BitMatrix gen = rows;
  const std::size_t rank = gen.rref();
  BitMatrix compact(rank, rows.cols());
  for (std::size_t r = 0; r < rank; ++r) compact.set_row(r, gen.row(r));
  BitMatrix check = rank == 0 ? BitMatrix::identity(rows.cols()) : compact.null_space();
  check.rref();
  return BinaryCode(rows.cols(), rank, std::move(compact), std::move(check));
}

bool BinaryCode::contains(const BitVector& word) const {
  if (word.size() != n_) fail("length_mismatch", "word length differs from code length");
  return check_.multiplies_to_zero(word);
}

BinaryCode BinaryCode::intersection(const BinaryCode& a, const BinaryCode& b) {
  if (a.n() != b.n()) fail("length_mismatch", "intersecting codes of different lengths");
  return from_parity_bits(BitMatrix::vstack(a.parity_check(), b.parity_check()));
}

BitMatrix expand_to_bits(const FieldMatrix& m) {
  const unsigned deg = m.spec().degree();
  BitMatrix out(m.rows() * deg, m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const std::uint32_t e = m.at(r, c);
      for (unsigned bit = 0; bit < deg; ++bit)
        if ((e >> bit) & 1) out.set(r * deg + bit, c, true);
    }
  }
  return out;
}

}  // namespace cygoppa
