#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cygoppa/gf2m.hpp"

namespace cygoppa {

/// Bit-packed vector over GF(2).
class BitVector {
 public:
  explicit BitVector(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }
  bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(std::size_t i, bool v) {
    const std::uint64_t bit = std::uint64_t(1) << (i & 63);
    if (v)
      w_[i >> 6] |= bit;
    else
      w_[i >> 6] &= ~bit;
  }
  void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t(1) << (i & 63); }
  void operator^=(const BitVector& o);
  std::size_t weight() const;
  bool is_zero() const;
  BitVector rotated_right(std::size_t k) const;  // new[(i+k) mod n] = old[i]
  const std::vector<std::uint64_t>& words() const { return w_; }

  bool operator==(const BitVector& o) const { return n_ == o.n_ && w_ == o.w_; }

 private:
  std::size_t n_;
  std::vector<std::uint64_t> w_;
};

/// Bit-packed row-major matrix over GF(2) with word-parallel row operations.
class BitMatrix {
 public:
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), wr_((cols + 63) / 64), data_(rows * wr_, 0) {}

  static BitMatrix identity(std::size_t n);
  static BitMatrix vstack(const BitMatrix& top, const BitMatrix& bottom);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool get(std::size_t r, std::size_t c) const {
    return (data_[r * wr_ + (c >> 6)] >> (c & 63)) & 1;
  }
  void set(std::size_t r, std::size_t c, bool v) {
    const std::uint64_t bit = std::uint64_t(1) << (c & 63);
    if (v)
      data_[r * wr_ + (c >> 6)] |= bit;
    else
      data_[r * wr_ + (c >> 6)] &= ~bit;
  }
  void xor_rows(std::size_t dst, std::size_t src);
  void swap_rows(std::size_t a, std::size_t b);
  BitVector row(std::size_t r) const;
  void set_row(std::size_t r, const BitVector& v);

  /// In-place reduced row echelon form; returns the rank.
  std::size_t rref();
  std::size_t rank() const;
  /// Basis of {x : M x^T = 0}, one independent row per free column.
  BitMatrix null_space() const;
  bool multiplies_to_zero(const BitVector& x) const;  // M x^T == 0

  std::string row_hex(std::size_t r) const;

  bool operator==(const BitMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  std::size_t rows_, cols_, wr_;
  std::vector<std::uint64_t> data_;
};

/// A binary linear code held in canonical form: the generator matrix is the
/// unique RREF basis, so code equality is matrix equality. The stored parity
/// check is the RREF basis of the dual.
class BinaryCode {
 public:
  static BinaryCode from_parity_bits(const BitMatrix& parity);
  static BinaryCode from_generator(const BitMatrix& rows);

  std::size_t n() const { return n_; }
  std::size_t k() const { return k_; }
  const BitMatrix& generator() const { return gen_; }
  const BitMatrix& parity_check() const { return check_; }

  bool contains(const BitVector& word) const;
  bool operator==(const BinaryCode& o) const {
    return n_ == o.n_ && k_ == o.k_ && gen_ == o.gen_;
  }

  static BinaryCode intersection(const BinaryCode& a, const BinaryCode& b);

 private:
  BinaryCode(std::size_t n, std::size_t k, BitMatrix gen, BitMatrix check)
      : n_(n), k_(k), gen_(std::move(gen)), check_(std::move(check)) {}

  std::size_t n_, k_;
  BitMatrix gen_, check_;
};

/// Matrix with entries in one GF(2^m), kept only long enough to be expanded.
class FieldMatrix {
 public:
  FieldMatrix(const FieldSpec& spec, std::size_t rows, std::size_t cols)
      : spec_(&spec), rows_(rows), cols_(cols), e_(rows * cols, 0) {}

  const FieldSpec& spec() const { return *spec_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, const FieldElement& v) {
    if (&v.spec() != spec_) fail("field_mismatch", "entry from a different field");
    e_[r * cols_ + c] = v.mask();
  }

 private:
  const FieldSpec* spec_;
  std::size_t rows_, cols_;
  std::vector<std::uint32_t> e_;
};

/// Binary expansion in the polynomial basis: each field entry becomes an m-bit
/// column block (one bit row per coordinate), so the GF(2) null space of the
/// result is exactly the set of binary vectors annihilated over the big field.
BitMatrix expand_to_bits(const FieldMatrix& m);

}  // namespace cygoppa
