#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hiddensums/errors.hpp"

namespace hiddensums {

using word_t = std::uint64_t;
using bigint = boost::multiprecision::cpp_int;

// Bit-packed vectors and matrices over F2, dimension capped at 64: one
// machine word per row vector.  Coordinate k (0-based in this API, 1-based
// in the usual mathematical writing) lives at bit position k.  All maps act
// on row vectors from the right, v |-> v*M.
inline word_t low_mask(int dim) {
  return dim >= 64 ? ~word_t{0} : (word_t{1} << dim) - 1;
}

class Gf2Vector {
 public:
  Gf2Vector() = default;
  Gf2Vector(int dim, word_t bits) : dim_(dim), bits_(bits & low_mask(dim)) {
    if (dim < 1 || dim > 64) throw DimensionMismatch("vector dimension must be in 1..64");
  }

  static Gf2Vector zero(int dim) { return Gf2Vector(dim, 0); }
  static Gf2Vector unit(int dim, int k) { return Gf2Vector(dim, word_t{1} << k); }

  int dim() const { return dim_; }
  word_t bits() const { return bits_; }
  bool get(int k) const { return (bits_ >> k) & 1; }
  void set(int k, bool v) { bits_ = v ? (bits_ | (word_t{1} << k)) : (bits_ & ~(word_t{1} << k)); }
  bool is_zero() const { return bits_ == 0; }
  int weight() const { return std::popcount(bits_); }

  friend Gf2Vector operator+(const Gf2Vector& a, const Gf2Vector& b) {
    if (a.dim_ != b.dim_) throw DimensionMismatch("vector dimensions differ");
    return Gf2Vector(a.dim_, a.bits_ ^ b.bits_);
  }
  Gf2Vector& operator+=(const Gf2Vector& o) { return *this = *this + o; }

  friend bool operator==(const Gf2Vector&, const Gf2Vector&) = default;

 private:
  int dim_ = 0;
  word_t bits_ = 0;
};

class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(int rows, int cols) : rows_(rows), cols_(cols), bits_(rows, 0) {
    if (rows < 1 || cols < 1 || cols > 64) throw DimensionMismatch("bad matrix shape");
  }

  static Gf2Matrix identity(int n);
  static Gf2Matrix from_rows(const std::vector<Gf2Vector>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  word_t row_bits(int r) const { return bits_[r]; }
  void set_row_bits(int r, word_t b) { bits_[r] = b & low_mask(cols_); }
  Gf2Vector row(int r) const { return Gf2Vector(cols_, bits_[r]); }
  void set_row(int r, const Gf2Vector& v) {
    if (v.dim() != cols_) throw DimensionMismatch("row width differs from column count");
    bits_[r] = v.bits();
  }
  bool get(int r, int c) const { return (bits_[r] >> c) & 1; }
  void set(int r, int c, bool v) {
    bits_[r] = v ? (bits_[r] | (word_t{1} << c)) : (bits_[r] & ~(word_t{1} << c));
  }

  bool is_identity() const;
  bool is_square() const { return rows_ == cols_; }

  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<word_t> bits_;
};

// Row-vector action v*M: XOR of the rows of M selected by the bits of v.
Gf2Vector operator*(const Gf2Vector& v, const Gf2Matrix& m);
Gf2Matrix operator*(const Gf2Matrix& a, const Gf2Matrix& b);

Gf2Matrix transpose(const Gf2Matrix& m);
int rank(const Gf2Matrix& m);
std::optional<Gf2Matrix> try_inverse(const Gf2Matrix& m);
Gf2Matrix inverse(const Gf2Matrix& m);  // throws SingularMatrix
// Gauss-Jordan inverse that counts row XOR operations (attack cost ledger).
Gf2Matrix inverse_counting(const Gf2Matrix& m, std::uint64_t* row_ops);
bool is_invertible(const Gf2Matrix& m);

// Reduced-row-echelon basis of the span of `vectors`; canonical for a
// subspace, pivots in increasing coordinate order.
std::vector<Gf2Vector> rref_basis(std::vector<Gf2Vector> vectors);

// Incremental independence/membership helper over F2.
class SpanTracker {
 public:
  explicit SpanTracker(int dim) : dim_(dim) {}
  // Inserts v if independent from the current span; returns true when inserted.
  bool insert(const Gf2Vector& v);
  bool contains(const Gf2Vector& v) const;
  int dim_span() const { return static_cast<int>(pivot_rows_.size()); }
  int ambient_dim() const { return dim_; }

 private:
  int dim_;
  std::vector<word_t> pivot_rows_;  // echelonized, one pivot per row
  word_t reduce(word_t v) const;
};

// Invertible affine map x |-> x*linear + offset.
struct AffineMap {
  Gf2Matrix linear;
  Gf2Vector offset;

  Gf2Vector operator()(const Gf2Vector& v) const { return v * linear + offset; }
  bool is_identity() const { return offset.is_zero() && linear.is_identity(); }
  friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

// Composition in application order: x |-> g(f(x)).
AffineMap compose(const AffineMap& f, const AffineMap& g);
AffineMap inverse(const AffineMap& f);

// Exact Gaussian binomial [N over d]_2.
bigint gaussian_binomial(int N, int d);

// A d-dimensional subspace of (F2)^N given by its canonical reduced
// row-echelon basis, plus an invertible map sending it onto the canonical
// tail span{e_{n+1},...,e_N} (n = N-d).
struct SubspaceFrame {
  std::vector<Gf2Vector> basis;
  Gf2Matrix to_tail;
};

// Visits every d-dimensional subspace of (F2)^N exactly once, pivot sets in
// lexicographic order, free entries in lexicographic order.
void for_each_subspace(int N, int d, const std::function<void(const SubspaceFrame&)>& fn);
std::vector<SubspaceFrame> enumerate_subspaces(int N, int d);

}  // namespace hiddensums
