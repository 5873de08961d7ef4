#ifndef BMAT_BOOLMAT_HPP_
#define BMAT_BOOLMAT_HPP_

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bmat/bitset.hpp"

namespace bmat {

/// Dense 0/1 matrix over the Boolean semiring (1+1=1), rows bit-packed into
/// 64-bit words. Values are immutable by convention: the algebra below never
/// mutates its operands and always returns fresh matrices.
///
/// The empty matrix is rejected; rows >= 1 and cols >= 1 always hold.
/// Bits past column cols-1 in the last word of each row stay zero.
class BoolMatrix {
 public:
  BoolMatrix(int rows, int cols);

  static BoolMatrix zeros(int rows, int cols) { return BoolMatrix(rows, cols); }
  static BoolMatrix ones(int rows, int cols);
  static BoolMatrix identity(int n);
  /// Row-per-string constructor for literals, e.g. {"010", "101", "100"}.
  static BoolMatrix from_strings(std::initializer_list<std::string_view> rows);
  static BoolMatrix from_strings(const std::vector<std::string>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  bool at(int i, int j) const {
    return (word(i, j / Bitset::kWordBits) >> (static_cast<unsigned>(j) % Bitset::kWordBits)) & 1u;
  }
  void set(int i, int j, bool v = true);

  int row_words() const { return row_words_; }
  std::span<const std::uint64_t> row_span(int i) const {
    return {bits_.data() + static_cast<std::size_t>(i) * row_words_,
            static_cast<std::size_t>(row_words_)};
  }
  std::span<std::uint64_t> row_span(int i) {
    return {bits_.data() + static_cast<std::size_t>(i) * row_words_,
            static_cast<std::size_t>(row_words_)};
  }

  Bitset row(int i) const;
  Bitset col(int j) const;

  /// True iff rows i and j share a set column.
  bool rows_intersect(int i, int j) const;

  long long count_ones() const;
  bool is_zero() const;
  bool all_ones() const;

  bool operator==(const BoolMatrix&) const = default;

  std::size_t hash() const;

 private:
  std::uint64_t word(int i, int w) const {
    return bits_[static_cast<std::size_t>(i) * row_words_ + w];
  }

  int rows_ = 0;
  int cols_ = 0;
  int row_words_ = 0;
  std::vector<std::uint64_t> bits_;
};

struct BoolMatrixHash {
  std::size_t operator()(const BoolMatrix& m) const { return m.hash(); }
};

/// Bijection on {0..n-1}; realizes the matrix P of a simultaneous row/column
/// relabeling P M P^t.
class Permutation {
 public:
  explicit Permutation(std::vector<int> map);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(map_.size()); }
  int operator()(int i) const { return map_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& map() const { return map_; }

  Permutation inverse() const;
  /// (p * q)(i) = p(q(i)).
  friend Permutation operator*(const Permutation& p, const Permutation& q);

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> map_;
};

// Semiring algebra. Dimension mismatches throw std::invalid_argument.

/// Boolean product: (AB)_{ij} = OR_t (A_{it} AND B_{tj}).
BoolMatrix multiply(const BoolMatrix& a, const BoolMatrix& b);

/// Entrywise OR.
BoolMatrix add(const BoolMatrix& a, const BoolMatrix& b);

BoolMatrix transpose(const BoolMatrix& a);

/// Boolean k-th power by repeated squaring; A^0 = I. Loops that need every
/// intermediate power should multiply iteratively instead.
BoolMatrix power(const BoolMatrix& a, long long k);

/// Simultaneous row/column relabeling: result[i][j] = A[p(i)][p(j)].
/// permute_sym(A, p*q) == permute_sym(permute_sym(A, p), q).
BoolMatrix permute_sym(const BoolMatrix& a, const Permutation& p);

/// True iff B <= A entrywise (B is dominated by A).
bool dominates(const BoolMatrix& a, const BoolMatrix& b);

/// True iff some row or some column is all zeros.
bool has_zero_line(const BoolMatrix& a);

/// Rows x columns selection, in the given order. Out-of-range or empty
/// index lists throw std::invalid_argument.
BoolMatrix submatrix(const BoolMatrix& a, std::span<const int> rowset,
                     std::span<const int> colset);

// Shared text format: optional '#' comment lines, then "ROWS COLS", then
// ROWS lines of COLS characters from {0,1} (spaces ignored on read, never
// written).

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

BoolMatrix read_matrix(std::istream& in);
BoolMatrix parse_matrix(std::string_view text);
void write_matrix(std::ostream& out, const BoolMatrix& m);
std::string to_text(const BoolMatrix& m);

}  // namespace bmat

#endif  // BMAT_BOOLMAT_HPP_
