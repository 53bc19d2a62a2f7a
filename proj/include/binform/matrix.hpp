#ifndef BINFORM_MATRIX_HPP
#define BINFORM_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "binform/errors.hpp"

namespace binform {

/// Dense row-major square matrix. index_offset records the label of the
/// first row/column (the families here start at 0, 1 or 2).
template <class T>
class SquareMatrix {
 public:
  explicit SquareMatrix(std::size_t dim, int index_offset = 0)
      : dim_(checked_dim(dim)), index_offset_(index_offset), entries_(dim * dim) {}

  SquareMatrix(std::initializer_list<std::initializer_list<T>> rows, int index_offset = 0)
      : SquareMatrix(rows.size(), index_offset) {
    std::size_t r = 0;
    for (const auto& row : rows) {
      if (row.size() != dim_) throw DomainError("SquareMatrix: ragged initializer");
      std::size_t c = 0;
      for (const auto& v : row) (*this)(r, c++) = v;
      ++r;
    }
  }

  /// Fills entry (r, c) with f(r, c), where r, c are 0-based positions.
  template <class F>
  static SquareMatrix generate(std::size_t dim, F&& f, int index_offset = 0) {
    SquareMatrix m(dim, index_offset);
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t c = 0; c < dim; ++c) m(r, c) = f(r, c);
    }
    return m;
  }

  std::size_t dim() const { return dim_; }
  int index_offset() const { return index_offset_; }

  T& operator()(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }

  std::span<T> row(std::size_t r) { return {entries_.data() + r * dim_, dim_}; }
  std::span<const T> row(std::size_t r) const { return {entries_.data() + r * dim_, dim_}; }

  std::span<T> entries() { return entries_; }
  std::span<const T> entries() const { return entries_; }

  SquareMatrix transposed() const {
    return generate(dim_, [this](std::size_t r, std::size_t c) { return (*this)(c, r); }, index_offset_);
  }

  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
    return a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }

 private:
  static std::size_t checked_dim(std::size_t dim) {
    if (dim == 0) throw DomainError("SquareMatrix: dimension must be positive");
    return dim;
  }

  std::size_t dim_;
  int index_offset_;
  std::vector<T> entries_;
};

using IntMatrix = SquareMatrix<mpz_class>;

/// Entries already reduced into [0, p) for some prime p known to the caller.
using ResidueMatrix = SquareMatrix<std::uint64_t>;

}  // namespace binform

#endif  // BINFORM_MATRIX_HPP
