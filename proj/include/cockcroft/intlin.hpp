#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "cockcroft/integer.hpp"

namespace cockcroft {

/// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::vector<Integer> row(std::size_t i) const;
  void append_row(const std::vector<Integer>& row);

  IntMatrix transpose() const;
  bool is_zero() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  bool operator==(const IntMatrix&) const = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

/// U * M * V = diag(d_1, ..., d_r, 0, ...), d_i | d_{i+1}, U and V unimodular.
struct SmithDecomposition {
  std::vector<Integer> invariant_factors;
  std::size_t rank = 0;
  IntMatrix U;
  IntMatrix V;
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);

/// True iff the rows are linearly independent over the integers.
bool rows_independent(const IntMatrix& m);

/// A nonzero integer vector lambda with lambda * M = 0, if the rows are dependent.
std::optional<std::vector<Integer>> row_dependency(const IntMatrix& m);

/// True iff `target` is an integer combination of the rows of M.
bool in_row_lattice(const IntMatrix& m, const std::vector<Integer>& target);

}  // namespace cockcroft
