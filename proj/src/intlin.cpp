#include "cockcroft/intlin.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace cockcroft {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long v : r) entries_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<Integer> IntMatrix::row(std::size_t i) const {
  return {entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

void IntMatrix::append_row(const std::vector<Integer>& row) {
  if (rows_ == 0 && entries_.empty()) cols_ = row.size();
  if (row.size() != cols_) throw std::invalid_argument("row length does not match column count");
  entries_.insert(entries_.end(), row.begin(), row.end());
  ++rows_;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

bool IntMatrix::is_zero() const {
  for (const auto& e : entries_) {
    if (e != 0) return false;
  }
  return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dimensions do not match");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ", ";
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      os << (*this)(i, j).get_str();
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

namespace {

// Elimination state: A is transformed in place while U and V record the
// row and column operations, keeping U * M * V == A.
struct Eliminator {
  IntMatrix A;
  IntMatrix U;
  IntMatrix V;

  explicit Eliminator(const IntMatrix& m)
      : A(m), U(IntMatrix::identity(m.rows())), V(IntMatrix::identity(m.cols())) {}

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < A.cols(); ++c) std::swap(A(i, c), A(j, c));
    for (std::size_t c = 0; c < U.cols(); ++c) std::swap(U(i, c), U(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < A.rows(); ++r) std::swap(A(r, i), A(r, j));
    for (std::size_t r = 0; r < V.rows(); ++r) std::swap(V(r, i), V(r, j));
  }
  // row_i += q * row_j
  void add_row(std::size_t i, std::size_t j, const Integer& q) {
    for (std::size_t c = 0; c < A.cols(); ++c) A(i, c) += q * A(j, c);
    for (std::size_t c = 0; c < U.cols(); ++c) U(i, c) += q * U(j, c);
  }
  // col_i += q * col_j
  void add_col(std::size_t i, std::size_t j, const Integer& q) {
    for (std::size_t r = 0; r < A.rows(); ++r) A(r, i) += q * A(r, j);
    for (std::size_t r = 0; r < V.rows(); ++r) V(r, i) += q * V(r, j);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < A.cols(); ++c) A(i, c) = -A(i, c);
    for (std::size_t c = 0; c < U.cols(); ++c) U(i, c) = -U(i, c);
  }

  // Moves the smallest nonzero |entry| of the trailing submatrix to (t, t).
  bool pick_pivot(std::size_t t) {
    std::size_t pi = 0, pj = 0;
    bool found = false;
    for (std::size_t i = t; i < A.rows(); ++i) {
      for (std::size_t j = t; j < A.cols(); ++j) {
        if (A(i, j) == 0) continue;
        if (!found || abs(A(i, j)) < abs(A(pi, pj))) {
          pi = i;
          pj = j;
          found = true;
        }
      }
    }
    if (!found) return false;
    swap_rows(t, pi);
    swap_cols(t, pj);
    return true;
  }

  // Clears row t and column t outside the pivot; returns false if a
  // remainder survived and the pivot must be re-chosen.
  bool clear_cross(std::size_t t) {
    bool clean = true;
    for (std::size_t i = t + 1; i < A.rows(); ++i) {
      if (A(i, t) == 0) continue;
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), A(i, t).get_mpz_t(), A(t, t).get_mpz_t());
      add_row(i, t, -q);
      if (A(i, t) != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < A.cols(); ++j) {
      if (A(t, j) == 0) continue;
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), A(t, j).get_mpz_t(), A(t, t).get_mpz_t());
      add_col(j, t, -q);
      if (A(t, j) != 0) clean = false;
    }
    return clean;
  }

  void pivot_from_cross(std::size_t t) {
    std::size_t best_i = t, best_j = t;
    for (std::size_t i = t + 1; i < A.rows(); ++i) {
      if (A(i, t) != 0 && abs(A(i, t)) < abs(A(best_i, best_j))) best_i = i, best_j = t;
    }
    for (std::size_t j = t + 1; j < A.cols(); ++j) {
      if (A(t, j) != 0 && abs(A(t, j)) < abs(A(best_i, best_j))) best_i = t, best_j = j;
    }
    swap_rows(t, best_i);
    swap_cols(t, best_j);
  }
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  Eliminator e(m);
  const std::size_t limit = std::min(m.rows(), m.cols());
  std::size_t t = 0;
  for (; t < limit; ++t) {
    if (!e.pick_pivot(t)) break;
    for (;;) {
      if (!e.clear_cross(t)) {
        e.pivot_from_cross(t);
        continue;
      }
      // Enforce the divisibility chain: pull a non-multiple into row t.
      std::size_t bad_row = 0;
      for (std::size_t i = t + 1; i < m.rows() && bad_row == 0; ++i) {
        for (std::size_t j = t + 1; j < m.cols(); ++j) {
          if (!mpz_divisible_p(e.A(i, j).get_mpz_t(), e.A(t, t).get_mpz_t())) {
            bad_row = i;
            break;
          }
        }
      }
      if (bad_row == 0) break;
      e.add_row(t, bad_row, 1);
      e.pivot_from_cross(t);
    }
    if (e.A(t, t) < 0) e.negate_row(t);
  }
  SmithDecomposition out;
  out.rank = t;
  for (std::size_t i = 0; i < t; ++i) out.invariant_factors.push_back(e.A(i, i));
  out.U = std::move(e.U);
  out.V = std::move(e.V);
  return out;
}

std::size_t rank(const IntMatrix& m) { return smith_normal_form(m).rank; }

bool rows_independent(const IntMatrix& m) { return rank(m) == m.rows(); }

std::optional<std::vector<Integer>> row_dependency(const IntMatrix& m) {
  auto snf = smith_normal_form(m);
  if (snf.rank == m.rows()) return std::nullopt;
  return snf.U.row(snf.rank);
}

bool in_row_lattice(const IntMatrix& m, const std::vector<Integer>& target) {
  if (target.size() != m.cols()) throw std::invalid_argument("target length does not match column count");
  auto snf = smith_normal_form(m);
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Integer w = 0;
    for (std::size_t k = 0; k < m.cols(); ++k) w += target[k] * snf.V(k, j);
    if (j < snf.rank) {
      if (!mpz_divisible_p(w.get_mpz_t(), snf.invariant_factors[j].get_mpz_t())) return false;
    } else if (w != 0) {
      return false;
    }
  }
  return true;
}

}  // namespace cockcroft
