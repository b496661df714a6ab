#pragma once

// Exact integer linear algebra: Smith normal form, integer solutions of
// inhomogeneous systems, kernel lattices and gcds of functionals on them.

#include "hfgrade/numeric.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <vector>

namespace hfgrade::zlattice {

using Vector = std::vector<Integer>;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;

  Vector apply(const Vector& v) const;  // M * v
  IntMatrix operator*(const IntMatrix& other) const;
  bool operator==(const IntMatrix& other) const = default;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, const Integer& factor);
  void add_col_multiple(std::size_t target, std::size_t source, const Integer& factor);
  void negate_row(std::size_t r);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

// left * M * right == diagonal (as a rows x cols matrix), with left and right
// unimodular and diagonal[0] | diagonal[1] | ... ; zero entries come last.
struct SmithDecomposition {
  IntMatrix left;
  IntMatrix right;
  std::vector<Integer> diagonal;  // length min(rows, cols)
  std::size_t rank = 0;
};

SmithDecomposition smith_decompose(const IntMatrix& m);

std::vector<Integer> smith_invariants(const IntMatrix& m);

struct AffineSolutionSet {
  std::optional<Vector> particular;
  std::vector<Vector> kernel;

  bool empty() const { return !particular.has_value(); }
};

// Factorizes M once so that many right-hand sides can be solved cheaply.
class IntegerSystem {
 public:
  explicit IntegerSystem(IntMatrix m);

  const IntMatrix& matrix() const { return matrix_; }
  std::optional<Vector> particular(const Vector& rhs) const;
  const std::vector<Vector>& kernel() const { return kernel_; }
  AffineSolutionSet solve(const Vector& rhs) const;

 private:
  IntMatrix matrix_;
  SmithDecomposition smith_;
  std::vector<Vector> kernel_;
};

AffineSolutionSet solve_integer_system(const IntMatrix& m, const Vector& rhs);

Integer dot(const Vector& a, const Vector& b);

// gcd of { f . k : k in the lattice spanned by basis }; 0 for the empty lattice.
Integer gcd_over_lattice(const std::vector<Vector>& basis, const Vector& functional);

// A basis (Hermite row echelon form) of the lattice generated by the vectors.
std::vector<Vector> lattice_basis(const std::vector<Vector>& generators, std::size_t dimension);

// True iff v is an integer combination of the basis vectors.
bool lattice_contains(const std::vector<Vector>& basis, const Vector& v);

}  // namespace hfgrade::zlattice
