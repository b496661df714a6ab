#include "hfgrade/zlattice.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace hfgrade::zlattice {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  IntMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw DimensionError("ragged matrix rows");
    std::size_t j = 0;
    for (long v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionError("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Vector IntMatrix::row(std::size_t r) const {
  return Vector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector IntMatrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

Vector IntMatrix::apply(const Vector& v) const {
  if (v.size() != cols_)
    throw DimensionError("matrix has " + std::to_string(cols_) + " columns, vector has " +
                         std::to_string(v.size()) + " entries");
  Vector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (sgn((*this)(i, j)) != 0) out[i] += (*this)(i, j) * v[j];
  return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw DimensionError("incompatible matrix product");
  IntMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (sgn((*this)(i, k)) == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += (*this)(i, k) * other(k, j);
    }
  return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(target, j) += factor * (*this)(source, j);
}

void IntMatrix::add_col_multiple(std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, target) += factor * (*this)(i, source);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
}

namespace {

// Position of the smallest nonzero |entry| in the lower-right block starting at (t, t).
std::optional<std::pair<std::size_t, std::size_t>> smallest_entry(const IntMatrix& a, std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  Integer best_abs;
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      if (sgn(a(i, j)) == 0) continue;
      Integer v = abs(a(i, j));
      if (!best || v < best_abs) {
        best = {i, j};
        best_abs = v;
        if (best_abs == 1) return best;
      }
    }
  return best;
}

}  // namespace

SmithDecomposition smith_decompose(const IntMatrix& m) {
  IntMatrix a = m;
  IntMatrix left = IntMatrix::identity(m.rows());
  IntMatrix right = IntMatrix::identity(m.cols());
  const std::size_t limit = std::min(m.rows(), m.cols());

  std::size_t t = 0;
  for (; t < limit; ++t) {
    auto pivot = smallest_entry(a, t);
    if (!pivot) break;
    a.swap_rows(t, pivot->first);
    left.swap_rows(t, pivot->first);
    a.swap_cols(t, pivot->second);
    right.swap_cols(t, pivot->second);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (sgn(a(i, t)) == 0) continue;
        Integer q = a(i, t) / a(t, t);
        a.add_row_multiple(i, t, -q);
        left.add_row_multiple(i, t, -q);
        if (sgn(a(i, t)) != 0) {
          a.swap_rows(t, i);
          left.swap_rows(t, i);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (sgn(a(t, j)) == 0) continue;
        Integer q = a(t, j) / a(t, t);
        a.add_col_multiple(j, t, -q);
        right.add_col_multiple(j, t, -q);
        if (sgn(a(t, j)) != 0) {
          a.swap_cols(t, j);
          right.swap_cols(t, j);
          clean = false;
        }
      }
      if (!clean) continue;

      // Enforce the divisibility chain: pull an offending row into the pivot row.
      bool divides_all = true;
      for (std::size_t i = t + 1; i < a.rows() && divides_all; ++i)
        for (std::size_t j = t + 1; j < a.cols(); ++j)
          if (sgn(a(i, j)) != 0 && !mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            a.add_row_multiple(t, i, 1);
            left.add_row_multiple(t, i, 1);
            divides_all = false;
            break;
          }
      if (divides_all) break;
    }
    if (a(t, t) < 0) {
      a.negate_row(t);
      left.negate_row(t);
    }
  }

  SmithDecomposition out;
  out.rank = t;
  out.diagonal.resize(limit);
  for (std::size_t i = 0; i < limit; ++i) out.diagonal[i] = a(i, i);
  out.left = std::move(left);
  out.right = std::move(right);
  return out;
}

std::vector<Integer> smith_invariants(const IntMatrix& m) { return smith_decompose(m).diagonal; }

IntegerSystem::IntegerSystem(IntMatrix m) : matrix_(std::move(m)), smith_(smith_decompose(matrix_)) {
  for (std::size_t j = smith_.rank; j < matrix_.cols(); ++j) kernel_.push_back(smith_.right.column(j));
}

std::optional<Vector> IntegerSystem::particular(const Vector& rhs) const {
  if (rhs.size() != matrix_.rows())
    throw DimensionError("system has " + std::to_string(matrix_.rows()) + " equations, right-hand side has " +
                         std::to_string(rhs.size()) + " entries");
  const Vector c = smith_.left.apply(rhs);
  Vector w(matrix_.cols());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < smith_.rank) {
      const Integer& d = smith_.diagonal[i];
      if (!mpz_divisible_p(c[i].get_mpz_t(), d.get_mpz_t())) return std::nullopt;
      w[i] = c[i] / d;
    } else if (sgn(c[i]) != 0) {
      return std::nullopt;
    }
  }
  return smith_.right.apply(w);
}

AffineSolutionSet IntegerSystem::solve(const Vector& rhs) const {
  AffineSolutionSet out;
  out.particular = particular(rhs);
  if (out.particular) out.kernel = kernel_;
  return out;
}

AffineSolutionSet solve_integer_system(const IntMatrix& m, const Vector& rhs) {
  if (rhs.size() != m.rows()) throw DimensionError("right-hand side length does not match matrix rows");
  return IntegerSystem(m).solve(rhs);
}

Integer dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size())
    throw DimensionError("dot product of vectors of length " + std::to_string(a.size()) + " and " +
                         std::to_string(b.size()));
  Integer s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Integer gcd_over_lattice(const std::vector<Vector>& basis, const Vector& functional) {
  Integer g;
  for (const auto& k : basis) g = gcd(g, dot(k, functional));
  return g;
}

std::vector<Vector> lattice_basis(const std::vector<Vector>& generators, std::size_t dimension) {
  std::vector<Vector> rows;
  for (const auto& v : generators) {
    if (v.size() != dimension) throw DimensionError("generator has wrong dimension");
    if (std::any_of(v.begin(), v.end(), [](const Integer& x) { return sgn(x) != 0; })) rows.push_back(v);
  }
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < dimension && pivot_row < rows.size(); ++col) {
    for (;;) {
      std::optional<std::size_t> best;
      for (std::size_t r = pivot_row; r < rows.size(); ++r)
        if (sgn(rows[r][col]) != 0 && (!best || abs(rows[r][col]) < abs(rows[*best][col]))) best = r;
      if (!best) break;
      std::swap(rows[pivot_row], rows[*best]);
      bool cleared = true;
      for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
        if (sgn(rows[r][col]) == 0) continue;
        Integer q = rows[r][col] / rows[pivot_row][col];
        for (std::size_t j = 0; j < dimension; ++j) rows[r][j] -= q * rows[pivot_row][j];
        if (sgn(rows[r][col]) != 0) cleared = false;
      }
      if (cleared) {
        if (rows[pivot_row][col] < 0)
          for (auto& x : rows[pivot_row]) x = -x;
        ++pivot_row;
        break;
      }
    }
  }
  rows.resize(pivot_row);
  return rows;
}

bool lattice_contains(const std::vector<Vector>& basis, const Vector& v) {
  if (basis.empty()) return std::all_of(v.begin(), v.end(), [](const Integer& x) { return sgn(x) == 0; });
  IntMatrix columns(v.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    if (basis[j].size() != v.size()) throw DimensionError("basis vector has wrong dimension");
    for (std::size_t i = 0; i < v.size(); ++i) columns(i, j) = basis[j][i];
  }
  return !solve_integer_system(columns, v).empty();
}

}  // namespace hfgrade::zlattice
