#include "cdss/matrix.hpp"

#include <sstream>
#include <utility>

#include "cdss/errors.hpp"

namespace cdss {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<FieldElement> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_) throw UsageError("matrix data size does not match its shape");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = FieldElement(1);
  return m;
}

std::vector<FieldElement> Matrix::column(std::size_t c) const {
  std::vector<FieldElement> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

Matrix Matrix::select_columns(std::span<const std::size_t> cols) const {
  Matrix out(rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) out(r, c) = (*this)(r, cols[c]);
  }
  return out;
}

Matrix Matrix::select_rows(std::span<const std::size_t> rows) const {
  Matrix out(rows.size(), cols_);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(rows[r], c);
  }
  return out;
}

Matrix Matrix::transposed() const {
  Matrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

Matrix multiply(const GaloisField& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw UsageError("matrix shapes do not compose");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t t = 0; t < a.cols(); ++t) {
      const FieldElement s = a(i, t);
      if (s.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += f.mul(s, b(t, j));
    }
  }
  return out;
}

std::vector<FieldElement> multiply(const GaloisField& f, std::span<const FieldElement> x, const Matrix& a) {
  if (x.size() != a.rows()) throw UsageError("vector length does not match matrix rows");
  std::vector<FieldElement> out(a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    if (x[r].is_zero()) continue;
    for (std::size_t c = 0; c < a.cols(); ++c) out[c] += f.mul(x[r], a(r, c));
  }
  return out;
}

std::vector<FieldElement> multiply(const GaloisField& f, const Matrix& a, std::span<const FieldElement> x) {
  if (x.size() != a.cols()) throw UsageError("vector length does not match matrix columns");
  std::vector<FieldElement> out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    FieldElement acc;
    for (std::size_t c = 0; c < a.cols(); ++c) acc += f.mul(a(r, c), x[c]);
    out[r] = acc;
  }
  return out;
}

namespace {

// Reduces the augmented system [a | b] to reduced row echelon form in place and
// returns the pivot column of each pivot row.
std::vector<std::size_t> eliminate(const GaloisField& f, Matrix& a, std::vector<FieldElement>* b) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && a(p, col).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != row) {
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(p, c), a(row, c));
      if (b) std::swap((*b)[p], (*b)[row]);
    }
    const FieldElement scale = f.inv(a(row, col));
    for (std::size_t c = 0; c < a.cols(); ++c) a(row, c) = f.mul(a(row, c), scale);
    if (b) (*b)[row] = f.mul((*b)[row], scale);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row) continue;
      const FieldElement factor = a(r, col);
      if (factor.is_zero()) continue;
      for (std::size_t c = 0; c < a.cols(); ++c) a(r, c) += f.mul(factor, a(row, c));
      if (b) (*b)[r] += f.mul(factor, (*b)[row]);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const GaloisField& f, Matrix a) { return eliminate(f, a, nullptr).size(); }

Matrix inverse(const GaloisField& f, const Matrix& a) {
  if (a.rows() != a.cols()) throw DomainError("cannot invert a non-square matrix");
  const std::size_t n = a.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n + r) = FieldElement(1);
  }
  const auto pivots = eliminate(f, aug, nullptr);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] >= n)) throw DomainError("matrix is singular");
  Matrix out(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out(r, c) = aug(r, n + c);
  }
  return out;
}

SolveResult solve(const GaloisField& f, const Matrix& a, std::span<const FieldElement> b) {
  if (b.size() != a.rows()) throw UsageError("right-hand side length does not match matrix rows");
  Matrix work = a;
  std::vector<FieldElement> rhs(b.begin(), b.end());
  const auto pivots = eliminate(f, work, &rhs);

  SolveResult result;
  result.rank = pivots.size();
  result.consistent = true;
  for (std::size_t r = pivots.size(); r < rhs.size(); ++r) {
    if (!rhs[r].is_zero()) result.consistent = false;
  }
  result.underdetermined = result.rank < a.cols();
  if (result.consistent) {
    std::vector<FieldElement> x(a.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = rhs[i];
    result.solution = std::move(x);
  }
  return result;
}

std::string to_hex_csv(const Matrix& a, int bits) {
  const int width = (bits + 3) / 4;
  std::ostringstream os;
  os << std::hex;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (c) os << ',';
      os.width(width);
      os.fill('0');
      os << a(r, c).value();
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace cdss
