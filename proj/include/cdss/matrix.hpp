#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cdss/galois.hpp"

namespace cdss {

/// Dense row-major matrix of field elements. Arithmetic takes the field explicitly.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<FieldElement> data);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  FieldElement& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  FieldElement operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const FieldElement> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::vector<FieldElement> column(std::size_t c) const;

  Matrix select_columns(std::span<const std::size_t> cols) const;
  Matrix select_rows(std::span<const std::size_t> rows) const;
  Matrix transposed() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FieldElement> data_;
};

Matrix multiply(const GaloisField& f, const Matrix& a, const Matrix& b);
/// Row vector times matrix: x (length a.rows()) * a.
std::vector<FieldElement> multiply(const GaloisField& f, std::span<const FieldElement> x, const Matrix& a);
/// Matrix times column vector.
std::vector<FieldElement> multiply(const GaloisField& f, const Matrix& a, std::span<const FieldElement> x);

std::size_t rank(const GaloisField& f, Matrix a);
/// Throws DomainError when `a` is singular or not square.
Matrix inverse(const GaloisField& f, const Matrix& a);

struct SolveResult {
  std::size_t rank = 0;
  bool consistent = false;
  // True when the solution set has free variables; the returned solution
  // sets every free variable to zero.
  bool underdetermined = false;
  std::optional<std::vector<FieldElement>> solution;
};

/// Solves A x = b by Gaussian elimination. Never throws on rank deficiency;
/// the result reports rank and consistency instead.
SolveResult solve(const GaloisField& f, const Matrix& a, std::span<const FieldElement> b);

/// Lowercase hex CSV, one matrix row per line.
std::string to_hex_csv(const Matrix& a, int bits);

}  // namespace cdss
