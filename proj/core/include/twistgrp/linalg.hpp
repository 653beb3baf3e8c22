// Dense matrices and subspaces over GF(p^m).
//
// Row-vector convention throughout: vectors are rows and a matrix acts on the
// right, so v^g is written v * g and (v^g)^h = v * (g * h).
#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "twistgrp/gf.hpp"

namespace twistgrp {

class LinalgError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Vector = std::vector<FieldElement>;

/// rows x cols matrix over a FieldSpec. Group elements are the square,
/// invertible ones. Entries are stored as field codes.
class Matrix {
 public:
  using Code = FieldSpec::Code;

  Matrix(const FieldSpec& field, int rows, int cols);
  static Matrix identity(const FieldSpec& field, int n);
  static Matrix zero(const FieldSpec& field, int rows, int cols) { return Matrix(field, rows, cols); }
  /// Builds from small integers (reduced mod p, embedded in the prime field).
  static Matrix from_ints(const FieldSpec& field, std::initializer_list<std::initializer_list<int>> rows);
  static Matrix from_rows(const FieldSpec& field, const std::vector<Vector>& rows, int cols);
  /// Diagonal matrix.
  static Matrix diagonal(const Vector& diag);
  /// Permutation matrix sending basis vector i to basis vector perm[i].
  static Matrix permutation(const FieldSpec& field, std::span<const int> perm);

  const FieldSpec& field() const noexcept { return *field_; }
  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  FieldElement at(int i, int j) const { return {*field_, code(i, j)}; }
  Code code(int i, int j) const noexcept { return a_[static_cast<std::size_t>(i * cols_ + j)]; }
  void set(int i, int j, const FieldElement& v);
  void set_code(int i, int j, Code c) noexcept { a_[static_cast<std::size_t>(i * cols_ + j)] = c; }
  Vector row(int i) const;
  std::span<const Code> row_codes(int i) const {
    return {a_.data() + static_cast<std::ptrdiff_t>(i) * cols_, static_cast<std::size_t>(cols_)};
  }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const FieldElement& s) const;
  Matrix transpose() const;
  /// Throws LinalgError if singular or not square.
  Matrix inverse() const;
  FieldElement determinant() const;
  int rank() const;
  bool is_identity() const noexcept;
  Matrix pow(long long e) const;

  /// Canonical byte encoding: each entry's m coefficient bytes
  /// (little-endian), concatenated row-major. Lexicographic order on these
  /// bytes is the element order used for coset labels.
  std::string encoding() const;
  void append_encoding(std::string& out) const;

  friend bool operator==(const Matrix& a, const Matrix& b) noexcept {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  nlohmann::json to_json() const;
  static Matrix from_json(const nlohmann::json& j);

 private:
  const FieldSpec* field_;
  int rows_;
  int cols_;
  std::vector<Code> a_;
};

Vector operator*(const Vector& v, const Matrix& m);

/// Reduced row-echelon form of the row space (zero rows dropped).
Matrix row_reduce(const Matrix& m);

/// Basis of {v : v * m = 0}, as rows of the returned matrix (not reduced).
Matrix left_kernel(const Matrix& m);

/// Subspace of the row space F^n, stored as its reduced row-echelon basis.
/// The echelon basis is canonical, so equality is grid equality.
class Subspace {
 public:
  static Subspace zero(const FieldSpec& field, int n);
  static Subspace full(const FieldSpec& field, int n);
  /// Span of the rows of m.
  static Subspace span(const Matrix& m);
  static Subspace span(const FieldSpec& field, int n, const std::vector<Vector>& vectors);
  /// Span of standard basis vectors e_i for the listed indices.
  static Subspace coordinate(const FieldSpec& field, int n, std::initializer_list<int> indices);

  int ambient() const noexcept { return basis_.cols(); }
  int dim() const noexcept { return basis_.rows(); }
  const Matrix& basis() const noexcept { return basis_; }
  const FieldSpec& field() const noexcept { return basis_.field(); }
  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) noexcept { return a.basis_ == b.basis_; }

  nlohmann::json to_json() const;

 private:
  explicit Subspace(Matrix rref) : basis_(std::move(rref)) {}
  Matrix basis_;
};

Subspace sum(const Subspace& u, const Subspace& v);
Subspace intersect(const Subspace& u, const Subspace& v);
/// {u * m : u in U}.
Subspace image(const Subspace& u, const Matrix& m);
/// ker(m - lambda I) in row convention: {v : v m = lambda v}.
Subspace eigenspace(const Matrix& m, const FieldElement& lambda);
Subspace fixed_space(const Matrix& m);
Subspace fixed_space_within(const Subspace& u, const Matrix& m);

/// Symmetric nondegenerate bilinear form f(u, v) = u * gram * v^T.
class BilinearForm {
 public:
  explicit BilinearForm(Matrix gram);
  static BilinearForm standard(const FieldSpec& field, int n) { return BilinearForm(Matrix::identity(field, n)); }
  const Matrix& gram() const noexcept { return gram_; }
  FieldElement operator()(const Vector& u, const Vector& v) const;

 private:
  Matrix gram_;
};

/// m * gram * m^T == gram.
bool preserves_form(const Matrix& m, const BilinearForm& f);
Subspace orthogonal_complement(const Subspace& u, const BilinearForm& f);

}  // namespace twistgrp
