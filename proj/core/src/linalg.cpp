#include "twistgrp/linalg.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace twistgrp {

namespace {

void require_same_field(const FieldSpec& a, const FieldSpec& b) {
  if (&a != &b) throw LinalgError("field mismatch: GF(" + a.name() + ") vs GF(" + b.name() + ")");
}

// In-place Gauss-Jordan elimination; returns pivot columns.
std::vector<int> rref_in_place(Matrix& m) {
  const FieldSpec& f = m.field();
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < m.rows(); ++i) {
      if (m.code(i, c) != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != r) {
      for (int j = 0; j < m.cols(); ++j) {
        const auto t = m.code(r, j);
        m.set_code(r, j, m.code(piv, j));
        m.set_code(piv, j, t);
      }
    }
    const auto scale = f.inv(m.code(r, c));
    for (int j = 0; j < m.cols(); ++j) m.set_code(r, j, f.mul(m.code(r, j), scale));
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      const auto factor = m.code(i, c);
      if (factor == 0) continue;
      for (int j = 0; j < m.cols(); ++j) m.set_code(i, j, f.sub(m.code(i, j), f.mul(factor, m.code(r, j))));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

Matrix take_rows(const Matrix& m, int count) {
  Matrix out(m.field(), count, m.cols());
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < m.cols(); ++j) out.set_code(i, j, m.code(i, j));
  return out;
}

Matrix stack(const Matrix& top, const Matrix& bottom) {
  require_same_field(top.field(), bottom.field());
  if (top.cols() != bottom.cols()) throw LinalgError("stack: column mismatch");
  Matrix out(top.field(), top.rows() + bottom.rows(), top.cols());
  for (int i = 0; i < top.rows(); ++i)
    for (int j = 0; j < top.cols(); ++j) out.set_code(i, j, top.code(i, j));
  for (int i = 0; i < bottom.rows(); ++i)
    for (int j = 0; j < top.cols(); ++j) out.set_code(top.rows() + i, j, bottom.code(i, j));
  return out;
}

}  // namespace

Matrix::Matrix(const FieldSpec& field, int rows, int cols)
    : field_(&field), rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0) {
  if (rows < 0 || cols < 0) throw LinalgError("negative matrix dimension");
}

Matrix Matrix::identity(const FieldSpec& field, int n) {
  Matrix m(field, n, n);
  for (int i = 0; i < n; ++i) m.set_code(i, i, 1);
  return m;
}

Matrix Matrix::from_ints(const FieldSpec& field, std::initializer_list<std::initializer_list<int>> rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
  Matrix m(field, r, c);
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != c) throw LinalgError("from_ints: ragged rows");
    int j = 0;
    for (int v : row) m.set_code(i, j++, field.from_int(v).code());
    ++i;
  }
  return m;
}

Matrix Matrix::from_rows(const FieldSpec& field, const std::vector<Vector>& rows, int cols) {
  Matrix m(field, static_cast<int>(rows.size()), cols);
  for (int i = 0; i < m.rows(); ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (static_cast<int>(row.size()) != cols) throw LinalgError("from_rows: row length mismatch");
    for (int j = 0; j < cols; ++j) m.set(i, j, row[static_cast<std::size_t>(j)]);
  }
  return m;
}

Matrix Matrix::diagonal(const Vector& diag) {
  if (diag.empty()) throw LinalgError("diagonal: empty");
  const int n = static_cast<int>(diag.size());
  Matrix m(diag.front().field(), n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, diag[static_cast<std::size_t>(i)]);
  return m;
}

Matrix Matrix::permutation(const FieldSpec& field, std::span<const int> perm) {
  const int n = static_cast<int>(perm.size());
  Matrix m(field, n, n);
  for (int i = 0; i < n; ++i) m.set_code(i, perm[static_cast<std::size_t>(i)], 1);
  if (m.rank() != n) throw LinalgError("permutation: not a bijection");
  return m;
}

void Matrix::set(int i, int j, const FieldElement& v) {
  require_same_field(*field_, v.field());
  set_code(i, j, v.code());
}

Vector Matrix::row(int i) const {
  Vector v;
  v.reserve(static_cast<std::size_t>(cols_));
  for (int j = 0; j < cols_; ++j) v.push_back(at(i, j));
  return v;
}

Matrix Matrix::operator*(const Matrix& o) const {
  require_same_field(*field_, *o.field_);
  if (cols_ != o.rows_) throw LinalgError("matrix product: dimension mismatch");
  Matrix out(*field_, rows_, o.cols_);
  const FieldSpec& f = *field_;
  if (f.characteristic() == 2) {
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < o.cols_; ++j) {
        Code acc = 0;
        for (int k = 0; k < cols_; ++k) acc ^= f.mul(code(i, k), o.code(k, j));
        out.set_code(i, j, acc);
      }
    return out;
  }
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < o.cols_; ++j) {
      Code acc = 0;
      for (int k = 0; k < cols_; ++k) {
        const Code a = code(i, k);
        if (a == 0) continue;
        acc = f.add(acc, f.mul(a, o.code(k, j)));
      }
      out.set_code(i, j, acc);
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  require_same_field(*field_, *o.field_);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw LinalgError("matrix sum: dimension mismatch");
  Matrix out(*field_, rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = field_->add(a_[k], o.a_[k]);
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  require_same_field(*field_, *o.field_);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw LinalgError("matrix difference: dimension mismatch");
  Matrix out(*field_, rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = field_->sub(a_[k], o.a_[k]);
  return out;
}

Matrix Matrix::scaled(const FieldElement& s) const {
  require_same_field(*field_, s.field());
  Matrix out(*field_, rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = field_->mul(a_[k], s.code());
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(*field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.set_code(j, i, code(i, j));
  return out;
}

Matrix Matrix::inverse() const {
  if (!is_square()) throw LinalgError("inverse of non-square matrix");
  const int n = rows_;
  Matrix aug(*field_, n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.set_code(i, j, code(i, j));
    aug.set_code(i, n + i, 1);
  }
  const auto pivots = rref_in_place(aug);
  if (static_cast<int>(pivots.size()) < n || pivots[static_cast<std::size_t>(n - 1)] != n - 1)
    throw LinalgError("singular matrix");
  Matrix out(*field_, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.set_code(i, j, aug.code(i, n + j));
  return out;
}

FieldElement Matrix::determinant() const {
  if (!is_square()) throw LinalgError("determinant of non-square matrix");
  const FieldSpec& f = *field_;
  Matrix m = *this;
  Code det = 1;
  const int n = rows_;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (m.code(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return f.zero();
    if (piv != c) {
      for (int j = 0; j < n; ++j) {
        const auto t = m.code(c, j);
        m.set_code(c, j, m.code(piv, j));
        m.set_code(piv, j, t);
      }
      det = f.neg(det);
    }
    det = f.mul(det, m.code(c, c));
    const auto inv = f.inv(m.code(c, c));
    for (int i = c + 1; i < n; ++i) {
      const auto factor = f.mul(m.code(i, c), inv);
      if (factor == 0) continue;
      for (int j = c; j < n; ++j) m.set_code(i, j, f.sub(m.code(i, j), f.mul(factor, m.code(c, j))));
    }
  }
  return {f, det};
}

int Matrix::rank() const {
  Matrix m = *this;
  return static_cast<int>(rref_in_place(m).size());
}

bool Matrix::is_identity() const noexcept {
  if (!is_square()) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (code(i, j) != (i == j ? 1u : 0u)) return false;
  return true;
}

Matrix Matrix::pow(long long e) const {
  if (!is_square()) throw LinalgError("power of non-square matrix");
  if (e < 0) return inverse().pow(-e);
  Matrix result = identity(*field_, rows_);
  Matrix base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

void Matrix::append_encoding(std::string& out) const {
  const auto m = static_cast<std::size_t>(field_->degree());
  std::array<std::uint8_t, kMaxFieldDegree> buf{};
  for (Code c : a_) {
    field_->coeffs(c, std::span(buf.data(), m));
    out.append(reinterpret_cast<const char*>(buf.data()), m);
  }
}

std::string Matrix::encoding() const {
  std::string out;
  out.reserve(a_.size() * static_cast<std::size_t>(field_->degree()));
  append_encoding(out);
  return out;
}

nlohmann::json Matrix::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < rows_; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < cols_; ++j) row.push_back(at(i, j).to_string());
    rows.push_back(std::move(row));
  }
  nlohmann::json j;
  j["n"] = rows_;
  if (!is_square()) j["cols"] = cols_;
  j["field"] = field_->name();
  j["rows"] = std::move(rows);
  return j;
}

Matrix Matrix::from_json(const nlohmann::json& j) {
  const std::string name = j.at("field").get<std::string>();
  const auto caret = name.find('^');
  if (caret == std::string::npos) throw LinalgError("bad field name '" + name + "'");
  const FieldSpec& f = field_make(std::stoi(name.substr(0, caret)), std::stoi(name.substr(caret + 1)));
  const int n = j.at("n").get<int>();
  const int cols = j.contains("cols") ? j.at("cols").get<int>() : n;
  const auto& rows = j.at("rows");
  if (static_cast<int>(rows.size()) != n) throw LinalgError("matrix JSON: row count mismatch");
  Matrix m(f, n, cols);
  for (int i = 0; i < n; ++i) {
    const auto& row = rows.at(static_cast<std::size_t>(i));
    if (static_cast<int>(row.size()) != cols) throw LinalgError("matrix JSON: row length mismatch");
    for (int c = 0; c < cols; ++c) m.set(i, c, f.parse(row.at(static_cast<std::size_t>(c)).get<std::string>()));
  }
  return m;
}

Vector operator*(const Vector& v, const Matrix& m) {
  if (static_cast<int>(v.size()) != m.rows()) throw LinalgError("vector-matrix product: dimension mismatch");
  Matrix row(m.field(), 1, m.rows());
  for (int j = 0; j < m.rows(); ++j) row.set(0, j, v[static_cast<std::size_t>(j)]);
  return (row * m).row(0);
}

Matrix row_reduce(const Matrix& m) {
  Matrix work = m;
  const auto pivots = rref_in_place(work);
  return take_rows(work, static_cast<int>(pivots.size()));
}

Matrix left_kernel(const Matrix& m) {
  // v m = 0  <=>  m^T v^T = 0; solve the right null space of m^T.
  Matrix t = m.transpose();
  const auto pivots = rref_in_place(t);
  const FieldSpec& f = m.field();
  const int n = t.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < n; ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);
  Matrix out(f, static_cast<int>(free_cols.size()), n);
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const int fc = free_cols[k];
    out.set_code(static_cast<int>(k), fc, 1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      out.set_code(static_cast<int>(k), pivots[r], f.neg(t.code(static_cast<int>(r), fc)));
  }
  return out;
}

// Subspace

Subspace Subspace::zero(const FieldSpec& field, int n) { return Subspace(Matrix(field, 0, n)); }

Subspace Subspace::full(const FieldSpec& field, int n) { return Subspace(Matrix::identity(field, n)); }

Subspace Subspace::span(const Matrix& m) { return Subspace(row_reduce(m)); }

Subspace Subspace::span(const FieldSpec& field, int n, const std::vector<Vector>& vectors) {
  return span(Matrix::from_rows(field, vectors, n));
}

Subspace Subspace::coordinate(const FieldSpec& field, int n, std::initializer_list<int> indices) {
  Matrix m(field, static_cast<int>(indices.size()), n);
  int r = 0;
  for (int i : indices) {
    if (i < 0 || i >= n) throw LinalgError("coordinate subspace: index out of range");
    m.set_code(r++, i, 1);
  }
  return span(m);
}

bool Subspace::contains(const Vector& v) const {
  Matrix row(field(), 1, ambient());
  for (int j = 0; j < ambient(); ++j) row.set(0, j, v[static_cast<std::size_t>(j)]);
  return stack(basis_, row).rank() == dim();
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient() != ambient()) throw LinalgError("ambient dimension mismatch");
  return stack(basis_, other.basis_).rank() == dim();
}

nlohmann::json Subspace::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < dim(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < ambient(); ++j) row.push_back(basis_.at(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return {{"dim", dim()}, {"ambient", ambient()}, {"basis", std::move(rows)}};
}

Subspace sum(const Subspace& u, const Subspace& v) {
  if (u.ambient() != v.ambient()) throw LinalgError("ambient dimension mismatch");
  return Subspace::span(stack(u.basis(), v.basis()));
}

Subspace intersect(const Subspace& u, const Subspace& v) {
  if (u.ambient() != v.ambient()) throw LinalgError("ambient dimension mismatch");
  require_same_field(u.field(), v.field());
  // (a, b) [U; V] = 0  =>  a U = -b V lies in both.
  const Matrix rel = left_kernel(stack(u.basis(), v.basis()));
  Matrix coeff_u(u.field(), rel.rows(), u.dim());
  for (int i = 0; i < rel.rows(); ++i)
    for (int j = 0; j < u.dim(); ++j) coeff_u.set_code(i, j, rel.code(i, j));
  if (u.dim() == 0) return Subspace::zero(u.field(), u.ambient());
  return Subspace::span(coeff_u * u.basis());
}

Subspace image(const Subspace& u, const Matrix& m) {
  if (m.rows() != u.ambient()) throw LinalgError("image: dimension mismatch");
  if (u.dim() == 0) return Subspace::zero(u.field(), m.cols());
  return Subspace::span(u.basis() * m);
}

Subspace eigenspace(const Matrix& m, const FieldElement& lambda) {
  if (!m.is_square()) throw LinalgError("eigenspace of non-square matrix");
  return Subspace::span(left_kernel(m - Matrix::identity(m.field(), m.rows()).scaled(lambda)));
}

Subspace fixed_space(const Matrix& m) { return eigenspace(m, m.field().one()); }

Subspace fixed_space_within(const Subspace& u, const Matrix& m) { return intersect(u, fixed_space(m)); }

BilinearForm::BilinearForm(Matrix gram) : gram_(std::move(gram)) {
  if (!gram_.is_square()) throw LinalgError("Gram matrix must be square");
  if (!(gram_.transpose() == gram_)) throw LinalgError("Gram matrix must be symmetric");
  if (gram_.rank() != gram_.rows()) throw LinalgError("bilinear form is degenerate");
}

FieldElement BilinearForm::operator()(const Vector& u, const Vector& v) const {
  const Vector ug = u * gram_;
  FieldElement acc = gram_.field().zero();
  for (std::size_t i = 0; i < ug.size(); ++i) acc = acc + ug[i] * v[i];
  return acc;
}

bool preserves_form(const Matrix& m, const BilinearForm& f) {
  if (m.rows() != f.gram().rows() || !m.is_square()) throw LinalgError("preserves_form: dimension mismatch");
  return m * f.gram() * m.transpose() == f.gram();
}

Subspace orthogonal_complement(const Subspace& u, const BilinearForm& f) {
  const int n = f.gram().rows();
  if (u.ambient() != n) throw LinalgError("orthogonal_complement: dimension mismatch");
  if (u.dim() == 0) return Subspace::full(u.field(), n);
  // v Gram U^T = 0
  return Subspace::span(left_kernel(f.gram() * u.basis().transpose()));
}

}  // namespace twistgrp
