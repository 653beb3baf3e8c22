#include <doctest.h>

#include "support.hpp"
#include "twistgrp/linalg.hpp"

using namespace twistgrp;
using testing::random_invertible;
using testing::random_matrix;

namespace {

Subspace random_subspace(const FieldSpec& f, int n) {
  std::uniform_int_distribution<int> k(0, n);
  return Subspace::span(random_matrix(f, k(testing::rng()), n));
}

}  // namespace

TEST_CASE("matrix arithmetic") {
  const FieldSpec& f = field_make(3, 2);
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix a = random_invertible(f, 4);
    const Matrix b = random_invertible(f, 4);
    const Matrix c = random_matrix(f, 4, 4);
    CHECK(a * a.inverse() == Matrix::identity(f, 4));
    CHECK((a * b).inverse() == b.inverse() * a.inverse());
    CHECK((a * b) * c == a * (b * c));
    CHECK((a * b).determinant() == a.determinant() * b.determinant());
    CHECK((a * b).transpose() == b.transpose() * a.transpose());
    CHECK(a.pow(-3) == a.inverse().pow(3));
    CHECK(a.pow(0).is_identity());
  }
  CHECK_THROWS_WITH_AS(Matrix::zero(f, 3, 3).inverse(), "singular matrix", LinalgError);
  CHECK_THROWS_AS(Matrix(f, 2, 3) * Matrix(f, 2, 3), LinalgError);
}

TEST_CASE("row vectors act on the right") {
  const FieldSpec& f = field_make(2, 1);
  const Matrix p = Matrix::permutation(f, std::vector<int>{1, 2, 0});
  const Matrix q = Matrix::permutation(f, std::vector<int>{1, 0, 2});
  const Vector e0{f.one(), f.zero(), f.zero()};
  const Vector e1{f.zero(), f.one(), f.zero()};
  const Vector e2{f.zero(), f.zero(), f.one()};
  CHECK(e0 * p == e1);
  CHECK(e1 * p == e2);
  // (v^p)^q = v^(pq)
  CHECK((e0 * p) * q == e0 * (p * q));
  CHECK(e0 * (p * q) == e0);
  CHECK_THROWS_AS(Matrix::permutation(f, std::vector<int>{0, 0, 1}), LinalgError);
}

TEST_CASE("rank, kernel and row reduction") {
  const FieldSpec& f = field_make(2, 4);
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix m = random_matrix(f, 5, 4);
    const Matrix k = left_kernel(m);
    CHECK(k.rows() + m.rank() == 5);
    for (int i = 0; i < k.rows(); ++i)
      for (const auto& e : k.row(i) * m) CHECK(e.is_zero());
    const Matrix r = row_reduce(m);
    CHECK(r.rows() == m.rank());
    CHECK(row_reduce(r) == r);
  }
}

TEST_CASE("subspace lattice identities") {
  const FieldSpec& f = field_make(3, 1);
  const int n = 6;
  for (int trial = 0; trial < 200; ++trial) {
    const Subspace u = random_subspace(f, n);
    const Subspace v = random_subspace(f, n);
    const Subspace w = random_subspace(f, n);
    const Subspace s = sum(u, v);
    const Subspace i = intersect(u, v);
    CHECK(s.dim() + i.dim() == u.dim() + v.dim());
    CHECK(s.contains(u));
    CHECK(u.contains(i));
    CHECK(v.contains(i));
    CHECK(sum(u, i) == u);
    CHECK(intersect(u, s) == u);
    CHECK(sum(sum(u, v), w) == sum(u, sum(v, w)));
    CHECK(intersect(intersect(u, v), w) == intersect(u, intersect(v, w)));
    // modular law: U <= W  =>  U + (V cap W) = (U + V) cap W
    const Subspace uw = intersect(u, w);
    CHECK(sum(uw, intersect(v, w)) == intersect(sum(uw, v), w));
  }
}

TEST_CASE("orthogonal complements") {
  const FieldSpec& f = field_make(3, 3);
  const BilinearForm form = BilinearForm::standard(f, 7);
  for (int trial = 0; trial < 100; ++trial) {
    const Subspace u = random_subspace(f, 7);
    const Subspace perp = orthogonal_complement(u, form);
    CHECK(perp.dim() + u.dim() == 7);
    CHECK(orthogonal_complement(perp, form) == u);
    for (int i = 0; i < u.dim(); ++i)
      for (int j = 0; j < perp.dim(); ++j) CHECK(form(u.basis().row(i), perp.basis().row(j)).is_zero());
  }
  CHECK_THROWS_AS(BilinearForm(Matrix::from_ints(f, {{1, 1}, {0, 1}})), LinalgError);
  CHECK_THROWS_AS(BilinearForm(Matrix::from_ints(f, {{1, 1}, {1, 1}})), LinalgError);
}

TEST_CASE("images and eigenspaces") {
  const FieldSpec& f = field_make(3, 1);
  const Matrix s = Matrix::diagonal({f.one(), f.from_int(2), f.one(), f.from_int(2)});
  CHECK(eigenspace(s, f.one()) == Subspace::coordinate(f, 4, {0, 2}));
  CHECK(eigenspace(s, f.from_int(2)) == Subspace::coordinate(f, 4, {1, 3}));
  CHECK(fixed_space(s) == eigenspace(s, f.one()));
  CHECK(fixed_space_within(Subspace::coordinate(f, 4, {0, 1}), s) == Subspace::coordinate(f, 4, {0}));
  CHECK(preserves_form(s, BilinearForm::standard(f, 4)));

  const Matrix p = Matrix::permutation(f, std::vector<int>{1, 0, 3, 2});
  CHECK(image(Subspace::coordinate(f, 4, {0, 2}), p) == Subspace::coordinate(f, 4, {1, 3}));
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix g = random_invertible(f, 4);
    const Subspace u = random_subspace(f, 4);
    CHECK(image(image(u, g), g.inverse()) == u);
    CHECK(image(u, g).dim() == u.dim());
  }
}

TEST_CASE("matrix JSON round trip") {
  const FieldSpec& f = field_make(2, 5);
  const Matrix m = random_matrix(f, 3, 3);
  const auto j = m.to_json();
  CHECK(j["field"] == "2^5");
  CHECK(Matrix::from_json(j) == m);
  CHECK(m.encoding().size() == 9 * 5);
}
