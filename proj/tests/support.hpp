#pragma once

#include <random>
#include <vector>

#include "twistgrp/grp.hpp"
#include "twistgrp/linalg.hpp"

namespace testing {

using namespace twistgrp;

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x5eed5eedULL);
  return gen;
}

inline FieldElement random_element(const FieldSpec& f) {
  std::uniform_int_distribution<FieldSpec::Code> d(0, f.order() - 1);
  return f.element(d(rng()));
}

inline Matrix random_matrix(const FieldSpec& f, int rows, int cols) {
  Matrix m(f, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.set(i, j, random_element(f));
  return m;
}

inline Matrix random_invertible(const FieldSpec& f, int n) {
  for (;;) {
    Matrix m = random_matrix(f, n, n);
    if (m.rank() == n) return m;
  }
}

/// D14 = <diag(x, x^-1), antidiagonal> in GL2(8).
inline EnumeratedGroup dihedral14() {
  const FieldSpec& f = field_make(2, 3);
  return EnumeratedGroup::closure({Matrix::diagonal({f.x(), f.x().inv()}), Matrix::from_ints(f, {{0, 1}, {1, 0}})});
}

/// C2 x C2 = <diag(2, 1), diag(1, 2)> in GL2(3).
inline EnumeratedGroup klein_four() {
  const FieldSpec& f = field_make(3, 1);
  return EnumeratedGroup::closure({Matrix::from_ints(f, {{2, 0}, {0, 1}}), Matrix::from_ints(f, {{1, 0}, {0, 2}})});
}

}  // namespace testing
