#include "twistgrp/classical.hpp"

namespace twistgrp {

Matrix restrict_scalars(const Matrix& a) {
  const FieldSpec& f = a.field();
  if (f.characteristic() != 2) throw GroupError("restrict_scalars: only characteristic 2 is supported");
  const int m = f.degree();
  const FieldSpec& f2 = field_make(2, 1);
  Matrix out(f2, a.rows() * m, a.cols() * m);
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      for (int k = 0; k < m; ++k) {
        const auto c = (f.x().pow(k) * a.at(i, j)).coeffs();
        for (int l = 0; l < m; ++l) out.set_code(i * m + k, j * m + l, c[static_cast<std::size_t>(l)]);
      }
  return out;
}

FrobeniusExtension psl2_frobenius_extension(int m) {
  if (m < 2 || m > 5) throw GroupError("psl2_frobenius_extension: m must lie in [2, 5]");
  const FieldSpec& f = field_make(2, m);
  const FieldElement x = f.x();
  Matrix t = Matrix::identity(f, 2);
  t.set(0, 1, f.one());
  const Matrix d = Matrix::diagonal({x, x.inv()});
  Matrix w = Matrix::zero(f, 2, 2);
  w.set(0, 1, f.one());
  w.set(1, 0, f.one());
  std::vector<Matrix> sl2{restrict_scalars(t), restrict_scalars(d), restrict_scalars(w)};

  // (a, b) -> (a^2, b^2)
  const FieldSpec& f2 = field_make(2, 1);
  Matrix phi(f2, 2 * m, 2 * m);
  for (int blk = 0; blk < 2; ++blk)
    for (int k = 0; k < m; ++k) {
      const auto c = x.pow(2 * k).coeffs();
      for (int l = 0; l < m; ++l) phi.set_code(blk * m + k, blk * m + l, c[static_cast<std::size_t>(l)]);
    }

  EnumeratedGroup socle = EnumeratedGroup::closure(sl2);
  sl2.push_back(phi);
  EnumeratedGroup group = EnumeratedGroup::closure(sl2);
  return {std::move(group), std::move(socle)};
}

}  // namespace twistgrp
