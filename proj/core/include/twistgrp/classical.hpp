// Small classical groups realised over the prime field, used as test
// subjects for the subgroup and factorisation machinery.
#pragma once

#include "twistgrp/grp.hpp"

namespace twistgrp {

/// The GF(2)-linear map of GF(2^m)^n -> GF(2^m)^n given by a, as a
/// (n m) x (n m) matrix over GF(2) in the basis 1, x, ..., x^(m-1).
Matrix restrict_scalars(const Matrix& a);

struct FrobeniusExtension {
  EnumeratedGroup group;  // PSL2(2^m):m
  EnumeratedGroup socle;  // PSL2(2^m) = SL2(2^m)
};

/// PSL2(2^m):m acting on GF(2^m)^2 viewed as GF(2)^(2m); 2 <= m <= 5.
FrobeniusExtension psl2_frobenius_extension(int m);

}  // namespace twistgrp
