// Linear-algebra data for the small Ree groups 2G2(q), q = 3^(2n+1), in the
// 7-dimensional orthogonal representation.
//
// Coordinates are taken in the orthonormal basis u_0..u_6 (Gram = I). The
// second basis v_1..v_7 is recorded as the rows of `v_basis()`. Every entry
// is 0, 1 or 2 = -1 in the prime field, so the same data lives in GF(q) for
// every q = 3^(2n+1).
#pragma once

#include <cstdint>
#include <stdexcept>

#include "twistgrp/linalg.hpp"
#include "twistgrp/report.hpp"

namespace twistgrp {

class ReeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ReeContext {
 public:
  /// Builds and checks every structural invariant; throws NumthError for a
  /// malformed q and ReeError if an invariant fails.
  static ReeContext build(std::uint64_t q);

  std::uint64_t q() const noexcept { return q_; }
  const FieldSpec& field() const noexcept { return *field_; }
  const BilinearForm& form() const noexcept { return form_; }

  /// Row i holds v_{i+1} in u-coordinates.
  const Matrix& v_basis() const noexcept { return v_basis_; }
  const Matrix& gamma() const noexcept { return gamma_; }
  const Matrix& sigma() const noexcept { return sigma_; }
  /// sigma * gamma.
  const Matrix& delta() const noexcept { return delta_; }
  /// The order-3 element g in u-coordinates.
  const Matrix& g() const noexcept { return g_; }

  /// u_i as a row vector.
  Vector u(int i) const;
  /// <u_1, ..., u_6>
  const Subspace& w() const noexcept { return w_; }
  /// W_1 = <u_1, u_3>, W_2 = <u_2, u_6>, W_3 = <u_4, u_5>; i in {1, 2, 3}.
  const Subspace& w_part(int i) const;

 private:
  explicit ReeContext(std::uint64_t q, const FieldSpec& field);

  std::uint64_t q_;
  const FieldSpec* field_;
  BilinearForm form_;
  Matrix v_basis_;
  Matrix gamma_;
  Matrix sigma_;
  Matrix delta_;
  Matrix g_;
  Subspace w_;
  Subspace w1_;
  Subspace w2_;
  Subspace w3_;
};

/// The action of g on the v-basis as tabulated (row i = image of v_{i+1}
/// in v-coordinates). Entered independently of g for the consistency check.
Matrix tabulated_g_on_v_basis(const FieldSpec& field);

/// g, after checking that C g = g_v C against the tabulated v-basis action;
/// a mismatch throws ReeError.
Matrix ree_g(const ReeContext& ctx);

/// Fix(<gamma, sigma>) = <u_0>, its perp is W, and g stabilises both.
Report verify_T_stabilizer_lemma(const ReeContext& ctx);
/// C_W(gamma) = W_1, C_W(delta) = W_2, C_W(sigma) = W_3; g cycles
/// W_1 -> W_2 -> W_3 -> W_1 and 3-cycles {gamma, delta, sigma} by conjugation.
Report verify_W_cycle_lemma(const ReeContext& ctx);
/// The linear-algebra steps showing g^-1 is not in HgH for H = C_G(sigma).
Report verify_final_lemma_certificate(const ReeContext& ctx);

}  // namespace twistgrp
