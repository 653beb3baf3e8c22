// The Suzuki groups Sz(q), q = 2^(2n+1), as 4x4 matrices over GF(q).
//
//   S(a, b)  lower unitriangular, the Sylow 2-subgroup Q of the base-point
//            stabiliser; S(a,b) S(c,d) = S(a + c, b + d + a c^theta)
//   M(l)     diag(l^(1+2^n), l^(2^n), l^(-2^n), l^(-1-2^n)), the torus
//   tau      the antidiagonal involution
//
// Sz(q) = <S(1,0), S(0,1), M(l0), tau> with l0 the least primitive element.
// The ovoid is the orbit of the projective point <e_0>, which every S(a,b)
// fixes.
#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "twistgrp/grp.hpp"
#include "twistgrp/linalg.hpp"
#include "twistgrp/report.hpp"

namespace twistgrp {

class SuzukiError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SuzukiContext {
 public:
  /// Throws NumthError for malformed q. The group is enumerated only when
  /// |Sz(q)| <= cap; otherwise the context is usable for matrix-level work.
  static SuzukiContext build(std::uint64_t q, std::size_t cap = kDefaultClosureCap);

  std::uint64_t q() const noexcept { return q_; }
  unsigned n() const noexcept { return n_; }
  const FieldSpec& field() const noexcept { return *field_; }

  Matrix unipotent(const FieldElement& a, const FieldElement& b) const;
  Matrix torus(const FieldElement& lambda) const;
  const Matrix& weyl() const noexcept { return weyl_; }
  const FieldElement& torus_generator() const noexcept { return lambda0_; }
  std::vector<Matrix> generators() const;

  bool enumerated() const noexcept { return group_ != nullptr; }
  /// Throws SuzukiError when the group was not enumerated.
  const EnumeratedGroup& group() const;
  std::shared_ptr<const EnumeratedGroup> group_ptr() const;

 private:
  SuzukiContext(std::uint64_t q, unsigned n, const FieldSpec& field);

  std::uint64_t q_;
  unsigned n_;
  const FieldSpec* field_;
  FieldElement lambda0_;
  Matrix weyl_;
  std::shared_ptr<const EnumeratedGroup> group_;
};

/// kappa = M(l0), generating the two-point stabiliser K.
Matrix kappa(const SuzukiContext& ctx);
/// The Weyl involution; swaps the base points a = <e_0> and b = <e_3>.
Matrix tau(const SuzukiContext& ctx);
/// rho = S(1, 0), an element of order 4 in Q.
Matrix rho(const SuzukiContext& ctx);

/// Q = {S(a, b)}.
EnumeratedGroup unipotent_subgroup(const SuzukiContext& ctx);

/// The ovoid as a set of normalised projective points (first nonzero
/// coordinate 1) with the action of G by right multiplication.
class Ovoid {
 public:
  explicit Ovoid(const SuzukiContext& ctx);

  std::size_t size() const noexcept { return points_.size(); }
  const Vector& point(std::size_t i) const { return points_.at(i); }
  std::size_t base() const noexcept { return 0; }
  /// Index of <e_3> = base^tau.
  std::size_t opposite() const noexcept { return opposite_; }
  std::size_t image(std::size_t i, const Matrix& x) const;
  /// Elements of G fixing every listed point.
  EnumeratedGroup stabilizer(const std::vector<std::size_t>& points) const;
  /// Orbit of point i under the subgroup s.
  std::vector<std::size_t> orbit(std::size_t i, const EnumeratedGroup& s) const;

 private:
  std::shared_ptr<const EnumeratedGroup> group_;
  std::vector<Vector> points_;
  std::unordered_map<std::string, std::size_t> index_;
  std::size_t opposite_ = 0;
};

/// For every nontrivial x in Q: C_G(x) <= Q.
Report verify_centralizer_lemma(const SuzukiContext& ctx);
/// a^tau = b, b^tau = a, tau L tau = G_b, L cap tau L tau = K, Q cap tau L tau = 1.
Report verify_tau_lemma(const SuzukiContext& ctx);

struct SuzukiDigraphIngredients {
  EnumeratedGroup h;  // N_G(K)
  Matrix g;           // rho
};

/// H = N_G(<kappa>) and g = rho, after checking g not in H and
/// g^-1 not in HgH. Failure of either throws SuzukiError.
SuzukiDigraphIngredients suzuki_digraph_ingredients(const SuzukiContext& ctx);

/// N_G(<x>) for the least element x (by encoding) of the given order;
/// throws SuzukiError if G has no element of that order.
EnumeratedGroup cyclic_normalizer(const SuzukiContext& ctx, long long order);

}  // namespace twistgrp
