// Finite fields GF(p^m) for p in {2, 3}, polynomial basis.
//
// Elements are packed into a single integer "code": the little-endian base-p
// number c0 + c1*p + ... + c_{m-1}*p^{m-1} of the coefficient vector. For
// p = 2 the code is simply the coefficient bitmask.
#pragma once

#include <cstdint>
#include <compare>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace twistgrp {

class FieldElement;

class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kMaxFieldDegree = 13;

/// GF(p^m) with a pinned irreducible modulus. Instances are interned by
/// field_make() and live for the whole process.
class FieldSpec {
 public:
  using Code = std::uint32_t;

  FieldSpec(int p, int m);
  FieldSpec(const FieldSpec&) = delete;
  FieldSpec& operator=(const FieldSpec&) = delete;

  int characteristic() const noexcept { return p_; }
  int degree() const noexcept { return m_; }
  std::uint32_t order() const noexcept { return q_; }
  /// Monic modulus, little-endian coefficients, length m + 1.
  const std::vector<std::uint8_t>& modulus() const noexcept { return modulus_; }
  /// "p^m", e.g. "3^3".
  std::string name() const;
  /// Human-readable modulus, e.g. "x^3+2x+1".
  std::string modulus_string() const;

  FieldElement zero() const;
  FieldElement one() const;
  /// The class of x modulo the pinned irreducible.
  FieldElement x() const;
  FieldElement element(Code code) const;
  FieldElement from_int(long long v) const;
  FieldElement from_coeffs(std::span<const std::uint8_t> coeffs) const;
  /// Parses the little-endian coefficient string form, e.g. "110".
  FieldElement parse(std::string_view text) const;
  /// Least element (by code) of multiplicative order q - 1.
  FieldElement primitive_element() const;

  // Raw code-level arithmetic; hot loops in linalg use these directly.
  Code add(Code a, Code b) const noexcept;
  Code sub(Code a, Code b) const noexcept;
  Code neg(Code a) const noexcept;
  Code mul(Code a, Code b) const noexcept;
  Code inv(Code a) const;
  Code pow(Code a, std::uint64_t e) const noexcept;

  void coeffs(Code a, std::span<std::uint8_t> out) const noexcept;
  Code encode(std::span<const std::uint8_t> coeffs) const noexcept;

 private:
  Code mul_poly(Code a, Code b) const noexcept;

  int p_;
  int m_;
  std::uint32_t q_;
  std::vector<std::uint8_t> modulus_;
  Code modulus_mask_ = 0;  // p = 2: low m bits of the modulus
  std::vector<Code> pow_p_;  // p^i, i = 0..m
  std::vector<std::uint16_t> mul_table_;  // q <= 256 only
};

/// Returns the interned field GF(p^m). Throws FieldError for p not in {2,3}
/// or m outside [1, 13].
const FieldSpec& field_make(int p, int m);

/// True iff the monic polynomial with the given little-endian coefficients
/// (length deg + 1, leading coefficient 1) is irreducible over GF(p).
/// Exhaustive trial division by monic polynomials of degree <= deg/2.
bool is_irreducible(int p, std::span<const std::uint8_t> poly);

/// Immutable element of a FieldSpec. Equality is coefficient equality.
class FieldElement {
 public:
  using Code = FieldSpec::Code;

  FieldElement(const FieldSpec& field, Code code) noexcept : field_(&field), code_(code) {}

  const FieldSpec& field() const noexcept { return *field_; }
  Code code() const noexcept { return code_; }
  bool is_zero() const noexcept { return code_ == 0; }
  bool is_one() const noexcept { return code_ == 1; }

  std::vector<std::uint8_t> coeffs() const;
  /// Little-endian coefficient string, one digit per coefficient.
  std::string to_string() const;

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;

  FieldElement inv() const;
  /// x^e; negative e inverts first.
  FieldElement pow(long long e) const;
  /// x^(p^k).
  FieldElement frobenius(int k) const;
  /// theta(x) = x^(2^(n+1)) on GF(2^(2n+1)); theta(theta(x)) = x^2.
  FieldElement suzuki_twist() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
    return a.field_ == b.field_ && a.code_ == b.code_;
  }

 private:
  void check_same(const FieldElement& o) const;

  const FieldSpec* field_;
  Code code_;
};

}  // namespace twistgrp
