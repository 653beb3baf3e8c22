#include "twistgrp/gf.hpp"

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <utility>

namespace twistgrp {

namespace {

using Poly = std::vector<int>;  // little-endian, over GF(p)

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic b over GF(p).
Poly poly_rem(Poly a, const Poly& b, int p) {
  const std::size_t db = b.size() - 1;
  trim(a);
  while (a.size() > db) {
    const int lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = ((a[shift + i] - lead * b[i]) % p + p) % p;
    }
    trim(a);
  }
  return a;
}

std::vector<std::uint8_t> least_irreducible(int p, int m) {
  std::uint32_t count = 1;
  for (int i = 0; i < m; ++i) count *= static_cast<std::uint32_t>(p);
  std::vector<std::uint8_t> poly(static_cast<std::size_t>(m) + 1, 0);
  for (std::uint32_t low = 0; low < count; ++low) {
    std::uint32_t v = low;
    for (int i = 0; i < m; ++i) {
      poly[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v % static_cast<std::uint32_t>(p));
      v /= static_cast<std::uint32_t>(p);
    }
    poly[static_cast<std::size_t>(m)] = 1;
    if (is_irreducible(p, poly)) return poly;
  }
  throw FieldError("no irreducible polynomial found");  // unreachable
}

}  // namespace

bool is_irreducible(int p, std::span<const std::uint8_t> poly) {
  if (poly.empty() || poly.back() != 1) throw FieldError("is_irreducible: polynomial must be monic");
  const int deg = static_cast<int>(poly.size()) - 1;
  if (deg < 1) return false;
  Poly f(poly.begin(), poly.end());
  for (int d = 1; 2 * d <= deg; ++d) {
    std::uint32_t count = 1;
    for (int i = 0; i < d; ++i) count *= static_cast<std::uint32_t>(p);
    Poly g(static_cast<std::size_t>(d) + 1, 0);
    g[static_cast<std::size_t>(d)] = 1;
    for (std::uint32_t low = 0; low < count; ++low) {
      std::uint32_t v = low;
      for (int i = 0; i < d; ++i) {
        g[static_cast<std::size_t>(i)] = static_cast<int>(v % static_cast<std::uint32_t>(p));
        v /= static_cast<std::uint32_t>(p);
      }
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

FieldSpec::FieldSpec(int p, int m) : p_(p), m_(m) {
  if (p != 2 && p != 3) throw FieldError("unsupported characteristic " + std::to_string(p) + " (need 2 or 3)");
  if (m < 1 || m > kMaxFieldDegree) throw FieldError("extension degree " + std::to_string(m) + " outside [1, 13]");
  q_ = 1;
  pow_p_.push_back(1);
  for (int i = 0; i < m; ++i) {
    q_ *= static_cast<std::uint32_t>(p);
    pow_p_.push_back(q_);
  }
  modulus_ = least_irreducible(p, m);
  if (p == 2) {
    for (int i = 0; i < m; ++i) modulus_mask_ |= static_cast<Code>(modulus_[static_cast<std::size_t>(i)]) << i;
  }
  if (q_ <= 256) {
    mul_table_.resize(static_cast<std::size_t>(q_) * q_);
    for (Code a = 0; a < q_; ++a)
      for (Code b = 0; b < q_; ++b) mul_table_[a * q_ + b] = static_cast<std::uint16_t>(mul_poly(a, b));
  }
}

std::string FieldSpec::name() const { return std::to_string(p_) + "^" + std::to_string(m_); }

std::string FieldSpec::modulus_string() const {
  std::string out;
  for (int i = m_; i >= 0; --i) {
    const int c = modulus_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (c != 1 || i == 0) out += std::to_string(c);
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

FieldElement FieldSpec::zero() const { return {*this, 0}; }
FieldElement FieldSpec::one() const { return {*this, 1}; }

FieldElement FieldSpec::x() const {
  if (m_ == 1) {
    // x is congruent to minus the constant term of the linear modulus.
    return {*this, neg(modulus_[0])};
  }
  return {*this, static_cast<Code>(p_)};
}

FieldElement FieldSpec::element(Code code) const {
  if (code >= q_) throw FieldError("element code out of range for GF(" + name() + ")");
  return {*this, code};
}

FieldElement FieldSpec::from_int(long long v) const {
  const long long r = ((v % p_) + p_) % p_;
  return {*this, static_cast<Code>(r)};
}

FieldElement FieldSpec::from_coeffs(std::span<const std::uint8_t> coeffs) const {
  if (coeffs.size() != static_cast<std::size_t>(m_)) throw FieldError("coefficient vector has wrong length");
  for (auto c : coeffs)
    if (c >= p_) throw FieldError("coefficient out of range");
  return {*this, encode(coeffs)};
}

FieldElement FieldSpec::parse(std::string_view text) const {
  if (text.size() != static_cast<std::size_t>(m_)) throw FieldError("element string '" + std::string(text) + "' has wrong length");
  std::array<std::uint8_t, kMaxFieldDegree> c{};
  for (std::size_t i = 0; i < text.size(); ++i) {
    const int d = text[i] - '0';
    if (d < 0 || d >= p_) throw FieldError("bad digit in element string '" + std::string(text) + "'");
    c[i] = static_cast<std::uint8_t>(d);
  }
  return {*this, encode(std::span(c.data(), static_cast<std::size_t>(m_)))};
}

FieldElement FieldSpec::primitive_element() const {
  const std::uint64_t n = q_ - 1;
  std::vector<std::uint64_t> primes;
  std::uint64_t r = n;
  for (std::uint64_t d = 2; d * d <= r; ++d) {
    if (r % d == 0) {
      primes.push_back(d);
      while (r % d == 0) r /= d;
    }
  }
  if (r > 1) primes.push_back(r);
  for (Code c = 1; c < q_; ++c) {
    bool ok = true;
    for (auto pr : primes) {
      if (pow(c, n / pr) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return {*this, c};
  }
  throw FieldError("no primitive element");  // unreachable
}

void FieldSpec::coeffs(Code a, std::span<std::uint8_t> out) const noexcept {
  if (p_ == 2) {
    for (int i = 0; i < m_; ++i) out[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((a >> i) & 1u);
    return;
  }
  for (int i = 0; i < m_; ++i) {
    out[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(a % 3u);
    a /= 3u;
  }
}

FieldSpec::Code FieldSpec::encode(std::span<const std::uint8_t> c) const noexcept {
  Code v = 0;
  for (int i = m_ - 1; i >= 0; --i) v = v * static_cast<Code>(p_) + c[static_cast<std::size_t>(i)];
  return v;
}

FieldSpec::Code FieldSpec::add(Code a, Code b) const noexcept {
  if (p_ == 2) return a ^ b;
  Code out = 0;
  for (int i = 0; i < m_; ++i) {
    out += ((a % 3u + b % 3u) % 3u) * pow_p_[static_cast<std::size_t>(i)];
    a /= 3u;
    b /= 3u;
  }
  return out;
}

FieldSpec::Code FieldSpec::neg(Code a) const noexcept {
  if (p_ == 2) return a;
  Code out = 0;
  for (int i = 0; i < m_; ++i) {
    out += ((3u - a % 3u) % 3u) * pow_p_[static_cast<std::size_t>(i)];
    a /= 3u;
  }
  return out;
}

FieldSpec::Code FieldSpec::sub(Code a, Code b) const noexcept { return add(a, neg(b)); }

FieldSpec::Code FieldSpec::mul(Code a, Code b) const noexcept {
  if (!mul_table_.empty()) return mul_table_[a * q_ + b];
  return mul_poly(a, b);
}

FieldSpec::Code FieldSpec::mul_poly(Code a, Code b) const noexcept {
  if (p_ == 2) {
    std::uint64_t r = 0;
    for (int i = 0; i < m_; ++i)
      if ((b >> i) & 1u) r ^= static_cast<std::uint64_t>(a) << i;
    for (int i = 2 * m_ - 2; i >= m_; --i) {
      if ((r >> i) & 1u) r ^= (static_cast<std::uint64_t>(modulus_mask_) << (i - m_)) | (1ull << i);
    }
    return static_cast<Code>(r);
  }
  std::array<int, kMaxFieldDegree> da{}, db{};
  std::array<int, 2 * kMaxFieldDegree> prod{};
  for (int i = 0; i < m_; ++i) {
    da[static_cast<std::size_t>(i)] = static_cast<int>(a % 3u);
    db[static_cast<std::size_t>(i)] = static_cast<int>(b % 3u);
    a /= 3u;
    b /= 3u;
  }
  for (int i = 0; i < m_; ++i) {
    if (da[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; j < m_; ++j) prod[static_cast<std::size_t>(i + j)] += da[static_cast<std::size_t>(i)] * db[static_cast<std::size_t>(j)];
  }
  for (int i = 2 * m_ - 2; i >= m_; --i) {
    const int lead = prod[static_cast<std::size_t>(i)] % 3;
    if (lead == 0) continue;
    for (int j = 0; j <= m_; ++j) prod[static_cast<std::size_t>(i - m_ + j)] -= lead * modulus_[static_cast<std::size_t>(j)];
  }
  Code out = 0;
  for (int i = m_ - 1; i >= 0; --i) out = out * 3u + static_cast<Code>(((prod[static_cast<std::size_t>(i)] % 3) + 3) % 3);
  return out;
}

FieldSpec::Code FieldSpec::pow(Code a, std::uint64_t e) const noexcept {
  Code result = 1;
  Code base = a;
  while (e > 0) {
    if (e & 1u) result = mul(result, base);
    base = mul(base, base);
    e >>= 1u;
  }
  return result;
}

FieldSpec::Code FieldSpec::inv(Code a) const {
  if (a == 0) throw FieldError("inversion of zero in GF(" + name() + ")");
  return pow(a, q_ - 2);
}

const FieldSpec& field_make(int p, int m) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<FieldSpec>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{p, m}];
  if (!slot) {
    try {
      slot = std::make_unique<FieldSpec>(p, m);
    } catch (...) {
      cache.erase({p, m});
      throw;
    }
  }
  return *slot;
}

// FieldElement

void FieldElement::check_same(const FieldElement& o) const {
  if (field_ != o.field_) throw FieldError("field mismatch: GF(" + field_->name() + ") vs GF(" + o.field_->name() + ")");
}

std::vector<std::uint8_t> FieldElement::coeffs() const {
  std::vector<std::uint8_t> out(static_cast<std::size_t>(field_->degree()));
  field_->coeffs(code_, out);
  return out;
}

std::string FieldElement::to_string() const {
  std::string out;
  for (auto c : coeffs()) out += static_cast<char>('0' + c);
  return out;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  return {*field_, field_->add(code_, o.code_)};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(o);
  return {*field_, field_->sub(code_, o.code_)};
}

FieldElement FieldElement::operator-() const { return {*field_, field_->neg(code_)}; }

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  return {*field_, field_->mul(code_, o.code_)};
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  check_same(o);
  return {*field_, field_->mul(code_, field_->inv(o.code_))};
}

FieldElement FieldElement::inv() const { return {*field_, field_->inv(code_)}; }

FieldElement FieldElement::pow(long long e) const {
  if (e < 0) return inv().pow(-e);
  return {*field_, field_->pow(code_, static_cast<std::uint64_t>(e))};
}

FieldElement FieldElement::frobenius(int k) const {
  if (k < 0) throw FieldError("frobenius: negative power");
  Code c = code_;
  const int steps = k % field_->degree();
  for (int i = 0; i < steps; ++i) c = field_->pow(c, static_cast<std::uint64_t>(field_->characteristic()));
  return {*field_, c};
}

FieldElement FieldElement::suzuki_twist() const {
  const int m = field_->degree();
  if (field_->characteristic() != 2 || m % 2 == 0)
    throw FieldError("suzuki_twist needs GF(2^(2n+1)), got GF(" + field_->name() + ")");
  const int n = (m - 1) / 2;
  return frobenius(n + 1);
}

}  // namespace twistgrp
