#include "twistgrp/numth.hpp"

#include <limits>

namespace twistgrp {

namespace {

std::uint64_t checked(u128 v, const char* what) {
  if (v > std::numeric_limits<std::uint64_t>::max()) throw NumthError(std::string(what) + ": value exceeds 64 bits");
  return static_cast<std::uint64_t>(v);
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t isqrt_exact(std::uint64_t v) {
  std::uint64_t r = 0;
  while ((r + 1) * (r + 1) <= v) ++r;
  if (r * r != v) throw NumthError("expected a perfect square");
  return r;
}

// Order of the twisted group over GF(p^e) by the family formula.
u128 twisted_order(Family f, std::uint64_t q) {
  const u128 qq = q;
  if (f == Family::Suzuki) return qq * qq * (qq * qq + 1) * (qq - 1);
  return qq * qq * qq * (qq * qq * qq + 1) * (qq - 1);
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  u128 r = 1;
  for (unsigned i = 0; i < e; ++i) r *= b;
  return checked(r, "ipow");
}

}  // namespace

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d <= n / d; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t r) {
  if (a % r == 0) throw NumthError("multiplicative_order: r divides a");
  std::uint64_t order = r - 1;
  for (auto p : prime_factors(r - 1))
    while (order % p == 0 && powmod(a, order / p, r) == 1) order /= p;
  return order;
}

std::set<std::uint64_t> primitive_prime_divisors(std::uint64_t a, unsigned m) {
  if (a < 2 || m < 2) throw NumthError("primitive_prime_divisors needs a, m >= 2");
  u128 v = 1;
  for (unsigned i = 0; i < m; ++i) {
    v *= a;
    if (v >= (u128{1} << 63)) throw NumthError("a^m exceeds 2^63");
  }
  std::set<std::uint64_t> out;
  for (auto r : prime_factors(static_cast<std::uint64_t>(v) - 1)) {
    // r | a^m - 1, so r does not divide a; primitive iff ord_r(a) = m.
    if (multiplicative_order(a, r) == m) out.insert(r);
  }
  return out;
}

bool is_zsigmondy_exception(std::uint64_t a, unsigned m) {
  if (a == 2 && m == 6) return true;
  if (m == 2) {
    const std::uint64_t s = a + 1;
    return (s & (s - 1)) == 0;
  }
  return false;
}

unsigned twisted_exponent(std::uint64_t q, std::uint64_t p) {
  unsigned e = 0;
  std::uint64_t v = q;
  while (v > 1 && v % p == 0) {
    v /= p;
    ++e;
  }
  if (v != 1 || e < 3 || e % 2 == 0)
    throw NumthError("q = " + std::to_string(q) + " is not " + std::to_string(p) + "^(2n+1) with n >= 1");
  return (e - 1) / 2;
}

std::uint64_t suzuki_order(std::uint64_t q) {
  twisted_exponent(q, 2);
  return checked(twisted_order(Family::Suzuki, q), "suzuki_order");
}

std::uint64_t ree_order(std::uint64_t q) {
  twisted_exponent(q, 3);
  return checked(twisted_order(Family::Ree, q), "ree_order");
}

std::string to_string(Family f) { return f == Family::Suzuki ? "suzuki" : "ree"; }

Family parse_family(const std::string& s) {
  if (s == "suzuki") return Family::Suzuki;
  if (s == "ree") return Family::Ree;
  throw NumthError("unknown family '" + s + "' (expected suzuki or ree)");
}

nlohmann::json MaxSubgroupTable::to_json() const {
  nlohmann::json rows_json = nlohmann::json::array();
  for (const auto& r : rows) rows_json.push_back({{"type", r.type}, {"structure", r.structure}, {"order", r.order}});
  return {{"family", to_string(family)}, {"q", q}, {"m", m}, {"group_order", group_order}, {"rows", rows_json}};
}

MaxSubgroupTable max_subgroup_table(Family family, std::uint64_t q, std::uint64_t m) {
  const std::uint64_t p = family == Family::Suzuki ? 2 : 3;
  const unsigned n = twisted_exponent(q, p);
  const unsigned e = 2 * n + 1;
  if (m == 0 || e % m != 0) throw NumthError("m = " + std::to_string(m) + " does not divide 2n+1 = " + std::to_string(e));

  MaxSubgroupTable t{family, q, m, checked(twisted_order(family, q) * m, "group order"), {}};
  const u128 qq = q;
  auto row = [&](std::string type, std::string structure, u128 order) {
    t.rows.push_back({std::move(type), std::move(structure), checked(order * m, "subgroup order")});
  };
  if (family == Family::Suzuki) {
    const u128 r = isqrt_exact(2 * q);
    row("i", "[q^2]:(q-1)", qq * qq * (qq - 1));
    row("ii", "D_{2(q-1)}", 2 * (qq - 1));
    row("iii", "C_{q+sqrt(2q)+1}:4", 4 * (qq + r + 1));
    row("iv", "C_{q-sqrt(2q)+1}:4", 4 * (qq - r + 1));
    for (auto r_prime : prime_factors(e)) {
      const std::uint64_t q0 = ipow(2, e / static_cast<unsigned>(r_prime));
      if (q0 > 2) row("v", "Sz(" + std::to_string(q0) + ")", twisted_order(Family::Suzuki, q0));
    }
  } else {
    const u128 r = isqrt_exact(3 * q);
    row("i", "[q^3]:C_{q-1}", qq * qq * qq * (qq - 1));
    row("ii", "2 x PSL_2(q)", qq * (qq * qq - 1));
    row("iii", "(2^2 x D_{(q+1)/2}):3", 6 * (qq + 1));
    row("iv", "C_{q-sqrt(3q)+1}:6", 6 * (qq - r + 1));
    row("v", "C_{q+sqrt(3q)+1}:6", 6 * (qq + r + 1));
    for (auto r_prime : prime_factors(e)) {
      const std::uint64_t q0 = ipow(3, e / static_cast<unsigned>(r_prime));
      row("vi", "2G2(" + std::to_string(q0) + ")", twisted_order(Family::Ree, q0));
    }
  }
  return t;
}

}  // namespace twistgrp
