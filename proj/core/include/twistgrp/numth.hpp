// Number theory for the twisted groups: p-parts, primitive prime divisors,
// group orders and maximal-subgroup order tables.
#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace twistgrp {

class NumthError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

__extension__ typedef unsigned __int128 u128;

/// Largest power of p dividing n. Works for any unsigned integer type,
/// including u128.
template <typename U>
U p_part(U n, U p) {
  if (n == 0) throw NumthError("p_part: n must be positive");
  if (p < 2) throw NumthError("p_part: p must be at least 2");
  U part = 1;
  while (n % p == 0) {
    n /= p;
    part *= p;
  }
  return part;
}

/// Distinct prime factors by trial division.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
bool is_prime(std::uint64_t n);

/// Multiplicative order of a modulo the prime r (r must not divide a).
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t r);

/// Primes r | a^m - 1 with r not dividing a^i - 1 for 1 <= i < m.
/// Requires a^m < 2^63.
std::set<std::uint64_t> primitive_prime_divisors(std::uint64_t a, unsigned m);

/// True iff (a, m) is one of Zsigmondy's exceptions: (2, 6), or m = 2 with
/// a + 1 a power of 2.
bool is_zsigmondy_exception(std::uint64_t a, unsigned m);

/// q = p^(2n+1) with n >= 1: returns n, or throws NumthError.
unsigned twisted_exponent(std::uint64_t q, std::uint64_t p);

/// |Sz(q)| = q^2 (q^2 + 1)(q - 1) for q = 2^(2n+1), n >= 1.
std::uint64_t suzuki_order(std::uint64_t q);
/// |2G2(q)| = q^3 (q^3 + 1)(q - 1) for q = 3^(2n+1), n >= 1.
std::uint64_t ree_order(std::uint64_t q);

enum class Family { Suzuki, Ree };

std::string to_string(Family f);
Family parse_family(const std::string& s);

struct MaxSubgroupRow {
  std::string type;  // "i", "ii", ...
  std::string structure;
  std::uint64_t order;
};

/// Orders of the maximal subgroups of Sz(q):m or 2G2(q):m not containing
/// the socle, one row per class type (subfield types repeat per prime r).
struct MaxSubgroupTable {
  Family family;
  std::uint64_t q;
  std::uint64_t m;
  std::uint64_t group_order;  // |socle| * m
  std::vector<MaxSubgroupRow> rows;

  nlohmann::json to_json() const;
};

/// Throws NumthError unless q is valid for the family and m divides 2n+1.
MaxSubgroupTable max_subgroup_table(Family family, std::uint64_t q, std::uint64_t m);

}  // namespace twistgrp
