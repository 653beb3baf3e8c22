#include <doctest.h>

#include <cmath>

#include "twistgrp/numth.hpp"

using namespace twistgrp;

namespace {

// Primes r dividing a^m - 1 with multiplicative order exactly m, by trial
// division of a^m - 1 itself.
std::set<std::uint64_t> ppd_oracle(std::uint64_t a, unsigned m) {
  u128 v = 1;
  for (unsigned i = 0; i < m; ++i) v *= a;
  v -= 1;
  std::set<std::uint64_t> out;
  for (std::uint64_t r = 2; static_cast<u128>(r) * r <= v; ++r) {
    if (v % r) continue;
    while (v % r == 0) v /= r;
    out.insert(r);
  }
  if (v > 1) out.insert(static_cast<std::uint64_t>(v));
  std::set<std::uint64_t> primitive;
  for (auto r : out) {
    u128 x = a % r;
    unsigned k = 1;
    while (x != 1) {
      x = x * a % r;
      ++k;
    }
    if (k == m) primitive.insert(r);
  }
  return primitive;
}

}  // namespace

TEST_CASE("p-part") {
  CHECK(p_part<std::uint64_t>(48, 2) == 16);
  CHECK(p_part<std::uint64_t>(48, 3) == 3);
  CHECK(p_part<std::uint64_t>(48, 5) == 1);
  CHECK(p_part<std::uint64_t>(29120, 2) == 64);
  CHECK_THROWS_AS(p_part<std::uint64_t>(0, 2), NumthError);
  CHECK_THROWS_AS(p_part<std::uint64_t>(12, 1), NumthError);
}

TEST_CASE("(n!)_p < p^(n/(p-1)) against 128-bit factorials") {
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29}) {
    u128 fact = 1;
    for (unsigned n = 1; n <= 30; ++n) {
      fact *= n;
      // Legendre: v_p(n!) = sum floor(n / p^i)
      unsigned legendre = 0;
      for (std::uint64_t pk = p; pk <= n; pk *= p) legendre += static_cast<unsigned>(n / pk);
      u128 expected = 1;
      for (unsigned i = 0; i < legendre; ++i) expected *= p;
      CAPTURE(p);
      CAPTURE(n);
      REQUIRE(p_part<u128>(fact, p) == expected);
      CHECK(static_cast<double>(legendre) < static_cast<double>(n) / static_cast<double>(p - 1));
    }
  }
}

TEST_CASE("primes and orders") {
  CHECK(prime_factors(29120) == std::vector<std::uint64_t>{2, 5, 7, 13});
  CHECK(prime_factors(1).empty());
  CHECK(is_prime(8191));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK(multiplicative_order(2, 7) == 3);
  CHECK(multiplicative_order(3, 7) == 6);
  CHECK_THROWS_AS(multiplicative_order(14, 7), NumthError);
}

TEST_CASE("primitive prime divisors match the trial-division oracle") {
  for (std::uint64_t a = 2; a <= 20; ++a)
    for (unsigned m = 2; m <= 12; ++m) {
      CAPTURE(a);
      CAPTURE(m);
      REQUIRE(primitive_prime_divisors(a, m) == ppd_oracle(a, m));
    }
  CHECK(primitive_prime_divisors(2, 6).empty());
  CHECK(primitive_prime_divisors(3, 2).empty());
  CHECK(primitive_prime_divisors(2, 3) == std::set<std::uint64_t>{7});
  CHECK_THROWS_AS(primitive_prime_divisors(2, 63), NumthError);
  CHECK_THROWS_AS(primitive_prime_divisors(1, 3), NumthError);
}

TEST_CASE("Zsigmondy exceptions in the sweep are exactly the listed ones") {
  for (std::uint64_t a = 2; a <= 20; ++a)
    for (unsigned m = 2; m <= 12; ++m) {
      const bool none = primitive_prime_divisors(a, m).empty();
      const bool a_plus_1_power_of_2 = ((a + 1) & a) == 0;
      const bool listed = (a == 2 && m == 6) || (m == 2 && a_plus_1_power_of_2);
      CAPTURE(a);
      CAPTURE(m);
      CHECK(none == listed);
      CHECK(is_zsigmondy_exception(a, m) == listed);
    }
}

TEST_CASE("twisted exponents and orders") {
  CHECK(twisted_exponent(8, 2) == 1);
  CHECK(twisted_exponent(32, 2) == 2);
  CHECK(twisted_exponent(27, 3) == 1);
  CHECK(twisted_exponent(243, 3) == 2);
  for (std::uint64_t bad : {2, 4, 16, 9, 0, 1, 24})
    CHECK_THROWS_AS(twisted_exponent(bad, bad % 3 == 0 ? 3 : 2), NumthError);
  CHECK_THROWS_AS(twisted_exponent(3, 3), NumthError);
  CHECK(suzuki_order(8) == 29120);
  CHECK(suzuki_order(32) == 32537600);
  CHECK(ree_order(27) == 10073444472ULL);
  CHECK_THROWS_AS(suzuki_order(27), NumthError);
}

TEST_CASE("maximal subgroup tables") {
  const auto sz = max_subgroup_table(Family::Suzuki, 8, 1);
  std::vector<std::uint64_t> orders;
  for (const auto& r : sz.rows) orders.push_back(r.order);
  CHECK(orders == std::vector<std::uint64_t>{448, 14, 52, 20});
  CHECK(sz.group_order == 29120);

  const auto sz32 = max_subgroup_table(Family::Suzuki, 32, 5);
  CHECK(sz32.rows.size() == 4);  // Sz(2) is not a maximal subfield subgroup
  CHECK(sz32.rows[0].order == 32 * 32 * 31 * 5);
  CHECK(sz32.rows[2].order == 4 * 41 * 5);
  CHECK(sz32.rows[3].order == 4 * 25 * 5);

  const auto sz128 = max_subgroup_table(Family::Suzuki, 128, 1);
  CHECK(sz128.rows.size() == 4);

  const auto sz512 = max_subgroup_table(Family::Suzuki, 512, 3);
  REQUIRE(sz512.rows.size() == 5);
  CHECK(sz512.rows[4].order == 29120 * 3);

  const auto ree = max_subgroup_table(Family::Ree, 27, 1);
  REQUIRE(ree.rows.size() == 6);
  CHECK(ree.rows[0].order == 27ULL * 27 * 27 * 26);
  CHECK(ree.rows[1].order == 27ULL * (27 * 27 - 1));
  CHECK(ree.rows[2].order == 6 * 28);
  CHECK(ree.rows[3].order == 6 * 19);
  CHECK(ree.rows[4].order == 6 * 37);
  CHECK(ree.rows[5].order == 1512);
  CHECK((27ULL * 27 * 27 + 1) % 19 == 0);
  CHECK((27ULL * 27 * 27 + 1) % 37 == 0);
  for (const auto& r : ree.rows) CHECK(ree.group_order % r.order == 0);

  CHECK_THROWS_AS(max_subgroup_table(Family::Suzuki, 8, 2), NumthError);
  CHECK_THROWS_AS(max_subgroup_table(Family::Ree, 9, 1), NumthError);
  CHECK(parse_family("ree") == Family::Ree);
  CHECK(to_string(Family::Suzuki) == "suzuki");
  CHECK_THROWS_AS(parse_family("sz"), NumthError);
  CHECK(ree.to_json()["rows"].size() == 6);
}
