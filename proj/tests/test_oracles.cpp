#include <qcert/oracles.hpp>

#include <qcert/products.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <random>
#include <stdexcept>

using qcert::BigInt;
using qcert::jacobi_symbol;
using qcert::pod_table;
using qcert::r3_scaling_formula;
using qcert::r7_scaling_formula;
using qcert::rk_from_tk;
using qcert::rk_tk_factor;
using qcert::SeqKind;
using qcert::sigma_divisors;
using qcert::square_table;
using qcert::t4_from_sigma;
using qcert::t8_from_divisors;
using qcert::tri_table;

TEST_CASE("pod tables hold known small values") {
  const auto pod1 = pod_table(1, 8);
  const long expected1[] = {1, 1, 1, 2, 3, 4, 5, 7};
  for (std::size_t n = 0; n < 8; n++) CHECK(pod1.values[n] == expected1[n]);

  const auto pod3 = pod_table(3, 12);
  const long expected3[] = {1, 3, 6, 13, 27, 51, 91, 159, 273, 455, 738, 1179};
  for (std::size_t n = 0; n < 12; n++) CHECK(pod3.values[n] == expected3[n]);
}

TEST_CASE("pod table agrees with the generating-series backend") {
  const auto gen = qcert::pod_gen(3, qcert::IntegerRing{}, 60);
  const auto table = pod_table(3, 60);
  for (std::size_t n = 0; n < 60; n++) CHECK(gen[n] == table.values[n]);
}

TEST_CASE("triangular tables count representations as sums of triangular numbers") {
  const auto t1 = tri_table(1, 16);
  for (std::size_t n = 0; n < 16; n++) {
    const bool triangular = n == 0 || n == 1 || n == 3 || n == 6 || n == 10 || n == 15;
    CHECK(t1.values[n] == (triangular ? 1 : 0));
  }

  // t_2: ordered pairs (a, b) of triangular numbers with a + b = n.
  const auto t2 = tri_table(2, 8);
  const long expected2[] = {1, 2, 1, 2, 2, 0, 3, 2};
  for (std::size_t n = 0; n < 8; n++) CHECK(t2.values[n] == expected2[n]);

  CHECK(tri_table(4, 2).values[1] == 4);
  CHECK(tri_table(8, 6).values[5] == 224);
}

TEST_CASE("square tables count signed lattice points") {
  const auto r1 = square_table(1, 10);
  const long expected1[] = {1, 2, 0, 0, 2, 0, 0, 0, 0, 2};
  for (std::size_t n = 0; n < 10; n++) CHECK(r1.values[n] == expected1[n]);

  const auto r2 = square_table(2, 26);
  CHECK(r2.values[0] == 1);
  CHECK(r2.values[1] == 4);
  CHECK(r2.values[2] == 4);
  CHECK(r2.values[3] == 0);
  CHECK(r2.values[25] == 12);

  const auto r3 = square_table(3, 10);
  CHECK(r3.values[3] == 8);
  CHECK(r3.values[9] == 30);

  CHECK(square_table(7, 2).values[1] == 14);
}

TEST_CASE("r_2 equals the self-convolution of r_1") {
  const auto r1 = square_table(1, 200);
  const auto r2 = square_table(2, 200);
  for (std::size_t n = 0; n < 200; n++) {
    BigInt s = 0;
    for (std::size_t i = 0; i <= n; i++) s += r1.values[i] * r1.values[n - i];
    CHECK(r2.values[n] == s);
  }
}

TEST_CASE("table constructors validate their arguments") {
  CHECK_THROWS_AS(pod_table(0, 10), std::invalid_argument);
  CHECK_THROWS_AS(pod_table(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(tri_table(0, 10), std::invalid_argument);
  CHECK_THROWS_AS(square_table(3, 0), std::invalid_argument);
}

TEST_CASE("sigma sums divisors") {
  CHECK(sigma_divisors(1) == 1);
  CHECK(sigma_divisors(6) == 12);
  CHECK(sigma_divisors(12) == 28);
  CHECK(sigma_divisors(49) == 57);
  CHECK_THROWS_AS(sigma_divisors(0), std::invalid_argument);

  // Multiplicative on coprime arguments.
  std::mt19937_64 rng(424242);
  for (int iter = 0; iter < 200; iter++) {
    const std::uint64_t a = rng() % 400 + 1;
    const std::uint64_t b = rng() % 400 + 1;
    if (std::gcd(a, b) != 1) continue;
    CHECK(sigma_divisors(a * b) == sigma_divisors(a) * sigma_divisors(b));
  }
}

TEST_CASE("t_4 matches the divisor sum at an odd argument") {
  CHECK(t4_from_sigma(0) == 1);
  CHECK(t4_from_sigma(1) == 4);
  const auto t4 = tri_table(4, 500);
  for (std::uint64_t n = 0; n < 500; n++) CHECK(t4.values[n] == t4_from_sigma(n));
}

TEST_CASE("t_8 matches the odd-divisor cube sum") {
  CHECK(t8_from_divisors(0) == 1);
  CHECK(t8_from_divisors(5) == 224);
  const auto t8 = tri_table(8, 500);
  for (std::uint64_t n = 0; n < 500; n++) CHECK(t8.values[n] == t8_from_divisors(n));
}

TEST_CASE("square counts at 8n + k are a fixed multiple of triangular counts") {
  const long factors[] = {0, 2, 4, 8, 24, 112, 544, 2368};
  for (std::uint64_t k = 1; k <= 7; k++) CHECK(rk_tk_factor(k) == factors[k]);
  CHECK_THROWS_AS(rk_tk_factor(0), std::invalid_argument);
  CHECK_THROWS_AS(rk_tk_factor(8), std::invalid_argument);

  for (std::uint64_t k = 1; k <= 7; k++) {
    const std::size_t n_max = 120;
    const auto rk = square_table(k, 8 * n_max + k + 1);
    const auto tk = tri_table(k, n_max + 1);
    for (std::uint64_t n = 0; n <= n_max; n++)
      CHECK(rk.values[8 * n + k] == rk_from_tk(k, tk.values[n]));
  }
}

TEST_CASE("jacobi symbol has known values and rejects bad lower arguments") {
  CHECK(jacobi_symbol(1, 1) == 1);
  CHECK(jacobi_symbol(0, 3) == 0);
  CHECK(jacobi_symbol(2, 15) == 1);
  CHECK(jacobi_symbol(7, 15) == -1);
  CHECK(jacobi_symbol(-1, 3) == -1);
  CHECK(jacobi_symbol(-1, 5) == 1);
  CHECK_THROWS_AS(jacobi_symbol(3, 4), std::invalid_argument);
  CHECK_THROWS_AS(jacobi_symbol(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(jacobi_symbol(3, -5), std::invalid_argument);
}

TEST_CASE("jacobi symbol matches Euler's criterion at a prime") {
  const std::uint64_t p = 23;
  for (std::uint64_t a = 1; a < p; a++) {
    BigInt pow = 1;
    for (std::uint64_t i = 0; i < (p - 1) / 2; i++) pow = pow * a % p;
    const int euler = pow == 1 ? 1 : -1;
    CHECK(jacobi_symbol(a, p) == euler);
  }
}

TEST_CASE("jacobi symbol is multiplicative in the upper argument") {
  std::mt19937_64 rng(20260818);
  for (int iter = 0; iter < 200; iter++) {
    const BigInt a = rng() % 2000 - 1000;
    const BigInt b = rng() % 2000 - 1000;
    const BigInt n = 2 * (rng() % 500) + 1;
    CHECK(jacobi_symbol(a * b, n) == jacobi_symbol(a, n) * jacobi_symbol(b, n));
  }
}

TEST_CASE("r_3 at scaled arguments follows the two-term recurrence") {
  for (const std::uint64_t p : {3ULL, 5ULL}) {
    for (const std::uint64_t alpha : {1ULL, 2ULL}) {
      std::uint64_t scale = 1;
      for (std::uint64_t i = 0; i < 2 * alpha; i++) scale *= p;
      const std::size_t n_max = 30;
      const auto r3 = square_table(3, scale * n_max + 1);
      for (std::uint64_t n = 1; n <= n_max; n++)
        CHECK(r3.values[scale * n] == r3_scaling_formula(p, alpha, n, r3));
    }
  }
}

TEST_CASE("r_3 scaling validates its inputs") {
  const auto r3 = square_table(3, 20);
  const auto r7 = square_table(7, 20);
  CHECK_THROWS_AS(r3_scaling_formula(4, 1, 1, r3), std::invalid_argument);
  CHECK_THROWS_AS(r3_scaling_formula(9, 1, 1, r3), std::invalid_argument);
  CHECK_THROWS_AS(r3_scaling_formula(3, 1, 1, r7), std::invalid_argument);
  CHECK_THROWS_AS(r3_scaling_formula(3, 1, 25, r3), std::invalid_argument);
}

TEST_CASE("r_7 at scaled arguments follows the one-term recurrence") {
  for (const std::uint64_t p : {3ULL, 5ULL}) {
    const std::uint64_t scale = p * p;
    const std::size_t n_max = 30;
    const auto r7 = square_table(7, scale * n_max + 1);
    for (std::uint64_t n = 1; n <= n_max; n++) {
      if (n % (p * p) == 0) continue;
      CHECK(r7.values[scale * n] == r7_scaling_formula(p, 1, n, r7));
    }
  }
}

TEST_CASE("r_7 scaling validates its inputs") {
  const auto r7 = square_table(7, 20);
  const auto r3 = square_table(3, 20);
  CHECK_THROWS_AS(r7_scaling_formula(2, 1, 1, r7), std::invalid_argument);
  CHECK_THROWS_AS(r7_scaling_formula(15, 1, 1, r7), std::invalid_argument);
  CHECK_THROWS_AS(r7_scaling_formula(3, 1, 1, r3), std::invalid_argument);
  CHECK_THROWS_AS(r7_scaling_formula(3, 1, 9, r7), std::invalid_argument);
  CHECK_THROWS_AS(r7_scaling_formula(3, 1, 25, r7), std::invalid_argument);
}
