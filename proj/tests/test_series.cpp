#include <qcert/series.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <random>
#include <vector>

using qcert::agree_to;
using qcert::BigInt;
using qcert::IntegerRing;
using qcert::ModRing;
using qcert::reduce_mod;
using qcert::Series;

namespace {

Series<IntegerRing> from_ints(std::initializer_list<long> coeffs) {
  std::vector<BigInt> v;
  for (long c : coeffs) v.emplace_back(c);
  return Series<IntegerRing>(IntegerRing{}, std::move(v));
}

std::vector<std::uint64_t> random_coeffs(std::mt19937_64& rng, std::size_t n,
                                         std::uint64_t bound) {
  std::uniform_int_distribution<std::uint64_t> dist(0, bound - 1);
  std::vector<std::uint64_t> v(n);
  for (auto& c : v) c = dist(rng);
  return v;
}

}  // namespace

TEST_CASE("construction canonicalizes and rejects empty windows") {
  const ModRing ring(9);
  const Series<ModRing> a(ring, {10, 17, 3});
  CHECK(a[0] == 1);
  CHECK(a[1] == 8);
  CHECK(a[2] == 3);
  CHECK(a.order() == 3);
  CHECK_THROWS_AS(Series<ModRing>(ring, {}), std::invalid_argument);
  CHECK_THROWS_AS(a[3], std::out_of_range);
}

TEST_CASE("binary operations truncate to the shorter operand") {
  const auto a = from_ints({1, 2, 3, 4});
  const auto b = from_ints({5, 6});
  CHECK((a + b).order() == 2);
  CHECK((a - b).order() == 2);
  CHECK((a * b).order() == 2);
  CHECK((a + b)[1] == 8);
  CHECK((a * b)[1] == 16);  // 1*6 + 2*5
}

TEST_CASE("multiplication is plain truncated convolution") {
  const auto a = from_ints({1, 1, 1});
  CHECK((a * a) == from_ints({1, 2, 3}));

  const ModRing ring(7);
  const Series<ModRing> b(ring, {3, 5, 1, 6});
  const Series<ModRing> c(ring, {2, 0, 4});
  const auto p = b * c;
  REQUIRE(p.order() == 3);
  CHECK(p[0] == 6);
  CHECK(p[1] == 3);   // 3*0 + 5*2 = 10
  CHECK(p[2] == 0);   // 3*4 + 5*0 + 1*2 = 14
}

TEST_CASE("the worked inverse example holds under re-multiplication") {
  // (2 + q)^{-1} mod 9 starts 5 + 2q + 8q^2: multiplying back gives 1.
  const ModRing ring(9);
  const Series<ModRing> a(ring, {2, 1, 0});
  const auto inv = a.inverse();
  CHECK(inv[0] == 5);
  CHECK(inv[1] == 2);
  CHECK(inv[2] == 8);
  CHECK((a * inv) == Series<ModRing>::one(ring, 3));
}

TEST_CASE("inverse requires a unit constant term") {
  const ModRing ring(9);
  CHECK_THROWS_AS(Series<ModRing>(ring, {3, 1}).inverse(), std::domain_error);
  CHECK_THROWS_AS(from_ints({2, 1}).inverse(), std::domain_error);
  CHECK(from_ints({-1, 4}).inverse()[0] == -1);
}

TEST_CASE("pow matches repeated multiplication and handles edge exponents") {
  const auto a = from_ints({1, 3, -2, 5});
  CHECK(a.pow(0) == Series<IntegerRing>::one(IntegerRing{}, 4));
  CHECK(a.pow(1) == a);
  CHECK(a.pow(5) == a * a * a * a * a);
  // binary-squaring path
  const auto many = a.pow(20);
  auto chain = Series<IntegerRing>::one(IntegerRing{}, 4);
  for (int i = 0; i < 20; i++) chain = chain * a;
  CHECK(many == chain);
}

TEST_CASE("substitute_power spaces coefficients and extends the window") {
  const auto a = from_ints({4, -1, 7});
  const auto b = a.substitute_power(3);
  REQUIRE(b.order() == 9);
  CHECK(b[0] == 4);
  CHECK(b[3] == -1);
  CHECK(b[6] == 7);
  CHECK(b[1] == 0);
  CHECK(a.substitute_power(1) == a);
  CHECK_THROWS_AS(a.substitute_power(0), std::invalid_argument);
}

TEST_CASE("substitute_negate is an involution that flips odd coefficients") {
  const auto a = from_ints({1, 2, 3, 4});
  const auto b = a.substitute_negate();
  CHECK(b == from_ints({1, -2, 3, -4}));
  CHECK(b.substitute_negate() == a);
}

TEST_CASE("extract_progression takes every m-th coefficient from r") {
  const auto a = from_ints({0, 1, 2, 3, 4, 5, 6, 7, 8});
  const auto b = a.extract_progression(2, 3);
  REQUIRE(b.order() == 3);
  CHECK(b[0] == 2);
  CHECK(b[1] == 5);
  CHECK(b[2] == 8);
  CHECK(a.extract_progression(0, 3).order() == 3);
  CHECK(a.extract_progression(8, 9).order() == 1);
  CHECK_THROWS_AS(a.extract_progression(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(a.extract_progression(9, 10), std::invalid_argument);
}

TEST_CASE("shift_down divides by a power of q and checks the discarded terms") {
  const auto a = from_ints({0, 0, 5, 6});
  const auto b = a.shift_down(2);
  REQUIRE(b.order() == 2);
  CHECK(b[0] == 5);
  CHECK(b[1] == 6);
  CHECK_THROWS_WITH(from_ints({0, 1, 2}).shift_down(2),
                    Catch::Matchers::ContainsSubstring("1"));
  CHECK_THROWS_AS(a.shift_down(4), std::invalid_argument);
}

TEST_CASE("reduce_mod maps exact series into a modular ring") {
  const auto a = from_ints({10, -1, 3});
  const auto b = reduce_mod(a, 7);
  CHECK(b[0] == 3);
  CHECK(b[1] == 6);
  CHECK(b[2] == 3);
}

TEST_CASE("agree_to reports the first mismatch index") {
  const auto a = from_ints({1, 2, 3, 4});
  const auto b = from_ints({1, 2, 9, 4});
  const auto good = agree_to(a, b, 2);
  CHECK(good.ok);
  const auto bad = agree_to(a, b, 4);
  REQUIRE_FALSE(bad.ok);
  CHECK(bad.index == 2);
  CHECK(bad.lhs == 3);
  CHECK(bad.rhs == 9);
  CHECK_THROWS_AS(agree_to(a, b, 5), std::invalid_argument);
}

TEST_CASE("ring mismatch is rejected with both ring names") {
  const Series<ModRing> a(ModRing(7), {1});
  const Series<ModRing> b(ModRing(9), {1});
  CHECK_THROWS_WITH(a + b, Catch::Matchers::ContainsSubstring("IntegersMod(7)") &&
                               Catch::Matchers::ContainsSubstring("IntegersMod(9)"));
}

TEST_CASE("modular ring validates its modulus") {
  CHECK_THROWS_AS(ModRing(1), std::invalid_argument);
  CHECK_THROWS_AS(ModRing(std::uint64_t(1) << 33), std::invalid_argument);
  CHECK(ModRing(2).canon_int(-3) == 1);
  CHECK(ModRing(1u << 31).modulus() == (1u << 31));
}

TEST_CASE("series ring axioms hold on randomized instances") {
  std::mt19937_64 rng(20260818);
  const std::uint64_t moduli[] = {2, 3, 9, 7, 11, 18, 27, 49, 625, 2147483647};
  for (int iter = 0; iter < 200; iter++) {
    const ModRing ring(moduli[iter % 10]);
    std::uniform_int_distribution<std::size_t> len(1, 40);
    const std::size_t n = len(rng);
    const Series<ModRing> a(ring, random_coeffs(rng, n, ring.modulus()));
    const Series<ModRing> b(ring, random_coeffs(rng, n, ring.modulus()));
    const Series<ModRing> c(ring, random_coeffs(rng, n, ring.modulus()));

    // commutativity, associativity, distributivity, identities
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + Series<ModRing>::zero(ring, n) == a);
    CHECK(a * Series<ModRing>::one(ring, n) == a);
    CHECK(a - a == Series<ModRing>::zero(ring, n));
    CHECK(a + (-a) == Series<ModRing>::zero(ring, n));
  }
}

TEST_CASE("inverse contract holds on randomized unit series") {
  std::mt19937_64 rng(977);
  const std::uint64_t moduli[] = {3, 5, 7, 9, 11, 25, 27, 121, 169, 2048};
  int checked = 0;
  while (checked < 200) {
    const ModRing ring(moduli[checked % 10]);
    std::uniform_int_distribution<std::size_t> len(1, 60);
    const std::size_t n = len(rng);
    auto coeffs = random_coeffs(rng, n, ring.modulus());
    if (!ring.is_unit(ring.canon(coeffs[0]))) continue;
    const Series<ModRing> a(ring, std::move(coeffs));
    const auto inv = a.inverse();
    CHECK(a * inv == Series<ModRing>::one(ring, n));
    checked++;
  }
}

TEST_CASE("exact inverse round-trips over the integers") {
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<long> coeff(-20, 20);
  for (int iter = 0; iter < 200; iter++) {
    std::uniform_int_distribution<std::size_t> len(1, 30);
    const std::size_t n = len(rng);
    std::vector<BigInt> v(n);
    v[0] = (iter % 2) ? 1 : -1;
    for (std::size_t i = 1; i < n; i++) v[i] = coeff(rng);
    const Series<IntegerRing> a(IntegerRing{}, std::move(v));
    CHECK(a * a.inverse() == Series<IntegerRing>::one(IntegerRing{}, n));
  }
}

TEST_CASE("dissection completeness: progressions reassemble the series") {
  std::mt19937_64 rng(55);
  for (int iter = 0; iter < 200; iter++) {
    const ModRing ring(2 + iter % 97);
    std::uniform_int_distribution<std::size_t> len(6, 48);
    std::uniform_int_distribution<std::uint64_t> mdist(1, 5);
    const std::size_t n = len(rng);
    const std::uint64_t m = mdist(rng);
    const Series<ModRing> a(ring, random_coeffs(rng, n, ring.modulus()));
    if (n < m) continue;

    // substitute_power(extract(r)) shifted by q^r, summed over r, gives a
    // back; the common window is the shortest spread piece.
    std::size_t window = n;
    for (std::uint64_t r = 0; r < m; r++) {
      const std::size_t spread = m * ((n - r + m - 1) / m);
      window = std::min(window, spread);
    }
    Series<ModRing> sum = Series<ModRing>::zero(ring, window);
    for (std::uint64_t r = 0; r < m; r++) {
      const auto part = a.extract_progression(r, m).substitute_power(m);
      const auto shifted =
          part.truncated(window) * Series<ModRing>::monomial(ring, r, window);
      sum = sum + shifted;
    }
    CHECK(agree_to(sum, a.truncated(window), window).ok);
  }
}

TEST_CASE("homomorphism: reduction commutes with arithmetic") {
  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<long> coeff(-50, 50);
  const std::uint64_t moduli[] = {2, 3, 5, 7, 9, 11, 13, 18, 27, 49};
  for (int iter = 0; iter < 200; iter++) {
    const std::uint64_t m = moduli[iter % 10];
    std::uniform_int_distribution<std::size_t> len(1, 30);
    const std::size_t n = len(rng);
    std::vector<BigInt> av(n), bv(n);
    for (auto& x : av) x = coeff(rng);
    for (auto& x : bv) x = coeff(rng);
    const Series<IntegerRing> a(IntegerRing{}, av);
    const Series<IntegerRing> b(IntegerRing{}, bv);

    CHECK(reduce_mod(a * b, m) == reduce_mod(a, m) * reduce_mod(b, m));
    CHECK(reduce_mod(a + b, m) == reduce_mod(a, m) + reduce_mod(b, m));
    CHECK(reduce_mod(a - b, m) == reduce_mod(a, m) - reduce_mod(b, m));
    CHECK(reduce_mod(a.substitute_negate(), m) == reduce_mod(a, m).substitute_negate());
    CHECK(reduce_mod(a.pow(3), m) == reduce_mod(a, m).pow(3));
  }
}

TEST_CASE("substitution and extraction interact as expected on random data") {
  std::mt19937_64 rng(777);
  for (int iter = 0; iter < 200; iter++) {
    const ModRing ring(3 + iter % 50);
    std::uniform_int_distribution<std::size_t> len(4, 40);
    std::uniform_int_distribution<std::uint64_t> kdist(1, 4);
    const std::size_t n = len(rng);
    const std::uint64_t k = kdist(rng);
    const Series<ModRing> a(ring, random_coeffs(rng, n, ring.modulus()));

    // extract(subst_power(a, k), 0, k) == a
    const auto spread = a.substitute_power(k);
    CHECK(spread.extract_progression(0, k) == a);
    // other residues vanish
    for (std::uint64_t r = 1; r < k; r++)
      CHECK(spread.extract_progression(r, k).is_zero());
  }
}
