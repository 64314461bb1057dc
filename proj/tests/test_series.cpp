#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "vdp/construct.hpp"
#include "vdp/rng.hpp"
#include "vdp/series.hpp"

using vdp::FunctionTable;
using vdp::PadicInt;
using vdp::VdpSeries;

namespace {

FunctionTable identity_table(std::uint32_t p, std::uint32_t K) {
  return FunctionTable::from_function(p, K, [](std::uint64_t x) { return x; });
}

FunctionTable random_table(std::uint32_t p, std::uint32_t K, vdp::SeededRng& rng) {
  std::uint64_t size = 1;
  for (std::uint32_t k = 0; k < K; ++k) size *= p;
  std::vector<std::uint64_t> v(size);
  for (auto& e : v) e = rng.below(size);
  return FunctionTable(p, K, std::move(v));
}

}  // namespace

TEST_CASE("chi matches its ball definition") {
  CHECK(vdp::chi(0, PadicInt::from_integer(0, 2, 3)) == 1);
  // m=3 has two digits, so the ball has radius 1/4; |1-3|_2 = 1/2
  CHECK(vdp::chi(3, PadicInt::from_integer(1, 2, 3)) == 0);
  // m=3 < 5 is a level-1 ball and 28 = 3 mod 5
  CHECK(vdp::chi(3, PadicInt::from_integer(28, 5, 3)) == 1);

  CHECK_THROWS_AS((void)vdp::chi(8, PadicInt::from_integer(1, 2, 3)), vdp::Error);
}

TEST_CASE("chi agrees with the definition oracle everywhere small") {
  for (const auto& [p, K] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 5}, {3, 3}, {5, 2}}) {
    const std::uint64_t size = oracles::pw(p, K);
    for (std::uint64_t m = 0; m < size; ++m) {
      for (std::uint64_t x = 0; x < size; ++x) {
        CHECK(vdp::chi(m, x, p, K) == oracles::chi(m, x, p));
      }
    }
  }
}

TEST_CASE("chi depends only on the digits below its ball level") {
  vdp::SeededRng rng(11);
  const std::uint32_t p = 3, K = 4;
  const std::uint64_t size = oracles::pw(p, K);
  for (int rep = 0; rep < 500; ++rep) {
    const std::uint64_t m = rng.below(size);
    const std::uint64_t x = rng.below(size);
    const std::uint32_t n = vdp::ball_level(m, p);
    if (n >= K) continue;
    // mutate one digit at a position >= n
    const std::uint32_t pos = n + static_cast<std::uint32_t>(rng.below(K - n));
    const std::uint64_t digit = (x / oracles::pw(p, pos)) % p;
    const std::uint64_t new_digit = (digit + 1 + rng.below(p - 1)) % p;
    const std::uint64_t mutated =
        x - digit * oracles::pw(p, pos) + new_digit * oracles::pw(p, pos);
    CHECK(vdp::chi(m, x, p, K) == vdp::chi(m, mutated, p, K));
  }
}

TEST_CASE("coefficient extraction on frozen examples") {
  // identity at (2,3)
  CHECK(vdp::coefficients(identity_table(2, 3)).coeffs() ==
        std::vector<std::uint64_t>{0, 1, 2, 2, 4, 4, 4, 4});
  // constants have a single nonzero coefficient
  const auto constant = FunctionTable::from_function(3, 2, [](std::uint64_t) { return 5; });
  CHECK(vdp::coefficients(constant).coeffs() ==
        std::vector<std::uint64_t>{5, 5, 5, 0, 0, 0, 0, 0, 0});
  // f(x) = 3x+1 mod 9 has period 3, so every higher coefficient vanishes
  const auto f = FunctionTable::from_function(3, 2, [](std::uint64_t x) { return 3 * x + 1; });
  CHECK(vdp::coefficients(f).coeffs() ==
        std::vector<std::uint64_t>{1, 4, 7, 0, 0, 0, 0, 0, 0});
}

TEST_CASE("coefficient extraction equals the definition oracle on random tables") {
  vdp::SeededRng rng(21);
  for (const auto& [p, K] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 6}, {3, 4}, {5, 3}, {7, 2}}) {
    for (int rep = 0; rep < 25; ++rep) {
      const FunctionTable f = random_table(p, K, rng);
      CHECK(vdp::coefficients(f).coeffs() == oracles::coefficients(f.values(), p, K));
    }
  }
}

TEST_CASE("evaluate walks the prefix chain and equals the full sum") {
  const VdpSeries id = vdp::coefficients(identity_table(2, 3));
  // x = 6: contributing prefixes 0, 2, 6 with B = 0, 2, 4
  CHECK(vdp::evaluate(id, 6) == 6);

  std::vector<std::uint64_t> only_b0(8, 0);
  only_b0[0] = 1;
  const VdpSeries s(2, 3, only_b0);
  for (std::uint64_t x = 0; x < 8; ++x) CHECK(vdp::evaluate(s, x) == (x % 2 == 0 ? 1u : 0u));

  vdp::SeededRng rng(5);
  for (const auto& [p, K] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 5}, {3, 3}, {5, 2}}) {
    const std::uint64_t size = oracles::pw(p, K);
    std::vector<std::uint64_t> B(size);
    for (auto& e : B) e = rng.below(size);
    const VdpSeries series(p, K, B);
    for (std::uint64_t x = 0; x < size; ++x) {
      CHECK(vdp::evaluate(series, x) == oracles::eval_sum(B, x, p, K));
    }
  }
}

TEST_CASE("the chi support of x is exactly its prefix chain") {
  for (const auto& [p, K] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 4}, {3, 3}}) {
    const std::uint64_t size = oracles::pw(p, K);
    for (std::uint64_t x = 0; x < size; ++x) {
      std::set<std::uint64_t> support;
      for (std::uint64_t m = 0; m < size; ++m) {
        if (vdp::chi(m, x, p, K)) support.insert(m);
      }
      std::set<std::uint64_t> chain;
      for (std::uint32_t j = 1; j <= K; ++j) chain.insert(x % oracles::pw(p, j));
      CHECK(support == chain);
      CHECK(support.count(0) == (x % p == 0 ? 1 : 0));
    }
  }
}

TEST_CASE("coefficients and evaluate are mutually inverse") {
  // exhaustive at p=2 for K <= 2
  for (std::uint32_t K = 1; K <= 2; ++K) {
    const std::uint64_t size = oracles::pw(2, K);
    std::vector<std::uint64_t> values(size, 0);
    for (std::uint64_t code = 0; code < oracles::pw(size, static_cast<std::uint32_t>(size));
         ++code) {
      std::uint64_t c = code;
      for (auto& v : values) {
        v = c % size;
        c /= size;
      }
      const FunctionTable f(2, K, values);
      CHECK(vdp::to_table(vdp::coefficients(f)) == f);
    }
  }
  // sampled at larger sizes, both directions
  vdp::SeededRng rng(31);
  for (const auto& [p, K] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 3}, {2, 6}, {3, 4}, {5, 3}, {7, 2}}) {
    const std::uint64_t size = oracles::pw(p, K);
    for (int rep = 0; rep < 50; ++rep) {
      const FunctionTable f = random_table(p, K, rng);
      CHECK(vdp::to_table(vdp::coefficients(f)) == f);
      std::vector<std::uint64_t> B(size);
      for (auto& e : B) e = rng.below(size);
      const VdpSeries s(p, K, B);
      CHECK(vdp::coefficients(vdp::to_table(s)) == s);
    }
  }
}

TEST_CASE("normalize divides by the forced p-power or reports the least failure") {
  const auto norm_id = vdp::normalize(vdp::coefficients(identity_table(2, 3)));
  REQUIRE(norm_id.ok());
  CHECK(norm_id.coeffs->b == std::vector<std::uint64_t>{0, 1, 1, 1, 1, 1, 1, 1});
  CHECK(norm_id.coeffs->meaningful_digits(0) == 3);
  CHECK(norm_id.coeffs->meaningful_digits(2) == 2);
  CHECK(norm_id.coeffs->meaningful_digits(7) == 1);

  // an odd coefficient at scale 1
  const VdpSeries bad(2, 2, {0, 1, 1, 2});
  const auto norm_bad = vdp::normalize(bad);
  REQUIRE(!norm_bad.ok());
  CHECK(*norm_bad.witness_m == 2);

  const auto f = FunctionTable::from_function(3, 2, [](std::uint64_t x) { return 3 * x + 1; });
  const auto norm_f = vdp::normalize(vdp::coefficients(f));
  REQUIRE(norm_f.ok());
  CHECK(norm_f.coeffs->b == std::vector<std::uint64_t>{1, 4, 7, 0, 0, 0, 0, 0, 0});
}

TEST_CASE("normalize succeeds exactly on 1-Lipschitz tables") {
  vdp::SeededRng rng(41);
  for (const auto& [p, K] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 6}, {3, 4}, {5, 3}}) {
    for (int rep = 0; rep < 40; ++rep) {
      // mix arbitrary tables (usually not Lipschitz) with built ones (always)
      const FunctionTable f =
          rep % 2 == 0 ? random_table(p, K, rng) : vdp::random_compatible(p, K, rng);
      const bool via_coeffs = vdp::normalize(vdp::coefficients(f)).ok();
      const bool via_pairs = oracles::is_lipschitz(f.values(), p, K);
      CHECK(via_coeffs == via_pairs);
    }
  }
}
