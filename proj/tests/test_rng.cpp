#include "doorsim/rng.hpp"

#include <cmath>
#include <vector>

#include <doctest.h>

using doorsim::Rng;

TEST_CASE("identical seed and stream reproduce the same sequence") {
  Rng a = Rng::stream(42, 3);
  Rng b = Rng::stream(42, 3);
  for (int i = 0; i < 1000; ++i) {
    CHECK(a.next_u64() == b.next_u64());
  }
}

TEST_CASE("different stream ids give different sequences") {
  Rng a = Rng::stream(42, 0);
  Rng b = Rng::stream(42, 1);
  int same = 0;
  for (int i = 0; i < 64; ++i) {
    if (a.next_u64() == b.next_u64()) ++same;
  }
  CHECK(same == 0);
}

TEST_CASE("uniform stays inside its interval with the right mean") {
  Rng rng = Rng::stream(1, 0);
  const int n = 100000;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const double u = rng.uniform(-2.0, 5.0);
    CHECK(u >= -2.0);
    CHECK(u < 5.0);
    sum += u;
  }
  // mean 1.5, stderr = 7/sqrt(12 n); allow 5 sigma
  const double stderr_mean = 7.0 / std::sqrt(12.0 * n);
  CHECK(std::abs(sum / n - 1.5) < 5.0 * stderr_mean);
}

TEST_CASE("gaussian has unit variance and zero mean") {
  Rng rng = Rng::stream(2, 0);
  const int n = 200000;
  double sum = 0.0;
  double sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double g = rng.gaussian();
    sum += g;
    sq += g * g;
  }
  const double mean = sum / n;
  const double var = sq / n - mean * mean;
  CHECK(std::abs(mean) < 5.0 / std::sqrt(static_cast<double>(n)));
  CHECK(std::abs(var - 1.0) < 5.0 * std::sqrt(2.0 / n));
}

TEST_CASE("uniform_int covers both inclusive endpoints") {
  Rng rng = Rng::stream(3, 0);
  std::vector<int> counts(6, 0);
  for (int i = 0; i < 60000; ++i) {
    const int k = rng.uniform_int(0, 5);
    REQUIRE(k >= 0);
    REQUIRE(k <= 5);
    ++counts[static_cast<std::size_t>(k)];
  }
  for (int c : counts) {
    // each bucket expects 10000; 5 sigma of a binomial
    CHECK(std::abs(c - 10000) < 5.0 * std::sqrt(60000.0 * (1.0 / 6) * (5.0 / 6)));
  }
}
