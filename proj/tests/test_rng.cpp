#include <doctest.h>

#include <cmath>
#include <cstdint>

#include "spincorr/rng.hpp"

using namespace spincorr;

TEST_CASE("philox block known answers") {
  // Frozen outputs of the 4x64-10 bijection, cross-checked against an
  // independent implementation.
  const auto zero = philox::block({0, 0, 0, 0}, 0, 0);
  CHECK(zero[0] == 0x16554d9eca36314cULL);
  CHECK(zero[1] == 0xdb20fe9d672d0fdcULL);
  CHECK(zero[2] == 0xd7e772cee186176bULL);
  CHECK(zero[3] == 0x7e68b68aec7ba23bULL);

  const auto ctr1 = philox::block({1, 0, 0, 0}, 0, 0);
  CHECK(ctr1[0] == 0x02f4ba6408e4d89bULL);
  CHECK(ctr1[1] == 0x3dd62b0b9ca8c5b2ULL);
  CHECK(ctr1[2] == 0x1c8667a55d902e79ULL);
  CHECK(ctr1[3] == 0x907d7a052fd5b4dcULL);

  const auto key1 = philox::block({0, 0, 0, 0}, 1, 0);
  CHECK(key1[0] == 0xcb7ea744cf19bb4cULL);
  CHECK(key1[1] == 0xa34eacbe1377d650ULL);
  CHECK(key1[2] == 0xe8dbce5eb7b8301fULL);
  CHECK(key1[3] == 0x344790248cacfe2fULL);

  const auto stream1 = philox::block({0, 0, 0, 0}, 0, 1);
  CHECK(stream1[0] == 0x9c6b270905f0b111ULL);
  CHECK(stream1[1] == 0xdee74de5c22fba4eULL);
  CHECK(stream1[2] == 0x0fbe587afae091f8ULL);
  CHECK(stream1[3] == 0xd5ad8fe3bd272f76ULL);
}

TEST_CASE("SeededRng walks the counter in block order") {
  SeededRng rng(0, 0);
  CHECK(rng.next_u64() == 0x16554d9eca36314cULL);
  CHECK(rng.next_u64() == 0xdb20fe9d672d0fdcULL);
  CHECK(rng.next_u64() == 0xd7e772cee186176bULL);
  CHECK(rng.next_u64() == 0x7e68b68aec7ba23bULL);
  // Next block, counter = 1.
  CHECK(rng.next_u64() == 0x02f4ba6408e4d89bULL);
}

TEST_CASE("identical (seed, stream) replays identically") {
  SeededRng a(0xDEADBEEFCAFEF00DULL, 17);
  SeededRng b(0xDEADBEEFCAFEF00DULL, 17);
  for (int i = 0; i < 1000; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("distinct streams are distinct and uncorrelated") {
  SeededRng s0(42, 0);
  SeededRng s1(42, 1);

  int agreements = 0;
  const int n = 100000;
  double cross_mean = 0.0;
  for (int i = 0; i < n; ++i) {
    const double u = s0.next_unit_double();
    const double v = s1.next_unit_double();
    agreements += (u == v);
    cross_mean += (u < 0.5 ? -1.0 : 1.0) * (v < 0.5 ? -1.0 : 1.0);
  }
  cross_mean /= n;
  CHECK(agreements == 0);
  CHECK(std::abs(cross_mean) < 4.0 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("next_unit_double lies in [0, 1) with mean 1/2") {
  SeededRng rng(7, 0);
  const int n = 200000;
  double mean = 0.0;
  for (int i = 0; i < n; ++i) {
    const double u = rng.next_unit_double();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    mean += u;
  }
  mean /= n;
  // sigma = 1/sqrt(12 n)
  CHECK(std::abs(mean - 0.5) < 4.0 / std::sqrt(12.0 * n));
}
