#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "k3cliff/lattice.hpp"
#include "oracles.hpp"

using namespace k3cliff;

TEST_CASE("make_surface builds the stated Gram matrix") {
  const SurfaceModel s = make_surface(5, 3);
  const auto gram = s.gram();
  CHECK(gram[0][0] == 8);
  CHECK(gram[0][1] == 3);
  CHECK(gram[1][0] == 3);
  CHECK(gram[1][1] == 0);

  const SurfaceModel minimal = make_surface(3, 2);
  const auto gm = minimal.gram();
  CHECK(gm[0][0] == 4);
  CHECK(gm[0][1] == 2);
  CHECK(gm[1][1] == 0);
}

TEST_CASE("make_surface rejects out-of-range inputs") {
  CHECK_THROWS_AS(make_surface(2, 2), RangeError);
  CHECK_THROWS_AS(make_surface(3, 1), RangeError);
  CHECK_THROWS_AS(make_surface(-4, 5), RangeError);
}

TEST_CASE("make_surface records the imported assumptions") {
  const SurfaceModel s = make_surface(7, 4);
  REQUIRE(s.assumptions().size() == 3);
  CHECK(s.assumptions()[1].find("nef") != std::string::npos);
}

TEST_CASE("pairing matches the Gram matrix on the worked examples") {
  const SurfaceModel s = make_surface(5, 3);
  const DivisorClass L = DivisorClass::polarization();
  const DivisorClass E = DivisorClass::elliptic();
  CHECK(pairing(s, L, E) == 3);
  CHECK(pairing(s, E, E) == 0);
  // (L - E)^2 = 8 - 6 = 2, cross-checked against the matrix oracle.
  const DivisorClass lme{1, -1};
  CHECK(pairing(s, lme, lme) == test::gram_pairing(5, 3, lme, lme));
  CHECK(pairing(s, lme, lme) == 2);
}

TEST_CASE("self-intersection examples") {
  CHECK(self_intersection(make_surface(7, 4), {1, -1}) == 4);
  CHECK(self_intersection(make_surface(7, 4), DivisorClass::zero()) == 0);
  CHECK(self_intersection(make_surface(6, 3), {1, -2}) == -2);  // a root class
}

TEST_CASE("euler characteristic examples") {
  // chi(L - E) = g + 1 - d
  CHECK(euler_char(make_surface(7, 4), {1, -1}) == 4);
  CHECK(euler_char(make_surface(7, 4), DivisorClass::zero()) == 2);
  // E^2 = 0 forces chi(yE) = 2 for all y
  CHECK(euler_char(make_surface(5, 3), {0, 2}) == 2);
}

TEST_CASE("gram determinant is -d^2") {
  for (const auto& [g, d] : test::property_surfaces()) {
    const SurfaceModel s = make_surface(g, d);
    CHECK(s.gram_determinant() == -Int(d) * d);
    const auto m = s.gram();
    CHECK(m[0][0] * m[1][1] - m[0][1] * m[1][0] == s.gram_determinant());
  }
}

TEST_CASE("arithmetic stays exact at the documented input envelope") {
  // g, d up to 10^6 with coordinates up to 10^6: far beyond 64 bits for the
  // pairing terms, so a wrapping implementation would fail here.
  const SurfaceModel s = make_surface(1000000, 1000000);
  const DivisorClass a{1000000, -1000000};
  const DivisorClass b{-999999, 999998};
  CHECK(pairing(s, a, b) == test::gram_pairing(1000000, 1000000, a, b));
  CHECK(self_intersection(s, a) % 2 == 0);
  CHECK(euler_char(s, a) == self_intersection(s, a) / 2 + 2);
  CHECK(s.gram_determinant() == -Int("1000000000000"));
}

TEST_CASE("pairing properties: symmetry, bilinearity, evenness, chi parity") {
  test::ClassGenerator gen(20240811);
  for (const auto& [g, d] : test::property_surfaces()) {
    const SurfaceModel s = make_surface(g, d);
    for (int i = 0; i < 1000; ++i) {
      const DivisorClass a = gen.next();
      const DivisorClass b = gen.next();
      const DivisorClass c = gen.next();
      REQUIRE(pairing(s, a, b) == pairing(s, b, a));
      REQUIRE(pairing(s, a + b, c) == pairing(s, a, c) + pairing(s, b, c));
      REQUIRE(self_intersection(s, a) % 2 == 0);
      REQUIRE(euler_char(s, a) == euler_char(s, -a));
      REQUIRE(pairing(s, a, b) == test::gram_pairing(g, d, a, b));
    }
  }
}
