#include <sstream>

#include "doctest.h"
#include "superyangian/gauss.hpp"

using namespace sy;

TEST_CASE("single block is T itself") {
  Yangian Y(make_context(3, 2, 1, "010"));
  GaussData g = gauss_decompose(Y, Composition({3}), 2);
  MatrixSeries T = t_matrix(Y, 2);
  CHECK(g.Dblock(1) == T);
  CHECK(g.E.empty());
  CHECK(g.F.empty());
  CHECK(roundtrip_check(Y, g).passed());
}

TEST_CASE("mu = (1,1) block formulas") {
  Yangian Y(make_context(5, 1, 1, "01"));
  const auto& F = Y.field();
  const int R = 3;
  GaussData g = gauss_decompose(Y, Composition({1, 1}), R);
  MatrixSeries T = t_matrix(Y, R);
  Series inv11 = series_invert(Y, T(1, 1));
  CHECK(g.Dblock(1)(1, 1) == T(1, 1));
  CHECK(g.Eblock(1, 2)(1, 1) == series_mul(Y, inv11, T(1, 2)));
  CHECK(g.Fblock(2, 1)(1, 1) == series_mul(Y, T(2, 1), inv11));
  CHECK(g.Dblock(2)(1, 1) == series_sub(F, T(2, 2), series_mul(Y, series_mul(Y, T(2, 1), inv11), T(1, 2))));
  CHECK(to_text(g.ea(1, 1, 1, 1)) == "1*t(1,2,1)");
  CHECK(to_text(g.fa(1, 1, 1, 1)) == "1*t(2,1,1)");
  CHECK_THROWS_AS(g.d(1, 1, 1, R + 1), ConfigError);
  CHECK_THROWS_AS(g.e(1, 3, 1, 1, 1), ConfigError);
}

TEST_CASE("first-level identities for any composition") {
  for (auto ctx : {make_context(3, 2, 1, "010"), make_context(2, 1, 2, "101")}) {
    Yangian Y(ctx);
    for (const auto& mu : all_compositions(3)) {
      GaussData g = gauss_decompose(Y, mu, 2);
      for (int i = 1; i <= mu.size(1); ++i)
        for (int j = 1; j <= mu.size(1); ++j)
          for (int r = 0; r <= 2; ++r) CHECK(g.d(1, i, j, r) == Y.generator(i, j, r));
      for (int b = 2; b <= mu.n(); ++b)
        for (int i = 1; i <= mu.size(b - 1); ++i)
          for (int j = 1; j <= mu.size(b); ++j) {
            CHECK(g.ea(b - 1, i, j, 1) == Y.generator(mu.offset(b - 1) + i, mu.offset(b) + j, 1));
            CHECK(g.fa(b - 1, j, i, 1) == Y.generator(mu.offset(b) + j, mu.offset(b - 1) + i, 1));
          }
    }
  }
}

TEST_CASE("roundtrip, uniqueness, parity, recursion") {
  for (auto ctx : {make_context(3, 2, 1, "010"), make_context(2, 1, 2, "110"), make_context(5, 2, 1, "100")}) {
    Yangian Y(ctx);
    for (const auto& mu : all_compositions(3)) {
      GaussData g = gauss_decompose(Y, mu, 3);
      CHECK(roundtrip_check(Y, g).passed());
      CHECK(uniqueness_check(Y, mu, 3).passed());
      CHECK(parity_check(Y, g).passed());
      if (mu.n() == 3) {
        auto rc = recursion_check_all(Y, g);
        CHECK(rc.passed());
        CHECK(rc.checked > 0);
      }
    }
  }
}

TEST_CASE("recursion preconditions") {
  Yangian Y(make_context(3, 1, 1, "01"));
  GaussData g = gauss_decompose(Y, Composition({1, 1}), 2);
  CHECK_THROWS_AS(recursion_check(Y, g, 1, 2, 1), ConfigError);
  CHECK_THROWS_AS(primed_combinations(Y, g), ConfigError);
  CHECK_THROWS_AS(gauss_decompose(Y, Composition({1, 2}), 2), ConfigError);
}

TEST_CASE("primed combinations") {
  Yangian Y(make_context(3, 2, 1, "010"));
  const auto& F = Y.field();
  GaussData g = gauss_decompose(Y, Composition({1, 1, 1}), 3);
  auto [Ep, Fp] = primed_combinations(Y, g);
  CHECK(Fp(1, 1).coeff(1) == negate(F, g.f(3, 1, 1, 1, 1)));
  CHECK(Ep(1, 1) == g.Etblock(1, 3)(1, 1));
  // F~_{3,1} = F_{3,2} F_{2,1} - F_{3,1}
  CHECK(Fp(1, 1) == g.Ftblock(3, 1)(1, 1));
}

TEST_CASE("dump format and truncation prefix") {
  Yangian Y(make_context(3, 1, 1, "01"));
  GaussData g1 = gauss_decompose(Y, Composition({1, 1}), 1);
  GaussData g2 = gauss_decompose(Y, Composition({1, 1}), 2);
  std::string d1 = gauss_dump(g1), d2 = gauss_dump(g2);
  CHECK(d1.find("E 1 2 | 1 1 1 | 1*t(1,2,1)\n") != std::string::npos);
  CHECK(d1.find("D 1 1 | 1 1 0 | 1\n") != std::string::npos);
  std::istringstream is(d1);
  for (std::string line; std::getline(is, line);) CHECK(d2.find(line + "\n") != std::string::npos);
  GaussData whole = gauss_decompose(Y, Composition({2}), 1);
  std::string dw = gauss_dump(whole);
  CHECK(dw.find("E ") == std::string::npos);
  CHECK(dw.find("D 1 1 | 1 2 1 | 1*t(1,2,1)\n") != std::string::npos);
}

#ifdef SUPERYANGIAN_FAULT_HOOKS
TEST_CASE("gauss fault hooks are detected") {
  FaultHooks h;
  h.gauss_d2 = true;
  set_faults(h);
  Yangian Y(make_context(3, 1, 1, "01"));
  GaussData g = gauss_decompose(Y, Composition({1, 1}), 2);
  CHECK_FALSE(roundtrip_check(Y, g).passed());
  h = FaultHooks{};
  h.recursion_sign = true;
  set_faults(h);
  Yangian Z(make_context(3, 2, 1, "010"));
  GaussData g3 = gauss_decompose(Z, Composition({1, 1, 1}), 2);
  auto rc = recursion_check_all(Z, g3);
  CHECK_FALSE(rc.passed());
  CHECK_FALSE(rc.failures.front().first.empty());
  set_faults(FaultHooks{});
}
#endif
