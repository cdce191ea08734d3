#include "doctest.h"
#include "superyangian/faults.hpp"
#include "superyangian/maps.hpp"

using namespace sy;

TEST_CASE("map targets") {
  auto c = make_context(3, 2, 1, "010");
  MapDescriptor z = make_map(MapKind::zeta, c);
  CHECK(z.target.M() == 1);
  CHECK(z.target.N() == 2);
  CHECK(z.target.sigma() == "101");
  MapDescriptor p = make_map(MapKind::psi_shift, c, "10");
  CHECK(p.target.sigma() == "10010");
  CHECK(p.target.M() == 3);
  CHECK(p.shift == 2);
  CHECK(make_map(MapKind::antipode, c).anti);
  CHECK_THROWS_AS(make_map(MapKind::omega, c, "1"), ConfigError);
  CHECK_THROWS_AS(make_map(MapKind::phi_shift, c, "12"), ConfigError);
}

TEST_CASE("generator images by hand") {
  auto c = make_context(5, 1, 1, "01");
  Yangian Y(c);
  const auto& F = Y.field();
  MapDescriptor zd = make_map(MapKind::zeta, c);
  Yangian Z(zd.target);
  MapApplier zeta(zd, Y, Z, 3);
  // t'^(1) = -t^(1)
  CHECK(to_text(zeta.letter_image(make_gen(1, 1, 1))) == "4*t(2,2,1)");
  CHECK(to_text(zeta.letter_image(make_gen(1, 2, 1))) == "4*t(2,1,1)");

  MapApplier om(make_map(MapKind::omega, c), Y, Y, 3);
  CHECK(om.letter_image(make_gen(1, 2, 1)) == Y.generator(1, 2, 1));
  // t'^(2)_{11} = -t11^(2) + t11^(1) t11^(1) + t12^(1) t21^(1), and omega keeps the sign at even level
  Element want = negate(F, Y.generator(1, 1, 2));
  want = add(F, want, Y.mul(Y.generator(1, 1, 1), Y.generator(1, 1, 1)));
  want = add(F, want, Y.mul(Y.generator(1, 2, 1), Y.generator(2, 1, 1)));
  CHECK(om.letter_image(make_gen(1, 1, 2)) == want);
  CHECK_THROWS_AS(om.letter_image(make_gen(1, 1, 4)), ConfigError);

  MapApplier rho(make_map(MapKind::rho, c), Y, Z, 3);
  CHECK(to_text(rho.letter_image(make_gen(1, 2, 3))) == "4*t(2,1,3)");

  auto big = make_context(5, 2, 1, "001");
  Yangian B(make_context(5, 1, 1, "01"));
  Yangian Bg(big);
  MapApplier phi(make_map(MapKind::phi_shift, B.context(), "0"), B, Bg, 3);
  CHECK(to_text(phi.letter_image(make_gen(1, 2, 7))) == "1*t(2,3,7)");
}

TEST_CASE("anti-homomorphisms reverse words with a sign") {
  auto c = make_context(3, 1, 1, "01");
  Yangian Y(c);
  MapApplier s(make_map(MapKind::sigma_anti, c), Y, Y, 3);
  const Gen x = make_gen(1, 2, 1), y = make_gen(2, 1, 1);
  // both odd: sigma(xy) = -sigma(y) sigma(x) = -(-y)(-x)
  Element got = s.apply_word(Word{x, y});
  Element want = negate(Y.field(), Y.mul(Y.generator(2, 1, 1), Y.generator(1, 2, 1)));
  CHECK(got == want);
}

TEST_CASE("map identities on small contexts") {
  for (auto c : {make_context(3, 1, 1, "01"), make_context(2, 2, 1, "010"), make_context(5, 1, 2, "110")}) {
    Yangian Y(c);
    const int R = 3;
    CHECK(involution_check(Y, R).passed());
    CHECK(factorization_check(Y, R).passed());
    CHECK(antipode_antihom_check(Y, R).passed());
    for (MapKind k : {MapKind::rho, MapKind::sigma_anti, MapKind::antipode, MapKind::omega, MapKind::zeta}) {
      MapDescriptor d = make_map(k, c);
      Yangian T(d.target);
      MapApplier m(d, Y, T, R);
      CAPTURE(map_name(k));
      CHECK(well_defined_check(m, R).passed());
      CHECK(parity_preservation_check(m, R).passed());
    }
  }
}

TEST_CASE("psi agrees with the quasideterminant") {
  Yangian small(make_context(3, 1, 1, "01"));
  for (std::string prefix : {"0", "1", "10"}) {
    MapDescriptor d = make_map(MapKind::psi_shift, small.context(), prefix);
    Yangian big(d.target);
    CHECK(psi_dual_path(small, big, 3).passed());
    MapApplier psi(d, small, big, 3);
    CHECK(well_defined_check(psi, 3).passed());
  }
  CHECK_THROWS_AS(psi_dual_path(small, small, 2), ConfigError);
}

TEST_CASE("psi and zeta on parabolic generators") {
  for (auto c : {make_context(3, 1, 1, "01"), make_context(3, 2, 1, "010"), make_context(2, 1, 2, "101")}) {
    Yangian Y(c);
    for (const auto& mu : all_compositions(c.dim())) {
      GaussData g = gauss_decompose(Y, mu, 2);
      CAPTURE(mu.str());
      for (int a = 2; a <= mu.n(); ++a) CHECK(psi_on_parabolic(Y, g, a).passed());
      CHECK(zeta_on_parabolic(Y, g).passed());
    }
  }
}

TEST_CASE("corner commutes with the psi image") {
  Yangian big(make_context(3, 2, 1, "010"));
  CheckOutcome o = corner_commute_check(big, 1, 2);
  CHECK(o.checked > 0);
  CHECK(o.passed());
  CHECK(corner_commute_check(big, 2, 2).passed());
  CHECK(corner_commute_check(big, 3, 2).checked == 0);
}

TEST_CASE("psi sign fault is detected") {
  if (!fault_hooks_enabled()) return;
  FaultHooks h;
  h.psi_sign = true;
  set_faults(h);
  Yangian small(make_context(3, 1, 1, "01"));
  Yangian big(make_context(3, 2, 1, "001"));
  CheckOutcome o = psi_dual_path(small, big, 2);
  set_faults(FaultHooks{});
  CHECK_FALSE(o.passed());
}
