#include "doctest.h"
#include "superyangian/context.hpp"

using namespace sy;

TEST_CASE("prime field arithmetic") {
  PrimeField F(5);
  CHECK(F.add(3, 4) == 2);
  CHECK(F.sub(1, 3) == 3);
  CHECK(F.mul(3, 4) == 2);
  CHECK(F.inv(2) == 3);
  CHECK(F.neg(0) == 0);
  CHECK(F.reduce(-7) == 3);
  CHECK_THROWS_AS(F.inv(0), std::domain_error);
  CHECK_THROWS_AS(PrimeField(4), ConfigError);
  CHECK_THROWS_AS(PrimeField(1), ConfigError);
  PrimeField G(2);
  CHECK(G.sign(1) == 1);
  CHECK(G.inv(1) == 1);
  for (Coeff a = 1; a < 97; ++a) CHECK(PrimeField(97).mul(a, PrimeField(97).inv(a)) == 1);
}

TEST_CASE("make_context reads parities") {
  auto c = make_context(2, 1, 1, "01");
  CHECK(c.parity(1) == 0);
  CHECK(c.parity(2) == 1);
  auto d = make_context(3, 2, 1, "010");
  CHECK(d.parity(1) == 0);
  CHECK(d.parity(2) == 1);
  CHECK(d.parity(3) == 0);
  CHECK_THROWS_AS(make_context(4, 1, 1, "01"), ConfigError);
  CHECK_THROWS_AS(make_context(3, 2, 1, "01"), ConfigError);
  CHECK_THROWS_AS(make_context(3, 2, 1, "011"), ConfigError);
  CHECK_THROWS_AS(make_context(3, 1, 1, "0a"), ConfigError);
  CHECK_THROWS_AS(d.check_index(4), ConfigError);
}

TEST_CASE("sequence transforms") {
  CHECK(sequence_transform("0011", SeqTransform::flip) == "1100");
  CHECK(sequence_transform("0011", SeqTransform::reverse) == "1100");
  CHECK(sequence_transform("010", SeqTransform::flip_reverse) == "101");
  CHECK(sequence_transform("001", SeqTransform::flip_reverse) == "011");

  // digit-wise parity identities for every sequence of length <= 5
  for (int len = 1; len <= 5; ++len) {
    for (int bits = 0; bits < (1 << len); ++bits) {
      std::string s;
      for (int k = 0; k < len; ++k) s += ((bits >> k) & 1) ? '1' : '0';
      auto fl = sequence_transform(s, SeqTransform::flip);
      auto rv = sequence_transform(s, SeqTransform::reverse);
      auto fr = sequence_transform(s, SeqTransform::flip_reverse);
      for (int i = 0; i < len; ++i) {
        int si = s[i] - '0';
        CHECK(si == ((fl[i] - '0') + 1) % 2);
        CHECK(si == rv[len - 1 - i] - '0');
        CHECK(si == ((fr[len - 1 - i] - '0') + 1) % 2);
      }
      CHECK(sequence_transform(fr, SeqTransform::flip_reverse) == s);
    }
  }
}

TEST_CASE("restricted parity") {
  Composition mu({1, 2});
  CHECK(restricted_parity(mu, "010", 2, 1) == 1);
  CHECK(restricted_parity(mu, "010", 2, 2) == 0);
  CHECK(restricted_parity(Composition({3}), "001", 1, 3) == 1);
  CHECK_THROWS_AS(restricted_parity(mu, "010", 2, 3), ConfigError);
  CHECK_THROWS_AS(restricted_parity(mu, "010", 3, 1), ConfigError);
  CHECK_THROWS_AS(restricted_parity(mu, "0101", 1, 1), ConfigError);
  // agrees with the global digit everywhere
  Composition nu({2, 1, 2});
  std::string s = "01101";
  for (int a = 1; a <= nu.n(); ++a)
    for (int i = 1; i <= nu.size(a); ++i)
      CHECK(restricted_parity(nu, s, a, i) == unsigned(s[nu.offset(a) + i - 1] - '0'));
}

TEST_CASE("compositions") {
  auto mu = Composition::parse("1,2,1");
  CHECK(mu.n() == 3);
  CHECK(mu.total() == 4);
  CHECK(mu.offset(3) == 3);
  CHECK(mu.reversed().str() == "1,2,1");
  CHECK(Composition::parse("2,1").reversed().str() == "1,2");
  CHECK_THROWS_AS(Composition::parse("1,0"), ConfigError);
  CHECK_THROWS_AS(Composition::parse("1,x"), ConfigError);
  CHECK_THROWS_AS(Composition::parse(""), ConfigError);
  CHECK(all_compositions(3).size() == 4);
  CHECK(all_compositions(4).size() == 8);
}
