#include <random>

#include "doctest.h"
#include "superyangian/pbw.hpp"

using namespace sy;

namespace {

Word w(std::initializer_list<std::array<int, 3>> letters) {
  Word out;
  for (auto [i, j, r] : letters) out.push_back(make_gen(i, j, r));
  return out;
}

std::vector<AlgebraContext> small_contexts(std::uint32_t p) {
  return {make_context(p, 1, 1, "01"), make_context(p, 1, 1, "10"), make_context(p, 2, 1, "010"),
          make_context(p, 1, 2, "101")};
}

}  // namespace

TEST_CASE("generator and canonical text") {
  Yangian Y(make_context(3, 1, 1, "01"));
  CHECK(to_text(Y.generator(1, 2, 1)) == "1*t(1,2,1)");
  CHECK(to_text(Y.generator(1, 1, 0)) == "1");
  CHECK(Y.generator(1, 2, 0).is_zero());
  CHECK(to_text(Y.zero()) == "0");
  CHECK_THROWS_AS(Y.generator(3, 1, 1), ConfigError);
  CHECK_THROWS_AS(Y.generator(1, 1, -1), ConfigError);
}

TEST_CASE("rtt bracket examples") {
  Yangian Y(make_context(5, 1, 1, "01"));
  const auto& F = Y.field();
  Element expect = sub(F, Y.generator(2, 2, 1), Y.generator(1, 1, 1));
  CHECK(Y.rtt_bracket(1, 2, 1, 2, 1, 1) == expect);
  CHECK(Y.rtt_bracket(1, 1, 1, 1, 1, 1).is_zero());
  CHECK(Y.rtt_bracket(1, 1, 1, 2, 2, 1).is_zero());
  CHECK(Y.supercommutator(Y.generator(1, 2, 1), Y.generator(2, 1, 1)) == expect);
}

TEST_CASE("straighten two odd generators") {
  Yangian Y(make_context(3, 1, 1, "01"));
  Element e = Y.straighten(w({{2, 1, 1}, {1, 2, 1}}));
  CHECK(to_text(e) == "1*t(2,2,1) + 2*t(1,2,1)*t(2,1,1) + 2*t(1,1,1)");

  Yangian Y2(make_context(2, 1, 1, "01"));
  CHECK(to_text(Y2.straighten(w({{2, 1, 1}, {1, 2, 1}}))) ==
        "1*t(2,2,1) + 1*t(1,2,1)*t(2,1,1) + 1*t(1,1,1)");

  CHECK(to_text(Y.straighten(w({{1, 1, 1}, {1, 2, 2}}))) == "1*t(1,1,1)*t(1,2,2)");
  CHECK(to_text(Y.straighten(Word{})) == "1");
}

TEST_CASE("mul unit, zero and ordered pairs") {
  Yangian Y(make_context(3, 2, 1, "010"));
  Element x = Y.generator(2, 3, 2);
  CHECK(Y.mul(Y.scalar(1), x) == x);
  CHECK(Y.mul(x, Y.zero()).is_zero());
  Element a = Y.generator(1, 1, 1), b = Y.generator(1, 1, 2);
  CHECK(Y.mul(a, b) == Y.straighten_reference(w({{1, 1, 1}, {1, 1, 2}}), Strategy::leftmost));
  Yangian Z(make_context(3, 1, 1, "01"));
  CHECK_THROWS_AS(Y.mul(x, Z.generator(1, 1, 1)), ConfigError);
}

TEST_CASE("odd squares") {
  // p odd: an odd square rewrites through the bracket
  Yangian Y(make_context(5, 1, 1, "01"));
  Element sq = Y.straighten(w({{1, 2, 1}, {1, 2, 1}}));
  CHECK(sq.is_zero());  // [t12,t12] = 0 at level 1
  Element sq2 = Y.straighten(w({{1, 2, 2}, {1, 2, 2}}));
  for (const auto& [word, c] : sq2.terms) {
    for (std::size_t k = 0; k + 1 < word.size(); ++k) CHECK(word[k] <= word[k + 1]);
  }
  // p = 2: the self-test that rtt_bracket(x,x) vanishes for odd x
  for (auto ctx : small_contexts(2)) {
    Yangian Y2(ctx);
    for (int i = 1; i <= ctx.dim(); ++i)
      for (int j = 1; j <= ctx.dim(); ++j)
        for (int r = 1; r <= 3; ++r)
          if (ctx.parity(i) != ctx.parity(j)) CHECK(Y2.rtt_bracket(i, j, r, i, j, r).is_zero());
  }
}

TEST_CASE("confluence, filtration and termination on random words") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (auto ctx : small_contexts(p)) {
      Yangian Y(ctx);
      std::mt19937 rng(1234 + p);
      const int n = ctx.dim();
      for (int trial = 0; trial < 60; ++trial) {
        Word word;
        const int len = 1 + static_cast<int>(rng() % 4);
        for (int k = 0; k < len; ++k)
          word.push_back(make_gen(1 + rng() % n, 1 + rng() % n, 1 + rng() % 3));
        Element fast = Y.straighten(word);
        Element left = Y.straighten_reference(word, Strategy::leftmost);
        Element right = Y.straighten_reference(word, Strategy::rightmost);
        CHECK(fast == left);
        CHECK(left == right);
        CHECK(loop_degree(fast) <= loop_degree(word));
      }
    }
  }
}

TEST_CASE("associativity and antisymmetry") {
  for (std::uint32_t p : {2u, 3u}) {
    for (auto ctx : small_contexts(p)) {
      Yangian Y(ctx);
      std::mt19937 rng(77);
      const int n = ctx.dim();
      auto rnd = [&] { return Y.generator(1 + rng() % n, 1 + rng() % n, 1 + rng() % 3); };
      for (int trial = 0; trial < 30; ++trial) {
        Element a = rnd(), b = rnd(), c = rnd();
        CHECK(Y.mul(Y.mul(a, b), c) == Y.mul(a, Y.mul(b, c)));
        Element ab = Y.supercommutator(a, b), ba = Y.supercommutator(b, a);
        const auto& F = Y.field();
        Coeff s = F.sign(Y.parity(a) & Y.parity(b));
        Element sum = ab;
        add_scaled(F, sum, ba, s);
        CHECK(sum.is_zero());
      }
    }
  }
}

TEST_CASE("loop degree") {
  CHECK(loop_degree(w({{1, 1, 3}, {1, 2, 1}})) == 2);
  CHECK(loop_degree(Word{}) == 0);
  CHECK(loop_degree(w({{2, 1, 5}})) == 4);
}

TEST_CASE("gr leading symbol and ev") {
  auto ctx = make_context(5, 1, 1, "01");
  Yangian Y(ctx);
  CurrentAlgebra U(ctx);
  CHECK(gr_leading_symbol(Y, U, Y.generator(1, 2, 2), 1) == U.basis(1, 2, 1));
  CHECK(gr_leading_symbol(Y, U, Y.generator(2, 1, 1), 0) == negate(U.field(), U.basis(2, 1, 0)));
  CHECK(gr_leading_symbol(Y, U, Y.scalar(1), 0) == U.scalar(1));
  CHECK_THROWS_AS(gr_leading_symbol(Y, U, Y.generator(1, 1, 3), 1), std::domain_error);
  CHECK(to_text(U.basis(1, 2, 1), "e") == "1*e(1,2,1)");

  CHECK(ev(Y, U, Y.generator(1, 2, 1)) == U.basis(1, 2, 0));
  CHECK(ev(Y, U, Y.generator(2, 1, 1)) == negate(U.field(), U.basis(2, 1, 0)));
  CHECK(ev(Y, U, Y.generator(1, 1, 3)).is_zero());
}

TEST_CASE("gr is a homomorphism on brackets") {
  for (auto ctx : small_contexts(3)) {
    Yangian Y(ctx);
    CurrentAlgebra U(ctx);
    const int n = ctx.dim();
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          for (int l = 1; l <= n; ++l)
            for (int r = 1; r <= 3; ++r)
              for (int s = 1; s <= 3; ++s) {
                Element x = Y.generator(i, j, r), y = Y.generator(k, l, s);
                Element lhs = gr_leading_symbol(Y, U, Y.supercommutator(x, y), r + s - 2);
                Element rhs = U.supercommutator(gr_leading_symbol(Y, U, x, r - 1), gr_leading_symbol(Y, U, y, s - 1));
                CHECK(lhs == rhs);
              }
  }
}

TEST_CASE("ev kills the RTT relation") {
  for (auto ctx : small_contexts(5)) {
    Yangian Y(ctx);
    CurrentAlgebra U(ctx);
    const int n = ctx.dim();
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          for (int l = 1; l <= n; ++l)
            for (int r = 1; r <= 3; ++r)
              for (int s = 1; s <= 3; ++s) {
                Element x = Y.generator(i, j, r), y = Y.generator(k, l, s);
                Element e1 = ev(Y, U, x), e2 = ev(Y, U, y);
                Element lhs = U.supercommutator(e1, e2);
                Element rhs = ev(Y, U, Y.rtt_bracket(i, j, r, k, l, s));
                CHECK(lhs == rhs);
              }
  }
}

TEST_CASE("delta examples and well-definedness") {
  auto ctx = make_context(3, 1, 1, "01");
  Yangian Y(ctx);
  CHECK(to_text(delta(Y, Y.scalar(1))) == "1*(1)@(1)");
  CHECK(to_text(delta(Y, Y.generator(1, 1, 1))) == "1*(t(1,1,1))@(1) + 1*(1)@(t(1,1,1))");
  CHECK(to_text(delta(Y, Y.generator(1, 1, 2))) ==
        "1*(t(1,1,2))@(1) + 1*(t(1,2,1))@(t(2,1,1)) + 1*(t(1,1,1))@(t(1,1,1)) + 1*(1)@(t(1,1,2))");
  for (auto c : small_contexts(3)) {
    Yangian Z(c);
    const int n = c.dim();
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          for (int l = 1; l <= n; ++l)
            for (int r = 1; r <= 2; ++r)
              for (int s = 1; s <= 2; ++s) {
                Element x = Z.generator(i, j, r), y = Z.generator(k, l, s);
                TensorElement dx = delta(Z, x), dy = delta(Z, y);
                TensorElement lhs = tensor_mul(Z, dx, dy);
                TensorElement yx = tensor_mul(Z, dy, dx);
                const auto& F = Z.field();
                Coeff sg = F.neg(F.sign(Z.parity(x) & Z.parity(y)));
                for (const auto& [key, v] : yx.terms) {
                  auto& slot = lhs.terms[key];
                  slot = F.add(slot, F.mul(v, sg));
                  if (!slot) lhs.terms.erase(key);
                }
                TensorElement rhs = delta(Z, Z.rtt_bracket(i, j, r, k, l, s));
                CHECK(lhs == rhs);
              }
  }
}
