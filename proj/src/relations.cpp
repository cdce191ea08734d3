#include "superyangian/relations.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <thread>

#include "superyangian/maps.hpp"

namespace sy {

namespace {

constexpr std::size_t kMaxWitnesses = 20;

struct Ix {
  std::string s;
  Ix& operator()(const char* name, int v) {
    if (!s.empty()) s += ',';
    s += name;
    s += '=';
    s += std::to_string(v);
    return *this;
  }
};

class Env {
 public:
  Env(Yangian& Y, CurrentAlgebra& U, const GaussData& g, const Levels& lv, const Readings& rd, FamilyResult& res)
      : Y(Y), U(U), g(g), lv(lv), rd(rd), F(Y.field()), res_(res) {}

  Yangian& Y;
  CurrentAlgebra& U;
  const GaussData& g;
  const Levels& lv;
  const Readings& rd;
  const PrimeField& F;
  int w = 0;  // block offset for the n=2 / n=3 families

  int n() const { return g.n(); }
  int m(int a) const { return g.mu.size(a + w); }
  unsigned P(int a, int i) const { return restricted_parity(g.mu, Y.context().sigma(), a + w, i); }
  std::string tag(Ix ix) const { return w ? "w=" + std::to_string(w) + "," + ix.s : ix.s; }

  // --- series accessors (truncated to R, renamed into var)
  Series cut(const Series& s, unsigned var) const {
    std::vector<Element> c(static_cast<std::size_t>(lv.R + 1));
    for (int r = 0; r <= lv.R; ++r) c[static_cast<std::size_t>(r)] = s.coeff(r);
    return make_series(var, c);
  }
  Series D(int a, int i, int j, unsigned v) const { return cut(g.Dblock(a + w)(i, j), v); }
  Series Dp(int a, int i, int j, unsigned v) const { return cut(g.Dpblock(a + w)(i, j), v); }
  Series E(int a, int i, int j, unsigned v) const { return cut(g.Eblock(a + w, a + w + 1)(i, j), v); }
  Series Fs(int a, int i, int j, unsigned v) const { return cut(g.Fblock(a + w + 1, a + w)(i, j), v); }
  Series Eab(int a, int b, int i, int j, unsigned v) const { return cut(g.Eblock(a + w, b + w)(i, j), v); }
  Series Fba(int b, int a, int i, int j, unsigned v) const { return cut(g.Fblock(b + w, a + w)(i, j), v); }
  // E'_{a,a+2} = E_a E_{a+1} - E_{a,a+2};  F'_{a+2,a} = F_{a+1} F_a - F_{a+2,a}
  Series Ep(int a, int i, int j, unsigned v) {
    Series s = neg(Eab(a, a + 2, i, j, v));
    for (int q = 1; q <= m(a + 1); ++q) s = add(s, mul(E(a, i, q, v), E(a + 1, q, j, v)));
    return s;
  }
  Series Fp(int a, int i, int j, unsigned v) {
    Series s = neg(Fba(a + 2, a, i, j, v));
    for (int q = 1; q <= m(a + 1); ++q) s = add(s, mul(Fs(a + 1, i, q, v), Fs(a, q, j, v)));
    return s;
  }
  Series cst(const Element& e) const { return constant_series(e, lv.R); }
  Series zero() const { return Series(0, lv.R); }

  Series mul(const Series& a, const Series& b) { return series_mul(Y, a, b); }
  Series br(const Series& a, const Series& b) { return series_bracket(Y, a, b); }
  Series add(const Series& a, const Series& b) const { return series_add(F, a, b); }
  Series sub(const Series& a, const Series& b) const { return series_sub(F, a, b); }
  Series neg(const Series& a) const { return series_scale(F, a, F.neg(1)); }
  Series sg(unsigned bits, const Series& a) const { return (bits & 1U) ? neg(a) : a; }

  // --- element helpers
  Element mulE(const Element& a, const Element& b) { return Y.mul(a, b); }
  Element brE(const Element& a, const Element& b) { return Y.supercommutator(a, b); }
  Element sgE(unsigned bits, const Element& a) const { return (bits & 1U) ? negate(F, a) : a; }

  void cmp(const std::string& where, const Series& lhs, const Series& rhs, Factor f) {
    unsigned vars = lhs.vars() | rhs.vars();
    if (f == Factor::u_minus_v) vars |= kU | kV;
    if (f == Factor::triple) vars |= kU | kV | kW;
    for (const Verdict& v : clear_denominator_compare(Y, lhs, rhs, f)) record(v.equal, where + " @" + exps_text(v.exps, vars), v.delta);
  }
  void cmpE(const std::string& where, const Element& lhs, const Element& rhs) {
    Element d = sub_el(lhs, rhs);
    record(d.is_zero(), where, d);
  }
  void zeroE(const std::string& where, const Element& e) { record(e.is_zero(), where, e); }
  void merge(const CheckOutcome& o) {
    res_.checked += o.checked;
    for (const auto& f : o.failures) fail(f.first, f.second);
  }
  void record(bool ok, const std::string& where, const Element& delta) {
    ++res_.checked;
    if (!ok) fail(where, to_text(delta));
  }

 private:
  Element sub_el(const Element& a, const Element& b) const { return sy::sub(F, a, b); }
  void fail(const std::string& where, const std::string& delta) {
    ++res_.failed;
    if (res_.failures.size() < kMaxWitnesses) res_.failures.emplace_back(where, delta);
  }
  FamilyResult& res_;
};

template <class Fn>
void over(int lo, int hi, Fn fn) {
  for (int x = lo; x <= hi; ++x) fn(x);
}

// ---------------------------------------------------------------- RTT level

void fam_rtt(Env& e) {
  Yangian& Y = e.Y;
  const int n = Y.context().dim();
  const int L = e.lv.gen;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l)
          for (int r = 1; r <= L; ++r)
            for (int s = 1; s <= L; ++s) {
              const Gen x = make_gen(i, j, r), y = make_gen(k, l, s);
              // independent straightener on both orders
              Element lhs = Y.straighten_reference(Word{x, y}, Strategy::leftmost);
              add_scaled(e.F, lhs, Y.straighten_reference(Word{y, x}, Strategy::leftmost),
                         e.F.neg(e.F.sign(Y.letter_parity(x) & Y.letter_parity(y))));
              e.cmpE(Ix{}("i", i)("j", j)("r", r)("k", k)("l", l)("s", s).s, lhs, Y.rtt_bracket(i, j, r, k, l, s));
            }
}

void fam_rtt_series(Env& e) {
  Yangian& Y = e.Y;
  const auto& c = Y.context();
  const int n = c.dim();
  MatrixSeries Tu = t_matrix(Y, e.lv.R);
  auto t = [&](int i, int j, unsigned v) { return v == kU ? Tu(i, j) : rename_variable(Tu(i, j), v); };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          const unsigned s = c.parity(i) * c.parity(j) + c.parity(i) * c.parity(k) + c.parity(j) * c.parity(k);
          Series lhs = e.br(t(i, j, kU), t(k, l, kV));
          Series rhs = e.sg(s, e.sub(e.mul(t(k, j, kU), t(i, l, kV)), e.mul(t(k, j, kV), t(i, l, kU))));
          e.cmp(Ix{}("i", i)("j", j)("k", k)("l", l).s, lhs, rhs, Factor::u_minus_v);
        }
}

void fam_commurelation(Env& e) {
  Yangian& Y = e.Y;
  const auto& c = Y.context();
  const int n = c.dim();
  MatrixSeries Tu = t_matrix(Y, e.lv.R);
  MatrixSeries Tp = mat_inverse(Y, Tu);
  auto t = [&](int i, int j) { return Tu(i, j); };
  auto tp = [&](int i, int j) { return rename_variable(Tp(i, j), kV); };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          const unsigned s = c.parity(i) * c.parity(j) + c.parity(i) * c.parity(k) + c.parity(j) * c.parity(k);
          Series lhs = e.br(t(i, j), tp(k, l));
          Series rhs = e.zero();
          if (k == j)
            for (int q = 1; q <= n; ++q) rhs = e.add(rhs, e.mul(t(i, q), tp(q, l)));
          if (i == l)
            for (int q = 1; q <= n; ++q) rhs = e.sub(rhs, e.mul(tp(k, q), t(q, j)));
          e.cmp(Ix{}("i", i)("j", j)("k", k)("l", l).s, lhs, e.sg(s, rhs), Factor::u_minus_v);
        }
}

// ---------------------------------------------------------------- dd0

void fam_dd0_de(Env& e, bool useF) {
  const int n = e.n();
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n - 1; ++b) {
      if (!(b - a >= 1 || a - b > 1)) continue;
      over(1, e.m(a), [&](int i) {
        over(1, e.m(a), [&](int j) {
          const int rh = useF ? e.m(b + 1) : e.m(b), rk = useF ? e.m(b) : e.m(b + 1);
          over(1, rh, [&](int h) {
            over(1, rk, [&](int k) {
              Series x = useF ? e.Fs(b, h, k, kV) : e.E(b, h, k, kV);
              e.cmp(Ix{}("a", a)("b", b)("i", i)("j", j)("h", h)("k", k).s, e.br(e.D(a, i, j, kU), x), e.zero(),
                    Factor::none);
            });
          });
        });
      });
    }
}

void fam_dd0_ee(Env& e, bool useF) {
  const int n = e.n();
  for (int a = 1; a <= n - 1; ++a)
    for (int b = 1; b <= n - 1; ++b) {
      if (std::abs(a - b) <= 1) continue;
      const int ri = useF ? e.m(a + 1) : e.m(a), rj = useF ? e.m(a) : e.m(a + 1);
      const int rh = useF ? e.m(b + 1) : e.m(b), rk = useF ? e.m(b) : e.m(b + 1);
      over(1, ri, [&](int i) {
        over(1, rj, [&](int j) {
          over(1, rh, [&](int h) {
            over(1, rk, [&](int k) {
              Series x = useF ? e.Fs(a, i, j, kU) : e.E(a, i, j, kU);
              Series y = useF ? e.Fs(b, h, k, kV) : e.E(b, h, k, kV);
              e.cmp(Ix{}("a", a)("b", b)("i", i)("j", j)("h", h)("k", k).s, e.br(x, y), e.zero(), Factor::none);
            });
          });
        });
      });
    }
}

void fam_dd0_ddp(Env& e) {
  const int n = e.n();
  for (int a = 1; a <= n; ++a) {
    // D_a(u) D'_a(u) = I
    for (int i = 1; i <= e.m(a); ++i)
      for (int j = 1; j <= e.m(a); ++j) {
        Series s = e.zero();
        for (int p = 1; p <= e.m(a); ++p) s = e.add(s, e.mul(e.D(a, i, p, kU), e.Dp(a, p, j, kU)));
        e.cmp(Ix{}("a", a)("i", i)("j", j).s + " DD'", s, e.cst(e.Y.scalar(i == j)), Factor::none);
      }
    for (int b = 1; b <= n; ++b)
      for (int i = 1; i <= e.m(a); ++i)
        for (int j = 1; j <= e.m(a); ++j)
          for (int h = 1; h <= e.m(b); ++h)
            for (int k = 1; k <= e.m(b); ++k) {
              Series lhs = e.br(e.D(a, i, j, kU), e.D(b, h, k, kV));
              const std::string where = Ix{}("a", a)("b", b)("i", i)("j", j)("h", h)("k", k).s;
              if (a != b) {
                e.cmp(where, lhs, e.zero(), Factor::none);
                continue;
              }
              const unsigned s = e.P(a, i) * e.P(a, j) + e.P(a, i) * e.P(a, h) + e.P(a, j) * e.P(a, h);
              Series rhs = e.sub(e.mul(e.D(a, h, j, kU), e.D(a, i, k, kV)), e.mul(e.D(a, h, j, kV), e.D(a, i, k, kU)));
              e.cmp(where, lhs, e.sg(s, rhs), Factor::u_minus_v);
            }
  }
}

// ---------------------------------------------------------------- n = 2 (blocks 1,2 of a window)

template <class Fn>
void windows(Env& e, int span, Fn fn) {
  for (e.w = 0; e.w + span <= e.n(); ++e.w) fn();
  e.w = 0;
}

void fam_d1e1(Env& e) {
  windows(e, 2, [&] {
    const int m1 = e.m(1), m2 = e.m(2);
    for (int i = 1; i <= m1; ++i)
      for (int j = 1; j <= m1; ++j)
        for (int h = 1; h <= m1; ++h)
          for (int k = 1; k <= m2; ++k) {
            Series rhs = e.zero();
            if (h == j) {
              for (int p = 1; p <= m1; ++p) rhs = e.add(rhs, e.mul(e.D(1, i, p, kU), e.sub(e.E(1, p, k, kV), e.E(1, p, k, kU))));
              rhs = e.sg(e.P(1, h) * e.P(1, j), rhs);
            }
            e.cmp(e.tag(Ix{}("i", i)("j", j)("h", h)("k", k)), e.br(e.D(1, i, j, kU), e.E(1, h, k, kV)), rhs,
                  Factor::u_minus_v);
          }
  });
}

void fam_e1d2(Env& e) {
  windows(e, 2, [&] {
    const int m1 = e.m(1), m2 = e.m(2);
    for (int i = 1; i <= m1; ++i)
      for (int j = 1; j <= m2; ++j)
        for (int h = 1; h <= m2; ++h)
          for (int k = 1; k <= m2; ++k) {
            Series rhs = e.zero();
            if (h == j) {
              for (int q = 1; q <= m2; ++q)
                rhs = e.add(rhs, e.mul(e.sub(e.E(1, i, q, kU), e.E(1, i, q, kV)), e.Dp(2, q, k, kV)));
              rhs = e.sg(e.P(2, h) * e.P(2, j), rhs);
            }
            e.cmp(e.tag(Ix{}("i", i)("j", j)("h", h)("k", k)), e.br(e.E(1, i, j, kU), e.Dp(2, h, k, kV)), rhs,
                  Factor::u_minus_v);
          }
  });
}

void fam_d2e1(Env& e) {
  windows(e, 2, [&] {
    const int m1 = e.m(1), m2 = e.m(2);
    for (int i = 1; i <= m2; ++i)
      for (int j = 1; j <= m2; ++j)
        for (int h = 1; h <= m1; ++h)
          for (int k = 1; k <= m2; ++k) {
            const unsigned s = e.P(1, h) * e.P(2, k) + e.P(1, h) * e.P(2, j) + e.P(2, j) * e.P(2, k);
            Series rhs = e.sg(s, e.mul(e.D(2, i, k, kU), e.sub(e.E(1, h, j, kU), e.E(1, h, j, kV))));
            e.cmp(e.tag(Ix{}("i", i)("j", j)("h", h)("k", k)), e.br(e.D(2, i, j, kU), e.E(1, h, k, kV)), rhs,
                  Factor::u_minus_v);
          }
  });
}

void fam_d1f1(Env& e) {
  windows(e, 2, [&] {
    const int m1 = e.m(1), m2 = e.m(2);
    for (int i = 1; i <= m1; ++i)
      for (int j = 1; j <= m1; ++j)
        for (int h = 1; h <= m2; ++h)
          for (int k = 1; k <= m1; ++k) {
            Series rhs = e.zero();
            if (i == k) {
              for (int p = 1; p <= m1; ++p)
                rhs = e.add(rhs, e.mul(e.sub(e.Fs(1, h, p, kU), e.Fs(1, h, p, kV)), e.D(1, p, j, kU)));
              rhs = e.sg(e.P(1, i) * e.P(1, j) + e.P(2, h) * e.P(1, i) + e.P(2, h) * e.P(1, j), rhs);
            }
            e.cmp(e.tag(Ix{}("i", i)("j", j)("h", h)("k", k)), e.br(e.D(1, i, j, kU), e.Fs(1, h, k, kV)), rhs,
                  Factor::u_minus_v);
          }
  });
}

void fam_f1d2(Env& e) {
  windows(e, 2, [&] {
    const int m1 = e.m(1), m2 = e.m(2);
    for (int i = 1; i <= m2; ++i)
      for (int j = 1; j <= m1; ++j)
        for (int h = 1; h <= m2; ++h)
          for (int k = 1; k <= m2; ++k) {
            Series rhs = e.zero();
            if (i == k) {
              for (int q = 1; q <= m2; ++q)
                rhs = e.add(rhs, e.mul(e.Dp(2, h, q, kV), e.sub(e.Fs(1, q, j, kV), e.Fs(1, q, j, kU))));
              rhs = e.sg(e.P(2, h) * e.P(2, i) + e.P(2, h) * e.P(1, j) + e.P(1, j) * e.P(2, k), rhs);
            }
            e.cmp(e.tag(Ix{}("i", i)("j", j)("h", h)("k", k)), e.br(e.Fs(1, i, j, kU), e.Dp(2, h, k, kV)), rhs,
                  Factor::u_minus_v);
          }
  });
}

void fam_d2f1(Env& e) {
  windows(e, 2, [&] {
    const int m1 = e.m(1), m2 = e.m(2);
    for (int i = 1; i <= m2; ++i)
      for (int j = 1; j <= m2; ++j)
        for (int h = 1; h <= m2; ++h)
          for (int k = 1; k <= m1; ++k) {
            const unsigned s = e.P(2, h) * e.P(1, k) + e.P(2, h) * e.P(2, j) + e.P(2, j) * e.P(1, k);
            Series rhs = e.sg(s, e.mul(e.sub(e.Fs(1, i, k, kV), e.Fs(1, i, k, kU)), e.D(2, h, j, kU)));
            e.cmp(e.tag(Ix{}("i", i)("j", j)("h", h)("k", k)), e.br(e.D(2, i, j, kU), e.Fs(1, h, k, kV)), rhs,
                  Factor::u_minus_v);
          }
  });
}

// [E_a(u), F_a(v)] in the window starting at block a (a = 1 locally)
Series ef_rhs(Env& e, int a, int i, int j, int h, int k) {
  const unsigned s1 = e.P(a + 1, h) * e.P(a, i) + e.P(a, i) * e.P(a + 1, j) +
                      e.P(a + 1, h) * (e.rd.gef_j_next ? e.P(a + 1, j) : e.P(a, j));
  const unsigned s2 = e.P(a + 1, h) * e.P(a, k) + e.P(a + 1, j) * e.P(a, k) + e.P(a + 1, h) * e.P(a + 1, j);
  return e.sub(e.sg(s1, e.mul(e.D(a + 1, h, j, kU), e.Dp(a, i, k, kU))),
               e.sg(s2, e.mul(e.Dp(a, i, k, kV), e.D(a + 1, h, j, kV))));
}

void fam_e1f1(Env& e) {
  windows(e, 2, [&] {
    const int m1 = e.m(1), m2 = e.m(2);
    for (int i = 1; i <= m1; ++i)
      for (int j = 1; j <= m2; ++j)
        for (int h = 1; h <= m2; ++h)
          for (int k = 1; k <= m1; ++k) {
            const unsigned s1 = e.P(2, h) * e.P(1, i) + e.P(1, i) * e.P(2, j) + e.P(2, h) * e.P(2, j);
            const unsigned s2 = e.P(2, h) * e.P(1, k) + e.P(2, j) * e.P(1, k) + e.P(2, h) * e.P(2, j);
            Series rhs = e.sub(e.sg(s1, e.mul(e.D(2, h, j, kU), e.Dp(1, i, k, kU))),
                               e.sg(s2, e.mul(e.Dp(1, i, k, kV), e.D(2, h, j, kV))));
            e.cmp(e.tag(Ix{}("i", i)("j", j)("h", h)("k", k)), e.br(e.E(1, i, j, kU), e.Fs(1, h, k, kV)), rhs,
                  Factor::u_minus_v);
          }
  });
}

void ee_same(Env& e, int a) {
  const int ma = e.m(a), mb = e.m(a + 1);
  for (int i = 1; i <= ma; ++i)
    for (int j = 1; j <= mb; ++j)
      for (int h = 1; h <= ma; ++h)
        for (int k = 1; k <= mb; ++k) {
          const unsigned s = e.P(a, h) * e.P(a + 1, j) + e.P(a + 1, j) * e.P(a + 1, k) + e.P(a, h) * e.P(a + 1, k);
          Series rhs = e.sg(s, e.mul(e.sub(e.E(a, i, k, kU), e.E(a, i, k, kV)), e.sub(e.E(a, h, j, kU), e.E(a, h, j, kV))));
          e.cmp(e.tag(Ix{}("a", a)("i", i)("j", j)("h", h)("k", k)), e.br(e.E(a, i, j, kU), e.E(a, h, k, kV)), rhs,
                Factor::u_minus_v);
        }
}

void ff_same(Env& e, int a) {
  const int ma = e.m(a), mb = e.m(a + 1);
  for (int i = 1; i <= mb; ++i)
    for (int j = 1; j <= ma; ++j)
      for (int h = 1; h <= mb; ++h)
        for (int k = 1; k <= ma; ++k) {
          const unsigned s = e.P(a + 1, i) * e.P(a, j) + e.P(a + 1, h) * e.P(a + 1, i) + e.P(a + 1, h) * e.P(a, j);
          Series rhs = e.neg(e.sg(s, e.mul(e.sub(e.Fs(a, h, j, kU), e.Fs(a, h, j, kV)), e.sub(e.Fs(a, i, k, kU), e.Fs(a, i, k, kV)))));
          e.cmp(e.tag(Ix{}("a", a)("i", i)("j", j)("h", h)("k", k)), e.br(e.Fs(a, i, j, kU), e.Fs(a, h, k, kV)), rhs,
                Factor::u_minus_v);
        }
}

void fam_e1e1(Env& e) { windows(e, 2, [&] { ee_same(e, 1); }); }
void fam_f1f1(Env& e) { windows(e, 2, [&] { ff_same(e, 1); }); }

void same_var_commute(Env& e, int a) {
  const int ma = e.m(a), mb = e.m(a + 1);
  for (int i = 1; i <= ma; ++i)
    for (int j = 1; j <= mb; ++j)
      for (int h = 1; h <= ma; ++h)
        for (int k = 1; k <= mb; ++k)
          e.cmp(e.tag(Ix{}("a", a)("E", 1)("i", i)("j", j)("h", h)("k", k)), e.br(e.E(a, i, j, kV), e.E(a, h, k, kV)),
                e.zero(), Factor::none);
  for (int i = 1; i <= mb; ++i)
    for (int j = 1; j <= ma; ++j)
      for (int h = 1; h <= mb; ++h)
        for (int k = 1; k <= ma; ++k)
          e.cmp(e.tag(Ix{}("a", a)("F", 1)("i", i)("j", j)("h", h)("k", k)), e.br(e.Fs(a, i, j, kV), e.Fs(a, h, k, kV)),
                e.zero(), Factor::none);
}

void fam_FF(Env& e) { windows(e, 2, [&] { same_var_commute(e, 1); }); }

// ---------------------------------------------------------------- n = 3 (blocks 1,2,3 of a window)

Series F31(Env& e, int i, int j, unsigned v) { return e.Fba(3, 1, i, j, v); }
Series E13(Env& e, int i, int j, unsigned v) { return e.Eab(1, 3, i, j, v); }

void fam_zero_pairs(Env& e, const char* which) {
  windows(e, 3, [&] {
    const int m1 = e.m(1), m2 = e.m(2), m3 = e.m(3);
    const std::string w = which;
    if (w == "D1F2") {
      for (int i = 1; i <= m1; ++i) for (int j = 1; j <= m1; ++j) for (int h = 1; h <= m3; ++h) for (int k = 1; k <= m2; ++k)
        e.cmp(e.tag(Ix{}("i", i)("j", j)("h", h)("k", k)), e.br(e.D(1, i, j, kU), e.Fs(2, h, k, kV)), e.zero(), Factor::none);
    } else if (w == "F1D3") {
      for (int i = 1; i <= m2; ++i) for (int j = 1; j <= m1; ++j) for (int h = 1; h <= m3; ++h) for (int k = 1; k <= m3; ++k)
        e.cmp(e.tag(Ix{}("i", i)("j", j)("h", h)("k", k)), e.br(e.Fs(1, i, j, kU), e.Dp(3, h, k, kV)), e.zero(), Factor::none);
    } else if (w == "F1E2") {
      for (int i = 1; i <= m2; ++i) for (int j = 1; j <= m1; ++j) for (int h = 1; h <= m2; ++h) for (int k = 1; k <= m3; ++k)
        e.cmp(e.tag(Ix{}("i", i)("j", j)("h", h)("k", k)), e.br(e.Fs(1, i, j, kU), e.E(2, h, k, kV)), e.zero(), Factor::none);
    } else if (w == "D1E2") {
      for (int i = 1; i <= m1; ++i) for (int j = 1; j <= m1; ++j) for (int h = 1; h <= m2; ++h) for (int k = 1; k <= m3; ++k)
        e.cmp(e.tag(Ix{}("i", i)("j", j)("h", h)("k", k)), e.br(e.D(1, i, j, kU), e.E(2, h, k, kV)), e.zero(), Factor::none);
    } else if (w == "D3E1") {
      for (int i = 1; i <= m1; ++i) for (int j = 1; j <= m2; ++j) for (int h = 1; h <= m3; ++h) for (int k = 1; k <= m3; ++k)
        e.cmp(e.tag(Ix{}("i", i)("j", j)("h", h)("k", k)), e.br(e.E(1, i, j, kU), e.Dp(3, h, k, kV)), e.zero(), Factor::none);
    } else if (w == "E1F2") {
      for (int i = 1; i <= m1; ++i) for (int j = 1; j <= m2; ++j) for (int h = 1; h <= m3; ++h) for (int k = 1; k <= m2; ++k)
        e.cmp(e.tag(Ix{}("i", i)("j", j)("h", h)("k", k)), e.br(e.E(1, i, j, kU), e.Fs(2, h, k, kV)), e.zero(), Factor::none);
    }
  });
}

void fam_D3F2(Env& e) {
  windows(e, 3, [&] {
    const int m2 = e.m(2), m3 = e.m(3);
    for (int i = 1; i <= m3; ++i)
      for (int j = 1; j <= m2; ++j)
        for (int h = 1; h <= m3; ++h)
          for (int k = 1; k <= m3; ++k) {
            Series rhs = e.zero();
            if (i == k) {
              for (int p = 1; p <= m3; ++p)
                rhs = e.add(rhs, e.mul(e.Dp(3, h, p, kV), e.sub(e.Fs(2, p, j, kV), e.Fs(2, p, j, kU))));
              rhs = e.sg(e.P(3, h) * e.P(3, i) + e.P(3, h) * e.P(2, j) + e.P(2, j) * e.P(3, k), rhs);
            }
            e.cmp(e.tag(Ix{}("i", i)("j", j)("h", h)("k", k)), e.br(e.Fs(2, i, j, kU), e.Dp(3, h, k, kV)), rhs,
                  Factor::u_minus_v);
          }
  });
}

void fam_D3F31(Env& e) {
  windows(e, 3, [&] {
    const int m1 = e.m(1), m2 = e.m(2), m3 = e.m(3);
    const int rmax = e.rd.d3f31_sum_r ? 1 : m2;
    for (int i = 1; i <= m3; ++i)
      for (int j = 1; j <= m1; ++j)
        for (int h = 1; h <= m3; ++h)
          for (int k = 1; k <= m3; ++k)
            for (int rr = 1; rr <= rmax; ++rr) {
              Series rhs = e.zero();
              if (i == k) {
                const int r0 = e.rd.d3f31_sum_r ? 1 : rr, r1 = e.rd.d3f31_sum_r ? m2 : rr;
                for (int r = r0; r <= r1; ++r)
                  for (int mm = 1; mm <= m3; ++mm) {
                    const unsigned s = 1 + e.P(1, j) * e.P(3, i) + e.P(1, j) * e.P(2, r) + e.P(3, h) * e.P(3, i) +
                                       e.P(3, mm) * e.P(2, r) + e.P(3, h) * e.P(1, j) + e.P(3, mm) * e.P(1, j);
                    rhs = e.add(rhs, e.sg(s, e.mul(e.Dp(3, h, mm, kV), e.br(e.Fs(1, r, j, kU), e.Fs(2, mm, r, kV)))));
                  }
              }
              Ix ix;
              ix("i", i)("j", j)("h", h)("k", k);
              if (!e.rd.d3f31_sum_r) ix("r", rr);
              e.cmp(e.tag(ix), e.br(F31(e, i, j, kU), e.Dp(3, h, k, kV)), rhs, Factor::none);
            }
  });
}

// (u-v)[F_a(u), F_{a+1}(v)] with F_{a+2,a}; shared by F1F2 (window) and gff-1 (global)
void ff_next(Env& e, int a) {
  const int ma = e.m(a), mb = e.m(a + 1), mc = e.m(a + 2);
  for (int i = 1; i <= mb; ++i)
    for (int j = 1; j <= ma; ++j)
      for (int h = 1; h <= mc; ++h)
        for (int k = 1; k <= mb; ++k) {
          Series rhs = e.zero();
          if (i == k) {
            for (int q = 1; q <= mb; ++q)
              rhs = e.add(rhs, e.mul(e.Fs(a + 1, h, q, kV), e.sub(e.Fs(a, q, j, kV), e.Fs(a, q, j, kU))));
            rhs = e.add(e.sub(rhs, e.Fba(a + 2, a, h, j, kV)), e.Fba(a + 2, a, h, j, kU));
            rhs = e.sg(e.P(a + 1, i) * e.P(a, j) + e.P(a + 1, i) * e.P(a + 2, h) + e.P(a, j) * e.P(a + 2, h), rhs);
          }
          e.cmp(e.tag(Ix{}("a", a)("i", i)("j", j)("h", h)("k", k)), e.br(e.Fs(a, i, j, kU), e.Fs(a + 1, h, k, kV)), rhs,
                Factor::u_minus_v);
        }
}

void ee_next(Env& e, int a) {
  const int ma = e.m(a), mb = e.m(a + 1), mc = e.m(a + 2);
  for (int i = 1; i <= ma; ++i)
    for (int j = 1; j <= mb; ++j)
      for (int h = 1; h <= mb; ++h)
        for (int k = 1; k <= mc; ++k) {
          Series rhs = e.zero();
          if (h == j) {
            for (int q = 1; q <= mb; ++q)
              rhs = e.add(rhs, e.mul(e.sub(e.E(a, i, q, kU), e.E(a, i, q, kV)), e.E(a + 1, q, k, kV)));
            rhs = e.sub(e.add(rhs, e.Eab(a, a + 2, i, k, kV)), e.Eab(a, a + 2, i, k, kU));
            rhs = e.sg(e.P(a + 1, j) * e.P(a + 1, h), rhs);
          }
          e.cmp(e.tag(Ix{}("a", a)("i", i)("j", j)("h", h)("k", k)), e.br(e.E(a, i, j, kU), e.E(a + 1, h, k, kV)), rhs,
                Factor::u_minus_v);
        }
}

void fam_F1F2(Env& e) { windows(e, 3, [&] { ff_next(e, 1); }); }
void fam_E1E2(Env& e) { windows(e, 3, [&] { ee_next(e, 1); }); }

void fam_F2F3(Env& e) {
  windows(e, 3, [&] {
    const int m1 = e.m(1), m2 = e.m(2), m3 = e.m(3);
    const int gmax = e.rd.f2f3_sum_g ? 1 : m2;
    for (int i = 1; i <= m3; ++i)
      for (int j = 1; j <= m1; ++j)
        for (int h = 1; h <= m3; ++h)
          for (int k = 1; k <= m2; ++k)
            for (int gg = 1; gg <= gmax; ++gg) {
              Series rhs = e.zero();
              const int g0 = e.rd.f2f3_sum_g ? 1 : gg, g1 = e.rd.f2f3_sum_g ? m2 : gg;
              for (int g = g0; g <= g1; ++g) {
                const unsigned s = 1 + e.P(3, i) * e.P(1, j) + e.P(3, i) * e.P(3, h) + e.P(1, j) * e.P(3, h) + e.P(2, g);
                rhs = e.add(rhs, e.sg(s, e.mul(e.br(e.Fs(2, h, g, kV), e.Fs(1, g, j, kU)), e.Fs(2, i, k, kV))));
              }
              Ix ix;
              ix("i", i)("j", j)("h", h)("k", k);
              if (!e.rd.f2f3_sum_g) ix("g", gg);
              e.cmp(e.tag(ix), e.br(F31(e, i, j, kU), e.Fs(2, h, k, kV)), rhs, Factor::none);
            }
  });
}

void fam_F1F31(Env& e) {
  windows(e, 3, [&] {
    const int m1 = e.m(1), m2 = e.m(2), m3 = e.m(3);
    const int gmax = e.rd.f1f31_sum_g ? 1 : m2;
    for (int i = 1; i <= m2; ++i)
      for (int j = 1; j <= m1; ++j)
        for (int h = 1; h <= m3; ++h)
          for (int k = 1; k <= m1; ++k) {
            Series lhs = e.br(e.Fs(1, i, j, kU), e.Fp(1, h, k, kV));
            for (int gg = 1; gg <= gmax; ++gg) {
              Series rhs = e.zero();
              const int g0 = e.rd.f1f31_sum_g ? 1 : gg, g1 = e.rd.f1f31_sum_g ? m2 : gg;
              for (int g = g0; g <= g1; ++g) {
                const unsigned s = (e.P(3, h) + e.P(1, j)) * (e.P(1, k) + e.P(2, g));
                rhs = e.add(rhs, e.sg(s, e.mul(e.Fs(1, i, k, kU), e.br(e.Fs(1, g, j, kU), e.Fs(2, h, g, kV)))));
              }
              Ix ix;
              ix("i", i)("j", j)("h", h)("k", k);
              if (!e.rd.f1f31_sum_g) ix("g", gg);
              e.cmp(e.tag(ix), lhs, rhs, Factor::none);
            }
          }
  });
}

void fam_u0(Env& e) {
  windows(e, 3, [&] {
    const int m2 = e.m(2), m3 = e.m(3);
    for (int i = 1; i <= m3; ++i)
      for (int j = 1; j <= m2; ++j)
        for (int h = 1; h <= m3; ++h)
          for (int k = 1; k <= m3; ++k) {
            Series rhs = e.zero();
            if (i == k) {
              for (int mm = 1; mm <= m3; ++mm) rhs = e.add(rhs, e.mul(e.Dp(3, h, mm, kV), e.Fs(2, mm, j, kV)));
              rhs = e.sg(e.P(3, h) * e.P(3, i) + e.P(3, h) * e.P(2, j) + e.P(2, j) * e.P(3, k), rhs);
            }
            Series f = e.cst(e.g.fa(2 + e.w, i, j, 1));
            e.cmp(e.tag(Ix{}("i", i)("j", j)("h", h)("k", k)), e.br(f, e.Dp(3, h, k, kV)), rhs, Factor::none);
          }
  });
}

void fam_F1F31_1(Env& e) {
  windows(e, 3, [&] {
    const int m1 = e.m(1), m2 = e.m(2), m3 = e.m(3);
    for (int i = 1; i <= m2; ++i)
      for (int k = 1; k <= m1; ++k)
        for (int h = 1; h <= m3; ++h)
          for (int j = 1; j <= m2; ++j) {
            Series rhs = e.zero();
            if (i == j) rhs = e.sg(e.P(2, i) * e.P(1, k) + e.P(2, i) * e.P(3, h) + e.P(1, k) * e.P(3, h), e.Fp(1, h, k, kV));
            Series f = e.cst(e.g.fa(1 + e.w, i, k, 1));
            e.cmp(e.tag(Ix{}("i", i)("k", k)("h", h)("j", j)), e.br(f, e.Fs(2, h, j, kV)), rhs, Factor::none);
          }
  });
}

void fam_F1F31_2(Env& e) {
  windows(e, 3, [&] {
    const int m1 = e.m(1), m2 = e.m(2);
    for (int i = 1; i <= m1; ++i)
      for (int j = 1; j <= m1; ++j)
        for (int a = 1; a <= m2; ++a)
          for (int k = 1; k <= m1; ++k) {
            Series rhs = e.zero();
            if (i == k) {
              for (int p = 1; p <= m1; ++p) rhs = e.add(rhs, e.mul(e.Fs(1, a, p, kU), e.D(1, p, j, kU)));
              rhs = e.neg(e.sg(e.P(1, i) * e.P(1, j) + e.P(2, a) * e.P(1, i) + e.P(2, a) * e.P(1, j), rhs));
            }
            Series f = e.cst(e.g.fa(1 + e.w, a, k, 1));
            e.cmp(e.tag(Ix{}("i", i)("j", j)("a", a)("k", k)), e.br(e.D(1, i, j, kU), f), rhs, Factor::none);
          }
  });
}

void fam_D3E2(Env& e) {
  windows(e, 3, [&] {
    const int m2 = e.m(2), m3 = e.m(3);
    for (int i = 1; i <= m2; ++i)
      for (int j = 1; j <= m3; ++j)
        for (int h = 1; h <= m3; ++h)
          for (int k = 1; k <= m3; ++k) {
            Series rhs = e.zero();
            if (j == h) {
              for (int g = 1; g <= m3; ++g)
                rhs = e.add(rhs, e.mul(e.sub(e.E(2, i, g, kU), e.E(2, i, g, kV)), e.Dp(3, g, k, kV)));
              rhs = e.sg(e.P(3, j) * e.P(3, h), rhs);
            }
            e.cmp(e.tag(Ix{}("i", i)("j", j)("h", h)("k", k)), e.br(e.E(2, i, j, kU), e.Dp(3, h, k, kV)), rhs,
                  Factor::u_minus_v);
          }
  });
}

void fam_D3E13(Env& e) {
  windows(e, 3, [&] {
    const int m1 = e.m(1), m2 = e.m(2), m3 = e.m(3);
    const int qmax = e.rd.d3e13_sum_q ? 1 : m2;
    for (int i = 1; i <= m1; ++i)
      for (int j = 1; j <= m3; ++j)
        for (int h = 1; h <= m3; ++h)
          for (int k = 1; k <= m3; ++k) {
            Series lhs = e.br(E13(e, i, j, kU), e.Dp(3, h, k, kV));
            for (int qq = 1; qq <= qmax; ++qq) {
              Series rhs = e.zero();
              if (h == j) {
                const int q0 = e.rd.d3e13_sum_q ? 1 : qq, q1 = e.rd.d3e13_sum_q ? m2 : qq;
                for (int q = q0; q <= q1; ++q)
                  for (int g = 1; g <= m3; ++g) {
                    const unsigned s = 1 + e.P(2, q) + e.P(3, j) * e.P(3, h);
                    rhs = e.add(rhs, e.sg(s, e.mul(e.br(e.E(1, i, q, kU), e.E(2, q, g, kV)), e.Dp(3, g, k, kV))));
                  }
              }
              Ix ix;
              ix("i", i)("j", j)("h", h)("k", k);
              if (!e.rd.d3e13_sum_q) ix("q", qq);
              e.cmp(e.tag(ix), lhs, rhs, Factor::none);
            }
          }
  });
}

void fam_D1E13(Env& e) {
  windows(e, 3, [&] {
    const int m1 = e.m(1), m2 = e.m(2), m3 = e.m(3);
    const int qmax = e.rd.d1e13_sum_q ? 1 : m2;
    for (int i = 1; i <= m1; ++i)
      for (int j = 1; j <= m1; ++j)
        for (int h = 1; h <= m1; ++h)
          for (int k = 1; k <= m3; ++k) {
            Series lhs = e.br(e.D(1, i, j, kU), e.Ep(1, h, k, kV));
            for (int qq = 1; qq <= qmax; ++qq) {
              Series rhs = e.zero();
              if (h == j) {
                const int q0 = e.rd.d1e13_sum_q ? 1 : qq, q1 = e.rd.d1e13_sum_q ? m2 : qq;
                for (int q = q0; q <= q1; ++q)
                  for (int p = 1; p <= m1; ++p) {
                    const unsigned s = 1 + e.P(2, q) + e.P(1, j) * e.P(1, h);
                    rhs = e.add(rhs, e.sg(s, e.mul(e.D(1, i, p, kU), e.br(e.E(1, p, q, e.rd.d1e13_e1_at_u ? kU : kV), e.E(2, q, k, kV)))));
                  }
              }
              Ix ix;
              ix("i", i)("j", j)("h", h)("k", k);
              if (!e.rd.d1e13_sum_q) ix("q", qq);
              e.cmp(e.tag(ix), lhs, rhs, Factor::none);
            }
          }
  });
}

void fam_61c(Env& e) {
  windows(e, 3, [&] {
    const int m1 = e.m(1), m2 = e.m(2), m3 = e.m(3);
    const int gmax = e.rd.c61_sum_g ? 1 : m2;
    for (int i = 1; i <= m1; ++i)
      for (int j = 1; j <= m3; ++j)
        for (int h = 1; h <= m2; ++h)
          for (int k = 1; k <= m3; ++k) {
            Series lhs = e.br(E13(e, i, j, kU), e.E(2, h, k, kV));
            for (int gg = 1; gg <= gmax; ++gg) {
              Series rhs = e.zero();
              const int g0 = e.rd.c61_sum_g ? 1 : gg, g1 = e.rd.c61_sum_g ? m2 : gg;
              for (int g = g0; g <= g1; ++g) {
                const unsigned s = e.P(1, i) * e.P(3, j) + e.P(1, i) * e.P(2, h) + e.P(2, h) * e.P(3, j) + e.P(2, g);
                rhs = e.add(rhs, e.sg(s, e.mul(e.E(2, h, j, kV), e.br(e.E(1, i, g, kU), e.E(2, g, k, kV)))));
              }
              Ix ix;
              ix("i", i)("j", j)("h", h)("k", k);
              if (!e.rd.c61_sum_g) ix("g", gg);
              e.cmp(e.tag(ix), lhs, rhs, Factor::none);
            }
          }
  });
}

void fam_61d(Env& e) {
  windows(e, 3, [&] {
    const int m1 = e.m(1), m2 = e.m(2), m3 = e.m(3);
    const int gmax = e.rd.d61_sum_g ? 1 : m2;
    for (int i = 1; i <= m1; ++i)
      for (int j = 1; j <= m2; ++j)
        for (int h = 1; h <= m1; ++h)
          for (int k = 1; k <= m3; ++k) {
            Series lhs = e.br(e.E(1, i, j, kU), e.Ep(1, h, k, kV));
            for (int gg = 1; gg <= gmax; ++gg) {
              Series rhs = e.zero();
              const int g0 = e.rd.d61_sum_g ? 1 : gg, g1 = e.rd.d61_sum_g ? m2 : gg;
              for (int g = g0; g <= g1; ++g) {
                const unsigned s = e.P(1, h) * e.P(2, j) + e.P(2, j) * e.P(3, k) + e.P(1, h) * e.P(3, k) + e.P(2, g);
                rhs = e.add(rhs, e.sg(s, e.mul(e.br(e.E(1, i, g, kU), e.E(2, g, k, kV)), e.E(1, h, j, kU))));
              }
              Ix ix;
              ix("i", i)("j", j)("h", h)("k", k);
              if (!e.rd.d61_sum_g) ix("g", gg);
              e.cmp(e.tag(ix), lhs, rhs, Factor::none);
            }
          }
  });
}

// ---------------------------------------------------------------- general n (series)

void fam_EEFF(Env& e) {
  for (int a = 1; a <= e.n() - 1; ++a) same_var_commute(e, a);
}

void fam_gde(Env& e) {
  const int n = e.n();
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n - 1; ++b) {
      if (a != b && a != b + 1) continue;
      for (int i = 1; i <= e.m(a); ++i)
        for (int j = 1; j <= e.m(a); ++j)
          for (int h = 1; h <= e.m(b); ++h)
            for (int k = 1; k <= e.m(b + 1); ++k) {
              Series rhs = e.zero();
              if (a == b && h == j) {
                for (int p = 1; p <= e.m(a); ++p) rhs = e.add(rhs, e.mul(e.D(a, i, p, kU), e.sub(e.E(b, p, k, kV), e.E(b, p, k, kU))));
                rhs = e.sg(e.P(a, h) * e.P(a, j), rhs);
              }
              if (a == b + 1) {
                const unsigned s = e.P(b, h) * e.P(a, k) + e.P(b, h) * e.P(a, j) + e.P(a, j) * e.P(a, k);
                rhs = e.add(rhs, e.sg(s, e.mul(e.D(a, i, k, kU), e.sub(e.E(b, h, j, kU), e.E(b, h, j, kV)))));
              }
              e.cmp(Ix{}("a", a)("b", b)("i", i)("j", j)("h", h)("k", k).s, e.br(e.D(a, i, j, kU), e.E(b, h, k, kV)), rhs,
                    Factor::u_minus_v);
            }
    }
}

void fam_gdf(Env& e) {
  const int n = e.n();
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n - 1; ++b) {
      if (a != b && a != b + 1) continue;
      for (int i = 1; i <= e.m(a); ++i)
        for (int j = 1; j <= e.m(a); ++j)
          for (int h = 1; h <= e.m(b + 1); ++h)
            for (int k = 1; k <= e.m(b); ++k) {
              Series rhs = e.zero();
              if (a == b && i == k) {
                const int pmax = e.rd.gdf_mu_a ? e.m(a) : e.m(1);
                for (int p = 1; p <= pmax; ++p)
                  rhs = e.add(rhs, e.mul(e.sub(e.Fs(b, h, p, kU), e.Fs(b, h, p, kV)), e.D(a, p, j, kU)));
                rhs = e.sg(e.P(a, i) * e.P(a, j) + e.P(a + 1, h) * e.P(a, i) + e.P(a + 1, h) * e.P(a, j), rhs);
              }
              if (a == b + 1) {
                const unsigned s = e.P(a, h) * e.P(a - 1, k) + e.P(a, h) * e.P(a, j) + e.P(a, j) * e.P(a - 1, k);
                rhs = e.add(rhs, e.sg(s, e.mul(e.sub(e.Fs(b, i, k, kV), e.Fs(b, i, k, kU)), e.D(a, h, j, kU))));
              }
              e.cmp(Ix{}("a", a)("b", b)("i", i)("j", j)("h", h)("k", k).s, e.br(e.D(a, i, j, kU), e.Fs(b, h, k, kV)), rhs,
                    Factor::u_minus_v);
            }
    }
}

void fam_gef(Env& e) {
  const int n = e.n();
  for (int a = 1; a <= n - 1; ++a)
    for (int b = 1; b <= n - 1; ++b)
      for (int i = 1; i <= e.m(a); ++i)
        for (int j = 1; j <= e.m(a + 1); ++j)
          for (int h = 1; h <= e.m(b + 1); ++h)
            for (int k = 1; k <= e.m(b); ++k) {
              Series rhs = a == b ? ef_rhs(e, a, i, j, h, k) : e.zero();
              e.cmp(Ix{}("a", a)("b", b)("i", i)("j", j)("h", h)("k", k).s, e.br(e.E(a, i, j, kU), e.Fs(b, h, k, kV)), rhs,
                    Factor::u_minus_v);
            }
}

void fam_gee(Env& e) {
  for (int a = 1; a <= e.n() - 1; ++a) ee_same(e, a);
}
void fam_gff(Env& e) {
  for (int a = 1; a <= e.n() - 1; ++a) ff_same(e, a);
}
void fam_gee1(Env& e) {
  for (int a = 1; a <= e.n() - 2; ++a) ee_next(e, a);
}
void fam_gff1(Env& e) {
  for (int a = 1; a <= e.n() - 2; ++a) ff_next(e, a);
}

// generator of block a in variable v: E_{a;i,j} or F_{a;i,j}
struct EF {
  bool isF;
  int rows(Env& e, int a) const { return isF ? e.m(a + 1) : e.m(a); }
  int cols(Env& e, int a) const { return isF ? e.m(a) : e.m(a + 1); }
  Series s(Env& e, int a, int i, int j, unsigned v) const { return isF ? e.Fs(a, i, j, v) : e.E(a, i, j, v); }
  const Element& c(Env& e, int a, int i, int j, int r) const { return isF ? e.g.fa(a, i, j, r) : e.g.ea(a, i, j, r); }
};

template <class Fn>
void adjacent_pairs(Env& e, Fn fn) {
  for (int a = 1; a <= e.n() - 1; ++a)
    for (int b = 1; b <= e.n() - 1; ++b)
      if (std::abs(a - b) == 1) fn(a, b);
}

void fam_serre_series(Env& e, bool isF, bool triple) {
  const EF X{isF};
  adjacent_pairs(e, [&](int a, int b) {
    for (int i = 1; i <= X.rows(e, a); ++i)
      for (int j = 1; j <= X.cols(e, a); ++j) {
        Series xa = X.s(e, a, i, j, kU);
        for (int h = 1; h <= X.rows(e, b); ++h)
          for (int k = 1; k <= X.cols(e, b); ++k)
            for (int f = 1; f <= X.rows(e, b); ++f)
              for (int g = 1; g <= X.cols(e, b); ++g) {
                const std::string where = Ix{}("a", a)("b", b)("i", i)("j", j)("h", h)("k", k)("f", f)("g", g).s;
                if (!triple) {
                  Series lhs = e.br(e.br(xa, X.s(e, b, h, k, kV)), X.s(e, b, f, g, kV));
                  e.cmp(where, lhs, e.zero(), Factor::none);
                } else {
                  Series lhs = e.add(e.br(e.br(xa, X.s(e, b, h, k, kV)), X.s(e, b, f, g, kW)),
                                     e.br(e.br(xa, X.s(e, b, h, k, kW)), X.s(e, b, f, g, kV)));
                  e.cmp(where, lhs, e.zero(), Factor::none);
                }
              }
      }
  });
}

// [[X_{a;i,f1}^(r), X_{a+1;f2,j}^(1)], [X_{a+1;h,g1}^(1), X_{a+2;g2,k}^(s)]] with the F index layout transposed
void fam_superserre(Env& e, bool isF) {
  const int n = e.n();
  const int L = e.lv.quartic;
  for (int a = 1; a + 3 <= n; ++a) {
    const int ma = e.m(a), mb = e.m(a + 1), mc = e.m(a + 2), md = e.m(a + 3);
    for (int i = 1; i <= ma; ++i)
      for (int f1 = 1; f1 <= mb; ++f1)
        for (int f2 = 1; f2 <= mb; ++f2)
          for (int j = 1; j <= mc; ++j)
            for (int h = 1; h <= mb; ++h)
              for (int g1 = 1; g1 <= mc; ++g1)
                for (int g2 = 1; g2 <= mc; ++g2)
                  for (int k = 1; k <= md; ++k)
                    for (int r = 1; r <= L; ++r)
                      for (int s = 1; s <= L; ++s) {
                        Element x, y;
                        if (!isF) {
                          x = e.brE(e.g.ea(a, i, f1, r), e.g.ea(a + 1, f2, j, 1));
                          y = e.brE(e.g.ea(a + 1, h, g1, 1), e.g.ea(a + 2, g2, k, s));
                        } else {
                          x = e.brE(e.g.fa(a, f1, i, r), e.g.fa(a + 1, j, f2, 1));
                          y = e.brE(e.g.fa(a + 1, g1, h, 1), e.g.fa(a + 2, k, g2, s));
                        }
                        e.zeroE(Ix{}("a", a)("i", i)("f1", f1)("f2", f2)("j", j)("h", h)("g1", g1)("g2", g2)("k", k)("r", r)("s", s).s,
                                e.brE(x, y));
                      }
  }
}

void fam_rst(Env& e, bool rtt_form) {
  const EF X{true};
  const int L = e.lv.cubic;
  adjacent_pairs(e, [&](int a, int b) {
    for (int i = 1; i <= X.rows(e, a); ++i)
      for (int j = 1; j <= X.cols(e, a); ++j)
        for (int h = 1; h <= X.rows(e, b); ++h)
          for (int k = 1; k <= X.cols(e, b); ++k)
            for (int f = 1; f <= X.rows(e, b); ++f)
              for (int g = 1; g <= X.cols(e, b); ++g)
                for (int r = 1; r <= L; ++r)
                  for (int s = 1; s <= L; ++s)
                    for (int t = 1; t <= L; ++t) {
                      if (rtt_form && t != s) continue;
                      const Element& x = X.c(e, a, i, j, r);
                      Element v = e.brE(e.brE(x, X.c(e, b, h, k, s)), X.c(e, b, f, g, t));
                      if (!rtt_form) v = add(e.F, v, e.brE(e.brE(x, X.c(e, b, h, k, t)), X.c(e, b, f, g, s)));
                      e.zeroE(Ix{}("a", a)("b", b)("i", i)("j", j)("h", h)("k", k)("f", f)("g", g)("r", r)("s", s)("t", t).s, v);
                    }
  });
}

// ---------------------------------------------------------------- theorem (coefficients)

void fam_coeffi_d(Env& e) {
  for (int a = 1; a <= e.n(); ++a)
    for (int i = 1; i <= e.m(a); ++i)
      for (int j = 1; j <= e.m(a); ++j) e.cmpE(Ix{}("a", a)("i", i)("j", j).s, e.g.d(a, i, j, 0), e.Y.scalar(i == j));
}

void fam_coeffi_d1(Env& e) {
  for (int a = 1; a <= e.n(); ++a)
    for (int i = 1; i <= e.m(a); ++i)
      for (int j = 1; j <= e.m(a); ++j)
        for (int r = 0; r <= e.lv.gen; ++r) {
          Element s = e.Y.zero();
          for (int p = 1; p <= e.m(a); ++p)
            for (int t = 0; t <= r; ++t) s = add(e.F, s, e.mulE(e.g.d(a, i, p, t), e.g.dp(a, p, j, r - t)));
          e.cmpE(Ix{}("a", a)("i", i)("j", j)("r", r).s, s, e.Y.scalar(r == 0 && i == j));
        }
}

void fam_coeffi_d2(Env& e) {
  const int L = e.lv.gen;
  for (int a = 1; a <= e.n(); ++a)
    for (int b = 1; b <= e.n(); ++b)
      for (int i = 1; i <= e.m(a); ++i)
        for (int j = 1; j <= e.m(a); ++j)
          for (int h = 1; h <= e.m(b); ++h)
            for (int k = 1; k <= e.m(b); ++k)
              for (int r = 1; r <= L; ++r)
                for (int s = 1; s <= L; ++s) {
                  Element rhs = e.Y.zero();
                  if (a == b) {
                    for (int t = 0; t <= std::min(r, s) - 1; ++t) {
                      rhs = add(e.F, rhs, e.mulE(e.g.d(a, h, j, t), e.g.d(a, i, k, r + s - 1 - t)));
                      rhs = sub(e.F, rhs, e.mulE(e.g.d(a, h, j, r + s - 1 - t), e.g.d(a, i, k, t)));
                    }
                    rhs = e.sgE(e.P(a, i) * e.P(a, j) + e.P(a, i) * e.P(a, h) + e.P(a, j) * e.P(a, h), rhs);
                  }
                  e.cmpE(Ix{}("a", a)("b", b)("i", i)("j", j)("h", h)("k", k)("r", r)("s", s).s,
                         e.brE(e.g.d(a, i, j, r), e.g.d(b, h, k, s)), rhs);
                }
}

void fam_p_daeb(Env& e) {
  const int L = e.lv.gen;
  for (int a = 1; a <= e.n(); ++a)
    for (int b = 1; b <= e.n() - 1; ++b)
      for (int i = 1; i <= e.m(a); ++i)
        for (int j = 1; j <= e.m(a); ++j)
          for (int h = 1; h <= e.m(b); ++h)
            for (int k = 1; k <= e.m(b + 1); ++k)
              for (int r = 1; r <= L; ++r)
                for (int s = 1; s <= L; ++s) {
                  Element rhs = e.Y.zero();
                  if (a == b && h == j) {
                    Element t1 = e.Y.zero();
                    for (int p = 1; p <= e.m(a); ++p)
                      for (int t = 0; t <= r - 1; ++t) t1 = add(e.F, t1, e.mulE(e.g.d(a, i, p, t), e.g.ea(b, p, k, r + s - 1 - t)));
                    rhs = add(e.F, rhs, e.sgE(e.P(a, h) * e.P(a, j), t1));
                  }
                  if (a == b + 1) {
                    Element t2 = e.Y.zero();
                    for (int t = 0; t <= r - 1; ++t) t2 = add(e.F, t2, e.mulE(e.g.d(a, i, k, t), e.g.ea(b, h, j, r + s - 1 - t)));
                    const unsigned sg = e.P(b, h) * e.P(a, k) + e.P(b, h) * e.P(a, j) + e.P(a, j) * e.P(a, k);
                    rhs = sub(e.F, rhs, e.sgE(sg, t2));
                  }
                  e.cmpE(Ix{}("a", a)("b", b)("i", i)("j", j)("h", h)("k", k)("r", r)("s", s).s,
                         e.brE(e.g.d(a, i, j, r), e.g.ea(b, h, k, s)), rhs);
                }
}

void fam_p_dafb(Env& e) {
  const int L = e.lv.gen;
  for (int a = 1; a <= e.n(); ++a)
    for (int b = 1; b <= e.n() - 1; ++b)
      for (int i = 1; i <= e.m(a); ++i)
        for (int j = 1; j <= e.m(a); ++j)
          for (int h = 1; h <= e.m(b + 1); ++h)
            for (int k = 1; k <= e.m(b); ++k)
              for (int r = 1; r <= L; ++r)
                for (int s = 1; s <= L; ++s) {
                  Element rhs = e.Y.zero();
                  if (a == b && (!e.rd.dafb_delta_ik || i == k)) {
                    Element t1 = e.Y.zero();
                    for (int p = 1; p <= e.m(a); ++p)
                      for (int t = 0; t <= r - 1; ++t) t1 = add(e.F, t1, e.mulE(e.g.fa(b, h, p, r + s - 1 - t), e.g.d(a, p, j, t)));
                    rhs = add(e.F, rhs, e.sgE((e.rd.dafb_first_minus ? 1U : 0U) + e.P(a, i) * e.P(a, j) + e.P(a + 1, h) * e.P(a, i) + e.P(a + 1, h) * e.P(a, j), t1));
                  }
                  if (a == b + 1) {
                    Element t2 = e.Y.zero();
                    for (int t = 0; t <= r - 1; ++t) t2 = add(e.F, t2, e.mulE(e.g.fa(b, i, k, r + s - 1 - t), e.g.d(a, h, j, t)));
                    rhs = add(e.F, rhs, e.sgE(e.P(a, h) * e.P(b, k) + e.P(a, h) * e.P(a, j) + e.P(a, j) * e.P(b, k), t2));
                  }
                  e.cmpE(Ix{}("a", a)("b", b)("i", i)("j", j)("h", h)("k", k)("r", r)("s", s).s,
                         e.brE(e.g.d(a, i, j, r), e.g.fa(b, h, k, s)), rhs);
                }
}

void fam_p_eafb(Env& e) {
  const int L = e.lv.gen;
  for (int a = 1; a <= e.n() - 1; ++a)
    for (int b = 1; b <= e.n() - 1; ++b)
      for (int i = 1; i <= e.m(a); ++i)
        for (int j = 1; j <= e.m(a + 1); ++j)
          for (int h = 1; h <= e.m(b + 1); ++h)
            for (int k = 1; k <= e.m(b); ++k)
              for (int r = 1; r <= L; ++r)
                for (int s = 1; s <= L; ++s) {
                  Element rhs = e.Y.zero();
                  if (a == b) {
                    for (int t = 0; t <= r + s - 1; ++t)
                      rhs = add(e.F, rhs, e.mulE(e.g.dp(a, i, k, r + s - 1 - t), e.g.d(a + 1, h, j, t)));
                    rhs = e.sgE(1 + e.P(a + 1, h) * e.P(a, k) + e.P(a + 1, j) * e.P(a, k) + e.P(a + 1, h) * e.P(a + 1, j), rhs);
                  }
                  e.cmpE(Ix{}("a", a)("b", b)("i", i)("j", j)("h", h)("k", k)("r", r)("s", s).s,
                         e.brE(e.g.ea(a, i, j, r), e.g.fa(b, h, k, s)), rhs);
                }
}

void fam_p_same(Env& e, bool isF) {
  const int L = e.lv.gen;
  const EF X{isF};
  for (int a = 1; a <= e.n() - 1; ++a)
    for (int i = 1; i <= X.rows(e, a); ++i)
      for (int j = 1; j <= X.cols(e, a); ++j)
        for (int h = 1; h <= X.rows(e, a); ++h)
          for (int k = 1; k <= X.cols(e, a); ++k)
            for (int r = 1; r <= L; ++r)
              for (int s = 1; s <= L; ++s) {
                Element rhs = e.Y.zero();
                // E: + sum_{t<s} - sum_{t<r};  F: + sum_{t<r} - sum_{t<s}
                const int plus = isF ? r : s, minus = isF ? s : r;
                for (int t = 1; t <= plus - 1; ++t)
                  rhs = add(e.F, rhs, e.mulE(X.c(e, a, i, k, r + s - 1 - t), X.c(e, a, h, j, t)));
                for (int t = 1; t <= minus - 1; ++t)
                  rhs = sub(e.F, rhs, e.mulE(X.c(e, a, i, k, r + s - 1 - t), X.c(e, a, h, j, t)));
                const unsigned sg = isF ? e.P(a + 1, h) * e.P(a, j) + e.P(a, j) * e.P(a, k) + e.P(a + 1, h) * e.P(a, k)
                                        : e.P(a, h) * e.P(a + 1, j) + e.P(a + 1, j) * e.P(a + 1, k) + e.P(a, h) * e.P(a + 1, k);
                e.cmpE(Ix{}("a", a)("i", i)("j", j)("h", h)("k", k)("r", r)("s", s).s,
                       e.brE(X.c(e, a, i, j, r), X.c(e, a, h, k, s)), e.sgE(sg, rhs));
              }
}

void fam_p_next(Env& e, bool isF) {
  const int L = e.lv.gen;
  const EF X{isF};
  for (int a = 1; a <= e.n() - 2; ++a)
    for (int i = 1; i <= X.rows(e, a); ++i)
      for (int j = 1; j <= X.cols(e, a); ++j)
        for (int h = 1; h <= X.rows(e, a + 1); ++h)
          for (int k = 1; k <= X.cols(e, a + 1); ++k)
            for (int r = 1; r <= L; ++r)
              for (int s = 1; s <= L; ++s) {
                Element lhs = sub(e.F, e.brE(X.c(e, a, i, j, r + 1), X.c(e, a + 1, h, k, s)),
                                  e.brE(X.c(e, a, i, j, r), X.c(e, a + 1, h, k, s + 1)));
                Element rhs = e.Y.zero();
                if (!isF && h == j) {
                  for (int q = 1; q <= e.m(a + 1); ++q) rhs = add(e.F, rhs, e.mulE(e.g.ea(a, i, q, r), e.g.ea(a + 1, q, k, s)));
                  rhs = e.sgE(e.P(a + 1, j) * e.P(a + 1, h), rhs);
                }
                if (isF && i == k) {
                  for (int q = 1; q <= e.m(a + 1); ++q) rhs = add(e.F, rhs, e.mulE(e.g.fa(a + 1, h, q, s), e.g.fa(a, q, j, r)));
                  rhs = e.sgE(e.P(a + 1, i) * (e.P(a, j) + e.P(a + 2, h)) + e.P(a, j) * e.P(a + 2, h) + 1, rhs);
                }
                e.cmpE(Ix{}("a", a)("i", i)("j", j)("h", h)("k", k)("r", r)("s", s).s, lhs, rhs);
              }
}

void fam_pc(Env& e, bool isF) {
  const int L = e.lv.gen;
  const EF X{isF};
  for (int a = 1; a <= e.n() - 1; ++a)
    for (int b = 1; b <= e.n() - 1; ++b) {
      const bool far = std::abs(b - a) > 1;
      if (!far && b != a + 1) continue;
      for (int i = 1; i <= X.rows(e, a); ++i)
        for (int j = 1; j <= X.cols(e, a); ++j)
          for (int h = 1; h <= X.rows(e, b); ++h)
            for (int k = 1; k <= X.cols(e, b); ++k) {
              if (!far && (isF ? i == k : h == j)) continue;
              for (int r = 1; r <= L; ++r)
                for (int s = 1; s <= L; ++s)
                  e.zeroE(Ix{}("a", a)("b", b)("i", i)("j", j)("h", h)("k", k)("r", r)("s", s).s,
                          e.brE(X.c(e, a, i, j, r), X.c(e, b, h, k, s)));
            }
    }
}

void fam_coeffi_serre(Env& e, bool isF) {
  const int L = e.lv.cubic;
  const EF X{isF};
  adjacent_pairs(e, [&](int a, int b) {
    for (int i = 1; i <= X.rows(e, a); ++i)
      for (int j = 1; j <= X.cols(e, a); ++j)
        for (int h = 1; h <= X.rows(e, b); ++h)
          for (int k = 1; k <= X.cols(e, b); ++k)
            for (int f = 1; f <= X.rows(e, b); ++f)
              for (int g = 1; g <= X.cols(e, b); ++g)
                for (int r = 1; r <= L; ++r)
                  for (int t = 1; t <= L; ++t)
                    e.zeroE(Ix{}("a", a)("b", b)("i", i)("j", j)("h", h)("k", k)("f", f)("g", g)("r", r)("t", t).s,
                            e.brE(e.brE(X.c(e, a, i, j, r), X.c(e, b, h, k, t)), X.c(e, b, f, g, t)));
  });
}

void fam_coeffi_super(Env& e, bool isF) {
  const int L = e.lv.cubic;
  const EF X{isF};
  adjacent_pairs(e, [&](int a, int b) {
    for (int i = 1; i <= X.rows(e, a); ++i)
      for (int j = 1; j <= X.cols(e, a); ++j)
        for (int h = 1; h <= X.rows(e, a); ++h)
          for (int k = 1; k <= X.cols(e, a); ++k)
            for (int f = 1; f <= X.rows(e, b); ++f)
              for (int g = 1; g <= X.cols(e, b); ++g)
                for (int r = 1; r <= L; ++r)
                  for (int s = 1; s <= L; ++s)
                    for (int l = 1; l <= L; ++l) {
                      const Element& z = X.c(e, b, f, g, l);
                      Element v = add(e.F, e.brE(X.c(e, a, i, j, r), e.brE(X.c(e, a, h, k, s), z)),
                                      e.brE(X.c(e, a, i, j, s), e.brE(X.c(e, a, h, k, r), z)));
                      e.zeroE(Ix{}("a", a)("b", b)("i", i)("j", j)("h", h)("k", k)("f", f)("g", g)("r", r)("s", s)("l", l).s, v);
                    }
  });
}

// ---------------------------------------------------------------- gr level

struct Gr {
  Env& e;
  std::map<std::tuple<int, int, int, int, int>, Element> cache;
  // image of E_{a,b;i,j}^{(r)} in gr_{r-1}
  const Element& bar(int a, int b, int i, int j, int r) {
    auto key = std::make_tuple(a, b, i, j, r);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    Element img = gr_leading_symbol(e.Y, e.U, e.g.e(a, b, i, j, r), r - 1);
    return cache.emplace(key, std::move(img)).first->second;
  }
  Element brU(const Element& x, const Element& y) { return e.U.supercommutator(x, y); }
  // the Yangian bracket read at gr level must agree with the bracket of the images
  Element both(int a, int b, int i, int j, int r, int c, int d, int h, int k, int s, const std::string& where) {
    Element viaU = brU(bar(a, b, i, j, r), bar(c, d, h, k, s));
    Element viaY = gr_leading_symbol(e.Y, e.U, e.Y.supercommutator(e.g.e(a, b, i, j, r), e.g.e(c, d, h, k, s)), r + s - 2);
    e.cmpE(where + " gr", viaY, viaU);
    return viaU;
  }
};

template <class Fn>
void levels_rs(Env& e, Fn fn) {
  for (int r = 1; r < e.lv.inj_sum; ++r)
    for (int s = 1; r + s <= e.lv.inj_sum; ++s) fn(r, s);
}

void fam_inj(Env& e) {
  Gr G{e, {}};
  const int n = e.n();
  const std::string& sig = e.Y.context().sigma();
  // images: bar E_{a,b;i,j}^{(r)} = (-1)^{|i|_a} e_{n_{a-1}+i, n_{b-1}+j} x^{r-1}
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int i = 1; i <= e.m(a); ++i)
        for (int j = 1; j <= e.m(b); ++j)
          for (int r = 1; r < e.lv.inj_sum; ++r) {
            Element want = e.U.basis(e.g.mu.offset(a) + i, e.g.mu.offset(b) + j, r - 1);
            e.cmpE(Ix{}("a", a)("b", b)("i", i)("j", j)("r", r).s + " image", G.bar(a, b, i, j, r),
                   e.sgE(restricted_parity(e.g.mu, sig, a, i), want));
          }
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = 1; c <= n; ++c)
        for (int d = c + 1; d <= n; ++d)
          for (int i = 1; i <= e.m(a); ++i)
            for (int j = 1; j <= e.m(b); ++j)
              for (int h = 1; h <= e.m(c); ++h)
                for (int k = 1; k <= e.m(d); ++k)
                  levels_rs(e, [&](int r, int s) {
                    const std::string where = Ix{}("a", a)("b", b)("c", c)("d", d)("i", i)("j", j)("h", h)("k", k)("r", r)("s", s).s;
                    Element lhs = G.both(a, b, i, j, r, c, d, h, k, s, where);
                    Element rhs = e.U.zero();
                    if (b == c && h == j) rhs = add(e.F, rhs, e.sgE(e.P(b, j) * e.P(c, h), G.bar(a, d, i, k, r + s - 1)));
                    if (a == d && i == k)
                      rhs = sub(e.F, rhs, e.sgE(e.P(a, i) * e.P(b, j) + e.P(a, i) * e.P(c, h) + e.P(b, j) * e.P(c, h),
                                                G.bar(c, b, h, j, r + s - 1)));
                    e.cmpE(where, lhs, rhs);
                  });
}

// [bar E_{a,b}, bar E_{c,d}] = 0 over the pairs picked by `sel`
template <class Sel>
void inj_zero(Env& e, Sel sel) {
  Gr G{e, {}};
  const int n = e.n();
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = 1; c <= n; ++c)
        for (int d = c + 1; d <= n; ++d) {
          if (!sel(a, b, c, d)) continue;
          for (int i = 1; i <= e.m(a); ++i)
            for (int j = 1; j <= e.m(b); ++j)
              for (int h = 1; h <= e.m(c); ++h)
                for (int k = 1; k <= e.m(d); ++k)
                  levels_rs(e, [&](int r, int s) {
                    const std::string where = Ix{}("a", a)("b", b)("c", c)("d", d)("i", i)("j", j)("h", h)("k", k)("r", r)("s", s).s;
                    e.zeroE(where, G.both(a, b, i, j, r, c, d, h, k, s, where));
                  });
        }
}

void fam_inj6(Env& e) {
  Gr G{e, {}};
  adjacent_pairs(e, [&](int a, int b) {
    for (int i = 1; i <= e.m(a); ++i)
      for (int j = 1; j <= e.m(a + 1); ++j)
        for (int h = 1; h <= e.m(b); ++h)
          for (int k = 1; k <= e.m(b + 1); ++k)
            for (int r = 1; r + 1 < e.lv.inj_sum; ++r)
              for (int s = 1; r + s + 1 <= e.lv.inj_sum; ++s) {
                const std::string where = Ix{}("a", a)("b", b)("i", i)("j", j)("h", h)("k", k)("r", r)("s", s).s;
                Element x = G.both(a, a + 1, i, j, r + 1, b, b + 1, h, k, s, where + " L");
                Element y = G.both(a, a + 1, i, j, r, b, b + 1, h, k, s + 1, where + " R");
                e.cmpE(where, x, y);
              }
  });
}

void fam_inj7(Env& e) {
  Gr G{e, {}};
  adjacent_pairs(e, [&](int a, int b) {
    for (int i = 1; i <= e.m(a); ++i)
      for (int j = 1; j <= e.m(a + 1); ++j)
        for (int h = 1; h <= e.m(a); ++h)
          for (int k = 1; k <= e.m(a + 1); ++k)
            for (int f = 1; f <= e.m(b); ++f)
              for (int g = 1; g <= e.m(b + 1); ++g)
                for (int r = 1; r < e.lv.inj_sum; ++r)
                  for (int s = 1; r + s < e.lv.inj_sum; ++s)
                    for (int t = 1; r + s + t <= e.lv.inj_sum + 1; ++t) {
                      const Element& z = G.bar(b, b + 1, f, g, t);
                      Element lhs = G.brU(G.bar(a, a + 1, i, j, r), G.brU(G.bar(a, a + 1, h, k, s), z));
                      Element rhs = G.brU(G.bar(a, a + 1, i, j, s), G.brU(G.bar(a, a + 1, h, k, r), z));
                      e.cmpE(Ix{}("a", a)("b", b)("i", i)("j", j)("h", h)("k", k)("f", f)("g", g)("r", r)("s", s)("t", t).s,
                             lhs, negate(e.F, rhs));
                    }
  });
}

void fam_inj8(Env& e) {
  Gr G{e, {}};
  const int n = e.n();
  for (int a = 1; a <= n; ++a)
    for (int b = a + 2; b <= n; ++b)
      for (int i = 1; i <= e.m(a); ++i)
        for (int j = 1; j <= e.m(b); ++j)
          for (int r = 1; r < e.lv.inj_sum; ++r) {
            const Element& lhs = G.bar(a, b, i, j, r);
            for (int h = 1; h <= e.m(b - 1); ++h) {
              const std::string where = Ix{}("a", a)("b", b)("i", i)("j", j)("r", r)("h", h).s;
              Element x = G.both(a, b - 1, i, h, r, b - 1, b, h, j, 1, where);
              e.cmpE(where + " left", lhs, e.sgE(e.P(b - 1, h), x));
            }
            for (int k = 1; k <= e.m(a + 1); ++k) {
              const std::string where = Ix{}("a", a)("b", b)("i", i)("j", j)("r", r)("k", k).s;
              Element x = G.both(a, a + 1, i, k, 1, a + 1, b, k, j, r, where);
              e.cmpE(where + " right", lhs, e.sgE(e.P(a + 1, k), x));
            }
          }
}

void gr_hom(Env& e, int R) {
  Yangian& Y = e.Y;
  const int n = Y.context().dim();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l)
          for (int r = 1; r <= R; ++r)
            for (int s = 1; s <= R; ++s) {
              Element x = Y.generator(i, j, r), y = Y.generator(k, l, s);
              Element lhs = gr_leading_symbol(Y, e.U, Y.supercommutator(x, y), r + s - 2);
              Element rhs = e.U.supercommutator(gr_leading_symbol(Y, e.U, x, r - 1), gr_leading_symbol(Y, e.U, y, s - 1));
              e.cmpE(Ix{}("i", i)("j", j)("r", r)("k", k)("l", l)("s", s).s, lhs, rhs);
            }
}

// ---------------------------------------------------------------- engine invariants

void fam_confluence(Env& e) {
  Yangian& Y = e.Y;
  const int n = Y.context().dim();
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> idx(1, n), lvl(1, 3), len(2, 5);
  for (int w = 0; w < 120; ++w) {
    Word word;
    const int L = len(rng);
    for (int q = 0; q < L; ++q) word.push_back(make_gen(idx(rng), idx(rng), lvl(rng)));
    Element fast = Y.straighten(word);
    const std::string where = "word=" + word_text(word);
    e.cmpE(where + " leftmost", fast, Y.straighten_reference(word, Strategy::leftmost));
    e.cmpE(where + " rightmost", fast, Y.straighten_reference(word, Strategy::rightmost));
  }
}

void fam_odd_square(Env& e) {
  Yangian& Y = e.Y;
  const int n = Y.context().dim();
  const auto& c = Y.context();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const bool odd = c.parity(i) ^ c.parity(j);
      for (int r = 1; r <= 3; ++r) {
        const std::string where = Ix{}("i", i)("j", j)("r", r).s;
        Element b = Y.rtt_bracket(i, j, r, i, j, r);
        // [x, x] vanishes for even x; for odd x only when 2 = 0
        if (!odd || c.p() == 2)
          e.zeroE(where, b);
        else
          e.cmpE(where, Y.supercommutator(Y.generator(i, j, r), Y.generator(i, j, r)), b);
      }
    }
}

void fam_maps(Env& e, const std::string& id) {
  Yangian& Y = e.Y;
  const int R = std::min(e.lv.R, 3);
  if (id == "map-involution") return e.merge(involution_check(Y, R));
  if (id == "map-factorization") return e.merge(factorization_check(Y, R));
  if (id == "map-antipode") return e.merge(antipode_antihom_check(Y, R));
  for (MapKind k : {MapKind::rho, MapKind::sigma_anti, MapKind::antipode, MapKind::omega, MapKind::zeta}) {
    MapDescriptor d = make_map(k, Y.context());
    if (d.target == Y.context()) {
      MapApplier m(d, Y, Y, R);
      e.merge(id == "map-parity" ? parity_preservation_check(m, R) : well_defined_check(m, R));
    } else {
      Yangian T(d.target);
      MapApplier m(d, Y, T, R);
      e.merge(id == "map-parity" ? parity_preservation_check(m, R) : well_defined_check(m, R));
    }
  }
}

// ---------------------------------------------------------------- registry

using Checker = std::function<void(Env&)>;

struct Entry {
  FamilyInfo info;
  Checker fn;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> all = [] {
    std::vector<Entry> v;
    auto add = [&](const char* id, const char* group, int nmin, Checker fn) { v.push_back({{id, group, nmin}, std::move(fn)}); };
    add("rtt", "rtt", 1, fam_rtt);
    add("rtt-series", "rtt", 1, fam_rtt_series);
    add("commurelation", "rtt", 1, fam_commurelation);
    add("dd0-de", "dd0", 3, [](Env& e) { fam_dd0_de(e, false); });
    add("dd0-df", "dd0", 3, [](Env& e) { fam_dd0_de(e, true); });
    add("dd0-ee", "dd0", 4, [](Env& e) { fam_dd0_ee(e, false); });
    add("dd0-ff", "dd0", 4, [](Env& e) { fam_dd0_ee(e, true); });
    add("dd0-ddp", "dd0", 1, fam_dd0_ddp);
    add("d1e1", "n2", 2, fam_d1e1);
    add("e1d2", "n2", 2, fam_e1d2);
    add("d2e1", "n2", 2, fam_d2e1);
    add("d1f1", "n2", 2, fam_d1f1);
    add("f1d2", "n2", 2, fam_f1d2);
    add("d2f1", "n2", 2, fam_d2f1);
    add("e1f1", "n2", 2, fam_e1f1);
    add("e1e1", "n2", 2, fam_e1e1);
    add("f1f1", "n2", 2, fam_f1f1);
    add("FF", "n2", 2, fam_FF);
    add("D1F2", "n3", 3, [](Env& e) { fam_zero_pairs(e, "D1F2"); });
    add("F1D3", "n3", 3, [](Env& e) { fam_zero_pairs(e, "F1D3"); });
    add("D3F2", "n3", 3, fam_D3F2);
    add("D3F31", "n3", 3, fam_D3F31);
    add("F1E2", "n3", 3, [](Env& e) { fam_zero_pairs(e, "F1E2"); });
    add("F1F2", "n3", 3, fam_F1F2);
    add("F2F3", "n3", 3, fam_F2F3);
    add("F1F31", "n3", 3, fam_F1F31);
    add("D1E2", "n3", 3, [](Env& e) { fam_zero_pairs(e, "D1E2"); });
    add("D3E1", "n3", 3, [](Env& e) { fam_zero_pairs(e, "D3E1"); });
    add("E1F2", "n3", 3, [](Env& e) { fam_zero_pairs(e, "E1F2"); });
    add("D3E2", "n3", 3, fam_D3E2);
    add("D3E13", "n3", 3, fam_D3E13);
    add("D1E13", "n3", 3, fam_D1E13);
    add("E1E2", "n3", 3, fam_E1E2);
    add("61c", "n3", 3, fam_61c);
    add("61d", "n3", 3, fam_61d);
    add("u0-coeff", "n3", 3, fam_u0);
    add("F1F31-1", "n3", 3, fam_F1F31_1);
    add("F1F31-2", "n3", 3, fam_F1F31_2);
    add("EEFF", "lemma", 2, fam_EEFF);
    add("gde", "lemma", 2, fam_gde);
    add("gdf", "lemma", 2, fam_gdf);
    add("gef", "lemma", 2, fam_gef);
    add("gee", "lemma", 2, fam_gee);
    add("gff", "lemma", 2, fam_gff);
    add("gee-1", "lemma", 3, fam_gee1);
    add("gff-1", "lemma", 3, fam_gff1);
    add("serre-E", "lemma", 3, [](Env& e) { fam_serre_series(e, false, false); });
    add("super-E", "lemma", 3, [](Env& e) { fam_serre_series(e, false, true); });
    add("serre-F", "lemma", 3, [](Env& e) { fam_serre_series(e, true, false); });
    add("super-F", "lemma", 3, [](Env& e) { fam_serre_series(e, true, true); });
    add("superserre-E", "lemma", 4, [](Env& e) { fam_superserre(e, false); });
    add("superserre-F", "lemma", 4, [](Env& e) { fam_superserre(e, true); });
    add("rst-coeffi", "lemma", 3, [](Env& e) { fam_rst(e, false); });
    add("rtt-coeffi-F", "lemma", 3, [](Env& e) { fam_rst(e, true); });
    add("coeffi-d", "theorem", 1, fam_coeffi_d);
    add("coeffi-d-1", "theorem", 1, fam_coeffi_d1);
    add("coeffi-d-2", "theorem", 1, fam_coeffi_d2);
    add("p-daeb", "theorem", 2, fam_p_daeb);
    add("p-dafb", "theorem", 2, fam_p_dafb);
    add("p-eafb", "theorem", 2, fam_p_eafb);
    add("p-eaea", "theorem", 2, [](Env& e) { fam_p_same(e, false); });
    add("p-fafa", "theorem", 2, [](Env& e) { fam_p_same(e, true); });
    add("p-ee", "theorem", 3, [](Env& e) { fam_p_next(e, false); });
    add("p-ff", "theorem", 3, [](Env& e) { fam_p_next(e, true); });
    add("pc-ee", "theorem", 3, [](Env& e) { fam_pc(e, false); });
    add("pc-ff", "theorem", 3, [](Env& e) { fam_pc(e, true); });
    add("coeffi-serre-E", "theorem", 3, [](Env& e) { fam_coeffi_serre(e, false); });
    add("coeffi-serre-F", "theorem", 3, [](Env& e) { fam_coeffi_serre(e, true); });
    add("coeffi-super-E", "theorem", 3, [](Env& e) { fam_coeffi_super(e, false); });
    add("coeffi-super-F", "theorem", 3, [](Env& e) { fam_coeffi_super(e, true); });
    add("coeffi-superserre-E", "theorem", 4, [](Env& e) { fam_superserre(e, false); });
    add("coeffi-superserre-F", "theorem", 4, [](Env& e) { fam_superserre(e, true); });
    add("gr-hom", "gr", 1, [](Env& e) { gr_hom(e, std::min(e.lv.R, 3)); });
    add("inj", "gr", 2, fam_inj);
    add("inj-1", "gr", 3, [](Env& e) { inj_zero(e, [](int a, int b, int c, int d) { return b == a + 2 && c == a + 1 && d == a + 2; }); });
    add("inj-2", "gr", 3, [](Env& e) { inj_zero(e, [](int a, int b, int c, int d) { return b == a + 1 && c == a && d == a + 2; }); });
    add("inj-3", "gr", 4, [](Env& e) { inj_zero(e, [](int a, int b, int c, int d) { return b == a + 2 && c == a + 1 && d == a + 3; }); });
    add("inj-4", "gr", 2, [](Env& e) { inj_zero(e, [](int a, int b, int c, int d) { return d == c + 1 && a <= c && c < b; }); });
    add("inj-5", "gr", 2, [](Env& e) {
      inj_zero(e, [](int a, int b, int c, int d) { return b == a + 1 && d == c + 1 && std::abs(a - c) != 1; });
    });
    add("inj-6", "gr", 3, fam_inj6);
    add("inj-7", "gr", 3, fam_inj7);
    add("inj-8", "gr", 3, fam_inj8);
    add("roundtrip", "invariant", 1, [](Env& e) { e.merge(roundtrip_check(e.Y, e.g)); });
    add("uniqueness", "invariant", 1, [](Env& e) { e.merge(uniqueness_check(e.Y, e.g.mu, std::min(e.lv.R, e.g.R))); });
    add("recursion", "invariant", 3, [](Env& e) { e.merge(recursion_check_all(e.Y, e.g)); });
    add("gauss-parity", "invariant", 1, [](Env& e) { e.merge(parity_check(e.Y, e.g)); });
    add("map-involution", "invariant", 1, [](Env& e) { fam_maps(e, "map-involution"); });
    add("map-factorization", "invariant", 1, [](Env& e) { fam_maps(e, "map-factorization"); });
    add("map-antipode", "invariant", 1, [](Env& e) { fam_maps(e, "map-antipode"); });
    add("map-well-defined", "invariant", 1, [](Env& e) { fam_maps(e, "map-well-defined"); });
    add("map-parity", "invariant", 1, [](Env& e) { fam_maps(e, "map-parity"); });
    add("psi-dual-path", "invariant", 1, [](Env& e) {
      Yangian small(suffix_context(e.Y.context(), 1));
      e.merge(psi_dual_path(small, e.Y, std::min(e.lv.R, 3)));
    });
    add("psi-parabolic", "invariant", 2, [](Env& e) {
      for (int a = 2; a <= e.n(); ++a) e.merge(psi_on_parabolic(e.Y, e.g, a));
    });
    add("corner", "invariant", 2, [](Env& e) { e.merge(corner_commute_check(e.Y, e.g.mu.size(1), std::min(e.lv.R, 3))); });
    add("zeta-parabolic", "invariant", 1, [](Env& e) { e.merge(zeta_on_parabolic(e.Y, e.g)); });
    add("confluence", "invariant", 1, fam_confluence);
    add("odd-square", "invariant", 1, fam_odd_square);
    return v;
  }();
  return all;
}

const Entry& entry(const std::string& id) {
  for (const auto& e : entries())
    if (e.info.id == id) return e;
  throw ConfigError("unknown family '" + id + "'");
}

}  // namespace

int gauss_order(const Levels& lv) {
  return std::max({lv.R, 2 * lv.gen - 1, lv.gen + 1, lv.cubic, lv.quartic, lv.inj_sum - 1});
}

std::vector<std::pair<std::string, std::string>> describe(const Readings& rd) {
  auto fs = [](bool summed, const char* var) { return std::string(var) + (summed ? " summed" : " fixed, checked for every value"); };
  return {
      {"D3F31", fs(rd.d3f31_sum_r, "r")},
      {"F2F3", fs(rd.f2f3_sum_g, "g")},
      {"F1F31", fs(rd.f1f31_sum_g, "g")},
      {"61c", fs(rd.c61_sum_g, "g")},
      {"61d", fs(rd.d61_sum_g, "g") + "; the outer sum over q is dropped"},
      {"D3E13", fs(rd.d3e13_sum_q, "q") + "; g summed over block 3; sign uses |q|_2"},
      {"D1E13", fs(rd.d1e13_sum_q, "q") + "; p summed over block 1; sign uses |q|_2; inner E_1 at " + (rd.d1e13_e1_at_u ? "u" : "v")},
      {"p-dafb", std::string(rd.dafb_delta_ik ? "first term carries delta_ik" : "first term without delta_ik") +
                     (rd.dafb_first_minus ? ", with a minus sign" : ", with a plus sign")},
      {"gef", rd.gef_j_next ? "first sign uses |j|_{a+1}" : "first sign uses |j|_a"},
      {"gdf", rd.gdf_mu_a ? "first sum over p runs to mu_a" : "first sum over p runs to mu_1"},
      {"gde", "delta_{a,b} and delta_{a,b+1} cases enumerated separately"},
      {"windows", "n=2 and n=3 families are checked on every run of consecutive blocks"},
  };
}

const std::vector<FamilyInfo>& family_registry() {
  static const std::vector<FamilyInfo> infos = [] {
    std::vector<FamilyInfo> v;
    for (const auto& e : entries()) v.push_back(e.info);
    return v;
  }();
  return infos;
}

const FamilyInfo* find_family(const std::string& id) {
  for (const auto& f : family_registry())
    if (f.id == id) return &f;
  return nullptr;
}

bool family_applicable(const std::string& id, const Composition& mu) {
  const FamilyInfo* f = find_family(id);
  if (!f) throw ConfigError("unknown family '" + id + "'");
  if (id == "psi-dual-path" && mu.total() < 2) return false;
  return mu.n() >= f->min_blocks;
}

FamilyResult check_family(Yangian& Y, const GaussData& g, const std::string& id, const Levels& lv, const Readings& rd) {
  const Entry& en = entry(id);
  if (!family_applicable(id, g.mu)) throw ConfigError("family '" + id + "' does not apply to mu=(" + g.mu.str() + ")");
  if (g.R < gauss_order(lv)) throw ConfigError("Gauss data order is below what the level caps need");
  FamilyResult res;
  res.id = id;
  CurrentAlgebra U(Y.context());
  Env env(Y, U, g, lv, rd, res);
  const auto t0 = std::chrono::steady_clock::now();
  en.fn(env);
  res.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

FamilyResult gr_structure_check(const AlgebraContext& ctx, int R) {
  Yangian Y(ctx);
  CurrentAlgebra U(ctx);
  GaussData g = gauss_decompose(Y, Composition({ctx.dim()}), 1);
  Levels lv;
  Readings rd;
  FamilyResult res;
  res.id = "gr-hom";
  Env env(Y, U, g, lv, rd, res);
  gr_hom(env, R);
  return res;
}

std::size_t Report::checked() const {
  std::size_t c = 0;
  for (const auto& f : families) c += f.checked;
  return c;
}

std::size_t Report::failed() const {
  std::size_t c = 0;
  for (const auto& f : families) c += f.failed;
  return c;
}

Report full_suite(const RunConfig& cfg) {
  AlgebraContext ctx = make_context(cfg.p, cfg.M, cfg.N, cfg.sigma);
  Composition mu = cfg.mu.n() == 0 ? Composition({ctx.dim()}) : cfg.mu;
  if (mu.total() != ctx.dim())
    throw ConfigError("mu sums to " + std::to_string(mu.total()) + ", expected M+N = " + std::to_string(ctx.dim()));
  const Levels& lv = cfg.levels;
  if (lv.R < 1 || lv.gen < 1 || lv.cubic < 1 || lv.quartic < 1 || lv.inj_sum < 2) throw ConfigError("level caps must be positive");
  if (cfg.jobs < 1) throw ConfigError("--jobs must be >= 1");

  std::vector<std::string> ids;
  const bool all = cfg.families.empty() || (cfg.families.size() == 1 && cfg.families[0] == "all");
  if (all) {
    for (const auto& f : family_registry())
      if (family_applicable(f.id, mu)) ids.push_back(f.id);
  } else {
    for (const auto& id : cfg.families) {
      if (!find_family(id)) throw ConfigError("unknown family '" + id + "'");
      if (!family_applicable(id, mu)) throw ConfigError("family '" + id + "' does not apply to mu=(" + mu.str() + ")");
    }
    // registry order, no duplicates
    for (const auto& f : family_registry())
      if (std::find(cfg.families.begin(), cfg.families.end(), f.id) != cfg.families.end()) ids.push_back(f.id);
  }

  Report rep;
  rep.version = SUPERYANGIAN_VERSION;
  rep.config = cfg;
  rep.config.mu = mu;
  rep.families.resize(ids.size());

  Yangian Y0(ctx);
  const GaussData g = gauss_decompose(Y0, mu, gauss_order(lv));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    Yangian Y(ctx);
    for (;;) {
      const std::size_t k = next.fetch_add(1);
      if (k >= ids.size()) break;
      rep.families[k] = check_family(Y, g, ids[k], lv, cfg.readings);
      if (cfg.deterministic) rep.families[k].millis = 0;
    }
  };
  const int nthreads = std::min<int>(cfg.jobs, static_cast<int>(std::max<std::size_t>(ids.size(), 1)));
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errs(static_cast<std::size_t>(nthreads));
    for (int t = 0; t < nthreads; ++t)
      pool.emplace_back([&, t] {
        try {
          worker();
        } catch (...) {
          errs[static_cast<std::size_t>(t)] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (auto& ep : errs)
      if (ep) std::rethrow_exception(ep);
  }
  return rep;
}

}  // namespace sy
