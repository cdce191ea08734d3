#include "superyangian/gauss.hpp"

#include <sstream>
#include <stdexcept>

namespace sy {

namespace {

const MatrixSeries& lookup(const std::map<std::pair<int, int>, MatrixSeries>& m, int x, int y, const char* what) {
  auto it = m.find({x, y});
  if (it == m.end())
    throw ConfigError(std::string(what) + " block (" + std::to_string(x) + "," + std::to_string(y) + ") not available");
  return it->second;
}

const Element& entry(const MatrixSeries& m, int i, int j, int r, int R) {
  if (i < 1 || i > m.rows() || j < 1 || j > m.cols()) throw ConfigError("parabolic index outside block");
  if (r < 0 || r > R) throw ConfigError("level " + std::to_string(r) + " outside computed order " + std::to_string(R));
  return m(i, j).coeff(r);
}

std::string idx(std::initializer_list<int> xs) {
  std::string out;
  for (int x : xs) {
    if (!out.empty()) out += ',';
    out += std::to_string(x);
  }
  return out;
}

void compare_matrices(Yangian& Y, const MatrixSeries& got, const MatrixSeries& want, const std::string& label,
                      CheckOutcome& out) {
  const PrimeField& F = Y.field();
  for (int i = 1; i <= got.rows(); ++i)
    for (int j = 1; j <= got.cols(); ++j)
      for (const Exps& e : got(i, j).exponents()) {
        if (!got(i, j).exact(e) || !want(i, j).exact(e)) continue;
        Element d = sub(F, got(i, j).at(e), want(i, j).at(e));
        out.record(d.is_zero(), label + " (" + idx({i, j, e[0]}) + ")", d);
      }
}

}  // namespace

const MatrixSeries& GaussData::Dblock(int a) const {
  if (a < 1 || a > n()) throw ConfigError("block index out of range");
  return D[static_cast<std::size_t>(a - 1)];
}
const MatrixSeries& GaussData::Dpblock(int a) const {
  if (a < 1 || a > n()) throw ConfigError("block index out of range");
  return Dp[static_cast<std::size_t>(a - 1)];
}
const MatrixSeries& GaussData::Eblock(int a, int b) const { return lookup(E, a, b, "E"); }
const MatrixSeries& GaussData::Fblock(int b, int a) const { return lookup(F, b, a, "F"); }
const MatrixSeries& GaussData::Etblock(int a, int b) const { return lookup(Et, a, b, "E~"); }
const MatrixSeries& GaussData::Ftblock(int b, int a) const { return lookup(Ft, b, a, "F~"); }

const Element& GaussData::d(int a, int i, int j, int r) const { return entry(Dblock(a), i, j, r, R); }
const Element& GaussData::dp(int a, int i, int j, int r) const { return entry(Dpblock(a), i, j, r, R); }
const Element& GaussData::e(int a, int b, int i, int j, int r) const { return entry(Eblock(a, b), i, j, r, R); }
const Element& GaussData::f(int b, int a, int i, int j, int r) const { return entry(Fblock(b, a), i, j, r, R); }

bool GaussData::operator==(const GaussData& o) const {
  return mu == o.mu && R == o.R && D == o.D && Dp == o.Dp && E == o.E && F == o.F && Et == o.Et && Ft == o.Ft;
}

void CheckOutcome::record(bool ok, const std::string& where, const Element& delta) {
  ++checked;
  if (!ok) failures.emplace_back(where, to_text(delta));
}

void CheckOutcome::merge(const CheckOutcome& o) {
  checked += o.checked;
  failures.insert(failures.end(), o.failures.begin(), o.failures.end());
}

GaussData gauss_decompose(Yangian& Y, const Composition& mu, int R, GaussMethod method) {
  if (mu.total() != Y.context().dim())
    throw ConfigError("composition " + mu.str() + " does not sum to M+N = " + std::to_string(Y.context().dim()));
  if (R < 1) throw ConfigError("Gauss decomposition needs R >= 1");
  const PrimeField& Fld = Y.field();
  const int n = mu.n();
  MatrixSeries T = t_matrix(Y, R);
  GaussData g;
  g.mu = mu;
  g.R = R;
  g.D.resize(static_cast<std::size_t>(n));
  g.Dp.resize(static_cast<std::size_t>(n));

  if (method == GaussMethod::quasideterminant) {
    for (int a = 1; a <= n; ++a) {
      const int L = mu.offset(a), ma = mu.size(a);
      MatrixSeries S = mat_inverse(Y, T.block(0, L, 0, L));
      MatrixSeries rowA = T.block(L, ma, 0, L), colA = T.block(0, L, L, ma);
      auto qd = [&](const MatrixSeries& C, const MatrixSeries& B, const MatrixSeries& Dm) {
        if (L == 0) return Dm;
        return mat_sub(Fld, Dm, mat_mul(Y, mat_mul(Y, C, S), B));
      };
      MatrixSeries Da = qd(rowA, colA, T.block(L, ma, L, ma));
      MatrixSeries Dpa = mat_inverse(Y, Da);
      for (int b = a + 1; b <= n; ++b) {
        const int Lb = mu.offset(b), mb = mu.size(b);
        g.E[{a, b}] = mat_mul(Y, Dpa, qd(rowA, T.block(0, L, Lb, mb), T.block(L, ma, Lb, mb)));
        g.F[{b, a}] = mat_mul(Y, qd(T.block(Lb, mb, 0, L), colA, T.block(Lb, mb, L, ma)), Dpa);
      }
      g.D[static_cast<std::size_t>(a - 1)] = std::move(Da);
      g.Dp[static_cast<std::size_t>(a - 1)] = std::move(Dpa);
    }
    if (n >= 2 && current_faults().gauss_d2) {
      Element& c = g.D[1](1, 1).at({1, 0, 0});
      add_scaled(Fld, c, Y.scalar(1), 1);
    }
  } else {
    // block elimination with Schur complements
    std::map<std::pair<int, int>, MatrixSeries> A;
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b) A[{a, b}] = T.block(mu.offset(a), mu.size(a), mu.offset(b), mu.size(b));
    for (int a = 1; a <= n; ++a) {
      MatrixSeries Da = A[{a, a}];
      MatrixSeries Dpa = mat_inverse(Y, Da);
      for (int b = a + 1; b <= n; ++b) {
        g.E[{a, b}] = mat_mul(Y, Dpa, A[{a, b}]);
        g.F[{b, a}] = mat_mul(Y, A[{b, a}], Dpa);
      }
      for (int b = a + 1; b <= n; ++b)
        for (int c = a + 1; c <= n; ++c) A[{b, c}] = mat_sub(Fld, A[{b, c}], mat_mul(Y, g.F[{b, a}], A[{a, c}]));
      g.D[static_cast<std::size_t>(a - 1)] = std::move(Da);
      g.Dp[static_cast<std::size_t>(a - 1)] = std::move(Dpa);
    }
  }

  // chain sums: E~_{a,b} = -sum_{a<c<=b} E_{a,c} E~_{c,b};  F~_{b,a} = -sum_{a<=c<b} F_{b,c} F~_{c,a}
  for (int b = 1; b <= n; ++b) {
    for (int a = b - 1; a >= 1; --a) {
      MatrixSeries acc = zero_matrix(mu.size(a), mu.size(b), kU, R);
      for (int c = a + 1; c <= b; ++c) {
        const MatrixSeries term = c == b ? g.E[{a, b}] : mat_mul(Y, g.E[{a, c}], g.Et[{c, b}]);
        acc = mat_sub(Fld, acc, term);
      }
      g.Et[{a, b}] = std::move(acc);
    }
  }
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      MatrixSeries acc = zero_matrix(mu.size(b), mu.size(a), kU, R);
      for (int c = a; c < b; ++c) {
        const MatrixSeries term = c == a ? g.F[{b, a}] : mat_mul(Y, g.F[{b, c}], g.Ft[{c, a}]);
        acc = mat_sub(Fld, acc, term);
      }
      g.Ft[{b, a}] = std::move(acc);
    }
  }
  return g;
}

namespace {

MatrixSeries assemble(const Yangian& Y, const GaussData& g, int kind) {
  const int N = g.mu.total();
  MatrixSeries M = kind >= 2 ? identity_matrix(N, kU, g.R, Y) : zero_matrix(N, N, kU, g.R);
  for (int a = 1; a <= g.n(); ++a) {
    const int La = g.mu.offset(a);
    if (kind == 0) M.set_block(La, La, g.Dblock(a));
    if (kind == 1) M.set_block(La, La, g.Dpblock(a));
    for (int b = a + 1; b <= g.n(); ++b) {
      const int Lb = g.mu.offset(b);
      if (kind == 2) M.set_block(La, Lb, g.Eblock(a, b));
      if (kind == 3) M.set_block(Lb, La, g.Fblock(b, a));
      if (kind == 4) M.set_block(La, Lb, g.Etblock(a, b));
      if (kind == 5) M.set_block(Lb, La, g.Ftblock(b, a));
    }
  }
  return M;
}

}  // namespace

MatrixSeries assemble_D(const Yangian& Y, const GaussData& g) { return assemble(Y, g, 0); }
MatrixSeries assemble_Dp(const Yangian& Y, const GaussData& g) { return assemble(Y, g, 1); }
MatrixSeries assemble_E(const Yangian& Y, const GaussData& g) { return assemble(Y, g, 2); }
MatrixSeries assemble_F(const Yangian& Y, const GaussData& g) { return assemble(Y, g, 3); }

CheckOutcome roundtrip_check(Yangian& Y, const GaussData& g) {
  const PrimeField& Fld = Y.field();
  CheckOutcome out;
  MatrixSeries T = t_matrix(Y, g.R);
  MatrixSeries Tinv = mat_inverse(Y, T);
  MatrixSeries Dm = assemble_D(Y, g), Dpm = assemble_Dp(Y, g), Em = assemble_E(Y, g), Fm = assemble_F(Y, g);
  MatrixSeries Etm = assemble(Y, g, 4), Ftm = assemble(Y, g, 5);

  compare_matrices(Y, mat_mul(Y, mat_mul(Y, Fm, Dm), Em), T, "FDE=T", out);
  compare_matrices(Y, mat_mul(Y, mat_mul(Y, Etm, Dpm), Ftm), Tinv, "E~D'F~=T'", out);
  compare_matrices(Y, mat_inverse(Y, Em), Etm, "E^-1=E~", out);
  compare_matrices(Y, mat_inverse(Y, Fm), Ftm, "F^-1=F~", out);
  for (int a = 1; a <= g.n(); ++a)
    compare_matrices(Y, mat_mul(Y, g.Dblock(a), g.Dpblock(a)), identity_matrix(g.mu.size(a), kU, g.R, Y),
                     "D D'=I a=" + std::to_string(a), out);

  // block identities of T and T^{-1}
  const int n = g.n();
  auto Tb = [&](const MatrixSeries& M, int a, int b) {
    return M.block(g.mu.offset(a), g.mu.size(a), g.mu.offset(b), g.mu.size(b));
  };
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) {
      // T_{a,b} = sum_{c <= min(a,b)} F_{a,c} D_c E_{c,b} with F_{a,a} = E_{b,b} = I
      MatrixSeries acc = zero_matrix(g.mu.size(a), g.mu.size(b), kU, g.R);
      for (int c = 1; c <= std::min(a, b); ++c) {
        MatrixSeries left = c == a ? g.Dblock(c) : mat_mul(Y, g.Fblock(a, c), g.Dblock(c));
        acc = mat_add(Fld, acc, c == b ? left : mat_mul(Y, left, g.Eblock(c, b)));
      }
      compare_matrices(Y, acc, Tb(T, a, b), "T block " + idx({a, b}), out);
      // T'_{a,b} = sum_{c >= max(a,b)} E~_{a,c} D'_c F~_{c,b}
      MatrixSeries accp = zero_matrix(g.mu.size(a), g.mu.size(b), kU, g.R);
      for (int c = std::max(a, b); c <= n; ++c) {
        MatrixSeries left = c == a ? g.Dpblock(c) : mat_mul(Y, g.Etblock(a, c), g.Dpblock(c));
        accp = mat_add(Fld, accp, c == b ? left : mat_mul(Y, left, g.Ftblock(c, b)));
      }
      compare_matrices(Y, accp, Tb(Tinv, a, b), "T' block " + idx({a, b}), out);
    }
  }
  return out;
}

CheckOutcome uniqueness_check(Yangian& Y, const Composition& mu, int R) {
  GaussData q = gauss_decompose(Y, mu, R, GaussMethod::quasideterminant);
  GaussData e = gauss_decompose(Y, mu, R, GaussMethod::elimination);
  CheckOutcome out;
  for (int a = 1; a <= mu.n(); ++a) {
    compare_matrices(Y, q.Dblock(a), e.Dblock(a), "D a=" + std::to_string(a), out);
    compare_matrices(Y, q.Dpblock(a), e.Dpblock(a), "D' a=" + std::to_string(a), out);
    for (int b = a + 1; b <= mu.n(); ++b) {
      compare_matrices(Y, q.Eblock(a, b), e.Eblock(a, b), "E " + idx({a, b}), out);
      compare_matrices(Y, q.Fblock(b, a), e.Fblock(b, a), "F " + idx({b, a}), out);
    }
  }
  return out;
}

CheckOutcome recursion_check(Yangian& Y, const GaussData& g, int a, int b, int k) {
  if (!(a >= 1 && a + 2 <= b && b <= g.n()))
    throw ConfigError("recursion check needs 1 <= a, a+2 <= b <= n (got a=" + std::to_string(a) +
                      ", b=" + std::to_string(b) + ", n=" + std::to_string(g.n()) + ")");
  if (k < 1 || k > g.mu.size(b - 1)) throw ConfigError("k outside block b-1");
  const PrimeField& Fld = Y.field();
  unsigned sbit = restricted_parity(g.mu, Y.context().sigma(), b - 1, k);
  if (current_faults().recursion_sign) sbit ^= 1U;
  const Coeff s = Fld.sign(sbit);
  CheckOutcome out;
  for (int i = 1; i <= g.mu.size(a); ++i)
    for (int j = 1; j <= g.mu.size(b); ++j)
      for (int r = 1; r <= g.R; ++r) {
        Element rhs = scale(Fld, Y.supercommutator(g.e(a, b - 1, i, k, r), g.e(b - 1, b, k, j, 1)), s);
        Element d = sub(Fld, g.e(a, b, i, j, r), rhs);
        out.record(d.is_zero(), "E a,b,k,i,j,r=" + idx({a, b, k, i, j, r}), d);
        Element rhsf = scale(Fld, Y.supercommutator(g.f(b, b - 1, j, k, 1), g.f(b - 1, a, k, i, r)), s);
        Element df = sub(Fld, g.f(b, a, j, i, r), rhsf);
        out.record(df.is_zero(), "F b,a,k,j,i,r=" + idx({b, a, k, j, i, r}), df);
      }
  return out;
}

CheckOutcome recursion_check_all(Yangian& Y, const GaussData& g) {
  CheckOutcome out;
  for (int a = 1; a <= g.n(); ++a)
    for (int b = a + 2; b <= g.n(); ++b)
      for (int k = 1; k <= g.mu.size(b - 1); ++k) out.merge(recursion_check(Y, g, a, b, k));
  return out;
}

CheckOutcome parity_check(Yangian& Y, const GaussData& g) {
  const std::string& s = Y.context().sigma();
  CheckOutcome out;
  auto check = [&](const Element& e, unsigned want, const std::string& where) {
    bool ok = Y.is_homogeneous(e) && (e.is_zero() || Y.parity(e) == want);
    out.record(ok, where, e);
  };
  for (int a = 1; a <= g.n(); ++a) {
    for (int i = 1; i <= g.mu.size(a); ++i)
      for (int j = 1; j <= g.mu.size(a); ++j) {
        const unsigned p = restricted_parity(g.mu, s, a, i) ^ restricted_parity(g.mu, s, a, j);
        Element d0 = sub(Y.field(), g.d(a, i, j, 0), Y.scalar(i == j ? 1 : 0));
        out.record(d0.is_zero(), "D^(0) " + idx({a, i, j}), d0);
        for (int r = 1; r <= g.R; ++r) {
          check(g.d(a, i, j, r), p, "D " + idx({a, i, j, r}));
          check(g.dp(a, i, j, r), p, "D' " + idx({a, i, j, r}));
        }
      }
    for (int b = a + 1; b <= g.n(); ++b)
      for (int r = 1; r <= g.R; ++r) {
        for (int i = 1; i <= g.mu.size(a); ++i)
          for (int j = 1; j <= g.mu.size(b); ++j)
            check(g.e(a, b, i, j, r), restricted_parity(g.mu, s, a, i) ^ restricted_parity(g.mu, s, b, j),
                  "E " + idx({a, b, i, j, r}));
        for (int i = 1; i <= g.mu.size(b); ++i)
          for (int j = 1; j <= g.mu.size(a); ++j)
            check(g.f(b, a, i, j, r), restricted_parity(g.mu, s, b, i) ^ restricted_parity(g.mu, s, a, j),
                  "F " + idx({b, a, i, j, r}));
      }
  }
  return out;
}

std::pair<MatrixSeries, MatrixSeries> primed_combinations(Yangian& Y, const GaussData& g, int a) {
  if (a < 1 || a + 2 > g.n()) throw ConfigError("primed combinations need three consecutive blocks");
  const PrimeField& Fld = Y.field();
  MatrixSeries Ep = mat_sub(Fld, mat_mul(Y, g.Eblock(a, a + 1), g.Eblock(a + 1, a + 2)), g.Eblock(a, a + 2));
  MatrixSeries Fp = mat_sub(Fld, mat_mul(Y, g.Fblock(a + 2, a + 1), g.Fblock(a + 1, a)), g.Fblock(a + 2, a));
  return {Ep, Fp};
}

std::string gauss_dump(const GaussData& g) {
  std::ostringstream os;
  auto emit = [&](const char* kind, int x, int y, const MatrixSeries& m, int r0) {
    for (int i = 1; i <= m.rows(); ++i)
      for (int j = 1; j <= m.cols(); ++j)
        for (int r = r0; r <= g.R; ++r)
          os << kind << ' ' << x << ' ' << y << " | " << i << ' ' << j << ' ' << r << " | "
             << to_text(m(i, j).coeff(r)) << '\n';
  };
  for (int a = 1; a <= g.n(); ++a) {
    emit("D", a, a, g.Dblock(a), 0);
    emit("Dp", a, a, g.Dpblock(a), 0);
  }
  for (int a = 1; a <= g.n(); ++a)
    for (int b = a + 1; b <= g.n(); ++b) {
      emit("E", a, b, g.Eblock(a, b), 1);
      emit("F", b, a, g.Fblock(b, a), 1);
    }
  return os.str();
}

}  // namespace sy
