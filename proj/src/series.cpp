#include "superyangian/series.hpp"

#include <stdexcept>

namespace sy {

namespace {

constexpr unsigned kBits[3] = {kU, kV, kW};

bool is_zero_exps(const Exps& e) { return e[0] == 0 && e[1] == 0 && e[2] == 0; }

int var_slot(unsigned var) {
  switch (var) {
    case kU: return 0;
    case kV: return 1;
    case kW: return 2;
    default: throw ConfigError("expected a single series variable");
  }
}

void require_same_order(const Series& a, const Series& b) {
  if (a.order() != b.order()) throw ConfigError("series have incompatible truncation orders");
}

bool is_scalar_one(const Element& e) { return e.size() == 1 && e.scalar_part() == 1; }

}  // namespace

std::string exps_text(const Exps& e, unsigned vars) {
  std::string out;
  const char* names[3] = {"u", "v", "w"};
  for (int k = 0; k < 3; ++k) {
    if (!(vars & kBits[k])) continue;
    if (!out.empty()) out += ',';
    out += names[k];
    out += '^';
    out += std::to_string(-e[static_cast<std::size_t>(k)]);
  }
  return out.empty() ? "1" : out;
}

Series::Series(unsigned vars, int R) : vars_(vars), R_(R) {
  if (R < 0) throw ConfigError("negative truncation order");
  if (vars > 7) throw ConfigError("bad variable mask");
  std::size_t n = 1;
  for (unsigned b : kBits)
    if (vars & b) n *= static_cast<std::size_t>(R + 1);
  coeffs_.resize(n);
  exact_.assign(n, 1);
}

bool Series::contains(const Exps& e) const {
  for (int k = 0; k < 3; ++k) {
    const int x = e[static_cast<std::size_t>(k)];
    if (vars_ & kBits[k]) {
      if (x < 0 || x > R_) return false;
    } else if (x != 0) {
      return false;
    }
  }
  return true;
}

std::size_t Series::index(const Exps& e) const {
  if (!contains(e)) throw std::out_of_range("exponent outside series support");
  std::size_t idx = 0;
  for (int k = 0; k < 3; ++k)
    if (vars_ & kBits[k]) idx = idx * static_cast<std::size_t>(R_ + 1) + static_cast<std::size_t>(e[static_cast<std::size_t>(k)]);
  return idx;
}

const Element& Series::coeff(int r) const {
  Exps e{0, 0, 0};
  for (int k = 0; k < 3; ++k)
    if (vars_ == kBits[k]) e[static_cast<std::size_t>(k)] = r;
  return at(e);
}

std::vector<Exps> Series::exponents() const {
  std::vector<Exps> out;
  const int ru = (vars_ & kU) ? R_ : 0, rv = (vars_ & kV) ? R_ : 0, rw = (vars_ & kW) ? R_ : 0;
  for (int a = 0; a <= ru; ++a)
    for (int b = 0; b <= rv; ++b)
      for (int c = 0; c <= rw; ++c) out.push_back({a, b, c});
  return out;
}

bool Series::operator==(const Series& o) const {
  return vars_ == o.vars_ && R_ == o.R_ && coeffs_ == o.coeffs_ && exact_ == o.exact_;
}

Series constant_series(const Element& c, int R) {
  Series s(0, R);
  s.at({0, 0, 0}) = c;
  return s;
}

Series make_series(unsigned var, const std::vector<Element>& coeffs) {
  if (coeffs.empty()) throw ConfigError("series needs at least the constant coefficient");
  const int slot = var_slot(var);
  Series s(var, static_cast<int>(coeffs.size()) - 1);
  for (std::size_t r = 0; r < coeffs.size(); ++r) {
    Exps e{0, 0, 0};
    e[static_cast<std::size_t>(slot)] = static_cast<int>(r);
    s.at(e) = coeffs[r];
  }
  return s;
}

Series rename_variable(const Series& s, unsigned to) {
  if (s.vars() == 0) return s;
  const int from = var_slot(s.vars()), dst = var_slot(to);
  Series out(to, s.order());
  for (const Exps& e : s.exponents()) {
    Exps f{0, 0, 0};
    f[static_cast<std::size_t>(dst)] = e[static_cast<std::size_t>(from)];
    out.at(f) = s.at(e);
    out.set_exact(f, s.exact(e));
  }
  return out;
}

namespace {

Series combine(const PrimeField& F, const Series& a, const Series& b, Coeff cb) {
  require_same_order(a, b);
  Series out(a.vars() | b.vars(), a.order());
  for (const Exps& e : out.exponents()) {
    Element c;
    bool ex = true;
    if (a.contains(e)) {
      c = a.at(e);
      ex = a.exact(e);
    }
    if (b.contains(e)) {
      add_scaled(F, c, b.at(e), cb);
      ex = ex && b.exact(e);
    }
    out.at(e) = std::move(c);
    out.set_exact(e, ex);
  }
  return out;
}

template <class Op>
Series cauchy(const Series& a, const Series& b, const PrimeField& F, Op op) {
  require_same_order(a, b);
  Series out(a.vars() | b.vars(), a.order());
  const auto ea = a.exponents(), eb = b.exponents();
  for (const Exps& x : ea) {
    for (const Exps& y : eb) {
      const Exps e{x[0] + y[0], x[1] + y[1], x[2] + y[2]};
      if (!out.contains(e)) continue;
      if (!(a.exact(x) && b.exact(y))) out.set_exact(e, false);
      const Element& ax = a.at(x);
      const Element& by = b.at(y);
      if (ax.is_zero() || by.is_zero()) continue;
      add_scaled(F, out.at(e), op(ax, by), 1);
    }
  }
  return out;
}

}  // namespace

Series series_add(const PrimeField& F, const Series& a, const Series& b) { return combine(F, a, b, 1); }
Series series_sub(const PrimeField& F, const Series& a, const Series& b) { return combine(F, a, b, F.neg(1)); }

Series series_scale(const PrimeField& F, const Series& a, Coeff c) {
  Series out = a;
  for (const Exps& e : out.exponents()) out.at(e) = scale(F, a.at(e), c);
  return out;
}

Series series_mul(PbwAlgebra& A, const Series& a, const Series& b) {
  return cauchy(a, b, A.field(), [&](const Element& x, const Element& y) { return A.mul(x, y); });
}

Series series_bracket(PbwAlgebra& A, const Series& a, const Series& b) {
  return cauchy(a, b, A.field(), [&](const Element& x, const Element& y) { return A.supercommutator(x, y); });
}

Series series_invert(PbwAlgebra& A, const Series& a) {
  const PrimeField& F = A.field();
  if (!is_scalar_one(a.at({0, 0, 0}))) throw std::domain_error("series_invert needs constant coefficient 1");
  Series out(a.vars(), a.order());
  const auto exps = a.exponents();
  out.at({0, 0, 0}) = A.scalar(1);
  out.set_exact({0, 0, 0}, a.exact({0, 0, 0}));
  for (const Exps& e : exps) {
    if (is_zero_exps(e)) continue;
    Element acc = A.zero();
    bool ex = true;
    for (const Exps& f : exps) {
      if (is_zero_exps(f) || f[0] > e[0] || f[1] > e[1] || f[2] > e[2]) continue;
      const Exps g{e[0] - f[0], e[1] - f[1], e[2] - f[2]};
      ex = ex && a.exact(f) && out.exact(g);
      if (a.at(f).is_zero() || out.at(g).is_zero()) continue;
      add_scaled(F, acc, A.mul(a.at(f), out.at(g)), F.neg(1));
    }
    out.at(e) = std::move(acc);
    out.set_exact(e, ex);
  }
  return out;
}

Series negate_variable(const PrimeField& F, const Series& a, unsigned var) {
  const int slot = var_slot(var);
  if (!(a.vars() & var)) throw ConfigError("negate_variable: variable not present");
  Series out = a;
  for (const Exps& e : a.exponents())
    if (e[static_cast<std::size_t>(slot)] & 1) out.at(e) = negate(F, a.at(e));
  return out;
}

Series shift_up(const Series& a, unsigned var) {
  const int slot = var_slot(var);
  if (!(a.vars() & var)) throw ConfigError("shift_up: variable not present");
  Series out(a.vars(), a.order());
  for (const Exps& e : out.exponents()) {
    Exps f = e;
    f[static_cast<std::size_t>(slot)] += 1;
    if (a.contains(f)) {
      out.at(e) = a.at(f);
      out.set_exact(e, a.exact(f));
    } else {
      out.set_exact(e, false);
    }
  }
  return out;
}

std::vector<Verdict> clear_denominator_compare(PbwAlgebra& A, const Series& lhs, const Series& rhs, Factor factor) {
  const PrimeField& F = A.field();
  Series x = lhs;
  auto diff = [&](const Series& s, unsigned p, unsigned q) { return series_sub(F, shift_up(s, p), shift_up(s, q)); };
  if (factor != Factor::none) {
    const unsigned need = factor == Factor::triple ? (kU | kV | kW) : (kU | kV);
    if ((x.vars() | need) != x.vars()) {
      // lift into the full variable set so shifts are defined
      Series lifted(x.vars() | need, x.order());
      for (const Exps& e : lifted.exponents()) {
        if (x.contains(e)) {
          lifted.at(e) = x.at(e);
          lifted.set_exact(e, x.exact(e));
        }
      }
      x = std::move(lifted);
    }
    x = diff(x, kU, kV);
    if (factor == Factor::triple) {
      x = diff(x, kU, kW);
      x = diff(x, kV, kW);
    }
  }
  Series d = series_sub(F, x, rhs);
  std::vector<Verdict> out;
  for (const Exps& e : d.exponents()) {
    if (!d.exact(e)) continue;
    Verdict v;
    v.exps = e;
    v.equal = d.at(e).is_zero();
    if (!v.equal) v.delta = d.at(e);
    out.push_back(std::move(v));
  }
  return out;
}

MatrixSeries::MatrixSeries(int rows, int cols, unsigned vars, int R)
    : rows_(rows), cols_(cols), vars_(vars), R_(R),
      cells_(static_cast<std::size_t>(rows * cols), Series(vars, R)) {
  if (rows < 0 || cols < 0) throw ConfigError("negative matrix dimension");
}

MatrixSeries MatrixSeries::block(int r0, int nr, int c0, int nc) const {
  if (r0 < 0 || c0 < 0 || r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("block outside matrix");
  MatrixSeries out(nr, nc, vars_, R_);
  for (int i = 1; i <= nr; ++i)
    for (int j = 1; j <= nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
  return out;
}

void MatrixSeries::set_block(int r0, int c0, const MatrixSeries& b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw std::out_of_range("block outside matrix");
  for (int i = 1; i <= b.rows(); ++i)
    for (int j = 1; j <= b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

bool MatrixSeries::operator==(const MatrixSeries& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && cells_ == o.cells_;
}

MatrixSeries identity_matrix(int n, unsigned vars, int R, const PbwAlgebra& A) {
  MatrixSeries m(n, n, vars, R);
  for (int i = 1; i <= n; ++i) m(i, i).at({0, 0, 0}) = A.scalar(1);
  return m;
}

MatrixSeries zero_matrix(int rows, int cols, unsigned vars, int R) { return MatrixSeries(rows, cols, vars, R); }

namespace {

void require_same_shape(const MatrixSeries& a, const MatrixSeries& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ConfigError("matrix shapes differ");
}

}  // namespace

MatrixSeries mat_add(const PrimeField& F, const MatrixSeries& a, const MatrixSeries& b) {
  require_same_shape(a, b);
  MatrixSeries out(a.rows(), a.cols(), a.vars() | b.vars(), a.order());
  for (int i = 1; i <= a.rows(); ++i)
    for (int j = 1; j <= a.cols(); ++j) out(i, j) = series_add(F, a(i, j), b(i, j));
  return out;
}

MatrixSeries mat_sub(const PrimeField& F, const MatrixSeries& a, const MatrixSeries& b) {
  require_same_shape(a, b);
  MatrixSeries out(a.rows(), a.cols(), a.vars() | b.vars(), a.order());
  for (int i = 1; i <= a.rows(); ++i)
    for (int j = 1; j <= a.cols(); ++j) out(i, j) = series_sub(F, a(i, j), b(i, j));
  return out;
}

MatrixSeries mat_scale(const PrimeField& F, const MatrixSeries& a, Coeff c) {
  MatrixSeries out = a;
  for (int i = 1; i <= a.rows(); ++i)
    for (int j = 1; j <= a.cols(); ++j) out(i, j) = series_scale(F, a(i, j), c);
  return out;
}

MatrixSeries mat_mul(PbwAlgebra& A, const MatrixSeries& a, const MatrixSeries& b) {
  if (a.cols() != b.rows()) throw ConfigError("matrix product shape mismatch");
  const PrimeField& F = A.field();
  MatrixSeries out(a.rows(), b.cols(), a.vars() | b.vars(), a.order());
  for (int i = 1; i <= a.rows(); ++i)
    for (int j = 1; j <= b.cols(); ++j) {
      Series acc(a.vars() | b.vars(), a.order());
      for (int k = 1; k <= a.cols(); ++k) acc = series_add(F, acc, series_mul(A, a(i, k), b(k, j)));
      out(i, j) = std::move(acc);
    }
  return out;
}

MatrixSeries mat_inverse(PbwAlgebra& A, const MatrixSeries& m) {
  if (m.rows() != m.cols()) throw ConfigError("mat_inverse needs a square matrix");
  const PrimeField& F = A.field();
  const int n = m.rows();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const Element& c = m(i, j).at({0, 0, 0});
      if (i == j ? !is_scalar_one(c) : !c.is_zero())
        throw std::domain_error("mat_inverse needs leading coefficient matrix I");
    }
  MatrixSeries out = identity_matrix(n, m.vars(), m.order(), A);
  if (n == 0) return out;
  const auto exps = m(1, 1).exponents();
  for (const Exps& e : exps) {
    if (is_zero_exps(e)) continue;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        Element acc = A.zero();
        bool ex = true;
        for (const Exps& f : exps) {
          if (is_zero_exps(f) || f[0] > e[0] || f[1] > e[1] || f[2] > e[2]) continue;
          const Exps g{e[0] - f[0], e[1] - f[1], e[2] - f[2]};
          for (int k = 1; k <= n; ++k) {
            ex = ex && m(i, k).exact(f) && out(k, j).exact(g);
            const Element& x = m(i, k).at(f);
            const Element& y = out(k, j).at(g);
            if (x.is_zero() || y.is_zero()) continue;
            add_scaled(F, acc, A.mul(x, y), F.neg(1));
          }
        }
        out(i, j).at(e) = std::move(acc);
        out(i, j).set_exact(e, ex);
      }
  }
  return out;
}

MatrixSeries quasideterminant(PbwAlgebra& Alg, const MatrixSeries& A, const MatrixSeries& B, const MatrixSeries& C,
                              const MatrixSeries& D) {
  if (A.rows() == 0) return D;
  return mat_sub(Alg.field(), D, mat_mul(Alg, mat_mul(Alg, C, mat_inverse(Alg, A)), B));
}

MatrixSeries t_matrix(Yangian& Y, int R) {
  if (R < 1) throw ConfigError("t_matrix needs R >= 1");
  const int n = Y.context().dim();
  MatrixSeries T(n, n, kU, R);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int r = 0; r <= R; ++r) T(i, j).at({r, 0, 0}) = Y.generator(i, j, r);
  return T;
}

}  // namespace sy
