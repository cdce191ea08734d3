#pragma once

#include <array>
#include <string>
#include <vector>

#include "superyangian/pbw.hpp"

namespace sy {

/// Variable bits. A series in u has mask kU; exponents are powers of u^{-1} etc.
enum : unsigned { kU = 1, kV = 2, kW = 4 };
using Exps = std::array<int, 3>;

std::string exps_text(const Exps& e, unsigned vars);

/// Truncated series in a subset of {u^-1, v^-1, w^-1} with Element coefficients.
/// Every exponent is in 0..R; each coefficient carries an exactness flag.
class Series {
 public:
  Series() = default;
  Series(unsigned vars, int R);

  unsigned vars() const { return vars_; }
  int order() const { return R_; }
  std::size_t size() const { return coeffs_.size(); }

  bool contains(const Exps& e) const;
  const Element& at(const Exps& e) const { return coeffs_[index(e)]; }
  Element& at(const Exps& e) { return coeffs_[index(e)]; }
  bool exact(const Exps& e) const { return exact_[index(e)] != 0; }
  void set_exact(const Exps& e, bool x) { exact_[index(e)] = x; }

  /// Single-variable convenience: coefficient of var^{-r}.
  const Element& coeff(int r) const;

  /// All admissible exponent tuples, lexicographic in (u, v, w).
  std::vector<Exps> exponents() const;

  bool operator==(const Series& o) const;

 private:
  std::size_t index(const Exps& e) const;

  unsigned vars_ = 0;
  int R_ = 0;
  std::vector<Element> coeffs_;
  std::vector<char> exact_;
};

/// c as a series with no variables.
Series constant_series(const Element& c, int R);
/// sum_r coeffs[r] var^{-r}, all exact; coeffs.size() must be R+1.
Series make_series(unsigned var, const std::vector<Element>& coeffs);
/// Same coefficients in a different single variable.
Series rename_variable(const Series& s, unsigned to);

Series series_add(const PrimeField& F, const Series& a, const Series& b);
Series series_sub(const PrimeField& F, const Series& a, const Series& b);
Series series_scale(const PrimeField& F, const Series& a, Coeff c);
Series series_mul(PbwAlgebra& A, const Series& a, const Series& b);
/// Coefficient-wise supercommutator of the Cauchy product.
Series series_bracket(PbwAlgebra& A, const Series& a, const Series& b);
/// Inverse of a series whose constant coefficient is the scalar 1.
Series series_invert(PbwAlgebra& A, const Series& a);
Series negate_variable(const PrimeField& F, const Series& a, unsigned var);
/// var * a with positive powers dropped; the top coefficient becomes inexact.
Series shift_up(const Series& a, unsigned var);

enum class Factor { none, u_minus_v, triple };

struct Verdict {
  Exps exps{};
  bool equal = true;
  Element delta;  // factor*lhs - rhs
};

/// factor*lhs == rhs on every exponent where both sides are exact.
std::vector<Verdict> clear_denominator_compare(PbwAlgebra& A, const Series& lhs, const Series& rhs, Factor factor);

class MatrixSeries {
 public:
  MatrixSeries() = default;
  MatrixSeries(int rows, int cols, unsigned vars, int R);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  unsigned vars() const { return vars_; }
  int order() const { return R_; }
  /// 1-based entries.
  Series& operator()(int i, int j) { return cells_[index(i, j)]; }
  const Series& operator()(int i, int j) const { return cells_[index(i, j)]; }
  /// Sub-block rows r0+1..r0+nr, cols c0+1..c0+nc.
  MatrixSeries block(int r0, int nr, int c0, int nc) const;
  void set_block(int r0, int c0, const MatrixSeries& b);

  bool operator==(const MatrixSeries& o) const;

 private:
  std::size_t index(int i, int j) const {
    if (i < 1 || i > rows_ || j < 1 || j > cols_)
      throw ConfigError("matrix entry (" + std::to_string(i) + "," + std::to_string(j) + ") outside " +
                        std::to_string(rows_) + "x" + std::to_string(cols_));
    return static_cast<std::size_t>((i - 1) * cols_ + (j - 1));
  }
  int rows_ = 0, cols_ = 0;
  unsigned vars_ = 0;
  int R_ = 0;
  std::vector<Series> cells_;
};

MatrixSeries identity_matrix(int n, unsigned vars, int R, const PbwAlgebra& A);
MatrixSeries zero_matrix(int rows, int cols, unsigned vars, int R);
MatrixSeries mat_add(const PrimeField& F, const MatrixSeries& a, const MatrixSeries& b);
MatrixSeries mat_sub(const PrimeField& F, const MatrixSeries& a, const MatrixSeries& b);
MatrixSeries mat_scale(const PrimeField& F, const MatrixSeries& a, Coeff c);
MatrixSeries mat_mul(PbwAlgebra& A, const MatrixSeries& a, const MatrixSeries& b);
/// Requires the all-zero-exponent coefficient matrix to be the identity.
MatrixSeries mat_inverse(PbwAlgebra& A, const MatrixSeries& m);
/// D - C A^{-1} B.
MatrixSeries quasideterminant(PbwAlgebra& Alg, const MatrixSeries& A, const MatrixSeries& B, const MatrixSeries& C,
                              const MatrixSeries& D);

/// T(u) with entries sum_{r=0}^{R} t_ij^(r) u^{-r}.
MatrixSeries t_matrix(Yangian& Y, int R);

}  // namespace sy
