#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "superyangian/series.hpp"

namespace sy {

enum class GaussMethod { quasideterminant, elimination };

/// Block Gauss decomposition T = F D E for a composition mu, truncated at order R.
/// All blocks are series in u. Blocks are 1-based: D(a), E(a,b) for a<b, F(b,a) for a<b.
struct GaussData {
  Composition mu;
  int R = 0;
  std::vector<MatrixSeries> D, Dp;
  std::map<std::pair<int, int>, MatrixSeries> E, F, Et, Ft;

  int n() const { return mu.n(); }
  const MatrixSeries& Dblock(int a) const;
  const MatrixSeries& Dpblock(int a) const;
  const MatrixSeries& Eblock(int a, int b) const;
  const MatrixSeries& Fblock(int b, int a) const;
  const MatrixSeries& Etblock(int a, int b) const;
  const MatrixSeries& Ftblock(int b, int a) const;

  /// Coefficients; r must lie in 0..R.
  const Element& d(int a, int i, int j, int r) const;
  const Element& dp(int a, int i, int j, int r) const;
  const Element& e(int a, int b, int i, int j, int r) const;
  const Element& f(int b, int a, int i, int j, int r) const;
  /// E_{a;i,j} := E_{a,a+1;i,j}; F_{a;i,j} := F_{a+1,a;i,j}.
  const Element& ea(int a, int i, int j, int r) const { return e(a, a + 1, i, j, r); }
  const Element& fa(int a, int i, int j, int r) const { return f(a + 1, a, i, j, r); }

  bool operator==(const GaussData& o) const;
};

GaussData gauss_decompose(Yangian& Y, const Composition& mu, int R, GaussMethod method = GaussMethod::quasideterminant);

/// Full (M+N)x(M+N) block matrices assembled from the data.
MatrixSeries assemble_D(const Yangian& Y, const GaussData& g);
MatrixSeries assemble_Dp(const Yangian& Y, const GaussData& g);
MatrixSeries assemble_E(const Yangian& Y, const GaussData& g);
MatrixSeries assemble_F(const Yangian& Y, const GaussData& g);

struct CheckOutcome {
  std::size_t checked = 0;
  std::vector<std::pair<std::string, std::string>> failures;  // (indices, delta text)
  bool passed() const { return failures.empty(); }
  void record(bool ok, const std::string& where, const Element& delta);
  void merge(const CheckOutcome& o);
};

/// F D E = T and E~ D' F~ = T^{-1}, plus the block identities and the chain-sum inverses.
CheckOutcome roundtrip_check(Yangian& Y, const GaussData& g);
/// Quasideterminant and elimination decompositions agree block by block.
CheckOutcome uniqueness_check(Yangian& Y, const Composition& mu, int R);
/// E_{a,b;i,j}^{(r)} = (-1)^{|k|_{b-1}} [E_{a,b-1;i,k}^{(r)}, E_{b-1;k,j}^{(1)}] and the F analogue.
/// Requires a + 2 <= b <= n and 1 <= k <= mu_{b-1}.
CheckOutcome recursion_check(Yangian& Y, const GaussData& g, int a, int b, int k);
/// Every admissible (a, b, k).
CheckOutcome recursion_check_all(Yangian& Y, const GaussData& g);
/// Parity homogeneity of D, E, F coefficients with the expected parities.
CheckOutcome parity_check(Yangian& Y, const GaussData& g);

/// E'_{a,a+2} = E_a E_{a+1} - E_{a,a+2} and F'_{a+2,a} = F_{a+1} F_a - F_{a+2,a}.
std::pair<MatrixSeries, MatrixSeries> primed_combinations(Yangian& Y, const GaussData& g, int a = 1);

/// Line-oriented dump `KIND a b | i j r | text`, KIND in {D, Dp, E, F}.
std::string gauss_dump(const GaussData& g);

}  // namespace sy
