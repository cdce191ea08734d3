#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "superyangian/gauss.hpp"

namespace sy {

/// Syntax error; `position` is the 0-based byte offset into the source.
class ParseError : public ConfigError {
 public:
  ParseError(const std::string& msg, std::size_t position);
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

enum class AtomKind { t, tp, D, Dp, E, F, Eab, Fba };

struct ExprAst {
  enum class Op { integer, atom, add, sub, mul, bracket };
  Op op = Op::integer;
  long long value = 0;    // integer literal
  AtomKind atom = AtomKind::t;
  std::vector<int> args;  // atom arguments in written order
  std::size_t pos = 0;
  std::unique_ptr<ExprAst> lhs, rhs;
};

/// expr := term (('+'|'-') term)*; term := factor ('*' factor)*;
/// factor := INT | atom | '[' expr ',' expr ']' | '(' expr ')'.
/// Atoms: t(i,j,r) tp(i,j,r) D(a;i,j;r) Dp(a;i,j;r) E(a;i,j;r) F(a;i,j;r) Eab(a,b;i,j;r) Fba(b,a;i,j;r).
std::unique_ptr<ExprAst> parse_expr(const std::string& src);

/// Evaluates parsed expressions in one Yangian. tp needs r <= R; D/Dp/E/F/Eab/Fba need a
/// composition and share one Gauss decomposition of order R, computed on first use.
class Evaluator {
 public:
  Evaluator(Yangian& Y, std::optional<Composition> mu, int R);
  ~Evaluator();

  Element eval(const ExprAst& e);
  Element eval(const std::string& src) { return eval(*parse_expr(src)); }

 private:
  Element atom(const ExprAst& e);
  const GaussData& gauss();

  Yangian& Y_;
  std::optional<Composition> mu_;
  int R_;
  std::unique_ptr<GaussData> g_;
  std::unique_ptr<MatrixSeries> tinv_;
};

}  // namespace sy
