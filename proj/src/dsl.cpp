#include "superyangian/dsl.hpp"

#include <cctype>

namespace sy {

ParseError::ParseError(const std::string& msg, std::size_t position)
    : ConfigError("parse error at position " + std::to_string(position) + ": " + msg), pos_(position) {}

namespace {

struct AtomSpec {
  const char* name;
  AtomKind kind;
  const char* seps;  // separators between the arguments
};

// longest names first so "Dp" wins over "D"
const AtomSpec kAtoms[] = {
    {"Eab", AtomKind::Eab, ",;,;"}, {"Fba", AtomKind::Fba, ",;,;"}, {"tp", AtomKind::tp, ",,"},
    {"Dp", AtomKind::Dp, ";,;"},    {"t", AtomKind::t, ",,"},        {"D", AtomKind::D, ";,;"},
    {"E", AtomKind::E, ";,;"},      {"F", AtomKind::F, ";,;"},
};

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  std::unique_ptr<ExprAst> run() {
    auto e = expr();
    skip();
    if (i_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[i_] + "'", i_);
    return e;
  }

 private:
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool peek(char c) {
    skip();
    return i_ < s_.size() && s_[i_] == c;
  }
  void expect(char c) {
    skip();
    if (i_ >= s_.size()) throw ParseError(std::string("expected '") + c + "' but input ended", i_);
    if (s_[i_] != c) throw ParseError(std::string("expected '") + c + "', got '" + s_[i_] + "'", i_);
    ++i_;
  }

  static std::unique_ptr<ExprAst> binary(ExprAst::Op op, std::unique_ptr<ExprAst> a, std::unique_ptr<ExprAst> b,
                                         std::size_t pos) {
    auto n = std::make_unique<ExprAst>();
    n->op = op;
    n->pos = pos;
    n->lhs = std::move(a);
    n->rhs = std::move(b);
    return n;
  }

  std::unique_ptr<ExprAst> expr() {
    auto e = term();
    for (;;) {
      skip();
      if (i_ < s_.size() && (s_[i_] == '+' || s_[i_] == '-')) {
        const std::size_t pos = i_;
        const auto op = s_[i_++] == '+' ? ExprAst::Op::add : ExprAst::Op::sub;
        e = binary(op, std::move(e), term(), pos);
      } else {
        return e;
      }
    }
  }

  std::unique_ptr<ExprAst> term() {
    auto e = factor();
    while (peek('*')) {
      const std::size_t pos = i_++;
      e = binary(ExprAst::Op::mul, std::move(e), factor(), pos);
    }
    return e;
  }

  long long integer() {
    skip();
    const std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (i_ == start) throw ParseError(i_ < s_.size() ? std::string("expected integer, got '") + s_[i_] + "'" : "expected integer but input ended", i_);
    if (i_ - start > 18) throw ParseError("integer literal too long", start);
    return std::stoll(s_.substr(start, i_ - start));
  }

  std::unique_ptr<ExprAst> factor() {
    skip();
    const std::size_t pos = i_;
    if (i_ >= s_.size()) throw ParseError("unexpected end of input", i_);
    const char c = s_[i_];
    if (c == '[') {
      ++i_;
      auto a = expr();
      expect(',');
      auto b = expr();
      expect(']');
      return binary(ExprAst::Op::bracket, std::move(a), std::move(b), pos);
    }
    if (c == '(') {
      ++i_;
      auto a = expr();
      expect(')');
      return a;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      auto n = std::make_unique<ExprAst>();
      n->pos = pos;
      n->value = integer();
      return n;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t end = i_;
      while (end < s_.size() && std::isalpha(static_cast<unsigned char>(s_[end]))) ++end;
      const std::string name = s_.substr(i_, end - i_);
      for (const AtomSpec& a : kAtoms) {
        if (name != a.name) continue;
        i_ = end;
        auto n = std::make_unique<ExprAst>();
        n->op = ExprAst::Op::atom;
        n->atom = a.kind;
        n->pos = pos;
        expect('(');
        n->args.push_back(static_cast<int>(integer()));
        for (const char* sep = a.seps; *sep; ++sep) {
          expect(*sep);
          n->args.push_back(static_cast<int>(integer()));
        }
        expect(')');
        return n;
      }
      throw ParseError("unknown atom '" + name + "'", pos);
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos);
  }

  const std::string& s_;
  std::size_t i_ = 0;
};

}  // namespace

std::unique_ptr<ExprAst> parse_expr(const std::string& src) { return Parser(src).run(); }

Evaluator::Evaluator(Yangian& Y, std::optional<Composition> mu, int R) : Y_(Y), mu_(std::move(mu)), R_(R) {
  if (R < 1) throw ConfigError("series order must be >= 1");
  if (mu_ && mu_->total() != Y.context().dim())
    throw ConfigError("mu sums to " + std::to_string(mu_->total()) + ", expected M+N = " + std::to_string(Y.context().dim()));
}

Evaluator::~Evaluator() = default;

const GaussData& Evaluator::gauss() {
  if (!mu_) throw ConfigError("parabolic atoms need --mu");
  if (!g_) g_ = std::make_unique<GaussData>(gauss_decompose(Y_, *mu_, R_));
  return *g_;
}

Element Evaluator::atom(const ExprAst& e) {
  const auto& a = e.args;
  auto where = [&] { return " (atom at position " + std::to_string(e.pos) + ")"; };
  auto level = [&](int r, int hi) {
    if (r < 0 || r > hi) throw ConfigError("level " + std::to_string(r) + " outside 0.." + std::to_string(hi) + where());
  };
  const int n = Y_.context().dim();
  auto index = [&](int i, int hi) {
    if (i < 1 || i > hi) throw ConfigError("index " + std::to_string(i) + " outside 1.." + std::to_string(hi) + where());
  };
  switch (e.atom) {
    case AtomKind::t:
      index(a[0], n);
      index(a[1], n);
      level(a[2], 255);
      return a[2] == 0 ? Y_.scalar(a[0] == a[1]) : Y_.generator(a[0], a[1], a[2]);
    case AtomKind::tp: {
      index(a[0], n);
      index(a[1], n);
      level(a[2], R_);
      if (!tinv_) tinv_ = std::make_unique<MatrixSeries>(mat_inverse(Y_, t_matrix(Y_, R_)));
      return (*tinv_)(a[0], a[1]).coeff(a[2]);
    }
    default:
      break;
  }
  const GaussData& g = gauss();
  const int nb = g.n();
  auto block = [&](int b) {
    if (b < 1 || b > nb) throw ConfigError("block " + std::to_string(b) + " outside 1.." + std::to_string(nb) + where());
  };
  switch (e.atom) {
    case AtomKind::D:
    case AtomKind::Dp:
      block(a[0]);
      index(a[1], g.mu.size(a[0]));
      index(a[2], g.mu.size(a[0]));
      level(a[3], R_);
      return e.atom == AtomKind::D ? g.d(a[0], a[1], a[2], a[3]) : g.dp(a[0], a[1], a[2], a[3]);
    case AtomKind::E:
      block(a[0]);
      block(a[0] + 1);
      index(a[1], g.mu.size(a[0]));
      index(a[2], g.mu.size(a[0] + 1));
      level(a[3], R_);
      return g.ea(a[0], a[1], a[2], a[3]);
    case AtomKind::F:
      block(a[0]);
      block(a[0] + 1);
      index(a[1], g.mu.size(a[0] + 1));
      index(a[2], g.mu.size(a[0]));
      level(a[3], R_);
      return g.fa(a[0], a[1], a[2], a[3]);
    case AtomKind::Eab:
    case AtomKind::Fba: {
      const bool isE = e.atom == AtomKind::Eab;
      const int lo = isE ? a[0] : a[1], hi = isE ? a[1] : a[0];
      block(lo);
      block(hi);
      if (lo >= hi) throw ConfigError(std::string(isE ? "Eab needs a < b" : "Fba needs b > a") + where());
      index(a[2], g.mu.size(isE ? lo : hi));
      index(a[3], g.mu.size(isE ? hi : lo));
      level(a[4], R_);
      return isE ? g.e(lo, hi, a[2], a[3], a[4]) : g.f(hi, lo, a[2], a[3], a[4]);
    }
    default:
      throw ConfigError("unhandled atom");
  }
}

Element Evaluator::eval(const ExprAst& e) {
  const PrimeField& F = Y_.field();
  switch (e.op) {
    case ExprAst::Op::integer:
      return Y_.scalar(static_cast<std::int64_t>(F.reduce(e.value)));
    case ExprAst::Op::atom:
      return atom(e);
    case ExprAst::Op::add:
      return add(F, eval(*e.lhs), eval(*e.rhs));
    case ExprAst::Op::sub:
      return sub(F, eval(*e.lhs), eval(*e.rhs));
    case ExprAst::Op::mul:
      return Y_.mul(eval(*e.lhs), eval(*e.rhs));
    case ExprAst::Op::bracket: {
      Element x = eval(*e.lhs), y = eval(*e.rhs);
      if (!Y_.is_homogeneous(x) || !Y_.is_homogeneous(y))
        throw ConfigError("bracket of an inhomogeneous element at position " + std::to_string(e.pos));
      return Y_.supercommutator(x, y);
    }
  }
  throw ConfigError("bad expression node");
}

}  // namespace sy
