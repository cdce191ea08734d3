#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "superyangian/dsl.hpp"
#include "superyangian/faults.hpp"

using namespace sy;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream o, e;
  int code = run_cli(args, o, e);
  return {code, o.str(), e.str()};
}

}  // namespace

TEST_CASE("parser") {
  auto a = parse_expr(" [ t(1,2,1) , t(2,1,1) ] ");
  CHECK(a->op == ExprAst::Op::bracket);
  auto b = parse_expr("2*D(1;1,1;2) - Eab(1,3;1,1;1) + (Fba(3,1;1,1;1))");
  CHECK(b->op == ExprAst::Op::add);
  auto d = parse_expr("Dp(2;1,1;1)");
  CHECK(d->atom == AtomKind::Dp);
  CHECK(d->args == std::vector<int>{2, 1, 1, 1});

  auto pos = [](const std::string& s) {
    try {
      parse_expr(s);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1L;
  };
  CHECK(pos("[t(1,1,1)") == 9);
  CHECK(pos("t(1,1,1) +") == 10);
  CHECK(pos("x(1)") == 0);
  CHECK(pos("D(1,1,1,1)") == 3);  // D wants semicolons
  CHECK(pos("t(1,1,1))") == 8);
  CHECK(pos("-t(1,1,1)") == 0);  // no unary minus
  CHECK(pos("3 t(1,1,1)") == 2);
}

TEST_CASE("evaluation") {
  Yangian Y(make_context(3, 1, 1, "01"));
  Evaluator ev(Y, Composition({1, 1}), 3);
  CHECK(to_text(ev.eval("[t(1,2,1), t(2,1,1)]")) == "1*t(2,2,1) + 2*t(1,1,1)");
  CHECK(to_text(ev.eval("t(1,1,0)")) == "1");
  CHECK(to_text(ev.eval("t(1,2,0)")) == "0");
  CHECK(to_text(ev.eval("7")) == "1");
  CHECK(ev.eval("E(1;1,1;1)") == Y.generator(1, 2, 1));
  CHECK(ev.eval("Eab(1,2;1,1;2)") == ev.eval("E(1;1,1;2)"));
  CHECK(ev.eval("Fba(2,1;1,1;2)") == ev.eval("F(1;1,1;2)"));
  // t'^(1) = -t^(1)
  CHECK(to_text(ev.eval("tp(1,1,1)")) == "2*t(1,1,1)");
  CHECK(to_text(ev.eval("D(1;1,1;1)*Dp(1;1,1;1) + D(1;1,1;2) + Dp(1;1,1;2)")) == "0");
  CHECK_THROWS_AS(ev.eval("t(3,1,1)"), ConfigError);
  CHECK_THROWS_AS(ev.eval("tp(1,1,4)"), ConfigError);
  CHECK_THROWS_AS(ev.eval("D(3;1,1;1)"), ConfigError);
  CHECK_THROWS_AS(ev.eval("E(2;1,1;1)"), ConfigError);
  CHECK_THROWS_AS(ev.eval("Eab(2,1;1,1;1)"), ConfigError);
  CHECK_THROWS_AS(ev.eval("[t(1,1,1) + t(1,2,1), t(1,1,1)]"), ConfigError);

  Evaluator plain(Y, std::nullopt, 2);
  CHECK_THROWS_AS(plain.eval("D(1;1,1;1)"), ConfigError);
}

TEST_CASE("printed elements parse back") {
  Yangian Y(make_context(5, 2, 1, "010"));
  Evaluator ev(Y, std::nullopt, 2);
  for (const char* s : {"[t(1,3,2), t(3,2,1)] * t(2,2,1)", "[[t(1,2,1), t(2,3,2)], t(3,1,1)] + 3", "t(3,3,1)*t(1,1,1)*t(2,1,2)"}) {
    Element x = ev.eval(s);
    CAPTURE(s);
    CHECK(ev.eval(to_text(x)) == x);
  }
}

TEST_CASE("cli exit codes") {
  Run r = cli({"eval", "--p", "3", "--size", "1,1", "--sigma", "01", "--expr", "[t(1,2,1), t(2,1,1)]"});
  CHECK(r.code == 0);
  CHECK(r.out == "1*t(2,2,1) + 2*t(1,1,1)\n");
  CHECK(cli({"eval", "--expr", "t(1,1,0)"}).out == "1\n");
  r = cli({"eval", "--expr", "[t(1,1,1)"});
  CHECK(r.code == 2);
  CHECK(r.err.find("position 9") != std::string::npos);
  CHECK(cli({"eval", "--expr", "t(5,1,1)"}).code == 2);
  CHECK(cli({"verify", "--p", "4"}).code == 2);
  CHECK(cli({"verify", "--mu", "1,1", "--sigma", "010", "--size", "2,1"}).code == 2);
  CHECK(cli({"verify", "--families", "bogus"}).code == 2);
  CHECK(cli({"verify", "--size", "1"}).code == 2);
  CHECK(cli({"verify", "--jobs", "x"}).code == 2);
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"--help"}).code == 0);
  r = cli({"verify", "--size", "1,1", "--mu", "1,1", "--families", "e1f1,coeffi-d", "--deterministic", "--report", "-"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out.substr(r.out.find('{')));
  CHECK(j["families"].size() == 2);
  CHECK(j["families"][0]["id"] == "e1f1");
  CHECK(j["families"][1]["id"] == "coeffi-d");
}

TEST_CASE("cli fault injection exits 1") {
  if (!fault_hooks_enabled()) return;
  Run r = cli({"verify", "--size", "2,1", "--mu", "1,1,1", "--families", "recursion", "--fault", "recursion_sign"});
  CHECK(r.code == 1);
  CHECK(r.out.find("FAIL recursion") != std::string::npos);
  CHECK(cli({"verify", "--fault", "nope"}).code == 2);
  // flags are reset afterwards
  CHECK(cli({"verify", "--size", "2,1", "--mu", "1,1,1", "--families", "recursion"}).code == 0);
}

TEST_CASE("gauss dump") {
  Run whole = cli({"gauss", "--size", "1,1", "--mu", "2", "--series-order", "2"});
  CHECK(whole.code == 0);
  CHECK(whole.out.find("E ") == std::string::npos);
  CHECK(whole.out.find("D 1 1 | 1 2 1 | 1*t(1,2,1)") != std::string::npos);
  Run r1 = cli({"gauss", "--size", "1,1", "--mu", "1,1", "--series-order", "1"});
  Run r2 = cli({"gauss", "--size", "1,1", "--mu", "1,1", "--series-order", "2"});
  CHECK(r1.out.find("E 1 2 | 1 1 1 | 1*t(1,2,1)") != std::string::npos);
  std::istringstream lines(r1.out);
  for (std::string line; std::getline(lines, line);) {
    CAPTURE(line);
    CHECK(r2.out.find(line + "\n") != std::string::npos);
  }
  CHECK(cli({"gauss", "--size", "1,1"}).code == 2);
}
