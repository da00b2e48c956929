#include <gtest/gtest.h>

#include "monideal/cli/commands.hpp"
#include "oracles.hpp"

using namespace monideal;
using namespace monideal::cli;

namespace {

std::string run(Workspace& ws, const std::string& line) { return run_command(ws, line).text; }

ErrorKind failure(Workspace& ws, const std::string& line) {
  try {
    run_command(ws, line);
  } catch (const CommandError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error from " << line;
  return ErrorKind::Malformed;
}

}  // namespace

TEST(Parser, Literals) {
  VariableNames v(3);
  auto I = parse_ideal("(x^2, y, z)", v);
  EXPECT_EQ(I.gens(), (std::vector<ExponentVector>{{0, 0, 1}, {0, 1, 0}, {2, 0, 0}}));
  EXPECT_EQ(parse_ideal("m^3", v), MonomialIdeal::maximal_power(3, 3));
  EXPECT_EQ(parse_ideal(" ( x ^ 2 * y^0 ,y,z ) ", v), I);
  EXPECT_EQ(parse_ideal("x*y*x", v).gens().front(), (ExponentVector{2, 1, 0}));
  EXPECT_EQ(parse_ideal("1", v), MonomialIdeal::unit(3));
}

TEST(Parser, Operators) {
  VariableNames v(3);
  auto K = parse_ideal("(y,z)^3 + (x^5, x^3*y, x^3*z, x^2*y^2, x*y*z, x^2*z^2)", v);
  EXPECT_EQ(mu(K), 10u);
  EXPECT_EQ(parse_ideal("closure((x^3, y^3, z^3))", v), MonomialIdeal::maximal_power(3, 3));
  EXPECT_EQ(parse_ideal("star(m, m)", v), MonomialIdeal::maximal_power(3, 2));
  EXPECT_EQ(parse_ideal("colon(m^2, m)", v), MonomialIdeal::maximal_power(3, 1));
  EXPECT_EQ(parse_ideal("cap((x), (y))", v), parse_ideal("(x*y)", v));
  EXPECT_EQ(parse_ideal("m*(x)", v), parse_ideal("(x^2, x*y, x*z)", v));
}

TEST(Parser, Errors) {
  VariableNames v(3);
  auto kind = [&](const std::string& s) {
    try {
      parse_ideal(s, v);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Malformed;
  };
  EXPECT_EQ(kind("(x, q)"), ErrorKind::UnknownVariable);
  EXPECT_EQ(kind("(x, y"), ErrorKind::Parse);
  EXPECT_EQ(kind("(x,,y)"), ErrorKind::Parse);
  EXPECT_EQ(kind("x^99999999999"), ErrorKind::Overflow);
  EXPECT_EQ(kind("2"), ErrorKind::Parse);
  EXPECT_EQ(kind("(x) y"), ErrorKind::Parse);
  EXPECT_EQ(kind("star(m)"), ErrorKind::Parse);
}

TEST(Parser, PrintParseRoundTrip) {
  VariableNames v(4);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    auto I = oracle::random_primary(rng, 4);
    EXPECT_EQ(parse_ideal(render(I, v), v), I);
  }
  VariableNames custom({"a", "b"});
  EXPECT_EQ(render(parse_ideal("(b^2, a*b, a^3)", custom), custom), "(a^3, a*b, b^2)");
}

TEST(Names, Defaults) {
  EXPECT_EQ(VariableNames(2).names(), (std::vector<std::string>{"x", "y"}));
  EXPECT_EQ(VariableNames(4).names(), (std::vector<std::string>{"x", "y", "z", "w"}));
  EXPECT_EQ(VariableNames(5)[4], "x5");
  EXPECT_THROW(VariableNames(std::vector<std::string>{"x", "x"}), Error);
  EXPECT_THROW(VariableNames(std::vector<std::string>{"x", "m"}), Error);
}

TEST(Serialize, Format) {
  VariableNames v(2);
  EXPECT_EQ(serialize_text(MonomialIdeal::maximal_power(2, 1), v), R"({"dim":2,"gens":[[0,1],[1,0]],"vars":["x","y"]})");
  auto I = deserialize_text(R"({"dim":2,"vars":["x","y"],"gens":[[1,0],[0,1],[1,1]]})", &v);
  EXPECT_EQ(I, MonomialIdeal::maximal_power(2, 1));
}

TEST(Serialize, Errors) {
  VariableNames v(2);
  auto kind = [&](const std::string& s) {
    try {
      deserialize_text(s, &v);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::EmptyInput;
  };
  EXPECT_EQ(kind("{"), ErrorKind::Malformed);
  EXPECT_EQ(kind(R"({"dim":2,"vars":["x","y"]})"), ErrorKind::Malformed);
  EXPECT_EQ(kind(R"({"dim":2,"vars":["x","y"],"gens":[[1]]})"), ErrorKind::Malformed);
  EXPECT_EQ(kind(R"({"dim":2,"vars":["x","y"],"gens":[[-1,0]]})"), ErrorKind::Malformed);
  EXPECT_EQ(kind(R"({"dim":2,"vars":["a","b"],"gens":[[1,0]]})"), ErrorKind::DimensionMismatch);
}

TEST(Commands, Basics) {
  Workspace ws(VariableNames(3));
  EXPECT_EQ(run(ws, "order (x^2, y, z)"), "1");
  EXPECT_EQ(run(ws, "mu m^2"), "6");
  EXPECT_EQ(run(ws, "index (x^2, y^2, z^2)"), "4");
  EXPECT_EQ(run(ws, "primary? (x, y)"), "false");
  EXPECT_EQ(run(ws, "complete? (x^2, y^2, z^2)"), "false");
  EXPECT_EQ(run(ws, "closure (x^2, y^2)"), "(x^2, x*y, y^2)");
  EXPECT_EQ(run(ws, "prod m m"), "(x^2, x*y, x*z, y^2, y*z, z^2)");
  EXPECT_EQ(run(ws, "star (x^2, y, z) (x, y^2, z)"), run(ws, "closure (x^2, y, z)*(x, y^2, z)"));
  EXPECT_EQ(run(ws, "colon m^2 m"), "(x, y, z)");
  EXPECT_EQ(run(ws, "cap (x) (y)"), "(x*y)");
  EXPECT_EQ(run(ws, "transform (x^2, y, z) x"), "(x, y, z)");
  EXPECT_EQ(run(ws, "delta (x, y^2, y*z, z^2) x"), "2");
  EXPECT_EQ(run(ws, "cit (x, y^2, y*z, z^2) x"), "(x^3, x^2*y, x^2*z, y^2, y*z, z^2)");
}

TEST(Commands, Sequences) {
  Workspace ws(VariableNames(3));
  EXPECT_EQ(run(ws, "special x,y,y,z"),
            "(x^7, x^6*y, x^5*z, x^4*y^2, x^4*y*z, x^3*y^3, x^3*y^2*z, x^3*z^2, x^2*y^4, x^2*y*z^2, x^2*z^3, "
            "x*y^3*z, x*y^2*z^2, x*y*z^3, x*z^4, y^5, y^4*z, y^3*z^2, y^2*z^3, y*z^4, z^5)");
  EXPECT_EQ(run(ws, "special -"), "(x, y, z)");
  EXPECT_EQ(run(ws, "weights x,y,y,z 4"), "(6,8,11)");
  EXPECT_EQ(run(ws, "expand x,y"), "x = x*y\ny = x*y^2\nz = x*y^2*z");
  EXPECT_EQ(run(ws, "changedir x,y"), "true");
  EXPECT_EQ(run(ws, "proximate x,x"), "false");
  EXPECT_EQ(run(ws, "pairtree 2"), "level 0: (1,1)\nlevel 1: (2,1)\nlevel 2: (3,2) (3,1)");
}

TEST(Commands, FactorizationFamily) {
  Workspace ws(VariableNames(3));
  const std::string I = "(x^3, y^3, z^3, x*y, x*z, y*z)";
  EXPECT_EQ(run(ws, "pointbasis " + I), "root:2 x:1 y:1 z:1");
  EXPECT_EQ(run(ws, "factor " + I), "root:-1 x:1 y:1 z:1");
  EXPECT_EQ(run(ws, "basepoints (x^2, y, z)"), "root: (x^2, y, z)\nx: (x, y, z)");
  EXPECT_EQ(run(ws, "special? (x^2, y, z)"), "true x");
  EXPECT_EQ(run(ws, "special? " + I), "false");
  EXPECT_EQ(run(ws, "rees (x^2, y, z)"), "(1,2,2)");
  EXPECT_EQ(run(ws, "rees " + I), "(1,1,1) (1,2,2) (2,1,2) (2,2,1)");
  EXPECT_EQ(run(ws, "indexorder (x^2, y, z)"), "(2,1)");
}

TEST(Commands, LetAndRecords) {
  Workspace ws(VariableNames(3));
  run(ws, "let J = (x^2, x*y, x*z, y*z, y^3, z^3)");
  auto out = run_command(ws, "cit J x");
  EXPECT_EQ(out.record["command"], "cit");
  EXPECT_EQ(out.record["inputs"], (json{"(x^2, x*y, x*z, y^3, y*z, z^3)", "x"}));
  EXPECT_EQ(out.record["result"]["gens"].size(), 10u);
  EXPECT_EQ(deserialize(out.record["result"], &ws.vars), parse_ideal(out.text, ws.vars));
  EXPECT_EQ(failure(ws, "let m = (x)"), ErrorKind::InvalidArgument);
  EXPECT_EQ(failure(ws, "let x = (x)"), ErrorKind::InvalidArgument);
}

TEST(Commands, Errors) {
  Workspace ws(VariableNames(3));
  EXPECT_EQ(failure(ws, "frobnicate m"), ErrorKind::InvalidArgument);
  EXPECT_EQ(failure(ws, "transform (x, y) x"), ErrorKind::NotPrimary);
  EXPECT_EQ(failure(ws, "cit (x^3, y^3, z^3) x"), ErrorKind::NotComplete);
  EXPECT_EQ(failure(ws, "cit m q"), ErrorKind::UnknownVariable);
  EXPECT_EQ(failure(ws, "basepoints (x, y^2, y*z, z^2)"), ErrorKind::NotFinitelySupported);
  EXPECT_EQ(failure(ws, "order (x, y"), ErrorKind::Parse);
  EXPECT_EQ(failure(ws, "order m m"), ErrorKind::Parse);
  EXPECT_EQ(failure(ws, "pairtree -1"), ErrorKind::InvalidArgument);
  try {
    run_command(ws, "transform (y, x^2, z) x");
  } catch (const CommandError& e) {
    ADD_FAILURE() << e.what();
  }
  try {
    run_command(ws, "cit (x^3, y^3, z^3) x");
  } catch (const CommandError& e) {
    EXPECT_EQ(e.command(), "cit");
    EXPECT_EQ(e.inputs(), (std::vector<std::string>{"(x^3, y^3, z^3)", "x"}));
    auto rec = e.record();
    EXPECT_EQ(rec["error"]["kind"], "not_complete");
  }
}

TEST(Commands, Table) {
  Workspace ws(VariableNames(3));
  auto out = run_command(ws, "table (x^2, x*y, x*z, y*z, y^3, z^3) x");
  json image = json::parse("[[5,3,null,0],[3,1,null,null],[null,null,null,null],[0,null,null,null]]");
  json full = json::parse("[[5,3,2,0],[3,1,0,null],[2,0,null,null],[0,null,null,null]]");
  EXPECT_EQ(out.record["result"]["image"], image);
  EXPECT_EQ(out.record["result"]["full"], full);
  Workspace ws4(VariableNames(4));
  EXPECT_THROW(run_command(ws4, "table m x"), CommandError);
}

TEST(Commands, Verify) {
  SessionOptions opt;
  opt.verify = true;
  Workspace ws(VariableNames(3), opt);
  EXPECT_EQ(run(ws, "closure (x^4, y^4, z^2)"), "(x^4, x^3*y, x^2*y^2, x^2*z, x*y^3, x*y*z, y^4, y^2*z, z^2)");
  EXPECT_EQ(mu(parse_ideal(run(ws, "special x,y,x"), ws.vars)), 10u);
}
