#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "csinv/error.hpp"
#include "csinv/evaluate.hpp"
#include "csinv/expression.hpp"
#include "generators.hpp"

namespace csinv {
namespace {

struct Invocation {
  int code;
  std::string out, err;
};

Invocation run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& file) { return std::string(CSINV_TEST_DATA_DIR) + "/" + file; }

std::string temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << contents;
  return path.string();
}

TEST(Parser, GrammarExamples) {
  const ExpressionAST a = parse_expression("2*DC8 # S4");
  EXPECT_EQ(a, (ExpressionAST{{{2, Node::block("DC8")}, {1, Node::block("S4")}}}));

  const ExpressionAST b = parse_expression("DC8 # rev(DC8)");
  ASSERT_EQ(b.terms.size(), 2u);
  EXPECT_EQ(b.terms[1].node, Node::rev(Node::block("DC8")));

  const ExpressionAST c = parse_expression("4*DC8 # 5*CP2bar # 2*S1xS3");
  ASSERT_EQ(c.terms.size(), 3u);
  EXPECT_EQ(c.terms[0].multiplier, 4);
  EXPECT_EQ(c.terms[1].multiplier, 5);
  EXPECT_EQ(c.terms[2].multiplier, 2);
  EXPECT_EQ(c.terms[2].node, Node::block("S1xS3"));

  EXPECT_EQ(parse_expression(" HS( 5 ) ").terms[0].node, Node::call("HS", {5}));
}

TEST(Parser, ErrorsCarryPositions) {
  const auto position = [](std::string_view text) -> std::size_t {
    try {
      (void)parse_expression(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    return std::string::npos;
  };
  EXPECT_EQ(position("DC8 # "), 6u);
  EXPECT_EQ(position("DC8 # rev("), 10u);
  EXPECT_EQ(position("2 DC8"), 2u);
  EXPECT_EQ(position("0*DC8"), 0u);
  EXPECT_EQ(position("rev"), 0u);
  EXPECT_EQ(position(""), 0u);
  EXPECT_EQ(position("DC8 )"), 4u);
}

TEST(Parser, ResolutionErrors) {
  const Catalog catalog;
  const auto kind = [&](std::string_view text) {
    try {
      (void)resolve(parse_expression(text), catalog);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidInput;
  };
  EXPECT_EQ(kind("Nope"), ErrorKind::UnknownBlock);
  EXPECT_EQ(kind("frob(3)"), ErrorKind::UnknownBlock);
  EXPECT_EQ(kind("HS(5,2)"), ErrorKind::ArityError);
  EXPECT_EQ(resolve(parse_expression("double_cover_cp2(4)"), catalog).summands()[0].block.betti,
            catalog.block(kDC8).betti);
}

TEST(ParserProperty, RoundTrip) {
  testgen::Gen g(0xa57);
  for (int i = 0; i < 200; ++i) {
    const ExpressionAST ast = testgen::random_ast(g);
    const std::string text = render(ast);
    EXPECT_EQ(parse_expression(text), ast) << text;
    EXPECT_EQ(parse_expression(testgen::add_noise(g, text)), ast) << text;
    EXPECT_EQ(render(parse_expression(text)), text);
  }
}

TEST(ParserProperty, TermOrderIsIrrelevant) {
  testgen::Gen g(0xc033);
  const Catalog catalog;
  for (int i = 0; i < 200; ++i) {
    const ExpressionAST ast = testgen::random_ast(g);
    ExpressionAST shuffled = ast;
    std::shuffle(shuffled.terms.begin(), shuffled.terms.end(), g.engine());
    const InvariantReport a = evaluate(render(ast), catalog);
    const InvariantReport b = evaluate(render(shuffled), catalog);
    EXPECT_EQ(render_json(a), render_json(b)) << render(ast) << " vs " << render(shuffled);
  }
}

TEST(Cli, GoldenEvalStructured) {
  const Invocation r = run({"eval", "2*DC8 # S4", "--witness", "DC8,DC8,DC8,DC8", "--format", "structured"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  for (const char* key : {"expression", "betti", "invariants", "einstein", "certificates"})
    EXPECT_TRUE(j.contains(key)) << key;
  const auto& y = j["invariants"]["yamabe"]["value"];
  EXPECT_EQ(y["coeff_num"], -8);
  EXPECT_EQ(y["coeff_den"], 1);
  EXPECT_EQ(y["pi_power"], 1);
  EXPECT_EQ(y["radicand"], 2);
  EXPECT_EQ(j["invariants"]["i_s"]["value"]["coeff_num"], 128);
  EXPECT_EQ(j["invariants"]["i_r"]["value"]["coeff_num"], 64);
  EXPECT_EQ(j["betti"]["b_plus"], 14);
  EXPECT_EQ(j["einstein"]["verdict"], "obstructed");
  for (const auto& c : j["certificates"]) {
    EXPECT_TRUE(c.contains("rule_id"));
    EXPECT_TRUE(c.contains("anchor"));
    EXPECT_TRUE(c.contains("checks"));
  }
}

TEST(Cli, TextReportIsDeterministic) {
  const Invocation a = run({"eval", "DC8 # rev(DC8)"});
  const Invocation b = run({"eval", "rev(DC8) # DC8"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("[12π√2, 8π√6]"), std::string::npos);
  EXPECT_NE(run({"eval", "CP2", "--approx"}).out.find("not authoritative"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"eval", "U", "--catalog", data("unknown_block.txt")}).code, 2);
  const Invocation parse = run({"eval", "DC8 # rev("});
  EXPECT_EQ(parse.code, 1);
  EXPECT_NE(parse.err.find("ParseError"), std::string::npos);
  EXPECT_NE(parse.err.find('^'), std::string::npos);
  EXPECT_EQ(run({"eval", "Nope"}).code, 1);
  EXPECT_EQ(run({"eval", "2*DC8", "--witness", "DC8,DC8"}).code, 1);
  EXPECT_EQ(run({"eval", "2*DC8", "--m", "7"}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"eval", "--help"}).code, 0);
  EXPECT_EQ(run({"eval", "CP2", "--catalog", "/nonexistent/catalog.txt"}).code, 1);
}

TEST(Cli, NonSeparationFixture) {
  const Invocation r = run({"eval", "G # 2*K3", "--witness", "G,K3,K3,K3", "--catalog", data("g_catalog.txt"),
                     "--format", "structured"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto by = nlohmann::json::parse(r.out)["einstein"]["by"];
  EXPECT_NE(std::find(by.begin(), by.end(), "einstein.monopole_obstruction"), by.end());
  EXPECT_EQ(std::find(by.begin(), by.end(), "einstein.hitchin_thorpe"), by.end());
}

TEST(Cli, Blocks) {
  const Invocation text = run({"blocks"});
  EXPECT_EQ(text.code, 0);
  EXPECT_NE(text.out.find("DC8"), std::string::npos);
  const Invocation json = run({"blocks", "--catalog", data("g_catalog.txt"), "--format", "structured"});
  ASSERT_EQ(json.code, 0) << json.err;
  const auto arr = nlohmann::json::parse(json.out);
  EXPECT_TRUE(std::any_of(arr.begin(), arr.end(), [](const auto& b) { return b["name"] == "G"; }));
}

TEST(Cli, CheckQuadruple) {
  EXPECT_EQ(run({"check-quadruple", "DC8,DC8,DC8,DC8"}).code, 0);
  EXPECT_EQ(run({"check-quadruple", "K3,K3,K3,K3"}).code, 0);
  const Invocation bad = run({"check-quadruple", "DC8,DC8,DC8,K3"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.out.find("fail"), std::string::npos);
  EXPECT_EQ(run({"check-quadruple", "DC8,K3"}).code, 1);
}

TEST(Cli, Diagonalize) {
  const Invocation ok = run({"diagonalize", "--gram", temp_file("csinv_q2.txt", "-2 1\n1 -1\n")});
  EXPECT_EQ(ok.code, 0) << ok.err;
  const std::string e8 =
      "-2 0 1 0 0 0 0 0\n0 -2 0 1 0 0 0 0\n1 0 -2 1 0 0 0 0\n0 1 1 -2 1 0 0 0\n"
      "0 0 0 1 -2 1 0 0\n0 0 0 0 1 -2 1 0\n0 0 0 0 0 1 -2 1\n0 0 0 0 0 0 1 -2\n";
  const Invocation no = run({"diagonalize", "--gram", temp_file("csinv_e8.txt", e8), "--format", "structured"});
  EXPECT_EQ(no.code, 2);
  EXPECT_EQ(nlohmann::json::parse(no.out)["diagonalizable"], false);
  EXPECT_EQ(run({"diagonalize", "--gram", "/nonexistent"}).code, 1);
  EXPECT_EQ(run({"diagonalize", "--gram", temp_file("csinv_pos.txt", "1\n")}).code, 1);
}

}  // namespace
}  // namespace csinv
