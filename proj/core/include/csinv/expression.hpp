#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "csinv/surfaces.hpp"
#include "csinv/topology.hpp"

namespace csinv {

/// NAME | NAME '(' INT (',' INT)* ')' | 'rev' '(' node ')'
struct Node {
  enum class Kind { name, call, rev };
  Kind kind = Kind::name;
  std::string name;
  std::vector<std::int64_t> args;
  /// Exactly one element for Kind::rev.
  std::vector<Node> inner;

  static Node block(std::string n) { return {Kind::name, std::move(n), {}, {}}; }
  static Node call(std::string n, std::vector<std::int64_t> a) {
    return {Kind::call, std::move(n), std::move(a), {}};
  }
  static Node rev(Node n) { return {Kind::rev, {}, {}, {std::move(n)}}; }

  friend bool operator==(const Node&, const Node&) = default;
};

struct Term {
  std::int64_t multiplier = 1;
  Node node;

  friend bool operator==(const Term&, const Term&) = default;
};

struct ExpressionAST {
  std::vector<Term> terms;

  friend bool operator==(const ExpressionAST&, const ExpressionAST&) = default;
};

/// expr := term ('#' term)* ; term := [INT '*'] node. Whitespace is ignored
/// between tokens. Throws ParseError with the byte offset.
ExpressionAST parse_expression(std::string_view input);
Node parse_node(std::string_view input);

/// Canonical text; parse_expression(render(ast)) == ast.
std::string render(const ExpressionAST& ast);
std::string render(const Node& node);

struct ResolvedNode {
  ManifoldBlock block;  // as stored, never reversed
  bool reversed = false;

  ManifoldBlock oriented() const { return reversed ? reverse_orientation(block) : block; }
};

/// Names go through the catalog; double_cover_cp2(k), hypersurface_cp3(d)
/// and HS(d) through the constructors. rev(rev(x)) resolves to x.
ResolvedNode resolve(const Node& node, const Catalog& catalog);
SumExpression resolve(const ExpressionAST& ast, const Catalog& catalog);

/// Splits "A,B(1,2),rev(C)" on top-level commas.
std::vector<std::string> split_top_level(std::string_view list);

}  // namespace csinv
