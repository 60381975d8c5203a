#include "csinv/expression.hpp"

#include <cctype>
#include <charconv>

#include "csinv/error.hpp"

namespace csinv {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExpressionAST expression() {
    ExpressionAST ast;
    ast.terms.push_back(term());
    while (accept('#')) ast.terms.push_back(term());
    expect_end();
    return ast;
  }

  Node single_node() {
    Node n = node();
    expect_end();
    return n;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  void expect_end() {
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

  bool at_digit() {
    skip_space();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  std::int64_t integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc{}) {
      pos_ = start;
      fail("integer out of range");
    }
    (void)ptr;
    return value;
  }

  std::string name() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ >= text_.size() || !std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected a block name");
    }
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  Term term() {
    Term t;
    if (at_digit()) {
      const std::size_t at = pos_;
      t.multiplier = integer();
      if (t.multiplier == 0) throw ParseError(at, "multiplier must be positive");
      expect('*');
    }
    t.node = node();
    return t;
  }

  Node node() {
    skip_space();
    const std::size_t at = pos_;
    std::string n = name();
    if (n == "rev") {
      if (!accept('(')) throw ParseError(at, "'rev' is reserved and needs an argument");
      Node inner = node();
      expect(')');
      return Node::rev(std::move(inner));
    }
    if (!accept('(')) return Node::block(std::move(n));
    std::vector<std::int64_t> args{integer()};
    while (accept(',')) args.push_back(integer());
    expect(')');
    return Node::call(std::move(n), std::move(args));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ExpressionAST parse_expression(std::string_view input) { return Parser(input).expression(); }

Node parse_node(std::string_view input) { return Parser(input).single_node(); }

std::string render(const Node& node) {
  switch (node.kind) {
    case Node::Kind::name: return node.name;
    case Node::Kind::rev: return "rev(" + render(node.inner.at(0)) + ")";
    case Node::Kind::call: {
      std::string out = node.name + "(";
      for (std::size_t i = 0; i < node.args.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(node.args[i]);
      }
      return out + ")";
    }
  }
  return {};
}

std::string render(const ExpressionAST& ast) {
  std::string out;
  for (std::size_t i = 0; i < ast.terms.size(); ++i) {
    if (i) out += " # ";
    const Term& t = ast.terms[i];
    if (t.multiplier != 1) out += std::to_string(t.multiplier) + "*";
    out += render(t.node);
  }
  return out;
}

namespace {

ManifoldBlock construct(const Node& call) {
  auto one_arg = [&](const char* signature) {
    if (call.args.size() != 1) {
      throw Error(ErrorKind::ArityError, call.name + " takes one argument: " + signature + ", got " +
                                             std::to_string(call.args.size()));
    }
    return call.args.front();
  };
  if (call.name == "double_cover_cp2") return double_cover_cp2(one_arg("double_cover_cp2(k)"));
  if (call.name == "hypersurface_cp3" || call.name == "HS") {
    return hypersurface_cp3(one_arg("hypersurface_cp3(d)"));
  }
  throw Error(ErrorKind::UnknownBlock, "no constructor named '" + call.name + "'");
}

}  // namespace

ResolvedNode resolve(const Node& node, const Catalog& catalog) {
  switch (node.kind) {
    case Node::Kind::name: return {catalog.block(node.name), false};
    case Node::Kind::call: return {construct(node), false};
    case Node::Kind::rev: {
      ResolvedNode r = resolve(node.inner.at(0), catalog);
      r.reversed = !r.reversed;
      return r;
    }
  }
  throw Error(ErrorKind::InvalidInput, "malformed node");
}

SumExpression resolve(const ExpressionAST& ast, const Catalog& catalog) {
  std::vector<Summand> summands;
  for (const Term& t : ast.terms) {
    ResolvedNode r = resolve(t.node, catalog);
    summands.push_back({std::move(r.block), r.reversed, t.multiplier});
  }
  return SumExpression(std::move(summands));
}

std::vector<std::string> split_top_level(std::string_view list) {
  std::vector<std::string> out;
  int depth = 0;
  std::string current;
  for (char ch : list) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      out.push_back(current);
      current.clear();
    } else {
      current += ch;
    }
  }
  out.push_back(current);
  return out;
}

}  // namespace csinv
