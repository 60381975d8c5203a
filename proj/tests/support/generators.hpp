#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "csinv/expression.hpp"
#include "csinv/lattice.hpp"

namespace csinv::testgen {

/// Seeded source shared by the property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }
  bool coin() { return range(0, 1) == 1; }
  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(range(0, static_cast<std::int64_t>(v.size()) - 1))];
  }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline Node random_node(Gen& g, int depth = 0) {
  static const std::vector<std::string> names{"S4", "CP2", "CP2bar", "S1xS3", "K3", "DC8"};
  const std::int64_t roll = g.range(0, 9);
  if (roll < 2 && depth < 2) return Node::rev(random_node(g, depth + 1));
  if (roll == 2) return Node::call("HS", {g.range(1, 6)});
  if (roll == 3) return Node::call("double_cover_cp2", {g.range(3, 6)});
  return Node::block(g.pick(names));
}

inline ExpressionAST random_ast(Gen& g) {
  ExpressionAST ast;
  const std::int64_t n = g.range(1, 5);
  for (std::int64_t i = 0; i < n; ++i) ast.terms.push_back({g.range(1, 5), random_node(g)});
  return ast;
}

/// Inserts random runs of blanks between tokens of a canonical rendering.
inline std::string add_noise(Gen& g, const std::string& text) {
  std::string out;
  for (char ch : text) {
    const bool token_edge = ch == '#' || ch == '*' || ch == '(' || ch == ')' || ch == ',';
    if (token_edge && g.coin()) out += std::string(static_cast<std::size_t>(g.range(0, 2)), ' ');
    if (ch != ' ' || g.coin()) out += ch;
    if (token_edge && g.coin()) out += std::string(static_cast<std::size_t>(g.range(0, 2)), '\t');
  }
  return out;
}

/// Random rational in [-bound, bound] with denominator in 1..den.
inline Rational small_rational(Gen& g, std::int64_t bound, std::int64_t den) {
  const std::int64_t d = g.range(1, den);
  return Rational(g.range(-bound * d, bound * d), d);
}

}  // namespace csinv::testgen
