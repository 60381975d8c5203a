#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "csinv/expression.hpp"
#include "csinv/report.hpp"

namespace csinv {

struct EvalOptions {
  /// Four witness nodes, e.g. {"DC8", "DC8", "DC8", "DC8"}. Empty = none.
  std::vector<std::string> witness;
  /// Use suggest_witness when no witness is given.
  bool auto_witness = false;
  /// Overrides the default prefix length.
  std::optional<int> m;
};

/// Resolves four witness nodes against the catalog. InvalidInput unless
/// exactly four names are given.
QuadrupleWitness resolve_witness(const std::vector<std::string>& names, const Catalog& catalog);

InvariantReport evaluate(const SumExpression& expr, const Catalog& catalog,
                         const EvalOptions& opts = {});
InvariantReport evaluate(std::string_view text, const Catalog& catalog, const EvalOptions& opts = {});

}  // namespace csinv
