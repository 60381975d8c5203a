#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "csinv/exact.hpp"

namespace csinv {

/// Tri-state knowledge flag. Rules only ever consume `yes`.
enum class Tri : std::uint8_t { no, yes, unknown };

std::string_view to_string(Tri t);
Tri parse_tri(std::string_view text);

struct BettiData {
  std::int64_t b1 = 0;
  std::int64_t b_plus = 0;
  std::int64_t b_minus = 0;

  std::int64_t b2() const { return b_plus + b_minus; }
  std::int64_t euler() const { return 2 - 2 * b1 + b_plus + b_minus; }
  std::int64_t signature() const { return b_plus - b_minus; }
  std::int64_t two_chi_plus_three_tau() const { return 2 * euler() + 3 * signature(); }

  friend bool operator==(const BettiData&, const BettiData&) = default;
};

struct BlockFlags {
  Tri minimal_complex_surface = Tri::unknown;
  Tri symplectic = Tri::unknown;
  Tri spin = Tri::unknown;
  Tri sw_mod2_nonzero = Tri::unknown;
  Tri admits_psc = Tri::unknown;
  Tri admits_nonneg_scalar = Tri::unknown;
  Tri admits_asd_psc = Tri::unknown;

  friend bool operator==(const BlockFlags&, const BlockFlags&) = default;
};

/// A building-block 4-manifold. `c1_squared` is present exactly when the block
/// carries a distinguished almost-complex structure.
struct ManifoldBlock {
  std::string name;
  BettiData betti;
  std::optional<std::int64_t> c1_squared;
  BlockFlags flags;
  std::string provenance;
  /// Known Yamabe invariant; independent of orientation.
  std::optional<ExactReal> yamabe;
  bool orientation_reversed = false;

  std::string display_name() const;

  friend bool operator==(const ManifoldBlock&, const ManifoldBlock&) = default;
};

/// Ingest lint; throws CatalogError on the first violated block invariant.
void validate_block(const ManifoldBlock& block);

/// Swaps b+ and b-; drops every datum tied to the complex orientation.
ManifoldBlock reverse_orientation(const ManifoldBlock& block);

struct Summand {
  ManifoldBlock block;
  bool reversed = false;
  std::int64_t multiplicity = 1;

  /// The block with this summand's orientation applied.
  ManifoldBlock oriented() const;
  std::string label() const;
};

/// Normalized connected sum: summands sorted by (name, reversed) with equal
/// entries merged. Never empty.
class SumExpression {
 public:
  explicit SumExpression(std::vector<Summand> summands);

  const std::vector<Summand>& summands() const noexcept { return summands_; }
  /// Total number of blocks counted with multiplicity.
  std::int64_t count() const;
  std::string to_string() const;

  friend bool operator==(const SumExpression& a, const SumExpression& b);

 private:
  std::vector<Summand> summands_;
};

BettiData connected_sum(const SumExpression& expr);
/// Connected sum of a possibly empty list; the empty sum is S^4.
BettiData connected_sum(const std::vector<Summand>& summands);
std::int64_t two_chi_plus_three_tau(const SumExpression& expr);

/// Flags that provably propagate to a connected sum.
struct SumFlags {
  Tri spin = Tri::unknown;
  Tri admits_psc = Tri::unknown;
  Tri admits_nonneg_scalar = Tri::unknown;
};

SumFlags sum_flags(const std::vector<Summand>& summands);

}  // namespace csinv
