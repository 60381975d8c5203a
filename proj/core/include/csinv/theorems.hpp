#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "csinv/exact.hpp"
#include "csinv/lattice.hpp"
#include "csinv/surfaces.hpp"
#include "csinv/topology.hpp"

namespace csinv {

enum class CheckStatus { pass, fail, unknown };
std::string_view to_string(CheckStatus s);

struct HypothesisCheck {
  std::string rule_id;
  std::string condition;
  CheckStatus status = CheckStatus::unknown;
  std::string evidence;
};

/// Four blocks the gauge-theoretic hypotheses quantify over; the expression
/// contains the first `prefix_m` of them.
struct QuadrupleWitness {
  std::array<ManifoldBlock, 4> blocks;
  int prefix_m = 1;
  /// Set when the quadruple came from suggest_witness rather than the user.
  bool suggested = false;

  std::string to_string() const;
};

enum class Invariant { yamabe, i_s, i_r, einstein };
std::string_view to_string(Invariant inv);

struct Conclusion {
  enum class Kind { value, interval, lower_bound, upper_bound, verdict };
  Invariant invariant = Invariant::yamabe;
  Kind kind = Kind::value;
  /// value / lower_bound / upper_bound; interval lower end.
  ExactReal value;
  /// interval upper end.
  ExactReal upper;
  bool obstructed = false;

  std::string to_string() const;
};

struct Certificate {
  std::string rule_id;
  /// Name of the applied result and its formula, in our own words.
  std::string anchor;
  std::vector<HypothesisCheck> checks;
  std::optional<Conclusion> conclusion;
  std::vector<std::string> notes;

  bool all_pass() const;
};

/// The sum split as [#_{j<=m} X_j] # N.
struct Split {
  std::vector<ManifoldBlock> x;
  /// The complementary summands; empty means N = S^4.
  std::vector<Summand> n_part;

  int m() const { return static_cast<int>(x.size()); }
  BettiData n_betti() const { return connected_sum(n_part); }
  std::int64_t c1_sum() const;
  std::string n_string() const;
};

/// Flavor of the per-block flags appended to the arithmetic checks.
enum class QuadrupleFlavor {
  arithmetic,      // b1 = 0, b+ = 3 mod 4, sum b+ = 4 mod 8 only
  minimal_complex, // plus minimal complex surface with c1^2
  sw_almost_complex // plus almost-complex carrier with nonzero mod-2 SW
};

/// Never throws; failures are statuses.
std::vector<HypothesisCheck> check_quadruple(const QuadrupleWitness& w,
                                             QuadrupleFlavor flavor = QuadrupleFlavor::arithmetic,
                                             const std::string& rule_id = "quadruple");

/// Largest m such that the first m witness blocks form a sub-multiset of the
/// non-reversed summands of `expr`. Zero when even X_1 is absent.
int default_prefix(const SumExpression& expr, const std::array<ManifoldBlock, 4>& blocks);

/// Throws MalformedSplit when the first w.prefix_m blocks are not contained
/// in `expr` or prefix_m is outside 1..4.
Split split_sum(const SumExpression& expr, const QuadrupleWitness& w);

/// Candidate quadruple built from the expression's own blocks, padded with
/// copies of them or with `k3` until the sum condition holds.
std::optional<QuadrupleWitness> suggest_witness(const SumExpression& expr, const ManifoldBlock& k3);

// ---- closed-form constants -------------------------------------------------

/// 32 pi^2 (a+)^2.
ExactReal scalar_l2_bound(const Rational& a_plus_sq);
/// 72 pi^2 (a+)^2.
ExactReal weyl_bound(const Rational& a_plus_sq);
/// -4 pi sqrt(2 c)
ExactReal monopole_yamabe(std::int64_t c1_sum);
/// 8 pi^2 [4m - (2chi+3tau)(N) + c]
ExactReal ricci_value(std::int64_t m, std::int64_t n_two_chi_three_tau, std::int64_t c1_sum);
/// 8 pi^2 [k + 4(l + m - 1) + c] for N = k CP2bar # l (S1xS3).
ExactReal ricci_value_family(std::int64_t k, std::int64_t l, std::int64_t m, std::int64_t c1_sum);

/// The two equivalent Einstein gates: lhs >= c1_sum.
std::int64_t einstein_gate_betti(std::int64_t m, std::int64_t n_b1, std::int64_t n_b_minus);
/// 3 [4m - (2chi+3tau)(N)]; compared against c1_sum.
std::int64_t einstein_gate_euler(std::int64_t m, std::int64_t n_two_chi_three_tau);

/// Kobayashi's bracket Y(CP2) <= Y(k CP2 # l CP2bar) <= Y(S4).
ExactInterval kobayashi_interval(std::int64_t k, std::int64_t l);

struct Rewrite {
  std::int64_t k = 0;
  std::int64_t l = 0;
  std::vector<std::string> used;
};
/// Drops S4 summands, applies stored dissolve annotations and requires the
/// remainder to be CP2 / CP2bar. Throws NoRewrite otherwise.
Rewrite kobayashi_rewrite(const SumExpression& expr, const Catalog& catalog);

/// Y <= 0 gives I_s = Y^2, Y >= 0 gives I_s = 0.
ExactReal scalar_from_yamabe(const ExactReal& y);
/// I_s > 0 gives Y = -sqrt(I_s); I_s = 0 leaves the value open (SignUnknown).
ExactReal yamabe_from_scalar(const ExactReal& i_s);

// ---- rules -----------------------------------------------------------------

namespace rule {
inline constexpr const char* kYamabeMonopole = "yamabe.monopole_sum";
inline constexpr const char* kYamabeCatalog = "yamabe.catalog";
inline constexpr const char* kYamabeKobayashi = "yamabe.kobayashi_interval";
inline constexpr const char* kYamabeFromScalar = "yamabe.from_scalar";
inline constexpr const char* kScalarExact = "scalar.exact";
inline constexpr const char* kScalarLower = "scalar.monopole_lower";
inline constexpr const char* kScalarUpper = "scalar.subadditive_upper";
inline constexpr const char* kScalarFromYamabe = "scalar.from_yamabe";
inline constexpr const char* kRicciExact = "ricci.exact";
inline constexpr const char* kRicciLower = "ricci.monopole_lower";
inline constexpr const char* kRicciTaut = "ricci.tautological";
inline constexpr const char* kEinsteinMonopole = "einstein.monopole_obstruction";
inline constexpr const char* kEinsteinSpin = "einstein.spin_family";
inline constexpr const char* kEinsteinHT = "einstein.hitchin_thorpe";
}  // namespace rule

Certificate yamabe_monopole_sum(const QuadrupleWitness& w, const Split& s);
Certificate scalar_exact(const QuadrupleWitness& w, const Split& s);
Certificate scalar_monopole_lower(const QuadrupleWitness& w, const Split& s);
Certificate ricci_exact(const QuadrupleWitness& w, const Split& s);
Certificate ricci_monopole_lower(const QuadrupleWitness& w, const Split& s);
/// Throws OutOfRange unless m is 2, 3 or 4.
Certificate einstein_monopole_obstruction(const QuadrupleWitness& w, const Split& s);

/// Per-block I_s summed over the expression; needs every summand known.
Certificate scalar_subadditive_upper(const SumExpression& expr);
Certificate yamabe_catalog(const SumExpression& expr);
Certificate yamabe_kobayashi(const SumExpression& expr, const Catalog& catalog);
Certificate einstein_spin_family(const SumExpression& expr);
Certificate einstein_hitchin_thorpe(const SumExpression& expr);

/// Greedy-class evidence for the monopole bound on the collapsed ambient
/// lattice with the orthogonal period (alpha axis only).
std::string lattice_evidence(std::int64_t c1_sum, std::int64_t k);

}  // namespace csinv
