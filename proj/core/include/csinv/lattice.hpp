#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "csinv/matrix.hpp"

namespace csinv {

/// H^2 modulo torsion with its integer intersection form.
class IntersectionLattice {
 public:
  explicit IntersectionLattice(IntMatrix gram);

  std::size_t rank() const noexcept { return gram_.rows(); }
  const IntMatrix& gram() const noexcept { return gram_; }

  Rational pair(const RatVector& a, const RatVector& b) const;
  Rational square(const RatVector& a) const { return pair(a, a); }
  Integer determinant() const;
  bool is_unimodular() const;
  Inertia inertia() const;

  std::string to_grid() const;

 private:
  IntMatrix gram_;
};

/// A positive-definite subspace of maximal dimension b+, standing in for the
/// self-dual harmonic forms of some metric. Columns of `basis` span it.
class PeriodSubspace {
 public:
  /// Validates positivity of B^T Q B (leading minors) and dim = b+.
  PeriodSubspace(const IntersectionLattice& lattice, RatMatrix basis);

  const RatMatrix& basis() const noexcept { return basis_; }
  std::size_t dimension() const noexcept { return basis_.cols(); }
  const RatMatrix& restricted_gram() const noexcept { return gram_; }

 private:
  RatMatrix basis_;
  RatMatrix gram_;
};

struct Projection {
  RatVector a_plus;
  Rational a_plus_sq;
};

/// Q-orthogonal projection of `a` onto the period subspace.
Projection selfdual_project(const IntersectionLattice& lattice, const PeriodSubspace& period,
                            const RatVector& a);

/// Ambient lattice for [#X_j] # N: the blocks' classes followed by k
/// diagonal generators E_i with E_i^2 = -1.
///
/// Collapsed mode has a single alpha axis of square sum c1^2; per-block mode
/// has one axis per block with square c1^2(X_j).
class AmbientLattice {
 public:
  enum class Mode { collapsed, per_block };

  const IntersectionLattice& lattice() const noexcept { return lattice_; }
  Mode mode() const noexcept { return mode_; }
  std::size_t block_count() const noexcept { return m_; }
  std::size_t block_axes() const noexcept { return block_axes_; }
  std::size_t generator_count() const noexcept { return k_; }

  /// alpha = sum of the blocks' c1; zero when there are no blocks.
  RatVector alpha() const;
  std::size_t generator_axis(std::size_t i) const { return block_axes_ + i; }

 private:
  friend AmbientLattice build_ambient(const std::vector<std::int64_t>&, std::size_t);
  friend AmbientLattice build_ambient_per_block(const std::vector<std::int64_t>&, std::size_t);
  AmbientLattice(IntersectionLattice lattice, Mode mode, std::size_t m, std::size_t axes,
                 std::size_t k)
      : lattice_(std::move(lattice)), mode_(mode), m_(m), block_axes_(axes), k_(k) {}

  IntersectionLattice lattice_;
  Mode mode_;
  std::size_t m_;
  std::size_t block_axes_;
  std::size_t k_;
};

/// gram = diag(sum c1^2) + diag(-1 x k). Negative c1^2 is rejected.
AmbientLattice build_ambient(const std::vector<std::int64_t>& c1_squares, std::size_t k);
/// gram = diag(c1^2(X_1), ..., c1^2(X_m)) + diag(-1 x k).
AmbientLattice build_ambient_per_block(const std::vector<std::int64_t>& c1_squares, std::size_t k);

struct MonopoleClass {
  IntVector coords;
  /// s_j for the block classes (one entry in collapsed mode).
  std::vector<int> block_signs;
  /// t_i for the generators E_i.
  std::vector<int> generator_signs;

  /// Concatenated sign pattern, used for deterministic tie-breaks.
  std::vector<int> sign_pattern() const;
  std::string to_string() const;

  friend bool operator==(const MonopoleClass&, const MonopoleClass&) = default;
};

inline constexpr std::uint64_t kDefaultClassLimit = std::uint64_t{1} << 20;

/// All classes sum(+-c_j) + sum(+-E_i), deduplicated by coordinates.
std::vector<MonopoleClass> enumerate_monopole_classes(const AmbientLattice& ambient,
                                                      std::uint64_t limit = kDefaultClassLimit);

/// The class alpha + sum t_i E_i with t_i chosen so that Q(alpha+, E_i) >= 0.
MonopoleClass greedy_monopole_class(const AmbientLattice& ambient, const PeriodSubspace& period);

struct Maximization {
  MonopoleClass best;
  Rational value;
  MonopoleClass greedy;
  Rational greedy_value;
  Rational alpha_sq;
};

/// Brute-force maximum of (a+)^2 over `classes` next to the greedy choice.
/// Ties go to the lexicographically greatest sign pattern.
Maximization maximize_aplus_squared(const AmbientLattice& ambient, const PeriodSubspace& period,
                                    const std::vector<MonopoleClass>& classes);

inline constexpr std::size_t kDefaultDiagonalizeRank = 8;

struct Diagonalization {
  bool diagonalizable = false;
  /// Columns are an orthonormal frame: U^T Q U = -I. Empty on failure.
  IntMatrix basis;
  /// Exact per-coordinate search bounds floor(sqrt((-Q)^{-1}_ii)).
  IntVector coordinate_bounds;
  std::uint64_t vectors_examined = 0;
  /// Every vector of square -1 in the lattice.
  std::vector<IntVector> norm_minus_one;
  /// How many frame vectors were found before the search ran dry.
  std::size_t frame_size = 0;
};

/// Searches for a basis in which a negative-definite unimodular form is
/// diag(-1, ..., -1). Exhaustive within exact Cauchy-Schwarz bounds, so a
/// failure proves the form is not diagonal over Z.
Diagonalization diagonalize_definite(const IntersectionLattice& lattice,
                                     std::size_t rank_limit = kDefaultDiagonalizeRank);

}  // namespace csinv
