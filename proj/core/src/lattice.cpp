#include "csinv/lattice.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "csinv/error.hpp"

namespace csinv {

IntersectionLattice::IntersectionLattice(IntMatrix gram) : gram_(std::move(gram)) {
  if (gram_.rows() != gram_.cols()) throw Error(ErrorKind::InvalidInput, "Gram matrix is not square");
  for (std::size_t r = 0; r < gram_.rows(); ++r)
    for (std::size_t c = r + 1; c < gram_.cols(); ++c)
      if (gram_(r, c) != gram_(c, r)) throw Error(ErrorKind::InvalidInput, "Gram matrix is not symmetric");
}

Rational IntersectionLattice::pair(const RatVector& a, const RatVector& b) const {
  if (a.size() != rank() || b.size() != rank()) throw Error(ErrorKind::InvalidInput, "vector rank mismatch");
  Rational s = 0;
  for (std::size_t r = 0; r < rank(); ++r) {
    if (a[r] == 0) continue;
    for (std::size_t c = 0; c < rank(); ++c) {
      if (gram_(r, c) != 0 && b[c] != 0) s += a[r] * gram_(r, c) * b[c];
    }
  }
  return s;
}

Integer IntersectionLattice::determinant() const { return csinv::determinant(gram_); }

bool IntersectionLattice::is_unimodular() const {
  const Integer d = determinant();
  return d == 1 || d == -1;
}

Inertia IntersectionLattice::inertia() const { return csinv::inertia(to_rational(gram_)); }

std::string IntersectionLattice::to_grid() const { return csinv::to_grid(gram_); }

PeriodSubspace::PeriodSubspace(const IntersectionLattice& lattice, RatMatrix basis)
    : basis_(std::move(basis)) {
  if (basis_.rows() != lattice.rank()) {
    throw Error(ErrorKind::InvalidInput, "period basis has the wrong number of rows");
  }
  gram_ = basis_.transposed() * to_rational(lattice.gram()) * basis_;
  for (const Rational& minor : leading_principal_minors(gram_)) {
    if (minor <= 0) throw Error(ErrorKind::InvalidInput, "period subspace is not positive definite");
  }
  const std::size_t b_plus = lattice.inertia().positive;
  if (basis_.cols() != b_plus) {
    throw Error(ErrorKind::InvalidInput, "period subspace has dimension " +
                                             std::to_string(basis_.cols()) + " but b+ = " +
                                             std::to_string(b_plus));
  }
}

Projection selfdual_project(const IntersectionLattice& lattice, const PeriodSubspace& period,
                            const RatVector& a) {
  const std::size_t n = lattice.rank();
  const std::size_t p = period.dimension();
  if (a.size() != n) throw Error(ErrorKind::InvalidInput, "vector rank mismatch");
  Projection out{RatVector(n, Rational(0)), Rational(0)};
  if (p == 0) return out;

  const RatMatrix& basis = period.basis();
  RatVector qa(n, Rational(0));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (lattice.gram()(r, c) != 0) qa[r] += lattice.gram()(r, c) * a[c];
  RatVector rhs(p, Rational(0));
  for (std::size_t j = 0; j < p; ++j)
    for (std::size_t r = 0; r < n; ++r) rhs[j] += basis(r, j) * qa[r];

  const RatVector x = solve(period.restricted_gram(), rhs);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t j = 0; j < p; ++j) out.a_plus[r] += basis(r, j) * x[j];
  // (a+)^2 = x^T G x = x . rhs, since G x = rhs
  for (std::size_t j = 0; j < p; ++j) out.a_plus_sq += x[j] * rhs[j];
  return out;
}

RatVector AmbientLattice::alpha() const {
  RatVector a(lattice_.rank(), Rational(0));
  if (m_ == 0) return a;
  for (std::size_t j = 0; j < block_axes_; ++j) a[j] = 1;
  return a;
}

namespace {

IntMatrix ambient_gram(const std::vector<std::int64_t>& block_diag, std::size_t k) {
  IntMatrix g(block_diag.size() + k, block_diag.size() + k);
  for (std::size_t j = 0; j < block_diag.size(); ++j) g(j, j) = block_diag[j];
  for (std::size_t i = 0; i < k; ++i) g(block_diag.size() + i, block_diag.size() + i) = -1;
  return g;
}

void reject_negative(const std::vector<std::int64_t>& c1_squares) {
  for (auto c : c1_squares) {
    if (c < 0) {
      throw Error(ErrorKind::UnsupportedParameter,
                  "negative c1^2 = " + std::to_string(c) + " cannot sit on a diagonal alpha axis");
    }
  }
}

}  // namespace

AmbientLattice build_ambient(const std::vector<std::int64_t>& c1_squares, std::size_t k) {
  reject_negative(c1_squares);
  std::int64_t total = 0;
  for (auto c : c1_squares) total += c;
  return AmbientLattice(IntersectionLattice(ambient_gram({total}, k)),
                        AmbientLattice::Mode::collapsed, c1_squares.size(), 1, k);
}

AmbientLattice build_ambient_per_block(const std::vector<std::int64_t>& c1_squares, std::size_t k) {
  reject_negative(c1_squares);
  return AmbientLattice(IntersectionLattice(ambient_gram(c1_squares, k)),
                        AmbientLattice::Mode::per_block, c1_squares.size(), c1_squares.size(), k);
}

std::vector<int> MonopoleClass::sign_pattern() const {
  std::vector<int> out = block_signs;
  out.insert(out.end(), generator_signs.begin(), generator_signs.end());
  return out;
}

std::string MonopoleClass::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords.size(); ++i) os << (i ? "," : "") << coords[i];
  os << ") signs ";
  for (int s : sign_pattern()) os << (s > 0 ? '+' : '-');
  return os.str();
}

std::vector<MonopoleClass> enumerate_monopole_classes(const AmbientLattice& ambient,
                                                      std::uint64_t limit) {
  const std::size_t block_bits = ambient.block_axes();
  const std::size_t bits = block_bits + ambient.generator_count();
  if (bits >= 63 || (std::uint64_t{1} << bits) > limit) {
    throw Error(ErrorKind::SizeLimit, "2^" + std::to_string(bits) + " sign patterns exceed the limit of " +
                                          std::to_string(limit));
  }
  const bool has_alpha = ambient.block_count() > 0;
  std::vector<MonopoleClass> out;
  std::set<IntVector> seen;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
    MonopoleClass c;
    c.coords.assign(ambient.lattice().rank(), 0);
    for (std::size_t b = 0; b < bits; ++b) {
      const int sign = (mask >> (bits - 1 - b)) & 1 ? -1 : 1;
      if (b < block_bits) {
        c.block_signs.push_back(sign);
        if (has_alpha) c.coords[b] = sign;
      } else {
        c.generator_signs.push_back(sign);
        c.coords[ambient.generator_axis(b - block_bits)] = sign;
      }
    }
    if (seen.insert(c.coords).second) out.push_back(std::move(c));
  }
  return out;
}

MonopoleClass greedy_monopole_class(const AmbientLattice& ambient, const PeriodSubspace& period) {
  const IntersectionLattice& lattice = ambient.lattice();
  const Projection alpha = selfdual_project(lattice, period, ambient.alpha());
  MonopoleClass c;
  c.coords.assign(lattice.rank(), 0);
  c.block_signs.assign(ambient.block_axes(), 1);
  if (ambient.block_count() > 0)
    for (std::size_t j = 0; j < ambient.block_axes(); ++j) c.coords[j] = 1;
  for (std::size_t i = 0; i < ambient.generator_count(); ++i) {
    RatVector e(lattice.rank(), Rational(0));
    e[ambient.generator_axis(i)] = 1;
    const int t = lattice.pair(alpha.a_plus, e) >= 0 ? 1 : -1;
    c.generator_signs.push_back(t);
    c.coords[ambient.generator_axis(i)] = t;
  }
  return c;
}

Maximization maximize_aplus_squared(const AmbientLattice& ambient, const PeriodSubspace& period,
                                    const std::vector<MonopoleClass>& classes) {
  const IntersectionLattice& lattice = ambient.lattice();
  Maximization out;
  out.greedy = greedy_monopole_class(ambient, period);
  out.greedy_value = selfdual_project(lattice, period, to_rational(out.greedy.coords)).a_plus_sq;
  out.alpha_sq = lattice.square(ambient.alpha());
  if (classes.empty()) throw Error(ErrorKind::InvalidInput, "no monopole classes to maximize over");
  bool first = true;
  for (const auto& c : classes) {
    const Rational v = selfdual_project(lattice, period, to_rational(c.coords)).a_plus_sq;
    if (first || v > out.value || (v == out.value && c.sign_pattern() > out.best.sign_pattern())) {
      out.best = c;
      out.value = v;
      first = false;
    }
  }
  return out;
}

namespace {

void normalize_sign(IntVector& v) {
  for (auto x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : v) y = -y;
    return;
  }
}

}  // namespace

Diagonalization diagonalize_definite(const IntersectionLattice& lattice, std::size_t rank_limit) {
  const std::size_t n = lattice.rank();
  if (n > rank_limit) {
    throw Error(ErrorKind::RankLimit,
                "rank " + std::to_string(n) + " exceeds the limit " + std::to_string(rank_limit));
  }
  if (lattice.inertia().negative != n) throw Error(ErrorKind::InvalidInput, "form is not negative definite");
  if (!lattice.is_unimodular()) throw Error(ErrorKind::InvalidInput, "form is not unimodular");

  Diagonalization out;
  if (n == 0) {
    out.diagonalizable = true;
    return out;
  }

  // A = -Q is positive definite; |x_i|^2 <= (A^{-1})_ii * x^T A x.
  IntMatrix a(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a(r, c) = -lattice.gram()(r, c);
  const RatMatrix a_inv = inverse(to_rational(a));
  for (std::size_t i = 0; i < n; ++i) out.coordinate_bounds.push_back(floor_sqrt(a_inv(i, i)).convert_to<std::int64_t>());

  IntVector x(n, 0);
  std::function<void(std::size_t, std::int64_t)> walk = [&](std::size_t i, std::int64_t partial) {
    if (i == n) {
      ++out.vectors_examined;
      if (partial == 1) out.norm_minus_one.push_back(x);
      return;
    }
    const std::int64_t bound = out.coordinate_bounds[i];
    for (std::int64_t v = -bound; v <= bound; ++v) {
      x[i] = v;
      std::int64_t cross = 0;
      for (std::size_t j = 0; j < i; ++j) cross += a(i, j) * x[j];
      walk(i + 1, partial + a(i, i) * v * v + 2 * v * cross);
    }
    x[i] = 0;
  };
  walk(0, 0);

  std::vector<IntVector> candidates;
  for (auto v : out.norm_minus_one) {
    normalize_sign(v);
    candidates.push_back(std::move(v));
  }
  std::sort(candidates.begin(), candidates.end(), std::greater<>());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  // In diag(-1)^n every square -1 vector is +-e_i, so a greedy frame never
  // gets stuck when one exists.
  std::vector<IntVector> frame;
  auto orthogonal = [&](const IntVector& u, const IntVector& v) {
    return lattice.pair(to_rational(u), to_rational(v)) == 0;
  };
  for (const auto& v : candidates) {
    if (frame.size() == n) break;
    if (std::all_of(frame.begin(), frame.end(), [&](const IntVector& f) { return orthogonal(f, v); })) {
      frame.push_back(v);
    }
  }
  out.frame_size = frame.size();
  if (frame.size() < n) return out;

  std::sort(frame.begin(), frame.end(), std::greater<>());
  out.basis = IntMatrix(n, n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) out.basis(r, c) = frame[c][r];
  const IntMatrix check = out.basis.transposed() * lattice.gram() * out.basis;
  IntMatrix minus_identity(n, n);
  for (std::size_t i = 0; i < n; ++i) minus_identity(i, i) = -1;
  if (!(check == minus_identity)) throw std::logic_error("frame does not diagonalize the form");
  out.diagonalizable = true;
  return out;
}

}  // namespace csinv
