#include "csinv/topology.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "csinv/error.hpp"

namespace csinv {

std::string_view to_string(Tri t) {
  switch (t) {
    case Tri::yes: return "yes";
    case Tri::no: return "no";
    case Tri::unknown: return "unknown";
  }
  return "unknown";
}

Tri parse_tri(std::string_view text) {
  if (text == "yes" || text == "y") return Tri::yes;
  if (text == "no" || text == "n") return Tri::no;
  if (text == "unknown" || text == "?") return Tri::unknown;
  throw Error(ErrorKind::InvalidInput, "not a tri-state value: '" + std::string(text) + "'");
}

std::string ManifoldBlock::display_name() const {
  return orientation_reversed ? "rev(" + name + ")" : name;
}

void validate_block(const ManifoldBlock& b) {
  auto fail = [&](const std::string& what) {
    throw Error(ErrorKind::CatalogError, "block '" + b.name + "': " + what);
  };
  if (b.name.empty()) fail("empty name");
  if (b.betti.b1 < 0 || b.betti.b_plus < 0 || b.betti.b_minus < 0) fail("negative Betti number");
  if (b.c1_squared && *b.c1_squared != b.betti.two_chi_plus_three_tau()) {
    fail("c1^2 = " + std::to_string(*b.c1_squared) + " but 2chi+3tau = " +
         std::to_string(b.betti.two_chi_plus_three_tau()));
  }
  if (b.flags.admits_asd_psc == Tri::yes && b.betti.b_plus != 0) {
    fail("anti-self-dual positive scalar curvature requires b+ = 0");
  }
  if (b.flags.admits_psc == Tri::yes && b.flags.admits_nonneg_scalar != Tri::yes) {
    fail("positive scalar curvature must imply non-negative scalar curvature");
  }
  if (b.flags.spin == Tri::yes && b.betti.signature() % 16 != 0) {
    fail("spin block with signature " + std::to_string(b.betti.signature()) +
         " (external check: Rokhlin, tau = 0 mod 16)");
  }
}

ManifoldBlock reverse_orientation(const ManifoldBlock& block) {
  ManifoldBlock out = block;
  std::swap(out.betti.b_plus, out.betti.b_minus);
  out.c1_squared.reset();
  out.flags.minimal_complex_surface = Tri::unknown;
  out.flags.symplectic = Tri::unknown;
  out.flags.sw_mod2_nonzero = Tri::unknown;
  out.flags.admits_asd_psc = Tri::unknown;
  out.orientation_reversed = !block.orientation_reversed;
  return out;
}

ManifoldBlock Summand::oriented() const { return reversed ? reverse_orientation(block) : block; }

std::string Summand::label() const {
  std::string node = reversed ? "rev(" + block.name + ")" : block.name;
  return multiplicity == 1 ? node : std::to_string(multiplicity) + "*" + node;
}

SumExpression::SumExpression(std::vector<Summand> summands) {
  if (summands.empty()) throw Error(ErrorKind::InvalidInput, "empty connected sum");
  for (const auto& s : summands) {
    if (s.multiplicity <= 0) {
      throw Error(ErrorKind::InvalidInput,
                  "multiplicity of '" + s.block.name + "' must be positive");
    }
  }
  std::stable_sort(summands.begin(), summands.end(), [](const Summand& a, const Summand& b) {
    return std::tie(a.block.name, a.reversed) < std::tie(b.block.name, b.reversed);
  });
  for (auto& s : summands) {
    if (!summands_.empty() && summands_.back().block.name == s.block.name &&
        summands_.back().reversed == s.reversed) {
      if (!(summands_.back().block == s.block)) {
        throw Error(ErrorKind::InvalidInput,
                    "two different blocks share the name '" + s.block.name + "'");
      }
      summands_.back().multiplicity += s.multiplicity;
    } else {
      summands_.push_back(std::move(s));
    }
  }
}

std::int64_t SumExpression::count() const {
  std::int64_t n = 0;
  for (const auto& s : summands_) n += s.multiplicity;
  return n;
}

std::string SumExpression::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < summands_.size(); ++i) {
    if (i) os << " # ";
    os << summands_[i].label();
  }
  return os.str();
}

bool operator==(const SumExpression& a, const SumExpression& b) {
  if (a.summands_.size() != b.summands_.size()) return false;
  for (std::size_t i = 0; i < a.summands_.size(); ++i) {
    const auto& x = a.summands_[i];
    const auto& y = b.summands_[i];
    if (x.reversed != y.reversed || x.multiplicity != y.multiplicity || !(x.block == y.block)) {
      return false;
    }
  }
  return true;
}

BettiData connected_sum(const std::vector<Summand>& summands) {
  BettiData total;
  for (const auto& s : summands) {
    const BettiData b = s.oriented().betti;
    total.b1 += s.multiplicity * b.b1;
    total.b_plus += s.multiplicity * b.b_plus;
    total.b_minus += s.multiplicity * b.b_minus;
  }
  return total;
}

BettiData connected_sum(const SumExpression& expr) { return connected_sum(expr.summands()); }

std::int64_t two_chi_plus_three_tau(const SumExpression& expr) {
  return connected_sum(expr).two_chi_plus_three_tau();
}

SumFlags sum_flags(const std::vector<Summand>& summands) {
  SumFlags out;
  if (summands.empty()) {
    out.spin = out.admits_psc = out.admits_nonneg_scalar = Tri::yes;
    return out;
  }
  bool all_spin = true, any_nonspin = false, all_psc = true;
  for (const auto& s : summands) {
    const ManifoldBlock b = s.oriented();
    all_spin = all_spin && b.flags.spin == Tri::yes;
    any_nonspin = any_nonspin || b.flags.spin == Tri::no;
    all_psc = all_psc && b.flags.admits_psc == Tri::yes;
  }
  out.spin = all_spin ? Tri::yes : (any_nonspin ? Tri::no : Tri::unknown);
  // Gromov-Lawson: psc survives connected sums.
  out.admits_psc = all_psc ? Tri::yes : Tri::unknown;
  if (all_psc) {
    out.admits_nonneg_scalar = Tri::yes;
  } else if (summands.size() == 1 && summands.front().multiplicity == 1) {
    const Tri nonneg = summands.front().oriented().flags.admits_nonneg_scalar;
    out.admits_nonneg_scalar = nonneg == Tri::yes ? Tri::yes : Tri::unknown;
  }
  return out;
}

}  // namespace csinv
