#include "csinv/theorems.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "csinv/error.hpp"

namespace csinv {

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::unknown: return "unknown";
  }
  return "unknown";
}

std::string_view to_string(Invariant inv) {
  switch (inv) {
    case Invariant::yamabe: return "yamabe";
    case Invariant::i_s: return "i_s";
    case Invariant::i_r: return "i_r";
    case Invariant::einstein: return "einstein";
  }
  return "?";
}

std::string QuadrupleWitness::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) out += ", ";
    out += blocks[i].display_name();
  }
  return out + "), m = " + std::to_string(prefix_m);
}

std::string Conclusion::to_string() const {
  const std::string name(csinv::to_string(invariant));
  switch (kind) {
    case Kind::value: return name + " = " + value.to_string();
    case Kind::interval: return name + " in [" + value.to_string() + ", " + upper.to_string() + "]";
    case Kind::lower_bound: return name + " >= " + value.to_string();
    case Kind::upper_bound: return name + " <= " + value.to_string();
    case Kind::verdict: return obstructed ? "no Einstein metric" : "no obstruction from this rule";
  }
  return name;
}

bool Certificate::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const HypothesisCheck& c) { return c.status == CheckStatus::pass; });
}

std::int64_t Split::c1_sum() const {
  std::int64_t total = 0;
  for (const auto& b : x) total += b.c1_squared.value_or(0);
  return total;
}

std::string Split::n_string() const {
  if (n_part.empty()) return std::string(kS4);
  return SumExpression(n_part).to_string();
}

namespace {

CheckStatus from_tri(Tri t) {
  switch (t) {
    case Tri::yes: return CheckStatus::pass;
    case Tri::no: return CheckStatus::fail;
    case Tri::unknown: return CheckStatus::unknown;
  }
  return CheckStatus::unknown;
}

CheckStatus from_bool(bool ok) { return ok ? CheckStatus::pass : CheckStatus::fail; }

std::int64_t mod(std::int64_t a, std::int64_t n) { return ((a % n) + n) % n; }

ExactReal pi_squared(const Rational& q) { return ExactReal::pi(q, 2); }

void finish(Certificate& c, Conclusion conclusion) {
  if (c.all_pass()) c.conclusion = std::move(conclusion);
}

void add(Certificate& c, std::string condition, CheckStatus status, std::string evidence) {
  c.checks.push_back({c.rule_id, std::move(condition), status, std::move(evidence)});
}

void append(Certificate& c, const std::vector<HypothesisCheck>& checks) {
  c.checks.insert(c.checks.end(), checks.begin(), checks.end());
}

void add_n_b_plus(Certificate& c, const Split& s) {
  const std::int64_t bp = s.n_betti().b_plus;
  add(c, "b+(N) = 0 for N = " + s.n_string(), from_bool(bp == 0), "b+(N) = " + std::to_string(bp));
}

void add_n_nonneg(Certificate& c, const Split& s) {
  const Tri t = sum_flags(s.n_part).admits_nonneg_scalar;
  add(c, "N admits a metric of non-negative scalar curvature", from_tri(t),
      s.n_part.empty() ? "N = S4 (round metric)" : "propagated flag: " + std::string(to_string(t)));
}

}  // namespace

// ---- hypotheses -------------------------------------------------------------

std::vector<HypothesisCheck> check_quadruple(const QuadrupleWitness& w, QuadrupleFlavor flavor,
                                             const std::string& rule_id) {
  std::vector<HypothesisCheck> out;
  auto push = [&](std::string cond, CheckStatus st, std::string ev) {
    out.push_back({rule_id, std::move(cond), st, std::move(ev)});
  };
  std::int64_t total = 0;
  std::string sum_text;
  for (std::size_t j = 0; j < w.blocks.size(); ++j) {
    const ManifoldBlock& b = w.blocks[j];
    const std::string label = "X" + std::to_string(j + 1) + " = " + b.display_name();
    push("b1(" + label + ") = 0", from_bool(b.betti.b1 == 0), "b1 = " + std::to_string(b.betti.b1));
    push("b+(" + label + ") = 3 mod 4", from_bool(mod(b.betti.b_plus, 4) == 3),
         "b+ = " + std::to_string(b.betti.b_plus) + " = " + std::to_string(mod(b.betti.b_plus, 4)) +
             " mod 4");
    total += b.betti.b_plus;
    sum_text += (j ? "+" : "") + std::to_string(b.betti.b_plus);
  }
  push("sum of b+(X1..X4) = 4 mod 8", from_bool(mod(total, 8) == 4),
       sum_text + " = " + std::to_string(total) + " = " + std::to_string(mod(total, 8)) + " mod 8");

  for (std::size_t j = 0; j < w.blocks.size() && flavor != QuadrupleFlavor::arithmetic; ++j) {
    const ManifoldBlock& b = w.blocks[j];
    const std::string label = "X" + std::to_string(j + 1) + " = " + b.display_name();
    const CheckStatus carrier = b.c1_squared ? CheckStatus::pass : CheckStatus::unknown;
    const std::string c1_text =
        b.c1_squared ? "c1^2 = " + std::to_string(*b.c1_squared) : "no c1^2 recorded";
    if (flavor == QuadrupleFlavor::minimal_complex) {
      push(label + " is a minimal complex surface", from_tri(b.flags.minimal_complex_surface),
           "flag: " + std::string(to_string(b.flags.minimal_complex_surface)));
      push(label + " carries its complex c1", carrier, c1_text);
    } else {
      push(label + " is almost-complex", carrier, c1_text);
      push("mod-2 Seiberg-Witten invariant of " + label + " is nonzero",
           from_tri(b.flags.sw_mod2_nonzero),
           "flag: " + std::string(to_string(b.flags.sw_mod2_nonzero)));
    }
  }
  return out;
}

namespace {

using Key = std::pair<std::string, bool>;

std::map<Key, std::int64_t> multiset(const std::vector<Summand>& summands) {
  std::map<Key, std::int64_t> out;
  for (const auto& s : summands) out[{s.block.name, s.reversed}] += s.multiplicity;
  return out;
}

Key witness_key(const ManifoldBlock& b) { return {b.name, b.orientation_reversed}; }

}  // namespace

int default_prefix(const SumExpression& expr, const std::array<ManifoldBlock, 4>& blocks) {
  auto available = multiset(expr.summands());
  int m = 0;
  for (const auto& b : blocks) {
    if (b.orientation_reversed) break;
    auto it = available.find(witness_key(b));
    if (it == available.end() || it->second == 0) break;
    --it->second;
    ++m;
  }
  return m;
}

Split split_sum(const SumExpression& expr, const QuadrupleWitness& w) {
  if (w.prefix_m < 1 || w.prefix_m > 4) {
    throw Error(ErrorKind::MalformedSplit, "m must lie in 1..4, got " + std::to_string(w.prefix_m));
  }
  Split s;
  auto remaining = multiset(expr.summands());
  for (int j = 0; j < w.prefix_m; ++j) {
    const ManifoldBlock& b = w.blocks[j];
    auto it = remaining.find(witness_key(b));
    if (b.orientation_reversed || it == remaining.end() || it->second == 0) {
      throw Error(ErrorKind::MalformedSplit,
                  "witness block X" + std::to_string(j + 1) + " = " + b.display_name() +
                      " is not an available summand of " + expr.to_string());
    }
    --it->second;
    s.x.push_back(b);
  }
  for (const auto& summand : expr.summands()) {
    const std::int64_t left = remaining[{summand.block.name, summand.reversed}];
    if (left == 0) continue;
    s.n_part.push_back({summand.block, summand.reversed, left});
  }
  // a witness block must be the very block the expression uses under that name
  for (const auto& x : s.x) {
    for (const auto& summand : expr.summands()) {
      if (summand.block.name == x.name && !summand.reversed && !(summand.block == x)) {
        throw Error(ErrorKind::MalformedSplit, "witness block " + x.name + " differs from summand");
      }
    }
  }
  return s;
}

std::optional<QuadrupleWitness> suggest_witness(const SumExpression& expr, const ManifoldBlock& k3) {
  std::vector<ManifoldBlock> candidates;
  for (const auto& s : expr.summands()) {
    const ManifoldBlock& b = s.block;
    if (s.reversed || !b.c1_squared || b.betti.b1 != 0 || mod(b.betti.b_plus, 4) != 3) continue;
    if (b.flags.minimal_complex_surface != Tri::yes && b.flags.sw_mod2_nonzero != Tri::yes) continue;
    for (std::int64_t i = 0; i < s.multiplicity && candidates.size() < 4; ++i) candidates.push_back(b);
  }
  if (candidates.empty()) return std::nullopt;

  std::vector<ManifoldBlock> pads;
  for (const auto& c : candidates) {
    if (std::none_of(pads.begin(), pads.end(), [&](const ManifoldBlock& p) { return p == c; })) {
      pads.push_back(c);
    }
  }
  if (std::none_of(pads.begin(), pads.end(), [&](const ManifoldBlock& p) { return p == k3; })) {
    pads.push_back(k3);
  }

  for (std::size_t prefix = candidates.size(); prefix >= 1; --prefix) {
    const std::size_t free_slots = 4 - prefix;
    std::size_t combos = 1;
    for (std::size_t i = 0; i < free_slots; ++i) combos *= pads.size();
    for (std::size_t code = 0; code < combos; ++code) {
      QuadrupleWitness w;
      std::int64_t total = 0;
      std::size_t rest = code;
      for (std::size_t j = 0; j < 4; ++j) {
        if (j < prefix) {
          w.blocks[j] = candidates[j];
        } else {
          w.blocks[j] = pads[rest % pads.size()];
          rest /= pads.size();
        }
        total += w.blocks[j].betti.b_plus;
      }
      if (mod(total, 8) == 4) {
        w.prefix_m = static_cast<int>(prefix);
        w.suggested = true;
        return w;
      }
    }
  }
  return std::nullopt;
}

// ---- constants ---------------------------------------------------------------

ExactReal scalar_l2_bound(const Rational& a_plus_sq) {
  if (a_plus_sq < 0) throw Error(ErrorKind::InvalidInput, "(a+)^2 must be non-negative");
  return pi_squared(32 * a_plus_sq);
}

ExactReal weyl_bound(const Rational& a_plus_sq) {
  if (a_plus_sq < 0) throw Error(ErrorKind::InvalidInput, "(a+)^2 must be non-negative");
  return pi_squared(72 * a_plus_sq);
}

ExactReal monopole_yamabe(std::int64_t c1_sum) {
  if (c1_sum < 0) throw Error(ErrorKind::UnsupportedParameter, "negative sum of c1^2");
  return ExactReal::pi(-4, 1, 2 * c1_sum);
}

ExactReal ricci_value(std::int64_t m, std::int64_t n_two_chi_three_tau, std::int64_t c1_sum) {
  return pi_squared(8 * Rational(4 * m - n_two_chi_three_tau + c1_sum));
}

ExactReal ricci_value_family(std::int64_t k, std::int64_t l, std::int64_t m, std::int64_t c1_sum) {
  return pi_squared(8 * Rational(k + 4 * (l + m - 1) + c1_sum));
}

std::int64_t einstein_gate_betti(std::int64_t m, std::int64_t n_b1, std::int64_t n_b_minus) {
  return 12 * (m - 1) + 12 * n_b1 + 3 * n_b_minus;
}

std::int64_t einstein_gate_euler(std::int64_t m, std::int64_t n_two_chi_three_tau) {
  return 3 * (4 * m - n_two_chi_three_tau);
}

ExactInterval kobayashi_interval(std::int64_t k, std::int64_t l) {
  if (k < 0 || l < 0 || k + l < 1) {
    throw Error(ErrorKind::InvalidInput, "Kobayashi bracket needs k, l >= 0 and k + l >= 1");
  }
  return ExactInterval(ExactReal::pi(12, 1, 2), ExactReal::pi(8, 1, 6));
}

Rewrite kobayashi_rewrite(const SumExpression& expr, const Catalog& catalog) {
  Rewrite out;
  std::map<Key, std::int64_t> left;
  for (const auto& s : expr.summands()) {
    if (s.block.name == kS4) continue;
    left[{s.block.name, s.reversed}] += s.multiplicity;
  }
  for (const DissolveAnnotation& d : catalog.dissolve_annotations()) {
    auto fits = [&] {
      return std::all_of(d.parts.begin(), d.parts.end(), [&](const DissolveAnnotation::Part& p) {
        auto it = left.find({p.name, p.reversed});
        return it != left.end() && it->second >= p.multiplicity;
      });
    };
    while (fits()) {
      for (const auto& p : d.parts) left[{p.name, p.reversed}] -= p.multiplicity;
      out.k += d.k;
      out.l += d.l;
      std::string used;
      for (const auto& p : d.parts) {
        if (!used.empty()) used += " # ";
        used += (p.multiplicity == 1 ? "" : std::to_string(p.multiplicity) + "*") +
                (p.reversed ? "rev(" + p.name + ")" : p.name);
      }
      out.used.push_back(used + " = " + std::to_string(d.k) + " CP2 # " + std::to_string(d.l) +
                         " CP2bar");
    }
  }
  for (const auto& [key, n] : left) {
    if (n == 0) continue;
    const auto& [name, reversed] = key;
    if (name == kCP2) {
      (reversed ? out.l : out.k) += n;
    } else if (name == kCP2bar) {
      (reversed ? out.k : out.l) += n;
    } else {
      throw Error(ErrorKind::NoRewrite, "summand " + (reversed ? "rev(" + name + ")" : name) +
                                            " has no recorded rewrite to CP2 / CP2bar");
    }
  }
  if (out.k + out.l == 0) throw Error(ErrorKind::NoRewrite, "nothing left after dropping S4");
  return out;
}

ExactReal scalar_from_yamabe(const ExactReal& y) {
  if (y.sign() >= 0) return {};
  return y.squared();
}

ExactReal yamabe_from_scalar(const ExactReal& i_s) {
  if (i_s.sign() < 0) throw Error(ErrorKind::InvalidInput, "I_s is never negative");
  if (i_s.is_zero()) {
    throw Error(ErrorKind::SignUnknown, "I_s = 0 only says Y >= 0; the value is not determined");
  }
  return -i_s.sqrt();
}

std::string lattice_evidence(std::int64_t c1_sum, std::int64_t k) {
  if (c1_sum <= 0) return "alpha = 0: the bound (a+)^2 >= 0 is immediate";
  if (k > 64) return "lattice check skipped (k = " + std::to_string(k) + " > 64)";
  const AmbientLattice amb = build_ambient({c1_sum}, static_cast<std::size_t>(k));
  RatMatrix basis(amb.lattice().rank(), 1);
  basis(0, 0) = 1;
  for (std::int64_t i = 0; i < k; ++i) basis(amb.generator_axis(i), 0) = Rational(1, k + 1);
  const PeriodSubspace period(amb.lattice(), basis);
  const MonopoleClass greedy = greedy_monopole_class(amb, period);
  const Projection p = selfdual_project(amb.lattice(), period, to_rational(greedy.coords));
  std::ostringstream os;
  os << "greedy class on diag(" << c1_sum << ", -1 x " << k << ") with a tilted period line: "
     << "(a+)^2 = " << to_string(p.a_plus_sq) << " >= alpha^2 = " << c1_sum;
  if (p.a_plus_sq < c1_sum) throw std::logic_error("greedy monopole class below alpha^2");
  return os.str();
}

// ---- split-based rules ----------------------------------------------------------

Certificate yamabe_monopole_sum(const QuadrupleWitness& w, const Split& s) {
  Certificate c{rule::kYamabeMonopole,
                "Yamabe invariant of a sum of minimal surfaces with a non-negative N: "
                "Y = -4π√(2 Σ c1^2(X_j))",
                {}, std::nullopt, {}};
  append(c, check_quadruple(w, QuadrupleFlavor::minimal_complex, c.rule_id));
  add_n_b_plus(c, s);
  add_n_nonneg(c, s);
  c.notes.push_back("non-negative scalar curvature on N is read as Y(N) >= 0");
  finish(c, {Invariant::yamabe, Conclusion::Kind::value, monopole_yamabe(s.c1_sum()), {}, false});
  return c;
}

Certificate scalar_exact(const QuadrupleWitness& w, const Split& s) {
  Certificate c{rule::kScalarExact,
                "scalar-curvature invariant of a sum of minimal surfaces with a non-negative N: "
                "I_s = 32π² Σ c1^2(X_j) (monopole lower bound meets the subadditive upper bound)",
                {}, std::nullopt, {}};
  append(c, check_quadruple(w, QuadrupleFlavor::minimal_complex, c.rule_id));
  add_n_b_plus(c, s);
  add_n_nonneg(c, s);
  finish(c, {Invariant::i_s, Conclusion::Kind::value, scalar_l2_bound(s.c1_sum()), {}, false});
  return c;
}

Certificate scalar_monopole_lower(const QuadrupleWitness& w, const Split& s) {
  Certificate c{rule::kScalarLower,
                "monopole class with (a+)^2 >= Σ c1^2 and ∫ s² >= 32π² (a+)^2: "
                "I_s >= 32π² Σ c1^2(X_j)",
                {}, std::nullopt, {}};
  append(c, check_quadruple(w, QuadrupleFlavor::sw_almost_complex, c.rule_id));
  add_n_b_plus(c, s);
  if (c.all_pass()) c.notes.push_back(lattice_evidence(s.c1_sum(), s.n_betti().b_minus));
  finish(c,
         {Invariant::i_s, Conclusion::Kind::lower_bound, scalar_l2_bound(s.c1_sum()), {}, false});
  return c;
}

namespace {

struct Family {
  std::int64_t k = 0;
  std::int64_t l = 0;
};

std::optional<Family> corollary_family(const Split& s) {
  Family f;
  for (const auto& n : s.n_part) {
    if (n.reversed) return std::nullopt;
    if (n.block.name == kCP2bar) f.k += n.multiplicity;
    else if (n.block.name == kS1xS3) f.l += n.multiplicity;
    else if (n.block.name != kS4) return std::nullopt;
  }
  return f;
}

}  // namespace

Certificate ricci_exact(const QuadrupleWitness& w, const Split& s) {
  Certificate c{rule::kRicciExact,
                "Ricci invariant with an anti-self-dual positive-scalar N: "
                "I_r = 8π² [4m - (2χ+3τ)(N) + Σ c1^2(X_j)]",
                {}, std::nullopt, {}};
  append(c, check_quadruple(w, QuadrupleFlavor::minimal_complex, c.rule_id));
  if (s.n_part.empty()) {
    add(c, "N admits an anti-self-dual metric of positive scalar curvature", CheckStatus::pass,
        "N = S4 (round metric)");
  }
  for (const auto& n : s.n_part) {
    const ManifoldBlock b = n.oriented();
    add(c, b.display_name() + " admits an anti-self-dual metric of positive scalar curvature",
        from_tri(b.flags.admits_asd_psc), "flag: " + std::string(to_string(b.flags.admits_asd_psc)));
  }
  const BettiData nb = s.n_betti();
  const ExactReal value = ricci_value(s.m(), nb.two_chi_plus_three_tau(), s.c1_sum());
  c.notes.push_back("(2χ+3τ)(N) = " + std::to_string(nb.two_chi_plus_three_tau()) +
                    ", m = " + std::to_string(s.m()) + ", Σ c1^2 = " + std::to_string(s.c1_sum()));
  if (auto f = corollary_family(s)) {
    const ExactReal family = ricci_value_family(f->k, f->l, s.m(), s.c1_sum());
    if (!(family == value)) {
      throw std::logic_error("Ricci closed forms disagree: " + value.to_string() + " vs " +
                             family.to_string());
    }
    c.notes.push_back("N = " + std::to_string(f->k) + " CP2bar # " + std::to_string(f->l) +
                      " S1xS3: 8π²[k + 4(l + m - 1) + Σ c1^2] = " + family.to_string() + " agrees");
  }
  finish(c, {Invariant::i_r, Conclusion::Kind::value, value, {}, false});
  return c;
}

Certificate ricci_monopole_lower(const QuadrupleWitness& w, const Split& s) {
  Certificate c{rule::kRicciLower,
                "∫|r|² >= 8π² [2(a+)^2 - (2χ+3τ)(M)] with (a+)^2 >= Σ c1^2: "
                "I_r >= 8π² [4m - (2χ+3τ)(N) + Σ c1^2(X_j)]",
                {}, std::nullopt, {}};
  append(c, check_quadruple(w, QuadrupleFlavor::sw_almost_complex, c.rule_id));
  add_n_b_plus(c, s);
  const BettiData nb = s.n_betti();
  if (c.all_pass()) {
    c.notes.push_back("Weyl-mixed bound 72π²(a+)^2 >= " + weyl_bound(s.c1_sum()).to_string());
  }
  finish(c, {Invariant::i_r, Conclusion::Kind::lower_bound,
             ricci_value(s.m(), nb.two_chi_plus_three_tau(), s.c1_sum()), {}, false});
  return c;
}

Certificate einstein_monopole_obstruction(const QuadrupleWitness& w, const Split& s) {
  const std::int64_t m = s.m();
  if (m < 2 || m > 4) {
    throw Error(ErrorKind::OutOfRange,
                "the monopole Einstein obstruction needs m = 2, 3 or 4, got m = " + std::to_string(m));
  }
  Certificate c{rule::kEinsteinMonopole,
                "no Einstein metric when 12(m-1) + 12 b1(N) + 3 b-(N) >= Σ c1^2(X_j), "
                "equivalently 4m - (2χ+3τ)(N) >= Σ c1^2(X_j) / 3",
                {}, std::nullopt, {}};
  append(c, check_quadruple(w, QuadrupleFlavor::sw_almost_complex, c.rule_id));
  add_n_b_plus(c, s);

  const BettiData nb = s.n_betti();
  const std::int64_t sum = s.c1_sum();
  const std::int64_t lhs_betti = einstein_gate_betti(m, nb.b1, nb.b_minus);
  const std::int64_t lhs_euler = einstein_gate_euler(m, nb.two_chi_plus_three_tau());
  const bool gate_betti = lhs_betti >= sum;
  const bool gate_euler = lhs_euler >= sum;

  std::vector<Summand> all = s.n_part;
  for (const auto& x : s.x) all.push_back({x, false, 1});
  // (2χ+3τ)(M) from the split identity and from the merged Betti data
  const std::int64_t m_gb = nb.two_chi_plus_three_tau() - 4 * m + sum;
  const std::int64_t merged = connected_sum(all).two_chi_plus_three_tau();
  const bool weyl_route = 3 * m_gb <= 2 * sum;
  if (nb.b_plus == 0 && (gate_betti != gate_euler || gate_betti != weyl_route)) {
    throw std::logic_error("Einstein gates disagree");
  }
  if (m_gb != merged) throw std::logic_error("split identity for 2χ+3τ failed");

  c.notes.push_back("12(m-1) + 12 b1(N) + 3 b-(N) = " + std::to_string(lhs_betti) +
                    " vs Σ c1^2 = " + std::to_string(sum));
  c.notes.push_back("3[4m - (2χ+3τ)(N)] = " + std::to_string(lhs_euler) + " vs Σ c1^2 = " +
                    std::to_string(sum));
  c.notes.push_back("(2χ+3τ)(M) = " + std::to_string(m_gb) + " vs (2/3) Σ c1^2 = " +
                    to_string(Rational(2 * sum, 3)));
  c.notes.push_back("for m > 1 the sum carries no symplectic structure, so the Weyl estimate is strict");
  Conclusion v{Invariant::einstein, Conclusion::Kind::verdict, {}, {}, gate_betti};
  finish(c, v);
  return c;
}

// ---- expression rules -------------------------------------------------------------

namespace {

struct BlockScalar {
  std::optional<ExactReal> value;
  std::string reason;
};

BlockScalar block_scalar(const ManifoldBlock& b) {
  if (b.flags.admits_nonneg_scalar == Tri::yes) return {ExactReal{}, "non-negative scalar curvature"};
  if (b.yamabe) {
    return {scalar_from_yamabe(*b.yamabe), "from Y = " + b.yamabe->to_string()};
  }
  if (b.flags.minimal_complex_surface == Tri::yes && b.c1_squared && b.betti.b_plus > 1) {
    return {scalar_l2_bound(*b.c1_squared), "minimal complex surface with b+ > 1: 32π² c1^2"};
  }
  return {std::nullopt, "no known value"};
}

}  // namespace

Certificate scalar_subadditive_upper(const SumExpression& expr) {
  Certificate c{rule::kScalarUpper,
                "subadditivity I_s(X # Y) <= I_s(X) + I_s(Y) with known block values",
                {}, std::nullopt, {}};
  ExactReal total;
  for (const auto& s : expr.summands()) {
    const ManifoldBlock b = s.oriented();
    const BlockScalar v = block_scalar(b);
    add(c, "I_s(" + b.display_name() + ") known",
        v.value ? CheckStatus::pass : CheckStatus::unknown,
        v.value ? v.value->to_string() + " (" + v.reason + ")" : v.reason);
    if (v.value) total = total + v.value->scaled(s.multiplicity);
  }
  const bool single = expr.count() == 1;
  const bool zero = total.is_zero();
  if (zero && !single) c.notes.push_back("I_s >= 0, so the zero upper bound is the value");
  finish(c, {Invariant::i_s, (single || zero) ? Conclusion::Kind::value : Conclusion::Kind::upper_bound,
             total, {}, false});
  return c;
}

Certificate yamabe_catalog(const SumExpression& expr) {
  Certificate c{rule::kYamabeCatalog, "recorded Yamabe invariant of a catalog block", {},
                std::nullopt, {}};
  std::vector<const Summand*> rest;
  const Summand* sphere = nullptr;
  for (const auto& s : expr.summands()) {
    if (s.block.name == kS4) sphere = &s;
    else rest.push_back(&s);
  }
  std::optional<ManifoldBlock> block;
  if (rest.empty() && sphere) block = sphere->oriented();
  if (rest.size() == 1 && rest.front()->multiplicity == 1) block = rest.front()->oriented();
  add(c, "a single block up to S4 summands", from_bool(block.has_value()), expr.to_string());
  if (block) {
    add(c, "Yamabe invariant of " + block->display_name() + " recorded",
        block->yamabe ? CheckStatus::pass : CheckStatus::unknown,
        block->yamabe ? block->yamabe->to_string() + "; " + block->provenance : "none");
  }
  if (block && block->yamabe) {
    finish(c, {Invariant::yamabe, Conclusion::Kind::value, *block->yamabe, {}, false});
  }
  return c;
}

Certificate yamabe_kobayashi(const SumExpression& expr, const Catalog& catalog) {
  Certificate c{rule::kYamabeKobayashi,
                "Kobayashi: Y(S4) >= Y(k CP2 # l CP2bar) >= Y(CP2)", {}, std::nullopt, {}};
  try {
    const Rewrite r = kobayashi_rewrite(expr, catalog);
    std::string ev = std::to_string(r.k) + " CP2 # " + std::to_string(r.l) + " CP2bar";
    for (const auto& u : r.used) ev += "; dissolve: " + u;
    add(c, "diffeomorphic to k CP2 # l CP2bar", CheckStatus::pass, ev);
    const ExactInterval iv = kobayashi_interval(r.k, r.l);
    finish(c, {Invariant::yamabe, Conclusion::Kind::interval, iv.lower(), iv.upper(), false});
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NoRewrite) throw;
    add(c, "diffeomorphic to k CP2 # l CP2bar", CheckStatus::unknown, e.what());
  }
  return c;
}

Certificate einstein_spin_family(const SumExpression& expr) {
  Certificate c{rule::kEinsteinSpin,
                "no Einstein metric on X # nK3 # l(S1xS3) for simply connected symplectic spin X "
                "with b+ = 3 mod 8, n in {1,2,3}, when 12(l + n) >= c1^2(X)",
                {}, std::nullopt, {}};
  std::int64_t k3s = 0, loops = 0;
  std::vector<const Summand*> others;
  const Summand* k3_summand = nullptr;
  for (const auto& s : expr.summands()) {
    if (!s.reversed && is_k3(s.block)) {
      k3s += s.multiplicity;
      k3_summand = &s;
    } else if (!s.reversed && s.block.name == kS1xS3) {
      loops += s.multiplicity;
    } else if (s.block.name != kS4) {
      others.push_back(&s);
    }
  }
  std::optional<ManifoldBlock> x;
  std::int64_t n = k3s;
  if (others.size() == 1 && others.front()->multiplicity == 1 && !others.front()->reversed) {
    x = others.front()->block;
  } else if (others.empty() && k3s >= 2) {
    x = k3_summand->block;
    n = k3s - 1;
  }
  add(c, "shape X # nK3 # l(S1xS3)", from_bool(x.has_value()), expr.to_string());
  if (!x) return c;

  add(c, "n in {1, 2, 3}", from_bool(n >= 1 && n <= 3), "n = " + std::to_string(n));
  add(c, x->name + " is symplectic", from_tri(x->flags.symplectic),
      "flag: " + std::string(to_string(x->flags.symplectic)));
  add(c, x->name + " is spin", from_tri(x->flags.spin),
      "flag: " + std::string(to_string(x->flags.spin)));
  add(c, x->name + " simply connected (checked as b1 = 0)", from_bool(x->betti.b1 == 0),
      "b1 = " + std::to_string(x->betti.b1));
  add(c, "b+(" + x->name + ") = 3 mod 8", from_bool(mod(x->betti.b_plus, 8) == 3),
      "b+ = " + std::to_string(x->betti.b_plus));
  add(c, "c1^2(" + x->name + ") recorded", x->c1_squared ? CheckStatus::pass : CheckStatus::unknown,
      x->c1_squared ? std::to_string(*x->c1_squared) : "none");
  c.notes.push_back("fundamental group is not modeled; b1 = 0 stands in for simple connectivity");
  if (!x->c1_squared) return c;

  const std::int64_t c1 = *x->c1_squared;
  c.notes.push_back("l + n = " + std::to_string(loops + n) + " vs c1^2/12 = " +
                    to_string(Rational(c1, 12)) + "; Hitchin-Thorpe needs l + n > c1^2/4 = " +
                    to_string(Rational(c1, 4)));
  finish(c, {Invariant::einstein, Conclusion::Kind::verdict, {}, {}, 12 * (loops + n) >= c1});
  return c;
}

Certificate einstein_hitchin_thorpe(const SumExpression& expr) {
  Certificate c{rule::kEinsteinHT, "Hitchin-Thorpe: an Einstein 4-manifold has 2χ >= 3|τ|", {},
                std::nullopt, {}};
  const BettiData b = connected_sum(expr);
  const std::int64_t plus = 2 * b.euler() + 3 * b.signature();
  const std::int64_t minus = 2 * b.euler() - 3 * b.signature();
  add(c, "Betti data of the sum", CheckStatus::pass,
      "χ = " + std::to_string(b.euler()) + ", τ = " + std::to_string(b.signature()));
  c.notes.push_back("2χ + 3τ = " + std::to_string(plus) + ", 2χ - 3τ = " + std::to_string(minus));
  finish(c, {Invariant::einstein, Conclusion::Kind::verdict, {}, {}, plus < 0 || minus < 0});
  return c;
}

}  // namespace csinv
