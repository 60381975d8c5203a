#include "csinv/evaluate.hpp"

#include "csinv/error.hpp"

namespace csinv {

QuadrupleWitness resolve_witness(const std::vector<std::string>& names, const Catalog& catalog) {
  if (names.size() != 4) {
    throw Error(ErrorKind::InvalidInput,
                "a witness needs exactly four blocks, got " + std::to_string(names.size()));
  }
  QuadrupleWitness w;
  for (std::size_t j = 0; j < 4; ++j) w.blocks[j] = resolve(parse_node(names[j]), catalog).oriented();
  return w;
}

namespace {

bool derived_from(const InvariantReport& r, const std::optional<Bound>& b, const char* rule_id) {
  return b && r.certificates[b->certificate].rule_id == rule_id;
}

Certificate derived(const char* rule_id, std::string anchor, const InvariantReport& r,
                    std::size_t source, std::string what) {
  Certificate c{rule_id, std::move(anchor), {}, std::nullopt, {}};
  c.checks.push_back({rule_id, std::move(what), CheckStatus::pass,
                      "from #" + std::to_string(source) + " " + r.certificates[source].rule_id});
  return c;
}

const char* kFunctional =
    "I_s = 0 when Y >= 0 and I_s = |Y|^2 when Y <= 0 (dimension 4)";

void scalar_from_yamabe_rule(InvariantReport& r) {
  const Estimate& y = r.yamabe;
  if (derived_from(r, y.lower, rule::kYamabeFromScalar) ||
      derived_from(r, y.upper, rule::kYamabeFromScalar)) {
    return;
  }
  if (y.exact() && y.lower->value.sign() <= 0) {
    Certificate c = derived(rule::kScalarFromYamabe, kFunctional, r, y.lower->certificate,
                            "Y = " + y.lower->value.to_string() + " <= 0");
    c.conclusion = Conclusion{Invariant::i_s, Conclusion::Kind::value,
                              scalar_from_yamabe(y.lower->value), {}, false};
    r.record(std::move(c));
  } else if (y.lower && y.lower->value.sign() >= 0) {
    Certificate c = derived(rule::kScalarFromYamabe, kFunctional, r, y.lower->certificate,
                            "Y >= " + y.lower->value.to_string() + " >= 0");
    c.conclusion = Conclusion{Invariant::i_s, Conclusion::Kind::value, ExactReal{}, {}, false};
    r.record(std::move(c));
  }
}

void yamabe_from_scalar_rule(InvariantReport& r) {
  const Estimate& s = r.i_s;
  if (derived_from(r, s.lower, rule::kScalarFromYamabe) ||
      derived_from(r, s.upper, rule::kScalarFromYamabe)) {
    return;
  }
  if (s.exact()) {
    const ExactReal v = s.lower->value;
    Certificate c = derived(rule::kYamabeFromScalar, kFunctional, r, s.lower->certificate,
                            "I_s = " + v.to_string());
    if (v.is_zero()) {
      c.notes.push_back("I_s = 0 gives only the sign Y >= 0");
      c.conclusion = Conclusion{Invariant::yamabe, Conclusion::Kind::lower_bound, ExactReal{}, {}, false};
    } else {
      c.conclusion = Conclusion{Invariant::yamabe, Conclusion::Kind::value, yamabe_from_scalar(v), {}, false};
    }
    r.record(std::move(c));
    return;
  }
  if (s.lower && s.lower->value.sign() > 0) {
    // I_s >= L > 0 forces Y < 0 and |Y|^2 >= L
    Certificate c = derived(rule::kYamabeFromScalar, kFunctional, r, s.lower->certificate,
                            "I_s >= " + s.lower->value.to_string() + " > 0");
    c.conclusion = Conclusion{Invariant::yamabe, Conclusion::Kind::upper_bound,
                              yamabe_from_scalar(s.lower->value), {}, false};
    r.record(std::move(c));
  }
  if (s.upper && s.upper->value.sign() > 0) {
    Certificate c = derived(rule::kYamabeFromScalar, kFunctional, r, s.upper->certificate,
                            "I_s <= " + s.upper->value.to_string());
    c.conclusion = Conclusion{Invariant::yamabe, Conclusion::Kind::lower_bound,
                              yamabe_from_scalar(s.upper->value), {}, false};
    r.record(std::move(c));
  }
}

void tautological_rule(InvariantReport& r) {
  if (!r.i_s.lower) return;
  Certificate c = derived(rule::kRicciTaut, "I_r >= n^(-n/4) I_s = I_s / 4 for n = 4", r,
                          r.i_s.lower->certificate, "I_s >= " + r.i_s.lower->value.to_string());
  c.conclusion = Conclusion{Invariant::i_r, Conclusion::Kind::lower_bound,
                            r.i_s.lower->value.scaled(Rational(1, 4)), {}, false};
  r.record(std::move(c));
}

}  // namespace

InvariantReport evaluate(const SumExpression& expr, const Catalog& catalog, const EvalOptions& opts) {
  InvariantReport r;
  r.expression = expr.to_string();
  r.betti = connected_sum(expr);

  std::optional<QuadrupleWitness> witness;
  if (!opts.witness.empty()) {
    witness = resolve_witness(opts.witness, catalog);
  } else if (const ManifoldBlock* k3 = catalog.find(kK3) ? &catalog.block(kK3) : nullptr) {
    r.suggested_witness = suggest_witness(expr, *k3);
    if (opts.auto_witness) witness = r.suggested_witness;
  }
  if (opts.auto_witness && opts.witness.empty() && !witness) {
    r.notes.push_back("no witness quadruple could be assembled from the summands");
  }
  if (witness) {
    if (opts.m) {
      witness->prefix_m = *opts.m;
    } else if (!witness->suggested) {
      witness->prefix_m = default_prefix(expr, witness->blocks);
      if (witness->prefix_m == 0) {
        throw Error(ErrorKind::MalformedSplit, "witness block X1 = " +
                                                   witness->blocks[0].display_name() +
                                                   " is not a summand of " + expr.to_string());
      }
    }
    r.witness = witness;
    r.suggested_witness.reset();
  }

  r.record(yamabe_catalog(expr));
  r.record(yamabe_kobayashi(expr, catalog));

  if (witness) {
    const Split split = split_sum(expr, *witness);
    r.record(scalar_exact(*witness, split));
    r.record(scalar_monopole_lower(*witness, split));
    r.record(yamabe_monopole_sum(*witness, split));
    r.record(ricci_exact(*witness, split));
    r.record(ricci_monopole_lower(*witness, split));
    try {
      r.record(einstein_monopole_obstruction(*witness, split));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::OutOfRange) throw;
      r.notes.push_back(std::string(rule::kEinsteinMonopole) + " skipped: " + e.what());
    }
  } else {
    r.notes.push_back("rules over a witness quadruple were not run (no --witness given)");
  }

  r.record(scalar_subadditive_upper(expr));
  r.record(einstein_spin_family(expr));
  r.record(einstein_hitchin_thorpe(expr));

  scalar_from_yamabe_rule(r);
  yamabe_from_scalar_rule(r);
  tautological_rule(r);

  if (r.i_r.exact() && r.i_s.exact()) {
    r.gap = r.i_r.lower->value - r.i_s.lower->value.scaled(Rational(1, 4));
  }
  return r;
}

InvariantReport evaluate(std::string_view text, const Catalog& catalog, const EvalOptions& opts) {
  return evaluate(resolve(parse_expression(text), catalog), catalog, opts);
}

}  // namespace csinv
