#include "csinv/report.hpp"

#include <cstdio>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace csinv {

namespace mp = boost::multiprecision;
using Json = nlohmann::ordered_json;

std::optional<ExactReal> Estimate::value() const {
  if (!exact()) return std::nullopt;
  return lower->value;
}

std::string Estimate::to_string() const {
  if (exact()) return lower->value.to_string();
  if (lower && upper) return "in [" + lower->value.to_string() + ", " + upper->value.to_string() + "]";
  if (lower) return ">= " + lower->value.to_string();
  if (upper) return "<= " + upper->value.to_string();
  return "unknown";
}

namespace {

void check_order(const Estimate& e) {
  if (e.lower && e.upper && e.lower->value > e.upper->value) {
    throw std::logic_error("inconsistent bounds: " + e.lower->value.to_string() + " > " +
                           e.upper->value.to_string());
  }
}

}  // namespace

bool Estimate::offer_lower(const ExactReal& v, std::size_t cert) {
  if (lower && !(v > lower->value)) return false;
  lower = Bound{v, cert};
  check_order(*this);
  return true;
}

bool Estimate::offer_upper(const ExactReal& v, std::size_t cert) {
  if (upper && !(v < upper->value)) return false;
  upper = Bound{v, cert};
  check_order(*this);
  return true;
}

Estimate& InvariantReport::estimate(Invariant inv) {
  switch (inv) {
    case Invariant::yamabe: return yamabe;
    case Invariant::i_s: return i_s;
    case Invariant::i_r: return i_r;
    case Invariant::einstein: break;
  }
  throw std::logic_error("the Einstein verdict has no numeric estimate");
}

const Estimate& InvariantReport::estimate(Invariant inv) const {
  return const_cast<InvariantReport*>(this)->estimate(inv);
}

std::size_t InvariantReport::record(Certificate c) {
  const std::size_t index = certificates.size();
  certificates.push_back(std::move(c));
  const Certificate& cert = certificates.back();
  if (!cert.conclusion) return index;
  const Conclusion& k = *cert.conclusion;
  if (k.invariant == Invariant::einstein) {
    if (k.obstructed) obstructed_by.push_back(cert.rule_id);
    return index;
  }
  Estimate& e = estimate(k.invariant);
  switch (k.kind) {
    case Conclusion::Kind::value:
      e.offer_lower(k.value, index);
      e.offer_upper(k.value, index);
      break;
    case Conclusion::Kind::interval:
      e.offer_lower(k.value, index);
      e.offer_upper(k.upper, index);
      break;
    case Conclusion::Kind::lower_bound: e.offer_lower(k.value, index); break;
    case Conclusion::Kind::upper_bound: e.offer_upper(k.value, index); break;
    case Conclusion::Kind::verdict: break;
  }
  return index;
}

const Certificate* InvariantReport::find(const std::string& rule_id) const {
  for (const auto& c : certificates)
    if (c.rule_id == rule_id) return &c;
  return nullptr;
}

bool InvariantReport::conclusive() const {
  return yamabe.known() || i_s.known() || i_r.known() || obstructed();
}

// ---- text -------------------------------------------------------------------

namespace {

std::string approx_hint(const ExactReal& v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v.approx());
  return buf;
}

std::string estimate_line(const char* label, const Estimate& e, const InvariantReport& r,
                          const RenderOptions& opts) {
  std::ostringstream os;
  os << std::left << std::setw(5) << label << e.to_string();
  if (e.known()) {
    os << "   [";
    if (e.lower) os << "#" << e.lower->certificate << ' ' << r.certificates[e.lower->certificate].rule_id;
    if (e.upper && (!e.lower || e.upper->certificate != e.lower->certificate)) {
      if (e.lower) os << ", ";
      os << "#" << e.upper->certificate << ' ' << r.certificates[e.upper->certificate].rule_id;
    }
    os << ']';
    if (opts.approx) {
      os << "   (approx ";
      if (e.exact()) os << approx_hint(e.lower->value);
      else {
        os << (e.lower ? approx_hint(e.lower->value) : "-inf") << " .. "
           << (e.upper ? approx_hint(e.upper->value) : "inf");
      }
      os << ", not authoritative)";
    }
  }
  return os.str();
}

}  // namespace

std::string render_checks_text(const std::vector<HypothesisCheck>& checks) {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << "  " << std::left << std::setw(8) << to_string(c.status) << c.condition;
    if (!c.evidence.empty()) os << "   (" << c.evidence << ")";
    os << '\n';
  }
  return os.str();
}

std::string render_text(const InvariantReport& r, const RenderOptions& opts) {
  std::ostringstream os;
  const BettiData& b = r.betti;
  os << "expression: " << r.expression << '\n';
  os << "betti:      b1 = " << b.b1 << ", b+ = " << b.b_plus << ", b- = " << b.b_minus
     << ", chi = " << b.euler() << ", tau = " << b.signature() << '\n';
  if (r.witness) {
    os << "witness:    " << r.witness->to_string() << (r.witness->suggested ? " (suggested)" : "")
       << '\n';
  } else if (r.suggested_witness) {
    os << "suggested witness: " << r.suggested_witness->to_string()
       << "  (pass --witness or --auto-witness to use it)\n";
  }
  os << '\n';
  os << estimate_line("Y", r.yamabe, r, opts) << '\n';
  os << estimate_line("I_s", r.i_s, r, opts) << '\n';
  os << estimate_line("I_r", r.i_r, r, opts) << '\n';
  if (r.gap) os << "I_r - I_s/4 = " << r.gap->to_string() << '\n';
  os << "einstein: ";
  if (r.obstructed()) {
    os << "obstructed by ";
    for (std::size_t i = 0; i < r.obstructed_by.size(); ++i) os << (i ? ", " : "") << r.obstructed_by[i];
  } else {
    os << "not determined";
  }
  os << '\n';
  for (const auto& n : r.notes) os << "note: " << n << '\n';

  os << "\ncertificates:\n";
  for (std::size_t i = 0; i < r.certificates.size(); ++i) {
    const Certificate& c = r.certificates[i];
    os << "#" << i << ' ' << c.rule_id << ": "
       << (c.conclusion ? c.conclusion->to_string() : "not applied") << '\n';
    os << "  " << c.anchor << '\n';
    os << render_checks_text(c.checks);
    for (const auto& n : c.notes) os << "  note: " << n << '\n';
  }
  return os.str();
}

// ---- json -------------------------------------------------------------------

namespace {

Json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return v.convert_to<std::int64_t>();
  }
  return v.str();
}

Json exact_json(const ExactReal& v, const RenderOptions& opts) {
  Json j;
  j["coeff_num"] = integer_json(mp::numerator(v.coeff()));
  j["coeff_den"] = integer_json(mp::denominator(v.coeff()));
  j["pi_power"] = v.pi_power();
  j["radicand"] = integer_json(v.radicand());
  j["text"] = v.to_ascii();
  if (opts.approx) j["approx"] = v.approx();
  return j;
}

Json estimate_json(const Estimate& e, const RenderOptions& opts) {
  Json j;
  j["status"] = e.exact() ? "exact" : (e.known() ? "bounded" : "unknown");
  if (e.exact()) j["value"] = exact_json(e.lower->value, opts);
  auto side = [&](const std::optional<Bound>& b) -> Json {
    if (!b) return nullptr;
    Json s = exact_json(b->value, opts);
    s["certificate"] = b->certificate;
    return s;
  };
  j["lower"] = side(e.lower);
  j["upper"] = side(e.upper);
  return j;
}

Json checks_json(const std::vector<HypothesisCheck>& checks) {
  Json arr = Json::array();
  for (const auto& c : checks) {
    arr.push_back({{"condition", c.condition},
                   {"status", std::string(to_string(c.status))},
                   {"evidence", c.evidence}});
  }
  return arr;
}

Json witness_json(const QuadrupleWitness& w) {
  Json blocks = Json::array();
  for (const auto& b : w.blocks) blocks.push_back(b.display_name());
  return {{"blocks", blocks}, {"m", w.prefix_m}, {"suggested", w.suggested}};
}

const char* kind_name(Conclusion::Kind k) {
  switch (k) {
    case Conclusion::Kind::value: return "value";
    case Conclusion::Kind::interval: return "interval";
    case Conclusion::Kind::lower_bound: return "lower_bound";
    case Conclusion::Kind::upper_bound: return "upper_bound";
    case Conclusion::Kind::verdict: return "verdict";
  }
  return "?";
}

}  // namespace

std::string render_json(const InvariantReport& r, const RenderOptions& opts) {
  Json j;
  j["expression"] = r.expression;
  const BettiData& b = r.betti;
  j["betti"] = {{"b1", b.b1},
                {"b_plus", b.b_plus},
                {"b_minus", b.b_minus},
                {"chi", b.euler()},
                {"tau", b.signature()}};
  j["invariants"] = {{"yamabe", estimate_json(r.yamabe, opts)},
                     {"i_s", estimate_json(r.i_s, opts)},
                     {"i_r", estimate_json(r.i_r, opts)},
                     {"gap_i_r_minus_quarter_i_s", r.gap ? exact_json(*r.gap, opts) : Json(nullptr)}};
  j["einstein"] = {{"verdict", r.obstructed() ? "obstructed" : "not_determined"},
                   {"by", r.obstructed_by}};
  j["witness"] = r.witness ? witness_json(*r.witness) : Json(nullptr);
  j["suggested_witness"] = r.suggested_witness ? witness_json(*r.suggested_witness) : Json(nullptr);
  Json certs = Json::array();
  for (const auto& c : r.certificates) {
    Json cj;
    cj["rule_id"] = c.rule_id;
    cj["anchor"] = c.anchor;
    cj["checks"] = checks_json(c.checks);
    if (c.conclusion) {
      const Conclusion& k = *c.conclusion;
      Json kj{{"invariant", std::string(to_string(k.invariant))}, {"kind", kind_name(k.kind)}};
      if (k.kind == Conclusion::Kind::verdict) {
        kj["obstructed"] = k.obstructed;
      } else {
        kj["value"] = exact_json(k.value, opts);
        if (k.kind == Conclusion::Kind::interval) kj["upper"] = exact_json(k.upper, opts);
      }
      cj["conclusion"] = kj;
    } else {
      cj["conclusion"] = nullptr;
    }
    cj["notes"] = c.notes;
    certs.push_back(cj);
  }
  j["certificates"] = certs;
  j["notes"] = r.notes;
  return j.dump(2) + "\n";
}

std::string render_checks_json(const QuadrupleWitness& w, const std::vector<HypothesisCheck>& checks) {
  Json j;
  j["witness"] = witness_json(w);
  Json arr = Json::array();
  for (const auto& c : checks) {
    arr.push_back({{"rule_id", c.rule_id},
                   {"condition", c.condition},
                   {"status", std::string(to_string(c.status))},
                   {"evidence", c.evidence}});
  }
  j["checks"] = arr;
  return j.dump(2) + "\n";
}

}  // namespace csinv
