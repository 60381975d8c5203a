#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "csinv/theorems.hpp"

namespace csinv {

struct Bound {
  ExactReal value;
  /// Index into InvariantReport::certificates.
  std::size_t certificate = 0;
};

/// Tightest known bounds on one invariant. Ties keep the earlier certificate.
struct Estimate {
  std::optional<Bound> lower;
  std::optional<Bound> upper;

  bool known() const { return lower || upper; }
  bool exact() const { return lower && upper && lower->value == upper->value; }
  std::optional<ExactReal> value() const;
  std::string to_string() const;

  /// Returns true when the offer tightened a side. Throws logic_error if the
  /// bounds cross.
  bool offer_lower(const ExactReal& v, std::size_t cert);
  bool offer_upper(const ExactReal& v, std::size_t cert);
};

struct InvariantReport {
  std::string expression;
  BettiData betti;
  Estimate yamabe;
  Estimate i_s;
  Estimate i_r;
  /// I_r - I_s / 4 when both are exact.
  std::optional<ExactReal> gap;
  /// Rule ids whose verdict is "no Einstein metric"; empty = not determined.
  std::vector<std::string> obstructed_by;
  std::optional<QuadrupleWitness> witness;
  std::optional<QuadrupleWitness> suggested_witness;
  std::vector<Certificate> certificates;
  std::vector<std::string> notes;

  /// Appends the certificate and feeds its conclusion into the estimates.
  std::size_t record(Certificate c);
  Estimate& estimate(Invariant inv);
  const Estimate& estimate(Invariant inv) const;
  const Certificate* find(const std::string& rule_id) const;

  bool obstructed() const { return !obstructed_by.empty(); }
  /// Some value, bound or obstruction was established.
  bool conclusive() const;
};

struct RenderOptions {
  /// Append non-authoritative decimal hints.
  bool approx = false;
};

std::string render_text(const InvariantReport& report, const RenderOptions& opts = {});
std::string render_json(const InvariantReport& report, const RenderOptions& opts = {});

/// Text / JSON for a bare list of hypothesis checks.
std::string render_checks_text(const std::vector<HypothesisCheck>& checks);
std::string render_checks_json(const QuadrupleWitness& w, const std::vector<HypothesisCheck>& checks);

}  // namespace csinv
