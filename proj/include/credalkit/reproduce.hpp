#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "credalkit/belief.hpp"
#include "credalkit/credal.hpp"
#include "credalkit/decision.hpp"
#include "credalkit/errors.hpp"
#include "credalkit/fusion.hpp"
#include "credalkit/monotone.hpp"
#include "credalkit/reproduce_golden.hpp"
#include "credalkit/table.hpp"
#include "credalkit/worked_examples.hpp"

namespace credalkit {

/// Options for the paper-reproduction runs. A non-default epsilon reruns the
/// decision demonstration at that threshold; such runs are informational and
/// skip the golden comparison.
struct PaperRunOptions {
  std::optional<Rational> epsilon;
};

struct PaperRunResult {
  std::string id;
  std::string report;
  std::string golden;  // empty when no golden applies
  bool matched;
};

inline const std::vector<std::string>& paper_ids() {
  static const std::vector<std::string> ids = {
      "table1", "table2",    "table3", "table4",     "eq24",
      "zadeh",  "identical", "bayes",  "refinement", "decision"};
  return ids;
}

namespace detail {

inline std::string capacity_report(const std::string& title, const Capacity& c) {
  return title + "\n" + render_capacity_table(c, mobius_from_capacity(c));
}

inline std::string pair_violation_line(const Capacity& c, const EventSet& a,
                                       const EventSet& b) {
  const Frame& frame = c.frame();
  const std::uint32_t u = a.bits() | b.bits();
  const Rational lhs = c.lower(u);
  const Rational rhs = c.lower(a.bits()) + c.lower(b.bits()) - c.lower(a.bits() & b.bits());
  return "2-monotone violated: Bel(" + frame.display_event(u) + ")=" +
         decimal_string(lhs) + " < " + decimal_string(rhs) + ", witness {" +
         a.to_string() + "},{" + b.to_string() + "}";
}

inline std::string run_table1() {
  const Capacity c = examples::die_capacity();
  return capacity_report("Dempster's die: opposite faces paired, each pair with belief 0 and plausibility 0.5", c);
}

inline std::string run_table2() {
  const Capacity c = envelope(examples::coin_family_a());
  return capacity_report("Two flips of one coin biased for heads (t in [0.5, 1])", c);
}

inline std::string run_table3() {
  const Capacity c = envelope(examples::coin_family_b());
  return capacity_report("Two flips of different coins, each biased for heads", c);
}

inline std::string run_table4() {
  const Capacity c = envelope(examples::coin_family_c());
  return capacity_report("Mixture: flip a fair coin twice, or a two-headed coin twice", c);
}

inline std::string run_eq24() {
  const Capacity c = envelope(examples::coin_family_b());
  const MonotonicityReport r = is_monotone_of_order(c, MonotoneOrder::finite(2));
  if (r.holds) return "2-monotone: holds (unexpected)\n";
  return pair_violation_line(c, r.witness.at(0), r.witness.at(1)) + "\n";
}

inline std::string run_zadeh(Rational warn_threshold = Rational(19, 20)) {
  const auto pair = examples::zadeh_pair();
  const CombinationResult r = dempster_combine(pair.m1, pair.m2);
  std::string out;
  out += "witness 1: " + format_mass_inline(pair.m1) + "\n";
  out += "witness 2: " + format_mass_inline(pair.m2) + "\n";
  out += "combined: " + format_mass_inline(r.combined) + "\n";
  out += "conflict: " + decimal_string(r.conflict);
  if (r.conflict >= warn_threshold)
    out += " (exceeds warning threshold " + decimal_string(warn_threshold) + ")";
  return out + "\n";
}

inline std::string run_identical() {
  const MassFunction m = examples::quarter_head_assessment();
  const CombinationResult r = dempster_combine(m, m);
  std::string out;
  out += "assessment: " + format_mass_inline(m) + "\n";
  out += "self-combination: " + format_mass_inline(r.combined) + "\n";
  out += "conflict: " + decimal_string(r.conflict) + "\n";
  return out;
}

inline std::string run_bayes() {
  const MassFunction prior = examples::conditioning_prior();
  const Frame frame = prior.frame();
  const EventSet evidence = EventSet::parse(frame, "A+B");
  const MassFunction posterior = bayes_condition(prior, evidence);

  auto check = [&](const MassFunction& conditioner) {
    const CombinationResult r = dempster_combine(prior, conditioner);
    const bool same = r.combined == posterior;
    return "combine with [" + format_mass_inline(conditioner) + "] -> " +
           format_mass_inline(r.combined) +
           (same ? " (matches Bayes: yes)" : " (matches Bayes: no)");
  };

  const std::uint32_t ab = evidence.bits();
  const MassFunction certain(frame, {{ab, Rational(1)}});
  const MassFunction uniform(frame, {{frame.parse_event("A"), Rational(1, 5)},
                                     {frame.parse_event("B"), Rational(1, 5)},
                                     {ab, Rational(3, 5)}});
  const MassFunction skewed(frame, {{frame.parse_event("A"), Rational(3, 10)},
                                    {frame.parse_event("B"), Rational(1, 10)},
                                    {ab, Rational(3, 5)}});

  std::string out;
  out += "prior: " + format_mass_inline(prior) + "\n";
  out += "evidence: {" + frame.format_event(ab) + "}\n";
  out += "Bayes conditioning: " + format_mass_inline(posterior) + "\n";
  out += check(certain) + "\n";
  out += check(uniform) + "\n";
  out += check(skewed) + "\n";
  return out;
}

inline std::string run_refinement() {
  const MassFunction single = examples::single_flip_mass();
  const CombinationResult r = two_flip_by_combination();
  const Capacity bel = belief_from_mass(r.combined);

  const ParametricFamily fam = examples::coin_family_a();
  const Capacity table2 = envelope(fam);
  const MassFunction table2_mass = mobius_from_capacity(table2).to_mass();
  const Frame frame = r.combined.frame();

  std::string differs;
  for (std::uint32_t s : events_in_table_order(frame)) {
    if (r.combined.at(s) == table2_mass.at(s)) continue;
    if (!differs.empty()) differs += ", ";
    differs += "{" + frame.display_event(s) + "}";
  }

  std::string out;
  out += "single flip: " + format_mass_inline(single) + "\n";
  out += "refined twice and combined: " + format_mass_inline(r.combined) +
         " (conflict " + decimal_string(r.conflict) + ")\n";
  out += "two-flip credal mass: " + format_mass_inline(table2_mass) + "\n";
  out += "mass differs at: " + differs + "\n";
  out += "Bel(1): combination " + decimal_string(bel.lower(frame.parse_event("1"))) +
         ", credal " + decimal_string(table2.lower(frame.parse_event("1"))) + "\n";
  out += "Bel(14): combination " + decimal_string(bel.lower(frame.parse_event("14"))) +
         ", credal " + decimal_string(table2.lower(frame.parse_event("14"))) + "\n";
  return out;
}

inline std::string format_eu(const std::optional<Rational>& exact, double raw) {
  return exact ? decimal_string(*exact) : format_double(raw);
}

inline std::string run_decision(const Rational& epsilon) {
  const DivergenceDemo demo = decision_divergence_demo(epsilon);
  std::string out;
  out += "epsilon: " + decimal_string(epsilon) + "\n";
  std::string gamble = "<";
  for (std::size_t i = 0; i < demo.gamble.utilities().size(); ++i) {
    if (i) gamble += ", ";
    gamble += decimal_string(demo.gamble.utilities()[i]);
  }
  out += "gamble: " + gamble + ">\n";
  const DecisionReport& a = demo.family_a;
  const DecisionReport& c = demo.family_c;
  out += "family A (iid coin): eu in [" + format_eu(a.exact_eu_min, a.raw_eu_min) +
         ", " + format_eu(a.exact_eu_max, a.raw_eu_max) + "]";
  if (a.favourable_nonempty && a.argmax_parameters)
    out += ", argmax t = " + format_double(a.argmax_parameters->at(0));
  out += "\n";
  out += "family C (mixture): eu in [" + format_eu(c.exact_eu_min, c.raw_eu_min) +
         ", " + format_eu(c.exact_eu_max, c.raw_eu_max) + "]\n";
  out += std::string("envelopes equal: ") + (demo.envelopes_equal ? "yes" : "no") +
         "; A favourable: " + (a.favourable_nonempty ? "yes" : "no") +
         "; C favourable: " + (c.favourable_nonempty ? "yes" : "no") + "\n";
  return out;
}

}  // namespace detail

/// Runs one of the built-in reproductions end to end and compares the report
/// against its embedded golden text.
inline PaperRunResult run_paper(const std::string& id, const PaperRunOptions& opts = {}) {
  std::string report;
  bool has_golden = true;
  if (id == "table1") {
    report = detail::run_table1();
  } else if (id == "table2") {
    report = detail::run_table2();
  } else if (id == "table3") {
    report = detail::run_table3();
  } else if (id == "table4") {
    report = detail::run_table4();
  } else if (id == "eq24") {
    report = detail::run_eq24();
  } else if (id == "zadeh") {
    report = detail::run_zadeh();
  } else if (id == "identical") {
    report = detail::run_identical();
  } else if (id == "bayes") {
    report = detail::run_bayes();
  } else if (id == "refinement") {
    report = detail::run_refinement();
  } else if (id == "decision") {
    const Rational eps = opts.epsilon.value_or(Rational(1, 4));
    report = detail::run_decision(eps);
    has_golden = eps == Rational(1, 4);
  } else {
    throw ValidationError("unknown reproduction id \"" + id + "\"; expected one of " +
                          [] {
                            std::string all;
                            for (const auto& i : paper_ids())
                              all += (all.empty() ? "" : ", ") + i;
                            return all;
                          }());
  }
  if (!has_golden) return {id, report, "", true};
  const std::string& golden = golden_report(id);
  return {id, report, golden, report == golden};
}

/// Unified diff-style summary of the first mismatching line, for CLI output.
inline std::string first_difference(const std::string& got, const std::string& expected) {
  std::istringstream g(got), e(expected);
  std::string gl, el;
  std::size_t line = 1;
  while (true) {
    const bool more_g = static_cast<bool>(std::getline(g, gl));
    const bool more_e = static_cast<bool>(std::getline(e, el));
    if (!more_g && !more_e) return "";
    if (!more_g) gl = "<missing>";
    if (!more_e) el = "<missing>";
    if (gl != el || more_g != more_e)
      return "line " + std::to_string(line) + ":\n  expected: " + el +
             "\n  got:      " + gl + "\n";
    ++line;
  }
}

}  // namespace credalkit
