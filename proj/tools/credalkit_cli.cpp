// Command-line front end: model documents in, tables/reports/CSV out.
//
// Exit codes: 0 success, 2 validation or parse failure, 3 total conflict,
// 4 golden mismatch in a `paper` run.

#include <CLI11.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "credalkit/credalkit.hpp"

namespace ck = credalkit;

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ck::ValidationError("cannot open \"" + path + "\"");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ck::ModelDocument load_model(const std::string& path) {
  return ck::parse_model(read_input(path));
}

const ck::MassFunction& require_mass(const ck::ModelDocument& doc) {
  if (!doc.mass) throw ck::ValidationError("model has no \"mass\" entry");
  return *doc.mass;
}

// Capacity of a model: its mass function's belief if present, otherwise the
// envelope of its credal set.
ck::Capacity model_capacity(const ck::ModelDocument& doc, const ck::SnapOptions& snap) {
  if (doc.mass) return ck::belief_from_mass(*doc.mass);
  if (const auto* poly = doc.polytope()) return ck::envelope(*poly);
  if (const auto* fam = doc.family()) return ck::envelope_detailed(*fam, snap).capacity;
  throw ck::ValidationError("model has neither \"mass\" nor \"credal\"");
}

// Extreme points of the model's credal set: a vertex model is returned as
// given; otherwise the dominating polytope of the model's capacity (via the
// permutation scheme for belief functions, brute-force enumeration otherwise).
ck::VertexPolytope model_polytope(const ck::ModelDocument& doc,
                                  const ck::SnapOptions& snap) {
  if (const auto* poly = doc.polytope()) return *poly;
  const ck::Capacity c = model_capacity(doc, snap);
  if (ck::mobius_from_capacity(c).nonnegative()) return ck::dominating_polytope(c);
  return ck::enumerate_envelope_vertices(c);
}

std::string format_vertex(const ck::Distribution& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.probs().size(); ++i) {
    if (i) out += ", ";
    out += ck::decimal_string(v.probs()[i]);
  }
  return out + ")";
}

void print_decision_report(const ck::DecisionReport& r,
                           const std::vector<std::string>* param_names) {
  auto fmt = [](const std::optional<ck::Rational>& exact, double raw) {
    return exact ? ck::decimal_string(*exact) : ck::format_double(raw);
  };
  std::cout << "eu in [" << fmt(r.exact_eu_min, r.raw_eu_min) << ", "
            << fmt(r.exact_eu_max, r.raw_eu_max) << "]\n";
  std::cout << "favourable members: " << (r.favourable_nonempty ? "yes" : "no") << "\n";
  if (r.argmax_parameters && param_names) {
    std::cout << "eu_max at:";
    for (std::size_t i = 0; i < r.argmax_parameters->size(); ++i)
      std::cout << " " << (*param_names)[i] << " = "
                << ck::format_double((*r.argmax_parameters)[i]);
    std::cout << "\n";
  }
}

int dispatch(int argc, char** argv) {
  CLI::App app{"Dempster-Shafer belief functions and credal sets over finite frames"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow a subcommand

  double tolerance = 1e-7;
  app.add_option("--tolerance", tolerance,
                 "snap tolerance for numerically computed envelopes")
      ->capture_default_str();
  std::string conflict_warn = "0.95";
  app.add_option("--conflict-warn", conflict_warn,
                 "warn when combination conflict reaches this value")
      ->capture_default_str();
  std::string epsilon;
  app.add_option("--epsilon", epsilon,
                 "epsilon for the decision reproduction (default 1/4)");

  std::string model_path, model2_path, on_event, order_text = "inf", out_path, paper_id;
  std::size_t samples = 0;
  bool raw = false;

  auto* bel = app.add_subcommand("bel", "Bel/Pl table of a model");
  bel->add_option("model", model_path)->required();

  auto* mobius = app.add_subcommand("mobius", "Moebius (mass) row of a model");
  mobius->add_option("model", model_path)->required();

  auto* combine = app.add_subcommand("combine", "Dempster combination of two mass models");
  combine->add_option("model1", model_path)->required();
  combine->add_option("model2", model2_path)->required();

  auto* condition = app.add_subcommand("condition", "Bayes conditioning of a Bayesian mass model");
  condition->add_option("model", model_path)->required();
  condition->add_option("--on", on_event, "evidence event, e.g. \"A+B\" or \"12\"")->required();

  auto* monotone = app.add_subcommand("monotone", "Choquet monotonicity check");
  monotone->add_option("model", model_path)->required();
  monotone->add_option("--order", order_text, "order to check: a positive integer or \"inf\"")
      ->capture_default_str();

  auto* envelope_cmd = app.add_subcommand("envelope", "lower/upper envelope of a credal model");
  envelope_cmd->add_option("model", model_path)->required();
  envelope_cmd->add_flag("--raw", raw, "also print unsnapped lower values");

  auto* representable = app.add_subcommand("representable", "test whether the envelope is a belief function");
  representable->add_option("model", model_path)->required();

  auto* vertices = app.add_subcommand("vertices", "extreme points of the model's credal set");
  vertices->add_option("model", model_path)->required();

  auto* geometry = app.add_subcommand("geometry", "barycentric coordinates as CSV (4-atom frames)");
  geometry->add_option("model", model_path)->required();
  geometry->add_option("-o,--output", out_path, "write CSV here instead of stdout");
  geometry->add_option("--samples", samples, "also emit a family grid sample of this size");

  auto* decide = app.add_subcommand("decide", "expected-utility range of the model's gamble");
  decide->add_option("model", model_path)->required();

  auto* paper = app.add_subcommand("paper", "run a built-in reproduction against its golden report");
  paper->add_option("id", paper_id, "one of: table1 table2 table3 table4 eq24 zadeh identical bayes refinement decision")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  ck::SnapOptions snap{64, tolerance};

  if (bel->parsed()) {
    const auto doc = load_model(model_path);
    const ck::Capacity c = model_capacity(doc, snap);
    std::cout << ck::render_capacity_table(c, ck::mobius_from_capacity(c),
                                           {.bel = true, .pl = true, .mass = false});
  } else if (mobius->parsed()) {
    const auto doc = load_model(model_path);
    const ck::Capacity c = model_capacity(doc, snap);
    std::cout << ck::render_capacity_table(c, ck::mobius_from_capacity(c),
                                           {.bel = false, .pl = false, .mass = true});
  } else if (combine->parsed()) {
    const auto m1 = require_mass(load_model(model_path));
    const auto m2 = require_mass(load_model(model2_path));
    const ck::CombinationResult r = ck::dempster_combine(m1, m2);
    std::cout << "combined: " << ck::format_mass_inline(r.combined) << "\n";
    std::cout << "conflict: " << ck::decimal_string(r.conflict) << "\n";
    if (r.conflict >= ck::parse_rational(conflict_warn))
      std::cerr << "warning: conflict " << ck::decimal_string(r.conflict)
                << " reaches the warning threshold " << conflict_warn << "\n";
  } else if (condition->parsed()) {
    const auto doc = load_model(model_path);
    const auto& prior = require_mass(doc);
    const ck::EventSet evidence = ck::EventSet::parse(prior.frame(), on_event);
    std::cout << ck::format_mass_inline(ck::bayes_condition(prior, evidence)) << "\n";
  } else if (monotone->parsed()) {
    const auto doc = load_model(model_path);
    const ck::Capacity c = model_capacity(doc, snap);
    const ck::MonotoneOrder order = [&] {
      if (order_text == "inf") return ck::MonotoneOrder::infinity();
      try {
        std::size_t used = 0;
        const int p = std::stoi(order_text, &used);
        if (used == order_text.size()) return ck::MonotoneOrder::finite(p);
      } catch (const std::logic_error&) {
      }
      throw ck::ValidationError("--order must be a positive integer or \"inf\", got \"" +
                                order_text + "\"");
    }();
    const ck::MonotonicityReport r = ck::is_monotone_of_order(c, order);
    if (r.holds) {
      std::cout << "monotone of order " << order_text << ": holds\n";
    } else if (order.is_infinite) {
      std::cout << "monotone of order inf: violated; negative Moebius mass on:";
      for (const auto& w : r.witness) std::cout << " {" << w.to_string() << "}";
      std::cout << "\n";
    } else {
      std::cout << "monotone of order " << order_text << ": violated, witness";
      for (const auto& w : r.witness) std::cout << " {" << w.to_string() << "}";
      std::cout << "\n";
    }
  } else if (envelope_cmd->parsed()) {
    const auto doc = load_model(model_path);
    ck::EnvelopeResult env = [&] {
      if (const auto* poly = doc.polytope()) return ck::envelope_detailed(*poly);
      if (const auto* fam = doc.family()) return ck::envelope_detailed(*fam, snap);
      throw ck::ValidationError("model has no \"credal\" entry");
    }();
    std::cout << ck::render_capacity_table(env.capacity,
                                           ck::mobius_from_capacity(env.capacity));
    if (raw) {
      std::cout << "raw lower values:\n";
      for (std::uint32_t s : ck::events_in_table_order(env.capacity.frame()))
        std::cout << "  " << env.capacity.frame().display_event(s) << ": "
                  << ck::format_double(env.raw_lower[s]) << "\n";
    }
  } else if (representable->parsed()) {
    const auto doc = load_model(model_path);
    ck::RepresentabilityReport rep = [&] {
      if (const auto* poly = doc.polytope()) return ck::ds_representable(*poly);
      if (const auto* fam = doc.family()) return ck::ds_representable(*fam);
      throw ck::ValidationError("model has no \"credal\" entry");
    }();
    std::cout << ck::render_capacity_table(rep.capacity, rep.mobius);
    std::cout << "representable: " << (rep.representable ? "yes" : "no") << "\n";
    for (const auto& v : rep.violations)
      std::cout << "  m({" << v.to_string()
                << "}) = " << ck::decimal_string(rep.mobius.at(v.bits())) << "\n";
  } else if (vertices->parsed()) {
    const auto doc = load_model(model_path);
    const ck::VertexPolytope poly = model_polytope(doc, snap);
    for (const auto& v : poly.vertices()) std::cout << format_vertex(v) << "\n";
  } else if (geometry->parsed()) {
    const auto doc = load_model(model_path);
    std::ostringstream csv;
    csv << "label,x,y,z\n";
    auto emit = [&](const std::string& label, const ck::Distribution& d) {
      const std::array<double, 3> xyz = ck::barycentric_coordinates(d);
      csv << label << "," << ck::format_double(xyz[0]) << ","
          << ck::format_double(xyz[1]) << "," << ck::format_double(xyz[2]) << "\n";
    };
    const ck::VertexPolytope poly = model_polytope(doc, snap);
    for (std::size_t i = 0; i < poly.vertices().size(); ++i)
      emit("v" + std::to_string(i), poly.vertices()[i]);
    if (samples > 0) {
      const auto* fam = doc.family();
      if (!fam)
        throw ck::ValidationError("--samples requires a polynomial credal model");
      const ck::VertexPolytope sampled = ck::convex_closure_sample(*fam, samples);
      for (std::size_t i = 0; i < sampled.vertices().size(); ++i)
        emit("s" + std::to_string(i), sampled.vertices()[i]);
    }
    if (out_path.empty()) {
      std::cout << csv.str();
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) throw ck::ValidationError("cannot write \"" + out_path + "\"");
      out << csv.str();
    }
  } else if (decide->parsed()) {
    const auto doc = load_model(model_path);
    if (!doc.gamble) throw ck::ValidationError("model has no \"gamble\" entry");
    if (const auto* poly = doc.polytope()) {
      print_decision_report(ck::evaluate_gamble(*poly, *doc.gamble), nullptr);
    } else if (const auto* fam = doc.family()) {
      print_decision_report(ck::evaluate_gamble(*fam, *doc.gamble, snap),
                            &fam->param_names());
    } else {
      throw ck::ValidationError("model has no \"credal\" entry");
    }
  } else if (paper->parsed()) {
    ck::PaperRunOptions opts;
    if (!epsilon.empty()) opts.epsilon = ck::parse_rational(epsilon);
    const ck::PaperRunResult r = ck::run_paper(paper_id, opts);
    std::cout << r.report;
    if (!r.matched) {
      std::cerr << "golden mismatch for \"" << r.id << "\":\n"
                << ck::first_difference(r.report, r.golden);
      return 4;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const ck::TotalConflict& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ck::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
