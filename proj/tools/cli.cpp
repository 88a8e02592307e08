// Copyright 2026 The critcausal Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include "critcausal/error.hpp"
#include "critcausal/indicators.hpp"
#include "critcausal/io.hpp"
#include "critcausal/separation.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace critcausal::cli
{

namespace
{

using nlohmann::json;

struct Settings
{
  std::string format = "human";
  bool json() const { return format == "json"; }
};

LoadedModel load(const std::string & ref)
{
  constexpr std::string_view prefix = "fixture:";
  if (ref.rfind(prefix, 0) == 0) {
    return fixture(fixture_from_string(std::string_view(ref).substr(prefix.size())));
  }
  return load_model(ref);
}

std::vector<std::string> split(const std::string & text, char sep)
{
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) {
    cur.erase(0, cur.find_first_not_of(' '));
    cur.erase(cur.find_last_not_of(' ') + 1);
    if (!cur.empty()) {
      parts.push_back(cur);
    }
  }
  return parts;
}

Intervention parse_assignments(const std::string & text)
{
  Intervention out;
  for (const auto & part : split(text, ',')) {
    const auto eq = part.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == part.size()) {
      throw Error(ErrorCode::InvalidArgument, "expected node=label, got '" + part + "'");
    }
    out[part.substr(0, eq)] = part.substr(eq + 1);
  }
  return out;
}

NodeSet parse_set(const std::string & text)
{
  const auto parts = split(text, ',');
  return {parts.begin(), parts.end()};
}

std::vector<double> parse_reals(const std::string & text)
{
  std::vector<double> out;
  for (const auto & part : split(text, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(part, &used);
    } catch (const std::exception &) {
      used = 0;
    }
    if (used != part.size()) {
      throw Error(ErrorCode::InvalidArgument, "not a number: '" + part + "'");
    }
    out.push_back(v);
  }
  return out;
}

std::string set_text(const NodeSet & s)
{
  if (s.empty()) {
    return "∅";
  }
  std::string out = "{";
  for (const auto & n : s) {
    out += (out.size() > 1 ? ", " : "") + n;
  }
  return out + "}";
}

std::string assignment_text(const Assignment & a)
{
  std::string out;
  for (const auto & [k, v] : a) {
    out += (out.empty() ? "" : ", ") + k + "=" + v;
  }
  return out;
}

json distribution_json(const DiscreteModel & m, const Distribution & d)
{
  json out = json::object();
  const VariableSpec & spec = m.spec(d.variables.front());
  for (std::size_t c = 0; c < spec.cardinality(); ++c) {
    out[spec.domain[c]] = d.p[static_cast<Eigen::Index>(c)];
  }
  return out;
}

json codes_json(const VariableSpec & spec)
{
  json out = json::object();
  for (std::size_t c = 0; c < spec.cardinality(); ++c) {
    out[spec.domain[c]] = spec.codes[c];
  }
  return out;
}

void emit(const Settings & s, std::ostream & out, const json & doc, const std::string & human)
{
  if (s.json()) {
    out << canonical_json(doc);
  } else {
    out << human;
  }
}

std::string pad(const std::string & text, std::size_t width)
{
  return text.size() >= width ? text + " " : text + std::string(width - text.size(), ' ');
}

// ---------------------------------------------------------------- validate

int cmd_validate(const Settings & s, const std::string & path, std::ostream & out)
{
  json doc = {{"command", "validate"}, {"model", path}};
  std::vector<Violation> violations;
  std::optional<LoadedModel> lm;
  try {
    lm = load(path);
  } catch (const Error & e) {
    if (e.code() != ErrorCode::ValidationError) {
      throw;
    }
    violations.push_back({"structure", e.what()});
  }
  std::ostringstream human;
  human << "model: " << path << "\n";
  if (lm) {
    const auto & st = lm->model.structure();
    const auto extra = validate_causal_relation(lm->relation);
    violations.insert(violations.end(), extra.begin(), extra.end());
    doc["nodes"] = st.size();
    doc["directed_edges"] = st.directed_edge_count();
    doc["bidirected_edges"] = st.bidirected_edges().size();
    doc["instantiated"] = lm->model.instantiated().size();
    doc["fully_instantiated"] = lm->model.fully_instantiated();
    human << "nodes: " << st.size() << "\n"
          << "directed edges: " << st.directed_edge_count() << "\n"
          << "bidirected edges: " << st.bidirected_edges().size() << "\n"
          << "instantiated: " << lm->model.instantiated().size() << " of " << st.size()
          << (lm->model.fully_instantiated() ? " (fully instantiated)" : " (partial)") << "\n";
  }
  json v = json::array();
  for (const auto & x : violations) {
    v.push_back({{"clause", x.clause}, {"message", x.message}});
    human << "violation " << x.clause << ": " << x.message << "\n";
  }
  doc["violations"] = v;
  doc["clean"] = violations.empty();
  human << "status: " << (violations.empty() ? "clean" : "violations") << "\n";
  emit(s, out, doc, human.str());
  return violations.empty() ? kClean : kFinding;
}

// ---------------------------------------------------------------- adjust

struct AdjustArgs
{
  std::string model;
  std::string x;
  std::string y;
  std::size_t max = 64;
  bool minimal = false;
};

int cmd_adjust(const Settings & s, const AdjustArgs & a, std::ostream & out)
{
  const LoadedModel lm = load(a.model);
  const std::string x = a.x.empty() ? lm.relation.phenomenon.variable : a.x;
  const std::string y = a.y.empty() ? lm.relation.metric : a.y;
  AdjustmentOptions options;
  options.max_count = a.max;
  options.minimal_only = a.minimal;
  const auto sets = enumerate_adjustment_sets(lm.model.structure(), x, y, options);
  json list = json::array();
  std::ostringstream human;
  human << "adjustment sets for (" << x << ", " << y << "), "
        << (a.minimal ? "minimal" : "exhaustive") << " mode, max " << a.max << ":\n";
  for (const auto & set : sets) {
    list.push_back(json(std::vector<std::string>(set.begin(), set.end())));
    human << "  " << set_text(set) << "\n";
  }
  if (sets.empty()) {
    human << "  none: the effect is not identifiable by back-door adjustment\n";
  }
  json doc = {
    {"command", "adjust"}, {"x", x}, {"y", y}, {"mode", a.minimal ? "minimal" : "exhaustive"},
    {"max_count", a.max}, {"sets", list}};
  emit(s, out, doc, human.str());
  return sets.empty() ? kFinding : kClean;
}

// ---------------------------------------------------------------- effect

struct EffectArgs
{
  std::string model;
  std::string intervention;
  std::string target;
  std::string route = "auto";
  std::string adjustment;
  bool has_adjustment = false;
};

int cmd_effect(const Settings & s, const EffectArgs & a, std::ostream & out)
{
  const LoadedModel lm = load(a.model);
  const DiscreteModel & m = lm.model;
  const std::string target = a.target.empty() ? lm.relation.metric : a.target;
  const Intervention i = parse_assignments(a.intervention);
  const Route route = route_from_string(a.route);
  std::optional<NodeSet> adjustment;
  if (a.has_adjustment) {
    adjustment = parse_set(a.adjustment);
  }
  const Distribution d = interventional(m, i, target, route, adjustment);
  const double e = expectation(m, d);
  const std::string cond = i.empty() ? "" : " | do(" + assignment_text(i) + ")";
  std::ostringstream human;
  const VariableSpec & spec = m.spec(target);
  for (std::size_t c = 0; c < spec.cardinality(); ++c) {
    human << "P(" << target << "=" << spec.domain[c] << cond
          << ") = " << format_real(d.p[static_cast<Eigen::Index>(c)]) << "\n";
  }
  human << "E(" << target << cond << ") = " << format_real(e) << "\n";
  human << "route: " << to_string(route) << "\n";
  json doc = {
    {"command", "effect"},       {"intervention", i}, {"target", target},
    {"route", to_string(route)}, {"distribution", distribution_json(m, d)},
    {"expectation", e},          {"codes", codes_json(spec)}};
  if (adjustment) {
    doc["adjustment_set"] = std::vector<std::string>(adjustment->begin(), adjustment->end());
  }
  emit(s, out, doc, human.str());
  return kClean;
}

// ---------------------------------------------------------------- indicators

struct IndicatorArgs
{
  std::string reference;
  std::string candidate;
  std::string set;
  std::vector<std::string> data;
  double alpha = 0.0;
  bool bits = false;
  std::string rho3 = "full-graph";
  std::string thresholds;
};

json report_json(const IndicatorReport & r, const std::string & role)
{
  json warnings = r.warnings;
  return {
    {"name", r.name},
    {"model", role},
    {"value", r.value},
    {"node_set", std::vector<std::string>(r.node_set.begin(), r.node_set.end())},
    {"metadata", r.metadata},
    {"warnings", warnings}};
}

DiscreteModel reestimate(const DiscreteModel & m, const std::string & path, double alpha, json & warnings)
{
  const Dataset d = load_dataset(path, m.specs());
  EstimationResult est = estimate_cpds(m.structure(), m.specs(), d, alpha);
  for (const auto & w : est.warnings) {
    warnings.push_back(path + ": " + w);
  }
  return est.model;
}

int cmd_indicators(const Settings & s, const IndicatorArgs & a, std::ostream & out)
{
  const LoadedModel ref_file = load(a.reference);
  const LoadedModel cand_file = load(a.candidate);
  const PhenomenonBinding cp = ref_file.relation.phenomenon;
  const std::string phi = ref_file.relation.metric;
  const NodeSet N = parse_set(a.set);
  const LogBase base = a.bits ? LogBase::Bits : LogBase::Nats;
  const Rho3Semantics semantics = rho3_semantics_from_string(a.rho3);
  std::map<std::string, double> thresholds;
  for (const auto & [name, value] : parse_assignments(a.thresholds)) {
    const auto v = parse_reals(value);
    thresholds[name] = v.at(0);
  }

  json warnings = json::array();
  DiscreteModel reference = ref_file.model;
  DiscreteModel candidate = cand_file.model;
  if (a.data.size() > 2) {
    throw Error(ErrorCode::InvalidArgument, "--data takes one or two dataset files");
  }
  if (!a.data.empty()) {
    reference = reestimate(reference, a.data[0], a.alpha, warnings);
  }
  if (a.data.size() == 2) {
    candidate = reestimate(candidate, a.data[1], a.alpha, warnings);
  }

  json entries = json::array();
  std::vector<IndicatorReport> reports;
  bool failed = false;
  std::ostringstream human;
  human << pad("indicator", 11) << pad("model", 11) << "value\n";
  auto run = [&](const std::string & name, const std::string & role, auto && compute) {
    try {
      IndicatorReport r = compute();
      reports.push_back(r);
      entries.push_back(report_json(r, role));
      human << pad(name, 11) << pad(role, 11) << format_real(r.value);
      for (const auto & w : r.warnings) {
        human << "  [warning: " << w << "]";
      }
      human << "\n";
    } catch (const Error & e) {
      failed = true;
      entries.push_back({{"name", name}, {"model", role}, {"value", nullptr}, {"error", e.what()}});
      human << pad(name, 11) << pad(role, 11) << "error: " << e.what() << "\n";
    }
  };
  for (const auto & [role, model] :
       {std::pair<std::string, const DiscreteModel *>{"reference", &reference}, {"candidate", &candidate}}) {
    run("ACE", role, [&, m = model] { return ace(*m, cp, phi); });
    run("RCE", role, [&, m = model] { return rce(*m, cp, phi); });
    run("sigma", role, [&, m = model] { return sigma(*m, cp, phi); });
  }
  run("rho1", "pair", [&] { return rho1(reference, candidate, cp, base); });
  run("rho2", "pair", [&] { return rho2(reference, candidate, N, base); });
  run("rho3", "pair", [&] { return rho3(reference, candidate, N, cp, semantics, base); });

  json doc = {
    {"command", "indicators"},
    {"reference", a.reference},
    {"candidate", a.candidate},
    {"node_set", std::vector<std::string>(N.begin(), N.end())},
    {"conventions",
     {{"log_base", to_string(base)},
      {"kl_order", "candidate||reference"},
      {"rho3_semantics", to_string(semantics)},
      {"phenomenon", cp.variable},
      {"cp_label", cp.cp_label},
      {"phi", phi},
      {"phi_codes", codes_json(reference.spec(phi))}}},
    {"data", a.data},
    {"smoothing", a.alpha},
    {"indicators", entries},
    {"warnings", warnings}};
  human << "log base: " << to_string(base) << ", KL order: candidate||reference, rho3: "
        << to_string(semantics) << "\n";
  for (const auto & w : warnings) {
    human << "warning: " << w.get<std::string>() << "\n";
  }
  bool exceeded = false;
  if (!thresholds.empty()) {
    const Judgement j = judge(reports, thresholds);
    exceeded = !j.plausible;
    doc["judgement"] = {{"plausible", j.plausible}, {"exceeded", j.exceeded}, {"thresholds", thresholds}};
    human << "judgement: " << (j.plausible ? "plausible" : "not plausible");
    for (const auto & n : j.exceeded) {
      human << " [" << n << " above threshold]";
    }
    human << "\n";
  }
  emit(s, out, doc, human.str());
  return failed || exceeded ? kFinding : kClean;
}

// ---------------------------------------------------------------- sample

struct SampleArgs
{
  std::string model;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::string output;
};

int cmd_sample(const Settings & s, const SampleArgs & a, std::ostream & out)
{
  const LoadedModel lm = load(a.model);
  const Dataset d = sample(lm.model, a.n, a.seed);
  if (a.output.empty()) {
    out << serialize_dataset(d);
    return kClean;
  }
  save_dataset(a.output, d);
  std::vector<std::string> columns;
  for (const auto & c : d.columns) {
    columns.push_back(c.name);
  }
  json doc = {
    {"command", "sample"}, {"rows", d.size()}, {"seed", a.seed}, {"columns", columns}, {"output", a.output}};
  std::ostringstream human;
  human << "wrote " << d.size() << " rows (seed " << a.seed << ") to " << a.output << "\n";
  emit(s, out, doc, human.str());
  return kClean;
}

// ---------------------------------------------------------------- metrics

struct MetricArgs
{
  std::vector<std::string> trajectories;
  std::string field;
  std::string edges;
  std::string agg = "max";
};

int cmd_metrics(const Settings & s, const MetricArgs & a, std::ostream & out)
{
  std::vector<Trajectory> trajs;
  for (const auto & path : a.trajectories) {
    trajs.push_back(load_trajectory(path));
  }
  const DrivingTask dt = DrivingTask::covering(std::move(trajs));
  const AccelField field = load_field(a.field);
  std::optional<std::vector<double>> edges;
  if (!a.edges.empty()) {
    edges = parse_reals(a.edges);
  }
  const MetricReport r = evaluate_metrics(dt, field, aggregate_mode_from_string(a.agg), edges);
  json doc = {
    {"command", "metrics"},
    {"trajectories", a.trajectories.size()},
    {"t_s", dt.t_s},
    {"t_h", dt.t_h},
    {"along_req", r.along_req},
    {"along_min", r.along_min},
    {"alat_req", r.alat_req},
    {"alat_min", r.alat_min},
    {"btn_dt", r.btn},
    {"stn_dt", r.stn},
    {"aggregate", r.aggregate},
    {"aggregation", to_string(r.mode)}};
  std::ostringstream human;
  human << "a_long,req: " << format_real(r.along_req) << "\n"
        << "a_long,min: " << format_real(r.along_min) << "\n"
        << "a_lat,req: " << format_real(r.alat_req) << "\n"
        << "a_lat,min: " << format_real(r.alat_min) << "\n"
        << "BTN_DT: " << format_real(r.btn) << "\n"
        << "STN_DT: " << format_real(r.stn) << "\n"
        << "aggregate (" << to_string(r.mode) << "): " << format_real(r.aggregate) << "\n";
  if (r.bin) {
    doc["bin"] = {{"index", r.bin->index}, {"label", r.bin->label}, {"edges", *edges}};
    human << "bin: " << r.bin->label << " (" << r.bin->index << ")\n";
  }
  emit(s, out, doc, human.str());
  return kClean;
}

// ---------------------------------------------------------------- sp

struct SpArgs
{
  std::string model;
  std::string intervention;
  std::string name = "sp";
  bool report = false;
};

int cmd_sp(const Settings & s, const SpArgs & a, std::ostream & out)
{
  const LoadedModel lm = load(a.model);
  const SafetyPrinciple sp{a.name, parse_assignments(a.intervention), ""};
  const SafetyPrincipleReport r =
    evaluate_safety_principle(lm.model, sp, lm.relation.phenomenon, lm.relation.metric);
  const std::string x = lm.relation.phenomenon.variable;
  const std::string phi = lm.relation.metric;
  json doc = {
    {"command", "sp"},
    {"name", sp.name},
    {"intervention", sp.intervention},
    {"phenomenon", x},
    {"cp_label", lm.relation.phenomenon.cp_label},
    {"phi", phi},
    {"delta_p_cp", r.delta_p_cp},
    {"delta_e_phi", r.delta_e_phi},
    {"warnings", r.warnings}};
  std::ostringstream human;
  const std::string cond = " | do(" + assignment_text(sp.intervention) + ")";
  human << "safety principle: " << sp.name << " = do(" << assignment_text(sp.intervention) << ")\n";
  if (a.report) {
    doc["p_cp"] = r.p_cp;
    doc["p_cp_do"] = r.p_cp_do;
    doc["e_phi"] = r.e_phi;
    doc["e_phi_do"] = r.e_phi_do;
    doc["phi_codes"] = codes_json(lm.model.spec(phi));
    human << "P(" << x << "=" << lm.relation.phenomenon.cp_label << ") = " << format_real(r.p_cp) << "\n"
          << "P(" << x << "=" << lm.relation.phenomenon.cp_label << cond << ") = " << format_real(r.p_cp_do)
          << "\n"
          << "E(" << phi << ") = " << format_real(r.e_phi) << "\n"
          << "E(" << phi << cond << ") = " << format_real(r.e_phi_do) << "\n";
  }
  human << "delta P(CP): " << format_real(r.delta_p_cp) << "\n"
        << "delta E(" << phi << "): " << format_real(r.delta_e_phi) << "\n";
  for (const auto & w : r.warnings) {
    human << "warning: " << w << "\n";
  }
  emit(s, out, doc, human.str());
  return kClean;
}

int exit_code_for(ErrorCode code)
{
  switch (code) {
    case ErrorCode::IoError:
    case ErrorCode::ParseError:
    case ErrorCode::InvalidArgument:
    case ErrorCode::UnknownNode:
    case ErrorCode::UnknownCategory:
    case ErrorCode::UnknownLabel:
    case ErrorCode::RaggedRow:
      return kUsage;
    default:
      return kFinding;
  }
}

}  // namespace

int run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err)
{
  CLI::App app{"Causal relations for criticality analysis of automated driving", "critcausal"};
  app.require_subcommand(1);
  app.fallthrough();
  Settings settings;
  app.add_option("--format", settings.format, "Output format")
    ->check(CLI::IsMember({"human", "json"}))
    ->capture_default_str();

  std::string validate_model;
  auto * validate = app.add_subcommand("validate", "Check a model file against the causal-relation rules");
  validate->add_option("model", validate_model, "Model file or fixture:<id>")->required();

  AdjustArgs adjust_args;
  auto * adjust = app.add_subcommand("adjust", "List back-door adjustment sets");
  adjust->add_option("model", adjust_args.model, "Model file or fixture:<id>")->required();
  adjust->add_option("--x", adjust_args.x, "Treatment node (default: phenomenon variable)");
  adjust->add_option("--y", adjust_args.y, "Outcome node (default: metric)");
  adjust->add_option("--max", adjust_args.max, "Maximum number of sets")->capture_default_str();
  adjust->add_flag("--minimal", adjust_args.minimal, "Only inclusion-minimal sets");

  EffectArgs effect_args;
  auto * effect = app.add_subcommand("effect", "Interventional distribution and expectation");
  effect->add_option("model", effect_args.model, "Model file or fixture:<id>")->required();
  effect->add_option("--do", effect_args.intervention, "Intervention node=label,...");
  effect->add_option("--target", effect_args.target, "Target node (default: metric)");
  effect->add_option("--route", effect_args.route, "auto, truncated, parent or backdoor")
    ->check(CLI::IsMember({"auto", "truncated", "parent", "backdoor"}))
    ->capture_default_str();
  auto * effect_set = effect->add_option("--set", effect_args.adjustment, "Adjustment set a,b,...");

  IndicatorArgs ind_args;
  auto * indicators = app.add_subcommand("indicators", "Causality indicators for a model pair");
  indicators->add_option("--reference", ind_args.reference, "Reference model (assumed reality)")->required();
  indicators->add_option("--candidate", ind_args.candidate, "Candidate model")->required();
  indicators->add_option("--set", ind_args.set, "Node set N for rho2 and rho3")->required();
  indicators->add_option("--data", ind_args.data, "Dataset(s) to re-estimate reference [and candidate]")
    ->expected(1, 2);
  indicators->add_option("--alpha", ind_args.alpha, "Additive smoothing for re-estimation")
    ->check(CLI::NonNegativeNumber);
  indicators->add_flag("--bits", ind_args.bits, "Report divergences in bits");
  indicators->add_option("--rho3", ind_args.rho3, "full-graph or restrict-to-N")
    ->check(CLI::IsMember({"full-graph", "restrict-to-N"}))
    ->capture_default_str();
  indicators->add_option("--threshold", ind_args.thresholds, "name=value,... upper bounds");

  SampleArgs sample_args;
  auto * sample_cmd = app.add_subcommand("sample", "Forward-sample a fully instantiated model");
  sample_cmd->add_option("model", sample_args.model, "Model file or fixture:<id>")->required();
  sample_cmd->add_option("-n", sample_args.n, "Number of records")->required();
  sample_cmd->add_option("--seed", sample_args.seed, "Random seed")->capture_default_str();
  sample_cmd->add_option("-o,--output", sample_args.output, "Output CSV (default: stdout)");

  MetricArgs metric_args;
  auto * metrics = app.add_subcommand("metrics", "BTN_DT, STN_DT and their aggregate");
  metrics->add_option("--trajectories", metric_args.trajectories, "Trajectory files (t x y)")
    ->required()
    ->expected(1, -1);
  metrics->add_option("--field", metric_args.field, "Acceleration field file")->required();
  metrics->add_option("--edges", metric_args.edges, "Bin edges e1,e2,... for discretization");
  metrics->add_option("--agg", metric_args.agg, "max, mean or euclidean")
    ->check(CLI::IsMember({"max", "mean", "euclidean"}))
    ->capture_default_str();

  SpArgs sp_args;
  auto * sp = app.add_subcommand("sp", "Evaluate a safety principle as an intervention");
  sp->add_option("model", sp_args.model, "Model file or fixture:<id>")->required();
  sp->add_option("--sp", sp_args.intervention, "Intervention node=label,...")->required();
  sp->add_option("--name", sp_args.name, "Name of the safety principle")->capture_default_str();
  sp->add_flag("--report", sp_args.report, "Include the underlying probabilities and expectations");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError & e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kClean : kUsage;
  }

  try {
    if (*validate) {
      return cmd_validate(settings, validate_model, out);
    }
    if (*adjust) {
      return cmd_adjust(settings, adjust_args, out);
    }
    if (*effect) {
      effect_args.has_adjustment = effect_set->count() > 0;
      return cmd_effect(settings, effect_args, out);
    }
    if (*indicators) {
      return cmd_indicators(settings, ind_args, out);
    }
    if (*sample_cmd) {
      return cmd_sample(settings, sample_args, out);
    }
    if (*metrics) {
      return cmd_metrics(settings, metric_args, out);
    }
    if (*sp) {
      return cmd_sp(settings, sp_args, out);
    }
  } catch (const Error & e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception & e) {
    err << "error: " << e.what() << "\n";
    return kFinding;
  }
  return kUsage;
}

}  // namespace critcausal::cli
