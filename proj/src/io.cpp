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

#include "critcausal/io.hpp"

#include "critcausal/error.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace critcausal
{

namespace embedded
{
extern const std::string_view kHeavyRainReality;
extern const std::string_view kHeavyRainModel;
extern const std::string_view kFrictionRelation;
}  // namespace embedded

using nlohmann::json;

std::string format_real(double v)
{
  if (v == 0.0) {
    return "0";
  }
  if (std::isfinite(v) && v == std::trunc(v) && std::abs(v) < 1e15) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.0f", v);
    return buf;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

namespace
{

void write_canonical(const json & v, int depth, std::string & out)
{
  const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(2 * depth), ' ');
  switch (v.type()) {
    case json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      // nlohmann::json stores object keys in a std::map, already sorted.
      for (auto it = v.begin(); it != v.end(); ++it) {
        out += first ? "" : ",\n";
        first = false;
        out += pad + json(it.key()).dump(-1, ' ', true) + ": ";
        write_canonical(it.value(), depth + 1, out);
      }
      out += "\n" + close_pad + "}";
      return;
    }
    case json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        out += i ? ",\n" : "";
        out += pad;
        write_canonical(v[i], depth + 1, out);
      }
      out += "\n" + close_pad + "]";
      return;
    }
    case json::value_t::number_float:
      out += format_real(v.get<double>());
      return;
    default:
      out += v.dump(-1, ' ', true);
      return;
  }
}

[[noreturn]] void parse_fail(const std::string & field, const std::string & what)
{
  throw Error(ErrorCode::ParseError, "field '" + field + "': " + what);
}

// Typed access to one JSON object that remembers which keys were read so
// that unknown keys can be rejected.
class ObjectReader
{
public:
  ObjectReader(const json & j, std::string path) : j_(j), path_(std::move(path))
  {
    if (!j_.is_object()) {
      parse_fail(path_, "expected an object");
    }
  }

  const json * get(const std::string & key, bool required = true)
  {
    seen_.insert(key);
    auto it = j_.find(key);
    if (it == j_.end()) {
      if (required) {
        parse_fail(field(key), "missing");
      }
      return nullptr;
    }
    return &*it;
  }

  std::string string(const std::string & key)
  {
    const json * v = get(key);
    if (!v->is_string()) {
      parse_fail(field(key), "expected a string");
    }
    return v->get<std::string>();
  }

  const json & array(const std::string & key, bool required = true)
  {
    static const json empty = json::array();
    const json * v = get(key, required);
    if (!v) {
      return empty;
    }
    if (!v->is_array()) {
      parse_fail(field(key), "expected an array");
    }
    return *v;
  }

  std::string field(const std::string & key) const
  {
    return path_.empty() ? key : path_ + "." + key;
  }

  void finish() const
  {
    for (auto it = j_.begin(); it != j_.end(); ++it) {
      if (!seen_.count(it.key())) {
        parse_fail(field(it.key()), "unknown field");
      }
    }
  }

private:
  const json & j_;
  std::string path_;
  std::set<std::string> seen_;
};

std::string indexed(const std::string & path, std::size_t i)
{
  return path + "[" + std::to_string(i) + "]";
}

std::string as_string(const json & v, const std::string & path)
{
  if (!v.is_string()) {
    parse_fail(path, "expected a string");
  }
  return v.get<std::string>();
}

double as_number(const json & v, const std::string & path)
{
  if (!v.is_number()) {
    parse_fail(path, "expected a number");
  }
  return v.get<double>();
}

std::vector<std::string> string_list(const json & arr, const std::string & path)
{
  std::vector<std::string> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    out.push_back(as_string(arr[i], indexed(path, i)));
  }
  return out;
}

std::vector<EdgeDecl> edge_list(const json & arr, const std::string & path)
{
  std::vector<EdgeDecl> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const json & e = arr[i];
    if (!e.is_array() || e.size() != 2) {
      parse_fail(indexed(path, i), "expected a [from, to] pair");
    }
    out.emplace_back(as_string(e[0], indexed(path, i) + "[0]"), as_string(e[1], indexed(path, i) + "[1]"));
  }
  return out;
}

Operand parse_operand(const json & v, const std::string & path)
{
  if (v.is_number()) {
    return Literal{v.get<double>(), ""};
  }
  if (v.is_string()) {
    return Literal{v.get<std::string>(), ""};
  }
  ObjectReader r(v, path);
  if (v.contains("individual")) {
    PropertyRef ref{r.string("individual"), r.string("property")};
    r.finish();
    return ref;
  }
  Literal lit;
  const json * value = r.get("value");
  if (value->is_number()) {
    lit.value = value->get<double>();
  } else if (value->is_string()) {
    lit.value = value->get<std::string>();
  } else {
    parse_fail(r.field("value"), "expected a number or string");
  }
  lit.unit = r.string("unit");
  r.finish();
  return lit;
}

Context parse_context(const json & j, const std::string & path)
{
  Context ctx;
  ObjectReader r(j, path);
  const json & inds = r.array("individuals");
  for (std::size_t i = 0; i < inds.size(); ++i) {
    ObjectReader ir(inds[i], indexed(r.field("individuals"), i));
    Individual ind;
    ind.cls = ir.string("class");
    ind.name = ir.string("name");
    ind.properties = string_list(ir.array("properties"), ir.field("properties"));
    ir.finish();
    ctx.individuals.push_back(std::move(ind));
  }
  const json & sts = r.array("statements");
  for (std::size_t i = 0; i < sts.size(); ++i) {
    ObjectReader sr(sts[i], indexed(r.field("statements"), i));
    ContextStatement st;
    st.kind = statement_kind_from_string(sr.string("kind"));
    const json * layer = sr.get("layer");
    if (!layer->is_number_integer()) {
      parse_fail(sr.field("layer"), "expected an integer");
    }
    st.layer = layer->get<int>();
    st.subject = sr.string("subject");
    if (const json * e = sr.get("expression", false)) {
      ObjectReader er(*e, sr.field("expression"));
      Expression ex;
      ex.op = comparison_from_string(er.string("op"));
      ex.property = er.string("property");
      ex.rhs = parse_operand(*er.get("value"), er.field("value"));
      er.finish();
      st.expression = std::move(ex);
    }
    sr.finish();
    ctx.statements.push_back(std::move(st));
  }
  r.finish();
  return ctx;
}

json context_to_json(const Context & ctx)
{
  json inds = json::array();
  for (const auto & ind : ctx.individuals) {
    inds.push_back({{"class", ind.cls}, {"name", ind.name}, {"properties", ind.properties}});
  }
  json sts = json::array();
  for (const auto & st : ctx.statements) {
    json s = {{"kind", std::string(to_string(st.kind))}, {"layer", st.layer}, {"subject", st.subject}};
    if (st.expression) {
      json value;
      if (const auto * ref = std::get_if<PropertyRef>(&st.expression->rhs)) {
        value = {{"individual", ref->individual}, {"property", ref->property}};
      } else {
        const auto & lit = std::get<Literal>(st.expression->rhs);
        json raw = std::holds_alternative<double>(lit.value) ? json(std::get<double>(lit.value))
                                                              : json(std::get<std::string>(lit.value));
        value = lit.unit.empty() ? raw : json{{"unit", lit.unit}, {"value", raw}};
      }
      s["expression"] = {
        {"op", std::string(to_string(st.expression->op))},
        {"property", st.expression->property},
        {"value", value}};
    }
    sts.push_back(std::move(s));
  }
  return {{"individuals", inds}, {"statements", sts}};
}

std::size_t line_of(std::string_view text, std::size_t byte)
{
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    line += text[i] == '\n';
  }
  return line;
}

std::vector<std::string> split_lines(std::string_view text)
{
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  if (!cur.empty()) {
    lines.push_back(cur);
  }
  return lines;
}

std::vector<std::string> split_commas(const std::string & line)
{
  std::vector<std::string> cells;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      cells.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  cells.push_back(cur);
  return cells;
}

}  // namespace

std::string canonical_json(const json & value)
{
  std::string out;
  write_canonical(value, 0, out);
  out += "\n";
  return out;
}

LoadedModel parse_model(std::string_view text)
{
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error & e) {
    throw Error(
      ErrorCode::ParseError,
      "line " + std::to_string(line_of(text, e.byte == 0 ? 0 : e.byte - 1)) + ": malformed JSON");
  }
  ObjectReader top(doc, "");
  const json * version = top.get("format_version");
  if (!version->is_number_integer() || version->get<int>() != 1) {
    parse_fail("format_version", "only version 1 is supported");
  }

  std::vector<VariableSpec> specs;
  std::vector<NodeDecl> nodes;
  const json & vars = top.array("variables");
  for (std::size_t i = 0; i < vars.size(); ++i) {
    ObjectReader vr(vars[i], indexed("variables", i));
    VariableSpec spec;
    spec.name = vr.string("name");
    spec.domain = string_list(vr.array("domain"), vr.field("domain"));
    const json & codes = vr.array("codes");
    for (std::size_t k = 0; k < codes.size(); ++k) {
      spec.codes.push_back(as_number(codes[k], indexed(vr.field("codes"), k)));
    }
    spec.unit = vr.string("unit");
    spec.range = vr.string("range");
    const json * latent = vr.get("latent");
    if (!latent->is_boolean()) {
      parse_fail(vr.field("latent"), "expected a boolean");
    }
    vr.finish();
    nodes.push_back({spec.name, latent->get<bool>()});
    specs.push_back(std::move(spec));
  }
  const auto edges = edge_list(top.array("edges"), "edges");
  const auto bidirected = edge_list(top.array("bidirected", false), "bidirected");

  std::vector<Cpd> cpds;
  const json & cpd_arr = top.array("cpds", false);
  for (std::size_t i = 0; i < cpd_arr.size(); ++i) {
    ObjectReader cr(cpd_arr[i], indexed("cpds", i));
    const std::string child = cr.string("child");
    auto parents = string_list(cr.array("parents"), cr.field("parents"));
    const json & rows = cr.array("table");
    const std::size_t cols = rows.empty() || !rows[0].is_array() ? 0 : rows[0].size();
    Eigen::MatrixXd table(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols));
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const std::string rp = indexed(cr.field("table"), r);
      if (!rows[r].is_array() || rows[r].size() != cols) {
        parse_fail(rp, "expected a row of " + std::to_string(cols) + " numbers");
      }
      for (std::size_t c = 0; c < cols; ++c) {
        table(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          as_number(rows[r][c], indexed(rp, c));
      }
    }
    cr.finish();
    cpds.emplace_back(child, std::move(parents), std::move(table));
  }

  ObjectReader pr(*top.get("phenomenon"), "phenomenon");
  PhenomenonBinding phenomenon{pr.string("variable"), pr.string("cp_label")};
  pr.finish();
  ObjectReader mr(*top.get("metric"), "metric");
  const std::string metric = mr.string("variable");
  mr.finish();
  Context context;
  if (const json * c = top.get("context", false)) {
    context = parse_context(*c, "context");
  }
  top.finish();

  LoadedModel out;
  try {
    CausalStructure s = CausalStructure::build(nodes, edges, bidirected);
    out.model = DiscreteModel::build(s, specs, std::move(cpds));
    out.relation.structure = std::move(s);
  } catch (const Error & e) {
    throw Error(ErrorCode::ValidationError, e.what());
  }
  out.relation.specs = out.model.specs();
  out.relation.context = std::move(context);
  out.relation.phenomenon = std::move(phenomenon);
  out.relation.metric = metric;
  return out;
}

LoadedModel load_model(const std::filesystem::path & path)
{
  return parse_model(read_file(path));
}

json model_to_json(const CausalRelation & relation, const DiscreteModel & model)
{
  const CausalStructure & s = model.structure();
  json vars = json::array();
  for (NodeIndex i = 0; i < s.size(); ++i) {
    const VariableSpec & spec = model.spec(i);
    vars.push_back(
      {{"codes", spec.codes},
       {"domain", spec.domain},
       {"latent", s.is_latent(i)},
       {"name", spec.name},
       {"range", spec.range},
       {"unit", spec.unit}});
  }
  json edges = json::array();
  for (const auto & [a, b] : s.directed_edges()) {
    edges.push_back({s.name(a), s.name(b)});
  }
  json bidirected = json::array();
  for (const auto & [a, b] : s.bidirected_edges()) {
    bidirected.push_back({s.name(a), s.name(b)});
  }
  json cpds = json::array();
  for (const Cpd & c : model.cpds()) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < c.table().rows(); ++r) {
      json row = json::array();
      for (Eigen::Index k = 0; k < c.table().cols(); ++k) {
        row.push_back(c.table()(r, k));
      }
      rows.push_back(std::move(row));
    }
    cpds.push_back({{"child", c.child()}, {"parents", c.parents()}, {"table", rows}});
  }
  return {
    {"bidirected", bidirected},
    {"context", context_to_json(relation.context)},
    {"cpds", cpds},
    {"edges", edges},
    {"format_version", 1},
    {"metric", {{"variable", relation.metric}}},
    {"phenomenon", {{"cp_label", relation.phenomenon.cp_label}, {"variable", relation.phenomenon.variable}}},
    {"variables", vars}};
}

std::string serialize_model(const CausalRelation & relation, const DiscreteModel & model)
{
  return canonical_json(model_to_json(relation, model));
}

void save_model(
  const std::filesystem::path & path, const CausalRelation & relation, const DiscreteModel & model)
{
  write_file(path, serialize_model(relation, model));
}

Dataset parse_dataset(
  std::string_view text, const std::vector<VariableSpec> & specs, Provenance provenance)
{
  const auto lines = split_lines(text);
  if (lines.empty()) {
    throw Error(ErrorCode::ParseError, "dataset has no header row");
  }
  Dataset d;
  d.provenance = provenance;
  std::set<std::string> seen;
  for (const auto & name : split_commas(lines[0])) {
    auto it = std::find_if(specs.begin(), specs.end(), [&](const VariableSpec & s) { return s.name == name; });
    if (it == specs.end()) {
      throw Error(ErrorCode::UnknownNode, "dataset column '" + name + "' is not a model variable");
    }
    if (!seen.insert(name).second) {
      throw Error(ErrorCode::ParseError, "dataset column '" + name + "' appears twice");
    }
    d.columns.push_back(*it);
  }
  for (std::size_t l = 1; l < lines.size(); ++l) {
    if (lines[l].empty()) {
      continue;
    }
    const auto cells = split_commas(lines[l]);
    if (cells.size() != d.columns.size()) {
      throw Error(
        ErrorCode::RaggedRow, "line " + std::to_string(l + 1) + " has " + std::to_string(cells.size()) +
                                " cells, expected " + std::to_string(d.columns.size()));
    }
    std::vector<std::uint32_t> rec(cells.size());
    for (std::size_t c = 0; c < cells.size(); ++c) {
      auto cat = d.columns[c].find(cells[c]);
      if (!cat) {
        throw Error(
          ErrorCode::UnknownLabel, "line " + std::to_string(l + 1) + ", column '" +
                                     d.columns[c].name + "': '" + cells[c] + "'");
      }
      rec[c] = static_cast<std::uint32_t>(*cat);
    }
    d.records.push_back(std::move(rec));
  }
  return d;
}

Dataset load_dataset(
  const std::filesystem::path & path, const std::vector<VariableSpec> & specs, Provenance provenance)
{
  return parse_dataset(read_file(path), specs, provenance);
}

std::string serialize_dataset(const Dataset & d)
{
  std::string out;
  for (std::size_t c = 0; c < d.columns.size(); ++c) {
    out += (c ? "," : "") + d.columns[c].name;
  }
  out += "\n";
  for (const auto & rec : d.records) {
    for (std::size_t c = 0; c < rec.size(); ++c) {
      out += (c ? "," : "") + d.columns[c].domain[rec[c]];
    }
    out += "\n";
  }
  return out;
}

void save_dataset(const std::filesystem::path & path, const Dataset & d)
{
  write_file(path, serialize_dataset(d));
}

Trajectory parse_trajectory(std::string_view text)
{
  std::vector<std::array<double, 3>> samples;
  const auto lines = split_lines(text);
  for (std::size_t l = 0; l < lines.size(); ++l) {
    std::string line = lines[l].substr(0, lines[l].find('#'));
    std::istringstream in(line);
    std::array<double, 3> s{};
    if (!(in >> s[0])) {
      if (line.find_first_not_of(" \t") == std::string::npos) {
        continue;
      }
      throw Error(ErrorCode::ParseError, "trajectory line " + std::to_string(l + 1) + ": expected t x y");
    }
    std::string extra;
    if (!(in >> s[1] >> s[2]) || (in >> extra)) {
      throw Error(ErrorCode::ParseError, "trajectory line " + std::to_string(l + 1) + ": expected t x y");
    }
    samples.push_back(s);
  }
  return Trajectory::from_samples(samples);
}

Trajectory load_trajectory(const std::filesystem::path & path)
{
  return parse_trajectory(read_file(path));
}

AccelField parse_field(std::string_view text)
{
  std::string cleaned;
  for (const auto & line : split_lines(text)) {
    cleaned += line.substr(0, line.find('#')) + "\n";
  }
  std::istringstream in(cleaned);
  double nx = 0, ny = 0;
  AccelField f;
  if (!(in >> nx >> ny >> f.x0 >> f.y0 >> f.dx >> f.dy)) {
    throw Error(ErrorCode::ParseError, "field header must read: nx ny x0 y0 dx dy");
  }
  if (nx < 1 || ny < 1 || nx != std::floor(nx) || ny != std::floor(ny) || nx * ny > 1e8) {
    throw Error(ErrorCode::ParseError, "field grid size must be positive integers");
  }
  const auto cols = static_cast<Eigen::Index>(nx);
  const auto rows = static_cast<Eigen::Index>(ny);
  f.eta_long.resize(rows, cols);
  f.eta_lat.resize(rows, cols);
  for (Eigen::Index j = 0; j < rows; ++j) {
    for (Eigen::Index i = 0; i < cols; ++i) {
      if (!(in >> f.eta_long(j, i) >> f.eta_lat(j, i))) {
        throw Error(
          ErrorCode::ParseError, "field cell " + std::to_string(j * cols + i) + " is missing or malformed");
      }
    }
  }
  std::string extra;
  if (in >> extra) {
    throw Error(ErrorCode::ParseError, "field has trailing data after the last cell");
  }
  f.validate();
  return f;
}

AccelField load_field(const std::filesystem::path & path)
{
  return parse_field(read_file(path));
}

std::string_view to_string(FixtureId id)
{
  switch (id) {
    case FixtureId::HeavyRainReality:
      return "heavy-rain-reality";
    case FixtureId::HeavyRainModel:
      return "heavy-rain-model";
    case FixtureId::FrictionRelation:
      return "friction-relation";
  }
  return "heavy-rain-reality";
}

FixtureId fixture_from_string(std::string_view s)
{
  for (FixtureId id : {FixtureId::HeavyRainReality, FixtureId::HeavyRainModel, FixtureId::FrictionRelation}) {
    if (to_string(id) == s) {
      return id;
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown fixture '" + std::string(s) + "'");
}

std::string_view fixture_text(FixtureId id)
{
  switch (id) {
    case FixtureId::HeavyRainReality:
      return embedded::kHeavyRainReality;
    case FixtureId::HeavyRainModel:
      return embedded::kHeavyRainModel;
    case FixtureId::FrictionRelation:
      return embedded::kFrictionRelation;
  }
  return embedded::kHeavyRainReality;
}

LoadedModel fixture(FixtureId id)
{
  return parse_model(fixture_text(id));
}

std::uint64_t fnv1a64(std::string_view bytes)
{
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string read_file(const std::filesystem::path & path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path & path, std::string_view text)
{
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !out.write(text.data(), static_cast<std::streamsize>(text.size()))) {
    throw Error(ErrorCode::IoError, "cannot write '" + path.string() + "'");
  }
}

}  // namespace critcausal
