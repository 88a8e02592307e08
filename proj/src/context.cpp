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

#include "critcausal/context.hpp"

#include "critcausal/error.hpp"

#include <algorithm>
#include <sstream>

namespace critcausal
{

std::string_view to_string(StatementKind k)
{
  switch (k) {
    case StatementKind::Existence:
      return "existence";
    case StatementKind::Absence:
      return "absence";
    case StatementKind::Constraint:
      return "constraint";
  }
  return "existence";
}

std::string_view to_string(Comparison c)
{
  switch (c) {
    case Comparison::Less:
      return "<";
    case Comparison::LessEqual:
      return "<=";
    case Comparison::Equal:
      return "==";
    case Comparison::GreaterEqual:
      return ">=";
    case Comparison::Greater:
      return ">";
    case Comparison::NotEqual:
      return "!=";
  }
  return "==";
}

StatementKind statement_kind_from_string(std::string_view s)
{
  for (StatementKind k : {StatementKind::Existence, StatementKind::Absence, StatementKind::Constraint}) {
    if (to_string(k) == s) {
      return k;
    }
  }
  throw Error(ErrorCode::ParseError, "unknown statement kind '" + std::string(s) + "'");
}

Comparison comparison_from_string(std::string_view s)
{
  static const std::map<std::string_view, Comparison> table{
    {"<", Comparison::Less},         {"<=", Comparison::LessEqual},   {"≤", Comparison::LessEqual},
    {"=", Comparison::Equal},        {"==", Comparison::Equal},       {">=", Comparison::GreaterEqual},
    {"≥", Comparison::GreaterEqual}, {">", Comparison::Greater}, {"!=", Comparison::NotEqual},
    {"≠", Comparison::NotEqual},
  };
  auto it = table.find(s);
  if (it == table.end()) {
    throw Error(ErrorCode::ParseError, "unknown comparison '" + std::string(s) + "'");
  }
  return it->second;
}

const Individual * Context::find(std::string_view name) const
{
  for (const auto & ind : individuals) {
    if (ind.name == name) {
      return &ind;
    }
  }
  return nullptr;
}

namespace
{

bool declares(const Context & ctx, const std::string & individual, const std::string & property)
{
  const Individual * ind = ctx.find(individual);
  return ind && std::find(ind->properties.begin(), ind->properties.end(), property) !=
                  ind->properties.end();
}

void check_context(const Context & ctx, std::vector<Violation> & out)
{
  std::set<std::string> names;
  for (const auto & ind : ctx.individuals) {
    if (ind.name.empty() || !names.insert(ind.name).second) {
      out.push_back({"(v)", "individual '" + ind.name + "' is unnamed or declared twice"});
    }
  }
  std::set<std::string> existing, absent;
  for (const auto & st : ctx.statements) {
    if (st.layer < 1 || st.layer > 6) {
      out.push_back(
        {"(v)", "statement on '" + st.subject + "' has layer " + std::to_string(st.layer) +
                  " outside 1..6"});
    }
    if (!ctx.find(st.subject)) {
      out.push_back({"(v)", "statement refers to undeclared individual '" + st.subject + "'"});
      continue;
    }
    if (st.kind == StatementKind::Existence) {
      existing.insert(st.subject);
    } else if (st.kind == StatementKind::Absence) {
      absent.insert(st.subject);
    }
    if (st.kind != StatementKind::Constraint) {
      if (st.expression) {
        out.push_back(
          {"(v)", std::string(to_string(st.kind)) + " statement on '" + st.subject +
                    "' carries an expression"});
      }
      continue;
    }
    if (!st.expression) {
      out.push_back({"(v)", "constraint on '" + st.subject + "' has no expression"});
      continue;
    }
    if (!declares(ctx, st.subject, st.expression->property)) {
      out.push_back(
        {"(v)", "constraint uses undeclared property '" + st.subject + "." +
                  st.expression->property + "'"});
    }
    if (const auto * ref = std::get_if<PropertyRef>(&st.expression->rhs)) {
      if (!declares(ctx, ref->individual, ref->property)) {
        out.push_back(
          {"(v)", "constraint uses undeclared property '" + ref->individual + "." +
                    ref->property + "'"});
      }
    }
  }
  for (const auto & name : existing) {
    if (absent.count(name)) {
      out.push_back({"(v)", "'" + name + "' is required both to exist and to be absent"});
    }
  }
}

std::string describe(const std::variant<double, std::string> & v)
{
  if (const double * d = std::get_if<double>(&v)) {
    std::ostringstream s;
    s.precision(12);
    s << *d;
    return s.str();
  }
  return "\"" + std::get<std::string>(v) + "\"";
}

template<typename T>
bool compare(const T & a, Comparison op, const T & b)
{
  switch (op) {
    case Comparison::Less:
      return a < b;
    case Comparison::LessEqual:
      return a <= b;
    case Comparison::Equal:
      return a == b;
    case Comparison::GreaterEqual:
      return a >= b;
    case Comparison::Greater:
      return a > b;
    case Comparison::NotEqual:
      return a != b;
  }
  return false;
}

}  // namespace

std::vector<Violation> validate_causal_relation(const CausalRelation & cr)
{
  std::vector<Violation> out;
  const CausalStructure & s = cr.structure;
  auto spec_of = [&](const std::string & name) -> const VariableSpec * {
    for (const auto & spec : cr.specs) {
      if (spec.name == name) {
        return &spec;
      }
    }
    return nullptr;
  };

  const auto x = s.find(cr.phenomenon.variable);
  const VariableSpec * x_spec = spec_of(cr.phenomenon.variable);
  if (!x || !x_spec) {
    out.push_back({"(i)", "phenomenon variable '" + cr.phenomenon.variable + "' is not a node"});
  } else {
    if (x_spec->cardinality() != 2) {
      out.push_back(
        {"(i)", "phenomenon variable '" + cr.phenomenon.variable + "' has " +
                  std::to_string(x_spec->cardinality()) + " categories, expected 2"});
    }
    if (!x_spec->find(cr.phenomenon.cp_label)) {
      out.push_back(
        {"(i)", "CP label '" + cr.phenomenon.cp_label + "' is not in the domain of '" +
                  cr.phenomenon.variable + "'"});
    }
  }

  const auto phi = s.find(cr.metric);
  const VariableSpec * phi_spec = spec_of(cr.metric);
  if (!phi || !phi_spec) {
    out.push_back({"(ii)", "metric '" + cr.metric + "' is not a node"});
  } else {
    for (NodeIndex c : s.children(*phi)) {
      out.push_back({"(ii)", "metric '" + cr.metric + "' has an outgoing edge to '" + s.name(c) + "'"});
    }
    if (std::any_of(phi_spec->codes.begin(), phi_spec->codes.end(), [](double c) { return c < 0.0; })) {
      out.push_back({"(ii)", "metric '" + cr.metric + "' has a negative code"});
    }
    if (x && *x == *phi) {
      out.push_back({"(ii)", "metric and phenomenon are the same node"});
    }
  }

  for (NodeIndex i = 0; i < s.size(); ++i) {
    const VariableSpec * spec = spec_of(s.name(i));
    if (!spec) {
      out.push_back({"(iv)", "variable '" + s.name(i) + "' has no specification"});
    } else if (spec->range.empty() || spec->unit.empty()) {
      out.push_back({"(iv)", "variable '" + s.name(i) + "' lacks a value range or unit"});
    }
  }

  check_context(cr.context, out);
  return out;
}

bool Record::present(const std::string & individual) const
{
  if (individuals.count(individual)) {
    return true;
  }
  const std::string prefix = individual + ".";
  auto it = properties.lower_bound(prefix);
  return it != properties.end() && it->first.compare(0, prefix.size(), prefix) == 0;
}

std::vector<Violation> validate_record(const CausalRelation & cr, const Record & record)
{
  std::vector<Violation> out;
  for (const auto & st : cr.context.statements) {
    switch (st.kind) {
      case StatementKind::Existence:
        if (!record.present(st.subject)) {
          out.push_back({"existence", "'" + st.subject + "' shall exist but is missing"});
        }
        continue;
      case StatementKind::Absence:
        if (record.present(st.subject)) {
          out.push_back({"absence", "'" + st.subject + "' shall be absent but is present"});
        }
        continue;
      case StatementKind::Constraint:
        break;
    }
    if (!st.expression || !record.present(st.subject)) {
      continue;
    }
    const Expression & e = *st.expression;
    const std::string lhs_key = st.subject + "." + e.property;
    auto lhs = record.properties.find(lhs_key);
    if (lhs == record.properties.end()) {
      out.push_back({"constraint", "'" + lhs_key + "' is constrained but not recorded"});
      continue;
    }
    std::string rhs_key;
    RecordValue rhs;
    if (const auto * ref = std::get_if<PropertyRef>(&e.rhs)) {
      if (!record.present(ref->individual)) {
        continue;
      }
      rhs_key = ref->individual + "." + ref->property;
      auto it = record.properties.find(rhs_key);
      if (it == record.properties.end()) {
        out.push_back({"constraint", "'" + rhs_key + "' is constrained but not recorded"});
        continue;
      }
      rhs = it->second;
    } else {
      const auto & lit = std::get<Literal>(e.rhs);
      rhs = {lit.value, lit.unit};
      rhs_key = describe(lit.value);
    }
    const std::string text = lhs_key + " " + std::string(to_string(e.op)) + " " + rhs_key;
    if (!lhs->second.unit.empty() && !rhs.unit.empty() && lhs->second.unit != rhs.unit) {
      out.push_back(
        {"unit", "UnitMismatch in " + text + ": '" + lhs->second.unit + "' vs '" + rhs.unit + "'"});
      continue;
    }
    const auto * ln = std::get_if<double>(&lhs->second.value);
    const auto * rn = std::get_if<double>(&rhs.value);
    bool holds = false;
    if (ln && rn) {
      holds = compare(*ln, e.op, *rn);
    } else if (!ln && !rn) {
      holds = compare(std::get<std::string>(lhs->second.value), e.op, std::get<std::string>(rhs.value));
    } else {
      out.push_back({"constraint", "cannot compare a number with text in " + text});
      continue;
    }
    if (!holds) {
      out.push_back(
        {"constraint", text + " does not hold (" + describe(lhs->second.value) + " vs " +
                         describe(rhs.value) + ")"});
    }
  }
  return out;
}

}  // namespace critcausal
