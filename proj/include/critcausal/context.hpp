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

#ifndef CRITCAUSAL__CONTEXT_HPP_
#define CRITCAUSAL__CONTEXT_HPP_

#include "critcausal/causal_engine.hpp"
#include "critcausal/discrete_model.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace critcausal
{

enum class StatementKind { Existence, Absence, Constraint };
enum class Comparison { Less, LessEqual, Equal, GreaterEqual, Greater, NotEqual };

std::string_view to_string(StatementKind k);
std::string_view to_string(Comparison c);
/// Throws ParseError.
StatementKind statement_kind_from_string(std::string_view s);
/// Accepts <, <=, ==, =, >=, >, != and their unicode forms. Throws ParseError.
Comparison comparison_from_string(std::string_view s);

struct Literal
{
  std::variant<double, std::string> value;
  std::string unit;
};

struct PropertyRef
{
  std::string individual;
  std::string property;
};

using Operand = std::variant<Literal, PropertyRef>;

/// subject.property <op> rhs
struct Expression
{
  std::string property;
  Comparison op = Comparison::Equal;
  Operand rhs;
};

struct ContextStatement
{
  /// Layer of the six-layer scenario model, 1 to 6.
  int layer = 1;
  std::string subject;
  StatementKind kind = StatementKind::Existence;
  /// Set for constraints only.
  std::optional<Expression> expression;
};

struct Individual
{
  std::string name;
  std::string cls;
  std::vector<std::string> properties;
};

struct Context
{
  std::vector<Individual> individuals;
  std::vector<ContextStatement> statements;

  const Individual * find(std::string_view name) const;
};

struct CausalRelation
{
  CausalStructure structure;
  std::vector<VariableSpec> specs;
  Context context;
  PhenomenonBinding phenomenon;
  std::string metric;
};

struct Violation
{
  /// "(i)" to "(v)" for relation checks; existence, absence, constraint or
  /// unit for record checks.
  std::string clause;
  std::string message;

  bool operator==(const Violation & other) const = default;
};

/// Empty iff the relation is well formed: binary phenomenon variable with a
/// valid CP label (i), metric sink with nonnegative codes (ii), range and
/// unit on every variable (iv), and a context referring only to declared
/// individuals and properties (v).
std::vector<Violation> validate_causal_relation(const CausalRelation & cr);

struct RecordValue
{
  std::variant<double, std::string> value;
  std::string unit;
};

/// Observed scenario: present individuals and "individual.property" values.
struct Record
{
  std::set<std::string> individuals;
  std::map<std::string, RecordValue> properties;

  bool present(const std::string & individual) const;
};

/// Statements of the context violated by the record. Constraints on absent
/// individuals hold vacuously.
std::vector<Violation> validate_record(const CausalRelation & cr, const Record & record);

}  // namespace critcausal

#endif  // CRITCAUSAL__CONTEXT_HPP_
