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
#include "critcausal/io.hpp"

#include <gtest/gtest.h>

namespace critcausal
{
namespace
{

CausalRelation simple()
{
  return load_model(CRITCAUSAL_TEST_DATA "/simple_relation.json").relation;
}

bool has_clause(const std::vector<Violation> & v, const std::string & clause)
{
  return std::any_of(v.begin(), v.end(), [&](const Violation & x) { return x.clause == clause; });
}

TEST(Context, FixturesAreValidRelations)
{
  EXPECT_TRUE(validate_causal_relation(fixture(FixtureId::FrictionRelation).relation).empty());
  EXPECT_TRUE(validate_causal_relation(fixture(FixtureId::HeavyRainReality).relation).empty());
  EXPECT_TRUE(validate_causal_relation(simple()).empty());
}

TEST(Context, MetricWithOutgoingEdge)
{
  auto cr = simple();
  auto edges = std::vector<EdgeDecl>{};
  for (auto [a, b] : cr.structure.directed_edges()) {
    edges.emplace_back(cr.structure.name(a), cr.structure.name(b));
  }
  edges.emplace_back("phi", "w5");
  edges.erase(std::find(edges.begin(), edges.end(), EdgeDecl{"w5", "phi"}));
  cr.structure = CausalStructure::build(cr.structure.node_decls(), edges);
  const auto v = validate_causal_relation(cr);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].clause, "(ii)");
}

TEST(Context, PhenomenonChecks)
{
  auto cr = simple();
  cr.phenomenon.cp_label = "maybe";
  EXPECT_TRUE(has_clause(validate_causal_relation(cr), "(i)"));
  cr.phenomenon = {"missing", "CP"};
  EXPECT_TRUE(has_clause(validate_causal_relation(cr), "(i)"));
}

TEST(Context, UnitsAndRangesRequired)
{
  auto cr = simple();
  cr.specs[0].unit.clear();
  EXPECT_TRUE(has_clause(validate_causal_relation(cr), "(iv)"));
}

TEST(Context, MalformedContext)
{
  auto cr = simple();
  cr.context.statements.push_back({7, "a", StatementKind::Existence, std::nullopt});
  cr.context.statements.push_back({2, "ghost", StatementKind::Absence, std::nullopt});
  const auto v = validate_causal_relation(cr);
  EXPECT_GE(v.size(), 2u);
  EXPECT_TRUE(has_clause(v, "(v)"));
}

TEST(Context, RecordSatisfiesConstraint)
{
  Record r;
  r.individuals = {"a", "b"};
  r.properties["a.p2"] = {3.0, "m"};
  r.properties["b.p2"] = {5.0, "m"};
  EXPECT_TRUE(validate_record(simple(), r).empty());
}

TEST(Context, RecordViolations)
{
  Record r;
  r.individuals = {"a", "b", "c"};
  r.properties["a.p2"] = {6.0, "m"};
  r.properties["b.p2"] = {5.0, "m"};
  const auto v = validate_record(simple(), r);
  ASSERT_EQ(v.size(), 2u);
  EXPECT_EQ(v[0].clause, "absence");
  EXPECT_EQ(v[1].clause, "constraint");
}

TEST(Context, UnitMismatchAndVacuousConstraint)
{
  Record r;
  r.individuals = {"a", "b"};
  r.properties["a.p2"] = {3.0, "m"};
  r.properties["b.p2"] = {5.0, "s"};
  const auto v = validate_record(simple(), r);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].clause, "unit");
  EXPECT_EQ(v[0].message.rfind("UnitMismatch", 0), 0u);

  Record only_b;
  only_b.individuals = {"b"};
  const auto missing = validate_record(simple(), only_b);
  ASSERT_EQ(missing.size(), 1u);
  EXPECT_EQ(missing[0].clause, "existence");
}

TEST(Context, FrictionRecord)
{
  const auto cr = fixture(FixtureId::FrictionRelation).relation;
  Record r;
  r.individuals = {"ego", "environment", "road_network"};
  r.properties["road_network.layout"] = {std::string("curved"), ""};
  EXPECT_TRUE(validate_record(cr, r).empty());
  r.properties["road_network.layout"] = {std::string("straight"), ""};
  EXPECT_TRUE(has_clause(validate_record(cr, r), "constraint"));
}

TEST(Context, ComparisonParsing)
{
  EXPECT_EQ(comparison_from_string("≤"), Comparison::LessEqual);
  EXPECT_EQ(comparison_from_string("<="), Comparison::LessEqual);
  EXPECT_EQ(to_string(comparison_from_string("=")), "==");
  EXPECT_THROW(comparison_from_string("~"), Error);
}

}  // namespace
}  // namespace critcausal
