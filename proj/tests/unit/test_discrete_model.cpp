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

#include "critcausal/discrete_model.hpp"
#include "critcausal/error.hpp"
#include "critcausal/indicators.hpp"
#include "critcausal/io.hpp"

#include "../support/oracle.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <numeric>

namespace critcausal
{
namespace
{

DiscreteModel reality()
{
  return fixture(FixtureId::HeavyRainReality).model;
}

ErrorCode code_of(const std::function<void()> & f)
{
  try {
    f();
  } catch (const Error & e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidArgument;
}

TEST(DiscreteModel, JointProbabilityOfFullAssignment)
{
  const double p = joint_probability(
    reality(), {{"V1", "Summer"}, {"V2", "Slow"}, {"V3", "Oceanic"}, {"X", "CP"}, {"phi", "Short"}});
  EXPECT_NEAR(p, 0.0864, 1e-12);
}

TEST(DiscreteModel, MarginalMatchesBruteForce)
{
  const auto m = reality();
  const auto d = marginal(m, {"X"});
  EXPECT_NEAR(d.p[0], 0.67, 1e-12);
  const auto phi = marginal(m, {"phi"});
  EXPECT_NEAR(phi.p[0], 0.534, 1e-12);
  const auto cond = marginal(m, {"phi"}, {{"X", "CP"}});
  EXPECT_NEAR(cond.p.sum(), 1.0, 1e-12);
}

TEST(DiscreteModel, CpdValidation)
{
  const auto s = CausalStructure::build({{"a"}}, {});
  Eigen::MatrixXd bad(1, 2);
  bad << 0.5, 0.6;
  EXPECT_EQ(
    code_of([&] { DiscreteModel::build(s, {binary_spec("a")}, {Cpd("a", {}, bad)}); }), ErrorCode::InvalidCpd);
  Eigen::MatrixXd wrong_rows(2, 2);
  wrong_rows << 0.5, 0.5, 0.5, 0.5;
  EXPECT_EQ(
    code_of([&] { DiscreteModel::build(s, {binary_spec("a")}, {Cpd("a", {}, wrong_rows)}); }),
    ErrorCode::InvalidCpd);
  EXPECT_EQ(code_of([&] { binary_spec("a").category("2"); }), ErrorCode::UnknownCategory);
}

TEST(DiscreteModel, MissingCpdIsReported)
{
  const auto s = CausalStructure::build({{"a"}, {"b"}}, {{"a", "b"}});
  Eigen::MatrixXd t(1, 2);
  t << 0.3, 0.7;
  const auto m = DiscreteModel::build(s, {binary_spec("a"), binary_spec("b")}, {Cpd("a", {}, t)});
  EXPECT_FALSE(m.fully_instantiated());
  EXPECT_EQ(m.instantiated(), NodeSet{"a"});
  EXPECT_EQ(code_of([&] { marginal(m, {"b"}); }), ErrorCode::InsufficientInstantiation);
  EXPECT_EQ(code_of([&] { joint_probability(m, {{"a", "0"}, {"b", "0"}}); }), ErrorCode::NotFullyInstantiated);
  EXPECT_NEAR(marginal(m, {"a"}).p[1], 0.7, 1e-15);
}

TEST(DiscreteModel, StateSpaceLimit)
{
  const auto m = reality().with_state_space_limit(8);
  EXPECT_EQ(code_of([&] { marginal(m, {"phi"}); }), ErrorCode::StateSpaceTooLarge);
}

TEST(DiscreteModel, ZeroProbabilityCondition)
{
  const auto s = CausalStructure::build({{"a"}}, {});
  Eigen::MatrixXd t(1, 2);
  t << 1.0, 0.0;
  const auto m = DiscreteModel::build(s, {binary_spec("a")}, {Cpd("a", {}, t)});
  const auto b = CausalStructure::build({{"a"}, {"b"}}, {{"a", "b"}});
  Eigen::MatrixXd tb(2, 2);
  tb << 0.5, 0.5, 0.5, 0.5;
  const auto mb = DiscreteModel::build(b, {binary_spec("a"), binary_spec("b")}, {Cpd("a", {}, t), Cpd("b", {"a"}, tb)});
  EXPECT_EQ(code_of([&] { marginal(mb, {"b"}, {{"a", "1"}}); }), ErrorCode::ZeroProbabilityCondition);
}

TEST(DiscreteModel, SamplingIsSeededAndFollowsTheModel)
{
  const auto m = reality();
  const Dataset a = sample(m, 2000, 11);
  const Dataset b = sample(m, 2000, 11);
  EXPECT_EQ(a.records, b.records);
  EXPECT_NE(a.records, sample(m, 2000, 12).records);
  const auto col = *a.column("X");
  double cp = 0;
  for (const auto & r : a.records) {
    cp += r[col] == 0 ? 1.0 : 0.0;
  }
  EXPECT_NEAR(cp / 2000.0, 0.67, 0.04);
}

TEST(DiscreteModel, EstimationRecoversCpdsAndAce)
{
  const auto m = reality();
  const Dataset d = sample(m, 100000, 20240611);
  const auto est = estimate_cpds(m.structure(), m.specs(), d);
  EXPECT_TRUE(est.warnings.empty());
  ASSERT_TRUE(est.model.fully_instantiated());
  for (NodeIndex i = 0; i < m.structure().size(); ++i) {
    const auto & truth = m.cpd(i).table();
    const auto & fit = est.model.cpd(i).table();
    ASSERT_EQ(truth.rows(), fit.rows());
    for (Eigen::Index r = 0; r < truth.rows(); ++r) {
      EXPECT_LE(0.5 * (truth.row(r) - fit.row(r)).cwiseAbs().sum(), 0.02);
    }
  }
  const PhenomenonBinding cp{"X", "CP"};
  EXPECT_NEAR(ace(est.model, cp, "phi").value, 0.2, 0.02);
}

TEST(DiscreteModel, EstimationWarnsOnUnseenParentConfiguration)
{
  const auto m = reality();
  Dataset d;
  d.columns = m.specs();
  d.records = {{0, 0, 0, 0, 0}, {1, 1, 1, 1, 1}};
  const auto est = estimate_cpds(m.structure(), m.specs(), d);
  ASSERT_FALSE(est.warnings.empty());
  EXPECT_EQ(est.warnings.front().rfind("UnseenParentConfiguration", 0), 0u);
  EXPECT_FALSE(est.model.has_cpd(m.structure().index("X")));
  const auto smoothed = estimate_cpds(m.structure(), m.specs(), d, 1.0);
  EXPECT_TRUE(smoothed.warnings.empty());
  EXPECT_TRUE(smoothed.model.fully_instantiated());
  Dataset empty;
  empty.columns = m.specs();
  EXPECT_EQ(code_of([&] { estimate_cpds(m.structure(), m.specs(), empty); }), ErrorCode::EmptyDataset);
}

TEST(DiscreteModel, EvidenceAnswersObservationalQueries)
{
  const auto m = reality();
  const Dataset d = sample(m, 5000, 3);
  const auto s = m.structure();
  const auto partial = DiscreteModel::build(s, m.specs(), {}).with_evidence(d);
  const auto p = marginal(partial, {"phi"}, {{"X", "CP"}});
  const auto q = empirical(d, {"phi"}, {{"X", "CP"}});
  EXPECT_NEAR((p.p - q.p).norm(), 0.0, 1e-12);
}

TEST(DiscreteModel, PropertyEnumerationMatchesProductOfCpds)
{
  std::mt19937_64 rng(5);
  for (int g = 0; g < 30; ++g) {
    const auto s = oracle::random_dag(rng, 2 + g % 5, 0.5);
    const auto m = oracle::random_binary_model(rng, s);
    const Eigen::VectorXd joint = oracle::full_joint(m);
    std::vector<NodeIndex> all(s.size());
    std::iota(all.begin(), all.end(), NodeIndex{0});
    const auto d = enumerate(m, all, {});
    EXPECT_LT((d.p - joint).cwiseAbs().maxCoeff(), 1e-12);
  }
}

}  // namespace
}  // namespace critcausal
