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

#include "oracle.hpp"

#include <cmath>

namespace critcausal::oracle
{

CausalStructure random_dag(std::mt19937_64 & rng, std::size_t nodes, double edge_probability)
{
  std::bernoulli_distribution edge(edge_probability);
  std::vector<NodeDecl> decls;
  std::vector<EdgeDecl> edges;
  for (std::size_t i = 0; i < nodes; ++i) {
    decls.push_back({"n" + std::to_string(i), false});
    for (std::size_t j = 0; j < i; ++j) {
      if (edge(rng)) {
        edges.emplace_back("n" + std::to_string(j), "n" + std::to_string(i));
      }
    }
  }
  return CausalStructure::build(decls, edges);
}

DiscreteModel random_binary_model(std::mt19937_64 & rng, const CausalStructure & s)
{
  std::uniform_real_distribution<double> u(0.05, 0.95);
  std::vector<VariableSpec> specs;
  std::vector<Cpd> cpds;
  for (NodeIndex i = 0; i < s.size(); ++i) {
    specs.push_back(binary_spec(s.name(i)));
    std::vector<std::string> parents;
    for (NodeIndex p : s.parents(i)) {
      parents.push_back(s.name(p));
    }
    Eigen::MatrixXd table(1 << parents.size(), 2);
    for (Eigen::Index r = 0; r < table.rows(); ++r) {
      table(r, 0) = u(rng);
      table(r, 1) = 1.0 - table(r, 0);
    }
    cpds.emplace_back(s.name(i), parents, table);
  }
  return DiscreteModel::build(s, specs, cpds);
}

namespace
{

std::vector<std::size_t> strides(const DiscreteModel & m)
{
  const std::size_t n = m.structure().size();
  std::vector<std::size_t> out(n, 1);
  for (std::size_t i = n; i-- > 1;) {
    out[i - 1] = out[i] * m.spec(i).cardinality();
  }
  return out;
}

std::size_t joint_size(const DiscreteModel & m)
{
  std::size_t total = 1;
  for (NodeIndex i = 0; i < m.structure().size(); ++i) {
    total *= m.spec(i).cardinality();
  }
  return total;
}

}  // namespace

std::size_t category_at(const DiscreteModel & m, std::size_t pos, NodeIndex i)
{
  return (pos / strides(m)[i]) % m.spec(i).cardinality();
}

Eigen::VectorXd full_joint(const DiscreteModel & m, const std::map<NodeIndex, std::size_t> & clamped)
{
  const auto & s = m.structure();
  const std::size_t total = joint_size(m);
  const auto st = strides(m);
  Eigen::VectorXd joint(static_cast<Eigen::Index>(total));
  for (std::size_t pos = 0; pos < total; ++pos) {
    double p = 1.0;
    for (NodeIndex i = 0; i < s.size() && p > 0.0; ++i) {
      const std::size_t v = (pos / st[i]) % m.spec(i).cardinality();
      if (auto it = clamped.find(i); it != clamped.end()) {
        p *= it->second == v ? 1.0 : 0.0;
        continue;
      }
      const Cpd & cpd = m.cpd(i);
      std::size_t row = 0;
      for (const auto & parent : cpd.parents()) {
        const NodeIndex pi = s.index(parent);
        row = row * m.spec(pi).cardinality() + (pos / st[pi]) % m.spec(pi).cardinality();
      }
      p *= cpd.table()(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(v));
    }
    joint[static_cast<Eigen::Index>(pos)] = p;
  }
  return joint;
}

Eigen::VectorXd surgered_marginal(
  const DiscreteModel & m, const std::map<NodeIndex, std::size_t> & clamped, NodeIndex target)
{
  const Eigen::VectorXd joint = full_joint(m, clamped);
  Eigen::VectorXd out = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(m.spec(target).cardinality()));
  for (Eigen::Index pos = 0; pos < joint.size(); ++pos) {
    out[static_cast<Eigen::Index>(category_at(m, static_cast<std::size_t>(pos), target))] += joint[pos];
  }
  return out;
}

bool conditionally_independent(
  const DiscreteModel & m, const Eigen::VectorXd & joint, const std::vector<NodeIndex> & x,
  const std::vector<NodeIndex> & y, const std::vector<NodeIndex> & z, double tol)
{
  auto key = [&](std::size_t pos, const std::vector<NodeIndex> & nodes) {
    std::size_t k = 0;
    for (NodeIndex i : nodes) {
      k = k * m.spec(i).cardinality() + category_at(m, pos, i);
    }
    return k;
  };
  std::map<std::size_t, double> pz;
  std::map<std::pair<std::size_t, std::size_t>, double> pxz, pyz;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, double> pxyz;
  for (Eigen::Index pos = 0; pos < joint.size(); ++pos) {
    const auto u = static_cast<std::size_t>(pos);
    const std::size_t kx = key(u, x), ky = key(u, y), kz = key(u, z);
    pz[kz] += joint[pos];
    pxz[{kx, kz}] += joint[pos];
    pyz[{ky, kz}] += joint[pos];
    pxyz[{kx, ky, kz}] += joint[pos];
  }
  for (const auto & [k, p] : pxyz) {
    const auto & [kx, ky, kz] = k;
    const double z_mass = pz[kz];
    if (z_mass <= 0.0) {
      continue;
    }
    const double lhs = p / z_mass;
    const double rhs = (pxz[{kx, kz}] / z_mass) * (pyz[{ky, kz}] / z_mass);
    if (std::abs(lhs - rhs) > tol) {
      return false;
    }
  }
  return true;
}

}  // namespace critcausal::oracle
