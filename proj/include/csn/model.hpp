#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "csn/error.hpp"
#include "csn/rational.hpp"

namespace csn {

// Node layout: L clusters of R nodes plus E separate nodes, any k of the
// n = L*R + E nodes reconstruct the file.
struct NodeParams {
  int n = 0;
  int k = 0;
  int L = 0;
  int R = 0;
  int E = 0;

  friend bool operator==(const NodeParams&, const NodeParams&) = default;
};

// Storage and repair parameters. A failed cluster node downloads beta_I from
// each of d_I intra-cluster helpers and beta_C from each of d_C cross-cluster
// helpers; a failed separate node downloads beta_C from each of d helpers.
struct RepairParams {
  Rational alpha;
  int d_I = 0;
  Rational beta_I;
  int d_C = 0;
  Rational beta_C;

  int d() const { return d_I + d_C; }
  Rational gamma_I() const { return Rational(d_I) * beta_I; }
  Rational gamma_C() const { return Rational(d_C) * beta_C; }
  Rational gamma_S() const { return Rational(d()) * beta_C; }

  friend bool operator==(const RepairParams&, const RepairParams&) = default;
};

// Unvalidated input, typically straight from a CLI or config file.
struct RawConfig {
  NodeParams nodes;
  RepairParams repair;
};

class SystemConfig {
 public:
  const NodeParams& nodes() const { return nodes_; }
  const RepairParams& repair() const { return repair_; }

  int n() const { return nodes_.n; }
  int k() const { return nodes_.k; }
  int L() const { return nodes_.L; }
  int R() const { return nodes_.R; }
  int E() const { return nodes_.E; }
  int d() const { return repair_.d(); }
  const Rational& alpha() const { return repair_.alpha; }
  const Rational& beta_I() const { return repair_.beta_I; }
  const Rational& beta_C() const { return repair_.beta_C; }

  // Same system, different storage per node.
  SystemConfig with_alpha(const Rational& alpha) const;

  std::string describe() const;

  friend bool operator==(const SystemConfig&, const SystemConfig&) = default;
  friend SystemConfig validate_config(const RawConfig& raw);

 private:
  SystemConfig(NodeParams nodes, RepairParams repair) : nodes_(nodes), repair_(std::move(repair)) {}

  NodeParams nodes_;
  RepairParams repair_;
};

// Checks every parameter constraint and throws csn::Error naming the first
// violation.
SystemConfig validate_config(const RawConfig& raw);

// Builds a raw config with d_I = R - 1 and n = L*R + E filled in.
RawConfig make_raw(int k, int L, int R, int E, int d_C, Rational beta_I, Rational beta_C, Rational alpha);

void validate_nodes(const NodeParams& nodes);

// Selected node distribution: s0 separate nodes plus s[c] nodes from cluster
// c + 1, clusters relabelled so that counts are non-increasing.
struct SelectedNodeDistribution {
  int s0 = 0;
  std::vector<int> s;

  int total() const;
  std::string str() const;

  friend bool operator==(const SelectedNodeDistribution&, const SelectedNodeDistribution&) = default;
  friend auto operator<=>(const SelectedNodeDistribution&, const SelectedNodeDistribution&) = default;
};

// Repair sequence of the k selected nodes as cluster labels; 0 marks a
// separate node, 1..L are clusters.
struct ClusterOrder {
  std::vector<int> pi;

  int k() const { return static_cast<int>(pi.size()); }
  int operator[](std::size_t i) const { return pi[i]; }
  std::string str() const;

  friend bool operator==(const ClusterOrder&, const ClusterOrder&) = default;
  friend auto operator<=>(const ClusterOrder&, const ClusterOrder&) = default;
};

bool is_member(const NodeParams& nodes, const SelectedNodeDistribution& s);

// Distribution a cluster order was drawn from (label counts).
SelectedNodeDistribution distribution_of(const ClusterOrder& order, int L);

// All members of the distribution set, s0 descending then s descending.
std::vector<SelectedNodeDistribution> enumerate_distributions(const NodeParams& nodes);

// All distinct multiset permutations in ascending lexicographic order.
std::vector<ClusterOrder> enumerate_orders(const SelectedNodeDistribution& s);

// k! / (s0! * prod s[i]!). Throws std::overflow_error past 2^63.
std::uint64_t count_orders(const SelectedNodeDistribution& s);

}  // namespace csn
