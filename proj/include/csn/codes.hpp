#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "csn/field.hpp"

namespace csn {

// Minimum-storage code for five nodes: clusters {1,2} and {4,5}, separate
// node 3, k = 3, alpha = 2, M = 6. Node i stores (x_i, y_i) where
// (x_1..x_5) = (x_1,x_2,x_3)[I|A] and (y_1..y_5) = (y_1,y_2,y_3)[I|B].
inline constexpr int kCodeNodes = 5;
inline constexpr int kSeparateNode = 3;

// Partner within the cluster, 0 for the separate node.
int cluster_partner(int node);

// One downloaded symbol c1 * x_node + c2 * y_node.
struct HelperDownload {
  int node = 0;
  FieldElement c1 = 0;
  FieldElement c2 = 0;

  friend bool operator==(const HelperDownload&, const HelperDownload&) = default;
};

// Repair of one failed node: the partner's two raw symbols (cluster nodes
// only) followed by one combination per helper. decode is 2 x (received
// symbols) and maps the received vector to (x_failed, y_failed).
struct RepairPlan {
  int failed = 0;
  int partner = 0;
  std::vector<HelperDownload> downloads;
  Matrix decode;

  int symbols_downloaded() const { return (partner != 0 ? 2 : 0) + static_cast<int>(downloads.size()); }

  friend bool operator==(const RepairPlan&, const RepairPlan&) = default;
};

struct CodeInstance {
  std::uint32_t q = 13;
  Matrix A;  // 3 x 2
  Matrix B;  // 3 x 2
  std::array<RepairPlan, kCodeNodes> plans;  // plans[i - 1] repairs node i

  const RepairPlan& plan(int node) const { return plans.at(static_cast<std::size_t>(node - 1)); }

  friend bool operator==(const CodeInstance&, const CodeInstance&) = default;
};

struct NodeContents {
  int id = 0;
  FieldElement x = 0;
  FieldElement y = 0;

  friend bool operator==(const NodeContents&, const NodeContents&) = default;
};

// (x_1, x_2, x_3, y_1, y_2, y_3)
using Message = std::array<FieldElement, 6>;

std::array<NodeContents, kCodeNodes> encode(const Message& message, const CodeInstance& inst);

// Reconstructs the message from exactly three distinct nodes; throws
// SingularSystem when they do not determine it.
Message data_collect(const std::vector<NodeContents>& nodes, const CodeInstance& inst);

// Symbols the plan for `failed` reads from the survivors, in decode order.
std::vector<FieldElement> repair_downloads(int failed, const CodeInstance& inst,
                                           const std::vector<NodeContents>& surviving);

// Throws AlignmentFailure when the plan cannot recover the node.
NodeContents repair(int failed, const CodeInstance& inst, const std::vector<NodeContents>& surviving);

int repair_bandwidth(int failed, const CodeInstance& inst);

// Both rank-one alignment conditions and the rank-two recovery condition for
// the separate node's downloads.
bool check_rank_conditions(const CodeInstance& inst);

// Every 3x3 minor of [I|M] is invertible.
bool is_mds(const PrimeField& f, const Matrix& M);

// Finds a decode matrix for the given downloads, or throws AlignmentFailure.
Matrix solve_decode(const CodeInstance& inst, int failed, int partner, const std::vector<HelperDownload>& downloads);

// Empty when the instance is fully valid, otherwise the first problem found.
std::string validation_error(const CodeInstance& inst);

struct SearchStats {
  std::uint64_t attempts = 0;
};

// Deterministic in (q, seed): attempt i draws from its own generator.
CodeInstance search_construction(std::uint32_t q = 13, std::uint64_t seed = 1, std::uint64_t attempt_budget = 100'000,
                                 SearchStats* stats = nullptr);

std::string to_text(const CodeInstance& inst);
CodeInstance from_text(const std::string& text);

}  // namespace csn
