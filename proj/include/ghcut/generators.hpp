#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "ghcut/graph.hpp"

namespace ghcut {

enum class GraphKind { ErdosRenyi, Clique, PlantedCut };

GraphKind parse_graph_kind(std::string_view name);
std::string_view to_string(GraphKind kind);

struct GenerateParams {
  GraphKind kind = GraphKind::ErdosRenyi;
  Vertex n = 8;
  std::uint64_t seed = 1;
  Weight min_weight = 1;
  Weight max_weight = 10;
  /// Edge probability for ErdosRenyi; defaults to min(1, 2 ln n / n) rounded
  /// up to at least 0.3 for tiny graphs.
  std::optional<double> edge_probability;
  /// Global min-cut value for PlantedCut.
  Weight planted_value = 3;
};

/// Random connected graph. ErdosRenyi draws each pair independently and then
/// links any leftover components with random-weight edges. PlantedCut splits
/// V into two halves joined by edges of total weight planted_value; each half
/// is a clique heavy enough that the split is the unique global minimum cut.
/// Deterministic for a fixed parameter set. Throws std::invalid_argument for
/// n < 2 or an empty weight range.
Graph generate(const GenerateParams& params);

}  // namespace ghcut
