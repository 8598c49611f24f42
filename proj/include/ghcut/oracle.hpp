#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "ghcut/graph.hpp"
#include "ghcut/steiner_tree.hpp"

namespace ghcut {

// Exhaustive ground truth by enumerating every vertex bipartition. Kept
// deliberately naive; the only concession to speed is that the enumeration
// can be split across OpenMP threads, with a serial path kept alongside as
// the reference for that kernel.

constexpr Vertex kOracleMaxVertices = 16;
constexpr Vertex kIsolatingOracleMaxVertices = 14;

class SizeGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Exec { Serial, Parallel };

/// Optimal value and every cut attaining it, ordered by membership bitmask.
/// Witness sides contain the sink-side terminal(s). The value is +infinity
/// when no cut satisfies the constraints.
struct OracleAnswer {
  ExtWeight value;
  std::vector<Cut> witnesses;
};

/// lambda(s, t): minimum over all A with t in A, s not in A.
OracleAnswer brute_lambda(const Graph& g, Vertex s, Vertex t, Exec exec = Exec::Parallel);

/// lambda_{T,k}(s, t): as brute_lambda, restricted to cuts crossing at most
/// k edges of `tree`.
OracleAnswer brute_lambda_tk(const Graph& g, const SteinerTree& tree, Vertex s, Vertex t, int k,
                             Exec exec = Exec::Parallel);

/// eta_{T,k}(s, t): as brute_lambda_tk, additionally putting s's tree
/// neighbour p on t's side. Requires s to be a leaf of `tree`.
OracleAnswer brute_eta_tk(const Graph& g, const SteinerTree& tree, Vertex s, Vertex t, int k,
                          Exec exec = Exec::Parallel);

struct IsolatingAnswer {
  OracleAnswer answer;
  /// Intersection of all optimal sides, itself optimal.
  VertexSet minimal_side;
};

/// Per group: minimum delta(S) over S containing the group and avoiding all
/// other groups.
std::vector<IsolatingAnswer> brute_isolating(const Graph& g, std::span<const VertexSet> groups,
                                             Exec exec = Exec::Parallel);

/// lambda(U): minimum over all cuts with terminals on both sides. Witness
/// sides avoid the smallest terminal.
OracleAnswer brute_steiner_mincut(const Graph& g, std::span<const Vertex> terminals, Exec exec = Exec::Parallel);

}  // namespace ghcut
