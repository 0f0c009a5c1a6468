#pragma once

#include <string>
#include <vector>

#include "rydnet/context.hpp"
#include "rydnet/lattice.hpp"

namespace rydnet::router {

// Rydberg-level selection for a gate of radius r.
struct LevelStrategy {
  enum class Kind { kGraded, kFixed };
  Kind kind = Kind::kGraded;

  static LevelStrategy graded() { return {Kind::kGraded}; }
  static LevelStrategy fixed() { return {Kind::kFixed}; }
};

// Smallest level n whose max interaction radius covers r_um.
// Throws std::domain_error naming r and the largest supported radius if no
// level reaches it.
int n_graded(const phys::PhysicsContext& ctx, double r_um);

// Level used by the fixed strategy: the graded level of the largest radius
// in the set (every gate then runs on that level).
int n_fixed(const phys::PhysicsContext& ctx, const std::vector<double>& radii_um);

struct Edge {
  int to = 0;
  double r_um = 0.0;
  int n = 0;
  // Loss of one controlled-phase gate on this edge (field noise state-averaged,
  // scattering folded in).
  double p_gate_loss = 0.0;
  // Routing weight of one swap along this edge: -log(1 - p_swap) with
  // p_swap = 1 - (1 - p_gate_loss)^3 (a swap costs three gates).
  double weight = 0.0;
};

struct InteractionGraph {
  LatticeSpec lattice;
  double r_max_um = 0.0;
  LevelStrategy strategy;
  std::vector<std::vector<Edge>> adj;  // symmetric; adj[u] sorted by to-index

  const Edge* find_edge(int u, int v) const;
};

// Weighted interaction graph of the lattice under the given range cap and
// level strategy. Edge costs depend only on the offset radius, so the graph
// is translation invariant by construction.
InteractionGraph build_graph(const phys::PhysicsContext& ctx, const LatticeSpec& lattice,
                             double r_max_um, LevelStrategy strategy);

// One swap hop of a synthesis plan.
struct PlanStep {
  int from = 0;
  int to = 0;
  double r_um = 0.0;
  int n = 0;
  double p_swap = 0.0;
  double weight = 0.0;
};

// Long-range controlled-phase synthesis: swap the control's state along
// `route` (route.front() = q1's node, route.back() = the node that ends up
// adjacent to q2), then run one gate across the final edge.
struct SynthesisPlan {
  std::vector<int> route;
  std::vector<PlanStep> swaps;
  int cz_from = 0;
  int cz_to = 0;
  double cz_r_um = 0.0;
  int cz_n = 0;
  double cz_loss = 0.0;
  int hop_count = 0;       // swaps + the final gate
  double total_weight = 0.0;
  double p_loss_overall = 0.0;  // 1 - exp(-total_weight)
};

// Single-source shortest swap routes. Ties are broken toward the
// lexicographically smallest node-index sequence. `masked` (if >= 0) is
// excluded from the search entirely.
struct RouteTree {
  std::vector<double> dist;
  std::vector<int> parent;
  std::vector<int> order;  // hop count of the best path

  std::vector<int> path_to(int v) const;
};
RouteTree dijkstra(const InteractionGraph& g, int src, int masked = -1);

// Cheapest plan for a gate between distinct nodes q1 and q2. The swap route
// never passes through q2.
SynthesisPlan synthesize_cz(const InteractionGraph& g, int q1, int q2);

// Overall loss of the best plan from src to every other node (row-major grid;
// the source cell reads 0).
std::vector<double> loss_heatmap(const InteractionGraph& g, int src);

// Graph dump: {"nodes": [...], "edges": [{u, v, r_um, n, weight}, ...]},
// each undirected edge listed once with u < v.
std::string graph_to_json(const InteractionGraph& g);

}  // namespace rydnet::router
