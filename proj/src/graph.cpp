#include "rydnet/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "rydnet/csv.hpp"

namespace rydnet::router {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// -log of one gate's survival on an edge with per-gate loss p.
double cz_weight(double p_gate_loss) { return -std::log1p(-p_gate_loss); }

}  // namespace

int n_graded(const phys::PhysicsContext& ctx, double r_um) {
  const phys::AtomicModel& model = ctx.model();
  if (model.is_table()) {
    double best = 0.0;
    for (const phys::RydbergLevel& lvl : model.table()) {
      const double rm = ctx.max_radius(lvl.n);
      if (r_um <= rm * (1.0 + 1e-12)) return lvl.n;
      best = std::max(best, rm);
    }
    throw std::domain_error("no level supports radius " + fmt_g(r_um) +
                            " um (largest supported r_max " + fmt_g(best) + " um)");
  }
  // Power law: invert r_max(n) = (c6_ref (n/n_ref)^e / (k omega))^(1/6).
  const phys::PowerLawModel& pl = model.power_law_params();
  const double need_c6 =
      std::pow(r_um, 6.0) * ctx.noise().k_margin * ctx.drive().omega;
  const double ratio = need_c6 / std::abs(pl.c6_ref);
  const double n_real = pl.n_ref * std::pow(ratio, 1.0 / pl.c6_exponent);
  int n = std::max(model.min_n(), static_cast<int>(std::ceil(n_real - 1e-9)));
  while (ctx.max_radius(n) * (1.0 + 1e-12) < r_um) ++n;  // guard rounding
  return n;
}

int n_fixed(const phys::PhysicsContext& ctx, const std::vector<double>& radii_um) {
  if (radii_um.empty()) throw std::invalid_argument("fixed strategy needs a nonempty radius set");
  return n_graded(ctx, *std::max_element(radii_um.begin(), radii_um.end()));
}

const Edge* InteractionGraph::find_edge(int u, int v) const {
  const auto& row = adj[u];
  auto it = std::lower_bound(row.begin(), row.end(), v,
                             [](const Edge& e, int t) { return e.to < t; });
  return (it != row.end() && it->to == v) ? &*it : nullptr;
}

InteractionGraph build_graph(const phys::PhysicsContext& ctx, const LatticeSpec& lattice,
                             double r_max_um, LevelStrategy strategy) {
  if (lattice.width < 1 || lattice.height < 1)
    throw std::invalid_argument("lattice dimensions must be >= 1");
  const std::vector<Offset> offsets = neighbor_set(r_max_um, lattice.spacing_um);

  // Costs are per offset: the graph is translation invariant.
  struct OffsetCost {
    int n;
    double p;
    double w;
  };
  std::vector<OffsetCost> costs(offsets.size());
  const int fixed_n = strategy.kind == LevelStrategy::Kind::kFixed
                          ? n_fixed(ctx, radius_set(offsets))
                          : 0;
  for (std::size_t i = 0; i < offsets.size(); ++i) {
    const int n =
        strategy.kind == LevelStrategy::Kind::kFixed ? fixed_n : n_graded(ctx, offsets[i].r_um);
    const double p = ctx.gate_loss(n);
    costs[i] = OffsetCost{n, p, 3.0 * cz_weight(p)};
  }

  InteractionGraph g;
  g.lattice = lattice;
  g.r_max_um = r_max_um;
  g.strategy = strategy;
  g.adj.assign(lattice.sites(), {});
  for (int y = 0; y < lattice.height; ++y) {
    for (int x = 0; x < lattice.width; ++x) {
      const int u = lattice.index(x, y);
      for (std::size_t i = 0; i < offsets.size(); ++i) {
        const Offset& o = offsets[i];
        if (!lattice.in_bounds(x + o.dx, y + o.dy)) continue;
        g.adj[u].push_back(Edge{lattice.index(x + o.dx, y + o.dy), o.r_um, costs[i].n, costs[i].p,
                                costs[i].w});
      }
      std::sort(g.adj[u].begin(), g.adj[u].end(),
                [](const Edge& a, const Edge& b) { return a.to < b.to; });
    }
  }
  return g;
}

std::vector<int> RouteTree::path_to(int v) const {
  std::vector<int> path;
  for (int cur = v; cur != -1; cur = parent[cur]) path.push_back(cur);
  std::reverse(path.begin(), path.end());
  return path;
}

RouteTree dijkstra(const InteractionGraph& g, int src, int masked) {
  const int n = g.lattice.sites();
  if (src < 0 || src >= n) throw std::out_of_range("dijkstra source out of range");
  if (src == masked) throw std::invalid_argument("dijkstra source is masked");
  RouteTree t;
  t.dist.assign(n, kInf);
  t.parent.assign(n, -1);
  t.order.assign(n, std::numeric_limits<int>::max());
  t.dist[src] = 0.0;
  t.order[src] = 0;
  std::vector<char> visited(n, 0);

  auto lex_less = [&](int a, int b) {
    const std::vector<int> pa = t.path_to(a), pb = t.path_to(b);
    return std::lexicographical_compare(pa.begin(), pa.end(), pb.begin(), pb.end());
  };

  for (int round = 0; round < n; ++round) {
    int u = -1;
    for (int v = 0; v < n; ++v) {
      if (visited[v] || v == masked || t.dist[v] == kInf) continue;
      if (u == -1 || t.dist[v] < t.dist[u] ||
          (t.dist[v] == t.dist[u] && lex_less(v, u)))
        u = v;
    }
    if (u == -1) break;
    visited[u] = 1;
    const std::vector<int> base = t.path_to(u);
    for (const Edge& e : g.adj[u]) {
      const int v = e.to;
      if (visited[v] || v == masked) continue;
      const double nd = t.dist[u] + e.weight;
      bool better = nd < t.dist[v];
      if (!better && nd == t.dist[v]) {
        // Same weight: prefer the lexicographically smaller node sequence.
        std::vector<int> cand = base;
        cand.push_back(v);
        const std::vector<int> cur = t.path_to(v);
        better = std::lexicographical_compare(cand.begin(), cand.end(), cur.begin(), cur.end());
      }
      if (better) {
        t.dist[v] = nd;
        t.parent[v] = u;
        t.order[v] = t.order[u] + 1;
      }
    }
  }
  return t;
}

SynthesisPlan synthesize_cz(const InteractionGraph& g, int q1, int q2) {
  if (q1 == q2) throw std::invalid_argument("gate endpoints coincide");
  const RouteTree tree = dijkstra(g, q1, q2);

  int best_v = -1;
  double best_total = kInf;
  for (const Edge& e : g.adj[q2]) {
    const int v = e.to;
    if (tree.dist[v] == kInf) continue;
    const double total = tree.dist[v] + cz_weight(e.p_gate_loss);
    bool better = total < best_total;
    if (!better && best_v != -1 && total == best_total) {
      const std::vector<int> pa = tree.path_to(v), pb = tree.path_to(best_v);
      better = std::lexicographical_compare(pa.begin(), pa.end(), pb.begin(), pb.end());
    }
    if (better) {
      best_v = v;
      best_total = total;
    }
  }
  if (best_v == -1)
    throw std::runtime_error("no route between nodes " + std::to_string(q1) + " and " +
                             std::to_string(q2));

  SynthesisPlan plan;
  plan.route = tree.path_to(best_v);
  for (std::size_t i = 0; i + 1 < plan.route.size(); ++i) {
    const int u = plan.route[i], v = plan.route[i + 1];
    const Edge* e = g.find_edge(u, v);
    plan.swaps.push_back(PlanStep{u, v, e->r_um, e->n,
                                  -std::expm1(3.0 * std::log1p(-e->p_gate_loss)), e->weight});
  }
  const Edge* fin = g.find_edge(best_v, q2);
  plan.cz_from = best_v;
  plan.cz_to = q2;
  plan.cz_r_um = fin->r_um;
  plan.cz_n = fin->n;
  plan.cz_loss = fin->p_gate_loss;
  plan.hop_count = static_cast<int>(plan.swaps.size()) + 1;
  plan.total_weight = best_total;
  plan.p_loss_overall = -std::expm1(-best_total);
  return plan;
}

std::vector<double> loss_heatmap(const InteractionGraph& g, int src) {
  const RouteTree tree = dijkstra(g, src, -1);
  std::vector<double> grid(g.lattice.sites(), 0.0);
  for (int t = 0; t < g.lattice.sites(); ++t) {
    if (t == src) continue;
    double best = kInf;
    for (const Edge& e : g.adj[t]) {
      if (tree.dist[e.to] == kInf) continue;
      best = std::min(best, tree.dist[e.to] + cz_weight(e.p_gate_loss));
    }
    grid[t] = -std::expm1(-best);
  }
  return grid;
}

std::string graph_to_json(const InteractionGraph& g) {
  nlohmann::json nodes = nlohmann::json::array();
  for (int i = 0; i < g.lattice.sites(); ++i)
    nodes.push_back({{"id", i}, {"x", g.lattice.x_of(i)}, {"y", g.lattice.y_of(i)}});
  nlohmann::json edges = nlohmann::json::array();
  for (int u = 0; u < g.lattice.sites(); ++u) {
    for (const Edge& e : g.adj[u]) {
      if (e.to < u) continue;
      edges.push_back(
          {{"u", u}, {"v", e.to}, {"r_um", e.r_um}, {"n", e.n}, {"weight", e.weight}});
    }
  }
  return nlohmann::json{{"nodes", nodes}, {"edges", edges}}.dump(2);
}

}  // namespace rydnet::router
