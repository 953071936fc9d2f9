#include "scimap/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <thread>

#include <fmt/format.h>

#include "scimap/csv.hpp"
#include "scimap/error.hpp"

namespace scimap {

std::size_t ThresholdGraph::edge_count() const {
  std::size_t deg = 0;
  for (const auto& nb : adjacency) deg += nb.size();
  return deg / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> ThresholdGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < adjacency.size(); ++i)
    for (std::size_t j : adjacency[i])
      if (i < j) out.emplace_back(i, j);
  return out;
}

ThresholdGraph threshold_graph(const CorrelationMatrix& corr, double r_min) {
  if (!(r_min >= -1.0 && r_min <= 1.0))
    throw Error(fmt::format("threshold {} outside [-1, 1]", r_min));
  ThresholdGraph g;
  g.journals = corr.journals;
  g.threshold = r_min;
  const std::size_t n = corr.n();
  g.adjacency.assign(n, {});
  for (std::size_t i = 0; i < n; ++i) {
    if (!corr.valid[i]) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i && corr.valid[j] && corr.r(i, j) >= r_min) g.adjacency[i].push_back(j);
  }
  return g;
}

BlockDecomposition block_decomposition(const Adjacency& adj) {
  constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();
  const std::size_t n = adj.size();
  std::vector<std::size_t> disc(n, kUnseen), low(n, 0), parent(n, kUnseen);
  std::vector<std::size_t> vstack;
  std::vector<std::pair<std::size_t, std::size_t>> frames;  // (vertex, next neighbor slot)
  std::size_t clock = 0;

  BlockDecomposition out;
  for (std::size_t root = 0; root < n; ++root) {
    if (disc[root] != kUnseen) continue;
    disc[root] = low[root] = clock++;
    vstack.push_back(root);
    frames.emplace_back(root, 0);
    while (!frames.empty()) {
      auto& [u, slot] = frames.back();
      if (slot < adj[u].size()) {
        const std::size_t w = adj[u][slot++];
        if (disc[w] == kUnseen) {
          parent[w] = u;
          disc[w] = low[w] = clock++;
          vstack.push_back(w);
          frames.emplace_back(w, 0);
        } else if (w != parent[u]) {
          low[u] = std::min(low[u], disc[w]);
        }
        continue;
      }
      const std::size_t done = u;
      frames.pop_back();
      if (frames.empty()) break;
      const std::size_t p = frames.back().first;
      low[p] = std::min(low[p], low[done]);
      if (low[done] >= disc[p]) {
        // p separates the subtree of `done`: everything above it on the stack
        // plus p forms one block.
        std::vector<std::size_t> block;
        std::size_t x;
        do {
          x = vstack.back();
          vstack.pop_back();
          block.push_back(x);
        } while (x != done);
        block.push_back(p);
        std::sort(block.begin(), block.end());
        out.blocks.push_back(std::move(block));
      }
    }
    vstack.clear();
  }

  std::vector<std::size_t> membership(n, 0);
  for (const auto& b : out.blocks)
    for (std::size_t v : b) ++membership[v];
  for (std::size_t v = 0; v < n; ++v)
    if (membership[v] >= 2) out.cut_vertices.push_back(v);
  std::sort(out.blocks.begin(), out.blocks.end());
  return out;
}

ComponentSet biconnected_components(const ThresholdGraph& graph, std::size_t min_size) {
  const auto blocks = block_decomposition(graph.adjacency);
  ComponentSet set;
  set.threshold = graph.threshold;
  set.min_size = min_size;

  std::vector<bool> covered(graph.adjacency.size(), false);
  for (const auto& b : blocks.blocks) {
    if (b.size() < min_size) continue;
    std::vector<std::string> ids;
    for (std::size_t v : b) {
      ids.push_back(graph.journals.id(v));
      covered[v] = true;
    }
    std::sort(ids.begin(), ids.end());
    set.components.push_back(std::move(ids));
  }
  std::sort(set.components.begin(), set.components.end(),
            [](const auto& a, const auto& b) {
              if (a.size() != b.size()) return a.size() > b.size();
              return a < b;
            });
  for (std::size_t v : blocks.cut_vertices) set.articulation_points.push_back(graph.journals.id(v));
  std::sort(set.articulation_points.begin(), set.articulation_points.end());
  set.coverage = static_cast<std::size_t>(std::count(covered.begin(), covered.end(), true));
  return set;
}

std::vector<double> sweep_thresholds(double start, double step, double stop) {
  if (!(step > 0.0)) throw Error(fmt::format("sweep step must be positive, got {}", step));
  if (!(start <= stop)) throw Error(fmt::format("sweep start {} exceeds stop {}", start, stop));
  std::vector<double> out;
  for (std::size_t i = 0;; ++i) {
    const double t = std::round((start + static_cast<double>(i) * step) * 1e10) / 1e10;
    if (t > stop + 1e-10) break;
    out.push_back(t);
  }
  return out;
}

SweepReport threshold_sweep(const CorrelationMatrix& corr, const SweepOptions& options) {
  const auto thresholds = sweep_thresholds(options.start, options.step, options.stop);
  for (double t : thresholds)
    if (t < -1.0 || t > 1.0) throw Error(fmt::format("threshold {} outside [-1, 1]", t));

  SweepReport report;
  report.levels.resize(thresholds.size());
  auto work = [&](std::size_t worker, std::size_t workers) {
    for (std::size_t i = worker; i < thresholds.size(); i += workers)
      report.levels[i] =
          biconnected_components(threshold_graph(corr, thresholds[i]), options.min_size);
  };
  std::size_t workers = options.threads ? options.threads : std::thread::hardware_concurrency();
  workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(thresholds.size(), 1));
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
  }
  return report;
}

void write_sweep_summary(std::ostream& out, const SweepReport& report) {
  for (const auto& level : report.levels)
    out << fmt::format("r >= {}: {} journals, {} components\n", level.threshold, level.coverage,
                       level.components.size());
}

void write_sweep_summary_csv(std::ostream& out, const SweepReport& report) {
  out << "threshold,components,journals_covered\n";
  for (const auto& level : report.levels)
    out << fmt::format("{},{},{}\n", level.threshold, level.components.size(), level.coverage);
}

void write_components_csv(std::ostream& out, const std::vector<ComponentSet>& levels) {
  out << "threshold,component_rank,journal_id\n";
  for (const auto& level : levels)
    for (std::size_t c = 0; c < level.components.size(); ++c)
      for (const auto& id : level.components[c])
        out << fmt::format("{},{},", level.threshold, c + 1) << csv::quote(id) << '\n';
}

}  // namespace scimap
