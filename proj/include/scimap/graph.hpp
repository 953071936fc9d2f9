#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "scimap/correlate.hpp"

namespace scimap {

using Adjacency = std::vector<std::vector<std::size_t>>;

/// Undirected graph joining valid journals whose correlation is >= threshold.
struct ThresholdGraph {
  JournalRegistry journals;
  double threshold = 0.0;
  Adjacency adjacency;  // sorted neighbor lists, no self-loops

  std::size_t edge_count() const;
  /// Edges as (i, j) with i < j, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
};

ThresholdGraph threshold_graph(const CorrelationMatrix& corr, double r_min);

/// Blocks (maximal bi-connected vertex sets, bridges included as pairs) and
/// cut vertices of a simple undirected graph. Blocks and cut vertices come
/// back as sorted index lists; blocks are ordered by their sorted contents.
struct BlockDecomposition {
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<std::size_t> cut_vertices;
};

/// Depth-first lowpoint decomposition (iterative, so deep graphs are fine).
BlockDecomposition block_decomposition(const Adjacency& adjacency);

struct ComponentSet {
  double threshold = 0.0;
  std::size_t min_size = 3;
  /// Member ids sorted; components by descending size, then by member ids.
  std::vector<std::vector<std::string>> components;
  /// Cut vertices of the whole threshold graph, sorted by id.
  std::vector<std::string> articulation_points;
  /// Journals in at least one reported component.
  std::size_t coverage = 0;
};

ComponentSet biconnected_components(const ThresholdGraph& graph, std::size_t min_size = 3);

struct SweepOptions {
  double start = 0.2;
  double step = 0.1;
  double stop = 0.9;
  std::size_t min_size = 3;
  /// Worker threads over thresholds; 0 picks the hardware concurrency.
  unsigned threads = 0;
};

struct SweepReport {
  std::vector<ComponentSet> levels;
};

/// Thresholds start, start + step, ... up to stop (inclusive), each rounded to
/// ten decimals so that 0.2 + 6 * 0.1 lands on 0.8.
std::vector<double> sweep_thresholds(double start, double step, double stop);

SweepReport threshold_sweep(const CorrelationMatrix& corr, const SweepOptions& options = {});

/// "r >= 0.8: 62 journals, 17 components" per level.
void write_sweep_summary(std::ostream& out, const SweepReport& report);
/// CSV `threshold,components,journals_covered`.
void write_sweep_summary_csv(std::ostream& out, const SweepReport& report);
/// CSV `threshold,component_rank,journal_id` (rank is 1-based).
void write_components_csv(std::ostream& out, const std::vector<ComponentSet>& levels);

}  // namespace scimap
