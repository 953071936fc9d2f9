#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "scimap/correlate.hpp"
#include "scimap/corpus.hpp"
#include "scimap/graph.hpp"

namespace scimap::pajek {

/// `*Vertices n`, one `i "label"` line per journal (1-based), then `*Arcs`
/// with `citing cited count` for every stored cell.
void write_citation_network(std::ostream& out, const CitationMatrix& matrix);

/// `*Vertices n` then `*Edges` with `i j r` for every threshold-graph edge,
/// i < j, weight the correlation.
void write_threshold_graph(std::ostream& out, const ThresholdGraph& graph,
                           const CorrelationMatrix& corr);

struct Line {
  std::size_t from;  // 1-based, as in the file
  std::size_t to;
  double weight;
};

struct Network {
  std::vector<std::string> labels;
  std::vector<Line> arcs;
  std::vector<Line> edges;
};

/// Reads the subset of the format written above. `%` comment lines are
/// skipped; section keywords are case-insensitive.
Network read(std::istream& in);

}  // namespace scimap::pajek
