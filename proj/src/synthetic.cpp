#include "scimap/synthetic.hpp"

#include <cmath>
#include <map>
#include <random>

#include <fmt/format.h>

#include "scimap/error.hpp"

namespace scimap::synthetic {

namespace {

using CellMap = std::map<std::pair<std::size_t, std::size_t>, Count>;

JournalRegistry registry_from(const std::vector<std::string>& ids) {
  JournalRegistry reg;
  for (const auto& id : ids) reg.add({id, id, false});
  return reg;
}

// Engine-independent uniform draws: std distributions are not specified
// bit-for-bit across standard libraries.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

Count below(std::mt19937_64& rng, Count bound) { return bound ? rng() % bound : 0; }

}  // namespace

std::vector<std::string> journal_ids(std::size_t n, const char* prefix) {
  const auto width = std::to_string(std::max<std::size_t>(n, 1)).size();
  std::vector<std::string> ids;
  ids.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) ids.push_back(fmt::format("{}{:0{}}", prefix, i, width));
  return ids;
}

PlantedCorpus planted_blocks(const PlantedOptions& o) {
  if (o.blocks == 0 || o.block_size < 2) throw Error("planted corpus needs blocks of >= 2");
  std::mt19937_64 rng(o.seed);
  const std::size_t members = o.blocks * o.block_size;
  const std::size_t n = members + o.hubs;

  PlantedCorpus out;
  std::vector<std::string> ids;
  out.block_ids.resize(o.blocks);
  for (std::size_t b = 0; b < o.blocks; ++b)
    for (std::size_t m = 0; m < o.block_size; ++m) {
      ids.push_back(fmt::format("B{}-{:02}", b + 1, m + 1));
      out.block_ids[b].push_back(ids.back());
      out.block_of.push_back(b);
    }
  for (std::size_t h = 0; h < o.hubs; ++h) {
    ids.push_back(fmt::format("HUB-{}", h + 1));
    out.hub_ids.push_back(ids.back());
    out.block_of.push_back(o.blocks);
  }

  // Per-column profile shared by the citing members of the column's block.
  std::vector<double> profile(n, 1.0);
  for (std::size_t j = 0; j < members; ++j) profile[j] = 0.6 + 0.8 * unit(rng);

  CellMap cells;
  for (std::size_t i = 0; i < n; ++i) {
    const bool hub_row = i >= members;
    const double size = 0.8 + 0.4 * unit(rng);
    for (std::size_t j = 0; j < n; ++j) {
      const bool hub_col = j >= members;
      double mean = 0.0;
      double jitter = 0.1;
      if (!hub_row && !hub_col && out.block_of[i] == out.block_of[j]) {
        mean = o.block_weight * profile[j];
        jitter = o.jitter;
      } else if (!hub_row && hub_col) {
        mean = o.hub_weight;
      } else if (hub_row && !hub_col) {
        mean = o.hub_row_weight;
      }
      Count c = below(rng, o.noise_max + 1);
      if (mean > 0.0)
        c += static_cast<Count>(
            std::llround(mean * size * (1.0 - jitter + 2.0 * jitter * unit(rng))));
      if (c > 0) cells[{i, j}] = c;
    }
  }
  out.matrix = CitationMatrix::from_cells(registry_from(ids), cells);
  return out;
}

CitationMatrix random_sparse(std::size_t n, double fill, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  CellMap cells;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (unit(rng) >= fill) continue;
      Count c = 1;
      if (unit(rng) < 0.5) {
        // Pareto-like tail for the non-single cells.
        c = 2 + static_cast<Count>(std::floor(std::pow(1.0 - unit(rng), -1.2) - 1.0));
        c = std::min<Count>(c, 5000);
      }
      cells[{i, j}] = c;
    }
  return CitationMatrix::from_cells(registry_from(journal_ids(n)), cells);
}

CitationMatrix counts_fixture(std::size_t n, std::size_t nonzero, std::size_t singles) {
  if (nonzero > n * n || singles > nonzero)
    throw Error("counts fixture: need singles <= nonzero <= n*n");
  CellMap cells;
  for (std::size_t k = 0; k < nonzero; ++k) cells[{k / n, k % n}] = k < singles ? 1 : 2;
  return CitationMatrix::from_cells(registry_from(journal_ids(n)), cells);
}

}  // namespace scimap::synthetic
