#pragma once

#include <cstdint>
#include <vector>

#include "scimap/corpus.hpp"

namespace scimap::synthetic {

/// Citation corpus with planted journal blocks. Block members cite the
/// columns of their own block heavily (with a per-column profile shared
/// inside the block) and cite a few hub journals; hubs cite every block
/// evenly and link the blocks. All other cells carry small noise counts.
struct PlantedOptions {
  std::size_t blocks = 3;
  std::size_t block_size = 8;
  std::size_t hubs = 2;
  double block_weight = 100.0;  // mean count of a member -> own-block cell
  double hub_weight = 170.0;    // member -> hub cell
  double hub_row_weight = 30.0; // hub -> block cell
  Count noise_max = 3;          // other cells are uniform in [0, noise_max]
  double jitter = 0.75;         // own-block cells scaled by uniform [1 - jitter, 1 + jitter]
  std::uint64_t seed = 1;
};

struct PlantedCorpus {
  CitationMatrix matrix;
  /// Block of each journal; hubs get `blocks` (one past the last block).
  std::vector<std::size_t> block_of;
  std::vector<std::vector<std::string>> block_ids;
  std::vector<std::string> hub_ids;
};

PlantedCorpus planted_blocks(const PlantedOptions& options = {});

/// n journals, each cell nonzero with probability `fill`; about half of the
/// nonzero cells are singles, the rest heavier-tailed.
CitationMatrix random_sparse(std::size_t n, double fill, std::uint64_t seed);

/// Matrix with exactly n journals, `nonzero` stored cells and `singles` of
/// them equal to one (the rest equal to two).
CitationMatrix counts_fixture(std::size_t n, std::size_t nonzero, std::size_t singles);

/// Journal ids "J0001", "J0002", ... padded to the width of n.
std::vector<std::string> journal_ids(std::size_t n, const char* prefix = "J");

}  // namespace scimap::synthetic
