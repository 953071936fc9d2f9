#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "scimap/corpus.hpp"
#include "scimap/matrix.hpp"

namespace scimap {

/// Which vectors are correlated: rows (what a journal cites) or columns (who
/// cites a journal).
enum class Axis { CitingRows, CitedColumns };

/// Whether self-citation cells take part in the patterns.
enum class DiagonalPolicy { Kept, Zeroed };

std::string_view to_string(Axis axis);
std::string_view to_string(DiagonalPolicy policy);
Axis parse_axis(std::string_view s);
DiagonalPolicy parse_diagonal_policy(std::string_view s);

/// Symmetric Pearson correlation matrix over a registry. Journals whose
/// pattern has zero variance are flagged invalid and carry r = 0 everywhere,
/// including their own diagonal.
struct CorrelationMatrix {
  JournalRegistry journals;
  Matrix r;
  std::vector<bool> valid;
  Axis axis = Axis::CitingRows;
  DiagonalPolicy diagonal = DiagonalPolicy::Kept;

  std::size_t n() const { return journals.size(); }
  std::vector<std::size_t> valid_indices() const;
  std::vector<std::size_t> invalid_indices() const;
  /// Restriction to the valid journals, preserving registry order.
  CorrelationMatrix restrict_to_valid() const;
};

struct CorrelationOptions {
  Axis axis = Axis::CitingRows;
  DiagonalPolicy diagonal = DiagonalPolicy::Kept;
  /// Worker threads; 0 picks the hardware concurrency. The result does not
  /// depend on this value.
  unsigned threads = 0;
};

CorrelationMatrix citing_correlation(const CitationMatrix& matrix,
                                     CorrelationOptions options = {});

/// Pearson r of two equally long vectors by the two-pass definition. Returns 0
/// when either vector has zero variance.
double pearson(std::span<const double> x, std::span<const double> y);

/// CSV `journal_a,journal_b,r` of the off-diagonal pairs with |r| > floor,
/// journal_a < journal_b by id, sorted by (journal_a, journal_b).
void write_correlation_pairs(std::ostream& out, const CorrelationMatrix& corr, double floor);

}  // namespace scimap
