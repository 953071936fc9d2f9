#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace scimap {

using Count = std::uint64_t;

struct JournalRecord {
  std::string id;
  std::string title;
  bool english_original = false;

  bool operator==(const JournalRecord&) const = default;
};

/// Ordered set of journals. Insertion order defines matrix indices.
class JournalRegistry {
 public:
  JournalRegistry() = default;
  explicit JournalRegistry(std::vector<JournalRecord> records);

  /// Appends a record and returns its index. Throws on duplicate id.
  std::size_t add(JournalRecord record);

  std::optional<std::size_t> find(const std::string& id) const;
  std::size_t index_of(const std::string& id) const;  // throws if absent

  std::size_t size() const { return records_.size(); }
  bool empty() const { return records_.empty(); }
  const JournalRecord& operator[](std::size_t i) const { return records_[i]; }
  const std::string& id(std::size_t i) const { return records_[i].id; }
  std::span<const JournalRecord> records() const { return records_; }

  bool operator==(const JournalRegistry& other) const {
    return records_ == other.records_;
  }

 private:
  std::vector<JournalRecord> records_;
  std::unordered_map<std::string, std::size_t> index_;
};

struct Cell {
  std::size_t cited;
  Count count;

  bool operator==(const Cell&) const = default;
};

/// Sparse citing -> cited count matrix in compressed-row form. Zero cells are
/// never stored; the diagonal is stored like any other cell.
class CitationMatrix {
 public:
  CitationMatrix() = default;

  /// Builds from (citing, cited) -> count. Zero counts are dropped.
  static CitationMatrix from_cells(
      JournalRegistry journals,
      const std::map<std::pair<std::size_t, std::size_t>, Count>& cells);

  const JournalRegistry& journals() const { return journals_; }
  std::size_t n() const { return journals_.size(); }
  /// Number of stored (nonzero) cells.
  std::size_t nonzero() const { return cells_.size(); }
  /// Number of cells whose count is exactly one.
  std::size_t singles() const { return singles_; }

  std::span<const Cell> row(std::size_t citing) const {
    return {cells_.data() + offsets_[citing], offsets_[citing + 1] - offsets_[citing]};
  }
  Count count(std::size_t citing, std::size_t cited) const;

  /// Restriction to the given journal indices, in the given order.
  CitationMatrix submatrix(std::span<const std::size_t> members) const;

  bool operator==(const CitationMatrix& other) const {
    return journals_ == other.journals_ && offsets_ == other.offsets_ &&
           cells_ == other.cells_;
  }

 private:
  JournalRegistry journals_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Cell> cells_;
  std::size_t singles_ = 0;
};

struct DensityReport {
  std::uint64_t n = 0;
  std::uint64_t possible = 0;
  std::uint64_t nonzero = 0;
  std::uint64_t singles = 0;
  double density = 0.0;
  double corrected_density = 0.0;

  /// Percentages rounded half-up from the exact integer ratio.
  std::string density_percent(int decimals = 1) const;
  std::string corrected_percent(int decimals = 1) const;
};

struct Marginals {
  std::vector<Count> total_citing;  // row sums
  std::vector<Count> total_cited;   // column sums
  Count grand_total = 0;
};

JournalRegistry ingest_registry(std::istream& in);

struct EdgeIngestOptions {
  /// Unknown ids are appended to the registry instead of rejected.
  bool auto_register = false;
};

CitationMatrix ingest_edges(std::istream& in, JournalRegistry registry,
                            EdgeIngestOptions options = {});

DensityReport density(std::uint64_t n, std::uint64_t nonzero, std::uint64_t singles);
DensityReport density(const CitationMatrix& matrix);

Marginals marginals(const CitationMatrix& matrix);

/// Formats num/den as a percentage with `decimals` places, rounding half-up
/// in exact integer arithmetic.
std::string format_percent(std::uint64_t num, std::uint64_t den, int decimals);

void write_registry(std::ostream& out, const JournalRegistry& registry);
/// Edge CSV with rows sorted by (citing_id, cited_id).
void write_edges(std::ostream& out, const CitationMatrix& matrix);

}  // namespace scimap
