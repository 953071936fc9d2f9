#include "scimap/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <numeric>
#include <ostream>

#include <fmt/format.h>

#include "scimap/csv.hpp"
#include "scimap/error.hpp"

namespace scimap {

namespace {

constexpr std::string_view kRegistryHeader = "id,title,english_original";
constexpr std::string_view kEdgeHeader = "citing_id,cited_id,count";

/// Yields data lines with their 1-based line numbers, skipping blank lines and
/// '#' comments. The first data line must equal `header`.
class LineReader {
 public:
  LineReader(std::istream& in, std::string_view header, std::string_view what)
      : in_(in), header_(header), what_(what) {}

  bool next(std::string& line, std::size_t& line_no) {
    while (std::getline(in_, raw_)) {
      ++line_no_;
      const auto view = csv::trim_line(raw_, line_no_ == 1);
      if (view.empty() || view.front() == '#') continue;
      if (!seen_header_) {
        if (view != header_)
          throw Error(fmt::format("{}: line {}: expected header '{}', got '{}'", what_,
                                  line_no_, header_, view));
        seen_header_ = true;
        continue;
      }
      line.assign(view);
      line_no = line_no_;
      return true;
    }
    return false;
  }

 private:
  std::istream& in_;
  std::string_view header_;
  std::string_view what_;
  std::string raw_;
  std::size_t line_no_ = 0;
  bool seen_header_ = false;
};

std::optional<Count> parse_count(std::string_view s) {
  Count value = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc{} || ptr != end || s.empty()) return std::nullopt;
  return value;
}

}  // namespace

JournalRegistry::JournalRegistry(std::vector<JournalRecord> records) {
  for (auto& r : records) add(std::move(r));
}

std::size_t JournalRegistry::add(JournalRecord record) {
  if (record.id.empty()) throw Error("journal id must be nonempty");
  const std::size_t idx = records_.size();
  auto [it, inserted] = index_.emplace(record.id, idx);
  if (!inserted) throw Error(fmt::format("duplicate journal id '{}'", record.id));
  records_.push_back(std::move(record));
  return idx;
}

std::optional<std::size_t> JournalRegistry::find(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t JournalRegistry::index_of(const std::string& id) const {
  if (auto idx = find(id)) return *idx;
  throw Error(fmt::format("unknown journal id '{}'", id));
}

CitationMatrix CitationMatrix::from_cells(
    JournalRegistry journals,
    const std::map<std::pair<std::size_t, std::size_t>, Count>& cells) {
  CitationMatrix m;
  m.journals_ = std::move(journals);
  const std::size_t n = m.journals_.size();
  m.offsets_.assign(n + 1, 0);
  m.cells_.reserve(cells.size());
  // std::map iterates in (row, col) order, which is exactly CSR order.
  for (const auto& [key, count] : cells) {
    const auto [i, j] = key;
    if (i >= n || j >= n)
      throw Error(fmt::format("cell ({}, {}) outside a {}-journal registry", i, j, n));
    if (count == 0) continue;
    m.cells_.push_back({j, count});
    ++m.offsets_[i + 1];
    if (count == 1) ++m.singles_;
  }
  std::partial_sum(m.offsets_.begin(), m.offsets_.end(), m.offsets_.begin());
  return m;
}

Count CitationMatrix::count(std::size_t citing, std::size_t cited) const {
  const auto r = row(citing);
  auto it = std::lower_bound(r.begin(), r.end(), cited,
                             [](const Cell& c, std::size_t col) { return c.cited < col; });
  return (it != r.end() && it->cited == cited) ? it->count : 0;
}

CitationMatrix CitationMatrix::submatrix(std::span<const std::size_t> members) const {
  std::vector<JournalRecord> records;
  std::vector<std::ptrdiff_t> local(n(), -1);
  for (std::size_t k = 0; k < members.size(); ++k) {
    records.push_back(journals_[members[k]]);
    local[members[k]] = static_cast<std::ptrdiff_t>(k);
  }
  std::map<std::pair<std::size_t, std::size_t>, Count> cells;
  for (std::size_t k = 0; k < members.size(); ++k)
    for (const Cell& c : row(members[k]))
      if (local[c.cited] >= 0) cells[{k, static_cast<std::size_t>(local[c.cited])}] = c.count;
  return from_cells(JournalRegistry(std::move(records)), cells);
}

std::string DensityReport::density_percent(int decimals) const {
  return format_percent(nonzero, possible, decimals);
}

std::string DensityReport::corrected_percent(int decimals) const {
  return format_percent(nonzero - singles, possible, decimals);
}

JournalRegistry ingest_registry(std::istream& in) {
  JournalRegistry registry;
  std::unordered_map<std::string, std::size_t> first_line;
  LineReader reader(in, kRegistryHeader, "registry");
  std::string line;
  std::size_t line_no = 0;
  while (reader.next(line, line_no)) {
    auto fields = csv::split(line);
    if (!fields || fields->size() != 3)
      throw Error(fmt::format("registry: line {}: expected 3 fields 'id,title,english_original'",
                              line_no));
    auto& f = *fields;
    if (f[0].empty()) throw Error(fmt::format("registry: line {}: empty journal id", line_no));
    bool english = false;
    if (f[2] == "true") {
      english = true;
    } else if (f[2] != "false") {
      throw Error(fmt::format("registry: line {}: english_original must be true or false, got '{}'",
                              line_no, f[2]));
    }
    if (auto it = first_line.find(f[0]); it != first_line.end())
      throw Error(fmt::format("registry: duplicate journal id '{}' on lines {} and {}", f[0],
                              it->second, line_no));
    first_line.emplace(f[0], line_no);
    registry.add({std::move(f[0]), std::move(f[1]), english});
  }
  return registry;
}

CitationMatrix ingest_edges(std::istream& in, JournalRegistry registry,
                            EdgeIngestOptions options) {
  std::map<std::pair<std::size_t, std::size_t>, Count> cells;
  LineReader reader(in, kEdgeHeader, "edges");
  std::string line;
  std::size_t line_no = 0;

  auto resolve = [&](const std::string& id) -> std::size_t {
    if (auto idx = registry.find(id)) return *idx;
    if (id.empty()) throw Error(fmt::format("edges: line {}: empty journal id", line_no));
    if (!options.auto_register)
      throw Error(fmt::format("edges: line {}: unknown journal id '{}'", line_no, id));
    return registry.add({id, id, false});
  };

  while (reader.next(line, line_no)) {
    auto fields = csv::split(line);
    if (!fields || fields->size() != 3)
      throw Error(fmt::format("edges: line {}: expected 3 fields 'citing_id,cited_id,count'",
                              line_no));
    const auto& f = *fields;
    const auto count = parse_count(f[2]);
    if (!count || *count == 0)
      throw Error(fmt::format("edges: line {}: count must be a positive integer, got '{}'",
                              line_no, f[2]));
    const std::size_t citing = resolve(f[0]);
    const std::size_t cited = resolve(f[1]);
    cells[{citing, cited}] += *count;
  }
  return CitationMatrix::from_cells(std::move(registry), cells);
}

DensityReport density(std::uint64_t n, std::uint64_t nonzero, std::uint64_t singles) {
  if (n == 0) throw Error("density requires at least one journal");
  if (singles > nonzero) throw Error("single-citation cells cannot exceed nonzero cells");
  DensityReport r;
  r.n = n;
  r.possible = n * n;
  r.nonzero = nonzero;
  r.singles = singles;
  if (nonzero > r.possible) throw Error("nonzero cells exceed n*n");
  r.density = static_cast<double>(nonzero) / static_cast<double>(r.possible);
  r.corrected_density = static_cast<double>(nonzero - singles) / static_cast<double>(r.possible);
  return r;
}

DensityReport density(const CitationMatrix& matrix) {
  return density(matrix.n(), matrix.nonzero(), matrix.singles());
}

Marginals marginals(const CitationMatrix& matrix) {
  Marginals m;
  m.total_citing.assign(matrix.n(), 0);
  m.total_cited.assign(matrix.n(), 0);
  for (std::size_t i = 0; i < matrix.n(); ++i)
    for (const Cell& c : matrix.row(i)) {
      m.total_citing[i] += c.count;
      m.total_cited[c.cited] += c.count;
      m.grand_total += c.count;
    }
  return m;
}

std::string format_percent(std::uint64_t num, std::uint64_t den, int decimals) {
  if (den == 0) throw Error("percentage of an empty denominator");
  if (decimals < 0 || decimals > 9) throw Error("decimals must be in [0, 9]");
  unsigned __int128 scale = 100;
  for (int i = 0; i < decimals; ++i) scale *= 10;
  const unsigned __int128 scaled = static_cast<unsigned __int128>(num) * scale;
  auto q = static_cast<std::uint64_t>(scaled / den);
  const auto rem = static_cast<std::uint64_t>(scaled % den);
  if (2 * static_cast<unsigned __int128>(rem) >= den) ++q;

  std::string digits = std::to_string(q);
  if (decimals == 0) return digits + "%";
  if (digits.size() <= static_cast<std::size_t>(decimals))
    digits.insert(0, static_cast<std::size_t>(decimals) + 1 - digits.size(), '0');
  digits.insert(digits.size() - static_cast<std::size_t>(decimals), ".");
  return digits + "%";
}

void write_registry(std::ostream& out, const JournalRegistry& registry) {
  out << kRegistryHeader << '\n';
  for (const auto& r : registry.records())
    out << csv::quote(r.id) << ',' << csv::quote(r.title) << ','
        << (r.english_original ? "true" : "false") << '\n';
}

void write_edges(std::ostream& out, const CitationMatrix& matrix) {
  const auto& reg = matrix.journals();
  std::vector<std::size_t> order(matrix.n());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return reg.id(a) < reg.id(b); });

  out << kEdgeHeader << '\n';
  for (std::size_t i : order) {
    std::vector<Cell> cells(matrix.row(i).begin(), matrix.row(i).end());
    std::sort(cells.begin(), cells.end(), [&](const Cell& a, const Cell& b) {
      return reg.id(a.cited) < reg.id(b.cited);
    });
    for (const Cell& c : cells)
      out << csv::quote(reg.id(i)) << ',' << csv::quote(reg.id(c.cited)) << ',' << c.count
          << '\n';
  }
}

}  // namespace scimap
