#pragma once

// Small builders shared by the unit suites.

#include <map>
#include <random>
#include <string>
#include <vector>

#include "scimap/correlate.hpp"
#include "scimap/corpus.hpp"
#include "scimap/factor.hpp"
#include "scimap/matrix.hpp"

namespace fixture {

inline scimap::JournalRegistry registry(std::size_t n, const std::string& prefix = "J") {
  std::vector<scimap::JournalRecord> recs;
  for (std::size_t i = 0; i < n; ++i) recs.push_back({prefix + std::to_string(i), "", false});
  return scimap::JournalRegistry(recs);
}

inline scimap::JournalRegistry registry(const std::vector<std::string>& ids) {
  std::vector<scimap::JournalRecord> recs;
  for (const auto& id : ids) recs.push_back({id, "", false});
  return scimap::JournalRegistry(recs);
}

/// Correlation matrix with the given entries; every journal valid.
inline scimap::CorrelationMatrix correlation(const scimap::Matrix& r) {
  scimap::CorrelationMatrix c;
  c.journals = registry(r.rows());
  c.r = r;
  c.valid.assign(r.rows(), true);
  return c;
}

/// Constant off-diagonal correlation.
inline scimap::CorrelationMatrix uniform_correlation(std::size_t n, double r) {
  scimap::Matrix m(n, n, r);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return correlation(m);
}

inline scimap::Matrix random_symmetric(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  scimap::Matrix s(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) s(i, j) = s(j, i) = u(rng);
  return s;
}

/// Pearson correlation of n random variables over m observations.
inline scimap::CorrelationMatrix random_correlation(std::size_t n, std::size_t m,
                                                    std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  scimap::Matrix x(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) x(i, j) = g(rng) + 0.6 * g(rng) * (i % 3 == j % 3);
  scimap::Matrix r(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(i, j) = i == j ? 1.0 : scimap::pearson(x.row(i), x.row(j));
  return correlation(r);
}

/// Citation matrix from dense rows; ids R0, R1, ...
inline scimap::CitationMatrix citations(const std::vector<std::vector<scimap::Count>>& rows,
                                        const std::string& prefix = "R") {
  std::map<std::pair<std::size_t, std::size_t>, scimap::Count> cells;
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      if (rows[i][j]) cells[{i, j}] = rows[i][j];
  return scimap::CitationMatrix::from_cells(registry(rows.size(), prefix), cells);
}

/// Factor model wrapping a hand-made loading matrix.
inline scimap::FactorModel model_with(const scimap::Matrix& loadings) {
  scimap::FactorModel m;
  m.journals = registry(loadings.rows());
  m.k = loadings.cols();
  m.loadings = loadings;
  m.rotation.matrix = scimap::Matrix::identity(m.k);
  return m;
}

}  // namespace fixture
