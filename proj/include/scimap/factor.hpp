#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scimap/correlate.hpp"
#include "scimap/eigen.hpp"
#include "scimap/matrix.hpp"

namespace scimap {

enum class RotationMethod { None, Varimax };
std::string_view to_string(RotationMethod method);

struct RotationRecord {
  RotationMethod method = RotationMethod::None;
  bool kaiser_normalized = false;
  int iterations = 0;
  bool converged = false;
  /// Varimax criterion before the first sweep and after every sweep.
  std::vector<double> criterion_history;
  /// Orthogonal k x k matrix with rotated = unrotated * matrix, including the
  /// final column reordering and sign flips.
  Matrix matrix;
};

/// Principal-component factor solution over the valid journals of a
/// correlation matrix.
struct FactorModel {
  JournalRegistry journals;
  std::vector<std::string> excluded;  // zero-variance journals left out
  std::vector<double> eigenvalues;    // all of them, descending
  std::size_t k = 0;
  Matrix loadings;  // journals x k
  double explained_variance = 0.0;
  RotationRecord rotation;
  std::vector<std::string> warnings;

  std::size_t n() const { return journals.size(); }
  std::vector<double> communalities() const;
};

/// Number of eigenvalues strictly greater than one.
std::size_t kaiser_count(std::span<const double> eigenvalues);

/// Unrotated extraction. Without `k` the Kaiser criterion decides, falling
/// back to one factor (with a warning) when no eigenvalue exceeds one.
FactorModel extract(const CorrelationMatrix& corr, std::optional<std::size_t> k = std::nullopt,
                    const EigenOptions& eigen_options = {});

struct VarimaxOptions {
  bool kaiser_normalize = true;
  double tol = 1e-7;
  int max_sweeps = 100;
};

/// Variance of squared loadings, summed over factors.
double varimax_criterion(const Matrix& loadings);

/// Orthogonal varimax rotation by successive planar rotations of factor
/// pairs (Kaiser's closed-form angle). A sweep visits every pair once;
/// iteration stops when the relative criterion change drops below `tol`.
///
/// Output columns are ordered by descending sum of squared loadings and each
/// column is signed so that its largest-magnitude loading is positive. With a
/// single factor the model comes back unchanged with method None.
FactorModel varimax(FactorModel model, const VarimaxOptions& options = {});

/// Rendered loading like ".793" or "-.115".
std::string format_loading(double value);

struct LoadingRow {
  std::string journal;
  std::size_t factor = 0;  // 0-based factor this row is grouped under
  std::vector<double> values;
  std::vector<std::string> cells;  // blank where |value| < suppress
};

struct LoadingTable {
  std::size_t k = 0;
  double suppress = 0.1;
  std::vector<LoadingRow> rows;
};

/// Rows grouped by each journal's highest-|loading| factor, then by
/// descending |loading| on it. `top` keeps at most that many rows per factor.
LoadingTable loading_table(const FactorModel& model, double suppress = 0.1,
                           std::optional<std::size_t> top = std::nullopt);

void write_loading_csv(std::ostream& out, const LoadingTable& table);
void write_loading_text(std::ostream& out, const LoadingTable& table);

}  // namespace scimap
