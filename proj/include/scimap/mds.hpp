#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "scimap/correlate.hpp"
#include "scimap/factor.hpp"
#include "scimap/matrix.hpp"

namespace scimap {

/// Correlation-to-dissimilarity transform.
enum class Dissimilarity {
  OneMinusR,       // d = 1 - r, range [0, 2]
  SqrtTwoOneMinusR  // d = sqrt(2 (1 - r)), Euclidean distance of standardized patterns
};
std::string_view to_string(Dissimilarity d);
Dissimilarity parse_dissimilarity(std::string_view s);

enum class LayoutMethod { ClassicalMds, FactorPlot };
std::string_view to_string(LayoutMethod m);

struct Point {
  double x = 0.0;
  double y = 0.0;
};

struct Layout {
  std::vector<std::string> journals;
  /// n x dim coordinates; x() and y() read the first two axes.
  Matrix coords;
  LayoutMethod method = LayoutMethod::ClassicalMds;
  /// Kruskal-style normalized residual (classical MDS only).
  double stress = 0.0;
  /// Eigenvalues of the double-centered matrix, descending.
  std::vector<double> eigenvalues;
  /// Sum of |negative eigenvalues|, clamped to zero; a non-Euclidean signal.
  double negative_mass = 0.0;

  std::size_t size() const { return journals.size(); }
  Point point(std::size_t i) const;
};

/// Distances over the valid journals of `corr`, with their ids.
struct DistanceMatrix {
  std::vector<std::string> journals;
  Matrix d;
};

DistanceMatrix correlation_to_distance(const CorrelationMatrix& corr,
                                       Dissimilarity variant = Dissimilarity::OneMinusR);

/// Torgerson scaling: double-center -d^2/2, keep the top `dim` eigenpairs,
/// scale eigenvectors by sqrt(max(lambda, 0)).
Layout classical_mds(const DistanceMatrix& dist, std::size_t dim = 2);

/// Loadings on factors f1 and f2 (1-based) as plane coordinates.
Layout factor_plot(const FactorModel& model, std::size_t f1 = 1, std::size_t f2 = 2);

/// Spreadsheet-style labels: A..Z, a..z, then A1, B1, ...
std::string letter_code(std::size_t index);

void write_layout_csv(std::ostream& out, const Layout& layout);

struct SvgOptions {
  bool letter_codes = false;  // label points A, B, ... and add a legend
  int size = 640;
  std::string title;
};

void write_layout_svg(std::ostream& out, const Layout& layout, const SvgOptions& options = {});

}  // namespace scimap
