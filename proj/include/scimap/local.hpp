#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scimap/corpus.hpp"
#include "scimap/correlate.hpp"
#include "scimap/factor.hpp"

namespace scimap {

/// Why a journal belongs to a local environment.
struct MemberSides {
  bool seed = false;
  bool citing = false;  // seed cites it above the fraction of seed's total citing
  bool cited = false;   // it cites seed above the fraction of seed's total cited
};

struct LocalEnvironment {
  std::string seed;
  double fraction = 0.01;
  /// Member indices into the source matrix, in registry order; seed included.
  std::vector<std::size_t> members;
  std::vector<MemberSides> sides;  // parallel to members
  /// All citation cells among members, indexed in member order.
  CitationMatrix submatrix;

  std::size_t size() const { return members.size(); }
};

/// Journals exchanging more than `fraction` of the seed's total citing (seed
/// -> j) or total cited (j -> seed), plus the seed. Both tests are strict.
LocalEnvironment local_environment(const CitationMatrix& matrix, const std::string& seed,
                                   double fraction = 0.01);

struct LocalAnalysisOptions {
  std::optional<std::size_t> k;
  CorrelationOptions correlation;
  VarimaxOptions rotation;
};

/// Correlate the environment's submatrix, extract (forced k or Kaiser) and
/// rotate with varimax.
FactorModel local_factor_analysis(const LocalEnvironment& env,
                                  const LocalAnalysisOptions& options = {});

struct ComplexityReport {
  double floor = 0.1;
  std::vector<std::string> journals;
  /// Per journal: number of factors with |loading| >= floor.
  std::vector<std::size_t> counts;
  /// Share of all loading cells with |loading| >= floor.
  double fill_ratio = 0.0;
};

ComplexityReport interfactorial_complexity(const FactorModel& model, double floor = 0.1);

}  // namespace scimap
