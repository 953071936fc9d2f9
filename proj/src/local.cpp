#include "scimap/local.hpp"

#include <cmath>

#include <fmt/format.h>

#include "scimap/error.hpp"

namespace scimap {

LocalEnvironment local_environment(const CitationMatrix& matrix, const std::string& seed,
                                   double fraction) {
  const auto seed_idx = matrix.journals().find(seed);
  if (!seed_idx) throw Error(fmt::format("unknown seed journal '{}'", seed));
  if (!(fraction >= 0.0 && fraction < 1.0))
    throw Error(fmt::format("selection fraction {} outside [0, 1)", fraction));

  const Marginals totals = marginals(matrix);
  const std::size_t s = *seed_idx;
  const auto citing_total = static_cast<double>(totals.total_citing[s]);
  const auto cited_total = static_cast<double>(totals.total_cited[s]);
  if (citing_total == 0.0 && cited_total == 0.0)
    throw Error(fmt::format(
        "seed journal '{}' neither cites nor is cited, so the selection threshold has an empty "
        "denominator",
        seed));

  // out[j] = seed -> j, in[j] = j -> seed
  std::vector<Count> out(matrix.n(), 0), in(matrix.n(), 0);
  for (const Cell& c : matrix.row(s)) out[c.cited] = c.count;
  for (std::size_t j = 0; j < matrix.n(); ++j) in[j] = matrix.count(j, s);

  LocalEnvironment env;
  env.seed = seed;
  env.fraction = fraction;
  for (std::size_t j = 0; j < matrix.n(); ++j) {
    MemberSides sides;
    sides.seed = (j == s);
    sides.citing = static_cast<double>(out[j]) > fraction * citing_total;
    sides.cited = static_cast<double>(in[j]) > fraction * cited_total;
    if (sides.seed || sides.citing || sides.cited) {
      env.members.push_back(j);
      env.sides.push_back(sides);
    }
  }
  env.submatrix = matrix.submatrix(env.members);
  return env;
}

FactorModel local_factor_analysis(const LocalEnvironment& env,
                                  const LocalAnalysisOptions& options) {
  if (env.size() < 3)
    throw Error(fmt::format("local environment of '{}' has {} members; at least 3 are needed",
                            env.seed, env.size()));
  const auto corr = citing_correlation(env.submatrix, options.correlation);
  return varimax(extract(corr, options.k), options.rotation);
}

ComplexityReport interfactorial_complexity(const FactorModel& model, double floor) {
  ComplexityReport rep;
  rep.floor = floor;
  std::size_t filled = 0;
  for (std::size_t i = 0; i < model.loadings.rows(); ++i) {
    std::size_t c = 0;
    for (double v : model.loadings.row(i))
      if (std::abs(v) >= floor) ++c;
    rep.journals.push_back(model.journals.id(i));
    rep.counts.push_back(c);
    filled += c;
  }
  const std::size_t cells = model.loadings.rows() * model.loadings.cols();
  rep.fill_ratio = cells ? static_cast<double>(filled) / static_cast<double>(cells) : 0.0;
  return rep;
}

}  // namespace scimap
