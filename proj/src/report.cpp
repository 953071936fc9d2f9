#include "scimap/report.hpp"

namespace scimap {

using nlohmann::ordered_json;

ordered_json to_json(const DensityReport& r) {
  return {{"n", r.n},
          {"possible", r.possible},
          {"nonzero", r.nonzero},
          {"singles", r.singles},
          {"density", r.density},
          {"density_percent", r.density_percent()},
          {"corrected_density", r.corrected_density},
          {"corrected_density_percent", r.corrected_percent()}};
}

ordered_json to_json(const ComponentSet& set) {
  return {{"threshold", set.threshold},
          {"min_size", set.min_size},
          {"component_count", set.components.size()},
          {"journals_covered", set.coverage},
          {"components", set.components},
          {"articulation_points", set.articulation_points}};
}

ordered_json to_json(const SweepReport& report) {
  ordered_json levels = ordered_json::array();
  for (const auto& level : report.levels) levels.push_back(to_json(level));
  return {{"levels", levels}};
}

ordered_json to_json(const FactorModel& m) {
  ordered_json loadings = ordered_json::array();
  for (std::size_t i = 0; i < m.n(); ++i) {
    std::vector<double> row(m.loadings.row(i).begin(), m.loadings.row(i).end());
    loadings.push_back({{"journal", m.journals.id(i)}, {"loadings", row}});
  }
  ordered_json rotation = {{"method", std::string(to_string(m.rotation.method))},
                           {"kaiser_normalized", m.rotation.kaiser_normalized},
                           {"iterations", m.rotation.iterations},
                           {"converged", m.rotation.converged}};
  return {{"n", m.n()},
          {"k", m.k},
          {"explained_variance", m.explained_variance},
          {"eigenvalues", m.eigenvalues},
          {"rotation", rotation},
          {"excluded", m.excluded},
          {"warnings", m.warnings},
          {"loadings", loadings}};
}

ordered_json to_json(const LocalEnvironment& env) {
  ordered_json members = ordered_json::array();
  const auto& reg = env.submatrix.journals();
  for (std::size_t k = 0; k < env.size(); ++k) {
    std::vector<std::string> sides;
    if (env.sides[k].seed) sides.emplace_back("seed");
    if (env.sides[k].citing) sides.emplace_back("citing");
    if (env.sides[k].cited) sides.emplace_back("cited");
    members.push_back({{"journal", reg.id(k)}, {"sides", sides}});
  }
  ordered_json edges = ordered_json::array();
  for (std::size_t i = 0; i < env.submatrix.n(); ++i)
    for (const Cell& c : env.submatrix.row(i))
      edges.push_back({reg.id(i), reg.id(c.cited), c.count});
  return {{"seed", env.seed},
          {"fraction", env.fraction},
          {"member_count_including_seed", env.size()},
          {"members", members},
          {"submatrix", edges}};
}

ordered_json to_json(const ComplexityReport& r) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < r.journals.size(); ++i)
    rows.push_back({{"journal", r.journals[i]}, {"factors_at_or_above_floor", r.counts[i]}});
  return {{"floor", r.floor}, {"fill_ratio", r.fill_ratio}, {"journals", rows}};
}

ordered_json to_json(const Layout& layout) {
  ordered_json points = ordered_json::array();
  for (std::size_t i = 0; i < layout.size(); ++i) {
    const Point p = layout.point(i);
    points.push_back({{"journal", layout.journals[i]}, {"x", p.x}, {"y", p.y}});
  }
  ordered_json out = {{"method", std::string(to_string(layout.method))}, {"points", points}};
  if (layout.method == LayoutMethod::ClassicalMds) {
    out["stress"] = layout.stress;
    out["negative_eigenvalue_mass"] = layout.negative_mass;
  }
  return out;
}

}  // namespace scimap
