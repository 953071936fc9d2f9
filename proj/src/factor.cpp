#include "scimap/factor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>

#include <fmt/format.h>

#include "scimap/csv.hpp"
#include "scimap/error.hpp"

namespace scimap {

std::string_view to_string(RotationMethod method) {
  return method == RotationMethod::Varimax ? "varimax" : "none";
}

std::vector<double> FactorModel::communalities() const {
  std::vector<double> h(loadings.rows(), 0.0);
  for (std::size_t i = 0; i < loadings.rows(); ++i)
    for (double v : loadings.row(i)) h[i] += v * v;
  return h;
}

std::size_t kaiser_count(std::span<const double> eigenvalues) {
  return static_cast<std::size_t>(
      std::count_if(eigenvalues.begin(), eigenvalues.end(), [](double v) { return v > 1.0; }));
}

FactorModel extract(const CorrelationMatrix& corr, std::optional<std::size_t> k,
                    const EigenOptions& eigen_options) {
  const CorrelationMatrix valid = corr.restrict_to_valid();
  const std::size_t n = valid.n();
  if (n == 0) throw Error("factor extraction: no journal has a nonconstant pattern");
  if (k && (*k < 1 || *k > n))
    throw Error(fmt::format("factor extraction: k = {} outside [1, {}]", *k, n));

  FactorModel model;
  model.journals = valid.journals;
  for (std::size_t i : corr.invalid_indices()) model.excluded.push_back(corr.journals.id(i));

  const EigenResult eig = sym_eig(valid.r, eigen_options);
  if (!eig.converged)
    model.warnings.push_back(
        fmt::format("eigensolver stopped after {} sweeps without converging", eig.sweeps));
  model.eigenvalues = eig.values;

  if (k) {
    model.k = *k;
  } else {
    model.k = kaiser_count(eig.values);
    if (model.k == 0) {
      model.k = 1;
      model.warnings.push_back("no eigenvalue exceeds 1; retaining a single factor");
    }
  }

  model.loadings = Matrix(n, model.k);
  double retained = 0.0;
  for (std::size_t f = 0; f < model.k; ++f) {
    const double scale = std::sqrt(std::max(eig.values[f], 0.0));
    for (std::size_t i = 0; i < n; ++i) model.loadings(i, f) = eig.vectors(i, f) * scale;
    retained += eig.values[f];
  }
  model.explained_variance = retained / static_cast<double>(n);
  model.rotation.matrix = Matrix::identity(model.k);
  return model;
}

double varimax_criterion(const Matrix& loadings) {
  const auto n = static_cast<double>(loadings.rows());
  if (loadings.rows() == 0) return 0.0;
  double total = 0.0;
  for (std::size_t f = 0; f < loadings.cols(); ++f) {
    double s2 = 0.0, s4 = 0.0;
    for (std::size_t i = 0; i < loadings.rows(); ++i) {
      const double sq = loadings(i, f) * loadings(i, f);
      s2 += sq;
      s4 += sq * sq;
    }
    total += s4 / n - (s2 / n) * (s2 / n);
  }
  return total;
}

namespace {

void rotate_columns(Matrix& m, std::size_t p, std::size_t q, double c, double s) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const double x = m(i, p), y = m(i, q);
    m(i, p) = c * x + s * y;
    m(i, q) = -s * x + c * y;
  }
}

/// Angle maximizing the criterion over the (p, q) plane.
double pair_angle(const Matrix& x, std::size_t p, std::size_t q) {
  double a = 0.0, b = 0.0, c = 0.0, d = 0.0;
  for (std::size_t i = 0; i < x.rows(); ++i) {
    const double xp = x(i, p), xq = x(i, q);
    const double u = xp * xp - xq * xq;
    const double v = 2.0 * xp * xq;
    a += u;
    b += v;
    c += u * u - v * v;
    d += 2.0 * u * v;
  }
  const auto n = static_cast<double>(x.rows());
  const double num = d - 2.0 * a * b / n;
  const double den = c - (a * a - b * b) / n;
  return 0.25 * std::atan2(num, den);
}

}  // namespace

FactorModel varimax(FactorModel model, const VarimaxOptions& options) {
  const std::size_t n = model.loadings.rows();
  const std::size_t k = model.loadings.cols();
  if (k < 2) {
    model.rotation = RotationRecord{};
    model.rotation.matrix = Matrix::identity(k);
    return model;
  }

  std::vector<double> h = model.communalities();
  for (double& v : h) v = std::sqrt(v);

  Matrix x = model.loadings;
  if (options.kaiser_normalize)
    for (std::size_t i = 0; i < n; ++i)
      if (h[i] > 0.0)
        for (double& v : x.row(i)) v /= h[i];

  RotationRecord rec;
  rec.method = RotationMethod::Varimax;
  rec.kaiser_normalized = options.kaiser_normalize;
  Matrix rot = Matrix::identity(k);
  double crit = varimax_criterion(x);
  rec.criterion_history.push_back(crit);

  while (rec.iterations < options.max_sweeps) {
    ++rec.iterations;
    for (std::size_t p = 0; p + 1 < k; ++p)
      for (std::size_t q = p + 1; q < k; ++q) {
        const double phi = pair_angle(x, p, q);
        if (phi == 0.0) continue;
        const double c = std::cos(phi), s = std::sin(phi);
        rotate_columns(x, p, q, c, s);
        rotate_columns(rot, p, q, c, s);
      }
    const double next = varimax_criterion(x);
    rec.criterion_history.push_back(next);
    const double change = std::abs(next - crit);
    crit = next;
    if (change <= options.tol * std::abs(crit)) {
      rec.converged = true;
      break;
    }
  }

  if (options.kaiser_normalize)
    for (std::size_t i = 0; i < n; ++i)
      if (h[i] > 0.0)
        for (double& v : x.row(i)) v *= h[i];

  // Canonical column order and sign.
  std::vector<double> ssq(k, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t f = 0; f < k; ++f) ssq[f] += x(i, f) * x(i, f);
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return ssq[a] > ssq[b]; });

  Matrix out(n, k);
  rec.matrix = Matrix(k, k);
  for (std::size_t f = 0; f < k; ++f) {
    const std::size_t src = order[f];
    std::size_t best = 0;
    for (std::size_t i = 1; i < n; ++i)
      if (std::abs(x(i, src)) > std::abs(x(best, src))) best = i;
    const double sign = (n > 0 && x(best, src) < 0.0) ? -1.0 : 1.0;
    for (std::size_t i = 0; i < n; ++i) out(i, f) = sign * x(i, src);
    for (std::size_t r = 0; r < k; ++r) rec.matrix(r, f) = sign * rot(r, src);
  }

  model.loadings = std::move(out);
  model.rotation = std::move(rec);
  if (!model.rotation.converged)
    model.warnings.push_back(fmt::format("varimax did not converge in {} sweeps",
                                         model.rotation.iterations));
  return model;
}

std::string format_loading(double value) {
  std::string s = fmt::format("{:.3f}", value);
  if (s == "-0.000") s = "0.000";
  if (s.starts_with("0.")) return s.substr(1);
  if (s.starts_with("-0.")) return "-" + s.substr(2);
  return s;
}

LoadingTable loading_table(const FactorModel& model, double suppress,
                           std::optional<std::size_t> top) {
  LoadingTable table;
  table.k = model.k;
  table.suppress = suppress;
  const std::size_t n = model.loadings.rows();
  const std::size_t k = model.loadings.cols();

  std::vector<std::size_t> home(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t f = 1; f < k; ++f)
      if (std::abs(model.loadings(i, f)) > std::abs(model.loadings(i, home[i]))) home[i] = f;

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (home[a] != home[b]) return home[a] < home[b];
    const double la = std::abs(model.loadings(a, home[a]));
    const double lb = std::abs(model.loadings(b, home[b]));
    if (la != lb) return la > lb;
    return model.journals.id(a) < model.journals.id(b);
  });

  std::vector<std::size_t> per_factor(k, 0);
  for (std::size_t i : order) {
    if (top && per_factor[home[i]] >= *top) continue;
    ++per_factor[home[i]];
    LoadingRow row;
    row.journal = model.journals.id(i);
    row.factor = home[i];
    for (std::size_t f = 0; f < k; ++f) {
      const double v = model.loadings(i, f);
      row.values.push_back(v);
      row.cells.push_back(std::abs(v) < suppress ? std::string() : format_loading(v));
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

void write_loading_csv(std::ostream& out, const LoadingTable& table) {
  out << "journal_id";
  for (std::size_t f = 1; f <= table.k; ++f) out << ',' << f;
  out << '\n';
  for (const auto& row : table.rows) {
    out << csv::quote(row.journal);
    for (const auto& cell : row.cells) out << ',' << cell;
    out << '\n';
  }
}

void write_loading_text(std::ostream& out, const LoadingTable& table) {
  std::size_t width = std::string_view("Journal").size();
  for (const auto& row : table.rows) width = std::max(width, row.journal.size());
  constexpr int kCell = 7;
  out << fmt::format("{:<{}}", "Journal", width);
  for (std::size_t f = 1; f <= table.k; ++f) out << fmt::format("{:>{}}", f, kCell);
  out << '\n';
  for (const auto& row : table.rows) {
    out << fmt::format("{:<{}}", row.journal, width);
    for (const auto& cell : row.cells) out << fmt::format("{:>{}}", cell, kCell);
    out << '\n';
  }
}

}  // namespace scimap
