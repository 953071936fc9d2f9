#include "scimap/correlate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <thread>

#include <fmt/format.h>

#include "scimap/csv.hpp"
#include "scimap/error.hpp"

namespace scimap {

std::string_view to_string(Axis axis) {
  return axis == Axis::CitingRows ? "citing-rows" : "cited-columns";
}

std::string_view to_string(DiagonalPolicy policy) {
  return policy == DiagonalPolicy::Kept ? "kept" : "zeroed";
}

Axis parse_axis(std::string_view s) {
  if (s == "citing-rows" || s == "citing") return Axis::CitingRows;
  if (s == "cited-columns" || s == "cited") return Axis::CitedColumns;
  throw Error(fmt::format("invalid axis '{}' (expected citing-rows or cited-columns)", s));
}

DiagonalPolicy parse_diagonal_policy(std::string_view s) {
  if (s == "kept") return DiagonalPolicy::Kept;
  if (s == "zeroed") return DiagonalPolicy::Zeroed;
  throw Error(fmt::format("invalid diagonal policy '{}' (expected kept or zeroed)", s));
}

std::vector<std::size_t> CorrelationMatrix::valid_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < valid.size(); ++i)
    if (valid[i]) out.push_back(i);
  return out;
}

std::vector<std::size_t> CorrelationMatrix::invalid_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < valid.size(); ++i)
    if (!valid[i]) out.push_back(i);
  return out;
}

CorrelationMatrix CorrelationMatrix::restrict_to_valid() const {
  const auto keep = valid_indices();
  CorrelationMatrix out;
  std::vector<JournalRecord> records;
  for (std::size_t i : keep) records.push_back(journals[i]);
  out.journals = JournalRegistry(std::move(records));
  out.r = Matrix(keep.size(), keep.size());
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = 0; b < keep.size(); ++b) out.r(a, b) = r(keep[a], keep[b]);
  out.valid.assign(keep.size(), true);
  out.axis = axis;
  out.diagonal = diagonal;
  return out;
}

double pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw Error("pearson: length mismatch");
  const auto n = static_cast<double>(x.size());
  if (x.empty()) return 0.0;
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double dx = x[k] - mx;
    const double dy = y[k] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

CorrelationMatrix citing_correlation(const CitationMatrix& matrix, CorrelationOptions options) {
  const std::size_t n = matrix.n();
  if (n < 2) throw Error(fmt::format("correlation needs at least 2 journals, got {}", n));

  // Dense patterns, one row per journal.
  Matrix z(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (const Cell& c : matrix.row(i)) {
      if (options.diagonal == DiagonalPolicy::Zeroed && c.cited == i) continue;
      const auto v = static_cast<double>(c.count);
      if (options.axis == Axis::CitingRows)
        z(i, c.cited) = v;
      else
        z(c.cited, i) = v;
    }

  // Center and scale each pattern to unit norm so r is a plain dot product.
  std::vector<bool> valid(n, false);
  const auto len = static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto row = z.row(i);
    const double mean = std::accumulate(row.begin(), row.end(), 0.0) / len;
    double ss = 0.0;
    for (double& v : row) {
      v -= mean;
      ss += v * v;
    }
    if (ss == 0.0) {
      std::fill(row.begin(), row.end(), 0.0);
      continue;
    }
    valid[i] = true;
    const double scale = 1.0 / std::sqrt(ss);
    for (double& v : row) v *= scale;
  }

  CorrelationMatrix out;
  out.journals = matrix.journals();
  out.r = Matrix(n, n);
  out.valid = valid;
  out.axis = options.axis;
  out.diagonal = options.diagonal;

  // Each (i, j>i) entry is one serial dot product, so the bits do not depend on
  // how rows are dealt out to workers.
  auto work = [&](unsigned worker, unsigned workers) {
    for (std::size_t i = worker; i < n; i += workers) {
      if (!valid[i]) continue;
      const auto zi = z.row(i);
      out.r(i, i) = 1.0;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!valid[j]) continue;
        const auto zj = z.row(j);
        double s = 0.0;
        for (std::size_t k = 0; k < n; ++k) s += zi[k] * zj[k];
        out.r(i, j) = std::clamp(s, -1.0, 1.0);
      }
    }
  };

  unsigned workers = options.threads ? options.threads : std::thread::hardware_concurrency();
  workers = std::clamp<unsigned>(workers, 1, static_cast<unsigned>(std::max<std::size_t>(n / 32, 1)));
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
  }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) out.r(j, i) = out.r(i, j);
  return out;
}

void write_correlation_pairs(std::ostream& out, const CorrelationMatrix& corr, double floor) {
  struct Pair {
    const std::string* a;
    const std::string* b;
    double r;
  };
  std::vector<Pair> pairs;
  for (std::size_t i = 0; i < corr.n(); ++i)
    for (std::size_t j = i + 1; j < corr.n(); ++j) {
      const double r = corr.r(i, j);
      if (std::abs(r) <= floor) continue;
      const auto* a = &corr.journals.id(i);
      const auto* b = &corr.journals.id(j);
      if (*b < *a) std::swap(a, b);
      pairs.push_back({a, b, r});
    }
  std::sort(pairs.begin(), pairs.end(), [](const Pair& x, const Pair& y) {
    return std::tie(*x.a, *x.b) < std::tie(*y.a, *y.b);
  });
  out << "journal_a,journal_b,r\n";
  for (const auto& p : pairs)
    out << csv::quote(*p.a) << ',' << csv::quote(*p.b) << ',' << fmt::format("{:.6f}", p.r)
        << '\n';
}

}  // namespace scimap
