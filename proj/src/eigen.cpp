#include "scimap/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <fmt/format.h>

#include "scimap/error.hpp"

namespace scimap {

namespace {

struct Rotation {
  std::size_t p;
  std::size_t q;
  double c;
  double s;
  double app;
  double aqq;
};

/// Round-robin (circle method) pairing of n indices into n/2 disjoint pairs
/// per round; n-1 rounds (n even) cover every pair exactly once.
std::vector<std::vector<std::pair<std::size_t, std::size_t>>> round_robin(std::size_t n) {
  const std::size_t m = n + (n % 2);
  std::vector<std::size_t> slot(m);
  std::iota(slot.begin(), slot.end(), 0);
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> rounds;
  for (std::size_t r = 0; r + 1 < m; ++r) {
    auto& pairs = rounds.emplace_back();
    for (std::size_t k = 0; k < m / 2; ++k) {
      std::size_t a = slot[k], b = slot[m - 1 - k];
      if (a >= n || b >= n) continue;
      if (a > b) std::swap(a, b);
      pairs.emplace_back(a, b);
    }
    std::rotate(slot.begin() + 1, slot.end() - 1, slot.end());
  }
  return rounds;
}

double off_diagonal_norm(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

}  // namespace

void canonicalize_sign(std::span<double> v) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (std::abs(v[i]) > std::abs(v[best])) best = i;
  if (!v.empty() && v[best] < 0.0)
    for (double& x : v) x = -x;
}

EigenResult sym_eig(const Matrix& s, const EigenOptions& options) {
  if (!s.square())
    throw Error(fmt::format("sym_eig: matrix is {}x{}, not square", s.rows(), s.cols()));
  const std::size_t n = s.rows();

  double max_abs = 0.0, max_asym = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      max_abs = std::max(max_abs, std::abs(s(i, j)));
      max_asym = std::max(max_asym, std::abs(s(i, j) - s(j, i)));
    }
  if (max_asym > options.symmetry_tol * max_abs)
    throw Error(fmt::format("sym_eig: matrix is not symmetric (max |s_ij - s_ji| = {:g})",
                            max_asym));

  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = 0.5 * (s(i, j) + s(j, i));
  Matrix v = Matrix::identity(n);

  EigenResult result;
  const double target = options.tol * norm_frobenius(a);
  const auto rounds = round_robin(n);
  std::vector<Rotation> active;

  for (;;) {
    if (off_diagonal_norm(a) <= target) {
      result.converged = true;
      break;
    }
    if (result.sweeps >= options.max_sweeps) break;
    ++result.sweeps;

    for (const auto& pairs : rounds) {
      active.clear();
      for (auto [p, q] : pairs) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double app = a(p, p), aqq = a(q, q);
        const double g = 100.0 * std::abs(apq);
        // Entry too small to move either diagonal: drop it.
        if (std::abs(app) + g == std::abs(app) && std::abs(aqq) + g == std::abs(aqq)) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        const double theta = (aqq - app) / (2.0 * apq);
        double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        active.push_back({p, q, c, t * c, app - t * apq, aqq + t * apq});
      }
      if (active.empty()) continue;

      // A <- J^T A: mixes rows p and q.
      for (const auto& r : active) {
        auto rp = a.row(r.p);
        auto rq = a.row(r.q);
        for (std::size_t k = 0; k < n; ++k) {
          const double x = rp[k], y = rq[k];
          rp[k] = r.c * x - r.s * y;
          rq[k] = r.s * x + r.c * y;
        }
      }
      // A <- A J and V <- V J: mixes columns p and q, walked row by row.
      for (std::size_t k = 0; k < n; ++k) {
        auto ak = a.row(k);
        auto vk = v.row(k);
        for (const auto& r : active) {
          const double x = ak[r.p], y = ak[r.q];
          ak[r.p] = r.c * x - r.s * y;
          ak[r.q] = r.s * x + r.c * y;
          const double vx = vk[r.p], vy = vk[r.q];
          vk[r.p] = r.c * vx - r.s * vy;
          vk[r.q] = r.s * vx + r.c * vy;
        }
      }
      // Pivot block in closed form.
      for (const auto& r : active) {
        a(r.p, r.p) = r.app;
        a(r.q, r.q) = r.aqq;
        a(r.p, r.q) = a(r.q, r.p) = 0.0;
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i) > a(j, j); });

  result.values.resize(n);
  result.vectors = Matrix(n, n);
  std::vector<double> col(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t src = order[k];
    result.values[k] = a(src, src);
    for (std::size_t i = 0; i < n; ++i) col[i] = v(i, src);
    canonicalize_sign(col);
    for (std::size_t i = 0; i < n; ++i) result.vectors(i, k) = col[i];
  }
  return result;
}

}  // namespace scimap
