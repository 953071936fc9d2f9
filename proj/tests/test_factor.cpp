#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "scimap/error.hpp"
#include "scimap/factor.hpp"

using namespace scimap;

namespace {

Matrix rows_of(std::initializer_list<std::initializer_list<double>> rows) {
  Matrix m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (double v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

Matrix rotate(const Matrix& l, double theta) {
  Matrix r(2, 2);
  r(0, 0) = std::cos(theta);
  r(0, 1) = std::sin(theta);
  r(1, 0) = -std::sin(theta);
  r(1, 1) = std::cos(theta);
  return multiply(l, r);
}

/// Angle of a 2x2 orthogonal matrix modulo pi/2; column sign flips and swaps
/// leave the criterion unchanged, so they are folded away.
double angle_mod_quarter(Matrix r) {
  if (r(0, 0) * r(1, 1) - r(0, 1) * r(1, 0) < 0) {
    r(0, 1) = -r(0, 1);
    r(1, 1) = -r(1, 1);
  }
  const double q = std::numbers::pi / 2;
  return std::fmod(std::atan2(r(0, 1), r(0, 0)) + 4 * q, q);
}

double circular_gap(double a, double b) {
  const double q = std::numbers::pi / 2;
  const double d = std::fmod(std::abs(a - b), q);
  return std::min(d, q - d);
}

double orthogonality_error(const Matrix& r) {
  const Matrix g = multiply(r.transposed(), r);
  double worst = 0;
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j)
      worst = std::max(worst, std::abs(g(i, j) - (i == j ? 1.0 : 0.0)));
  return worst;
}

}  // namespace

TEST_CASE("Kaiser count is strict") {
  const std::vector<double> ev{2.5, 1.2, 0.8, 0.5};
  CHECK(kaiser_count(ev) == 2);
  const std::vector<double> ones{1.0, 1.0, 1.0};
  CHECK(kaiser_count(ones) == 0);
}

TEST_CASE("eigenvalues exactly one fall back to a single factor with a warning") {
  const auto model = extract(fixture::correlation(Matrix::identity(4)));
  CHECK(model.k == 1);
  CHECK(model.warnings.size() == 1);
  CHECK(model.explained_variance == doctest::Approx(0.25));
}

TEST_CASE("two perfectly correlated journals give one factor") {
  const auto model = extract(fixture::uniform_correlation(2, 1.0));
  CHECK(model.k == 1);
  CHECK(model.explained_variance == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(model.eigenvalues[0] == doctest::Approx(2.0));
  CHECK(std::abs(model.loadings(0, 0)) == doctest::Approx(1.0));
}

TEST_CASE("forced k outside [1, n] is rejected") {
  const auto corr = fixture::uniform_correlation(3, 0.2);
  CHECK_THROWS_AS(extract(corr, 0), Error);
  CHECK_THROWS_AS(extract(corr, 4), Error);
  CHECK(extract(corr, 3).k == 3);
}

TEST_CASE("zero-variance journals are excluded and reported") {
  auto corr = fixture::uniform_correlation(4, 0.5);
  corr.valid[2] = false;
  for (std::size_t j = 0; j < 4; ++j) corr.r(2, j) = corr.r(j, 2) = 0;
  const auto model = extract(corr);
  CHECK(model.n() == 3);
  CHECK(model.excluded == std::vector<std::string>{"J2"});
}

TEST_CASE("trace identity on a random 8x8 correlation matrix") {
  std::mt19937_64 rng(8);
  const auto corr = fixture::random_correlation(8, 30, rng);
  const auto model = extract(corr, 3);
  double lambda = 0, communality = 0;
  for (std::size_t f = 0; f < 3; ++f) lambda += model.eigenvalues[f];
  for (double h : model.communalities()) communality += h;
  CHECK(std::abs(lambda - communality) <= 1e-9);
  CHECK(model.explained_variance == doctest::Approx(lambda / 8.0));
}

TEST_CASE("property: reconstruction error is bounded by the discarded eigenvalues") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    const auto corr = fixture::random_correlation(7, 25, rng);
    for (std::size_t k = 1; k <= 7; ++k) {
      const auto model = extract(corr, k);
      const Matrix approx = multiply(model.loadings, model.loadings.transposed());
      double err = 0, discarded = 0;
      for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = 0; j < 7; ++j) err = std::max(err, std::abs(approx(i, j) - corr.r(i, j)));
      for (std::size_t f = k; f < 7; ++f) discarded += model.eigenvalues[f];
      CHECK(err <= discarded + 1e-9);
      if (k == 7) CHECK(err <= 1e-9);
    }
  }
}

TEST_CASE("single factor is returned unchanged by varimax") {
  const auto model = extract(fixture::uniform_correlation(4, 0.6));
  REQUIRE(model.k == 1);
  const auto rotated = varimax(model);
  CHECK(rotated.rotation.method == RotationMethod::None);
  CHECK(rotated.loadings == model.loadings);
}

TEST_CASE("perfect simple structure is a fixed point") {
  const Matrix l = rows_of({{0.9, 0}, {0.7, 0}, {0, 0.8}, {0, 0.6}});
  const auto rotated = varimax(fixture::model_with(l));
  CHECK(rotated.rotation.iterations == 1);
  CHECK(rotated.rotation.converged);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t f = 0; f < 2; ++f) CHECK(std::abs(rotated.loadings(i, f) - l(i, f)) <= 1e-12);
}

TEST_CASE("45-degree mixture is unmixed at the grid-search optimum") {
  const Matrix simple = rows_of({{0.9, 0}, {0.8, 0}, {0, 0.7}, {0, 0.85}});
  const Matrix mixed = rotate(simple, std::numbers::pi / 4);
  const auto rotated = varimax(fixture::model_with(mixed));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t f = 0; f < 2; ++f)
      CHECK(std::abs(std::abs(rotated.loadings(i, f)) - simple(i, f)) <= 1e-9);
  const double found = angle_mod_quarter(rotated.rotation.matrix);
  CHECK(circular_gap(found, oracle::grid_search_angle(mixed)) <= 1e-4);
  CHECK(circular_gap(found, std::numbers::pi / 4) <= 1e-9);
}

TEST_CASE("property: rotation angle matches the grid search on random two-factor loadings") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-0.9, 0.9);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix l(9, 2);
    for (double& v : l.data()) v = u(rng);
    const auto rotated = varimax(fixture::model_with(l));
    const double found = angle_mod_quarter(rotated.rotation.matrix);
    const double best = oracle::grid_search_angle(l);
    // Criterion values agree even if two angles tie for the optimum.
    CHECK(oracle::rotated_criterion(l, found) >= oracle::rotated_criterion(l, best) - 1e-10);
  }
}

TEST_CASE("property: varimax invariants") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 15; ++trial) {
    const auto corr = fixture::random_correlation(12, 40, rng);
    for (bool normalize : {true, false}) {
      const auto model = extract(corr, 2 + trial % 4);
      const auto rotated = varimax(model, {normalize, 1e-7, 100});
      CHECK(rotated.rotation.method == RotationMethod::Varimax);
      CHECK(rotated.rotation.kaiser_normalized == normalize);
      CHECK(orthogonality_error(rotated.rotation.matrix) <= 1e-10);

      const auto before = model.communalities(), after = rotated.communalities();
      for (std::size_t i = 0; i < before.size(); ++i) CHECK(std::abs(before[i] - after[i]) <= 1e-9);
      CHECK(rotated.explained_variance == model.explained_variance);

      const auto& h = rotated.rotation.criterion_history;
      for (std::size_t s = 1; s < h.size(); ++s) CHECK(h[s] >= h[s - 1] - 1e-12);

      const Matrix recomposed = multiply(model.loadings, rotated.rotation.matrix);
      for (std::size_t i = 0; i < recomposed.rows(); ++i)
        for (std::size_t f = 0; f < recomposed.cols(); ++f)
          CHECK(std::abs(recomposed(i, f) - rotated.loadings(i, f)) <= 1e-12);

      // Canonical column order and sign.
      double prev = INFINITY;
      for (std::size_t f = 0; f < rotated.k; ++f) {
        double ss = 0, top = 0, signed_top = 0;
        for (std::size_t i = 0; i < rotated.n(); ++i) {
          const double v = rotated.loadings(i, f);
          ss += v * v;
          if (std::abs(v) > top) {
            top = std::abs(v);
            signed_top = v;
          }
        }
        CHECK(ss <= prev + 1e-12);
        CHECK(signed_top > 0);
        prev = ss;
      }
    }
  }
}

TEST_CASE("loading formatting") {
  CHECK(format_loading(0.793) == ".793");
  CHECK(format_loading(-0.115) == "-.115");
  CHECK(format_loading(1.0) == "1.000");
  CHECK(format_loading(-0.0001) == ".000");
  CHECK(format_loading(0.1025) == ".102");  // binary value sits just below the tie
}

TEST_CASE("loading table groups, sorts and suppresses") {
  const Matrix l = rows_of({{0.05, 0.9}, {0.793, 0.2}, {0.6, -0.115}, {0.3, 0.95}});
  const auto table = loading_table(fixture::model_with(l), 0.1);
  REQUIRE(table.rows.size() == 4);
  CHECK(table.rows[0].journal == "J1");
  CHECK(table.rows[0].cells == std::vector<std::string>{".793", ".200"});
  CHECK(table.rows[1].journal == "J2");
  CHECK(table.rows[1].cells[1] == "-.115");
  CHECK(table.rows[2].journal == "J3");
  CHECK(table.rows[3].journal == "J0");
  CHECK(table.rows[3].cells[0].empty());

  const auto top = loading_table(fixture::model_with(l), 0.1, 1);
  CHECK(top.rows.size() == 2);

  std::ostringstream csv, text;
  write_loading_csv(csv, table);
  CHECK(csv.str().starts_with("journal_id,1,2\nJ1,.793,.200\n"));
  write_loading_text(text, table);
  CHECK(text.str().find(".793") != std::string::npos);
}

TEST_CASE("criterion of simple structure") {
  // Column of (1, 0): mean l^4 = 1/2, (mean l^2)^2 = 1/4.
  const Matrix l = rows_of({{1, 0}, {0, 1}});
  CHECK(varimax_criterion(l) == doctest::Approx(0.5));
}
