#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "scimap/eigen.hpp"
#include "scimap/error.hpp"

using namespace scimap;

namespace {

double reconstruction_error(const Matrix& s, const EigenResult& e) {
  const std::size_t n = s.rows();
  Matrix d(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double v = 0;
      for (std::size_t k = 0; k < n; ++k) v += e.vectors(i, k) * e.values[k] * e.vectors(j, k);
      d(i, j) = v - s(i, j);
    }
  return norm_frobenius(d);
}

double orthogonality_error(const Matrix& v) {
  const Matrix g = multiply(v.transposed(), v);
  double worst = 0;
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j)
      worst = std::max(worst, std::abs(g(i, j) - (i == j ? 1.0 : 0.0)));
  return worst;
}

}  // namespace

TEST_CASE("identity") {
  const auto e = sym_eig(Matrix::identity(3));
  CHECK(e.values == std::vector<double>{1, 1, 1});
  CHECK(orthogonality_error(e.vectors) == 0.0);
  CHECK(e.converged);
}

TEST_CASE("diagonal input sorts values and keeps axis vectors") {
  Matrix s(3, 3);
  s(0, 0) = 3;
  s(1, 1) = 1;
  s(2, 2) = 2;
  const auto e = sym_eig(s);
  CHECK(e.values == std::vector<double>{3, 2, 1});
  CHECK(e.vectors(0, 0) == 1.0);
  CHECK(e.vectors(2, 1) == 1.0);
  CHECK(e.vectors(1, 2) == 1.0);
}

TEST_CASE("2x2 characteristic polynomial") {
  Matrix s(2, 2);
  s(0, 0) = s(1, 1) = 2;
  s(0, 1) = s(1, 0) = 1;
  const auto e = sym_eig(s);
  CHECK(e.values[0] == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(e.values[1] == doctest::Approx(1.0).epsilon(1e-15));
  const double h = 1 / std::sqrt(2.0);
  CHECK(e.vectors(0, 0) == doctest::Approx(h).epsilon(1e-14));
  CHECK(e.vectors(1, 0) == doctest::Approx(h).epsilon(1e-14));
  // (1,-1)/sqrt2 up to the canonical sign: first largest-magnitude entry >= 0
  CHECK(e.vectors(0, 1) == doctest::Approx(h).epsilon(1e-14));
  CHECK(e.vectors(1, 1) == doctest::Approx(-h).epsilon(1e-14));
}

TEST_CASE("equal values keep diagonal order") {
  Matrix s(3, 3);
  s(0, 0) = 1;
  s(1, 1) = 5;
  s(2, 2) = 1;
  const auto e = sym_eig(s);
  CHECK(e.values == std::vector<double>{5, 1, 1});
  CHECK(e.vectors(1, 0) == 1.0);
  CHECK(e.vectors(0, 1) == 1.0);
  CHECK(e.vectors(2, 2) == 1.0);
}

TEST_CASE("rejects non-square and asymmetric input") {
  CHECK_THROWS_AS(sym_eig(Matrix(2, 3)), Error);
  Matrix s = Matrix::identity(3);
  s(0, 2) = 0.5;
  try {
    sym_eig(s);
    FAIL("expected rejection");
  } catch (const Error& err) {
    CHECK(std::string(err.what()).find("0.5") != std::string::npos);
  }
}

TEST_CASE("empty and 1x1") {
  CHECK(sym_eig(Matrix()).values.empty());
  Matrix one(1, 1, -4.0);
  const auto e = sym_eig(one);
  CHECK(e.values == std::vector<double>{-4.0});
  CHECK(e.vectors(0, 0) == 1.0);
}

TEST_CASE("property: random symmetric matrices") {
  std::mt19937_64 rng(42);
  for (std::size_t n : {2u, 3u, 5u, 8u, 17u, 32u, 64u, 100u}) {
    const Matrix s = fixture::random_symmetric(n, rng);
    const auto e = sym_eig(s);
    CHECK(e.converged);
    CHECK(reconstruction_error(s, e) <= 1e-9 * norm_frobenius(s));
    CHECK(orthogonality_error(e.vectors) <= 1e-12 * static_cast<double>(n));
    CHECK(std::is_sorted(e.values.rbegin(), e.values.rend()));

    double trace = 0, sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
      trace += s(i, i);
      sum += e.values[i];
    }
    CHECK(std::abs(trace - sum) <= 1e-9 * std::max(1.0, norm_frobenius(s)));

    for (std::size_t k = 0; k < n; ++k) {
      double top = 0, signed_top = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (std::abs(e.vectors(i, k)) > top) {
          top = std::abs(e.vectors(i, k));
          signed_top = e.vectors(i, k);
        }
      CHECK(signed_top >= 0);
    }

    // Values against a different algorithm.
    Eigen::MatrixXd m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = s(i, j);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ref(m, Eigen::EigenvaluesOnly);
    for (std::size_t k = 0; k < n; ++k)
      CHECK(std::abs(e.values[k] - ref.eigenvalues()[n - 1 - k]) <= 1e-10 * norm_inf(s));
  }
}

TEST_CASE("deterministic across calls") {
  std::mt19937_64 rng(5);
  const Matrix s = fixture::random_symmetric(40, rng);
  const auto a = sym_eig(s), b = sym_eig(s);
  CHECK(a.values == b.values);
  CHECK(a.vectors == b.vectors);
}

TEST_CASE("canonical sign") {
  std::vector<double> v{0.5, -0.8, 0.8};
  canonicalize_sign(v);
  CHECK(v == std::vector<double>{-0.5, 0.8, -0.8});
}
