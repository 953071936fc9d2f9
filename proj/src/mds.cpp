#include "scimap/mds.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include <fmt/format.h>

#include "scimap/csv.hpp"
#include "scimap/eigen.hpp"
#include "scimap/error.hpp"

namespace scimap {

std::string_view to_string(Dissimilarity d) {
  return d == Dissimilarity::OneMinusR ? "one-minus-r" : "sqrt-two-one-minus-r";
}

Dissimilarity parse_dissimilarity(std::string_view s) {
  if (s == "one-minus-r") return Dissimilarity::OneMinusR;
  if (s == "sqrt-two-one-minus-r") return Dissimilarity::SqrtTwoOneMinusR;
  throw Error(fmt::format(
      "invalid dissimilarity '{}' (expected one-minus-r or sqrt-two-one-minus-r)", s));
}

std::string_view to_string(LayoutMethod m) {
  return m == LayoutMethod::ClassicalMds ? "classical-mds" : "factor-plot";
}

Point Layout::point(std::size_t i) const {
  return {coords.cols() > 0 ? coords(i, 0) : 0.0, coords.cols() > 1 ? coords(i, 1) : 0.0};
}

DistanceMatrix correlation_to_distance(const CorrelationMatrix& corr, Dissimilarity variant) {
  const auto keep = corr.valid_indices();
  DistanceMatrix out;
  out.d = Matrix(keep.size(), keep.size());
  for (std::size_t a = 0; a < keep.size(); ++a) {
    out.journals.push_back(corr.journals.id(keep[a]));
    for (std::size_t b = 0; b < keep.size(); ++b) {
      if (a == b) continue;
      const double oneminus = std::clamp(1.0 - corr.r(keep[a], keep[b]), 0.0, 2.0);
      out.d(a, b) =
          variant == Dissimilarity::OneMinusR ? oneminus : std::sqrt(2.0 * oneminus);
    }
  }
  return out;
}

Layout classical_mds(const DistanceMatrix& dist, std::size_t dim) {
  const Matrix& d = dist.d;
  const std::size_t n = d.rows();
  if (!d.square() || dist.journals.size() != n)
    throw Error("classical_mds: distance matrix must be square and labeled");
  if (dim < 1) throw Error("classical_mds: dim must be at least 1");
  if (dim >= n)
    throw Error(fmt::format("classical_mds: dim = {} must be below the point count {}", dim, n));
  for (std::size_t i = 0; i < n; ++i) {
    if (d(i, i) != 0.0) throw Error("classical_mds: distance matrix diagonal must be zero");
    for (std::size_t j = 0; j < n; ++j)
      if (d(i, j) < 0.0) throw Error("classical_mds: distances must be nonnegative");
  }

  // B = -1/2 J D^2 J
  Matrix b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b(i, j) = -0.5 * d(i, j) * d(i, j);
  const auto len = static_cast<double>(n);
  std::vector<double> row_mean(n, 0.0);
  double grand = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (double v : b.row(i)) row_mean[i] += v;
    grand += row_mean[i];
    row_mean[i] /= len;
  }
  grand /= len * len;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b(i, j) += grand - row_mean[i] - row_mean[j];
  // Symmetric by construction up to round-off; make it exact.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) b(i, j) = b(j, i) = 0.5 * (b(i, j) + b(j, i));

  const EigenResult eig = sym_eig(b);

  Layout layout;
  layout.journals = dist.journals;
  layout.method = LayoutMethod::ClassicalMds;
  layout.eigenvalues = eig.values;
  for (double v : eig.values)
    if (v < 0.0) layout.negative_mass += -v;
  layout.coords = Matrix(n, dim);
  for (std::size_t a = 0; a < dim; ++a) {
    const double scale = std::sqrt(std::max(eig.values[a], 0.0));
    for (std::size_t i = 0; i < n; ++i) layout.coords(i, a) = eig.vectors(i, a) * scale;
  }

  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      double e = 0.0;
      for (std::size_t a = 0; a < dim; ++a) {
        const double diff = layout.coords(i, a) - layout.coords(j, a);
        e += diff * diff;
      }
      const double r = d(i, j) - std::sqrt(e);
      num += r * r;
      den += d(i, j) * d(i, j);
    }
  layout.stress = den > 0.0 ? std::sqrt(num / den) : 0.0;
  return layout;
}

Layout factor_plot(const FactorModel& model, std::size_t f1, std::size_t f2) {
  const std::size_t k = model.loadings.cols();
  if (f1 < 1 || f1 > k || f2 < 1 || f2 > k)
    throw Error(fmt::format("factor_plot: factors ({}, {}) outside 1..{}", f1, f2, k));
  Layout layout;
  layout.method = LayoutMethod::FactorPlot;
  layout.coords = Matrix(model.n(), 2);
  for (std::size_t i = 0; i < model.n(); ++i) {
    layout.journals.push_back(model.journals.id(i));
    layout.coords(i, 0) = model.loadings(i, f1 - 1);
    layout.coords(i, 1) = model.loadings(i, f2 - 1);
  }
  return layout;
}

std::string letter_code(std::size_t index) {
  static constexpr std::string_view kLetters =
      "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz";
  std::string code(1, kLetters[index % kLetters.size()]);
  if (const std::size_t round = index / kLetters.size(); round > 0) code += std::to_string(round);
  return code;
}

void write_layout_csv(std::ostream& out, const Layout& layout) {
  out << "journal_id,x,y\n";
  for (std::size_t i = 0; i < layout.size(); ++i) {
    const Point p = layout.point(i);
    out << csv::quote(layout.journals[i]) << fmt::format(",{:.9f},{:.9f}\n", p.x, p.y);
  }
}

namespace {

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

}  // namespace

void write_layout_svg(std::ostream& out, const Layout& layout, const SvgOptions& options) {
  const double size = options.size;
  const double margin = 40.0;
  const double legend_width = options.letter_codes ? 260.0 : 0.0;
  const double legend_rows = options.letter_codes ? 18.0 * static_cast<double>(layout.size()) : 0.0;
  const double height = std::max(size, legend_rows + 2.0 * margin);

  double lo_x = 0.0, hi_x = 0.0, lo_y = 0.0, hi_y = 0.0;
  for (std::size_t i = 0; i < layout.size(); ++i) {
    const Point p = layout.point(i);
    if (i == 0) {
      lo_x = hi_x = p.x;
      lo_y = hi_y = p.y;
    }
    lo_x = std::min(lo_x, p.x);
    hi_x = std::max(hi_x, p.x);
    lo_y = std::min(lo_y, p.y);
    hi_y = std::max(hi_y, p.y);
  }
  const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-12});
  const double scale = (size - 2.0 * margin) / span;
  auto px = [&](double x) { return margin + (x - lo_x) * scale; };
  auto py = [&](double y) { return size - margin - (y - lo_y) * scale; };

  out << fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:.0f}\" height=\"{:.0f}\" "
      "viewBox=\"0 0 {:.0f} {:.0f}\">\n",
      size + legend_width, height, size + legend_width, height);
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (!options.title.empty())
    out << fmt::format("<text x=\"{:.1f}\" y=\"20\" font-size=\"14\">{}</text>\n", margin,
                       xml_escape(options.title));
  if (layout.method == LayoutMethod::FactorPlot) {
    // Axes through the origin when it is in view.
    if (lo_y <= 0.0 && hi_y >= 0.0)
      out << fmt::format(
          "<line x1=\"{:.3f}\" y1=\"{:.3f}\" x2=\"{:.3f}\" y2=\"{:.3f}\" stroke=\"#bbb\"/>\n",
          margin, py(0.0), size - margin, py(0.0));
    if (lo_x <= 0.0 && hi_x >= 0.0)
      out << fmt::format(
          "<line x1=\"{:.3f}\" y1=\"{:.3f}\" x2=\"{:.3f}\" y2=\"{:.3f}\" stroke=\"#bbb\"/>\n",
          px(0.0), margin, px(0.0), size - margin);
  }
  for (std::size_t i = 0; i < layout.size(); ++i) {
    const Point p = layout.point(i);
    const std::string label =
        options.letter_codes ? letter_code(i) : xml_escape(layout.journals[i]);
    out << fmt::format("<circle cx=\"{:.3f}\" cy=\"{:.3f}\" r=\"3\" fill=\"#1f4e79\"/>\n", px(p.x),
                       py(p.y));
    out << fmt::format("<text x=\"{:.3f}\" y=\"{:.3f}\" font-size=\"11\">{}</text>\n",
                       px(p.x) + 5.0, py(p.y) - 4.0, label);
  }
  if (options.letter_codes)
    for (std::size_t i = 0; i < layout.size(); ++i)
      out << fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" font-size=\"11\">{}. {}</text>\n",
                         size + 10.0, margin + 18.0 * static_cast<double>(i), letter_code(i),
                         xml_escape(layout.journals[i]));
  out << "</svg>\n";
}

}  // namespace scimap
