#include "scimap/pajek.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

#include "scimap/error.hpp"

namespace scimap::pajek {

namespace {

std::string label(const std::string& id) {
  std::string s = id;
  std::replace(s.begin(), s.end(), '"', '\'');
  return "\"" + s + "\"";
}

void write_vertices(std::ostream& out, const JournalRegistry& reg) {
  out << "*Vertices " << reg.size() << '\n';
  for (std::size_t i = 0; i < reg.size(); ++i) out << i + 1 << ' ' << label(reg.id(i)) << '\n';
}

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

}  // namespace

void write_citation_network(std::ostream& out, const CitationMatrix& matrix) {
  write_vertices(out, matrix.journals());
  out << "*Arcs\n";
  for (std::size_t i = 0; i < matrix.n(); ++i)
    for (const Cell& c : matrix.row(i)) out << i + 1 << ' ' << c.cited + 1 << ' ' << c.count << '\n';
}

void write_threshold_graph(std::ostream& out, const ThresholdGraph& graph,
                           const CorrelationMatrix& corr) {
  write_vertices(out, graph.journals);
  out << "*Edges\n";
  for (auto [i, j] : graph.edges()) out << fmt::format("{} {} {:.6f}\n", i + 1, j + 1, corr.r(i, j));
}

Network read(std::istream& in) {
  enum class Section { None, Vertices, Arcs, Edges } section = Section::None;
  Network net;
  std::size_t declared = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '%') continue;
    if (line.front() == '*') {
      std::istringstream head(line);
      std::string word;
      head >> word;
      word = lower(word);
      if (word == "*vertices") {
        if (!(head >> declared)) throw Error(fmt::format("pajek: line {}: bad *Vertices", line_no));
        net.labels.assign(declared, {});
        for (std::size_t i = 0; i < declared; ++i) net.labels[i] = std::to_string(i + 1);
        section = Section::Vertices;
      } else if (word == "*arcs") {
        section = Section::Arcs;
      } else if (word == "*edges") {
        section = Section::Edges;
      } else {
        throw Error(fmt::format("pajek: line {}: unsupported section {}", line_no, word));
      }
      continue;
    }
    std::istringstream row(line);
    if (section == Section::Vertices) {
      std::size_t idx = 0;
      if (!(row >> idx) || idx < 1 || idx > declared)
        throw Error(fmt::format("pajek: line {}: bad vertex line", line_no));
      const auto open = line.find('"');
      const auto close = open == std::string::npos ? open : line.find('"', open + 1);
      if (close == std::string::npos) throw Error(fmt::format("pajek: line {}: unquoted label", line_no));
      net.labels[idx - 1] = line.substr(open + 1, close - open - 1);
    } else if (section == Section::Arcs || section == Section::Edges) {
      Line l{0, 0, 1.0};
      if (!(row >> l.from >> l.to) || l.from < 1 || l.to < 1 || l.from > declared ||
          l.to > declared)
        throw Error(fmt::format("pajek: line {}: bad {} line", line_no,
                                section == Section::Arcs ? "arc" : "edge"));
      row >> l.weight;
      (section == Section::Arcs ? net.arcs : net.edges).push_back(l);
    } else {
      throw Error(fmt::format("pajek: line {}: data before *Vertices", line_no));
    }
  }
  return net;
}

}  // namespace scimap::pajek
